//! Reference values of `zeta(s)` and `zeta'(s)` from an equal-step
//! trapezoidal rule applied to the exact Riemann-Siegel remainder integral
//!
//! `I_M(s) = ∫ exp(-πx² - 2πMθx) / cosh(πθx) (M + x/θ)^{-s} dx`.
//!
//! The discretisation error decays like `exp(-π / (√2 h))`, so the step is
//! picked from the requested digits. Terms are formed in log space because
//! the Gaussian factor and the power nearly cancel at large `t`.

use std::f64::consts::{LN_10, PI, SQRT_2};

use crate::complex::Complex;
use crate::error::{Result, ZetaError};
use crate::precision::PrecisionContext;
use crate::quadgen::theta;
use crate::scalar::Real;
use crate::special::{chi, chi_log_deriv, log_gamma};
use crate::zeta::n_t;

/// Consecutive sub-threshold terms needed to stop a direction.
const QUIET_RUN: usize = 3;

/// Step size and truncation for the trapezoidal sum.
#[derive(Clone, Debug)]
pub struct OracleConfig<T> {
    pub h: T,
    pub ctx: PrecisionContext,
    /// Terms below this modulus count as negligible.
    pub truncation_threshold: T,
}

impl<T: Real> OracleConfig<T> {
    /// `h = π / (√2 (digits + 5) ln 10)`, i.e. `exp(-π/(√2 h)) = 10^-(digits+5)`.
    pub fn auto(ctx: &PrecisionContext) -> Self {
        let h = T::pi(ctx)
            / (T::from_i64(2, ctx).sqrt()
                * &T::from_i64(ctx.digits() as i64 + 5, ctx)
                * &T::from_i64(10, ctx).ln());
        Self::with_step(h, ctx)
    }

    pub fn with_step(h: T, ctx: &PrecisionContext) -> Self {
        let threshold = T::pow10(-((ctx.digits() + ctx.guard()) as i32), ctx);
        Self { h, ctx: *ctx, truncation_threshold: threshold }
    }

    /// Largest `|k|` tried before giving up on decay.
    pub fn k_max(&self) -> usize {
        (20.0 / self.h.to_f64()).ceil() as usize
    }
}

/// `auto` step as an `f64`, for reporting.
pub fn auto_step(digits: u32) -> f64 {
    PI / (SQRT_2 * f64::from(digits + 5) * LN_10)
}

/// Per-node data of `I_M(s; h)` that does not depend on `s`:
/// `w_k = ln h - π x² - 2πMθx - ln cosh(πθx)` and `L_k = ln(M + x/θ)` with
/// `x = kh`. Built lazily and reused across every `s` at the same `(M, h)`.
#[derive(Clone, Debug)]
pub struct OracleKernel<T> {
    m: T,
    cfg: OracleConfig<T>,
    /// `nodes[0]` is `k = 0`; `pos[i]`, `neg[i]` are `k = ±(i + 1)`.
    zero: Node<T>,
    pos: Vec<Node<T>>,
    neg: Vec<Node<T>>,
}

#[derive(Clone, Debug)]
struct Node<T> {
    w: Complex<T>,
    l: Complex<T>,
}

/// `ln cosh z`, stable for large `|Re z|` (branch is irrelevant, only the
/// exponential is used).
fn log_cosh<T: Real>(z: &Complex<T>, ctx: &PrecisionContext) -> Complex<T> {
    let z = if z.re.is_negative() { -z.clone() } else { z.clone() };
    let tail = (-(z.scale_f64(2.0))).exp() + &Complex::one(ctx);
    z + tail.ln() - Complex::from_real(T::from_i64(2, ctx).ln())
}

impl<T: Real> OracleKernel<T> {
    pub fn new(m: &T, cfg: &OracleConfig<T>) -> Result<Self> {
        let ctx = &cfg.ctx;
        if *m < T::from_f64(0.5, ctx) {
            return Err(ZetaError::InvalidArgument(format!("M must be >= 1/2, got {m}")));
        }
        if cfg.h.is_negative() || cfg.h.is_zero() {
            return Err(ZetaError::InvalidArgument(format!("h must be positive, got {}", cfg.h)));
        }
        let m = m.at_ctx(ctx);
        let zero = Self::node(&m, cfg, 0);
        Ok(Self { m, cfg: cfg.clone(), zero, pos: Vec::new(), neg: Vec::new() })
    }

    pub fn m(&self) -> &T {
        &self.m
    }

    pub fn config(&self) -> &OracleConfig<T> {
        &self.cfg
    }

    fn node(m: &T, cfg: &OracleConfig<T>, k: i64) -> Node<T> {
        let ctx = &cfg.ctx;
        let pi = T::pi(ctx);
        let th = theta::<T>(ctx);
        let x = cfg.h.clone() * &T::from_i64(k, ctx);
        let thx = th.scale(&x);
        let gauss = Complex::from_real(-(pi.clone() * &x.sqr()) + &cfg.h.ln());
        let drift = thx.scale(&(pi.clone().scale(2.0) * m));
        let w = gauss - &drift - &log_cosh(&thx.scale(&pi), ctx);
        // x/θ = x conj(θ) since |θ| = 1.
        let l = (th.conj().scale(&x) + &Complex::from_real(m.clone())).ln();
        Node { w, l }
    }

    fn at(&mut self, k: i64) -> &Node<T> {
        if k == 0 {
            return &self.zero;
        }
        let idx = k.unsigned_abs() as usize - 1;
        let (m, cfg) = (&self.m, &self.cfg);
        let side = if k > 0 { &mut self.pos } else { &mut self.neg };
        while side.len() <= idx {
            let next = (side.len() + 1) as i64 * k.signum();
            side.push(Self::node(m, cfg, next));
        }
        &side[idx]
    }

    /// `I_M(s; h)`, and with `deriv` also `d/ds I_M(s; h)`.
    fn eval_impl(&mut self, s: &Complex<T>, deriv: bool) -> Result<(Complex<T>, Complex<T>)> {
        let ctx = self.cfg.ctx;
        let ln_thr = self.cfg.truncation_threshold.ln();
        let k_max = self.cfg.k_max();
        let mut sum = Complex::zero(&ctx);
        let mut dsum = Complex::zero(&ctx);
        let add = |node: &Node<T>, sum: &mut Complex<T>, dsum: &mut Complex<T>| -> bool {
            let lt = node.w.clone() - &(s.clone() * &node.l);
            if lt.re < ln_thr {
                return false;
            }
            let term = lt.exp();
            if deriv {
                *dsum -= term.clone() * &node.l;
            }
            *sum += term;
            true
        };
        let z = self.at(0).clone();
        add(&z, &mut sum, &mut dsum);
        for dir in [1i64, -1] {
            let mut quiet = 0;
            let mut k = 1usize;
            loop {
                if k > k_max {
                    return Err(ZetaError::NonDecay { k_max });
                }
                let node = self.at(dir * k as i64).clone();
                if add(&node, &mut sum, &mut dsum) {
                    quiet = 0;
                } else {
                    quiet += 1;
                    if quiet >= QUIET_RUN {
                        break;
                    }
                }
                k += 1;
            }
        }
        Ok((sum, dsum))
    }

    /// `I_M(s; h) = h Σ_k exp(-π(kh)² - 2πMθkh) / cosh(πθkh) (M + kh/θ)^{-s}`
    pub fn eval(&mut self, s: &Complex<T>) -> Result<Complex<T>> {
        Ok(self.eval_impl(s, false)?.0)
    }

    /// `(I_M(s; h), d/ds I_M(s; h))`
    pub fn eval_with_deriv(&mut self, s: &Complex<T>) -> Result<(Complex<T>, Complex<T>)> {
        self.eval_impl(s, true)
    }
}

/// `I_M(s; h)` with a throwaway kernel.
pub fn i_m_h<T: Real>(m: &T, s: &Complex<T>, cfg: &OracleConfig<T>) -> Result<Complex<T>> {
    OracleKernel::new(m, cfg)?.eval(s)
}

/// `Σ n^{-s}` and `Σ n^{s-1}` by plain complex exponentials, plus the
/// `∓ln n` weighted sums when `deriv` is set.
fn plain_sums<T: Real>(
    s: &Complex<T>,
    n: u64,
    deriv: bool,
    ctx: &PrecisionContext,
) -> [Complex<T>; 4] {
    let mut out = [Complex::zero(ctx), Complex::zero(ctx), Complex::zero(ctx), Complex::zero(ctx)];
    let sm1 = s.clone() - &Complex::one(ctx);
    for k in 1..=n {
        let lk = T::from_i64(k as i64, ctx).ln();
        let a = (-(s.scale(&lk))).exp();
        let b = sm1.scale(&lk).exp();
        if deriv {
            out[2] -= a.scale(&lk);
            out[3] += b.scale(&lk);
        }
        out[0] += a;
        out[1] += b;
    }
    out
}

fn half_sign<T: Real>(n: u64, ctx: &PrecisionContext) -> T {
    T::from_f64(if n.is_multiple_of(2) { 0.5 } else { -0.5 }, ctx)
}

fn reflect<T: Real>(s: &Complex<T>, ctx: &PrecisionContext) -> Complex<T> {
    Complex::new(T::from_i64(1, ctx) - &s.re, s.im.clone())
}

/// Kernel for `M = N + 1/2`.
pub fn kernel_for<T: Real>(n: u64, cfg: &OracleConfig<T>) -> Result<OracleKernel<T>> {
    let m = T::from_i64(n as i64, &cfg.ctx) + &T::from_f64(0.5, &cfg.ctx);
    OracleKernel::new(&m, cfg)
}

/// `G(s; N, h)` evaluated with a caller-held kernel for `M = N + 1/2`.
pub fn g_with_kernel<T: Real>(
    s: &Complex<T>,
    n: u64,
    kernel: &mut OracleKernel<T>,
) -> Result<Complex<T>> {
    let ctx = kernel.cfg.ctx;
    let x = chi(s, &ctx)?;
    let [a, b, _, _] = plain_sums(s, n, false, &ctx);
    let i_s = kernel.eval(s)?;
    let i_r = kernel.eval(&reflect(s, &ctx))?.conj();
    Ok(a + x.clone() * &b - (i_s + x * &i_r).scale(&half_sign(n, &ctx)))
}

/// `∂G/∂s (s; N, h)` with a caller-held kernel.
pub fn g_deriv_with_kernel<T: Real>(
    s: &Complex<T>,
    n: u64,
    kernel: &mut OracleKernel<T>,
) -> Result<Complex<T>> {
    let ctx = kernel.cfg.ctx;
    let x = chi(s, &ctx)?;
    let dx = x.clone() * &chi_log_deriv(s, &ctx)?;
    let [_, b, da, db] = plain_sums(s, n, true, &ctx);
    let (_, di_s) = kernel.eval_with_deriv(s)?;
    let (i_r, di_r) = kernel.eval_with_deriv(&reflect(s, &ctx))?;
    let corr = (di_s + dx.clone() * &i_r.conj() - x.clone() * &di_r.conj())
        .scale(&half_sign(n, &ctx));
    Ok(da + dx * &b + x * &db - corr)
}

/// `G(s; N, h) = Σ n^{-s} + χ(s) Σ n^{s-1} - (-1)^N/2 [I_M(s;h) + χ(s) conj(I_M(conj(1-s);h))]`
pub fn g<T: Real>(s: &Complex<T>, n: u64, cfg: &OracleConfig<T>) -> Result<Complex<T>> {
    g_with_kernel(s, n, &mut kernel_for(n, cfg)?)
}

/// `zeta(s; h) = G(s; N_t, h)` at the automatic step.
pub fn zeta_oracle<T: Real>(s: &Complex<T>, ctx: &PrecisionContext) -> Result<Complex<T>> {
    let n = n_t(&s.im, ctx)?;
    g(s, n, &OracleConfig::auto(ctx))
}

/// `∂/∂s G(s; N, h)` at `N = N_t` and the automatic step.
pub fn zeta_oracle_deriv<T: Real>(s: &Complex<T>, ctx: &PrecisionContext) -> Result<Complex<T>> {
    let n = n_t(&s.im, ctx)?;
    g_deriv_with_kernel(s, n, &mut kernel_for(n, &OracleConfig::auto(ctx))?)
}

/// Least-squares slope of `ln|f(h_i) - f(h_ref)|` against `1/h_i`, with
/// `h_ref = min(h) / 2`.
pub fn fit_rate<T, F>(h_list: &[T], ctx: &PrecisionContext, mut f: F) -> Result<f64>
where
    T: Real,
    F: FnMut(&T) -> Result<Complex<T>>,
{
    if h_list.len() < 4 {
        return Err(ZetaError::InvalidArgument(format!(
            "rate fit needs at least 4 step sizes, got {}",
            h_list.len()
        )));
    }
    if h_list.iter().any(|h| h.is_negative() || h.is_zero()) {
        return Err(ZetaError::InvalidArgument("step sizes must be positive".into()));
    }
    if h_list.windows(2).any(|w| w[1] >= w[0]) {
        return Err(ZetaError::InvalidArgument("step sizes must be strictly decreasing".into()));
    }
    let h_ref = h_list[h_list.len() - 1].clone().scale(0.5);
    let reference = f(&h_ref)?;
    let floor = T::pow10(-((ctx.digits() + ctx.guard() / 2) as i32), ctx);
    let mut xs = Vec::with_capacity(h_list.len());
    let mut ys = Vec::with_capacity(h_list.len());
    for h in h_list {
        let d = (f(h)? - &reference).abs();
        if d <= floor {
            return Err(ZetaError::DegenerateFit(format!(
                "difference at h = {} is below the resolution floor",
                h.to_sci_string(6)
            )));
        }
        xs.push(1.0 / h.to_f64());
        ys.push(d.log10_abs() * LN_10);
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx <= 0.0 {
        return Err(ZetaError::DegenerateFit("step sizes do not vary".into()));
    }
    Ok(sxy / sxx)
}

/// Fitted decay rate of `G(s; N_t, h)` in `1/h`; the trapezoidal theory
/// predicts `-π/√2`.
pub fn convergence_rate<T: Real>(s: &Complex<T>, h_list: &[T], ctx: &PrecisionContext) -> Result<f64> {
    let n = n_t(&s.im, ctx)?;
    fit_rate(h_list, ctx, |h| g(s, n, &OracleConfig::with_step(h.clone(), ctx)))
}

/// Riemann-Siegel theta `θ(t) = Im ln Γ(1/4 + it/2) - (t/2) ln π`.
pub fn rs_theta<T: Real>(t: &T, ctx: &PrecisionContext) -> Result<T> {
    let z = Complex::new(T::from_f64(0.25, ctx), t.clone().scale(0.5));
    let lg = log_gamma(&z, ctx)?;
    Ok(lg.im - &(t.clone().scale(0.5) * &T::pi(ctx).ln()))
}

/// Hardy `Z(t) = Re(exp(iθ(t)) zeta(1/2 + it))` from the oracle.
pub fn hardy_z<T: Real>(t: &T, ctx: &PrecisionContext) -> Result<T> {
    let s = Complex::new(T::from_f64(0.5, ctx), t.clone());
    let z = zeta_oracle(&s, ctx)?;
    let (sin, cos) = rs_theta(t, ctx)?.sin_cos();
    Ok(cos * &z.re - sin * &z.im)
}

/// Zero of `Z` in `[lo, hi]` by bisection until the bracket is below
/// `10^-digits`. The endpoints must have opposite signs.
pub fn refine_zero<T: Real>(lo: &T, hi: &T, ctx: &PrecisionContext) -> Result<T> {
    let mut lo = lo.at_ctx(ctx);
    let mut hi = hi.at_ctx(ctx);
    let mut z_lo = hardy_z(&lo, ctx)?;
    let z_hi = hardy_z(&hi, ctx)?;
    if z_lo.is_negative() == z_hi.is_negative() {
        return Err(ZetaError::InvalidArgument(format!(
            "Z does not change sign on [{}, {}]",
            lo.to_sci_string(12),
            hi.to_sci_string(12)
        )));
    }
    let width = T::pow10(-(ctx.digits() as i32), ctx);
    while (hi.clone() - &lo).abs() > width {
        let mid = (lo.clone() + &hi).scale(0.5);
        let z_mid = hardy_z(&mid, ctx)?;
        if z_mid.is_zero() {
            return Ok(mid);
        }
        if z_mid.is_negative() == z_lo.is_negative() {
            lo = mid;
            z_lo = z_mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + &hi).scale(0.5))
}
