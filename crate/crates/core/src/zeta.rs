//! `zeta_p(s) = F(s; N_t, p)`: the main sums plus two quadrature
//! corrections, and its `s`-derivative at frozen `N`.

use crate::complex::Complex;
use crate::error::{Result, ZetaError};
use crate::precision::PrecisionContext;
use crate::quadgen::QuadratureRule;
use crate::scalar::Real;
use crate::special::{chi, chi_log_deriv};

/// A value of `zeta_p` or its derivative, with the `N` it was computed at.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalResult<T> {
    pub value: Complex<T>,
    pub n_used: u64,
    pub rule_p: usize,
    pub digits: u32,
}

fn require_positive_t<T: Real>(t: &T) -> Result<()> {
    if t.is_negative() || t.is_zero() || !t.is_finite() {
        return Err(ZetaError::InvalidArgument(format!("t must be positive, got {t}")));
    }
    Ok(())
}

/// `N_t = floor(sqrt(t / 2π))`, corrected so that `2π N² <= t < 2π (N+1)²`
/// holds at the working precision.
pub fn n_t<T: Real>(t: &T, ctx: &PrecisionContext) -> Result<u64> {
    require_positive_t(t)?;
    let two_pi = T::pi(ctx).scale(2.0);
    let guess = (t.clone() / &two_pi).sqrt().floor_i64().ok_or(ZetaError::Overflow("N_t"))?;
    let mut n = guess.max(0) as u64;
    let edge = |k: u64| two_pi.clone() * &T::from_i64(k as i64, ctx).sqr();
    while n > 0 && edge(n) > *t {
        n -= 1;
    }
    while edge(n + 1) <= *t {
        n += 1;
    }
    Ok(n)
}

/// `t_n = 2π n²`
pub fn t_n<T: Real>(n: u64, ctx: &PrecisionContext) -> T {
    T::pi(ctx).scale(2.0) * &T::from_i64(n as i64, ctx).sqr()
}

/// `B(t) = t / (2π N_t) - N_t - 1`; needs `t >= 2π`.
pub fn b_of_t<T: Real>(t: &T, ctx: &PrecisionContext) -> Result<T> {
    let n = n_t(t, ctx)?;
    if n == 0 {
        return Err(ZetaError::InvalidArgument(format!("B(t) needs t >= 2π, got {t}")));
    }
    let nn = T::from_i64(n as i64, ctx);
    Ok(t.clone() / &(T::pi(ctx).scale(2.0) * &nn) - &nn - &T::from_i64(1, ctx))
}

/// Shared pieces of `I_{M,p}(s)` and its derivative.
struct Remainder<T> {
    /// `M^{-s}`
    m_pow: Complex<T>,
    ln_m: T,
    /// `omega_0 + Σ omega_j (e^{a_j} + e^{b_j})`
    bracket: Complex<T>,
    /// `Σ omega_j (e^{a_j} l⁺_j + e^{b_j} l⁻_j)`, only when asked for.
    bracket_deriv: Option<Complex<T>>,
}

fn remainder<T: Real>(
    m: &T,
    s: &Complex<T>,
    rule: &QuadratureRule<T>,
    deriv: bool,
    ctx: &PrecisionContext,
) -> Remainder<T> {
    let ln_m = m.ln();
    let m_pow = Complex::from_real(ln_m.clone()).scale(&T::from_i64(-1, ctx));
    let m_pow = (s.clone() * &m_pow).exp();
    let two_pi_m = T::pi(ctx).scale(2.0) * m;
    let inv_m = T::from_i64(1, ctx) / m;
    let one = Complex::one(ctx);
    let mut bracket = rule.omega0.clone();
    let mut bracket_deriv = deriv.then(|| Complex::zero(ctx));
    for (w, lam) in rule.omega.iter().zip(&rule.lambda) {
        // (M ± iλ)^{-s} = M^{-s} exp(-s ln(1 ± iλ/M)); the split is exact for M > 0.
        let il = lam.mul_i().scale(&inv_m);
        let l_plus = (one.clone() + &il).ln();
        let l_minus = (one.clone() - &il).ln();
        let shift = lam.scale(&two_pi_m);
        let ea = (-(shift.clone()) - &(s.clone() * &l_plus)).exp();
        let eb = (shift - &(s.clone() * &l_minus)).exp();
        if let Some(bd) = bracket_deriv.as_mut() {
            *bd += w.clone() * &(ea.clone() * &l_plus + eb.clone() * &l_minus);
        }
        bracket += w.clone() * &(ea + eb);
    }
    Remainder { m_pow, ln_m, bracket, bracket_deriv }
}

/// `I_{M,p}(s) = omega_0 M^{-s} + Σ omega_j [e^{-2πMλ_j}(M+iλ_j)^{-s} + e^{2πMλ_j}(M-iλ_j)^{-s}]`
pub fn i_mp<T: Real>(
    m: &T,
    s: &Complex<T>,
    rule: &QuadratureRule<T>,
    ctx: &PrecisionContext,
) -> Complex<T> {
    let r = remainder(m, s, rule, false, ctx);
    r.m_pow * &r.bracket
}

/// `(I_{M,p}(s), d/ds I_{M,p}(s))`
pub fn i_mp_with_deriv<T: Real>(
    m: &T,
    s: &Complex<T>,
    rule: &QuadratureRule<T>,
    ctx: &PrecisionContext,
) -> (Complex<T>, Complex<T>) {
    let r = remainder(m, s, rule, true, ctx);
    let value = r.m_pow.clone() * &r.bracket;
    let bd = r.bracket_deriv.expect("requested");
    let d = -(value.scale(&r.ln_m) + r.m_pow * &bd);
    (value, d)
}

/// `Σ_{n<=N} n^{-s}` and `Σ_{n<=N} n^{s-1}`, sharing `ln n` and the phase
/// `t ln n`; with `deriv`, also the sums weighted by `-ln n` and `ln n`.
pub(crate) struct MainSums<T> {
    pub direct: Complex<T>,
    pub dual: Complex<T>,
    pub direct_deriv: Complex<T>,
    pub dual_deriv: Complex<T>,
}

pub(crate) fn main_sums<T: Real>(
    s: &Complex<T>,
    n: u64,
    deriv: bool,
    ctx: &PrecisionContext,
) -> MainSums<T> {
    let mut out = MainSums {
        direct: Complex::zero(ctx),
        dual: Complex::zero(ctx),
        direct_deriv: Complex::zero(ctx),
        dual_deriv: Complex::zero(ctx),
    };
    if n == 0 {
        return out;
    }
    out.direct = Complex::one(ctx);
    out.dual = Complex::one(ctx);
    let one = T::from_i64(1, ctx);
    for k in 2..=n {
        let kk = T::from_i64(k as i64, ctx);
        let ln_k = kk.ln();
        // k^{-σ} and k^{σ-1} = 1 / (k · k^{-σ})
        let mag = (-(s.re.clone() * &ln_k)).exp();
        let mag_dual = one.clone() / &(kk * &mag);
        let (sin, cos) = (s.im.clone() * &ln_k).sin_cos();
        let a = Complex::new(cos.clone() * &mag, -(sin.clone() * &mag));
        let b = Complex::new(cos * &mag_dual, sin * &mag_dual);
        if deriv {
            out.direct_deriv -= a.scale(&ln_k);
            out.dual_deriv += b.scale(&ln_k);
        }
        out.direct += a;
        out.dual += b;
    }
    out
}

/// `(-1)^N / 2`
fn half_sign<T: Real>(n: u64, ctx: &PrecisionContext) -> T {
    T::from_f64(if n.is_multiple_of(2) { 0.5 } else { -0.5 }, ctx)
}

/// `conj(1 - s)`, the argument at which the reflected remainder is taken.
fn reflect<T: Real>(s: &Complex<T>, ctx: &PrecisionContext) -> Complex<T> {
    Complex::new(T::from_i64(1, ctx) - &s.re, s.im.clone())
}

/// `F(s; N, p)` with `M = N + 1/2`.
pub fn f_sum<T: Real>(
    s: &Complex<T>,
    n: u64,
    rule: &QuadratureRule<T>,
    ctx: &PrecisionContext,
) -> Result<Complex<T>> {
    let m = T::from_i64(n as i64, ctx) + &T::from_f64(0.5, ctx);
    let x = chi(s, ctx)?;
    let sums = main_sums(s, n, false, ctx);
    let i_s = i_mp(&m, s, rule, ctx);
    let i_r = i_mp(&m, &reflect(s, ctx), rule, ctx).conj();
    let corr = (i_s + x.clone() * &i_r).scale(&half_sign(n, ctx));
    Ok(sums.direct + x * &sums.dual - corr)
}

/// `∂F/∂s (s; N, p)` at fixed `N`.
pub fn f_sum_deriv<T: Real>(
    s: &Complex<T>,
    n: u64,
    rule: &QuadratureRule<T>,
    ctx: &PrecisionContext,
) -> Result<Complex<T>> {
    let m = T::from_i64(n as i64, ctx) + &T::from_f64(0.5, ctx);
    let x = chi(s, ctx)?;
    let dx = x.clone() * &chi_log_deriv(s, ctx)?;
    let sums = main_sums(s, n, true, ctx);
    let (_, di_s) = i_mp_with_deriv(&m, s, rule, ctx);
    let (i_r, di_r) = i_mp_with_deriv(&m, &reflect(s, ctx), rule, ctx);
    // d/ds conj(I(conj(1 - s))) = -conj(I'(conj(1 - s)))
    let corr = (di_s + dx.clone() * &i_r.conj() - x.clone() * &di_r.conj())
        .scale(&half_sign(n, ctx));
    Ok(sums.direct_deriv + dx * &sums.dual + x * &sums.dual_deriv - corr)
}

/// `zeta_p(s) = F(s; N_t, p)`; requires `Im s > 0`.
pub fn zeta_p<T: Real>(
    s: &Complex<T>,
    rule: &QuadratureRule<T>,
    ctx: &PrecisionContext,
) -> Result<EvalResult<T>> {
    let n = n_t(&s.im, ctx)?;
    let rule = rule.at_ctx(ctx);
    let value = f_sum(s, n, &rule, ctx)?;
    Ok(EvalResult { value, n_used: n, rule_p: rule.p, digits: ctx.digits() })
}

/// `zeta_p^{(1)}(s) = ∂F/∂s (s; N, p)` at `N = N_t`.
pub fn zeta_p_deriv<T: Real>(
    s: &Complex<T>,
    rule: &QuadratureRule<T>,
    ctx: &PrecisionContext,
) -> Result<EvalResult<T>> {
    let n = n_t(&s.im, ctx)?;
    let rule = rule.at_ctx(ctx);
    let value = f_sum_deriv(s, n, &rule, ctx)?;
    Ok(EvalResult { value, n_used: n, rule_p: rule.p, digits: ctx.digits() })
}
