//! Error sweeps of `zeta_p` against the oracle over vertical strips, the
//! dip pattern inside one interval `[t_n, t_{n+1})`, and CSV output.
//!
//! The approximation is evaluated in any [`Real`]; the reference always runs
//! in MPFR, [`ORACLE_EXTRA_DIGITS`] digits above the measurement precision.

use std::io;

use crate::complex::Complex;
use crate::error::{Result, ZetaError};
use crate::oracle::{g_deriv_with_kernel, g_with_kernel, kernel_for, OracleConfig, OracleKernel};
use crate::precision::PrecisionContext;
use crate::quadgen::QuadratureRule;
use crate::scalar::{MpFloat, Real};
use crate::zeta::{b_of_t, f_sum, f_sum_deriv, n_t, t_n};

/// Digits the oracle carries beyond the measurement precision.
pub const ORACLE_EXTRA_DIGITS: u32 = 15;

/// Default number of abscissae `σ_k` across the strip.
pub const DEFAULT_STRIP_POINTS: usize = 101;

/// Parameters of a `Δ_p(t; a, b)` sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub rule_p: usize,
    /// Left strip edge.
    pub a: f64,
    /// Right strip edge.
    pub b: f64,
    pub t_lo: f64,
    pub t_hi: f64,
    /// Uniform samples in `[t_lo, t_hi]`, endpoints included.
    pub t_samples: usize,
    pub strip_points: usize,
    /// Precision at which `zeta_p` is evaluated.
    pub digits: u32,
}

impl SweepSpec {
    pub fn new(rule_p: usize, a: f64, b: f64, t_lo: f64, t_hi: f64, t_samples: usize, digits: u32) -> Self {
        Self { rule_p, a, b, t_lo, t_hi, t_samples, strip_points: DEFAULT_STRIP_POINTS, digits }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(ZetaError::InvalidArgument(m));
        if !(self.a < self.b) {
            return bad(format!("strip edges need a < b, got [{}, {}]", self.a, self.b));
        }
        if self.strip_points < 2 {
            return bad(format!("strip_points must be at least 2, got {}", self.strip_points));
        }
        if self.digits == 0 {
            return bad("digits must be positive".into());
        }
        if !self.t_lo.is_finite() || !self.t_hi.is_finite() {
            return bad("t range must be finite".into());
        }
        if self.t_lo <= self.t_hi && self.t_lo < 2.0 * std::f64::consts::PI {
            return bad(format!("t_lo must be at least t_1 = 2π, got {}", self.t_lo));
        }
        Ok(())
    }

    fn is_empty(&self) -> bool {
        self.t_lo > self.t_hi || self.t_samples == 0
    }

    fn ctx(&self) -> PrecisionContext {
        PrecisionContext::new(self.digits)
    }
}

/// One sampled ordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub t: MpFloat,
    pub delta: MpFloat,
    pub n_t: u64,
    pub b_t: MpFloat,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    /// Sorted by `t`.
    pub rows: Vec<SweepRow>,
    pub max_delta: MpFloat,
    pub spec: SweepSpec,
}

/// Error at one node or midpoint of the dip diagnostic.
#[derive(Clone, Debug, PartialEq)]
pub struct DipPoint {
    pub t: MpFloat,
    pub error: MpFloat,
    pub b_t: MpFloat,
    /// `true` at `B(t) = y_k`, `false` at an interleaved midpoint.
    pub node: bool,
}

fn check_rule<T: Real>(spec: &SweepSpec, rule: &QuadratureRule<T>) -> Result<()> {
    if rule.p != spec.rule_p {
        return Err(ZetaError::InvalidArgument(format!(
            "sweep expects a rule of order {}, got {}",
            spec.rule_p, rule.p
        )));
    }
    Ok(())
}

fn require_positive<T: Real>(t: &T) -> Result<()> {
    if t.is_negative() || t.is_zero() || !t.is_finite() {
        return Err(ZetaError::InvalidArgument(format!("t must be positive, got {t}")));
    }
    Ok(())
}

/// `|approx(s) - reference(s)|` at `s = σ + it` for every `σ` in `sigmas`,
/// both at `N = n` and sharing one oracle kernel.
fn errors_on_line<T: Real>(
    t: &T,
    n: u64,
    sigmas: &[T],
    rule: &QuadratureRule<T>,
    ctx: &PrecisionContext,
    deriv: bool,
) -> Result<Vec<MpFloat>> {
    let octx = ctx.raised(ORACLE_EXTRA_DIGITS);
    let mut kernel: OracleKernel<MpFloat> = kernel_for(n, &OracleConfig::auto(&octx))?;
    sigmas
        .iter()
        .map(|sigma| {
            let s = Complex::new(sigma.clone(), t.clone());
            let approx = if deriv { f_sum_deriv(&s, n, rule, ctx)? } else { f_sum(&s, n, rule, ctx)? };
            let s_mp = s.to_mp(&octx);
            let reference = if deriv {
                g_deriv_with_kernel(&s_mp, n, &mut kernel)?
            } else {
                g_with_kernel(&s_mp, n, &mut kernel)?
            };
            Ok((approx.to_mp(&octx) - &reference).abs())
        })
        .collect()
}

fn strip_sigmas<T: Real>(spec: &SweepSpec, ctx: &PrecisionContext) -> Vec<T> {
    let a = T::from_f64(spec.a, ctx);
    let width = T::from_f64(spec.b, ctx) - &a;
    let last = T::from_i64(spec.strip_points as i64 - 1, ctx);
    (0..spec.strip_points)
        .map(|k| a.clone() + &(width.clone() * &T::from_i64(k as i64, ctx) / &last))
        .collect()
}

fn max_of(values: impl IntoIterator<Item = MpFloat>, ctx: &PrecisionContext) -> MpFloat {
    values.into_iter().fold(MpFloat::from_i64(0, ctx), |m, v| m.max_of(v))
}

fn strip_max<T: Real>(t: &T, spec: &SweepSpec, rule: &QuadratureRule<T>, deriv: bool) -> Result<MpFloat> {
    spec.validate()?;
    check_rule(spec, rule)?;
    require_positive(t)?;
    let ctx = spec.ctx();
    let rule = rule.at_ctx(&ctx);
    let t = t.at_ctx(&ctx);
    let n = n_t(&t, &ctx)?;
    let errs = errors_on_line(&t, n, &strip_sigmas(spec, &ctx), &rule, &ctx, deriv)?;
    Ok(max_of(errs, &ctx.raised(ORACLE_EXTRA_DIGITS)))
}

/// `Δ_p(t; a, b) = max_k |zeta_p(σ_k + it) - zeta(σ_k + it)|` with
/// `σ_k = a + (b - a) k / (strip_points - 1)`.
pub fn delta_at<T: Real>(t: &T, spec: &SweepSpec, rule: &QuadratureRule<T>) -> Result<MpFloat> {
    strip_max(t, spec, rule, false)
}

/// `Δ^{(1)}_p(t; a, b)`, the same maximum for the derivative.
pub fn delta_deriv_at<T: Real>(t: &T, spec: &SweepSpec, rule: &QuadratureRule<T>) -> Result<MpFloat> {
    strip_max(t, spec, rule, true)
}

/// Uniform samples of `[t_lo, t_hi]` merged with the interval ends `t_n`
/// falling inside it, sorted and without duplicates.
pub fn sample_ordinates<T: Real>(spec: &SweepSpec, ctx: &PrecisionContext) -> Vec<T> {
    if spec.is_empty() {
        return Vec::new();
    }
    let lo = T::from_f64(spec.t_lo, ctx);
    let hi = T::from_f64(spec.t_hi, ctx);
    let mut ts: Vec<T> = if spec.t_samples == 1 || spec.t_lo == spec.t_hi {
        vec![lo.clone()]
    } else {
        let last = T::from_i64(spec.t_samples as i64 - 1, ctx);
        let width = hi.clone() - &lo;
        (0..spec.t_samples)
            .map(|i| lo.clone() + &(width.clone() * &T::from_i64(i as i64, ctx) / &last))
            .collect()
    };
    let two_pi = 2.0 * std::f64::consts::PI;
    let n_lo = (spec.t_lo / two_pi).sqrt().floor().max(1.0) as u64;
    let n_hi = (spec.t_hi / two_pi).sqrt().ceil() as u64;
    for n in n_lo..=n_hi {
        let tn: T = t_n(n, ctx);
        if tn >= lo && tn <= hi {
            ts.push(tn);
        }
    }
    ts.sort_by(|a, b| a.partial_cmp(b).expect("finite ordinates"));
    ts.dedup();
    ts
}

fn run_sweep<T: Real>(spec: &SweepSpec, rule: &QuadratureRule<T>, deriv: bool) -> Result<SweepReport> {
    spec.validate()?;
    check_rule(spec, rule)?;
    let ctx = spec.ctx();
    let octx = ctx.raised(ORACLE_EXTRA_DIGITS);
    let rule = rule.at_ctx(&ctx);
    let sigmas = strip_sigmas::<T>(spec, &ctx);
    let mut rows = Vec::new();
    for t in sample_ordinates::<T>(spec, &ctx) {
        let n = n_t(&t, &ctx)?;
        let errs = errors_on_line(&t, n, &sigmas, &rule, &ctx, deriv)?;
        rows.push(SweepRow {
            delta: max_of(errs, &octx),
            n_t: n,
            b_t: b_of_t(&t, &ctx)?.to_mp(&octx),
            t: t.to_mp(&octx),
        });
    }
    let max_delta = max_of(rows.iter().map(|r| r.delta.clone()), &octx);
    Ok(SweepReport { rows, max_delta, spec: spec.clone() })
}

/// `Δ_p(t; a, b)` at the ordinates of [`sample_ordinates`].
pub fn sweep<T: Real>(spec: &SweepSpec, rule: &QuadratureRule<T>) -> Result<SweepReport> {
    run_sweep(spec, rule, false)
}

/// `Δ^{(1)}_p(t; a, b)` at the ordinates of [`sample_ordinates`].
pub fn deriv_sweep<T: Real>(spec: &SweepSpec, rule: &QuadratureRule<T>) -> Result<SweepReport> {
    run_sweep(spec, rule, true)
}

/// The `4p + 2` ordinates in `[t_n, t_{n+1})` where `B(t) = y_k`, i.e.
/// `t = 2πn(n + 1 + y_k)`, with `y_k = -1 + 2k/(4p+1)`. The first one is
/// `t_n` itself.
pub fn dip_nodes<T: Real>(n: u64, p: usize, ctx: &PrecisionContext) -> Vec<T> {
    let two_pi_n = T::pi(ctx).scale(2.0) * &T::from_i64(n as i64, ctx);
    let q = T::from_i64(4 * p as i64 + 1, ctx);
    let mut nodes = vec![t_n(n, ctx)];
    nodes.extend((1..=4 * p + 1).map(|k| {
        let y = T::from_i64(2 * k as i64, ctx) / &q - &T::from_i64(1, ctx);
        two_pi_n.clone() * &(T::from_i64(n as i64 + 1, ctx) + &y)
    }));
    nodes
}

/// Errors of `zeta_p(1/2 + it)` at the `4p + 2` nodes of `[t_n, t_{n+1})`
/// and at `4p + 2` midpoints: one between each pair of neighbouring nodes
/// and one between the last node and `t_{n+1}`. Sorted by `t`.
pub fn dip_diagnostic<T: Real>(
    n: u64,
    rule: &QuadratureRule<T>,
    ctx: &PrecisionContext,
) -> Result<Vec<DipPoint>> {
    if n == 0 {
        return Err(ZetaError::InvalidArgument("dip diagnostic needs n >= 1".into()));
    }
    let octx = ctx.raised(ORACLE_EXTRA_DIGITS);
    let rule = rule.at_ctx(ctx);
    let nodes = dip_nodes::<T>(n, rule.p, ctx);
    let mut ends = nodes.clone();
    ends.push(t_n(n + 1, ctx));
    let mids: Vec<T> = ends.windows(2).map(|w| (w[0].clone() + &w[1]).scale(0.5)).collect();
    let half = [T::from_f64(0.5, ctx)];
    let mut out = Vec::with_capacity(nodes.len() + mids.len());
    for (t, node) in nodes.into_iter().map(|t| (t, true)).chain(mids.into_iter().map(|t| (t, false))) {
        let err = errors_on_line(&t, n, &half, &rule, ctx, false)?.remove(0);
        let nn = T::from_i64(n as i64, ctx);
        let b = t.clone() / &(T::pi(ctx).scale(2.0) * &nn) - &nn - &T::from_i64(1, ctx);
        out.push(DipPoint { b_t: b.to_mp(&octx), t: t.to_mp(&octx), error: err, node });
    }
    out.sort_by(|a, b| a.t.partial_cmp(&b.t).expect("finite ordinates"));
    Ok(out)
}

/// Seventeen significant digits of `log10 |x|`, or `-inf` at zero.
fn log10_field(x: &MpFloat) -> String {
    if x.is_zero() {
        "-inf".into()
    } else {
        format!("{:.16e}", x.log10_abs())
    }
}

/// Writes `t,delta,log10_delta,N_t,B_t`, one row per sample.
pub fn write_sweep_csv<W: io::Write>(report: &SweepReport, out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "delta", "log10_delta", "N_t", "B_t"])?;
    let digits = report.spec.digits as usize;
    for r in &report.rows {
        w.write_record([
            r.t.to_sci_string(17),
            r.delta.to_sci_string(digits),
            log10_field(&r.delta),
            r.n_t.to_string(),
            r.b_t.to_sci_string(17),
        ])?;
    }
    w.flush()
}

/// Writes `t,error,log10_error,B_t,kind` with `kind` either `node` or `mid`.
pub fn write_dips_csv<W: io::Write>(points: &[DipPoint], digits: u32, out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "error", "log10_error", "B_t", "kind"])?;
    for d in points {
        w.write_record([
            d.t.to_sci_string(17),
            d.error.to_sci_string(digits as usize),
            log10_field(&d.error),
            d.b_t.to_sci_string(17),
            (if d.node { "node" } else { "mid" }).to_string(),
        ])?;
    }
    w.flush()
}
