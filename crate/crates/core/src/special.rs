//! Log-gamma, digamma and the functional-equation factor chi.
//!
//! Log-gamma and digamma use the Stirling series after shifting the argument
//! far enough from the origin that the series remainder drops below the
//! working precision. The shift bound `r0` comes from the optimal truncation
//! of the series: the smallest term is roughly `exp(-2 pi |z|)`, so
//! `|z| >= D ln 10 / (2 pi)` is enough for `D` digits.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::f64::consts::{LN_10, PI};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::complex::Complex;
use crate::error::{Result, ZetaError};
use crate::precision::PrecisionContext;
use crate::scalar::Real;

/// Exact `B_{2k}` for `k = 1, 2, ...` as (numerator, denominator).
fn bernoulli_exact(count: usize) -> Arc<Vec<(BigInt, BigInt)>> {
    static CACHE: OnceLock<RwLock<Arc<Vec<(BigInt, BigInt)>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(Arc::new(Vec::new())));
    {
        let cur = cache.read().expect("bernoulli cache poisoned");
        if cur.len() >= count {
            return Arc::clone(&cur);
        }
    }
    let n = count.max(16).next_power_of_two();
    let table = Arc::new(tangent_bernoulli(n));
    let mut cur = cache.write().expect("bernoulli cache poisoned");
    if cur.len() < table.len() {
        *cur = Arc::clone(&table);
    }
    Arc::clone(&cur)
}

/// Bernoulli numbers from the integer tangent numbers:
/// `B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1))`.
fn tangent_bernoulli(n: usize) -> Vec<(BigInt, BigInt)> {
    let mut t: Vec<BigInt> = vec![BigInt::from(0); n + 1];
    t[1] = BigInt::from(1);
    for k in 2..=n {
        t[k] = &t[k - 1] * (k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    (1..=n)
        .map(|k| {
            let four_k = BigInt::from(1) << (2 * k);
            let mut num = &t[k] * (2 * k);
            if k % 2 == 0 {
                num = -num;
            }
            let den = &four_k * (&four_k - 1);
            (num, den)
        })
        .collect()
}

/// Stirling coefficients `B_{2k} / (2k (2k-1))` at the precision of `ctx`,
/// cached per (type, precision).
fn stirling_coeffs<T: Real>(count: usize, ctx: &PrecisionContext) -> Arc<Vec<T>> {
    type Cache = HashMap<(TypeId, u32), Arc<dyn Any + Send + Sync>>;
    static CACHE: OnceLock<RwLock<Cache>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (TypeId::of::<T>(), T::precision_key(ctx));
    if let Some(v) = cache
        .read()
        .expect("stirling cache poisoned")
        .get(&key)
        .and_then(|a| Arc::clone(a).downcast::<Vec<T>>().ok())
    {
        if v.len() >= count {
            return v;
        }
    }
    let exact = bernoulli_exact(count);
    let coeffs: Vec<T> = exact
        .iter()
        .enumerate()
        .map(|(i, (num, den))| {
            let k = (i + 1) as i64;
            let n = T::parse_decimal(&num.to_string(), ctx).expect("integer parses");
            let d = T::parse_decimal(&den.to_string(), ctx).expect("integer parses");
            n / d / T::from_i64(2 * k * (2 * k - 1), ctx)
        })
        .collect();
    let coeffs = Arc::new(coeffs);
    let mut w = cache.write().expect("stirling cache poisoned");
    let keep = match w.get(&key).and_then(|a| Arc::clone(a).downcast::<Vec<T>>().ok()) {
        Some(existing) if existing.len() >= coeffs.len() => existing,
        _ => {
            w.insert(key, Arc::clone(&coeffs) as Arc<dyn Any + Send + Sync>);
            coeffs
        }
    };
    keep
}

fn check_pole<T: Real>(s: &Complex<T>, ctx: &PrecisionContext, function: &'static str) -> Result<()> {
    let eps = T::pow10(-(ctx.digits().min(T::carried_digits(ctx)) as i32), ctx);
    if s.re.to_f64() > 0.5 || s.im.abs() > eps {
        return Ok(());
    }
    let nearest = (s.re.clone() + &s.re.like(0.5)).floor();
    if (s.re.clone() - &nearest).abs() <= eps {
        return Err(ZetaError::Pole {
            function,
            point: format!("{:?}", s),
        });
    }
    Ok(())
}

fn shift_radius<T: Real>(ctx: &PrecisionContext) -> f64 {
    f64::from(T::carried_digits(ctx)) * LN_10 / (2.0 * PI) + 1.0
}

/// Moves `z` right by unit steps until the Stirling series converges to
/// working precision; calls `on_step` with each `z` passed over.
fn shift_right<T: Real>(
    s: &Complex<T>,
    ctx: &PrecisionContext,
    mut on_step: impl FnMut(&Complex<T>),
) -> Complex<T> {
    let r0 = shift_radius::<T>(ctx);
    let mut z = s.clone();
    loop {
        let re = z.re.to_f64();
        let im = z.im.to_f64();
        if re >= 0.0 && re.hypot(im) >= r0 {
            return z;
        }
        on_step(&z);
        z.re += T::from_i64(1, ctx);
    }
}

/// Iterates the asymptotic tail `sum_k coeff(k) * w^k` for `w = z^-2`,
/// stopping once a term is below `10^-D` relative to `scale`.
fn stirling_tail<T: Real>(
    z: &Complex<T>,
    ctx: &PrecisionContext,
    scale: f64,
    weight: impl Fn(usize, &T) -> T,
    first: Complex<T>,
) -> Complex<T> {
    let digits = T::carried_digits(ctx) as f64;
    let cutoff = -digits + scale.max(0.0);
    let w = z.clone().powi(2).recip();
    let mut power = first;
    let mut sum = z.zero_like();
    let mut count = 16usize;
    let mut coeffs = stirling_coeffs::<T>(count, ctx);
    let mut k = 0usize;
    let mut prev = f64::INFINITY;
    loop {
        if k >= coeffs.len() {
            count = coeffs.len() * 2;
            coeffs = stirling_coeffs::<T>(count, ctx);
        }
        let term = power.scale(&weight(k, &coeffs[k]));
        let mag = term.abs().log10_abs();
        if mag > prev {
            break;
        }
        sum += term;
        if mag < cutoff {
            break;
        }
        prev = mag;
        power = power * &w;
        k += 1;
    }
    sum
}

/// The analytic log-gamma function: real on the positive axis, continuous
/// off the negative real axis, equal to `log Gamma(s)` modulo `2 pi i`.
pub fn log_gamma<T: Real>(s: &Complex<T>, ctx: &PrecisionContext) -> Result<Complex<T>> {
    check_pole(s, ctx, "log_gamma")?;
    let mut shift_sum = s.zero_like();
    let z = shift_right(s, ctx, |zk| shift_sum += zk.ln());
    let half = z.re.like(0.5);
    let ln_z = z.ln();
    let two_pi = T::pi(ctx).scale(2.0);
    let mut main = (z.clone() - &Complex::from_real(half.clone())) * &ln_z - &z;
    main.re += two_pi.ln() * &half;
    let scale = main.abs().log10_abs();
    let tail = stirling_tail(&z, ctx, scale, |_, c| c.clone(), z.recip());
    Ok(main + tail - shift_sum)
}

/// psi(s) = Gamma'(s) / Gamma(s).
pub fn digamma<T: Real>(s: &Complex<T>, ctx: &PrecisionContext) -> Result<Complex<T>> {
    check_pole(s, ctx, "digamma")?;
    let mut shift_sum = s.zero_like();
    let z = shift_right(s, ctx, |zk| shift_sum += zk.recip());
    let main = z.ln() - z.recip().scale_f64(0.5);
    let scale = main.abs().log10_abs();
    // B_{2k} / (2k) = c_k (2k - 1); the series is -sum B_{2k} / (2k z^{2k}).
    let first = z.clone().powi(2).recip();
    let tail = stirling_tail(
        &z,
        ctx,
        scale,
        |k, c| -(c.clone() * T::from_i64(2 * k as i64 + 1, ctx)),
        first,
    );
    Ok(main + tail - shift_sum)
}

/// `log cos(w)` computed from the dominant exponential so that large
/// `|Im w|` neither overflows nor loses the phase.
fn log_cos<T: Real>(w: &Complex<T>, ctx: &PrecisionContext) -> Result<Complex<T>> {
    let ln2 = T::from_i64(2, ctx).ln();
    if w.im.is_zero() {
        let c = w.re.sin_cos().1;
        if c.is_zero() || c.abs() < T::pow10(-(T::carried_digits(ctx) as i32), ctx) {
            return Err(ZetaError::Pole {
                function: "chi",
                point: format!("{:?}", w),
            });
        }
        return Ok(Complex::from_real(c).ln());
    }
    // cos w = e^{-iw} (1 + e^{2iw}) / 2 when Im w > 0, mirrored otherwise.
    let (lead, small) = if w.im.is_negative() {
        (w.mul_i(), w.mul_i().scale_f64(-2.0).exp())
    } else {
        (-w.mul_i(), w.mul_i().scale_f64(2.0).exp())
    };
    let mut out = lead + (small + &w.like(1.0, 0.0)).ln();
    out.re -= ln2;
    Ok(out)
}

/// `tan(w)`, evaluated through `exp(±2iw)` so it tends to `±i` instead of
/// overflowing.
fn tan_safe<T: Real>(w: &Complex<T>) -> Complex<T> {
    let one = w.like(1.0, 0.0);
    if w.im.is_negative() {
        // tan w = -i (1 - e^{-2iw}) / (1 + e^{-2iw})
        let e = w.mul_i().scale_f64(-2.0).exp();
        let q = (one.clone() - &e) / (one + &e);
        -q.mul_i()
    } else {
        // tan w = -i (e^{2iw} - 1) / (e^{2iw} + 1)
        let e = w.mul_i().scale_f64(2.0).exp();
        let q = (e.clone() - &one) / (e + &one);
        -q.mul_i()
    }
}

/// `log chi(s)` up to a multiple of `2 pi i`.
pub fn log_chi<T: Real>(s: &Complex<T>, ctx: &PrecisionContext) -> Result<Complex<T>> {
    let pi = T::pi(ctx);
    let two_pi = pi.clone().scale(2.0);
    let lg = log_gamma(s, ctx)?;
    let lc = log_cos(&s.scale(&pi).scale_f64(0.5), ctx)?;
    let mut out = s.scale(&two_pi.ln()) - lc - lg;
    out.re -= T::from_i64(2, ctx).ln();
    Ok(out)
}

/// chi(s) = (2 pi)^s / (2 cos(pi s / 2) Gamma(s)), so that zeta(s) = chi(s) zeta(1 - s).
pub fn chi<T: Real>(s: &Complex<T>, ctx: &PrecisionContext) -> Result<Complex<T>> {
    let v = log_chi(s, ctx)?.exp();
    if !v.is_finite() {
        return Err(ZetaError::Overflow("chi"));
    }
    Ok(v)
}

/// chi'(s) / chi(s) = ln(2 pi) + (pi/2) tan(pi s / 2) - psi(s).
pub fn chi_log_deriv<T: Real>(s: &Complex<T>, ctx: &PrecisionContext) -> Result<Complex<T>> {
    let pi = T::pi(ctx);
    let w = s.scale(&pi).scale_f64(0.5);
    if w.im.is_zero() && w.re.sin_cos().1.abs() < T::pow10(-(T::carried_digits(ctx) as i32), ctx)
    {
        return Err(ZetaError::Pole {
            function: "chi_log_deriv",
            point: format!("{:?}", s),
        });
    }
    let psi = digamma(s, ctx)?;
    let mut out = tan_safe(&w).scale(&pi.clone().scale(0.5)) - psi;
    out.re += pi.scale(2.0).ln();
    if !out.is_finite() {
        return Err(ZetaError::Overflow("chi_log_deriv"));
    }
    Ok(out)
}
