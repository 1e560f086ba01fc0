//! Polynomial roots (Aberth-Ehrlich) and the reciprocal-pair ordering of
//! the roots of `P_m`.

use std::cmp::Ordering;

use crate::complex::Complex;
use crate::error::{Result, ZetaError};
use crate::precision::PrecisionContext;
use crate::scalar::Real;

use super::poly::ComplexPolynomial;
use super::tolerance;

const F64_ITERATIONS: usize = 500;
const MP_ITERATIONS: usize = 200;
const POLISH_STEPS: usize = 3;

/// All roots of `p`, Newton-polished at the working precision of `ctx`.
///
/// Starting values come from an `f64` run of the same iteration when the
/// coefficients fit in double range.
pub fn poly_roots<T: Real>(
    p: &ComplexPolynomial<T>,
    ctx: &PrecisionContext,
) -> Result<Vec<Complex<T>>> {
    let deg = p.degree();
    if deg == 0 {
        return Err(ZetaError::InvalidArgument("polynomial of degree 0 has no roots".into()));
    }
    let monic = normalize(p);
    let start = f64_start(&monic, ctx).unwrap_or_else(|| circle_start(&monic, ctx));
    let tol = tolerance::<T>(ctx.digits() as i32 + ctx.guard() as i32 / 2, ctx);
    let floor = tolerance::<T>(T::carried_digits(ctx) as i32 - 3, ctx);
    let mut roots = aberth(&monic, start, &tol, &floor, MP_ITERATIONS)?;
    for r in roots.iter_mut() {
        for _ in 0..POLISH_STEPS {
            let (v, d) = monic.eval_with_deriv(r);
            if d.abs().is_zero() {
                break;
            }
            *r -= v / &d;
        }
    }
    let eps = tolerance::<T>(ctx.digits() as i32, ctx);
    for r in &roots {
        if monic.eval(r).abs() > eps.clone() * monic.abs_scale(r) {
            return Err(ZetaError::NonConvergence { iterations: MP_ITERATIONS });
        }
    }
    let sep_tol = T::pow10(-(ctx.digits().div_ceil(2) as i32), ctx);
    let mut min_sep: Option<T> = None;
    for i in 0..deg {
        for j in (i + 1)..deg {
            let d = (roots[i].clone() - &roots[j]).abs();
            if min_sep.as_ref().is_none_or(|m| d < *m) {
                min_sep = Some(d);
            }
        }
    }
    if let Some(s) = min_sep {
        if s < sep_tol {
            return Err(ZetaError::Multiplicity { separation: s.to_f64() });
        }
    }
    Ok(roots)
}

fn normalize<T: Real>(p: &ComplexPolynomial<T>) -> ComplexPolynomial<T> {
    if p.is_monic() {
        return p.clone();
    }
    let lead = p.coeffs[p.degree()].clone();
    ComplexPolynomial::new(p.coeffs.iter().map(|c| c.clone() / &lead).collect())
}

/// Equally spaced points on a circle whose radius is the geometric mean
/// of the root moduli, rotated off the real axis.
fn circle_start<T: Real>(p: &ComplexPolynomial<T>, ctx: &PrecisionContext) -> Vec<Complex<T>> {
    let deg = p.degree();
    let c0 = p.coeffs[0].abs().to_f64();
    let r = if c0 > 0.0 && c0.is_finite() {
        c0.powf(1.0 / deg as f64)
    } else {
        1.0
    };
    (0..deg)
        .map(|k| {
            let a = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4;
            let rk = r * (1.0 + 0.01 * k as f64 / deg as f64);
            Complex::from_f64(rk * a.cos(), rk * a.sin(), ctx)
        })
        .collect()
}

fn f64_start<T: Real>(p: &ComplexPolynomial<T>, ctx: &PrecisionContext) -> Option<Vec<Complex<T>>> {
    let c64: Vec<Complex<f64>> =
        p.coeffs.iter().map(|c| Complex::new(c.re.to_f64(), c.im.to_f64())).collect();
    if !c64.iter().all(|c| c.is_finite()) {
        return None;
    }
    let p64 = ComplexPolynomial::new(c64);
    let ctx64 = PrecisionContext::new(15);
    let start = circle_start(&p64, &ctx64);
    let roots = aberth(&p64, start, &1e-14, &1e-13, F64_ITERATIONS).ok()?;
    if !roots.iter().all(|r| r.is_finite()) {
        return None;
    }
    Some(roots.iter().map(|r| Complex::from_f64(r.re, r.im, ctx)).collect())
}

/// Simultaneous Aberth-Ehrlich iteration until every correction is below
/// `tol` relative to its root, or `|p(z)|` is within `floor` of the rounding
/// scale `Σ |c_k| |z|^k`.
fn aberth<T: Real>(
    p: &ComplexPolynomial<T>,
    mut z: Vec<Complex<T>>,
    tol: &T,
    floor: &T,
    max_iter: usize,
) -> Result<Vec<Complex<T>>> {
    let n = z.len();
    let mut done = vec![false; n];
    for _ in 0..max_iter {
        let mut all = true;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (v, d) = p.eval_with_deriv(&z[k]);
            if v.abs().is_zero() {
                done[k] = true;
                continue;
            }
            let ratio = v.clone() / &d;
            let mut sum = ratio.zero_like();
            for j in 0..n {
                if j != k {
                    sum += (z[k].clone() - &z[j]).recip();
                }
            }
            let denom = ratio.like(1.0, 0.0) - ratio.clone() * &sum;
            let w = ratio / &denom;
            if !w.is_finite() {
                return Err(ZetaError::NonConvergence { iterations: max_iter });
            }
            let small = w.abs() <= tol.clone() * z[k].abs().max_of(tol.one_like())
                || v.abs() <= floor.clone() * p.abs_scale(&z[k]);
            z[k] -= w;
            if small {
                done[k] = true;
            } else {
                all = false;
            }
        }
        if all {
            return Ok(z);
        }
    }
    Err(ZetaError::NonConvergence { iterations: max_iter })
}

/// Reciprocal-pair ordering of the roots of `P_m`: returns `z_{-p} .. z_p`
/// with `z_0 = 1`, `|z_j| >= 1` for `j > 0`, `|z_j|` increasing in `j`, and
/// `z_{-j} = 1 / z_j` exactly.
pub fn pair_and_order_roots<T: Real>(
    roots: &[Complex<T>],
    ctx: &PrecisionContext,
) -> Result<Vec<Complex<T>>> {
    if roots.len().is_multiple_of(2) {
        return Err(ZetaError::Pairing(format!("{} roots cannot pair around 1", roots.len())));
    }
    let p = roots.len() / 2;
    let tol = T::pow10(-(ctx.digits().div_ceil(2) as i32), ctx);
    let one = Complex::one(ctx);
    let (unit_idx, unit_dist) = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (i, (r.clone() - &one).abs()))
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(Ordering::Equal))
        .expect("non-empty");
    if unit_dist > tol {
        return Err(ZetaError::Pairing(format!(
            "no root within tolerance of 1 (closest at distance {:e})",
            unit_dist.to_f64()
        )));
    }
    let mut rest: Vec<Complex<T>> = roots
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != unit_idx)
        .map(|(_, r)| r.clone())
        .collect();
    rest.sort_by(|a, b| b.abs().partial_cmp(&a.abs()).unwrap_or(Ordering::Equal));
    let mut used = vec![false; rest.len()];
    let mut upper = Vec::with_capacity(p);
    for i in 0..rest.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let inv = rest[i].recip();
        let mut best: Option<(usize, T)> = None;
        for (j, w) in rest.iter().enumerate() {
            if used[j] {
                continue;
            }
            let d = (w.clone() - &inv).abs() / inv.abs();
            if best.as_ref().is_none_or(|(_, bd)| d < *bd) {
                best = Some((j, d));
            }
        }
        match best {
            Some((j, d)) if d < tol => {
                used[j] = true;
                let z = if rest[i].abs() >= rest[j].abs() { rest[i].clone() } else { rest[j].clone() };
                upper.push(z);
            }
            _ => {
                return Err(ZetaError::Pairing(format!(
                    "root {} has no reciprocal partner",
                    rest[i].to_sci_pair(12).0 + " " + &rest[i].to_sci_pair(12).1
                )))
            }
        }
    }
    upper.sort_by(|a, b| {
        a.abs()
            .partial_cmp(&b.abs())
            .unwrap_or(Ordering::Equal)
            .then_with(|| a.arg().partial_cmp(&b.arg()).unwrap_or(Ordering::Equal))
    });
    let mut z: Vec<Complex<T>> = upper.iter().rev().map(|u| u.recip()).collect();
    z.push(one);
    z.extend(upper);
    Ok(z)
}
