//! The Mordell integral
//! `H(y) = ∫ exp(-2πx² + 2πθxy) / cosh(πθx) dx`, `θ = exp(-πi/4)`,
//! in closed form, and the moment table built from it.

use crate::complex::Complex;
use crate::precision::PrecisionContext;
use crate::scalar::Real;

/// Moments `mu_k = H(y_k)` at the `4p + 2` equispaced nodes
/// `y_k = -1 + 2k / (4p + 1)`.
#[derive(Clone, Debug)]
pub struct MomentTable<T> {
    pub p: usize,
    pub mu: Vec<Complex<T>>,
    pub y: Vec<T>,
}

impl<T: Real> MomentTable<T> {
    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }
}

/// `y_k = -1 + 2k / (4p + 1)`.
pub fn node<T: Real>(k: usize, p: usize, ctx: &PrecisionContext) -> T {
    T::from_i64(2 * k as i64, ctx) / T::from_i64(4 * p as i64 + 1, ctx) - T::from_i64(1, ctx)
}

/// Closed form `[√2 cos(πy/2) e^{-πi(4y²+1)/8} - e^{-πi/4}] / cos(πy)`.
///
/// Within `10^(-digits/2)` of `y = ±1/2` numerator and denominator vanish
/// together; there the quotient is taken from truncated Taylor series.
pub fn mordell_h<T: Real>(y: &T, ctx: &PrecisionContext) -> Complex<T> {
    let half = T::from_f64(0.5, ctx);
    let near = T::pow10(-(ctx.digits().div_ceil(2) as i32), ctx);
    for center in [half.clone(), -half.clone()] {
        let delta = y.clone() - &center;
        if delta.abs() < near {
            return mordell_h_series(&center, &delta, ctx);
        }
    }
    let pi = T::pi(ctx);
    let sqrt2 = T::from_i64(2, ctx).sqrt();
    let (_, cos_half) = (pi.clone() * y).scale(0.5).sin_cos();
    let (_, cos_full) = (pi.clone() * y).sin_cos();
    let phase = -(pi.clone() * (y.sqr().scale(4.0) + &T::from_i64(1, ctx))).scale(0.125);
    let gauss = Complex::new(phase.sin_cos().1, phase.sin_cos().0);
    let tail = theta(ctx);
    let num = gauss.scale(&(sqrt2 * &cos_half)) - &tail;
    let inv = T::from_i64(1, ctx) / cos_full;
    num.scale(&inv)
}

/// `θ = exp(-πi/4)`
pub fn theta<T: Real>(ctx: &PrecisionContext) -> Complex<T> {
    let r = T::from_i64(2, ctx).sqrt().scale(0.5);
    Complex::new(r.clone(), -r)
}

const SERIES_ORDER: usize = 5;

/// Multiplies two truncated power series.
#[cfg(test)]
fn series_mul<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Vec<Complex<T>> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| {
            let mut acc = a[0].zero_like();
            for i in 0..=k {
                acc += a[i].clone() * &b[k - i];
            }
            acc
        })
        .collect()
}

/// `exp(g)` of a series with `g_0 = 0`: `n c_n = Σ_{k=1}^{n} k g_k c_{n-k}`.
fn series_exp<T: Real>(g: &[Complex<T>], ctx: &PrecisionContext) -> Vec<Complex<T>> {
    let mut c = vec![Complex::one(ctx)];
    for n in 1..g.len() {
        let mut acc = Complex::zero(ctx);
        for k in 1..=n {
            acc += g[k].scale(&T::from_i64(k as i64, ctx)) * &c[n - k];
        }
        c.push(acc.scale(&(T::from_i64(1, ctx) / T::from_i64(n as i64, ctx))));
    }
    c
}

/// Series quotient `a / b` with `b_0 != 0`.
fn series_div<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Vec<Complex<T>> {
    let n = a.len().min(b.len());
    let inv0 = b[0].recip();
    let mut q: Vec<Complex<T>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = a[k].clone();
        for i in 1..=k {
            acc -= b[i].clone() * &q[k - i];
        }
        q.push(acc * &inv0);
    }
    q
}

fn mordell_h_series<T: Real>(center: &T, delta: &T, ctx: &PrecisionContext) -> Complex<T> {
    let pi = T::pi(ctx);
    let order = SERIES_ORDER + 1;
    let zero = || Complex::<T>::zero(ctx);
    // N(y) = (√2/2) [e^{φ+(y)} + e^{φ-(y)}] - θ with φ±(y) = -πi/8 ± iπy/2 - πiy²/2.
    let mut numer = vec![zero(); order];
    for sign in [1.0, -1.0] {
        let phi0 = -(pi.clone().scale(0.125))
            + &(pi.clone() * center).scale(0.5 * sign)
            - &(pi.clone() * &center.sqr()).scale(0.5);
        let phi1 = (pi.clone()).scale(0.5 * sign) - &(pi.clone() * center);
        let phi2 = -(pi.clone().scale(0.5));
        let base = Complex::new(phi0.zero_like(), phi0).exp();
        let mut g = vec![zero(); order];
        g[1] = Complex::new(phi1.zero_like(), phi1);
        g[2] = Complex::new(phi2.zero_like(), phi2);
        for (acc, c) in numer.iter_mut().zip(series_exp(&g, ctx)) {
            *acc += c * &base;
        }
    }
    let r = T::from_i64(2, ctx).sqrt().scale(0.5);
    let mut numer: Vec<Complex<T>> = numer.into_iter().map(|c| c.scale(&r)).collect();
    numer[0] -= theta(ctx);
    // cos(π(y0 + δ)) = -sin(π y0) sin(πδ), and sin(π y0) = ±1.
    let sign = if center.is_negative() { 1.0 } else { -1.0 };
    let mut denom = vec![zero(); order];
    let mut term = pi.clone().scale(sign);
    let mut fact = 1i64;
    for k in (1..order).step_by(2) {
        denom[k] = Complex::from_real(term.clone() / T::from_i64(fact, ctx));
        term = -(term * &pi.sqr());
        fact *= ((k + 1) * (k + 2)) as i64;
    }
    // Both series vanish at δ = 0: divide each by δ before forming the quotient.
    let q = series_div(&numer[1..], &denom[1..]);
    let mut acc = zero();
    let mut pow = T::from_i64(1, ctx);
    for c in q.iter() {
        acc += c.scale(&pow);
        pow = pow * delta;
    }
    acc
}

/// `mu_k = H(y_k)` for `k <= 2p`; the upper half mirrors the lower half.
pub fn moments<T: Real>(p: usize, ctx: &PrecisionContext) -> MomentTable<T> {
    let n = 4 * p + 2;
    let y: Vec<T> = (0..n).map(|k| node(k, p, ctx)).collect();
    let mut mu: Vec<Complex<T>> = y[..=2 * p].iter().map(|yk| mordell_h(yk, ctx)).collect();
    for k in (2 * p + 1)..n {
        let mirrored = mu[n - 1 - k].clone();
        mu.push(mirrored);
    }
    MomentTable { p, mu, y }
}
