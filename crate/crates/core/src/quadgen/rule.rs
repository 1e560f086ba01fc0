//! Gaussian weights, the map to `(omega, lambda)` and the interpolant
//! `H_p` used to validate a rule.

use crate::complex::Complex;
use crate::error::{Result, ZetaError};
use crate::precision::PrecisionContext;
use crate::scalar::Real;

use super::mordell::{mordell_h, node, theta, MomentTable};
use super::poly::{apply_functional, ComplexPolynomial};
use super::tolerance;

/// Nodes and weights of `Σ u_j z_j^k = mu_k`, stored for `j = -p ..= p`.
#[derive(Clone, Debug)]
pub struct RawQuadSolution<T> {
    pub p: usize,
    pub z: Vec<Complex<T>>,
    pub u: Vec<Complex<T>>,
    /// `max_j |u_{-j} - u_j z_j^(4p+1)|`
    pub reciprocity_defect: T,
    /// `max_k |Σ_j u_j z_j^k - mu_k|`
    pub moment_defect: T,
}

impl<T: Real> RawQuadSolution<T> {
    pub fn z_at(&self, j: isize) -> &Complex<T> {
        &self.z[(j + self.p as isize) as usize]
    }

    pub fn u_at(&self, j: isize) -> &Complex<T> {
        &self.u[(j + self.p as isize) as usize]
    }
}

/// `omega_0`, `omega_1..p`, `lambda_1..p` of
/// `I_{M,p}(s) = omega_0 M^{-s} + Σ omega_j [...]`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule<T> {
    pub p: usize,
    pub omega0: Complex<T>,
    pub omega: Vec<Complex<T>>,
    pub lambda: Vec<Complex<T>>,
    /// Decimal digits the coefficients are meant to be correct to.
    pub gen_digits: u32,
    /// Interpolation defect from [`validate_rule`], once computed.
    pub residual: Option<T>,
}

impl<T: Real> QuadratureRule<T> {
    pub fn new(
        omega0: Complex<T>,
        omega: Vec<Complex<T>>,
        lambda: Vec<Complex<T>>,
        gen_digits: u32,
    ) -> Result<Self> {
        if omega.is_empty() || omega.len() != lambda.len() {
            return Err(ZetaError::InvalidArgument(format!(
                "rule needs p >= 1 omegas and as many lambdas, got {} and {}",
                omega.len(),
                lambda.len()
            )));
        }
        Ok(Self { p: omega.len(), omega0, omega, lambda, gen_digits, residual: None })
    }

    /// Re-rounds every coefficient to the precision of `ctx`.
    pub fn at_ctx(&self, ctx: &PrecisionContext) -> Self {
        Self {
            p: self.p,
            omega0: self.omega0.at_ctx(ctx),
            omega: self.omega.iter().map(|w| w.at_ctx(ctx)).collect(),
            lambda: self.lambda.iter().map(|l| l.at_ctx(ctx)).collect(),
            gen_digits: self.gen_digits,
            residual: self.residual.as_ref().map(|r| r.at_ctx(ctx)),
        }
    }

    /// The same rule in another scalar type, through its decimal expansion.
    pub fn cast<U: Real>(&self, ctx: &PrecisionContext) -> QuadratureRule<U> {
        let digits = T::carried_digits(ctx).max(self.gen_digits) as usize + 2;
        let re = |x: &T| {
            U::parse_decimal(&x.to_sci_string(digits), ctx).expect("formatted real parses back")
        };
        let c = |z: &Complex<T>| Complex::new(re(&z.re), re(&z.im));
        QuadratureRule {
            p: self.p,
            omega0: c(&self.omega0),
            omega: self.omega.iter().map(c).collect(),
            lambda: self.lambda.iter().map(c).collect(),
            gen_digits: self.gen_digits,
            residual: self.residual.as_ref().map(re),
        }
    }
}

/// `u_j = L[P_{m-1}^2] / (P_{m-1}(z_j) P_m'(z_j))` for the ordered roots.
pub fn quad_weights<T: Real>(
    pm: &ComplexPolynomial<T>,
    pm1: &ComplexPolynomial<T>,
    z: Vec<Complex<T>>,
    moments: &MomentTable<T>,
    ctx: &PrecisionContext,
) -> Result<RawQuadSolution<T>> {
    let p = moments.p;
    if z.len() != 2 * p + 1 {
        return Err(ZetaError::InvalidArgument(format!(
            "expected {} nodes, got {}",
            2 * p + 1,
            z.len()
        )));
    }
    let norm = apply_functional(&pm1.mul(pm1), &moments.mu);
    let tiny = tolerance::<T>(ctx.digits() as i32, ctx);
    let mut u = Vec::with_capacity(z.len());
    for (i, zj) in z.iter().enumerate() {
        let index = i as isize - p as isize;
        let a = pm1.eval(zj);
        let (_, d) = pm.eval_with_deriv(zj);
        if a.abs() <= tiny.clone() * pm1.abs_scale(zj)
            || d.abs() <= tiny.clone() * pm.derivative().abs_scale(zj)
        {
            return Err(ZetaError::ZeroDivisor { index });
        }
        u.push(norm.clone() / &(a * &d));
    }
    let n = 4 * p + 1;
    let mut reciprocity_defect = tiny.zero_like();
    for j in 1..=p {
        let lhs = &u[p - j];
        let rhs = u[p + j].clone() * &z[p + j].powi(n as u32);
        reciprocity_defect = reciprocity_defect.max_of((rhs - lhs).abs());
    }
    let mut moment_defect = tiny.zero_like();
    let mut pows: Vec<Complex<T>> = z.iter().map(|zj| zj.like(1.0, 0.0)).collect();
    for mu in &moments.mu {
        let mut acc = mu.zero_like();
        for (uj, pw) in u.iter().zip(&pows) {
            acc += uj.clone() * pw;
        }
        moment_defect = moment_defect.max_of((acc - mu).abs());
        for (pw, zj) in pows.iter_mut().zip(&z) {
            *pw *= zj;
        }
    }
    Ok(RawQuadSolution { p, z, u, reciprocity_defect, moment_defect })
}

/// `lambda_j = (4p+1)/(4π) log z_j`, `x_j = lambda_j / θ`,
/// `omega_j = u_j exp(π x_j² + 2πθ x_j)`, `omega_0 = u_0`.
pub fn convert_to_rule<T: Real>(
    sol: &RawQuadSolution<T>,
    gen_digits: u32,
    ctx: &PrecisionContext,
) -> Result<QuadratureRule<T>> {
    let p = sol.p;
    let pi = T::pi(ctx);
    let th = theta::<T>(ctx);
    let factor = T::from_i64(4 * p as i64 + 1, ctx) / (pi.clone().scale(4.0));
    let mut omega = Vec::with_capacity(p);
    let mut lambda = Vec::with_capacity(p);
    for j in 1..=p {
        let zj = sol.z_at(j as isize);
        let log = zj.ln();
        if log.im <= -pi.clone() || log.im > pi {
            return Err(ZetaError::Branch { index: j });
        }
        let lam = log.scale(&factor);
        let x = lam.clone() / &th;
        let expo = (x.clone() * &x).scale(&pi) + (th.clone() * &x).scale(&pi.clone().scale(2.0));
        omega.push(sol.u_at(j as isize).clone() * &expo.exp());
        lambda.push(lam);
    }
    QuadratureRule::new(sol.u_at(0).clone(), omega, lambda, gen_digits)
}

/// `H_p(y) = omega_0 + 2 Σ omega_j exp(-πi lambda_j²) cosh(2π lambda_j y)`.
pub fn h_p<T: Real>(y: &T, rule: &QuadratureRule<T>, ctx: &PrecisionContext) -> Complex<T> {
    let pi = T::pi(ctx);
    let two_pi_y = pi.clone().scale(2.0) * y;
    let mut acc = Complex::zero(ctx);
    for (w, lam) in rule.omega.iter().zip(&rule.lambda) {
        let gauss = (lam.clone() * lam).mul_i().scale(&pi);
        let c = lam.scale(&two_pi_y).cosh();
        acc += w.clone() * &(-gauss).exp() * &c;
    }
    acc.scale_f64(2.0) + &rule.omega0.at_ctx(ctx)
}

/// `max_k |H_p(y_k) - H(y_k)|` over the `4p + 2` moment nodes, also stored
/// as the rule's residual.
pub fn validate_rule<T: Real>(rule: &mut QuadratureRule<T>, ctx: &PrecisionContext) -> T {
    let p = rule.p;
    let mut worst = T::from_i64(0, ctx);
    for k in 0..(4 * p + 2) {
        let y: T = node(k, p, ctx);
        let d = (h_p(&y, rule, ctx) - &mordell_h(&y, ctx)).abs();
        worst = worst.max_of(d);
    }
    rule.residual = Some(worst.clone());
    worst
}
