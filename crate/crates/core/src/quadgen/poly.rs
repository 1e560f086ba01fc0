//! Monic polynomials over the complex numbers and the orthogonal family
//! of the moment functional `L[x^k] = mu_k`.

use crate::complex::Complex;
use crate::error::{Result, ZetaError};
use crate::precision::PrecisionContext;
use crate::scalar::Real;

use super::mordell::MomentTable;
use super::tolerance;

/// Coefficients in increasing degree; `coeffs[degree]` is the leading one.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPolynomial<T> {
    pub coeffs: Vec<Complex<T>>,
}

impl<T: Real> ComplexPolynomial<T> {
    pub fn new(coeffs: Vec<Complex<T>>) -> Self {
        assert!(!coeffs.is_empty(), "polynomial needs at least one coefficient");
        Self { coeffs }
    }

    /// Builds `prod (x - r)`.
    pub fn from_roots(roots: &[Complex<T>], ctx: &PrecisionContext) -> Self {
        let mut p = Self::new(vec![Complex::one(ctx)]);
        for r in roots {
            p = p.mul_linear(r);
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        let lead = &self.coeffs[self.degree()];
        lead.re == lead.re.one_like() && lead.im.is_zero()
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &Complex<T>) -> Complex<T> {
        let mut acc = self.coeffs[self.degree()].clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc * z + c;
        }
        acc
    }

    /// `(P(z), P'(z))` in one Horner pass.
    pub fn eval_with_deriv(&self, z: &Complex<T>) -> (Complex<T>, Complex<T>) {
        let mut val = self.coeffs[self.degree()].clone();
        let mut der = val.zero_like();
        for c in self.coeffs.iter().rev().skip(1) {
            der = der * z + &val;
            val = val * z + c;
        }
        (val, der)
    }

    /// `Σ |c_k| |z|^k`, the magnitude scale of rounding in `eval(z)`.
    pub fn abs_scale(&self, z: &Complex<T>) -> T {
        let r = z.abs();
        let mut acc = self.coeffs[self.degree()].abs();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc * &r + c.abs();
        }
        acc
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> T {
        let mut acc = self.coeffs[0].re.zero_like();
        for c in &self.coeffs {
            acc += c.norm_sqr();
        }
        acc.sqrt()
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::new(vec![self.coeffs[0].zero_like()]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&c.re.like(k as f64)))
            .collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b;
            }
        }
        Self::new(out)
    }

    /// `(x - r) P(x)`
    pub fn mul_linear(&self, r: &Complex<T>) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= c.clone() * r;
        }
        Self::new(out)
    }

    fn axpy(&self, a: &Complex<T>, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.coeffs[0].zero_like();
        let coeffs = (0..n)
            .map(|k| {
                let mut v = self.coeffs.get(k).cloned().unwrap_or_else(|| zero.clone());
                if let Some(c) = other.coeffs.get(k) {
                    v += c.clone() * a;
                }
                v
            })
            .collect();
        Self::new(coeffs)
    }
}

/// `L[Q] = Σ q_k mu_k`. Panics if `Q` has degree beyond the moment table.
pub fn apply_functional<T: Real>(q: &ComplexPolynomial<T>, mu: &[Complex<T>]) -> Complex<T> {
    assert!(q.degree() < mu.len(), "degree {} exceeds moment table", q.degree());
    let mut acc = mu[0].zero_like();
    for (c, m) in q.coeffs.iter().zip(mu) {
        acc += c.clone() * m;
    }
    acc
}

/// Output of the three-term recurrence.
#[derive(Clone, Debug)]
pub struct OrthogonalSystem<T> {
    /// `P_0 .. P_m`
    pub polys: Vec<ComplexPolynomial<T>>,
    pub a: Vec<Complex<T>>,
    pub b: Vec<Complex<T>>,
    /// `L[P_n^2]` for `n = 0 .. m-1`
    pub norms: Vec<Complex<T>>,
}

/// Monic orthogonal polynomials `P_0 .. P_m`, `m = 2p + 1`, from
/// `P_{n+1} = (x - a_n) P_n - b_n P_{n-1}`.
pub fn orthogonal_polys<T: Real>(
    moments: &MomentTable<T>,
    ctx: &PrecisionContext,
) -> Result<OrthogonalSystem<T>> {
    let m = 2 * moments.p + 1;
    let mu = &moments.mu;
    let tol = tolerance::<T>(ctx.digits() as i32 + ctx.guard() as i32 / 2, ctx);
    let one = ComplexPolynomial::new(vec![Complex::one(ctx)]);
    let mut polys = vec![one];
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    let mut norms: Vec<Complex<T>> = Vec::with_capacity(m);
    for n in 0..m {
        let pn = &polys[n];
        let sq = pn.mul(pn);
        let lsq = apply_functional(&sq, mu);
        if lsq.abs() < tol.clone() * pn.norm().sqr() {
            return Err(ZetaError::Breakdown { degree: n });
        }
        let xsq = sq.mul_linear(&Complex::zero(ctx));
        let an = apply_functional(&xsq, mu) / &lsq;
        let mut next = pn.mul_linear(&an);
        let bn = if n == 0 {
            Complex::zero(ctx)
        } else {
            let bn = lsq.clone() / &norms[n - 1];
            next = next.axpy(&(-bn.clone()), &polys[n - 1]);
            bn
        };
        a.push(an);
        b.push(bn);
        norms.push(lsq);
        polys.push(next);
    }
    Ok(OrthogonalSystem { polys, a, b, norms })
}
