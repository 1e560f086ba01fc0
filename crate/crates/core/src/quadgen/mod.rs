//! Generation of the coefficients `omega_{p,j}`, `lambda_{p,j}`.
//!
//! The pipeline is moments of the Mordell integral, monic orthogonal
//! polynomials of the moment functional, roots of `P_{2p+1}` paired as
//! `(z, 1/z)`, Gaussian weights, and finally the exponential change of
//! variables back to `(omega, lambda)`. The moment-to-weights map is badly
//! conditioned, so everything runs at roughly `2.5 D + 2p` digits for a
//! `D`-digit rule.

mod coeff_file;
mod mordell;
mod poly;
mod roots;
mod rule;

pub use coeff_file::{parse_rule, serialize_rule, MAGIC};
pub use mordell::{moments, mordell_h, node, theta, MomentTable};
pub use poly::{apply_functional, orthogonal_polys, ComplexPolynomial, OrthogonalSystem};
pub use roots::{pair_and_order_roots, poly_roots};
pub use rule::{convert_to_rule, h_p, quad_weights, validate_rule, QuadratureRule, RawQuadSolution};

use crate::error::{Result, ZetaError};
use crate::precision::PrecisionContext;
use crate::scalar::{MpFloat, Real};

/// Largest `p` accepted by [`generate_rule`].
pub const MAX_P: usize = 150;

const RETRIES: usize = 3;

/// `10^-want`, clamped to what `T` can resolve at `ctx`.
pub(crate) fn tolerance<T: Real>(want: i32, ctx: &PrecisionContext) -> T {
    let carried = T::carried_digits(ctx) as i32 - 1;
    T::pow10(-want.min(carried), ctx)
}

/// Working digits for a `digits`-digit rule of order `p`.
pub fn generation_digits(p: usize, digits: u32) -> u32 {
    (2.5 * f64::from(digits)).ceil() as u32 + 2 * p as u32
}

/// Runs the whole pipeline once at the working precision `work`.
pub fn generate_rule_at<T: Real>(
    p: usize,
    digits: u32,
    work: &PrecisionContext,
) -> Result<(QuadratureRule<T>, RawQuadSolution<T>)> {
    let mt = moments::<T>(p, work);
    let sys = orthogonal_polys(&mt, work)?;
    let m = 2 * p + 1;
    let roots = poly_roots(&sys.polys[m], work)?;
    let z = pair_and_order_roots(&roots, work)?;
    let sol = quad_weights(&sys.polys[m], &sys.polys[m - 1], z, &mt, work)?;
    let rule = convert_to_rule(&sol, digits, work)?;
    Ok((rule, sol))
}

/// A validated `digits`-digit rule of order `p`.
///
/// Breakdown, non-convergence, multiplicity and pairing failures, as well as
/// a residual above `10^-digits`, trigger a retry at 1.5 times the working
/// precision. The returned coefficients are rounded to `digits` plus the
/// default guard.
pub fn generate_rule(p: usize, digits: u32) -> Result<QuadratureRule<MpFloat>> {
    if p == 0 || p > MAX_P {
        return Err(ZetaError::InvalidArgument(format!("p must lie in 1..={MAX_P}, got {p}")));
    }
    if digits == 0 {
        return Err(ZetaError::InvalidArgument("digits must be positive".into()));
    }
    let target = PrecisionContext::new(digits);
    let limit = MpFloat::pow10(-(digits as i32), &target);
    let mut work_digits = generation_digits(p, digits);
    let mut last_err = None;
    let mut best: Option<QuadratureRule<MpFloat>> = None;
    for _ in 0..RETRIES {
        let work = PrecisionContext::new(work_digits);
        match generate_rule_at::<MpFloat>(p, digits, &work) {
            Ok((rule, _)) => {
                let mut rule = rule.at_ctx(&target);
                let res = validate_rule(&mut rule, &target);
                if res <= limit {
                    return Ok(rule);
                }
                best = Some(rule);
            }
            Err(
                e @ (ZetaError::Breakdown { .. }
                | ZetaError::NonConvergence { .. }
                | ZetaError::Multiplicity { .. }
                | ZetaError::Pairing(_)),
            ) => last_err = Some(e),
            Err(e) => return Err(e),
        }
        work_digits = (f64::from(work_digits) * 1.5).ceil() as u32;
    }
    match (best, last_err) {
        (Some(rule), _) => Ok(rule),
        (None, Some(e)) => Err(e),
        (None, None) => unreachable!("loop ran at least once"),
    }
}
