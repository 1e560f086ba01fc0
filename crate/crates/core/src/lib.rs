//! High-precision evaluation of the Riemann zeta function and its derivative
//! in vertical strips.
//!
//! The approximation `zeta_p(s)` keeps the Riemann–Siegel main sums and
//! replaces the remainder integral by a `p`-term complex quadrature whose
//! weights `omega` and nodes `lambda` are generated from closed-form Mordell
//! integral moments ([`quadgen`]). A trapezoidal evaluation of the same
//! remainder integral ([`oracle`]) supplies independent reference values,
//! and [`harness`] runs the error sweeps.
//!
//! All numerics are generic over [`Real`]; [`MpFloat`] (MPFR) is the
//! high-precision backend and `f64` runs the same code in hardware precision.

pub mod complex;
pub mod error;
pub mod harness;
pub mod oracle;
pub mod precision;
pub mod quadgen;
pub mod scalar;
pub mod special;
pub mod zeta;

pub use complex::Complex;
pub use error::{Result, ZetaError};
pub use precision::PrecisionContext;
pub use quadgen::{ComplexPolynomial, MomentTable, QuadratureRule, RawQuadSolution};
pub use scalar::{MpFloat, Real};
pub use zeta::EvalResult;

/// Arbitrary-precision complex value.
pub type CValue = Complex<MpFloat>;
/// Hardware double-precision complex value.
pub type CValue64 = Complex<f64>;
/// Quadrature rule stored at arbitrary precision.
pub type RuleMp = QuadratureRule<MpFloat>;
/// Quadrature rule rounded to hardware doubles.
pub type Rule64 = QuadratureRule<f64>;
