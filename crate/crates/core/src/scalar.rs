//! Real scalar abstraction.
//!
//! Every algorithm in the crate is written against [`Real`]. Hardware floats
//! get it through a blanket impl over [`num_traits::Float`]; [`MpFloat`] wraps
//! an MPFR float whose precision is taken from the [`PrecisionContext`] that
//! created it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{
    Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign,
};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use rug::float::Constant;

use crate::precision::PrecisionContext;

pub trait Real:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
{
    /// Decimal digits this type really carries when asked to work at `ctx`.
    fn carried_digits(ctx: &PrecisionContext) -> u32;

    /// Distinguishes cached per-precision tables; constant for fixed-width types.
    fn precision_key(ctx: &PrecisionContext) -> u32;

    fn from_f64(v: f64, ctx: &PrecisionContext) -> Self;
    fn from_i64(v: i64, ctx: &PrecisionContext) -> Self;

    /// Correctly rounded conversion of a decimal string (never via `f64`).
    fn parse_decimal(s: &str, ctx: &PrecisionContext) -> Option<Self>;

    fn pi(ctx: &PrecisionContext) -> Self;

    /// `10^e`. Fixed-width types saturate at their smallest normal value.
    fn pow10(e: i32, ctx: &PrecisionContext) -> Self;

    /// Re-rounds `self` to the precision of `ctx`.
    fn at_ctx(&self, ctx: &PrecisionContext) -> Self;

    /// The constant `v` at the precision of `self`.
    fn like(&self, v: f64) -> Self;

    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn sin_cos(&self) -> (Self, Self);
    fn sinh_cosh(&self) -> (Self, Self);
    fn atan2(&self, x: &Self) -> Self;
    fn abs(&self) -> Self;
    fn floor(&self) -> Self;

    fn to_f64(&self) -> f64;
    /// Exact widening to an [`MpFloat`] at `ctx` (rounded only if `ctx` is coarser).
    fn to_mp(&self, ctx: &PrecisionContext) -> MpFloat;
    /// Nearest value of this type to `x`.
    fn from_mp(x: &MpFloat, ctx: &PrecisionContext) -> Self;
    /// `log10 |self|`, valid far outside the `f64` exponent range.
    fn log10_abs(&self) -> f64;
    fn is_finite(&self) -> bool;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;

    /// Scientific notation with `digits` significant digits, e.g. `2.35e-1`.
    fn to_sci_string(&self, digits: usize) -> String;

    fn zero_like(&self) -> Self {
        self.like(0.0)
    }

    fn one_like(&self) -> Self {
        self.like(1.0)
    }

    fn sqr(&self) -> Self {
        self.clone() * self
    }

    fn scale(self, v: f64) -> Self {
        let c = self.like(v);
        self * c
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Floor as an integer when it fits exactly in `i64`.
    fn floor_i64(&self) -> Option<i64> {
        let f = self.floor().to_f64();
        if f.is_finite() && f.abs() < 9.0e15 {
            Some(f as i64)
        } else {
            None
        }
    }
}

impl<F> Real for F
where
    F: Float
        + FloatConst
        + FromPrimitive
        + fmt::Debug
        + fmt::Display
        + fmt::LowerExp
        + Send
        + Sync
        + 'static
        + for<'a> Add<&'a F, Output = F>
        + for<'a> Sub<&'a F, Output = F>
        + for<'a> Mul<&'a F, Output = F>
        + for<'a> Div<&'a F, Output = F>
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + for<'a> AddAssign<&'a F>
        + for<'a> SubAssign<&'a F>
        + for<'a> MulAssign<&'a F>
        + for<'a> DivAssign<&'a F>,
{
    fn carried_digits(_ctx: &PrecisionContext) -> u32 {
        (-F::epsilon().log10().to_f64().unwrap_or(15.0)).floor() as u32
    }

    fn precision_key(_ctx: &PrecisionContext) -> u32 {
        0
    }

    fn from_f64(v: f64, _ctx: &PrecisionContext) -> Self {
        F::from_f64(v).unwrap_or_else(F::nan)
    }

    fn from_i64(v: i64, _ctx: &PrecisionContext) -> Self {
        F::from_i64(v).unwrap_or_else(F::nan)
    }

    fn parse_decimal(s: &str, _ctx: &PrecisionContext) -> Option<Self> {
        s.trim().parse::<f64>().ok().and_then(F::from_f64)
    }

    fn pi(_ctx: &PrecisionContext) -> Self {
        F::PI()
    }

    fn pow10(e: i32, _ctx: &PrecisionContext) -> Self {
        let v = F::from_f64(10f64.powi(e)).unwrap_or_else(F::zero);
        if v < F::min_positive_value() {
            F::min_positive_value()
        } else {
            v
        }
    }

    fn at_ctx(&self, _ctx: &PrecisionContext) -> Self {
        *self
    }

    fn like(&self, v: f64) -> Self {
        F::from_f64(v).unwrap_or_else(F::nan)
    }

    fn exp(&self) -> Self {
        Float::exp(*self)
    }

    fn ln(&self) -> Self {
        Float::ln(*self)
    }

    fn sqrt(&self) -> Self {
        Float::sqrt(*self)
    }

    fn sin_cos(&self) -> (Self, Self) {
        Float::sin_cos(*self)
    }

    fn sinh_cosh(&self) -> (Self, Self) {
        (Float::sinh(*self), Float::cosh(*self))
    }

    fn atan2(&self, x: &Self) -> Self {
        Float::atan2(*self, *x)
    }

    fn abs(&self) -> Self {
        Float::abs(*self)
    }

    fn floor(&self) -> Self {
        Float::floor(*self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_mp(&self, ctx: &PrecisionContext) -> MpFloat {
        MpFloat::from_f64(Real::to_f64(self), ctx)
    }

    fn from_mp(x: &MpFloat, _ctx: &PrecisionContext) -> Self {
        F::from_f64(x.to_f64()).unwrap_or_else(F::nan)
    }

    fn log10_abs(&self) -> f64 {
        Real::to_f64(self).abs().log10()
    }

    fn is_finite(&self) -> bool {
        Float::is_finite(*self)
    }

    fn is_zero(&self) -> bool {
        *self == F::zero()
    }

    fn is_negative(&self) -> bool {
        *self < F::zero()
    }

    fn to_sci_string(&self, digits: usize) -> String {
        format!("{:.*e}", digits.max(1) - 1, self)
    }
}

/// MPFR-backed real number.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct MpFloat(pub rug::Float);

impl MpFloat {
    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    fn with_prec_of(&self, v: f64) -> Self {
        MpFloat(rug::Float::with_val(self.0.prec(), v))
    }
}

impl fmt::Debug for MpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MpFloat({})", self.to_sci_string(25))
    }
}

impl fmt::Display for MpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .unwrap_or(((f64::from(self.0.prec()) / std::f64::consts::LOG2_10) as usize).max(1));
        f.write_str(&self.to_sci_string(digits))
    }
}

macro_rules! mp_binop {
    ($tr:ident, $method:ident, $atr:ident, $amethod:ident) => {
        impl $tr for MpFloat {
            type Output = MpFloat;
            #[inline]
            fn $method(self, rhs: MpFloat) -> MpFloat {
                MpFloat($tr::$method(self.0, rhs.0))
            }
        }
        impl<'a> $tr<&'a MpFloat> for MpFloat {
            type Output = MpFloat;
            #[inline]
            fn $method(self, rhs: &'a MpFloat) -> MpFloat {
                MpFloat($tr::$method(self.0, &rhs.0))
            }
        }
        impl $atr for MpFloat {
            #[inline]
            fn $amethod(&mut self, rhs: MpFloat) {
                $atr::$amethod(&mut self.0, rhs.0);
            }
        }
        impl<'a> $atr<&'a MpFloat> for MpFloat {
            #[inline]
            fn $amethod(&mut self, rhs: &'a MpFloat) {
                $atr::$amethod(&mut self.0, &rhs.0);
            }
        }
    };
}

mp_binop!(Add, add, AddAssign, add_assign);
mp_binop!(Sub, sub, SubAssign, sub_assign);
mp_binop!(Mul, mul, MulAssign, mul_assign);
mp_binop!(Div, div, DivAssign, div_assign);

impl Neg for MpFloat {
    type Output = MpFloat;
    fn neg(self) -> MpFloat {
        MpFloat(-self.0)
    }
}

impl Real for MpFloat {
    fn carried_digits(ctx: &PrecisionContext) -> u32 {
        ctx.work_digits()
    }

    fn precision_key(ctx: &PrecisionContext) -> u32 {
        ctx.bits()
    }

    fn from_f64(v: f64, ctx: &PrecisionContext) -> Self {
        MpFloat(rug::Float::with_val(ctx.bits(), v))
    }

    fn from_i64(v: i64, ctx: &PrecisionContext) -> Self {
        MpFloat(rug::Float::with_val(ctx.bits(), v))
    }

    fn parse_decimal(s: &str, ctx: &PrecisionContext) -> Option<Self> {
        let parsed = rug::Float::parse(s.trim()).ok()?;
        let v = rug::Float::with_val(ctx.bits(), parsed);
        v.is_finite().then_some(MpFloat(v))
    }

    fn pi(ctx: &PrecisionContext) -> Self {
        MpFloat(rug::Float::with_val(ctx.bits(), Constant::Pi))
    }

    fn pow10(e: i32, ctx: &PrecisionContext) -> Self {
        Self::parse_decimal(&format!("1e{e}"), ctx).expect("power of ten is representable")
    }

    fn at_ctx(&self, ctx: &PrecisionContext) -> Self {
        MpFloat(rug::Float::with_val(ctx.bits(), &self.0))
    }

    fn like(&self, v: f64) -> Self {
        self.with_prec_of(v)
    }

    fn exp(&self) -> Self {
        MpFloat(self.0.clone().exp())
    }

    fn ln(&self) -> Self {
        MpFloat(self.0.clone().ln())
    }

    fn sqrt(&self) -> Self {
        MpFloat(self.0.clone().sqrt())
    }

    fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sin_cos(rug::Float::new(self.0.prec()));
        (MpFloat(s), MpFloat(c))
    }

    fn sinh_cosh(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sinh_cosh(rug::Float::new(self.0.prec()));
        (MpFloat(s), MpFloat(c))
    }

    fn atan2(&self, x: &Self) -> Self {
        MpFloat(self.0.clone().atan2(&x.0))
    }

    fn abs(&self) -> Self {
        MpFloat(self.0.clone().abs())
    }

    fn floor(&self) -> Self {
        MpFloat(self.0.clone().floor())
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    fn to_mp(&self, ctx: &PrecisionContext) -> MpFloat {
        self.at_ctx(ctx)
    }

    fn from_mp(x: &MpFloat, ctx: &PrecisionContext) -> Self {
        x.at_ctx(ctx)
    }

    fn log10_abs(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        if !self.0.is_finite() {
            return f64::INFINITY;
        }
        let (m, e) = self.0.to_f64_exp();
        m.abs().log10() + f64::from(e) * std::f64::consts::LOG10_2
    }

    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_negative(&self) -> bool {
        self.0.cmp0() == Some(Ordering::Less)
    }

    fn to_sci_string(&self, digits: usize) -> String {
        let digits = digits.max(1);
        let (neg, mantissa, exp) = self.0.to_sign_string_exp(10, Some(digits));
        let sign = if neg { "-" } else { "" };
        match exp {
            Some(exp) => {
                let (lead, rest) = mantissa.split_at(1);
                if rest.is_empty() {
                    format!("{sign}{lead}e{}", exp - 1)
                } else {
                    format!("{sign}{lead}.{rest}e{}", exp - 1)
                }
            }
            None if self.0.is_zero() => {
                if digits > 1 {
                    format!("{sign}0.{}e0", "0".repeat(digits - 1))
                } else {
                    format!("{sign}0e0")
                }
            }
            None => format!("{sign}{mantissa}"),
        }
    }
}
