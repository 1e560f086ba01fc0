//! Complex numbers over any [`Real`].

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::precision::PrecisionContext;
use crate::scalar::{MpFloat, Real};

#[derive(Clone, PartialEq)]
pub struct Complex<T> {
    pub re: T,
    pub im: T,
}

impl<T: Real> Complex<T> {
    pub fn new(re: T, im: T) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: T) -> Self {
        let im = re.zero_like();
        Self { re, im }
    }

    pub fn from_f64(re: f64, im: f64, ctx: &PrecisionContext) -> Self {
        Self::new(T::from_f64(re, ctx), T::from_f64(im, ctx))
    }

    pub fn zero(ctx: &PrecisionContext) -> Self {
        Self::from_f64(0.0, 0.0, ctx)
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        Self::from_f64(1.0, 0.0, ctx)
    }

    /// `i`
    pub fn i(ctx: &PrecisionContext) -> Self {
        Self::from_f64(0.0, 1.0, ctx)
    }

    /// Parses a pair of decimal strings at full precision.
    pub fn parse(re: &str, im: &str, ctx: &PrecisionContext) -> Option<Self> {
        Some(Self::new(T::parse_decimal(re, ctx)?, T::parse_decimal(im, ctx)?))
    }

    pub fn zero_like(&self) -> Self {
        Self::new(self.re.zero_like(), self.re.zero_like())
    }

    pub fn like(&self, re: f64, im: f64) -> Self {
        Self::new(self.re.like(re), self.re.like(im))
    }

    pub fn at_ctx(&self, ctx: &PrecisionContext) -> Self {
        Self::new(self.re.at_ctx(ctx), self.im.at_ctx(ctx))
    }

    /// Exact widening to MPFR components.
    pub fn to_mp(&self, ctx: &PrecisionContext) -> Complex<MpFloat> {
        Complex::new(self.re.to_mp(ctx), self.im.to_mp(ctx))
    }

    pub fn from_mp(z: &Complex<MpFloat>, ctx: &PrecisionContext) -> Self {
        Self::new(T::from_mp(&z.re, ctx), T::from_mp(&z.im, ctx))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        Self::new(-self.im.clone(), self.re.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.re.clone() * k, self.im.clone() * k)
    }

    pub fn scale_f64(&self, k: f64) -> Self {
        Self::new(self.re.clone().scale(k), self.im.clone().scale(k))
    }

    pub fn norm_sqr(&self) -> T {
        self.re.sqr() + self.im.sqr()
    }

    pub fn abs(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn arg(&self) -> T {
        self.im.atan2(&self.re)
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        Self::new(self.re.clone() / &d, -(self.im.clone() / &d))
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Self::new(c * &m, s * &m)
    }

    /// Principal logarithm, imaginary part in `(-pi, pi]`.
    pub fn ln(&self) -> Self {
        let re = self.norm_sqr().ln().scale(0.5);
        Self::new(re, self.arg())
    }

    /// `self^w = exp(w log self)` on the principal branch.
    pub fn powc(&self, w: &Self) -> Self {
        (w.clone() * self.ln()).exp()
    }

    pub fn sqrt(&self) -> Self {
        if self.re.is_zero() && self.im.is_zero() {
            return self.clone();
        }
        let r = self.abs();
        let half = self.re.like(0.5);
        let a = ((r.clone() + &self.re) * &half).sqrt();
        let b = ((r - &self.re) * &half).sqrt();
        if self.im.is_negative() {
            Self::new(a, -b)
        } else {
            Self::new(a, b)
        }
    }

    pub fn cos(&self) -> Self {
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = self.im.sinh_cosh();
        Self::new(c * &ch, -(s * &sh))
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = self.im.sinh_cosh();
        Self::new(s * &ch, c * &sh)
    }

    pub fn cosh(&self) -> Self {
        self.mul_i().cos()
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, n: u32) -> Self {
        let mut result = self.like(1.0, 0.0);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result *= &base;
            }
            n >>= 1;
            if n > 0 {
                base = base.clone() * &base;
            }
        }
        result
    }

    pub fn to_sci_pair(&self, digits: usize) -> (String, String) {
        (self.re.to_sci_string(digits), self.im.to_sci_string(digits))
    }
}

impl<T: fmt::Debug> fmt::Debug for Complex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.re, self.im)
    }
}

impl<T: fmt::Display> fmt::Display for Complex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.re, self.im)
    }
}

impl<T: Real> Add for Complex<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a, T: Real> Add<&'a Complex<T>> for Complex<T> {
    type Output = Self;
    fn add(self, rhs: &'a Complex<T>) -> Self {
        Self::new(self.re + &rhs.re, self.im + &rhs.im)
    }
}

impl<T: Real> Sub for Complex<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<'a, T: Real> Sub<&'a Complex<T>> for Complex<T> {
    type Output = Self;
    fn sub(self, rhs: &'a Complex<T>) -> Self {
        Self::new(self.re - &rhs.re, self.im - &rhs.im)
    }
}

impl<'a, T: Real> Mul<&'a Complex<T>> for Complex<T> {
    type Output = Self;
    fn mul(self, rhs: &'a Complex<T>) -> Self {
        let ac = self.re.clone() * &rhs.re;
        let bd = self.im.clone() * &rhs.im;
        let ad = self.re * &rhs.im;
        let bc = self.im * &rhs.re;
        Self::new(ac - bd, ad + bc)
    }
}

impl<T: Real> Mul for Complex<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<'a, T: Real> Div<&'a Complex<T>> for Complex<T> {
    type Output = Self;
    fn div(self, rhs: &'a Complex<T>) -> Self {
        let d = rhs.norm_sqr();
        let re = self.re.clone() * &rhs.re + self.im.clone() * &rhs.im;
        let im = self.im * &rhs.re - self.re * &rhs.im;
        Self::new(re / &d, im / &d)
    }
}

impl<T: Real> Div for Complex<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self / &rhs
    }
}

impl<T: Real> Neg for Complex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl<T: Real> AddAssign for Complex<T> {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl<'a, T: Real> AddAssign<&'a Complex<T>> for Complex<T> {
    fn add_assign(&mut self, rhs: &'a Complex<T>) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<T: Real> SubAssign for Complex<T> {
    fn sub_assign(&mut self, rhs: Self) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl<'a, T: Real> SubAssign<&'a Complex<T>> for Complex<T> {
    fn sub_assign(&mut self, rhs: &'a Complex<T>) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl<'a, T: Real> MulAssign<&'a Complex<T>> for Complex<T> {
    fn mul_assign(&mut self, rhs: &'a Complex<T>) {
        let v = self.clone() * rhs;
        *self = v;
    }
}
