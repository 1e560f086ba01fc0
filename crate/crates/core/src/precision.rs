//! Working-precision bookkeeping shared by every numeric routine.

use crate::error::{Result, ZetaError};

/// Smallest guard allowed on top of the requested digits.
pub const MIN_GUARD: u32 = 10;

/// Requested decimal digits plus the guard digits every computation carries.
///
/// Results are meant to be trusted to `digits`; all intermediate work is
/// carried at `digits + guard`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    digits: u32,
    guard: u32,
}

impl PrecisionContext {
    /// Context with the default guard `0.2 * digits + 15`.
    pub fn new(digits: u32) -> Self {
        let digits = digits.max(1);
        Self {
            digits,
            guard: default_guard(digits),
        }
    }

    pub fn with_guard(digits: u32, guard: u32) -> Result<Self> {
        if digits == 0 {
            return Err(ZetaError::InvalidArgument(
                "precision must be at least one digit".into(),
            ));
        }
        if guard < MIN_GUARD {
            return Err(ZetaError::InvalidArgument(format!(
                "guard digits must be >= {MIN_GUARD}, got {guard}"
            )));
        }
        Ok(Self { digits, guard })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    /// Decimal digits actually carried by intermediate results.
    pub fn work_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Binary precision matching [`Self::work_digits`].
    pub fn bits(&self) -> u32 {
        (f64::from(self.work_digits()) * std::f64::consts::LOG2_10).ceil() as u32 + 8
    }

    /// Same guard policy, different target.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self::new(digits)
    }

    /// A context `extra` digits finer than this one.
    pub fn raised(&self, extra: u32) -> Self {
        Self::new(self.digits + extra)
    }
}

fn default_guard(digits: u32) -> u32 {
    (digits / 5 + 15).max(MIN_GUARD)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_guard_policy() {
        let ctx = PrecisionContext::new(40);
        assert_eq!(ctx.guard(), 23);
        assert_eq!(ctx.work_digits(), 63);
        assert!(ctx.bits() >= 63 * 3);
        assert_eq!(PrecisionContext::new(1).guard(), 15);
    }

    #[test]
    fn guard_floor_enforced() {
        assert!(PrecisionContext::with_guard(30, 9).is_err());
        assert!(PrecisionContext::with_guard(30, 10).is_ok());
        assert!(PrecisionContext::with_guard(0, 10).is_err());
    }
}
