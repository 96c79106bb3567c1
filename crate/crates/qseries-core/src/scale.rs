//! The q-exponent lattice (1/D)*Z.
//!
//! Every series fixes one scale D >= 1; all its exponents are integers once
//! multiplied by D. Fractional lattices carry objects like q^(1/24) or
//! q^(r^2/24); most computations run on D = 1 or D = 2 for speed.

use crate::error::{Error, Result};
use num_integer::Integer;

/// An exact rational exponent. Small by construction (exponents of the
/// objects we build stay far from the i64 range).
pub type QExp = num_rational::Rational64;

/// Shorthand for an integer exponent.
pub fn qexp(n: i64) -> QExp {
    QExp::from_integer(n)
}

/// Shorthand for the exponent n/d.
pub fn qexp_frac(n: i64, d: i64) -> QExp {
    QExp::new(n, d)
}

/// Denominator of the global exponent lattice (1/D)*Z.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpScale {
    denom: i64,
}

impl ExpScale {
    pub fn new(denom: i64) -> Self {
        assert!(denom >= 1, "exponent scale must be >= 1, got {denom}");
        ExpScale { denom }
    }

    /// The integer lattice Z.
    pub fn unit() -> Self {
        ExpScale { denom: 1 }
    }

    pub fn denominator(&self) -> i64 {
        self.denom
    }

    /// Scaled numerator of `e` on this lattice, or ScaleMismatch if `e*D`
    /// is not an integer.
    pub fn scaled(&self, e: QExp) -> Result<i64> {
        let d = *e.denom();
        if self.denom % d != 0 {
            return Err(Error::ScaleMismatch(format!(
                "exponent {e} does not lie on the (1/{})-lattice",
                self.denom
            )));
        }
        e.numer()
            .checked_mul(self.denom / d)
            .ok_or_else(|| Error::Overflow(format!("scaling exponent {e} by {}", self.denom)))
    }

    /// The exact exponent represented by a scaled numerator.
    pub fn to_exp(&self, e_num: i64) -> QExp {
        QExp::new(e_num, self.denom)
    }

    /// The coarsest common refinement of two lattices.
    pub fn lcm(&self, other: &ExpScale) -> ExpScale {
        ExpScale::new(self.denom.lcm(&other.denom))
    }

    /// True if every point of this lattice lies on `finer`.
    pub fn divides(&self, finer: &ExpScale) -> bool {
        finer.denom % self.denom == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_round_trip() {
        let s = ExpScale::new(24);
        assert_eq!(s.scaled(qexp_frac(1, 8)).unwrap(), 3);
        assert_eq!(s.to_exp(3), qexp_frac(1, 8));
        assert!(s.scaled(qexp_frac(1, 5)).is_err());
    }

    #[test]
    fn lcm_and_divides() {
        let a = ExpScale::new(8);
        let b = ExpScale::new(12);
        assert_eq!(a.lcm(&b).denominator(), 24);
        assert!(a.divides(&ExpScale::new(24)));
        assert!(!ExpScale::new(24).divides(&a));
    }
}
