//! Exact rational coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The coefficient ring: arbitrary-precision rationals. Appell denominators
/// can hit 1/(1+1) = 1/2, so integers are not enough; integrality of final
/// identities is asserted, not assumed.
pub type QRat = num_rational::BigRational;

/// Rational from an integer.
pub fn qint(n: i64) -> QRat {
    QRat::from_integer(BigInt::from(n))
}

/// Rational n/d (d != 0), reduced.
pub fn qrat(n: i64, d: i64) -> QRat {
    QRat::new(BigInt::from(n), BigInt::from(d))
}

/// True if the rational is an integer (denominator 1 after reduction).
pub fn is_integer(r: &QRat) -> bool {
    r.denom().is_one()
}

/// Canonical "num/den" rendering, always with the slash, sign on the
/// numerator. This is the coefficient field of the series print format.
pub fn render(r: &QRat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Sign as +1/0/-1.
pub fn signum(r: &QRat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_is_reduced_and_slash_always() {
        assert_eq!(render(&qrat(2, 4)), "1/2");
        assert_eq!(render(&qint(-3)), "-3/1");
        assert_eq!(render(&qrat(1, -2)), "-1/2");
    }

    #[test]
    fn integrality() {
        assert!(is_integer(&qint(7)));
        assert!(!is_integer(&qrat(7, 2)));
    }
}
