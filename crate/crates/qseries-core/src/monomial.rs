//! Signed monomial arguments sigma * x^d * q^e.
//!
//! These are what the theta/Pochhammer/Appell/double-sum builders take as
//! arguments; specializations like x^{-1}q^2, -x^{2t-1} or q^s x^{2t} are
//! all values of this type.

use std::fmt;
use std::ops::Neg;

use crate::scale::{qexp, QExp};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// sigma^n.
    pub fn pow(self, n: i64) -> Sign {
        if n.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            self
        }
    }

    /// The sign of (-1)^n.
    pub fn of_parity(n: i64) -> Sign {
        if n.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// sigma * x^d * q^e with sigma in {+1,-1}, d an integer, e a lattice point.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialArg {
    pub sign: Sign,
    pub x_deg: i64,
    pub q_exp: QExp,
}

impl MonomialArg {
    pub fn new(sign: Sign, x_deg: i64, q_exp: QExp) -> Self {
        MonomialArg { sign, x_deg, q_exp }
    }

    /// q^e.
    pub fn q_pow(e: QExp) -> Self {
        MonomialArg::new(Sign::Plus, 0, e)
    }

    /// The variable x.
    pub fn x() -> Self {
        MonomialArg::new(Sign::Plus, 1, qexp(0))
    }

    /// sigma * x^d * q^e with integer e.
    pub fn of(sign: Sign, x_deg: i64, e: i64) -> Self {
        MonomialArg::new(sign, x_deg, qexp(e))
    }

    /// Multiplicative inverse: sigma * x^{-d} * q^{-e}.
    pub fn inv(&self) -> Self {
        MonomialArg::new(self.sign, -self.x_deg, -self.q_exp)
    }

    pub fn times(&self, other: &MonomialArg) -> Self {
        MonomialArg::new(
            self.sign * other.sign,
            self.x_deg + other.x_deg,
            self.q_exp + other.q_exp,
        )
    }

    pub fn times_q(&self, e: QExp) -> Self {
        MonomialArg::new(self.sign, self.x_deg, self.q_exp + e)
    }

    pub fn negated(&self) -> Self {
        MonomialArg::new(-self.sign, self.x_deg, self.q_exp)
    }

    /// n-th power (n may be negative).
    pub fn pow(&self, n: i64) -> Self {
        MonomialArg::new(self.sign.pow(n), self.x_deg * n, self.q_exp * qexp(n))
    }

    /// True for the constant +1 (the one non-expandable denominator).
    pub fn is_one(&self) -> bool {
        self.sign == Sign::Plus && self.x_deg == 0 && self.q_exp == qexp(0)
    }
}

impl fmt::Display for MonomialArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Minus {
            write!(f, "-")?;
        }
        let mut printed = false;
        if self.x_deg != 0 {
            write!(f, "x^{}", self.x_deg)?;
            printed = true;
        }
        if self.q_exp != qexp(0) {
            if printed {
                write!(f, "*")?;
            }
            write!(f, "q^{}", self.q_exp)?;
            printed = true;
        }
        if !printed {
            write!(f, "1")?;
        }
        Ok(())
    }
}
