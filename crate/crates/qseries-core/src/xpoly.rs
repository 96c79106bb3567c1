//! Laurent polynomials in x with exact rational coefficients.
//!
//! `XPoly` is the coefficient ring of a series: a finite map from x-degree
//! (possibly negative) to a nonzero rational. Zero coefficients are never
//! stored.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::number::{self, QRat};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct XPoly {
    coeffs: BTreeMap<i64, QRat>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly::default()
    }

    pub fn one() -> Self {
        XPoly::monomial(0, number::qint(1))
    }

    pub fn monomial(deg: i64, coeff: QRat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(deg, coeff);
        }
        XPoly { coeffs }
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, QRat)>>(pairs: I) -> Self {
        let mut p = XPoly::zero();
        for (d, c) in pairs {
            p.add_term(d, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient of x^deg (zero when absent).
    pub fn coeff(&self, deg: i64) -> QRat {
        self.coeffs.get(&deg).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&i64, &QRat)> {
        self.coeffs.iter()
    }

    /// If the polynomial is a single monomial, its (degree, coefficient).
    pub fn as_monomial(&self) -> Option<(i64, &QRat)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(d, c)| (*d, c))
        } else {
            None
        }
    }

    /// Accumulate `c` at x^deg, pruning a cancelled entry.
    pub fn add_term(&mut self, deg: i64, c: &QRat) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&deg) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&deg);
                }
            }
            None => {
                self.coeffs.insert(deg, c.clone());
            }
        }
    }

    pub fn add(&self, other: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(*d, c);
        }
        out
    }

    pub fn sub(&self, other: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(*d, &(-c.clone()));
        }
        out
    }

    pub fn neg(&self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c.clone())).collect(),
        }
    }

    pub fn scalar_mul(&self, s: &QRat) -> XPoly {
        if s.is_zero() {
            return XPoly::zero();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, c * s)).collect(),
        }
    }

    /// Multiply by s*x^deg.
    pub fn mul_monomial(&self, deg: i64, s: &QRat) -> XPoly {
        if s.is_zero() {
            return XPoly::zero();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (d + deg, c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        let mut out = XPoly::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &other.coeffs {
                out.add_term(da + db, &(ca * cb));
            }
        }
        out
    }

    /// True if every coefficient has denominator 1.
    pub fn all_integer(&self) -> bool {
        self.coeffs.values().all(number::is_integer)
    }

    /// Sum of all coefficients (the specialization x = 1).
    pub fn coeff_sum(&self) -> QRat {
        let mut s = QRat::zero();
        for c in self.coeffs.values() {
            s += c;
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::qint;

    #[test]
    fn cancellation_prunes() {
        let a = XPoly::monomial(2, qint(3));
        let b = XPoly::monomial(2, qint(-3));
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn laurent_mul() {
        // (x + x^{-1})^2 = x^2 + 2 + x^{-2}
        let p = XPoly::from_pairs([(1, qint(1)), (-1, qint(1))]);
        let sq = p.mul(&p);
        assert_eq!(sq.coeff(2), qint(1));
        assert_eq!(sq.coeff(0), qint(2));
        assert_eq!(sq.coeff(-2), qint(1));
        assert_eq!(sq.num_terms(), 3);
    }
}
