//! Truncation-bounded enumeration of lattice points under a quadratic
//! exponent form.
//!
//! The enumerators compute a conservative closed-form radius by completing
//! the square against the worst-case linear terms, then assert that the two
//! boundary shells contribute nothing below the bound. The shell assertion
//! turns a derivation slip into a loud failure instead of a silently
//! truncated sum.

use crate::error::{Error, Result};
use crate::scale::{qexp, QExp};

/// Q(r, s) = a2*r^2 + b2*r*s + c2*s^2 + d1*r + e1*s.
#[derive(Copy, Clone, Debug)]
pub struct QuadForm {
    pub a2: QExp,
    pub b2: QExp,
    pub c2: QExp,
    pub d1: QExp,
    pub e1: QExp,
}

impl QuadForm {
    pub fn eval(&self, r: i64, s: i64) -> QExp {
        self.a2 * qexp(r * r)
            + self.b2 * qexp(r * s)
            + self.c2 * qexp(s * s)
            + self.d1 * qexp(r)
            + self.e1 * qexp(s)
    }

    /// All points of the two sign-definite quadrants (r,s >= 0 and r,s < 0)
    /// with Q < bound. Needs a2, c2 > 0 and b2 >= 0 so that Q grows on both
    /// quadrants.
    pub fn same_sign_points(&self, bound: QExp) -> Result<Vec<(i64, i64)>> {
        if self.a2 <= qexp(0) || self.c2 <= qexp(0) || self.b2 < qexp(0) {
            return Err(Error::NonTruncatable(format!(
                "quadratic form {self:?} does not grow on the sign-definite quadrants"
            )));
        }
        let radius = self.radius(bound);
        let mut pts = Vec::new();
        for r in 0..=radius {
            for s in 0..=radius {
                if self.eval(r, s) < bound {
                    pts.push((r, s));
                }
            }
        }
        for r in -radius..=-1 {
            for s in -radius..=-1 {
                if self.eval(r, s) < bound {
                    pts.push((r, s));
                }
            }
        }
        // Boundary shells must already be empty, otherwise the radius
        // derivation is wrong.
        for shell in [radius - 1, radius] {
            for t in 0..=shell {
                for (r, s) in [
                    (shell, t),
                    (t, shell),
                    (-shell, -t.max(1)),
                    (-t.max(1), -shell),
                ] {
                    if (r >= 0) == (s >= 0) {
                        assert!(
                            self.eval(r, s) >= bound,
                            "shell point ({r},{s}) below bound: radius derivation is wrong"
                        );
                    }
                }
            }
        }
        Ok(pts)
    }

    /// Conservative enumeration radius: on either quadrant, dropping the
    /// nonnegative cross term, Q >= a2(|r| - r0)^2 + c2(|s| - s0)^2 - K with
    /// r0 = |d1|/(2 a2), s0 = |e1|/(2 c2), K = d1^2/(4 a2) + e1^2/(4 c2).
    fn radius(&self, bound: QExp) -> i64 {
        let to_f = |x: QExp| *x.numer() as f64 / *x.denom() as f64;
        let a = to_f(self.a2);
        let c = to_f(self.c2);
        let d = to_f(self.d1).abs();
        let e = to_f(self.e1).abs();
        let k = d * d / (4.0 * a) + e * e / (4.0 * c);
        let b = to_f(bound).max(0.0) + k;
        let r0 = d / (2.0 * a);
        let s0 = e / (2.0 * c);
        let rad = (r0 + (b / a).sqrt()).max(s0 + (b / c).sqrt());
        rad.ceil() as i64 + 3
    }
}

/// All integers n with a2*n^2 + d1*n < bound (a2 > 0), shell-asserted.
pub fn line_points(a2: QExp, d1: QExp, bound: QExp) -> Result<Vec<i64>> {
    if a2 <= qexp(0) {
        return Err(Error::NonTruncatable(
            "one-dimensional exponent form does not grow".into(),
        ));
    }
    let to_f = |x: QExp| *x.numer() as f64 / *x.denom() as f64;
    let a = to_f(a2);
    let d = to_f(d1).abs();
    let k = d * d / (4.0 * a);
    let b = to_f(bound).max(0.0) + k;
    let radius = (d / (2.0 * a) + (b / a).sqrt()).ceil() as i64 + 3;
    let eval = |n: i64| a2 * qexp(n * n) + d1 * qexp(n);
    for n in [radius - 1, radius, -radius + 1, -radius] {
        assert!(
            eval(n) >= bound,
            "line shell point {n} below bound: radius derivation is wrong"
        );
    }
    Ok((-radius..=radius).filter(|&n| eval(n) < bound).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scale::qexp_frac;

    #[test]
    fn quadrant_enumeration_matches_brute_force() {
        let form = QuadForm {
            a2: qexp_frac(1, 8),
            b2: qexp_frac(7, 4),
            c2: qexp_frac(1, 8),
            d1: qexp_frac(1, 4),
            e1: qexp_frac(3, 4),
        };
        let bound = qexp(20);
        let mut got = form.same_sign_points(bound).unwrap();
        got.sort_unstable();
        let mut expect = Vec::new();
        for r in -200i64..=200 {
            for s in -200i64..=200 {
                if (r >= 0) == (s >= 0) && form.eval(r, s) < bound {
                    expect.push((r, s));
                }
            }
        }
        expect.sort_unstable();
        assert_eq!(got, expect);
    }

    #[test]
    fn line_enumeration_matches_brute_force() {
        let got = line_points(qexp_frac(1, 2), qexp_frac(-7, 2), qexp(25)).unwrap();
        let expect: Vec<i64> = (-100..=100)
            .filter(|&n| qexp_frac(1, 2) * qexp(n * n) + qexp_frac(-7, 2) * qexp(n) < qexp(25))
            .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn degenerate_form_rejected() {
        let form = QuadForm {
            a2: qexp(0),
            b2: qexp(1),
            c2: qexp(1),
            d1: qexp(0),
            e1: qexp(0),
        };
        assert!(form.same_sign_points(qexp(5)).is_err());
    }
}
