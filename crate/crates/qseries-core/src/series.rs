//! The truncated-series ring.
//!
//! A `Series` is a finite map from scaled q-exponent (numerator over the
//! lattice denominator D) to a nonzero `XPoly`, together with an exclusive
//! truncation order: every stored exponent is < order, and the series is
//! exact below it. Exact polynomials carry the sentinel order
//! [`EXACT_ORDER`].
//!
//! Truncation is tracked pessimistically. Binary operations take the
//! minimum of the operands' sound orders, and a factor whose lowest
//! q-exponent is negative lowers the sound order of a product by that
//! amount (its tail multiplies unknown terms downward).

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monomial::{MonomialArg, Sign};
use crate::number::{self, QRat};
use crate::scale::{ExpScale, QExp};
use crate::xpoly::XPoly;

/// Sentinel order for exact polynomials. Large enough never to clash with a
/// real truncation order, small enough that order arithmetic cannot wrap.
pub const EXACT_ORDER: i64 = i64::MAX / 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    scale: ExpScale,
    order: i64,
    terms: BTreeMap<i64, XPoly>,
}

/// Outcome of comparing two series below their common order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Pass,
    Fail {
        /// Scaled q-exponent of the first mismatch.
        e_num: i64,
        x_deg: i64,
        lhs: QRat,
        rhs: QRat,
    },
}

impl Comparison {
    pub fn is_pass(&self) -> bool {
        matches!(self, Comparison::Pass)
    }
}

fn order_add(order: i64, delta: i64) -> i64 {
    if order >= EXACT_ORDER {
        EXACT_ORDER
    } else {
        (order.saturating_add(delta)).min(EXACT_ORDER)
    }
}

impl Series {
    pub fn zero(scale: ExpScale, order: i64) -> Self {
        Series {
            scale,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(scale: ExpScale, order: i64) -> Self {
        Series::monomial(scale, order, 0, 0, number::qint(1))
    }

    /// c * x^d * q^(e_num/D).
    pub fn monomial(scale: ExpScale, order: i64, e_num: i64, x_deg: i64, coeff: QRat) -> Self {
        let mut s = Series::zero(scale, order);
        if !coeff.is_zero() && e_num < order {
            s.terms.insert(e_num, XPoly::monomial(x_deg, coeff));
        }
        s
    }

    /// The series of the monomial argument itself.
    pub fn of_arg(scale: ExpScale, order: i64, mu: &MonomialArg) -> Result<Self> {
        let e = scale.scaled(mu.q_exp)?;
        Ok(Series::monomial(
            scale,
            order,
            e,
            mu.x_deg,
            number::qint(mu.sign.value()),
        ))
    }

    /// 1 - mu, the basic product factor.
    pub fn one_minus(scale: ExpScale, order: i64, mu: &MonomialArg) -> Result<Self> {
        let mut s = Series::one(scale, order);
        let e = scale.scaled(mu.q_exp)?;
        if e < order {
            s.accumulate(e, mu.x_deg, &number::qint(-mu.sign.value()));
        }
        Ok(s)
    }

    pub fn scale(&self) -> ExpScale {
        self.scale
    }

    pub fn order_scaled(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order >= EXACT_ORDER
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.values().map(XPoly::num_terms).sum()
    }

    pub fn min_exp_scaled(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &XPoly)> {
        self.terms.iter()
    }

    pub fn xpoly_at(&self, e_num: i64) -> Option<&XPoly> {
        self.terms.get(&e_num)
    }

    /// Coefficient of x^d q^(e_num/D); exponents at or above the order are
    /// unknown, and asking for one is a caller bug.
    pub fn coeff(&self, e_num: i64, x_deg: i64) -> QRat {
        assert!(
            e_num < self.order,
            "coefficient at scaled exponent {e_num} is beyond the sound order {}",
            self.order
        );
        self.terms
            .get(&e_num)
            .map(|p| p.coeff(x_deg))
            .unwrap_or_else(QRat::zero)
    }

    /// Accumulate c * x^d q^(e/D), dropping anything at or above the order.
    pub fn accumulate(&mut self, e_num: i64, x_deg: i64, c: &QRat) {
        if e_num >= self.order || c.is_zero() {
            return;
        }
        let p = self.terms.entry(e_num).or_default();
        p.add_term(x_deg, c);
        if p.is_zero() {
            self.terms.remove(&e_num);
        }
    }

    pub fn accumulate_xpoly(&mut self, e_num: i64, p: &XPoly) {
        if e_num >= self.order || p.is_zero() {
            return;
        }
        let slot = self.terms.entry(e_num).or_default();
        for (d, c) in p.iter() {
            slot.add_term(*d, c);
        }
        if slot.is_zero() {
            self.terms.remove(&e_num);
        }
    }

    fn check_scale(&self, other: &Series) -> Result<()> {
        if self.scale != other.scale {
            return Err(Error::ScaleMismatch(format!(
                "left lattice 1/{} vs right lattice 1/{}; rescale first",
                self.scale.denominator(),
                other.scale.denominator()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_scale(other)?;
        let order = self.order.min(other.order);
        let mut out = Series::zero(self.scale, order);
        for (e, p) in &self.terms {
            out.accumulate_xpoly(*e, p);
        }
        for (e, p) in &other.terms {
            out.accumulate_xpoly(*e, p);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            scale: self.scale,
            order: self.order,
            terms: self.terms.iter().map(|(e, p)| (*e, p.neg())).collect(),
        }
    }

    pub fn scalar_mul(&self, s: &QRat) -> Series {
        if s.is_zero() {
            return Series::zero(self.scale, self.order);
        }
        Series {
            scale: self.scale,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, p)| (*e, p.scalar_mul(s)))
                .collect(),
        }
    }

    /// Multiply by c * x^d * q^(e_num/D). The sound order shifts by exactly
    /// e_num, so nothing is lost or overclaimed.
    pub fn mul_monomial(&self, e_num: i64, x_deg: i64, c: &QRat) -> Series {
        if c.is_zero() {
            return Series::zero(self.scale, order_add(self.order, e_num));
        }
        Series {
            scale: self.scale,
            order: order_add(self.order, e_num),
            terms: self
                .terms
                .iter()
                .map(|(e, p)| (e + e_num, p.mul_monomial(x_deg, c)))
                .collect(),
        }
    }

    /// Multiply by the monomial argument.
    pub fn mul_arg(&self, mu: &MonomialArg) -> Result<Series> {
        let e = self.scale.scaled(mu.q_exp)?;
        Ok(self.mul_monomial(e, mu.x_deg, &number::qint(mu.sign.value())))
    }

    /// Cauchy product. The sound order is
    /// min(a.order + min(0, min-exp b), b.order + min(0, min-exp a)):
    /// a factor reaching below q^0 drags the other operand's unknown tail
    /// down with it.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_scale(other)?;
        let amin = self.min_exp_scaled().unwrap_or(0).min(0);
        let bmin = other.min_exp_scaled().unwrap_or(0).min(0);
        let order = order_add(self.order, bmin).min(order_add(other.order, amin));
        let mut out = Series::zero(self.scale, order);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        let bfirst = other.min_exp_scaled().unwrap();
        for (&ea, pa) in &self.terms {
            if ea.saturating_add(bfirst) >= order {
                break;
            }
            for (&eb, pb) in &other.terms {
                let e = ea + eb;
                if e >= order {
                    break;
                }
                out.accumulate_xpoly(e, &pa.mul(pb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Series> {
        let mut out = Series::one(self.scale, self.order);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Re-truncate to a lower (or equal) order.
    pub fn truncated(&self, order: i64) -> Series {
        let order = order.min(self.order);
        Series {
            scale: self.scale,
            order,
            terms: self
                .terms
                .range(..order)
                .map(|(e, p)| (*e, p.clone()))
                .collect(),
        }
    }

    /// Move the series to a finer lattice (D | D').
    pub fn rescale(&self, new: ExpScale) -> Result<Series> {
        if !self.scale.divides(&new) {
            return Err(Error::ScaleMismatch(format!(
                "cannot rescale from 1/{} to 1/{}",
                self.scale.denominator(),
                new.denominator()
            )));
        }
        let f = new.denominator() / self.scale.denominator();
        let order = if self.is_exact() {
            EXACT_ORDER
        } else {
            self.order
                .checked_mul(f)
                .ok_or_else(|| Error::Overflow("order rescale".into()))?
        };
        let mut terms = BTreeMap::new();
        for (e, p) in &self.terms {
            let e2 = e
                .checked_mul(f)
                .ok_or_else(|| Error::Overflow("exponent rescale".into()))?;
            terms.insert(e2, p.clone());
        }
        Ok(Series {
            scale: new,
            order,
            terms,
        })
    }

    /// Reciprocal of a series whose lowest term is a single monomial
    /// c * x^k * q^e (a unit of the Laurent coefficient ring). The result
    /// is sound to order - 2e.
    pub fn invert_unit(&self) -> Result<Series> {
        let (&e0, p0) = self
            .terms
            .first_key_value()
            .ok_or_else(|| Error::NotAUnit("the zero series has no inverse".into()))?;
        let (k0, c0) = p0.as_monomial().ok_or_else(|| {
            Error::NotAUnit(format!(
                "lowest term (scaled exponent {e0}) is not a single monomial"
            ))
        })?;
        let c0 = c0.clone();
        if self.is_exact() {
            if self.terms.len() == 1 {
                return Ok(Series::monomial(
                    self.scale,
                    EXACT_ORDER,
                    -e0,
                    -k0,
                    number::qint(1) / c0,
                ));
            }
            return Err(Error::InfiniteOrder(
                "a non-monomial polynomial has no polynomial inverse; truncate first".into(),
            ));
        }

        // Normalize: self = head * (1 + r) with r supported on positive
        // relative exponents. Then B = (1 + r)^{-1} satisfies
        // B[n] = -sum_{k<=n} r[k] * B[n-k].
        let t_rel = self.order - e0;
        let mut r: BTreeMap<i64, XPoly> = BTreeMap::new();
        let inv_c0 = number::qint(1) / c0.clone();
        for (&e, p) in self.terms.iter().skip(1) {
            let rel = e - e0;
            if rel < t_rel {
                r.insert(rel, p.mul_monomial(-k0, &inv_c0));
            }
        }
        let mut b: BTreeMap<i64, XPoly> = BTreeMap::new();
        b.insert(0, XPoly::one());
        if !r.is_empty() {
            let rmin = *r.keys().next().unwrap();
            debug_assert!(rmin > 0, "tail of a normalized unit must start above q^0");
            let mut n = rmin;
            while n < t_rel {
                let mut acc = XPoly::zero();
                for (&k, rp) in r.range(..=n) {
                    if let Some(bp) = b.get(&(n - k)) {
                        acc = acc.add(&rp.mul(bp));
                    }
                }
                if !acc.is_zero() {
                    b.insert(n, acc.neg());
                }
                n += 1;
            }
        }
        let mut out = Series::zero(self.scale, self.order - 2 * e0);
        for (rel, p) in b {
            out.accumulate_xpoly(rel - e0, &p.mul_monomial(-k0, &inv_c0));
        }
        Ok(out)
    }

    /// Expansion of 1/(1 - mu) chosen by the sign of mu's q-exponent:
    /// sum_{j>=0} mu^j when e > 0, -sum_{j>=1} mu^{-j} when e < 0, and the
    /// constant 1/2 when mu = -1. A pure x-power denominator has no
    /// expansion here.
    pub fn geometric_factor(scale: ExpScale, order: i64, mu: &MonomialArg) -> Result<Series> {
        let e = scale.scaled(mu.q_exp)?;
        let mut out = Series::zero(scale, order);
        if e == 0 {
            if mu.x_deg != 0 {
                return Err(Error::DenominatorNotExpandable(format!(
                    "1/(1 - {mu}) has zero q-exponent; specialize x first"
                )));
            }
            return match mu.sign {
                Sign::Plus => Err(Error::PoleAtOne),
                Sign::Minus => {
                    out.accumulate(0, 0, &number::qrat(1, 2));
                    Ok(out)
                }
            };
        }
        if e > 0 {
            let mut j = 0i64;
            while j.saturating_mul(e) < order {
                out.accumulate(j * e, j * mu.x_deg, &number::qint(mu.sign.pow(j).value()));
                j += 1;
            }
        } else {
            let mut j = 1i64;
            while j.saturating_mul(-e) < order {
                out.accumulate(
                    j * (-e),
                    -j * mu.x_deg,
                    &number::qint(-mu.sign.pow(j).value()),
                );
                j += 1;
            }
        }
        Ok(out)
    }

    /// Ring homomorphism q -> q^u, x -> mu (u > 0). The output lattice is
    /// recomputed; the output order is adjusted by the worst exponent shift
    /// among the stored x-degrees, which is sound whenever the x-support of
    /// the unknown tail stays within the stored degree range (true for all
    /// builders in this crate; exact polynomials are always safe).
    pub fn substitute(&self, u: QExp, mu: &MonomialArg) -> Result<Series> {
        assert!(u > QExp::from_integer(0), "substitution needs u > 0");
        let d_old = self.scale.denominator();
        let new_denom = (d_old as i128)
            .checked_mul(*u.denom() as i128)
            .and_then(|v| {
                let l = v.lcm(&(*mu.q_exp.denom() as i128));
                i64::try_from(l).ok()
            })
            .ok_or_else(|| Error::Overflow("substitution lattice".into()))?;
        let new_scale = ExpScale::new(new_denom);

        // e' = (e/D)*u + d*mu.e over i128, landing on new_denom exactly.
        let map_exp = |e: i64, d: i64| -> Result<i64> {
            let a = (e as i128)
                * (*u.numer() as i128)
                * (new_denom as i128 / (d_old as i128 * *u.denom() as i128));
            let b = (d as i128)
                * (*mu.q_exp.numer() as i128)
                * (new_denom as i128 / *mu.q_exp.denom() as i128);
            i64::try_from(a + b).map_err(|_| Error::Overflow("substituted exponent".into()))
        };

        let mut worst_shift: i128 = 0;
        for p in self.terms.values() {
            for (d, _) in p.iter() {
                let shift = (*d as i128)
                    * (*mu.q_exp.numer() as i128)
                    * (new_denom as i128 / *mu.q_exp.denom() as i128);
                worst_shift = worst_shift.min(shift);
            }
        }
        let order = if self.is_exact() {
            EXACT_ORDER
        } else {
            let base = (self.order as i128)
                * (*u.numer() as i128)
                * (new_denom as i128 / (d_old as i128 * *u.denom() as i128));
            i64::try_from(base + worst_shift)
                .map_err(|_| Error::Overflow("substituted order".into()))?
        };

        let mut out = Series::zero(new_scale, order);
        for (&e, p) in &self.terms {
            for (&d, c) in p.iter() {
                let e2 = map_exp(e, d)?;
                let sign = mu.sign.pow(d).value();
                out.accumulate(e2, d * mu.x_deg, &(c * number::qint(sign)));
            }
        }
        Ok(out)
    }

    /// x -> sigma * q^j applied to every coefficient; the result is
    /// univariate in q. The order is preserved; sound when the x-support of
    /// each q-coefficient (including the unknown tail) is bounded, which
    /// holds structurally for the builders here.
    pub fn specialize_x(&self, sigma: Sign, j: QExp) -> Result<Series> {
        let new_scale = ExpScale::new(
            (self.scale.denominator() as i128)
                .lcm(&(*j.denom() as i128))
                .try_into()
                .map_err(|_| Error::Overflow("specialization lattice".into()))?,
        );
        let f = new_scale.denominator() / self.scale.denominator();
        let j_num = new_scale.scaled(j)?;
        let order = if self.is_exact() {
            EXACT_ORDER
        } else {
            self.order
                .checked_mul(f)
                .ok_or_else(|| Error::Overflow("specialized order".into()))?
        };
        let mut out = Series::zero(new_scale, order);
        for (&e, p) in &self.terms {
            for (&d, c) in p.iter() {
                let e2 = e
                    .checked_mul(f)
                    .and_then(|v| v.checked_add(d.checked_mul(j_num)?))
                    .ok_or_else(|| Error::Overflow("specialized exponent".into()))?;
                out.accumulate(e2, 0, &(c * number::qint(sigma.pow(d).value())));
            }
        }
        Ok(out)
    }

    /// Compare below the common order; the first mismatch is reported in
    /// (q-exponent, x-degree) lexicographic order.
    pub fn diff_report(&self, other: &Series) -> Result<Comparison> {
        self.check_scale(other)?;
        let order = self.order.min(other.order);
        let mut exps: Vec<i64> = self
            .terms
            .range(..order)
            .map(|(e, _)| *e)
            .chain(other.terms.range(..order).map(|(e, _)| *e))
            .collect();
        exps.sort_unstable();
        exps.dedup();
        let empty = XPoly::zero();
        for e in exps {
            let pa = self.terms.get(&e).unwrap_or(&empty);
            let pb = other.terms.get(&e).unwrap_or(&empty);
            if pa == pb {
                continue;
            }
            let mut degs: Vec<i64> = pa
                .iter()
                .map(|(d, _)| *d)
                .chain(pb.iter().map(|(d, _)| *d))
                .collect();
            degs.sort_unstable();
            degs.dedup();
            for d in degs {
                let ca = pa.coeff(d);
                let cb = pb.coeff(d);
                if ca != cb {
                    return Ok(Comparison::Fail {
                        e_num: e,
                        x_deg: d,
                        lhs: ca,
                        rhs: cb,
                    });
                }
            }
        }
        Ok(Comparison::Pass)
    }

    /// True if every stored coefficient is an integer.
    pub fn all_integer(&self) -> bool {
        self.terms.values().all(XPoly::all_integer)
    }

    /// The canonical line-based print format:
    /// header `scale=D order=N` (N scaled, or `exact`), then one line per
    /// term `e_num x_deg num/den`, sorted by (e_num, x_deg).
    pub fn print_text(&self) -> String {
        let mut out = String::new();
        if self.is_exact() {
            out.push_str(&format!("scale={} order=exact\n", self.scale.denominator()));
        } else {
            out.push_str(&format!(
                "scale={} order={}\n",
                self.scale.denominator(),
                self.order
            ));
        }
        for (e, p) in &self.terms {
            for (d, c) in p.iter() {
                out.push_str(&format!("{} {} {}\n", e, d, number::render(c)));
            }
        }
        out
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.print_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{qint, qrat};
    use crate::scale::{qexp, qexp_frac};

    fn d1() -> ExpScale {
        ExpScale::unit()
    }

    #[test]
    fn add_identity_and_cancellation() {
        let s = d1();
        let f = Series::monomial(s, 10, 2, 1, qint(3));
        let zero = Series::zero(s, 10);
        assert_eq!(f.add(&zero).unwrap(), f);
        let one = Series::one(s, 10);
        assert!(one.add(&one.neg()).unwrap().is_zero());
    }

    #[test]
    fn add_hand_convolution() {
        // (1 + xq) + (1 - xq) = 2
        let s = d1();
        let mut a = Series::one(s, 10);
        a.accumulate(1, 1, &qint(1));
        let mut b = Series::one(s, 10);
        b.accumulate(1, 1, &qint(-1));
        let sum = a.add(&b).unwrap();
        assert_eq!(sum.coeff(0, 0), qint(2));
        assert_eq!(sum.num_terms(), 1);
    }

    #[test]
    fn mul_identity_and_binomials() {
        let s = d1();
        let mut f = Series::one(s, 12);
        f.accumulate(3, -2, &qrat(5, 7));
        let one = Series::one(s, 12);
        assert_eq!(f.mul(&one).unwrap(), f);

        // (1 - xq)(1 + xq) = 1 - x^2 q^2
        let a = Series::one_minus(s, 12, &MonomialArg::of(Sign::Plus, 1, 1)).unwrap();
        let b = Series::one_minus(s, 12, &MonomialArg::of(Sign::Minus, 1, 1)).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p.coeff(0, 0), qint(1));
        assert_eq!(p.coeff(2, 2), qint(-1));
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn mul_order_drops_with_negative_exponents() {
        let s = d1();
        // (1 + x^{-1} q^{-1}) * f at order 10 is only sound to order 9.
        let f = Series::one(s, 10);
        let g = Series::one_minus(s, 10, &MonomialArg::of(Sign::Minus, -1, -1)).unwrap();
        let p = g.mul(&f).unwrap();
        assert_eq!(p.order_scaled(), 9);
    }

    #[test]
    fn invert_trivial_and_geometric() {
        let s = d1();
        let one = Series::one(s, 15);
        assert_eq!(one.invert_unit().unwrap(), one);

        // 1/(1-q) = 1 + q + q^2 + ...
        let f = Series::one_minus(s, 15, &MonomialArg::of(Sign::Plus, 0, 1)).unwrap();
        let inv = f.invert_unit().unwrap();
        for e in 0..15 {
            assert_eq!(inv.coeff(e, 0), qint(1));
        }
        assert!(f
            .mul(&inv)
            .unwrap()
            .diff_report(&Series::one(s, 15))
            .unwrap()
            .is_pass());
    }

    #[test]
    fn invert_monomial_exact() {
        let s = d1();
        // 1/(-x^{-1}) = -x
        let m = Series::monomial(s, EXACT_ORDER, 0, -1, qint(-1));
        let inv = m.invert_unit().unwrap();
        assert_eq!(inv.coeff(0, 1), qint(-1));
        assert_eq!(inv.num_terms(), 1);
    }

    #[test]
    fn invert_rejects_non_units() {
        let s = d1();
        // 1 + x^3 has a non-monomial lowest term.
        let mut f = Series::one(s, 10);
        f.accumulate(0, 3, &qint(1));
        assert!(matches!(f.invert_unit(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn geometric_three_cases() {
        let s = d1();
        // 1/(1 - xq) = sum x^j q^j
        let g = Series::geometric_factor(s, 8, &MonomialArg::of(Sign::Plus, 1, 1)).unwrap();
        for j in 0..8 {
            assert_eq!(g.coeff(j, j), qint(1));
        }
        // 1/(1 - x^{-1}q^{-1}) = -xq * sum x^j q^j
        let g2 = Series::geometric_factor(s, 8, &MonomialArg::of(Sign::Plus, -1, -1)).unwrap();
        for j in 1..8 {
            assert_eq!(g2.coeff(j, j), qint(-1));
        }
        assert_eq!(g2.min_exp_scaled(), Some(1));
        // 1/(1+1) = 1/2
        let g3 = Series::geometric_factor(s, 8, &MonomialArg::of(Sign::Minus, 0, 0)).unwrap();
        assert_eq!(g3.coeff(0, 0), qrat(1, 2));

        assert!(matches!(
            Series::geometric_factor(s, 8, &MonomialArg::of(Sign::Plus, 2, 0)),
            Err(Error::DenominatorNotExpandable(_))
        ));
        assert!(matches!(
            Series::geometric_factor(s, 8, &MonomialArg::of(Sign::Plus, 0, 0)),
            Err(Error::PoleAtOne)
        ));
    }

    #[test]
    fn geometric_times_denominator_is_one() {
        let s = d1();
        for mu in [
            MonomialArg::of(Sign::Plus, 1, 1),
            MonomialArg::of(Sign::Minus, -2, -3),
            MonomialArg::of(Sign::Minus, 0, 0),
        ] {
            let g = Series::geometric_factor(s, 20, &mu).unwrap();
            let f = Series::one_minus(s, 20, &mu).unwrap();
            let p = g.mul(&f).unwrap();
            let one = Series::one(s, p.order_scaled());
            assert!(p.diff_report(&one).unwrap().is_pass(), "mu = {mu}");
        }
    }

    #[test]
    fn substitute_examples() {
        let s = d1();
        let mut f = Series::one(s, 10);
        f.accumulate(1, 0, &qint(1)); // 1 + q
                                      // identity substitution
        let id = f.substitute(qexp(1), &MonomialArg::x()).unwrap();
        assert!(id.diff_report(&f).unwrap().is_pass());
        // q -> q^2 on 1 + q
        let g = f.substitute(qexp(2), &MonomialArg::x()).unwrap();
        assert_eq!(g.coeff(2, 0), qint(1));
        assert_eq!(g.order_scaled(), 20);
        // x -> -q on 1 + xq
        let mut h = Series::one(s, 10);
        h.accumulate(1, 1, &qint(1));
        let sub = h
            .substitute(qexp(1), &MonomialArg::of(Sign::Minus, 0, 1))
            .unwrap();
        assert_eq!(sub.coeff(0, 0), qint(1));
        assert_eq!(sub.coeff(2, 0), qint(-1));
    }

    #[test]
    fn substitute_fractional_lattice() {
        let s = d1();
        let f = Series::monomial(s, 10, 3, 0, qint(1)); // q^3
        let g = f.substitute(qexp_frac(1, 2), &MonomialArg::x()).unwrap();
        assert_eq!(g.scale().denominator(), 2);
        assert_eq!(g.coeff(3, 0), qint(1)); // q^{3/2} has scaled exponent 3
    }

    #[test]
    fn specialize_examples() {
        let s = d1();
        let mut f = Series::one(s, 10);
        f.accumulate(1, 1, &qint(1)); // 1 + xq
        let g = f.specialize_x(Sign::Plus, qexp(1)).unwrap();
        assert_eq!(g.coeff(0, 0), qint(1));
        assert_eq!(g.coeff(2, 0), qint(1));

        // x + x^{-1} at x = -q -> -q - q^{-1}
        let mut h = Series::zero(s, 10);
        h.accumulate(0, 1, &qint(1));
        h.accumulate(0, -1, &qint(1));
        let sp = h.specialize_x(Sign::Minus, qexp(1)).unwrap();
        assert_eq!(sp.coeff(1, 0), qint(-1));
        assert_eq!(sp.coeff(-1, 0), qint(-1));

        // sigma = +1, j = 0 sums the x-coefficients of each q-exponent
        let sum = f.specialize_x(Sign::Plus, qexp(0)).unwrap();
        assert_eq!(sum.coeff(1, 0), qint(1));
    }

    #[test]
    fn diff_report_truncation_semantics() {
        let s = d1();
        let one10 = Series::one(s, 10);
        let mut g10 = Series::one(s, 10);
        g10.accumulate(5, 0, &qint(1));
        match one10.diff_report(&g10).unwrap() {
            Comparison::Fail {
                e_num,
                x_deg,
                lhs,
                rhs,
            } => {
                assert_eq!((e_num, x_deg), (5, 0));
                assert_eq!(lhs, qint(0));
                assert_eq!(rhs, qint(1));
            }
            Comparison::Pass => panic!("expected a mismatch at q^5"),
        }
        // The same pair compared at order 3 passes: the difference is beyond
        // the common order.
        let g3 = g10.truncated(3);
        let one3 = one10.truncated(3);
        assert!(one3.diff_report(&g3).unwrap().is_pass());
        assert!(one10.diff_report(&one10).unwrap().is_pass());
    }

    #[test]
    fn print_format_is_sorted_and_exact() {
        let s = ExpScale::new(2);
        let mut f = Series::zero(s, 9);
        f.accumulate(3, -1, &qrat(-1, 3));
        f.accumulate(-2, 0, &qint(5));
        f.accumulate(3, 2, &qint(7));
        assert_eq!(
            f.print_text(),
            "scale=2 order=9\n-2 0 5/1\n3 -1 -1/3\n3 2 7/1\n"
        );
    }
}
