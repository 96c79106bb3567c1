//! The classical builders: q-Pochhammer symbols, Gaussian binomials, theta
//! functions in product and sum form, and the pole-cancelled quotient
//! Theta(arg;q)/(1 - arg*q^h).
//!
//! All builders deliver a result that is sound to exactly the requested
//! order (internal orders are inflated to absorb factors whose lowest
//! q-exponent is negative).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::monomial::{MonomialArg, Sign};
use crate::number::{self, QRat};
use crate::scale::{qexp, ExpScale, QExp};
use crate::series::{Series, EXACT_ORDER};
use crate::util::binom2;

/// Length of a Pochhammer product.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PochLen {
    Finite(u32),
    Infinite,
}

/// A theta function Theta(arg; q^u) = (arg)_inf (q^u/arg)_inf (q^u)_inf.
#[derive(Copy, Clone, Debug)]
pub struct ThetaSpec {
    pub arg: MonomialArg,
    pub base: QExp,
}

impl ThetaSpec {
    pub fn new(arg: MonomialArg, base: QExp) -> Self {
        assert!(base > qexp(0), "theta base exponent must be positive");
        ThetaSpec { arg, base }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ThetaForm {
    Product,
    Sum,
}

/// Multiply out a list of binomial factors (1 - mu_i), delivering the
/// requested order exactly: each factor with a negative exponent costs that
/// much sound order, so the product is built inflated and truncated back.
fn product_of_factors(scale: ExpScale, order: i64, factors: &[MonomialArg]) -> Result<Series> {
    let mut neg_total = 0i64;
    for mu in factors {
        let e = scale.scaled(mu.q_exp)?;
        if e < 0 {
            neg_total += -e;
        }
    }
    let internal = order
        .checked_add(neg_total)
        .ok_or_else(|| Error::Overflow("product order".into()))?;
    let mut acc = Series::one(scale, internal);
    for mu in factors {
        let f = Series::one_minus(scale, internal, mu)?;
        acc = acc.mul(&f)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc.truncated(order))
}

/// (arg; q^u)_n = prod_{i<n} (1 - arg*q^{u*i}), or the infinite product.
///
/// Infinite products need base exponent u > 0 so that the factors stabilize;
/// finitely many factors with q-exponent <= 0 are fine either way.
pub fn pochhammer(
    arg: MonomialArg,
    base: QExp,
    n: PochLen,
    scale: ExpScale,
    order: i64,
) -> Result<Series> {
    let order_scaled = order
        .checked_mul(scale.denominator())
        .ok_or_else(|| Error::Overflow("order".into()))?;
    let mut factors = Vec::new();
    match n {
        PochLen::Finite(n) => {
            for i in 0..n {
                factors.push(arg.times_q(base * qexp(i as i64)));
            }
        }
        PochLen::Infinite => {
            if base <= qexp(0) {
                return Err(Error::DivergentProduct(format!(
                    "(({arg}); q^{base})_inf: factor exponents do not increase"
                )));
            }
            // Stop once all further factors are 1 modulo the (inflated)
            // truncation order: first find how much inflation the negative
            // factors force, then collect factors below order + inflation.
            let mut neg_total = 0i64;
            let mut i = 0i64;
            loop {
                let e = scale.scaled(arg.q_exp + base * qexp(i))?;
                if e >= 0 {
                    break;
                }
                neg_total += -e;
                i += 1;
            }
            let stop = order_scaled.saturating_add(neg_total);
            let mut i = 0i64;
            loop {
                let e = scale.scaled(arg.q_exp + base * qexp(i))?;
                if e >= stop {
                    break;
                }
                factors.push(arg.times_q(base * qexp(i)));
                i += 1;
            }
        }
    }
    product_of_factors(scale, order_scaled, &factors)
}

/// Gaussian binomial table with q-Pascal recursion and optional truncation.
/// Out-of-range (n, k) is 0 by definition; [n, 0] = 1 for n >= 0.
pub struct GaussianTable {
    memo: HashMap<(i64, i64), Series>,
    trunc: i64,
    scale: ExpScale,
}

impl GaussianTable {
    pub fn new() -> Self {
        GaussianTable {
            memo: HashMap::new(),
            trunc: EXACT_ORDER,
            scale: ExpScale::unit(),
        }
    }

    /// A table whose polynomials are truncated at the given order (sound for
    /// consumers that only need exponents below it).
    pub fn truncated(order: i64) -> Self {
        GaussianTable {
            memo: HashMap::new(),
            trunc: order,
            scale: ExpScale::unit(),
        }
    }

    pub fn binomial(&mut self, n: i64, k: i64) -> Series {
        if k < 0 || k > n {
            return Series::zero(self.scale, self.trunc);
        }
        if k == 0 || k == n {
            return Series::one(self.scale, self.trunc);
        }
        if let Some(s) = self.memo.get(&(n, k)) {
            return s.clone();
        }
        // [n,k] = [n-1,k-1] + q^k [n-1,k]
        let a = self.binomial(n - 1, k - 1);
        let b = self.binomial(n - 1, k);
        let s = a
            .add(&b.mul_monomial(k, 0, &number::qint(1)).truncated(self.trunc))
            .expect("same scale");
        self.memo.insert((n, k), s.clone());
        s
    }
}

impl Default for GaussianTable {
    fn default() -> Self {
        Self::new()
    }
}

/// One-shot Gaussian binomial as an exact polynomial in q.
pub fn gaussian_binomial(n: i64, k: i64) -> Series {
    GaussianTable::new().binomial(n, k)
}

/// Theta(arg; q^u), either as the triple product or as the bilateral sum
/// sum_n (-1)^n q^{u*binom(n,2)} arg^n.
pub fn theta(spec: ThetaSpec, form: ThetaForm, scale: ExpScale, order: i64) -> Result<Series> {
    let u = spec.base;
    assert!(u > qexp(0), "theta base exponent must be positive");
    match form {
        ThetaForm::Product => {
            let a = pochhammer(spec.arg, u, PochLen::Infinite, scale, order)?;
            let co_arg = MonomialArg::new(spec.arg.sign, -spec.arg.x_deg, u - spec.arg.q_exp);
            let b = pochhammer(co_arg, u, PochLen::Infinite, scale, order)?;
            let c = pochhammer(MonomialArg::q_pow(u), u, PochLen::Infinite, scale, order)?;
            // Negative minimum exponents in the co-factor cost sound order;
            // rebuild inflated if the plain product falls short.
            let want = order
                .checked_mul(scale.denominator())
                .ok_or_else(|| Error::Overflow("order".into()))?;
            let p = a.mul(&b)?.mul(&c)?;
            if p.order_scaled() >= want {
                return Ok(p.truncated(want));
            }
            let deficit_q =
                (want - p.order_scaled() + scale.denominator() - 1) / scale.denominator();
            let bigger = order + deficit_q;
            let a = pochhammer(spec.arg, u, PochLen::Infinite, scale, bigger)?;
            let b = pochhammer(co_arg, u, PochLen::Infinite, scale, bigger)?;
            let c = pochhammer(MonomialArg::q_pow(u), u, PochLen::Infinite, scale, bigger)?;
            let p = a.mul(&b)?.mul(&c)?;
            debug_assert!(p.order_scaled() >= want);
            Ok(p.truncated(want))
        }
        ThetaForm::Sum => {
            let order_scaled = order
                .checked_mul(scale.denominator())
                .ok_or_else(|| Error::Overflow("order".into()))?;
            let mut out = Series::zero(scale, order_scaled);
            // Exponent of the n-th term: u*binom(n,2) + e*n.
            let ns = crate::hecke::lattice::line_points(
                u / qexp(2),
                spec.arg.q_exp - u / qexp(2),
                qexp(order),
            )?;
            for n in ns {
                let e = scale.scaled(u * qexp(binom2(n)) + spec.arg.q_exp * qexp(n))?;
                let sign = Sign::of_parity(n) * spec.arg.sign.pow(n);
                out.accumulate(e, spec.arg.x_deg * n, &number::qint(sign.value()));
            }
            Ok(out)
        }
    }
}

/// Theta(arg;q)/(1 - arg*q^h) as an honest bivariate series: the cancelled
/// binomial is omitted from the triple product, never divided out.
///
/// h >= 0 removes the factor (1 - arg*q^h) from (arg)_inf; h < 0 rewrites
/// 1 - arg*q^h = -arg*q^h (1 - arg^{-1}q^{-h}) and removes the latter from
/// (q/arg)_inf, leaving the prefactor -arg^{-1} q^{-h}.
pub fn theta_over_factor(arg: MonomialArg, h: i64, scale: ExpScale, order: i64) -> Result<Series> {
    let want = order
        .checked_mul(scale.denominator())
        .ok_or_else(|| Error::Overflow("order".into()))?;
    let mut req = order;
    for _ in 0..4 {
        let s = theta_over_factor_at(arg, h, scale, req)?;
        if s.order_scaled() >= want {
            return Ok(s.truncated(want));
        }
        req += (want - s.order_scaled() + scale.denominator() - 1) / scale.denominator();
    }
    Err(Error::NonTruncatable("theta_over_factor order".into()))
}

fn theta_over_factor_at(arg: MonomialArg, h: i64, scale: ExpScale, order: i64) -> Result<Series> {
    let base = qexp(1);
    let order_scaled = order
        .checked_mul(scale.denominator())
        .ok_or_else(|| Error::Overflow("order".into()))?;
    let qinf = pochhammer(
        MonomialArg::q_pow(base),
        base,
        PochLen::Infinite,
        scale,
        order,
    )?;
    if h >= 0 {
        // (q)_inf (q/arg)_inf prod_{i>=0, i != h} (1 - arg q^i)
        let co_arg = MonomialArg::new(arg.sign, -arg.x_deg, base - arg.q_exp);
        let co = pochhammer(co_arg, base, PochLen::Infinite, scale, order)?;
        let mut factors = Vec::new();
        let mut neg_total = 0i64;
        let mut i = 0i64;
        loop {
            let e = scale.scaled(arg.q_exp + qexp(i))?;
            if e >= order_scaled.saturating_add(neg_total) && e >= 0 {
                break;
            }
            if i != h {
                if e < 0 {
                    neg_total += -e;
                }
                factors.push(arg.times_q(qexp(i)));
            }
            i += 1;
        }
        let main = product_of_factors(scale, order_scaled.saturating_add(neg_total), &factors)?;
        qinf.mul(&co)?.mul(&main)
    } else {
        // -arg^{-1} q^{-h} (arg)_inf (q)_inf prod_{i>=1, i != -h} (1 - arg^{-1} q^i)
        let main = pochhammer(arg, base, PochLen::Infinite, scale, order)?;
        let inv = arg.inv();
        let mut factors = Vec::new();
        let mut neg_total = 0i64;
        let mut i = 1i64;
        loop {
            let e = scale.scaled(inv.q_exp + qexp(i))?;
            if e >= order_scaled.saturating_add(neg_total) && e >= 0 {
                break;
            }
            if i != -h {
                if e < 0 {
                    neg_total += -e;
                }
                factors.push(inv.times_q(qexp(i)));
            }
            i += 1;
        }
        let co = product_of_factors(scale, order_scaled.saturating_add(neg_total), &factors)?;
        let prefactor = inv.times_q(qexp(-h)).negated();
        qinf.mul(&main)?.mul(&co)?.mul_arg(&prefactor)
    }
}

/// (q; q)_inf at the given order.
pub fn euler_product(scale: ExpScale, order: i64) -> Result<Series> {
    pochhammer(
        MonomialArg::q_pow(qexp(1)),
        qexp(1),
        PochLen::Infinite,
        scale,
        order,
    )
}

/// eta = q^{1/24} (q)_inf; the lattice must contain 1/24.
pub fn eta(scale: ExpScale, order: i64) -> Result<Series> {
    let shift = scale.scaled(QExp::new(1, 24))?;
    let p = euler_product(scale, order)?;
    Ok(p.mul_monomial(shift, 0, &number::qint(1))
        .truncated(order * scale.denominator()))
}

/// Convenience: c * x^d * q^(e) as a series on the lattice.
pub fn monomial_series(
    scale: ExpScale,
    order: i64,
    e: QExp,
    x_deg: i64,
    coeff: QRat,
) -> Result<Series> {
    let e_num = scale.scaled(e)?;
    Ok(Series::monomial(
        scale,
        order * scale.denominator(),
        e_num,
        x_deg,
        coeff,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::qint;

    fn d1() -> ExpScale {
        ExpScale::unit()
    }

    #[test]
    fn pochhammer_empty_product() {
        let s = pochhammer(MonomialArg::x(), qexp(1), PochLen::Finite(0), d1(), 10).unwrap();
        assert!(s.diff_report(&Series::one(d1(), 10)).unwrap().is_pass());
    }

    #[test]
    fn pochhammer_two_factors() {
        // (x; q)_2 = 1 - x - xq + x^2 q
        let s = pochhammer(MonomialArg::x(), qexp(1), PochLen::Finite(2), d1(), 10).unwrap();
        assert_eq!(s.coeff(0, 0), qint(1));
        assert_eq!(s.coeff(0, 1), qint(-1));
        assert_eq!(s.coeff(1, 1), qint(-1));
        assert_eq!(s.coeff(1, 2), qint(1));
        assert_eq!(s.num_terms(), 4);
    }

    #[test]
    fn euler_pentagonal_expansion() {
        // (q)_inf = 1 - q - q^2 + q^5 + q^7 - ... ; oracle is the pentagonal
        // sum n -> (-1)^n q^{n(3n-1)/2}.
        let order = 8;
        let p = euler_product(d1(), order).unwrap();
        let mut oracle = Series::zero(d1(), order);
        let mut n = -5i64;
        while n <= 5 {
            let e = n * (3 * n - 1) / 2;
            if 0 <= e && e < order {
                oracle.accumulate(e, 0, &qint(if n.rem_euclid(2) == 0 { 1 } else { -1 }));
            }
            n += 1;
        }
        assert!(p.diff_report(&oracle).unwrap().is_pass());
        assert_eq!(p.coeff(0, 0), qint(1));
        assert_eq!(p.coeff(1, 0), qint(-1));
        assert_eq!(p.coeff(2, 0), qint(-1));
        assert_eq!(p.coeff(5, 0), qint(1));
        assert_eq!(p.coeff(7, 0), qint(1));
        assert_eq!(p.num_terms(), 5);
    }

    #[test]
    fn euler_square_hand_convolution() {
        // (q)_inf^2 to order q^6 by brute-force convolution of pentagonal
        // expansions: 1 - 2q - q^2 + 2q^3 + q^4 + 2q^5.
        let p = euler_product(d1(), 6).unwrap();
        let sq = p.mul(&p).unwrap();
        let coeffs = [1i64, -2, -1, 2, 1, 2];
        for (e, c) in coeffs.iter().enumerate() {
            assert_eq!(sq.coeff(e as i64, 0), qint(*c), "at q^{e}");
        }
    }

    #[test]
    fn divergent_product_rejected() {
        assert!(matches!(
            pochhammer(MonomialArg::x(), qexp(0), PochLen::Infinite, d1(), 5),
            Err(Error::DivergentProduct(_))
        ));
    }

    #[test]
    fn gaussian_edge_cases() {
        assert!(gaussian_binomial(5, 0)
            .diff_report(&Series::one(d1(), EXACT_ORDER))
            .unwrap()
            .is_pass());
        let g21 = gaussian_binomial(2, 1); // 1 + q
        assert_eq!(g21.coeff(0, 0), qint(1));
        assert_eq!(g21.coeff(1, 0), qint(1));
        assert!(gaussian_binomial(1, 2).is_zero());
        assert!(gaussian_binomial(3, -1).is_zero());
    }

    #[test]
    fn gaussian_known_polynomial() {
        // [4,2] = 1 + q + 2q^2 + q^3 + q^4
        let g = gaussian_binomial(4, 2);
        for (e, c) in [(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)] {
            assert_eq!(g.coeff(e, 0), qint(c));
        }
    }

    #[test]
    fn gaussian_q_pascal_and_counting() {
        let mut t = GaussianTable::new();
        assert!(t
            .binomial(0, 0)
            .diff_report(&Series::one(d1(), EXACT_ORDER))
            .unwrap()
            .is_pass());
        for n in 1..=12i64 {
            for k in 0..=n {
                let lhs = t.binomial(n, k);
                let rhs = t
                    .binomial(n - 1, k - 1)
                    .add(&t.binomial(n - 1, k).mul_monomial(k, 0, &qint(1)))
                    .unwrap();
                assert!(lhs.diff_report(&rhs).unwrap().is_pass(), "({n},{k})");
                // q = 1 specialization counts: binomial coefficient.
                let sum: QRat = lhs
                    .terms()
                    .map(|(_, p)| p.coeff_sum())
                    .fold(QRat::from_integer(0.into()), |a, b| a + b);
                let mut binom = 1i64;
                for i in 0..k {
                    binom = binom * (n - i) / (i + 1);
                }
                assert_eq!(sum, qint(binom), "counting ({n},{k})");
            }
        }
    }

    #[test]
    fn theta_product_equals_sum_basic() {
        for (arg, base) in [
            (MonomialArg::x(), qexp(1)),
            (MonomialArg::q_pow(qexp(1)), qexp(2)),
            (MonomialArg::new(Sign::Minus, 3, qexp(0)), qexp(3)),
            (MonomialArg::of(Sign::Plus, -1, -1), qexp(1)),
        ] {
            let spec = ThetaSpec::new(arg, base);
            let p = theta(spec, ThetaForm::Product, d1(), 30).unwrap();
            let s = theta(spec, ThetaForm::Sum, d1(), 30).unwrap();
            assert!(p.diff_report(&s).unwrap().is_pass(), "arg {arg}");
        }
    }

    #[test]
    fn theta_q_base_q2_as_direct_product() {
        // Theta(q; q^2) = (q;q^2)_inf (q;q^2)_inf (q^2;q^2)_inf.
        let order = 12;
        let th = theta(
            ThetaSpec::new(MonomialArg::q_pow(qexp(1)), qexp(2)),
            ThetaForm::Product,
            d1(),
            order,
        )
        .unwrap();
        let odd = pochhammer(
            MonomialArg::q_pow(qexp(1)),
            qexp(2),
            PochLen::Infinite,
            d1(),
            order,
        )
        .unwrap();
        let even = pochhammer(
            MonomialArg::q_pow(qexp(2)),
            qexp(2),
            PochLen::Infinite,
            d1(),
            order,
        )
        .unwrap();
        let direct = odd.mul(&odd).unwrap().mul(&even).unwrap();
        assert!(th.diff_report(&direct).unwrap().is_pass());
    }

    #[test]
    fn theta_elliptic_shift() {
        // Theta(q^2 x; q) = q^{-1} x^{-2} Theta(x; q)
        let order = 25;
        let lhs = theta(
            ThetaSpec::new(MonomialArg::of(Sign::Plus, 1, 2), qexp(1)),
            ThetaForm::Product,
            d1(),
            order,
        )
        .unwrap();
        let base = theta(
            ThetaSpec::new(MonomialArg::x(), qexp(1)),
            ThetaForm::Product,
            d1(),
            order + 1,
        )
        .unwrap();
        let rhs = base.mul_monomial(-1, -2, &qint(1));
        let rhs = rhs.truncated(lhs.order_scaled().min(rhs.order_scaled()));
        let lhs = lhs.truncated(rhs.order_scaled());
        assert!(lhs.diff_report(&rhs).unwrap().is_pass());
    }

    #[test]
    fn theta_at_unit_argument_is_zero() {
        // Theta(1; q) contains the factor (1 - 1): the zero series, in both
        // forms.
        let spec = ThetaSpec::new(MonomialArg::of(Sign::Plus, 0, 0), qexp(1));
        assert!(theta(spec, ThetaForm::Product, d1(), 20).unwrap().is_zero());
        assert!(theta(spec, ThetaForm::Sum, d1(), 20).unwrap().is_zero());
    }

    #[test]
    fn theta_over_factor_reconstruction() {
        let order = 20;
        let th = theta(
            ThetaSpec::new(MonomialArg::x(), qexp(1)),
            ThetaForm::Product,
            d1(),
            order,
        )
        .unwrap();
        for h in [-3i64, -1, 0, 1, 4] {
            let tof = theta_over_factor(MonomialArg::x(), h, d1(), order + h.abs()).unwrap();
            let f = Series::one_minus(d1(), order + h.abs(), &MonomialArg::of(Sign::Plus, 1, h))
                .unwrap();
            let back = tof.mul(&f).unwrap();
            let cmp_order = th.order_scaled().min(back.order_scaled());
            assert!(
                back.truncated(cmp_order)
                    .diff_report(&th.truncated(cmp_order))
                    .unwrap()
                    .is_pass(),
                "h = {h}"
            );
        }
    }

    #[test]
    fn theta_over_factor_h3_constant_term() {
        // x-degree-0 part at q^0 is 1.
        let tof = theta_over_factor(MonomialArg::x(), 3, d1(), 10).unwrap();
        assert_eq!(tof.coeff(0, 0), qint(1));
    }

    #[test]
    fn eta_needs_24() {
        assert!(eta(ExpScale::new(2), 10).is_err());
        let e = eta(ExpScale::new(24), 3).unwrap();
        assert_eq!(e.coeff(1, 0), qint(1)); // q^{1/24}
        assert_eq!(e.coeff(25, 0), qint(-1)); // -q^{25/24}
    }
}
