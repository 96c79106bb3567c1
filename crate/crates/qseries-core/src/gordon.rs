//! The combinatorial side: chain-indexed Gordon polynomials H_n, the
//! vector-valued U-series built from them, finitized partition generating
//! functions with frequency conditions, and the multi-sum/product pair of
//! the Andrews analytic identity.

use std::collections::HashMap;

use crate::error::Result;
use crate::monomial::{MonomialArg, Sign};
use crate::number::{self, QRat};
use crate::qfunctions::{self, GaussianTable, PochLen};
use crate::scale::{qexp, ExpScale, QExp};
use crate::series::{Comparison, Series, EXACT_ORDER};

/// Parameters of the Gordon polynomial H_n(t, m; b; q).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GordonParams {
    pub t: i64,
    pub m: i64,
    pub b: i64,
    pub n: i64,
}

impl GordonParams {
    pub fn new(t: i64, m: i64, b: i64, n: i64) -> Self {
        assert!(t >= 1, "need t >= 1");
        assert!(1 <= m && m <= t, "need 1 <= m <= t");
        assert!(b == 0 || b == 1, "need b in {{0, 1}}");
        assert!(n >= 0);
        GordonParams { t, m, b, n }
    }
}

/// All of H_0 .. H_{n_max}(t, m; b; q) in one forward pass over the chain
/// levels. The level-j state is (n_j, sum_{r<=j} n_r); the Gaussian top
/// argument n_{j+1} - n_j - b*j + 2*S_j + min(j, m-1) only needs that much.
/// `trunc` bounds the retained exponents (use EXACT_ORDER for exact
/// polynomials; chains only produce nonnegative exponents, so truncation is
/// sound).
fn h_polys(t: i64, m: i64, b: i64, n_max: i64, trunc: i64) -> Vec<Series> {
    let scale = ExpScale::unit();
    let mut gauss = if trunc >= EXACT_ORDER {
        GaussianTable::new()
    } else {
        GaussianTable::truncated(trunc)
    };
    // states: (v = n_j, S = n_1 + .. + n_j) -> weight
    let mut states: HashMap<(i64, i64), Series> = HashMap::new();
    for v in 0..=n_max {
        states.insert((v, v), Series::one(scale, trunc));
    }
    for j in 1..t {
        let chi = j.min(m - 1);
        let mut next: HashMap<(i64, i64), Series> = HashMap::new();
        for ((v, s), w) in &states {
            // q^{v^2 + (1-b)v} is common to every transition out of (v, s).
            let e = v * v + (1 - b) * v;
            if e >= trunc {
                continue;
            }
            let shifted = w.mul_monomial(e, 0, &number::qint(1)).truncated(trunc);
            if shifted.is_zero() {
                continue;
            }
            for v2 in *v..=n_max {
                let top = v2 - v - b * j + 2 * s + chi;
                let g = gauss.binomial(top, v2 - v);
                if g.is_zero() {
                    continue;
                }
                let contrib = shifted.mul(&g).expect("same scale").truncated(trunc);
                if contrib.is_zero() {
                    continue;
                }
                let slot = next
                    .entry((v2, s + v2))
                    .or_insert_with(|| Series::zero(scale, trunc));
                *slot = slot.add(&contrib).expect("same scale");
            }
        }
        states = next;
    }
    let mut out = vec![Series::zero(scale, trunc); (n_max + 1) as usize];
    for ((v, _), w) in states {
        out[v as usize] = out[v as usize].add(&w).expect("same scale");
    }
    out
}

/// H_n(t, m; b; q) as an exact polynomial.
pub fn gordon_h(params: GordonParams) -> Series {
    h_polys(params.t, params.m, params.b, params.n, EXACT_ORDER)
        .pop()
        .expect("n >= 0")
}

/// H_n(t, m; b; q^{-1}) by exact Laurent reversal (exponent negation).
pub fn gordon_h_reversed(params: GordonParams) -> Series {
    let h = gordon_h(params);
    let mut out = Series::zero(h.scale(), EXACT_ORDER);
    for (e, p) in h.terms() {
        out.accumulate_xpoly(-e, p);
    }
    out
}

/// U_t^{(m)}(sigma*x; q) = sum_{n>=0} q^n (-sigma*x)_n (-sigma^{-1} q/x)_n
/// H_n(t, m; 0; q). The n-th term sits at q^n and above, so the sum
/// terminates at the truncation order.
pub fn u_series(t: i64, m: i64, x_sign: Sign, scale: ExpScale, order: i64) -> Result<Series> {
    assert!(1 <= m && m <= t);
    let order_scaled = order * scale.denominator();
    let n_max = (order - 1).max(0);
    let hs = h_polys(t, m, 0, n_max, order);
    let a1 = MonomialArg::new(-x_sign, 1, qexp(0)); // -sigma x
    let a2 = MonomialArg::new(-x_sign, -1, qexp(1)); // -sigma q / x
    let mut out = Series::zero(scale, order_scaled);
    for n in 0..=n_max {
        let h = hs[n as usize].rescale(scale)?;
        if h.is_zero() && n > 0 {
            continue;
        }
        let p1 = qfunctions::pochhammer(a1, qexp(1), PochLen::Finite(n as u32), scale, order)?;
        let p2 = qfunctions::pochhammer(a2, qexp(1), PochLen::Finite(n as u32), scale, order)?;
        let term = p1.mul(&p2)?.mul(&h.truncated(order_scaled))?.mul_monomial(
            n * scale.denominator(),
            0,
            &number::qint(1),
        );
        out = out.add(&term.truncated(order_scaled))?;
    }
    Ok(out)
}

/// Frequency conditions of the finitized partition generating function:
/// parts 1..L-1 with f_1 <= i-1, f_{L-1} <= i'-1 and the pairwise bound
/// f_j + f_{j+1} <= k running over adjacent part sizes 1 <= j <= L-2.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct FrequencyProfile {
    pub k: i64,
    pub i: i64,
    pub i_prime: i64,
    /// L: part sizes run over 1..L-1 (L <= 1 leaves only the empty
    /// partition).
    pub parts_bound: i64,
}

impl FrequencyProfile {
    pub fn new(k: i64, i: i64, i_prime: i64, parts_bound: i64) -> Self {
        assert!(k >= 0 && i >= 1 && i_prime >= 1);
        FrequencyProfile {
            k,
            i,
            i_prime,
            parts_bound,
        }
    }

    /// True if a frequency vector (f_1 .. f_{L-1}) satisfies the profile.
    pub fn admits(&self, freqs: &[i64]) -> bool {
        let l = self.parts_bound;
        if freqs.len() as i64 != (l - 1).max(0) {
            return false;
        }
        if freqs.iter().any(|&f| f < 0) {
            return false;
        }
        if let Some(&f1) = freqs.first() {
            if f1 > self.i - 1 {
                return false;
            }
        }
        if let Some(&flast) = freqs.last() {
            if flast > self.i_prime - 1 {
                return false;
            }
        }
        freqs.windows(2).all(|w| w[0] + w[1] <= self.k)
    }
}

/// Generating function for partitions sum_j j*f_j over the frequency
/// vectors a [`FrequencyProfile`] admits, truncated at the order.
pub fn g_partition(
    k: i64,
    i: i64,
    i_prime: i64,
    parts_bound: i64,
    scale: ExpScale,
    order: i64,
) -> Series {
    let profile = FrequencyProfile::new(k, i, i_prime, parts_bound);
    let l = profile.parts_bound;
    let order_scaled = order * scale.denominator();
    if l <= 1 {
        return Series::one(scale, order_scaled);
    }
    let cap = |j: i64| -> i64 {
        let mut c = if j == 1 { i - 1 } else { k };
        if j == l - 1 {
            c = c.min(i_prime - 1);
        }
        if j > 0 {
            c = c.min((order.max(1) - 1).div_euclid(j).max(0));
        }
        c
    };
    // state: f_j -> generating series of the prefix
    let mut states: HashMap<i64, Series> = HashMap::new();
    for f in 0..=cap(1) {
        states.insert(
            f,
            Series::monomial(
                scale,
                order_scaled,
                f * scale.denominator(),
                0,
                number::qint(1),
            ),
        );
    }
    for j in 2..l {
        let mut next: HashMap<i64, Series> = HashMap::new();
        for f2 in 0..=cap(j) {
            let mut acc = Series::zero(scale, order_scaled);
            for (f1, w) in &states {
                if f1 + f2 > k {
                    continue;
                }
                acc = acc.add(w).expect("same scale");
            }
            if acc.is_zero() {
                continue;
            }
            let shifted = acc
                .mul_monomial(j * f2 * scale.denominator(), 0, &number::qint(1))
                .truncated(order_scaled);
            if !shifted.is_zero() || f2 == 0 {
                next.insert(f2, shifted);
            }
        }
        states = next;
    }
    let mut out = Series::zero(scale, order_scaled);
    for w in states.values() {
        out = out.add(w).expect("same scale");
    }
    out
}

/// Both sides of the Andrews analytic identity for (k, i):
/// multi-sum over n_1..n_k >= 0 of q^{N_1^2+..+N_k^2+N_i+..+N_k} / prod (q)_{n_j}
/// versus (q)_inf^{-1} sum_j (-1)^j q^{j((2k+3)(j+1)-2i)/2}.
pub fn andrews_sides(k: i64, i: i64, scale: ExpScale, order: i64) -> Result<(Series, Series)> {
    assert!(1 <= i && i <= k);
    let order_scaled = order * scale.denominator();

    // Finite Pochhammer inverses 1/(q)_v, memoized.
    let mut inv_poch: HashMap<i64, Series> = HashMap::new();
    let mut get_inv = |v: i64| -> Result<Series> {
        if let Some(s) = inv_poch.get(&v) {
            return Ok(s.clone());
        }
        let p = qfunctions::pochhammer(
            MonomialArg::q_pow(qexp(1)),
            qexp(1),
            PochLen::Finite(v as u32),
            scale,
            order,
        )?;
        let s = p.invert_unit()?;
        inv_poch.insert(v, s.clone());
        Ok(s)
    };

    // Enumerate N_1 >= N_2 >= ... >= N_k >= 0 (N_j are suffix sums of the
    // n_j) with pruning on the accumulated exponent.
    struct MultiSum<'a> {
        i: i64,
        order: i64,
        order_scaled: i64,
        scale: ExpScale,
        get_inv: &'a mut dyn FnMut(i64) -> Result<Series>,
        acc: Series,
    }

    impl MultiSum<'_> {
        /// Descend from level j with N_{j+1} = n_above and the exponent and
        /// Pochhammer-inverse product accumulated so far.
        fn descend(&mut self, j: i64, n_above: i64, exp: i64, prod: &Series) -> Result<()> {
            if j == 0 {
                let term = prod.mul_monomial(exp * self.scale.denominator(), 0, &number::qint(1));
                self.acc = self.acc.add(&term.truncated(self.order_scaled))?;
                return Ok(());
            }
            let mut nj = n_above;
            loop {
                let e = exp + nj * nj + if j >= self.i { nj } else { 0 };
                if e >= self.order {
                    break;
                }
                let inv = (self.get_inv)(nj - n_above)?;
                let prod2 = prod.mul(&inv)?.truncated(self.order_scaled);
                self.descend(j - 1, nj, e, &prod2)?;
                nj += 1;
            }
            Ok(())
        }
    }

    let mut walker = MultiSum {
        i,
        order,
        order_scaled,
        scale,
        get_inv: &mut get_inv,
        acc: Series::zero(scale, order_scaled),
    };
    walker.descend(k, 0, 0, &Series::one(scale, order_scaled))?;
    let lhs = walker.acc;

    // (q)_inf^{-1} * bilateral pentagonal-type sum.
    let a2 = QExp::new(2 * k + 3, 2);
    let d1 = QExp::new(2 * k + 3 - 2 * i, 2);
    let js = crate::hecke::lattice::line_points(a2, d1, qexp(order))?;
    let mut theta_side = Series::zero(scale, order_scaled);
    for j in js {
        let e = scale.scaled(a2 * qexp(j * j) + d1 * qexp(j))?;
        theta_side.accumulate(e, 0, &number::qint(Sign::of_parity(j).value()));
    }
    let inv_euler = qfunctions::euler_product(scale, order)?.invert_unit()?;
    let rhs = theta_side.mul(&inv_euler)?.truncated(order_scaled);
    Ok((lhs, rhs))
}

/// Report-style convenience: compare the two Andrews sides.
pub fn andrews_identity_check(k: i64, i: i64, order: i64) -> Result<Comparison> {
    let scale = ExpScale::unit();
    let (lhs, rhs) = andrews_sides(k, i, scale, order)?;
    lhs.diff_report(&rhs)
}

/// The two sides of the reciprocal-duality between H and G:
/// H_n(t,m;b;q^{-1})  vs  q^{(t-1)(bn - n(n+1))} G_{t-1, m, t, 2n-b+1}(q).
/// The G side is enumerated far enough to cover the full support of the
/// reversed polynomial plus a margin.
pub fn h_g_duality_sides(t: i64, m: i64, b: i64, n: i64) -> Result<(Series, Series)> {
    let scale = ExpScale::unit();
    let params = GordonParams::new(t, m, b, n);
    let lhs = gordon_h_reversed(params);
    let shift = (t - 1) * (b * n - n * (n + 1));
    let g_order = -shift + n + 2;
    let g = g_partition(t - 1, m, t, 2 * n - b + 1, scale, g_order);
    let rhs = g.mul_monomial(shift, 0, &number::qint(1));
    Ok((lhs, rhs))
}

/// The inner-sum form of H_n at t = 2:
/// H_n(2,1;0;q) = sum_k q^{k^2+k} [n+k over n-k], and
/// H_n(2,2;0;q) = sum_k q^{k^2+k} [n+k+1 over n-k].
pub fn h_t2_inner_sum(m: i64, n: i64) -> Series {
    assert!(m == 1 || m == 2);
    let mut gauss = GaussianTable::new();
    let mut out = Series::zero(ExpScale::unit(), EXACT_ORDER);
    for k in 0..=n {
        let top = if m == 1 { n + k } else { n + k + 1 };
        let g = gauss.binomial(top, n - k);
        let term = g.mul_monomial(k * k + k, 0, &number::qint(1));
        out = out.add(&term).expect("same scale");
    }
    out
}

/// Nonnegativity and integrality of every H coefficient on a small grid:
/// the polynomials count weighted lattice chains.
pub fn h_coefficients_are_counts(params: GordonParams) -> bool {
    let h = gordon_h(params);
    let zero = QRat::from_integer(0.into());
    let ok = h
        .terms()
        .all(|(_, p)| p.iter().all(|(_, c)| number::is_integer(c) && c >= &zero));
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::qint;

    fn d1() -> ExpScale {
        ExpScale::unit()
    }

    #[test]
    fn h_trivial_cases() {
        // t = 1: empty product, H = 1 for every n and b.
        for n in [0, 1, 5] {
            for b in [0, 1] {
                let h = gordon_h(GordonParams::new(1, 1, b, n));
                assert!(h
                    .diff_report(&Series::one(d1(), EXACT_ORDER))
                    .unwrap()
                    .is_pass());
            }
        }
        // n = 0, b = 0: the all-zero chain contributes [chi, 0] = 1.
        for t in 1..=4 {
            for m in 1..=t {
                let h = gordon_h(GordonParams::new(t, m, 0, 0));
                assert!(h
                    .diff_report(&Series::one(d1(), EXACT_ORDER))
                    .unwrap()
                    .is_pass());
            }
        }
    }

    #[test]
    fn h_first_nontrivial() {
        // H_1(2,1;0;q) = 1 + q^2
        let h = gordon_h(GordonParams::new(2, 1, 0, 1));
        assert_eq!(h.coeff(0, 0), qint(1));
        assert_eq!(h.coeff(2, 0), qint(1));
        assert_eq!(h.num_terms(), 2);
    }

    #[test]
    fn h_inner_sum_cross_check_t2() {
        for m in [1, 2] {
            for n in 0..=8 {
                let h = gordon_h(GordonParams::new(2, m, 0, n));
                let inner = h_t2_inner_sum(m, n);
                assert!(h.diff_report(&inner).unwrap().is_pass(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn h_counts_nonnegative_integers() {
        for t in 1..=4 {
            for m in 1..=t {
                for n in 0..=8 {
                    assert!(
                        h_coefficients_are_counts(GordonParams::new(t, m, 0, n)),
                        "t={t} m={m} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn u_series_constant_term_and_low_orders() {
        // Constant term 1 (only n = 0 survives); brute-forced low orders of
        // U_1^{(1)}: 1 + q(1+x) + q^2(x^{-1} + 2 + x).
        let u = u_series(1, 1, Sign::Plus, d1(), 3).unwrap();
        assert_eq!(u.coeff(0, 0), qint(1));
        assert_eq!(u.xpoly_at(0).unwrap().num_terms(), 1);
        assert_eq!(u.coeff(1, 0), qint(1));
        assert_eq!(u.coeff(1, 1), qint(1));
        assert_eq!(u.coeff(2, -1), qint(1));
        assert_eq!(u.coeff(2, 0), qint(2));
        assert_eq!(u.coeff(2, 1), qint(1));
    }

    #[test]
    fn u_series_equals_f21_route() {
        // (q)_inf * U(-x;q) = f_{1,2,3}(x^{-1}q^2, q^3; q) at low order; an
        // independent cross-check of the recomputed q^2 coefficient.
        let order = 12;
        let u = u_series(1, 1, Sign::Minus, d1(), order).unwrap();
        let euler = qfunctions::euler_product(d1(), order).unwrap();
        let lhs = euler.mul(&u).unwrap();
        let params = crate::hecke::HeckeParams::new(
            1,
            2,
            3,
            MonomialArg::of(Sign::Plus, -1, 2),
            MonomialArg::of(Sign::Plus, 0, 3),
        );
        let rhs = crate::hecke::hecke_f_abc(&params, d1(), order).unwrap();
        assert!(lhs.diff_report(&rhs).unwrap().is_pass());
    }

    #[test]
    fn u_series_x_support_bound() {
        let order = 15;
        let u = u_series(2, 1, Sign::Plus, d1(), order).unwrap();
        for (e, p) in u.terms() {
            assert!(
                p.min_deg().unwrap() >= -order && p.max_deg().unwrap() <= order,
                "q^{e}"
            );
        }
    }

    #[test]
    fn g_partition_edges() {
        // i = 1 forces f_1 = 0.
        let g = g_partition(2, 1, 1, 2, d1(), 10);
        assert!(g.diff_report(&Series::one(d1(), 10)).unwrap().is_pass());
        // Parts range empty: only the empty partition.
        let g1 = g_partition(3, 2, 2, 1, d1(), 10);
        assert!(g1.diff_report(&Series::one(d1(), 10)).unwrap().is_pass());
        // Hand case: L=3, k=1, i=1, i'=2 gives 1 + q^2.
        let g2 = g_partition(1, 1, 2, 3, d1(), 10);
        assert_eq!(g2.coeff(0, 0), qint(1));
        assert_eq!(g2.coeff(2, 0), qint(1));
        assert_eq!(g2.num_terms(), 2);
    }

    #[test]
    fn g_partition_matches_brute_force_enumeration() {
        // Independent oracle: walk every frequency vector the profile
        // admits (frequencies are bounded by i-1 / k / i'-1).
        let order = 18;
        for (k, i, ip, l) in [(1, 1, 2, 3), (2, 2, 3, 4), (2, 3, 2, 5), (3, 2, 2, 2)] {
            let profile = FrequencyProfile::new(k, i, ip, l);
            let mut oracle = Series::zero(d1(), order);
            let nparts = (l - 1).max(0) as usize;
            let cap = k.max(i - 1).max(ip - 1);
            let mut freqs = vec![0i64; nparts];
            loop {
                if profile.admits(&freqs) {
                    let weight: i64 = freqs
                        .iter()
                        .enumerate()
                        .map(|(idx, f)| (idx as i64 + 1) * f)
                        .sum();
                    oracle.accumulate(weight, 0, &qint(1));
                }
                // odometer over [0, cap]^nparts
                let mut pos = 0;
                loop {
                    if pos == nparts {
                        break;
                    }
                    freqs[pos] += 1;
                    if freqs[pos] <= cap {
                        break;
                    }
                    freqs[pos] = 0;
                    pos += 1;
                }
                if pos == nparts {
                    break;
                }
            }
            let dp = g_partition(k, i, ip, l, d1(), order);
            assert!(
                dp.diff_report(&oracle).unwrap().is_pass(),
                "k={k} i={i} ip={ip} L={l}"
            );
        }
    }

    #[test]
    fn duality_small_grid() {
        for t in 1..=3i64 {
            for m in 1..=t {
                for b in [0i64, 1] {
                    for n in 0..=5i64 {
                        if 2 * n - b + 1 < 1 {
                            continue; // degenerate parts bound
                        }
                        let (lhs, rhs) = h_g_duality_sides(t, m, b, n).unwrap();
                        let cut = lhs.order_scaled().min(rhs.order_scaled());
                        assert!(
                            lhs.truncated(cut)
                                .diff_report(&rhs.truncated(cut))
                                .unwrap()
                                .is_pass(),
                            "t={t} m={m} b={b} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn andrews_small_cases() {
        for (k, i) in [(1, 1), (2, 1), (2, 2)] {
            assert!(
                andrews_identity_check(k, i, 20).unwrap().is_pass(),
                "k={k} i={i}"
            );
        }
    }
}
