//! Builders for the right-hand sides of the catalogued identities, each
//! assembled from theta, Pochhammer, double-sum and Appell primitives.
//!
//! Bivariate builders return honest series: anything whose natural
//! statement divides by a non-unit theta is produced in cleared form, and
//! the caller documents the clearing factor. Specialized builders take a
//! [`SpecPoint`] and run univariately.

use crate::error::{Error, Result};
use crate::monomial::{MonomialArg, Sign};
use crate::number::{self};
use crate::qfunctions::{self, PochLen, ThetaForm, ThetaSpec};
use crate::scale::{qexp, ExpScale, QExp};
use crate::series::Series;
use crate::util::{binom2, ensure_order};

use super::lattice::QuadForm;
use super::{
    appell_cleared, appell_m, divide_by_unit, f_tm_with_arg, hecke_f_abc, sg2, theta_pm,
    theta_pm_star, universal_mock_g, AppellParams, HeckeParams, SpecPoint, ThetaPMParams,
};

fn theta_product(arg: MonomialArg, base: QExp, scale: ExpScale, order: i64) -> Result<Series> {
    qfunctions::theta(ThetaSpec::new(arg, base), ThetaForm::Product, scale, order)
}

/// The triple-sum Hecke--Appell form, cleared by (1-x):
/// (x)_inf (q/x)_inf [ (1-x) * T + 1 ] where T runs over the sign-definite
/// quadrants with r = s (mod 2), skipping the origin row whose geometric
/// expansion lives outside the ring, and each remaining row expands
/// 1/(1 - x q^{(r+s)/2}) by the sign rule.
pub fn triple_sum_cleared(t_f: i64, m: i64, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let ord_scaled = ord * scale.denominator();
        let form = ThetaPMParams::new(t_f, t_f, m).quad_form();
        let pts = form.same_sign_points(qexp(ord))?;
        let mut t_sum = Series::zero(scale, ord_scaled);
        for (r, s) in pts {
            if (r - s).rem_euclid(2) != 0 || (r == 0 && s == 0) {
                continue;
            }
            let w = sg2(r, s) * Sign::of_parity((r - s) / 2).value();
            if w == 0 {
                continue;
            }
            let b = scale.scaled(form.eval(r, s))?;
            let h = (r + s) / 2;
            let geom_order = ord + (-b.min(0) + scale.denominator() - 1) / scale.denominator();
            let geom = Series::geometric_factor(
                scale,
                geom_order * scale.denominator(),
                &MonomialArg::of(Sign::Plus, 1, h),
            )?;
            let term = geom.mul_monomial(b, 0, &number::qint(w));
            t_sum = t_sum.add(&term.truncated(ord_scaled))?;
        }
        let one_minus_x = Series::one_minus(scale, ord_scaled, &MonomialArg::x())?;
        let inner = one_minus_x
            .mul(&t_sum)?
            .add(&Series::one(scale, ord_scaled))?;
        let x_inf =
            qfunctions::pochhammer(MonomialArg::x(), qexp(1), PochLen::Infinite, scale, ord)?;
        let qx_inf = qfunctions::pochhammer(
            MonomialArg::of(Sign::Plus, -1, 1),
            qexp(1),
            PochLen::Infinite,
            scale,
            ord,
        )?;
        x_inf.mul(&qx_inf)?.mul(&inner)
    })
}

/// The theta-weighted expansion of (q)_inf^3 q^{t/4} f_{t,m} on the (1/4t)
/// lattice:
/// sum_{k mod 2t} (-1)^k q^{(k+t)^2/4t} theta_{t+k,m+k}
///   * sum_{r, l = k (mod 2t)} sg(r,l)(-1)^r q^{r^2/2 + rl + (2t-1)l^2/4t + r/2} x^{-r}.
pub fn ftm_theta_expansion_rhs(t: i64, m: i64, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let ord_scaled = ord * scale.denominator();
        let mut out = Series::zero(scale, ord_scaled);
        let form = QuadForm {
            a2: QExp::new(1, 2),
            b2: qexp(1),
            c2: QExp::new(2 * t - 1, 4 * t),
            d1: QExp::new(1, 2),
            e1: qexp(0),
        };
        let pts = form.same_sign_points(qexp(ord))?;
        for k in 0..(2 * t) {
            let theta = theta_pm(ThetaPMParams::new(t, t + k, m + k), ExpScale::unit(), ord)?
                .rescale(scale)?;
            if theta.is_zero() {
                continue;
            }
            let mut dsum = Series::zero(scale, ord_scaled);
            for (r, l) in &pts {
                let (r, l) = (*r, *l);
                if (l - k).rem_euclid(2 * t) != 0 {
                    continue;
                }
                let w = sg2(r, l) * Sign::of_parity(r).value();
                if w == 0 {
                    continue;
                }
                let e = scale.scaled(form.eval(r, l))?;
                dsum.accumulate(e, -r, &number::qint(w));
            }
            let shift = scale.scaled(QExp::new((k + t) * (k + t), 4 * t))?;
            let term =
                theta
                    .mul(&dsum)?
                    .mul_monomial(shift, 0, &number::qint(Sign::of_parity(k).value()));
            out = out.add(&term.truncated(ord_scaled))?;
        }
        Ok(out)
    })
}

/// The double-sum factor shared by the integer-lattice expansions:
/// f_{1, 2t, 2t(2t-1)}(x^{-1} q^{k+1}, -q^{(k+t)(2t-1)}; q).
fn x_block(t: i64, k: i64, scale: ExpScale, order: i64) -> Result<Series> {
    let params = HeckeParams::new(
        1,
        2 * t,
        2 * t * (2 * t - 1),
        MonomialArg::of(Sign::Plus, -1, k + 1),
        MonomialArg::of(Sign::Minus, 0, (k + t) * (2 * t - 1)),
    );
    hecke_f_abc(&params, scale, order)
}

/// The integer-lattice expansion of (q)_inf^3 f_{t,m} through theta_{p,m}:
/// sum_k (-1)^k q^{binom(k,2)+k} theta_{t+k,m+k} * x_block(t, k).
pub fn ftm_double_sum_rhs(t: i64, m: i64, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let ord_scaled = ord * scale.denominator();
        let mut out = Series::zero(scale, ord_scaled);
        for k in 0..(2 * t) {
            let theta = theta_pm(ThetaPMParams::new(t, t + k, m + k), scale, ord)?;
            if theta.is_zero() {
                continue;
            }
            let block = x_block(t, k, scale, ord)?;
            let shift = scale.scaled(qexp(binom2(k) + k))?;
            let term = theta.mul(&block)?.mul_monomial(
                shift,
                0,
                &number::qint(Sign::of_parity(k).value()),
            );
            out = out.add(&term.truncated(ord_scaled))?;
        }
        Ok(out)
    })
}

/// The same expansion with theta_{t+k,m+k} replaced by its pair of
/// double sums f_{1,4t-1,1}: the fully Hecke-type product form of
/// (q)_inf^3 f_{t,m}.
pub fn ftm_product_sum_rhs(t: i64, m: i64, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let ord_scaled = ord * scale.denominator();
        let mut out = Series::zero(scale, ord_scaled);
        for k in 0..(2 * t) {
            let first = hecke_f_abc(
                &HeckeParams::new(
                    1,
                    4 * t - 1,
                    1,
                    MonomialArg::of(Sign::Plus, 0, 2 * t + k - m),
                    MonomialArg::of(Sign::Plus, 0, 1 + m + k),
                ),
                scale,
                ord,
            )?;
            let second = hecke_f_abc(
                &HeckeParams::new(
                    1,
                    4 * t - 1,
                    1,
                    MonomialArg::of(Sign::Plus, 0, 4 * t + k - m),
                    MonomialArg::of(Sign::Plus, 0, 2 * t + m + k + 1),
                ),
                scale,
                ord + 2 * t + k,
            )?;
            let bracket = first.add(&second.mul_monomial(
                scale.scaled(qexp(2 * t + k))?,
                0,
                &number::qint(1),
            ))?;
            let block = x_block(t, k, scale, ord)?;
            let shift = scale.scaled(qexp(binom2(k) + k))?;
            let term = bracket.mul(&block)?.mul_monomial(
                shift,
                0,
                &number::qint(Sign::of_parity(k).value()),
            );
            out = out.add(&term.truncated(ord_scaled))?;
        }
        Ok(out)
    })
}

/// theta_{p,m} written as a pair of f_{1,4t-1,1} double sums.
pub fn theta_pm_as_double_sums(
    t: i64,
    p: i64,
    m: i64,
    scale: ExpScale,
    order: i64,
) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let first = hecke_f_abc(
            &HeckeParams::new(
                1,
                4 * t - 1,
                1,
                MonomialArg::of(Sign::Plus, 0, 2 * p - m),
                MonomialArg::of(Sign::Plus, 0, 1 + m),
            ),
            scale,
            ord,
        )?;
        let second = hecke_f_abc(
            &HeckeParams::new(
                1,
                4 * t - 1,
                1,
                MonomialArg::of(Sign::Plus, 0, 2 * p + 2 * t - m),
                MonomialArg::of(Sign::Plus, 0, 2 * t + m + 1),
            ),
            scale,
            (ord - (t + p)).max(1),
        )?;
        first.add(&second.mul_monomial(scale.scaled(qexp(t + p))?, 0, &number::qint(1)))
    })
}

/// The Appell-form right-hand side of Theta(-x^{2t-1};q^{2t-1}) f_{t,m},
/// fully cleared, with M(x,z;q) = Theta(z;q) m(x,z;q) the theta-cleared
/// Appell sum:
///
/// ```text
///   x^{-2t+m+1} M(q^m x^{1-2t}, -x^{2t-1}; q^{2t-1})
/// + x^{-m}      M(q^{2t-1-m} x^{1-2t}, -x^{2t-1}; q^{2t-1})
/// - x^{-2t} (q)_inf^{-3} sum_k x^k q^k theta_{t+k,m+k}
///     sum_s (-1)^s q^{binom(s,2)} Theta(q^{(2t-1)(t-s)}; q^{2t(2t-1)}) x^s
///           M(-q^k x^{-2t}, q^s x^{2t}; q^{2t})
/// ```
pub fn ftm_appell_rhs_cleared(t: i64, m: i64, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let ord_scaled = ord * scale.denominator();
        let base = qexp(2 * t - 1);
        let m1 = appell_cleared(
            &AppellParams::new(
                MonomialArg::of(Sign::Plus, 1 - 2 * t, m),
                MonomialArg::of(Sign::Minus, 2 * t - 1, 0),
                base,
            ),
            scale,
            ord,
        )?;
        let m2 = appell_cleared(
            &AppellParams::new(
                MonomialArg::of(Sign::Plus, 1 - 2 * t, 2 * t - 1 - m),
                MonomialArg::of(Sign::Minus, 2 * t - 1, 0),
                base,
            ),
            scale,
            ord,
        )?;
        let mut out = m1
            .mul_monomial(0, -2 * t + m + 1, &number::qint(1))
            .add(&m2.mul_monomial(0, -m, &number::qint(1)))?;

        let qinf3_inv = qfunctions::euler_product(scale, ord)?
            .pow(3)?
            .invert_unit()?;
        let mut block = Series::zero(scale, ord_scaled);
        for k in 0..(2 * t) {
            let theta_k = theta_pm(ThetaPMParams::new(t, t + k, m + k), scale, ord)?;
            if theta_k.is_zero() {
                continue;
            }
            let mut s_sum = Series::zero(scale, ord_scaled);
            for s in 0..(2 * t) {
                let a_theta = theta_product(
                    MonomialArg::q_pow(qexp((2 * t - 1) * (t - s))),
                    qexp(2 * t * (2 * t - 1)),
                    scale,
                    ord,
                )?;
                if a_theta.is_zero() {
                    continue;
                }
                let m3 = appell_cleared(
                    &AppellParams::new(
                        MonomialArg::of(Sign::Minus, -2 * t, k),
                        MonomialArg::of(Sign::Plus, 2 * t, s),
                        qexp(2 * t),
                    ),
                    scale,
                    ord,
                )?;
                let term = a_theta.mul(&m3)?.mul_monomial(
                    scale.scaled(qexp(binom2(s)))?,
                    s,
                    &number::qint(Sign::of_parity(s).value()),
                );
                s_sum = s_sum.add(&term.truncated(ord_scaled))?;
            }
            let term =
                theta_k
                    .mul(&s_sum)?
                    .mul_monomial(scale.scaled(qexp(k))?, k, &number::qint(1));
            block = block.add(&term.truncated(ord_scaled))?;
        }
        let tail = block
            .mul(&qinf3_inv)?
            .mul_monomial(0, -2 * t, &number::qint(-1));
        out = out.add(&tail.truncated(out.order_scaled().min(tail.order_scaled())))?;
        Ok(out)
    })
}

/// The functional-equation residual, which must vanish identically:
/// f(qx) + x^{2t-1} f(x) - (x^{2t-m-1} + x^m)
///   + Theta(x;q)(q)_inf^{-3} sum_{k=0}^{2t-1} x^{k-1} q^k theta_{t+k,m+k}.
pub fn func_eq_residual(t: i64, m: i64, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let ord_scaled = ord * scale.denominator();
        let f_at_qx = f_tm_with_arg(t, m, MonomialArg::of(Sign::Plus, 1, 1), scale, ord)?;
        let f_at_x = f_tm_with_arg(t, m, MonomialArg::x(), scale, ord)?;
        let mut out = f_at_qx.add(&f_at_x.mul_monomial(0, 2 * t - 1, &number::qint(1)))?;
        let mut monomials = Series::zero(scale, ord_scaled);
        monomials.accumulate(0, 2 * t - m - 1, &number::qint(1));
        monomials.accumulate(0, m, &number::qint(1));
        out = out.sub(&monomials)?;

        let theta_x = theta_product(MonomialArg::x(), qexp(1), scale, ord)?;
        let qinf3_inv = qfunctions::euler_product(scale, ord)?
            .pow(3)?
            .invert_unit()?;
        let mut k_sum = Series::zero(scale, ord_scaled);
        for k in 0..(2 * t) {
            let theta_k = theta_pm(ThetaPMParams::new(t, t + k, m + k), scale, ord)?;
            let term = theta_k.mul_monomial(scale.scaled(qexp(k))?, k - 1, &number::qint(1));
            k_sum = k_sum.add(&term.truncated(ord_scaled))?;
        }
        let tail = theta_x.mul(&qinf3_inv)?.mul(&k_sum)?;
        out.add(&tail.truncated(out.order_scaled().min(tail.order_scaled())))
    })
}

/// The theta-star block sum
/// sum_{k=0}^{2t-1} (-1)^k theta*_{t+k,m+k}
///   sum_{r = 2tl+(2t-1)k (mod 2t(2t-1))} q^{r^2/(4t(2t-1))}.
pub fn theta_star_block_sum(t: i64, m: i64, l: i64, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let ord_scaled = ord * scale.denominator();
        let modulus = 2 * t * (2 * t - 1);
        let denom = 4 * t * (2 * t - 1);
        let mut out = Series::zero(scale, ord_scaled);
        for k in 0..(2 * t) {
            let star = theta_pm_star(ThetaPMParams::new(t, t + k, m + k), scale, ord)?;
            if star.is_zero() {
                continue;
            }
            let residue = (2 * t * l + (2 * t - 1) * k).rem_euclid(modulus);
            let mut class_sum = Series::zero(scale, ord_scaled);
            // r^2/denom < ord forces |r| < sqrt(ord*denom), which the
            // radius strictly dominates (no linear term to complete).
            let radius = ((ord as f64 * denom as f64).sqrt().ceil() as i64) + modulus + 2;
            assert!(
                radius * radius >= ord * denom,
                "class radius derivation is wrong"
            );
            for r in -radius..=radius {
                if r.rem_euclid(modulus) != residue {
                    continue;
                }
                let e = QExp::new(r * r, denom);
                if e < qexp(ord) {
                    class_sum.accumulate(scale.scaled(e)?, 0, &number::qint(1));
                }
            }
            let term = class_sum.scalar_mul(&number::qint(Sign::of_parity(k).value()));
            out = out.add(&star.mul(&term)?.truncated(ord_scaled))?;
        }
        Ok(out)
    })
}

// ---------------------------------------------------------------------------
// Specialized (univariate) builders
// ---------------------------------------------------------------------------

/// f_{1,2,3}(x^{-1} q^2, q^3; q) at a specialization point.
pub fn f123_spec(point: SpecPoint, scale: ExpScale, order: i64) -> Result<Series> {
    let params = HeckeParams::with_base(
        1,
        2,
        3,
        point.monomial(Sign::Plus, -1, 2),
        point.monomial(Sign::Plus, 0, 3),
        point.base(1),
    );
    hecke_f_abc(&params, scale, order)
}

/// The Appell-function form of f_{1,2,3}(x^{-1}q^2, q^3; q): two genuine
/// Appell sums plus a theta-cleared block divided by Theta(-x^3;q^3).
pub fn f123_appell_full_rhs(point: SpecPoint, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let ord_scaled = ord * scale.denominator();
        let euler = qfunctions::pochhammer(
            point.monomial(Sign::Plus, 0, 1),
            point.base(1),
            PochLen::Infinite,
            scale,
            ord,
        )?;
        let m1 = appell_m(
            &AppellParams::new(
                point.monomial(Sign::Plus, -3, 2),
                point.monomial(Sign::Minus, 3, 0),
                point.base(3),
            ),
            scale,
            ord,
        )?;
        let m2 = appell_m(
            &AppellParams::new(
                point.monomial(Sign::Plus, -3, 1),
                point.monomial(Sign::Minus, 3, 0),
                point.base(3),
            ),
            scale,
            ord,
        )?;
        let out = euler
            .mul(&m1)?
            .mul_arg(&point.x_pow(-1))?
            .add(&euler.mul(&m2)?.mul_arg(&point.x_pow(-2))?)?;

        let mut s_sum = Series::zero(scale, ord_scaled);
        for s in 0..4i64 {
            let coeff_theta = theta_product(
                point.monomial(Sign::Plus, 0, 3 * (2 - s)),
                point.base(12),
                scale,
                ord,
            )?;
            if coeff_theta.is_zero() {
                continue;
            }
            let ma = appell_cleared(
                &AppellParams::new(
                    point.monomial(Sign::Minus, -4, 1),
                    point.monomial(Sign::Plus, 4, s),
                    point.base(4),
                ),
                scale,
                ord,
            )?;
            let mb = appell_cleared(
                &AppellParams::new(
                    point.monomial(Sign::Minus, -4, 3),
                    point.monomial(Sign::Plus, 4, s),
                    point.base(4),
                ),
                scale,
                ord,
            )?;
            let bracket = ma
                .mul_arg(&point.x_pow(-3))?
                .sub(&mb.mul_arg(&point.x_pow(-1))?)?;
            let sign = Sign::of_parity(s).value();
            let term = coeff_theta.mul(&bracket)?.mul_arg(&point.monomial(
                Sign::of_parity(0),
                s,
                point_binom2_units(s),
            ))?;
            let term = term.scalar_mul(&number::qint(sign));
            s_sum = s_sum.add(&term.truncated(ord_scaled))?;
        }
        let v3 = theta_product(point.monomial(Sign::Minus, 3, 0), point.base(3), scale, ord)?;
        let tail = divide_by_unit(&s_sum, &v3)?;
        out.add(&tail.truncated(out.order_scaled().min(tail.order_scaled())))
    })
}

/// binom(s,2) in the identity's own q-units (the SpecPoint scales it).
fn point_binom2_units(s: i64) -> i64 {
    binom2(s)
}

/// The minimized-Appell form of f_{1,2,3}(x^{-1}q^2, q^3; q): the same two
/// Appell sums, one extra Appell sum at base q, and a single theta quotient.
pub fn f123_modtheta_rhs(point: SpecPoint, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let euler = qfunctions::pochhammer(
            point.monomial(Sign::Plus, 0, 1),
            point.base(1),
            PochLen::Infinite,
            scale,
            ord,
        )?;
        let m1 = appell_m(
            &AppellParams::new(
                point.monomial(Sign::Plus, -3, 2),
                point.monomial(Sign::Minus, 3, 0),
                point.base(3),
            ),
            scale,
            ord,
        )?;
        let m2 = appell_m(
            &AppellParams::new(
                point.monomial(Sign::Plus, -3, 1),
                point.monomial(Sign::Minus, 3, 0),
                point.base(3),
            ),
            scale,
            ord,
        )?;
        let mut out = euler
            .mul(&m1)?
            .mul_arg(&point.x_pow(-1))?
            .add(&euler.mul(&m2)?.mul_arg(&point.x_pow(-2))?)?;

        let theta_x = theta_product(point.monomial(Sign::Plus, 1, 0), point.base(1), scale, ord)?;
        let m3 = appell_m(
            &AppellParams::new(
                point.monomial(Sign::Plus, -2, 1),
                point.monomial(Sign::Minus, 0, 0),
                point.base(1),
            ),
            scale,
            ord,
        )?;
        let mid = theta_x.mul(&m3)?.mul_arg(&point.x_pow(-1))?;
        out = out.sub(&mid.truncated(out.order_scaled().min(mid.order_scaled())))?;

        let euler2_cubed = qfunctions::pochhammer(
            point.monomial(Sign::Plus, 0, 2),
            point.base(2),
            PochLen::Infinite,
            scale,
            ord,
        )?
        .pow(3)?;
        let num = euler2_cubed
            .mul(&theta_product(
                point.monomial(Sign::Plus, 0, 1),
                point.base(2),
                scale,
                ord,
            )?)?
            .mul(&theta_product(
                point.monomial(Sign::Minus, 1, 0),
                point.base(1),
                scale,
                ord,
            )?)?
            .mul(&theta_product(
                point.monomial(Sign::Plus, -3, 0),
                point.base(3),
                scale,
                ord,
            )?)?;
        let den = theta_product(point.monomial(Sign::Minus, 0, 0), point.base(2), scale, ord)?
            .mul(&theta_product(
                point.monomial(Sign::Minus, 0, 1),
                point.base(2),
                scale,
                ord,
            )?)?
            .mul(&theta_product(
                point.monomial(Sign::Minus, 3, 0),
                point.base(3),
                scale,
                ord,
            )?)?
            .mul(&theta_product(
                point.monomial(Sign::Minus, -2, 0),
                point.base(1),
                scale,
                ord,
            )?)?;
        let quot = divide_by_unit(&num, &den)?;
        out.sub(&quot.truncated(out.order_scaled().min(quot.order_scaled())))
    })
}

/// The product-to-sum expansion for a theta pair (n = 3 instance with the
/// second argument tied to x^{-3}): both sides at a specialization point.
pub fn theta_pair_expansion_sides(
    point: SpecPoint,
    scale: ExpScale,
    order: i64,
) -> Result<(Series, Series)> {
    let lhs = ensure_order(scale, order, |ord| {
        theta_product(point.monomial(Sign::Minus, 1, 0), point.base(1), scale, ord)?.mul(
            &theta_product(point.monomial(Sign::Plus, -3, 0), point.base(3), scale, ord)?,
        )
    })?;
    let rhs = ensure_order(scale, order, |ord| {
        let ord_scaled = ord * scale.denominator();
        let mut acc = Series::zero(scale, ord_scaled);
        for k in 0..=3i64 {
            let t1 = theta_product(
                point.monomial(Sign::Plus, 0, 3 + 3 * k),
                point.base(12),
                scale,
                ord,
            )?;
            if t1.is_zero() {
                continue;
            }
            let t2 = theta_product(
                point.monomial(Sign::Plus, -4, 1 - k),
                point.base(4),
                scale,
                ord,
            )?;
            let term = t1
                .mul(&t2)?
                .mul_arg(&point.monomial(Sign::Plus, k, binom2(k)))?;
            acc = acc.add(&term.truncated(ord_scaled))?;
        }
        Ok(acc)
    })?;
    Ok((lhs, rhs))
}

/// The Eulerian-sum identity with a theta correction term:
/// both sides of
/// f_{1,2,3}(x^{-1}q^2,q^3;q) = -(q)_inf g(x;q) - x^{-1}Theta(x;q)m(qx^{-2},-1;q)
///   - (1/2) x^{-5} (q)_inf Theta(-x;q)^3 Theta(qx^{-2};q^2)
///     / ((q^2;q^2)_inf^2 Theta(x^{-4};q^2)).
pub fn f123_eulerian_theta_rhs(point: SpecPoint, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let euler = qfunctions::pochhammer(
            point.monomial(Sign::Plus, 0, 1),
            point.base(1),
            PochLen::Infinite,
            scale,
            ord,
        )?;
        let g = universal_mock_g(point, scale, ord)?;
        let mut out = euler.mul(&g)?.neg();

        let theta_x = theta_product(point.monomial(Sign::Plus, 1, 0), point.base(1), scale, ord)?;
        let m3 = appell_m(
            &AppellParams::new(
                point.monomial(Sign::Plus, -2, 1),
                point.monomial(Sign::Minus, 0, 0),
                point.base(1),
            ),
            scale,
            ord,
        )?;
        let mid = theta_x.mul(&m3)?.mul_arg(&point.x_pow(-1))?;
        out = out
            .truncated(out.order_scaled().min(mid.order_scaled()))
            .sub(&mid.truncated(out.order_scaled().min(mid.order_scaled())))?;

        let num = euler
            .mul(
                &theta_product(point.monomial(Sign::Minus, 1, 0), point.base(1), scale, ord)?
                    .pow(3)?,
            )?
            .mul(&theta_product(
                point.monomial(Sign::Plus, -2, 1),
                point.base(2),
                scale,
                ord,
            )?)?;
        let den = qfunctions::pochhammer(
            point.monomial(Sign::Plus, 0, 2),
            point.base(2),
            PochLen::Infinite,
            scale,
            ord,
        )?
        .pow(2)?
        .mul(&theta_product(
            point.monomial(Sign::Plus, -4, 0),
            point.base(2),
            scale,
            ord,
        )?)?;
        let quot = divide_by_unit(&num, &den)?
            .mul_arg(&point.x_pow(-5))?
            .scalar_mul(&number::qrat(1, 2));
        out.sub(&quot.truncated(out.order_scaled().min(quot.order_scaled())))
    })
}

/// The theta-free Eulerian form:
/// -(q)_inf g(x;q) - x^{-1} Theta(x;q) m(qx^{-2}, x; q), with the second
/// term assembled as the cleared sum M(qx^{-2}, x; q).
pub fn f123_eulerian_rhs(point: SpecPoint, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let euler = qfunctions::pochhammer(
            point.monomial(Sign::Plus, 0, 1),
            point.base(1),
            PochLen::Infinite,
            scale,
            ord,
        )?;
        let g = universal_mock_g(point, scale, ord)?;
        let mut out = euler.mul(&g)?.neg();
        let cleared = appell_cleared(
            &AppellParams::new(
                point.monomial(Sign::Plus, -2, 1),
                point.monomial(Sign::Plus, 1, 0),
                point.base(1),
            ),
            scale,
            ord,
        )?;
        let mid = cleared.mul_arg(&point.x_pow(-1))?;
        out = out.truncated(out.order_scaled().min(mid.order_scaled()));
        out.sub(&mid.truncated(out.order_scaled()))
    })
}

/// The Appell representation of the universal mock theta function:
/// g(x;q) = -x^{-1} m(x^{-3}q^2, -x^3; q^3) - x^{-2} m(x^{-3}q, -x^3; q^3)
///          + (q)_inf^2 Theta(-x;q) Theta(-1;q^3)
///            / (Theta(x;q) Theta(-1;q) Theta(-x^3;q^3)).
pub fn g_appell_rhs(point: SpecPoint, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let m1 = appell_m(
            &AppellParams::new(
                point.monomial(Sign::Plus, -3, 2),
                point.monomial(Sign::Minus, 3, 0),
                point.base(3),
            ),
            scale,
            ord,
        )?;
        let m2 = appell_m(
            &AppellParams::new(
                point.monomial(Sign::Plus, -3, 1),
                point.monomial(Sign::Minus, 3, 0),
                point.base(3),
            ),
            scale,
            ord,
        )?;
        let out = m1
            .mul_arg(&point.x_pow(-1))?
            .add(&m2.mul_arg(&point.x_pow(-2))?)?
            .neg();
        let euler_sq = qfunctions::pochhammer(
            point.monomial(Sign::Plus, 0, 1),
            point.base(1),
            PochLen::Infinite,
            scale,
            ord,
        )?
        .pow(2)?;
        let num = euler_sq
            .mul(&theta_product(
                point.monomial(Sign::Minus, 1, 0),
                point.base(1),
                scale,
                ord,
            )?)?
            .mul(&theta_product(
                point.monomial(Sign::Minus, 0, 0),
                point.base(3),
                scale,
                ord,
            )?)?;
        let den = theta_product(point.monomial(Sign::Plus, 1, 0), point.base(1), scale, ord)?
            .mul(&theta_product(
                point.monomial(Sign::Minus, 0, 0),
                point.base(1),
                scale,
                ord,
            )?)?
            .mul(&theta_product(
                point.monomial(Sign::Minus, 3, 0),
                point.base(3),
                scale,
                ord,
            )?)?;
        let quot = divide_by_unit(&num, &den)?;
        out.add(&quot.truncated(out.order_scaled().min(quot.order_scaled())))
    })
}

/// Both sides of the Pochhammer-sum/double-sum identity in the bivariate
/// ring (the free variable plays the x role):
/// (q^2;q^2)_inf sum_n q^{2n+1} (-xq;q^2)_n (-q/x;q^2)_n
///   = q f_{3,2,1}(q^6, -x q^3; q^2).
pub fn qpoch_double_sum_sides(scale: ExpScale, order: i64) -> Result<(Series, Series)> {
    let lhs = ensure_order(scale, order, |ord| {
        let ord_scaled = ord * scale.denominator();
        let euler2 = qfunctions::pochhammer(
            MonomialArg::q_pow(qexp(2)),
            qexp(2),
            PochLen::Infinite,
            scale,
            ord,
        )?;
        let mut sum = Series::zero(scale, ord_scaled);
        let mut n = 0i64;
        while 2 * n + 1 < ord {
            let p1 = qfunctions::pochhammer(
                MonomialArg::of(Sign::Minus, 1, 1),
                qexp(2),
                PochLen::Finite(n as u32),
                scale,
                ord,
            )?;
            let p2 = qfunctions::pochhammer(
                MonomialArg::of(Sign::Minus, -1, 1),
                qexp(2),
                PochLen::Finite(n as u32),
                scale,
                ord,
            )?;
            let term =
                p1.mul(&p2)?
                    .mul_monomial((2 * n + 1) * scale.denominator(), 0, &number::qint(1));
            sum = sum.add(&term.truncated(ord_scaled))?;
            n += 1;
        }
        euler2.mul(&sum)
    })?;
    let rhs = ensure_order(scale, order, |ord| {
        let params = HeckeParams::with_base(
            3,
            2,
            1,
            MonomialArg::of(Sign::Plus, 0, 6),
            MonomialArg::of(Sign::Minus, 1, 3),
            qexp(2),
        );
        let f = hecke_f_abc(&params, scale, ord)?;
        Ok(f.mul_monomial(scale.scaled(qexp(1))?, 0, &number::qint(1)))
    })?;
    Ok((lhs, rhs))
}

/// Y_t written through its x^s coefficient thetas:
/// sum_{s=0}^{2t-1} a_s x^s sum_n q^{2t binom(n,2)} (-q^s x^{2t})^n.
pub fn y_expansion_rhs(t: i64, scale: ExpScale, order: i64) -> Result<Series> {
    ensure_order(scale, order, |ord| {
        let ord_scaled = ord * scale.denominator();
        let mut out = Series::zero(scale, ord_scaled);
        for s in 0..(2 * t) {
            let a_s = super::y_coefficient(t, s, scale, ord)?;
            if a_s.is_zero() {
                continue;
            }
            let inner = qfunctions::theta(
                ThetaSpec::new(MonomialArg::of(Sign::Plus, 2 * t, s), qexp(2 * t)),
                ThetaForm::Sum,
                scale,
                ord,
            )?;
            let term = a_s.mul(&inner)?.mul_monomial(0, s, &number::qint(1));
            out = out.add(&term.truncated(ord_scaled))?;
        }
        Ok(out)
    })
}

/// A monomial c * x^d on the lattice, order in natural units.
pub fn x_monomial(scale: ExpScale, order: i64, d: i64, c: i64) -> Series {
    Series::monomial(scale, order * scale.denominator(), 0, d, number::qint(c))
}

/// Errors a bivariate build of a specialization-only identity.
pub fn bivariate_unsupported(which: &str) -> Error {
    Error::DenominatorNotExpandable(format!(
        "{which} contains 1/(1 +- x^d)-type factors; use the specialized mode"
    ))
}
