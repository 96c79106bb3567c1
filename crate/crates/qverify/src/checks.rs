//! Construction of both sides of every catalogued identity.
//!
//! Each check returns labelled (lhs, rhs) pairs, already on a common
//! lattice and sound to at least the instance's order. Where the natural
//! statement of an identity divides by a non-unit theta, the pair is built
//! in cleared form and the instance records the clearing factor.

use qseries_core::gordon;
use qseries_core::hecke::{self, rhs, HeckeParams, SpecPoint, ThetaPMParams};
use qseries_core::qfunctions::{self, ThetaForm, ThetaSpec};
use qseries_core::scale::{qexp, QExp};
use qseries_core::util::ensure_order;
use qseries_core::{Error, ExpScale, MonomialArg, Result, Series, Sign};

use crate::instance::{IdentityInstance, Mode};
use crate::rng::Rng;

pub struct SidePair {
    pub label: String,
    pub lhs: Series,
    pub rhs: Series,
}

impl SidePair {
    fn new(label: impl Into<String>, lhs: Series, rhs: Series) -> Self {
        SidePair {
            label: label.into(),
            lhs,
            rhs,
        }
    }
}

fn need(v: Option<i64>, what: &str, id: &str) -> Result<i64> {
    v.ok_or_else(|| Error::NonTruncatable(format!("{id}: missing parameter {what}")))
}

fn point_of(inst: &IdentityInstance) -> Result<SpecPoint> {
    let sigma = match inst.sigma {
        Some(1) => Sign::Plus,
        Some(-1) => Sign::Minus,
        _ => {
            return Err(Error::NonTruncatable(format!(
                "{}: specialization needs sigma in {{+1,-1}}",
                inst.id
            )))
        }
    };
    let j = need(inst.j, "j", &inst.id)?;
    let qsub = inst.qsub.unwrap_or(1);
    Ok(SpecPoint::new(qsub, sigma, j))
}

/// Effective comparison order for a specialized instance: the requested
/// order counts powers of the identity's own q, which the q -> q^u
/// substitution stretches by u.
fn spec_order(inst: &IdentityInstance) -> i64 {
    inst.order * inst.qsub.unwrap_or(1)
}

fn euler_pow(scale: ExpScale, order: i64, k: u32) -> Result<Series> {
    qfunctions::euler_product(scale, order)?.pow(k)
}

/// Build every (lhs, rhs) pair of an instance.
pub fn build_pairs(inst: &IdentityInstance) -> Result<Vec<SidePair>> {
    let d1 = ExpScale::unit();
    let id = inst.id.as_str();
    let order = inst.order;
    match id {
        "JTP" => {
            let mut rng = Rng::new(inst.seed.unwrap_or(1));
            let count = inst.count.unwrap_or(20);
            let scale = ExpScale::new(2);
            let mut pairs = Vec::new();
            for idx in 0..count {
                let sign = if rng.range(0, 1) == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                let d = rng.range(-2, 2);
                let e = QExp::new(rng.range(-6, 6), 2);
                let base = qexp(rng.range(1, 3));
                let spec = ThetaSpec::new(MonomialArg::new(sign, d, e), base);
                let p = qfunctions::theta(spec, ThetaForm::Product, scale, order)?;
                let s = qfunctions::theta(spec, ThetaForm::Sum, scale, order)?;
                pairs.push(SidePair::new(format!("arg #{idx} {}", spec.arg), p, s));
            }
            Ok(pairs)
        }

        "THETA-ROWSUM" => {
            let t = need(inst.t, "t", id)?;
            let mut pairs = Vec::new();
            for p in -3..=6 {
                for m in -3..=6 {
                    let params = ThetaPMParams::new(t, p, m);
                    let form = params.quad_form();
                    for fixed in -5..=5i64 {
                        // Row: s fixed, bilateral sum over r (no sg factor).
                        let mut row = Series::zero(d1, order);
                        let d1_lin = form.b2 * qexp(fixed) + form.d1;
                        let const_term = form.c2 * qexp(fixed * fixed) + form.e1 * qexp(fixed);
                        for r in
                            hecke::lattice::line_points(form.a2, d1_lin, qexp(order) - const_term)?
                        {
                            if (r - fixed).rem_euclid(2) != 0 {
                                continue;
                            }
                            let e = d1.scaled(form.eval(r, fixed))?;
                            let w = Sign::of_parity((r - fixed) / 2).value();
                            row.accumulate(e, 0, &qseries_core::number::qint(w));
                        }
                        pairs.push(SidePair::new(
                            format!("row p={p} m={m} s={fixed}"),
                            row,
                            Series::zero(d1, order),
                        ));
                        // Column: r fixed, bilateral sum over s.
                        let mut col = Series::zero(d1, order);
                        let e1_lin = form.b2 * qexp(fixed) + form.e1;
                        let const_term = form.a2 * qexp(fixed * fixed) + form.d1 * qexp(fixed);
                        for s in
                            hecke::lattice::line_points(form.c2, e1_lin, qexp(order) - const_term)?
                        {
                            if (s - fixed).rem_euclid(2) != 0 {
                                continue;
                            }
                            let e = d1.scaled(form.eval(fixed, s))?;
                            let w = Sign::of_parity((fixed - s) / 2).value();
                            col.accumulate(e, 0, &qseries_core::number::qint(w));
                        }
                        pairs.push(SidePair::new(
                            format!("col p={p} m={m} r={fixed}"),
                            col,
                            Series::zero(d1, order),
                        ));
                    }
                }
            }
            Ok(pairs)
        }

        "THETA-SHIFT-A" | "THETA-SHIFT-B" | "THETA-SHIFT-C" | "THETA-SHIFT-D" => {
            let t = need(inst.t, "t", id)?;
            let star_scale = ExpScale::new(8 * t * (2 * t - 1));
            let mut pairs = Vec::new();
            for p in -3..=6 {
                for m in -3..=6 {
                    // (target params, q-shift exponent, sign) for the theta
                    // relation; the starred relation drops the shift.
                    let (p2, m2, shift, sign) = match id {
                        "THETA-SHIFT-A" => (p + 2 * t, m + 2 * t, p + t, 1),
                        "THETA-SHIFT-B" => (p, m + 2 * t - 1, p - m - t, -1),
                        "THETA-SHIFT-C" => (-p, -m - 1, 0, -1),
                        _ => (p, 2 * p - m - 1, 0, 1),
                    };
                    let lhs = hecke::theta_pm(ThetaPMParams::new(t, p, m), d1, order)?;
                    let rhs_inner =
                        hecke::theta_pm(ThetaPMParams::new(t, p2, m2), d1, order + shift.abs())?;
                    let rhs = rhs_inner
                        .mul_monomial(shift, 0, &qseries_core::number::qint(sign))
                        .truncated(order);
                    pairs.push(SidePair::new(
                        format!("theta p={p} m={m}"),
                        lhs.truncated(rhs.order_scaled().min(order)),
                        rhs,
                    ));

                    let star_l =
                        hecke::theta_pm_star(ThetaPMParams::new(t, p, m), star_scale, order)?;
                    let star_r =
                        hecke::theta_pm_star(ThetaPMParams::new(t, p2, m2), star_scale, order)?
                            .scalar_mul(&qseries_core::number::qint(sign));
                    pairs.push(SidePair::new(format!("star p={p} m={m}"), star_l, star_r));
                }
            }
            Ok(pairs)
        }

        "FUNC-EQ" => {
            let t = need(inst.t, "t", id)?;
            let m = need(inst.m, "m", id)?;
            let residual = rhs::func_eq_residual(t, m, d1, order)?;
            Ok(vec![SidePair::new(
                format!("t={t} m={m}"),
                residual,
                Series::zero(d1, order),
            )])
        }

        "T1-CLOSED" => {
            let m = need(inst.m, "m", id)?;
            let lhs = hecke::f_tm(1, m, d1, order)?;
            let rhs_closed = hecke::f_1m_closed(m, d1)?;
            Ok(vec![SidePair::new(format!("m={m}"), lhs, rhs_closed)])
        }

        "HT-U-TRIPLE" => {
            let t = need(inst.t, "t", id)?;
            let m = need(inst.m, "m", id)?;
            let lhs = ensure_order(d1, order, |ord| {
                let u = gordon::u_series(t, m, Sign::Minus, d1, ord)?;
                let one_minus_x = Series::one_minus(d1, ord, &MonomialArg::x())?;
                euler_pow(d1, ord, 2)?.mul(&u)?.mul(&one_minus_x)
            })?;
            let rhs_t = rhs::triple_sum_cleared(t + 1, m, d1, order)?;
            Ok(vec![SidePair::new(format!("t={t} m={m}"), lhs, rhs_t)])
        }

        "HT-U-APPELL" => {
            let t = need(inst.t, "t", id)?;
            let m = need(inst.m, "m", id)?;
            let lhs = ensure_order(d1, order, |ord| {
                let u = gordon::u_series(t, m, Sign::Minus, d1, ord)?;
                euler_pow(d1, ord, 3)?.mul(&u)
            })?;
            let rhs_a = hecke::f_tm_numerator(t + 1, m, d1, order)?;
            Ok(vec![SidePair::new(format!("t={t} m={m}"), lhs, rhs_a)])
        }

        "MAIN" => {
            let t = need(inst.t, "t", id)?;
            let m = need(inst.m, "m", id)?;
            let scale = ExpScale::new(4 * t);
            let lhs = ensure_order(scale, order, |ord| {
                let num = hecke::f_tm_numerator(t, m, d1, ord)?.rescale(scale)?;
                Ok(num.mul_monomial(t * t, 0, &qseries_core::number::qint(1)))
            })?;
            let rhs_e = rhs::ftm_theta_expansion_rhs(t, m, scale, order)?;
            Ok(vec![SidePair::new(format!("t={t} m={m}"), lhs, rhs_e)])
        }

        "MAIN-ALT" => {
            let t = need(inst.t, "t", id)?;
            let m = need(inst.m, "m", id)?;
            let lhs = hecke::f_tm_numerator(t, m, d1, order)?;
            let rhs_e = rhs::ftm_double_sum_rhs(t, m, d1, order)?;
            Ok(vec![SidePair::new(format!("t={t} m={m}"), lhs, rhs_e)])
        }

        "COR-MAIN" => {
            let t = need(inst.t, "t", id)?;
            let m = need(inst.m, "m", id)?;
            let lhs = hecke::f_tm_numerator(t, m, d1, order)?;
            let rhs_e = rhs::ftm_product_sum_rhs(t, m, d1, order)?;
            Ok(vec![SidePair::new(format!("t={t} m={m}"), lhs, rhs_e)])
        }

        "U2M1" | "U2M2" | "U3M1" | "U3M2" | "U3M3" => {
            let t = need(inst.t, "t", id)?;
            let m = need(inst.m, "m", id)?;
            let lhs = ensure_order(d1, order, |ord| {
                let u = gordon::u_series(t, m, Sign::Minus, d1, ord)?;
                euler_pow(d1, ord, 3)?.mul(&u)
            })?;
            let rhs_e = rhs::ftm_product_sum_rhs(t + 1, m, d1, order)?;
            Ok(vec![SidePair::new(format!("t={t} m={m}"), lhs, rhs_e)])
        }

        "THETA-TO-FABC" => {
            let t = need(inst.t, "t", id)?;
            let mut pairs = Vec::new();
            for p in 0..=3i64 {
                for m in 0..=2i64 {
                    let lhs = hecke::theta_pm(ThetaPMParams::new(t, p, m), d1, order)?;
                    let rhs_e = rhs::theta_pm_as_double_sums(t, p, m, d1, order)?;
                    pairs.push(SidePair::new(format!("p={p} m={m}"), lhs, rhs_e));
                }
            }
            Ok(pairs)
        }

        "INTERESTING" => {
            let t = need(inst.t, "t", id)?;
            let m = need(inst.m, "m", id)?;
            let l = need(inst.l, "l", id)?;
            let scale = ExpScale::new(24);
            let lhs = rhs::theta_star_block_sum(t, m, l, scale, order)?;
            let modulus = 2 * t - 1;
            let rhs_e = if (l - m).rem_euclid(modulus) == 0 {
                hecke::eighth_power_euler_cube(Sign::of_parity(m), scale, order)?
            } else if (l + m).rem_euclid(modulus) == 0 {
                hecke::eighth_power_euler_cube(Sign::of_parity(m + 1), scale, order)?
            } else {
                Series::zero(scale, order * scale.denominator())
            };
            Ok(vec![SidePair::new(
                format!("t={t} m={m} l={l}"),
                lhs,
                rhs_e,
            )])
        }

        "THETA11" => {
            let lhs = hecke::theta_pm(ThetaPMParams::new(2, 1, 1), d1, order)?;
            let rhs_e = euler_pow(d1, order, 2)?;
            Ok(vec![SidePair::new("t=2", lhs, rhs_e)])
        }

        "THETA11-STAR" => {
            let scale = ExpScale::new(24);
            let lhs = hecke::theta_pm_star(ThetaPMParams::new(2, 1, 1), scale, order)?;
            let rhs_e = ensure_order(scale, order, |ord| qfunctions::eta(scale, ord)?.pow(2))?;
            Ok(vec![SidePair::new("t=2", lhs, rhs_e)])
        }

        "U-EQ-F123" => {
            let lhs = ensure_order(d1, order, |ord| {
                let u = gordon::u_series(1, 1, Sign::Minus, d1, ord)?;
                qfunctions::euler_product(d1, ord)?.mul(&u)
            })?;
            let params = HeckeParams::new(
                1,
                2,
                3,
                MonomialArg::of(Sign::Plus, -1, 2),
                MonomialArg::of(Sign::Plus, 0, 3),
            );
            let rhs_e = hecke::hecke_f_abc(&params, d1, order)?;
            Ok(vec![SidePair::new("t=1 m=1", lhs, rhs_e)])
        }

        "M1-417" => {
            let (lhs, rhs_e) = rhs::qpoch_double_sum_sides(d1, order)?;
            Ok(vec![SidePair::new("bivariate", lhs, rhs_e)])
        }

        "V-ELLIPTIC" => {
            let t = need(inst.t, "t", id)?;
            let lhs = qfunctions::theta(
                ThetaSpec::new(
                    MonomialArg::of(Sign::Minus, 2 * t - 1, 2 * t - 1),
                    qexp(2 * t - 1),
                ),
                ThetaForm::Product,
                d1,
                order,
            )?;
            let rhs_e = ensure_order(d1, order, |ord| {
                Ok(hecke::v_t(t, d1, ord)?.mul_monomial(
                    0,
                    -(2 * t - 1),
                    &qseries_core::number::qint(1),
                ))
            })?;
            Ok(vec![SidePair::new(format!("t={t}"), lhs, rhs_e)])
        }

        "Y-ELLIPTIC" => {
            let t = need(inst.t, "t", id)?;
            let lhs = ensure_order(d1, order, |ord| {
                let v_qx = qfunctions::theta(
                    ThetaSpec::new(
                        MonomialArg::of(Sign::Minus, 2 * t - 1, 2 * t - 1),
                        qexp(2 * t - 1),
                    ),
                    ThetaForm::Product,
                    d1,
                    ord,
                )?;
                let th_qx = qfunctions::theta(
                    ThetaSpec::new(MonomialArg::of(Sign::Plus, 1, 1), qexp(1)),
                    ThetaForm::Product,
                    d1,
                    ord,
                )?;
                v_qx.mul(&th_qx)
            })?;
            let rhs_e =
                ensure_order(d1, order, |ord| {
                    Ok(hecke::y_t(t, d1, ord)?.mul_monomial(
                        0,
                        -2 * t,
                        &qseries_core::number::qint(-1),
                    ))
                })?;
            Ok(vec![SidePair::new(format!("t={t}"), lhs, rhs_e)])
        }

        "Y-EXPANSION" => {
            let t = need(inst.t, "t", id)?;
            let lhs = hecke::y_t(t, d1, order)?;
            let rhs_e = rhs::y_expansion_rhs(t, d1, order)?;
            Ok(vec![SidePair::new(format!("t={t}"), lhs, rhs_e)])
        }

        "NEWCALC" => {
            let t = need(inst.t, "t", id)?;
            let m = need(inst.m, "m", id)?;
            let lhs = ensure_order(d1, order, |ord| {
                hecke::v_t(t, d1, ord)?.mul(&hecke::f_tm(t, m, d1, ord)?)
            })?;
            let rhs_e = rhs::ftm_appell_rhs_cleared(t, m, d1, order)?;
            Ok(vec![SidePair::new(format!("t={t} m={m}"), lhs, rhs_e)])
        }

        "APPELL-F123" => {
            let point = point_of(inst)?;
            let ord = spec_order(inst);
            let lhs = rhs::f123_spec(point, d1, ord)?;
            let rhs_e = rhs::f123_appell_full_rhs(point, d1, ord)?;
            Ok(vec![SidePair::new(point_label(point), lhs, rhs_e)])
        }

        "MODTHETA-F123" => {
            let point = point_of(inst)?;
            let ord = spec_order(inst);
            let lhs = rhs::f123_spec(point, d1, ord)?;
            let rhs_e = rhs::f123_modtheta_rhs(point, d1, ord)?;
            Ok(vec![SidePair::new(point_label(point), lhs, rhs_e)])
        }

        "HM-24E" => {
            let point = point_of(inst)?;
            let ord = spec_order(inst);
            let (lhs, rhs_e) = rhs::theta_pair_expansion_sides(point, d1, ord)?;
            Ok(vec![SidePair::new(point_label(point), lhs, rhs_e)])
        }

        "SEC8-THETA" => {
            let point = point_of(inst)?;
            let ord = spec_order(inst);
            let lhs = rhs::f123_spec(point, d1, ord)?;
            let rhs_e = rhs::f123_eulerian_theta_rhs(point, d1, ord)?;
            Ok(vec![SidePair::new(point_label(point), lhs, rhs_e)])
        }

        "SEC8-NOTHETA" => {
            let point = point_of(inst)?;
            let ord = spec_order(inst);
            let lhs = rhs::f123_spec(point, d1, ord)?;
            let rhs_e = rhs::f123_eulerian_rhs(point, d1, ord)?;
            Ok(vec![SidePair::new(point_label(point), lhs, rhs_e)])
        }

        "G-APPELL" => {
            let point = point_of(inst)?;
            let ord = spec_order(inst);
            let lhs = hecke::universal_mock_g(point, d1, ord)?;
            let rhs_e = rhs::g_appell_rhs(point, d1, ord)?;
            Ok(vec![SidePair::new(point_label(point), lhs, rhs_e)])
        }

        "ANDREWS" => {
            let k = need(inst.k, "k", id)?;
            let i = need(inst.i, "i", id)?;
            let (lhs, rhs_e) = gordon::andrews_sides(k, i, d1, order)?;
            Ok(vec![SidePair::new(format!("k={k} i={i}"), lhs, rhs_e)])
        }

        "H-G-DUAL" => {
            let mut pairs = Vec::new();
            for t in 1..=3i64 {
                for m in 1..=t {
                    for b in [0i64, 1] {
                        for n in 0..=5i64 {
                            if 2 * n - b + 1 < 1 {
                                continue;
                            }
                            let (lhs, rhs_e) = gordon::h_g_duality_sides(t, m, b, n)?;
                            let cut = lhs.order_scaled().min(rhs_e.order_scaled());
                            pairs.push(SidePair::new(
                                format!("t={t} m={m} b={b} n={n}"),
                                lhs.truncated(cut),
                                rhs_e.truncated(cut),
                            ));
                        }
                    }
                }
            }
            Ok(pairs)
        }

        other => Err(Error::NonTruncatable(format!(
            "unknown identity id {other}"
        ))),
    }
}

fn point_label(p: SpecPoint) -> String {
    let s = if p.sigma == Sign::Plus { "+" } else { "-" };
    if p.qsub == 1 {
        format!("x = {s}q^{}", p.j)
    } else {
        format!("x = {s}q^{}/{} (q -> q^{})", p.j, p.qsub, p.qsub)
    }
}

/// Checks whose comparison lives in the bivariate ring must produce
/// integer coefficients on both sides once cleared; specialized checks may
/// legitimately carry halves from 1/(1+1) constants.
pub fn integrality_required(inst: &IdentityInstance) -> bool {
    inst.mode == Mode::Bivariate
}

/// The minimum scaled order both sides must reach for the instance.
pub fn required_scaled_order(inst: &IdentityInstance, got: &SidePair) -> i64 {
    let d = got.lhs.scale().denominator();
    match inst.mode {
        Mode::Bivariate => inst.order * d,
        Mode::Specialized => spec_order(inst) * d,
    }
}
