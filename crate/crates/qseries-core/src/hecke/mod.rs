//! The analytic side: sign-weighted indefinite binary theta series,
//! Hecke-type double sums, Appell sums in denominator-cleared form, the
//! mock-modular kernel f_{t,m}, and the modified theta pair V_t / Y_t.
//!
//! Division is only ever performed by monomial-headed units; identities
//! whose natural statement divides by a non-unit theta are assembled in
//! multiplied (denominator-cleared) form by the callers.

pub mod lattice;
pub mod rhs;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::monomial::{MonomialArg, Sign};
use crate::number::{self};
use crate::qfunctions::{self, PochLen, ThetaForm, ThetaSpec};
use crate::scale::{qexp, ExpScale, QExp};
use crate::series::Series;
use crate::util::binom2;
use lattice::QuadForm;

/// sg(r) = 1 for r >= 0, else -1.
pub fn sg1(r: i64) -> i64 {
    if r >= 0 {
        1
    } else {
        -1
    }
}

/// sg(r, s) = (sg(r) + sg(s))/2: +1 on the closed positive quadrant, -1 on
/// the open negative quadrant, 0 on mixed quadrants.
pub fn sg2(r: i64, s: i64) -> i64 {
    (sg1(r) + sg1(s)) / 2
}

/// Context for the indefinite binary theta series theta_{p,m}: the quadratic
/// form depends on t, which the series notation leaves implicit.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ThetaPMParams {
    pub t: i64,
    pub p: i64,
    pub m: i64,
}

impl ThetaPMParams {
    pub fn new(t: i64, p: i64, m: i64) -> Self {
        assert!(t >= 1, "theta_pm context needs t >= 1");
        ThetaPMParams { t, p, m }
    }

    /// B(r, s) = r^2/8 + (4t-1)/4 rs + s^2/8 + (4p-1-2m)/4 r + (1+2m)/4 s.
    pub fn quad_form(&self) -> QuadForm {
        QuadForm {
            a2: QExp::new(1, 8),
            b2: QExp::new(4 * self.t - 1, 4),
            c2: QExp::new(1, 8),
            d1: QExp::new(4 * self.p - 1 - 2 * self.m, 4),
            e1: QExp::new(1 + 2 * self.m, 4),
        }
    }

    /// C_{p,m} = (-2p^2 - t(2m+1)(2m+1-4p)) / (8t(2t-1)).
    pub fn c_exponent(&self) -> QExp {
        let (t, p, m) = (self.t, self.p, self.m);
        QExp::new(
            -2 * p * p - t * (2 * m + 1) * (2 * m + 1 - 4 * p),
            8 * t * (2 * t - 1),
        )
    }
}

/// theta_{p,m} = sum over r = s (mod 2) of sg(r,s) (-1)^{(r-s)/2} q^{B(r,s)}.
/// Mixed-sign quadrants carry weight zero and are skipped outright.
pub fn theta_pm(params: ThetaPMParams, scale: ExpScale, order: i64) -> Result<Series> {
    let form = params.quad_form();
    let pts = form.same_sign_points(qexp(order))?;
    let mut out = Series::zero(scale, order * scale.denominator());
    for (r, s) in pts {
        if (r - s).rem_euclid(2) != 0 {
            continue;
        }
        let w = sg2(r, s) * Sign::of_parity((r - s) / 2).value();
        let e = scale.scaled(form.eval(r, s))?;
        out.accumulate(e, 0, &number::qint(w));
    }
    Ok(out)
}

/// theta*_{p,m} = q^{C_{p,m}} theta_{p,m}; the lattice must carry C.
pub fn theta_pm_star(params: ThetaPMParams, scale: ExpScale, order: i64) -> Result<Series> {
    let c = params.c_exponent();
    let c_num = scale.scaled(c)?;
    let extra = if c_num < 0 {
        (-c_num + scale.denominator() - 1) / scale.denominator()
    } else {
        0
    };
    let th = theta_pm(params, scale, order + extra)?;
    Ok(th
        .mul_monomial(c_num, 0, &number::qint(1))
        .truncated(order * scale.denominator()))
}

/// Parameters of a Hecke-type double sum f_{a,b,c}(x, y; q^u) with
/// b^2 - ac > 0.
#[derive(Copy, Clone, Debug)]
pub struct HeckeParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub x: MonomialArg,
    pub y: MonomialArg,
    pub base: QExp,
}

impl HeckeParams {
    pub fn new(a: i64, b: i64, c: i64, x: MonomialArg, y: MonomialArg) -> Self {
        Self::with_base(a, b, c, x, y, qexp(1))
    }

    pub fn with_base(a: i64, b: i64, c: i64, x: MonomialArg, y: MonomialArg, base: QExp) -> Self {
        assert!(
            a > 0 && b > 0 && c > 0,
            "f_{{a,b,c}} needs positive a, b, c"
        );
        assert!(
            b * b > a * c,
            "f_{{a,b,c}} needs an indefinite form: b^2 > ac"
        );
        assert!(base > qexp(0), "base exponent must be positive");
        HeckeParams {
            a,
            b,
            c,
            x,
            y,
            base,
        }
    }
}

/// f_{a,b,c}(x,y;q^u) = sum sg(r,s) (-1)^{r+s} x^r y^s
/// q^{u(a*binom(r,2) + b*r*s + c*binom(s,2))}.
pub fn hecke_f_abc(params: &HeckeParams, scale: ExpScale, order: i64) -> Result<Series> {
    let u = params.base;
    let form = QuadForm {
        a2: u * QExp::new(params.a, 2),
        b2: u * qexp(params.b),
        c2: u * QExp::new(params.c, 2),
        d1: params.x.q_exp - u * QExp::new(params.a, 2),
        e1: params.y.q_exp - u * QExp::new(params.c, 2),
    };
    let pts = form.same_sign_points(qexp(order))?;
    let mut out = Series::zero(scale, order * scale.denominator());
    for (r, s) in pts {
        let sign = Sign::of_parity(r + s) * params.x.sign.pow(r) * params.y.sign.pow(s);
        let w = sg2(r, s) * sign.value();
        let e = scale.scaled(form.eval(r, s))?;
        out.accumulate(e, params.x.x_deg * r + params.y.x_deg * s, &number::qint(w));
    }
    Ok(out)
}

/// Parameters of an Appell sum m(x, z; q^u).
#[derive(Copy, Clone, Debug)]
pub struct AppellParams {
    pub x: MonomialArg,
    pub z: MonomialArg,
    pub base: QExp,
}

impl AppellParams {
    pub fn new(x: MonomialArg, z: MonomialArg, base: QExp) -> Self {
        assert!(base > qexp(0), "Appell base exponent must be positive");
        AppellParams { x, z, base }
    }
}

/// The theta-cleared Appell sum
/// M(x,z;q^u) = Theta(z;q^u) m(x,z;q^u)
///            = sum_r (-1)^r q^{u*binom(r,2)} z^r / (1 - q^{u(r-1)} x z),
/// with every denominator expanded by the geometric-factor sign rule. A
/// denominator with zero q-exponent and a surviving x-power is reported as
/// not expandable (specialization required); 1/(1+1) = 1/2 is accepted.
pub fn appell_cleared(params: &AppellParams, scale: ExpScale, order: i64) -> Result<Series> {
    let u = params.base;
    let ze = params.z.q_exp;
    // Term r has minimum exponent >= u*binom(r,2) + ze*r (the geometric
    // factor never reaches below q^0).
    let rs = lattice::line_points(u / qexp(2), ze - u / qexp(2), qexp(order))?;
    let mut out = Series::zero(scale, order * scale.denominator());
    for r in rs {
        let shift = scale.scaled(u * qexp(binom2(r)) + ze * qexp(r))?;
        let geom_order = order + (-shift.min(0) + scale.denominator() - 1) / scale.denominator();
        let mu = params.x.times(&params.z).times_q(u * qexp(r - 1));
        let geom = Series::geometric_factor(scale, geom_order * scale.denominator(), &mu)?;
        let sign = Sign::of_parity(r) * params.z.sign.pow(r);
        let term = geom.mul_monomial(shift, params.z.x_deg * r, &number::qint(sign.value()));
        out = out.add(&term.truncated(order * scale.denominator()))?;
    }
    Ok(out)
}

/// The full Appell sum m(x,z;q^u), available when Theta(z;q^u) is an
/// invertible (monomial-headed) unit. Specialized (univariate) contexts
/// always satisfy this unless the theta vanishes outright, which is
/// reported as a hit zero.
pub fn appell_m(params: &AppellParams, scale: ExpScale, order: i64) -> Result<Series> {
    crate::util::ensure_order(scale, order, |n| {
        let theta_z = qfunctions::theta(
            ThetaSpec::new(params.z, params.base),
            ThetaForm::Product,
            scale,
            n,
        )?;
        if theta_z.is_zero() {
            return Err(Error::SpecializationHitsZero(format!(
                "Theta({}; q^{}) is the zero series",
                params.z, params.base
            )));
        }
        let inv = theta_z.invert_unit().map_err(|e| match e {
            Error::NotAUnit(msg) => Error::DenominatorNotExpandable(msg),
            other => other,
        })?;
        let cleared = appell_cleared(params, scale, n)?;
        cleared.mul(&inv)
    })
}

/// f_{t,m} with a general theta argument: the x of the bivariate statement,
/// or q*x when building the functional-equation shift, or a specialized
/// monomial. Returns
/// (1/(q)_inf^3) * sum_{r=s(2)} sg(r,s)(-1)^{(r-s)/2} q^{B_{t,m}(r,s)}
///                 * Theta(arg;q)/(1 - arg q^{(r+s)/2}),
/// entirely within the ring: the pole factor is cancelled, never divided.
pub fn f_tm_with_arg(
    t: i64,
    m: i64,
    arg: MonomialArg,
    scale: ExpScale,
    order: i64,
) -> Result<Series> {
    let num = f_tm_numerator_with_arg(t, m, arg, scale, order)?;
    let qinf3 = qfunctions::euler_product(scale, order)?.pow(3)?;
    let inv = qinf3.invert_unit()?;
    Ok(num.mul(&inv)?.truncated(order * scale.denominator()))
}

/// f_{t,m}(x) itself.
pub fn f_tm(t: i64, m: i64, scale: ExpScale, order: i64) -> Result<Series> {
    f_tm_with_arg(t, m, MonomialArg::x(), scale, order)
}

/// (q)_inf^3 f_{t,m}: the fully cleared kernel, used by every identity that
/// multiplies the Euler cube through.
pub fn f_tm_numerator(t: i64, m: i64, scale: ExpScale, order: i64) -> Result<Series> {
    f_tm_numerator_with_arg(t, m, MonomialArg::x(), scale, order)
}

fn f_tm_numerator_with_arg(
    t: i64,
    m: i64,
    arg: MonomialArg,
    scale: ExpScale,
    order: i64,
) -> Result<Series> {
    assert!(t >= 1 && m >= 1, "f_tm needs t, m >= 1");
    let params = ThetaPMParams::new(t, t, m);
    let form = params.quad_form();
    let pts = form.same_sign_points(qexp(order))?;
    let mut by_h: Vec<(i64, i64, i64)> = Vec::new(); // (h, weight, B scaled)
    let mut max_neg = 0i64;
    for (r, s) in &pts {
        let (r, s) = (*r, *s);
        if (r - s).rem_euclid(2) != 0 {
            continue;
        }
        let w = sg2(r, s) * Sign::of_parity((r - s) / 2).value();
        if w == 0 {
            continue;
        }
        let b = scale.scaled(form.eval(r, s))?;
        max_neg = max_neg.max(-b);
        by_h.push(((r + s) / 2, w, b));
    }
    let tof_order = order + (max_neg + scale.denominator() - 1) / scale.denominator();
    let mut tof_memo: HashMap<i64, Series> = HashMap::new();
    let mut out = Series::zero(scale, order * scale.denominator());
    for (h, w, b) in by_h {
        let tof = match tof_memo.get(&h) {
            Some(s) => s.clone(),
            None => {
                let s = qfunctions::theta_over_factor(arg, h, scale, tof_order)?;
                tof_memo.insert(h, s.clone());
                s
            }
        };
        let term = tof.mul_monomial(b, 0, &number::qint(w));
        out = out.add(&term.truncated(order * scale.denominator()))?;
    }
    Ok(out)
}

/// Closed form of f_{1,m}:
/// (-1)^{m+1} q^{binom(m,2)} sum_{r=1-m}^{m-1} (-1)^r q^{-binom(r,2)-r} x^r,
/// an exact Laurent polynomial.
pub fn f_1m_closed(m: i64, scale: ExpScale) -> Result<Series> {
    assert!(m >= 1);
    let mut out = Series::zero(scale, crate::series::EXACT_ORDER);
    let lead = Sign::of_parity(m + 1);
    for r in (1 - m)..=(m - 1) {
        let e = scale.scaled(qexp(binom2(m) - binom2(r) - r))?;
        let sign = lead * Sign::of_parity(r);
        out.accumulate(e, r, &number::qint(sign.value()));
    }
    Ok(out)
}

/// V_t(x) = Theta(-x^{2t-1}; q^{2t-1}).
pub fn v_t(t: i64, scale: ExpScale, order: i64) -> Result<Series> {
    qfunctions::theta(
        ThetaSpec::new(MonomialArg::of(Sign::Minus, 2 * t - 1, 0), qexp(2 * t - 1)),
        ThetaForm::Product,
        scale,
        order,
    )
}

/// Y_t(x) = V_t(x) Theta(x; q).
pub fn y_t(t: i64, scale: ExpScale, order: i64) -> Result<Series> {
    crate::util::ensure_order(scale, order, |n| {
        let v = v_t(t, scale, n)?;
        let th = qfunctions::theta(
            ThetaSpec::new(MonomialArg::x(), qexp(1)),
            ThetaForm::Product,
            scale,
            n,
        )?;
        v.mul(&th)
    })
}

/// The x^s-coefficient theta of the Y_t expansion:
/// a_s = (-1)^s q^{binom(s,2)} Theta(q^{(2t-1)(t-s)}; q^{2t(2t-1)}).
pub fn y_coefficient(t: i64, s: i64, scale: ExpScale, order: i64) -> Result<Series> {
    let th = crate::util::ensure_order(scale, order, |n| {
        qfunctions::theta(
            ThetaSpec::new(
                MonomialArg::q_pow(qexp((2 * t - 1) * (t - s))),
                qexp(2 * t * (2 * t - 1)),
            ),
            ThetaForm::Product,
            scale,
            n + binom2(s).max(0),
        )
    })?;
    Ok(th
        .mul_monomial(
            scale.scaled(qexp(binom2(s)))?,
            0,
            &number::qint(Sign::of_parity(s).value()),
        )
        .truncated(order * scale.denominator()))
}

/// An x-specialization: substitute q -> q^u through the identity, then set
/// x = sigma * q^j. Half- and quarter-lattice points are reached with
/// u = 2, 4 and odd j.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SpecPoint {
    pub qsub: i64,
    pub sigma: Sign,
    pub j: i64,
}

impl SpecPoint {
    pub fn new(qsub: i64, sigma: Sign, j: i64) -> Self {
        assert!(qsub >= 1);
        SpecPoint { qsub, sigma, j }
    }

    /// The specialized value of sigma0 * x^d * q^e (e in original units).
    pub fn monomial(&self, sign: Sign, x_deg: i64, e: i64) -> MonomialArg {
        MonomialArg::new(
            sign * self.sigma.pow(x_deg),
            0,
            qexp(self.qsub * e + self.j * x_deg),
        )
    }

    /// x^d as a specialized monomial.
    pub fn x_pow(&self, d: i64) -> MonomialArg {
        self.monomial(Sign::Plus, d, 0)
    }

    /// The substituted base exponent u*e.
    pub fn base(&self, e: i64) -> QExp {
        qexp(self.qsub * e)
    }
}

/// The universal mock theta function
/// g(x;q) = x^{-1}(-1 + sum_{n>=0} q^{n^2} / ((x)_{n+1} (q/x)_n)),
/// at a specialization point. The finite Pochhammer denominators are exact
/// divisions by monomial-headed units; a vanishing denominator is reported.
pub fn universal_mock_g(point: SpecPoint, scale: ExpScale, order: i64) -> Result<Series> {
    crate::util::ensure_order(scale, order, |ord| {
        let u = point.base(1);
        let x = point.monomial(Sign::Plus, 1, 0);
        let q_over_x = point.monomial(Sign::Plus, -1, 1);
        let mut sum = Series::zero(scale, ord * scale.denominator());
        sum = sum.add(&Series::one(scale, ord * scale.denominator()).neg())?;
        let mut n = 0i64;
        loop {
            let term_min = point.qsub * n * n;
            if term_min >= ord * scale.denominator() {
                break;
            }
            let d1 = qfunctions::pochhammer(x, u, PochLen::Finite(n as u32 + 1), scale, ord)?;
            let d2 = qfunctions::pochhammer(q_over_x, u, PochLen::Finite(n as u32), scale, ord)?;
            let den = d1.mul(&d2)?;
            if den.is_zero() {
                return Err(Error::SpecializationHitsZero(format!(
                    "(x)_{} (q/x)_{} vanishes at x = {}",
                    n + 1,
                    n,
                    point.x_pow(1)
                )));
            }
            let inv = den.invert_unit()?;
            let term =
                inv.mul_monomial(scale.scaled(qexp(point.qsub * n * n))?, 0, &number::qint(1));
            sum = sum
                .truncated(term.order_scaled().min(sum.order_scaled()))
                .add(&term.truncated(sum.order_scaled().min(term.order_scaled())))?;
            n += 1;
        }
        sum.mul_arg(&point.x_pow(-1))
    })
}

/// Divide by a specialized (univariate) theta-type series, reporting a zero
/// series as a specialization failure.
pub fn divide_by_unit(num: &Series, den: &Series) -> Result<Series> {
    if den.is_zero() {
        return Err(Error::SpecializationHitsZero(
            "division by a vanished theta".into(),
        ));
    }
    num.mul(&den.invert_unit()?)
}

/// q^{1/8} (q)_inf^3 with the sign (-1)^m: the nonzero right-hand side of
/// the theta-star block identity.
pub fn eighth_power_euler_cube(sign: Sign, scale: ExpScale, order: i64) -> Result<Series> {
    let shift = scale.scaled(QExp::new(1, 8))?;
    let cube = qfunctions::euler_product(scale, order)?.pow(3)?;
    Ok(cube
        .mul_monomial(shift, 0, &number::qint(sign.value()))
        .truncated(order * scale.denominator()))
}
