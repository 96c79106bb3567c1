//! The `series` subcommand: build a named series from CLI parameters and
//! render it in the canonical text format or as JSON.

use qseries_core::gordon::{self, GordonParams};
use qseries_core::hecke::{self, HeckeParams, ThetaPMParams};
use qseries_core::qfunctions::{self, PochLen, ThetaForm, ThetaSpec};
use qseries_core::scale::{qexp, QExp};
use qseries_core::{Error, ExpScale, MonomialArg, Result, Series, Sign};

/// Parameters accepted by the series builders (a superset; each name uses
/// what it needs).
#[derive(Clone, Debug, Default)]
pub struct SeriesParams {
    pub t: Option<i64>,
    pub m: Option<i64>,
    pub p: Option<i64>,
    pub b: Option<i64>,
    pub n: Option<i64>,
    pub k: Option<i64>,
    pub i: Option<i64>,
    pub ip: Option<i64>,
    pub len: Option<i64>,
    pub a: Option<i64>,
    pub bb: Option<i64>,
    pub c: Option<i64>,
    pub x: Option<MonomialArg>,
    pub y: Option<MonomialArg>,
    pub arg: Option<MonomialArg>,
    pub base: Option<QExp>,
    pub h: Option<i64>,
    pub poch_n: Option<String>,
    pub form: Option<String>,
    pub neg: bool,
}

fn need<T: Copy>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::NonTruncatable(format!("missing parameter --{what}")))
}

/// Parse "sigma,d,e" (e may be a fraction n/d), e.g. "-1,2,3/2".
pub fn parse_monomial(text: &str) -> Result<MonomialArg> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::NonTruncatable(format!(
            "monomial must be sigma,d,e — got {text:?}"
        )));
    }
    let sign = match parts[0].trim() {
        "1" | "+1" | "+" => Sign::Plus,
        "-1" | "-" => Sign::Minus,
        other => {
            return Err(Error::NonTruncatable(format!(
                "monomial sign must be +1 or -1, got {other:?}"
            )))
        }
    };
    let d: i64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::NonTruncatable(format!("bad x-degree {:?}", parts[1])))?;
    let e = parse_qexp(parts[2])?;
    Ok(MonomialArg::new(sign, d, e))
}

/// Parse "n" or "n/d".
pub fn parse_qexp(text: &str) -> Result<QExp> {
    let t = text.trim();
    if let Some((num, den)) = t.split_once('/') {
        let n: i64 = num
            .trim()
            .parse()
            .map_err(|_| Error::NonTruncatable(format!("bad exponent {t:?}")))?;
        let d: i64 = den
            .trim()
            .parse()
            .map_err(|_| Error::NonTruncatable(format!("bad exponent {t:?}")))?;
        if d == 0 {
            return Err(Error::NonTruncatable("zero exponent denominator".into()));
        }
        Ok(QExp::new(n, d))
    } else {
        let n: i64 = t
            .parse()
            .map_err(|_| Error::NonTruncatable(format!("bad exponent {t:?}")))?;
        Ok(qexp(n))
    }
}

/// Names the CLI can print: theta_pm, f_abc, f_tm, U, H, G, theta,
/// pochhammer, V, Y.
pub fn build_series(
    name: &str,
    params: &SeriesParams,
    scale: ExpScale,
    order: i64,
) -> Result<Series> {
    match name {
        "theta_pm" => {
            let t = need(params.t, "t")?;
            let p = need(params.p, "p")?;
            let m = need(params.m, "m")?;
            hecke::theta_pm(ThetaPMParams::new(t, p, m), scale, order)
        }
        "theta_pm_star" => {
            let t = need(params.t, "t")?;
            let p = need(params.p, "p")?;
            let m = need(params.m, "m")?;
            hecke::theta_pm_star(ThetaPMParams::new(t, p, m), scale, order)
        }
        "f_abc" => {
            let a = need(params.a, "a")?;
            let b = need(params.bb, "b")?;
            let c = need(params.c, "c")?;
            let x = need(params.x, "x")?;
            let y = need(params.y, "y")?;
            let base = params.base.unwrap_or_else(|| qexp(1));
            hecke::hecke_f_abc(&HeckeParams::with_base(a, b, c, x, y, base), scale, order)
        }
        "f_tm" => {
            let t = need(params.t, "t")?;
            let m = need(params.m, "m")?;
            hecke::f_tm(t, m, scale, order)
        }
        "U" => {
            let t = need(params.t, "t")?;
            let m = need(params.m, "m")?;
            let sign = if params.neg { Sign::Minus } else { Sign::Plus };
            gordon::u_series(t, m, sign, scale, order)
        }
        "H" => {
            let t = need(params.t, "t")?;
            let m = need(params.m, "m")?;
            let b = params.b.unwrap_or(0);
            let n = need(params.n, "n")?;
            Ok(gordon::gordon_h(GordonParams::new(t, m, b, n)))
        }
        "G" => {
            let k = need(params.k, "k")?;
            let i = need(params.i, "i")?;
            let ip = need(params.ip, "ip")?;
            let len = need(params.len, "len")?;
            Ok(gordon::g_partition(k, i, ip, len, scale, order))
        }
        "theta" => {
            let arg = need(params.arg, "arg")?;
            let base = params.base.unwrap_or_else(|| qexp(1));
            let form = match params.form.as_deref() {
                Some("sum") => ThetaForm::Sum,
                _ => ThetaForm::Product,
            };
            qfunctions::theta(ThetaSpec::new(arg, base), form, scale, order)
        }
        "theta_over_factor" => {
            let arg = params.arg.unwrap_or_else(MonomialArg::x);
            let h = need(params.h, "h")?;
            qfunctions::theta_over_factor(arg, h, scale, order)
        }
        "pochhammer" => {
            let arg = need(params.arg, "arg")?;
            let base = params.base.unwrap_or_else(|| qexp(1));
            let n = match params.poch_n.as_deref() {
                None | Some("inf") => PochLen::Infinite,
                Some(text) => PochLen::Finite(text.parse().map_err(|_| {
                    Error::NonTruncatable(format!("bad pochhammer length {text:?}"))
                })?),
            };
            qfunctions::pochhammer(arg, base, n, scale, order)
        }
        "V" => {
            let t = need(params.t, "t")?;
            hecke::v_t(t, scale, order)
        }
        "Y" => {
            let t = need(params.t, "t")?;
            hecke::y_t(t, scale, order)
        }
        other => Err(Error::NonTruncatable(format!(
            "unknown series name {other:?}"
        ))),
    }
}

/// JSON rendering of a series: scale, order (scaled or "exact"), and the
/// sorted term triples.
pub fn series_json(s: &Series) -> serde_json::Value {
    let order = if s.is_exact() {
        serde_json::Value::String("exact".into())
    } else {
        serde_json::Value::from(s.order_scaled())
    };
    let mut terms = Vec::new();
    for (e, p) in s.terms() {
        for (d, c) in p.iter() {
            terms.push(serde_json::json!({
                "e": e,
                "d": d,
                "c": qseries_core::number::render(c),
            }));
        }
    }
    serde_json::json!({
        "scale": s.scale().denominator(),
        "order": order,
        "terms": terms,
    })
}
