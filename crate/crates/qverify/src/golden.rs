//! Golden-file regression: a registry of named series frozen in the
//! canonical print format, regenerated and diffed bit-exactly.

use std::fs;
use std::path::{Path, PathBuf};

use qseries_core::hecke::{self, ThetaPMParams};
use qseries_core::qfunctions::{self, ThetaForm, ThetaSpec};
use qseries_core::scale::qexp;
use qseries_core::{ExpScale, MonomialArg, Result, Series, Sign};

/// Outcome of one golden comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoldenOutcome {
    Pass,
    /// 1-based line number plus the two lines that differ (a missing-line
    /// marker when one side ran out).
    Fail {
        line: usize,
        expected: String,
        actual: String,
    },
    MissingFile(PathBuf),
}

pub struct GoldenCase {
    pub name: &'static str,
    pub build: fn() -> Result<Series>,
}

/// The shipped cases, one file per (name, params, order).
pub fn registry() -> Vec<GoldenCase> {
    vec![
        GoldenCase {
            name: "pochhammer-qinf-o200",
            build: || qfunctions::euler_product(ExpScale::unit(), 200),
        },
        GoldenCase {
            name: "theta_pm-t2-p1-m1-o100",
            build: || hecke::theta_pm(ThetaPMParams::new(2, 1, 1), ExpScale::unit(), 100),
        },
        GoldenCase {
            name: "f_tm-t2-m1-o20",
            build: || hecke::f_tm(2, 1, ExpScale::unit(), 20),
        },
        GoldenCase {
            name: "u-t1-m1-o12",
            build: || qseries_core::gordon::u_series(1, 1, Sign::Plus, ExpScale::unit(), 12),
        },
        GoldenCase {
            name: "h-t2-m1-n5",
            build: || {
                Ok(qseries_core::gordon::gordon_h(
                    qseries_core::gordon::GordonParams::new(2, 1, 0, 5),
                ))
            },
        },
        GoldenCase {
            name: "theta-x-sum-o50",
            build: || {
                qfunctions::theta(
                    ThetaSpec::new(MonomialArg::x(), qexp(1)),
                    ThetaForm::Sum,
                    ExpScale::unit(),
                    50,
                )
            },
        },
    ]
}

pub fn case_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(format!("{name}.txt"))
}

/// Regenerate one case and write it.
pub fn bless(dir: &Path, case: &GoldenCase) -> Result<PathBuf> {
    let series = (case.build)()?;
    let path = case_path(dir, case.name);
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| {
            qseries_core::Error::NonTruncatable(format!("cannot create {parent:?}: {e}"))
        })?;
    }
    fs::write(&path, series.print_text())
        .map_err(|e| qseries_core::Error::NonTruncatable(format!("cannot write {path:?}: {e}")))?;
    Ok(path)
}

/// Regenerate one case and diff it line by line against the stored file.
pub fn check(dir: &Path, case: &GoldenCase) -> Result<GoldenOutcome> {
    let path = case_path(dir, case.name);
    let stored = match fs::read_to_string(&path) {
        Ok(s) => s,
        Err(_) => return Ok(GoldenOutcome::MissingFile(path)),
    };
    let fresh = (case.build)()?.print_text();
    Ok(diff_text(&stored, &fresh))
}

pub fn diff_text(expected: &str, actual: &str) -> GoldenOutcome {
    let e_lines: Vec<&str> = expected.lines().collect();
    let a_lines: Vec<&str> = actual.lines().collect();
    let n = e_lines.len().max(a_lines.len());
    for idx in 0..n {
        let e = e_lines.get(idx).copied().unwrap_or("<missing>");
        let a = a_lines.get(idx).copied().unwrap_or("<missing>");
        if e != a {
            return GoldenOutcome::Fail {
                line: idx + 1,
                expected: e.to_string(),
                actual: a.to_string(),
            };
        }
    }
    GoldenOutcome::Pass
}
