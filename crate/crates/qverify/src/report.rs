//! Structured verdicts for single checks and batches.

use serde::{Deserialize, Serialize};

use qseries_core::Comparison;

use crate::instance::IdentityInstance;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mismatch {
    /// Scaled q-exponent of the first difference.
    pub e_num: i64,
    pub x_deg: i64,
    pub lhs: String,
    pub rhs: String,
    /// Which sub-case of the instance differed (grids, random arguments).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    pub params: IdentityInstance,
    pub order: i64,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub millis: u128,
    /// Number of compared (q-exponent, x-degree) pairs across sub-cases.
    pub term_count: usize,
}

impl Report {
    pub fn from_comparison(
        inst: &IdentityInstance,
        cmp: Comparison,
        context: Option<String>,
        millis: u128,
        term_count: usize,
    ) -> Report {
        match cmp {
            Comparison::Pass => Report {
                id: inst.id.clone(),
                params: inst.clone(),
                order: inst.order,
                verdict: Verdict::Pass,
                mismatch: None,
                error: None,
                millis,
                term_count,
            },
            Comparison::Fail {
                e_num,
                x_deg,
                lhs,
                rhs,
            } => Report {
                id: inst.id.clone(),
                params: inst.clone(),
                order: inst.order,
                verdict: Verdict::Fail,
                mismatch: Some(Mismatch {
                    e_num,
                    x_deg,
                    lhs: qseries_core::number::render(&lhs),
                    rhs: qseries_core::number::render(&rhs),
                    context,
                }),
                error: None,
                millis,
                term_count,
            },
        }
    }

    pub fn from_error(inst: &IdentityInstance, err: String, millis: u128) -> Report {
        Report {
            id: inst.id.clone(),
            params: inst.clone(),
            order: inst.order,
            verdict: Verdict::Error,
            mismatch: None,
            error: Some(err),
            millis,
            term_count: 0,
        }
    }

    pub fn one_line(&self) -> String {
        match self.verdict {
            Verdict::Pass => format!(
                "PASS  {:14} {} ({} ms)",
                self.id,
                self.params.param_summary(),
                self.millis
            ),
            Verdict::Fail => {
                let m = self.mismatch.as_ref().expect("fail carries a mismatch");
                format!(
                    "FAIL  {:14} {}{} at scaled q-exponent {}, x^{}: lhs={} rhs={} ({} ms)",
                    self.id,
                    self.params.param_summary(),
                    m.context
                        .as_ref()
                        .map(|c| format!(" [{c}]"))
                        .unwrap_or_default(),
                    m.e_num,
                    m.x_deg,
                    m.lhs,
                    m.rhs,
                    self.millis
                )
            }
            Verdict::Error => format!(
                "ERROR {:14} {}: {} ({} ms)",
                self.id,
                self.params.param_summary(),
                self.error.as_deref().unwrap_or("unknown"),
                self.millis
            ),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub reports: Vec<Report>,
}

impl Summary {
    pub fn from_reports(reports: Vec<Report>) -> Summary {
        let passed = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Pass)
            .count();
        let failed = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Fail)
            .count();
        let errors = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Error)
            .count();
        Summary {
            total: reports.len(),
            passed,
            failed,
            errors,
            reports,
        }
    }

    /// Exit-code contract: 0 all pass, 1 any fail, 2 any error.
    pub fn exit_code(&self) -> i32 {
        if self.errors > 0 {
            2
        } else if self.failed > 0 {
            1
        } else {
            0
        }
    }
}
