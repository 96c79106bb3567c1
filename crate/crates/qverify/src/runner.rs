//! Single-check execution and deterministic batch runs.

use std::time::Instant;

use rayon::prelude::*;

use qseries_core::{Comparison, Error};

use crate::checks::{self, SidePair};
use crate::instance::{IdentityInstance, Mode};
use crate::report::{Report, Summary};

/// Run one instance: build both sides, enforce the sound-order and
/// integrality contracts, optionally perturb the left side (harness
/// self-test), and compare.
pub fn run_check(inst: &IdentityInstance) -> Report {
    let start = Instant::now();
    let pairs = match checks::build_pairs(inst) {
        Ok(p) => p,
        Err(e) => return Report::from_error(inst, e.to_string(), start.elapsed().as_millis()),
    };
    let mut term_count = 0usize;
    for (idx, pair) in pairs.iter().enumerate() {
        let SidePair { label, lhs, rhs } = pair;
        let want = checks::required_scaled_order(inst, pair);
        if lhs.order_scaled() < want || rhs.order_scaled() < want {
            return Report::from_error(
                inst,
                format!(
                    "builder under-delivered: sound orders {}/{} below requested {want} [{label}]",
                    lhs.order_scaled(),
                    rhs.order_scaled()
                ),
                start.elapsed().as_millis(),
            );
        }
        if checks::integrality_required(inst) && (!lhs.all_integer() || !rhs.all_integer()) {
            return Report::from_error(
                inst,
                format!("non-integer coefficients in a cleared bivariate identity [{label}]"),
                start.elapsed().as_millis(),
            );
        }
        let mut lhs_cmp = lhs.clone();
        if let Some(e) = inst.debug_perturb {
            if idx == 0 {
                lhs_cmp.accumulate(
                    e * lhs_cmp.scale().denominator(),
                    0,
                    &qseries_core::number::qint(1),
                );
            }
        }
        term_count += lhs.num_terms() + rhs.num_terms();
        match lhs_cmp.diff_report(rhs) {
            Ok(Comparison::Pass) => {}
            Ok(fail) => {
                return Report::from_comparison(
                    inst,
                    fail,
                    Some(label.clone()),
                    start.elapsed().as_millis(),
                    term_count,
                )
            }
            Err(e) => return Report::from_error(inst, e.to_string(), start.elapsed().as_millis()),
        }
    }
    Report::from_comparison(
        inst,
        Comparison::Pass,
        None,
        start.elapsed().as_millis(),
        term_count,
    )
}

/// Run a batch with the given parallelism. Reports come back in manifest
/// order regardless of the schedule, so output is deterministic modulo the
/// timing fields.
pub fn run_all(instances: &[IdentityInstance], jobs: usize) -> Summary {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let mut indexed: Vec<(usize, Report)> = pool.install(|| {
        instances
            .par_iter()
            .enumerate()
            .map(|(i, inst)| (i, run_check(inst)))
            .collect()
    });
    indexed.sort_by_key(|(i, _)| *i);
    Summary::from_reports(indexed.into_iter().map(|(_, r)| r).collect())
}

/// Parse a manifest: a JSON array of instances. Unknown ids are rejected
/// up front, naming the offender; malformed JSON keeps serde's line/column
/// info.
pub fn parse_manifest(text: &str) -> Result<Vec<IdentityInstance>, Error> {
    let instances: Vec<IdentityInstance> = serde_json::from_str(text)
        .map_err(|e| Error::NonTruncatable(format!("manifest schema error: {e}")))?;
    for inst in &instances {
        if !crate::catalog::REQUIRED_IDS.contains(&inst.id.as_str()) {
            return Err(Error::NonTruncatable(format!(
                "manifest schema error: unknown identity id {}",
                inst.id
            )));
        }
        if inst.mode == Mode::Specialized && inst.sigma.is_none() {
            return Err(Error::NonTruncatable(format!(
                "manifest schema error: {} is specialized but has no sigma",
                inst.id
            )));
        }
    }
    Ok(instances)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn empty_manifest_is_zero_checks_exit_zero() {
        let instances = parse_manifest("[]").unwrap();
        let summary = run_all(&instances, 2);
        assert_eq!(summary.total, 0);
        assert_eq!(summary.exit_code(), 0);
    }

    #[test]
    fn unknown_id_is_named() {
        let err = parse_manifest(r#"[{"id":"NO-SUCH-ID","order":5}]"#).unwrap_err();
        assert!(err.to_string().contains("NO-SUCH-ID"));
    }

    #[test]
    fn malformed_manifest_reports_position() {
        let err = parse_manifest("[{").unwrap_err();
        assert!(err.to_string().contains("line"));
    }

    #[test]
    fn debug_perturb_fails_at_the_perturbed_exponent() {
        let mut inst = IdentityInstance::new("MAIN", 10).with_t(2).with_m(1);
        inst.debug_perturb = Some(7);
        let report = run_check(&inst);
        assert_eq!(report.verdict, Verdict::Fail);
        let m = report.mismatch.unwrap();
        assert_eq!(m.e_num, 7 * 8); // scaled by the 1/(4t) lattice
        assert_eq!(m.x_deg, 0);
    }

    #[test]
    fn specialization_on_a_theta_zero_is_an_error_verdict() {
        // sigma = +1 puts the universal-mock-theta denominators on a zero;
        // the builder reports it and the verdict is error, not a vacuous
        // pass.
        let inst = IdentityInstance::new("SEC8-NOTHETA", 8).with_point(1, 1, 1);
        let report = run_check(&inst);
        assert_eq!(report.verdict, Verdict::Error);
        let msg = report.error.unwrap();
        assert!(
            msg.contains("zero") || msg.contains("pole"),
            "unexpected cause: {msg}"
        );

        let inst = IdentityInstance::new("G-APPELL", 8).with_point(1, 1, 1);
        let report = run_check(&inst);
        assert_eq!(report.verdict, Verdict::Error);
    }

    #[test]
    fn deterministic_across_parallelism() {
        let instances = vec![
            IdentityInstance::new("T1-CLOSED", 12).with_m(2),
            IdentityInstance::new("THETA11", 20).with_t(2),
            IdentityInstance::new("ANDREWS", 10).with_k(2).with_i(1),
        ];
        let a = run_all(&instances, 1);
        let b = run_all(&instances, 4);
        let strip = |s: &Summary| {
            s.reports
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.millis = 0;
                    r
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b));
    }
}
