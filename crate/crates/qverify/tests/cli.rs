//! End-to-end tests of the qverify binary: exit-code contract, manifest
//! handling, series printing, JSON output, and golden-file maintenance.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn qverify() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qverify"))
}

fn run(args: &[&str]) -> Output {
    qverify().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qverify-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn verify_single_id_passes_with_exit_zero() {
    let out = run(&["verify", "T1-CLOSED", "--m", "1", "--order", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn verify_perturbed_side_fails_with_exit_one() {
    let out = run(&[
        "verify",
        "MAIN",
        "--t",
        "2",
        "--m",
        "1",
        "--order",
        "8",
        "--debug-perturb",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn verify_unknown_id_is_exit_two() {
    let out = run(&["verify", "NOPE"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn manifest_empty_runs_zero_checks() {
    let dir = temp_dir("manifest-empty");
    let path = dir.join("m.json");
    std::fs::write(&path, "[]").unwrap();
    let out = run(&["verify", "all", "--manifest", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 checks"));
}

#[test]
fn manifest_unknown_id_names_it() {
    let dir = temp_dir("manifest-unknown");
    let path = dir.join("m.json");
    std::fs::write(&path, r#"[{"id":"WAT","order":5}]"#).unwrap();
    let out = run(&["verify", "all", "--manifest", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("WAT"));
}

#[test]
fn manifest_instances_run_and_json_summary_is_written() {
    let dir = temp_dir("manifest-run");
    let manifest = dir.join("m.json");
    std::fs::write(
        &manifest,
        r#"[
            {"id":"T1-CLOSED","order":8,"m":2},
            {"id":"ANDREWS","order":10,"k":2,"i":1}
        ]"#,
    )
    .unwrap();
    let json_path = dir.join("summary.json");
    let out = run(&[
        "verify",
        "all",
        "--manifest",
        manifest.to_str().unwrap(),
        "--jobs",
        "2",
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(summary["total"], 2);
    assert_eq!(summary["passed"], 2);
    assert_eq!(summary["reports"][0]["verdict"], "pass");
    assert_eq!(summary["reports"][1]["params"]["k"], 2);
}

#[test]
fn series_prints_canonical_format() {
    let out = run(&["series", "f_tm", "--t", "1", "--m", "2", "--order", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "scale=1 order=5\n0 1 1/1\n1 -1 1/1\n1 0 -1/1\n"
    );
}

#[test]
fn series_theta_pm_matches_euler_square() {
    let a = run(&[
        "series", "theta_pm", "--t", "2", "--p", "1", "--m", "1", "--order", "10",
    ]);
    let b = run(&[
        "series",
        "pochhammer",
        "--arg",
        "+1,0,1",
        "--base",
        "1",
        "--length",
        "inf",
        "--order",
        "10",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    // theta_{1,1} = (q)_inf^2: square the product side with the kernel and
    // compare text blocks.
    let euler =
        qseries_core::qfunctions::euler_product(qseries_core::ExpScale::unit(), 10).unwrap();
    let square = euler.mul(&euler).unwrap();
    assert_eq!(stdout(&a), square.print_text());
    assert_eq!(stdout(&b), euler.print_text());
}

#[test]
fn series_json_format() {
    let out = run(&[
        "series", "H", "--t", "2", "--m", "1", "--n", "1", "--order", "5", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["scale"], 1);
    assert_eq!(v["order"], "exact");
    assert_eq!(v["terms"][0]["c"], "1/1");
}

#[test]
fn golden_bless_check_and_corruption() {
    let dir = temp_dir("golden");
    let d = dir.to_str().unwrap();
    let out = run(&["golden", "bless", "h-t2-m1-n5", "--dir", d]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = run(&["golden", "check", "h-t2-m1-n5", "--dir", d]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    // Corrupt the stored file: the check names the first differing line.
    let path = Path::new(d).join("h-t2-m1-n5.txt");
    let mut text = std::fs::read_to_string(&path).unwrap();
    text = text.replacen("1/1", "2/1", 1);
    std::fs::write(&path, text).unwrap();
    let out = run(&["golden", "check", "h-t2-m1-n5", "--dir", d]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("at line"));

    // Missing file is an error, not a failure.
    std::fs::remove_file(&path).unwrap();
    let out = run(&["golden", "check", "h-t2-m1-n5", "--dir", d]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn shipped_golden_files_match() {
    // The repo ships blessed files at the workspace root.
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../golden/v1");
    let out = run(&["golden", "check", "all", "--dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn shipped_default_manifest_matches_catalog() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../manifests/default.json");
    let text = std::fs::read_to_string(&path).expect("manifests/default.json is shipped");
    let parsed = qverify::runner::parse_manifest(&text).unwrap();
    assert_eq!(parsed, qverify::catalog::default_catalog());
}
