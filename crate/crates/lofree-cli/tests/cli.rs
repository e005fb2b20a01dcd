//! End-to-end tests of the `lofree` binary: flag handling, config
//! precedence, output formats, exit codes, and on-disk determinism.

use std::path::Path;
use std::process::{Command, Output};

fn lofree() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lofree"));
    // Isolate from the ambient environment.
    cmd.env_remove("LOFREE_CAP");
    cmd
}

fn run(args: &[&str]) -> Output {
    lofree().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn count_emits_pinned_row() {
    let out = run(&["count", "--flavor", "lf1", "--n", "3", "--mu", "2", "--include-m0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "flavor,n,mu,include_m0,count");
    assert_eq!(text.lines().nth(1).unwrap(), "lf1,3,2,true,26");
}

#[test]
fn count_without_m0_term() {
    let out = run(&["count", "--flavor", "lf1", "--n", "3", "--mu", "2", "--no-include-m0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("lf1,3,2,false,20"));
}

#[test]
fn count_free_closed_form_row() {
    let out = run(&["count", "--flavor", "free1", "--n", "3", "--mu", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("free1,3,3,true,150"));
}

#[test]
fn count_mu_range_sweeps() {
    let out = run(&["count", "--flavor", "lf1", "--n", "3", "--mu-range", "0:3"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.contains("lf1,3,0,true,1"));
    assert!(text.contains("lf1,3,3,true,110"));
}

#[test]
fn missing_flavor_is_usage_error() {
    let out = run(&["count", "--n", "3", "--mu", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--flavor"));
}

#[test]
fn unknown_flavor_is_usage_error() {
    let out = run(&["count", "--flavor", "lf9", "--n", "3", "--mu", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn conflicting_n_flags_are_usage_error() {
    let out = run(&[
        "count", "--flavor", "lf1", "--n", "3", "--n-range", "2:4", "--mu", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_range_is_usage_error() {
    let out = run(&["count", "--flavor", "lf1", "--n", "3", "--mu-range", "5:2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("nonempty"));
}

#[test]
fn oracle_lf1_passes_and_emits_profile() {
    let out = run(&["oracle", "--flavor", "lf1", "--n", "3", "--mu", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.lines().next().unwrap(),
        "flavor,n,mu,sphere_size,assembled,match"
    );
    assert!(text.contains("lf1,3,2,26,26,true"));
    assert!(stderr(&out).contains("PASS"));
}

#[test]
fn oracle_lf2_deviation_is_data_not_failure() {
    let out = run(&["oracle", "--flavor", "lf2", "--n", "2", "--mu", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("lf2,2,2,180,196,false"));
    assert!(stderr(&out).contains("deviate"));
}

#[test]
fn oracle_env_cap_aborts_with_exit_3() {
    let out = lofree()
        .args(["oracle", "--flavor", "lf1", "--n", "3", "--mu", "6"])
        .env("LOFREE_CAP", "30")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("cap"));
}

#[test]
fn cap_flag_overrides_env_cap() {
    let out = lofree()
        .args(["oracle", "--flavor", "lf1", "--n", "3", "--mu", "4", "--cap", "1000000"])
        .env("LOFREE_CAP", "30")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_env_cap_is_usage_error() {
    let out = lofree()
        .args(["count", "--flavor", "lf1", "--n", "3", "--mu", "1"])
        .env("LOFREE_CAP", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spectral_lf1_json_format() {
    let out = run(&["spectral", "--flavor", "lf1", "--n", "3", "--format", "json"]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let row = &rows.as_array().unwrap()[0];
    assert_eq!(row["flavor"], "lf1");
    let lambda = row["lambda_exact"].as_f64().unwrap();
    assert!((lambda - 1.618033988).abs() < 1e-6);
    assert_eq!(row["lambda_closed"].as_f64().unwrap(), 1.0);
    assert!(row["p1"].is_null());
}

#[test]
fn spectral_lf2_emits_root_columns() {
    let out = run(&["spectral", "--flavor", "lf2", "--n", "1000"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let p1: f64 = row[8].parse().unwrap();
    assert!((p1 - 0.9954460591).abs() < 1e-8);
}

#[test]
fn spectral_n_one_is_usage_error() {
    let out = run(&["spectral", "--flavor", "lf1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_format_renders_header_rule() {
    let out = run(&["count", "--flavor", "lf1", "--n", "3", "--mu", "1", "--format", "table"]);
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().starts_with("flavor"));
    assert!(text.lines().nth(1).unwrap().starts_with("-"));
}

#[test]
fn unknown_format_is_usage_error() {
    let out = run(&["count", "--flavor", "lf1", "--n", "3", "--mu", "1", "--format", "xml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn asympt_free_flavor_is_usage_error() {
    let out = run(&["asympt", "--flavor", "free1", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn asympt_lf1_emits_comparison() {
    let out = run(&["asympt", "--flavor", "lf1", "--n", "10", "--m-max", "6", "--mu-range", "1:3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().starts_with("formula,n,index,"));
    assert_eq!(text.matches("theta_1d,10,").count(), 7);
    assert_eq!(text.matches("v1,10,").count(), 3);
}

#[test]
fn config_file_applies_below_cli_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    std::fs::write(&path, "flavor = lf1\nn = 3\nmu = 1\n").unwrap();
    // Config alone.
    let out = run(&["count", "--config", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("lf1,3,1,true,6"));
    // CLI flag wins over the file.
    let out = run(&["count", "--config", path.to_str().unwrap(), "--mu", "2"]);
    assert!(stdout(&out).contains("lf1,3,2,true,26"));
}

#[test]
fn unknown_config_key_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.conf");
    std::fs::write(&path, "flavor = lf1\nwibble = 3\n").unwrap();
    let out = run(&["count", "--config", path.to_str().unwrap(), "--n", "3", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown config key"));
}

#[test]
fn missing_config_file_is_usage_error() {
    let out = run(&["count", "--config", "/nonexistent/path.conf", "--n", "3", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_file_written_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("sub/a.csv");
    let b = dir.path().join("b.csv");
    let args = ["spectral", "--flavor", "lf1", "--n-range", "3:6"];
    let run_to = |path: &Path| {
        let out = lofree()
            .args(args)
            .args(["--out", path.to_str().unwrap()])
            .env_remove("LOFREE_CAP")
            .output()
            .unwrap();
        assert!(out.status.success());
        assert!(stdout(&out).is_empty(), "table goes to the file, not stdout");
    };
    run_to(&a); // parent directory is created on demand
    run_to(&b);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn report_quick_writes_bundle_and_reports_failures() {
    let dir = tempfile::tempdir().unwrap();
    let bundle_dir = dir.path().join("bundle");
    let out = run(&[
        "report",
        "--quick",
        "--self-check",
        "--out",
        bundle_dir.to_str().unwrap(),
    ]);
    // Criteria 5 and 8 carry documented failing clauses, so the suite
    // exit is 1 (assertion failure) by contract.
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("criterion 01 [PASS]"));
    assert!(err.contains("criterion 05 [FAIL]"));
    assert!(err.contains("criterion 08 [FAIL]"));
    assert!(err.contains("self-check: second build is byte-identical"));
    let summary = std::fs::read_to_string(bundle_dir.join("summary.csv")).unwrap();
    assert!(summary.starts_with("id,title,passed,detail\n"));
    assert_eq!(summary.lines().count(), 11);
    assert_eq!(summary.matches(",false,").count(), 2);
    for name in [
        "c01_oracle_1d.csv",
        "c02_dual_oracle.csv",
        "c03_theta_truth.csv",
        "c04_free_baselines.csv",
        "c05_growth_seven.csv",
        "c06_spectral_1d.csv",
        "c07_z_eff.csv",
        "c08_roots_2d.csv",
        "c09_dp_2d.csv",
        "c10_oracle_2d.csv",
    ] {
        assert!(bundle_dir.join(name).is_file(), "missing {name}");
    }
}

#[test]
fn help_and_version_work() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for sub in ["count", "oracle", "spectral", "asympt", "report"] {
        assert!(text.contains(sub), "help missing {sub}");
    }
    assert!(run(&["--version"]).status.success());
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
