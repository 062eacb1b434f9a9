//! End-to-end tests for the command-line driver: worked examples with
//! known outputs, exit-code semantics, determinism, and the binary glue.

use jetbound_cli::{
    execute, CommandKind, DeltaSpec, Int, OutputFormat, Rat, RunConfig, WeightSpec,
};
use serde_json::Value;
use std::process::Command;

fn config(kind: CommandKind, n: usize) -> RunConfig {
    RunConfig::new(kind, n)
}

fn json_of(report: &jetbound_cli::Report) -> Value {
    serde_json::from_str(&report.body).expect("report body is valid JSON")
}

#[test]
fn tilde_worked_example() {
    let mut cfg = config(CommandKind::Tilde, 2);
    cfg.weights = WeightSpec::Explicit(vec![Int::from(2), Int::from(1)]);
    cfg.delta = DeltaSpec::Exact(Rat::from_integer(Int::from(0)));
    let report = execute(&cfg).unwrap();
    assert_eq!(report.exit_code, 0);
    let v = json_of(&report);
    assert_eq!(v["tilde"]["c"], serde_json::json!(["24", "576", "3072"]));
    assert_eq!(v["tilde"]["lambda"], "48");
    assert_eq!(v["d0"], "29");
    assert_eq!(v["fujiwara"], "48");
    assert_eq!(v["params"]["n"], 2);
    assert_eq!(v["params"]["kappa"], 2);
    assert_eq!(v["params"]["a"], serde_json::json!(["2", "1"]));
    assert!(v.get("polynomial").is_none(), "tilde skips the full expansion");
}

#[test]
fn polynomial_worked_example_and_window_overrides() {
    let mut cfg = config(CommandKind::Polynomial, 2);
    cfg.weights = WeightSpec::Explicit(vec![Int::from(2), Int::from(1)]);
    cfg.delta = DeltaSpec::Exact(Rat::from_integer(Int::from(0)));
    let report = execute(&cfg).unwrap();
    let v = json_of(&report);
    assert_eq!(
        v["polynomial"]["c"],
        serde_json::json!(["34", "-459", "-1104"])
    );

    // Widening the windows must not change the polynomial.
    let mut wide = cfg.clone();
    wide.t_lo = Some(-9);
    wide.t_hi = Some(7);
    wide.length_cap = Some(100);
    let widened = execute(&wide).unwrap();
    assert_eq!(json_of(&widened)["polynomial"], v["polynomial"]);

    // Narrower-than-default windows are rejected, not silently truncated.
    let mut narrow = cfg;
    narrow.t_hi = Some(1);
    assert!(execute(&narrow).is_err());
}

#[test]
fn bound_small_case_holds() {
    let cfg = config(CommandKind::Bound, 2);
    let report = execute(&cfg).unwrap();
    assert_eq!(report.exit_code, 0);
    let v = json_of(&report);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    for c in checks {
        assert_eq!(c["holds"], true, "check {} should hold", c["name"]);
        assert_eq!(c["rhs"], "400");
    }
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(
        names,
        ["threshold-within-small-n-constant", "threshold-within-main-constant"]
    );
}

#[test]
fn verify_large_case_skips_heavy_checks_but_passes() {
    let cfg = config(CommandKind::Verify, 6);
    let report = execute(&cfg).unwrap();
    assert_eq!(report.exit_code, 0, "closed-form checks pass at n = 6");
    let v = json_of(&report);
    let checks = v["checks"].as_array().unwrap();
    let budget_skips = checks
        .iter()
        .filter(|c| c.get("skipped").map(|s| s == "budget").unwrap_or(false))
        .count();
    assert!(budget_skips > 0, "heavy checks are skipped under the budget");
    let cap = checks
        .iter()
        .find(|c| c["name"] == "c-majorant-at-most-five")
        .unwrap();
    assert_eq!(cap["holds"], true);
    let hypotheses = checks
        .iter()
        .find(|c| c["name"] == "dimension-at-least-six")
        .unwrap();
    assert_eq!(hypotheses["holds"], true);
    assert!(!checks.iter().any(|c| c.get("holds").map(|h| h == false).unwrap_or(false)));
}

#[test]
fn verify_small_dimension_fails_honestly() {
    let cfg = config(CommandKind::Verify, 3);
    let report = execute(&cfg).unwrap();
    assert_eq!(report.exit_code, 2, "n = 3 violates the dimension hypothesis");
    let v = json_of(&report);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c.get("holds").map(|h| h == false).unwrap_or(false))
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"dimension-at-least-six"));
    assert!(failed.contains(&"c-majorant-at-most-five"));
}

#[test]
fn reports_are_deterministic() {
    for kind in [CommandKind::Tilde, CommandKind::Verify] {
        let cfg = config(kind, 6);
        let a = execute(&cfg).unwrap();
        let b = execute(&cfg).unwrap();
        assert_eq!(a, b, "identical configs yield byte-identical reports");
    }
    let mut sweep = config(CommandKind::Sweep, 6);
    sweep.n_to = Some(9);
    let a = execute(&sweep).unwrap();
    let b = execute(&sweep).unwrap();
    assert_eq!(a, b, "parallel sweep merges deterministically");
}

#[test]
fn sweep_rows_are_ordered_and_counted() {
    let mut cfg = config(CommandKind::Sweep, 2);
    cfg.n_to = Some(3);
    let report = execute(&cfg).unwrap();
    assert_eq!(report.exit_code, 2, "small n rows contain failing checks");
    let v = json_of(&report);
    let rows = v["sweep"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["n"], 2);
    assert_eq!(rows[1]["n"], 3);
    for r in rows {
        let holds = r["holds"].as_u64().unwrap();
        let fails = r["fails"].as_u64().unwrap();
        assert!(holds > 0 && fails > 0);
    }

    let mut clean = config(CommandKind::Sweep, 6);
    clean.n_to = Some(8);
    let report = execute(&clean).unwrap();
    assert_eq!(report.exit_code, 0, "all closed-form checks hold for n >= 6");
    let v = json_of(&report);
    let rows = v["sweep"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["fails"] == 0));
    assert!(rows.iter().all(|r| r["skipped"].as_u64().unwrap() > 0));
}

#[test]
fn csv_bodies_have_the_documented_shape() {
    let mut cfg = config(CommandKind::Bound, 2);
    cfg.output = OutputFormat::Csv;
    let report = execute(&cfg).unwrap();
    let lines: Vec<&str> = report.body.lines().collect();
    assert_eq!(lines[0], "field,value");
    assert!(lines.iter().any(|l| l.starts_with("n,2")));
    assert!(lines.iter().any(|l| l.starts_with("polynomial.c,")));
    assert!(lines.iter().any(|l| l.starts_with("d0,")));
    assert!(lines.contains(&"check,lhs,rel,rhs,status"));
    assert!(lines
        .iter()
        .any(|l| l.starts_with("threshold-within-main-constant,") && l.ends_with(",holds")));

    let mut sweep = config(CommandKind::Sweep, 6);
    sweep.n_to = Some(7);
    sweep.output = OutputFormat::Csv;
    let report = execute(&sweep).unwrap();
    let lines: Vec<&str> = report.body.lines().collect();
    assert_eq!(lines[0], "n,lambda,d0,holds,fails,skipped");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("6,"));
    assert!(lines[2].starts_with("7,"));
}

#[test]
fn binary_runs_the_worked_example() {
    let out = Command::new(env!("CARGO_BIN_EXE_jetbound"))
        .args(["tilde", "--n", "2", "--weights", "2,1", "--delta", "0"])
        .env_remove(jetbound_cli::BUDGET_ENV)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tilde"]["lambda"], "48");
    assert_eq!(v["d0"], "29");
}

#[test]
fn binary_exit_codes_separate_failure_from_error() {
    let failing = Command::new(env!("CARGO_BIN_EXE_jetbound"))
        .args(["verify", "--n", "3"])
        .env_remove(jetbound_cli::BUDGET_ENV)
        .output()
        .unwrap();
    assert_eq!(failing.status.code(), Some(2), "failed check exits 2");

    let usage = Command::new(env!("CARGO_BIN_EXE_jetbound"))
        .args(["tilde", "--n", "2", "--weights", "2,x"])
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(1), "bad input exits 1");
    assert!(!usage.stderr.is_empty());

    let starved = Command::new(env!("CARGO_BIN_EXE_jetbound"))
        .args(["bound", "--n", "2"])
        .env(jetbound_cli::BUDGET_ENV, "1")
        .output()
        .unwrap();
    assert_eq!(starved.status.code(), Some(1), "budget overflow is an error");
    assert!(String::from_utf8_lossy(&starved.stderr).contains("budget"));
}

#[test]
fn binary_writes_report_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let direct = Command::new(env!("CARGO_BIN_EXE_jetbound"))
        .args(["bound", "--n", "2"])
        .env_remove(jetbound_cli::BUDGET_ENV)
        .output()
        .unwrap();
    let filed = Command::new(env!("CARGO_BIN_EXE_jetbound"))
        .args(["bound", "--n", "2", "--out", path.to_str().unwrap()])
        .env_remove(jetbound_cli::BUDGET_ENV)
        .output()
        .unwrap();
    assert_eq!(filed.status.code(), direct.status.code());
    assert!(filed.stdout.is_empty(), "--out leaves stdout empty");
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, direct.stdout);
}
