use std::process::Command as Process;

use clap::Parser;
use serde_json::Value;

use crossfam::{run, Cli, CliError, Format, Report};

fn report(args: &[&str]) -> Report {
    let cli = Cli::try_parse_from(std::iter::once("crossfam").chain(args.iter().copied())).unwrap();
    run(&cli.command).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_slice(&report(args).emit(Format::Json)).unwrap()
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/report.schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

const SAMPLES: &[&[&str]] = &[
    &["bound", "--n", "9", "--ks", "4,3,2"],
    &["bound", "--n", "4", "--ks", "2,2"],
    &["f-scan", "--n", "9", "--ks", "4,3,2", "--curve"],
    &["f-scan", "--n", "6", "--ks", "3,2", "--i", "2"],
    &["lemmas", "--n", "7", "--ks", "3,2,2", "--all-i"],
    &["lemmas", "--n", "9", "--ks", "4,3,2", "--depth", "1"],
    &["oracle", "--n", "9", "--ks", "4,3,2"],
    &["oracle", "--n", "4", "--ks", "2,2"],
    &["kk-check", "--n", "6", "--ks", "3,3"],
    &["kk-check", "--n", "7", "--ks", "3,3"],
    &["extremal", "--n", "6", "--ks", "3,3,3"],
    &["extremal", "--n", "5", "--ks", "3,2"],
    &["rank", "--n", "9", "--k", "3", "--set", "2,3,4"],
    &["unrank", "--n", "9", "--k", "3", "--rank", "29"],
    &["partner", "--n", "9", "--set", "2,4,6"],
    &["size", "--n", "9", "--k", "4", "--id", "2"],
    &["suite", "--n-max", "6", "--t-max", "3"],
];

#[test]
fn every_report_matches_the_schema() {
    let v = schema();
    for args in SAMPLES {
        let doc = json(args);
        let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn schema_rejects_unsorted_shapes() {
    let v = schema();
    let mut doc = json(&["bound", "--n", "9", "--ks", "4,3,2"]);
    doc["results"]["bound"] = Value::from(99);
    assert!(!v.is_valid(&doc));
    let mut doc = json(&["rank", "--n", "9", "--k", "3", "--set", "2,3,4"]);
    doc["checks"] = serde_json::json!([{ "name": "x", "status": "ok", "detail": "" }]);
    assert!(!v.is_valid(&doc));
}

#[test]
fn reports_are_deterministic() {
    for args in SAMPLES.iter().filter(|a| a[0] != "suite") {
        assert_eq!(report(args).canonical_bytes(), report(args).canonical_bytes(), "{args:?}");
        let a = report(args);
        assert_eq!(a.emit(Format::Csv), report(args).emit(Format::Csv));
    }
}

#[test]
fn bound_example() {
    let r = json(&["bound", "--n", "9", "--ks", "4,3,2"]);
    assert_eq!(r["results"]["branch_values"], serde_json::json!(["99", "92"]));
    assert_eq!(r["results"]["bound"], "99");
}

#[test]
fn f_scan_csv_has_header_and_one_row_per_id() {
    let bytes = report(&["f-scan", "--n", "6", "--ks", "3,2", "--i", "1", "--format", "csv"]).emit(Format::Csv);
    let text = String::from_utf8(bytes).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[0], "i,rank_offset,id,f");
    assert_eq!(lines[1], "1,0,1,15");
    assert_eq!(lines[2], "1,1,\"2,3,4\",14");

    let bytes = report(&["f-scan", "--n", "9", "--ks", "4,3,2", "--i", "1"]).emit(Format::Csv);
    let rows = String::from_utf8(bytes).unwrap().lines().count();
    assert_eq!(rows, 1 + 36);
}

#[test]
fn oracle_and_kk_examples() {
    let r = json(&["oracle", "--n", "9", "--ks", "4,3,2"]);
    assert_eq!(r["results"]["optimum"], "99");
    assert_eq!(r["results"]["witnesses"][0]["sizes"], serde_json::json!(["91", "7", "1"]));
    let r = json(&["kk-check", "--n", "5", "--ks", "2,2"]);
    assert_eq!(r["results"]["unrestricted"]["optimum"], "8");
    assert!(report(&["kk-check", "--n", "5", "--ks", "2,2"]).passed());
}

#[test]
fn passthroughs() {
    assert_eq!(json(&["rank", "--n", "5", "--k", "2", "--set", "1,2"])["results"]["rank"], "1");
    assert_eq!(json(&["unrank", "--n", "5", "--k", "2", "--rank", "10"])["results"]["set"], "4,5");
    assert_eq!(json(&["partner", "--n", "9", "--set", "2,4,6"])["results"]["partner"], "1,3,5,6");
    let r = json(&["size", "--n", "9", "--k", "4", "--id", "2"]);
    assert_eq!(r["results"]["size"], "91");
    let r = json(&["size", "--n", "9", "--k", "3", "--id", "2,8,9"]);
    assert_eq!(r["results"]["canonical_id"], "2");
}

#[test]
fn lemmas_refuse_degenerate_instances() {
    let cli = Cli::try_parse_from(["crossfam", "lemmas", "--n", "5", "--ks", "3,2"]).unwrap();
    assert!(matches!(run(&cli.command), Err(CliError::Usage(_))));
}

#[test]
fn budget_refusal_names_the_requirement() {
    let cli = Cli::try_parse_from(["crossfam", "oracle", "--n", "20", "--ks", "3,3,3", "--budget", "1000"]).unwrap();
    let e = run(&cli.command).unwrap_err().to_string();
    assert!(e.contains("1481544000"), "{e}");
}

fn bin() -> Process {
    Process::new(env!("CARGO_BIN_EXE_crossfam"))
}

#[test]
fn exit_codes() {
    let ok = bin().args(["bound", "--n", "9", "--ks", "4,3,2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));

    let bad = bin().args(["bound", "--n", "9", "--ks", "2,3"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&bad.stderr);
    assert!(msg.contains("k_1 ≥ … ≥ k_t, n ≥ k_1+k_2"), "{msg}");

    let small = bin().args(["bound", "--n", "4", "--ks", "3,2"]).output().unwrap();
    assert_eq!(small.status.code(), Some(2));

    let usage = bin().args(["oracle", "--n", "9"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));

    let zero = bin().args(["oracle", "--n", "9", "--ks", "4,3,2", "--budget", "0"]).output().unwrap();
    assert_eq!(zero.status.code(), Some(2));

    // criterion 5 fails honestly, so the small suite exits 1
    let suite = bin().args(["suite", "--n-max", "6", "--format", "csv"]).output().unwrap();
    assert_eq!(suite.status.code(), Some(1));
}

#[test]
fn budget_from_environment() {
    let out = bin()
        .args(["oracle", "--n", "20", "--ks", "3,3,3"])
        .env("CROSSFAM_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["oracle", "--n", "9", "--ks", "4,3,2"])
        .env("CROSSFAM_BUDGET", "1000000")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["instance"]["budget"], 1000000);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("crossfam-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let st = bin()
        .args(["size", "--n", "9", "--k", "4", "--id", "2", "--output"])
        .arg(&path)
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(0));
    let v: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["results"]["size"], "91");
    let missing = bin()
        .args(["size", "--n", "9", "--k", "4", "--id", "2", "--output"])
        .arg(dir.join("no/such/dir/r.json"))
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn instance() -> impl Strategy<Value = (usize, Vec<usize>)> {
        (1usize..=5, 1usize..=5, 0usize..=3, 0usize..=4).prop_map(|(a, b, c, extra)| {
            let mut ks = vec![a, b, c.max(1)];
            ks.sort_unstable_by(|x, y| y.cmp(x));
            let n = ks[0] + ks[1] + extra;
            (n, ks)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn bound_and_extremal_reports_validate((n, ks) in instance()) {
            let ks: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
            let ks = ks.join(",");
            let n = n.to_string();
            let v = schema();
            for cmd in ["bound", "extremal", "f-scan"] {
                let args = [cmd, "--n", n.as_str(), "--ks", ks.as_str()];
                let r = report(&args);
                prop_assert!(r.passed(), "{args:?} {:?}", r.checks);
                let doc: Value = serde_json::from_slice(&r.emit(Format::Json)).unwrap();
                prop_assert!(v.is_valid(&doc));
                prop_assert_eq!(r.canonical_bytes(), report(&args).canonical_bytes());
            }
        }
    }
}
