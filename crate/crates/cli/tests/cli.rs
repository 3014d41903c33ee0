use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn octoplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octoplane")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a json report")
}

fn golden_table(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/tables").join(name)
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("octoplane-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn split_plane_axioms_have_witnesses() {
    let out = octoplane(&["planes", "axioms", "--plane", "Os-P2", "--samples", "500", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let d = &r["checks"][0]["detail"];
    assert!(d["violation_count"].as_u64().unwrap() >= 1);
    assert!(d["violations"][0]["witness_lines"].as_array().unwrap().len() >= 2);
}

#[test]
fn f4_certificate() {
    let out = octoplane(&["lie", "cert", "--target", "f4", "--jordan", "J3-O"]);
    assert_eq!(out.status.code(), Some(0));
    let c = &report(&out)["checks"][0]["detail"];
    assert_eq!(c["dim"], 52);
    assert_eq!(c["character"], -52);
    assert_eq!(c["stable"], true);
}

#[test]
fn okubo_is_flexible() {
    let out = octoplane(&["algebra", "verify", "--kind", "okubo", "--law", "flexible"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["pass"], true);
}

#[test]
fn unknown_selectors_are_usage_errors() {
    assert_eq!(octoplane(&["planes", "axioms", "--plane", "Q-P7"]).status.code(), Some(2));
    assert_eq!(octoplane(&["albert", "check", "--jordan", "J4-O"]).status.code(), Some(2));
    assert_eq!(octoplane(&["lie", "cert", "--target", "f4"]).status.code(), Some(2));
    assert_eq!(octoplane(&["planes", "iso", "--plane", "O-P2"]).status.code(), Some(2));
    assert_eq!(octoplane(&["--tolerances", "-1", "report"]).status.code(), Some(2));
    assert_eq!(octoplane(&["--help"]).status.code(), Some(0));
}

#[test]
fn ingest_golden_and_corrupted_tables() {
    let good = golden_table("O.tbl");
    let out = octoplane(&["algebra", "ingest", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let text = std::fs::read_to_string(&good).unwrap();
    let flipped = text.replace("\n1 2 3 1 + 0 r3\n", "\n1 2 3 -1 + 0 r3\n");
    assert_ne!(flipped, text);
    let bad = scratch("flipped.tbl", &flipped);
    let out = octoplane(&["algebra", "ingest", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = report(&out)["checks"][0]["detail"]["error"].as_str().unwrap().to_string();
    assert!(err.contains('1') && err.contains('2'), "{err}");

    let empty = scratch("empty.tbl", "");
    assert_eq!(octoplane(&["algebra", "ingest", empty.to_str().unwrap()]).status.code(), Some(1));

    let missing = std::env::temp_dir().join("octoplane-no-such-table.tbl");
    assert_eq!(octoplane(&["algebra", "ingest", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn table_output_ingests_back() {
    let out = octoplane(&["algebra", "table", "--kind", "pO"]);
    assert_eq!(out.status.code(), Some(0));
    let p = scratch("pO.tbl", &String::from_utf8(out.stdout).unwrap());
    assert_eq!(octoplane(&["algebra", "ingest", p.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn same_config_same_report() {
    let args = ["--seed", "3", "--samples", "50", "albert", "check", "--jordan", "J21-Os"];
    let strip = |out: Output| {
        let mut v = report(&out);
        v.as_object_mut().unwrap().remove("wall_time_s");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(octoplane(&args)), strip(octoplane(&args)));
}

#[test]
fn report_fields() {
    let out = octoplane(&["--samples", "20", "albert", "check", "--jordan", "J3-O"]);
    let r = report(&out);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["config"]["command"], "albert check");
    assert_eq!(r["config"]["samples"], 20);
    let n = r["checks"].as_array().unwrap().len() as u64;
    assert_eq!(r["passed"].as_u64().unwrap() + r["failed"].as_u64().unwrap(), n);
    assert_eq!(out.status.code(), Some(if r["pass"] == true { 0 } else { 1 }));
}

#[test]
fn text_format_and_out_file() {
    let path = std::env::temp_dir().join(format!("octoplane-cli-{}-out.txt", std::process::id()));
    let out = octoplane(&[
        "--format", "text", "--out", path.to_str().unwrap(), "algebra", "verify", "--kind", "O", "--samples", "30",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
}

#[test]
fn report_keys_match_schema_file() {
    let schema: Value = serde_json::from_str(include_str!("../report.schema.json")).unwrap();
    let keys = |v: &Value| {
        let mut k: Vec<String> = v.as_object().unwrap().keys().cloned().collect();
        k.sort();
        k
    };
    let r = report(&octoplane(&["--samples", "5", "algebra", "verify", "--kind", "Ok", "--law", "division"]));
    assert_eq!(keys(&r), keys(&schema["properties"]));
    assert_eq!(keys(&r["config"]), keys(&schema["properties"]["config"]["properties"]));
    assert_eq!(keys(&r["checks"][0]), keys(&schema["properties"]["checks"]["items"]["properties"]));
}
