use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn twc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twc")).args(args).env_remove("TWC_CACHE_DIR").output().expect("twc runs")
}

fn twc_with_cache(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twc")).args(args).env("TWC_CACHE_DIR", dir).output().expect("twc runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = twc(&a);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn orbit_sizes(v: &Value) -> Vec<u64> {
    v["orbits"].as_array().unwrap().iter().map(|o| o["size"].as_u64().unwrap()).collect()
}

/// t values of one row, in output order.
fn row_t(v: &Value, row: &str) -> Vec<u64> {
    v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["row_label"] == row)
        .map(|c| c["t"].as_u64().unwrap())
        .collect()
}

fn cell(v: &Value, row: &str, col: &str) -> (u64, u64) {
    let c = v["cells"].as_array().unwrap().iter().find(|c| c["row_label"] == row && c["col_label"] == col).unwrap();
    (c["t"].as_u64().unwrap(), c["b"].as_u64().unwrap())
}

#[test]
fn q3_full_line_orbits() {
    let v = json(&["orbits", "--q", "3", "--objects", "lines", "--group", "full"]);
    assert_eq!(orbit_sizes(&v), [6, 12, 16, 8, 24, 48, 16]);
    assert_eq!(v["meta"]["command"], "orbits");
    assert_eq!(v["meta"]["group"], "full");
}

#[test]
fn q2_full_plane_orbits() {
    let v = json(&["orbits", "--q", "2", "--objects", "planes", "--group", "full"]);
    assert_eq!(orbit_sizes(&v), [6, 6, 1, 2]);
    let first = &v["orbits"][0];
    assert_eq!(first["label"], "Gamma,1bar_C");
    assert_eq!(first["merges"], serde_json::json!(["N*1", "N*4"]));
}

#[test]
fn q5_critical_plane_orbits_need_no_flag() {
    let v = json(&["orbits", "--q", "5", "--objects", "planes", "--group", "critical"]);
    assert_eq!(orbit_sizes(&v), [6, 30, 20, 60, 40]);
}

#[test]
fn incidence_rows_follow_reference_layout() {
    let v = json(&["incidence", "--q", "4", "--pair", "plane-point"]);
    assert_eq!(row_t(&v, "Gamma"), [1, 8, 6, 6, 0]);

    let v = json(&["incidence", "--q", "2", "--pair", "line-plane"]);
    assert_eq!(cell(&v, "RC", "3_C"), (1, 3));

    let v = json(&["incidence", "--q", "3", "--pair", "line-point", "--group", "full"]);
    assert_eq!(row_t(&v, "EnGamma_2"), [2, 0, 2, 0]);
}

#[test]
fn json_is_integral_and_complete() {
    let v = json(&["incidence", "--q", "3", "--pair", "plane-point", "--group", "full"]);
    for key in ["meta", "orbits", "cells", "checks"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 16);
    for c in cells {
        assert!(c["t"].is_u64() && c["b"].is_u64());
    }
}

#[test]
fn csv_has_header_and_lf_endings() {
    let o = twc(&["incidence", "--q", "2", "--pair", "plane-point", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("row_label,col_label,t,b"));
    assert_eq!(lines.count(), 25);
}

#[test]
fn verify_passes_for_small_q() {
    for q in ["2", "3", "4"] {
        let o = twc(&["verify", "--q", q]);
        assert_eq!(o.status.code(), Some(0), "q={q}: {}", stdout(&o));
        assert!(stdout(&o).contains(", 0 failed"));
    }
}

#[test]
fn verify_q9_extended_finds_25_line_orbits() {
    let v = json(&["verify", "--q", "9", "--extended"]);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    let count = checks.iter().find(|c| c["name"] == "q=9 critical line orbit count").unwrap();
    assert_eq!(count["status"], "pass");
    let v = json(&["orbits", "--q", "9", "--objects", "lines"]);
    assert_eq!(v["orbits"].as_array().unwrap().len(), 25);
}

#[test]
fn verify_all_covers_the_supported_orders() {
    let v = json(&["verify", "--all"]);
    assert_eq!(v["meta"]["q"], serde_json::json!([2, 3, 4]));
    let v = json(&["verify", "--all", "--extended"]);
    assert_eq!(v["meta"]["q"], serde_json::json!([2, 3, 4, 5, 7, 8, 9]));
}

#[test]
fn subgroup_census() {
    let classes = |q: &str| -> Vec<u64> {
        let v = json(&["subgroups", "--q", q]);
        let mut c: Vec<u64> =
            v["meta"]["census"][0]["class_sizes"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
        c.sort_unstable();
        c
    };
    assert_eq!(classes("2"), [4, 4]);
    assert_eq!(classes("3"), [4, 4, 8, 8]);
    assert_eq!(classes("4"), [1]);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["orbits", "--q", "6", "--objects", "points"][..],
        &["orbits", "--q", "5", "--objects", "points", "--group", "full"],
        &["verify", "--q", "5"],
        &["subgroups", "--q", "7"],
        &["orbits", "--q", "2", "--objects", "circles"],
        &["incidence", "--q", "2"],
        &["verify", "--q", "2", "--all"],
        &["frobnicate"],
    ] {
        let o = twc(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("cells.csv");
    let args = ["incidence", "--q", "3", "--pair", "line-plane", "--format", "csv"];
    let direct = stdout(&twc(&args));
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let o = twc(&with_out);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
}

#[test]
fn output_is_deterministic_and_cache_independent() {
    let tmp = tempfile::tempdir().unwrap();
    let args = ["incidence", "--q", "4", "--pair", "line-point", "--group", "full", "--format", "json"];
    let plain = stdout(&twc(&args));
    assert_eq!(plain, stdout(&twc(&args)));
    let cold = stdout(&twc_with_cache(&args, tmp.path()));
    assert!(tmp.path().join("group-q4-full.json").exists());
    let warm = stdout(&twc_with_cache(&args, tmp.path()));
    assert_eq!(plain, cold);
    assert_eq!(plain, warm);
}
