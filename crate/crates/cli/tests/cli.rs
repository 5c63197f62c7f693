use std::process::{Command, Output};

use serde_json::Value;

fn knotkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotkit")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = knotkit(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn first_line(args: &[&str]) -> String {
    stdout(args).lines().next().unwrap_or_default().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    serde_json::from_str(&stdout(&a)).unwrap()
}

#[test]
fn homology_of_three_colour_quandle() {
    assert_eq!(first_line(&["homology", "--birack", "q3", "--degree", "3", "--theory", "Q"]), "Z_3");
    let v = json(&["homology", "--birack", "q3", "--degree", "3", "--theory", "Q"]);
    assert_eq!(v["torsion"], serde_json::json!([3]));
    assert_eq!(v["format_version"], "1");
}

#[test]
fn unknot_has_three_colourings() {
    assert_eq!(first_line(&["colour", "--diagram", "unknot0", "--birack", "q3"]), "3");
}

#[test]
fn trefoil_chirality_flips_under_mirror() {
    let values = |name: &str| -> Vec<i64> {
        let v = json(&["chirality", "--diagram", name]);
        v["classes"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
    };
    let r = values("trefoil_r");
    let l = values("trefoil_l");
    assert!(r.iter().all(|&x| x == 0 || x == 1) && r.contains(&1));
    let mut neg: Vec<i64> = r.iter().map(|x| -x).collect();
    neg.sort_unstable();
    assert_eq!(l, neg);
}

#[test]
fn exit_codes() {
    assert_eq!(knotkit(&["homology", "--birack", "q3"]).status.code(), Some(2));
    assert_eq!(knotkit(&["catalog", "--bogus"]).status.code(), Some(2));
    assert_eq!(knotkit(&["frobnicate"]).status.code(), Some(2));
    // BQ21 is not a quandle
    let bad = knotkit(&["homology", "--birack", "bq21", "--degree", "2", "--theory", "Q"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(!bad.stderr.is_empty());
    assert_eq!(knotkit(&["report", "--diagram", "no_such_knot"]).status.code(), Some(1));
    assert_eq!(knotkit(&["report", "--diagram", "/no/such/file.json"]).status.code(), Some(1));
}

#[test]
fn deterministic_output() {
    for args in [
        &["report", "--diagram", "figure8", "--json"][..],
        &["colour", "--diagram", "trefoil_r", "--birack", "q3", "--whole", "--all", "--json"],
        &["chirality", "--diagram", "trefoil_l"],
    ] {
        assert_eq!(knotkit(args).stdout, knotkit(args).stdout);
    }
    let one = Command::new(env!("CARGO_BIN_EXE_knotkit"))
        .env("KNOTKIT_THREADS", "1")
        .args(["report", "--diagram", "trefoil_r_kinked", "--json"])
        .output()
        .unwrap();
    assert_eq!(one.stdout, knotkit(&["report", "--diagram", "trefoil_r_kinked", "--json"]).stdout);
}

#[test]
fn every_catalog_entry_reports() {
    let cat = json(&["catalog"]);
    let names: Vec<&str> = cat["diagrams"].as_array().unwrap().iter().map(|d| d["name"].as_str().unwrap()).collect();
    assert!(names.len() >= 9);
    for name in names {
        let v = json(&["report", "--diagram", name]);
        assert_eq!(v["diagram"], name);
        let _ = stdout(&["analyze", "--diagram", name]);
    }
}

#[test]
fn files_round_trip_through_the_cli() {
    let dir = std::env::temp_dir().join(format!("knotkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let doubled = dir.join("double.json");
    stdout(&["double", "--birack", "bq21", "--out", doubled.to_str().unwrap()]);
    let axioms = json(&["axioms", "--birack", doubled.to_str().unwrap()]);
    assert_eq!(axioms["total"], false);
    assert_eq!(axioms["name"], "D(BQ21)");

    let report = json(&["report", "--diagram", "trefoil_r"]);
    let colour = json(&["colour", "--diagram", "trefoil_r", "--birack", "q3"]);
    assert_eq!(report["colour_counts"]["Q33"], colour["count"]);
    std::fs::remove_dir_all(&dir).unwrap();
}
