use std::path::PathBuf;
use std::process::Command;

use commdeg_cli::run_args;
use serde_json::Value;

fn run(args: &[&str]) -> commdeg_cli::Outcome {
    run_args(std::iter::once("commdeg").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn frac(v: &Value) -> (i64, i64) {
    (v["num"].as_i64().unwrap(), v["den"].as_i64().unwrap())
}

#[test]
fn bounds_json_for_q8() {
    let doc = json(&["bounds", "--group", "Q:8", "--subgroup", "all", "--format", "json"]);
    assert_eq!(doc["schema"], "commdeg.bounds/1");
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 6);
    let whole = reports.iter().find(|r| r["profile"]["subgroup_order"] == 8).unwrap();
    assert_eq!(frac(&whole["pr"]), (5, 8));
    let flags: Vec<&str> = whole["equality_flags"].as_array().unwrap().iter().map(|f| f.as_str().unwrap()).collect();
    for name in ["theorem_a_lower", "theorem41_lower", "theorem41_upper", "classvec_lower"] {
        assert!(flags.contains(&name), "{name} missing from {flags:?}");
    }
    assert!(doc["violations"].as_array().unwrap().is_empty());
}

#[test]
fn bounds_report_round_trips() {
    let out = run(&["bounds", "--group", "S:4", "--subgroup", "default", "--format", "json"]);
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    let reports: Vec<commdeg::bounds::BoundReport> = serde_json::from_value(doc["reports"].clone()).unwrap();
    let again = serde_json::to_value(&reports).unwrap();
    assert_eq!(again, doc["reports"]);
}

#[test]
fn stats_table_and_csv() {
    let out = run(&["stats", "--group", "D:8 x C:3"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("group D:8 x C:3 (order 24)"));
    assert!(out.stdout.contains("Pr(H,G) = 5/8 (0.625000)"));

    let out = run(&["stats", "--group", "S:3", "--format", "csv"]);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("pair_id,group_order,subgroup_order,arity,element,label,pr_g"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn stats_higher_arity() {
    let doc = json(&["stats", "--group", "Q:8", "--arity", "3", "--format", "json"]);
    assert_eq!(frac(&doc["pairs"][0]["pr"]), (1, 1));
    let out = run(&["stats", "--group", "S:4", "--arity", "4", "--work-cap", "1000"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("E_WORK_CAP"));
}

#[test]
fn isoclinic_witness_round_trip() {
    let out = run(&["isoclinic", "--pair1", "Q:8", "--pair2", "D:8", "--format", "json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["status"], "isoclinic");
    let rows = doc["invariance"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r["pr_source"] == r["pr_target"]));

    let path = tmp("q8_d8_report.json", &out.stdout);
    let replay = json(&[
        "isoclinic",
        "--pair1",
        "Q:8",
        "--pair2",
        "D:8",
        "--witness",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(replay["status"], doc["status"]);
    assert_eq!(replay["invariance"], doc["invariance"]);
    assert_eq!(replay["witness"], doc["witness"]);

    let mut bad = doc["witness"].clone();
    bad["beta"] = serde_json::json!([0, 0]);
    let path = tmp("q8_d8_bad.json", &bad.to_string());
    let out = run(&["isoclinic", "--pair1", "Q:8", "--pair2", "D:8", "--witness", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("E_WITNESS"), "{}", out.stderr);
    assert!(out.stderr.contains("beta"));
}

#[test]
fn isoclinic_negative_and_subgroups() {
    let doc = json(&["isoclinic", "--pair1", "S:3", "--pair2", "Q:8", "--format", "json"]);
    assert_eq!(doc["status"], "not_isoclinic");
    assert!(doc.get("witness").is_none());

    let doc = json(&[
        "isoclinic",
        "--pair1",
        "ESp:3",
        "--pair2",
        "ESm:3",
        "--sub1",
        "maximal",
        "--sub2",
        "maximal",
        "--format",
        "json",
    ]);
    assert_eq!(doc["schema"], "commdeg.isoclinic/1");
    assert_eq!(doc["status"], "isoclinic");
    assert_eq!(doc["pair1"]["descriptor"]["subgroup_order"], 9);

    let out = run(&["isoclinic", "--pair1", "S:4", "--pair2", "S:4", "--sub1", "all"]);
    assert!(out.stderr.starts_with("E_SELECTOR"));
}

#[test]
fn verify_theorems_small() {
    let out = run(&["verify-theorems", "--max-order", "32"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.trim_end().ends_with("0 violations"));
    let doc = json(&["verify-theorems", "--max-order", "32", "--format", "json"]);
    assert_eq!(doc["schema"], "commdeg.verify/1");
    assert!(doc["violations"].as_array().unwrap().is_empty());
}

#[test]
fn input_errors_have_codes() {
    let cases: &[(&[&str], &str)] = &[
        (&["stats", "--group", "X5:2"], "E_UNSUPPORTED"),
        (&["stats", "--group", "Q:"], "E_PARSE"),
        (&["stats", "--group", "S:3", "--subgroup", "nope"], "E_SELECTOR"),
        (&["stats", "--group", "S:3", "--subgroup", "gen:9"], "E_SELECTOR"),
        (&["stats", "--table", "/definitely/not/here"], "E_NOT_FOUND"),
        (&["stats", "--group", "S:5", "--order-cap", "100"], "E_CLOSURE_CAP"),
        (&["stats", "--group", "S:3", "--order-cap", "0"], "E_USAGE"),
        (&["stats"], "E_USAGE"),
        (&["stats", "--group", "S:3", "--table", "x"], "E_USAGE"),
        (&["bounds", "--group", "S:5", "--subgroup", "all", "--lattice-cap", "50"], "E_CAP"),
    ];
    for (args, code) in cases {
        let out = run(args);
        assert_eq!(out.code, 1, "{args:?}");
        assert!(out.stderr.starts_with(code), "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn malformed_cycle_reports_column() {
    let path = tmp("bad_cycle.txt", "(0 1\n");
    let out = run(&["stats", "--perms", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("E_PARSE: parse error at column"), "{}", out.stderr);
}

#[test]
fn file_inputs() {
    let table = tmp("c3.txt", "3\n0 1 2\n1 2 0\n2 0 1\nlabels\ne\nr\nr^2\n");
    let doc = json(&["stats", "--table", table.to_str().unwrap(), "--format", "json"]);
    assert_eq!(doc["group"], "c3.txt");
    assert_eq!(frac(&doc["pairs"][0]["pr"]), (1, 1));
    assert_eq!(doc["pairs"][0]["distribution"][0]["label"], "e");

    let perms = tmp("s4.txt", "(0 1 2 3)\n(0 1)\n");
    let doc = json(&["stats", "--perms", perms.to_str().unwrap(), "--format", "json"]);
    assert_eq!(doc["group_order"], 24);
    assert_eq!(frac(&doc["pairs"][0]["pr"]), (5, 24));

    let doc =
        json(&["isoclinic", "--pair1", &format!("perms:{}", perms.display()), "--pair2", "S:4", "--format", "json"]);
    assert_eq!(doc["status"], "isoclinic");
}

#[test]
fn sampling_is_seeded() {
    let args = |seed: &str| {
        run(&["bounds", "--group", "S:4", "--subgroup", "all", "--sample", "4", "--seed", seed, "--format", "csv"])
            .stdout
    };
    let a = args("7");
    assert_eq!(a, args("7"));
    assert_eq!(a.lines().count(), 5);
    let seeds = ["1", "2", "3", "4"];
    assert!(seeds.iter().any(|s| args(s) != a));
}

#[test]
fn catalog_list() {
    let doc = json(&["catalog", "list", "--format", "json"]);
    assert_eq!(doc["schema"], "commdeg.catalog/1");
    assert!(doc["shipped"].as_array().unwrap().iter().any(|s| s["spec"] == "X5:3" && s["order"] == 243));
    let out = run(&["catalog", "list"]);
    assert!(out.stdout.contains("X5:p"));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["--version"]).code, 0);
}

#[test]
fn binary_output_is_deterministic_and_reads_env_caps() {
    let bin = env!("CARGO_BIN_EXE_commdeg");
    let go = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let args = ["bounds", "--group", "Q:8 x S:3", "--subgroup", "default", "--format", "json"];
    let first = go(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, go(&args).stdout);

    let capped = Command::new(bin).args(["stats", "--group", "S:4"]).env("COMMDEG_ORDER_CAP", "10").output().unwrap();
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).starts_with("E_CLOSURE_CAP"));
}
