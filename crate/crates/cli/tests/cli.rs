use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const K5: &str = "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";

fn trifree(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trifree"))
        .args(args)
        .current_dir(dir)
        .env_remove("TRIFREE_THREADS")
        .output()
        .expect("run trifree")
}

fn setup() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("k5.el"), K5).unwrap();
    std::fs::write(dir.path().join("c5.el"), C5).unwrap();
    dir
}

fn validator() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema/result.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn read_json(path: &Path) -> Value {
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let errors: Vec<String> = validator().iter_errors(&doc).map(|e| format!("{e} at {}", e.instance_path())).collect();
    assert!(errors.is_empty(), "{}: {errors:#?}", path.display());
    doc
}

fn ok(out: &Output) {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn solve_complete_graph() {
    let dir = setup();
    let out = trifree(dir.path(), &["solve", "--graph", "k5.el", "--what", "t,b,verdict", "--out", "k5.json"]);
    ok(&out);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 1);
    let doc = read_json(&dir.path().join("k5.json"));
    assert_eq!(doc["t"], 6);
    assert_eq!(doc["b"], 6);
    assert_eq!(doc["t_equals_b"], true);
    assert_eq!(doc["verdict"]["kind"], "all_bipartite");
    assert_eq!(doc["manifest"]["subcommand"], "solve");

    let out = trifree(dir.path(), &["solve", "--graph", "k5.el", "--what", "tr,br", "--r", "4", "--out", "r.json"]);
    ok(&out);
    let doc = read_json(&dir.path().join("r.json"));
    assert_eq!((doc["tr"].as_u64(), doc["br"].as_u64()), (Some(8), Some(8)));
}

#[test]
fn obstruct_reports_the_cycle() {
    let dir = setup();
    ok(&trifree(dir.path(), &["obstruct", "--graph", "c5.el", "--out", "c5.json"]));
    let doc = read_json(&dir.path().join("c5.json"));
    assert_eq!(doc["found"], true);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 5);
    ok(&trifree(dir.path(), &["obstruct", "--graph", "k5.el", "--out", "k5.json"]));
    assert_eq!(read_json(&dir.path().join("k5.json"))["found"], false);
}

#[test]
fn exit_codes() {
    let dir = setup();
    assert_eq!(trifree(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(trifree(dir.path(), &["sample", "--n", "5"]).status.code(), Some(2));
    assert_eq!(trifree(dir.path(), &["sample", "--n", "5", "--p", "1.5"]).status.code(), Some(2));
    assert_eq!(trifree(dir.path(), &["solve", "--graph", "k5.el", "--epsilon", "0.7"]).status.code(), Some(2));
    assert_eq!(trifree(dir.path(), &["solve", "--graph", "missing.el"]).status.code(), Some(1));
    std::fs::write(dir.path().join("bad.el"), "3 1\n0 0\n").unwrap();
    assert_eq!(trifree(dir.path(), &["obstruct", "--graph", "bad.el"]).status.code(), Some(1));
    assert_eq!(trifree(dir.path(), &["sweep", "--n", "41", "--trials", "1"]).status.code(), Some(3));
    assert_eq!(trifree(dir.path(), &["sweep", "--n", "31", "--trials", "1", "--mode", "strong"]).status.code(), Some(3));
    let big = trifree(dir.path(), &["sample", "--n", "45", "--p", "0.5", "--out", "big.el"]);
    ok(&big);
    assert_eq!(trifree(dir.path(), &["solve", "--graph", "big.el", "--what", "b"]).status.code(), Some(3));
    assert_eq!(trifree(dir.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn sample_round_trips() {
    let dir = setup();
    ok(&trifree(dir.path(), &["sample", "--n", "12", "--p", "0.4", "--seed", "3", "--out", "g.el"]));
    read_json(&dir.path().join("g.el.manifest.json"));
    let stdout = trifree(dir.path(), &["sample", "--n", "12", "--p", "0.4", "--seed", "3"]);
    ok(&stdout);
    assert_eq!(stdout.stdout, std::fs::read(dir.path().join("g.el")).unwrap());
}

fn csv_lines(path: &Path) -> Vec<Vec<String>> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

fn is_fixed6(s: &str) -> bool {
    s.split_once('.').is_some_and(|(a, b)| !a.is_empty() && b.len() == 6 && b.chars().all(|c| c.is_ascii_digit()))
}

#[test]
fn sweep_csv_schema_and_reproducibility() {
    let dir = setup();
    let args = ["sweep", "--n", "12", "--grid", "auto", "--trials", "20", "--seed", "9", "--mode", "strong"];
    let mut one = args.to_vec();
    one.extend(["--threads", "1", "--out", "s1.csv"]);
    let mut two = args.to_vec();
    two.extend(["--threads", "2", "--out", "s2.csv"]);
    ok(&trifree(dir.path(), &one));
    ok(&trifree(dir.path(), &two));
    let a = std::fs::read(dir.path().join("s1.csv")).unwrap();
    assert_eq!(a, std::fs::read(dir.path().join("s2.csv")).unwrap());

    let rows = csv_lines(&dir.path().join("s1.csv"));
    assert_eq!(
        rows[0].join(","),
        "n,p,trials,weak_count,weak_lo,weak_hi,strong_count,strong_lo,strong_hi,inconclusive,obstructions,seed"
    );
    assert!(rows.len() >= 11);
    for r in &rows[1..] {
        assert_eq!(r.len(), 12);
        for i in [1, 4, 5, 7, 8] {
            assert!(is_fixed6(&r[i]), "{r:?}");
        }
        let weak: usize = r[3].parse().unwrap();
        let strong: usize = r[6].parse().unwrap();
        assert!(weak >= strong);
        assert_eq!(r[11], "9");
    }
    let manifest = read_json(&dir.path().join("s1.csv.manifest.json"));
    assert_eq!(manifest["subcommand"], "sweep");

    ok(&trifree(dir.path(), &["rerun", "s1.csv.manifest.json", "--out", "s3.csv"]));
    assert_eq!(a, std::fs::read(dir.path().join("s3.csv")).unwrap());

    ok(&trifree(dir.path(), &["sweep", "--n", "8", "--grid", "0,1", "--trials", "5", "--out", "w.csv"]));
    let rows = csv_lines(&dir.path().join("w.csv"));
    for r in &rows[1..] {
        assert_eq!((r[3].as_str(), r[6].as_str()), ("5", ""));
    }
}

#[test]
fn analysis_outputs_validate() {
    let dir = setup();
    ok(&trifree(dir.path(), &["sample", "--n", "14", "--p", "0.5", "--seed", "2", "--out", "g.el"]));
    ok(&trifree(
        dir.path(),
        &["analyze-cut", "--graph", "g.el", "--p", "0.5", "--chain", "--diagnostics", "--out", "a.json"],
    ));
    let doc = read_json(&dir.path().join("a.json"));
    assert!(doc["chain"]["t"].as_u64() >= doc["chain"]["b"].as_u64());
    ok(&trifree(
        dir.path(),
        &["analyze-cut", "--graph", "g.el", "--p", "0.5", "--side-a", "0,1,2,3,4,5,6", "--out", "b.json"],
    ));
    assert_eq!(read_json(&dir.path().join("b.json"))["side_a"].as_array().unwrap().len(), 7);
    assert_eq!(
        trifree(dir.path(), &["analyze-cut", "--graph", "g.el", "--p", "0.5", "--side-a", "99"]).status.code(),
        Some(2)
    );

    ok(&trifree(dir.path(), &["homology", "--graph", "c5.el", "--k", "1", "--out", "h.json"]));
    let doc = read_json(&dir.path().join("h.json"));
    assert_eq!(doc["betti"], serde_json::json!([0, 1]));
    assert_eq!(doc["theorem_6_2"]["h1_zero"], false);

    ok(&trifree(
        dir.path(),
        &["threshold", "--n", "8", "--trials", "10", "--seed", "3", "--coarse-points", "4", "--bisection-steps", "2", "--out", "t.json"],
    ));
    let t1 = read_json(&dir.path().join("t.json"));
    ok(&trifree(dir.path(), &["rerun", "t.json", "--out", "t2.json"]));
    let t2 = read_json(&dir.path().join("t2.json"));
    assert_eq!(t1["p_star"], t2["p_star"]);
    assert_eq!(t1["evaluations"], t2["evaluations"]);
}

#[test]
fn homology_sweep_csv() {
    let dir = setup();
    ok(&trifree(dir.path(), &["homology", "--n", "12", "--k", "0", "--grid", "0.05,1", "--trials", "10", "--out", "h.csv"]));
    let rows = csv_lines(&dir.path().join("h.csv"));
    assert_eq!(rows[0].join(","), "p,trials,h_k_zero_count,fraction,wilson_lo,wilson_hi");
    assert_eq!(rows[2][..4].join(","), "1.000000,10,10,1.000000");
    let m = read_json(&dir.path().join("h.csv.manifest.json"));
    assert!(m["extra"]["kahle_threshold"].as_f64().unwrap() > 0.0);
}

#[test]
fn config_file_and_flags() {
    let dir = setup();
    std::fs::write(dir.path().join("cfg.json"), r#"{"epsilon": 0.05, "eta": 0.004}"#).unwrap();
    ok(&trifree(dir.path(), &["obstruct", "--graph", "c5.el", "--config", "cfg.json", "--alpha", "0.5", "--out", "o.json"]));
    let doc = read_json(&dir.path().join("o.json"));
    let cfg = &doc["manifest"]["config"];
    assert_eq!((cfg["epsilon"].as_f64(), cfg["eta"].as_f64(), cfg["alpha"].as_f64()), (Some(0.05), Some(0.004), Some(0.5)));
    std::fs::write(dir.path().join("bad.json"), r#"{"epsilon": 0.05, "eta": 0.01}"#).unwrap();
    assert_eq!(trifree(dir.path(), &["obstruct", "--graph", "c5.el", "--config", "bad.json"]).status.code(), Some(2));
    std::fs::write(dir.path().join("typo.json"), r#"{"epsilom": 0.05}"#).unwrap();
    assert_eq!(trifree(dir.path(), &["obstruct", "--graph", "c5.el", "--config", "typo.json"]).status.code(), Some(2));
}
