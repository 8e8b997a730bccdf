use std::process::Command;

use serde_json::Value;

use schubert_cones::cli::run_subcommand;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out) = run_subcommand(args);
    (code, serde_json::from_str(&out).unwrap_or(Value::Null))
}

#[test]
fn degree_output_is_canonical() {
    assert_eq!(run_subcommand(&["degree", "--k", "3", "--n", "6"]), (0, "{\n  \"degree\": 42\n}\n".to_string()));
    let out = bin().args(["degree", "--k", "2", "--n", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\n  \"degree\": 5\n}\n");
}

#[test]
fn multiplicity() {
    let (code, v) = run_json(&["mult", "--k", "2", "--n", "5", "--lambda", "2,1", "--mu", "3,3"]);
    assert_eq!((code, &v["multiplicity"]), (0, &Value::from(2)));
    assert_eq!(run_subcommand(&["mult", "--k", "2", "--n", "4", "--lambda", "2", "--mu", "1,1"]).0, 2);
}

#[test]
fn product_and_pieri_agree() {
    let (_, p) = run_json(&["product", "--k", "2", "--n", "5", "--a", "1", "--b", "2,1"]);
    let (_, q) = run_json(&["pieri", "--k", "2", "--n", "5", "--p", "1", "--mu", "2,1"]);
    assert_eq!(p["product"]["terms"], q["product"]["terms"]);
    assert!(p["product"]["terms"].as_array().unwrap().len() == 2);
}

#[test]
fn usage_errors_exit_two() {
    let out = bin().arg("bogus").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run_subcommand(&["degree", "--k", "3"]).0, 2);
    assert_eq!(run_subcommand(&["product", "--k", "2", "--n", "4", "--a", "3", "--b", "1"]).0, 2);
    assert_eq!(run_subcommand(&["--help"]).0, 0);
}

#[test]
fn malformed_json_names_the_field() {
    let out = bin()
        .args(["cone", "sgen", "--k", "2", "--n", "4", "--r", "1", "--dim", "1", "--class", r#"{"terms":[["1",2]],"exc":[1]}"#])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("class.terms[0]"));
}

#[test]
fn cone_check_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let gens = dir.path().join("gens.json");
    std::fs::write(&gens, r#"[{"label": "a", "vector": [1, 0]}, {"label": "b", "vector": ["1/2", 1]}]"#).unwrap();
    let inside = dir.path().join("in.json");
    std::fs::write(&inside, r#"{"vector": [2, "3/2"]}"#).unwrap();
    let outside = dir.path().join("out.json");
    std::fs::write(&outside, r#"[-1, 1]"#).unwrap();
    let g = gens.to_str().unwrap();
    let (code, v) = run_json(&["cone", "check", "--generators", g, "--class", inside.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["verified"], Value::Bool(true));
    let (code, v) = run_json(&["cone", "check", "--generators", g, "--class", outside.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert_eq!(v["verified"], Value::Bool(true));
}

#[test]
fn sgen_verdicts() {
    let class = r#"{"terms":[{"lambda":[3,2],"c":4}],"exc":[2,1,1]}"#;
    let (code, v) = run_json(&["cone", "sgen", "--k", "2", "--n", "5", "--r", "3", "--dim", "1", "--class", class]);
    assert_eq!(code, 0, "{v}");
    let class = r#"{"terms":[{"lambda":[3,2],"c":2}],"exc":[1,1,1]}"#;
    let (code, v) = run_json(&["cone", "sgen", "--k", "2", "--n", "5", "--r", "3", "--dim", "1", "--class", class]);
    assert_eq!(code, 3, "{v}");
    assert!(v.get("certificate_profile").is_some());
}

#[test]
fn export_ring_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("G2_4.json");
    let p = path.to_str().unwrap();
    let (code, v) = run_json(&["export-ring", "--k", "2", "--n", "4", "--out", p, "--check"]);
    assert_eq!(code, 0);
    assert_eq!(v["round_trip"], Value::Bool(true));
    assert_eq!(v["classes"], Value::from(6));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["k"], Value::from(2));
    assert_eq!(run_subcommand(&["export-ring", "--k", "4", "--n", "9", "--out", p]).0, 2);
    assert_eq!(run_subcommand(&["export-ring", "--k", "2", "--n", "5", "--out", p, "--cap", "5"]).0, 2);
}

/// A tampered table in the cache directory is read in place of a fresh computation.
#[test]
fn cache_directory_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("G2_4.json");
    assert_eq!(run_subcommand(&["export-ring", "--k", "2", "--n", "4", "--out", path.to_str().unwrap()]).0, 0);
    let mut table: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    for entry in table["products"].as_array_mut().unwrap() {
        if entry["a"] == serde_json::json!([1]) && entry["b"] == serde_json::json!([1]) {
            entry["product"] = serde_json::json!([{"lambda": [2], "c": 7}]);
        }
    }
    std::fs::write(&path, serde_json::to_string(&table).unwrap()).unwrap();
    let args = ["product", "--k", "2", "--n", "4", "--a", "1", "--b", "1"];
    let cached = bin().args(args).env("SCHUBERT_CACHE_DIR", dir.path()).output().unwrap();
    let fresh = bin().args(args).env_remove("SCHUBERT_CACHE_DIR").output().unwrap();
    let cached: Value = serde_json::from_slice(&cached.stdout).unwrap();
    let fresh: Value = serde_json::from_slice(&fresh.stdout).unwrap();
    assert_eq!(cached["product"]["terms"], serde_json::json!([{"lambda": [2], "c": 7}]));
    assert_eq!(fresh["product"]["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn delpezzo_verify() {
    let (code, v) = run_json(&["delpezzo", "verify", "--case", "grass25", "--q", "1/10"]);
    assert_eq!(code, 0);
    assert!(!v["checks"].as_array().unwrap().is_empty());
    assert_eq!(v["assumptions"], serde_json::json!(["SHGH"]));
    assert_eq!(v["passed"], Value::Bool(true));
    let (code, v) = run_json(&["delpezzo", "verify", "--case", "grass25", "--q", "4/45"]);
    assert_eq!(code, 3);
    assert_eq!(v["passed"], Value::Bool(false));
    assert_eq!(run_subcommand(&["delpezzo", "verify", "--case", "grass25", "--q", "1/2"]).0, 2);
    assert_eq!(run_subcommand(&["delpezzo", "verify", "--case", "nope"]).0, 2);
    let (code, v) = run_json(&["delpezzo", "verify", "--case", "cubic"]);
    assert_eq!(code, 0);
    assert_eq!(v["cases"][0]["reports"].as_array().unwrap().len(), 5);
}

#[test]
fn orbits() {
    let (code, v) = run_json(&["orbits", "list", "--k", "2", "--dim", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], Value::from(8));
    assert_eq!(run_subcommand(&["orbits", "list", "--k", "2", "--dim", "3"]).0, 2);
    assert_eq!(run_subcommand(&["orbits", "check", "--k", "2", "--primes", "2,3"]).0, 0);
    assert_eq!(run_subcommand(&["orbits", "check", "--k", "3", "--primes", "3"]).0, 2);
}

#[test]
fn verify_paper_subset() {
    let (code, v) = run_json(&["verify-paper", "--only", "chow"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], Value::from("pass"));
    assert!(v["records"].as_array().unwrap().iter().all(|r| r["id"].as_str().unwrap().starts_with("chow")));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["product", "--k", "3", "--n", "6", "--a", "2,1", "--b", "2,1"][..],
        &["giambelli", "--k", "3", "--n", "7", "--lambda", "3,2,1"],
        &["orbits", "list", "--k", "3", "--dim", "2"],
        &["delpezzo", "verify", "--case", "p2xp2", "--q", "1/11"],
    ] {
        let a = bin().args(args).output().unwrap();
        let b = bin().args(args).output().unwrap();
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(run_subcommand(args).1.as_bytes(), &a.stdout[..]);
    }
}
