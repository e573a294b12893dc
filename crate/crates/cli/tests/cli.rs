use std::process::{Command, Output};

use serde_json::Value;

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_operad-forge")).args(args).env("OPERAD_FORGE_THREADS", "1").output().expect("run the binary")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn build_operad_lie_and_com() {
    let o = forge(&["build-operad", "lie", "--arity-cap", "4"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["dims"], serde_json::json!([1, 1, 2, 6]));
    let o = forge(&["build-operad", "com", "--arity-cap", "5"]);
    assert_eq!(stdout_json(&o)["dims"], serde_json::json!([1, 1, 1, 1, 1]));
}

#[test]
fn bad_presentation_names_the_relation() {
    let dir = std::env::temp_dir().join(format!("forge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"name":"X","generators":[{"label":"b","swap":{"b":-1}}],"relations":[{"name":"lopsided","terms":[[1,["b",["b",1,2],3]]]}]}"#).unwrap();
    let o = forge(&["build-operad", path.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("lopsided"));
    let o = forge(&["build-operad", "no-such-operad"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn m_psi_certificate() {
    let o = forge(&["m-psi", "id_com", "--check", "--arity-cap", "4"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["certificate"]["chain_map"], "PASS");
    // μ₃ ⊗ ℓ₃ is a single term
    assert_eq!(v["images"]["l3"].as_array().unwrap().len(), 1);
    let o = forge(&["m-psi", "a", "--check", "--arity-cap", "3"]);
    assert!(o.status.success());
    assert!(!forge(&["m-psi", "nothing"]).status.success());
}

#[test]
fn verify_exit_codes() {
    let o = forge(&["verify", "signs", "--samples", "10"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"][0]["suite"], "signs");
    assert_eq!(forge(&["verify", "bogus"]).status.code(), Some(2));
}

#[test]
fn output_matches_golden_files() {
    let golden = |name: &str| std::fs::read(std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap();
    assert_eq!(forge(&["build-operad", "lie", "--arity-cap", "4"]).stdout, golden("lie4.json"));
    assert_eq!(forge(&["m-psi", "id_com", "--check", "--arity-cap", "4"]).stdout, golden("m_psi_id_com4.json"));
    let a = forge(&["verify", "signs"]).stdout;
    assert_eq!(a, forge(&["verify", "signs"]).stdout);
}
