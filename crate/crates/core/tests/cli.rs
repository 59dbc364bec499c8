//! End-to-end tests of the `gerst` binary.

use std::process::{Command, Output};

fn gerst(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gerst"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn lists_builtins() {
    let o = gerst(&["algebras", "list"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    for name in [
        "z2",
        "z3",
        "z4",
        "s3",
        "sweedler",
        "taft:<n>:<q>",
        "dual:<name>",
        "double:<name>",
    ] {
        assert!(text.contains(name), "{name} missing");
    }
}

#[test]
fn sweedler_cohomology_table() {
    let o = gerst(&[
        "cohomology",
        "sweedler",
        "--max-degree",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let dims: Vec<u64> = v["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["cohomology"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 0, 1, 0, 1]);
}

#[test]
fn thm3_on_sweedler_passes() {
    let o = gerst(&[
        "check", "thm3", "sweedler", "--p", "2", "--q", "1", "--trials", "20", "--seed", "7",
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn double_of_sweedler_verifies() {
    let o = gerst(&["verify", "double:sweedler"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dim 16"));
}

#[test]
fn export_verify_round_trip_is_byte_exact() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let a_s = a.to_str().unwrap();
    assert_eq!(code(&gerst(&["export", "taft:3:2", "--out", a_s])), 0);
    assert_eq!(code(&gerst(&["verify", a_s])), 0);
    assert_eq!(
        code(&gerst(&[
            "export",
            "taft:3:2",
            "--out",
            b.to_str().unwrap()
        ])),
        0
    );
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let parsed = gerst::io::parse_hopf(&a, true).unwrap();
    assert_eq!(parsed.to_json().as_bytes(), std::fs::read(&a).unwrap());
    // a file loads anywhere a built-in name does
    let o = gerst(&["cohomology", a_s, "--max-degree", "2"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn double_command_writes_loadable_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.json");
    let o = gerst(&["double", "z2", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&gerst(&["verify", out.to_str().unwrap()])), 0);
}

#[test]
fn json_reports_are_reproducible() {
    let args = [
        "check", "comm", "s3", "--p", "1", "--q", "2", "--seed", "3", "--format", "json",
    ];
    let first = gerst(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, gerst(&args).stdout);
    let args = [
        "check", "bracket", "sweedler", "--seed", "5", "--format", "json",
    ];
    assert_eq!(gerst(&args).stdout, gerst(&args).stdout);
}

#[test]
fn exit_codes() {
    // failing verdict
    assert_eq!(
        code(&gerst(&["check", "comm", "z2", "--fault", "cup:3"])),
        1
    );
    // usage and resource errors
    assert_eq!(code(&gerst(&["cohomology", "z7"])), 2);
    assert_eq!(
        code(&gerst(&["cohomology", "z2", "--coefficients", "bogus"])),
        2
    );
    assert_eq!(code(&gerst(&["cohomology", "s3", "--max-degree", "5"])), 2);
    // I/O
    assert_eq!(code(&gerst(&["verify", "/nonexistent/h.json"])), 3);
    // malformed input
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&gerst(&["cohomology", bad.to_str().unwrap()])), 4);
}

#[test]
fn size_error_names_the_key() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2.json");
    assert_eq!(
        code(&gerst(&["export", "z2", "--out", path.to_str().unwrap()])),
        0
    );
    let mut doc: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    doc["comult"].as_array_mut().unwrap().push("0".into());
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = gerst(&["cohomology", path.to_str().unwrap()]);
    assert_eq!(code(&o), 4);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(
        err.contains("comult") && err.contains("expected 8"),
        "{err}"
    );
}

#[test]
fn invalid_axioms_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2.json");
    gerst(&["export", "z2", "--out", path.to_str().unwrap()]);
    let mut doc: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    doc["antipode"] = serde_json::json!(["0", "0", "0", "0"]);
    std::fs::write(&path, doc.to_string()).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(code(&gerst(&["cohomology", p])), 4);
    assert_eq!(code(&gerst(&["verify", p])), 1);
}
