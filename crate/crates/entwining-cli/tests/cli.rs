use std::path::{Path, PathBuf};
use std::process::Command;

use entwining_cli::workspace::{InputError, WorkspaceFile};

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_entwining"))
        .args(args)
        .env_remove("SEED")
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("exit code"),
    )
}

fn parse_error(text: &str) -> String {
    match WorkspaceFile::from_json(text, "t.json").and_then(|f| f.resolve(None)) {
        Ok(_) => panic!("expected an error for {text}"),
        Err(e) => e.to_string(),
    }
}

fn write_temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("entwining-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const MINIMAL: &str = r#"{"field": {"kind": "rational"}, "algebras": {"k": {"dim": 1, "unit": ["1"], "mult": [[0, 0, 0, "1"]]}}}"#;

#[test]
fn minimal_file_has_one_algebra() {
    let ws = WorkspaceFile::from_json(MINIMAL, "t.json").unwrap().resolve(None).unwrap();
    assert_eq!(ws.algebras.len(), 1);
    assert_eq!(ws.algebras["k"].dim(), 1);
}

#[test]
fn out_of_range_index_names_the_entry() {
    let text = MINIMAL.replace("[0, 0, 0, \"1\"]", "[0, 1, 0, \"1\"]");
    let msg = parse_error(&text);
    assert!(msg.contains("algebras.k.mult"), "{msg}");
}

#[test]
fn malformed_json_reports_line_and_column() {
    let e = WorkspaceFile::from_json("{\n  \"field\": ,\n}", "t.json").unwrap_err();
    match e {
        InputError::Json { line, .. } => assert_eq!(line, 2),
        other => panic!("{other}"),
    }
}

#[test]
fn unknown_table_is_rejected() {
    let text = MINIMAL.replace("\"algebras\"", "\"algebrae\"");
    assert!(parse_error(&text).contains("algebrae"));
}

#[test]
fn non_prime_modulus_is_rejected() {
    let text = MINIMAL.replace(r#"{"kind": "rational"}"#, r#"{"kind": "prime", "p": 4}"#);
    assert!(parse_error(&text).contains("field"));
}

#[test]
fn dangling_reference_is_rejected() {
    let text = MINIMAL.replace(
        "}}}",
        r#"}}, "entwinings": {"e": {"algebra": "k", "coalgebra": "missing", "psi": []}}}"#,
    );
    assert!(parse_error(&text).contains("missing"));
}

#[test]
fn dimension_mismatch_is_rejected() {
    let text = MINIMAL.replace(r#""unit": ["1"]"#, r#""unit": ["1", "0"]"#);
    assert!(parse_error(&text).contains("algebras.k.unit"));
}

#[test]
fn failing_axiom_exits_one_with_witness() {
    let text = MINIMAL.replace("[0, 0, 0, \"1\"]", "[0, 0, 0, \"2\"]");
    let path = write_temp("bad_unit.json", &text);
    let (stdout, _, code) = run(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["status"], "FAIL");
    let checks = report["reports"][0]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["pass"] == false && !c["witness"].is_null()));
}

#[test]
fn spec_exit_codes_on_the_shipped_corpus() {
    assert_eq!(run(&["check", &corpus("kZ2.json")]).2, 0);
    assert_eq!(run(&["cointegral", &corpus("kZ2.json"), "trivial"]).2, 0);
    assert_eq!(run(&["cointegral", &corpus("kZ2.json"), "trivial", "--field", "prime:2"]).2, 1);
    let budget0 = ["frobenius", &corpus("upper_triangular_f2.json"), "trivial", "--budget", "0"];
    assert_eq!(run(&budget0).2, 2);
    assert_eq!(run(&["frobenius", &corpus("upper_triangular_f2.json"), "trivial"]).2, 1);
}

#[test]
fn input_errors_exit_three() {
    assert_eq!(run(&["no-such-command"]).2, 3);
    assert_eq!(run(&["check", "/nonexistent/file.json"]).2, 3);
    assert_eq!(run(&["cointegral", &corpus("kZ2.json"), "no-such-entwining"]).2, 3);
    assert_eq!(run(&["check", &corpus("kZ2.json"), "--field", "prime:6"]).2, 3);
    // a prime workspace cannot be reread over another field
    assert_eq!(run(&["check", &corpus("upper_triangular_f2.json"), "--field", "prime:3"]).2, 3);
}

#[test]
fn help_exits_zero() {
    let (stdout, _, code) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("frobenius"));
}

#[test]
fn seed_is_recorded_and_read_from_the_environment() {
    let path = corpus("M2.json");
    let (stdout, _, _) = run(&["check", &path, "--seed", "7"]);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report["seed"], 7);
    let out = Command::new(env!("CARGO_BIN_EXE_entwining"))
        .args(["check", &path])
        .env("SEED", "11")
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["seed"], 11);
}

#[test]
fn text_format_summarizes() {
    let (stdout, _, code) = run(&["separability", &corpus("dual_numbers.json"), "trivial", "--format", "text"]);
    assert_eq!(code, 1);
    assert!(stdout.starts_with("separability trivial over rational: FAIL"));
    assert!(stdout.contains("comodule forgetful: NONE"));
}

#[test]
fn none_verdicts_carry_certificates() {
    let (stdout, _, _) = run(&["separability", &corpus("dual_numbers.json"), "trivial"]);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let verdicts = report["verdicts"].as_array().unwrap();
    for v in verdicts.iter().filter(|v| v["verdict"]["status"] == "NONE") {
        assert_eq!(v["verdict"]["certificate"]["kind"], "linear_infeasibility");
    }
}

#[test]
fn written_file_reparses_identically() {
    for name in ["kZ2.json", "M2.json", "dual_numbers.json", "upper_triangular_f2.json"] {
        let ws = entwining_cli::workspace::Workspace::load(Path::new(&corpus(name)), None).unwrap();
        let path = write_temp(name, &ws.to_json());
        let again = entwining_cli::workspace::Workspace::load(&path, None).unwrap();
        assert_eq!(again, ws);
    }
}
