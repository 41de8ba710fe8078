//! End-to-end tests of the command-line interface: documented outputs,
//! exit codes, and byte-for-byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symprod"))
}

fn data(name: &str) -> PathBuf {
    // Integration tests run with the crate as the working directory; the
    // sample documents live at the workspace root.
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn sym_series_projective_line_table() {
    let out = run(&[
        "sym-series",
        "--input",
        data("projective_line.json").to_str().unwrap(),
        "--max-n",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "0: 1\n1: 1 + y*x*z^2\n2: 1 + y*x*z^2 + y^2*x^2*z^4\n"
    );
}

#[test]
fn sym_series_empty_table_is_one() {
    let out = run(&[
        "sym-series",
        "--input",
        data("empty.json").to_str().unwrap(),
        "--max-n",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "0: 1\n1: 0\n2: 0\n");
}

#[test]
fn sym_hodge_diamonds() {
    let path = data("projective_line.json");
    let path = path.to_str().unwrap();
    let at = |n: &str| stdout_of(&run(&["sym-hodge", "--input", path, "-n", n]));
    assert_eq!(at("0"), "p q k h\n0 0 0 1\n");
    // n = 1 echoes the input table.
    assert_eq!(at("1"), "p q k h\n0 0 0 1\n1 1 2 1\n");
    assert_eq!(at("2"), "p q k h\n0 0 0 1\n1 1 2 1\n2 2 4 1\n");
}

#[test]
fn chi_y_check_agrees() {
    let out = run(&[
        "chi-y",
        "--input",
        data("projective_line.json").to_str().unwrap(),
        "--max-n",
        "3",
        "--check",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "0: 1\n1: 1 + y\n2: 1 + y + y^2\n3: 1 + y + y^2 + y^3\n"
    );
}

#[test]
fn signature_odd_pair_series() {
    let out = run(&[
        "signature",
        "--pairing",
        data("odd_pair.json").to_str().unwrap(),
        "--max-n",
        "4",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "0: 1\n1: 0\n2: -1\n3: 0\n4: 0\n");
}

#[test]
fn signature_brute_agrees_and_reports() {
    let out = run(&[
        "signature",
        "--pairing",
        data("even_pair.json").to_str().unwrap(),
        "--max-n",
        "4",
        "--brute",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "0: 1 brute=1\n1: 0 brute=0\n2: 1 brute=1\n3: 0 brute=0\n4: 1 brute=1\n"
    );
}

#[test]
fn signature_brute_skips_past_dimension_bound() {
    let out = run(&[
        "signature",
        "--pairing",
        data("mixed_pairing.json").to_str().unwrap(),
        "--max-n",
        "2",
        "--brute",
        "--dim-bound",
        "3",
    ]);
    // Bound exceeded is not a failure; the coefficient line is marked.
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("brute=skipped"), "got: {text}");
}

#[test]
fn missing_input_file_is_exit_2() {
    let out = run(&["sym-series", "--input", "no-such-file.json", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_documents_are_exit_2() {
    let dir = std::env::temp_dir();
    let bad_hodge = dir.join("symprod_bad_hodge.json");
    std::fs::write(&bad_hodge, r#"{"entries": [{"p": 0, "q": 0, "k": 0, "h": 0}]}"#).unwrap();
    let out = run(&[
        "sym-series",
        "--input",
        bad_hodge.to_str().unwrap(),
        "--max-n",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let bad_pairing = dir.join("symprod_bad_pairing.json");
    std::fs::write(
        &bad_pairing,
        r#"{"dims": {"0": 2}, "blocks": [{"i": 0, "matrix": [["0", "1"], ["-1", "0"]]}]}"#,
    )
    .unwrap();
    let out = run(&[
        "signature",
        "--pairing",
        bad_pairing.to_str().unwrap(),
        "--max-n",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_suite_is_exit_2() {
    let out = run(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_signs_suite_passes() {
    let out = run(&["verify", "--suite", "signs", "--max-n", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    for name in [
        "cocycle",
        "interchange",
        "action_composition",
        "projectors",
        "chain_map",
    ] {
        assert!(
            text.lines().any(|l| l.starts_with(name) && l.ends_with("result=pass")),
            "missing pass line for {name} in: {text}"
        );
    }
}

#[test]
fn verify_accepts_legacy_suite_aliases() {
    let out = run(&["verify", "--suite", "prop22", "--max-n", "2"]);
    assert!(out.status.success());
    let out = run(&["verify", "--suite", "theorem2", "--max-n", "2"]);
    assert!(out.status.success());
}

#[test]
fn json_output_mirrors_input_with_series() {
    let out = run(&[
        "signature",
        "--pairing",
        data("odd_pair.json").to_str().unwrap(),
        "--max-n",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid JSON");
    assert_eq!(doc["dims"]["1"], 1);
    assert_eq!(doc["dims"]["-1"], 1);
    assert_eq!(doc["series"], serde_json::json!(["1", "0", "-1"]));
    // Round trip: the mirrored part parses back as a pairing document.
    let blocks = doc["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 1);
    assert_eq!(blocks[0]["matrix"], serde_json::json!([["1"]]));
}

#[test]
fn output_is_deterministic() {
    let input = data("projective_line.json");
    let args = [
        "sym-series",
        "--input",
        input.to_str().unwrap(),
        "--max-n",
        "6",
        "--format",
        "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let verify_args = ["verify", "--suite", "kunneth", "--seed", "7"];
    let first = run(&verify_args);
    let second = run(&verify_args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}
