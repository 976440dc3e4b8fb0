use std::io::Write as _;
use std::process::Command;

use cfhankel_cli::{run, EXIT_COMPUTE, EXIT_DISAGREE, EXIT_OK, EXIT_USAGE};
use serde_json::{json, Value};
use tempfile::NamedTempFile;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Output {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn cli(args: &[&str], stdin: &str) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cfhankel").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn temp_json(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn catalan_catalog_evaluates_to_catalan_numbers() {
    let cat = cli(&["catalog", "catalan", "--terms", "8"], "");
    assert_eq!(cat.code, EXIT_OK, "{}", cat.stderr);
    let file = temp_json(&cat.stdout);
    let series = cli(&["eval", "--cfraction", path(&file), "--order", "5"], "");
    assert_eq!(series.code, EXIT_OK);
    assert_eq!(
        series.json(),
        json!({"coeffs": ["1", "1", "2", "5", "14", "42"], "order": 5})
    );
}

#[test]
fn fibonacci_compare_agrees() {
    let fib = cli(&["catalog", "fibonacci-cf"], "");
    let file = temp_json(&fib.stdout);
    let out = cli(
        &["compare", "--cfraction", path(&file), "--max-n", "12"],
        "",
    );
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let v = out.json();
    assert_eq!(v["agree"], json!(true));
    assert_eq!(v["oracle"][12], json!("1547934105600000000"));
    assert_eq!(v["closed"]["dense"], v["oracle"]);
}

#[test]
fn compare_reports_the_other_convention_as_disagreeing() {
    let fib = cli(&["catalog", "fibonacci-cf"], "");
    let file = temp_json(&fib.stdout);
    let out = cli(
        &[
            "compare",
            "--cfraction",
            path(&file),
            "--max-n",
            "12",
            "--convention",
            "as-printed",
        ],
        "",
    );
    assert_eq!(out.code, EXIT_DISAGREE);
    assert_eq!(out.json()["agree"], json!(false));
}

#[test]
fn compare_needs_enough_terms() {
    let out = cli(
        &["compare", "--cfraction", "-", "--max-n", "4"],
        r#"{"a": ["-1", "-1"], "q": [1, 1], "status": {"truncated": 2}}"#,
    );
    assert_eq!(out.code, EXIT_COMPUTE);
    assert!(out.stderr.contains("InsufficientTerms"), "{}", out.stderr);
}

#[test]
fn expand_constant_series_terminates_immediately() {
    let out = cli(
        &["expand", "--series", "-", "--exact"],
        r#"{"coeffs": ["1", "0", "0", "0", "0"]}"#,
    );
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        out.json(),
        json!({"a": [], "q": [], "status": "terminated"})
    );

    let flagged = cli(
        &["expand", "--series", "-"],
        r#"{"coeffs": ["1", "0", "0"], "exact": true}"#,
    );
    assert_eq!(flagged.json()["status"], json!("terminated"));
    let truncated = cli(
        &["expand", "--series", "-"],
        r#"{"coeffs": ["1", "0", "0"]}"#,
    );
    assert_eq!(truncated.json()["status"], json!({"truncated": 2}));
}

#[test]
fn expand_then_eval_round_trips() {
    let input = r#"{"coeffs": ["1", "1", "2", "5", "14", "42", "132"]}"#;
    let cf = cli(&["expand", "--series", "-"], input);
    let file = temp_json(&cf.stdout);
    let back = cli(&["eval", "--cfraction", path(&file), "--order", "6"], "");
    assert_eq!(
        back.json()["coeffs"],
        serde_json::from_str::<Value>(input).unwrap()["coeffs"]
    );
}

#[test]
fn hankel_and_closed_forms() {
    let out = cli(
        &["hankel", "--series", "-", "--max-n", "2"],
        r#"{"coeffs": [1, 1, 2, 5, 14]}"#,
    );
    assert_eq!(out.json(), json!({"hankel": ["1", "1", "1"]}));

    let short = cli(
        &["hankel", "--series", "-", "--max-n", "3"],
        r#"{"coeffs": [1, 1, 2, 5, 14]}"#,
    );
    assert_eq!(short.code, EXIT_COMPUTE);
    assert!(short.stderr.contains("InsufficientTerms"));

    let closed = cli(
        &["closed", "--cfraction", "-", "--max-n", "2"],
        r#"{"a": ["-1", "-1", "-1", "-1", "-1"], "q": [1, 1, 1, 1, 1], "status": "terminated"}"#,
    );
    let v = closed.json();
    assert_eq!(v["convention"], json!("sign-corrected"));
    assert_eq!(v["dense"], json!(["1", "1", "1"]));
    assert_eq!(
        v["profile"][0],
        json!({"n": 0, "value": "1", "multiplicity": 2})
    );
}

#[test]
fn negative_p_exponent_is_a_computation_error() {
    let out = cli(
        &["closed", "--cfraction", "-", "--max-n", "3"],
        r#"{"a": ["1", "1"], "q": [3, 1], "status": "terminated"}"#,
    );
    assert_eq!(out.code, EXIT_COMPUTE);
    assert!(out.stderr.contains("NegativePExponent"), "{}", out.stderr);
}

#[test]
fn symbolic_rogers_ramanujan() {
    let rr = cli(&["catalog", "rogers-ramanujan", "--terms", "3"], "");
    assert_eq!(rr.json()["a"][0], json!({"coeffs": ["0", "1"]}));
    let file = temp_json(&rr.stdout);
    let closed = cli(&["closed", "--cfraction", path(&file), "--max-n", "2"], "");
    assert_eq!(
        closed.json()["dense"][2],
        json!({"coeffs": ["0", "0", "0", "0", "-1"]})
    );

    let numeric = cli(
        &[
            "catalog",
            "rogers-ramanujan",
            "--gamma",
            "2/3",
            "--terms",
            "2",
        ],
        "",
    );
    assert_eq!(numeric.json()["a"], json!(["2/3", "2/3"]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["catalog", "pell"][..],
        &["catalog", "catalan", "--gamma", "2"],
        &["catalog", "rogers-ramanujan", "--gamma", "0"],
        &["catalog", "rogers-ramanujan", "--gamma", "x/y"],
        &["eval", "--order", "3"],
        &["frobnicate"],
        &["verify", "--unknown-flag"],
        &["expand", "--series", "/nonexistent/series.json"],
    ] {
        let out = cli(args, "");
        assert_eq!(out.code, EXIT_USAGE, "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    let bad_json = cli(&["expand", "--series", "-"], "{\"coeffs\": [0.5]}");
    assert_eq!(bad_json.code, EXIT_USAGE);
    assert!(bad_json.stderr.contains("InvalidField"));
    let unknown = cli(&["catalog", "pell"], "");
    assert!(unknown.stderr.contains("UnknownName"));
}

#[test]
fn verify_report() {
    let out = cli(&["verify"], "");
    assert_eq!(out.code, EXIT_OK);
    let v = out.json();
    assert_eq!(v["convention"], json!("sign-corrected"));
    let claims = v["claims"].as_array().unwrap();
    let find = |id: &str| claims.iter().find(|c| c["id"] == id).unwrap();
    assert_eq!(find("ex1.dense")["verdict"], json!("confirmed"));
    let h2 = find("ex4.value.02");
    assert_eq!(h2["verdict"], json!("refuted"));
    assert_eq!(h2["location"], json!("Example 4"));
    assert_eq!(
        h2["computed"],
        json!([{"coeffs": ["0", "0", "0", "0", "-1"]}])
    );
    assert_eq!(h2["spot_checks"][1]["expected"], json!(["-64"]));
    assert_eq!(h2["spot_checks"][1]["computed"], json!(["-16"]));
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["verify", "--max-n", "6"][..],
        &["catalog", "fibonacci-cf", "--terms", "9"],
    ] {
        let first = cli(args, "");
        let second = cli(args, "");
        assert_eq!(first.stdout, second.stdout);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cfhankel");
    let ok = Command::new(bin)
        .args(["catalog", "catalan", "--terms", "2"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let bad = Command::new(bin)
        .args(["catalog", "nope"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&help.stdout).contains("compare"));
}
