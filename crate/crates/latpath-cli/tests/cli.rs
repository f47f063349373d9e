//! Golden tests for the binary: exact stdout, stderr routing, and the
//! 0/1/2 exit-code contract.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latpath"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_latpath"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary exits")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn expect_stdout(args: &[&str], want: &str) {
    let output = run(args);
    assert_eq!(code(&output), 0, "{args:?}: {}", stderr(&output));
    assert_eq!(stdout(&output), want, "{args:?}");
}

#[test]
fn count_prints_exact_integers() {
    expect_stdout(&["count", "two-step", "--i", "2", "--j", "2"], "6");
    expect_stdout(&["count", "two-step", "--i", "0", "--j", "0"], "1");
    expect_stdout(&["count", "two-step", "--i", "-1", "--j", "5"], "0");
    expect_stdout(
        &["count", "two-step", "--i", "30", "--j", "30"],
        "118264581564861424",
    );
    expect_stdout(
        &["count", "four-step", "--i", "0", "--j", "0", "--n", "4"],
        "36",
    );
    expect_stdout(
        &[
            "count",
            "four-step",
            "--i",
            "0",
            "--j",
            "0",
            "--n",
            "4",
            "--upper",
        ],
        "20",
    );
    expect_stdout(
        &["count", "four-step", "--i", "-1", "--j", "2", "--n", "5"],
        "50",
    );
    expect_stdout(
        &["count", "four-step", "--i", "0", "--j", "0", "--n", "3"],
        "0",
    );
    expect_stdout(
        &[
            "count",
            "constrained",
            "--i",
            "3",
            "--j",
            "3",
            "--lambda",
            "3,2,1",
        ],
        "5",
    );
    expect_stdout(
        &[
            "count",
            "constrained",
            "--i",
            "3",
            "--j",
            "3",
            "--lambda",
            "",
        ],
        "20",
    );
}

#[test]
fn poly_diag_prints_terms_or_evaluates_exactly() {
    expect_stdout(
        &["poly", "diag", "--i", "2", "--j", "4"],
        "15 + 20*q + 6*q^2",
    );
    expect_stdout(&["poly", "diag", "--i", "1", "--j", "1"], "2 + q");
    expect_stdout(&["poly", "diag", "--i", "0", "--j", "0"], "1");
    expect_stdout(&["poly", "diag", "--i", "2", "--j", "4", "--at", "1"], "41");
    expect_stdout(
        &["poly", "diag", "--i", "2", "--j", "4", "--at", "-2"],
        "-1",
    );
    expect_stdout(
        &["poly", "diag", "--i", "2", "--j", "4", "--at", "1/2"],
        "53/2",
    );
}

#[test]
fn seq_prints_comma_separated_terms() {
    expect_stdout(&["seq", "binomial-row", "--n", "4"], "1,4,6,4,1");
    expect_stdout(&["seq", "binomial-row", "--n", "0"], "1");
    expect_stdout(&["seq", "product", "--n", "5", "--l", "3"], "10,50,50,10");
    expect_stdout(
        &["seq", "product", "--n", "2", "--l", "2", "--upper"],
        "1,3,1",
    );
    expect_stdout(
        &["seq", "product", "--n", "2", "--l", "4", "--upper"],
        "0,0,0,0,0",
    );
    expect_stdout(&["seq", "simion", "--lambda", "1", "--n", "2"], "0,1,0");
    expect_stdout(&["seq", "sagan", "--lambda", "1", "--n", "2"], "0,2,1");
    expect_stdout(&["seq", "diag", "--n", "2"], "1\n2 + q\n1");
}

#[test]
fn check_reads_stdin_and_exits_by_verdict() {
    let cases: &[(&str, &str, &str, i32)] = &[
        ("unimodal", "1, 3, 3, 2", "true", 0),
        ("unimodal", "2,1,2", "false", 1),
        ("unimodal", "", "true", 0),
        ("log-concave", "1,2,2,1", "true", 0),
        ("log-concave", "1,1,2,1", "false", 1),
        ("q-unimodal", "1\n1 + q\n1\n", "true", 0),
        ("q-unimodal", "2\n1 + q\n", "false", 1),
    ];
    for (kind, input, want, want_code) in cases {
        let output = run_with_stdin(&["check", kind], input);
        assert_eq!(stdout(&output), *want, "check {kind} on {input:?}");
        assert_eq!(code(&output), *want_code, "check {kind} on {input:?}");
    }
}

#[test]
fn seq_diag_feeds_check_q_unimodal() {
    let polys = run(&["seq", "diag", "--n", "6"]);
    assert_eq!(code(&polys), 0);
    let verdict = run_with_stdin(
        &["check", "q-unimodal"],
        &String::from_utf8(polys.stdout).unwrap(),
    );
    assert_eq!(stdout(&verdict), "true");
    assert_eq!(code(&verdict), 0);
}

#[test]
fn reflect_prints_image_or_reports_why_not() {
    expect_stdout(
        &[
            "reflect",
            "--path",
            "NEEEN",
            "--line",
            r#"{"orientation":"diagonal","c":0}"#,
        ],
        "NENNE",
    );
    expect_stdout(
        &[
            "reflect",
            "--path",
            "DD",
            "--line",
            r#"{"orientation":"diagonal","c":0}"#,
        ],
        "DD",
    );
    expect_stdout(
        &[
            "reflect",
            "--path",
            "NNE",
            "--line",
            r#"{"orientation":"vertical","two_c":0}"#,
        ],
        "NNW",
    );

    let miss = run(&[
        "reflect",
        "--path",
        "NEEEN",
        "--line",
        r#"{"orientation":"vertical","two_c":100}"#,
    ]);
    assert_eq!(code(&miss), 1);
    assert!(
        stderr(&miss).contains("no vertex on the reflection line"),
        "{}",
        stderr(&miss)
    );

    let off_alphabet = run(&[
        "reflect",
        "--path",
        "ND",
        "--line",
        r#"{"orientation":"vertical","two_c":0}"#,
    ]);
    assert_eq!(code(&off_alphabet), 1);
    assert!(
        stderr(&off_alphabet).contains("not a representable step"),
        "{}",
        stderr(&off_alphabet)
    );
}

#[test]
fn verify_reports_and_exits_clean_on_success() {
    let json = run(&["verify", "--scope", "qpoly", "--n-max", "2", "--json"]);
    assert_eq!(code(&json), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(report["suite_name"], "qpoly");
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    assert!(report["cases_run"].as_u64().unwrap() > 0);
    assert_eq!(report["cases_run"], report["cases_passed"]);

    let human = run(&["verify", "--scope", "binomial", "--n-max", "3"]);
    assert_eq!(code(&human), 0);
    assert!(
        stdout(&human).starts_with("suite binomial:"),
        "{}",
        stdout(&human)
    );
}

#[test]
fn scan_simion_reports_checked_counts() {
    let json = run(&[
        "scan",
        "simion",
        "--max-part",
        "1",
        "--max-rows",
        "1",
        "--n-max",
        "4",
        "--json",
    ]);
    assert_eq!(code(&json), 0);
    assert_eq!(stdout(&json), r#"{"checked":10,"failures":[]}"#);

    let human = run(&[
        "scan",
        "simion",
        "--max-part",
        "2",
        "--max-rows",
        "2",
        "--n-max",
        "3",
    ]);
    assert_eq!(code(&human), 0);
    assert_eq!(stdout(&human), "checked 24 sequences, 0 failed");
}

#[test]
fn usage_errors_exit_two() {
    let missing_flag = run(&["count", "two-step", "--i", "2"]);
    assert_eq!(code(&missing_flag), 2);

    let unknown_subcommand = run(&["frobnicate"]);
    assert_eq!(code(&unknown_subcommand), 2);

    let bad_scope = run(&["verify", "--scope", "bogus"]);
    assert_eq!(code(&bad_scope), 2);
    assert!(
        stderr(&bad_scope).contains("unknown scope"),
        "{}",
        stderr(&bad_scope)
    );

    let rising_parts = run(&[
        "count",
        "constrained",
        "--i",
        "1",
        "--j",
        "1",
        "--lambda",
        "2,3",
    ]);
    assert_eq!(code(&rising_parts), 2);
    assert!(
        stderr(&rising_parts).contains("invalid partition"),
        "{}",
        stderr(&rising_parts)
    );

    let bad_step_letter = run(&[
        "reflect",
        "--path",
        "NEX",
        "--line",
        r#"{"orientation":"diagonal","c":0}"#,
    ]);
    assert_eq!(code(&bad_step_letter), 2);

    let bad_line_json = run(&[
        "reflect",
        "--path",
        "NE",
        "--line",
        "{\"orientation\":\"slanted\"}",
    ]);
    assert_eq!(code(&bad_line_json), 2);
    assert!(
        stderr(&bad_line_json).contains("orientation JSON"),
        "{}",
        stderr(&bad_line_json)
    );

    let too_few_terms = run(&["oeis", "--terms", "1,2,3"]);
    assert_eq!(code(&too_few_terms), 2);
    assert!(
        stderr(&too_few_terms).contains("at least 4"),
        "{}",
        stderr(&too_few_terms)
    );

    let unparsable_terms = run(&["oeis", "--terms", "1,2,3,x"]);
    assert_eq!(code(&unparsable_terms), 2);
}

#[test]
fn malformed_stdin_terms_are_an_operational_error() {
    let output = run_with_stdin(&["check", "unimodal"], "1,foo");
    assert_eq!(code(&output), 1);
    assert!(stderr(&output).starts_with("error:"), "{}", stderr(&output));
    assert_eq!(stdout(&output), "");

    let bad_poly = run_with_stdin(&["check", "q-unimodal"], "3**q\n");
    assert_eq!(code(&bad_poly), 1);
    assert!(
        stderr(&bad_poly).starts_with("error:"),
        "{}",
        stderr(&bad_poly)
    );
}
