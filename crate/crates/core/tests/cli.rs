use std::process::Command;

use hwlie::freealg::{free_from_json, parse_free, WordTermJson};
use hwlie::lyndon::{bracketing, LyndonCombination, LyndonTermJson};
use hwlie::theorems::VerificationReport;
use hwlie::weyl::{parse_weyl, weyl_from_json, WeylTermJson};
use hwlie::words::Word;
use serde_json::Value;

struct Run {
    status: i32,
    stdout: String,
    stderr: String,
}

fn hwlie(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_hwlie"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        status: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--output", "json"];
    full.extend_from_slice(args);
    let r = hwlie(&full);
    assert_eq!(r.status, 0, "{args:?}: {}", r.stderr);
    serde_json::from_str(&r.stdout)
        .unwrap_or_else(|e| panic!("{args:?} printed non-JSON ({e}): {}", r.stdout))
}

#[test]
fn text_examples() {
    assert_eq!(hwlie(&["word", "check", "abb"]).stdout, "regular: true\n");
    assert_eq!(hwlie(&["word", "check", "ba"]).stdout, "regular: false\n");
    assert_eq!(
        hwlie(&["word", "factor", "aabab"]).stdout,
        "left: aab\nright: ab\n"
    );
    assert_eq!(
        hwlie(&["word", "decompose", "baab"]).stdout,
        "factors: b aab\n"
    );
    assert_eq!(
        hwlie(&["weyl", "normal-form", "A*B"]).stdout,
        "B^1A^1 + 1\n"
    );
    assert_eq!(
        hwlie(&["weyl", "normal-form", "--brute", "AB"]).stdout,
        "B^1A^1 + 1\n"
    );
    assert_eq!(hwlie(&["weyl", "mul", "A", "B"]).stdout, "B^1A^1 + 1\n");
    assert_eq!(hwlie(&["phi", "A"]).stdout, "B^1\n");
    assert_eq!(hwlie(&["phi", "A", "--power", "2"]).stdout, "-A^1\n");
    assert_eq!(
        hwlie(&["phi", "B*A^2", "--power", "-1"]).stdout,
        "B^2A^1 + 2*B^1\n"
    );
    let bracket = hwlie(&["bracket", "abb"]).stdout;
    assert!(bracket.starts_with("nested: [[a,b],b]\n"), "{bracket}");
    let incl = hwlie(&["incl-comp", "aaab", "aab"]);
    assert_eq!(incl.status, 0);
    assert!(incl.stdout.contains("trivial: true"), "{}", incl.stdout);
}

#[test]
fn exit_statuses() {
    assert_eq!(hwlie(&["word", "check", "abx"]).status, 2);
    assert_eq!(hwlie(&["bogus"]).status, 2);
    assert_eq!(hwlie(&["expand", "a +* b"]).status, 2);
    assert_eq!(hwlie(&["bracket", "ba"]).status, 3);
    assert_eq!(hwlie(&["to-basis", "ab"]).status, 3);
    assert_eq!(hwlie(&["incl-comp", "aab", "abb"]).status, 3);
    assert_eq!(
        hwlie(&["verify", "core-lie", "--bound", "5", "--cap", "6"]).status,
        3
    );
    assert_eq!(hwlie(&["verify", "all", "--bound", "3"]).status, 2);
    assert_eq!(hwlie(&["--help"]).status, 0);
    let bad = hwlie(&["word", "check", "abx"]);
    assert!(bad.stdout.is_empty());
    assert!(!bad.stderr.is_empty());
}

#[test]
fn verify_inclusion_compositions_succeeds() {
    let r = hwlie(&["verify", "inclusion-compositions", "--bound", "3"]);
    assert_eq!(r.status, 0, "{}", r.stdout);
    assert!(
        r.stdout.starts_with("inclusion-compositions: PASS"),
        "{}",
        r.stdout
    );
}

#[test]
fn verify_json_round_trips() {
    let v = json(&["verify", "core-lie", "--bound", "3", "--cap", "8"]);
    let report: VerificationReport = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(report.name, "core-lie");
    assert!(report.failures.is_empty());
    assert_eq!(serde_json::to_value(&report).unwrap(), v);
}

#[test]
fn polynomial_json_round_trips() {
    for expr in ["3/2*aab - ba + 1", "0", "-7/3*abab"] {
        let terms: Vec<WordTermJson> = serde_json::from_value(json(&["expand", expr])).unwrap();
        assert_eq!(
            free_from_json(&terms).unwrap(),
            parse_free(expr).unwrap(),
            "{expr}"
        );
    }
    for expr in ["A*B", "3*B^2*A - 1/2*A^3 + 2", "A^3*B^3"] {
        let terms: Vec<WeylTermJson> =
            serde_json::from_value(json(&["weyl", "normal-form", expr])).unwrap();
        assert_eq!(
            weyl_from_json(&terms).unwrap(),
            parse_weyl(expr).unwrap(),
            "{expr}"
        );
    }
    let terms: Vec<WeylTermJson> = serde_json::from_value(json(&["phi", "B*A^2"])).unwrap();
    assert_eq!(
        weyl_from_json(&terms).unwrap(),
        parse_weyl("-B^2*A - 2*B").unwrap()
    );
}

#[test]
fn word_and_basis_json_round_trips() {
    let v = json(&["bracket", "aabab"]);
    let terms: Vec<WordTermJson> = serde_json::from_value(v["expanded"].clone()).unwrap();
    let w: Word = "aabab".parse().unwrap();
    assert_eq!(free_from_json(&terms).unwrap(), bracketing(&w).unwrap());

    let expr = "2*ab - 2*ba + aab - 2*aba + baa";
    let terms: Vec<LyndonTermJson> = serde_json::from_value(json(&["to-basis", expr])).unwrap();
    let comb = LyndonCombination::from_json(&terms).unwrap();
    assert_eq!(comb.expand(), parse_free(expr).unwrap());

    let v = json(&["word", "factor", "aabab"]);
    assert_eq!(v["left"], "aab");
    assert_eq!(v["right"], "ab");
    let v = json(&["word", "decompose", "baab"]);
    assert_eq!(v["factors"], serde_json::json!(["b", "aab"]));
}

#[test]
fn json_mode_keeps_text_off_stdout() {
    let cases: &[&[&str]] = &[
        &["word", "check", "abb"],
        &["word", "exp-form", "aabaabbb"],
        &["incl-comp", "aabbb", "aabb"],
        &["verify", "decomposition", "--bound", "4", "--cap", "6"],
    ];
    for args in cases {
        json(args);
    }
    let bad = hwlie(&["--output", "json", "word", "factor", "ba"]);
    assert_eq!(bad.status, 3);
    assert!(
        bad.stdout.is_empty() || serde_json::from_str::<Value>(&bad.stdout).is_ok(),
        "{}",
        bad.stdout
    );
}

#[test]
fn inclusion_composition_json() {
    let v = json(&["incl-comp", "aabbb", "aabb"]);
    assert_eq!(v["trivial"], false);
    assert_eq!(v["leading_word"], "ababb");
    assert_eq!(v["leading_coefficient"], "-1");
    let normalized: Vec<WordTermJson> = serde_json::from_value(v["normalized"].clone()).unwrap();
    let expected = bracketing(&"ababb".parse().unwrap()).unwrap();
    assert_eq!(free_from_json(&normalized).unwrap(), expected);
}
