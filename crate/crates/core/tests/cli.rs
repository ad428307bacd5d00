//! End-to-end checks of the `smcop` binary: documented invocations,
//! deterministic output, and the exit-code contract (0 success, 1 law
//! failure, 2 usage or ceiling errors).

use std::process::{Command, Output};

fn smcop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smcop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 output")
}

#[test]
fn enumerate_v_degree_4_prints_the_five_parenthesizations() {
    let out = smcop(&["enumerate", "--operad", "V", "--degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "(1,(1,(1,1)))\n(1,((1,1),1))\n((1,1),(1,1))\n((1,(1,1)),1)\n(((1,1),1),1)\n"
    );
}

#[test]
fn compose_slotted_closes_a_slot() {
    let out = smcop(&[
        "compose",
        "--operad",
        "Z",
        "--outer",
        "[(1,1);{1,2}]",
        "--args",
        "[1;{1}],[1;{}]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[(1,1);{1}]\n");
}

#[test]
fn compose_in_the_symmetric_operad() {
    let out = smcop(&[
        "compose",
        "--operad",
        "LV",
        "--outer",
        "((1,1) | [2,1])",
        "--args",
        "((1,1) | [1,2]),(1 | [1])",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    // The transposed outer sends its first input block after the second.
    assert_eq!(stdout(&out), "((1,(1,1)) | [2,3,1])\n");
}

#[test]
fn coherence_emits_a_single_rotation() {
    let out = smcop(&[
        "coherence",
        "--source",
        "((x1*x2)*x3)",
        "--target",
        "(x1*(x2*x3))",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("moves: 1"), "{text}");
    assert!(text.lines().any(|l| l.trim() == "alpha"), "{text}");
    assert!(text.contains("bijection: [1,2,3]"), "{text}");
}

#[test]
fn coherence_json_document_is_self_describing() {
    let out = smcop(&[
        "coherence",
        "--source",
        "(x2*x1)",
        "--target",
        "(x1*x2)",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["format_version"], 1);
    assert_eq!(doc["command"], "coherence");
    assert_eq!(doc["bijection"], serde_json::json!([2, 1]));
    assert_eq!(doc["moves"][0]["kind"], "tau");
}

#[test]
fn check_passes_on_the_slotted_operad() {
    let out = smcop(&["check", "--suite", "nonsym", "--operad", "Z", "--bound", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    for law in ["left-unit", "right-unit", "associativity"] {
        assert!(text.contains(law), "missing {law}: {text}");
    }
}

#[test]
fn mutated_view_fails_with_exit_1() {
    let out = smcop(&[
        "check",
        "--suite",
        "sym",
        "--operad",
        "LV",
        "--bound",
        "3",
        "--mutate",
        "wrong-block-order",
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(stdout(&out).contains("failing instances"), "{}", stdout(&out));
}

#[test]
fn ceiling_refusal_exits_2() {
    let out = smcop(&[
        "check",
        "--suite",
        "coherence-corpus",
        "--max-vars",
        "4",
        "--max-instances",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(2), "{}", stdout(&out));
    assert!(stdout(&out).contains("--max-instances"), "{}", stdout(&out));
}

#[test]
fn malformed_element_text_exits_2() {
    let out = smcop(&["compose", "--operad", "V", "--outer", "(1,", "--args", ""]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).starts_with("error:"), "{}", stdout(&out));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "check",
        "--suite",
        "algebra",
        "--model",
        "word",
        "--format",
        "json",
    ];
    let a = smcop(&args);
    let b = smcop(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_check_reports_match_tallies() {
    let out = smcop(&[
        "check",
        "--suite",
        "map",
        "--map",
        "z-to-v0",
        "--bound",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report = &doc["report"];
    let stats = report["stats"].as_array().unwrap();
    let total: u64 = stats.iter().map(|s| s["total"].as_u64().unwrap()).sum();
    let rows = report["instances"].as_array().unwrap().len() as u64;
    assert!(total > 0);
    // Detail rows are complete at this size, so tallies equal row counts.
    assert_eq!(report["detail_complete"], true);
    assert_eq!(total, rows);
}
