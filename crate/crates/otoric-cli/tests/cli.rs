//! End-to-end tests of the `otoric` binary: output shapes, exit codes,
//! and determinism.

use std::io::Write;
use std::process::{Command, Output};

fn otoric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_otoric"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn circuits_on_the_worked_example_fixtures() {
    let out = otoric(&["circuits", "--fixtures", "c8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "e1^6*e3*e5^36*e7^6 - e2^2*e4*e6^36*e8^6\n");

    let out = otoric(&["circuits", "--fixtures", "theta"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "e1*e3^12*e6^2 - e2^2*e4^3*e5^10\n");
}

#[test]
fn circuits_of_an_unbalanced_triangle_are_empty() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"vertices":[{{"id":"v1","weight":1}},{{"id":"v2","weight":1}},{{"id":"v3","weight":1}}],
            "edges":[{{"id":"e1","tail":"v1","head":"v2"}},
                     {{"id":"e2","tail":"v2","head":"v3"}},
                     {{"id":"e3","tail":"v3","head":"v1"}}]}}"#
    )
    .unwrap();
    let out = otoric(&["circuits", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "");
}

#[test]
fn analyze_reports_cycles_and_balance() {
    let out = otoric(&["analyze", "--fixtures", "theta"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("cycles: 3"));
    assert!(text.contains("det 6"));
    assert!(text.contains("det 9"));
    assert!(text.contains("det 3"));
    assert!(text.contains("sinks: v3"));

    let out = otoric(&["analyze", "--fixtures", "c8"]);
    let text = stdout(&out);
    assert!(text.contains("cycles: 1"));
    assert!(text.contains("balanced (det 0)"));
    assert!(text.contains("sinks: v1 v6"));
}

#[test]
fn invalid_documents_exit_2() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"vertices":[{{"id":"v1","weight":0}},{{"id":"v2","weight":1}}],
            "edges":[{{"id":"e1","tail":"v1","head":"v2"}}]}}"#
    )
    .unwrap();
    let out = otoric(&["analyze", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("validation error"));

    let out = otoric(&["analyze", "/nonexistent/graph.json"]);
    assert_eq!(out.status.code(), Some(2));

    let out = otoric(&["analyze"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn betti_reports_and_out_of_class_exit() {
    let out = otoric(&["betti", "--fixtures", "bowtie"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("mu: 1"));
    assert!(text.contains("betti: 1 1"));

    let out = otoric(&["betti", "--fixtures", "theta"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("more than two unbalanced cycles"));
}

#[test]
fn verify_passes_and_respects_budgets() {
    let out = otoric(&["verify", "--fixtures", "theta"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verify: 7 of 7 checks passed"));

    let out = otoric(&["verify", "--fixtures", "theta", "--max-states", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("budget exceeded"));
}

#[test]
fn oracle_compare_agrees_on_fixtures() {
    let out = otoric(&["oracle-compare", "--fixtures", "theta", "--bound", "15"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("result: all three sets equal"));

    let out = otoric(&["oracle-compare", "--fixtures", "bowtie"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn jobs_flag_does_not_change_output() {
    let sequential = otoric(&["circuits", "--fixtures", "theta"]);
    let parallel = otoric(&["circuits", "--fixtures", "theta", "--jobs", "4"]);
    assert_eq!(stdout(&sequential), stdout(&parallel));
    assert_eq!(parallel.status.code(), Some(0));
}

#[test]
fn json_reports_are_stable_and_carry_the_digest() {
    let a = otoric(&["circuits", "--fixtures", "c8", "--format", "json"]);
    let b = otoric(&["circuits", "--fixtures", "c8", "--format", "json"]);
    let va: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let vb: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    assert_eq!(va["command"], "circuits");
    assert!(va["input_digest"].as_str().unwrap().starts_with("sha256:"));
    assert_eq!(va["input_digest"], vb["input_digest"]);
    assert_eq!(va["results"], vb["results"], "results are deterministic");
    assert_eq!(va["results"]["count"], 1);
    assert_eq!(
        va["results"]["circuits"][0]["vector"],
        serde_json::json!(["6", "-2", "1", "-1", "36", "-36", "6", "-6"])
    );

    let betti = otoric(&["betti", "--fixtures", "bowtie", "--format", "json"]);
    let vb: serde_json::Value = serde_json::from_str(&stdout(&betti)).unwrap();
    assert_eq!(vb["results"]["mu"], 1);
    assert_eq!(vb["results"]["betti"], serde_json::json!(["1", "1"]));

    let verify = otoric(&["verify", "--fixtures", "c8", "--format", "json"]);
    let vv: serde_json::Value = serde_json::from_str(&stdout(&verify)).unwrap();
    assert_eq!(vv["results"]["all_passed"], true);
}

#[test]
fn text_output_is_byte_identical_across_runs() {
    for args in [
        vec!["analyze", "--fixtures", "theta"],
        vec!["circuits", "--fixtures", "shared-edge-weighted"],
        vec!["betti", "--fixtures", "dumbbell"],
        vec!["oracle-compare", "--fixtures", "shared-vertex-weighted"],
    ] {
        let a = otoric(&args);
        let b = otoric(&args);
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
    }
}
