use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn semunit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semunit"))
        .args(args)
        .env_remove("SEMUNIT_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn error_json(o: &Output) -> serde_json::Value {
    let text = String::from_utf8(o.stderr.clone()).unwrap();
    serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("stderr is not JSON ({e}): {text}"))
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_valid_fixture() {
    let o = semunit(&["validate", arg(&fixture("apple.trig"))]);
    assert!(o.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["findings"].as_array().unwrap().len(), 0);
}

#[test]
fn validate_reports_partition_violations() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("apple.trig")).unwrap();
    let anchor = "rdfs:label \"apple X\" .";
    assert!(text.contains(anchor));
    // the same label triple placed in a second graph
    let broken = text.replacen(
        "<https://kg.example/su/part-of-0001> {",
        "<https://kg.example/su/part-of-0001> {\n    <https://kg.example/res/apple-x> rdfs:label \"apple X\" .",
        1,
    );
    let path = dir.path().join("broken.trig");
    std::fs::write(&path, broken).unwrap();
    let o = semunit(&["validate", arg(&path)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(error_json(&o)["error"], "PartitionViolation");
}

#[test]
fn ingest_writes_trig_that_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("apple.trig");
    let o = semunit(&["ingest", arg(&fixture("apple.json")), "-o", arg(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).is_empty());
    let names: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    assert_eq!(names.len(), 1, "temporary files left behind: {names:?}");
    let o = semunit(&[
        "render",
        arg(&out),
        "https://kg.example/su/weight-0001",
        "--label",
    ]);
    assert_eq!(stdout(&o), "apple X has a weight of 204.56 grams\n");
}

#[test]
fn render_label_and_dot() {
    let store = fixture("apple.trig");
    let o = semunit(&[
        "render",
        arg(&store),
        "https://kg.example/su/weight-0001",
        "--label",
    ]);
    assert_eq!(stdout(&o), "apple X has a weight of 204.56 grams\n");
    let o = semunit(&[
        "render",
        arg(&store),
        "https://kg.example/su/weight-0001",
        "--dot",
    ]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph \"https://kg.example/su/weight-0001\" {"));
    assert!(dot.contains("n0 -> n1 [label=\"has weight\"];"));
}

#[test]
fn query_answers_both_modes() {
    let store = fixture("three-apples.trig");
    let o = semunit(&["query", arg(&store), arg(&fixture("apple-weight.json"))]);
    assert!(stdout(&o).starts_with("true\n"));
    let o = semunit(&["query", arg(&store), arg(&fixture("which-apple.json"))]);
    assert_eq!(stdout(&o), "subject\tvalue\napple X\t204.56\n");
    let o = semunit(&[
        "query",
        arg(&store),
        arg(&fixture("which-apple.json")),
        "--json",
    ]);
    let answer: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(answer["rows"].as_array().unwrap().len(), 1);
}

#[test]
fn translate_with_framework_filter() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("skips.json");
    let o = semunit(&[
        "translate",
        arg(&fixture("mixed-frameworks.trig")),
        "--framework",
        "OWL-DL",
        "--report",
        arg(&report),
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.matches("SubClassOf(").count(), 1, "{text}");
    let r: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    let skipped = r["skipped"].as_array().unwrap();
    assert_eq!(skipped.len(), 1);
    assert_eq!(skipped[0]["unit"], "https://kg.example/su/subclass-of-0002");
    assert_eq!(skipped[0]["reason"], "logic framework LogicProgram");
}

#[test]
fn translate_output_is_stable() {
    let a = stdout(&semunit(&["translate", arg(&fixture("apple.trig"))]));
    let b = stdout(&semunit(&["translate", arg(&fixture("apple.trig"))]));
    assert_eq!(a, b);
    assert!(a.contains("DataPropertyAssertion("));
}

#[test]
fn reason_lists_defaults_and_arguments() {
    let o = semunit(&[
        "reason",
        arg(&fixture("swan-defaults-blocked.trig")),
        "--defaults",
    ]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1, "{text}");
    assert!(text.starts_with("default\tSwan Anton has quality white\tprobable"));
    let o = semunit(&[
        "reason",
        arg(&fixture("deduction.trig")),
        "--argue",
        "--json",
    ]);
    let layer: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(layer["arguments"][0]["status"], "concluded");
    assert_eq!(layer["arguments"][0]["inferred"]["modality"], "Necessary");
    assert!(layer["defaults"].as_array().unwrap().is_empty());
}

#[test]
fn stats_counts_units() {
    let o = semunit(&["stats", arg(&fixture("apple.trig")), "--json"]);
    let s: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(s["units"], 8);
    assert_eq!(s["compound_units"], 1);
    assert_eq!(s["by_kind"]["WeightStatementUnit"], 1);
}

#[test]
fn errors_are_json_on_stderr() {
    let o = semunit(&[
        "render",
        arg(&fixture("apple.trig")),
        "https://kg.example/su/nope",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(error_json(&o)["error"], "UnknownUnit");
    let o = semunit(&[
        "translate",
        arg(&fixture("apple.trig")),
        "--framework",
        "XYZ",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_json(&o)["error"], "Usage");
    let o = semunit(&["stats", "/definitely/not/here.trig"]);
    assert_eq!(error_json(&o)["error"], "Io");
    assert!(o.stdout.is_empty());
}

#[test]
fn config_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("config.json");
    std::fs::write(&cfg, r#"{"prefixes": {"res": "https://kg.example/res/"}}"#).unwrap();
    let out = dir.path().join("out.trig");
    let o = Command::new(env!("CARGO_BIN_EXE_semunit"))
        .args(["ingest", arg(&fixture("apple.json")), "-o", arg(&out)])
        .env("SEMUNIT_CONFIG", &cfg)
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.contains("@prefix res: <https://kg.example/res/> ."));
    assert!(text.contains("res:apple-x"));
}
