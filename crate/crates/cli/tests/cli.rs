use assert_cmd::Command;
use jsonschema::{Resource, Validator};
use serde_json::Value;

const CATALOG: &str = include_str!("../../core/tests/fixtures/graphs_upto7.g6");
const K4_PENDANT_EDGES: &str = "labels=a b c d e\na b\na c\na d\nb c\nb d\nc d\nd e\n";

fn corona() -> Command {
    let mut c = Command::cargo_bin("corona").unwrap();
    c.env_remove("CORONA_CONFIG");
    c
}

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let out = corona().args(args).write_stdin(stdin).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn schema(name: &str) -> Validator {
    let load = |n: &str| -> Value {
        let (_, text, _) = run(&["schema", n], "");
        serde_json::from_str(&text).unwrap()
    };
    jsonschema::options()
        .with_resource(
            "urn:corona:schema:analysis-report",
            Resource::from_contents(load("analysis-report")).unwrap(),
        )
        .build(&load(name))
        .unwrap()
}

fn assert_valid(v: &Validator, instance: &Value) {
    let errors: Vec<String> = v.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{instance}");
}

fn lines(text: &str) -> Vec<Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn analyze_examples() {
    let (code, out, _) = run(&["analyze"], "Dhc\nA_\n");
    assert_eq!(code, 0);
    let r = lines(&out);
    assert_eq!((r[0]["alpha"].as_u64(), r[0]["ke"].as_bool(), r[0]["gDefect"].as_i64()), (Some(2), Some(false), Some(1)));
    assert_eq!((r[1]["alpha"].as_u64(), r[1]["ke"].as_bool(), r[1]["gDefect"].as_i64()), (Some(1), Some(true), Some(0)));

    let (code, out, _) = run(&["analyze", "-i", "edge-list"], K4_PENDANT_EDGES);
    assert_eq!(code, 0);
    let r = &lines(&out)[0];
    assert_eq!(r["core"], serde_json::json!([4]));
    assert_eq!(r["ker"], serde_json::json!([]));
    assert_eq!(r["lcGraph6"], "Bw");
    assert_eq!(r["labels"][4], "e");
}

#[test]
fn analyze_reports_validate_against_schema() {
    let v = schema("analysis-report");
    let input: String = CATALOG.lines().step_by(25).map(|l| format!("{l}\n")).collect();
    let (code, out, _) = run(&["analyze", "--workers", "2"], &input);
    assert_eq!(code, 0);
    for r in lines(&out) {
        assert_valid(&v, &r);
    }
    let (_, out, _) = run(&["analyze", "-i", "edge-list"], K4_PENDANT_EDGES);
    assert_valid(&v, &lines(&out)[0]);
}

#[test]
fn analyze_parse_error_exits_3_and_continues() {
    let (code, out, err) = run(&["analyze"], "Dhc\n!!bad\nA_\n");
    assert_eq!(code, 3);
    assert_eq!(out.lines().count(), 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn verify_summary_and_schema() {
    let input: String = CATALOG.lines().filter(|l| l.len() <= 3).map(|l| format!("{l}\n")).collect();
    let (code, out, _) = run(&["verify", "--theorems", "T-REDUCTION,T-KER-CORE"], &input);
    assert_eq!(code, 0);
    let summary = lines(&out).pop().unwrap();
    assert_valid(&schema("summary"), &summary);
    assert_eq!(summary["theorems"]["T-REDUCTION"]["fail"], 0);
    assert_eq!(summary["theorems"]["T-KER-CORE"]["fail"], 0);
    assert_eq!(summary["graphs"].as_u64().unwrap() as usize, input.lines().count());
}

#[test]
fn verify_almost_bipartite_subset_passes() {
    let input = "Dhc\nEhc_\nFhcW?\n";
    let (code, out, _) = run(&["verify", "--theorems", "T-AB"], input);
    assert_eq!(code, 0);
    let s = lines(&out).pop().unwrap();
    assert_eq!(s["theorems"]["T-AB"]["pass"], s["theorems"]["T-AB"]["applicable"]);
}

#[test]
fn verify_usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--theorems", "T-NOPE"], "Dhc\n").0, 2);
    assert_eq!(run(&["verify", "--workers", "0"], "Dhc\n").0, 2);
    assert_eq!(run(&["frobnicate"], "").0, 2);
}

#[test]
fn verify_is_independent_of_workers_and_table_renders() {
    let input: String = CATALOG.lines().take(200).map(|l| format!("{l}\n")).collect();
    let one = run(&["verify", "--workers", "1"], &input);
    let four = run(&["verify", "--workers", "4"], &input);
    assert_eq!(one, four);
    let (code, out, _) = run(&["verify", "--format", "table", "--theorems", "T-KE-SUM"], &input);
    assert_eq!(code, 0);
    assert!(out.contains("T-KE-SUM"));
}

#[test]
fn generate_examples() {
    assert_eq!(run(&["generate", "cycle", "5"], "").1, "Dhc\n");
    let (code, out, _) = run(&["generate", "abmc", "--odd-ears", "3", "--seed", "7", "--count", "10"], "");
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 10);
    assert_eq!(out, run(&["generate", "abmc", "--odd-ears", "3", "--seed", "7", "--count", "10"], "").1);
    // every generated graph is ABMC with an ABMC Lc equal to the whole graph
    let (_, reports, _) = run(&["analyze"], &out);
    for r in lines(&reports) {
        assert_eq!(r["abmc"], true);
        assert_eq!(r["L"], serde_json::json!([]));
        assert_eq!(r["gDefect"], 1);
    }
    assert_eq!(run(&["generate", "cycle", "2"], "").0, 2);
}

#[test]
fn generate_from_script() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bowtie.ear");
    std::fs::write(&path, "kind ear-pendant\nbase cycle 3\near 2 2 3\n").unwrap();
    let (code, out, _) = run(&["generate", "script", path.to_str().unwrap()], "");
    assert_eq!(code, 0);
    let (_, report, _) = run(&["analyze"], &out);
    assert_eq!(lines(&report)[0]["twoBicritical"], true);
    std::fs::write(&path, "kind ear-pendant\nbase cycle 4\n").unwrap();
    assert_eq!(run(&["generate", "script", path.to_str().unwrap()], "").0, 3);
}

#[test]
fn convert_examples() {
    assert_eq!(run(&["convert"], "A_\n").1, "n=2\n0 1\n");
    assert_eq!(run(&["convert", "--from", "edge-list", "--to", "graph6"], "0 1\n1 2\n").1, "Bg\n");
    assert_eq!(run(&["convert"], ""), (0, String::new(), String::new()));
    assert_eq!(run(&["convert"], "%%\n").0, 3);
}

#[test]
fn config_file_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corona.toml");
    std::fs::write(&path, "format = \"table\"\nworkers = 1\n").unwrap();
    let out = corona().args(["verify", "--theorems", "T-AB"]).env("CORONA_CONFIG", &path).write_stdin("Dhc\n").output().unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("theorem"));
    let (_, out, _) = run(&["verify", "--theorems", "T-AB", "--config", path.to_str().unwrap(), "--format", "json"], "Dhc\n");
    assert!(out.starts_with('{'));
    std::fs::write(&path, "cycle-cap = 0\n").unwrap();
    assert_eq!(run(&["analyze", "--config", path.to_str().unwrap()], "Dhc\n").0, 2);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.g6");
    let (code, out, _) = run(&["generate", "complete", "4", "--output", path.to_str().unwrap()], "");
    assert_eq!((code, out.as_str()), (0, ""));
    assert_eq!(std::fs::read_to_string(path).unwrap(), "C~\n");
}
