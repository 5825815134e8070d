use std::process::{Command, Output};

use hypergraph4::report::Report;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypergraph4")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_json_reports_28_matched_classes() {
    let out = run(&["classify", "--format", "json", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    let matched = report.classes.iter().filter(|c| c.paper_row.is_some()).count();
    assert_eq!(matched, 28);
    assert_eq!(report.seed, 7);
    assert_eq!((report.totals.rank4, report.totals.rank3, report.totals.graphs), (16384, 15360, 1024));
}

#[test]
fn reports_are_byte_identical_and_written_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = run(&["classify", "--format", "csv", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    // header + 28 classes + 11 graph classes
    assert_eq!(text.lines().count(), 1 + 28 + 11);
}

#[test]
fn markdown_has_table_layout() {
    let out = run(&["classify", "--format", "md"]);
    let text = stdout(&out);
    assert!(text.contains("| No. | m | GE | BE2 | BE1 |"));
    assert!(text.contains("| 1 | 1 | 0.3043 |"));
}

#[test]
fn cache_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("orbits.bin");
    let out = run(&["verify", "--suite", "census", "--cache", cache.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(cache.exists());
    let out = run(&["verify", "--suite", "closure", "--cache", cache.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn invalid_flags_exit_1_with_usage() {
    for args in [
        &["classify", "--format", "xml"][..],
        &["classify", "--restarts", "0"],
        &["classify", "--tol", "-1"],
        &["verify", "--suite", "nope"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"), "{args:?}");
    }
}

#[test]
fn unwritable_out_path_exits_1() {
    let out = run(&["classify", "--out", "/nonexistent-dir/report.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent-dir/report.json"));
}

#[test]
fn query_worked_example() {
    let out = run(&["query", "1234,123"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("standardized: 1234\n"), "{text}");
    assert!(text.contains("size 256"), "{text}");
    assert!(text.contains("class: No.1 (table I)"), "{text}");
}

#[test]
fn query_empty_is_product_state() {
    let out = run(&["query", ""]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("ge: 0.000000"), "{text}");
    assert!(text.contains("++++++++++++++++"), "{text}");
}

#[test]
fn query_parse_error_names_token() {
    let out = run(&["query", "125"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"125\""));
}

#[test]
fn verify_runs_all_suites_or_one() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 6, "{text}");
    assert!(text.contains("rank 4: 16384, rank 3: 15360, rank <= 2: 1024, total codes 32768"));

    let out = run(&["verify", "--suite", "stabilizer"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("PASS stabilizer"));
}
