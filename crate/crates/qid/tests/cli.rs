//! End-to-end checks of the `qid` binary: output shapes, report and golden
//! round-trips, and the exit-code contract (0 pass, 1 comparison failure,
//! 2 usage or plan error, 3 internal error).

use std::fs;
use std::path::Path;
use std::process::Command;

fn qid(args: &[&str]) -> (Option<i32>, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qid"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code(),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

#[test]
fn list_prints_the_full_catalog_as_json() {
    let (code, stdout, _) = qid(&["list"]);
    assert_eq!(code, Some(0));
    let entries: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let entries = entries.as_array().unwrap();
    assert_eq!(entries.len(), 22);
    for e in entries {
        for key in ["id", "statement", "normalizer", "params", "tags"] {
            assert!(e.get(key).is_some(), "{key} missing in {e}");
        }
    }
    assert!(entries.iter().any(|e| e["id"] == "id1"));
    let z1 = entries.iter().find(|e| e["id"] == "lemma_z1").unwrap();
    assert_eq!(z1["params"][1]["max"], "n");
}

#[test]
fn show_prints_both_normalized_sides() {
    let (code, stdout, _) = qid(&["show", "--id", "id1", "--param", "L=1"]);
    assert_eq!(code, Some(0));
    assert_eq!(
        stdout,
        "lhs = 1 + 1*q*z^-1 - 1*q + 1*q*z\nrhs = 1 + 1*q*z^-1 - 1*q + 1*q*z\n"
    );
}

#[test]
fn verify_writes_byte_identical_reports_and_matches_its_own_golden() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    let args = |path: &Path| {
        vec![
            "verify".to_string(),
            "--id".into(),
            "id1".into(),
            "--param".into(),
            "L=0..4".into(),
            "--report".into(),
            path.display().to_string(),
        ]
    };
    let run = |path: &Path| {
        let owned = args(path);
        let refs: Vec<&str> = owned.iter().map(String::as_str).collect();
        qid(&refs)
    };
    let (code, stdout, _) = run(&first);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("aggregate: equal (5 instances: 5 equal, 0 mismatch, 0 error)"));
    let (code, _, _) = run(&second);
    assert_eq!(code, Some(0));
    assert_eq!(
        fs::read(&first).unwrap(),
        fs::read(&second).unwrap(),
        "reports of identical runs must be byte-identical"
    );

    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&first).unwrap()).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["aggregate_status"], "equal");
    assert_eq!(report["wall_time_us"], 0);
    assert_eq!(report["results"].as_array().unwrap().len(), 5);
    assert_eq!(report["results"][0]["lhs_time_us"], 0);

    let (code, stdout, _) = qid(&[
        "verify",
        "--id",
        "id1",
        "--param",
        "L=0..4",
        "--golden",
        first.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("golden: match"));
}

#[test]
fn golden_divergence_fails_even_when_all_instances_pass() {
    let dir = tempfile::tempdir().unwrap();
    let golden = dir.path().join("golden.json");
    let (code, _, _) = qid(&[
        "verify",
        "--id",
        "id1",
        "--param",
        "L=0..2",
        "--report",
        golden.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(0));
    let (code, stdout, _) = qid(&[
        "verify",
        "--id",
        "id1",
        "--param",
        "L=0..3",
        "--golden",
        golden.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(1));
    assert!(stdout.contains("golden: mismatch"));
}

#[test]
fn plan_files_run_with_thread_override() {
    let dir = tempfile::tempdir().unwrap();
    let plan = dir.path().join("plan.json");
    fs::write(
        &plan,
        r#"{"instances": [{"id": "id3", "params": {"L": [0, 5]}},
                          {"id": "lemma_z2j", "params": {"L": [0, 4], "j": [0, 2]}}],
            "threads": 2}"#,
    )
    .unwrap();
    let (code, stdout, _) = qid(&["verify", "--plan", plan.to_str().unwrap(), "--threads", "1"]);
    assert_eq!(code, Some(0));
    // 6 sizes plus the 9 valid (L, j) pairs under 2j <= L.
    assert!(
        stdout.contains("aggregate: equal (15 instances"),
        "{stdout}"
    );
}

#[test]
fn corrupt_hook_exits_one_with_a_difference() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("corrupt.json");
    let (code, stdout, _) = qid(&[
        "verify",
        "--id",
        "id1",
        "--param",
        "L=2",
        "--corrupt",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(1));
    assert!(stdout.contains("mismatch id1 L=2: difference = -1"));
    let parsed: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(parsed["aggregate_status"], "mismatch");
    assert_eq!(parsed["results"][0]["difference"], "-1");
}

#[test]
fn usage_and_plan_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["verify"],
        &["verify", "--id", "nope", "--param", "L=0..1"],
        &["verify", "--id", "id1"],
        &["verify", "--id", "id1", "--param", "L=5..2"],
        &["verify", "--id", "id1", "--param", "L=x"],
        &[
            "verify", "--id", "id1", "--param", "L=0..1", "--param", "L=2..3",
        ],
        &["verify", "--plan", "/nonexistent/plan.json"],
        &["show", "--id", "id1", "--param", "L=1..2"],
        &[
            "show", "--id", "lemma_z1", "--param", "n=1", "--param", "m=2",
        ],
        &["bench", "--id", "lemma_qbthm", "--l-max", "3"],
        &["limits", "--suite", "nope", "--degree", "5"],
        &["limits", "--suite", "pentagonal", "--degree", "-1"],
        &["frobnicate"],
    ];
    for args in cases {
        let (code, _, stderr) = qid(args);
        assert_eq!(code, Some(2), "args {args:?} gave {code:?}: {stderr}");
    }
}

#[test]
fn malformed_plan_contents_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for body in [
        "not json",
        r#"{"instances": [{"id": "id1", "params": {"L": [0, 1]}}], "workers": 9}"#,
        r#"{"instances": [{"id": "id1", "params": {"L": [0, 1], "x": [0, 1]}}]}"#,
        r#"{"instances": [{"id": "lemma_z1", "params": {"n": [0, 0], "m": [1, 2]}}]}"#,
    ] {
        let path = dir.path().join("plan.json");
        fs::write(&path, body).unwrap();
        let (code, _, stderr) = qid(&["verify", "--plan", path.to_str().unwrap()]);
        assert_eq!(code, Some(2), "plan {body:?} gave {code:?}: {stderr}");
    }
}

#[test]
fn bench_prints_a_row_per_size() {
    let (code, stdout, _) = qid(&["bench", "--id", "id2", "--l-max", "3"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("lhs_summands"));
    assert_eq!(stdout.lines().count(), 2 + 4, "header lines plus 4 rows");
    let (_, with_analytic, _) = qid(&["bench", "--id", "id1", "--l-max", "1"]);
    assert!(with_analytic.contains("analytic_rhs"));
}

#[test]
fn limit_suites_pass_at_modest_degrees() {
    for suite in ["pentagonal", "triple_product", "lebesgue", "stabilization"] {
        let (code, stdout, _) = qid(&["limits", "--suite", suite, "--degree", "25"]);
        assert_eq!(code, Some(0), "{suite}: {stdout}");
        assert!(stdout.contains(&format!("suite {suite} degree 25: pass")));
    }
}
