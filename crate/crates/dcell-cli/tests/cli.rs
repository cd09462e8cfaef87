//! End-to-end tests of the `dcell` binary: output bytes, file handling,
//! and the exit-code contract (0 ok, 1 failed claim, 2 usage/validation,
//! 3 inconclusive).

use std::process::{Command, Output};

fn dcell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn gen_writes_the_hexagon_edge_list() {
    let output = dcell(&["gen", "--k", "1", "--n", "2"]);
    assert_eq!(exit_code(&output), 0);
    let expected = "\
0,0\t0,1\t0
0,0\t1,0\t1
0,1\t2,0\t1
1,0\t1,1\t0
1,1\t2,1\t1
2,0\t2,1\t0
";
    assert_eq!(stdout_of(&output), expected);
}

#[test]
fn gen_json_is_deterministic_and_self_describing() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    for path in [&first, &second] {
        let output = dcell(&[
            "gen",
            "--k",
            "1",
            "--n",
            "2",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&output), 0);
        assert!(stdout_of(&output).is_empty());
    }
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert_eq!(a, b);

    let value: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(value["params"]["k"], 1);
    assert_eq!(value["params"]["n"], 2);
    assert_eq!(value["t"], "6");
    assert_eq!(value["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn gen_dot_brackets_edges_with_levels() {
    let output = dcell(&["gen", "--k", "1", "--n", "2", "--format", "dot"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert!(text.starts_with("graph {\n"));
    assert!(text.ends_with("}\n"));
    assert_eq!(text.matches(" -- ").count(), 6);
    assert!(text.contains("  \"0,1\" -- \"2,0\" [level=1];\n"));
}

#[test]
fn gen_refuses_oversized_builds() {
    let output = dcell(&["gen", "--k", "4", "--n", "2", "--budget", "1000000"]);
    assert_eq!(exit_code(&output), 2);
    let err = stderr_of(&output);
    assert!(err.contains("budget exceeded"), "stderr: {err}");
    assert!(err.contains("3263442"), "stderr: {err}");
}

#[test]
fn neighbors_prints_levels_ascending() {
    let output = dcell(&["neighbors", "--k", "2", "--n", "3", "--vertex", "0,1,2"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_of(&output), "0\t0,1,0\n0\t0,1,1\n1\t0,3,1\n2\t6,0,0\n");
}

#[test]
fn neighbors_works_beyond_materializable_sizes() {
    // D_{6,2} has more vertices than any budget allows; labels still work.
    let vertex = "0,0,0,0,0,2,1";
    let output = dcell(&["neighbors", "--k", "6", "--n", "2", "--vertex", vertex]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    assert_eq!(text.lines().count(), 7);
    assert!(text.starts_with("0\t0,0,0,0,0,2,0\n"));
}

#[test]
fn neighbors_rejects_invalid_labels() {
    let out_of_range = dcell(&["neighbors", "--k", "2", "--n", "2", "--vertex", "0,7,0"]);
    assert_eq!(exit_code(&out_of_range), 2);
    assert!(stderr_of(&out_of_range).contains("invalid label"));

    let malformed = dcell(&["neighbors", "--k", "2", "--n", "2", "--vertex", "x,y"]);
    assert_eq!(exit_code(&malformed), 2);
}

#[test]
fn cycles_counts_and_lists_witnesses() {
    let count_only = dcell(&["cycles", "--k", "2", "--n", "2", "--vertex", "3,1,1"]);
    assert_eq!(exit_code(&count_only), 0);
    assert_eq!(stdout_of(&count_only), "2\n");

    let listed =
        dcell(&["cycles", "--k", "2", "--n", "2", "--vertex", "3,1,1", "--length", "6", "--list"]);
    assert_eq!(exit_code(&listed), 0);
    let expected = "\
2
3,1,1;3,1,0;2,1,0;2,1,1;4,1,0;4,1,1
3,1,1;3,1,0;3,0,0;3,0,1;3,2,0;3,2,1
";
    assert_eq!(stdout_of(&listed), expected);
}

#[test]
fn cycles_rejects_out_of_range_lengths() {
    for length in ["2", "11"] {
        let output =
            dcell(&["cycles", "--k", "1", "--n", "2", "--vertex", "0,0", "--length", length]);
        assert_eq!(exit_code(&output), 2, "length {length}");
        assert!(stderr_of(&output).contains("invalid parameter"));
    }
}

#[test]
fn certify_emits_a_transitive_verdict_with_a_sample_map() {
    let output = dcell(&["certify", "--k", "1", "--n", "3"]);
    assert_eq!(exit_code(&output), 0);
    let verdict: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(verdict["decision"], "Transitive");
    assert_eq!(verdict["certificate"]["kind"], "copy-permutation");
    assert_eq!(verdict["certificate"]["pairs_verified"], 144);
    assert_eq!(verdict["certificate"]["sampled"], false);
    assert_eq!(verdict["certificate"]["sample"]["map"].as_array().unwrap().len(), 12);
    assert!(verdict.get("witness").is_none());
}

#[test]
fn certify_emits_a_witnessed_refutation_with_orbits() {
    let output = dcell(&["certify", "--k", "2", "--n", "2", "--exhaustive"]);
    assert_eq!(exit_code(&output), 0);
    let verdict: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(verdict["decision"], "NotTransitive");
    assert_eq!(verdict["witness"]["u"], "0,2,1");
    assert_eq!(verdict["witness"]["v"], "3,1,1");
    assert_eq!(verdict["witness"]["invariant"], "6-cycle count");
    assert_eq!(verdict["witness"]["count_u"], 1);
    assert_eq!(verdict["witness"]["count_v"], 2);
    assert_eq!(verdict["orbits"], 21);
    assert!(verdict.get("certificate").is_none());
}

#[test]
fn certify_exits_3_when_the_budget_cannot_verify() {
    let output = dcell(&["certify", "--k", "1", "--n", "4", "--budget", "10"]);
    assert_eq!(exit_code(&output), 3);
    assert!(stderr_of(&output).contains("inconclusive"));
}

#[test]
fn paper_check_passes_and_reports_every_claim() {
    let output = dcell(&["paper-check"]);
    assert_eq!(exit_code(&output), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(report["failed"], 0);
    assert!(report["passed"].as_u64().unwrap() >= 12);
    let ids: Vec<&str> = report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(ids.contains(&"D12_IS_C6"));
    assert!(ids.contains(&"D22_NOT_VT"));
    let statuses: Vec<&str> = report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["status"].as_str().unwrap())
        .collect();
    assert!(statuses.iter().all(|&s| s == "pass"));
}

#[test]
fn paper_check_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let output = dcell(&["paper-check", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["failed"], 0);
}

#[test]
fn a_closed_output_pipe_is_a_clean_stop() {
    use std::process::Stdio;

    // 3612 edge lines (~90 KiB) overflow the default pipe buffer, so the
    // writer is still going when we close the read end underneath it.
    let mut child = Command::new(env!("CARGO_BIN_EXE_dcell"))
        .args(["gen", "--k", "3", "--n", "2"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    drop(child.stdout.take());
    let output = child.wait_with_output().expect("child finishes");
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stderr_of(&output), "");
}

#[test]
fn usage_errors_exit_2() {
    let missing = dcell(&["gen", "--k", "1"]);
    assert_eq!(exit_code(&missing), 2);

    let unknown = dcell(&["frobnicate"]);
    assert_eq!(exit_code(&unknown), 2);

    let bad_value = dcell(&["gen", "--k", "one", "--n", "2"]);
    assert_eq!(exit_code(&bad_value), 2);
}
