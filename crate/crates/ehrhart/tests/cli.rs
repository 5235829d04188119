//! End-to-end tests of the `ehrhart` binary: exit codes, pipelines,
//! determinism, and agreement between the CLI and the in-process API.

use ehrhart::counting::CountOptions;
use ehrhart::{period_report, structured, triangle};
use std::io::Write;
use std::process::{Command, Stdio};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_bin(args: &[&str], stdin: Option<&str>, envs: &[(&str, &str)]) -> Outcome {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ehrhart"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (key, value) in envs {
        cmd.env(key, value);
    }
    let mut child = cmd.spawn().expect("spawn ehrhart binary");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    let output = child.wait_with_output().expect("wait for ehrhart binary");
    Outcome {
        code: output.status.code().expect("exit code"),
        stdout: String::from_utf8(output.stdout).unwrap(),
        stderr: String::from_utf8(output.stderr).unwrap(),
    }
}

#[test]
fn construct_then_period_pipeline_matches_in_process_reports() {
    let matrix: Vec<Vec<&str>> = vec![
        vec!["construct", "triangle", "--D", "2"],
        vec!["construct", "triangle", "--D", "3"],
        vec!["construct", "triangle", "--D", "4"],
        vec!["construct", "pentagon", "--D", "6", "--s", "1"],
        vec!["construct", "pentagon", "--D", "6", "--s", "2"],
        vec!["construct", "pentagon", "--D", "6", "--s", "3"],
        vec!["construct", "pentagon", "--D", "6", "--s", "6"],
        vec!["construct", "prism", "--D", "2", "--s", "2", "--dim", "3"],
        vec!["construct", "stanley-pyramid"],
        vec!["construct", "example1"],
        vec!["construct", "example2"],
        vec!["construct", "example3"],
    ];
    for args in matrix {
        let constructed = run_bin(&args, None, &[]);
        assert_eq!(constructed.code, 0, "{args:?}: {}", constructed.stderr);

        let via_pipe = run_bin(&["period", "-"], Some(&constructed.stdout), &[]);
        assert_eq!(via_pipe.code, 0, "{args:?}: {}", via_pipe.stderr);

        // same construction resolved in-process
        let spec = ehrhart::constructions::build_by_name(
            args[1],
            args.iter().position(|a| *a == "--D").map(|i| args[i + 1].parse().unwrap()),
            args.iter().position(|a| *a == "--s").map(|i| args[i + 1].parse().unwrap()),
            args.iter().position(|a| *a == "--dim").map(|i| args[i + 1].parse().unwrap()),
        )
        .unwrap();
        let report = period_report(&spec.polytope, &CountOptions::default()).unwrap();
        assert_eq!(via_pipe.stdout, format!("{report}\n"), "{args:?}");
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["period", "pentagon", "--D", "6", "--s", "3"];
    let first = run_bin(&args, None, &[]);
    let second = run_bin(&args, None, &[]);
    assert_eq!(first.code, 0);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stderr, second.stderr);
}

#[test]
fn structured_outputs_round_trip() {
    let period = run_bin(
        &["period", "example2", "--output", "structured"],
        None,
        &[],
    );
    assert_eq!(period.code, 0);
    let parsed = structured::parse_period_report(&period.stdout).unwrap();
    let spec = ehrhart::example_triangle(2).unwrap();
    let expected = period_report(&spec.polytope, &CountOptions::default()).unwrap();
    assert_eq!(parsed, expected);

    let characterization = run_bin(
        &["characterize", "example3", "--output", "structured"],
        None,
        &[],
    );
    assert_eq!(characterization.code, 0);
    let parsed = structured::parse_characterization(&characterization.stdout).unwrap();
    let expected =
        ehrhart::characterize(&ehrhart::example_triangle(3).unwrap().polytope, &CountOptions::default())
            .unwrap();
    assert_eq!(parsed, expected);

    let fit = run_bin(&["fit", "example2", "--output", "structured"], None, &[]);
    assert_eq!(fit.code, 0);
    let parsed = structured::parse_quasipolynomial(&fit.stdout).unwrap();
    assert_eq!(parsed, ehrhart::example_triangle(2).unwrap().expected);
}

#[test]
fn construct_out_writes_file_and_prints_expectation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("triangle.poly");
    let outcome = run_bin(
        &["construct", "triangle", "--D", "3", "--out", path.to_str().unwrap()],
        None,
        &[],
    );
    assert_eq!(outcome.code, 0);
    assert_eq!(outcome.stdout, "period: 1\n1: n^2 + 2 n + 1\n");

    let loaded = ehrhart::read_polytope_file(&path).unwrap();
    let report = period_report(&loaded, &CountOptions::default()).unwrap();
    let direct = period_report(&triangle(3).unwrap().polytope, &CountOptions::default()).unwrap();
    assert_eq!(report, direct);
}

#[test]
fn count_modes() {
    for (mode, expected) in [("closed", "10\n"), ("interior", "0\n"), ("boundary", "10\n")] {
        let outcome = run_bin(
            &["count", "stanley-pyramid", "--n", "2", "--mode", mode],
            None,
            &[],
        );
        assert_eq!(outcome.code, 0, "{}", outcome.stderr);
        assert_eq!(outcome.stdout, expected, "mode {mode}");
    }
}

#[test]
fn malformed_rational_reports_line_and_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.poly");
    std::fs::write(&path, "dim 2\nvertex 0 0\nvertex 1//2 0\nvertex 0 1\n").unwrap();
    let outcome = run_bin(&["count", path.to_str().unwrap(), "--n", "1"], None, &[]);
    assert_eq!(outcome.code, 1);
    assert!(outcome.stderr.contains("line 3"), "{}", outcome.stderr);
    assert!(outcome.stderr.contains("1//2"), "{}", outcome.stderr);
}

#[test]
fn degenerate_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flat.poly");
    std::fs::write(&path, "dim 2\nvertex 0 0\nvertex 1 0\nvertex 2 0\n").unwrap();
    let outcome = run_bin(&["period", path.to_str().unwrap()], None, &[]);
    assert_eq!(outcome.code, 2);
    assert!(outcome.stderr.contains("collinear"), "{}", outcome.stderr);
}

#[test]
fn unreadable_file_exits_one() {
    let outcome = run_bin(&["period", "/nonexistent/path.poly"], None, &[]);
    assert_eq!(outcome.code, 1);
}

#[test]
fn cell_limit_env_var_is_honored() {
    let outcome = run_bin(
        &["count", "triangle", "--D", "6", "--n", "8"],
        None,
        &[("EHRHART_CELL_LIMIT", "10")],
    );
    assert_eq!(outcome.code, 2);
    assert!(outcome.stderr.contains("exceeds the limit of 10"), "{}", outcome.stderr);

    // flag wins over the environment
    let outcome = run_bin(
        &["count", "triangle", "--D", "6", "--n", "8", "--cell-limit", "100000"],
        None,
        &[("EHRHART_CELL_LIMIT", "10")],
    );
    assert_eq!(outcome.code, 0, "{}", outcome.stderr);
}

#[test]
fn reciprocity_passes_on_pyramid() {
    let outcome = run_bin(&["reciprocity", "stanley-pyramid", "--max-n", "5"], None, &[]);
    assert_eq!(outcome.code, 0, "{}", outcome.stderr);
    assert_eq!(outcome.stdout, "reciprocity holds for n = 1..5\n");
}

#[test]
fn characterize_shows_failure_rows() {
    let outcome = run_bin(&["characterize", "example2"], None, &[]);
    assert_eq!(outcome.code, 0);
    assert!(outcome.stdout.contains("verdict: NOT polynomial"), "{}", outcome.stdout);
    let failing_row = outcome
        .stdout
        .lines()
        .find(|l| l.trim_start().starts_with("2 "))
        .expect("row for n = 2");
    assert!(failing_row.ends_with("no"), "{failing_row}");
}

#[test]
fn stdin_source_reads_polytope_files() {
    let text = "dim 1\nvertex 1/2\nvertex 3/2\n";
    let outcome = run_bin(&["count", "-", "--n", "2"], Some(text), &[]);
    assert_eq!(outcome.code, 0, "{}", outcome.stderr);
    assert_eq!(outcome.stdout, "3\n");
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run_bin(&["--help"], None, &[]).code, 0);
    assert_eq!(run_bin(&["--version"], None, &[]).code, 0);
}
