use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pareto-sum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_example(dir: &Path) -> String {
    let path = dir.join("example.txt");
    fs::write(&path, "2 2\n0 2\n1 0\n0 1\n2 0\n").unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn exact_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_example(dir.path());
    for algo in [
        "sc",
        "sss",
        "bsc",
        "conv-naive",
        "conv-enhanced",
        "conv-cp",
        "conv-cdxz",
    ] {
        let out = run(&["exact", "--input", &input, "--algo", algo]);
        assert!(out.status.success(), "{algo}");
        let text = stdout(&out);
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("k=3 time_ns="));
        assert_eq!(lines.collect::<Vec<_>>(), ["0 3", "1 1", "3 0"], "{algo}");
    }
}

#[test]
fn approx_and_eval() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("inst.txt");
    fs::write(&input, "3 2\n0 7\n3 2\n5 0\n0 4\n4 0\n").unwrap();
    let input = input.to_str().unwrap();
    let exact = dir.path().join("exact.txt");
    let approx = dir.path().join("approx.txt");
    let (exact, approx) = (exact.to_str().unwrap(), approx.to_str().unwrap());
    assert!(
        run(&["exact", "--input", input, "--algo", "bsc", "--out", exact])
            .status
            .success()
    );
    let out = run(&[
        "approx", "--input", input, "--algo", "bsc", "--t", "2", "--weak", "--out", approx,
    ]);
    assert!(stdout(&out).contains("guarantee=4 mode=weak"));
    assert_eq!(
        fs::read_to_string(approx).unwrap(),
        "0 12\n4 6\n6 4\n8 2\n10 0\n"
    );
    let out = run(&["eval", "--exact", exact, "--approx", approx]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("delta="));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_example(dir.path());
    assert_eq!(
        run(&["exact", "--input", &input, "--algo", "nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["approx", "--input", &input, "--algo", "bsc", "--t", "0"])
            .status
            .code(),
        Some(2)
    );
    let strong_cdxz = run(&[
        "approx",
        "--input",
        &input,
        "--algo",
        "conv-cdxz",
        "--t",
        "2",
    ]);
    assert_eq!(strong_cdxz.status.code(), Some(2));
    let weak_cdxz = run(&[
        "approx",
        "--input",
        &input,
        "--algo",
        "conv-cdxz",
        "--t",
        "2",
        "--weak",
    ]);
    assert!(weak_cdxz.status.success());
}

#[test]
fn runtime_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    let out = run(&[
        "exact",
        "--input",
        missing.to_str().unwrap(),
        "--algo",
        "sc",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "2 1\n0 1\n1 2\n0 0\n").unwrap();
    let out = run(&["exact", "--input", bad.to_str().unwrap(), "--algo", "sc"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bench_appends_under_one_header() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("b.csv");
    let csv = csv.to_str().unwrap();
    let args = [
        "bench",
        "--suite",
        "near-linear",
        "--sizes",
        "50",
        "--algos",
        "sc,conv-cdxz",
        "--repeats",
        "1",
        "--csv",
        csv,
    ];
    for _ in 0..2 {
        assert!(run(&args).status.success());
    }
    let text = fs::read_to_string(csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("instance_id,kind,n_p"));
    assert_eq!(
        lines
            .iter()
            .filter(|l| l.starts_with("instance_id"))
            .count(),
        1
    );
    assert!(lines[1].starts_with("near-linear-n50-s0,near-linear,"));
}
