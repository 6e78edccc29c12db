//! Integration tests for the command-line surface: report files, byte
//! determinism, and the eval/problems commands end to end.

use std::path::PathBuf;

use evoterm::cli::execute;

fn args(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("evoterm-test-{}-{}", tag, std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn run_reports_are_byte_identical() {
    let dir = temp_dir("run");
    let out = dir.to_string_lossy().to_string();
    let invocation = args(&[
        "run",
        "--problem",
        "sum-n",
        "--algorithm",
        "haea",
        "--seed",
        "5",
        "--population",
        "40",
        "--iterations",
        "4",
        "--out",
        &out,
    ]);
    execute(&invocation).unwrap();
    let path = dir.join("run_haea_sum-n_seed5.txt");
    let first = std::fs::read(&path).unwrap();
    execute(&invocation).unwrap();
    let second = std::fs::read(&path).unwrap();
    assert_eq!(first, second);
    let text = String::from_utf8(first).unwrap();
    assert!(text.contains("best-program:"));
    assert!(
        !text.contains("wall"),
        "wall time must stay out of report files"
    );
}

#[test]
fn batch_reports_are_deterministic_across_job_counts() {
    let dir_a = temp_dir("batch-a");
    let dir_b = temp_dir("batch-b");
    for (dir, jobs) in [(&dir_a, "1"), (&dir_b, "3")] {
        let out = dir.to_string_lossy().to_string();
        execute(&args(&[
            "batch",
            "--problems",
            "sum-n",
            "--algorithm",
            "gp",
            "--runs",
            "3",
            "--seed",
            "11",
            "--jobs",
            jobs,
            "--population",
            "30",
            "--iterations",
            "3",
            "--out",
            &out,
        ]))
        .unwrap();
    }
    for name in ["batch_gp_seed11.txt", "batch_gp_seed11.tsv"] {
        let a = std::fs::read(dir_a.join(name)).unwrap();
        let b = std::fs::read(dir_b.join(name)).unwrap();
        assert_eq!(a, b, "{} differs across job counts", name);
    }
    let tsv = std::fs::read_to_string(dir_a.join("batch_gp_seed11.tsv")).unwrap();
    assert!(tsv.lines().count() == 2);
    assert!(tsv.lines().nth(1).unwrap().starts_with("sum-n\t3\t"));
}

#[test]
fn eval_scores_reference_solution() {
    let dir = temp_dir("eval");
    let program_path = dir.join("solution.prog");
    std::fs::write(
        &program_path,
        "sum_n(0) = 0\nsum_n(s(A)) = s(sum(sum_n(A),A))\n",
    )
    .unwrap();
    let out = execute(&args(&[
        "eval",
        "--program",
        &program_path.to_string_lossy(),
        "--problem",
        "sum-n",
    ]))
    .unwrap();
    assert!(out.contains("sum_n(4) = 10  deduced"));
    assert!(out.contains("covering factor: 5/5 = 1.0000"));

    // An empty program deduces nothing.
    std::fs::write(&program_path, "% nothing here\n").unwrap();
    let out = execute(&args(&[
        "eval",
        "--program",
        &program_path.to_string_lossy(),
        "--problem",
        "sum-n",
    ]))
    .unwrap();
    assert!(out.contains("covering factor: 0/5 = 0.0000"));

    // A looping rule is reported as budget exhaustion.
    std::fs::write(&program_path, "sum_n(N) = sum_n(s(N))\n").unwrap();
    let out = execute(&args(&[
        "eval",
        "--program",
        &program_path.to_string_lossy(),
        "--problem",
        "sum-n",
    ]))
    .unwrap();
    assert!(out.contains("budget-exhausted"));
}

#[test]
fn exported_datasets_parse_back() {
    let dir = temp_dir("export");
    let out = dir.to_string_lossy().to_string();
    execute(&args(&["problems", "--export", &out])).unwrap();
    for name in evoterm::benchmarks::PROBLEM_NAMES {
        let text = std::fs::read_to_string(dir.join(format!("{}.dataset", name))).unwrap();
        let dataset = evoterm::dataset::Dataset::parse(&text).unwrap();
        let reference = evoterm::benchmarks::builtin_problem(name).unwrap().dataset;
        assert_eq!(dataset, reference, "{} does not round-trip", name);
    }
}

#[test]
fn dataset_flag_runs_from_file() {
    let dir = temp_dir("dataset-flag");
    let dataset_path = dir.join("twice.dataset");
    std::fs::write(
        &dataset_path,
        "#basic\ntwice(0) = 0\ntwice(1) = 2\n#extra\ntwice(2) = 4\n#background\ndouble(0) = 0\ndouble(s(N)) = s(s(double(N)))\n",
    )
    .unwrap();
    let out_dir = dir.to_string_lossy().to_string();
    let out = execute(&args(&[
        "run",
        "--dataset",
        &dataset_path.to_string_lossy(),
        "--algorithm",
        "haea",
        "--seed",
        "3",
        "--population",
        "60",
        "--iterations",
        "30",
        "--out",
        &out_dir,
    ]))
    .unwrap();
    assert!(out.contains("problem: twice"));
    assert!(dir.join("run_haea_twice_seed3.txt").exists());
}

#[test]
fn failing_invocations_write_nothing() {
    let dir = temp_dir("failing");
    let out = dir.to_string_lossy().to_string();
    let err = execute(&args(&[
        "run",
        "--problem",
        "no-such-problem",
        "--algorithm",
        "haea",
        "--out",
        &out,
    ]))
    .unwrap_err();
    assert!(err.message.contains("unknown problem"));
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 0);
}
