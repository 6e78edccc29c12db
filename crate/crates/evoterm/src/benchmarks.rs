//! The seven built-in problems, their reference solution programs, and the
//! seeded batch runner with success-count and quartile summaries.

use std::fmt;
use std::sync::Mutex;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use crate::dataset::Dataset;
use crate::evolution::{self, RunConfig, RunError, RunReport};
use crate::program::Program;
use crate::syntax::parse_program;

pub const PROBLEM_NAMES: [&str; 7] = [
    "cube-bino",
    "cube",
    "square-bino",
    "square",
    "square-trino",
    "sum-n",
    "sum-n-square",
];

/// The shared function definitions used as background knowledge.
const SUM: &str = "sum(N,0) = N\nsum(N,s(M)) = s(sum(N,M))";
const PROD: &str = "prod(N,0) = 0\nprod(N,s(M)) = sum(prod(N,M),N)";
const DOUBLE: &str = "double(0) = 0\ndouble(s(N)) = s(s(double(N)))";
const TRIPLE: &str = "triple(0) = 0\ntriple(s(N)) = s(s(s(triple(N))))";
const SQUARE: &str = "square(0) = 0\nsquare(s(N)) = sum(square(N),sum(s(N),N))";
const CUBE: &str = "cube(0) = 0\ncube(s(N)) = s(sum(cube(N),triple(sum(square(N),N))))";

fn background_source(name: &str) -> &'static str {
    match name {
        "sum" => SUM,
        "prod" => PROD,
        "double" => DOUBLE,
        "triple" => TRIPLE,
        "square" => SQUARE,
        "cube" => CUBE,
        other => panic!("unknown background function {}", other),
    }
}

/// Assembles a background program from function names, in the given order.
pub fn background_for(names: &[&str]) -> Program {
    let mut equations = Vec::new();
    for name in names {
        equations.extend(
            parse_program(background_source(name))
                .expect("built-in background parses")
                .equations()
                .iter()
                .cloned(),
        );
    }
    Program::new(equations)
}

/// All six shared function definitions, used by the solution oracles.
pub fn full_background() -> Program {
    background_for(&["sum", "prod", "double", "triple", "square", "cube"])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub name: String,
    pub dataset: Dataset,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownProblem(pub String);

impl fmt::Display for UnknownProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown problem `{}` (expected one of {})",
            self.0,
            PROBLEM_NAMES.join(", ")
        )
    }
}

impl std::error::Error for UnknownProblem {}

#[derive(Debug, Clone, Copy, Default)]
pub struct BuiltinOptions {
    /// Adds `cube(4) = 64` to the cube problem's extra examples. The paper's
    /// conclusions discuss this extra example as the one whose removal
    /// makes the induced cube program overfit.
    pub cube_extra_example: bool,
}

pub fn builtin_problem(name: &str) -> Result<Problem, UnknownProblem> {
    builtin_problem_with(name, BuiltinOptions::default())
}

pub fn builtin_problem_with(
    name: &str,
    options: BuiltinOptions,
) -> Result<Problem, UnknownProblem> {
    let (basic, extra, bk): (&[&str], Vec<&str>, &[&str]) = match name {
        "cube-bino" => (
            &["cube_bino(0,0) = 0"],
            vec![
                "cube_bino(1,0) = 1",
                "cube_bino(0,1) = 1",
                "cube_bino(1,1) = 8",
                "cube_bino(2,0) = 8",
                "cube_bino(0,2) = 8",
            ],
            &["sum", "prod", "triple", "square", "cube"],
        ),
        "cube" => {
            let mut extra = vec!["cube(2) = 8", "cube(3) = 27"];
            if options.cube_extra_example {
                extra.push("cube(4) = 64");
            }
            (
                &["cube(0) = 0", "cube(1) = 1"],
                extra,
                &["sum", "triple", "square"],
            )
        }
        "square-bino" => (
            &["square_bino(0,0) = 0"],
            vec![
                "square_bino(1,0) = 1",
                "square_bino(0,1) = 1",
                "square_bino(1,1) = 4",
                "square_bino(2,1) = 9",
                "square_bino(2,2) = 16",
                "square_bino(3,1) = 16",
                "square_bino(2,3) = 25",
                "square_bino(3,2) = 25",
            ],
            &["sum", "prod", "double", "square"],
        ),
        "square" => (
            &["square(0) = 0", "square(1) = 1"],
            vec![
                "square(2) = 4",
                "square(3) = 9",
                "square(4) = 16",
                "square(5) = 25",
            ],
            &["sum", "prod", "triple"],
        ),
        "square-trino" => (
            &["square_trino(0,0,0) = 0"],
            vec![
                "square_trino(0,1,1) = 4",
                "square_trino(1,0,1) = 4",
                "square_trino(1,1,0) = 4",
                "square_trino(2,0,0) = 4",
                "square_trino(0,2,0) = 4",
                "square_trino(0,0,2) = 4",
                "square_trino(1,1,1) = 9",
                "square_trino(2,1,1) = 16",
                "square_trino(1,2,1) = 16",
                "square_trino(1,1,2) = 16",
            ],
            &["sum", "prod", "double", "square"],
        ),
        "sum-n" => (
            &["sum_n(0) = 0", "sum_n(1) = 1"],
            vec!["sum_n(2) = 3", "sum_n(3) = 6", "sum_n(4) = 10"],
            &["sum"],
        ),
        "sum-n-square" => (
            &["sum_n_square(0) = 0", "sum_n_square(1) = 1"],
            vec![
                "sum_n_square(2) = 5",
                "sum_n_square(3) = 14",
                "sum_n_square(4) = 30",
            ],
            &["sum", "double", "square"],
        ),
        other => return Err(UnknownProblem(other.to_string())),
    };
    let parse = |src: &str| crate::syntax::parse_equation(src).expect("built-in example parses");
    let dataset = Dataset::new(
        basic.iter().map(|s| parse(s)).collect(),
        extra.iter().map(|s| parse(s)).collect(),
        background_for(bk),
    )
    .expect("built-in dataset is valid");
    Ok(Problem {
        name: name.to_string(),
        dataset,
    })
}

/// The reference solution programs per problem, in print order. Each must
/// reach full covering on its problem's dataset; the oracle test suite
/// evaluates them against the full shared background because the printed
/// `square` solution calls `double`, which the square problem's own
/// background does not include.
pub fn solution_oracles(name: &str) -> Result<Vec<Program>, UnknownProblem> {
    let sources: &[&str] = match name {
        "cube-bino" => &[
            "cube_bino(A,B) = cube(sum(A,B))",
            "cube_bino(A,B) = sum(prod(sum(sum(prod(A,A),prod(B,B)),sum(prod(B,A),prod(A,B))),B),prod(A,sum(sum(prod(B,A),prod(B,A)),sum(prod(B,B),prod(A,A)))))",
        ],
        "cube" => &[
            "cube(0) = 0; cube(s(A)) = sum(triple(sum(square(A),A)),s(cube(A)))",
            "cube(s(A)) = sum(sum(sum(triple(square(A)),s(A)),sum(A,cube(A))),A); cube(A) = A",
        ],
        "square-bino" => &[
            "square_bino(A,B) = square(sum(B,A))",
            "square_bino(A,B) = sum(sum(prod(A,A),double(prod(A,B))),prod(B,B))",
        ],
        "square" => &[
            "square(s(A)) = sum(square(A),s(double(A))); square(0) = 0",
            "square(0) = 0; square(s(A)) = sum(sum(A,square(A)),s(A))",
        ],
        "square-trino" => &[
            "square_trino(A,B,C) = square(sum(B,sum(C,A)))",
            "square_trino(A,B,C) = sum(prod(sum(C,A),sum(B,sum(sum(B,C),A))),prod(B,B))",
        ],
        "sum-n" => &[
            "sum_n(0) = 0; sum_n(s(A)) = s(sum(sum_n(A),A))",
            "sum_n(s(A)) = sum(s(A),sum_n(A)); sum_n(A) = A",
        ],
        "sum-n-square" => &[
            "sum_n_square(s(A)) = sum(sum(square(A),A),sum(s(sum_n_square(A)),A)); sum_n_square(A) = A",
            "sum_n_square(s(A)) = sum(sum(sum_n_square(A),s(square(A))),sum(A,A)); sum_n_square(0) = 0",
        ],
        other => return Err(UnknownProblem(other.to_string())),
    };
    Ok(sources
        .iter()
        .map(|src| parse_program(src).expect("built-in solution parses"))
        .collect())
}

#[derive(Debug, Clone)]
pub struct BatchRow {
    pub problem: String,
    pub runs: usize,
    pub successes: usize,
    pub failures: usize,
    pub reports: Vec<Result<RunReport, RunError>>,
}

impl BatchRow {
    pub fn success_percent(&self) -> f64 {
        100.0 * self.successes as f64 / self.runs as f64
    }
}

/// Five-number summary plus mean of the per-problem success percentages.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quartiles {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
    pub mean: f64,
}

/// Computes quartiles with inclusive halves: for an odd count the overall
/// median element belongs to both halves.
pub fn quartile_summary(values: &[f64]) -> Quartiles {
    assert!(!values.is_empty());
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("success percentages are finite"));
    let n = sorted.len();
    let median = median_of(&sorted);
    let (lower, upper) = if n % 2 == 1 {
        (&sorted[..=n / 2], &sorted[n / 2..])
    } else {
        (&sorted[..n / 2], &sorted[n / 2..])
    };
    Quartiles {
        min: sorted[0],
        q1: median_of(lower),
        median,
        q3: median_of(upper),
        max: sorted[n - 1],
        mean: sorted.iter().sum::<f64>() / n as f64,
    }
}

fn median_of(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

#[derive(Debug, Clone)]
pub struct BatchReport {
    pub algorithm: evolution::Algorithm,
    pub master_seed: u64,
    pub runs_per_problem: usize,
    pub rows: Vec<BatchRow>,
    pub quartiles: Quartiles,
    pub wall_time: Duration,
}

impl BatchReport {
    pub fn mean_success_percent(&self) -> f64 {
        self.quartiles.mean
    }
}

/// Seed of one batch run, derived from the master seed and the
/// (problem, run) pair so batches are reproducible and order-independent.
pub fn run_seed(master: u64, problem_idx: usize, run_idx: usize) -> u64 {
    evolution::derive_seed(master, 1 + problem_idx as u64, run_idx as u64)
}

/// Executes `runs_per_problem` independent seeded runs per problem with up
/// to `jobs` worker threads. Results are assembled by (problem, run) index,
/// so the report does not depend on the job count.
pub fn run_batch(
    problems: &[Problem],
    cfg: &RunConfig,
    runs_per_problem: usize,
    jobs: usize,
) -> BatchReport {
    assert!(runs_per_problem >= 1, "need at least one run per problem");
    let started = Instant::now();
    let tasks: Vec<(usize, usize)> = (0..problems.len())
        .flat_map(|p| (0..runs_per_problem).map(move |r| (p, r)))
        .collect();
    let results: Mutex<Vec<Option<Result<RunReport, RunError>>>> =
        Mutex::new(vec![None; tasks.len()]);
    let next = AtomicUsize::new(0);
    let workers = jobs.max(1).min(tasks.len().max(1));

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                loop {
                    let task_idx = next.fetch_add(1, Ordering::Relaxed);
                    if task_idx >= tasks.len() {
                        break;
                    }
                    let (p, r) = tasks[task_idx];
                    let mut run_cfg = cfg.clone();
                    run_cfg.seed = run_seed(cfg.seed, p, r);
                    let outcome = evolution::run(&problems[p].dataset, &run_cfg);
                    results.lock().expect("no panics hold the lock")[task_idx] = Some(outcome);
                }
            });
        }
    });

    let collected = results.into_inner().expect("workers joined");
    let mut rows = Vec::with_capacity(problems.len());
    for (p, problem) in problems.iter().enumerate() {
        let reports: Vec<Result<RunReport, RunError>> = (0..runs_per_problem)
            .map(|r| {
                collected[p * runs_per_problem + r]
                    .clone()
                    .expect("every task ran")
            })
            .collect();
        let successes = reports
            .iter()
            .filter(|r| matches!(r, Ok(report) if report.success))
            .count();
        rows.push(BatchRow {
            problem: problem.name.clone(),
            runs: runs_per_problem,
            successes,
            failures: runs_per_problem - successes,
            reports,
        });
    }
    let percents: Vec<f64> = rows.iter().map(BatchRow::success_percent).collect();
    BatchReport {
        algorithm: cfg.algorithm,
        master_seed: cfg.seed,
        runs_per_problem,
        rows,
        quartiles: quartile_summary(&percents),
        wall_time: started.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::{Algorithm, Fraction, covering_factor};
    use crate::rewrite::EvalBudget;
    use crate::syntax::print_equation;

    #[test]
    fn builtin_datasets_exist_and_validate() {
        for name in PROBLEM_NAMES {
            let p = builtin_problem(name).unwrap();
            assert_eq!(p.name, name);
            assert!(!p.dataset.positive_basic.is_empty());
        }
        assert!(builtin_problem("nope").is_err());
    }

    #[test]
    fn sum_n_problem_matches_reference_row() {
        let p = builtin_problem("sum-n").unwrap();
        let basic: Vec<String> = p
            .dataset
            .positive_basic
            .iter()
            .map(|e| print_equation(e, true))
            .collect();
        assert_eq!(basic, vec!["sum_n(0) = 0", "sum_n(1) = 1"]);
        let extra: Vec<String> = p
            .dataset
            .positive_extra
            .iter()
            .map(|e| print_equation(e, true))
            .collect();
        assert_eq!(extra, vec!["sum_n(2) = 3", "sum_n(3) = 6", "sum_n(4) = 10"]);
        assert_eq!(p.dataset.background.defined_symbols().len(), 1);
    }

    #[test]
    fn cube_and_square_trino_rows() {
        let cube = builtin_problem("cube").unwrap();
        assert_eq!(cube.dataset.positive_basic.len(), 2);
        assert_eq!(cube.dataset.positive_extra.len(), 2);
        let bk: Vec<String> = cube
            .dataset
            .background
            .defined_symbols()
            .iter()
            .map(|s| s.name().to_string())
            .collect();
        assert_eq!(bk, vec!["sum", "triple", "square"]);

        let trino = builtin_problem("square-trino").unwrap();
        assert_eq!(trino.dataset.positive_extra.len(), 10);
        assert_eq!(trino.dataset.target.arity(), 3);
    }

    #[test]
    fn cube_extra_example_behind_option() {
        let plain = builtin_problem("cube").unwrap();
        let extended = builtin_problem_with(
            "cube",
            BuiltinOptions {
                cube_extra_example: true,
            },
        )
        .unwrap();
        assert_eq!(
            plain.dataset.positive_extra.len() + 1,
            extended.dataset.positive_extra.len()
        );
        assert_eq!(
            print_equation(extended.dataset.positive_extra.last().unwrap(), true),
            "cube(4) = 64"
        );
    }

    #[test]
    fn every_reference_solution_reaches_full_covering() {
        let bk = full_background();
        for name in PROBLEM_NAMES {
            let problem = builtin_problem(name).unwrap();
            let mut dataset = problem.dataset.clone();
            dataset.background = bk.clone();
            for solution in solution_oracles(name).unwrap() {
                let f = covering_factor(&solution, &dataset, EvalBudget::default());
                assert!(
                    f.is_one(),
                    "{} solution `{}` covers only {}",
                    name,
                    solution,
                    f
                );
            }
        }
    }

    #[test]
    fn solutions_work_with_their_own_background_except_square() {
        // Only the first square solution needs the extended background.
        for name in PROBLEM_NAMES {
            let problem = builtin_problem(name).unwrap();
            for (i, solution) in solution_oracles(name).unwrap().iter().enumerate() {
                let f = covering_factor(solution, &problem.dataset, EvalBudget::default());
                if name == "square" && i == 0 {
                    assert!(
                        !f.is_one(),
                        "expected the double-based square solution to need the extended background"
                    );
                } else {
                    assert!(f.is_one(), "{} solution {} covers only {}", name, i, f);
                }
            }
        }
    }

    #[test]
    fn datasets_reprint_in_reference_decimal_form() {
        let expect: [(&str, &str); 2] = [
            ("cube-bino", "cube_bino(1,1) = 8"),
            ("square-bino", "square_bino(3,2) = 25"),
        ];
        for (problem, line) in expect {
            let p = builtin_problem(problem).unwrap();
            let printed: Vec<String> = p
                .dataset
                .positive_extra
                .iter()
                .map(|e| print_equation(e, true))
                .collect();
            assert!(printed.contains(&line.to_string()), "{:?}", printed);
        }
    }

    #[test]
    fn quartiles_match_reference_box_data() {
        // Success counts from the reference comparison tables.
        let gp = [96.0, 0.0, 81.0, 0.0, 28.0, 1.0, 0.0];
        let haea = [100.0, 8.0, 100.0, 99.0, 97.0, 100.0, 69.0];
        let q_gp = quartile_summary(&gp);
        assert_eq!(q_gp.min, 0.0);
        assert_eq!(q_gp.q1, 0.0);
        assert_eq!(q_gp.q3, 54.5);
        assert_eq!(q_gp.max, 96.0);
        assert!((q_gp.mean - 29.428571428571427).abs() < 1e-12);
        let q_haea = quartile_summary(&haea);
        assert_eq!(q_haea.min, 8.0);
        assert_eq!(q_haea.q1, 83.0);
        assert_eq!(q_haea.q3, 100.0);
        assert_eq!(q_haea.max, 100.0);
        assert!((q_haea.mean - 81.85714285714286).abs() < 1e-12);
    }

    #[test]
    fn batch_is_deterministic_and_counts_add_up() {
        let problems = vec![builtin_problem("sum-n").unwrap()];
        let mut cfg = RunConfig::new(Algorithm::HaEa, 99);
        cfg.min_population = 25;
        cfg.max_iterations = 4;
        let a = run_batch(&problems, &cfg, 3, 1);
        let b = run_batch(&problems, &cfg, 3, 3);
        assert_eq!(a.rows[0].successes, b.rows[0].successes);
        assert_eq!(a.rows[0].runs, 3);
        assert_eq!(a.rows[0].successes + a.rows[0].failures, 3);
        for (ra, rb) in a.rows[0].reports.iter().zip(&b.rows[0].reports) {
            let (ra, rb) = (ra.as_ref().unwrap(), rb.as_ref().unwrap());
            assert_eq!(ra.best_program, rb.best_program);
            assert_eq!(ra.trajectory, rb.trajectory);
        }
    }

    #[test]
    fn identity_solution_scores_two_fifths_on_sum_n() {
        let p = builtin_problem("sum-n").unwrap();
        let identity = parse_program("sum_n(A) = A").unwrap();
        assert_eq!(
            covering_factor(&identity, &p.dataset, EvalBudget::default()),
            Fraction::new(2, 5)
        );
    }
}
