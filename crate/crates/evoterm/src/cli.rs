//! Command-line surface: `run`, `batch`, `eval`, `generalize`, `problems`.
//!
//! `execute` returns the text for stdout and writes report files as a side
//! effect. Reports are written only after a command fully succeeds, so a
//! failing invocation leaves no partial files behind.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::benchmarks::{
    BuiltinOptions, PROBLEM_NAMES, Problem, builtin_problem_with, run_batch, run_seed,
};
use crate::dataset::Dataset;
use crate::evolution::{Algorithm, ChildSelection, RunConfig, covering_factor};
use crate::generalize::{generalizations, restricted_generalizations};
use crate::report::{batch_summary_text, batch_table_tsv, run_report_text};
use crate::rewrite::{EvalOutcome, normalize};
use crate::syntax::{parse_equation, parse_program, print_equation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub message: String,
}

impl CliError {
    fn new(message: impl Into<String>) -> CliError {
        CliError {
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for CliError {}

const USAGE: &str = "\
usage: evoterm <command> [flags]

commands:
  run         one seeded evolution run
                --problem <name> | --dataset <path>   (exactly one)
                --algorithm haea|gp                   (required)
                [--seed N] [--out DIR]
                [--population N] [--iterations N]
                [--max-basic N] [--max-recursive N] [--max-nodes N]
                [--max-steps N] [--max-searches N]
                [--gp-depth N] [--tournament-size N]
                [--child-selection uniform|best] [--with-cube-extra]
  batch       many seeded runs over several problems
                --runs N --algorithm haea|gp
                [--problems all|name,name,...] [--seed N] [--jobs N]
                [--out DIR] plus the run overrides above
  eval        covering factor of a program file against a dataset
                --program <path> (--problem <name> | --dataset <path>)
                [--max-steps N] [--max-searches N]
  generalize  enumerate (restricted) generalizations of a ground equation
                --example \"<equation>\" [--restricted]
  problems    list the built-in problems
                [--export DIR] [--with-cube-extra]
";

/// Flags that never take a value.
const BOOL_FLAGS: [&str; 3] = ["--restricted", "--with-cube-extra", "--help"];

struct Flags {
    values: Vec<(String, String)>,
    switches: Vec<String>,
}

impl Flags {
    fn parse(args: &[String]) -> Result<Flags, CliError> {
        let mut values = Vec::new();
        let mut switches = Vec::new();
        let mut i = 0;
        while i < args.len() {
            let arg = &args[i];
            if !arg.starts_with("--") {
                return Err(CliError::new(format!(
                    "unexpected argument `{}` (flags start with --)",
                    arg
                )));
            }
            if BOOL_FLAGS.contains(&arg.as_str()) {
                switches.push(arg.clone());
                i += 1;
                continue;
            }
            let value = args
                .get(i + 1)
                .ok_or_else(|| CliError::new(format!("flag {} needs a value", arg)))?;
            values.push((arg.clone(), value.clone()));
            i += 2;
        }
        Ok(Flags { values, switches })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.values
            .iter()
            .rev()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    fn has(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }

    fn require(&self, name: &str) -> Result<&str, CliError> {
        self.get(name)
            .ok_or_else(|| CliError::new(format!("missing required flag {}", name)))
    }

    fn parse_number(&self, name: &str) -> Result<Option<u64>, CliError> {
        match self.get(name) {
            None => Ok(None),
            Some(text) => text.parse::<u64>().map(Some).map_err(|_| {
                CliError::new(format!("flag {} expects a number, got `{}`", name, text))
            }),
        }
    }

    fn reject_unknown(&self, known: &[&str]) -> Result<(), CliError> {
        for (k, _) in &self.values {
            if !known.contains(&k.as_str()) {
                return Err(CliError::new(format!("unknown flag {}", k)));
            }
        }
        for s in &self.switches {
            if s != "--help" && !known.contains(&s.as_str()) {
                return Err(CliError::new(format!("unknown flag {}", s)));
            }
        }
        Ok(())
    }
}

/// Runs one CLI invocation; returns the stdout text.
pub fn execute(args: &[String]) -> Result<String, CliError> {
    let Some(command) = args.first() else {
        return Ok(USAGE.to_string());
    };
    let rest = &args[1..];
    match command.as_str() {
        "run" => cmd_run(rest),
        "batch" => cmd_batch(rest),
        "eval" => cmd_eval(rest),
        "generalize" => cmd_generalize(rest),
        "problems" => cmd_problems(rest),
        "help" | "--help" => Ok(USAGE.to_string()),
        other => Err(CliError::new(format!(
            "unknown command `{}`; run `evoterm help`",
            other
        ))),
    }
}

fn builtin_options(flags: &Flags) -> BuiltinOptions {
    BuiltinOptions {
        cube_extra_example: flags.has("--with-cube-extra"),
    }
}

fn load_problem(flags: &Flags) -> Result<Problem, CliError> {
    match (flags.get("--problem"), flags.get("--dataset")) {
        (Some(name), None) => builtin_problem_with(name, builtin_options(flags))
            .map_err(|e| CliError::new(e.to_string())),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::new(format!("cannot read dataset `{}`: {}", path, e)))?;
            let dataset = Dataset::parse(&text)
                .map_err(|e| CliError::new(format!("dataset `{}`: {}", path, e)))?;
            let stem = Path::new(path)
                .file_stem()
                .map(|s| s.to_string_lossy().to_string())
                .unwrap_or_else(|| "dataset".to_string());
            Ok(Problem {
                name: stem,
                dataset,
            })
        }
        (Some(_), Some(_)) => Err(CliError::new(
            "--problem and --dataset are mutually exclusive",
        )),
        (None, None) => Err(CliError::new("one of --problem or --dataset is required")),
    }
}

fn config_from_flags(flags: &Flags) -> Result<RunConfig, CliError> {
    let algorithm: Algorithm = flags
        .require("--algorithm")?
        .parse()
        .map_err(CliError::new)?;
    let seed = flags.parse_number("--seed")?.unwrap_or(0);
    let mut cfg = RunConfig::new(algorithm, seed);
    if let Some(v) = flags.parse_number("--population")? {
        if v == 0 {
            return Err(CliError::new("--population must be at least 1"));
        }
        cfg.min_population = v as usize;
    }
    if let Some(v) = flags.parse_number("--iterations")? {
        cfg.max_iterations = v as usize;
    }
    if let Some(v) = flags.parse_number("--max-basic")? {
        cfg.limits.max_basic_equations = v as usize;
    }
    if let Some(v) = flags.parse_number("--max-recursive")? {
        cfg.limits.max_recursive_equations = v as usize;
    }
    if let Some(v) = flags.parse_number("--max-nodes")? {
        cfg.limits.max_equation_nodes = v as usize;
    }
    if let Some(v) = flags.parse_number("--max-steps")? {
        cfg.budget.max_rewrite_steps = v as usize;
    }
    if let Some(v) = flags.parse_number("--max-searches")? {
        cfg.budget.max_redex_searches = v as usize;
    }
    if let Some(v) = flags.parse_number("--gp-depth")? {
        if v == 0 {
            return Err(CliError::new("--gp-depth must be at least 1"));
        }
        cfg.gp_max_depth = v as usize;
    }
    if let Some(v) = flags.parse_number("--tournament-size")? {
        if v == 0 {
            return Err(CliError::new("--tournament-size must be at least 1"));
        }
        cfg.tournament_size = v as usize;
    }
    if let Some(v) = flags.get("--child-selection") {
        cfg.child_selection = match v {
            "uniform" => ChildSelection::Uniform,
            "best" => ChildSelection::Best,
            other => {
                return Err(CliError::new(format!(
                    "--child-selection expects uniform or best, got `{}`",
                    other
                )));
            }
        };
    }
    Ok(cfg)
}

const RUN_FLAGS: [&str; 16] = [
    "--problem",
    "--dataset",
    "--algorithm",
    "--seed",
    "--out",
    "--population",
    "--iterations",
    "--max-basic",
    "--max-recursive",
    "--max-nodes",
    "--max-steps",
    "--max-searches",
    "--gp-depth",
    "--tournament-size",
    "--child-selection",
    "--with-cube-extra",
];

fn out_dir(flags: &Flags) -> PathBuf {
    PathBuf::from(flags.get("--out").unwrap_or("reports"))
}

fn write_report(path: &Path, content: &str) -> Result<(), CliError> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)
            .map_err(|e| CliError::new(format!("cannot create `{}`: {}", parent.display(), e)))?;
    }
    std::fs::write(path, content)
        .map_err(|e| CliError::new(format!("cannot write `{}`: {}", path.display(), e)))
}

fn cmd_run(args: &[String]) -> Result<String, CliError> {
    let flags = Flags::parse(args)?;
    flags.reject_unknown(&RUN_FLAGS)?;
    let problem = load_problem(&flags)?;
    let cfg = config_from_flags(&flags)?;
    let report =
        crate::evolution::run(&problem.dataset, &cfg).map_err(|e| CliError::new(e.to_string()))?;

    let text = run_report_text(&report, &problem.name, cfg.min_population, cfg.budget);
    let path = out_dir(&flags).join(format!(
        "run_{}_{}_seed{}.txt",
        cfg.algorithm.label(),
        problem.name,
        cfg.seed
    ));
    write_report(&path, &text)?;

    let mut out = String::new();
    out.push_str(&format!("problem: {}\n", problem.name));
    out.push_str(&format!("algorithm: {}\n", cfg.algorithm.label()));
    out.push_str(&format!("seed: {}\n", cfg.seed));
    out.push_str(&format!("success: {}\n", report.success));
    out.push_str(&format!("iterations used: {}\n", report.iterations_used));
    out.push_str(&format!(
        "best fitness: {} = {:.4}\n",
        report.best_fitness,
        report.best_fitness.to_f64()
    ));
    out.push_str("best program:\n");
    for eq in report.best_program.equations() {
        out.push_str(&format!("  {}\n", print_equation(eq, false)));
    }
    out.push_str(&format!(
        "wall time: {:.3}s\n",
        report.wall_time.as_secs_f64()
    ));
    out.push_str(&format!("report: {}\n", path.display()));
    Ok(out)
}

const BATCH_FLAGS: [&str; 17] = [
    "--problems",
    "--runs",
    "--jobs",
    "--algorithm",
    "--seed",
    "--out",
    "--population",
    "--iterations",
    "--max-basic",
    "--max-recursive",
    "--max-nodes",
    "--max-steps",
    "--max-searches",
    "--gp-depth",
    "--tournament-size",
    "--child-selection",
    "--with-cube-extra",
];

fn cmd_batch(args: &[String]) -> Result<String, CliError> {
    let flags = Flags::parse(args)?;
    flags.reject_unknown(&BATCH_FLAGS)?;
    let runs = flags
        .parse_number("--runs")?
        .ok_or_else(|| CliError::new("missing required flag --runs"))? as usize;
    if runs == 0 {
        return Err(CliError::new("--runs must be at least 1"));
    }
    let jobs = flags.parse_number("--jobs")?.unwrap_or(1).max(1) as usize;
    let cfg = config_from_flags(&flags)?;

    let selector = flags.get("--problems").unwrap_or("all");
    let names: Vec<&str> = if selector == "all" {
        PROBLEM_NAMES.to_vec()
    } else {
        selector.split(',').map(str::trim).collect()
    };
    let mut problems = Vec::new();
    for name in names {
        problems.push(
            builtin_problem_with(name, builtin_options(&flags))
                .map_err(|e| CliError::new(e.to_string()))?,
        );
    }

    let batch = run_batch(&problems, &cfg, runs, jobs);

    let dir = out_dir(&flags);
    let base = format!("batch_{}_seed{}", cfg.algorithm.label(), cfg.seed);
    let summary = batch_summary_text(&batch);
    write_report(&dir.join(format!("{}.txt", base)), &summary)?;
    write_report(&dir.join(format!("{}.tsv", base)), &batch_table_tsv(&batch))?;
    for (p, row) in batch.rows.iter().enumerate() {
        for (r, outcome) in row.reports.iter().enumerate() {
            if let Ok(report) = outcome {
                let text = run_report_text(report, &row.problem, cfg.min_population, cfg.budget);
                let path = dir.join(format!(
                    "run_{}_{}_seed{}.txt",
                    cfg.algorithm.label(),
                    row.problem,
                    run_seed(cfg.seed, p, r)
                ));
                write_report(&path, &text)?;
            }
        }
    }

    let mut out = summary;
    out.push_str(&format!(
        "wall time: {:.3}s\n",
        batch.wall_time.as_secs_f64()
    ));
    out.push_str(&format!("reports: {}\n", dir.display()));
    Ok(out)
}

const EVAL_FLAGS: [&str; 6] = [
    "--program",
    "--problem",
    "--dataset",
    "--max-steps",
    "--max-searches",
    "--with-cube-extra",
];

fn cmd_eval(args: &[String]) -> Result<String, CliError> {
    let flags = Flags::parse(args)?;
    flags.reject_unknown(&EVAL_FLAGS)?;
    let program_path = flags.require("--program")?;
    let text = std::fs::read_to_string(program_path)
        .map_err(|e| CliError::new(format!("cannot read program `{}`: {}", program_path, e)))?;
    let program = parse_program(&text)
        .map_err(|e| CliError::new(format!("program `{}`: {}", program_path, e)))?;
    for eq in program.equations() {
        if !eq.is_program_legal() {
            return Err(CliError::new(format!(
                "program `{}`: equation `{}` is not program-legal",
                program_path, eq
            )));
        }
    }
    let problem = load_problem(&flags)?;
    let mut budget = crate::rewrite::EvalBudget::default();
    if let Some(v) = flags.parse_number("--max-steps")? {
        budget.max_rewrite_steps = v as usize;
    }
    if let Some(v) = flags.parse_number("--max-searches")? {
        budget.max_redex_searches = v as usize;
    }

    let mut out = String::new();
    for example in problem.dataset.union_examples() {
        let status = match normalize(&program, &problem.dataset.background, &example.lhs, budget) {
            EvalOutcome::NormalForm { term, .. } if term == example.rhs => "deduced",
            EvalOutcome::NormalForm { .. } | EvalOutcome::Stuck(_) => "failed",
            EvalOutcome::BudgetExhausted => "budget-exhausted",
        };
        out.push_str(&format!("{}  {}\n", print_equation(example, true), status));
    }
    let covering = covering_factor(&program, &problem.dataset, budget);
    out.push_str(&format!(
        "covering factor: {} = {:.4}\n",
        covering,
        covering.to_f64()
    ));
    Ok(out)
}

fn cmd_generalize(args: &[String]) -> Result<String, CliError> {
    let flags = Flags::parse(args)?;
    flags.reject_unknown(&["--example", "--restricted"])?;
    let source = flags.require("--example")?;
    let equation = parse_equation(source).map_err(|e| CliError::new(e.to_string()))?;
    if !equation.is_ground() {
        return Err(CliError::new(format!(
            "example `{}` must be ground (no variables)",
            equation
        )));
    }
    let restricted = flags.has("--restricted");
    let set = if restricted {
        restricted_generalizations(&equation)
    } else {
        generalizations(&equation)
    };
    let mut out = String::new();
    for item in &set.items {
        out.push_str(&format!("{}\n", print_equation(item, false)));
    }
    out.push_str(&format!(
        "{} {}generalizations\n",
        set.items.len(),
        if restricted { "restricted " } else { "" }
    ));
    Ok(out)
}

fn cmd_problems(args: &[String]) -> Result<String, CliError> {
    let flags = Flags::parse(args)?;
    flags.reject_unknown(&["--export", "--with-cube-extra"])?;
    let mut out = String::new();
    let mut exported = Vec::new();
    for name in PROBLEM_NAMES {
        let problem = builtin_problem_with(name, builtin_options(&flags))
            .map_err(|e| CliError::new(e.to_string()))?;
        let bk: Vec<String> = problem
            .dataset
            .background
            .defined_symbols()
            .iter()
            .map(|s| s.name().to_string())
            .collect();
        out.push_str(&format!(
            "{:<14} basic {:>2}  extra {:>2}  background {}\n",
            name,
            problem.dataset.positive_basic.len(),
            problem.dataset.positive_extra.len(),
            bk.join(",")
        ));
        if let Some(dir) = flags.get("--export") {
            let path = PathBuf::from(dir).join(format!("{}.dataset", name));
            write_report(&path, &problem.dataset.to_file_format())?;
            exported.push(path);
        }
    }
    for path in exported {
        out.push_str(&format!("exported: {}\n", path.display()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn usage_and_unknown_command() {
        assert!(execute(&[]).unwrap().contains("usage:"));
        assert!(execute(&args(&["help"])).unwrap().contains("usage:"));
        assert!(execute(&args(&["frobnicate"])).is_err());
    }

    #[test]
    fn generalize_counts_match_reference_tables() {
        let out = execute(&args(&["generalize", "--example", "square_bino(0,0) = 0"])).unwrap();
        assert!(out.trim_end().ends_with("17 generalizations"));
        assert_eq!(out.lines().count(), 18);

        let out = execute(&args(&[
            "generalize",
            "--example",
            "square_bino(0,0) = 0",
            "--restricted",
        ]))
        .unwrap();
        assert!(out.trim_end().ends_with("10 restricted generalizations"));
        assert_eq!(out.lines().count(), 11);
    }

    #[test]
    fn generalize_rejects_non_ground() {
        let err = execute(&args(&["generalize", "--example", "f(X) = 0"])).unwrap_err();
        assert!(err.message.contains("ground"));
    }

    #[test]
    fn eval_missing_file_fails() {
        let err = execute(&args(&[
            "eval",
            "--program",
            "/no/such/file.prog",
            "--problem",
            "sum-n",
        ]))
        .unwrap_err();
        assert!(err.message.contains("cannot read"));
    }

    #[test]
    fn run_rejects_bad_flags() {
        assert!(execute(&args(&["run", "--problem", "sum-n"])).is_err());
        assert!(execute(&args(&["run", "--problem", "nope", "--algorithm", "haea"])).is_err());
        assert!(
            execute(&args(&[
                "run",
                "--dataset",
                "missing.txt",
                "--algorithm",
                "haea"
            ]))
            .is_err()
        );
        assert!(execute(&args(&["batch", "--runs", "0", "--algorithm", "gp"])).is_err());
    }

    #[test]
    fn problems_lists_all_seven() {
        let out = execute(&args(&["problems"])).unwrap();
        for name in PROBLEM_NAMES {
            assert!(out.contains(name));
        }
    }
}
