//! Deterministic text reports. Files produced here are a pure function of
//! the run inputs (flags and seeds); wall-clock time never enters them.

use crate::benchmarks::BatchReport;
use crate::evolution::{Fraction, RunReport};
use crate::operators::OperatorId;
use crate::rewrite::EvalBudget;
use crate::syntax::print_equation;

fn fraction_line(f: &Fraction) -> String {
    format!("{} = {:.4}", f, f.to_f64())
}

/// Key/value header plus trajectory table for one run.
pub fn run_report_text(
    report: &RunReport,
    problem: &str,
    population: usize,
    budget: EvalBudget,
) -> String {
    let mut out = String::new();
    out.push_str("run-report\n");
    out.push_str(&format!("algorithm: {}\n", report.algorithm.label()));
    out.push_str(&format!("problem: {}\n", problem));
    out.push_str(&format!("seed: {}\n", report.seed));
    out.push_str(&format!("population: {}\n", population));
    out.push_str(&format!(
        "max-rewrite-steps: {}\n",
        budget.max_rewrite_steps
    ));
    out.push_str(&format!(
        "max-redex-searches: {}\n",
        budget.max_redex_searches
    ));
    out.push_str(&format!("iterations-used: {}\n", report.iterations_used));
    out.push_str(&format!("success: {}\n", report.success));
    out.push_str(&format!(
        "best-fitness: {}\n",
        fraction_line(&report.best_fitness)
    ));
    out.push_str("best-program:\n");
    for eq in report.best_program.equations() {
        out.push_str(&format!("  {}\n", print_equation(eq, false)));
    }
    out.push_str("best-program-sugared:\n");
    for eq in report.best_program.equations() {
        out.push_str(&format!("  {}\n", print_equation(eq, true)));
    }
    out.push_str("fitness-trajectory:\n");
    for (i, f) in report.trajectory.iter().enumerate() {
        out.push_str(&format!("  {}: {}\n", i, fraction_line(f)));
    }
    if let Some(rates) = &report.mean_rates {
        out.push_str("operator-rates-mean:\n");
        for op in OperatorId::ALL {
            out.push_str(&format!("  {}: {:.4}\n", op.label(), rates[op.index()]));
        }
    }
    out
}

/// One row per problem, tab-separated, machine readable.
pub fn batch_table_tsv(batch: &BatchReport) -> String {
    let mut out = String::from("problem\truns\tsuccesses\tfailures\tsuccess-percent\n");
    for row in &batch.rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{:.1}\n",
            row.problem,
            row.runs,
            row.successes,
            row.failures,
            row.success_percent()
        ));
    }
    out
}

/// Text summary shaped like the reference success-count tables, with a
/// proportional bar per problem and the quartile row of the success
/// percentages.
pub fn batch_summary_text(batch: &BatchReport) -> String {
    let mut out = String::new();
    out.push_str("batch-report\n");
    out.push_str(&format!("algorithm: {}\n", batch.algorithm.label()));
    out.push_str(&format!("master-seed: {}\n", batch.master_seed));
    out.push_str(&format!("runs-per-problem: {}\n", batch.runs_per_problem));
    let name_width = batch
        .rows
        .iter()
        .map(|r| r.problem.len())
        .max()
        .unwrap_or(8)
        .max("problem".len());
    out.push_str(&format!(
        "{:<name_width$}  {:>4} {:>4}  summary\n",
        "problem", "ok", "fail"
    ));
    for row in &batch.rows {
        let filled = if row.runs == 0 {
            0
        } else {
            (row.successes * 20).div_ceil(row.runs).min(20)
        };
        let bar: String = std::iter::repeat_n('#', filled)
            .chain(std::iter::repeat_n('.', 20 - filled))
            .collect();
        out.push_str(&format!(
            "{:<name_width$}  {:>4} {:>4}  [{}] {:.1}%\n",
            row.problem,
            row.successes,
            row.failures,
            bar,
            row.success_percent()
        ));
    }
    let q = batch.quartiles;
    out.push_str(&format!(
        "quartiles: min={:.2} q1={:.2} median={:.2} q3={:.2} max={:.2} mean={:.2}\n",
        q.min, q.q1, q.median, q.q3, q.max, q.mean
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks::{builtin_problem, run_batch};
    use crate::evolution::{Algorithm, RunConfig, run_haea};

    #[test]
    fn reports_are_deterministic_text() {
        let problem = builtin_problem("sum-n").unwrap();
        let mut cfg = RunConfig::new(Algorithm::HaEa, 8);
        cfg.min_population = 25;
        cfg.max_iterations = 3;
        let a = run_haea(&problem.dataset, &cfg).unwrap();
        let b = run_haea(&problem.dataset, &cfg).unwrap();
        let ta = run_report_text(&a, "sum-n", cfg.min_population, cfg.budget);
        let tb = run_report_text(&b, "sum-n", cfg.min_population, cfg.budget);
        assert_eq!(ta, tb);
        assert!(ta.contains("best-program:"));
        assert!(ta.contains("fitness-trajectory:"));
        assert!(ta.contains("operator-rates-mean:"));

        let batch = run_batch(&[problem], &cfg, 2, 2);
        let tsv = batch_table_tsv(&batch);
        assert!(tsv.starts_with("problem\truns\t"));
        assert_eq!(tsv.lines().count(), 2);
        let summary = batch_summary_text(&batch);
        assert!(summary.contains("quartiles: "));
    }
}
