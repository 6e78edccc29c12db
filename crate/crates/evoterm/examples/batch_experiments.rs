//! A small seeded batch over two problems, with the success table and the
//! quartile summary of per-problem success percentages.
//!
//! ```bash
//! cargo run --release --example batch_experiments
//! ```

use evoterm::benchmarks::{builtin_problem, run_batch};
use evoterm::evolution::{Algorithm, RunConfig};
use evoterm::report::{batch_summary_text, batch_table_tsv};

fn main() {
    let problems = vec![
        builtin_problem("sum-n").unwrap(),
        builtin_problem("square-bino").unwrap(),
    ];
    let cfg = RunConfig::new(Algorithm::HaEa, 42);
    // 5 runs per problem on up to 4 worker threads; the report is
    // identical no matter how many threads execute it.
    let batch = run_batch(&problems, &cfg, 5, 4);

    print!("{}", batch_summary_text(&batch));
    println!("\nmachine-readable form:\n{}", batch_table_tsv(&batch));

    for row in &batch.rows {
        println!("{} iterations per run:", row.problem);
        for outcome in &row.reports {
            match outcome {
                Ok(report) => println!(
                    "  seed {:<22} success {:<5} after {:>3} iterations",
                    report.seed, report.success, report.iterations_used
                ),
                Err(err) => println!("  run failed: {}", err),
            }
        }
    }
}
