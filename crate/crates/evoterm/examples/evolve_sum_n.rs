//! One adaptive run on the sum-of-the-first-n-naturals problem, printing
//! the fitness trajectory, the induced program and the final operator
//! rates.
//!
//! ```bash
//! cargo run --release --example evolve_sum_n
//! ```

use evoterm::benchmarks::builtin_problem;
use evoterm::evolution::{Algorithm, RunConfig, run_haea};
use evoterm::operators::OperatorId;
use evoterm::syntax::print_equation;

fn main() {
    let problem = builtin_problem("sum-n").unwrap();
    println!("dataset:\n{}", problem.dataset.to_file_format());

    let cfg = RunConfig::new(Algorithm::HaEa, 7);
    let report = run_haea(&problem.dataset, &cfg).unwrap();

    println!("success: {}", report.success);
    println!("iterations used: {}", report.iterations_used);
    println!("fitness trajectory:");
    for (i, f) in report.trajectory.iter().enumerate() {
        println!("  after iteration {:>3}: {}", i, f);
    }
    println!("best program:");
    for eq in report.best_program.equations() {
        println!("  {}", print_equation(eq, false));
    }
    if let Some(rates) = report.mean_rates {
        println!("population mean operator rates:");
        for op in OperatorId::ALL {
            println!("  {:<18} {:.4}", op.label(), rates[op.index()]);
        }
    }
    println!("wall time: {:.3}s", report.wall_time.as_secs_f64());
}
