//! The classic-GP baseline next to the adaptive algorithm on the same
//! problem and seed. The baseline evolves with subtree crossover and
//! mutation only, which leaves it unable to pull background-knowledge
//! functions into an individual.
//!
//! ```bash
//! cargo run --release --example gp_baseline
//! ```

use evoterm::benchmarks::builtin_problem;
use evoterm::evolution::{Algorithm, RunConfig, run};
use evoterm::syntax::print_equation;

fn main() {
    let problem = builtin_problem("square").unwrap();
    for algorithm in [Algorithm::Gp, Algorithm::HaEa] {
        let cfg = RunConfig::new(algorithm, 3);
        let report = run(&problem.dataset, &cfg).unwrap();
        println!(
            "{:<5} success: {:<5} best fitness: {:<5} iterations: {}",
            algorithm.label(),
            report.success,
            report.best_fitness.to_string(),
            report.iterations_used
        );
        for eq in report.best_program.equations() {
            println!("        {}", print_equation(eq, false));
        }
        println!();
    }
}
