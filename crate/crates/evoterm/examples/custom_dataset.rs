//! Defining a problem of your own in the dataset file format, scoring a
//! hand-written program against it, and letting the engine induce one.
//!
//! ```bash
//! cargo run --release --example custom_dataset
//! ```

use evoterm::dataset::Dataset;
use evoterm::evolution::{Algorithm, RunConfig, covering_factor, run_haea};
use evoterm::rewrite::EvalBudget;
use evoterm::syntax::{parse_program, print_equation};

// Induce quadruple(n) = 4n with doubling as background knowledge.
const DATASET: &str = "\
% quadruple of a natural number
#basic
quadruple(0) = 0
quadruple(1) = 4
#extra
quadruple(2) = 8; quadruple(3) = 12
#background
double(0) = 0
double(s(N)) = s(s(double(N)))
";

fn main() {
    let dataset = Dataset::parse(DATASET).unwrap();
    println!("target symbol: {}", dataset.target);
    println!("examples in the union: {}", dataset.union_examples().len());

    // Score a hand-written candidate first.
    let by_hand = parse_program("quadruple(N) = double(double(N))").unwrap();
    let covering = covering_factor(&by_hand, &dataset, EvalBudget::default());
    println!(
        "hand-written `{}` covers {} = {:.2}\n",
        by_hand,
        covering,
        covering.to_f64()
    );

    // Now let the engine find one.
    let mut cfg = RunConfig::new(Algorithm::HaEa, 1);
    cfg.min_population = 200;
    let report = run_haea(&dataset, &cfg).unwrap();
    println!(
        "induced after {} iterations (success: {}):",
        report.iterations_used, report.success
    );
    for eq in report.best_program.equations() {
        println!("  {}", print_equation(eq, false));
    }
}
