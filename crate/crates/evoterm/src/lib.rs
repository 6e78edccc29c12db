//! evoterm — inductive synthesis of constructor-based rewrite programs
//! from input/output examples.
//!
//! The crate evolves small functional programs (ordered lists of rewrite
//! rules over Peano arithmetic) that deduce a set of ground example
//! equations, using an adaptive evolutionary algorithm that tunes its own
//! operator rates, plus a classic genetic-programming baseline.
//!
//! Start with the runnable examples:
//!
//! ```bash
//! cargo run --example rewrite_basics
//! cargo run --example generalize_enumeration
//! cargo run --example operator_tour
//! cargo run --example evolve_sum_n
//! cargo run --example gp_baseline
//! cargo run --example batch_experiments
//! cargo run --example custom_dataset
//! ```
//!
//! The thin `evoterm` binary exposes the same functionality as subcommands
//! (`run`, `batch`, `eval`, `generalize`, `problems`).

pub mod benchmarks;
pub mod cli;
pub mod dataset;
pub mod evolution;
pub mod generalize;
pub mod operators;
pub mod program;
pub mod report;
pub mod rewrite;
pub mod subst;
pub mod syntax;
pub mod term;

pub use dataset::{Dataset, Signature};
pub use evolution::{Algorithm, Fraction, RunConfig, RunReport, covering_factor, run};
pub use program::{Equation, Program};
pub use rewrite::{EvalBudget, EvalOutcome, deduces, normalize, rewrite_step};
pub use subst::{Substitution, match_term, unify};
pub use term::{Occurrence, Symbol, Term, VarGen};
