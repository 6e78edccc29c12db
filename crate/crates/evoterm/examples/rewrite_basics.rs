//! Parsing terms and programs, single rewrite steps, and bounded
//! normalization of ground terms.
//!
//! ```bash
//! cargo run --example rewrite_basics
//! ```

use evoterm::program::Program;
use evoterm::rewrite::{EvalBudget, EvalOutcome, deduces, normalize, rewrite_step};
use evoterm::syntax::{parse_equation, parse_program, parse_term, print_term};

fn main() {
    let background = parse_program(
        "sum(N,0) = N\n\
         sum(N,s(M)) = s(sum(N,M))",
    )
    .unwrap();
    println!("background knowledge:\n{}\n", background);

    // Numerals are sugar for successor chains.
    let term = parse_term("sum(2,3)").unwrap();
    println!("start term : {}", print_term(&term, false));

    // Walk the reduction one leftmost-innermost step at a time.
    let empty = Program::empty();
    let mut current = term.clone();
    while let Some((next, rule_idx, at)) = rewrite_step(&empty, &background, &current) {
        println!(
            "  rewrites at {} via rule {}: {}",
            at,
            rule_idx + 1,
            print_term(&next, false)
        );
        current = next;
    }

    // normalize does the same under a step/search budget.
    match normalize(&empty, &background, &term, EvalBudget::default()) {
        EvalOutcome::NormalForm { term, steps_used } => println!(
            "normal form: {} (= {}) in {} steps\n",
            print_term(&term, false),
            print_term(&term, true),
            steps_used
        ),
        other => println!("unexpected outcome: {:?}", other),
    }

    // A non-terminating rule runs out of budget instead of hanging.
    let looping = parse_program("f(N) = f(s(N))").unwrap();
    let outcome = normalize(
        &looping,
        &empty,
        &parse_term("f(0)").unwrap(),
        EvalBudget::default(),
    );
    println!("looping rule f(N) = f(s(N)) on f(0): {:?}", outcome);

    // A partial definition leaves the term stuck.
    let partial = parse_program("square(0) = 0").unwrap();
    let outcome = normalize(
        &partial,
        &empty,
        &parse_term("square(s(0))").unwrap(),
        EvalBudget::default(),
    );
    println!("partial square on square(1): {:?}", outcome);

    // The deduction judgment behind the fitness function.
    let solution = parse_program("sum_n(0) = 0\nsum_n(s(A)) = s(sum(sum_n(A),A))").unwrap();
    for src in ["sum_n(3) = 6", "sum_n(4) = 10", "sum_n(4) = 11"] {
        let example = parse_equation(src).unwrap();
        println!(
            "deduces {:<14}: {}",
            src,
            deduces(&solution, &background, &example, EvalBudget::default())
        );
    }
}
