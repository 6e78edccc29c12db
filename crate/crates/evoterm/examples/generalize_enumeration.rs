//! Enumerating the generalizations and restricted generalizations of a
//! ground example equation — the reference 17- and 10-row tables for
//! `square_bino(0,0) = 0`.
//!
//! ```bash
//! cargo run --example generalize_enumeration
//! ```

use evoterm::generalize::{generalizations, restricted_generalizations};
use evoterm::syntax::parse_equation;

fn main() {
    let example = parse_equation("square_bino(0,0) = 0").unwrap();

    let all = generalizations(&example);
    println!("generalizations of {}:", example);
    for (i, eq) in all.items.iter().enumerate() {
        println!("{:>3}  {}", i + 1, eq);
    }
    println!("total: {}\n", all.len());

    let restricted = restricted_generalizations(&example);
    println!("restricted generalizations (program-legal only):");
    for (i, eq) in restricted.items.iter().enumerate() {
        println!("{:>3}  {}", i + 1, eq);
    }
    println!("total: {}\n", restricted.len());

    // The restricted set of every example seeds the initial population.
    let richer = parse_equation("sum_n(2) = 3").unwrap();
    let seeds = restricted_generalizations(&richer);
    println!("seeds from {}:", richer);
    for eq in &seeds.items {
        println!("     {}", eq);
    }
}
