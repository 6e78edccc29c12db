//! A tour of the nine variation operators on small individuals.
//!
//! ```bash
//! cargo run --example operator_tour
//! ```

use evoterm::dataset::Signature;
use evoterm::operators::{Limits, OpContext, OperatorId, apply_operator, equalization_candidates};
use evoterm::program::Program;
use evoterm::syntax::{parse_equation, parse_program};
use evoterm::term::Symbol;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn show(label: &str, programs: &[Program]) {
    println!("{}:", label);
    for (i, p) in programs.iter().enumerate() {
        for (j, eq) in p.equations().iter().enumerate() {
            let prefix = if j == 0 {
                format!("  #{} ", i + 1)
            } else {
                "     ".to_string()
            };
            println!("{}{}", prefix, eq);
        }
    }
}

fn main() {
    let background = parse_program(
        "sum(N,0) = N\nsum(N,s(M)) = s(sum(N,M))\n\
         double(0) = 0\ndouble(s(N)) = s(s(double(N)))",
    )
    .unwrap();
    let signature = Signature::new(
        vec![Symbol::new("0", 0), Symbol::new("s", 1)],
        vec![
            Symbol::new("sum", 2),
            Symbol::new("double", 1),
            Symbol::new("sum_n", 1),
        ],
    );
    let ctx = OpContext {
        background: &background,
        signature: &signature,
        limits: Limits::default(),
        gp_depth: 2,
    };

    let parent = parse_program("sum_n(N) = N\nsum_n(s(N)) = sum(N,sum_n(N))").unwrap();
    let mate = parse_program("sum_n(s(N)) = s(sum(N,sum_n(N)))\nsum_n(0) = 1").unwrap();
    show("parent", std::slice::from_ref(&parent));
    show("mate", std::slice::from_ref(&mate));
    println!();

    for op in OperatorId::ALL {
        // A fixed seed per operator keeps the tour reproducible.
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let out = apply_operator(op, &parent, Some(&mate), &ctx, &mut rng);
        println!(
            "== {} (applied: {}, offspring: {})",
            op.label(),
            out.applied,
            out.offspring.len()
        );
        show("offspring", &out.offspring);
        println!();
    }

    // The equalization candidate set for the documented receptor/emitter pair.
    let receptor = parse_equation("sum_n(s(A)) = sum(s(A),A)").unwrap();
    let emitter = parse_equation("sum_n(A) = A").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    println!(
        "equalization candidates for receptor `{}`, emitter `{}`:",
        receptor, emitter
    );
    for cand in equalization_candidates(&receptor, &emitter, &Limits::default(), &mut rng) {
        println!("  {}", cand);
    }
}
