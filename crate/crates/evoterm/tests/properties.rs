//! Property tests over the data layer and the rewrite engine.

use evoterm::program::{Equation, Program};
use evoterm::rewrite::{EvalBudget, EvalOutcome, normalize, rewrite_step};
use evoterm::subst::{Substitution, match_term, unify};
use evoterm::syntax::{parse_program, parse_term, peano, peano_inverse, print_term};
use evoterm::term::Term;
use proptest::prelude::*;

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::zero()),
        prop_oneof![Just("A"), Just("B"), Just("N"), Just("M")].prop_map(Term::var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::succ),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| { Term::app(evoterm::term::Symbol::new("sum", 2), vec![a, b]) }),
            inner
                .clone()
                .prop_map(|a| Term::app(evoterm::term::Symbol::new("double", 1), vec![a])),
        ]
    })
}

fn arb_ground_term() -> impl Strategy<Value = Term> {
    (0u64..40).prop_map(peano)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn replace_restores_subterm(t in arb_term()) {
        for u in t.occurrences() {
            let sub = t.subterm_at(&u).unwrap().clone();
            prop_assert_eq!(t.replace_at(&u, sub).unwrap(), t.clone());
        }
    }

    #[test]
    fn parse_print_round_trip(t in arb_term()) {
        let plain = print_term(&t, false);
        prop_assert_eq!(parse_term(&plain).unwrap(), t.clone());
        let sugared = print_term(&t, true);
        prop_assert_eq!(parse_term(&sugared).unwrap(), t);
    }

    #[test]
    fn match_recovers_ground_instance(pattern in arb_term(), filler in arb_ground_term()) {
        let mut sigma = Substitution::identity();
        for (i, v) in pattern.variables().into_iter().enumerate() {
            sigma.bind(v, peano(i as u64).clone());
        }
        let _ = filler;
        let instance = sigma.apply(&pattern);
        let recovered = match_term(&pattern, &instance).expect("own instance matches");
        prop_assert_eq!(recovered.apply(&pattern), instance);
    }

    #[test]
    fn unify_on_renamed_variants(t in arb_term()) {
        let mut vargen = evoterm::term::VarGen::new();
        let renamed = Equation::new(t.clone(), t.clone()).rename_fresh(&mut vargen).lhs;
        let sigma = unify(&t, &renamed).expect("renamed variants unify");
        prop_assert_eq!(sigma.apply(&t), sigma.apply(&renamed));
    }

    #[test]
    fn variables_of_instance_come_from_bindings(t in arb_term(), k in 0u64..5) {
        let mut sigma = Substitution::identity();
        for v in t.variables() {
            sigma.bind(v, peano(k));
        }
        prop_assert!(sigma.apply(&t).is_ground() || t.variables().is_empty());
    }

    #[test]
    fn peano_round_trip(k in 0u64..1000) {
        prop_assert_eq!(peano_inverse(&peano(k)), Some(k));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// The evaluation machine performs exactly the step sequence the
    /// scan-based single-step function produces.
    #[test]
    fn machine_equals_step_iteration(a in 0u64..9, b in 0u64..9, c in 0u64..9) {
        let program = parse_program(
            "sum(N,0) = N\nsum(N,s(M)) = s(sum(N,M))\nprod(N,0) = 0\nprod(N,s(M)) = sum(prod(N,M),N)",
        ).unwrap();
        let empty = Program::empty();
        let start = parse_term(&format!("sum(prod({},{}),{})", a, b, c)).unwrap();

        let mut current = start.clone();
        let mut steps = 0usize;
        while let Some((next, _, _)) = rewrite_step(&program, &empty, &current) {
            current = next;
            steps += 1;
        }
        let budget = EvalBudget { max_rewrite_steps: 100_000, max_redex_searches: 100_000 };
        match normalize(&program, &empty, &start, budget) {
            EvalOutcome::NormalForm { term, steps_used } => {
                prop_assert_eq!(term.clone(), current);
                prop_assert_eq!(steps_used, steps);
                prop_assert_eq!(peano_inverse(&term), Some(a * b + c));
            }
            other => prop_assert!(false, "unexpected outcome {:?}", other),
        }
    }

    /// Normal forms have no redex.
    #[test]
    fn normal_forms_are_redex_free(a in 0u64..8, b in 0u64..8) {
        let program = parse_program(
            "sum(N,0) = N\nsum(N,s(M)) = s(sum(N,M))",
        ).unwrap();
        let empty = Program::empty();
        let start = parse_term(&format!("sum({},{})", a, b)).unwrap();
        if let EvalOutcome::NormalForm { term, .. } =
            normalize(&program, &empty, &start, EvalBudget::default())
        {
            prop_assert!(rewrite_step(&program, &empty, &term).is_none());
        } else {
            prop_assert!(false, "small sums normalize");
        }
    }
}
