//! Bounded eager rewriting: leftmost-innermost normalization of ground
//! terms under a program plus background knowledge, and the deduction
//! judgment between a program and an example.
//!
//! Rule priority is the program's equation order, with the individual's
//! equations tried before the background knowledge. At a given redex the
//! first matching rule in that order applies.

use std::rc::Rc;

use crate::dataset::Example;
use crate::program::{Equation, Program};
use crate::subst::{Substitution, match_term};
use crate::term::{Occurrence, Symbol, Term};

/// Work bounds for one normalization. One redex search is one full scan
/// attempt locating the next redex, so a normalization that applies `k`
/// steps spends `k + 1` searches (the last scan finds nothing).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalBudget {
    pub max_rewrite_steps: usize,
    pub max_redex_searches: usize,
}

impl Default for EvalBudget {
    fn default() -> Self {
        EvalBudget {
            max_rewrite_steps: 500,
            max_redex_searches: 500,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalOutcome {
    /// A redex-free term was reached. `Stuck` is reported instead when the
    /// result still contains defined-function symbols.
    NormalForm {
        term: Term,
        steps_used: usize,
    },
    BudgetExhausted,
    Stuck(Term),
}

impl EvalOutcome {
    pub fn normal_form(&self) -> Option<&Term> {
        match self {
            EvalOutcome::NormalForm { term, .. } => Some(term),
            _ => None,
        }
    }
}

fn combined_rules<'a>(program: &'a Program, background: &'a Program) -> Vec<&'a Equation> {
    program
        .equations()
        .iter()
        .chain(background.equations().iter())
        .collect()
}

fn first_matching_rule(rules: &[&Equation], term: &Term) -> Option<(usize, Substitution)> {
    let root = term.root_symbol()?;
    for (i, rule) in rules.iter().enumerate() {
        if rule.lhs.root_symbol() == Some(root)
            && let Some(sigma) = match_term(&rule.lhs, term)
        {
            return Some((i, sigma));
        }
    }
    None
}

/// One rewrite step at the leftmost-innermost redex, or `None` when the
/// term has no redex. Returns the rewritten term, the index of the applied
/// rule in program-then-background order, and the redex occurrence.
pub fn rewrite_step(
    program: &Program,
    background: &Program,
    term: &Term,
) -> Option<(Term, usize, Occurrence)> {
    let rules = combined_rules(program, background);
    let (rule_idx, occurrence, sigma) = find_innermost_redex(&rules, term, Occurrence::root())?;
    let rule = rules[rule_idx];
    let replacement = sigma.apply(&rule.rhs);
    let rewritten = term
        .replace_at(&occurrence, replacement)
        .expect("redex occurrence is valid");
    Some((rewritten, rule_idx, occurrence))
}

fn find_innermost_redex(
    rules: &[&Equation],
    term: &Term,
    at: Occurrence,
) -> Option<(usize, Occurrence, Substitution)> {
    if let Term::App(_, args) = term {
        for (i, arg) in args.iter().enumerate() {
            let hit = find_innermost_redex(rules, arg, at.child(i as u32 + 1));
            if hit.is_some() {
                return hit;
            }
        }
        if let Some((rule_idx, sigma)) = first_matching_rule(rules, term) {
            return Some((rule_idx, at, sigma));
        }
    }
    None
}

/// Normalizes a ground term under `program` plus `background` within the
/// budget. Implemented as an eager evaluation machine that reproduces the
/// scan-based step sequence without rescanning normalized prefixes: when a
/// rule fires, only the structure of its rhs is evaluated; variables are
/// bound to terms the innermost strategy already normalized, so they
/// re-enter as finished values.
pub fn normalize(
    program: &Program,
    background: &Program,
    term: &Term,
    budget: EvalBudget,
) -> EvalOutcome {
    let rules = combined_rules(program, background);
    let defined: Vec<&Symbol> = {
        let mut out: Vec<&Symbol> = Vec::new();
        for rule in &rules {
            if let Some(sym) = rule.lhs.root_symbol()
                && !out.contains(&sym)
            {
                out.push(sym);
            }
        }
        out
    };

    struct BuildFrame<'r> {
        symbol: Symbol,
        env: Rc<Substitution>,
        pending: std::slice::Iter<'r, Term>,
        done: Vec<Term>,
    }

    enum Ctl<'r> {
        /// A node of rule-rhs (or input) structure under an environment.
        Eval(&'r Term, Rc<Substitution>),
        /// A fully normalized value.
        Value(Term),
    }

    let empty_env = Rc::new(Substitution::identity());
    let mut steps_used = 0usize;
    let mut searches_used = 0usize;
    let mut stack: Vec<BuildFrame<'_>> = Vec::new();
    let mut ctl = Ctl::Eval(term, empty_env);

    loop {
        ctl = match ctl {
            Ctl::Eval(node, env) => match node {
                // Bound variables carry already-normal terms.
                Term::Var(name) => Ctl::Value(match env.get(name) {
                    Some(bound) => bound.clone(),
                    None => node.clone(),
                }),
                Term::App(symbol, args) => {
                    if args.is_empty() {
                        match reduce_once(
                            &rules,
                            Term::App(symbol.clone(), [].into()),
                            budget,
                            &mut steps_used,
                            &mut searches_used,
                        ) {
                            Reduce::Stepped(rhs, sigma) => Ctl::Eval(rhs, sigma),
                            Reduce::Irreducible(v) => Ctl::Value(v),
                            Reduce::OutOfBudget => return EvalOutcome::BudgetExhausted,
                        }
                    } else {
                        let mut pending = args.iter();
                        let first = pending.next().expect("non-empty args");
                        stack.push(BuildFrame {
                            symbol: symbol.clone(),
                            env: env.clone(),
                            done: Vec::with_capacity(args.len()),
                            pending,
                        });
                        Ctl::Eval(first, env)
                    }
                }
            },
            Ctl::Value(v) => match stack.pop() {
                None => {
                    // Final scan that finds no redex.
                    searches_used += 1;
                    if searches_used > budget.max_redex_searches {
                        return EvalOutcome::BudgetExhausted;
                    }
                    let is_stuck = defined.iter().any(|sym| v.contains_symbol(sym));
                    return if is_stuck {
                        EvalOutcome::Stuck(v)
                    } else {
                        EvalOutcome::NormalForm {
                            term: v,
                            steps_used,
                        }
                    };
                }
                Some(mut frame) => {
                    frame.done.push(v);
                    match frame.pending.next() {
                        Some(next) => {
                            let env = frame.env.clone();
                            stack.push(frame);
                            Ctl::Eval(next, env)
                        }
                        None => {
                            let node = Term::App(frame.symbol, frame.done.into());
                            match reduce_once(
                                &rules,
                                node,
                                budget,
                                &mut steps_used,
                                &mut searches_used,
                            ) {
                                Reduce::Stepped(rhs, sigma) => Ctl::Eval(rhs, sigma),
                                Reduce::Irreducible(v) => Ctl::Value(v),
                                Reduce::OutOfBudget => return EvalOutcome::BudgetExhausted,
                            }
                        }
                    }
                }
            },
        };
    }
}

enum Reduce<'r> {
    Stepped(&'r Term, Rc<Substitution>),
    Irreducible(Term),
    OutOfBudget,
}

fn reduce_once<'r>(
    rules: &[&'r Equation],
    node: Term,
    budget: EvalBudget,
    steps_used: &mut usize,
    searches_used: &mut usize,
) -> Reduce<'r> {
    match first_matching_rule(rules, &node) {
        None => Reduce::Irreducible(node),
        Some((rule_idx, sigma)) => {
            // Locating this redex costs one search, applying it one step.
            *searches_used += 1;
            if *searches_used > budget.max_redex_searches {
                return Reduce::OutOfBudget;
            }
            *steps_used += 1;
            if *steps_used > budget.max_rewrite_steps {
                return Reduce::OutOfBudget;
            }
            Reduce::Stepped(&rules[rule_idx].rhs, Rc::new(sigma))
        }
    }
}

/// The deduction judgment: `program` (with `background`) deduces the
/// example iff the example's lhs normalizes to exactly its rhs.
pub fn deduces(
    program: &Program,
    background: &Program,
    example: &Example,
    budget: EvalBudget,
) -> bool {
    match normalize(program, background, &example.lhs, budget) {
        EvalOutcome::NormalForm { term, .. } => term == example.rhs,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_equation, parse_program, parse_term, peano};

    const SUM_BK: &str = "sum(N,0) = N\nsum(N,s(M)) = s(sum(N,M))";

    fn sum_program() -> Program {
        parse_program(SUM_BK).unwrap()
    }

    #[test]
    fn rewrite_step_uses_second_rule_at_root() {
        let p = sum_program();
        let t = parse_term("sum(s(0),s(0))").unwrap();
        let (next, rule_idx, at) = rewrite_step(&p, &Program::empty(), &t).unwrap();
        assert_eq!(next, parse_term("s(sum(s(0),0))").unwrap());
        assert_eq!(rule_idx, 1);
        assert!(at.is_root());
    }

    #[test]
    fn constructor_terms_have_no_redex() {
        let p = sum_program();
        let t = parse_term("s(s(0))").unwrap();
        assert!(rewrite_step(&p, &Program::empty(), &t).is_none());
    }

    #[test]
    fn inner_redex_rewrites_before_outer() {
        let p = sum_program();
        let t = parse_term("sum(sum(0,0),0)").unwrap();
        let (next, _, at) = rewrite_step(&p, &Program::empty(), &t).unwrap();
        assert_eq!(next, parse_term("sum(0,0)").unwrap());
        assert_eq!(at, Occurrence::from_steps(vec![1]));
    }

    #[test]
    fn normalize_peano_addition() {
        let bk = sum_program();
        let t = parse_term("sum(2,3)").unwrap();
        match normalize(&Program::empty(), &bk, &t, EvalBudget::default()) {
            EvalOutcome::NormalForm { term, steps_used } => {
                assert_eq!(term, peano(5));
                assert!(steps_used > 0);
            }
            other => panic!("expected normal form, got {:?}", other),
        }
    }

    #[test]
    fn non_terminating_rule_exhausts_budget() {
        let p = parse_program("f(N) = f(s(N))").unwrap();
        let t = parse_term("f(0)").unwrap();
        assert_eq!(
            normalize(&p, &Program::empty(), &t, EvalBudget::default()),
            EvalOutcome::BudgetExhausted
        );
    }

    #[test]
    fn partial_definition_gets_stuck() {
        let p = parse_program("square(0) = 0").unwrap();
        let t = parse_term("square(s(0))").unwrap();
        assert_eq!(
            normalize(&p, &Program::empty(), &t, EvalBudget::default()),
            EvalOutcome::Stuck(t)
        );
    }

    #[test]
    fn machine_matches_step_iteration() {
        let p = sum_program();
        let bk = Program::empty();
        let start = parse_term("sum(sum(2,1),sum(0,2))").unwrap();
        let mut t = start.clone();
        let mut steps = 0;
        while let Some((next, _, _)) = rewrite_step(&p, &bk, &t) {
            t = next;
            steps += 1;
        }
        match normalize(&p, &bk, &start, EvalBudget::default()) {
            EvalOutcome::NormalForm { term, steps_used } => {
                assert_eq!(term, t);
                assert_eq!(steps_used, steps);
            }
            other => panic!("unexpected outcome {:?}", other),
        }
    }

    #[test]
    fn deduces_examples() {
        let empty = Program::empty();
        let e = parse_equation("sum_n(3) = 6").unwrap();
        assert!(!deduces(&empty, &sum_program(), &e, EvalBudget::default()));

        let identity = parse_program("sum_n(A) = A").unwrap();
        assert!(!deduces(
            &identity,
            &sum_program(),
            &e,
            EvalBudget::default()
        ));
        let e0 = parse_equation("sum_n(0) = 0").unwrap();
        assert!(deduces(
            &identity,
            &sum_program(),
            &e0,
            EvalBudget::default()
        ));

        let solution = parse_program("sum_n(0) = 0\nsum_n(s(A)) = s(sum(sum_n(A),A))").unwrap();
        for (input, output) in [(0u64, 0u64), (1, 1), (2, 3), (3, 6), (4, 10)] {
            let e = Equation::new(
                Term::app(Symbol::new("sum_n", 1), vec![peano(input)]),
                peano(output),
            );
            assert!(deduces(
                &solution,
                &sum_program(),
                &e,
                EvalBudget::default()
            ));
        }
    }

    #[test]
    fn rule_order_is_priority_order() {
        // A catch-all rule listed first shadows the recursive rule.
        let shadowed = parse_program("sum_n(A) = A\nsum_n(s(A)) = sum(s(A),sum_n(A))").unwrap();
        let e = parse_equation("sum_n(2) = 3").unwrap();
        assert!(!deduces(
            &shadowed,
            &sum_program(),
            &e,
            EvalBudget::default()
        ));

        // Listed the other way round it computes the sum of the first n.
        let solution = parse_program("sum_n(s(A)) = sum(s(A),sum_n(A))\nsum_n(A) = A").unwrap();
        assert!(deduces(
            &solution,
            &sum_program(),
            &e,
            EvalBudget::default()
        ));
    }

    #[test]
    fn budget_monotonicity() {
        let bk = sum_program();
        let t = parse_term("sum(3,4)").unwrap();
        let tight = EvalBudget {
            max_rewrite_steps: 5,
            max_redex_searches: 6,
        };
        let roomy = EvalBudget::default();
        let a = normalize(&Program::empty(), &bk, &t, tight);
        let b = normalize(&Program::empty(), &bk, &t, roomy);
        match (a, b) {
            (
                EvalOutcome::NormalForm {
                    term: ta,
                    steps_used: sa,
                },
                EvalOutcome::NormalForm {
                    term: tb,
                    steps_used: sb,
                },
            ) => {
                assert_eq!(ta, tb);
                assert_eq!(sa, sb);
            }
            other => panic!("expected two normal forms, got {:?}", other),
        }
        // One search fewer than needed exhausts the budget.
        let too_tight = EvalBudget {
            max_rewrite_steps: 5,
            max_redex_searches: 5,
        };
        assert_eq!(
            normalize(&Program::empty(), &bk, &t, too_tight),
            EvalOutcome::BudgetExhausted
        );
    }
}
