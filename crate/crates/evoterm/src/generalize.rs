//! Enumeration of generalizations and restricted generalizations of ground
//! example equations, and population seeding from them.
//!
//! A generalization is obtained by replacing subterm occurrences by
//! variables in all possible ways: pick a set of occurrences none of which
//! contains another, partition it into classes of identical subterms, and
//! give each class its own variable. Classes holding equal subterms may or
//! may not share a variable, which is what makes both
//! `square_bino(A,B) = C` and `square_bino(A,A) = B` arise from
//! `square_bino(0,0) = 0`.

use std::collections::HashSet;
use std::fmt;

use rand::Rng;

use crate::dataset::{Dataset, Example};
use crate::program::{Equation, Program};
use crate::term::{Occurrence, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizationSet {
    pub source: Example,
    /// Canonically renamed, deduplicated, in enumeration order.
    pub items: Vec<Equation>,
}

impl GeneralizationSet {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// All generalizations of a ground equation, up to renaming.
pub fn generalizations(example: &Example) -> GeneralizationSet {
    debug_assert!(
        example.is_ground(),
        "generalization expects a ground example"
    );
    let tree = example.to_term();
    let mut seen = HashSet::new();
    let mut items = Vec::new();
    for antichain in antichains(&tree) {
        let subterms: Vec<&Term> = antichain
            .iter()
            .map(|u| tree.subterm_at(u).expect("enumerated occurrence"))
            .collect();
        for partition in consistent_partitions(&antichain, &subterms) {
            let candidate = abstract_at(&tree, &partition);
            let eq = Equation::from_term(&candidate)
                .expect("abstraction preserves the equation root")
                .canonical();
            if seen.insert(eq.clone()) {
                items.push(eq);
            }
        }
    }
    GeneralizationSet {
        source: example.clone(),
        items,
    }
}

/// Generalizations that are program-legal equations: lhs rooted at a
/// non-constant function symbol and no orphan variables on the rhs.
pub fn restricted_generalizations(example: &Example) -> GeneralizationSet {
    let all = generalizations(example);
    GeneralizationSet {
        source: all.source,
        items: all
            .items
            .into_iter()
            .filter(Equation::is_program_legal)
            .collect(),
    }
}

/// Antichains of occurrences of `tree` (no member a prefix of another),
/// excluding the root occurrence. Includes the empty set.
fn antichains(tree: &Term) -> Vec<Vec<Occurrence>> {
    fn go(term: &Term, at: &Occurrence, replaceable: bool) -> Vec<Vec<Occurrence>> {
        let mut out = Vec::new();
        let mut combos: Vec<Vec<Occurrence>> = vec![Vec::new()];
        if let Term::App(_, args) = term {
            for (i, arg) in args.iter().enumerate() {
                let child_sets = go(arg, &at.child(i as u32 + 1), true);
                let mut next = Vec::with_capacity(combos.len() * child_sets.len());
                for combo in &combos {
                    for child in &child_sets {
                        let mut merged = combo.clone();
                        merged.extend(child.iter().cloned());
                        next.push(merged);
                    }
                }
                combos = next;
            }
        }
        out.extend(combos);
        if replaceable {
            out.push(vec![at.clone()]);
        }
        out
    }
    go(tree, &Occurrence::root(), false)
}

/// Partitions of the occurrence set where every cell holds identical
/// subterms. Cells are ordered by their first (leftmost) occurrence.
fn consistent_partitions(
    occurrences: &[Occurrence],
    subterms: &[&Term],
) -> Vec<Vec<Vec<Occurrence>>> {
    fn go(
        idx: usize,
        occurrences: &[Occurrence],
        subterms: &[&Term],
        cells: &mut Vec<(usize, Vec<Occurrence>)>,
        out: &mut Vec<Vec<Vec<Occurrence>>>,
    ) {
        if idx == occurrences.len() {
            out.push(cells.iter().map(|(_, members)| members.clone()).collect());
            return;
        }
        for c in 0..cells.len() {
            // A cell may take this occurrence only if the subterms agree.
            if subterms[cells[c].0] == subterms[idx] {
                cells[c].1.push(occurrences[idx].clone());
                go(idx + 1, occurrences, subterms, cells, out);
                cells[c].1.pop();
            }
        }
        cells.push((idx, vec![occurrences[idx].clone()]));
        go(idx + 1, occurrences, subterms, cells, out);
        cells.pop();
    }
    let mut out = Vec::new();
    go(0, occurrences, subterms, &mut Vec::new(), &mut out);
    out
}

/// Replaces each cell's occurrences by a per-cell variable.
fn abstract_at(tree: &Term, partition: &[Vec<Occurrence>]) -> Term {
    let mut result = tree.clone();
    for (cell_idx, cell) in partition.iter().enumerate() {
        let var = Term::var(&format!("G{}", cell_idx));
        for u in cell {
            result = result
                .replace_at(u, var.clone())
                .expect("antichain occurrences stay valid");
        }
    }
    result
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmptyPool;

impl fmt::Display for EmptyPool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no positive basic example yields any restricted generalization"
        )
    }
}

impl std::error::Error for EmptyPool {}

/// The deduplicated pool of one-equation programs seeding a run: every
/// restricted generalization of each concrete example (basic and extra)
/// that fits the per-equation node budget.
pub fn initial_pool(dataset: &Dataset, max_equation_nodes: usize) -> Vec<Program> {
    let mut seen = HashSet::new();
    let mut pool = Vec::new();
    for example in dataset.union_examples() {
        for eq in restricted_generalizations(example).items {
            if eq.node_count() <= max_equation_nodes && seen.insert(eq.clone()) {
                pool.push(Program::new(vec![eq]));
            }
        }
    }
    pool
}

/// The initial population: the whole pool once, then uniform draws with
/// replacement until the minimum size is reached. The pool is never
/// truncated below its own size.
pub fn initial_population(
    dataset: &Dataset,
    min_size: usize,
    max_equation_nodes: usize,
    rng: &mut impl Rng,
) -> Result<Vec<Program>, EmptyPool> {
    let pool = initial_pool(dataset, max_equation_nodes);
    if pool.is_empty() {
        return Err(EmptyPool);
    }
    let mut population = pool.clone();
    while population.len() < min_size {
        let pick = rng.random_range(0..pool.len());
        population.push(pool[pick].clone());
    }
    Ok(population)
}
