//! The nine variation operators plus the classic tree initializers.
//!
//! Every operator returns an [`OperatorOutcome`]. `applied == false` means
//! the operator could not act and the single offspring is the unchanged
//! parent. Offspring are always program-legal and within the node and
//! per-class equation-count limits; candidates that would violate them are
//! discarded, and the outcome degrades to not-applied when none survive.

use rand::Rng;

use crate::dataset::Signature;
use crate::program::{Equation, Program};
use crate::subst::unify;
use crate::term::{Occurrence, Symbol, Term, VarGen};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorId {
    GlobalXover,
    GlobalSwap,
    InternalSwap,
    Equalization,
    Composition,
    FunctionalSwap,
    FunctionalRename,
    GpXover,
    GpMutation,
}

impl OperatorId {
    pub const ALL: [OperatorId; 9] = [
        OperatorId::GlobalXover,
        OperatorId::GlobalSwap,
        OperatorId::InternalSwap,
        OperatorId::Equalization,
        OperatorId::Composition,
        OperatorId::FunctionalSwap,
        OperatorId::FunctionalRename,
        OperatorId::GpXover,
        OperatorId::GpMutation,
    ];

    /// Binary operators draw a mate from the population; composition mates
    /// with the background knowledge instead.
    pub fn is_binary(self) -> bool {
        matches!(
            self,
            OperatorId::GlobalXover | OperatorId::Equalization | OperatorId::GpXover
        )
    }

    pub fn label(self) -> &'static str {
        match self {
            OperatorId::GlobalXover => "global-xover",
            OperatorId::GlobalSwap => "global-swap",
            OperatorId::InternalSwap => "internal-swap",
            OperatorId::Equalization => "equalization",
            OperatorId::Composition => "composition",
            OperatorId::FunctionalSwap => "functional-swap",
            OperatorId::FunctionalRename => "functional-rename",
            OperatorId::GpXover => "gp-xover",
            OperatorId::GpMutation => "gp-mutation",
        }
    }

    pub fn index(self) -> usize {
        OperatorId::ALL.iter().position(|&op| op == self).unwrap()
    }
}

/// Structural limits every individual must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_equation_nodes: usize,
    pub max_basic_equations: usize,
    pub max_recursive_equations: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_equation_nodes: 30,
            max_basic_equations: 3,
            max_recursive_equations: 3,
        }
    }
}

impl Limits {
    pub fn admits(&self, program: &Program) -> bool {
        program
            .equations()
            .iter()
            .all(|eq| eq.is_program_legal() && eq.node_count() <= self.max_equation_nodes)
            && program.basic_count() <= self.max_basic_equations
            && program.recursive_count() <= self.max_recursive_equations
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorOutcome {
    pub offspring: Vec<Program>,
    pub applied: bool,
}

impl OperatorOutcome {
    fn unchanged(parent: &Program) -> OperatorOutcome {
        OperatorOutcome {
            offspring: vec![parent.clone()],
            applied: false,
        }
    }

    fn applied(offspring: Vec<Program>) -> OperatorOutcome {
        debug_assert!(!offspring.is_empty());
        OperatorOutcome {
            offspring,
            applied: true,
        }
    }
}

/// Shared operator inputs for one run.
pub struct OpContext<'a> {
    pub background: &'a Program,
    pub signature: &'a Signature,
    pub limits: Limits,
    pub gp_depth: usize,
}

pub fn apply_operator(
    op: OperatorId,
    parent: &Program,
    mate: Option<&Program>,
    ctx: &OpContext<'_>,
    rng: &mut impl Rng,
) -> OperatorOutcome {
    match op {
        OperatorId::GlobalXover => match mate {
            Some(mate) => global_xover(parent, mate, &ctx.limits, rng),
            None => OperatorOutcome::unchanged(parent),
        },
        OperatorId::GlobalSwap => global_swap(parent, rng),
        OperatorId::InternalSwap => internal_swap(parent, rng),
        OperatorId::Equalization => match mate {
            Some(mate) => equalization(parent, mate, &ctx.limits, rng),
            None => OperatorOutcome::unchanged(parent),
        },
        OperatorId::Composition => composition(parent, ctx.background, &ctx.limits, rng),
        OperatorId::FunctionalSwap => functional_swap(parent, ctx.signature, &ctx.limits, rng),
        OperatorId::FunctionalRename => functional_rename(parent, rng),
        OperatorId::GpXover => match mate {
            Some(mate) => gp_xover(parent, mate, &ctx.limits, rng),
            None => OperatorOutcome::unchanged(parent),
        },
        OperatorId::GpMutation => gp_mutation(parent, &ctx.limits, ctx.gp_depth, rng),
    }
}

/// Exchanges one randomly selected equation between the two individuals,
/// inserting each at a random position of the other.
pub fn global_xover(
    p1: &Program,
    p2: &Program,
    limits: &Limits,
    rng: &mut impl Rng,
) -> OperatorOutcome {
    if p1.is_empty() || p2.is_empty() {
        return OperatorOutcome::unchanged(p1);
    }
    let i = rng.random_range(0..p1.len());
    let j = rng.random_range(0..p2.len());
    let e1 = p1.equations()[i].clone();
    let e2 = p2.equations()[j].clone();

    let mut c1 = p1.clone();
    c1.remove(i);
    let pos1 = rng.random_range(0..=c1.len());
    c1.insert(pos1, e2);

    let mut c2 = p2.clone();
    c2.remove(j);
    let pos2 = rng.random_range(0..=c2.len());
    c2.insert(pos2, e1);

    let offspring: Vec<Program> = [c1, c2].into_iter().filter(|p| limits.admits(p)).collect();
    if offspring.is_empty() {
        OperatorOutcome::unchanged(p1)
    } else {
        OperatorOutcome::applied(offspring)
    }
}

/// Swaps two randomly selected equations when the individual has at least
/// two; otherwise the individual remains the same.
pub fn global_swap(p: &Program, rng: &mut impl Rng) -> OperatorOutcome {
    if p.len() < 2 {
        return OperatorOutcome::unchanged(p);
    }
    let i = rng.random_range(0..p.len());
    let shifted = rng.random_range(0..p.len() - 1);
    let j = if shifted >= i { shifted + 1 } else { shifted };
    let mut child = p.clone();
    child.swap(i, j);
    OperatorOutcome::applied(vec![child])
}

/// Swaps two distinct parameters of one randomly selected function call of
/// arity at least two.
pub fn internal_swap(p: &Program, rng: &mut impl Rng) -> OperatorOutcome {
    if p.is_empty() {
        return OperatorOutcome::unchanged(p);
    }
    let eq_idx = rng.random_range(0..p.len());
    let tree = p.equations()[eq_idx].to_term();
    let spots: Vec<Occurrence> = tree
        .occurrences()
        .into_iter()
        .filter(|u| {
            if u.is_root() {
                return false;
            }
            let sub = tree.subterm_at(u).expect("own occurrence");
            sub.root_symbol().is_some_and(|sym| sym.arity() >= 2)
        })
        .collect();
    if spots.is_empty() {
        return OperatorOutcome::unchanged(p);
    }
    let at = &spots[rng.random_range(0..spots.len())];
    let call = tree.subterm_at(at).expect("chosen occurrence");
    let (sym, args) = match call {
        Term::App(sym, args) => (sym.clone(), args.to_vec()),
        Term::Var(_) => unreachable!("filtered to applications"),
    };
    let a = rng.random_range(0..args.len());
    let shifted = rng.random_range(0..args.len() - 1);
    let b = if shifted >= a { shifted + 1 } else { shifted };
    let mut new_args = args;
    new_args.swap(a, b);
    let new_tree = tree
        .replace_at(at, Term::app(sym, new_args))
        .expect("occurrence stays valid");
    let new_eq = Equation::from_term(&new_tree).expect("equation root preserved");
    let mut child = p.clone();
    child.replace(eq_idx, new_eq);
    OperatorOutcome::applied(vec![child])
}

/// The pre-processing applied to both equalization sides: constants on the
/// lhs become variables of the equation (fresh variables when the equation
/// has none, so ground rules generalize in flight); variables on the rhs
/// become lhs variables (a fresh uniform draw per occurrence, which doubles
/// as the operator's variable-level mutation); constants on the rhs become
/// lhs variables with probability one half.
fn preprocess(eq: &Equation, vargen: &mut VarGen, rng: &mut impl Rng) -> Equation {
    let eq_vars = eq.variables();
    let mut lhs = eq.lhs.clone();
    for u in lhs.occurrences() {
        let is_constant = lhs
            .subterm_at(&u)
            .expect("own occurrence")
            .root_symbol()
            .is_some_and(Symbol::is_constant);
        if is_constant {
            let pick = if eq_vars.is_empty() {
                vargen.fresh()
            } else {
                eq_vars[rng.random_range(0..eq_vars.len())].clone()
            };
            lhs = lhs
                .replace_at(&u, Term::Var(pick))
                .expect("leaf replacement keeps paths valid");
        }
    }
    let lhs_vars = lhs.variables();
    let mut rhs = eq.rhs.clone();
    if !lhs_vars.is_empty() {
        for u in rhs.occurrences() {
            let sub = rhs.subterm_at(&u).expect("own occurrence");
            let replace = match sub {
                Term::Var(_) => true,
                Term::App(sym, _) if sym.is_constant() => rng.random_bool(0.5),
                Term::App(..) => false,
            };
            if replace {
                let pick = &lhs_vars[rng.random_range(0..lhs_vars.len())];
                rhs = rhs
                    .replace_at(&u, Term::Var(pick.clone()))
                    .expect("leaf replacement keeps paths valid");
            }
        }
    }
    Equation::new(lhs, rhs)
}

/// Replaces every orphan variable occurrence on the rhs by a randomly
/// selected lhs variable (drawn per occurrence). `None` when orphans exist
/// but the lhs has no variables to draw from.
fn repair_orphans(eq: Equation, rng: &mut impl Rng) -> Option<Equation> {
    let lhs_vars = eq.lhs.variables();
    let orphan_spots: Vec<Occurrence> = eq
        .rhs
        .occurrences()
        .into_iter()
        .filter(|u| match eq.rhs.subterm_at(u).expect("own occurrence") {
            Term::Var(name) => !lhs_vars.contains(name),
            Term::App(..) => false,
        })
        .collect();
    if orphan_spots.is_empty() {
        return Some(eq);
    }
    if lhs_vars.is_empty() {
        return None;
    }
    let mut rhs = eq.rhs.clone();
    for u in orphan_spots {
        let pick = &lhs_vars[rng.random_range(0..lhs_vars.len())];
        rhs = rhs
            .replace_at(&u, Term::Var(pick.clone()))
            .expect("leaf replacement keeps paths valid");
    }
    Some(Equation::new(eq.lhs, rhs))
}

/// The candidate equations the equalization operator derives from a
/// receptor/emitter pair: the emitter is renamed fresh, both sides are
/// pre-processed, and for every subterm occurrence of the receptor rhs
/// that unifies with the emitter rhs the occurrence is replaced by the
/// emitter lhs, with orphan variables repaired from the receptor lhs.
pub fn equalization_candidates(
    receptor: &Equation,
    emitter: &Equation,
    limits: &Limits,
    rng: &mut impl Rng,
) -> Vec<Equation> {
    let mut vargen = VarGen::avoiding(
        receptor
            .variables()
            .iter()
            .chain(emitter.variables().iter())
            .map(|v| &**v),
    );
    let emitter = emitter.rename_fresh(&mut vargen);
    let receptor = preprocess(receptor, &mut vargen, rng);
    let emitter = preprocess(&emitter, &mut vargen, rng);

    let mut candidates = Vec::new();
    for w in receptor.rhs.occurrences() {
        let sub = receptor.rhs.subterm_at(&w).expect("own occurrence");
        if unify(sub, &emitter.rhs).is_none() {
            continue;
        }
        let rhs = receptor
            .rhs
            .replace_at(&w, emitter.lhs.clone())
            .expect("occurrence stays valid");
        let candidate = Equation::new(receptor.lhs.clone(), rhs);
        if let Some(repaired) = repair_orphans(candidate, rng)
            && repaired.node_count() <= limits.max_equation_nodes
        {
            candidates.push(repaired);
        }
    }
    candidates
}

/// Joins both parents' equations (as a set: equations equal up to renaming
/// are kept once) and inserts each candidate equation at a random position,
/// yielding one offspring per candidate.
pub fn equalization(
    p1: &Program,
    p2: &Program,
    limits: &Limits,
    rng: &mut impl Rng,
) -> OperatorOutcome {
    if p1.is_empty() || p2.is_empty() {
        return OperatorOutcome::unchanged(p1);
    }
    let receptor = &p1.equations()[rng.random_range(0..p1.len())];
    let emitter = &p2.equations()[rng.random_range(0..p2.len())];
    let candidates = equalization_candidates(receptor, emitter, limits, rng);
    let mut merged = Program::empty();
    let mut seen: Vec<Equation> = Vec::new();
    for eq in p1.equations().iter().chain(p2.equations()) {
        let canonical = eq.canonical();
        if !seen.contains(&canonical) {
            seen.push(canonical);
            merged.push(eq.clone());
        }
    }
    finish_candidate_insertion(p1, merged, candidates, limits, rng)
}

/// Works as equalization with the emitter drawn from the background
/// knowledge; background equations are not merged into the offspring.
pub fn composition(
    p: &Program,
    background: &Program,
    limits: &Limits,
    rng: &mut impl Rng,
) -> OperatorOutcome {
    if p.is_empty() || background.is_empty() {
        return OperatorOutcome::unchanged(p);
    }
    let receptor = &p.equations()[rng.random_range(0..p.len())];
    let emitter = &background.equations()[rng.random_range(0..background.len())];
    let candidates = equalization_candidates(receptor, emitter, limits, rng);
    finish_candidate_insertion(p, p.clone(), candidates, limits, rng)
}

fn finish_candidate_insertion(
    parent: &Program,
    base: Program,
    candidates: Vec<Equation>,
    limits: &Limits,
    rng: &mut impl Rng,
) -> OperatorOutcome {
    let mut offspring = Vec::new();
    for candidate in candidates {
        let mut child = base.clone();
        let pos = rng.random_range(0..=child.len());
        child.insert(pos, candidate);
        if limits.admits(&child) {
            offspring.push(child);
        }
    }
    if offspring.is_empty() {
        OperatorOutcome::unchanged(parent)
    } else {
        OperatorOutcome::applied(offspring)
    }
}

/// Exchanges a function symbol occurring in the equation (other than the
/// lhs root) with another in-scope symbol of the same arity, at every
/// occurrence except the lhs root.
pub fn functional_swap(
    p: &Program,
    signature: &Signature,
    limits: &Limits,
    rng: &mut impl Rng,
) -> OperatorOutcome {
    if p.is_empty() {
        return OperatorOutcome::unchanged(p);
    }
    let eq_idx = rng.random_range(0..p.len());
    let eq = &p.equations()[eq_idx];
    let lhs_root = match eq.lhs.root_symbol() {
        Some(sym) => sym.clone(),
        None => return OperatorOutcome::unchanged(p),
    };
    // Occurrences of defined symbols other than the lhs root symbol.
    let tree = eq.to_term();
    let spots: Vec<Symbol> = tree
        .occurrences()
        .iter()
        .filter_map(|u| tree.subterm_at(u).expect("own occurrence").root_symbol())
        .filter(|sym| !sym.is_constructor() && !sym.is_eq_root() && **sym != lhs_root)
        .cloned()
        .collect();
    if spots.is_empty() {
        return OperatorOutcome::unchanged(p);
    }
    let first = spots[rng.random_range(0..spots.len())].clone();

    // In-scope symbols of the same arity, different from the selected one.
    let mut scope: Vec<Symbol> = signature.defined().to_vec();
    for sym in p.symbols() {
        if !sym.is_constructor() && !scope.contains(&sym) {
            scope.push(sym);
        }
    }
    let pool: Vec<Symbol> = scope
        .into_iter()
        .filter(|sym| sym.arity() == first.arity() && *sym != first)
        .collect();
    if pool.is_empty() {
        return OperatorOutcome::unchanged(p);
    }
    let second = pool[rng.random_range(0..pool.len())].clone();

    let exchange = |sym: &Symbol| {
        if *sym == first {
            second.clone()
        } else if *sym == second {
            first.clone()
        } else {
            sym.clone()
        }
    };
    let new_lhs_args: Vec<Term> = eq
        .lhs
        .args()
        .iter()
        .map(|a| a.map_symbols(&exchange))
        .collect();
    let new_eq = Equation::new(
        Term::app(lhs_root, new_lhs_args),
        eq.rhs.map_symbols(&exchange),
    );
    let mut child = p.clone();
    child.replace(eq_idx, new_eq);
    if limits.admits(&child) {
        OperatorOutcome::applied(vec![child])
    } else {
        OperatorOutcome::unchanged(p)
    }
}

/// Moves a unary wrapper from one parameter of a function call to another:
/// the wrapped parameter is unwrapped and a different parameter is wrapped.
pub fn functional_rename(p: &Program, rng: &mut impl Rng) -> OperatorOutcome {
    if p.is_empty() {
        return OperatorOutcome::unchanged(p);
    }
    let eq_idx = rng.random_range(0..p.len());
    let tree = p.equations()[eq_idx].to_term();
    let spots: Vec<Occurrence> = tree
        .occurrences()
        .into_iter()
        .filter(|u| {
            if u.is_root() {
                return false;
            }
            let sub = tree.subterm_at(u).expect("own occurrence");
            match sub.root_symbol() {
                Some(sym) if sym.arity() >= 2 => sub
                    .args()
                    .iter()
                    .any(|a| a.root_symbol().is_some_and(|s| s.arity() == 1)),
                _ => false,
            }
        })
        .collect();
    if spots.is_empty() {
        return OperatorOutcome::unchanged(p);
    }
    let at = &spots[rng.random_range(0..spots.len())];
    let call = tree.subterm_at(at).expect("chosen occurrence");
    let (sym, args) = match call {
        Term::App(sym, args) => (sym.clone(), args.to_vec()),
        Term::Var(_) => unreachable!("filtered to applications"),
    };
    let wrapped: Vec<usize> = args
        .iter()
        .enumerate()
        .filter(|(_, a)| a.root_symbol().is_some_and(|s| s.arity() == 1))
        .map(|(i, _)| i)
        .collect();
    let i = wrapped[rng.random_range(0..wrapped.len())];
    let shifted = rng.random_range(0..args.len() - 1);
    let j = if shifted >= i { shifted + 1 } else { shifted };

    let (wrapper, inner) = match &args[i] {
        Term::App(h, h_args) => (h.clone(), h_args[0].clone()),
        Term::Var(_) => unreachable!("selected argument is a unary application"),
    };
    let mut new_args = args;
    new_args[j] = Term::app(wrapper, vec![new_args[j].clone()]);
    new_args[i] = inner;

    let new_tree = tree
        .replace_at(at, Term::app(sym, new_args))
        .expect("occurrence stays valid");
    let new_eq = Equation::from_term(&new_tree).expect("equation root preserved");
    let mut child = p.clone();
    child.replace(eq_idx, new_eq);
    OperatorOutcome::applied(vec![child])
}

/// Occurrences eligible for the tree-level operators: everything except
/// the equation root and the whole lhs.
fn gp_spots(tree: &Term) -> Vec<Occurrence> {
    tree.occurrences()
        .into_iter()
        .filter(|u| !u.is_root() && u.steps() != [1])
        .collect()
}

/// Classic subtree crossover on one equation of each parent, with orphan
/// repair and limit filtering.
pub fn gp_xover(
    p1: &Program,
    p2: &Program,
    limits: &Limits,
    rng: &mut impl Rng,
) -> OperatorOutcome {
    if p1.is_empty() || p2.is_empty() {
        return OperatorOutcome::unchanged(p1);
    }
    let i = rng.random_range(0..p1.len());
    let j = rng.random_range(0..p2.len());
    let t1 = p1.equations()[i].to_term();
    let t2 = p2.equations()[j].to_term();
    let spots1 = gp_spots(&t1);
    let spots2 = gp_spots(&t2);
    let u1 = &spots1[rng.random_range(0..spots1.len())];
    let u2 = &spots2[rng.random_range(0..spots2.len())];
    let s1 = t1.subterm_at(u1).expect("own occurrence").clone();
    let s2 = t2.subterm_at(u2).expect("own occurrence").clone();

    let mut offspring = Vec::new();
    for (parent, idx, tree, at, graft) in [(p1, i, &t1, u1, s2), (p2, j, &t2, u2, s1)] {
        let new_tree = tree.replace_at(at, graft).expect("occurrence stays valid");
        let new_eq = Equation::from_term(&new_tree).expect("equation root preserved");
        if let Some(repaired) = repair_orphans(new_eq, rng)
            && repaired.node_count() <= limits.max_equation_nodes
        {
            let mut child = parent.clone();
            child.replace(idx, repaired);
            if limits.admits(&child) {
                offspring.push(child);
            }
        }
    }
    if offspring.is_empty() {
        OperatorOutcome::unchanged(p1)
    } else {
        OperatorOutcome::applied(offspring)
    }
}

/// Classic subtree mutation: a random subtree is replaced by a tree grown
/// over the individual's own symbols plus the equation's lhs variables.
pub fn gp_mutation(
    p: &Program,
    limits: &Limits,
    depth_cap: usize,
    rng: &mut impl Rng,
) -> OperatorOutcome {
    if p.is_empty() {
        return OperatorOutcome::unchanged(p);
    }
    let eq_idx = rng.random_range(0..p.len());
    let eq = &p.equations()[eq_idx];
    let tree = eq.to_term();
    let spots = gp_spots(&tree);
    let at = &spots[rng.random_range(0..spots.len())];

    let symbols = p.symbols();
    let functions: Vec<Symbol> = symbols.iter().filter(|s| s.arity() >= 1).cloned().collect();
    let mut terminals: Vec<Term> = symbols
        .iter()
        .filter(|s| s.is_constant())
        .map(|s| Term::app(s.clone(), vec![]))
        .collect();
    for v in eq.lhs.variables() {
        terminals.push(Term::Var(v));
    }
    if terminals.is_empty() {
        return OperatorOutcome::unchanged(p);
    }
    let graft = random_tree(TreeMethod::Grow, depth_cap, &functions, &terminals, rng);
    let new_tree = tree.replace_at(at, graft).expect("occurrence stays valid");
    let new_eq = Equation::from_term(&new_tree).expect("equation root preserved");
    match repair_orphans(new_eq, rng) {
        Some(repaired) if repaired.node_count() <= limits.max_equation_nodes => {
            let mut child = p.clone();
            child.replace(eq_idx, repaired);
            if limits.admits(&child) {
                OperatorOutcome::applied(vec![child])
            } else {
                OperatorOutcome::unchanged(p)
            }
        }
        _ => OperatorOutcome::unchanged(p),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeMethod {
    /// Every branch reaches exactly the given depth.
    Full,
    /// Branch depths are bounded by the given depth.
    Grow,
}

/// Generates a random tree. Depth counts nodes along a branch, so depth 1
/// yields a leaf. `terminals` must be non-empty.
pub fn random_tree(
    method: TreeMethod,
    depth: usize,
    functions: &[Symbol],
    terminals: &[Term],
    rng: &mut impl Rng,
) -> Term {
    assert!(
        !terminals.is_empty(),
        "random_tree needs at least one terminal"
    );
    if depth <= 1 || functions.is_empty() {
        return terminals[rng.random_range(0..terminals.len())].clone();
    }
    let pick_function = match method {
        TreeMethod::Full => true,
        TreeMethod::Grow => {
            rng.random_range(0..functions.len() + terminals.len()) < functions.len()
        }
    };
    if !pick_function {
        return terminals[rng.random_range(0..terminals.len())].clone();
    }
    let sym = functions[rng.random_range(0..functions.len())].clone();
    let args: Vec<Term> = (0..sym.arity())
        .map(|_| random_tree(method, depth - 1, functions, terminals, rng))
        .collect();
    Term::app(sym, args)
}

/// The ramped half-and-half initializer: depths cycle `1..=max_depth`,
/// alternating the full and grow methods.
pub fn ramped_half_and_half(
    count: usize,
    max_depth: usize,
    functions: &[Symbol],
    terminals: &[Term],
    rng: &mut impl Rng,
) -> Vec<Term> {
    (0..count)
        .map(|i| {
            let depth = 1 + (i / 2) % max_depth.max(1);
            let method = if i % 2 == 0 {
                TreeMethod::Full
            } else {
                TreeMethod::Grow
            };
            random_tree(method, depth, functions, terminals, rng)
        })
        .collect()
}

/// Searches seeds `0..bound` for one under which `f` produces `true`.
/// Used by tests that reproduce the documented operator examples.
pub fn find_seed(bound: u64, mut f: impl FnMut(u64) -> bool) -> Option<u64> {
    (0..bound).find(|&seed| f(seed))
}
