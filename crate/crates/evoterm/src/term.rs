//! First-order terms: variables and function applications with fixed arities.
//!
//! Terms are immutable values. Argument lists are shared behind `Arc`, so
//! cloning a term is O(1) and subterm replacement copies only the spine.

use std::fmt;
use std::sync::Arc;

/// Names of the built-in constructor symbols.
pub const ZERO: &str = "0";
pub const SUCC: &str = "s";
pub const NIL: &str = "[]";
pub const CONS: &str = "\u{2022}"; // the dot list constructor

/// Internal root symbol used when an equation is handled as a single tree.
pub const EQ_ROOT: &str = "=";

/// A function symbol with a fixed arity. Two symbols are equal iff both
/// name and arity are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    name: Arc<str>,
    arity: usize,
}

impl Symbol {
    pub fn new(name: &str, arity: usize) -> Symbol {
        assert!(
            !name.is_empty(),
            "function symbols must have non-empty names"
        );
        Symbol {
            name: Arc::from(name),
            arity,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_constant(&self) -> bool {
        self.arity == 0
    }

    /// The fixed constructor alphabet: `0`, `s`, the list dot and `[]`.
    pub fn is_constructor(&self) -> bool {
        matches!(&*self.name, ZERO | SUCC | NIL | CONS)
    }

    pub fn is_eq_root(&self) -> bool {
        &*self.name == EQ_ROOT
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name, self.arity)
    }
}

/// A term: a variable or a function symbol applied to exactly `arity` subterms.
#[derive(Debug, Clone, Eq)]
pub enum Term {
    Var(Arc<str>),
    App(Symbol, Arc<[Term]>),
}

impl PartialEq for Term {
    fn eq(&self, other: &Term) -> bool {
        match (self, other) {
            (Term::Var(a), Term::Var(b)) => a == b,
            (Term::App(f, xs), Term::App(g, ys)) => f == g && (Arc::ptr_eq(xs, ys) || xs == ys),
            _ => false,
        }
    }
}

impl std::hash::Hash for Term {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            Term::Var(name) => {
                state.write_u8(0);
                name.hash(state);
            }
            Term::App(sym, args) => {
                state.write_u8(1);
                sym.hash(state);
                for a in args.iter() {
                    a.hash(state);
                }
            }
        }
    }
}

impl Term {
    pub fn var(name: &str) -> Term {
        assert!(!name.is_empty(), "variables must have non-empty names");
        Term::Var(Arc::from(name))
    }

    pub fn app(symbol: Symbol, args: Vec<Term>) -> Term {
        assert_eq!(
            symbol.arity(),
            args.len(),
            "arity mismatch for {}",
            symbol.name()
        );
        Term::App(symbol, args.into())
    }

    pub fn constant(name: &str) -> Term {
        Term::app(Symbol::new(name, 0), vec![])
    }

    pub fn zero() -> Term {
        Term::constant(ZERO)
    }

    pub fn succ(inner: Term) -> Term {
        Term::app(Symbol::new(SUCC, 1), vec![inner])
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    pub fn root_symbol(&self) -> Option<&Symbol> {
        match self {
            Term::Var(_) => None,
            Term::App(sym, _) => Some(sym),
        }
    }

    pub fn args(&self) -> &[Term] {
        match self {
            Term::Var(_) => &[],
            Term::App(_, args) => args,
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::App(_, args) => args.iter().all(Term::is_ground),
        }
    }

    /// A constructor term is built from constructors and variables only.
    pub fn is_constructor_term(&self) -> bool {
        match self {
            Term::Var(_) => true,
            Term::App(sym, args) => {
                sym.is_constructor() && args.iter().all(Term::is_constructor_term)
            }
        }
    }

    /// Total number of variable and symbol nodes; at least 1.
    pub fn node_count(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::node_count).sum::<usize>(),
        }
    }

    /// Variable names in first-occurrence (left-to-right) order, deduplicated.
    pub fn variables(&self) -> Vec<Arc<str>> {
        let mut out = Vec::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut Vec<Arc<str>>) {
        match self {
            Term::Var(name) => {
                if !out.iter().any(|v| v == name) {
                    out.push(name.clone());
                }
            }
            Term::App(_, args) => {
                for a in args.iter() {
                    a.collect_variables(out);
                }
            }
        }
    }

    pub fn contains_var(&self, name: &str) -> bool {
        match self {
            Term::Var(v) => &**v == name,
            Term::App(_, args) => args.iter().any(|a| a.contains_var(name)),
        }
    }

    pub fn contains_symbol(&self, sym: &Symbol) -> bool {
        match self {
            Term::Var(_) => false,
            Term::App(s, args) => s == sym || args.iter().any(|a| a.contains_symbol(sym)),
        }
    }

    /// Symbols in first-occurrence order, deduplicated.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut Vec<Symbol>) {
        if let Term::App(sym, args) = self {
            if !out.contains(sym) {
                out.push(sym.clone());
            }
            for a in args.iter() {
                a.collect_symbols(out);
            }
        }
    }

    /// All occurrences of `self` in pre-order (so lexicographic path order),
    /// starting with the root occurrence.
    pub fn occurrences(&self) -> Vec<Occurrence> {
        let mut out = Vec::new();
        self.collect_occurrences(&mut Vec::new(), &mut out);
        out
    }

    /// Occurrences whose subterm is not a variable.
    pub fn non_var_occurrences(&self) -> Vec<Occurrence> {
        self.occurrences()
            .into_iter()
            .filter(|u| !self.subterm_at(u).expect("own occurrence").is_var())
            .collect()
    }

    fn collect_occurrences(&self, path: &mut Vec<u32>, out: &mut Vec<Occurrence>) {
        out.push(Occurrence(path.clone()));
        if let Term::App(_, args) = self {
            for (i, a) in args.iter().enumerate() {
                path.push(i as u32 + 1);
                a.collect_occurrences(path, out);
                path.pop();
            }
        }
    }

    /// The subterm at occurrence `u` (`t|_u`).
    pub fn subterm_at(&self, u: &Occurrence) -> Result<&Term, InvalidOccurrence> {
        let mut cur = self;
        for (depth, &step) in u.0.iter().enumerate() {
            let args = cur.args();
            let idx = step as usize;
            if step == 0 || idx > args.len() {
                return Err(InvalidOccurrence {
                    occurrence: u.clone(),
                    depth,
                });
            }
            cur = &args[idx - 1];
        }
        Ok(cur)
    }

    /// Replacement of the subterm at `u` by `s` (`t[s]_u`). Only the spine is copied.
    pub fn replace_at(&self, u: &Occurrence, s: Term) -> Result<Term, InvalidOccurrence> {
        fn go(
            t: &Term,
            steps: &[u32],
            depth: usize,
            s: Term,
            u: &Occurrence,
        ) -> Result<Term, InvalidOccurrence> {
            match steps.split_first() {
                None => Ok(s),
                Some((&step, rest)) => {
                    let args = t.args();
                    let idx = step as usize;
                    if step == 0 || idx > args.len() {
                        return Err(InvalidOccurrence {
                            occurrence: u.clone(),
                            depth,
                        });
                    }
                    let mut new_args: Vec<Term> = args.to_vec();
                    new_args[idx - 1] = go(&args[idx - 1], rest, depth + 1, s, u)?;
                    match t {
                        Term::App(sym, _) => Ok(Term::App(sym.clone(), new_args.into())),
                        Term::Var(_) => unreachable!("vars have no arguments"),
                    }
                }
            }
        }
        go(self, &u.0, 0, s, u)
    }

    /// Rewrites every symbol node through `f`, keeping the tree shape.
    pub fn map_symbols(&self, f: &impl Fn(&Symbol) -> Symbol) -> Term {
        match self {
            Term::Var(_) => self.clone(),
            Term::App(sym, args) => {
                let new_sym = f(sym);
                assert_eq!(
                    new_sym.arity(),
                    sym.arity(),
                    "map_symbols must preserve arity"
                );
                let new_args: Vec<Term> = args.iter().map(|a| a.map_symbols(f)).collect();
                Term::App(new_sym, new_args.into())
            }
        }
    }
}

/// A path into a term: a sequence of 1-based argument positions.
/// The empty path is the root occurrence.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence(Vec<u32>);

impl Occurrence {
    pub fn root() -> Occurrence {
        Occurrence(Vec::new())
    }

    pub fn from_steps(steps: Vec<u32>) -> Occurrence {
        assert!(steps.iter().all(|&s| s > 0), "occurrence steps are 1-based");
        Occurrence(steps)
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn steps(&self) -> &[u32] {
        &self.0
    }

    pub fn child(&self, step: u32) -> Occurrence {
        assert!(step > 0);
        let mut steps = self.0.clone();
        steps.push(step);
        Occurrence(steps)
    }

    /// True when `self` is a (non-strict) prefix of `other`.
    pub fn is_prefix_of(&self, other: &Occurrence) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "\u{039b}");
        }
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join("."))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidOccurrence {
    pub occurrence: Occurrence,
    pub depth: usize,
}

impl fmt::Display for InvalidOccurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "occurrence {} is not valid for the term (fails at step {})",
            self.occurrence, self.depth
        )
    }
}

impl std::error::Error for InvalidOccurrence {}

/// Generator of variables not previously met during a computation.
///
/// Produced names are `N1`, `N2`, ... starting past any such name already
/// in use, so freshness needs no global state.
#[derive(Debug, Clone)]
pub struct VarGen {
    next: usize,
}

impl VarGen {
    pub fn new() -> VarGen {
        VarGen { next: 1 }
    }

    /// A generator whose output avoids every name in `names`.
    pub fn avoiding<'a>(names: impl IntoIterator<Item = &'a str>) -> VarGen {
        let mut next = 1;
        for name in names {
            if let Some(rest) = name.strip_prefix('N')
                && !rest.is_empty()
                && let Ok(k) = rest.parse::<usize>()
            {
                next = next.max(k + 1);
            }
        }
        VarGen { next }
    }

    pub fn fresh(&mut self) -> Arc<str> {
        let name = format!("N{}", self.next);
        self.next += 1;
        Arc::from(name.as_str())
    }
}

impl Default for VarGen {
    fn default() -> Self {
        VarGen::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_term;

    fn t(src: &str) -> Term {
        parse_term(src).unwrap()
    }

    fn occ(steps: &[u32]) -> Occurrence {
        Occurrence::from_steps(steps.to_vec())
    }

    #[test]
    fn occurrences_of_application() {
        let term = t("sum(s(0),X)");
        let occs = term.occurrences();
        assert_eq!(occs, vec![occ(&[]), occ(&[1]), occ(&[1, 1]), occ(&[2])]);
    }

    #[test]
    fn occurrences_of_variable() {
        assert_eq!(t("X").occurrences(), vec![Occurrence::root()]);
    }

    #[test]
    fn non_var_occurrences_skip_variables() {
        let term = t("square_bino(0,0)");
        assert_eq!(term.occurrences(), term.non_var_occurrences());
        let term = t("sum(s(0),X)");
        assert_eq!(
            term.non_var_occurrences(),
            vec![occ(&[]), occ(&[1]), occ(&[1, 1])]
        );
    }

    #[test]
    fn subterm_at_examples() {
        let term = t("sum(s(0),X)");
        assert_eq!(*term.subterm_at(&occ(&[1, 1])).unwrap(), t("0"));
        let cube = t("cube(s(A))");
        assert_eq!(*cube.subterm_at(&Occurrence::root()).unwrap(), cube);
        assert!(term.subterm_at(&occ(&[3])).is_err());
    }

    #[test]
    fn replace_at_examples() {
        let term = t("sum(s(0),X)");
        assert_eq!(term.replace_at(&occ(&[1]), t("N")).unwrap(), t("sum(N,X)"));
        let prod = t("prod(N,0)");
        assert_eq!(
            prod.replace_at(&occ(&[2]), t("s(M)")).unwrap(),
            t("prod(N,s(M))")
        );
        assert_eq!(
            prod.replace_at(&Occurrence::root(), t("0")).unwrap(),
            t("0")
        );
    }

    #[test]
    fn node_counts() {
        assert_eq!(t("0").node_count(), 1);
        assert_eq!(t("s(s(0))").node_count(), 3);
        assert_eq!(t("sum(s(N),M)").node_count(), 4);
        assert_eq!(t("sum(s(N),s(M))").node_count(), 5);
    }

    #[test]
    fn variables_in_order() {
        let term = t("sum(prod(B,A),sum(A,C))");
        let names: Vec<String> = term.variables().iter().map(|v| v.to_string()).collect();
        assert_eq!(names, vec!["B", "A", "C"]);
    }

    #[test]
    fn fresh_names_avoid_existing() {
        let mut vargen = VarGen::avoiding(["A", "N2", "N10"]);
        assert_eq!(&*vargen.fresh(), "N11");
        assert_eq!(&*vargen.fresh(), "N12");
    }

    #[test]
    fn occurrence_ordering_is_lexicographic() {
        assert!(occ(&[1]) < occ(&[1, 1]));
        assert!(occ(&[1, 2]) < occ(&[2]));
        assert!(Occurrence::root() < occ(&[1]));
    }
}
