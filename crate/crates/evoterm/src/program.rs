//! Oriented equations and programs (ordered equation lists).
//!
//! A program is an individual's genome: one ordered list of equations.
//! Rule priority during rewriting is list order. Equations are classified
//! as *recursive* when their right-hand side mentions their own left-hand
//! root symbol, and *basic* otherwise; the classification drives the
//! per-class size caps, not the priority.

use std::fmt;
use std::sync::Arc;

use crate::term::{EQ_ROOT, Symbol, Term, VarGen};

/// An oriented rewrite rule `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Equation {
        Equation { lhs, rhs }
    }

    pub fn node_count(&self) -> usize {
        self.lhs.node_count() + self.rhs.node_count()
    }

    /// Variables of the whole equation, lhs first, in first-occurrence order.
    pub fn variables(&self) -> Vec<Arc<str>> {
        let mut vars = self.lhs.variables();
        for v in self.rhs.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars
    }

    pub fn is_ground(&self) -> bool {
        self.lhs.is_ground() && self.rhs.is_ground()
    }

    /// Variables of the rhs that do not occur in the lhs.
    pub fn orphan_vars(&self) -> Vec<Arc<str>> {
        self.rhs
            .variables()
            .into_iter()
            .filter(|v| !self.lhs.contains_var(v))
            .collect()
    }

    /// Program-legality: the lhs is a pattern — a non-constant defined
    /// function symbol (not a constructor) applied to constructor terms —
    /// and the rhs has no orphan variables.
    pub fn is_program_legal(&self) -> bool {
        match self.lhs.root_symbol() {
            None => false,
            Some(sym) => {
                !sym.is_constant()
                    && !sym.is_constructor()
                    && !sym.is_eq_root()
                    && self.lhs.args().iter().all(Term::is_constructor_term)
                    && self.orphan_vars().is_empty()
            }
        }
    }

    /// An equation is recursive when its rhs mentions its own lhs root symbol.
    pub fn is_recursive(&self) -> bool {
        match self.lhs.root_symbol() {
            None => false,
            Some(sym) => self.rhs.contains_symbol(sym),
        }
    }

    /// The equation viewed as a single tree rooted at `=`. Used by the
    /// generalization enumeration and the tree-level genetic operators.
    pub fn to_term(&self) -> Term {
        Term::app(
            Symbol::new(EQ_ROOT, 2),
            vec![self.lhs.clone(), self.rhs.clone()],
        )
    }

    /// Inverse of [`Equation::to_term`].
    pub fn from_term(term: &Term) -> Option<Equation> {
        match term {
            Term::App(sym, args) if sym.is_eq_root() && args.len() == 2 => Some(Equation {
                lhs: args[0].clone(),
                rhs: args[1].clone(),
            }),
            _ => None,
        }
    }

    /// Consistently replaces every variable by a fresh one from `vargen`.
    pub fn rename_fresh(&self, vargen: &mut VarGen) -> Equation {
        let vars = self.variables();
        let renaming: Vec<(Arc<str>, Arc<str>)> =
            vars.into_iter().map(|v| (v, vargen.fresh())).collect();
        Equation {
            lhs: rename(&self.lhs, &renaming),
            rhs: rename(&self.rhs, &renaming),
        }
    }

    /// Canonical variant: variables renamed `A`, `B`, `C`, ... in
    /// first-occurrence order (lhs before rhs). Two equations are equal up
    /// to renaming iff their canonical variants are equal.
    pub fn canonical(&self) -> Equation {
        let vars = self.variables();
        let renaming: Vec<(Arc<str>, Arc<str>)> = vars
            .into_iter()
            .enumerate()
            .map(|(i, v)| (v, canonical_name(i)))
            .collect();
        Equation {
            lhs: rename(&self.lhs, &renaming),
            rhs: rename(&self.rhs, &renaming),
        }
    }
}

fn rename(term: &Term, renaming: &[(Arc<str>, Arc<str>)]) -> Term {
    match term {
        Term::Var(name) => {
            let new = renaming
                .iter()
                .find(|(old, _)| old == name)
                .map(|(_, new)| new.clone())
                .unwrap_or_else(|| name.clone());
            Term::Var(new)
        }
        Term::App(sym, args) => {
            let new_args: Vec<Term> = args.iter().map(|a| rename(a, renaming)).collect();
            Term::App(sym.clone(), new_args.into())
        }
    }
}

fn canonical_name(i: usize) -> Arc<str> {
    if i < 26 {
        let c = (b'A' + i as u8) as char;
        Arc::from(c.to_string().as_str())
    } else {
        Arc::from(format!("V{}", i - 25).as_str())
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {}",
            crate::syntax::print_term(&self.lhs, false),
            crate::syntax::print_term(&self.rhs, false)
        )
    }
}

/// An ordered list of equations; the order is the rule priority.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Program {
    equations: Vec<Equation>,
}

impl Program {
    pub fn new(equations: Vec<Equation>) -> Program {
        Program { equations }
    }

    pub fn empty() -> Program {
        Program::default()
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn push(&mut self, eq: Equation) {
        self.equations.push(eq);
    }

    pub fn insert(&mut self, index: usize, eq: Equation) {
        self.equations.insert(index, eq);
    }

    pub fn remove(&mut self, index: usize) -> Equation {
        self.equations.remove(index)
    }

    pub fn swap(&mut self, i: usize, j: usize) {
        self.equations.swap(i, j);
    }

    pub fn replace(&mut self, index: usize, eq: Equation) {
        self.equations[index] = eq;
    }

    pub fn basic_count(&self) -> usize {
        self.equations.iter().filter(|e| !e.is_recursive()).count()
    }

    pub fn recursive_count(&self) -> usize {
        self.equations.iter().filter(|e| e.is_recursive()).count()
    }

    /// Concatenation preserving order: `self`'s equations then `other`'s.
    pub fn merged_with(&self, other: &Program) -> Program {
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Program::new(eqs)
    }

    /// All symbols occurring anywhere in the program, first-occurrence order.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        for eq in &self.equations {
            for sym in eq.lhs.symbols().into_iter().chain(eq.rhs.symbols()) {
                if !out.contains(&sym) {
                    out.push(sym);
                }
            }
        }
        out
    }

    /// Symbols defined by the program: the lhs root symbols.
    pub fn defined_symbols(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        for eq in &self.equations {
            if let Some(sym) = eq.lhs.root_symbol()
                && !out.contains(sym)
            {
                out.push(sym.clone());
            }
        }
        out
    }

    /// Per-equation canonical renaming, order preserved.
    pub fn canonical(&self) -> Program {
        Program::new(self.equations.iter().map(Equation::canonical).collect())
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, eq) in self.equations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", eq)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_equation, parse_program};

    fn eq(src: &str) -> Equation {
        parse_equation(src).unwrap()
    }

    #[test]
    fn orphans_and_legality() {
        assert!(eq("sum_n(A) = A").is_program_legal());
        assert!(eq("square_bino(A,0) = 0").is_program_legal());
        // orphan variable on the rhs
        assert!(!eq("square_bino(A,B) = C").is_program_legal());
        // lhs rooted at a variable or constant
        assert!(!eq("A = 0").is_program_legal());
        assert!(!eq("0 = 0").is_program_legal());
        // lhs rooted at a constructor
        assert!(!eq("s(A) = A").is_program_legal());
    }

    #[test]
    fn recursive_classification() {
        assert!(eq("sum_n(s(N)) = sum(N,sum_n(N))").is_recursive());
        assert!(!eq("sum_n(N) = N").is_recursive());
        assert!(!eq("sum(N,s(M)) = s(prod(N,M))").is_recursive());
    }

    #[test]
    fn rename_fresh_examples() {
        let mut vargen = VarGen::new();
        let renamed = eq("sum_n(A) = A").rename_fresh(&mut vargen);
        assert_eq!(renamed, eq("sum_n(N1) = N1"));

        let mut vargen = VarGen::new();
        let ground = eq("cube(0) = 0");
        assert_eq!(ground.rename_fresh(&mut vargen), ground);

        let mut vargen = VarGen::new();
        assert_eq!(
            eq("f(X,Y) = X").rename_fresh(&mut vargen),
            eq("f(N1,N2) = N1")
        );
    }

    #[test]
    fn canonical_renaming() {
        assert_eq!(eq("f(M,N) = M").canonical(), eq("f(A,B) = A"));
        assert_eq!(eq("f(Z,Z) = Z").canonical(), eq("f(A,A) = A"));
        // equal up to renaming
        assert_eq!(
            eq("sum_n(s(Q)) = Q").canonical(),
            eq("sum_n(s(A)) = A").canonical()
        );
    }

    #[test]
    fn program_class_counts() {
        let p = parse_program("sum_n(0) = 0\nsum_n(s(A)) = s(sum(sum_n(A),A))").unwrap();
        assert_eq!(p.basic_count(), 1);
        assert_eq!(p.recursive_count(), 1);
    }

    #[test]
    fn equation_term_round_trip() {
        let e = eq("sum(N,s(M)) = s(sum(N,M))");
        assert_eq!(Equation::from_term(&e.to_term()).unwrap(), e);
    }
}
