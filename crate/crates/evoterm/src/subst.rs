//! Substitutions, one-way matching and syntactic unification.

use std::fmt;
use std::sync::Arc;

use crate::term::Term;

/// A finite map from variable names to terms. Identity bindings are never
/// stored; the empty substitution is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Substitution {
    // Sorted by variable name; small enough that linear scans are fine.
    bindings: Vec<(Arc<str>, Term)>,
}

impl Substitution {
    pub fn identity() -> Substitution {
        Substitution::default()
    }

    pub fn singleton(var: &str, term: Term) -> Substitution {
        let mut s = Substitution::identity();
        s.bind(Arc::from(var), term);
        s
    }

    pub fn is_identity(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn get(&self, var: &str) -> Option<&Term> {
        self.bindings
            .iter()
            .find(|(name, _)| &**name == var)
            .map(|(_, t)| t)
    }

    pub fn domain(&self) -> impl Iterator<Item = &Arc<str>> {
        self.bindings.iter().map(|(name, _)| name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Arc<str>, &Term)> {
        self.bindings.iter().map(|(name, t)| (name, t))
    }

    /// Inserts or overwrites a binding, dropping identities.
    pub fn bind(&mut self, var: Arc<str>, term: Term) {
        if let Term::Var(name) = &term
            && *name == var
        {
            self.bindings.retain(|(n, _)| *n != var);
            return;
        }
        match self.bindings.binary_search_by(|(n, _)| n.cmp(&var)) {
            Ok(i) => self.bindings[i].1 = term,
            Err(i) => self.bindings.insert(i, (var, term)),
        }
    }

    pub fn is_ground(&self) -> bool {
        self.bindings.iter().all(|(_, t)| t.is_ground())
    }

    /// Homomorphic application: replaces bound variables, leaves the rest.
    pub fn apply(&self, term: &Term) -> Term {
        if self.is_identity() {
            return term.clone();
        }
        match term {
            Term::Var(name) => match self.get(name) {
                Some(t) => t.clone(),
                None => term.clone(),
            },
            Term::App(sym, args) => {
                let new_args: Vec<Term> = args.iter().map(|a| self.apply(a)).collect();
                Term::App(sym.clone(), new_args.into())
            }
        }
    }

    /// Functional composition: `compose(d, s)` applied to `t` equals
    /// `d(s(t))`.
    pub fn compose(delta: &Substitution, sigma: &Substitution) -> Substitution {
        let mut out = Substitution::identity();
        for (name, t) in sigma.iter() {
            out.bind(name.clone(), delta.apply(t));
        }
        for (name, t) in delta.iter() {
            if sigma.get(name).is_none() {
                out.bind(name.clone(), t.clone());
            }
        }
        out
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (name, t)) in self.bindings.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}/{}", name, crate::syntax::print_term(t, false))?;
        }
        write!(f, "}}")
    }
}

/// One-way matching: finds `sigma` with `sigma(pattern) = subject`, binding
/// only pattern variables. Non-linear patterns require consistent bindings.
pub fn match_term(pattern: &Term, subject: &Term) -> Option<Substitution> {
    let mut sigma = Substitution::identity();
    if match_into(pattern, subject, &mut sigma) {
        Some(sigma)
    } else {
        None
    }
}

fn match_into(pattern: &Term, subject: &Term, sigma: &mut Substitution) -> bool {
    match pattern {
        Term::Var(name) => match sigma.get(name) {
            Some(bound) => bound == subject,
            None => {
                // Identity bindings are dropped by `bind`, which is fine:
                // an absent binding acts as the identity on application.
                sigma.bind(name.clone(), subject.clone());
                true
            }
        },
        Term::App(f, f_args) => match subject {
            Term::App(g, g_args) if f == g => f_args
                .iter()
                .zip(g_args.iter())
                .all(|(p, s)| match_into(p, s, sigma)),
            _ => false,
        },
    }
}

/// Most general unifier of `a` and `b`, or `None`. Occurs-check enforced;
/// the returned substitution is idempotent.
pub fn unify(a: &Term, b: &Term) -> Option<Substitution> {
    let mut sigma = Substitution::identity();
    let mut work = vec![(a.clone(), b.clone())];
    while let Some((s, t)) = work.pop() {
        let s = sigma.apply(&s);
        let t = sigma.apply(&t);
        match (&s, &t) {
            (Term::Var(x), Term::Var(y)) if x == y => {}
            (Term::Var(x), _) => {
                if t.contains_var(x) {
                    return None; // occurs check
                }
                let elim = Substitution::singleton(x, t.clone());
                sigma = Substitution::compose(&elim, &sigma);
                sigma.bind(x.clone(), t.clone());
            }
            (_, Term::Var(y)) => {
                if s.contains_var(y) {
                    return None;
                }
                let elim = Substitution::singleton(y, s.clone());
                sigma = Substitution::compose(&elim, &sigma);
                sigma.bind(y.clone(), s.clone());
            }
            (Term::App(f, f_args), Term::App(g, g_args)) => {
                if f != g {
                    return None;
                }
                for pair in f_args.iter().cloned().zip(g_args.iter().cloned()) {
                    work.push(pair);
                }
            }
        }
    }
    Some(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_term;

    fn t(src: &str) -> Term {
        parse_term(src).unwrap()
    }

    #[test]
    fn apply_examples() {
        let sigma = Substitution::singleton("X", t("s(0)"));
        assert_eq!(sigma.apply(&t("sum(X,X)")), t("sum(s(0),s(0))"));
        assert_eq!(
            Substitution::identity().apply(&t("sum(X,Y)")),
            t("sum(X,Y)")
        );

        let mut sigma = Substitution::identity();
        sigma.bind("A".into(), t("0"));
        sigma.bind("B".into(), t("s(0)"));
        assert_eq!(
            sigma.apply(&t("square_bino(A,B)")),
            t("square_bino(0,s(0))")
        );
    }

    #[test]
    fn compose_examples() {
        let delta = Substitution::singleton("Y", t("0"));
        let sigma = Substitution::singleton("X", t("s(Y)"));
        let comp = Substitution::compose(&delta, &sigma);
        assert_eq!(comp.get("X"), Some(&t("s(0)")));
        assert_eq!(comp.get("Y"), Some(&t("0")));

        let sigma = Substitution::singleton("X", t("s(0)"));
        assert_eq!(
            Substitution::compose(&Substitution::identity(), &sigma),
            sigma
        );

        let delta = Substitution::singleton("X", t("0"));
        let sigma = Substitution::singleton("X", t("s(0)"));
        let comp = Substitution::compose(&delta, &sigma);
        assert_eq!(comp.get("X"), Some(&t("s(0)")));
        assert_eq!(comp.len(), 1);
    }

    #[test]
    fn identity_bindings_are_dropped() {
        let mut sigma = Substitution::identity();
        sigma.bind("X".into(), t("X"));
        assert!(sigma.is_identity());
    }

    #[test]
    fn match_examples() {
        let sigma = match_term(&t("sum(N,0)"), &t("sum(s(0),0)")).unwrap();
        assert_eq!(sigma.get("N"), Some(&t("s(0)")));
        assert_eq!(sigma.len(), 1);

        assert!(match_term(&t("square_bino(A,A)"), &t("square_bino(0,s(0))")).is_none());

        let sigma = match_term(&t("sum(N,s(M))"), &t("sum(0,s(s(0)))")).unwrap();
        assert_eq!(sigma.get("N"), Some(&t("0")));
        assert_eq!(sigma.get("M"), Some(&t("s(0)")));
    }

    #[test]
    fn match_binds_only_pattern_vars() {
        let sigma = match_term(&t("sum(N,M)"), &t("sum(0,s(0))")).unwrap();
        let dom: Vec<String> = sigma.domain().map(|v| v.to_string()).collect();
        assert_eq!(dom, vec!["M", "N"]);
    }

    #[test]
    fn unify_examples() {
        let sigma = unify(&t("sum(X,0)"), &t("sum(s(0),Y)")).unwrap();
        assert_eq!(sigma.get("X"), Some(&t("s(0)")));
        assert_eq!(sigma.get("Y"), Some(&t("0")));

        assert!(unify(&t("X"), &t("s(X)")).is_none());

        let sigma = unify(&t("A"), &t("sum(B,C)")).unwrap();
        assert_eq!(sigma.get("A"), Some(&t("sum(B,C)")));
    }

    #[test]
    fn unify_yields_unifier() {
        let a = t("sum(X,s(Y))");
        let b = t("sum(s(Z),Z)");
        let sigma = unify(&a, &b).unwrap();
        assert_eq!(sigma.apply(&a), sigma.apply(&b));
    }
}
