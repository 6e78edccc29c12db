//! Datasets: positive basic examples, positive extra examples and
//! background knowledge, plus the on-disk dataset format.
//!
//! File format: sections headed `#basic`, `#extra` and `#background`, each
//! holding equations one per line (or `;`-separated). `#basic` and `#extra`
//! lines are ground equations; `#background` lines are program-legal
//! equations. Comments start with `%`.

use std::fmt;

use crate::program::{Equation, Program};
use crate::syntax::{self, ParseError};
use crate::term::Symbol;

/// A positive example: a ground equation with a constructor-term rhs.
pub type Example = Equation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    pub positive_basic: Vec<Example>,
    pub positive_extra: Vec<Example>,
    pub background: Program,
    pub target: Symbol,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DatasetError {
    Parse(ParseError),
    NoBasicExamples,
    NotGround(String),
    RhsNotConstructor(String),
    LhsNotTarget(String),
    LhsNotFunction(String),
    IllegalBackground(String),
}

impl fmt::Display for DatasetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatasetError::Parse(e) => write!(f, "{}", e),
            DatasetError::NoBasicExamples => {
                write!(f, "dataset has no positive basic examples")
            }
            DatasetError::NotGround(eq) => {
                write!(f, "example `{}` is not ground", eq)
            }
            DatasetError::RhsNotConstructor(eq) => {
                write!(f, "example `{}` has a non-constructor right-hand side", eq)
            }
            DatasetError::LhsNotTarget(eq) => {
                write!(f, "example `{}` is not rooted at the target symbol", eq)
            }
            DatasetError::LhsNotFunction(eq) => write!(
                f,
                "example `{}` is not rooted at a non-constant function symbol",
                eq
            ),
            DatasetError::IllegalBackground(eq) => {
                write!(f, "background equation `{}` is not program-legal", eq)
            }
        }
    }
}

impl std::error::Error for DatasetError {}

impl From<ParseError> for DatasetError {
    fn from(e: ParseError) -> Self {
        DatasetError::Parse(e)
    }
}

impl Dataset {
    /// Builds and validates a dataset. The target symbol is the lhs root of
    /// the first basic example; every example must be rooted at it.
    pub fn new(
        positive_basic: Vec<Example>,
        positive_extra: Vec<Example>,
        background: Program,
    ) -> Result<Dataset, DatasetError> {
        let first = positive_basic
            .first()
            .ok_or(DatasetError::NoBasicExamples)?;
        let target = match first.lhs.root_symbol() {
            Some(sym) if !sym.is_constant() && !sym.is_constructor() => sym.clone(),
            _ => return Err(DatasetError::LhsNotFunction(first.to_string())),
        };
        for eq in positive_basic.iter().chain(positive_extra.iter()) {
            if !eq.is_ground() {
                return Err(DatasetError::NotGround(eq.to_string()));
            }
            if !eq.rhs.is_constructor_term() {
                return Err(DatasetError::RhsNotConstructor(eq.to_string()));
            }
            if eq.lhs.root_symbol() != Some(&target) {
                return Err(DatasetError::LhsNotTarget(eq.to_string()));
            }
        }
        for eq in background.equations() {
            if !eq.is_program_legal() {
                return Err(DatasetError::IllegalBackground(eq.to_string()));
            }
        }
        Ok(Dataset {
            positive_basic,
            positive_extra,
            background,
            target,
        })
    }

    /// The deduplicated union of basic and extra examples, order preserved.
    pub fn union_examples(&self) -> Vec<&Example> {
        let mut out: Vec<&Example> = Vec::new();
        for eq in self.positive_basic.iter().chain(self.positive_extra.iter()) {
            if !out.contains(&eq) {
                out.push(eq);
            }
        }
        out
    }

    /// Parses the dataset file format.
    pub fn parse(src: &str) -> Result<Dataset, DatasetError> {
        #[derive(Clone, Copy, PartialEq)]
        enum Section {
            None,
            Basic,
            Extra,
            Background,
        }
        let mut section = Section::None;
        let mut basic = Vec::new();
        let mut extra = Vec::new();
        let mut background = Vec::new();
        for (i, raw_line) in src.lines().enumerate() {
            let line_no = i + 1;
            let line = match raw_line.find('%') {
                Some(p) => &raw_line[..p],
                None => raw_line,
            };
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            match trimmed {
                "#basic" => {
                    section = Section::Basic;
                    continue;
                }
                "#extra" => {
                    section = Section::Extra;
                    continue;
                }
                "#background" => {
                    section = Section::Background;
                    continue;
                }
                other if other.starts_with('#') => {
                    return Err(ParseError {
                        line: line_no,
                        col: 1,
                        message: format!("unknown section heading `{}`", other),
                    }
                    .into());
                }
                _ => {}
            }
            if section == Section::None {
                return Err(ParseError {
                    line: line_no,
                    col: 1,
                    message: "equation before any section heading".to_string(),
                }
                .into());
            }
            for piece in line.split(';') {
                if piece.trim().is_empty() {
                    continue;
                }
                let eq = syntax::parse_equation(piece).map_err(|e| ParseError {
                    line: line_no,
                    col: e.col,
                    message: e.message,
                })?;
                match section {
                    Section::Basic => basic.push(eq),
                    Section::Extra => extra.push(eq),
                    Section::Background => background.push(eq),
                    Section::None => unreachable!(),
                }
            }
        }
        Dataset::new(basic, extra, Program::new(background))
    }

    /// Renders the dataset in the file format, numerals sugared.
    pub fn to_file_format(&self) -> String {
        let mut out = String::new();
        out.push_str("#basic\n");
        for eq in &self.positive_basic {
            out.push_str(&syntax::print_equation(eq, true));
            out.push('\n');
        }
        out.push_str("#extra\n");
        for eq in &self.positive_extra {
            out.push_str(&syntax::print_equation(eq, true));
            out.push('\n');
        }
        out.push_str("#background\n");
        for eq in self.background.equations() {
            out.push_str(&syntax::print_equation(eq, false));
            out.push('\n');
        }
        out
    }

    pub fn signature(&self) -> Signature {
        let mut constructors = vec![
            Symbol::new(crate::term::ZERO, 0),
            Symbol::new(crate::term::SUCC, 1),
        ];
        let mut defined = vec![self.target.clone()];
        let mut note = |sym: &Symbol| {
            if sym.is_constructor() {
                if !constructors.contains(sym) {
                    constructors.push(sym.clone());
                }
            } else if !defined.contains(sym) {
                defined.push(sym.clone());
            }
        };
        for sym in self.background.symbols() {
            note(&sym);
        }
        for eq in self.positive_basic.iter().chain(self.positive_extra.iter()) {
            for sym in eq.lhs.symbols().into_iter().chain(eq.rhs.symbols()) {
                note(&sym);
            }
        }
        Signature {
            constructors,
            defined,
        }
    }
}

/// The symbol alphabet in scope for a run: constructors plus defined
/// (non-constructor) function symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    constructors: Vec<Symbol>,
    defined: Vec<Symbol>,
}

impl Signature {
    pub fn new(constructors: Vec<Symbol>, defined: Vec<Symbol>) -> Signature {
        Signature {
            constructors,
            defined,
        }
    }

    pub fn constructors(&self) -> &[Symbol] {
        &self.constructors
    }

    pub fn defined(&self) -> &[Symbol] {
        &self.defined
    }

    pub fn defined_with_arity(&self, arity: usize) -> Vec<Symbol> {
        self.defined
            .iter()
            .filter(|s| s.arity() == arity)
            .cloned()
            .collect()
    }
}
