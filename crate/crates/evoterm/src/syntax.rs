//! Concrete syntax: lexer, parser and printer for the term language.
//!
//! Function names are non-empty lowercase sequences (underscores and digits
//! allowed after the first letter); variables are non-empty uppercase
//! sequences optionally followed by digits. `0` is the zero constant, `s`
//! the successor, `[H|T]` the list cell and `[]` the empty list. Decimal
//! numerals are sugar for successor chains and are accepted anywhere a term
//! is. Comments start with `%`; `;` and newline both terminate equations.

use std::fmt;

use crate::program::{Equation, Program};
use crate::term::{CONS, NIL, Symbol, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at {}:{}: {}",
            self.line, self.col, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(String),
    Var(String),
    Number(u64),
    LParen,
    RParen,
    Comma,
    Equals,
    LBracket,
    RBracket,
    Pipe,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Name(n) => write!(f, "`{}`", n),
            Token::Var(v) => write!(f, "`{}`", v),
            Token::Number(k) => write!(f, "`{}`", k),
            Token::LParen => write!(f, "`(`"),
            Token::RParen => write!(f, "`)`"),
            Token::Comma => write!(f, "`,`"),
            Token::Equals => write!(f, "`=`"),
            Token::LBracket => write!(f, "`[`"),
            Token::RBracket => write!(f, "`]`"),
            Token::Pipe => write!(f, "`|`"),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    line: usize,
    col: usize,
}

type Spanned = (Token, usize, usize);

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer {
            src,
            chars: src.char_indices().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let next = self.chars.next();
        if let Some((_, c)) = next {
            if c == '\n' {
                self.line += 1;
                self.col = 1;
            } else {
                self.col += 1;
            }
        }
        next
    }

    fn tokenize(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        while let Some(&(start, c)) = self.chars.peek() {
            let (line, col) = (self.line, self.col);
            match c {
                ' ' | '\t' | '\r' | '\n' => {
                    self.bump();
                }
                '%' => {
                    while let Some(&(_, c)) = self.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                '(' => {
                    self.bump();
                    out.push((Token::LParen, line, col));
                }
                ')' => {
                    self.bump();
                    out.push((Token::RParen, line, col));
                }
                ',' => {
                    self.bump();
                    out.push((Token::Comma, line, col));
                }
                '=' => {
                    self.bump();
                    out.push((Token::Equals, line, col));
                }
                '[' => {
                    self.bump();
                    out.push((Token::LBracket, line, col));
                }
                ']' => {
                    self.bump();
                    out.push((Token::RBracket, line, col));
                }
                '|' => {
                    self.bump();
                    out.push((Token::Pipe, line, col));
                }
                'a'..='z' => {
                    let mut end = start;
                    while let Some(&(i, c)) = self.chars.peek() {
                        if c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_' {
                            end = i + c.len_utf8();
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    out.push((Token::Name(self.src[start..end].to_string()), line, col));
                }
                'A'..='Z' => {
                    let mut end = start;
                    let mut seen_digit = false;
                    while let Some(&(i, c)) = self.chars.peek() {
                        let ok = if c.is_ascii_uppercase() {
                            !seen_digit
                        } else if c.is_ascii_digit() {
                            seen_digit = true;
                            true
                        } else {
                            false
                        };
                        if ok {
                            end = i + c.len_utf8();
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    out.push((Token::Var(self.src[start..end].to_string()), line, col));
                }
                '0'..='9' => {
                    let mut end = start;
                    while let Some(&(i, c)) = self.chars.peek() {
                        if c.is_ascii_digit() {
                            end = i + c.len_utf8();
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    let text = &self.src[start..end];
                    let value = text
                        .parse::<u64>()
                        .map_err(|_| self.error(format!("numeral `{}` is too large", text)))?;
                    out.push((Token::Number(value), line, col));
                }
                other => {
                    return Err(self.error(format!("unexpected character `{}`", other)));
                }
            }
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    end_line: usize,
    end_col: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Parser, ParseError> {
        let lexer = Lexer::new(src);
        let end_line = src.lines().count().max(1);
        let end_col = src
            .lines()
            .last()
            .map(|l| l.chars().count() + 1)
            .unwrap_or(1);
        Ok(Parser {
            tokens: lexer.tokenize()?,
            pos: 0,
            end_line,
            end_col,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _, _)| t)
    }

    fn bump(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.pos).map(|(t, _, _)| t.clone());
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or((self.end_line, self.end_col))
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if *t == want => {
                self.bump();
                Ok(())
            }
            Some(t) => Err(self.error(format!("expected {}, found {}", want, t))),
            None => Err(self.error(format!("expected {}, found end of input", want))),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek().cloned() {
            Some(Token::Var(name)) => {
                self.bump();
                Ok(Term::var(&name))
            }
            Some(Token::Number(k)) => {
                self.bump();
                Ok(peano(k))
            }
            Some(Token::Name(name)) => {
                self.bump();
                if self.peek() == Some(&Token::LParen) {
                    self.bump();
                    let mut args = vec![self.term()?];
                    while self.peek() == Some(&Token::Comma) {
                        self.bump();
                        args.push(self.term()?);
                    }
                    self.expect(Token::RParen)?;
                    Ok(Term::app(Symbol::new(&name, args.len()), args))
                } else {
                    Ok(Term::constant(&name))
                }
            }
            Some(Token::LBracket) => {
                self.bump();
                if self.peek() == Some(&Token::RBracket) {
                    self.bump();
                    return Ok(Term::constant(NIL));
                }
                let head = self.term()?;
                self.expect(Token::Pipe)?;
                let tail = self.term()?;
                self.expect(Token::RBracket)?;
                Ok(Term::app(Symbol::new(CONS, 2), vec![head, tail]))
            }
            Some(t) => Err(self.error(format!("expected a term, found {}", t))),
            None => Err(self.error("expected a term, found end of input")),
        }
    }

    fn equation(&mut self) -> Result<Equation, ParseError> {
        if self.peek() == Some(&Token::Equals) {
            return Err(self.error("equation is missing its left-hand side"));
        }
        let lhs = self.term()?;
        self.expect(Token::Equals)?;
        let rhs = self.term()?;
        Ok(Equation::new(lhs, rhs))
    }
}

/// Parses a single term.
pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(src)?;
    let t = p.term()?;
    if !p.at_end() {
        return Err(p.error("trailing input after term"));
    }
    Ok(t)
}

/// Parses a single equation `lhs = rhs`. Program-legality is not enforced
/// here; generalization enumerates illegal candidates before filtering.
pub fn parse_equation(src: &str) -> Result<Equation, ParseError> {
    let mut p = Parser::new(src)?;
    let eq = p.equation()?;
    if !p.at_end() {
        return Err(p.error("trailing input after equation"));
    }
    Ok(eq)
}

/// Parses a program: equations separated by `;` or newlines, `%` comments.
pub fn parse_program(src: &str) -> Result<Program, ParseError> {
    let mut equations = Vec::new();
    for (i, line) in src.lines().enumerate() {
        let line_no = i + 1;
        for piece in line.split(';') {
            let without_comment = match piece.find('%') {
                Some(i) => &piece[..i],
                None => piece,
            };
            if without_comment.trim().is_empty() {
                continue;
            }
            let eq = parse_equation(without_comment).map_err(|e| ParseError {
                line: line_no,
                col: e.col,
                message: e.message,
            })?;
            equations.push(eq);
            if piece.contains('%') {
                break;
            }
        }
    }
    Ok(Program::new(equations))
}

/// Renders a term. With `numeral_sugar`, maximal ground successor chains
/// ending in `0` print as decimal numerals.
pub fn print_term(term: &Term, numeral_sugar: bool) -> String {
    let mut out = String::new();
    write_term(term, numeral_sugar, &mut out);
    out
}

pub fn print_equation(eq: &Equation, numeral_sugar: bool) -> String {
    format!(
        "{} = {}",
        print_term(&eq.lhs, numeral_sugar),
        print_term(&eq.rhs, numeral_sugar)
    )
}

fn write_term(term: &Term, sugar: bool, out: &mut String) {
    if sugar && let Some(k) = peano_inverse(term) {
        out.push_str(&k.to_string());
        return;
    }
    match term {
        Term::Var(name) => out.push_str(name),
        Term::App(sym, args) => {
            if sym.name() == CONS && args.len() == 2 {
                out.push('[');
                write_term(&args[0], sugar, out);
                out.push('|');
                write_term(&args[1], sugar, out);
                out.push(']');
                return;
            }
            out.push_str(sym.name());
            if !args.is_empty() {
                out.push('(');
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    write_term(a, sugar, out);
                }
                out.push(')');
            }
        }
    }
}

/// The Peano numeral `s^k(0)`.
pub fn peano(k: u64) -> Term {
    let mut t = Term::zero();
    for _ in 0..k {
        t = Term::succ(t);
    }
    t
}

/// Inverse of [`peano`]: succeeds only on ground successor chains ending in `0`.
pub fn peano_inverse(term: &Term) -> Option<u64> {
    let mut k = 0u64;
    let mut cur = term;
    loop {
        match cur {
            Term::App(sym, args) if sym.name() == crate::term::SUCC && args.len() == 1 => {
                k += 1;
                cur = &args[0];
            }
            Term::App(sym, args) if sym.name() == crate::term::ZERO && args.is_empty() => {
                return Some(k);
            }
            _ => return None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_term_examples() {
        let t = parse_term("sum(N,s(M))").unwrap();
        assert_eq!(print_term(&t, false), "sum(N,s(M))");
        assert_eq!(parse_term("2").unwrap(), peano(2));
        let cell = parse_term("[A|[]]").unwrap();
        assert_eq!(print_term(&cell, false), "[A|[]]");
        assert_eq!(cell.root_symbol().unwrap().name(), CONS);
    }

    #[test]
    fn parse_equation_examples() {
        let eq = parse_equation("cube_bino(0,0) = 0").unwrap();
        assert!(eq.is_ground());
        let eq = parse_equation("sum_n(1) = 1").unwrap();
        assert_eq!(eq, parse_equation("sum_n(s(0)) = s(0)").unwrap());
        let err = parse_equation("= 0").unwrap_err();
        assert!(err.message.contains("left-hand side"), "{}", err);
    }

    #[test]
    fn print_term_examples() {
        assert_eq!(print_term(&peano(3), true), "3");
        assert_eq!(print_term(&peano(3), false), "s(s(s(0)))");
        let t = parse_term("sum(s(N),M)").unwrap();
        assert_eq!(print_term(&t, false), "sum(s(N),M)");
        assert_eq!(print_term(&t, true), "sum(s(N),M)");
        let cell = parse_term("[X|[]]").unwrap();
        assert_eq!(print_term(&cell, false), "[X|[]]");
    }

    #[test]
    fn peano_examples() {
        assert_eq!(print_term(&peano(4), false), "s(s(s(s(0))))");
        assert_eq!(peano_inverse(&parse_term("s(X)").unwrap()), None);
        assert_eq!(peano_inverse(&parse_term("0").unwrap()), Some(0));
        for k in [0u64, 1, 7, 100] {
            assert_eq!(peano_inverse(&peano(k)), Some(k));
        }
    }

    #[test]
    fn numeral_sugar_nested() {
        let t = parse_term("sum(2,s(s(X)))").unwrap();
        assert_eq!(print_term(&t, true), "sum(2,s(s(X)))");
        assert_eq!(print_term(&t, false), "sum(s(s(0)),s(s(X)))");
    }

    #[test]
    fn variable_names_with_digits() {
        let t = parse_term("f(N1,N12)").unwrap();
        assert_eq!(print_term(&t, false), "f(N1,N12)");
        // digits end a variable: `N1A` does not lex as one variable
        assert!(parse_term("N1A").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_term("sum(N,").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.col >= 7, "{:?}", err);
        let err = parse_term("sum(N,s(M)").unwrap_err();
        assert!(err.message.contains("expected"), "{}", err);
    }

    #[test]
    fn parse_program_with_separators_and_comments() {
        let src = "% background\nsum(N,0) = N; sum(N,s(M)) = s(sum(N,M))\n\nprod(N,0) = 0 % tail comment\n";
        let p = parse_program(src).unwrap();
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn parse_program_reports_line() {
        let err = parse_program("sum(N,0) = N\nsum(N, = 0\n").unwrap_err();
        assert_eq!(err.line, 2);
    }
}
