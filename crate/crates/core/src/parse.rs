//! Text formats: the expression grammar and `.alg` presentation files.
//!
//! Expressions use identifiers, integer or rational literals (`3/4`), `+`,
//! `-`, `*`, `^` with a nonnegative integer exponent, and parentheses.
//! Products are evaluated in the order written. Juxtaposition is not
//! multiplication. A vector literal is `[f1, f2, ..., fm]`.
//!
//! Presentation files are line oriented:
//!
//! ```text
//! field QQ            # or: field GF 7
//! vars x y
//! rel y*x = x*y + 1   # one line per non-commuting pair, later variable first
//! ```

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraPresentation, Exponent, Polynomial, Relation};
use crate::field::{FieldError, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    Lexical(char),
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("exponent must be a nonnegative integer")]
    BadExponent,
    #[error("unexpected `{0}`")]
    Unexpected(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected a vector literal `[...]`")]
    ExpectedVector,
    #[error("vector literals are not allowed here")]
    UnexpectedVector,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A parse error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(BigInt),
    Op(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => f.write_str(s),
            Tok::Num(n) => write!(f, "{n}"),
            Tok::Op(c) => write!(f, "{c}"),
        }
    }
}

struct Lexed {
    toks: Vec<(Tok, usize, usize)>,
    end: (usize, usize),
}

fn lex(text: &str, line0: usize) -> Result<Lexed, ParseError> {
    let mut toks = Vec::new();
    let mut line = line0;
    let mut col = 1;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (l, c) = (line, col);
        if ch == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if ch.is_whitespace() {
            chars.next();
            col += 1;
        } else if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            toks.push((Tok::Num(s.parse().expect("digits")), l, c));
        } else if ch.is_alphabetic() || ch == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            toks.push((Tok::Ident(s), l, c));
        } else if "+-*^/()[],".contains(ch) {
            chars.next();
            col += 1;
            toks.push((Tok::Op(ch), l, c));
        } else {
            return Err(ParseError { line: l, column: c, kind: ParseErrorKind::Lexical(ch) });
        }
    }
    Ok(Lexed { toks, end: (line, col) })
}

struct Parser<'a> {
    lexed: Lexed,
    pos: usize,
    algebra: &'a Arc<AlgebraPresentation>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.lexed.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> (usize, usize) {
        self.lexed.toks.get(self.pos).map(|t| (t.1, t.2)).unwrap_or(self.lexed.end)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        let (line, column) = self.here();
        ParseError { line, column, kind }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::Unexpected(t.to_string())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<(), ParseError> {
        if self.eat(op) {
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let exp = match self.peek() {
            Some(Tok::Num(n)) => u32::try_from(n.clone()).map_err(|_| self.err(ParseErrorKind::BadExponent))?,
            Some(_) => return Err(self.err(ParseErrorKind::BadExponent)),
            None => return Err(self.err(ParseErrorKind::UnexpectedEnd)),
        };
        self.pos += 1;
        let mut acc = Polynomial::one(self.algebra);
        for _ in 0..exp {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let field = self.algebra.field();
        match self.peek().cloned() {
            Some(Tok::Num(num)) => {
                self.pos += 1;
                let mut den = BigInt::from(1);
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) => {
                            den = d;
                            self.pos += 1;
                        }
                        _ => return Err(self.unexpected()),
                    }
                }
                let c = field.from_ratio(&num, &den).map_err(|e| self.err(e.into()))?;
                Ok(Polynomial::constant(self.algebra, c))
            }
            Some(Tok::Ident(name)) => {
                let v = self
                    .algebra
                    .var_index(&name)
                    .ok_or_else(|| self.err(ParseErrorKind::UnknownIdentifier(name.clone())))?;
                self.pos += 1;
                Ok(Polynomial::variable(self.algebra, v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Op('[')) => Err(self.err(ParseErrorKind::UnexpectedVector)),
            _ => Err(self.unexpected()),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos == self.lexed.toks.len() {
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }
}

fn parse_at(
    text: &str,
    algebra: &Arc<AlgebraPresentation>,
    line: usize,
) -> Result<Polynomial, ParseError> {
    let mut p = Parser { lexed: lex(text, line)?, pos: 0, algebra };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses and evaluates an expression in `algebra`.
pub fn parse_expression(text: &str, algebra: &Arc<AlgebraPresentation>) -> Result<Polynomial, ParseError> {
    parse_at(text, algebra, 1)
}

/// Parses a vector literal `[f1, ..., fm]` into its components.
pub fn parse_vector(text: &str, algebra: &Arc<AlgebraPresentation>) -> Result<Vec<Polynomial>, ParseError> {
    let mut p = Parser { lexed: lex(text, 1)?, pos: 0, algebra };
    if !p.eat('[') {
        return Err(p.err(ParseErrorKind::ExpectedVector));
    }
    let mut comps = vec![p.expr()?];
    while p.eat(',') {
        comps.push(p.expr()?);
    }
    p.expect(']')?;
    p.finish()?;
    Ok(comps)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Expression(#[from] ParseError),
    #[error("line {line}: {source}")]
    Algebra { line: usize, source: AlgebraError },
    #[error("line {line}: {source}")]
    Field { line: usize, source: FieldError },
    #[error("missing `{0}` line")]
    Missing(&'static str),
}

/// Parses the `.alg` presentation format.
pub fn parse_presentation(text: &str) -> Result<Arc<AlgebraPresentation>, PresentationError> {
    let mut field = None;
    let mut vars: Option<(usize, Vec<String>)> = None;
    // (line, column offset of the right-hand side, relation body)
    let mut rels: Vec<(usize, usize, String)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let syntax = |message: &str| PresentationError::Syntax { line, message: message.to_string() };
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(syntax("duplicate field line"));
                }
                let parts: Vec<&str> = rest.split_whitespace().collect();
                field = Some(match parts.as_slice() {
                    ["QQ"] => FieldSpec::Rationals,
                    ["GF", p] => {
                        let p: u64 = p.parse().map_err(|_| syntax("expected a prime after GF"))?;
                        FieldSpec::prime(p).map_err(|source| PresentationError::Field { line, source })?
                    }
                    _ => return Err(syntax("expected `field QQ` or `field GF <p>`")),
                });
            }
            "vars" => {
                if vars.is_some() {
                    return Err(syntax("duplicate vars line"));
                }
                vars = Some((line, rest.split_whitespace().map(str::to_string).collect()));
            }
            "rel" => rels.push((line, raw.find('=').map_or(0, |p| p + 1), rest.to_string())),
            _ => return Err(syntax(&format!("unknown keyword `{keyword}`"))),
        }
    }
    let field = field.ok_or(PresentationError::Missing("field"))?;
    let (vars_line, names) = vars.ok_or(PresentationError::Missing("vars"))?;
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let ring = AlgebraPresentation::commutative(field, &name_refs)
        .map_err(|source| PresentationError::Algebra { line: vars_line, source })?;

    let mut relations = Vec::new();
    let mut rel_lines = Vec::new();
    for (line, rhs_offset, body) in rels {
        let syntax = |message: &str| PresentationError::Syntax { line, message: message.to_string() };
        let (lhs, rhs) = body.split_once('=').ok_or_else(|| syntax("expected `a*b = expression`"))?;
        let (upper, lower) = lhs.split_once('*').ok_or_else(|| syntax("left side must be `a*b`"))?;
        let (upper, lower) = (upper.trim(), lower.trim());
        let algebra_err = |source| PresentationError::Algebra { line, source };
        let i = ring.var_index(lower).ok_or_else(|| algebra_err(AlgebraError::UnknownVariable(lower.into())))?;
        let j = ring.var_index(upper).ok_or_else(|| algebra_err(AlgebraError::UnknownVariable(upper.into())))?;
        let value = parse_at(rhs, &ring, line).map_err(|mut e| {
            if e.line == line {
                e.column += rhs_offset;
            }
            e
        })?;
        let quad = Exponent::zero(ring.nvars()).bumped(i, 1).bumped(j, 1);
        let c = value.coefficient(&quad).cloned().unwrap_or_else(|| field.zero());
        let mut rel = Relation::new(upper, lower, c);
        for (e, coeff) in value.terms() {
            if *e == quad {
                continue;
            }
            let word: Vec<&str> = e.to_word().into_iter().map(|v| name_refs[v]).collect();
            rel = rel.plus(&word, coeff.clone());
        }
        relations.push(rel);
        rel_lines.push(line);
    }
    // Validate one relation at a time so errors carry the right line.
    for (k, line) in rel_lines.iter().enumerate() {
        AlgebraPresentation::new(field, &name_refs, &relations[..=k])
            .map_err(|source| PresentationError::Algebra { line: *line, source })?;
    }
    AlgebraPresentation::new(field, &name_refs, &relations)
        .map_err(|source| PresentationError::Algebra { line: vars_line, source })
}
