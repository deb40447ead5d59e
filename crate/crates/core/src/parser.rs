//! Recursive-descent parser for matrix entries.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INTEGER)?
//! atom   := INTEGER | IDENT | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`. Ratios such as
//! `9/2` are ordinary divisions of integer literals. There is no implicit
//! multiplication and no floating-point syntax.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::{Coeff, Polynomial};
use crate::rational::RationalFunction;
use crate::space::ParamSpace;

const MAX_EXPONENT: u32 = 1024;

/// Where an expression came from, for diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Origin {
    pub name: String,
    pub line: usize,
    pub column: usize,
}

impl Default for Origin {
    fn default() -> Self {
        Origin {
            name: "<input>".to_string(),
            line: 1,
            column: 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExprSource<'a> {
    pub text: &'a str,
    pub origin: Origin,
}

impl<'a> ExprSource<'a> {
    pub fn new(text: &'a str) -> Self {
        ExprSource {
            text,
            origin: Origin::default(),
        }
    }

    pub fn with_origin(text: &'a str, origin: Origin) -> Self {
        ExprSource { text, origin }
    }

    fn position(&self, offset: usize) -> Position {
        let offset = offset.min(self.text.len());
        let before = &self.text[..offset];
        let newlines = before.matches('\n').count();
        let column = match before.rfind('\n') {
            Some(i) => offset - i,
            None => self.origin.column + offset,
        };
        Position {
            name: self.origin.name.clone(),
            line: self.origin.line + newlines,
            column,
            offset,
        }
    }
}

/// A location in the original document. `offset` is a byte offset into the
/// expression text and never exceeds its length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position {
    pub name: String,
    pub line: usize,
    pub column: usize,
    pub offset: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.name, self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownIdentifier(String),
    Syntax { found: String, expected: Vec<&'static str> },
    ZeroDivisor,
    ExponentTooLarge(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{position}: {}", describe(.kind))]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: Position,
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::UnknownIdentifier(name) => format!("unknown identifier `{name}`"),
        ParseErrorKind::Syntax { found, expected } => {
            format!("unexpected {found}; expected one of {}", expected.join(", "))
        }
        ParseErrorKind::ZeroDivisor => "division by an expression that is identically zero".into(),
        ParseErrorKind::ExponentTooLarge(e) => {
            format!("exponent {e} exceeds the limit of {MAX_EXPONENT}")
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(i) => format!("integer `{i}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

const OPERAND: &[&str] = &["integer", "identifier", "`(`", "`-`"];

struct Parser<'a> {
    src: &'a ExprSource<'a>,
    space: &'a ParamSpace,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    depth: usize,
}

/// Parses `src` into an exact element of `F(z)(s)` over `space`.
pub fn parse_expr(src: &ExprSource<'_>, space: &ParamSpace) -> Result<RationalFunction, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        src,
        space,
        toks,
        pos: 0,
        depth: 0,
    };
    let value = p.expr()?;
    let (tok, at) = p.peek();
    if *tok != Tok::End {
        let found = tok.describe();
        let at = *at;
        let expected = if *tok == Tok::RParen {
            vec!["`+`", "`-`", "`*`", "`/`", "end of input"]
        } else {
            vec!["`+`", "`-`", "`*`", "`/`", "`^`", "end of input"]
        };
        return Err(p.syntax(at, found, expected));
    }
    Ok(value)
}

/// Convenience wrapper with a default origin.
pub fn parse_str(text: &str, space: &ParamSpace) -> Result<RationalFunction, ParseError> {
    parse_expr(&ExprSource::new(text), space)
}

fn tokenize(src: &ExprSource<'_>) -> Result<Vec<(Tok, usize)>, ParseError> {
    let text = src.text;
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(ParseError {
                    kind: ParseErrorKind::Syntax {
                        found: format!("character `{ch}`"),
                        expected: vec!["integer", "identifier", "operator", "parenthesis"],
                    },
                    position: src.position(start),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax(&self, at: usize, found: String, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            kind: ParseErrorKind::Syntax { found, expected },
            position: self.src.position(at),
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().0 {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().0 {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let (_, at) = self.bump();
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(ParseError {
                            kind: ParseErrorKind::ZeroDivisor,
                            position: self.src.position(at),
                        });
                    }
                    acc = &acc / &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, ParseError> {
        if self.peek().0 == Tok::Minus {
            self.bump();
            self.enter()?;
            let v = self.unary();
            self.depth -= 1;
            return Ok(-v?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction, ParseError> {
        let base = self.atom()?;
        if self.peek().0 != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, at) = self.bump();
        match tok {
            Tok::Int(k) => {
                let e = u32::try_from(&k)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| ParseError {
                        kind: ParseErrorKind::ExponentTooLarge(k.to_string()),
                        position: self.src.position(at),
                    })?;
                Ok(base.pow(e))
            }
            other => Err(self.syntax(at, other.describe(), vec!["non-negative integer exponent"])),
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > 256 {
            let at = self.peek().1;
            return Err(self.syntax(at, "nesting deeper than 256 levels".into(), OPERAND.to_vec()));
        }
        Ok(())
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Int(n) => Ok(RationalFunction::constant(self.space, Coeff::from_integer(n))),
            Tok::Ident(name) => match self.space.index_of(&name) {
                Some(i) => Ok(Polynomial::var(self.space, i).into()),
                None => Err(ParseError {
                    kind: ParseErrorKind::UnknownIdentifier(name),
                    position: self.src.position(at),
                }),
            },
            Tok::LParen => {
                self.enter()?;
                let inner = self.expr()?;
                self.depth -= 1;
                let (close, cat) = self.bump();
                if close != Tok::RParen {
                    return Err(self.syntax(
                        cat,
                        close.describe(),
                        vec!["`)`", "`+`", "`-`", "`*`", "`/`", "`^`"],
                    ));
                }
                Ok(inner)
            }
            other => Err(self.syntax(at, other.describe(), OPERAND.to_vec())),
        }
    }
}
