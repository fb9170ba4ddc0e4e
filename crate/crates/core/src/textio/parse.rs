//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! poly     := term (('+'|'-') term)*        leading '-' allowed
//! term     := factor ('*' factor)*
//! factor   := base ('^' NAT)?
//! base     := RATIONAL | IDENT | '(' poly ')'
//! RATIONAL := INT ('/' NAT)?
//! ```
//!
//! Multiplication is always explicit; in the free algebra the order of
//! factors is preserved.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::coeff::FieldSpec;
use crate::error::{Error, Result};
use crate::poly::{Alphabet, Monomial, Poly};

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
            Tok::Int(n) => format!("number `{n}`"),
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

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

/// Caps on what a single product or power in an expression may expand to.
const MAX_TERM_PRODUCTS: usize = 4_000_000;
const MAX_DEGREE: usize = 10_000;

fn too_large(pos: Pos) -> Error {
    Error::ExpressionTooLarge {
        line: pos.line,
        column: pos.column,
    }
}

/// `a * b`, refusing products that would blow up.
fn checked_mul<M: Monomial>(a: &Poly<M>, b: &Poly<M>, pos: Pos) -> Result<Poly<M>> {
    let degree = a.degree().finite().unwrap_or(0) + b.degree().finite().unwrap_or(0);
    if a.len().saturating_mul(b.len()) > MAX_TERM_PRODUCTS || degree > MAX_DEGREE {
        return Err(too_large(pos));
    }
    Ok(a * b)
}

fn error(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Int(s.parse().expect("digits")), pos));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(s), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(error(pos, format!("unexpected character `{other}`"))),
        };
        chars.next();
        column += 1;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser<'a, M: Monomial> {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    field: FieldSpec,
    alphabet: &'a Arc<Alphabet>,
    _monomial: std::marker::PhantomData<M>,
}

impl<M: Monomial> Parser<'_, M> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        error(
            self.pos(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        )
    }

    fn poly(&mut self) -> Result<Poly<M>> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
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

    fn term(&mut self) -> Result<Poly<M>> {
        let start = self.pos();
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = checked_mul(&acc, &self.factor()?, start)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly<M>> {
        let start = self.pos();
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                let k: usize = n.try_into().map_err(|_| too_large(start))?;
                if k > MAX_DEGREE {
                    return Err(too_large(start));
                }
                let mut acc = Poly::one(self.field, self.alphabet.clone());
                for _ in 0..k {
                    acc = checked_mul(&acc, &base, start)?;
                }
                Ok(acc)
            }
            other => Err(error(
                pos,
                format!("expected exponent, found {}", other.describe()),
            )),
        }
    }

    fn base(&mut self) -> Result<Poly<M>> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let d = if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Tok::Int(d) => d,
                        other => {
                            return Err(error(
                                dpos,
                                format!("expected denominator, found {}", other.describe()),
                            ))
                        }
                    }
                } else {
                    BigInt::from(1)
                };
                let c = self.field.ratio(&n, &d).map_err(|e| match e {
                    Error::DivisionByZero => error(pos, "zero denominator"),
                    other => other,
                })?;
                Ok(Poly::constant(self.field, self.alphabet.clone(), c))
            }
            Tok::Ident(name) => {
                self.bump();
                Poly::generator(self.field, self.alphabet.clone(), &name)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.poly()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, generator or `(`")),
        }
    }
}

/// Parses `src` into a polynomial over `field` in the generators of
/// `alphabet`.
pub fn parse_poly<M: Monomial>(
    src: &str,
    field: FieldSpec,
    alphabet: &Arc<Alphabet>,
) -> Result<Poly<M>> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
        field,
        alphabet,
        _monomial: std::marker::PhantomData,
    };
    let out = p.poly()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(out)
}
