//! User-defined regular functions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := integer | var | '(' expr ')' | 'abs' '(' expr ')'
//!         | ('min' | 'max') '(' expr ',' expr ')' | '-' factor
//! var    := 'x1' .. 'x6'
//! ```
//!
//! A rational constant `p/q` is an integer divided by an integer.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Seed of the symmetry sampler.
pub const SYMMETRY_SEED: u64 = 0xC0FFEE;
/// Number of random points probed by the symmetry sampler (the all-ones
/// point is probed in addition).
pub const SYMMETRY_SAMPLES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(Rational),
    /// Zero-based variable index, so `x1` is `Var(0)`.
    Var(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Abs(Box<Expr>),
    Min(Box<Expr>, Box<Expr>),
    Max(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn evaluate(&self, x: &[Rational; 6]) -> Result<Rational> {
        Ok(match self {
            Expr::Const(c) => c.clone(),
            Expr::Var(i) => x[*i].clone(),
            Expr::Neg(a) => -a.evaluate(x)?,
            Expr::Add(a, b) => a.evaluate(x)? + b.evaluate(x)?,
            Expr::Sub(a, b) => a.evaluate(x)? - b.evaluate(x)?,
            Expr::Mul(a, b) => a.evaluate(x)? * b.evaluate(x)?,
            Expr::Div(a, b) => {
                let denom = b.evaluate(x)?;
                if denom.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                a.evaluate(x)? / denom
            }
            Expr::Abs(a) => a.evaluate(x)?.abs(),
            Expr::Min(a, b) => a.evaluate(x)?.min(b.evaluate(x)?),
            Expr::Max(a, b) => a.evaluate(x)?.max(b.evaluate(x)?),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Var(i) => write!(f, "x{}", i + 1),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Abs(a) => write!(f, "abs({a})"),
            Expr::Min(a, b) => write!(f, "min({a}, {b})"),
            Expr::Max(a, b) => write!(f, "max({a}, {b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Comma,
    End,
}

fn describe(token: &Token) -> String {
    match token {
        Token::Int(v) => format!("number `{v}`"),
        Token::Ident(s) => format!("identifier `{s}`"),
        Token::Plus => "`+`".into(),
        Token::Minus => "`-`".into(),
        Token::Star => "`*`".into(),
        Token::Slash => "`/`".into(),
        Token::LParen => "`(`".into(),
        Token::RParen => "`)`".into(),
        Token::Comma => "`,`".into(),
        Token::End => "end of input".into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let token = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b',' => Token::Comma,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Token::Int(src[start..i].parse().expect("ascii digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Token::Ident(src[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().expect("in bounds");
                return Err(Error::Syntax { position: start, message: format!("unexpected character `{ch}`") });
            }
        };
        out.push((token, start));
        i += 1;
    }
    out.push((Token::End, src.len()));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn position(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].0.clone();
        if t != Token::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.position(),
            message: format!("expected {wanted}, found {}", describe(self.peek())),
        })
    }

    fn expect(&mut self, token: Token) -> Result<()> {
        if *self.peek() == token {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&describe(&token))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Token::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Token::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let position = self.position();
        match self.peek().clone() {
            Token::Int(v) => {
                self.bump();
                Ok(Expr::Const(Rational::from_integer(v)))
            }
            Token::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Token::Ident(name) => {
                self.bump();
                if let Some(index) = variable_index(&name) {
                    return Ok(Expr::Var(index));
                }
                let arity = match name.as_str() {
                    "abs" => 1,
                    "min" | "max" => 2,
                    _ => return Err(Error::UnknownIdentifier { name, position }),
                };
                self.expect(Token::LParen)?;
                let first = self.expr()?;
                let expr = if arity == 1 {
                    Expr::Abs(Box::new(first))
                } else {
                    self.expect(Token::Comma)?;
                    let second = self.expr()?;
                    if name == "min" {
                        Expr::Min(Box::new(first), Box::new(second))
                    } else {
                        Expr::Max(Box::new(first), Box::new(second))
                    }
                };
                self.expect(Token::RParen)?;
                Ok(expr)
            }
            _ => self.unexpected("a number, variable, function or `(`"),
        }
    }
}

fn variable_index(name: &str) -> Option<usize> {
    match name {
        "x1" => Some(0),
        "x2" => Some(1),
        "x3" => Some(2),
        "x4" => Some(3),
        "x5" => Some(4),
        "x6" => Some(5),
        _ => None,
    }
}

/// Parses an expression without checking symmetry.
pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut parser = Parser { tokens: tokenize(src)?, pos: 0 };
    let expr = parser.expr()?;
    if *parser.peek() != Token::End {
        return parser.unexpected("an operator or end of input");
    }
    Ok(expr)
}

/// `(x1,x2,x3,x4,x5,x6) -> (x2,x1,x4,x3,x5,x6)`
pub fn swap_sides(x: &[Rational; 6]) -> [Rational; 6] {
    [x[1].clone(), x[0].clone(), x[3].clone(), x[2].clone(), x[4].clone(), x[5].clone()]
}

/// Deterministic probe points: the all-ones tuple followed by
/// [`SYMMETRY_SAMPLES`] positive rational tuples drawn from a fixed seed.
pub fn symmetry_probes() -> Vec<[Rational; 6]> {
    let mut rng = ChaCha8Rng::seed_from_u64(SYMMETRY_SEED);
    let mut out = vec![std::array::from_fn(|_| Rational::from_integer(1.into()))];
    for _ in 0..SYMMETRY_SAMPLES {
        out.push(std::array::from_fn(|_| {
            let p: i64 = rng.gen_range(1..=32);
            let q: i64 = rng.gen_range(1..=4);
            Rational::new(p.into(), q.into())
        }));
    }
    out
}

fn show_tuple(x: &[Rational; 6]) -> String {
    x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

/// Rejects `expr` if it is not symmetric at any probe point. Points where
/// both sides are undefined are skipped.
pub fn check_symmetry(expr: &Expr) -> Result<()> {
    for x in symmetry_probes() {
        let swapped = swap_sides(&x);
        let a = expr.evaluate(&x);
        let b = expr.evaluate(&swapped);
        let agree = match (&a, &b) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        };
        if !agree {
            let show = |r: &Result<Rational>| r.as_ref().map_or("undefined".to_string(), |v| v.to_string());
            return Err(Error::SymmetryViolation {
                at: show_tuple(&x),
                value: show(&a),
                swapped: show_tuple(&swapped),
                swapped_value: show(&b),
            });
        }
    }
    Ok(())
}
