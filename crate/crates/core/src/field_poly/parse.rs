//! Text grammar for polynomials, used by witness files and the CLI.
//!
//! Variables x0..xn, integer coefficients (reduced mod p on parse),
//! operators `+ - * ^`, parentheses allowed, whitespace insignificant.
//! Example: `3*x0^2*x1 - x2*x3^2 + 7`.

use crate::error::{Error, Result};
use crate::field_poly::poly::{Polynomial, Ring};
use std::sync::Arc;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.src.get(self.pos).copied();
        if let Some(c) = b {
            self.pos += 1;
            if c == b'\n' {
                self.line += 1;
                self.col = 1;
            } else {
                self.col += 1;
            }
        }
        b
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn next_tok(&mut self, names: &[String]) -> Result<Tok> {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.bump();
        }
        let Some(c) = self.peek() else { return Ok(Tok::End) };
        match c {
            b'+' => {
                self.bump();
                Ok(Tok::Plus)
            }
            b'-' => {
                self.bump();
                Ok(Tok::Minus)
            }
            b'*' => {
                self.bump();
                Ok(Tok::Star)
            }
            b'^' => {
                self.bump();
                Ok(Tok::Caret)
            }
            b'(' => {
                self.bump();
                Ok(Tok::LParen)
            }
            b')' => {
                self.bump();
                Ok(Tok::RParen)
            }
            b'0'..=b'9' => {
                let mut v: i64 = 0;
                while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                    let d = self.bump().unwrap();
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((d - b'0') as i64))
                        .ok_or_else(|| self.err("integer literal too large"))?;
                }
                Ok(Tok::Int(v))
            }
            c if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while matches!(self.peek(), Some(d) if d.is_ascii_alphanumeric() || d == b'_') {
                    self.bump();
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match names.iter().position(|n| n == name) {
                    Some(i) => Ok(Tok::Var(i)),
                    None => Err(self.err(format!("unknown variable `{name}`"))),
                }
            }
            other => Err(self.err(format!("unexpected character `{}`", other as char))),
        }
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    ring: Arc<Ring>,
    cur: Tok,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, ring: &Arc<Ring>) -> Result<Self> {
        let mut lex = Lexer::new(src);
        let cur = lex.next_tok(&ring.names)?;
        Ok(Parser { lex, ring: ring.clone(), cur })
    }

    fn advance(&mut self) -> Result<()> {
        self.cur = self.lex.next_tok(&self.ring.names)?;
        Ok(())
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut neg = false;
        loop {
            match self.cur {
                Tok::Minus => {
                    neg = !neg;
                    self.advance()?;
                }
                Tok::Plus => self.advance()?,
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            let sign = match self.cur {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.advance()?;
            let t = self.term()?;
            acc = if sign { acc.sub(&t) } else { acc.add(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.cur {
                Tok::Star => {
                    self.advance()?;
                    let f = self.factor()?;
                    acc = acc.mul_unchecked(&f);
                }
                // implicit multiplication: `3x0` or `x0(x1+1)`
                Tok::Var(_) | Tok::LParen | Tok::Int(_) => {
                    let f = self.factor()?;
                    acc = acc.mul_unchecked(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = match self.cur.clone() {
            Tok::Int(v) => {
                self.advance()?;
                Polynomial::constant(&self.ring, self.ring.field.reduce_i64(v))
            }
            Tok::Var(i) => {
                self.advance()?;
                Polynomial::var(&self.ring, i)
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.cur != Tok::RParen {
                    return Err(self.lex.err("expected `)`"));
                }
                self.advance()?;
                inner
            }
            _ => return Err(self.lex.err("expected coefficient, variable, or `(`")),
        };
        if self.cur == Tok::Caret {
            self.advance()?;
            let Tok::Int(e) = self.cur else {
                return Err(self.lex.err("expected integer exponent after `^`"));
            };
            if !(0..=255).contains(&e) {
                return Err(self.lex.err("exponent out of range"));
            }
            self.advance()?;
            return Ok(base.pow(e as u16));
        }
        Ok(base)
    }
}

/// Parses one polynomial in the ring.
pub fn parse(src: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let mut p = Parser::new(src, ring)?;
    let poly = p.expr()?;
    if p.cur != Tok::End {
        return Err(p.lex.err("trailing input"));
    }
    Ok(poly)
}

/// Canonical text form. Coefficients above p/2 print as negatives, which
/// keeps witness files human-diffable.
pub fn to_string(poly: &Polynomial) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let p = poly.ring.field.prime();
    let mut out = String::new();
    for (idx, &(m, c)) in poly.terms.iter().enumerate() {
        let (neg, mag) = if c > p / 2 { (true, p - c) } else { (false, c) };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut parts: Vec<String> = Vec::new();
        if mag != 1 || m.is_one() {
            parts.push(mag.to_string());
        }
        for i in 0..poly.ring.nvars {
            match m.exp[i] {
                0 => {}
                1 => parts.push(poly.ring.names[i].clone()),
                e => parts.push(format!("{}^{}", poly.ring.names[i], e)),
            }
        }
        out.push_str(&parts.join("*"));
    }
    out
}
