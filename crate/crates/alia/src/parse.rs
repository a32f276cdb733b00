//! Recursive-descent parser for the polynomial expression grammar.
//!
//! expr   := [sign] term { sign term }
//! term   := factor { '*' factor }
//! factor := scalar-literal | 'x' index [ '^' exponent ]
//!
//! Scalar literals are "p", "p/q", or "[c0,c1,...;m]"; variable indices are
//! 1-based in the text. Whitespace is insignificant. Errors carry the byte
//! offset of the offending token.

use num_bigint::BigInt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::{FieldSpec, Rational, Scalar};

/// Parses `src` into a canonical polynomial in K[x1..x<nvars>] over `field`.
/// Rational literals embed into a cyclotomic ambient field; cyclotomic
/// literals must match its order.
pub fn parse_poly(src: &str, nvars: usize, field: &FieldSpec) -> Result<MultiPoly> {
    let mut cur = Cursor { src: src.as_bytes(), pos: 0 };
    let poly = cur.expr(nvars, field)?;
    cur.skip_ws();
    if cur.pos != cur.src.len() {
        return Err(cur.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self, nvars: usize, field: &FieldSpec) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(*field, nvars);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                None if first => return Err(self.err("empty expression")),
                None => break,
                Some(_) if first => false,
                Some(c) => {
                    return Err(self.err(format!("expected '+' or '-', found '{}'", c as char)))
                }
            };
            let term = self.term(nvars, field)?;
            acc = if negative { acc.sub(&term) } else { acc.add(&term) };
            first = false;
            if self.peek().is_none() {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self, nvars: usize, field: &FieldSpec) -> Result<MultiPoly> {
        let mut acc = self.factor(nvars, field)?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let f = self.factor(nvars, field)?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self, nvars: usize, field: &FieldSpec) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                let index: usize = self
                    .digits()?
                    .parse()
                    .map_err(|_| Error::Parse { pos: start, msg: "bad variable index".into() })?;
                if index == 0 || index > nvars {
                    return Err(Error::VariableOutOfRange { index, nvars });
                }
                let exponent = if let Some(b'^') = self.peek() {
                    self.pos += 1;
                    let start = self.pos;
                    self.digits()?
                        .parse::<u64>()
                        .map_err(|_| Error::Parse { pos: start, msg: "bad exponent".into() })?
                } else {
                    1
                };
                let mut exps = vec![0u64; nvars];
                exps[index - 1] = exponent;
                Ok(MultiPoly::monomial(*field, exps, field.one()))
            }
            Some(b'[') => {
                let start = self.pos;
                let close = self.src[self.pos..]
                    .iter()
                    .position(|&c| c == b']')
                    .ok_or_else(|| self.err("unterminated cyclotomic literal"))?;
                let text = std::str::from_utf8(&self.src[self.pos..self.pos + close + 1])
                    .map_err(|_| self.err("literal is not valid utf-8"))?;
                self.pos += close + 1;
                let s = Scalar::from_str_in(text, field).map_err(|e| match e {
                    Error::Parse { msg, .. } => Error::Parse { pos: start, msg },
                    other => other,
                })?;
                Ok(MultiPoly::constant(*field, nvars, s))
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = BigInt::from_str(self.digits()?).expect("digits parse as an integer");
                let denom = if let Some(b'/') = self.peek() {
                    self.pos += 1;
                    let start = self.pos;
                    let d = BigInt::from_str(self.digits()?).expect("digits parse as an integer");
                    if d == BigInt::from(0) {
                        return Err(Error::Parse { pos: start, msg: "zero denominator".into() });
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                Ok(MultiPoly::constant(*field, nvars, field.from_rational(Rational::new(numer, denom))))
            }
            Some(c) => Err(self.err(format!("expected a factor, found '{}'", c as char))),
            None => Err(self.err("expected a factor, found end of input")),
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }
}
