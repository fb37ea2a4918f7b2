//! Recursive-descent parser for polynomial strings.
//!
//! ```text
//! expression := sign? term (('+' | '-') term)*
//! term       := factor ('*' factor)*
//! factor     := primary ('^' nat)?
//! primary    := integer ('/' positive-integer)? | 'X0' | 'X1' | 'X2' | '(' expression ')'
//! ```
//!
//! This accepts the plain `coeff*monomial` sums plus parentheses and a
//! leading sign. Whitespace is ignored everywhere; error positions are byte
//! offsets into the original text.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{HPoly, MPoly, Rational};
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn pos(&self) -> usize {
        self.chars
            .get(self.at)
            .map(|&(p, _)| p)
            .unwrap_or(self.text.len())
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.at += 1;
        c
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> Result<u64> {
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        if start == self.at {
            return self.err("expected a number");
        }
        let s: String = self.chars[start..self.at].iter().map(|&(_, c)| c).collect();
        s.parse::<u64>().or_else(|_| {
            self.at = start;
            self.err("number too large")
        })
    }

    fn big_digits(&mut self) -> Result<BigInt> {
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        if start == self.at {
            return self.err("expected a number");
        }
        let s: String = self.chars[start..self.at].iter().map(|&(_, c)| c).collect();
        Ok(s.parse::<BigInt>().expect("digit string"))
    }

    fn expression(&mut self) -> Result<MPoly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.bump();
                -self.term()?
            }
            Some('+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some('-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.bump();
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = self.primary()?;
        if self.peek() == Some('^') {
            self.bump();
            let n = self.digits()?;
            let n = u32::try_from(n).or_else(|_| self.err("exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some('X') => {
                self.bump();
                match self.bump() {
                    Some(c @ '0'..='2') => Ok(MPoly::var(c as usize - '0' as usize)),
                    _ => {
                        self.at -= 1;
                        self.err("expected variable index 0, 1 or 2 after 'X'")
                    }
                }
            }
            Some('(') => {
                self.bump();
                let e = self.expression()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.bump();
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.big_digits()?;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some('/') {
                    self.bump();
                    let den_pos = self.at;
                    let den = self.big_digits()?;
                    if den.is_zero() || den.is_negative() {
                        self.at = den_pos;
                        return self.err("denominator must be a positive integer");
                    }
                    value = value / Rational::from_integer(den);
                }
                Ok(MPoly::constant(value))
            }
            Some(c) => self.err(format!("unexpected character '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse a homogeneous polynomial; the degree is inferred.
pub fn parse_poly(text: &str) -> Result<HPoly> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser { chars, at: 0, text };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let poly = p.expression()?;
    if p.peek().is_some() {
        return p.err(format!("unexpected character '{}'", p.peek().unwrap()));
    }
    HPoly::from_mpoly(poly)
}
