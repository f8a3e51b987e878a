//! Text parser for two-variable Laurent polynomials.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! poly   := term (("+"|"-") term)* ;
//! term   := coeff? factor* ;
//! factor := ("x"|"y") ("^" int)? ("*")? ;
//! coeff  := int ;
//! int    := "-"? digit+ ;
//! ```
//!
//! A missing coefficient means 1, a missing exponent means 1. A sign
//! directly before a variable (`-x + y`) is also accepted so that the
//! canonical display form of any polynomial parses back.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::laurent::{ExpVec, LaurentPoly2};
use crate::Error;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.bytes.get(self.pos + offset).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn err(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    /// Unbounded integer literal (used for coefficients).
    fn big_int(&mut self) -> Result<BigInt, Error> {
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let mut value = BigInt::zero();
        for &b in &self.bytes[start..self.pos] {
            value = value * 10 + (b - b'0');
        }
        Ok(if negative { -value } else { value })
    }

    /// Bounded integer literal (used for exponents).
    fn exponent(&mut self) -> Result<i64, Error> {
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let start = self.pos;
        let mut value: i64 = 0;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            let digit = (self.bytes[self.pos] - b'0') as i64;
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(digit))
                .ok_or_else(|| self.err("exponent literal overflows"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        Ok(if negative { -value } else { value })
    }

    fn term(&mut self) -> Result<(ExpVec, BigInt), Error> {
        self.skip_ws();
        let mut coeff = BigInt::one();
        let mut saw_anything = false;

        // optional coefficient: digits, or '-' followed by digits
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                coeff = self.big_int()?;
                saw_anything = true;
            }
            Some(b'-') => {
                if matches!(self.peek_at(1), Some(b) if b.is_ascii_digit()) {
                    coeff = self.big_int()?;
                    saw_anything = true;
                } else {
                    // sign applied to a bare variable term
                    self.pos += 1;
                    coeff = -coeff;
                }
            }
            _ => {}
        }

        let mut exp = ExpVec::new(0, 0);
        loop {
            self.skip_ws();
            let var = match self.peek() {
                Some(b'x') => b'x',
                Some(b'y') => b'y',
                _ => break,
            };
            self.bump();
            saw_anything = true;
            let mut e: i64 = 1;
            self.skip_ws();
            if self.peek() == Some(b'^') {
                self.bump();
                self.skip_ws();
                e = self.exponent()?;
            }
            if var == b'x' {
                exp.x = exp
                    .x
                    .checked_add(e)
                    .ok_or_else(|| self.err("exponent overflows"))?;
            } else {
                exp.y = exp
                    .y
                    .checked_add(e)
                    .ok_or_else(|| self.err("exponent overflows"))?;
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.bump();
            }
        }

        if !saw_anything {
            return Err(self.err("expected a term"));
        }
        Ok((exp, coeff))
    }
}

/// Parses polynomial text into a [`LaurentPoly2`].
///
/// Parsing the canonical display form of a polynomial reproduces it
/// exactly.
pub fn parse_poly(text: &str) -> Result<LaurentPoly2, Error> {
    let mut cur = Cursor::new(text);
    let mut terms: Vec<(ExpVec, BigInt)> = Vec::new();

    let (exp, coeff) = cur.term()?;
    terms.push((exp, coeff));

    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.bump();
                let (exp, coeff) = cur.term()?;
                terms.push((exp, coeff));
            }
            Some(b'-') => {
                cur.bump();
                let (exp, coeff) = cur.term()?;
                terms.push((exp, -coeff));
            }
            Some(_) => return Err(cur.err("expected '+' or '-'")),
        }
    }

    Ok(LaurentPoly2::from_terms(terms))
}
