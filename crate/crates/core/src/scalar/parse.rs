//! Scalar literals.
//!
//! ```text
//! scalar ::= sum | '(' sum ')' '/' '(' sum ')'
//! sum    ::= term (('+'|'-') term)*
//! term   ::= coeff ('*' 'q' ('^' int)?)? | '-'? 'q' ('^' int)?
//! coeff  ::= int ('/' uint)?
//! ```
//!
//! Whitespace between tokens is ignored.

use super::{Mode, Scalar, ScalarError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    mode: Mode,
}

pub fn parse(text: &str, mode: Mode) -> Result<Scalar, ScalarError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        mode,
    };
    p.skip_ws();
    let value = if p.peek() == Some(b'(') {
        p.pos += 1;
        let num = p.sum()?;
        p.expect(b')')?;
        p.expect(b'/')?;
        p.expect(b'(')?;
        let den = p.sum()?;
        p.expect(b')')?;
        num.try_div(&den)?
    } else {
        p.sum()?
    };
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(value)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ScalarError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn sum(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            let sign = match self.peek() {
                Some(b'+') => 1,
                Some(b'-') => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let t = self.term()?;
            acc = if sign > 0 {
                acc.try_add(&t)?
            } else {
                acc.try_sub(&t)?
            };
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.peek() == Some(b'-');
        if negative || self.peek() == Some(b'+') {
            self.pos += 1;
            self.skip_ws();
        }
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.uint()?;
            self.skip_ws();
            let d = if self.peek() == Some(b'/') && self.src.get(self.pos + 1) != Some(&b'(') {
                self.pos += 1;
                self.skip_ws();
                let d = self.uint()?;
                if d.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                d
            } else {
                BigInt::one()
            };
            let c = BigRational::new(n, d);
            self.skip_ws();
            if self.peek() != Some(b'*') {
                let c = if negative { -c } else { c };
                return Ok(Scalar::from_rational(c));
            }
            self.pos += 1;
            self.skip_ws();
            c
        } else if self.peek() == Some(b'q') {
            BigRational::one()
        } else {
            self.pos = start.max(self.pos);
            return Err(self.err("expected a coefficient or `q`"));
        };
        if self.peek() != Some(b'q') {
            return Err(self.err("expected `q`"));
        }
        self.pos += 1;
        self.skip_ws();
        let e = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            self.int()?
        } else {
            1
        };
        let c = if negative { -coeff } else { coeff };
        Ok(Scalar::monomial(self.mode, c, e))
    }

    fn uint(&mut self) -> Result<BigInt, ScalarError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn int(&mut self) -> Result<i64, ScalarError> {
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let at = self.pos;
        let v = self.uint()?;
        let v: i64 = v.try_into().map_err(|_| ScalarError::Syntax {
            pos: at,
            msg: "exponent out of range".into(),
        })?;
        Ok(if neg { -v } else { v })
    }
}
