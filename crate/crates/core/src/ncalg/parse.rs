//! Polynomial literals such as `y*x - q*x*y` or `(q - q^-1)*t[0,1]*t[1,0]`.
//!
//! ```text
//! poly   ::= sign? mono (('+'|'-') mono)*
//! mono   ::= factor ('*' factor)*
//! factor ::= '(' scalar ')' | uint ('/' uint)? | 'q' ('^' int)? | gen ('^' uint)?
//! ```

use super::{Gen, NCPoly, Word};
use crate::scalar::{Mode, Scalar, ScalarError};
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn parse_poly(text: &str, names: &[String], mode: Mode) -> Result<NCPoly, ScalarError> {
    let mut order: Vec<(usize, &str)> = names.iter().map(|s| s.as_str()).enumerate().collect();
    order.sort_by_key(|(_, s)| std::cmp::Reverse(s.len()));
    let mut p = P {
        s: text,
        pos: 0,
        gens: order,
        mode,
    };
    let out = p.poly()?;
    p.ws();
    if p.pos != text.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct P<'a> {
    s: &'a str,
    pos: usize,
    gens: Vec<(usize, &'a str)>,
    mode: Mode,
}

impl P<'_> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.s[self.pos..]
    }

    fn ws(&mut self) {
        let t = self.rest().len() - self.rest().trim_start().len();
        self.pos += t;
    }

    fn eat(&mut self, c: char) -> bool {
        self.ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<NCPoly, ScalarError> {
        let mut out = NCPoly::zero();
        let mut sign = if self.eat('-') {
            -Scalar::one()
        } else {
            self.eat('+');
            Scalar::one()
        };
        loop {
            let m = self.mono()?;
            out.add_scaled(&m, &sign);
            if self.eat('+') {
                sign = Scalar::one();
            } else if self.eat('-') {
                sign = -Scalar::one();
            } else {
                return Ok(out);
            }
        }
    }

    fn mono(&mut self) -> Result<NCPoly, ScalarError> {
        let mut c = Scalar::one();
        let mut w: Vec<Gen> = Vec::new();
        loop {
            self.factor(&mut c, &mut w)?;
            if !self.eat('*') {
                return Ok(NCPoly::term(c, Word(w)));
            }
        }
    }

    fn factor(&mut self, c: &mut Scalar, w: &mut Vec<Gen>) -> Result<(), ScalarError> {
        self.ws();
        if let Some(&(g, name)) = self.gens.iter().find(|(_, n)| self.rest().starts_with(n)) {
            self.pos += name.len();
            let k = if self.eat('^') { self.uint()? } else { 1 };
            for _ in 0..k {
                w.push(g as Gen);
            }
            return Ok(());
        }
        if self.rest().starts_with('(') {
            let start = self.pos + 1;
            let mut depth = 0usize;
            for (i, ch) in self.rest().char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            let end = self.pos + i;
                            let inner = &self.s[start..end];
                            let v = Scalar::parse(inner, self.mode).map_err(|e| shift(e, start))?;
                            *c = c.try_mul(&v)?;
                            self.pos = end + 1;
                            return Ok(());
                        }
                    }
                    _ => {}
                }
            }
            return Err(self.err("unbalanced parenthesis"));
        }
        if self.rest().starts_with(|ch: char| ch.is_ascii_digit()) {
            let n = self.uint_big()?;
            let d = if self.rest().starts_with('/') {
                self.pos += 1;
                self.uint_big()?
            } else {
                BigInt::from(1)
            };
            if d == BigInt::from(0) {
                return Err(ScalarError::DivisionByZero);
            }
            *c = c.try_mul(&Scalar::from_rational(BigRational::new(n, d)))?;
            return Ok(());
        }
        if self.rest().starts_with('q') {
            self.pos += 1;
            let e = if self.eat('^') {
                self.ws();
                let neg = self.rest().starts_with('-');
                if neg {
                    self.pos += 1;
                }
                let v = self.uint()? as i64;
                if neg {
                    -v
                } else {
                    v
                }
            } else {
                1
            };
            *c = c.try_mul(&Scalar::q_pow(self.mode, e))?;
            return Ok(());
        }
        Err(self.err("expected a generator, coefficient or `q`"))
    }

    fn uint_big(&mut self) -> Result<BigInt, ScalarError> {
        self.ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.err("expected digits"));
        }
        let v = self.rest()[..len].parse().unwrap();
        self.pos += len;
        Ok(v)
    }

    fn uint(&mut self) -> Result<usize, ScalarError> {
        let at = self.pos;
        let v = self.uint_big()?;
        v.try_into().map_err(|_| ScalarError::Syntax {
            pos: at,
            msg: "number out of range".into(),
        })
    }
}

fn shift(e: ScalarError, by: usize) -> ScalarError {
    match e {
        ScalarError::Syntax { pos, msg } => ScalarError::Syntax { pos: pos + by, msg },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn quantum_plane_relation() {
        let n = names(&["x", "y"]);
        let p = parse_poly("y*x - q*x*y", &n, Mode::QField).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&Word(vec![1, 0])), Scalar::one());
        assert_eq!(p.coeff(&Word(vec![0, 1])), -Scalar::q(Mode::QField));
        assert_eq!(p.display(&n), "y*x - q*x*y");
    }

    #[test]
    fn bracketed_names_and_compound_coefficients() {
        let n = names(&["t[0,0]", "t[0,1]", "t[1,0]", "t[1,1]"]);
        let p = parse_poly(
            "t[1,1]*t[0,0] - t[0,0]*t[1,1] - (q - q^-1)*t[0,1]*t[1,0]",
            &n,
            Mode::QField,
        )
        .unwrap();
        assert_eq!(p.len(), 3);
        let again = parse_poly(&p.display(&n), &n, Mode::QField).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn powers_and_constants() {
        let n = names(&["x"]);
        let p = parse_poly("x^3 - 1/2", &n, Mode::QField).unwrap();
        assert_eq!(p.coeff(&Word(vec![0, 0, 0])), Scalar::one());
        assert_eq!(p.coeff(&Word::empty()), Scalar::from_ratio(-1, 2));
    }

    #[test]
    fn unknown_generator_is_a_syntax_error() {
        let n = names(&["x"]);
        assert!(matches!(
            parse_poly("x*z", &n, Mode::QField),
            Err(ScalarError::Syntax { pos: 2, .. })
        ));
    }
}
