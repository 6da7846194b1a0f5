//! Free associative algebras over [`Scalar`] and their quotients by
//! two-sided ideals, presented by rewriting rules.
//!
//! Words are ordered deglex: first by length, then lexicographically by
//! generator index (declaration order).

mod parse;
mod quotient;
mod tensor;

pub use parse::parse_poly;
pub use quotient::{AlgebraFile, QuotientAlgebra, Rule, Status};
pub use tensor::Tensor;

use crate::scalar::Scalar;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

pub type Gen = u16;

/// A monomial in the generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: Gen) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + o.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn slice(&self, a: usize, b: usize) -> Word {
        Word(self.0[a..b].to_vec())
    }

    /// Position of the first occurrence of `sub`.
    pub fn find(&self, sub: &Word) -> Option<usize> {
        if sub.len() > self.len() {
            return None;
        }
        (0..=self.len() - sub.len()).find(|&i| self.0[i..i + sub.len()] == sub.0[..])
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&g| names[g as usize].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// All words of length `d` over `n` letters, in increasing deglex order.
    pub fn all(n: usize, d: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..d {
            out = out
                .into_iter()
                .flat_map(|w| (0..n as Gen).map(move |g| w.concat(&Word::letter(g))))
                .collect();
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.len().cmp(&o.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// A noncommutative polynomial: finitely many nonzero terms keyed by word.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Scalar::one(), Word::empty())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(Scalar::one(), w)
    }

    pub fn letter(g: Gen) -> Self {
        Self::word(Word::letter(g))
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &NCPoly, c: &Scalar) {
        for (w, x) in &o.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    /// Terms in decreasing deglex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading().map(|(w, _)| w.len())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Applies `f` to every word and sums the results with the coefficients.
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    /// Renames generators through `f`.
    pub fn relabel(&self, f: impl Fn(Gen) -> Gen) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(Word(w.0.iter().map(|&g| f(g)).collect()), c.clone());
        }
        out
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms().enumerate() {
            let s = c.to_string();
            let compound = s.contains(" + ") || s.contains(" - ") || s.starts_with('(');
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, s),
            };
            out.push_str(match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let coeff = if compound { format!("({body})") } else { body };
            if w.is_empty() {
                out.push_str(&coeff);
            } else if coeff == "1" {
                out.push_str(&w.display(names));
            } else {
                out.push_str(&format!("{coeff}*{}", w.display(names)));
            }
        }
        out
    }
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(o, &Scalar::one());
        out
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(o, &-Scalar::one());
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&-Scalar::one())
    }
}

impl Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, o: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(self, o: NCPoly) -> NCPoly {
        &self + &o
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(self, o: NCPoly) -> NCPoly {
        &self - &o
    }
}

impl Mul for NCPoly {
    type Output = NCPoly;
    fn mul(self, o: NCPoly) -> NCPoly {
        &self * &o
    }
}

impl FromIterator<(Word, Scalar)> for NCPoly {
    fn from_iter<I: IntoIterator<Item = (Word, Scalar)>>(iter: I) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }
}
