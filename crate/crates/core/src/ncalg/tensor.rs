//! Elements of tensor powers `A_1 (x) ... (x) A_k` of word algebras.

use super::{NCPoly, QuotientAlgebra, Word};
use crate::error::Result;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Tensor {
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl Tensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn pure(words: Vec<Word>, c: Scalar) -> Self {
        let mut t = Self::zero();
        t.add_term(words, c);
        t
    }

    /// `1 (x) ... (x) 1` with `k` factors.
    pub fn unit(k: usize) -> Self {
        Self::pure(vec![Word::empty(); k], Scalar::one())
    }

    pub fn from_poly(p: &NCPoly) -> Self {
        p.terms()
            .map(|(w, c)| (vec![w.clone()], c.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(words) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Tensor, c: &Scalar) {
        for (w, x) in &o.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        let mut t = Tensor::zero();
        t.add_scaled(self, c);
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn sub(&self, o: &Tensor) -> Tensor {
        let mut t = self.clone();
        t.add_scaled(o, &-Scalar::one());
        t
    }

    pub fn add(&self, o: &Tensor) -> Tensor {
        let mut t = self.clone();
        t.add_scaled(o, &Scalar::one());
        t
    }

    /// Outer tensor product, concatenating the factor lists.
    pub fn tensor(&self, o: &Tensor) -> Tensor {
        let mut t = Tensor::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut k = a.clone();
                k.extend(b.iter().cloned());
                t.add_term(k, x * y);
            }
        }
        t
    }

    /// Replaces factor `i` of each term by the tensor `f(word)`, splicing its
    /// factors in place.
    pub fn expand_factor(
        &self,
        i: usize,
        mut f: impl FnMut(&Word) -> Result<Tensor>,
    ) -> Result<Tensor> {
        let mut out = Tensor::zero();
        for (ws, c) in &self.terms {
            let img = f(&ws[i])?;
            for (iw, ic) in &img.terms {
                let mut k: Vec<Word> = ws[..i].to_vec();
                k.extend(iw.iter().cloned());
                k.extend(ws[i + 1..].iter().cloned());
                out.add_term(k, c * ic);
            }
        }
        Ok(out)
    }

    /// Applies a linear functional to factor `i`, removing it.
    pub fn contract_factor(&self, i: usize, mut f: impl FnMut(&Word) -> Scalar) -> Tensor {
        let mut out = Tensor::zero();
        for (ws, c) in &self.terms {
            let s = f(&ws[i]);
            if s.is_zero() {
                continue;
            }
            let mut k = ws.clone();
            k.remove(i);
            out.add_term(k, c * &s);
        }
        out
    }

    /// Multiplies all factors together into a single polynomial (in the
    /// free algebra on the shared alphabet).
    pub fn multiply_out(&self) -> NCPoly {
        self.terms
            .iter()
            .map(|(ws, c)| (ws.iter().fold(Word::empty(), |a, w| a.concat(w)), c.clone()))
            .collect()
    }

    /// Normal form in each factor.
    pub fn normal_form(&self, algs: &[&QuotientAlgebra]) -> Result<Tensor> {
        let mut t = self.clone();
        for (i, a) in algs.iter().enumerate() {
            t = t.expand_factor(i, |w| Ok(Tensor::from_poly(&a.normal_form_word(w)?)))?;
        }
        Ok(t)
    }

    pub fn display(&self, names: &[&[String]]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(ws, c)| {
                let parts: Vec<String> = ws
                    .iter()
                    .enumerate()
                    .map(|(i, w)| w.display(names[i.min(names.len() - 1)]))
                    .collect();
                format!("({c}) {}", parts.join(" (x) "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl FromIterator<(Vec<Word>, Scalar)> for Tensor {
    fn from_iter<I: IntoIterator<Item = (Vec<Word>, Scalar)>>(iter: I) -> Self {
        let mut t = Tensor::zero();
        for (w, c) in iter {
            t.add_term(w, c);
        }
        t
    }
}
