use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

/// An element of a tensor product of finite-dimensional spaces, stored as
/// coefficients on tuples of basis indices. All keys share one length, the
/// number of tensor factors.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct El {
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl El {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(idx: impl Into<Vec<usize>>) -> Self {
        Self::term(Scalar::one(), idx)
    }

    pub fn term(c: Scalar, idx: impl Into<Vec<usize>>) -> Self {
        let mut e = Self::zero();
        e.add_term(idx.into(), c);
        e
    }

    /// A scalar as an element with no tensor factors.
    pub fn scalar(c: Scalar) -> Self {
        Self::term(c, Vec::new())
    }

    pub fn from_coords(v: &[Scalar]) -> Self {
        let mut e = Self::zero();
        for (i, c) in v.iter().enumerate() {
            e.add_term(vec![i], c.clone());
        }
        e
    }

    /// Coordinates of a single-factor element.
    pub fn coords(&self, d: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); d];
        for (k, c) in &self.terms {
            v[k[0]] = c.clone();
        }
        v
    }

    /// Coordinates in the mixed-radix flattening with the first factor most
    /// significant.
    pub fn flat_coords(&self, dims: &[usize]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); dims.iter().product()];
        for (k, c) in &self.terms {
            v[flatten(k, dims)] = c.clone();
        }
        v
    }

    pub fn from_flat(v: &[Scalar], dims: &[usize]) -> Self {
        let mut e = Self::zero();
        for (i, c) in v.iter().enumerate() {
            e.add_term(unflatten(i, dims), c.clone());
        }
        e
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

    pub fn add_term(&mut self, idx: Vec<usize>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
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

    pub fn add_scaled(&mut self, o: &El, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &o.terms {
            self.add_term(k.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> El {
        let mut out = El::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Scalar)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        self.terms.get(idx).cloned().unwrap_or_default()
    }

    /// The coefficient of an element with no tensor factors.
    pub fn as_scalar(&self) -> Scalar {
        self.coeff(&[])
    }

    pub fn tensor(&self, o: &El) -> El {
        let mut out = El::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut k = a.clone();
                k.extend_from_slice(b);
                out.add_term(k, x * y);
            }
        }
        out
    }

    /// Output factor `i` is input factor `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> El {
        let mut out = El::zero();
        for (k, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| k[p]).collect(), c.clone());
        }
        out
    }

    /// Swaps the two factors of a two-factor element.
    pub fn flip(&self) -> El {
        self.permute(&[1, 0])
    }

    /// Replaces factor `slot` by `f` of its basis index, splicing the factors
    /// of the result in place. A result with no factors contracts the slot.
    pub fn map_slot(&self, slot: usize, mut f: impl FnMut(usize) -> El) -> El {
        let mut cache: BTreeMap<usize, El> = BTreeMap::new();
        let mut out = El::zero();
        for (k, c) in &self.terms {
            let img = cache.entry(k[slot]).or_insert_with(|| f(k[slot]));
            for (m, y) in &img.terms {
                let mut key = Vec::with_capacity(k.len() + m.len());
                key.extend_from_slice(&k[..slot]);
                key.extend_from_slice(m);
                key.extend_from_slice(&k[slot + 1..]);
                out.add_term(key, c * y);
            }
        }
        out
    }

    /// Replaces the whole tuple of each term by `f` of it.
    pub fn map_terms(&self, mut f: impl FnMut(&[usize]) -> El) -> El {
        let mut out = El::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn display(&self, names: &[&[String]]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let word = if k.is_empty() {
                    "1".to_string()
                } else {
                    k.iter()
                        .enumerate()
                        .map(|(i, &b)| names[i.min(names.len() - 1)][b].as_str())
                        .collect::<Vec<_>>()
                        .join("⊗")
                };
                if c.is_one() {
                    word
                } else {
                    format!("({c})*{word}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

pub(crate) fn flatten(k: &[usize], dims: &[usize]) -> usize {
    k.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

pub(crate) fn unflatten(mut i: usize, dims: &[usize]) -> Vec<usize> {
    let mut k = vec![0; dims.len()];
    for (slot, &d) in dims.iter().enumerate().rev() {
        k[slot] = i % d;
        i /= d;
    }
    k
}

/// All index tuples over the given dimensions, first factor most significant.
pub fn tuples(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..dims.iter().product()).map(move |i| unflatten(i, dims))
}

impl Add<&El> for &El {
    type Output = El;
    fn add(self, o: &El) -> El {
        let mut out = self.clone();
        out.add_scaled(o, &Scalar::one());
        out
    }
}

impl Sub<&El> for &El {
    type Output = El;
    fn sub(self, o: &El) -> El {
        let mut out = self.clone();
        out.add_scaled(o, &-Scalar::one());
        out
    }
}

impl Neg for &El {
    type Output = El;
    fn neg(self) -> El {
        self.scale(&-Scalar::one())
    }
}

impl std::iter::Sum for El {
    fn sum<I: Iterator<Item = El>>(iter: I) -> El {
        iter.fold(El::zero(), |acc, e| &acc + &e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splicing_and_contraction() {
        let x = El::basis([0, 1]);
        let y = x.map_slot(0, |_| &El::basis([2, 3]) + &El::basis([4, 5]));
        assert_eq!(y, &El::basis([2, 3, 1]) + &El::basis([4, 5, 1]));
        let z = y.map_slot(2, |_| El::scalar(Scalar::from_int(3)));
        assert_eq!(z.coeff(&[2, 3]), Scalar::from_int(3));
    }

    #[test]
    fn flattening_roundtrip() {
        let dims = [2, 3, 2];
        for i in 0..12 {
            assert_eq!(flatten(&unflatten(i, &dims), &dims), i);
        }
        assert_eq!(tuples(&dims).count(), 12);
    }
}
