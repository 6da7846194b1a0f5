//! Elements of the cyclotomic field `Q(q)/(Phi_n)`.

use super::upoly::{self, QPoly, ZPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// The `n`-th cyclotomic polynomial, from `q^n - 1` divided by the
/// cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_poly(n: u32) -> Arc<ZPoly> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<ZPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic order must be positive");
    let mut p: ZPoly = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = upoly::exact_div(&p, &cyclotomic_poly(d));
    }
    let p = Arc::new(p);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyc {
    pub n: u32,
    pub coeffs: QPoly,
}

impl Cyc {
    pub fn new(n: u32, coeffs: QPoly) -> Self {
        let phi = upoly::to_q(&cyclotomic_poly(n));
        let (_, r) = upoly::qdivrem(&coeffs, &phi);
        Cyc { n, coeffs: r }
    }

    pub fn from_rational(n: u32, r: &BigRational) -> Self {
        Self::new(n, vec![r.clone()])
    }

    /// `c * q^k`; negative powers wrap around using `q^n = 1`.
    pub fn monomial(n: u32, c: &BigRational, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        Self::new(n, upoly::shift(std::slice::from_ref(c), e))
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        Cyc {
            n: self.n,
            coeffs: upoly::add(&self.coeffs, &o.coeffs),
        }
    }

    pub fn neg(&self) -> Self {
        Cyc {
            n: self.n,
            coeffs: upoly::neg(&self.coeffs),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.n, upoly::mul(&self.coeffs, &o.coeffs))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi = upoly::to_q(&cyclotomic_poly(self.n));
        let (g, s) = upoly::qgcdext(&self.coeffs, &phi);
        debug_assert_eq!(g.len(), 1, "cyclotomic polynomial is irreducible");
        Some(Self::new(self.n, s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), z(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(2), z(&[1, 1]));
        assert_eq!(*cyclotomic_poly(3), z(&[1, 1, 1]));
        assert_eq!(*cyclotomic_poly(4), z(&[1, 0, 1]));
        assert_eq!(*cyclotomic_poly(6), z(&[1, -1, 1]));
        assert_eq!(*cyclotomic_poly(12), z(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn totients() {
        let phis: Vec<usize> = (1..=12).map(euler_phi).collect();
        assert_eq!(phis, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }
}
