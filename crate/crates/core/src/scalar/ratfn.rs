//! Rational functions in `q` over the rationals, held as a reduced quotient of
//! integer polynomials.

use super::upoly::{self, ZPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Invariants: `den` nonzero with positive leading coefficient, `num` and
/// `den` coprime in `Q[q]`, and the integer content of the pair is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    pub num: ZPoly,
    pub den: ZPoly,
}

impl RatFn {
    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(vec![r.numer().clone()], vec![r.denom().clone()])
    }

    /// `c * q^k` for any integer `k`.
    pub fn monomial(c: &BigRational, k: i64) -> Self {
        let u = k.unsigned_abs() as usize;
        let num = vec![c.numer().clone()];
        let den = vec![c.denom().clone()];
        if k >= 0 {
            Self::new(upoly::shift(&num, u), den)
        } else {
            Self::new(num, upoly::shift(&den, u))
        }
    }

    pub fn new(mut num: ZPoly, mut den: ZPoly) -> Self {
        upoly::trim(&mut num);
        upoly::trim(&mut den);
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return RatFn {
                num,
                den: vec![BigInt::one()],
            };
        }
        let (num, den) = reduce(num, den);
        RatFn { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        (self.num.len() <= 1 && self.den.len() == 1).then(|| {
            let n = self.num.first().cloned().unwrap_or_default();
            BigRational::new(n, self.den[0].clone())
        })
    }

    /// Denominator of the form `c * q^k`, i.e. a Laurent polynomial.
    pub fn laurent(&self) -> Option<(BigInt, usize)> {
        let k = self.den.len() - 1;
        self.den[..k]
            .iter()
            .all(Zero::is_zero)
            .then(|| (self.den[k].clone(), k))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(upoly::add(&self.num, &o.num), self.den.clone());
        }
        Self::new(
            upoly::add(
                &upoly::mul(&self.num, &o.den),
                &upoly::mul(&o.num, &self.den),
            ),
            upoly::mul(&self.den, &o.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFn {
            num: upoly::neg(&self.num),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(upoly::mul(&self.num, &o.num), upoly::mul(&self.den, &o.den))
    }

    /// `None` on zero.
    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }
}

fn reduce(num: ZPoly, den: ZPoly) -> (ZPoly, ZPoly) {
    let (mut num, mut den) = if is_monomial(&den) || is_monomial(&num) {
        // common factor is a power of q
        let k = upoly::order(&num).unwrap().min(upoly::order(&den).unwrap());
        (num[k..].to_vec(), den[k..].to_vec())
    } else {
        let g = upoly::gcd(&num, &den);
        if g.len() > 1 {
            (upoly::exact_div(&num, &g), upoly::exact_div(&den, &g))
        } else {
            (num, den)
        }
    };
    let mut c = upoly::content(&num).gcd(&upoly::content(&den));
    if den.last().unwrap().is_negative() {
        c = -c;
    }
    if !c.is_one() {
        num = upoly::div_scalar(&num, &c);
        den = upoly::div_scalar(&den, &c);
    }
    (num, den)
}

fn is_monomial(p: &[BigInt]) -> bool {
    p.iter().filter(|c| !c.is_zero()).count() == 1
}
