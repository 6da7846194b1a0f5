//! Exact scalars: rational functions in `q`, or elements of a cyclotomic field
//! where `q` is a primitive `n`-th root of unity.
//!
//! Rational constants are shared by both modes. A value that genuinely depends
//! on `q` carries its mode, and combining two such values from different modes
//! is an error rather than a coercion.

mod cyclo;
mod parse;
mod ratfn;
pub(crate) mod upoly;

pub use cyclo::{cyclotomic_poly, euler_phi};

use cyclo::Cyc;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use ratfn::RatFn;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    QField,
    Cyclotomic(u32),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::QField => write!(f, "qfield"),
            Mode::Cyclotomic(n) => write!(f, "cyclotomic:{n}"),
        }
    }
}

impl FromStr for Mode {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ScalarError::Syntax {
            pos: 0,
            msg: format!("unknown coefficient mode `{s}`"),
        };
        match s {
            "qfield" => Ok(Mode::QField),
            _ => {
                let n = s.strip_prefix("cyclotomic:").ok_or_else(bad)?;
                match n.parse::<u32>() {
                    Ok(n) if n >= 1 => Ok(Mode::Cyclotomic(n)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("mode mismatch: {0} vs {1}")]
    ModeMismatch(Mode, Mode),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Fn(Box<RatFn>),
    Cyc(Box<Cyc>),
}

/// An exact scalar in canonical form, so structural equality is equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

enum Pair {
    Rat(BigRational, BigRational),
    Fn(RatFn, RatFn),
    Cyc(Cyc, Cyc),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Rat(BigRational::zero()))
    }

    pub fn one() -> Self {
        Scalar(Repr::Rat(BigRational::one()))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(Repr::Rat(BigRational::from_integer(n.into())))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar(Repr::Rat(r))
    }

    /// The indeterminate (or the chosen root of unity).
    pub fn q(mode: Mode) -> Self {
        Self::q_pow(mode, 1)
    }

    pub fn q_pow(mode: Mode, k: i64) -> Self {
        Self::monomial(mode, BigRational::one(), k)
    }

    pub fn monomial(mode: Mode, c: BigRational, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        match mode {
            Mode::QField => Self::from_fn(RatFn::monomial(&c, k)),
            Mode::Cyclotomic(n) => Self::from_cyc(Cyc::monomial(n, &c, k)),
        }
    }

    fn from_fn(f: RatFn) -> Self {
        match f.as_constant() {
            Some(c) => Scalar(Repr::Rat(c)),
            None => Scalar(Repr::Fn(Box::new(f))),
        }
    }

    fn from_cyc(c: Cyc) -> Self {
        match c.as_constant() {
            Some(r) => Scalar(Repr::Rat(r)),
            None => Scalar(Repr::Cyc(Box::new(c))),
        }
    }

    /// `None` for rational constants, which belong to every mode.
    pub fn mode(&self) -> Option<Mode> {
        match &self.0 {
            Repr::Rat(_) => None,
            Repr::Fn(_) => Some(Mode::QField),
            Repr::Cyc(c) => Some(Mode::Cyclotomic(c.n)),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            _ => None,
        }
    }

    fn pair(&self, o: &Self) -> Result<Pair, ScalarError> {
        use Repr::*;
        Ok(match (&self.0, &o.0) {
            (Rat(a), Rat(b)) => Pair::Rat(a.clone(), b.clone()),
            (Rat(a), Fn(b)) => Pair::Fn(RatFn::from_rational(a), (**b).clone()),
            (Fn(a), Rat(b)) => Pair::Fn((**a).clone(), RatFn::from_rational(b)),
            (Fn(a), Fn(b)) => Pair::Fn((**a).clone(), (**b).clone()),
            (Rat(a), Cyc(b)) => Pair::Cyc(cyclo::Cyc::from_rational(b.n, a), (**b).clone()),
            (Cyc(a), Rat(b)) => Pair::Cyc((**a).clone(), cyclo::Cyc::from_rational(a.n, b)),
            (Cyc(a), Cyc(b)) if a.n == b.n => Pair::Cyc((**a).clone(), (**b).clone()),
            _ => {
                return Err(ScalarError::ModeMismatch(
                    self.mode().unwrap(),
                    o.mode().unwrap(),
                ))
            }
        })
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, ScalarError> {
        if let (Repr::Rat(a), Repr::Rat(b)) = (&self.0, &o.0) {
            return Ok(Scalar(Repr::Rat(a + b)));
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(o.clone());
        }
        Ok(match self.pair(o)? {
            Pair::Rat(a, b) => Scalar(Repr::Rat(a + b)),
            Pair::Fn(a, b) => Self::from_fn(a.add(&b)),
            Pair::Cyc(a, b) => Self::from_cyc(a.add(&b)),
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, ScalarError> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, ScalarError> {
        use Repr::*;
        match (&self.0, &o.0) {
            (Rat(a), Rat(b)) => return Ok(Scalar(Rat(a * b))),
            (Rat(a), _) if a.is_zero() => return Ok(Self::zero()),
            (_, Rat(b)) if b.is_zero() => return Ok(Self::zero()),
            (Rat(a), _) if a.is_one() => return Ok(o.clone()),
            (_, Rat(b)) if b.is_one() => return Ok(self.clone()),
            _ => {}
        }
        Ok(match self.pair(o)? {
            Pair::Rat(a, b) => Scalar(Rat(a * b)),
            Pair::Fn(a, b) => Self::from_fn(a.mul(&b)),
            Pair::Cyc(a, b) => Self::from_cyc(a.mul(&b)),
        })
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        match &self.0 {
            Repr::Rat(r) if r.is_zero() => Err(ScalarError::DivisionByZero),
            Repr::Rat(r) => Ok(Scalar(Repr::Rat(r.recip()))),
            Repr::Fn(f) => Ok(Self::from_fn(f.inv().ok_or(ScalarError::DivisionByZero)?)),
            Repr::Cyc(c) => Ok(Self::from_cyc(c.inv().ok_or(ScalarError::DivisionByZero)?)),
        }
    }

    pub fn try_div(&self, o: &Self) -> Result<Self, ScalarError> {
        self.try_mul(&o.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.try_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// An exact square root when one exists in the field (not attempted for
    /// irrational cyclotomic elements).
    pub fn sqrt(&self) -> Option<Self> {
        match &self.0 {
            Repr::Rat(r) => {
                if r.is_negative() {
                    return None;
                }
                let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
                (&(&n * &n) == r.numer() && &(&d * &d) == r.denom())
                    .then(|| Scalar(Repr::Rat(BigRational::new(n, d))))
            }
            Repr::Fn(f) => {
                let n = upoly::sqrt(&f.num)?;
                let d = upoly::sqrt(&f.den)?;
                Some(Self::from_fn(RatFn::new(n, d)))
            }
            Repr::Cyc(_) => None,
        }
    }

    /// Terms `(exponent, coefficient)` when the value is a Laurent polynomial.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, BigRational)>> {
        match &self.0 {
            Repr::Rat(r) => Some(if r.is_zero() {
                vec![]
            } else {
                vec![(0, r.clone())]
            }),
            Repr::Cyc(c) => Some(poly_terms_q(&c.coeffs, 0)),
            Repr::Fn(f) => {
                let (c, k) = f.laurent()?;
                let terms = f
                    .num
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| (i as i64 - k as i64, BigRational::new(x.clone(), c.clone())))
                    .collect();
                Some(terms)
            }
        }
    }

    pub fn parse(text: &str, mode: Mode) -> Result<Self, ScalarError> {
        parse::parse(text, mode)
    }
}

fn poly_terms_q(c: &[BigRational], shift: i64) -> Vec<(i64, BigRational)> {
    c.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i as i64 - shift, x.clone()))
        .collect()
}

fn poly_terms_z(c: &[BigInt]) -> Vec<(i64, BigRational)> {
    let q: Vec<BigRational> = c
        .iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect();
    poly_terms_q(&q, 0)
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(i64, BigRational)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (e, c)) in terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        match (idx, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let a = c.abs();
        let qpart = match e {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{e}"),
        };
        if qpart.is_empty() {
            write!(f, "{a}")?;
        } else if a.is_one() {
            write!(f, "{qpart}")?;
        } else {
            write!(f, "{a}*{qpart}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(t) = self.laurent_terms() {
            return write_terms(f, &t);
        }
        let Repr::Fn(r) = &self.0 else { unreachable!() };
        write!(f, "(")?;
        write_terms(f, &poly_terms_z(&r.num))?;
        write!(f, ")/(")?;
        write_terms(f, &poly_terms_z(&r.den))?;
        write!(f, ")")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

// ---- Operator impls (panic on mode mismatch or division by zero) ----

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rat(r) => Scalar(Repr::Rat(-r)),
            Repr::Fn(f) => Scalar(Repr::Fn(Box::new(f.neg()))),
            Repr::Cyc(c) => Scalar(Repr::Cyc(Box::new(c.neg()))),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self = &*self + &o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl<'a> std::iter::Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::one(), |a, b| a * b)
    }
}
