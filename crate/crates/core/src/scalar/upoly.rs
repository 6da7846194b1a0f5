//! Dense univariate polynomials with integer or rational coefficients.
//!
//! Coefficients are stored lowest degree first and kept trimmed, so the zero
//! polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type ZPoly = Vec<BigInt>;
pub type QPoly = Vec<BigRational>;

pub fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn add<T: Zero + Clone + for<'a> std::ops::AddAssign<&'a T>>(a: &[T], b: &[T]) -> Vec<T> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

pub fn neg<T: Clone + std::ops::Neg<Output = T>>(a: &[T]) -> Vec<T> {
    a.iter().cloned().map(|c| -c).collect()
}

pub fn sub<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Zero + Clone + std::ops::Neg<Output = T> + for<'a> std::ops::AddAssign<&'a T>,
{
    add(a, &neg(b))
}

pub fn mul<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Zero + Clone + for<'a> std::ops::AddAssign<&'a T>,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(&mut out);
    out
}

pub fn scale<T>(a: &[T], c: &T) -> Vec<T>
where
    T: Zero + Clone,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    let mut out: Vec<T> = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

/// Multiplication by `q^k`.
pub fn shift<T: Zero + Clone>(a: &[T], k: usize) -> Vec<T> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); k];
    out.extend_from_slice(a);
    out
}

/// Lowest exponent with a nonzero coefficient.
pub fn order<T: Zero>(a: &[T]) -> Option<usize> {
    a.iter().position(|c| !c.is_zero())
}

// ---- Integer polynomials ----

pub fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

pub fn div_scalar(a: &[BigInt], c: &BigInt) -> ZPoly {
    a.iter().map(|x| x / c).collect()
}

/// Primitive part with a positive leading coefficient.
pub fn primitive(a: &[BigInt]) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    div_scalar(a, &c)
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift_by = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift_by] -= &lr * c;
        }
        trim(&mut r);
        // keep the coefficients small
        let g = content(&r);
        if !g.is_zero() && !g.is_one() {
            r = div_scalar(&r, &g);
        }
    }
    r
}

/// Monic-up-to-sign primitive gcd over `Z[q]`.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    primitive(&x)
}

/// Exact division `a / b` in `Z[q]`, assuming `b` divides `a`.
pub fn exact_div(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / lb;
        for (i, bc) in b.iter().enumerate() {
            r[i + k] -= &c * bc;
        }
        quot[k] = c;
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    debug_assert!(r.is_empty(), "exact_div: remainder nonzero");
    trim(&mut quot);
    quot
}

/// Exact square root in `Z[q]`, if one exists. The leading coefficient of the
/// root is chosen positive.
pub fn sqrt(a: &[BigInt]) -> Option<ZPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    let d = a.len() - 1;
    if d % 2 == 1 || a.last().unwrap().is_negative() {
        return None;
    }
    let lead = a.last().unwrap().sqrt();
    if &(&lead * &lead) != a.last().unwrap() {
        return None;
    }
    // work over Q, then check integrality
    let aq: QPoly = a
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let m = d / 2;
    let mut root = vec![BigRational::zero(); m + 1];
    root[m] = BigRational::from_integer(lead);
    let two_lead = &root[m] * BigRational::from_integer(BigInt::from(2));
    for k in (0..m).rev() {
        // coefficient of q^{m+k} in root^2 must match
        let mut acc = aq[m + k].clone();
        for i in (k + 1)..m {
            acc -= &root[i] * &root[m + k - i];
        }
        root[k] = acc / &two_lead;
    }
    if root.iter().any(|c| !c.is_integer()) {
        return None;
    }
    let r: ZPoly = root.into_iter().map(|c| c.to_integer()).collect();
    (mul(&r, &r) == a).then_some(r)
}

// ---- Rational polynomials ----

pub fn qdivrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut quot = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lb;
        for (i, bc) in b.iter().enumerate() {
            r[i + k] -= &c * bc;
        }
        quot[k] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut quot);
    (quot, r)
}

pub fn to_q(a: &[BigInt]) -> QPoly {
    a.iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

/// `(g, s)` with `g = gcd(a, b)` monic and `s * a == g (mod b)`.
pub fn qgcdext(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1): (QPoly, QPoly) = (vec![BigRational::one()], Vec::new());
    while !r1.is_empty() {
        let (q, r) = qdivrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if let Some(l) = r0.last().cloned() {
        let inv = l.recip();
        r0 = scale(&r0, &inv);
        s0 = scale(&s0, &inv);
    }
    (r0, s0)
}
