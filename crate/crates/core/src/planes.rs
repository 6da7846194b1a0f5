//! Braided covector and vector algebras with additive coproduct, braided
//! integers and the braided partial derivatives on covectors.

use crate::braided::{BraidOp, BraidedBialgebra};
use crate::error::{invalid, Error, Result};
use crate::linalg::Matrix;
use crate::ncalg::{Gen, NCPoly, QuotientAlgebra, Tensor, Word};
use crate::report::VerificationReport;
use crate::rmatrix::{flat_index, legs, multi_index, RMatrix};
use crate::scalar::{Mode, Scalar};
use std::str::FromStr;
use std::sync::Mutex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneKind {
    Covector,
    Vector,
}

/// How `R'` is obtained from `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RPrimeChoice {
    /// `R' = P`, no relations.
    Free,
    /// The first root of a two-root minimal polynomial of `PR`.
    Hecke,
    /// The root with this index.
    Factor(usize),
}

impl FromStr for RPrimeChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "free" => Ok(RPrimeChoice::Free),
            "hecke" => Ok(RPrimeChoice::Hecke),
            _ => s
                .strip_prefix("factor:")
                .and_then(|k| k.parse().ok())
                .map(RPrimeChoice::Factor)
                .ok_or_else(|| invalid(format!("unknown R' choice `{s}`"))),
        }
    }
}

/// The braiding matrix and `R'` to build a plane from `R`.
pub fn choose_rprime(r: &RMatrix, choice: RPrimeChoice) -> Result<(RMatrix, RMatrix)> {
    let index = match choice {
        RPrimeChoice::Free => return Ok((r.clone(), RMatrix::flip(r.n(), r.mode()))),
        RPrimeChoice::Factor(k) => k,
        RPrimeChoice::Hecke => {
            let count = r.pr_minimal_polynomial()?.distinct_roots().len();
            if count != 2 {
                return Err(invalid(format!(
                    "PR has {count} eigenvalues, not a Hecke symmetry"
                )));
            }
            0
        }
    };
    let d = r.derive_rprime(index, None)?;
    Ok((d.rescaled, d.rprime))
}

/// `R12 R13 R'23 = R'23 R13 R12`, `R23 R13 R'12 = R'12 R13 R23` and
/// `(PR + 1)(PR' - 1) = 0`.
pub fn rprime_conditions(r: &RMatrix, rp: &RMatrix) -> VerificationReport {
    let n = r.n();
    let (a, b) = (r.matrix(), rp.matrix());
    let l = |m: &Matrix, x, y| legs(m, n, x, y, 3);
    let mut rep = VerificationReport::new();
    let lhs = &(&l(a, 0, 1) * &l(a, 0, 2)) * &l(b, 1, 2);
    let rhs = &(&l(b, 1, 2) * &l(a, 0, 2)) * &l(a, 0, 1);
    rep.push(
        "R12R13R'23=R'23R13R12",
        lhs.first_difference(&rhs)
            .map(|(r, c)| format!("entry ({r},{c})")),
    );
    let lhs = &(&l(a, 1, 2) * &l(a, 0, 2)) * &l(b, 0, 1);
    let rhs = &(&l(b, 0, 1) * &l(a, 0, 2)) * &l(a, 1, 2);
    rep.push(
        "R23R13R'12=R'12R13R23",
        lhs.first_difference(&rhs)
            .map(|(r, c)| format!("entry ({r},{c})")),
    );
    let id = Matrix::identity(n * n);
    let prod = &r.pr().add(&id) * &rp.pr().sub(&id);
    rep.push(
        "(PR+1)(PR'-1)=0",
        prod.first_difference(&Matrix::zeros(n * n, n * n))
            .map(|(r, c)| format!("entry ({r},{c})")),
    );
    rep
}

pub struct BraidedPlane {
    kind: PlaneKind,
    r: RMatrix,
    rprime: RMatrix,
    symmetric: bool,
    bialg: BraidedBialgebra,
}

impl BraidedPlane {
    pub fn new(kind: PlaneKind, r: &RMatrix, rprime: &RMatrix, bound: usize) -> Result<Self> {
        if r.inverse().is_none() || rprime.inverse().is_none() {
            return Err(invalid("R and R' must be invertible"));
        }
        if let Some(c) = rprime_conditions(r, rprime).failures().next() {
            return Err(Error::RPrimeConditionFailed {
                condition: c.name.clone(),
                witness: c.witness.clone().unwrap_or_default(),
            });
        }
        let n = r.n();
        let sym = if kind == PlaneKind::Covector {
            "x"
        } else {
            "v"
        };
        let names: Vec<String> = if n == 1 {
            vec![sym.into()]
        } else {
            (0..n).map(|i| format!("{sym}{i}")).collect()
        };
        let g = |i: usize| i as Gen;
        let mut rels = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut p = NCPoly::word(Word(vec![g(i), g(j)]));
                for a in 0..n {
                    for b in 0..n {
                        let c = match kind {
                            PlaneKind::Covector => rprime.get(a, i, b, j),
                            PlaneKind::Vector => rprime.get(i, a, j, b),
                        };
                        p.add_term(Word(vec![g(b), g(a)]), -c);
                    }
                }
                rels.push(p);
            }
        }
        let alg = QuotientAlgebra::new(names, r.mode(), &rels, bound)?;
        let psi = BraidOp::from_fn(n, n, |i, j| {
            let (i, j) = (i as usize, j as usize);
            let mut out = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    let c = match kind {
                        PlaneKind::Covector => r.get(a, i, b, j),
                        PlaneKind::Vector => r.get(i, a, j, b),
                    };
                    out.push((c.clone(), g(b), g(a)));
                }
            }
            out
        });
        let coproduct = (0..n)
            .map(|i| {
                let x = Word::letter(g(i));
                Tensor::pure(vec![x.clone(), Word::empty()], Scalar::one())
                    .add(&Tensor::pure(vec![Word::empty(), x], Scalar::one()))
            })
            .collect();
        let symmetric = r.r21().matrix() * rprime.matrix() == rprime.r21().matrix() * r.matrix();
        let antipode = symmetric.then(|| {
            (0..n)
                .map(|i| NCPoly::letter(g(i)).scale(&-Scalar::one()))
                .collect()
        });
        let bialg = BraidedBialgebra::new(alg, psi, coproduct, vec![Scalar::zero(); n], antipode)?;
        Ok(BraidedPlane {
            kind,
            r: r.clone(),
            rprime: rprime.clone(),
            symmetric,
            bialg,
        })
    }

    pub fn covector(r: &RMatrix, rprime: &RMatrix, bound: usize) -> Result<Self> {
        Self::new(PlaneKind::Covector, r, rprime, bound)
    }

    pub fn vector(r: &RMatrix, rprime: &RMatrix, bound: usize) -> Result<Self> {
        Self::new(PlaneKind::Vector, r, rprime, bound)
    }

    /// One generator, `Psi(x (x) x) = q x (x) x`, no relations.
    pub fn braided_line(mode: Mode, bound: usize) -> Result<Self> {
        let r = RMatrix::from_fn(1, mode, |_, _, _, _| Scalar::q(mode));
        Self::covector(&r, &RMatrix::identity(1, mode), bound)
    }

    pub fn kind(&self) -> PlaneKind {
        self.kind
    }

    pub fn r(&self) -> &RMatrix {
        &self.r
    }

    pub fn rprime(&self) -> &RMatrix {
        &self.rprime
    }

    pub fn is_hopf(&self) -> bool {
        self.symmetric
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.bialg.alg
    }

    pub fn bialgebra(&self) -> &BraidedBialgebra {
        &self.bialg
    }

    pub fn verify(&self, degree: usize) -> VerificationReport {
        let mut rep = rprime_conditions(&self.r, &self.rprime);
        rep.absorb("", self.bialg.bialgebra_axiom_check(degree));
        rep
    }
}

/// `[m;R] = 1 + (PR)12 + (PR)12 (PR)23 + ... + (PR)12 ... (PR)m-1,m` on `V^{(x)m}`.
pub fn braided_integer(r: &RMatrix, m: usize) -> Matrix {
    let n = r.n();
    let dim = n.pow(m as u32);
    let pr = r.pr();
    let mut term = Matrix::identity(dim);
    let mut sum = term.clone();
    for s in 0..m.saturating_sub(1) {
        term = &term * &legs(&pr, n, s, s + 1, m);
        sum = sum.add(&term);
    }
    sum
}

/// Braided partial derivatives `d^i` on a covector plane.
pub struct Calculus<'a> {
    plane: &'a BraidedPlane,
    integers: Mutex<Vec<Matrix>>,
    fixed: bool,
}

impl<'a> Calculus<'a> {
    pub fn new(plane: &'a BraidedPlane) -> Result<Self> {
        if plane.kind != PlaneKind::Covector {
            return Err(invalid("derivatives act on the covector algebra"));
        }
        Ok(Calculus {
            plane,
            integers: Mutex::new(vec![Matrix::identity(1)]),
            fixed: false,
        })
    }

    /// Uses the given matrices as `[m;R]` for `m = 0, 1, ...` instead of
    /// computing them.
    pub fn with_integers(plane: &'a BraidedPlane, integers: Vec<Matrix>) -> Self {
        Calculus {
            plane,
            integers: Mutex::new(integers),
            fixed: true,
        }
    }

    fn integer_entry(&self, m: usize, row: usize, col: usize) -> Scalar {
        let mut ints = self.integers.lock().unwrap();
        while !self.fixed && ints.len() <= m {
            let k = ints.len();
            ints.push(braided_integer(&self.plane.r, k));
        }
        ints.get(m)
            .map(|x| x[(row, col)].clone())
            .unwrap_or_default()
    }

    /// `d^i x_I = delta^i_{j1} x_{j2} ... x_{jm} [m;R]^J_I` on a single word.
    pub fn partial_word(&self, i: usize, w: &Word) -> NCPoly {
        let n = self.plane.r.n();
        let m = w.len();
        if m == 0 {
            return NCPoly::zero();
        }
        let lower: Vec<usize> = w.0.iter().map(|&g| g as usize).collect();
        let col = flat_index(&lower, n);
        let mut out = NCPoly::zero();
        for rest in 0..n.pow(m as u32 - 1) {
            let mut upper = vec![i];
            upper.extend(multi_index(rest, n, m - 1));
            let c = self.integer_entry(m, flat_index(&upper, n), col);
            out.add_term(Word(upper[1..].iter().map(|&x| x as Gen).collect()), c);
        }
        out
    }

    pub fn partial(&self, i: usize, p: &NCPoly) -> Result<NCPoly> {
        let alg = self.plane.algebra();
        let p = alg.normal_form(p)?;
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.partial_word(i, w), c);
        }
        alg.normal_form(&out)
    }

    /// `d^i(x_j x_K) = delta^i_j x_K + x_a R^a_j^i_b d^b(x_K)`.
    pub fn partial_recursive(&self, i: usize, w: &Word) -> NCPoly {
        let r = &self.plane.r;
        let n = r.n();
        if w.is_empty() {
            return NCPoly::zero();
        }
        let j = w.0[0] as usize;
        let rest = w.slice(1, w.len());
        let mut out = if i == j {
            NCPoly::word(rest.clone())
        } else {
            NCPoly::zero()
        };
        for a in 0..n {
            for b in 0..n {
                let c = r.get(a, j, i, b);
                if !c.is_zero() {
                    let inner = self.partial_recursive(b, &rest);
                    out.add_scaled(&(&NCPoly::letter(a as Gen) * &inner), c);
                }
            }
        }
        out
    }

    /// `Psi^-1(d^i (x) a)` as a list of `(coefficient, word, index)` meaning
    /// `coefficient * word (x) d^index`, from `Psi^-1(d^i (x) x_j) = x_a (x) d^b R^a_j^i_b`.
    fn cross(&self, i: usize, w: &Word) -> Vec<(Scalar, Word, usize)> {
        let r = &self.plane.r;
        let n = r.n();
        let mut cur = vec![(Scalar::one(), Word::empty(), i)];
        for &j in &w.0 {
            let mut next = Vec::new();
            for (c, word, i) in cur {
                for a in 0..n {
                    for b in 0..n {
                        let s = r.get(a, j as usize, i, b);
                        if !s.is_zero() {
                            next.push((&c * s, word.concat(&Word::letter(a as Gen)), b));
                        }
                    }
                }
            }
            cur = next;
        }
        cur
    }

    /// Checks the braided Leibniz rule on normal words `a`, `b` with
    /// `|a| + |b| <= degree`, agreement of the two evaluation routes, and that
    /// the `d^i` obey the vector algebra relations `d^i d^j = R'^i_a^j_b d^b d^a`.
    pub fn leibniz_check(&self, degree: usize) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let alg = self.plane.algebra();
        let names = alg.names();
        let n = self.plane.r.n();
        let words = alg.normal_words_up_to(degree);

        let bad = words.iter().find_map(|w| {
            (0..n).find_map(|i| {
                let direct = self.partial_word(i, w);
                let rec = self.partial_recursive(i, w);
                match (alg.normal_form(&direct), alg.normal_form(&rec)) {
                    (Ok(x), Ok(y)) if x == y => None,
                    (Ok(x), Ok(y)) => Some(format!(
                        "d^{i}({}): {} vs {}",
                        w.display(names),
                        alg.display(&x),
                        alg.display(&y)
                    )),
                    (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
                }
            })
        });
        rep.push(format!("direct_equals_recursive(<= {degree})"), bad);

        let leibniz = |i: usize, a: &Word, b: &Word| -> Result<Option<String>> {
            let ab = alg.normal_form_word(&a.concat(b))?;
            let lhs = self.partial(i, &ab)?;
            let mut rhs = &self.partial(i, &NCPoly::word(a.clone()))? * &NCPoly::word(b.clone());
            for (c, word, k) in self.cross(i, a) {
                let d = self.partial(k, &NCPoly::word(b.clone()))?;
                rhs.add_scaled(&(&NCPoly::word(word) * &d), &c);
            }
            let rhs = alg.normal_form(&rhs)?;
            Ok((lhs != rhs).then(|| {
                format!(
                    "d^{i}({} * {}): {} vs {}",
                    a.display(names),
                    b.display(names),
                    alg.display(&lhs),
                    alg.display(&rhs)
                )
            }))
        };
        let mut bad = None;
        'outer: for a in &words {
            for b in words.iter().filter(|b| a.len() + b.len() <= degree) {
                for i in 0..n {
                    match leibniz(i, a, b) {
                        Ok(None) => {}
                        Ok(Some(w)) => {
                            bad = Some(w);
                            break 'outer;
                        }
                        Err(e) => {
                            bad = Some(e.to_string());
                            break 'outer;
                        }
                    }
                }
            }
        }
        rep.push(format!("braided_leibniz(<= {degree})"), bad);

        let rp = &self.plane.rprime;
        let relation = |i: usize, j: usize, w: &Word| -> Result<NCPoly> {
            let p = NCPoly::word(w.clone());
            let mut out = self.partial(i, &self.partial(j, &p)?)?;
            for a in 0..n {
                for b in 0..n {
                    let c = rp.get(i, a, j, b);
                    if !c.is_zero() {
                        out.add_scaled(&self.partial(b, &self.partial(a, &p)?)?, &-c);
                    }
                }
            }
            Ok(out)
        };
        let mut bad = None;
        'rel: for w in &words {
            for i in 0..n {
                for j in 0..n {
                    match relation(i, j, w) {
                        Ok(p) if p.is_zero() => {}
                        Ok(p) => {
                            bad = Some(format!(
                                "(i,j)=({i},{j}) on {}: {}",
                                w.display(names),
                                alg.display(&p)
                            ));
                            break 'rel;
                        }
                        Err(e) => {
                            bad = Some(e.to_string());
                            break 'rel;
                        }
                    }
                }
            }
        }
        rep.push(
            format!("derivatives_obey_vector_relations(<= {degree})"),
            bad,
        );
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const QF: Mode = Mode::QField;

    fn q() -> Scalar {
        Scalar::q(QF)
    }

    fn quantum_plane() -> BraidedPlane {
        let r = RMatrix::glq(2, QF).unwrap();
        let (rb, rp) = choose_rprime(&r, RPrimeChoice::Hecke).unwrap();
        BraidedPlane::covector(&rb, &rp, 6).unwrap()
    }

    #[test]
    fn quantum_plane_relation() {
        let p = quantum_plane();
        let rules = p.algebra().rules();
        assert_eq!(rules.len(), 1);
        assert_eq!(p.algebra().display(&rules[0].as_poly()), "x1*x0 - q*x0*x1");
        assert!(p.is_hopf());
        let rep = p.verify(3);
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn vector_plane() {
        let r = RMatrix::glq(2, QF).unwrap();
        let (rb, rp) = choose_rprime(&r, RPrimeChoice::Hecke).unwrap();
        let p = BraidedPlane::vector(&rb, &rp, 6).unwrap();
        assert_eq!(p.algebra().dim(3), 4);
        let rep = p.verify(3);
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn free_choice_has_no_relations() {
        let r = RMatrix::glq(2, QF).unwrap();
        let (rb, rp) = choose_rprime(&r, RPrimeChoice::Free).unwrap();
        let p = BraidedPlane::covector(&rb, &rp, 3).unwrap();
        assert!(p.algebra().rules().is_empty());
        assert!(p.verify(3).passed);
    }

    #[test]
    fn bad_rprime_is_rejected() {
        let r = RMatrix::glq(2, QF).unwrap();
        let err = BraidedPlane::covector(&r, &RMatrix::identity(2, QF), 3)
            .err()
            .unwrap();
        assert!(matches!(err, Error::RPrimeConditionFailed { .. }));
    }

    #[test]
    fn braided_integers() {
        let line = RMatrix::from_fn(1, QF, |_, _, _, _| q());
        let four = braided_integer(&line, 4);
        assert_eq!(
            four[(0, 0)],
            Scalar::one() + q() + q().pow(2).unwrap() + q().pow(3).unwrap()
        );
        let flip = braided_integer(&RMatrix::flip(2, QF), 3);
        assert_eq!(flip, Matrix::identity(8).scale(&Scalar::from_int(3)));
        // R = 1 sums the cyclic shifts of V^(x)3
        let id = braided_integer(&RMatrix::identity(2, QF), 3);
        assert_eq!(id[(0, 0)], Scalar::from_int(3));
        assert_eq!(id[(1, 1)], Scalar::from_int(2));
        assert_eq!(id[(1, 2)], Scalar::one());
        assert_eq!(braided_integer(&line, 1), Matrix::identity(1));
    }

    #[test]
    fn jackson_derivative() {
        let line = BraidedPlane::braided_line(QF, 8).unwrap();
        let d = Calculus::new(&line).unwrap();
        for m in 1..=6 {
            let xm = NCPoly::word(Word(vec![0; m]));
            let qint: Scalar = (0..m as i64).map(|k| q().pow(k).unwrap()).sum();
            assert_eq!(
                d.partial(0, &xm).unwrap(),
                NCPoly::term(qint, Word(vec![0; m - 1]))
            );
        }
        assert!(d.leibniz_check(4).passed);
    }

    #[test]
    fn quantum_plane_calculus() {
        let p = quantum_plane();
        let d = Calculus::new(&p).unwrap();
        let rep = d.leibniz_check(4);
        assert!(rep.passed, "{rep}");
        let x0x1 = NCPoly::word(Word(vec![0, 1]));
        assert_eq!(d.partial(0, &x0x1).unwrap(), NCPoly::letter(1));
    }

    #[test]
    fn dropped_term_breaks_leibniz() {
        let p = quantum_plane();
        let mut ints: Vec<Matrix> = (0..5).map(|m| braided_integer(p.r(), m)).collect();
        ints[2] = Matrix::identity(4);
        let d = Calculus::with_integers(&p, ints);
        let rep = d.leibniz_check(3);
        assert!(!rep.passed);
        assert!(rep
            .failures()
            .any(|c| c.name.starts_with("braided_leibniz")));
    }
}
