//! Braided matrices `B(R)`: generators `u[i,j]` with relations
//! `R21 u1 R12 u2 = u2 R21 u1 R12`, a four-R braiding and the matrix
//! coproduct.

use crate::braided::{BraidOp, BraidedBialgebra};
use crate::error::{Error, Result};
use crate::frt::{gen, indices, matrix_coproduct, matrix_names, matrix_word, FrtBialgebra};
use crate::linalg::Matrix;
use crate::ncalg::{NCPoly, QuotientAlgebra, Tensor, Word};
use crate::report::VerificationReport;
use crate::rmatrix::{delta, flat_index, legs, multi_index, quads, RMatrix};
use crate::scalar::Scalar;

/// A square matrix of noncommutative polynomials acting on `V^{(x)m}`.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct PolyMatrix {
    dim: usize,
    data: Vec<NCPoly>,
}

impl PolyMatrix {
    pub fn from_scalar(m: &Matrix) -> Self {
        let dim = m.rows();
        let data = m
            .as_slice()
            .iter()
            .map(|s| NCPoly::constant(s.clone()))
            .collect();
        PolyMatrix { dim, data }
    }

    /// The generator matrix `u` placed in slot `slot` of `V^{(x)m}`.
    pub fn generator(n: usize, slot: usize, m: usize) -> Self {
        let dim = n.pow(m as u32);
        let mut data = vec![NCPoly::zero(); dim * dim];
        for row in 0..dim {
            let up = multi_index(row, n, m);
            for j in 0..n {
                let mut lo = up.clone();
                lo[slot] = j;
                data[row * dim + flat_index(&lo, n)] = NCPoly::letter(gen(n, up[slot], j));
            }
        }
        PolyMatrix { dim, data }
    }

    pub fn get(&self, r: usize, c: usize) -> &NCPoly {
        &self.data[r * self.dim + c]
    }

    pub fn mul(&self, o: &PolyMatrix) -> PolyMatrix {
        let d = self.dim;
        let mut data = vec![NCPoly::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let p = a * b;
                        data[i * d + j].add_scaled(&p, &Scalar::one());
                    }
                }
            }
        }
        PolyMatrix { dim: d, data }
    }

    pub fn sub(&self, o: &PolyMatrix) -> PolyMatrix {
        PolyMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &NCPoly)> {
        let d = self.dim;
        self.data
            .iter()
            .enumerate()
            .map(move |(x, p)| (x / d, x % d, p))
    }
}

pub struct BraidedMatrices {
    r: RMatrix,
    rinv: RMatrix,
    rt: RMatrix,
    v_invertible: bool,
    bialg: BraidedBialgebra,
}

impl BraidedMatrices {
    pub fn new(r: &RMatrix, bound: usize) -> Result<Self> {
        let rinv = r.inverse().ok_or(Error::NotBiInvertible)?;
        let rt = r.second_inverse().map_err(|_| Error::NotBiInvertible)?;
        let v_invertible = r.v_matrix(&rt).inverse().is_some();
        let n = r.n();
        let alg = QuotientAlgebra::new(
            matrix_names("u", n),
            r.mode(),
            &Self::raw_relations(r),
            bound,
        )?;
        let psi = Self::braiding(r, &rinv, &rt);
        let coproduct = (0..n * n)
            .map(|g| matrix_coproduct(n, &Word::letter(g as u16)))
            .collect();
        let counit = (0..n * n).map(|g| {
            let (i, j) = indices(n, g as u16);
            delta(i, j)
        });
        let bialg = BraidedBialgebra::new(alg, psi, coproduct, counit.collect(), None)?;
        Ok(BraidedMatrices {
            r: r.clone(),
            rinv,
            rt,
            v_invertible,
            bialg,
        })
    }

    /// `R^k_a^i_b u^b_c R^c_j^a_d u^d_l - u^k_a R^a_b^i_c u^c_d R^d_j^b_l`.
    pub fn raw_relations(r: &RMatrix) -> Vec<NCPoly> {
        quad_relations(r)
            .into_iter()
            .filter(|p| !p.is_zero())
            .collect()
    }

    /// `Psi(u^i_j (x) u^k_l) = u^p_q (x) u^m_n R^i_a^d_p (R^-1)^a_m^q_b R^n_c^b_l R~^c_j^k_d`.
    pub fn braiding(r: &RMatrix, rinv: &RMatrix, rt: &RMatrix) -> BraidOp {
        let n = r.n();
        BraidOp::from_fn(n * n, n * n, |left, right| {
            let (i, j) = indices(n, left);
            let (k, l) = indices(n, right);
            let mut out = Vec::new();
            for (p, q, m, nn) in quads(n) {
                let mut s = Scalar::zero();
                for (a, b, c, d) in quads(n) {
                    let f1 = r.get(i, a, d, p);
                    if f1.is_zero() {
                        continue;
                    }
                    let f2 = rinv.get(a, m, q, b);
                    if f2.is_zero() {
                        continue;
                    }
                    s += f1 * f2 * r.get(nn, c, b, l) * rt.get(c, j, k, d);
                }
                if !s.is_zero() {
                    out.push((s, gen(n, p, q), gen(n, m, nn)));
                }
            }
            out
        })
    }

    pub fn r(&self) -> &RMatrix {
        &self.r
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.bialg.alg
    }

    pub fn bialgebra(&self) -> &BraidedBialgebra {
        &self.bialg
    }

    pub fn v_invertible(&self) -> bool {
        self.v_invertible
    }

    pub fn q_matrix(&self) -> Matrix {
        self.r.r21().matrix() * self.r.matrix()
    }

    pub fn verify(&self, degree: usize) -> VerificationReport {
        let mut rep = self.bialg.bialgebra_axiom_check(degree);
        rep.push(
            "v_invertible",
            (!self.v_invertible)
                .then(|| "v = R~^i_a^a_j is singular, Psi^-1 unavailable".to_string()),
        );
        let bad = self
            .algebra()
            .rules()
            .iter()
            .filter(|r| r.lead.len() == 2)
            .find(|r| !self.rep_of(&r.as_poly()).is_zero())
            .map(|r| self.algebra().display(&r.as_poly()));
        rep.push("canonical_rep_respects_relations", bad);
        if self.is_triangular() {
            let m = self.bialg.psi.matrix();
            let sq = &m * &m;
            rep.push(
                "triangular_psi_squared_identity",
                sq.first_difference(&Matrix::identity(m.rows()))
                    .map(|(r, c)| format!("entry ({r},{c})")),
            );
        }
        rep
    }

    pub fn is_triangular(&self) -> bool {
        let q = self.q_matrix();
        q == Matrix::identity(q.rows())
    }

    /// `rho(u^i_j)^k_l = Q^i_j^k_l`, extended multiplicatively.
    pub fn canonical_rep(&self, w: &Word) -> Matrix {
        let n = self.r.n();
        let q = self.q_matrix();
        w.0.iter().fold(Matrix::identity(n), |acc, &g| {
            let (i, j) = indices(n, g);
            &acc * &Matrix::from_fn(n, n, |k, l| q[(i * n + k, j * n + l)].clone())
        })
    }

    pub fn rep_of(&self, p: &NCPoly) -> Matrix {
        let n = self.r.n();
        p.terms().fold(Matrix::zeros(n, n), |acc, (w, c)| {
            acc.add(&self.canonical_rep(w).scale(c))
        })
    }

    /// The `A(R)` element corresponding to a product of up to three `u`'s.
    pub fn transmute_monomial(&self, frt: &FrtBialgebra, w: &Word) -> Result<NCPoly> {
        let n = self.r.n();
        let (r, rt) = (&self.r, &self.rt);
        let t = |i: usize, j: usize| gen(n, i, j);
        let ix: Vec<(usize, usize)> = w.0.iter().map(|&g| indices(n, g)).collect();
        let mut out = NCPoly::zero();
        match ix[..] {
            [] => out = NCPoly::one(),
            [_] => out = NCPoly::word(w.clone()),
            [(i, j), (k, l)] => {
                for (a, b, c, d) in quads(n) {
                    let s = r.get(i, a, c, d) * rt.get(b, j, k, c);
                    out.add_term(Word(vec![t(a, b), t(d, l)]), s);
                }
            }
            [(i, j), (k, l), (m, nn)] => {
                let all = |x: usize| 0..x;
                for (a, p, q) in all(n * n * n).map(|x| (x / (n * n), x / n % n, x % n)) {
                    let f1 = r.get(i, a, p, q);
                    if f1.is_zero() {
                        continue;
                    }
                    for c in 0..n {
                        let f2 = rt.get(c, j, k, p);
                        if f2.is_zero() {
                            continue;
                        }
                        let f12 = f1 * f2;
                        for (d, w_, y) in all(n * n * n).map(|x| (x / (n * n), x / n % n, x % n)) {
                            let f3 = r.get(a, d, w_, y);
                            if f3.is_zero() {
                                continue;
                            }
                            let f123 = &f12 * f3;
                            for (b, v) in all(n * n).map(|x| (x / n, x % n)) {
                                let f4 = rt.get(b, c, v, w_);
                                if f4.is_zero() {
                                    continue;
                                }
                                let f1234 = &f123 * f4;
                                for u in 0..n {
                                    let f5 = rt.get(u, l, m, v);
                                    if f5.is_zero() {
                                        continue;
                                    }
                                    let f = &f1234 * f5;
                                    for (s, z) in all(n * n).map(|x| (x / n, x % n)) {
                                        let f6 = r.get(q, s, y, z);
                                        if !f6.is_zero() {
                                            out.add_term(
                                                Word(vec![t(d, b), t(s, u), t(z, nn)]),
                                                &f * f6,
                                            );
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            _ => return Err(Error::DegreeUnsupported(w.len())),
        }
        frt.algebra().normal_form(&out)
    }

    pub fn transmute(&self, frt: &FrtBialgebra, p: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.transmute_monomial(frt, w)?, c);
        }
        Ok(out)
    }

    /// Degree 2 and 3 expansions agree with the compact forms
    /// `R^-1 u1 R u2 = t1 t2` and `R23^-1 R13^-1 R12^-1 u1 R12 u2 R13 R23 u3 = t1 t2 t3`,
    /// and the quadratic relations of `B(R)` map to zero in `A(R)`.
    pub fn transmute_check(&self, frt: &FrtBialgebra, degree: usize) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let n = self.r.n();
        for m in 2..=degree.min(3) {
            let leg =
                |mat: &Matrix, a: usize, b: usize| PolyMatrix::from_scalar(&legs(mat, n, a, b, m));
            let (r, ri) = (self.r.matrix(), self.rinv.matrix());
            let u = |s: usize| PolyMatrix::generator(n, s, m);
            let lhs = if m == 2 {
                leg(ri, 0, 1).mul(&u(0)).mul(&leg(r, 0, 1)).mul(&u(1))
            } else {
                leg(ri, 1, 2)
                    .mul(&leg(ri, 0, 2))
                    .mul(&leg(ri, 0, 1))
                    .mul(&u(0))
                    .mul(&leg(r, 0, 1))
                    .mul(&u(1))
                    .mul(&leg(r, 0, 2))
                    .mul(&leg(r, 1, 2))
                    .mul(&u(2))
            };
            let mut bad = None;
            for (row, col, p) in lhs.entries() {
                let up = multi_index(row, n, m);
                let lo = multi_index(col, n, m);
                let expected = frt.algebra().normal_form_word(&matrix_word(n, &up, &lo));
                match (self.transmute(frt, p), expected) {
                    (Ok(a), Ok(b)) if a == b => {}
                    (Ok(a), Ok(b)) => {
                        bad = Some(format!(
                            "upper {up:?} lower {lo:?}: {} vs {}",
                            frt.algebra().display(&a),
                            frt.algebra().display(&b)
                        ));
                        break;
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        bad = Some(e.to_string());
                        break;
                    }
                }
            }
            rep.push(format!("compact_form_degree_{m}"), bad);
        }
        let bad = self
            .algebra()
            .rules()
            .iter()
            .filter(|r| r.lead.len() == 2)
            .find_map(|r| match self.transmute(frt, &r.as_poly()) {
                Ok(p) if p.is_zero() => None,
                Ok(p) => Some(format!(
                    "{} -> {}",
                    self.algebra().display(&r.as_poly()),
                    frt.algebra().display(&p)
                )),
                Err(e) => Some(e.to_string()),
            });
        rep.push("relations_transmute_to_zero", bad);
        rep
    }

    /// The relations in terms of `chi = u - 1`, which read
    /// `R21 chi1 R12 chi2 - chi2 R21 chi1 R12 = chi2 Q - Q chi2`, together
    /// with the coproduct `chi (x) 1 + 1 (x) chi + chi (x) chi`.
    pub fn chi_relations(&self) -> ChiRelations {
        let n = self.r.n();
        let names = matrix_names("chi", n);
        let shift = |p: &NCPoly, sign: i64| -> NCPoly {
            // substitute u^i_j -> chi^i_j + sign * delta^i_j
            p.map_words(|w| {
                w.0.iter().fold(NCPoly::one(), |acc, &g| {
                    let (i, j) = indices(n, g);
                    let mut f = NCPoly::letter(g);
                    f.add_term(Word::empty(), delta(i, j) * Scalar::from_int(sign));
                    &acc * &f
                })
            })
        };
        let raw: Vec<NCPoly> = quad_relations(&self.r);
        let relations: Vec<NCPoly> = raw.iter().map(|p| shift(p, 1)).collect();

        let chi = |s: usize| PolyMatrix::generator(n, s, 2);
        let r12 = PolyMatrix::from_scalar(self.r.matrix());
        let r21 = PolyMatrix::from_scalar(self.r.r21().matrix());
        let q = PolyMatrix::from_scalar(&self.q_matrix());
        let lhs = r21
            .mul(&chi(0))
            .mul(&r12)
            .mul(&chi(1))
            .sub(&chi(1).mul(&r21).mul(&chi(0)).mul(&r12));
        let rhs = chi(1).mul(&q).sub(&q.mul(&chi(1)));
        let display: Vec<NCPoly> = lhs.sub(&rhs).entries().map(|(_, _, p)| p.clone()).collect();

        let mut report = VerificationReport::new();
        let bad = relations
            .iter()
            .zip(&display)
            .position(|(a, b)| a != b)
            .map(|x| {
                format!(
                    "entry {x}: {} vs {}",
                    relations[x].display(&names),
                    display[x].display(&names)
                )
            });
        report.push("matches_matrix_form", bad);
        let bad = relations
            .iter()
            .zip(&raw)
            .position(|(c, u)| &shift(c, -1) != u)
            .map(|x| format!("entry {x}"));
        report.push("round_trip", bad);

        let coproduct = (0..n * n)
            .map(|g| {
                let g = g as u16;
                let mut t = Tensor::pure(vec![Word::letter(g), Word::empty()], Scalar::one());
                t.add_term(vec![Word::empty(), Word::letter(g)], Scalar::one());
                let (i, j) = indices(n, g);
                for a in 0..n {
                    t.add_term(
                        vec![Word::letter(gen(n, i, a)), Word::letter(gen(n, a, j))],
                        Scalar::one(),
                    );
                }
                t
            })
            .collect::<Vec<_>>();
        let bad = (0..n * n).find_map(|g| {
            // Delta u = u (x) u rewritten in chi
            let (i, j) = indices(n, g as u16);
            let mut t = Tensor::zero();
            for a in 0..n {
                let f = |x: usize, y: usize| {
                    let mut p = NCPoly::letter(gen(n, x, y));
                    p.add_term(Word::empty(), delta(x, y));
                    Tensor::from_poly(&p)
                };
                t = t.add(&f(i, a).tensor(&f(a, j)));
            }
            t.add_term(vec![Word::empty(), Word::empty()], -delta(i, j));
            (t != coproduct[g]).then(|| names[g].clone())
        });
        report.push("chi_coproduct", bad);
        ChiRelations {
            names,
            relations: relations.into_iter().filter(|p| !p.is_zero()).collect(),
            coproduct,
            report,
        }
    }
}

/// Relations indexed by `(i, j, k, l)` in row-major order, zeros kept.
fn quad_relations(r: &RMatrix) -> Vec<NCPoly> {
    let n = r.n();
    let u = PolyMatrix::generator(n, 0, 2);
    let u2 = PolyMatrix::generator(n, 1, 2);
    let r12 = PolyMatrix::from_scalar(r.matrix());
    let r21 = PolyMatrix::from_scalar(r.r21().matrix());
    let lhs = r21.mul(&u).mul(&r12).mul(&u2);
    let rhs = u2.mul(&r21).mul(&u).mul(&r12);
    lhs.sub(&rhs).entries().map(|(_, _, p)| p.clone()).collect()
}

#[derive(Clone, Debug)]
pub struct ChiRelations {
    pub names: Vec<String>,
    pub relations: Vec<NCPoly>,
    pub coproduct: Vec<Tensor>,
    pub report: VerificationReport,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Mode;

    const QF: Mode = Mode::QField;

    fn triangular() -> RMatrix {
        let q = Scalar::q(QF);
        RMatrix::from_fn(2, QF, |i, j, k, l| match (i == j && k == l, i.cmp(&k)) {
            (false, _) => Scalar::zero(),
            (true, std::cmp::Ordering::Less) => q.clone(),
            (true, std::cmp::Ordering::Greater) => q.inv().unwrap(),
            (true, std::cmp::Ordering::Equal) => Scalar::one(),
        })
    }

    #[test]
    fn bmq2_relations_and_axioms() {
        let b = BraidedMatrices::new(&RMatrix::glq(2, QF).unwrap(), 4).unwrap();
        assert_eq!(
            b.algebra()
                .rules()
                .iter()
                .filter(|r| r.lead.len() == 2)
                .count(),
            6
        );
        assert_eq!(b.algebra().dim(3), 20);
        let rep = b.verify(2);
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn identity_r_is_commutative_with_flip() {
        let b = BraidedMatrices::new(&RMatrix::identity(2, QF), 3).unwrap();
        assert_eq!(b.algebra().dim(2), 10);
        assert_eq!(b.bialgebra().psi.matrix(), BraidOp::flip(4, 4).matrix());
    }

    #[test]
    fn triangular_case() {
        let b = BraidedMatrices::new(&triangular(), 3).unwrap();
        assert!(b.is_triangular());
        let rep = b.verify(2);
        assert!(rep.passed, "{rep}");
        let w = Word(vec![gen(2, 0, 1), gen(2, 1, 1)]);
        assert!(b.canonical_rep(&Word::letter(gen(2, 0, 1))).is_zero());
        assert!(b.canonical_rep(&w).is_zero());
        assert_eq!(
            b.canonical_rep(&Word::letter(gen(2, 1, 1))),
            Matrix::identity(2)
        );
    }

    #[test]
    fn transmutation_matches_compact_form() {
        let r = RMatrix::glq(2, QF).unwrap();
        let b = BraidedMatrices::new(&r, 4).unwrap();
        let a = FrtBialgebra::new(&r, 4).unwrap();
        let rep = b.transmute_check(&a, 3);
        assert!(rep.passed, "{rep}");
        let long = Word(vec![0; 4]);
        assert!(matches!(
            b.transmute_monomial(&a, &long),
            Err(Error::DegreeUnsupported(4))
        ));
    }

    #[test]
    fn chi_form() {
        let b = BraidedMatrices::new(&RMatrix::glq(2, QF).unwrap(), 3).unwrap();
        let chi = b.chi_relations();
        assert!(chi.report.passed, "{}", chi.report);
        let id = BraidedMatrices::new(&RMatrix::identity(2, QF), 3).unwrap();
        let chi = id.chi_relations();
        assert!(chi
            .relations
            .iter()
            .all(|p| p.degree() == Some(2) && p.coeff(&Word::empty()).is_zero()));
    }
}
