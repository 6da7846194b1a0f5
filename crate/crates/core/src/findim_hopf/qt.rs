//! Quasitriangular structures and their dual functionals.

use super::{embed, function_algebra, group_algebra, hopf_verify, tuples, Algebra, El, FinDimHopf};
use crate::error::{invalid, Error, Result};
use crate::linalg::Matrix;
use crate::report::VerificationReport;
use crate::scalar::{Mode, Scalar, ScalarError};

/// A quasitriangular element of `H⊗H` together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QT {
    pub r: El,
    pub r_inv: El,
}

impl QT {
    /// Solves for the inverse of `r` in the tensor-square algebra.
    pub fn new(h: &FinDimHopf, r: El) -> Result<QT> {
        let r_inv =
            tensor_square_inverse(h, &r).ok_or_else(|| invalid("R is not invertible in H⊗H"))?;
        Ok(QT { r, r_inv })
    }

    pub fn with_inverse(r: El, r_inv: El) -> QT {
        QT { r, r_inv }
    }

    pub fn trivial(h: &FinDimHopf) -> QT {
        QT {
            r: h.unit_n(2),
            r_inv: h.unit_n(2),
        }
    }

    pub fn r21(&self) -> El {
        self.r.flip()
    }

    /// `R21 R12`.
    pub fn q(&self, h: &FinDimHopf) -> El {
        h.mul_n(&self.r21(), &self.r)
    }

    /// `u = Σ (S R⁽²⁾) R⁽¹⁾`.
    pub fn u(&self, h: &FinDimHopf) -> El {
        self.r
            .map_terms(|k| h.mul(&h.s(&h.basis(k[1])), &h.basis(k[0])))
    }

    /// `u⁻¹ = Σ R⁽²⁾ S²R⁽¹⁾`.
    pub fn u_inv(&self, h: &FinDimHopf) -> El {
        self.r
            .map_terms(|k| h.mul(&h.basis(k[1]), &h.s(&h.s(&h.basis(k[0])))))
    }
}

/// The inverse of an element of `H⊗H`, if it exists.
pub(crate) fn tensor_square_inverse(h: &FinDimHopf, x: &El) -> Option<El> {
    let d = h.dim();
    let dims = [d, d];
    let mut m = Matrix::zeros(d * d, d * d);
    for (j, key) in tuples(&dims).enumerate() {
        let col = h.mul_n(x, &El::basis(key)).flat_coords(&dims);
        for (i, c) in col.into_iter().enumerate() {
            m[(i, j)] = c;
        }
    }
    let one = Matrix::column(h.unit_n(2).flat_coords(&dims));
    let sol = m.solve(&one)?;
    let y = El::from_flat(&sol.col(0), &dims);
    (h.mul_n(&y, x) == h.unit_n(2)).then_some(y)
}

fn leg(h: &FinDimHopf, x: &El, slots: &[usize]) -> El {
    embed(x, slots, &[h.one()])
}

fn differ(h: &FinDimHopf, l: &El, r: &El) -> String {
    let names = [h.labels()];
    format!("{} != {}", l.display(&names), r.display(&names))
}

/// The defining axioms of a quasitriangular structure followed by the
/// derived identities of [`qt_identities_report`].
pub fn qt_verify(h: &FinDimHopf, qt: &QT) -> VerificationReport {
    let d = h.dim();
    let mut rep = VerificationReport::new();
    let one2 = h.unit_n(2);
    let inv_ok = h.mul_n(&qt.r, &qt.r_inv) == one2 && h.mul_n(&qt.r_inv, &qt.r) == one2;
    rep.push(
        "r_invertible",
        (!inv_ok).then(|| "R R⁻¹ != 1⊗1".to_string()),
    );

    let l = h.delta_at(&qt.r, 0);
    let r = h.mul_n(&leg(h, &qt.r, &[0, 2]), &leg(h, &qt.r, &[1, 2]));
    rep.push("coproduct_first_leg", (l != r).then(|| differ(h, &l, &r)));
    let l = h.delta_at(&qt.r, 1);
    let r = h.mul_n(&leg(h, &qt.r, &[0, 2]), &leg(h, &qt.r, &[0, 1]));
    rep.push("coproduct_second_leg", (l != r).then(|| differ(h, &l, &r)));

    let bad = (0..d).find_map(|a| {
        let dx = h.delta(&h.basis(a));
        let l = h.mul_n(&dx.flip(), &qt.r);
        let r = h.mul_n(&qt.r, &dx);
        (l != r).then(|| format!("h={}: {}", h.labels()[a], differ(h, &l, &r)))
    });
    rep.push("quasi_cocommutative", bad);

    match qt_identities_report(h, qt) {
        Ok(ids) => rep.absorb("", ids),
        Err(e) => rep.fail("derived_identities", e.to_string()),
    }
    rep
}

/// The six derived identities: counit legs, universal Yang-Baxter, antipode
/// legs, `S² = Ad u`, `S⁻² = Ad v` with `v = Su`, and
/// `Δu = (R21 R12)⁻¹(u⊗u)`.
pub fn qt_identities_report(h: &FinDimHopf, qt: &QT) -> Result<VerificationReport> {
    h.require_antipode()?;
    let d = h.dim();
    let mut rep = VerificationReport::new();
    let one = h.one().clone();

    let l = h.eps_at(&qt.r, 0);
    let r = h.eps_at(&qt.r, 1);
    let bad = if l != one {
        Some(format!("(ε⊗id)R = {}", h.display(&l)))
    } else if r != one {
        Some(format!("(id⊗ε)R = {}", h.display(&r)))
    } else {
        None
    };
    rep.push("counit_legs", bad);

    let (r12, r13, r23) = (
        leg(h, &qt.r, &[0, 1]),
        leg(h, &qt.r, &[0, 2]),
        leg(h, &qt.r, &[1, 2]),
    );
    let l = h.mul_n(&h.mul_n(&r12, &r13), &r23);
    let r = h.mul_n(&h.mul_n(&r23, &r13), &r12);
    rep.push("yang_baxter", (l != r).then(|| differ(h, &l, &r)));

    let s1 = h.s_at(&qt.r, 0);
    let s2inv = h.s_at(&qt.r_inv, 1);
    let ss = h.s_at(&h.s_at(&qt.r, 0), 1);
    let bad = if s1 != qt.r_inv {
        Some(format!("(S⊗id)R: {}", differ(h, &s1, &qt.r_inv)))
    } else if s2inv != qt.r {
        Some(format!("(id⊗S)R⁻¹: {}", differ(h, &s2inv, &qt.r)))
    } else if ss != qt.r {
        Some(format!("(S⊗S)R: {}", differ(h, &ss, &qt.r)))
    } else {
        None
    };
    rep.push("antipode_legs", bad);

    let u = qt.u(h);
    let u_inv = qt.u_inv(h);
    let mut bad = (h.mul(&u, &u_inv) != one || h.mul(&u_inv, &u) != one).then(|| {
        format!(
            "u = {} is not inverted by {}",
            h.display(&u),
            h.display(&u_inv)
        )
    });
    if bad.is_none() {
        bad = (0..d).find_map(|a| {
            let x = h.basis(a);
            let l = h.s(&h.s(&x));
            let r = h.mul_all(&[&u, &x, &u_inv]);
            (l != r).then(|| format!("h={}: {}", h.labels()[a], differ(h, &l, &r)))
        });
    }
    rep.push("square_antipode_by_u", bad);

    let bad = match h.antipode_matrix().and_then(|m| m.inverse()) {
        None => Some("S is not invertible".to_string()),
        Some(sinv) => {
            let v = h.s(&u);
            let v_inv = h.s(&u_inv);
            (0..d).find_map(|a| {
                let x = h.basis(a);
                let l = super::apply_matrix(&sinv, &super::apply_matrix(&sinv, &x, 0), 0);
                let r = h.mul_all(&[&v, &x, &v_inv]);
                (l != r).then(|| format!("h={}: {}", h.labels()[a], differ(h, &l, &r)))
            })
        }
    };
    rep.push("inverse_square_antipode_by_v", bad);

    let l = h.mul_n(&qt.q(h), &h.delta(&u));
    let r = u.tensor(&u);
    rep.push("coproduct_of_u", (l != r).then(|| differ(h, &l, &r)));
    Ok(rep)
}

/// The group algebra of `Z_n` with `R = n⁻¹ Σ q^{-ab} g^a⊗g^b`, `q` a
/// primitive `n`-th root of unity.
pub fn zn_prime(n: usize, mode: Mode) -> Result<(FinDimHopf, QT)> {
    if n == 0 {
        return Err(invalid("Z_0 is not finite"));
    }
    if n > 1 && mode != Mode::Cyclotomic(n as u32) {
        return Err(ScalarError::ModeMismatch(mode, Mode::Cyclotomic(n as u32)).into());
    }
    let h = group_algebra(&[n], mode);
    let inv_n = Scalar::from_ratio(1, n as i64);
    let mut r = El::zero();
    for a in 0..n {
        for b in 0..n {
            let e = -(((a * b) % n) as i64);
            let c = if n == 1 {
                Scalar::one()
            } else {
                Scalar::q_pow(mode, e)
            };
            r.add_term(vec![a, b], &c * &inv_n);
        }
    }
    let qt = QT::new(&h, r)?;
    Ok((h, qt))
}

/// A convolution-invertible bilinear functional `A⊗A → k`, stored as its
/// values on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualQT {
    pub values: Matrix,
}

impl DualQT {
    pub fn eval_basis(&self, a: usize, b: usize) -> &Scalar {
        &self.values[(a, b)]
    }

    /// Evaluates on a two-factor element.
    pub fn eval(&self, x: &El) -> Scalar {
        x.terms().map(|(k, c)| c * &self.values[(k[0], k[1])]).sum()
    }

    /// Contracts factors `i` and `i + 1` of `x` against the functional.
    pub fn contract(&self, x: &El, i: usize) -> El {
        x.map_terms(|k| {
            let mut key = k[..i].to_vec();
            key.extend_from_slice(&k[i + 2..]);
            El::term(self.values[(k[i], k[i + 1])].clone(), key)
        })
    }

    /// The dual of a quasitriangular Hopf algebra with `R` read as a
    /// functional on `H*⊗H*`.
    pub fn from_qt(h: &FinDimHopf, qt: &QT) -> (FinDimHopf, DualQT) {
        let d = h.dim();
        let values = Matrix::from_fn(d, d, |a, b| qt.r.coeff(&[a, b]));
        (h.dual(), DualQT { values })
    }

    /// Convolution inverse `R⁻¹(a⊗b) = R(Sa⊗b)`.
    pub fn inverse(&self, a: &FinDimHopf) -> Result<DualQT> {
        a.require_antipode()?;
        let d = a.dim();
        Ok(DualQT {
            values: Matrix::from_fn(d, d, |x, y| {
                self.eval(&a.s(&a.basis(x)).tensor(&a.basis(y)))
            }),
        })
    }
}

/// Checks the dual quasitriangular axioms: convolution invertibility, the two
/// bicharacter laws and almost commutativity.
pub fn dqt_verify(a: &FinDimHopf, r: &DualQT) -> VerificationReport {
    let d = a.dim();
    let lab = |i: usize| a.labels()[i].clone();
    let mut rep = VerificationReport::new();
    match r.inverse(a) {
        Err(e) => rep.fail("convolution_invertible", e.to_string()),
        Ok(rinv) => {
            let bad = pairs(d).find(|&(x, y)| {
                let dx = a.delta(&a.basis(x));
                let dy = a.delta(&a.basis(y));
                let target = a.counit_basis(x) * a.counit_basis(y);
                let both = dx.tensor(&dy).permute(&[0, 2, 1, 3]);
                let l = rinv.contract(&r.contract(&both, 0), 0).as_scalar();
                let rr = r.contract(&rinv.contract(&both, 0), 0).as_scalar();
                l != target || rr != target
            });
            rep.push(
                "convolution_invertible",
                bad.map(|(x, y)| format!("a={}, b={}", lab(x), lab(y))),
            );
        }
    }
    let mut bad = None;
    'outer: for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let l = r.eval(&a.algebra().mul_basis(x, y).tensor(&a.basis(z)));
                let dz = a.delta(&a.basis(z));
                let terms = a
                    .basis(x)
                    .tensor(&a.basis(y))
                    .tensor(&dz)
                    .permute(&[0, 2, 1, 3]);
                let rr = r.contract(&r.contract(&terms, 0), 0).as_scalar();
                if l != rr {
                    bad = Some(format!(
                        "R(ab⊗c) at a={}, b={}, c={}",
                        lab(x),
                        lab(y),
                        lab(z)
                    ));
                    break 'outer;
                }
                let l = r.eval(&a.basis(x).tensor(a.algebra().mul_basis(y, z)));
                let dx = a.delta(&a.basis(x));
                let terms = dx
                    .tensor(&a.basis(z))
                    .tensor(&a.basis(y))
                    .permute(&[0, 2, 1, 3]);
                let rr = r.contract(&r.contract(&terms, 0), 0).as_scalar();
                if l != rr {
                    bad = Some(format!(
                        "R(a⊗bc) at a={}, b={}, c={}",
                        lab(x),
                        lab(y),
                        lab(z)
                    ));
                    break 'outer;
                }
            }
        }
    }
    rep.push("bicharacter", bad);
    let bad = pairs(d).find(|&(x, y)| {
        let dx = a.delta(&a.basis(x));
        let dy = a.delta(&a.basis(y));
        let mut l = El::zero();
        let mut rr = El::zero();
        for (kx, cx) in dx.terms() {
            for (ky, cy) in dy.terms() {
                let c = cx * cy;
                let p = a.mul(&a.basis(ky[0]), &a.basis(kx[0]));
                l.add_scaled(&p, &(&c * r.eval_basis(kx[1], ky[1])));
                let p = a.mul(&a.basis(kx[1]), &a.basis(ky[1]));
                rr.add_scaled(&p, &(&c * r.eval_basis(kx[0], ky[0])));
            }
        }
        l != rr
    });
    rep.push(
        "almost_commutative",
        bad.map(|(x, y)| format!("a={}, b={}", lab(x), lab(y))),
    );
    rep
}

fn pairs(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..d).flat_map(move |a| (0..d).map(move |b| (a, b)))
}

/// The function algebra and the group algebra of a finite abelian group, each
/// with the structure a bicharacter induces.
#[derive(Clone, Debug)]
pub struct BicharacterHopf {
    /// `k(G)` with `R = Σ β(x,y) δ_x⊗δ_y`.
    pub functions: FinDimHopf,
    pub qt: QT,
    /// `kG` with the functional `R(x⊗y) = β(x,y)`.
    pub group: FinDimHopf,
    pub dual_qt: DualQT,
}

/// Builds both structures from a bicharacter given as a matrix on group
/// elements (mixed-radix order as in [`group_algebra`]).
pub fn group_function_hopf(orders: &[usize], beta: &Matrix, mode: Mode) -> Result<BicharacterHopf> {
    let group = group_algebra(orders, mode);
    let d = group.dim();
    if beta.rows() != d || beta.cols() != d {
        return Err(invalid(format!("bicharacter must be {d}×{d}")));
    }
    let mul = |x: usize, y: usize| {
        group
            .algebra()
            .mul_basis(x, y)
            .terms()
            .next()
            .expect("group product")
            .0[0]
    };
    let lab = |x: usize| group.labels()[x].clone();
    for x in 0..d {
        if !beta[(x, 0)].is_one() || !beta[(0, x)].is_one() {
            return Err(Error::NotABicharacter(format!(
                "R({0},1) or R(1,{0}) is not 1",
                lab(x)
            )));
        }
        for y in 0..d {
            for z in 0..d {
                if beta[(mul(x, y), z)] != &beta[(x, z)] * &beta[(y, z)] {
                    return Err(Error::NotABicharacter(format!(
                        "R(gh,f) at g={}, h={}, f={}",
                        lab(x),
                        lab(y),
                        lab(z)
                    )));
                }
                if beta[(x, mul(y, z))] != &beta[(x, y)] * &beta[(x, z)] {
                    return Err(Error::NotABicharacter(format!(
                        "R(g,hf) at g={}, h={}, f={}",
                        lab(x),
                        lab(y),
                        lab(z)
                    )));
                }
            }
        }
    }
    let functions = function_algebra(orders, mode);
    let mut r = El::zero();
    for (x, y) in pairs(d) {
        r.add_term(vec![x, y], beta[(x, y)].clone());
    }
    let qt = QT::new(&functions, r)?;
    Ok(BicharacterHopf {
        functions,
        qt,
        group,
        dual_qt: DualQT {
            values: beta.clone(),
        },
    })
}

/// The quantum double on `H*⊗H` with the tensor-product coalgebra, the
/// product `(a⊗h)(b⊗g) = Σ b₂a ⊗ h₂g ⟨Sh₁,b₁⟩⟨h₃,b₃⟩` and
/// `R = Σ (f^a⊗1)⊗(1⊗e_a)`. Basis index `a·d + h`.
pub fn drinfeld_double(h: &FinDimHopf) -> Result<(FinDimHopf, QT)> {
    h.require_antipode()?;
    let d = h.dim();
    let hs = h.dual();
    let pack = |a: usize, x: usize| a * d + x;
    let labels: Vec<String> = (0..d * d)
        .map(|i| format!("{}⊗{}", hs.labels()[i / d], h.labels()[i % d]))
        .collect();
    let dual3: Vec<El> = (0..d).map(|b| hs.delta_n(&hs.basis(b), 3)).collect();
    let h3: Vec<El> = (0..d).map(|x| h.delta_n(&h.basis(x), 3)).collect();
    let s_images: Vec<El> = (0..d).map(|x| h.s(&h.basis(x))).collect();
    let mut product = Vec::with_capacity(d * d * d * d);
    for (a, x) in pairs(d) {
        for (b, y) in pairs(d) {
            let mut out = El::zero();
            for (kb, cb) in dual3[b].terms() {
                for (kx, cx) in h3[x].terms() {
                    if kx[2] != kb[2] {
                        continue;
                    }
                    let pair1 = s_images[kx[0]].coeff(&[kb[0]]);
                    if pair1.is_zero() {
                        continue;
                    }
                    let left = hs.mul(&hs.basis(kb[1]), &hs.basis(a));
                    let right = h.mul(&h.basis(kx[1]), &h.basis(y));
                    let c = &(cb * cx) * &pair1;
                    for (l, lc) in left.terms() {
                        for (r, rc) in right.terms() {
                            out.add_term(vec![pack(l[0], r[0])], &(&c * lc) * rc);
                        }
                    }
                }
            }
            product.push(out);
        }
    }
    let unit = hs
        .one()
        .tensor(h.one())
        .map_terms(|k| El::basis([pack(k[0], k[1])]));
    let alg = Algebra::new(h.mode(), labels, product, unit)?;
    let coproduct = (0..d * d)
        .map(|i| {
            let (a, x) = (i / d, i % d);
            hs.delta(&hs.basis(a))
                .tensor(&h.delta(&h.basis(x)))
                .map_terms(|k| El::basis([pack(k[0], k[2]), pack(k[1], k[3])]))
        })
        .collect();
    let counit = (0..d * d)
        .map(|i| hs.counit_basis(i / d) * h.counit_basis(i % d))
        .collect();
    let double = FinDimHopf::new(alg, coproduct, counit, None)?;
    let s = double
        .solve_antipode()
        .ok_or_else(|| Error::OutputVerificationFailed("double has no antipode".into()))?;
    let double = double.with_antipode(Some(s));
    let mut r = El::zero();
    for a in 0..d {
        let left = El::basis([a])
            .tensor(h.one())
            .map_terms(|k| El::basis([pack(k[0], k[1])]));
        let right = hs
            .one()
            .tensor(&El::basis([a]))
            .map_terms(|k| El::basis([pack(k[0], k[1])]));
        r.add_scaled(&left.tensor(&right), &Scalar::one());
    }
    let r_inv = double.s_at(&r, 0);
    let qt = QT::with_inverse(r, r_inv);
    let rep = hopf_verify(&double);
    if let Some(c) = rep.failures().next() {
        return Err(Error::OutputVerificationFailed(format!(
            "{}: {}",
            c.name,
            c.witness.clone().unwrap_or_default()
        )));
    }
    Ok((double, qt))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_prime_r_and_u() {
        let mode = Mode::Cyclotomic(2);
        let (h, qt) = zn_prime(2, mode).unwrap();
        let half = Scalar::from_ratio(1, 2);
        assert_eq!(qt.r.coeff(&[0, 0]), half);
        assert_eq!(qt.r.coeff(&[1, 1]), -&half);
        assert_eq!(qt.r.coeff(&[0, 1]), half);
        assert_eq!(qt.u(&h), h.basis(1));
        let rep = qt_verify(&h, &qt);
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn zn_prime_small_orders() {
        for n in [1, 3, 4] {
            let (h, qt) = zn_prime(n, Mode::Cyclotomic(n as u32)).unwrap();
            let rep = qt_verify(&h, &qt);
            assert!(rep.passed, "n={n}: {rep}");
            assert_eq!(rep.checks.len(), 10);
        }
        assert!(matches!(
            zn_prime(3, Mode::QField),
            Err(Error::Scalar(ScalarError::ModeMismatch(..)))
        ));
    }

    #[test]
    fn cocommutative_with_trivial_r() {
        let h = group_algebra(&[2], Mode::QField);
        assert!(qt_verify(&h, &QT::trivial(&h)).passed);
    }

    #[test]
    fn doubles_of_cyclic_groups() {
        let (d2, qt2) = drinfeld_double(&group_algebra(&[2], Mode::QField)).unwrap();
        assert_eq!(d2.dim(), 4);
        let rep = qt_verify(&d2, &qt2);
        assert!(rep.passed, "{rep}");
        let (d1, qt1) = drinfeld_double(&group_algebra(&[1], Mode::QField)).unwrap();
        assert_eq!(d1.dim(), 1);
        assert_eq!(qt1.r, d1.unit_n(2));
    }

    #[test]
    fn bicharacters() {
        let mode = Mode::Cyclotomic(3);
        let q = |k: i64| Scalar::q_pow(mode, k);
        let good = Matrix::from_fn(3, 3, |a, b| q((a * b) as i64));
        let bh = group_function_hopf(&[3], &good, mode).unwrap();
        assert!(hopf_verify(&bh.functions).passed);
        assert!(qt_verify(&bh.functions, &bh.qt).passed);
        assert!(dqt_verify(&bh.group, &bh.dual_qt).passed);
        let bad = Matrix::from_fn(3, 3, |a, b| q((a * b) as i64 + 1));
        assert!(matches!(
            group_function_hopf(&[3], &bad, mode),
            Err(Error::NotABicharacter(_))
        ));
        let trivial = Matrix::from_fn(3, 3, |_, _| Scalar::one());
        let bh = group_function_hopf(&[3], &trivial, mode).unwrap();
        assert_eq!(bh.qt.r21(), bh.qt.r_inv);
    }

    #[test]
    fn dual_of_quasitriangular_is_dual_quasitriangular() {
        let (h, qt) = zn_prime(3, Mode::Cyclotomic(3)).unwrap();
        let (a, r) = DualQT::from_qt(&h, &qt);
        let rep = dqt_verify(&a, &r);
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn double_of_z3() {
        let (d, qt) = drinfeld_double(&group_algebra(&[3], Mode::Cyclotomic(3))).unwrap();
        assert_eq!(d.dim(), 9);
        let rep = qt_verify(&d, &qt);
        assert!(rep.passed, "{rep}");
    }
}
