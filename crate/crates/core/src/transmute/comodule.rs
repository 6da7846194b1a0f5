use super::bos::line_tables;
use super::{braided_hopf_report, first_failure, BasisBraiding};
use crate::error::{invalid, Error, Result};
use crate::findim_hopf::{
    dqt_verify, group_function_hopf, hopf_verify, multiply_slots, parse_vec, tensor_mul, Algebra,
    DualQT, El, FinDimHopf,
};
use crate::linalg::Matrix;
use crate::report::VerificationReport;
use crate::scalar::{Mode, Scalar};
use serde::{Deserialize, Serialize};

/// A right comodule in JSON form: `coaction[v][w][a]` is the coefficient of
/// `e_w⊗e_a` in `β(e_v)`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoactionFile {
    pub coeff_mode: String,
    pub coaction: Vec<Vec<Vec<String>>>,
}

impl CoactionFile {
    pub fn from_coaction(co: &RightCoaction, mode: Mode) -> Self {
        let (dv, da) = (co.dim(), co.dim_a());
        CoactionFile {
            coeff_mode: mode.to_string(),
            coaction: (0..dv)
                .map(|v| {
                    (0..dv)
                        .map(|w| {
                            (0..da)
                                .map(|a| co.coact_basis(v).coeff(&[w, a]).to_string())
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn build(&self, dim_a: usize) -> Result<RightCoaction> {
        let mode: Mode = self.coeff_mode.parse()?;
        let dv = self.coaction.len();
        let mut table = Vec::with_capacity(dv);
        for rows in &self.coaction {
            if rows.len() != dv {
                return Err(invalid(format!("coaction: expected {dv} rows per entry")));
            }
            let mut e = El::zero();
            for (w, row) in rows.iter().enumerate() {
                for (a, c) in parse_vec(row, dim_a, mode, "coaction")?
                    .into_iter()
                    .enumerate()
                {
                    e.add_term(vec![w, a], c);
                }
            }
            table.push(e);
        }
        RightCoaction::new(dim_a, table)
    }
}

/// A right `A`-comodule: `table[v]` is `β(e_v) ∈ V⊗A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightCoaction {
    dim_a: usize,
    table: Vec<El>,
}

impl RightCoaction {
    pub fn new(dim_a: usize, table: Vec<El>) -> Result<Self> {
        let dv = table.len();
        if table.iter().any(|e| {
            e.terms()
                .any(|(k, _)| k.len() != 2 || k[0] >= dv || k[1] >= dim_a)
        }) {
            return Err(invalid("coaction images must lie in V⊗A"));
        }
        Ok(RightCoaction { dim_a, table })
    }

    /// `β(v) = v⊗1`.
    pub fn trivial(a: &FinDimHopf, dim_v: usize) -> Self {
        RightCoaction {
            dim_a: a.dim(),
            table: (0..dim_v).map(|v| El::basis([v]).tensor(a.one())).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn coact_basis(&self, v: usize) -> &El {
        &self.table[v]
    }

    /// Applies the coaction to factor `slot`, inserting the `A` factor after it.
    pub fn coact_at(&self, y: &El, slot: usize) -> El {
        y.map_slot(slot, |v| self.table[v].clone())
    }

    pub fn verify(&self, a: &FinDimHopf) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let bad = (0..self.dim()).find(|&v| {
            let b = &self.table[v];
            self.coact_at(b, 0) != a.delta_at(b, 1)
        });
        rep.push("comodule_law", bad.map(|v| format!("v={v}")));
        let bad = (0..self.dim()).find(|&v| a.eps_at(&self.table[v], 1) != El::basis([v]));
        rep.push("comodule_counit", bad.map(|v| format!("v={v}")));
        rep
    }

    /// `Ψ(v⊗w) = Σ w⁽¹⁾ ⊗ v⁽¹⁾ R(v⁽²⁾⊗w⁽²⁾)`.
    pub fn braiding(&self, r: &DualQT) -> BasisBraiding {
        BasisBraiding::from_fn(self.dim(), |v, w| {
            let mut out = El::zero();
            for (kv, cv) in self.table[v].terms() {
                for (kw, cw) in self.table[w].terms() {
                    out.add_term(vec![kw[0], kv[0]], &(cv * cw) * r.eval_basis(kv[1], kw[1]));
                }
            }
            out
        })
    }

    /// `β(xy) = Σ x⁽¹⁾y⁽¹⁾ ⊗ x⁽²⁾y⁽²⁾` and `β(1) = 1⊗1`.
    pub fn comodule_algebra_check(&self, a: &FinDimHopf, alg: &Algebra) -> VerificationReport {
        let d = alg.dim();
        let mut rep = VerificationReport::new();
        let bad = (0..d)
            .flat_map(|x| (0..d).map(move |y| (x, y)))
            .find(|&(x, y)| {
                let l = self.coact_at(alg.mul_basis(x, y), 0);
                let r = tensor_mul(&[alg, a.algebra()], &self.table[x], &self.table[y]);
                l != r
            });
        rep.push(
            "coaction_multiplicative",
            bad.map(|(x, y)| format!("a={}, b={}", alg.labels()[x], alg.labels()[y])),
        );
        rep.push(
            "unit_coinvariant",
            (self.coact_at(alg.one(), 0) != alg.one().tensor(a.one()))
                .then(|| "β(1) != 1⊗1".to_string()),
        );
        rep
    }

    /// `Δ̲` and `ε` are comodule maps.
    pub fn comodule_coalgebra_check(&self, a: &FinDimHopf, b: &FinDimHopf) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let bad = (0..b.dim()).find(|&x| {
            let l = b.delta_at(&self.table[x], 0);
            let both = self
                .coact_at(&self.coact_at(b.coproduct_basis(x), 1), 0)
                .permute(&[0, 2, 1, 3]);
            l != multiply_slots(a.algebra(), &both, 2)
        });
        rep.push(
            "coproduct_covariant",
            bad.map(|x| format!("b={}", b.labels()[x])),
        );
        let bad =
            (0..b.dim()).find(|&x| b.eps_at(&self.table[x], 0) != a.one().scale(b.counit_basis(x)));
        rep.push(
            "counit_covariant",
            bad.map(|x| format!("b={}", b.labels()[x])),
        );
        rep
    }
}

/// The braided group of a dual quasitriangular `A` in its own category of
/// right comodules: modified product and antipode, same coalgebra.
#[derive(Clone, Debug)]
pub struct CotransmutedTable {
    pub hopf: FinDimHopf,
    pub source: FinDimHopf,
    pub dual_qt: DualQT,
    /// `β(a) = Σ a₂ ⊗ (Sa₁)a₃`.
    pub coaction: RightCoaction,
    pub braiding: BasisBraiding,
    pub report: VerificationReport,
}

pub fn cotransmute(a: &FinDimHopf, r: &DualQT) -> Result<CotransmutedTable> {
    a.require_antipode()?;
    let d = a.dim();
    if r.values.rows() != d || r.values.cols() != d {
        return Err(invalid(format!("functional must be {d}×{d}")));
    }
    let dq = dqt_verify(a, r);
    if !dq.passed {
        return Err(invalid(format!(
            "functional is not dual quasitriangular: {}",
            first_failure(&dq)
        )));
    }
    let s = |i: usize| a.s(&a.basis(i));
    let coaction = RightCoaction::new(
        d,
        (0..d)
            .map(|x| {
                a.delta_n(&a.basis(x), 3)
                    .map_terms(|k| El::basis([k[1]]).tensor(&a.mul(&s(k[0]), &a.basis(k[2]))))
            })
            .collect(),
    )?;
    let mut product = Vec::with_capacity(d * d);
    for x in 0..d {
        let dx = a.delta_n(&a.basis(x), 3);
        for y in 0..d {
            let dy = a.coproduct_basis(y);
            let mut e = El::zero();
            for (kx, cx) in dx.terms() {
                let left = a.mul(&s(kx[0]), &a.basis(kx[2]));
                for (ky, cy) in dy.terms() {
                    let c = r.eval(&left.tensor(&s(ky[0])));
                    e.add_scaled(a.algebra().mul_basis(kx[1], ky[1]), &(&(cx * cy) * &c));
                }
            }
            product.push(e);
        }
    }
    let alg = Algebra::new(a.mode(), a.labels().to_vec(), product, a.one().clone())?;
    let antipode = (0..d)
        .map(|x| {
            a.delta_n(&a.basis(x), 4).map_terms(|k| {
                let left = a.mul(&a.s(&s(k[2])), &s(k[0]));
                s(k[1]).scale(&r.eval(&left.tensor(&a.basis(k[3]))))
            })
        })
        .collect();
    let coproduct = (0..d).map(|x| a.coproduct_basis(x).clone()).collect();
    let counit = (0..d).map(|x| a.counit_basis(x).clone()).collect();
    let hopf = FinDimHopf::new(alg, coproduct, counit, Some(antipode))?;
    let braiding = coaction.braiding(r);

    let mut report = VerificationReport::new();
    report.absorb("braided", braided_hopf_report(&hopf, &braiding));
    report.absorb("comodule", coaction.verify(a));
    report.absorb(
        "comodule",
        coaction.comodule_algebra_check(a, hopf.algebra()),
    );
    report.absorb("comodule", coaction.comodule_coalgebra_check(a, &hopf));
    report.push("braided_commutative", braided_commutativity(a, r, &hopf));
    Ok(CotransmutedTable {
        hopf,
        source: a.clone(),
        dual_qt: r.clone(),
        coaction,
        braiding,
        report,
    })
}

/// `b·̲a = Σ a₃·̲b₃ R(Sa₂⊗b₁) R(a₄⊗b₂) R(b₅⊗Sa₁) R(b₄⊗a₅)` on basis pairs.
fn braided_commutativity(a: &FinDimHopf, r: &DualQT, b: &FinDimHopf) -> Option<String> {
    let d = a.dim();
    let s = |i: usize| a.s(&a.basis(i));
    let ev = |x: &El, y: &El| r.eval(&x.tensor(y));
    for x in 0..d {
        let dx = a.delta_n(&a.basis(x), 5);
        for y in 0..d {
            let dy = a.delta_n(&a.basis(y), 5);
            let l = b.algebra().mul_basis(y, x).clone();
            let mut rr = El::zero();
            for (ka, ca) in dx.terms() {
                for (kb, cb) in dy.terms() {
                    let c = [
                        ev(&s(ka[1]), &a.basis(kb[0])),
                        r.eval_basis(ka[3], kb[1]).clone(),
                        ev(&a.basis(kb[4]), &s(ka[0])),
                        r.eval_basis(kb[3], ka[4]).clone(),
                    ]
                    .iter()
                    .fold(ca * cb, |acc, v| &acc * v);
                    if !c.is_zero() {
                        rr.add_scaled(b.algebra().mul_basis(ka[2], kb[2]), &c);
                    }
                }
            }
            if l != rr {
                return Some(format!("a={}, b={}", a.labels()[x], a.labels()[y]));
            }
        }
    }
    None
}

/// `cobos(B) = A⋉B` on `A⊗B` (basis `a·dim B + b`): product
/// `(a⊗b)(c⊗d) = Σ ac₁ ⊗ (b◁c₂)d` with `b◁c = Σ b⁽¹⁾ R(b⁽²⁾⊗c)` and
/// coproduct `Δ(a⊗b) = Σ (a₁⊗b₁⁽¹⁾) ⊗ (a₂b₁⁽²⁾⊗b₂)`.
pub fn cobosonize(
    a: &FinDimHopf,
    r: &DualQT,
    b: &FinDimHopf,
    co: &RightCoaction,
) -> Result<FinDimHopf> {
    if co.dim() != b.dim() || co.dim_a() != a.dim() {
        return Err(invalid("coaction does not match A and B"));
    }
    let mut input = VerificationReport::new();
    input.absorb("braided", braided_hopf_report(b, &co.braiding(r)));
    input.absorb("comodule", co.verify(a));
    input.absorb("comodule", co.comodule_algebra_check(a, b.algebra()));
    input.absorb("comodule", co.comodule_coalgebra_check(a, b));
    if !input.passed {
        return Err(Error::InputNotBraidedHopf(first_failure(&input)));
    }
    let (da, db) = (a.dim(), b.dim());
    let fuse = |x: &El| {
        x.map_terms(|k| El::basis(k.chunks(2).map(|p| p[0] * db + p[1]).collect::<Vec<_>>()))
    };
    let act = |x: usize, c: usize| -> El {
        co.coact_basis(x)
            .map_terms(|k| El::term(r.eval_basis(k[1], c).clone(), [k[0]]))
    };
    let labels = (0..da * db)
        .map(|i| format!("{}⊗{}", a.labels()[i / db], b.labels()[i % db]))
        .collect();
    let mut product = Vec::with_capacity(da * da * db * db);
    for l in 0..da * db {
        let (x, u) = (l / db, l % db);
        for rr in 0..da * db {
            let (y, v) = (rr / db, rr % db);
            let e = a.coproduct_basis(y).map_terms(|k| {
                a.algebra()
                    .mul_basis(x, k[0])
                    .tensor(&b.mul(&act(u, k[1]), &b.basis(v)))
            });
            product.push(fuse(&e));
        }
    }
    let unit = fuse(&a.one().tensor(b.one()));
    let alg = Algebra::new(a.mode(), labels, product, unit)?;
    let coproduct = (0..da * db)
        .map(|l| {
            let (x, u) = (l / db, l % db);
            let e = b.coproduct_basis(u).map_terms(|k| {
                co.coact_basis(k[0]).map_terms(|m| {
                    a.coproduct_basis(x).map_terms(|s| {
                        El::basis([s[0], m[0]])
                            .tensor(a.algebra().mul_basis(s[1], m[1]))
                            .tensor(&El::basis([k[1]]))
                    })
                })
            });
            fuse(&e)
        })
        .collect();
    let counit = (0..da * db)
        .map(|l| a.counit_basis(l / db) * b.counit_basis(l % db))
        .collect();
    let out = FinDimHopf::new(alg, coproduct, counit, None)?;
    let s = out.solve_antipode();
    let out = out.with_antipode(s);
    if !out.has_antipode() {
        return Err(Error::OutputVerificationFailed("no antipode".into()));
    }
    let rep = hopf_verify(&out);
    if !rep.passed {
        return Err(Error::OutputVerificationFailed(first_failure(&rep)));
    }
    Ok(out)
}

/// The anyonic line as a braided group of right comodules over `kZ_n` with
/// the functional `R(g^a⊗g^b) = q^{ab}`; `β(xᵏ) = xᵏ⊗gᵏ`. Returns `A`, the
/// functional, the line and the coaction.
pub fn comodule_anyonic_line(
    n: usize,
    mode: Mode,
) -> Result<(FinDimHopf, DualQT, FinDimHopf, RightCoaction)> {
    if n == 0 {
        return Err(invalid("Z_0 is not finite"));
    }
    if n > 1 && mode != Mode::Cyclotomic(n as u32) {
        return Err(
            crate::scalar::ScalarError::ModeMismatch(mode, Mode::Cyclotomic(n as u32)).into(),
        );
    }
    let beta = Matrix::from_fn(n, n, |x, y| {
        if n == 1 {
            Scalar::one()
        } else {
            Scalar::q_pow(mode, ((x * y) % n) as i64)
        }
    });
    let bh = group_function_hopf(&[n], &beta, mode)?;
    let b = line_tables(n, mode)?;
    let co = RightCoaction::new(n, (0..n).map(|k| El::basis([k, k])).collect())?;
    Ok((bh.group, bh.dual_qt, b, co))
}
