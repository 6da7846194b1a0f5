//! Transmutation of quasitriangular Hopf algebras into braided groups, its
//! dual for comodules, bosonization and the Radford decomposition, all on
//! structure constants.

mod bos;
mod comodule;
mod radford;

pub use bos::{anyonic_line, biproduct, bosonize, module_coalgebra_check};
pub use comodule::{
    cobosonize, comodule_anyonic_line, cotransmute, CoactionFile, CotransmutedTable, RightCoaction,
};
pub use radford::{radford_decompose, RadfordDecomposition};

use crate::error::{invalid, Error, Result};
use crate::findim_hopf::{
    apply_matrix, bialgebra_map_check, bialgebra_report, braid, embed, multiply_slots, qt_verify,
    Algebra, El, FinDimHopf, ModuleAction, QT,
};
use crate::linalg::Matrix;
use crate::report::VerificationReport;
use crate::scalar::{Mode, Scalar};

pub(crate) fn first_failure(rep: &VerificationReport) -> String {
    rep.failures()
        .map(|c| match &c.witness {
            Some(w) => format!("{}: {w}", c.name),
            None => c.name.clone(),
        })
        .next()
        .unwrap_or_default()
}

/// A linear map `V⊗V → V⊗V` given by its values on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisBraiding {
    dim: usize,
    table: Vec<El>,
}

impl BasisBraiding {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> El) -> Self {
        let table = (0..dim * dim).map(|i| f(i / dim, i % dim)).collect();
        BasisBraiding { dim, table }
    }

    /// The braiding of a module with itself over a quasitriangular Hopf algebra.
    pub fn from_module(qt: &QT, action: &ModuleAction) -> Self {
        Self::from_fn(action.dim(), |a, b| {
            braid(qt, action, action, &El::basis([a, b]))
        })
    }

    pub fn flip(dim: usize) -> Self {
        Self::from_fn(dim, |a, b| El::basis([b, a]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn apply_basis(&self, a: usize, b: usize) -> &El {
        &self.table[a * self.dim + b]
    }

    /// Applies the map to factors `slot` and `slot + 1`.
    pub fn apply_at(&self, x: &El, slot: usize) -> El {
        x.map_terms(|k| {
            let mut out = El::zero();
            for (m, c) in self.apply_basis(k[slot], k[slot + 1]).terms() {
                let mut key = k[..slot].to_vec();
                key.extend_from_slice(m);
                key.extend_from_slice(&k[slot + 2..]);
                out.add_term(key, c.clone());
            }
            out
        })
    }

    /// Rows and columns in the flattening `a·dim + b`.
    pub fn matrix(&self) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(d * d, d * d);
        for (c, img) in self.table.iter().enumerate() {
            for (k, v) in img.terms() {
                m[(k[0] * d + k[1], c)] = v.clone();
            }
        }
        m
    }
}

/// The product of `B^{⊗n}` with the braided tensor product algebra structure:
/// each factor of `y` is braided leftwards past the remaining factors of `x`.
pub fn braided_tensor_mul(alg: &Algebra, psi: &BasisBraiding, n: usize, x: &El, y: &El) -> El {
    let mut z = x.tensor(y);
    for i in 0..n {
        for p in (2 * i + 2..=n + i).rev() {
            z = psi.apply_at(&z, p - 1);
        }
    }
    for i in (0..n).rev() {
        z = multiply_slots(alg, &z, 2 * i);
    }
    z
}

/// The braided bialgebra axioms, and the antipode law when present, with the
/// coproduct multiplicative into the braided tensor square built from `psi`.
pub fn braided_hopf_report(b: &FinDimHopf, psi: &BasisBraiding) -> VerificationReport {
    let mut rep = bialgebra_report(b, &|x, y| braided_tensor_mul(b.algebra(), psi, 2, x, y));
    rep.push(
        "braiding_invertible",
        psi.matrix()
            .inverse()
            .is_none()
            .then(|| "Ψ is singular".to_string()),
    );
    rep
}

/// The transmuted braided group of `H` over the background `(H₁, R₁)` along
/// the bialgebra map `f: H₁ → H`.
#[derive(Clone, Debug)]
pub struct BraidedHopfTable {
    /// Same algebra as `H`, with the braided coproduct and antipode.
    pub hopf: FinDimHopf,
    pub background: FinDimHopf,
    pub background_qt: QT,
    pub f: Matrix,
    /// `h ▷ b = Σ f(h₁) b S f(h₂)`.
    pub action: ModuleAction,
    pub braiding: BasisBraiding,
    /// Present only when `H` is quasitriangular.
    pub r: Option<El>,
    pub op_coproduct: Option<Vec<El>>,
    pub report: VerificationReport,
}

impl BraidedHopfTable {
    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// The braided tensor product on `B^{⊗n}`.
    pub fn tensor_mul(&self, n: usize, x: &El, y: &El) -> El {
        braided_tensor_mul(self.hopf.algebra(), &self.braiding, n, x, y)
    }
}

pub fn transmute(
    h1: &FinDimHopf,
    qt1: &QT,
    h: &FinDimHopf,
    qt: Option<&QT>,
    f: &Matrix,
) -> Result<BraidedHopfTable> {
    if f.rows() != h.dim() || f.cols() != h1.dim() {
        return Err(invalid(format!("map must be {}×{}", h.dim(), h1.dim())));
    }
    let map_rep = bialgebra_map_check(h1, h, f);
    if !map_rep.passed {
        return Err(Error::NotABialgebraMap(first_failure(&map_rep)));
    }
    let bg = qt_verify(h1, qt1);
    if !bg.passed {
        return Err(invalid(format!(
            "background is not quasitriangular: {}",
            first_failure(&bg)
        )));
    }
    h.require_antipode()?;
    h1.require_antipode()?;
    let d = h.dim();
    let fe = |x: &El, slot: usize| apply_matrix(f, x, slot);

    let action = ModuleAction::from_fn(h1.dim(), h.labels().to_vec(), |a, b| {
        let fd = fe(&fe(&h1.delta(&h1.basis(a)), 0), 1);
        fd.map_terms(|k| h.mul_all(&[&h.basis(k[0]), &h.basis(b), &h.s(&h.basis(k[1]))]))
    });
    let braiding = BasisBraiding::from_module(qt1, &action);

    // Σ R₁⁽¹⁾ ⊗ f(S R₁⁽²⁾), first factor in H₁.
    let r_sr = fe(&h1.s_at(&qt1.r, 1), 1);
    let r_f = fe(&qt1.r, 1);
    let coproduct: Vec<El> = (0..d)
        .map(|b| {
            h.coproduct_basis(b).map_terms(|k| {
                r_sr.map_terms(|r| {
                    h.algebra()
                        .mul_basis(k[0], r[1])
                        .tensor(action.act_basis(r[0], k[1]))
                })
            })
        })
        .collect();
    let antipode: Vec<El> = (0..d)
        .map(|b| r_f.map_terms(|r| h.mul(&h.basis(r[1]), &h.s(action.act_basis(r[0], b)))))
        .collect();
    let counit = (0..d).map(|b| h.counit_basis(b).clone()).collect();
    let hopf = FinDimHopf::new(h.algebra().clone(), coproduct, counit, Some(antipode))?;

    let mut report = VerificationReport::new();
    report.absorb("braided", braided_hopf_report(&hopf, &braiding));
    report.absorb("module", action.verify(h1));
    report.absorb("module", action.module_algebra_check(h1, h.algebra()));
    report.absorb("module", module_coalgebra_check(h1, &hopf, &action));

    let (r, op_coproduct) = match qt {
        None => (None, None),
        Some(qt) => {
            let rho = h.mul_n(&fe(&fe(&qt1.r_inv, 0), 1), &qt.r);
            let r = rho.map_terms(|p| {
                r_sr.map_terms(|r| {
                    h.algebra()
                        .mul_basis(p[0], r[1])
                        .tensor(action.act_basis(r[0], p[1]))
                })
            });
            let fq = fe(&qt1.q(h1), 1);
            let mut t = Matrix::zeros(d * d, d * d);
            for x in 0..d {
                for y in 0..d {
                    let img = fq.map_terms(|q| {
                        let z =
                            braiding.apply_at(&El::basis([x]).tensor(action.act_basis(q[0], y)), 0);
                        z.map_slot(1, |w| h.algebra().mul_basis(w, q[1]).clone())
                    });
                    for (k, c) in img.terms() {
                        t[(k[0] * d + k[1], x * d + y)] = c.clone();
                    }
                }
            }
            let op = t.inverse().map(|ti| {
                (0..d)
                    .map(|b| {
                        let v = hopf.coproduct_basis(b).flat_coords(&[d, d]);
                        El::from_flat(&ti.apply(&v), &[d, d])
                    })
                    .collect::<Vec<_>>()
            });
            report.push(
                "op_coproduct_unique",
                op.is_none().then(|| "defining map is singular".to_string()),
            );
            (Some(r), op)
        }
    };
    let mut table = BraidedHopfTable {
        hopf,
        background: h1.clone(),
        background_qt: qt1.clone(),
        f: f.clone(),
        action,
        braiding,
        r,
        op_coproduct,
        report,
    };
    if table.r.is_some() && table.op_coproduct.is_some() {
        let univ = braided_qt_report(&table);
        table.report.absorb("braided_qt", univ);
    }
    Ok(table)
}

/// The quasitriangularity laws of `𝓡̲` inside braided tensor products:
/// `(Δ̲⊗id)𝓡̲ = 𝓡̲₁₃𝓡̲₂₃`, `(id⊗Δ̲)𝓡̲ = 𝓡̲₁₃𝓡̲₁₂` and
/// `Δ̲ᵒᵖ(b) 𝓡̲ = 𝓡̲ Δ̲(b)`.
pub fn braided_qt_report(t: &BraidedHopfTable) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let (Some(r), Some(op)) = (&t.r, &t.op_coproduct) else {
        rep.fail("braided_r_present", "no quasitriangular structure on H");
        return rep;
    };
    let h = &t.hopf;
    let one = h.one();
    let r13 = |x: &El| embed(x, &[0, 2], &[one]);
    let r12 = |x: &El| embed(x, &[0, 1], &[one]);
    let r23 = |x: &El| embed(x, &[1, 2], &[one]);
    let l = h.delta_at(r, 0);
    let rr = t.tensor_mul(3, &r13(r), &r23(r));
    rep.push(
        "coproduct_first_leg",
        (l != rr).then(|| format!("(Δ̲⊗id)𝓡̲ = {}", h.display(&l))),
    );
    let l = h.delta_at(r, 1);
    let rr = t.tensor_mul(3, &r13(r), &r12(r));
    rep.push(
        "coproduct_second_leg",
        (l != rr).then(|| format!("(id⊗Δ̲)𝓡̲ = {}", h.display(&l))),
    );
    let bad = (0..h.dim())
        .find(|&b| t.tensor_mul(2, &op[b], r) != t.tensor_mul(2, r, h.coproduct_basis(b)));
    rep.push(
        "intertwines_coproducts",
        bad.map(|b| format!("b={}", h.labels()[b])),
    );
    rep
}

fn is_identity(f: &Matrix) -> bool {
    f.rows() == f.cols() && *f == Matrix::identity(f.rows())
}

/// Braided cocommutativity `Σ Ψ(b₁ ⊗ Q⁽¹⁾▷b₂) Q⁽²⁾ = Δ̲b` with
/// `Q = R₂₁R₁₂`, and `𝓡̲ = 1⊗1` when `𝓡̲` is present.
pub fn cocom_check(t: &BraidedHopfTable) -> VerificationReport {
    let mut rep = VerificationReport::new();
    rep.push(
        "along_identity",
        (!is_identity(&t.f)).then(|| "f is not the identity".to_string()),
    );
    let h = &t.hopf;
    let fq = apply_matrix(&t.f, &t.background_qt.q(&t.background), 1);
    let bad = (0..h.dim()).find_map(|b| {
        let db = h.coproduct_basis(b);
        let l = db.map_terms(|k| {
            fq.map_terms(|q| {
                let z = t
                    .braiding
                    .apply_at(&El::basis([k[0]]).tensor(t.action.act_basis(q[0], k[1])), 0);
                z.map_slot(1, |w| h.algebra().mul_basis(w, q[1]).clone())
            })
        });
        (l != *db).then(|| format!("b={}: {}", h.labels()[b], h.display(&l)))
    });
    rep.push("braided_cocommutative", bad);
    if let Some(r) = &t.r {
        rep.push(
            "braided_r_trivial",
            (*r != h.unit_n(2)).then(|| format!("𝓡̲ = {}", h.display(r))),
        );
    }
    rep
}

/// The closed-form anyonic version of a Hopf algebra containing a group-like
/// element `g` of order `n`.
#[derive(Clone, Debug)]
pub struct AnyonicVersion {
    pub hopf: FinDimHopf,
    /// `|b|` with `g b g⁻¹ = q^{|b|} b`.
    pub degrees: Vec<usize>,
    pub op_coproduct: Vec<El>,
    pub r: Option<El>,
    /// The inclusion `Z_n′ → H`, `g^k ↦ g^k`.
    pub embedding: Matrix,
}

fn root_power(n: usize, mode: Mode, e: i64) -> Scalar {
    if n == 1 {
        Scalar::one()
    } else {
        Scalar::q_pow(mode, e.rem_euclid(n as i64))
    }
}

pub fn anyonic_version(
    h: &FinDimHopf,
    qt: Option<&QT>,
    g: usize,
    n: usize,
) -> Result<AnyonicVersion> {
    let mode = h.mode();
    if n == 0 {
        return Err(invalid("group-like order must be positive"));
    }
    if n > 1 && mode != Mode::Cyclotomic(n as u32) {
        return Err(
            crate::scalar::ScalarError::ModeMismatch(mode, Mode::Cyclotomic(n as u32)).into(),
        );
    }
    h.require_antipode()?;
    let d = h.dim();
    let ge = h.basis(g);
    if h.delta(&ge) != ge.tensor(&ge) || !h.eps(&ge).is_one() {
        return Err(invalid(format!("{} is not group-like", h.labels()[g])));
    }
    let mut powers = vec![h.one().clone()];
    for k in 1..=n {
        powers.push(h.mul(&powers[k - 1], &ge));
    }
    if powers[n] != *h.one() || (1..n).any(|k| powers[k] == *h.one()) {
        return Err(invalid(format!(
            "{} does not have order {n}",
            h.labels()[g]
        )));
    }
    let pw = |e: i64| &powers[e.rem_euclid(n as i64) as usize];
    let degrees = (0..d)
        .map(|b| {
            let conj = h.mul_all(&[&ge, &h.basis(b), pw(-1)]);
            (0..n)
                .find(|&k| conj == h.basis(b).scale(&root_power(n, mode, k as i64)))
                .ok_or_else(|| {
                    invalid(format!(
                        "basis element {} is not homogeneous",
                        h.labels()[b]
                    ))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let deg = |b: usize| degrees[b] as i64;
    let coproduct: Vec<El> = (0..d)
        .map(|b| {
            h.coproduct_basis(b)
                .map_terms(|k| h.mul(&h.basis(k[0]), pw(-deg(k[1]))).tensor(&h.basis(k[1])))
        })
        .collect();
    let antipode: Vec<El> = (0..d)
        .map(|b| h.mul(pw(deg(b)), &h.s(&h.basis(b))))
        .collect();
    let op_coproduct = (0..d)
        .map(|b| {
            h.coproduct_basis(b).map_terms(|k| {
                h.mul(&h.basis(k[1]), pw(-2 * deg(k[0])))
                    .tensor(&h.mul(pw(-deg(k[1])), &h.basis(k[0])))
            })
        })
        .collect();
    let embedding = Matrix::from_fn(d, n, |r, c| powers[c].coeff(&[r]));
    let r = qt.map(|qt| {
        let (_, zqt) = crate::findim_hopf::zn_prime(n, mode).expect("mode checked");
        let zinv = apply_matrix(&embedding, &apply_matrix(&embedding, &zqt.r_inv, 0), 1);
        let shifted =
            qt.r.map_terms(|k| h.mul(&h.basis(k[0]), pw(-deg(k[1]))).tensor(&h.basis(k[1])));
        h.mul_n(&zinv, &shifted)
    });
    let counit = (0..d).map(|b| h.counit_basis(b).clone()).collect();
    let hopf = FinDimHopf::new(h.algebra().clone(), coproduct, counit, Some(antipode))?;
    Ok(AnyonicVersion {
        hopf,
        degrees,
        op_coproduct,
        r,
        embedding,
    })
}

/// `θ(h⊗c) = Σ h S R⁽²⁾ ⊗ R⁽¹⁾▷c` from `H⊗C` to `B(H,H)⊗̲C`: bijectivity
/// and multiplicativity on basis pairs.
pub fn theta_iso_check(
    h: &FinDimHopf,
    qt: &QT,
    c: &Algebra,
    action: &ModuleAction,
) -> Result<VerificationReport> {
    h.require_antipode()?;
    if action.dim() != c.dim() || action.dim_h() != h.dim() {
        return Err(invalid("action does not match the algebra"));
    }
    let (dh, dc) = (h.dim(), c.dim());
    let adj = ModuleAction::adjoint(h)?;
    let r_s = h.s_at(&qt.r, 1);
    let theta = |x: &El| -> El {
        x.map_terms(|k| {
            r_s.map_terms(|r| {
                h.algebra()
                    .mul_basis(k[0], r[1])
                    .tensor(action.act_basis(r[0], k[1]))
            })
        })
    };
    let mut m = Matrix::zeros(dh * dc, dh * dc);
    for x in 0..dh {
        for y in 0..dc {
            for (k, v) in theta(&El::basis([x, y])).terms() {
                m[(k[0] * dc + k[1], x * dc + y)] = v.clone();
            }
        }
    }
    // (b⊗c)(b'⊗d) = b Ψ(c⊗b') d with Ψ(c⊗b') = Σ R⁽²⁾▷b' ⊗ R⁽¹⁾▷c.
    let braided = |x: &El, y: &El| -> El {
        x.tensor(y).map_terms(|k| {
            qt.r.map_terms(|r| {
                let b2 = adj.act_basis(r[1], k[2]);
                let c2 = action.act_basis(r[0], k[1]);
                h.mul(&h.basis(k[0]), b2).tensor(&c.mul(c2, &c.basis(k[3])))
            })
        })
    };
    let mut rep = VerificationReport::new();
    rep.push(
        "bijective",
        (m.rank() < dh * dc).then(|| format!("rank {} < {}", m.rank(), dh * dc)),
    );
    let mut bad = None;
    'outer: for x in 0..dh {
        for y in 0..dc {
            for u in 0..dh {
                for v in 0..dc {
                    let prod = h.algebra().mul_basis(x, u).tensor(c.mul_basis(y, v));
                    let l = theta(&prod);
                    let r = braided(&theta(&El::basis([x, y])), &theta(&El::basis([u, v])));
                    if l != r {
                        bad = Some(format!(
                            "({}⊗{})({}⊗{})",
                            h.labels()[x],
                            c.labels()[y],
                            h.labels()[u],
                            c.labels()[v]
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    rep.push("multiplicative", bad);
    rep.push(
        "unital",
        (theta(&h.one().tensor(c.one())) != h.one().tensor(c.one()))
            .then(|| "θ(1⊗1) != 1⊗1".to_string()),
    );
    Ok(rep)
}

/// Checks that an `H`-module algebra `C` is a braided module algebra of the
/// transmuted `B(H,H)` with the same action.
pub fn braided_module_algebra_check(
    t: &BraidedHopfTable,
    c: &Algebra,
    action: &ModuleAction,
) -> Result<VerificationReport> {
    if !is_identity(&t.f) {
        return Err(invalid("module transmutation needs f = id"));
    }
    if action.dim() != c.dim() || action.dim_h() != t.dim() {
        return Err(invalid("action does not match the algebra"));
    }
    let h = &t.hopf;
    let r = &t.background_qt.r;
    let dc = c.dim();
    let mut rep = VerificationReport::new();
    let mut bad = None;
    'outer: for b in 0..h.dim() {
        for x in 0..dc {
            for y in 0..dc {
                let l = action.act(&h.basis(b), c.mul_basis(x, y));
                let rr = h.coproduct_basis(b).map_terms(|k| {
                    r.map_terms(|q| {
                        let c1 = action.act_basis(q[1], x);
                        let b2 = t.action.act_basis(q[0], k[1]);
                        c.mul(
                            &action.act(&h.basis(k[0]), c1),
                            &action.act(b2, &El::basis([y])),
                        )
                    })
                });
                if l != rr {
                    bad = Some(format!(
                        "b={}, c={}, d={}",
                        h.labels()[b],
                        c.labels()[x],
                        c.labels()[y]
                    ));
                    break 'outer;
                }
            }
        }
    }
    rep.push("braided_action_multiplicative", bad);
    let bad = (0..h.dim())
        .find(|&b| action.act(&h.basis(b), c.one()) != c.one().scale(h.counit_basis(b)));
    rep.push(
        "unit_invariant",
        bad.map(|b| format!("b={}", h.labels()[b])),
    );
    Ok(rep)
}

#[cfg(test)]
mod tests;
