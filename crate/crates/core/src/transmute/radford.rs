use super::bos::{biproduct, module_coalgebra_check};
use super::{braided_hopf_report, first_failure, BasisBraiding};
use crate::error::{invalid, Error, Result};
use crate::findim_hopf::{
    apply_matrix, bialgebra_map_check, crossed_module_check, Algebra, Coaction, El, FinDimHopf,
    ModuleAction,
};
use crate::linalg::Matrix;
use crate::report::VerificationReport;

/// A Hopf algebra `H₁` with a projection onto `H`, split as `B⋊H`.
#[derive(Clone, Debug)]
pub struct RadfordDecomposition {
    pub b: FinDimHopf,
    /// Column `k` is the `k`-th basis vector of `B` inside `H₁`.
    pub embedding: Matrix,
    /// `h ▷ b = Σ i(h₁) b S i(h₂)`.
    pub action: ModuleAction,
    /// `β(b) = Σ p(b₁) ⊗ b₂`.
    pub coaction: Coaction,
    /// `Ψ(b⊗c) = Σ b⁽¹⁾▷c ⊗ b⁽²⁾`.
    pub braiding: BasisBraiding,
    pub biproduct: FinDimHopf,
    pub report: VerificationReport,
}

/// `p: H₁ → H` is `dim H × dim H₁`, `i: H → H₁` is `dim H₁ × dim H`.
pub fn radford_decompose(
    h1: &FinDimHopf,
    h: &FinDimHopf,
    p: &Matrix,
    i: &Matrix,
) -> Result<RadfordDecomposition> {
    let (d1, dh) = (h1.dim(), h.dim());
    if p.rows() != dh || p.cols() != d1 || i.rows() != d1 || i.cols() != dh {
        return Err(invalid(format!("p must be {dh}×{d1} and i {d1}×{dh}")));
    }
    let rep = bialgebra_map_check(h1, h, p);
    if !rep.passed {
        return Err(Error::NotABialgebraMap(format!(
            "p: {}",
            first_failure(&rep)
        )));
    }
    let rep = bialgebra_map_check(h, h1, i);
    if !rep.passed {
        return Err(Error::NotABialgebraMap(format!(
            "i: {}",
            first_failure(&rep)
        )));
    }
    let pi = p * i;
    if pi != Matrix::identity(dh) {
        let (r, c) = pi.first_difference(&Matrix::identity(dh)).unwrap_or((0, 0));
        return Err(Error::NotAProjection(format!(
            "p∘i differs from id at ({r}, {c})"
        )));
    }
    h1.require_antipode()?;
    h.require_antipode()?;
    if h.antipode_matrix().and_then(|m| m.inverse()).is_none() {
        return Err(Error::AntipodeNotInvertible);
    }

    let ip = i * p;
    let sip = |x: &El| h1.s(&apply_matrix(&ip, x, 0));
    let proj = Matrix::from_fn(d1, d1, |row, a| {
        h1.coproduct_basis(a)
            .map_terms(|k| h1.mul(&h1.basis(k[0]), &sip(&h1.basis(k[1]))))
            .coeff(&[row])
    });
    let (echelon, pivots) = proj.transpose().rref();
    let db = pivots.len();
    let embedding = Matrix::from_fn(d1, db, |row, k| echelon[(k, row)].clone());
    let to_b = |x: &El| -> Result<El> {
        let v = x.coords(d1);
        let c: Vec<_> = pivots.iter().map(|&pv| v[pv].clone()).collect();
        if embedding.apply(&c) != v {
            return Err(invalid(
                "element does not lie in the image of the projection",
            ));
        }
        Ok(El::from_coords(&c))
    };
    let to_b_at = |x: &El, slot: usize| -> Result<El> {
        let mut out = El::zero();
        for (k, c) in x.terms() {
            let img = to_b(&El::basis([k[slot]]))?;
            for (m, v) in img.terms() {
                let mut key = k.to_vec();
                key[slot] = m[0];
                out.add_term(key, c * v);
            }
        }
        Ok(out)
    };
    // B is spanned by the columns of `embedding`, so coordinates of its
    // elements are read off the pivot rows.
    let to_b_all = |x: &El, slots: usize| -> Result<El> {
        let mut x = x.clone();
        for s in 0..slots {
            x = to_b_at(&x, s)?;
        }
        Ok(x)
    };
    let vec_of = |k: usize| El::from_coords(&embedding.col(k));
    let labels: Vec<String> = (0..db).map(|k| h1.display(&vec_of(k))).collect();

    let mut product = Vec::with_capacity(db * db);
    for x in 0..db {
        for y in 0..db {
            product.push(to_b(&h1.mul(&vec_of(x), &vec_of(y)))?);
        }
    }
    let alg = Algebra::new(h1.mode(), labels.clone(), product, to_b(h1.one())?)?;
    let coproduct = (0..db)
        .map(|x| {
            let e = h1.delta_n(&vec_of(x), 3).map_terms(|k| {
                h1.mul(&h1.basis(k[0]), &sip(&h1.basis(k[1])))
                    .tensor(&h1.basis(k[2]))
            });
            to_b_all(&e, 2)
        })
        .collect::<Result<Vec<_>>>()?;
    let counit = (0..db).map(|x| h1.eps(&vec_of(x))).collect();
    let antipode = (0..db)
        .map(|x| {
            let e = h1.delta(&vec_of(x)).map_terms(|k| {
                h1.mul(
                    &apply_matrix(&ip, &h1.basis(k[0]), 0),
                    &h1.s(&h1.basis(k[1])),
                )
            });
            to_b(&e)
        })
        .collect::<Result<Vec<_>>>()?;
    let b = FinDimHopf::new(alg, coproduct, counit, Some(antipode))?;

    let mut table = Vec::with_capacity(dh * db);
    for a in 0..dh {
        let ia = apply_matrix(i, &h.delta(&h.basis(a)), 0);
        let ia = apply_matrix(i, &ia, 1);
        for x in 0..db {
            let e = ia
                .map_terms(|k| h1.mul_all(&[&h1.basis(k[0]), &vec_of(x), &h1.s(&h1.basis(k[1]))]));
            table.push(to_b(&e)?);
        }
    }
    let action = ModuleAction::new(dh, labels, table)?;
    let coaction = Coaction::new(
        dh,
        (0..db)
            .map(|x| to_b_at(&apply_matrix(p, &h1.delta(&vec_of(x)), 0), 1))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let braiding = BasisBraiding::from_fn(db, |x, y| {
        coaction
            .coact_basis(x)
            .map_terms(|k| action.act_basis(k[0], y).tensor(&El::basis([k[1]])))
    });

    let mut report = VerificationReport::new();
    let bad = (0..db).find(|&x| {
        let v = vec_of(x);
        apply_matrix(p, &h1.delta(&v), 1) != v.tensor(h.one())
    });
    report.push("coinvariant", bad.map(|x| format!("b={}", b.labels()[x])));
    report.absorb("braided", braided_hopf_report(&b, &braiding));
    report.absorb("crossed", crossed_module_check(h, &action, &coaction));
    report.absorb("module", action.module_algebra_check(h, b.algebra()));
    report.absorb("module", module_coalgebra_check(h, &b, &action));

    let bp = biproduct(h, &b, &action, &coaction)?;
    let theta = Matrix::from_fn(d1, db * dh, |row, col| {
        h1.mul(&vec_of(col / dh), &El::from_coords(&i.col(col % dh)))
            .coeff(&[row])
    });
    report.absorb("theta", theta_report(h1, h, &bp, &theta, p, &sip, &to_b));
    Ok(RadfordDecomposition {
        b,
        embedding,
        action,
        coaction,
        braiding,
        biproduct: bp,
        report,
    })
}

fn theta_report(
    h1: &FinDimHopf,
    h: &FinDimHopf,
    bp: &FinDimHopf,
    theta: &Matrix,
    p: &Matrix,
    sip: &dyn Fn(&El) -> El,
    to_b: &dyn Fn(&El) -> Result<El>,
) -> VerificationReport {
    let d1 = h1.dim();
    let dh = h.dim();
    let mut rep = VerificationReport::new();
    let th = |x: &El| apply_matrix(theta, x, 0);
    let th2 = |x: &El| apply_matrix(theta, &apply_matrix(theta, x, 0), 1);
    rep.push(
        "bijective",
        (theta.rows() != theta.cols() || theta.rank() < d1)
            .then(|| format!("rank {} of {}", theta.rank(), d1)),
    );
    let n = bp.dim();
    let bad = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| {
            th(bp.algebra().mul_basis(x, y)) != h1.mul(&th(&bp.basis(x)), &th(&bp.basis(y)))
        });
    rep.push(
        "multiplicative",
        bad.map(|(x, y)| format!("{}·{}", bp.labels()[x], bp.labels()[y])),
    );
    let bad = (0..n).find(|&x| th2(bp.coproduct_basis(x)) != h1.delta(&th(&bp.basis(x))));
    rep.push("comultiplicative", bad.map(|x| bp.labels()[x].clone()));
    let bad = (0..d1).find(|&a| {
        let inv = h1.delta_n(&h1.basis(a), 3).map_terms(|k| {
            h1.mul(&h1.basis(k[0]), &sip(&h1.basis(k[1])))
                .tensor(&apply_matrix(p, &h1.basis(k[2]), 0))
        });
        let Ok(left) = (|| -> Result<El> {
            let mut out = El::zero();
            for (k, c) in inv.terms() {
                for (m, v) in to_b(&El::basis([k[0]]))?.terms() {
                    out.add_term(vec![m[0] * dh + k[1]], c * v);
                }
            }
            Ok(out)
        })() else {
            return true;
        };
        th(&left) != h1.basis(a)
    });
    rep.push(
        "inverse_formula",
        bad.map(|a| format!("a={}", h1.labels()[a])),
    );
    rep
}
