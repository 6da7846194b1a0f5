use super::{braided_hopf_report, first_failure, BasisBraiding};
use crate::error::{invalid, Error, Result};
use crate::findim_hopf::{
    hopf_verify, zn_prime, Algebra, Coaction, El, FinDimHopf, ModuleAction, QT,
};
use crate::report::VerificationReport;
use crate::scalar::{Mode, Scalar};

/// `Δ̲(h▷b) = Σ h₁▷b₁ ⊗ h₂▷b₂` and `ε(h▷b) = ε(h)ε(b)`.
pub fn module_coalgebra_check(
    h: &FinDimHopf,
    b: &FinDimHopf,
    action: &ModuleAction,
) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let bad = (0..h.dim())
        .flat_map(|a| (0..b.dim()).map(move |x| (a, x)))
        .find(|&(a, x)| {
            let l = b.delta(action.act_basis(a, x));
            let r = h.coproduct_basis(a).map_terms(|k| {
                action.act_at(k[1], &action.act_at(k[0], b.coproduct_basis(x), 0), 1)
            });
            l != r
        });
    rep.push(
        "coproduct_equivariant",
        bad.map(|(a, x)| format!("h={}, b={}", h.labels()[a], b.labels()[x])),
    );
    let bad = (0..h.dim())
        .flat_map(|a| (0..b.dim()).map(move |x| (a, x)))
        .find(|&(a, x)| b.eps(action.act_basis(a, x)) != h.counit_basis(a) * b.counit_basis(x));
    rep.push(
        "counit_equivariant",
        bad.map(|(a, x)| format!("h={}, b={}", h.labels()[a], b.labels()[x])),
    );
    rep
}

fn gaussian_binomials(n: usize, q: &Scalar) -> Vec<Vec<Scalar>> {
    let mut rows: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]];
    for k in 1..n {
        let prev = &rows[k - 1];
        let mut qj = Scalar::one();
        let mut row = Vec::with_capacity(k + 1);
        for j in 0..=k {
            let left = if j > 0 {
                prev[j - 1].clone()
            } else {
                Scalar::zero()
            };
            let right = if j < k {
                &qj * &prev[j]
            } else {
                Scalar::zero()
            };
            row.push(&left + &right);
            qj = &qj * q;
        }
        rows.push(row);
    }
    rows
}

/// Tables of the truncated polynomial algebra `k[x]/(xⁿ)` with `x`
/// primitive and the braided binomial coproduct for `Ψ(x⊗x) = q x⊗x`.
pub(crate) fn line_tables(n: usize, mode: Mode) -> Result<FinDimHopf> {
    let q = if n == 1 {
        Scalar::one()
    } else {
        Scalar::q(mode)
    };
    let labels: Vec<String> = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        })
        .collect();
    let product = (0..n * n)
        .map(|i| {
            let s = i / n + i % n;
            if s < n {
                El::basis([s])
            } else {
                El::zero()
            }
        })
        .collect();
    let alg = Algebra::new(mode, labels, product, El::basis([0]))?;
    let binom = gaussian_binomials(n, &q);
    let coproduct = (0..n)
        .map(|k| {
            let mut e = El::zero();
            for (j, c) in binom[k].iter().enumerate() {
                e.add_term(vec![j, k - j], c.clone());
            }
            e
        })
        .collect();
    let counit = (0..n)
        .map(|k| {
            if k == 0 {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect();
    let antipode = (0..n)
        .map(|k| {
            let sign = if k % 2 == 0 {
                Scalar::one()
            } else {
                -Scalar::one()
            };
            let e = (k * k.saturating_sub(1) / 2) as i64;
            let c = if n == 1 {
                sign
            } else {
                &sign * &Scalar::q_pow(mode, e)
            };
            El::term(c, [k])
        })
        .collect();
    FinDimHopf::new(alg, coproduct, counit, Some(antipode))
}

/// The anyonic line `k[x]/(xⁿ)` as a braided group over `Z_n′`, with
/// `g ▷ x = q x`. Returns the background, the line and the action.
pub fn anyonic_line(n: usize, mode: Mode) -> Result<(FinDimHopf, QT, FinDimHopf, ModuleAction)> {
    let (h, qt) = zn_prime(n, mode)?;
    let b = line_tables(n, mode)?;
    let action = ModuleAction::from_fn(n, b.labels().to_vec(), |a, k| {
        let c = if n == 1 {
            Scalar::one()
        } else {
            Scalar::q_pow(mode, ((a * k) % n) as i64)
        };
        El::term(c, [k])
    });
    Ok((h, qt, b, action))
}

fn fuse(x: &El, dims: &[usize]) -> El {
    x.map_terms(|k| {
        let mut out = Vec::with_capacity(k.len() / 2);
        for pair in k.chunks(2) {
            out.push(pair[0] * dims[1] + pair[1]);
        }
        El::basis(out)
    })
}

/// The biproduct on `B⊗H` (basis `b·dim H + h`): smash product algebra
/// `(b⊗h)(c⊗g) = Σ b(h₁▷c) ⊗ h₂g` and the coproduct
/// `Δ(b⊗h) = Σ b₁ ⊗ b₂⁽¹⁾h₁ ⊗ b₂⁽²⁾ ⊗ h₂` from the left coaction. The
/// antipode is solved and absent when none exists.
pub fn biproduct(
    h: &FinDimHopf,
    b: &FinDimHopf,
    action: &ModuleAction,
    co: &Coaction,
) -> Result<FinDimHopf> {
    let (db, dh) = (b.dim(), h.dim());
    if action.dim() != db || action.dim_h() != dh || co.dim() != db {
        return Err(invalid("action and coaction must act on B"));
    }
    let dims = [db, dh];
    let labels = (0..db * dh)
        .map(|i| format!("{}⊗{}", b.labels()[i / dh], h.labels()[i % dh]))
        .collect();
    let mut product = Vec::with_capacity(db * db * dh * dh);
    for l in 0..db * dh {
        let (x, a) = (l / dh, l % dh);
        for r in 0..db * dh {
            let (y, c) = (r / dh, r % dh);
            let e = h.coproduct_basis(a).map_terms(|k| {
                b.mul(&b.basis(x), action.act_basis(k[0], y))
                    .tensor(h.algebra().mul_basis(k[1], c))
            });
            product.push(fuse(&e, &dims));
        }
    }
    let unit = fuse(&b.one().tensor(h.one()), &dims);
    let alg = Algebra::new(h.mode(), labels, product, unit)?;
    let coproduct = (0..db * dh)
        .map(|l| {
            let (x, a) = (l / dh, l % dh);
            let e = b.coproduct_basis(x).map_terms(|k| {
                co.coact_basis(k[1]).map_terms(|m| {
                    h.coproduct_basis(a).map_terms(|s| {
                        El::basis([k[0]])
                            .tensor(h.algebra().mul_basis(m[0], s[0]))
                            .tensor(&El::basis([m[1], s[1]]))
                    })
                })
            });
            fuse(&e, &dims)
        })
        .collect();
    let counit = (0..db * dh)
        .map(|l| b.counit_basis(l / dh) * h.counit_basis(l % dh))
        .collect();
    let out = FinDimHopf::new(alg, coproduct, counit, None)?;
    let s = out.solve_antipode();
    Ok(out.with_antipode(s))
}

/// `bos(B) = B⋊H` for a braided group `B` in the category of `H`-modules.
pub fn bosonize(
    h: &FinDimHopf,
    qt: &QT,
    b: &FinDimHopf,
    action: &ModuleAction,
) -> Result<FinDimHopf> {
    if action.dim() != b.dim() || action.dim_h() != h.dim() {
        return Err(invalid("action does not match B and H"));
    }
    let mut input = VerificationReport::new();
    input.absorb(
        "braided",
        braided_hopf_report(b, &BasisBraiding::from_module(qt, action)),
    );
    input.absorb("module", action.verify(h));
    input.absorb("module", action.module_algebra_check(h, b.algebra()));
    input.absorb("module", module_coalgebra_check(h, b, action));
    if !input.passed {
        return Err(Error::InputNotBraidedHopf(first_failure(&input)));
    }
    let out = biproduct(h, b, action, &Coaction::from_qt(qt, action))?;
    if !out.has_antipode() {
        return Err(Error::OutputVerificationFailed("no antipode".into()));
    }
    let rep = hopf_verify(&out);
    if !rep.passed {
        return Err(Error::OutputVerificationFailed(first_failure(&rep)));
    }
    Ok(out)
}
