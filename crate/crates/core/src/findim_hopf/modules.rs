//! Modules, comodules and crossed modules of finite-dimensional Hopf
//! algebras, and the braidings between them.

use super::element::flatten;
use super::{tensor_mul, tuples, El, FinDimHopf, QT};
use crate::error::{invalid, Result};
use crate::linalg::Matrix;
use crate::report::VerificationReport;
use crate::scalar::{Mode, Scalar, ScalarError};

/// A left `H`-module: `table[h * dim + v]` is `e_h ▷ e_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    dim_h: usize,
    labels: Vec<String>,
    table: Vec<El>,
}

impl ModuleAction {
    pub fn new(dim_h: usize, labels: Vec<String>, table: Vec<El>) -> Result<Self> {
        let dv = labels.len();
        if table.len() != dim_h * dv {
            return Err(invalid(format!(
                "action table needs {} entries",
                dim_h * dv
            )));
        }
        if table
            .iter()
            .any(|e| e.terms().any(|(k, _)| k.len() != 1 || k[0] >= dv))
        {
            return Err(invalid("action images must be single-factor elements of V"));
        }
        Ok(ModuleAction {
            dim_h,
            labels,
            table,
        })
    }

    pub fn from_fn(
        dim_h: usize,
        labels: Vec<String>,
        mut f: impl FnMut(usize, usize) -> El,
    ) -> Self {
        let dv = labels.len();
        let table = (0..dim_h * dv).map(|i| f(i / dv, i % dv)).collect();
        ModuleAction {
            dim_h,
            labels,
            table,
        }
    }

    /// `h ▷ v = ε(h) v`.
    pub fn trivial(h: &FinDimHopf, labels: Vec<String>) -> Self {
        Self::from_fn(h.dim(), labels, |a, v| {
            El::term(h.counit_basis(a).clone(), [v])
        })
    }

    /// `h ▷ b = Σ h₁ b S h₂` on `H` itself.
    pub fn adjoint(h: &FinDimHopf) -> Result<Self> {
        h.require_antipode()?;
        Ok(Self::from_fn(h.dim(), h.labels().to_vec(), |a, b| {
            h.delta(&h.basis(a))
                .map_terms(|k| h.mul_all(&[&h.basis(k[0]), &h.basis(b), &h.s(&h.basis(k[1]))]))
        }))
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn dim_h(&self) -> usize {
        self.dim_h
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn act_basis(&self, a: usize, v: usize) -> &El {
        &self.table[a * self.dim() + v]
    }

    /// `x ▷ y` for single-factor `x` in `H` and `y` in `V`.
    pub fn act(&self, x: &El, y: &El) -> El {
        let mut out = El::zero();
        for (a, c) in x.terms() {
            for (v, e) in y.terms() {
                out.add_scaled(self.act_basis(a[0], v[0]), &(c * e));
            }
        }
        out
    }

    /// Acts by basis element `a` on factor `slot` of `y`.
    pub fn act_at(&self, a: usize, y: &El, slot: usize) -> El {
        y.map_slot(slot, |v| self.act_basis(a, v).clone())
    }

    /// The action of `e_a` as a matrix on `V`.
    pub fn matrix(&self, a: usize) -> Matrix {
        let d = self.dim();
        Matrix::from_fn(d, d, |r, c| self.act_basis(a, c).coeff(&[r]))
    }

    /// Module law and unit law on basis elements.
    pub fn verify(&self, h: &FinDimHopf) -> VerificationReport {
        let (dh, dv) = (h.dim(), self.dim());
        let mut rep = VerificationReport::new();
        let mut bad = None;
        'outer: for a in 0..dh {
            for b in 0..dh {
                for v in 0..dv {
                    let l = self.act(h.algebra().mul_basis(a, b), &El::basis([v]));
                    let r = self.act(&h.basis(a), self.act_basis(b, v));
                    if l != r {
                        bad = Some(format!(
                            "g={}, h={}, v={}",
                            h.labels()[a],
                            h.labels()[b],
                            self.labels[v]
                        ));
                        break 'outer;
                    }
                }
            }
        }
        rep.push("module_law", bad);
        let bad = (0..dv).find(|&v| self.act(h.one(), &El::basis([v])) != El::basis([v]));
        rep.push(
            "unit_acts_trivially",
            bad.map(|v| format!("v={}", self.labels[v])),
        );
        rep
    }

    /// Checks that the action makes an algebra on `V` (given by `alg`) an
    /// `H`-module algebra.
    pub fn module_algebra_check(&self, h: &FinDimHopf, alg: &super::Algebra) -> VerificationReport {
        let (dh, dv) = (h.dim(), self.dim());
        let mut rep = VerificationReport::new();
        let mut bad = None;
        'outer: for a in 0..dh {
            let da = h.delta(&h.basis(a));
            for x in 0..dv {
                for y in 0..dv {
                    let l = self.act(&h.basis(a), alg.mul_basis(x, y));
                    let r =
                        da.map_terms(|k| alg.mul(self.act_basis(k[0], x), self.act_basis(k[1], y)));
                    if l != r {
                        bad = Some(format!(
                            "h={}, a={}, b={}",
                            h.labels()[a],
                            self.labels[x],
                            self.labels[y]
                        ));
                        break 'outer;
                    }
                }
            }
        }
        rep.push("action_multiplicative", bad);
        let bad = (0..dh)
            .find(|&a| self.act(&h.basis(a), alg.one()) != alg.one().scale(h.counit_basis(a)));
        rep.push(
            "unit_invariant",
            bad.map(|a| format!("h={}", h.labels()[a])),
        );
        rep
    }
}

/// A left `H`-comodule: `table[v]` is `β(e_v) ∈ H⊗V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction {
    dim_h: usize,
    table: Vec<El>,
}

impl Coaction {
    pub fn new(dim_h: usize, table: Vec<El>) -> Result<Self> {
        let dv = table.len();
        if table.iter().any(|e| {
            e.terms()
                .any(|(k, _)| k.len() != 2 || k[0] >= dim_h || k[1] >= dv)
        }) {
            return Err(invalid("coaction images must lie in H⊗V"));
        }
        Ok(Coaction { dim_h, table })
    }

    /// `β(v) = 1⊗v`.
    pub fn trivial(h: &FinDimHopf, dim_v: usize) -> Self {
        Coaction {
            dim_h: h.dim(),
            table: (0..dim_v)
                .map(|v| h.one().tensor(&El::basis([v])))
                .collect(),
        }
    }

    /// The coaction `β(b) = Σ R⁽²⁾ ⊗ R⁽¹⁾▷b` induced by a quasitriangular
    /// structure on any module.
    pub fn from_qt(qt: &QT, action: &ModuleAction) -> Self {
        let table = (0..action.dim())
            .map(|v| {
                qt.r.map_terms(|k| El::basis([k[1]]).tensor(action.act_basis(k[0], v)))
            })
            .collect();
        Coaction {
            dim_h: action.dim_h(),
            table,
        }
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn coact_basis(&self, v: usize) -> &El {
        &self.table[v]
    }

    /// Applies the coaction to factor `slot`, inserting the `H` factor before it.
    pub fn coact_at(&self, y: &El, slot: usize) -> El {
        y.map_slot(slot, |v| self.table[v].clone())
    }

    pub fn verify(&self, h: &FinDimHopf) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let bad = (0..self.dim()).find(|&v| {
            let b = &self.table[v];
            h.delta_at(b, 0) != self.coact_at(b, 1)
        });
        rep.push("comodule_law", bad.map(|v| format!("v={v}")));
        let bad = (0..self.dim()).find(|&v| h.eps_at(&self.table[v], 0) != El::basis([v]));
        rep.push("comodule_counit", bad.map(|v| format!("v={v}")));
        rep
    }
}

/// `Ψ(v⊗w) = Σ R⁽²⁾▷w ⊗ R⁽¹⁾▷v` on a two-factor element of `V⊗W`.
pub fn braid(qt: &QT, v: &ModuleAction, w: &ModuleAction, x: &El) -> El {
    x.map_terms(|k| {
        qt.r.map_terms(|r| w.act_basis(r[1], k[1]).tensor(v.act_basis(r[0], k[0])))
    })
}

/// The braiding `V⊗W → W⊗V` as a matrix (rows `w·dim V + v`, columns
/// `v·dim W + w`) with its intertwiner and invertibility checks.
pub fn module_braiding(
    h: &FinDimHopf,
    qt: &QT,
    v: &ModuleAction,
    w: &ModuleAction,
) -> (Matrix, VerificationReport) {
    let (dv, dw) = (v.dim(), w.dim());
    let mut m = Matrix::zeros(dv * dw, dv * dw);
    for (c, key) in tuples(&[dv, dw]).enumerate() {
        let img = braid(qt, v, w, &El::basis(key));
        for (r, val) in img.flat_coords(&[dw, dv]).into_iter().enumerate() {
            m[(r, c)] = val;
        }
    }
    let mut rep = VerificationReport::new();
    let act2 = |a: usize, x: &El, first: &ModuleAction, second: &ModuleAction| {
        h.delta(&h.basis(a)).map_terms(|d| {
            x.map_terms(|k| {
                first
                    .act_basis(d[0], k[0])
                    .tensor(second.act_basis(d[1], k[1]))
            })
        })
    };
    let mut bad = None;
    'outer: for a in 0..h.dim() {
        for key in tuples(&[dv, dw]) {
            let x = El::basis(key.clone());
            let l = act2(a, &braid(qt, v, w, &x), w, v);
            let r = braid(qt, v, w, &act2(a, &x, v, w));
            if l != r {
                bad = Some(format!(
                    "h={}, v={}, w={}",
                    h.labels()[a],
                    v.labels()[key[0]],
                    w.labels()[key[1]]
                ));
                break 'outer;
            }
        }
    }
    rep.push("intertwiner", bad);
    rep.push(
        "invertible",
        m.inverse()
            .is_none()
            .then(|| "braiding matrix is singular".to_string()),
    );
    (m, rep)
}

/// A `Z_n`-graded space given by the dimensions of its homogeneous parts;
/// basis vectors are ordered by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    pub dims: Vec<usize>,
}

impl GradedSpace {
    pub fn new(dims: Vec<usize>) -> Self {
        GradedSpace { dims }
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn degree(&self, i: usize) -> usize {
        let mut acc = 0;
        for (a, &d) in self.dims.iter().enumerate() {
            acc += d;
            if i < acc {
                return a;
            }
        }
        panic!("basis index {i} out of range")
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| format!("v{i}")).collect()
    }

    /// The module of the group algebra of `Z_n` with `g ▷ v = q^{|v|} v`.
    pub fn module(&self, mode: Mode) -> Result<ModuleAction> {
        let n = self.dims.len();
        check_mode(n, mode)?;
        Ok(ModuleAction::from_fn(n, self.labels(), |k, v| {
            El::term(q_pow(n, mode, (k * self.degree(v)) as i64), [v])
        }))
    }
}

fn check_mode(n: usize, mode: Mode) -> Result<()> {
    if n > 1 && mode != Mode::Cyclotomic(n as u32) {
        return Err(ScalarError::ModeMismatch(mode, Mode::Cyclotomic(n as u32)).into());
    }
    Ok(())
}

fn q_pow(n: usize, mode: Mode, e: i64) -> Scalar {
    if n == 1 {
        Scalar::one()
    } else {
        Scalar::q_pow(mode, e.rem_euclid(n as i64))
    }
}

/// `Σ q^{-a²} dim V_a`.
pub fn anyonic_dim(space: &GradedSpace, mode: Mode) -> Result<Scalar> {
    let n = space.dims.len();
    check_mode(n, mode)?;
    Ok(space
        .dims
        .iter()
        .enumerate()
        .map(|(a, &d)| &q_pow(n, mode, -((a * a) as i64)) * &Scalar::from_int(d as i64))
        .sum())
}

/// `Σ q^{-a²} tr(f|V_a)` for a degree-preserving `f`.
pub fn anyonic_trace(space: &GradedSpace, f: &Matrix, mode: Mode) -> Result<Scalar> {
    let n = space.dims.len();
    check_mode(n, mode)?;
    let d = space.dim();
    if f.rows() != d || f.cols() != d {
        return Err(invalid(format!("map must be {d}×{d}")));
    }
    for r in 0..d {
        for c in 0..d {
            if space.degree(r) != space.degree(c) && !f[(r, c)].is_zero() {
                return Err(invalid(format!(
                    "map does not preserve degree at ({r},{c})"
                )));
            }
        }
    }
    Ok((0..d)
        .map(|i| &q_pow(n, mode, -((space.degree(i) * space.degree(i)) as i64)) * &f[(i, i)])
        .sum())
}

/// Solves the invertibility conditions for a coaction: `γ(v) ∈ H⊗V` with
/// `Σ (γ(v)²)⁽¹̄⁾ γ(v)¹ ⊗ (γ(v)²)⁽²̄⁾ = 1⊗v = Σ γ(v⁽²̄⁾)¹ v⁽¹̄⁾ ⊗ γ(v⁽²̄⁾)²`.
pub fn comodule_inverse(h: &FinDimHopf, co: &Coaction) -> Option<Coaction> {
    let (dh, dv) = (h.dim(), co.dim());
    let block = dh * dv;
    let unknown = |v: usize, a: usize, w: usize| v * block + a * dv + w;
    let row =
        |cond: usize, v: usize, a: usize, w: usize| cond * dv * block + v * block + a * dv + w;
    let mut m = Matrix::zeros(2 * dv * block, dv * block);
    let mut rhs = Matrix::zeros(2 * dv * block, 1);
    let add = |m: &mut Matrix, r: usize, c: usize, x: Scalar| {
        m[(r, c)] = &m[(r, c)] + &x;
    };
    for v in 0..dv {
        for a in 0..dh {
            for w in 0..dv {
                for (k, b) in co.coact_basis(w).terms() {
                    for (p, pc) in h.algebra().mul_basis(k[0], a).terms() {
                        add(&mut m, row(0, v, p[0], k[1]), unknown(v, a, w), b * pc);
                    }
                }
            }
        }
        for (k, b) in co.coact_basis(v).terms() {
            for a in 0..dh {
                for w in 0..dv {
                    for (p, pc) in h.algebra().mul_basis(a, k[0]).terms() {
                        add(&mut m, row(1, v, p[0], w), unknown(k[1], a, w), b * pc);
                    }
                }
            }
        }
        for (u, c) in h.one().terms() {
            rhs[(row(0, v, u[0], v), 0)] = c.clone();
            rhs[(row(1, v, u[0], v), 0)] = c.clone();
        }
    }
    let sol = m.solve(&rhs)?;
    let table = (0..dv)
        .map(|v| {
            let mut e = El::zero();
            for a in 0..dh {
                for w in 0..dv {
                    e.add_term(vec![a, w], sol[(unknown(v, a, w), 0)].clone());
                }
            }
            e
        })
        .collect();
    Some(Coaction { dim_h: dh, table })
}

/// Module and comodule laws, the crossed-module compatibility
/// `Σ h₁v⁽¹̄⁾ ⊗ h₂▷v⁽²̄⁾ = Σ (h₁▷v)⁽¹̄⁾h₂ ⊗ (h₁▷v)⁽²̄⁾`, and invertibility of
/// the coaction.
pub fn crossed_module_check(
    h: &FinDimHopf,
    action: &ModuleAction,
    co: &Coaction,
) -> VerificationReport {
    let mut rep = VerificationReport::new();
    rep.absorb("", action.verify(h));
    rep.absorb("", co.verify(h));
    let (dh, dv) = (h.dim(), action.dim());
    let mut bad = None;
    'outer: for a in 0..dh {
        let da = h.delta(&h.basis(a));
        for v in 0..dv {
            let l = da.tensor(co.coact_basis(v)).map_terms(|k| {
                h.mul(&h.basis(k[0]), &h.basis(k[2]))
                    .tensor(action.act_basis(k[1], k[3]))
            });
            let r = da.map_terms(|k| {
                let moved = co.coact_at(action.act_basis(k[0], v), 0);
                moved.map_terms(|m| {
                    h.mul(&h.basis(m[0]), &h.basis(k[1]))
                        .tensor(&El::basis([m[1]]))
                })
            });
            if l != r {
                bad = Some(format!("h={}, v={}", h.labels()[a], action.labels()[v]));
                break 'outer;
            }
        }
    }
    rep.push("crossed_compatibility", bad);
    rep.push(
        "coaction_invertible",
        comodule_inverse(h, co)
            .is_none()
            .then(|| "no inverse coaction solves the linear system".to_string()),
    );
    rep
}

/// The action of `H` on `H^{⊗n}` given by
/// `h▷(b₁⊗…⊗b_n) = Σ h₁b₁Sh_{2n} ⊗ h₂b₂Sh_{2n-1} ⊗ … ⊗ h_nb_nSh_{n+1}`.
/// Entry `a·dⁿ + i` is the image of the `i`-th basis tuple under `e_a`.
pub fn nfold_action(h: &FinDimHopf, n: usize) -> Result<Vec<El>> {
    h.require_antipode()?;
    let d = h.dim();
    let dims = vec![d; n];
    let s: Vec<El> = (0..d).map(|a| h.s(&h.basis(a))).collect();
    let mut table = Vec::new();
    for a in 0..d {
        let split = h.delta_n(&h.basis(a), 2 * n);
        for key in tuples(&dims) {
            let img = split.map_terms(|k| {
                (0..n).fold(El::scalar(Scalar::one()), |acc, i| {
                    let f = h.mul_all(&[&h.basis(k[i]), &h.basis(key[i]), &s[k[2 * n - 1 - i]]]);
                    acc.tensor(&f)
                })
            });
            table.push(img);
        }
    }
    Ok(table)
}

/// Checks that [`nfold_action`] makes `H^{⊗n}` an `H`-module algebra.
pub fn nfold_module_algebra_check(h: &FinDimHopf, n: usize) -> Result<VerificationReport> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let table = nfold_action(h, n)?;
    let d = h.dim();
    let dims = vec![d; n];
    let big: usize = dims.iter().product();
    let algs = vec![h.algebra(); n];
    let act = |a: usize, y: &El| y.map_terms(|k| table[a * big + flatten(k, &dims)].clone());
    let act_el = |x: &El, y: &El| {
        x.terms()
            .fold(El::zero(), |acc, (k, c)| &acc + &act(k[0], y).scale(c))
    };
    let show = |k: &[usize]| {
        k.iter()
            .map(|&i| h.labels()[i].as_str())
            .collect::<Vec<_>>()
            .join("⊗")
    };
    let basis: Vec<Vec<usize>> = tuples(&dims).collect();
    let mut rep = VerificationReport::new();

    let mut bad = None;
    'outer: for a in 0..d {
        for b in 0..d {
            for x in &basis {
                let y = El::basis(x.clone());
                if act_el(h.algebra().mul_basis(a, b), &y) != act(a, &act(b, &y)) {
                    bad = Some(format!(
                        "g={}, h={}, b={}",
                        h.labels()[a],
                        h.labels()[b],
                        show(x)
                    ));
                    break 'outer;
                }
            }
        }
    }
    rep.push("module_law", bad);
    let bad = basis
        .iter()
        .find(|x| act_el(h.one(), &El::basis(x.to_vec())) != El::basis(x.to_vec()));
    rep.push("unit_acts_trivially", bad.map(|x| show(x)));

    let mut bad = None;
    'outer2: for a in 0..d {
        let da = h.delta(&h.basis(a));
        for x in &basis {
            for y in &basis {
                let (ex, ey) = (El::basis(x.clone()), El::basis(y.clone()));
                let l = act(a, &tensor_mul(&algs, &ex, &ey));
                let r = da.map_terms(|k| tensor_mul(&algs, &act(k[0], &ex), &act(k[1], &ey)));
                if l != r {
                    bad = Some(format!("h={}, a={}, b={}", h.labels()[a], show(x), show(y)));
                    break 'outer2;
                }
            }
        }
    }
    rep.push("action_multiplicative", bad);
    let one = h.unit_n(n);
    let bad = (0..d).find(|&a| act(a, &one) != one.scale(h.counit_basis(a)));
    rep.push(
        "unit_invariant",
        bad.map(|a| format!("h={}", h.labels()[a])),
    );
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::super::{drinfeld_double, group_algebra, zn_prime};
    use super::*;

    #[test]
    fn super_flip_from_z2_prime() {
        let mode = Mode::Cyclotomic(2);
        let (h, qt) = zn_prime(2, mode).unwrap();
        let v = GradedSpace::new(vec![1, 1]).module(mode).unwrap();
        let (m, rep) = module_braiding(&h, &qt, &v, &v);
        assert!(rep.passed, "{rep}");
        for a in 0..2 {
            for b in 0..2 {
                let sign = if a * b == 1 {
                    -Scalar::one()
                } else {
                    Scalar::one()
                };
                assert_eq!(m[(b * 2 + a, a * 2 + b)], sign);
            }
        }
        assert_eq!(&m * &m, Matrix::identity(4));
    }

    #[test]
    fn anyonic_phases() {
        let mode = Mode::Cyclotomic(3);
        let (h, qt) = zn_prime(3, mode).unwrap();
        let v = GradedSpace::new(vec![1, 1, 1]).module(mode).unwrap();
        let (m, rep) = module_braiding(&h, &qt, &v, &v);
        assert!(rep.passed);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(
                    m[(b * 3 + a, a * 3 + b)],
                    Scalar::q_pow(mode, (a * b) as i64)
                );
            }
        }
        let expected = &(&Scalar::one() + &Scalar::q_pow(mode, -1)) + &Scalar::q_pow(mode, -4);
        assert_eq!(
            anyonic_dim(&GradedSpace::new(vec![1, 1, 1]), mode).unwrap(),
            expected
        );
    }

    #[test]
    fn superdimension_and_trace() {
        let mode = Mode::Cyclotomic(2);
        let space = GradedSpace::new(vec![3, 2]);
        assert_eq!(anyonic_dim(&space, mode).unwrap(), Scalar::one());
        assert_eq!(
            anyonic_trace(&space, &Matrix::identity(5), mode).unwrap(),
            Scalar::one()
        );
        assert!(anyonic_dim(&space, Mode::QField).is_err());
    }

    #[test]
    fn trivial_module_gives_flip() {
        let mode = Mode::Cyclotomic(2);
        let (h, qt) = zn_prime(2, mode).unwrap();
        let t = ModuleAction::trivial(&h, vec!["a".into(), "b".into()]);
        let v = GradedSpace::new(vec![1, 1]).module(mode).unwrap();
        let (m, _) = module_braiding(&h, &qt, &t, &v);
        for a in 0..2 {
            for b in 0..2 {
                assert!(m[(b * 2 + a, a * 2 + b)].is_one());
            }
        }
    }

    #[test]
    fn crossed_modules() {
        let mode = Mode::Cyclotomic(3);
        let (h, qt) = zn_prime(3, mode).unwrap();
        let v = GradedSpace::new(vec![1, 1, 1]).module(mode).unwrap();
        let co = Coaction::from_qt(&qt, &v);
        let rep = crossed_module_check(&h, &v, &co);
        assert!(rep.passed, "{rep}");
        let t = ModuleAction::trivial(&h, vec!["a".into()]);
        assert!(crossed_module_check(&h, &t, &Coaction::trivial(&h, 1)).passed);

        let (d, dqt) = drinfeld_double(&group_algebra(&[2], Mode::QField)).unwrap();
        let ad = ModuleAction::adjoint(&d).unwrap();
        let rep = crossed_module_check(&d, &ad, &Coaction::from_qt(&dqt, &ad));
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn nfold_adjoint_and_small_cases() {
        let h = group_algebra(&[3], Mode::Cyclotomic(3));
        assert!(nfold_module_algebra_check(&h, 1).unwrap().passed);
        assert!(nfold_module_algebra_check(&h, 2).unwrap().passed);
        let ad = ModuleAction::adjoint(&h).unwrap();
        assert!(ad.module_algebra_check(&h, h.algebra()).passed);
    }

    #[test]
    fn nfold_on_double() {
        let (d, _) = drinfeld_double(&group_algebra(&[2], Mode::QField)).unwrap();
        for n in [2, 3] {
            let rep = nfold_module_algebra_check(&d, n).unwrap();
            assert!(rep.passed, "n={n}: {rep}");
        }
    }
}
