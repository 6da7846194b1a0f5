//! R-matrices `R^i_j^k_l` on an `n`-dimensional space.
//!
//! Entries are linearized as an `n^2 x n^2` matrix with row `i*n + k` and
//! column `j*n + l`, so that `R_{12}` acts on `V (x) V` as an ordinary matrix.
//! Indices are 0-based throughout.

use crate::error::{invalid, Error, Result};
use crate::linalg::{kron, Matrix};
use crate::report::VerificationReport;
use crate::scalar::{Mode, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    n: usize,
    mode: Mode,
    mat: Matrix,
}

impl RMatrix {
    pub fn from_matrix(n: usize, mode: Mode, mat: Matrix) -> Result<Self> {
        if mat.rows() != n * n || mat.cols() != n * n {
            return Err(invalid(format!(
                "R-matrix for n={n} must be {0}x{0}",
                n * n
            )));
        }
        if let Some(m) = mat
            .as_slice()
            .iter()
            .filter_map(Scalar::mode)
            .find(|&m| m != mode)
        {
            return Err(crate::ScalarError::ModeMismatch(mode, m).into());
        }
        Ok(RMatrix { n, mode, mat })
    }

    pub fn from_fn(n: usize, mode: Mode, f: impl Fn(usize, usize, usize, usize) -> Scalar) -> Self {
        let mat = Matrix::from_fn(n * n, n * n, |r, c| f(r / n, c / n, r % n, c % n));
        RMatrix { n, mode, mat }
    }

    pub fn identity(n: usize, mode: Mode) -> Self {
        RMatrix {
            n,
            mode,
            mat: Matrix::identity(n * n),
        }
    }

    /// The flip `P^i_j^k_l = delta^i_l delta^k_j`.
    pub fn flip(n: usize, mode: Mode) -> Self {
        Self::from_fn(n, mode, |i, j, k, l| delta(i, l) * delta(k, j))
    }

    /// The standard Hecke R-matrix: `q` on `R^i_i^i_i`, `1` on `R^i_i^k_k`
    /// for `i != k`, and `q - q^-1` on `R^i_k^k_i` for `i < k`.
    ///
    /// Self-verifies the QYBE and `(PR - q)(PR + q^-1) = 0`.
    pub fn glq(n: usize, mode: Mode) -> Result<Self> {
        let q = Scalar::q(mode);
        let qi = Scalar::q_pow(mode, -1);
        let off = &q - &qi;
        let r = Self::from_fn(n, mode, |i, j, k, l| {
            if i == j && k == l {
                if i == k {
                    q.clone()
                } else {
                    Scalar::one()
                }
            } else if i == l && k == j && i < k {
                off.clone()
            } else {
                Scalar::zero()
            }
        });
        let qybe = r.qybe_check();
        if !qybe.passed {
            return Err(invalid(format!("glq({n}) failed the QYBE: {qybe}")));
        }
        let pr = r.pr();
        let id = Matrix::identity(n * n);
        let hecke = &pr.sub(&id.scale(&q)) * &pr.add(&id.scale(&qi));
        if !hecke.is_zero() {
            return Err(invalid(format!("glq({n}) is not Hecke")));
        }
        Ok(r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.mat[(i * self.n + k, j * self.n + l)]
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        RMatrix {
            n: self.n,
            mode: self.mode,
            mat: self.mat.scale(s),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        Some(RMatrix {
            n: self.n,
            mode: self.mode,
            mat: self.mat.inverse()?,
        })
    }

    /// `R_{21}`, i.e. `P R P`.
    pub fn r21(&self) -> Self {
        Self::from_fn(self.n, self.mode, |i, j, k, l| self.get(k, l, i, j).clone())
    }

    /// Partial transpose in the second factor (swap `k` and `l`).
    pub fn t2(&self) -> Self {
        Self::from_fn(self.n, self.mode, |i, j, k, l| self.get(i, j, l, k).clone())
    }

    /// `PR` as an operator on `V (x) V`.
    pub fn pr(&self) -> Matrix {
        &Self::flip(self.n, self.mode).mat * &self.mat
    }

    /// This matrix acting in slots `a` and `b` of `V^{(x)m}`.
    pub fn leg(&self, a: usize, b: usize, m: usize) -> Matrix {
        legs(&self.mat, self.n, a, b, m)
    }

    /// `R12 R13 R23 = R23 R13 R12`, with the first differing entry as witness.
    pub fn qybe_check(&self) -> VerificationReport {
        let (r12, r13, r23) = (self.leg(0, 1, 3), self.leg(0, 2, 3), self.leg(1, 2, 3));
        let lhs = &(&r12 * &r13) * &r23;
        let rhs = &(&r23 * &r13) * &r12;
        let mut rep = VerificationReport::new();
        match lhs.first_difference(&rhs) {
            None => rep.pass("qybe"),
            Some((r, c)) => rep.fail(
                "qybe",
                format!(
                    "upper {:?} lower {:?}: {} != {}",
                    multi_index(r, self.n, 3),
                    multi_index(c, self.n, 3),
                    lhs[(r, c)],
                    rhs[(r, c)]
                ),
            ),
        }
        rep
    }

    /// `R~ = ((R^{t2})^{-1})^{t2}`.
    pub fn second_inverse(&self) -> Result<Self> {
        let inv = self.t2().mat.inverse().ok_or(Error::NotDualizable)?;
        Ok(RMatrix {
            n: self.n,
            mode: self.mode,
            mat: inv,
        }
        .t2())
    }

    /// `sum R~^i_a^b_l R^a_j^k_b = delta^i_j delta^k_l` and the companion
    /// identity with the roles swapped.
    pub fn second_inverse_report(&self, rt: &RMatrix) -> VerificationReport {
        let n = self.n;
        let mut rep = VerificationReport::new();
        for (name, x, y) in [("contraction", rt, self), ("contraction_swapped", self, rt)] {
            let mut bad = None;
            'outer: for (i, j, k, l) in quads(n) {
                let s: Scalar = pairs(n)
                    .map(|(a, b)| x.get(i, a, b, l) * y.get(a, j, k, b))
                    .sum();
                if s != delta(i, j) * delta(k, l) {
                    bad = Some(format!("(i,j,k,l)=({i},{j},{k},{l}) gives {s}"));
                    break 'outer;
                }
            }
            rep.push(name, bad);
        }
        rep
    }

    /// `v^i_j = R~^i_a^a_j`; whether it is invertible is reported, not enforced.
    pub fn v_matrix(&self, rt: &RMatrix) -> Matrix {
        let n = self.n;
        Matrix::from_fn(n, n, |i, j| {
            (0..n).map(|a| rt.get(i, a, a, j).clone()).sum()
        })
    }

    pub fn dual_braidings(&self) -> Result<DualBraidings> {
        DualBraidings::new(self)
    }

    pub fn pr_minimal_polynomial(&self) -> Result<MinimalPolynomial> {
        minimal_polynomial(&self.pr())
    }

    /// Derives `R'` from the eigenvalue with index `index` of `PR` (indices
    /// refer to [`MinimalPolynomial::distinct_roots`]). `alpha` defaults to the
    /// value that kills the constant term when the complementary factor is
    /// linear, and to 1 otherwise.
    pub fn derive_rprime(&self, index: usize, alpha: Option<Scalar>) -> Result<RPrime> {
        let mp = self.pr_minimal_polynomial()?;
        let distinct = mp.distinct_roots();
        let lambda = distinct
            .get(index)
            .cloned()
            .ok_or(Error::NoSuchEigenvalue {
                index,
                count: distinct.len(),
            })?;
        let factor = (-Scalar::one()).try_div(&lambda)?;
        let rescaled = self.scaled(&factor);
        let mut others: Vec<Scalar> = mp.roots.iter().map(|r| r * &factor).collect();
        let pos = others
            .iter()
            .position(|r| *r == -Scalar::one())
            .expect("chosen root present");
        others.remove(pos);
        let alpha = match alpha {
            Some(a) => a,
            None if others.len() == 1 && !others[0].is_zero() => others[0].inv()?,
            None => Scalar::one(),
        };
        let nn = self.n * self.n;
        let id = Matrix::identity(nn);
        let prr = rescaled.pr();
        let comp = others
            .iter()
            .fold(id.clone(), |acc, r| &acc * &prr.sub(&id.scale(r)));
        let prp = id.add(&comp.scale(&alpha));
        let mat = &Self::flip(self.n, self.mode).mat * &prp;
        let rprime = RMatrix {
            n: self.n,
            mode: self.mode,
            mat,
        };
        if rprime.inverse().is_none() {
            return Err(Error::SingularRPrime);
        }
        let mut report = VerificationReport::new();
        let prod = &prr.add(&id) * &prp.sub(&id);
        report.push(
            "(PR+1)(PR'-1)=0",
            (!prod.is_zero()).then(|| "nonzero product".to_string()),
        );
        Ok(RPrime {
            rprime,
            rescaled,
            lambda,
            alpha,
            report,
        })
    }

    // ---- JSON ----

    pub fn to_file(&self) -> RMatrixFile {
        let n = self.n;
        let entries = quads(n)
            .filter(|&(i, j, k, l)| !self.get(i, j, k, l).is_zero())
            .map(|(i, j, k, l)| (format!("{i},{j},{k},{l}"), self.get(i, j, k, l).to_string()))
            .collect();
        RMatrixFile {
            n,
            coeff_mode: self.mode.to_string(),
            entries,
        }
    }

    pub fn from_file(file: &RMatrixFile) -> Result<Self> {
        let mode: Mode = file.coeff_mode.parse()?;
        let n = file.n;
        let mut mat = Matrix::zeros(n * n, n * n);
        for (key, val) in &file.entries {
            let idx: Vec<usize> = key
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| invalid(format!("bad entry key `{key}`")))?;
            let [i, j, k, l] = idx[..] else {
                return Err(invalid(format!("entry key `{key}` needs four indices")));
            };
            if [i, j, k, l].iter().any(|&x| x >= n) {
                return Err(invalid(format!("entry key `{key}` out of range")));
            }
            mat[(i * n + k, j * n + l)] = Scalar::parse(val, mode)?;
        }
        Self::from_matrix(n, mode, mat)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_file(&serde_json::from_str(text)?)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RMatrixFile {
    pub n: usize,
    pub coeff_mode: String,
    pub entries: BTreeMap<String, String>,
}

#[derive(Clone, Debug)]
pub struct RPrime {
    pub rprime: RMatrix,
    pub rescaled: RMatrix,
    pub lambda: Scalar,
    pub alpha: Scalar,
    pub report: VerificationReport,
}

pub fn delta(a: usize, b: usize) -> Scalar {
    if a == b {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n * n).map(move |x| (x / n, x % n))
}

pub(crate) fn quads(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..n * n * n * n).map(move |x| (x / (n * n * n), x / (n * n) % n, x / n % n, x % n))
}

/// Digits of `x` in base `n`, most significant first.
pub fn multi_index(mut x: usize, n: usize, m: usize) -> Vec<usize> {
    let mut out = vec![0; m];
    for s in (0..m).rev() {
        out[s] = x % n;
        x /= n;
    }
    out
}

pub fn flat_index(idx: &[usize], n: usize) -> usize {
    idx.iter().fold(0, |acc, &d| acc * n + d)
}

/// An `n^2 x n^2` matrix acting in slots `a`, `b` of `V^{(x)m}`; slot 0 is the
/// most significant digit of a multi-index.
pub fn legs(mat: &Matrix, n: usize, a: usize, b: usize, m: usize) -> Matrix {
    assert!(a != b && a < m && b < m);
    let dim = n.pow(m as u32);
    let mut out = Matrix::zeros(dim, dim);
    for col in 0..dim {
        let lower = multi_index(col, n, m);
        let c = lower[a] * n + lower[b];
        for r in 0..n * n {
            let v = &mat[(r, c)];
            if v.is_zero() {
                continue;
            }
            let mut upper = lower.clone();
            upper[a] = r / n;
            upper[b] = r % n;
            out[(flat_index(&upper, n), col)] = v.clone();
        }
    }
    out
}

// ---- Dual representations ----

/// Braidings among `V` and `V*` built from `R`, `R^-1` and `R~`, as
/// `n^2 x n^2` matrices from a source pair (column) to a target pair (row).
#[derive(Clone, Debug)]
pub struct DualBraidings {
    pub vv: Matrix,
    pub dd: Matrix,
    pub vd: Matrix,
    pub dv: Matrix,
    /// `ev(f^i (x) e_j) = delta^i_j`, a `1 x n^2` row.
    pub ev: Matrix,
    /// `coev(1) = sum e_i (x) f^i`, an `n^2 x 1` column.
    pub coev: Matrix,
    pub v_invertible: bool,
    pub report: VerificationReport,
}

impl DualBraidings {
    fn new(r: &RMatrix) -> Result<Self> {
        let n = r.n;
        let nn = n * n;
        let rt = r.second_inverse()?;
        let ri = r.inverse().ok_or_else(|| invalid("R is not invertible"))?;
        let pair = |a: usize, b: usize| a * n + b;
        let mut vv = Matrix::zeros(nn, nn);
        let mut dd = Matrix::zeros(nn, nn);
        let mut vd = Matrix::zeros(nn, nn);
        let mut dv = Matrix::zeros(nn, nn);
        for (i, j, a, b) in quads(n) {
            // e_i (x) e_j -> e_b (x) e_a R^a_i^b_j
            vv[(pair(b, a), pair(i, j))] = r.get(a, i, b, j).clone();
            // f^i (x) f^j -> R^i_a^j_b f^b (x) f^a
            dd[(pair(b, a), pair(i, j))] = r.get(i, a, j, b).clone();
            // e_i (x) f^j -> R~^a_i^j_b f^b (x) e_a
            vd[(pair(b, a), pair(i, j))] = rt.get(a, i, j, b).clone();
            // f^i (x) e_j -> e_a (x) f^b (R^-1)^i_b^a_j
            dv[(pair(a, b), pair(i, j))] = ri.get(i, b, a, j).clone();
        }
        let ev = Matrix::from_fn(1, nn, |_, c| delta(c / n, c % n));
        let coev = Matrix::from_fn(nn, 1, |r, _| delta(r / n, r % n));
        let id = Matrix::identity(n);
        let mut report = VerificationReport::new();
        let mut cmp = |name: &str, lhs: Matrix, rhs: Matrix| {
            report.push(
                name,
                lhs.first_difference(&rhs)
                    .map(|(a, b)| format!("entry ({a},{b})")),
            );
        };
        cmp("snake_v", &kron(&id, &ev) * &kron(&coev, &id), id.clone());
        cmp(
            "snake_dual",
            &kron(&ev, &id) * &kron(&id, &coev),
            id.clone(),
        );
        // ev is natural for the braidings with V and with V*
        cmp(
            "ev_natural_v",
            &(&kron(&id, &ev) * &kron(&dv, &id)) * &kron(&id, &vv),
            kron(&ev, &id),
        );
        cmp(
            "ev_natural_dual",
            &(&kron(&ev, &id) * &kron(&id, &dv)) * &kron(&dd, &id),
            kron(&id, &ev),
        );
        // coev likewise
        cmp(
            "coev_natural_v",
            &(&kron(&id, &vd) * &kron(&vv, &id)) * &kron(&id, &coev),
            kron(&coev, &id),
        );
        cmp(
            "coev_natural_dual",
            &(&kron(&id, &dd) * &kron(&dv, &id)) * &kron(&id, &coev),
            kron(&coev, &id),
        );
        let v_invertible = r.v_matrix(&rt).inverse().is_some();
        Ok(DualBraidings {
            vv,
            dd,
            vd,
            dv,
            ev,
            coev,
            v_invertible,
            report,
        })
    }
}

// ---- Minimal polynomial of PR ----

#[derive(Clone, Debug)]
pub struct MinimalPolynomial {
    /// Monic, lowest degree first.
    pub coeffs: Vec<Scalar>,
    /// Roots with multiplicity, in a deterministic order.
    pub roots: Vec<Scalar>,
}

impl MinimalPolynomial {
    pub fn distinct_roots(&self) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = Vec::new();
        for r in &self.roots {
            if !out.contains(r) {
                out.push(r.clone());
            }
        }
        out
    }
}

pub fn minimal_polynomial(m: &Matrix) -> Result<MinimalPolynomial> {
    let dim = m.rows();
    let mut powers = vec![Matrix::identity(dim)];
    loop {
        let k = powers.len();
        let stack = Matrix::from_fn(dim * dim, k, |r, c| powers[c].as_slice()[r].clone());
        if let Some(v) = stack.nullspace().into_iter().last() {
            // the kernel is one-dimensional at the first dependency
            let lead = v[k - 1].clone();
            let coeffs: Vec<Scalar> = v.iter().map(|c| c / &lead).collect();
            let roots = linear_roots(&coeffs)?;
            return Ok(MinimalPolynomial { coeffs, roots });
        }
        let next = powers.last().unwrap() * m;
        powers.push(next);
    }
}

fn eval(p: &[Scalar], x: &Scalar) -> Scalar {
    p.iter()
        .rev()
        .fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
}

/// Divides the monic `p` by `(x - r)`.
fn deflate(p: &[Scalar], r: &Scalar) -> Vec<Scalar> {
    let d = p.len() - 1;
    let mut out = vec![Scalar::zero(); d];
    let mut carry = Scalar::zero();
    for i in (1..=d).rev() {
        carry = &p[i] + &(&carry * r);
        out[i - 1] = carry.clone();
    }
    out
}

fn poly_string(p: &[Scalar]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("({c})*x^{i}"))
        .collect();
    terms.join(" + ")
}

/// Candidate roots `+-c q^k` tried before the quadratic formula.
fn candidates(p: &[Scalar]) -> Vec<Scalar> {
    let mode = p.iter().find_map(Scalar::mode);
    let span = p
        .iter()
        .filter_map(Scalar::laurent_terms)
        .flat_map(|t| t.into_iter().map(|(e, _)| e.abs()))
        .max()
        .unwrap_or(0)
        * 2
        + 2;
    let consts = [(1, 1), (2, 1), (1, 2), (3, 1), (1, 3)];
    let mut out = vec![Scalar::zero()];
    for (a, b) in consts {
        let c = Scalar::from_ratio(a, b);
        out.push(c.clone());
        out.push(-&c);
        if let Some(m) = mode {
            for k in (-span..=span).filter(|&k| k != 0) {
                let t = &c * &Scalar::q_pow(m, k);
                out.push(t.clone());
                out.push(-t);
            }
        }
    }
    out
}

fn linear_roots(monic: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut p = monic.to_vec();
    let mut roots = Vec::new();
    let cands = candidates(monic);
    'outer: while p.len() > 1 {
        if p.len() == 2 {
            roots.push(-&p[0]);
            break;
        }
        for c in &cands {
            if eval(&p, c).is_zero() {
                p = deflate(&p, c);
                roots.push(c.clone());
                continue 'outer;
            }
        }
        if p.len() == 3 {
            // x^2 + b x + c
            let (b, c) = (&p[1], &p[0]);
            let disc = &(b * b) - &(c * &Scalar::from_int(4));
            if let Some(s) = disc.sqrt() {
                let half = Scalar::from_ratio(1, 2);
                roots.push(&(&s - b) * &half);
                roots.push(&(&-&s - b) * &half);
                break;
            }
        }
        return Err(Error::IrreducibleFactor {
            factor: poly_string(&p),
        });
    }
    roots.sort_by_key(|r| r.to_string());
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    const QF: Mode = Mode::QField;

    fn q() -> Scalar {
        Scalar::q(QF)
    }

    #[test]
    fn glq_entries() {
        let r = RMatrix::glq(2, QF).unwrap();
        assert_eq!(*r.get(0, 0, 0, 0), q());
        assert_eq!(*r.get(0, 0, 1, 1), Scalar::one());
        assert_eq!(*r.get(1, 1, 0, 0), Scalar::one());
        assert_eq!(*r.get(0, 1, 1, 0), &q() - &q().inv().unwrap());
        assert!(r.get(1, 0, 0, 1).is_zero());
    }

    #[test]
    fn glq_three_is_hecke_in_cyclotomic_mode_too() {
        assert!(RMatrix::glq(3, QF).is_ok());
        assert!(RMatrix::glq(2, Mode::Cyclotomic(5)).is_ok());
    }

    #[test]
    fn identity_and_flip_satisfy_qybe() {
        assert!(RMatrix::identity(3, QF).qybe_check().passed);
        assert!(RMatrix::flip(2, QF).qybe_check().passed);
    }

    #[test]
    fn pr_roots_of_glq() {
        let mp = RMatrix::glq(2, QF)
            .unwrap()
            .pr_minimal_polynomial()
            .unwrap();
        assert_eq!(mp.coeffs.len(), 3);
        let mut roots = mp.roots.clone();
        roots.sort_by_key(|r| r.to_string());
        assert_eq!(roots, vec![-q().inv().unwrap(), q()]);
    }

    #[test]
    fn pr_roots_of_identity() {
        let mp = RMatrix::identity(2, QF).pr_minimal_polynomial().unwrap();
        assert_eq!(
            mp.distinct_roots(),
            vec![Scalar::from_int(-1), Scalar::one()]
        );
    }

    #[test]
    fn irreducible_factor_is_reported() {
        // PR acting as a rotation: x^2 + 1
        let m = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::from_int(-1)],
            vec![Scalar::one(), Scalar::zero()],
        ]);
        assert!(matches!(
            minimal_polynomial(&m),
            Err(Error::IrreducibleFactor { .. })
        ));
    }

    #[test]
    fn flip_is_not_dualizable() {
        assert!(matches!(
            RMatrix::flip(2, QF).second_inverse(),
            Err(Error::NotDualizable)
        ));
    }

    #[test]
    fn json_roundtrip() {
        let r = RMatrix::glq(2, QF).unwrap();
        let back = RMatrix::from_json(&r.to_json()).unwrap();
        assert_eq!(r, back);
    }

    #[test]
    fn json_rejects_bad_keys() {
        let bad = r#"{"n":2,"coeff_mode":"qfield","entries":{"0,0,0":"1"}}"#;
        assert!(RMatrix::from_json(bad).is_err());
        let bad = r#"{"n":2,"coeff_mode":"qfield","entries":{"0,0,0,0":"q +"}}"#;
        assert!(RMatrix::from_json(bad).is_err());
    }

    #[test]
    fn dual_braidings_of_glq() {
        for n in [2, 3] {
            let d = RMatrix::glq(n, QF).unwrap().dual_braidings().unwrap();
            assert!(d.report.passed, "{}", d.report);
            assert!(d.v_invertible);
        }
    }

    #[test]
    fn dual_braidings_of_triangular_diagonal() {
        // R^i_i^k_k = lambda_ik with lambda_ik lambda_ki = 1
        let r = RMatrix::from_fn(2, QF, |i, j, k, l| {
            if i != j || k != l {
                Scalar::zero()
            } else if i < k {
                q()
            } else if i > k {
                q().inv().unwrap()
            } else {
                Scalar::one()
            }
        });
        let d = r.dual_braidings().unwrap();
        assert!(d.report.passed);
        // psi_{V*,V} undoes psi_{V,V*}
        assert_eq!(&d.dv * &d.vd, Matrix::identity(4));
    }

    #[test]
    fn mutated_glq_fails_qybe_with_witness() {
        let r = RMatrix::glq(2, QF).unwrap();
        let mut m = r.matrix().clone();
        m[(1, 2)] = q();
        let bad = RMatrix::from_matrix(2, QF, m).unwrap();
        let rep = bad.qybe_check();
        assert!(!rep.passed);
        assert!(rep.checks[0].witness.is_some());
    }

    #[test]
    fn hecke_rprime_is_proportional_to_r() {
        let r = RMatrix::glq(2, QF).unwrap();
        let roots = r.pr_minimal_polynomial().unwrap().distinct_roots();
        let idx = roots
            .iter()
            .position(|x| *x == -q().inv().unwrap())
            .unwrap();
        let rp = r.derive_rprime(idx, None).unwrap();
        assert!(rp.report.passed);
        assert_eq!(rp.rprime, r.scaled(&q().inv().unwrap()));
        assert_eq!(rp.rescaled, r.scaled(&q()));
    }

    #[test]
    fn identity_rprime_from_root_one() {
        let r = RMatrix::identity(2, QF);
        let roots = r.pr_minimal_polynomial().unwrap().distinct_roots();
        let idx = roots.iter().position(Scalar::is_one).unwrap();
        let rp = r.derive_rprime(idx, None).unwrap();
        assert_eq!(rp.alpha, Scalar::one());
        assert_eq!(rp.rprime, r.scaled(&Scalar::from_int(-1)));
    }

    #[test]
    fn singular_rprime_is_an_error() {
        // identity with root -1 and alpha = 1/2: PR' = (1 + P)/2
        let r = RMatrix::identity(2, QF);
        let roots = r.pr_minimal_polynomial().unwrap().distinct_roots();
        let idx = roots
            .iter()
            .position(|x| *x == Scalar::from_int(-1))
            .unwrap();
        let res = r.derive_rprime(idx, Some(Scalar::from_ratio(1, 2)));
        assert!(matches!(res, Err(Error::SingularRPrime)));
    }
}
