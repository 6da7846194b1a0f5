//! The matrix bialgebra `A(R)` on generators `t[i,j]`, its fundamental
//! representations and the dual quasitriangular pairing given by R-matrix
//! partition functions.

use crate::error::{invalid, Error, Result};
use crate::linalg::Matrix;
use crate::ncalg::{Gen, NCPoly, QuotientAlgebra, Tensor, Word};
use crate::report::VerificationReport;
use crate::rmatrix::{delta, flat_index, legs, multi_index, quads, RMatrix};
use crate::scalar::Scalar;
use std::collections::HashMap;
use std::sync::Mutex;

/// Generator index of `t^i_j`.
pub fn gen(n: usize, i: usize, j: usize) -> Gen {
    (i * n + j) as Gen
}

/// `(upper, lower)` indices of a generator.
pub fn indices(n: usize, g: Gen) -> (usize, usize) {
    (g as usize / n, g as usize % n)
}

pub fn matrix_names(sym: &str, n: usize) -> Vec<String> {
    (0..n * n)
        .map(|x| format!("{sym}[{},{}]", x / n, x % n))
        .collect()
}

/// The word `t^{I}_{J} = t^{i_1}_{j_1} ... t^{i_m}_{j_m}`.
pub fn matrix_word(n: usize, upper: &[usize], lower: &[usize]) -> Word {
    Word(
        upper
            .iter()
            .zip(lower)
            .map(|(&i, &j)| gen(n, i, j))
            .collect(),
    )
}

fn split_word(n: usize, w: &Word) -> (Vec<usize>, Vec<usize>) {
    w.0.iter().map(|&g| indices(n, g)).unzip()
}

/// All index tuples of length `m`.
pub fn tuples(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(m as u32)).map(move |x| multi_index(x, n, m))
}

/// Matrix coproduct of a word: `sum_B t^I_B (x) t^B_J`.
pub fn matrix_coproduct(n: usize, w: &Word) -> Tensor {
    let (upper, lower) = split_word(n, w);
    tuples(n, w.len())
        .map(|mid| {
            (
                vec![matrix_word(n, &upper, &mid), matrix_word(n, &mid, &lower)],
                Scalar::one(),
            )
        })
        .collect()
}

pub fn matrix_counit(n: usize, w: &Word) -> Scalar {
    w.0.iter()
        .map(|&g| {
            let (i, j) = indices(n, g);
            delta(i, j)
        })
        .product()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EvalMode {
    Grid,
    Recursive,
}

#[derive(Clone, Debug)]
pub struct FrtBialgebra {
    r: RMatrix,
    rinv: RMatrix,
    alg: QuotientAlgebra,
}

impl FrtBialgebra {
    pub fn new(r: &RMatrix, bound: usize) -> Result<Self> {
        let rinv = r.inverse().ok_or_else(|| invalid("R is not invertible"))?;
        let n = r.n();
        let alg = QuotientAlgebra::new(
            matrix_names("t", n),
            r.mode(),
            &Self::raw_relations(r),
            bound,
        )?;
        Ok(FrtBialgebra {
            r: r.clone(),
            rinv,
            alg,
        })
    }

    /// `R^i_a^k_b t^a_j t^b_l - t^k_b t^i_a R^a_j^b_l` for all `i, j, k, l`.
    pub fn raw_relations(r: &RMatrix) -> Vec<NCPoly> {
        let n = r.n();
        quads(n)
            .map(|(i, j, k, l)| {
                let mut p = NCPoly::zero();
                for a in 0..n {
                    for b in 0..n {
                        p.add_term(
                            Word(vec![gen(n, a, j), gen(n, b, l)]),
                            r.get(i, a, k, b).clone(),
                        );
                        p.add_term(Word(vec![gen(n, k, b), gen(n, i, a)]), -r.get(a, j, b, l));
                    }
                }
                p
            })
            .filter(|p| !p.is_zero())
            .collect()
    }

    pub fn r(&self) -> &RMatrix {
        &self.r
    }

    pub fn n(&self) -> usize {
        self.r.n()
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.alg
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_monomial(&self.alg, text)
    }

    pub fn coproduct(&self, p: &NCPoly) -> Tensor {
        let mut out = Tensor::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&matrix_coproduct(self.n(), w), c);
        }
        out
    }

    /// `rho+(t^i_j)^k_l = R^i_j^k_l`, `rho-(t^i_j)^k_l = (R^-1)^k_l^i_j`,
    /// extended multiplicatively.
    pub fn fundamental_rep(&self, sign: Sign, w: &Word) -> Matrix {
        let n = self.n();
        w.0.iter().fold(Matrix::identity(n), |acc, &g| {
            let (i, j) = indices(n, g);
            let m = Matrix::from_fn(n, n, |k, l| match sign {
                Sign::Plus => self.r.get(i, j, k, l).clone(),
                Sign::Minus => self.rinv.get(k, l, i, j).clone(),
            });
            &acc * &m
        })
    }

    pub fn rep_of(&self, sign: Sign, p: &NCPoly) -> Matrix {
        let n = self.n();
        p.terms().fold(Matrix::zeros(n, n), |acc, (w, c)| {
            acc.add(&self.fundamental_rep(sign, w).scale(c))
        })
    }

    /// Coproduct and both fundamental representations respect the relations.
    pub fn self_check(&self) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let rels: Vec<NCPoly> = self
            .alg
            .rules()
            .iter()
            .filter(|r| r.lead.len() == 2)
            .map(|r| r.as_poly())
            .collect();
        let names = self.alg.names();
        let bad = rels.iter().find_map(|p| {
            match self.coproduct(p).normal_form(&[&self.alg, &self.alg]) {
                Ok(t) if t.is_zero() => None,
                Ok(t) => Some(format!(
                    "{} -> {}",
                    self.alg.display(p),
                    t.display(&[names])
                )),
                Err(e) => Some(e.to_string()),
            }
        });
        rep.push("coproduct_respects_relations", bad);
        for (sign, name) in [
            (Sign::Plus, "rho_plus_respects_relations"),
            (Sign::Minus, "rho_minus_respects_relations"),
        ] {
            let bad = rels
                .iter()
                .find(|p| !self.rep_of(sign, p).is_zero())
                .map(|p| self.alg.display(p));
            rep.push(name, bad);
        }
        rep
    }
}

/// Parses a single monomial such as `t[0,1]*t[1,1]`.
pub fn parse_monomial(alg: &QuotientAlgebra, text: &str) -> Result<Word> {
    if text.trim() == "1" {
        return Ok(Word::empty());
    }
    let p = alg.parse_poly(text)?;
    match p.terms().collect::<Vec<_>>()[..] {
        [(w, c)] if c.is_one() => Ok(w.clone()),
        _ => Err(invalid(format!("`{text}` is not a monomial"))),
    }
}

/// The dual quasitriangular structure of `A(R)` and its convolution inverse.
pub struct DqtPairing {
    r: RMatrix,
    rinv: RMatrix,
    grids: Mutex<HashMap<(bool, usize, usize), Matrix>>,
    memo: Mutex<HashMap<(bool, Word, Word), Scalar>>,
}

impl DqtPairing {
    pub fn new(r: &RMatrix) -> Result<Self> {
        let rinv = r.inverse().ok_or_else(|| invalid("R is not invertible"))?;
        Ok(DqtPairing {
            r: r.clone(),
            rinv,
            grids: Mutex::default(),
            memo: Mutex::default(),
        })
    }

    pub fn n(&self) -> usize {
        self.r.n()
    }

    /// The array of `R`'s: rows `a = 1..M`, each `R_{a,M+1} ... R_{a,M+N}`,
    /// multiplied row after row in `V^{(x)(M+N)}`.
    fn ensure_grid(&self, inverse: bool, m: usize, nn: usize) {
        let key = (inverse, m, nn);
        if self.grids.lock().unwrap().contains_key(&key) {
            return;
        }
        let n = self.n();
        let base = if inverse {
            self.rinv.matrix()
        } else {
            self.r.matrix()
        };
        let slots = m + nn;
        let mut acc = Matrix::identity(n.pow(slots as u32));
        for a in 0..m {
            for b in 0..nn {
                acc = &acc * &legs(base, n, a, m + b, slots);
            }
        }
        self.grids.lock().unwrap().insert(key, acc);
    }

    fn grid_entry(&self, inverse: bool, a: &Word, b: &Word) -> Scalar {
        let n = self.n();
        let (m, nn) = (a.len(), b.len());
        let (ai, aj) = split_word(n, a);
        let (bk, bl) = split_word(n, b);
        // R: first input in order, second reversed; R^-1: first reversed, second in order
        let (mut up, mut lo): (Vec<usize>, Vec<usize>) = if inverse {
            (
                ai.iter().rev().copied().collect(),
                aj.iter().rev().copied().collect(),
            )
        } else {
            (ai, aj)
        };
        if inverse {
            up.extend(&bk);
            lo.extend(&bl);
        } else {
            up.extend(bk.iter().rev());
            lo.extend(bl.iter().rev());
        }
        self.ensure_grid(inverse, m, nn);
        self.grids.lock().unwrap()[&(inverse, m, nn)][(flat_index(&up, n), flat_index(&lo, n))]
            .clone()
    }

    fn recursive(&self, inverse: bool, a: &Word, b: &Word) -> Scalar {
        let n = self.n();
        if a.is_empty() {
            return matrix_counit(n, b);
        }
        if b.is_empty() {
            return matrix_counit(n, a);
        }
        let key = (inverse, a.clone(), b.clone());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = if a.len() == 1 && b.len() == 1 {
            let (i, j) = indices(n, a.0[0]);
            let (k, l) = indices(n, b.0[0]);
            let base = if inverse { &self.rinv } else { &self.r };
            base.get(i, j, k, l).clone()
        } else if a.len() > 1 {
            // R(a' x (x) c) = sum R(a' (x) c1) R(x (x) c2); R^-1 swaps the two factors of a
            let (head, last) = (a.slice(0, a.len() - 1), a.slice(a.len() - 1, a.len()));
            let (first, second) = if inverse { (last, head) } else { (head, last) };
            matrix_coproduct(n, b)
                .terms()
                .map(|(ws, _)| {
                    self.recursive(inverse, &first, &ws[0])
                        * self.recursive(inverse, &second, &ws[1])
                })
                .sum()
        } else {
            // R(a (x) b' y) = sum R(a1 (x) y) R(a2 (x) b'); R^-1 keeps the order
            let (head, last) = (b.slice(0, b.len() - 1), b.slice(b.len() - 1, b.len()));
            let (first, second) = if inverse { (head, last) } else { (last, head) };
            matrix_coproduct(n, a)
                .terms()
                .map(|(ws, _)| {
                    self.recursive(inverse, &ws[0], &first)
                        * self.recursive(inverse, &ws[1], &second)
                })
                .sum()
        };
        self.memo.lock().unwrap().insert(key, v.clone());
        v
    }

    /// `R(a (x) b)` on words over the `t` alphabet.
    pub fn pair(&self, mode: EvalMode, a: &Word, b: &Word) -> Scalar {
        match mode {
            EvalMode::Grid if !a.is_empty() && !b.is_empty() => self.grid_entry(false, a, b),
            _ => self.recursive(false, a, b),
        }
    }

    /// `R^-1(a (x) b)`.
    pub fn inverse_pair(&self, mode: EvalMode, a: &Word, b: &Word) -> Scalar {
        match mode {
            EvalMode::Grid if !a.is_empty() && !b.is_empty() => self.grid_entry(true, a, b),
            _ => self.recursive(true, a, b),
        }
    }

    pub fn pair_polys(&self, a: &NCPoly, b: &NCPoly) -> Scalar {
        let mut s = Scalar::zero();
        for (wa, x) in a.terms() {
            for (wb, y) in b.terms() {
                s += x * y * self.pair(EvalMode::Grid, wa, wb);
            }
        }
        s
    }

    /// All values `R(t^I_J (x) t^K_L)` at degrees `(m, nn)` as a matrix with
    /// rows `(I, K)` and columns `(J, L)`.
    fn block(&self, inverse: bool, m: usize, nn: usize) -> Matrix {
        let n = self.n();
        let dim = n.pow((m + nn) as u32);
        Matrix::from_fn(dim, dim, |row, col| {
            let up = multi_index(row, n, m + nn);
            let lo = multi_index(col, n, m + nn);
            let a = matrix_word(n, &up[..m], &lo[..m]);
            let b = matrix_word(n, &up[m..], &lo[m..]);
            if inverse {
                self.inverse_pair(EvalMode::Grid, &a, &b)
            } else {
                self.pair(EvalMode::Grid, &a, &b)
            }
        })
    }

    pub fn verify(&self, frt: &FrtBialgebra, degree: usize) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let n = self.n();
        let degs: Vec<(usize, usize)> = (1..=degree)
            .flat_map(|m| (1..=degree).map(move |k| (m, k)))
            .collect();
        let words = |d: usize| Word::all(n * n, d);

        let mut bad = None;
        'agree: for &(m, k) in &degs {
            for a in words(m) {
                for b in words(k) {
                    for inverse in [false, true] {
                        let (g, r) = if inverse {
                            (
                                self.inverse_pair(EvalMode::Grid, &a, &b),
                                self.inverse_pair(EvalMode::Recursive, &a, &b),
                            )
                        } else {
                            (
                                self.pair(EvalMode::Grid, &a, &b),
                                self.pair(EvalMode::Recursive, &a, &b),
                            )
                        };
                        if g != r {
                            let names = frt.alg.names();
                            bad = Some(format!(
                                "{}({} (x) {}): grid {g}, recursive {r}",
                                if inverse { "Rinv" } else { "R" },
                                a.display(names),
                                b.display(names)
                            ));
                            break 'agree;
                        }
                    }
                }
            }
        }
        rep.push(format!("grid_equals_recursive(<= {degree})"), bad);

        let bad = degs.iter().find_map(|&(m, k)| {
            let (g, gi) = (self.block(false, m, k), self.block(true, m, k));
            let id = Matrix::identity(g.rows());
            ((&g * &gi) != id || (&gi * &g) != id).then(|| format!("degrees ({m},{k})"))
        });
        rep.push(format!("convolution_inverse(<= {degree})"), bad);

        let bad = degs
            .iter()
            .find_map(|&(m, k)| self.almost_commutative(frt, m, k).err());
        rep.push(format!("almost_commutative(<= {degree})"), bad);

        let rels: Vec<NCPoly> = frt
            .alg
            .rules()
            .iter()
            .filter(|r| r.lead.len() == 2)
            .map(|r| r.as_poly())
            .collect();
        let mut bad = None;
        'wd: for p in &rels {
            for d in 1..=degree {
                for w in words(d) {
                    let wp = NCPoly::word(w.clone());
                    let (l, r) = (self.pair_polys(p, &wp), self.pair_polys(&wp, p));
                    if !l.is_zero() || !r.is_zero() {
                        bad = Some(format!(
                            "relation {} against {}",
                            frt.alg.display(p),
                            w.display(frt.alg.names())
                        ));
                        break 'wd;
                    }
                }
            }
        }
        rep.push(format!("well_defined_on_relations(<= {degree})"), bad);

        rep.push(
            format!("bicharacter(<= {degree})"),
            self.bicharacter(degree).err(),
        );
        rep
    }

    /// `sum t^K_B t^I_A R(t^A_J (x) t^B_L) = sum R(t^I_A (x) t^K_B) t^A_J t^B_L`
    /// modulo the relations of `A(R)`.
    fn almost_commutative(
        &self,
        frt: &FrtBialgebra,
        m: usize,
        k: usize,
    ) -> std::result::Result<(), String> {
        let n = self.n();
        let alg = &frt.alg;
        for (i, j) in tuples(n, m).flat_map(|i| tuples(n, m).map(move |j| (i.clone(), j))) {
            for (kk, l) in tuples(n, k).flat_map(|kk| tuples(n, k).map(move |l| (kk.clone(), l))) {
                let mut diff = NCPoly::zero();
                for a in tuples(n, m) {
                    for b in tuples(n, k) {
                        let left = self.pair(
                            EvalMode::Grid,
                            &matrix_word(n, &a, &j),
                            &matrix_word(n, &b, &l),
                        );
                        diff.add_term(
                            matrix_word(n, &kk, &b).concat(&matrix_word(n, &i, &a)),
                            left,
                        );
                        let right = self.pair(
                            EvalMode::Grid,
                            &matrix_word(n, &i, &a),
                            &matrix_word(n, &kk, &b),
                        );
                        diff.add_term(
                            matrix_word(n, &a, &j).concat(&matrix_word(n, &b, &l)),
                            -right,
                        );
                    }
                }
                match alg.normal_form(&diff) {
                    Ok(p) if p.is_zero() => {}
                    Ok(p) => {
                        return Err(format!(
                            "I={i:?} J={j:?} K={kk:?} L={l:?}: residual {}",
                            alg.display(&p)
                        ))
                    }
                    Err(e) => return Err(e.to_string()),
                }
            }
        }
        Ok(())
    }

    /// Both bicharacter laws on monomials `a`, `b`, `c` with `|a| + |b| <= degree`
    /// and `|c| <= degree`.
    fn bicharacter(&self, degree: usize) -> std::result::Result<(), String> {
        let n = self.n();
        let g = EvalMode::Grid;
        for da in 1..degree {
            for db in 1..=degree - da {
                for dc in 1..=degree {
                    for a in Word::all(n * n, da) {
                        for b in Word::all(n * n, db) {
                            for c in Word::all(n * n, dc) {
                                let ab = a.concat(&b);
                                let lhs = self.pair(g, &ab, &c);
                                let rhs: Scalar = matrix_coproduct(n, &c)
                                    .terms()
                                    .map(|(ws, _)| {
                                        self.pair(g, &a, &ws[0]) * self.pair(g, &b, &ws[1])
                                    })
                                    .sum();
                                if lhs != rhs {
                                    return Err(format!(
                                        "first input, words {:?} {:?} against {:?}",
                                        a.0, b.0, c.0
                                    ));
                                }
                                let lhs = self.pair(g, &c, &ab);
                                let rhs: Scalar = matrix_coproduct(n, &c)
                                    .terms()
                                    .map(|(ws, _)| {
                                        self.pair(g, &ws[0], &b) * self.pair(g, &ws[1], &a)
                                    })
                                    .sum();
                                if lhs != rhs {
                                    return Err(format!(
                                        "second input, words {:?} {:?} against {:?}",
                                        a.0, b.0, c.0
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// `R' = lambda R` multiplies the pairing on degrees `(m, k)` by `lambda^{mk}`.
pub fn scaling_check(
    r: &RMatrix,
    lambda: &Scalar,
    m: usize,
    k: usize,
) -> Result<VerificationReport> {
    let p = DqtPairing::new(r)?;
    let scaled = DqtPairing::new(&r.scaled(lambda))?;
    let factor = lambda.pow((m * k) as i64).map_err(Error::from)?;
    let n = r.n();
    let mut bad = None;
    'outer: for a in Word::all(n * n, m) {
        for b in Word::all(n * n, k) {
            let lhs = scaled.pair(EvalMode::Grid, &a, &b);
            let rhs = &factor * &p.pair(EvalMode::Grid, &a, &b);
            if lhs != rhs {
                bad = Some(format!("words {:?} {:?}: {lhs} vs {rhs}", a.0, b.0));
                break 'outer;
            }
        }
    }
    let mut rep = VerificationReport::new();
    rep.push(format!("scaling({m},{k})"), bad);
    Ok(rep)
}
