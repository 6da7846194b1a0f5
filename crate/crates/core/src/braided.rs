//! Braidings on generators, their extension to words, braided tensor product
//! algebras and braided bialgebra/Hopf checks.

use crate::error::{invalid, Result};
use crate::linalg::Matrix;
use crate::ncalg::{Gen, NCPoly, QuotientAlgebra, Tensor, Word};
use crate::report::VerificationReport;
use crate::rmatrix::legs;
use crate::scalar::{Mode, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

/// A summand `(s, r', l')` of `Psi(l (x) r)`.
pub type Term = (Scalar, Gen, Gen);

/// A braiding `Psi(l (x) r) = sum s r' (x) l'` on generators, between a left
/// alphabet of size `nl` and a right alphabet of size `nr`.
pub struct BraidOp {
    nl: usize,
    nr: usize,
    table: Vec<Vec<Term>>,
    cache: Mutex<HashMap<(Word, Word), Tensor>>,
}

impl Clone for BraidOp {
    fn clone(&self) -> Self {
        BraidOp {
            nl: self.nl,
            nr: self.nr,
            table: self.table.clone(),
            cache: Mutex::default(),
        }
    }
}

impl std::fmt::Debug for BraidOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BraidOp({}x{})", self.nl, self.nr)
    }
}

impl BraidOp {
    /// `f(l, r)` lists the terms `(s, r', l')` of `Psi(l (x) r)`.
    pub fn from_fn(nl: usize, nr: usize, f: impl Fn(Gen, Gen) -> Vec<(Scalar, Gen, Gen)>) -> Self {
        let mut table = Vec::with_capacity(nl * nr);
        for l in 0..nl as Gen {
            for r in 0..nr as Gen {
                let mut acc: BTreeMap<(Gen, Gen), Scalar> = BTreeMap::new();
                for (s, a, b) in f(l, r) {
                    *acc.entry((a, b)).or_default() += s;
                }
                table.push(
                    acc.into_iter()
                        .filter(|(_, s)| !s.is_zero())
                        .map(|((a, b), s)| (s, a, b))
                        .collect(),
                );
            }
        }
        BraidOp {
            nl,
            nr,
            table,
            cache: Mutex::default(),
        }
    }

    /// From a matrix with rows `r'*nl + l'` and columns `l*nr + r`.
    pub fn from_matrix(nl: usize, nr: usize, m: &Matrix) -> Self {
        Self::from_fn(nl, nr, |l, r| {
            let col = l as usize * nr + r as usize;
            (0..nl * nr)
                .filter(|&row| !m[(row, col)].is_zero())
                .map(|row| (m[(row, col)].clone(), (row / nl) as Gen, (row % nl) as Gen))
                .collect()
        })
    }

    /// The ordinary flip.
    pub fn flip(nl: usize, nr: usize) -> Self {
        Self::from_fn(nl, nr, |l, r| vec![(Scalar::one(), r, l)])
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.nl, self.nr)
    }

    pub fn get(&self, l: Gen, r: Gen) -> &[(Scalar, Gen, Gen)] {
        &self.table[l as usize * self.nr + r as usize]
    }

    pub fn matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.nl * self.nr, self.nl * self.nr);
        for l in 0..self.nl {
            for r in 0..self.nr {
                for (s, a, b) in self.get(l as Gen, r as Gen) {
                    m[(*a as usize * self.nl + *b as usize, l * self.nr + r)] = s.clone();
                }
            }
        }
        m
    }

    /// `Psi^{-1}`, going from the right alphabet past the left one.
    pub fn inverse(&self) -> Option<BraidOp> {
        let inv = self.matrix().inverse()?;
        // inv maps (r', l') back to (l, r); as a braiding with left alphabet nr
        Some(Self::from_fn(self.nr, self.nl, |r, l| {
            let col = r as usize * self.nl + l as usize;
            (0..self.nl * self.nr)
                .filter(|&row| !inv[(row, col)].is_zero())
                .map(|row| {
                    (
                        inv[(row, col)].clone(),
                        (row / self.nr) as Gen,
                        (row % self.nr) as Gen,
                    )
                })
                .collect()
        }))
    }

    /// `Psi12 Psi23 Psi12 = Psi23 Psi12 Psi23` (same alphabet on both sides).
    pub fn braid_relation(&self) -> VerificationReport {
        let mut rep = VerificationReport::new();
        if self.nl != self.nr {
            rep.fail("braid_relation", "alphabets differ");
            return rep;
        }
        let n = self.nl;
        let m = self.matrix();
        let (a, b) = (legs(&m, n, 0, 1, 3), legs(&m, n, 1, 2, 3));
        let lhs = &(&a * &b) * &a;
        let rhs = &(&b * &a) * &b;
        rep.push(
            "braid_relation",
            lhs.first_difference(&rhs)
                .map(|(r, c)| format!("entry ({r},{c})")),
        );
        rep
    }

    /// Extension to words by the hexagon identities: each letter of `wr` in
    /// turn crosses all of `wl`. Result factors are `[right word, left word]`.
    pub fn extend(&self, wl: &Word, wr: &Word) -> Tensor {
        if wl.is_empty() || wr.is_empty() {
            return Tensor::pure(vec![wr.clone(), wl.clone()], Scalar::one());
        }
        let key = (wl.clone(), wr.clone());
        if let Some(t) = self.cache.lock().unwrap().get(&key) {
            return t.clone();
        }
        let mut out = Tensor::zero();
        if wr.len() == 1 {
            let b = wr.0[0];
            let (prefix, last) = (wl.slice(0, wl.len() - 1), wl.0[wl.len() - 1]);
            for (s, b1, c1) in self.get(last, b) {
                for (ws, t) in self.extend(&prefix, &Word::letter(*b1)).terms() {
                    out.add_term(vec![ws[0].clone(), ws[1].concat(&Word::letter(*c1))], s * t);
                }
            }
        } else {
            let head = wr.slice(0, 1);
            let rest = wr.slice(1, wr.len());
            for (ws, s) in self.extend(wl, &head).terms() {
                for (vs, t) in self.extend(&ws[1], &rest).terms() {
                    out.add_term(vec![ws[0].concat(&vs[0]), vs[1].clone()], s * t);
                }
            }
        }
        self.cache.lock().unwrap().insert(key, out.clone());
        out
    }

    /// The same extension computed in the other order: each letter of `wl`,
    /// from the last, crosses all of `wr`.
    pub fn extend_rowwise(&self, wl: &Word, wr: &Word) -> Tensor {
        if wl.is_empty() || wr.is_empty() {
            return Tensor::pure(vec![wr.clone(), wl.clone()], Scalar::one());
        }
        if wl.len() == 1 {
            return self.extend(wl, wr);
        }
        let (prefix, last) = (wl.slice(0, wl.len() - 1), wl.slice(wl.len() - 1, wl.len()));
        let mut out = Tensor::zero();
        for (ws, s) in self.extend_rowwise(&last, wr).terms() {
            for (vs, t) in self.extend_rowwise(&prefix, &ws[0]).terms() {
                out.add_term(vec![vs[0].clone(), vs[1].concat(&ws[1])], s * t);
            }
        }
        out
    }

    /// `Psi(a (x) b)` for polynomials, as `[right, left]` factors.
    pub fn apply(&self, a: &NCPoly, b: &NCPoly) -> Tensor {
        let mut out = Tensor::zero();
        for (wa, x) in a.terms() {
            for (wb, y) in b.terms() {
                out.add_scaled(&self.extend(wa, wb), &(x * y));
            }
        }
        out
    }

    pub fn to_file(&self, left: &[String], right: &[String]) -> BraidingFile {
        let mut table = BTreeMap::new();
        for l in 0..self.nl {
            for r in 0..self.nr {
                let entries: Vec<(String, String)> = self
                    .get(l as Gen, r as Gen)
                    .iter()
                    .map(|(s, a, b)| {
                        (
                            s.to_string(),
                            format!("{},{}", right[*a as usize], left[*b as usize]),
                        )
                    })
                    .collect();
                if !entries.is_empty() {
                    table.insert(format!("{},{}", left[l], right[r]), entries);
                }
            }
        }
        BraidingFile { table }
    }

    pub fn from_file(
        file: &BraidingFile,
        left: &[String],
        right: &[String],
        mode: Mode,
    ) -> Result<Self> {
        let find = |names: &[String], s: &str| -> Result<Gen> {
            names
                .iter()
                .position(|n| n == s)
                .map(|i| i as Gen)
                .ok_or_else(|| invalid(format!("unknown generator `{s}`")))
        };
        let split = |s: &str| -> Result<(String, String)> {
            s.split_once(',')
                .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
                .ok_or_else(|| invalid(format!("bad pair `{s}`")))
        };
        let mut parsed: HashMap<(Gen, Gen), Vec<Term>> = HashMap::new();
        for (key, entries) in &file.table {
            let (l, r) = split(key)?;
            let (l, r) = (find(left, &l)?, find(right, &r)?);
            let mut v = Vec::new();
            for (s, pair) in entries {
                let (a, b) = split(pair)?;
                v.push((Scalar::parse(s, mode)?, find(right, &a)?, find(left, &b)?));
            }
            parsed.insert((l, r), v);
        }
        Ok(Self::from_fn(left.len(), right.len(), |l, r| {
            parsed.get(&(l, r)).cloned().unwrap_or_default()
        }))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BraidingFile {
    pub table: BTreeMap<String, Vec<(String, String)>>,
}

/// `B (x) C` with cross relations `c' b = sum b_k c'_k` given by `psi`
/// (left alphabet `C`, right alphabet `B`). Generators of `C` are primed.
pub fn braided_tensor_algebra(
    b: &QuotientAlgebra,
    c: &QuotientAlgebra,
    psi: &BraidOp,
    bound: usize,
) -> Result<QuotientAlgebra> {
    let nb = b.ngens();
    if psi.sizes() != (c.ngens(), nb) {
        return Err(invalid("braiding does not match the alphabets"));
    }
    let mut names: Vec<String> = b.names().to_vec();
    names.extend(c.names().iter().map(|s| format!("{s}'")));
    let shift = |g: Gen| g + nb as Gen;
    let mut rels: Vec<NCPoly> = b.rules().iter().map(|r| r.as_poly()).collect();
    rels.extend(c.rules().iter().map(|r| r.as_poly().relabel(shift)));
    for cg in 0..c.ngens() as Gen {
        for bg in 0..nb as Gen {
            let mut p = NCPoly::word(Word(vec![shift(cg), bg]));
            for (s, b1, c1) in psi.get(cg, bg) {
                p.add_term(Word(vec![*b1, shift(*c1)]), -s);
            }
            rels.push(p);
        }
    }
    QuotientAlgebra::new(names, b.mode(), &rels, bound)
}

/// A braided bialgebra presented by generators and relations, with
/// coproduct, counit and (optionally) antipode given on generators.
pub struct BraidedBialgebra {
    pub alg: QuotientAlgebra,
    pub psi: BraidOp,
    pub coproduct: Vec<Tensor>,
    pub counit: Vec<Scalar>,
    pub antipode: Option<Vec<NCPoly>>,
    delta_cache: Mutex<HashMap<Word, Tensor>>,
}

impl BraidedBialgebra {
    pub fn new(
        alg: QuotientAlgebra,
        psi: BraidOp,
        coproduct: Vec<Tensor>,
        counit: Vec<Scalar>,
        antipode: Option<Vec<NCPoly>>,
    ) -> Result<Self> {
        let n = alg.ngens();
        if psi.sizes() != (n, n) || coproduct.len() != n || counit.len() != n {
            return Err(invalid("structure maps do not match the generators"));
        }
        if antipode.as_ref().is_some_and(|s| s.len() != n) {
            return Err(invalid("antipode does not match the generators"));
        }
        let coproduct = coproduct
            .iter()
            .map(|t| t.normal_form(&[&alg, &alg]))
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidedBialgebra {
            alg,
            psi,
            coproduct,
            counit,
            antipode,
            delta_cache: Mutex::default(),
        })
    }

    fn names(&self) -> &[String] {
        self.alg.names()
    }

    /// Product in the braided tensor square `B (x)_Psi B`.
    pub fn tensor_mul(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        let mut out = Tensor::zero();
        for (a, s) in x.terms() {
            for (b, t) in y.terms() {
                let st = s * t;
                for (ws, u) in self.psi.extend(&a[1], &b[0]).terms() {
                    out.add_term(vec![a[0].concat(&ws[0]), ws[1].concat(&b[1])], &st * u);
                }
            }
        }
        out.normal_form(&[&self.alg, &self.alg])
    }

    pub fn delta_word(&self, w: &Word) -> Result<Tensor> {
        if let Some(t) = self.delta_cache.lock().unwrap().get(w) {
            return Ok(t.clone());
        }
        let out = match w.len() {
            0 => Tensor::unit(2),
            1 => self.coproduct[w.0[0] as usize].clone(),
            k => {
                let left = self.delta_word(&w.slice(0, k - 1))?;
                self.tensor_mul(&left, &self.coproduct[w.0[k - 1] as usize])?
            }
        };
        self.delta_cache
            .lock()
            .unwrap()
            .insert(w.clone(), out.clone());
        Ok(out)
    }

    pub fn delta(&self, p: &NCPoly) -> Result<Tensor> {
        let mut out = Tensor::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.delta_word(w)?, c);
        }
        Ok(out)
    }

    pub fn eps_word(&self, w: &Word) -> Scalar {
        w.0.iter()
            .map(|&g| self.counit[g as usize].clone())
            .product()
    }

    pub fn eps(&self, p: &NCPoly) -> Scalar {
        p.terms().map(|(w, c)| c * &self.eps_word(w)).sum()
    }

    /// Braided-antimultiplicative extension `S(g w) = . Psi(S g (x) S w)`.
    pub fn antipode_word(&self, w: &Word) -> Result<NCPoly> {
        let s = self
            .antipode
            .as_ref()
            .ok_or_else(|| invalid("no antipode"))?;
        if w.is_empty() {
            return Ok(NCPoly::one());
        }
        let first = &s[w.0[0] as usize];
        let rest = self.antipode_word(&w.slice(1, w.len()))?;
        self.alg
            .normal_form(&self.psi.apply(first, &rest).multiply_out())
    }

    pub fn antipode(&self, p: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.antipode_word(w)?, c);
        }
        Ok(out)
    }

    /// `Psi` descends to the quotient: `Psi(r (x) w)` and `Psi(w (x) r)` vanish
    /// in `B (x) B` for every rule `r` and normal word `w` within `degree`.
    pub fn psi_descends(&self, degree: usize) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let a = &self.alg;
        let mut bad = None;
        'outer: for rule in a.rules() {
            let p = rule.as_poly();
            if rule.lead.len() > degree {
                continue;
            }
            for w in a.normal_words_up_to(degree - rule.lead.len()) {
                let wp = NCPoly::word(w.clone());
                for (side, t) in [
                    ("r(x)w", self.psi.apply(&p, &wp)),
                    ("w(x)r", self.psi.apply(&wp, &p)),
                ] {
                    match t.normal_form(&[a, a]) {
                        Ok(t) if t.is_zero() => {}
                        Ok(t) => {
                            bad = Some(format!(
                                "{side} with r = {}, w = {}: {}",
                                a.display(&p),
                                w.display(a.names()),
                                t.display(&[a.names()])
                            ));
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
        rep.push(format!("psi_descends(<= {degree})"), bad);
        rep
    }

    pub fn bialgebra_axiom_check(&self, degree: usize) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let a = &self.alg;
        let names = self.names();
        let rules: Vec<_> = a
            .rules()
            .into_iter()
            .filter(|r| r.lead.len() <= degree)
            .collect();

        let mut bad = None;
        for r in &rules {
            match self.delta(&r.as_poly()) {
                Ok(t) if t.is_zero() => {}
                Ok(t) => {
                    bad = Some(format!(
                        "{} -> {}",
                        a.display(&r.as_poly()),
                        t.display(&[names])
                    ));
                    break;
                }
                Err(e) => {
                    bad = Some(e.to_string());
                    break;
                }
            }
        }
        rep.push("coproduct_respects_relations", bad);

        let bad = rules
            .iter()
            .find(|r| !self.eps(&r.as_poly()).is_zero())
            .map(|r| a.display(&r.as_poly()));
        rep.push("counit_respects_relations", bad);

        let coassoc = |g: usize| -> Result<Option<String>> {
            let d = &self.coproduct[g];
            let left = d.expand_factor(0, |w| self.delta_word(w))?;
            let right = d.expand_factor(1, |w| self.delta_word(w))?;
            let left = left.normal_form(&[a, a, a])?;
            let right = right.normal_form(&[a, a, a])?;
            Ok((left != right).then(|| format!("generator {}", names[g])))
        };
        let bad = (0..a.ngens()).find_map(|g| coassoc(g).unwrap_or_else(|e| Some(e.to_string())));
        rep.push("coassociativity", bad);

        let bad = (0..a.ngens()).find_map(|g| {
            let gen = Tensor::pure(vec![Word::letter(g as Gen)], Scalar::one());
            let d = &self.coproduct[g];
            let l = d.contract_factor(0, |w| self.eps_word(w));
            let r = d.contract_factor(1, |w| self.eps_word(w));
            (l != gen || r != gen).then(|| format!("generator {}", names[g]))
        });
        rep.push("counit_law", bad);

        rep.absorb("", self.psi_descends(degree));

        if self.antipode.is_some() {
            self.antipode_checks(degree, &rules, &mut rep);
        }
        rep
    }

    fn antipode_checks(
        &self,
        degree: usize,
        rules: &[&crate::ncalg::Rule],
        rep: &mut VerificationReport,
    ) {
        let a = &self.alg;
        let names = self.names();
        let bad = rules
            .iter()
            .find_map(|r| match self.antipode(&r.as_poly()) {
                Ok(p) if p.is_zero() => None,
                Ok(p) => Some(format!("{} -> {}", a.display(&r.as_poly()), a.display(&p))),
                Err(e) => Some(e.to_string()),
            });
        rep.push("antipode_respects_relations", bad);

        let law = |w: &Word| -> Result<Option<String>> {
            let d = self.delta_word(w)?;
            let expected = NCPoly::constant(self.eps_word(w));
            let left = d.expand_factor(0, |x| Ok(Tensor::from_poly(&self.antipode_word(x)?)))?;
            let right = d.expand_factor(1, |x| Ok(Tensor::from_poly(&self.antipode_word(x)?)))?;
            for (side, t) in [("S.id", left), ("id.S", right)] {
                let p = a.normal_form(&t.multiply_out())?;
                if p != expected {
                    return Ok(Some(format!(
                        "{side} on {}: {}",
                        w.display(names),
                        a.display(&p)
                    )));
                }
            }
            Ok(None)
        };
        let bad = a
            .normal_words_up_to(degree)
            .iter()
            .find_map(|w| law(w).unwrap_or_else(|e| Some(e.to_string())));
        rep.push(format!("antipode_law(<= {degree})"), bad);

        let anti =
            |g: Gen, h: Gen| -> Result<Option<String>> {
                let s = self.antipode.as_ref().unwrap();
                let gh = a.normal_form_word(&Word(vec![g, h]))?;
                let lhs = self.antipode(&gh)?;
                let rhs = a.normal_form(
                    &self
                        .psi
                        .apply(&s[g as usize], &s[h as usize])
                        .multiply_out(),
                )?;
                Ok((lhs != rhs)
                    .then(|| format!("pair ({}, {})", names[g as usize], names[h as usize])))
            };
        let n = a.ngens() as Gen;
        let bad = (0..n)
            .flat_map(|g| (0..n).map(move |h| (g, h)))
            .find_map(|(g, h)| anti(g, h).unwrap_or_else(|e| Some(e.to_string())));
        rep.push("antipode_braided_antimultiplicative", bad);
    }

    /// `Ad_a(b) = sum a_(1) Psi(S a_(2) (x) b)` multiplied out.
    pub fn braided_adjoint(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
        let d = self.delta(a)?;
        let mut out = NCPoly::zero();
        for (ws, c) in d.terms() {
            let s2 = self.antipode_word(&ws[1])?;
            let crossed = self.psi.apply(&s2, b);
            let prod = Tensor::pure(vec![ws[0].clone()], c.clone())
                .tensor(&crossed)
                .multiply_out();
            out.add_scaled(&prod, &Scalar::one());
        }
        self.alg.normal_form(&out)
    }
}

/// The braided line: `k[x]` with `Psi(x (x) x) = q x (x) x`, `x` primitive.
pub fn braided_line(mode: Mode) -> Result<BraidedBialgebra> {
    let alg = QuotientAlgebra::free(vec!["x".into()], mode)?;
    let psi = BraidOp::from_fn(1, 1, |_, _| vec![(Scalar::q(mode), 0, 0)]);
    let x = Word::letter(0);
    let delta = Tensor::pure(vec![x.clone(), Word::empty()], Scalar::one())
        .add(&Tensor::pure(vec![Word::empty(), x], Scalar::one()));
    let s = NCPoly::letter(0).scale(&-Scalar::one());
    BraidedBialgebra::new(alg, psi, vec![delta], vec![Scalar::zero()], Some(vec![s]))
}

#[cfg(test)]
mod tests {
    use super::*;

    const QF: Mode = Mode::QField;

    fn q() -> Scalar {
        Scalar::q(QF)
    }

    #[test]
    fn braided_line_word_braiding() {
        let b = braided_line(QF).unwrap();
        let xx = Word(vec![0, 0]);
        let t = b.psi.extend(&xx, &xx);
        assert_eq!(t, Tensor::pure(vec![xx.clone(), xx], q().pow(4).unwrap()));
    }

    #[test]
    fn extension_orders_agree() {
        let r = crate::RMatrix::glq(2, QF).unwrap();
        let m = r.matrix().clone();
        let psi = BraidOp::from_matrix(2, 2, &m);
        let a = Word(vec![1, 0, 1]);
        let b = Word(vec![0, 1]);
        assert_eq!(psi.extend(&a, &b), psi.extend_rowwise(&a, &b));
    }

    #[test]
    fn braided_line_tensor_algebra() {
        let b = braided_line(QF).unwrap();
        let t = braided_tensor_algebra(&b.alg, &b.alg, &b.psi, 4).unwrap();
        let rules = t.rules();
        assert_eq!(rules.len(), 1);
        assert_eq!(t.display(&rules[0].as_poly()), "x'*x - q*x*x'");
    }

    #[test]
    fn braided_line_is_a_braided_hopf_algebra() {
        let b = braided_line(QF).unwrap();
        let rep = b.bialgebra_axiom_check(4);
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn braided_line_adjoint() {
        let b = braided_line(QF).unwrap();
        let x = NCPoly::letter(0);
        let ad = b.braided_adjoint(&x, &x).unwrap();
        let expected = NCPoly::word(Word(vec![0, 0])).scale(&(Scalar::one() - q()));
        assert_eq!(ad, expected);
    }

    #[test]
    fn inverse_braiding() {
        let b = braided_line(QF).unwrap();
        let inv = b.psi.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &[(q().inv().unwrap(), 0, 0)]);
    }

    #[test]
    fn braiding_file_roundtrip() {
        let names = vec!["x".to_string(), "y".to_string()];
        let psi = BraidOp::from_fn(2, 2, |l, r| {
            vec![(Scalar::from_int(l as i64 + 2 * r as i64 + 1), r, l)]
        });
        let f = psi.to_file(&names, &names);
        let back = BraidOp::from_file(&f, &names, &names, QF).unwrap();
        assert_eq!(back.matrix(), psi.matrix());
    }
}
