//! Quotient algebras `k<x_1..x_n>/I` with rewriting rules obtained by
//! overlap completion up to a degree bound.

use super::{parse_poly, NCPoly, Word};
use crate::error::{invalid, Error, Result};
use crate::linalg::Matrix;
use crate::report::VerificationReport;
use crate::scalar::{Mode, Scalar};
use serde::{Deserialize, Serialize};
use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap};
use std::sync::Mutex;

/// `lead -> rhs`, where every word of `rhs` is smaller than `lead`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lead: Word,
    pub rhs: NCPoly,
}

impl Rule {
    pub fn as_poly(&self) -> NCPoly {
        &NCPoly::word(self.lead.clone()) - &self.rhs
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Every overlap resolves; normal forms are unique in all degrees.
    Complete,
    /// Overlaps up to this degree resolve; longer ones were not examined.
    Bounded(usize),
    /// Completion stopped early (rule limit) after verifying this degree.
    Failed(usize),
}

const RULE_LIMIT: usize = 20_000;

#[derive(Default, Clone)]
struct RuleSet {
    rules: Vec<Option<Rule>>,
    by_lead: HashMap<Word, usize>,
    lens: BTreeSet<usize>,
}

impl RuleSet {
    fn insert(&mut self, r: Rule) -> usize {
        let id = self.rules.len();
        self.by_lead.insert(r.lead.clone(), id);
        self.lens.insert(r.lead.len());
        self.rules.push(Some(r));
        id
    }

    fn kill(&mut self, id: usize) -> Rule {
        let r = self.rules[id].take().expect("live rule");
        self.by_lead.remove(&r.lead);
        self.lens = self.by_lead.keys().map(Word::len).collect();
        r
    }

    fn live(&self) -> impl Iterator<Item = (usize, &Rule)> {
        self.rules
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_ref().map(|r| (i, r)))
    }

    /// Leftmost occurrence of a leading word in `w`.
    fn find(&self, w: &Word) -> Option<(usize, &Rule)> {
        for pos in 0..w.len() {
            for &l in &self.lens {
                if pos + l > w.len() {
                    break;
                }
                if let Some(&id) = self.by_lead.get(&w.0[pos..pos + l]) {
                    return Some((pos, self.rules[id].as_ref().unwrap()));
                }
            }
        }
        None
    }

    fn nf_word(&self, w: &Word, cache: &mut HashMap<Word, NCPoly>) -> NCPoly {
        if let Some(p) = cache.get(w) {
            return p.clone();
        }
        let out = match self.find(w) {
            None => NCPoly::word(w.clone()),
            Some((pos, rule)) => {
                let pre = w.slice(0, pos);
                let post = w.slice(pos + rule.lead.len(), w.len());
                let mut acc = NCPoly::zero();
                for (m, c) in rule.rhs.terms() {
                    let nw = pre.concat(m).concat(&post);
                    acc.add_scaled(&self.nf_word(&nw, cache), c);
                }
                acc
            }
        };
        cache.insert(w.clone(), out.clone());
        out
    }

    fn nf(&self, p: &NCPoly, cache: &mut HashMap<Word, NCPoly>) -> NCPoly {
        p.map_words(|w| self.nf_word(w, cache))
    }
}

impl std::borrow::Borrow<[u16]> for Word {
    fn borrow(&self) -> &[u16] {
        &self.0
    }
}

/// Overlap ambiguities `l1 = u s`, `l2 = s v` with `s` nonempty and proper.
fn overlaps(l1: &Word, l2: &Word) -> Vec<usize> {
    (1..l1.len().min(l2.len()))
        .filter(|&k| l1.0[l1.len() - k..] == l2.0[..k])
        .collect()
}

fn s_poly(r1: &Rule, r2: &Rule, k: usize) -> NCPoly {
    let tail = r2.lead.slice(k, r2.lead.len());
    let head = r1.lead.slice(0, r1.lead.len() - k);
    let a = &r1.rhs * &NCPoly::word(tail);
    let b = &NCPoly::word(head) * &r2.rhs;
    &a - &b
}

/// Rows of the reduced echelon form of `rels` over the basis of all words
/// occurring, taken in decreasing deglex order.
fn echelon(rels: &[NCPoly]) -> Vec<NCPoly> {
    let words: BTreeSet<Word> = rels
        .iter()
        .flat_map(|p| p.terms().map(|(w, _)| w.clone()))
        .collect();
    let words: Vec<Word> = words.into_iter().rev().collect();
    let col: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut m = Matrix::zeros(rels.len(), words.len());
    for (r, p) in rels.iter().enumerate() {
        for (w, c) in p.terms() {
            m[(r, col[w])] = c.clone();
        }
    }
    let pivots = m.rref_in_place();
    (0..pivots.len())
        .map(|r| {
            m.row(r)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (words[i].clone(), c.clone()))
                .collect()
        })
        .collect()
}

struct Completion {
    set: RuleSet,
    status: Status,
}

fn complete(rels: &[NCPoly], bound: usize) -> Result<Completion> {
    let mut set = RuleSet::default();
    let mut heap: BinaryHeap<Reverse<(usize, usize, usize, usize)>> = BinaryHeap::new();
    let mut pending = echelon(rels);
    pending.sort_by(|a, b| b.leading().unwrap().0.cmp(a.leading().unwrap().0));
    let mut cache = HashMap::new();
    loop {
        while let Some(p) = pending.pop() {
            let p = set.nf(&p, &mut cache);
            let Some((lead, lc)) = p.leading() else {
                continue;
            };
            if lead.is_empty() {
                return Err(Error::InconsistentRelations);
            }
            let lead = lead.clone();
            let inv = lc.inv()?;
            let mut rhs = p.scale(&-inv);
            rhs.add_term(lead.clone(), Scalar::one());
            let doomed: Vec<usize> = set
                .live()
                .filter(|(_, r)| r.lead.find(&lead).is_some())
                .map(|(i, _)| i)
                .collect();
            for id in doomed {
                pending.push(set.kill(id).as_poly());
            }
            let id = set.insert(Rule { lead, rhs });
            cache.clear();
            let new_lead = set.rules[id].as_ref().unwrap().lead.clone();
            let others: Vec<(usize, Word)> = set.live().map(|(i, r)| (i, r.lead.clone())).collect();
            for (j, lj) in others {
                for k in overlaps(&new_lead, &lj) {
                    heap.push(Reverse((new_lead.len() + lj.len() - k, id, j, k)));
                }
                if j != id {
                    for k in overlaps(&lj, &new_lead) {
                        heap.push(Reverse((new_lead.len() + lj.len() - k, j, id, k)));
                    }
                }
            }
            if set.by_lead.len() > RULE_LIMIT {
                let verified = heap
                    .peek()
                    .map_or(bound, |Reverse(t)| t.0.saturating_sub(1));
                return Ok(Completion {
                    set,
                    status: Status::Failed(verified.min(bound)),
                });
            }
        }
        let Some(Reverse((len, a, b, k))) = heap.pop() else {
            return Ok(Completion {
                set,
                status: Status::Complete,
            });
        };
        if len > bound {
            return Ok(Completion {
                set,
                status: Status::Bounded(bound),
            });
        }
        let (Some(r1), Some(r2)) = (&set.rules[a], &set.rules[b]) else {
            continue;
        };
        let s = set.nf(&s_poly(r1, r2, k), &mut cache);
        if !s.is_zero() {
            pending.push(s);
        }
    }
}

pub struct QuotientAlgebra {
    names: Vec<String>,
    mode: Mode,
    set: RuleSet,
    bound: usize,
    status: Status,
    cache: Mutex<HashMap<Word, NCPoly>>,
}

impl Clone for QuotientAlgebra {
    fn clone(&self) -> Self {
        QuotientAlgebra {
            names: self.names.clone(),
            mode: self.mode,
            set: self.set.clone(),
            bound: self.bound,
            status: self.status,
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl std::fmt::Debug for QuotientAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QuotientAlgebra")
            .field("names", &self.names)
            .field("rules", &self.rules().len())
            .field("status", &self.status)
            .finish()
    }
}

impl QuotientAlgebra {
    /// Orients `relations` by their deglex-greatest words and completes
    /// overlaps up to total degree `bound`.
    pub fn new(names: Vec<String>, mode: Mode, relations: &[NCPoly], bound: usize) -> Result<Self> {
        validate_names(&names)?;
        let Completion { mut set, status } = complete(relations, bound)?;
        // inter-reduce right-hand sides for a canonical presentation
        let snapshot = set.clone();
        let mut cache = HashMap::new();
        for r in set.rules.iter_mut().flatten() {
            r.rhs = snapshot.nf(&r.rhs, &mut cache);
        }
        Ok(QuotientAlgebra {
            names,
            mode,
            set,
            bound,
            status,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn free(names: Vec<String>, mode: Mode) -> Result<Self> {
        Self::new(names, mode, &[], 0)
    }

    pub fn parse(names: Vec<String>, mode: Mode, relations: &[&str], bound: usize) -> Result<Self> {
        let rels: Vec<NCPoly> = relations
            .iter()
            .map(|r| parse_poly(r, &names, mode))
            .collect::<std::result::Result<_, _>>()?;
        Self::new(names, mode, &rels, bound)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Live rules sorted by leading word.
    pub fn rules(&self) -> Vec<&Rule> {
        let mut v: Vec<&Rule> = self.set.live().map(|(_, r)| r).collect();
        v.sort_by(|a, b| a.lead.cmp(&b.lead));
        v
    }

    fn check_degree(&self, p: &NCPoly) -> Result<()> {
        let verified = match self.status {
            Status::Complete => return Ok(()),
            Status::Bounded(d) | Status::Failed(d) => d,
        };
        match p.degree() {
            Some(d) if d > verified => Err(Error::DegreeBoundExceeded {
                degree: d,
                bound: verified,
            }),
            _ => Ok(()),
        }
    }

    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        self.check_degree(p)?;
        let mut cache = self.cache.lock().unwrap();
        Ok(self.set.nf(p, &mut cache))
    }

    pub fn normal_form_word(&self, w: &Word) -> Result<NCPoly> {
        self.normal_form(&NCPoly::word(w.clone()))
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
        self.normal_form(&(a * b))
    }

    pub fn is_zero(&self, p: &NCPoly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.set.find(w).is_none()
    }

    /// Normal words of length exactly `d`, in increasing deglex order.
    pub fn normal_words(&self, d: usize) -> Vec<Word> {
        let mut level = vec![Word::empty()];
        for _ in 0..d {
            let mut next = Vec::new();
            for w in &level {
                for g in 0..self.ngens() as u16 {
                    let nw = w.concat(&Word::letter(g));
                    let suffix_reducible = self
                        .set
                        .lens
                        .iter()
                        .filter(|&&l| l <= nw.len())
                        .any(|&l| self.set.by_lead.contains_key(&nw.0[nw.len() - l..]));
                    if !suffix_reducible {
                        next.push(nw);
                    }
                }
            }
            level = next;
        }
        level
    }

    pub fn normal_words_up_to(&self, d: usize) -> Vec<Word> {
        (0..=d).flat_map(|k| self.normal_words(k)).collect()
    }

    pub fn dim(&self, d: usize) -> usize {
        self.normal_words(d).len()
    }

    /// Re-examines every overlap of total length at most `degree` under the
    /// final rules.
    pub fn completion_check(&self, degree: usize) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let mut cache = HashMap::new();
        let rules: Vec<&Rule> = self.rules();
        let mut bad = None;
        let mut count = 0usize;
        'outer: for r1 in &rules {
            for r2 in &rules {
                for k in overlaps(&r1.lead, &r2.lead) {
                    if r1.lead.len() + r2.lead.len() - k > degree {
                        continue;
                    }
                    count += 1;
                    let s = self.set.nf(&s_poly(r1, r2, k), &mut cache);
                    if !s.is_zero() {
                        let w = r1.lead.concat(&r2.lead.slice(k, r2.lead.len()));
                        bad = Some(format!(
                            "overlap {} leaves {}",
                            w.display(&self.names),
                            s.display(&self.names)
                        ));
                        break 'outer;
                    }
                }
            }
        }
        rep.push(
            format!("overlaps_resolve(<= {degree}, {count} checked)"),
            bad,
        );
        rep
    }

    pub fn display(&self, p: &NCPoly) -> String {
        p.display(&self.names)
    }

    pub fn parse_poly(&self, text: &str) -> Result<NCPoly> {
        Ok(parse_poly(text, &self.names, self.mode)?)
    }

    // ---- JSON ----

    pub fn from_file(file: &AlgebraFile) -> Result<Self> {
        let mode: Mode = file.coeff_mode.as_deref().unwrap_or("qfield").parse()?;
        let rels: Vec<&str> = file.relations.iter().map(String::as_str).collect();
        Self::parse(file.generators.clone(), mode, &rels, file.degree_bound)
    }

    pub fn to_file(&self) -> AlgebraFile {
        AlgebraFile {
            generators: self.names.clone(),
            relations: self
                .rules()
                .iter()
                .map(|r| self.display(&r.as_poly()))
                .collect(),
            degree_bound: self.bound,
            coeff_mode: Some(self.mode.to_string()),
        }
    }
}

fn validate_names(names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        let ok = !n.is_empty()
            && n != "q"
            && !n.starts_with(|c: char| c.is_ascii_digit() || "()+-*/^ ".contains(c))
            && !n.contains(|c: char| c.is_whitespace() || "+-*^()".contains(c));
        if !ok {
            return Err(invalid(format!("bad generator name `{n}`")));
        }
        if names[..i].contains(n) {
            return Err(invalid(format!("duplicate generator `{n}`")));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub degree_bound: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeff_mode: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn qplane() -> QuotientAlgebra {
        QuotientAlgebra::parse(names(&["x", "y"]), Mode::QField, &["y*x - q*x*y"], 6).unwrap()
    }

    #[test]
    fn quantum_plane_rule_and_reduction() {
        let a = qplane();
        let rules = a.rules();
        assert_eq!(rules.len(), 1);
        assert_eq!(rules[0].lead, Word(vec![1, 0]));
        assert_eq!(a.status(), Status::Complete);
        let p = a.normal_form(&a.parse_poly("y*y*x").unwrap()).unwrap();
        assert_eq!(a.display(&p), "q^2*x*y*y");
    }

    #[test]
    fn quantum_plane_dimensions() {
        let a = qplane();
        for d in 0..=6 {
            assert_eq!(a.dim(d), d + 1);
        }
        assert!(a.completion_check(6).passed);
    }

    #[test]
    fn inconsistent_relations() {
        let r = QuotientAlgebra::parse(names(&["x"]), Mode::QField, &["x - 1", "x - 2"], 3);
        assert!(matches!(r, Err(Error::InconsistentRelations)));
    }

    #[test]
    fn completion_adds_missing_rule() {
        // yx = xy, zx = xy: overlap-free but zy needs nothing; use a
        // presentation whose overlap yields a new rule
        let a = QuotientAlgebra::parse(names(&["x", "y"]), Mode::QField, &["y*x - x*x", "y*y"], 4)
            .unwrap();
        // yyx -> y(xx) = (yx)x -> xxx and (yy)x -> 0 gives xxx = 0
        assert!(a.rules().iter().any(|r| r.lead == Word(vec![0, 0, 0])));
        assert!(a.completion_check(4).passed);
    }

    #[test]
    fn bounded_status_guards_normal_forms() {
        let a = QuotientAlgebra::parse(names(&["x", "y"]), Mode::QField, &["y*x - x*x", "y*y"], 2)
            .unwrap();
        assert_eq!(a.status(), Status::Bounded(2));
        let w = NCPoly::word(Word(vec![1, 1, 0]));
        assert!(matches!(
            a.normal_form(&w),
            Err(Error::DegreeBoundExceeded { .. })
        ));
    }

    #[test]
    fn commuting_variables() {
        let a = QuotientAlgebra::parse(
            names(&["x", "y", "z"]),
            Mode::QField,
            &["y*x - x*y", "z*x - x*z", "z*y - y*z"],
            5,
        )
        .unwrap();
        assert_eq!(a.status(), Status::Complete);
        // dimension of degree-3 polynomials in 3 variables
        assert_eq!(a.dim(3), 10);
    }

    #[test]
    fn bad_names_rejected() {
        assert!(QuotientAlgebra::free(names(&["q"]), Mode::QField).is_err());
        assert!(QuotientAlgebra::free(names(&["x", "x"]), Mode::QField).is_err());
    }
}
