//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Elements of tensor powers are [`El`] values keyed by tuples of basis
//! indices, so every structure map acts on one tensor slot at a time.

mod element;
mod modules;
mod qt;

pub use element::{tuples, El};
pub use modules::{
    anyonic_dim, anyonic_trace, braid, comodule_inverse, crossed_module_check, module_braiding,
    nfold_action, nfold_module_algebra_check, Coaction, GradedSpace, ModuleAction,
};
pub use qt::{
    dqt_verify, drinfeld_double, group_function_hopf, qt_identities_report, qt_verify, zn_prime,
    BicharacterHopf, DualQT, QT,
};

use crate::error::{invalid, Error, Result};
use crate::linalg::Matrix;
use crate::report::VerificationReport;
use crate::scalar::{Mode, Scalar};
use serde::{Deserialize, Serialize};

/// A finite-dimensional associative unital algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    mode: Mode,
    labels: Vec<String>,
    product: Vec<El>,
    unit: El,
}

impl Algebra {
    /// `product[a * d + b]` is `e_a e_b`.
    pub fn new(mode: Mode, labels: Vec<String>, product: Vec<El>, unit: El) -> Result<Self> {
        let d = labels.len();
        if product.len() != d * d {
            return Err(invalid(format!(
                "product table has {} entries, expected {}",
                product.len(),
                d * d
            )));
        }
        for e in product.iter().chain(std::iter::once(&unit)) {
            if e.terms().any(|(k, _)| k.len() != 1 || k[0] >= d) {
                return Err(invalid(
                    "product and unit must be single-factor elements of the basis",
                ));
            }
        }
        Ok(Algebra {
            mode,
            labels,
            product,
            unit,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn one(&self) -> &El {
        &self.unit
    }

    pub fn basis(&self, a: usize) -> El {
        El::basis([a])
    }

    pub fn mul_basis(&self, a: usize, b: usize) -> &El {
        &self.product[a * self.dim() + b]
    }

    pub fn mul(&self, x: &El, y: &El) -> El {
        tensor_mul(&[self], x, y)
    }

    /// The product of a list of single-factor elements, left to right.
    pub fn mul_all(&self, xs: &[&El]) -> El {
        xs.iter()
            .fold(self.unit.clone(), |acc, x| self.mul(&acc, x))
    }

    pub fn display(&self, x: &El) -> String {
        x.display(&[&self.labels])
    }

    /// Associativity and unit laws on basis elements.
    pub fn verify(&self) -> VerificationReport {
        let d = self.dim();
        let mut rep = VerificationReport::new();
        let mut bad = None;
        'outer: for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let l = self.mul(self.mul_basis(a, b), &self.basis(c));
                    let r = self.mul(&self.basis(a), self.mul_basis(b, c));
                    if l != r {
                        bad = Some(format!(
                            "a={}, b={}, c={}",
                            self.labels[a], self.labels[b], self.labels[c]
                        ));
                        break 'outer;
                    }
                }
            }
        }
        rep.push("associativity", bad);
        let bad = (0..d).find(|&a| {
            let e = self.basis(a);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        });
        rep.push("unit", bad.map(|a| format!("a={}", self.labels[a])));
        rep
    }
}

/// Componentwise product in a tensor product of algebras.
pub fn tensor_mul(algs: &[&Algebra], x: &El, y: &El) -> El {
    let mut out = El::zero();
    for (kx, cx) in x.terms() {
        for (ky, cy) in y.terms() {
            let mut acc = El::scalar(cx * cy);
            for (slot, alg) in algs.iter().enumerate() {
                acc = acc.tensor(alg.mul_basis(kx[slot], ky[slot]));
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, &Scalar::one());
        }
    }
    out
}

pub fn tensor_unit(algs: &[&Algebra]) -> El {
    algs.iter()
        .fold(El::scalar(Scalar::one()), |acc, a| acc.tensor(a.one()))
}

/// Tensor product with `fill[i]` in every slot not listed in `slots`; `x`'s
/// factors go to `slots` in order.
pub fn embed(x: &El, slots: &[usize], fill: &[&El]) -> El {
    let total = slots.len() + fill.len();
    let rest: Vec<usize> = (0..total).filter(|s| !slots.contains(s)).collect();
    let filler = fill
        .iter()
        .fold(El::scalar(Scalar::one()), |acc, f| acc.tensor(f));
    let mut out = El::zero();
    for (k, c) in x.terms() {
        for (m, y) in filler.terms() {
            let mut key = vec![0; total];
            for (i, &s) in slots.iter().enumerate() {
                key[s] = k[i];
            }
            for (i, &s) in rest.iter().enumerate() {
                key[s] = m[i];
            }
            out.add_term(key, c * y);
        }
    }
    out
}

/// Applies a matrix, whose column `a` is the image of `e_a`, to one slot.
pub fn apply_matrix(m: &Matrix, x: &El, slot: usize) -> El {
    x.map_slot(slot, |a| El::from_coords(&m.col(a)))
}

/// A finite-dimensional bialgebra, or Hopf algebra when an antipode is given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimHopf {
    alg: Algebra,
    coproduct: Vec<El>,
    counit: Vec<Scalar>,
    antipode: Option<Vec<El>>,
}

impl FinDimHopf {
    pub fn new(
        alg: Algebra,
        coproduct: Vec<El>,
        counit: Vec<Scalar>,
        antipode: Option<Vec<El>>,
    ) -> Result<Self> {
        let d = alg.dim();
        if coproduct.len() != d || counit.len() != d {
            return Err(invalid(
                "coproduct and counit need one entry per basis element",
            ));
        }
        if coproduct.iter().any(|e| {
            e.terms()
                .any(|(k, _)| k.len() != 2 || k.iter().any(|&i| i >= d))
        }) {
            return Err(invalid("coproduct entries must be two-factor elements"));
        }
        if let Some(s) = &antipode {
            if s.len() != d
                || s.iter()
                    .any(|e| e.terms().any(|(k, _)| k.len() != 1 || k[0] >= d))
            {
                return Err(invalid(
                    "antipode needs one single-factor image per basis element",
                ));
            }
        }
        Ok(FinDimHopf {
            alg,
            coproduct,
            counit,
            antipode,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn mode(&self) -> Mode {
        self.alg.mode
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.alg.labels
    }

    pub fn one(&self) -> &El {
        &self.alg.unit
    }

    pub fn basis(&self, a: usize) -> El {
        El::basis([a])
    }

    pub fn mul(&self, x: &El, y: &El) -> El {
        self.alg.mul(x, y)
    }

    pub fn mul_all(&self, xs: &[&El]) -> El {
        self.alg.mul_all(xs)
    }

    /// Componentwise product in `H^{⊗k}`.
    pub fn mul_n(&self, x: &El, y: &El) -> El {
        let k = x
            .terms()
            .next()
            .or_else(|| y.terms().next())
            .map_or(0, |(k, _)| k.len());
        tensor_mul(&vec![&self.alg; k], x, y)
    }

    pub fn unit_n(&self, k: usize) -> El {
        tensor_unit(&vec![&self.alg; k])
    }

    pub fn coproduct_basis(&self, a: usize) -> &El {
        &self.coproduct[a]
    }

    pub fn counit_basis(&self, a: usize) -> &Scalar {
        &self.counit[a]
    }

    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn require_antipode(&self) -> Result<()> {
        if self.antipode.is_some() {
            Ok(())
        } else {
            Err(Error::MissingAntipode)
        }
    }

    pub fn antipode_basis(&self, a: usize) -> Option<&El> {
        self.antipode.as_ref().map(|s| &s[a])
    }

    pub fn delta_at(&self, x: &El, slot: usize) -> El {
        x.map_slot(slot, |a| self.coproduct[a].clone())
    }

    pub fn delta(&self, x: &El) -> El {
        self.delta_at(x, 0)
    }

    /// The iterated coproduct into `parts` factors.
    pub fn delta_n(&self, x: &El, parts: usize) -> El {
        let mut out = x.clone();
        for i in 1..parts {
            out = self.delta_at(&out, i - 1);
        }
        out
    }

    pub fn eps_at(&self, x: &El, slot: usize) -> El {
        x.map_slot(slot, |a| El::scalar(self.counit[a].clone()))
    }

    pub fn eps(&self, x: &El) -> Scalar {
        self.eps_at(x, 0).as_scalar()
    }

    /// The antipode on one slot. Callers check [`Self::require_antipode`].
    pub fn s_at(&self, x: &El, slot: usize) -> El {
        let s = self.antipode.as_ref().expect("antipode required");
        x.map_slot(slot, |a| s[a].clone())
    }

    pub fn s(&self, x: &El) -> El {
        self.s_at(x, 0)
    }

    pub fn antipode_matrix(&self) -> Option<Matrix> {
        let s = self.antipode.as_ref()?;
        let d = self.dim();
        Some(Matrix::from_fn(d, d, |r, c| s[c].coeff(&[r])))
    }

    pub fn display(&self, x: &El) -> String {
        self.alg.display(x)
    }

    /// Replaces the antipode.
    pub fn with_antipode(mut self, s: Option<Vec<El>>) -> Self {
        self.antipode = s;
        self
    }

    /// Solves `Σ S(x₁)x₂ = ε(x)1` for the antipode as a linear system.
    pub fn solve_antipode(&self) -> Option<Vec<El>> {
        let d = self.dim();
        let mut m = Matrix::zeros(d * d, d * d);
        let mut rhs = Matrix::zeros(d * d, 1);
        for a in 0..d {
            for (k, c) in self.coproduct[a].terms() {
                let (i, j) = (k[0], k[1]);
                for kk in 0..d {
                    for (t, y) in self.alg.mul_basis(kk, j).terms() {
                        let row = a * d + t[0];
                        let col = i * d + kk;
                        m[(row, col)] = &m[(row, col)] + &(c * y);
                    }
                }
            }
            for (t, u) in self.alg.unit.terms() {
                rhs[(a * d + t[0], 0)] = &self.counit[a] * u;
            }
        }
        let sol = m.solve(&rhs)?;
        Some(
            (0..d)
                .map(|i| {
                    El::from_coords(
                        &(0..d)
                            .map(|k| sol[(i * d + k, 0)].clone())
                            .collect::<Vec<_>>(),
                    )
                })
                .collect(),
        )
    }

    /// The dual Hopf algebra on the dual basis, by transposing every table.
    pub fn dual(&self) -> FinDimHopf {
        let d = self.dim();
        let labels = self.labels().iter().map(|l| format!("{l}*")).collect();
        let product = (0..d * d)
            .map(|ab| {
                let (a, b) = (ab / d, ab % d);
                let mut e = El::zero();
                for c in 0..d {
                    e.add_term(vec![c], self.coproduct[c].coeff(&[a, b]));
                }
                e
            })
            .collect();
        let unit = El::from_coords(&self.counit);
        let coproduct = (0..d)
            .map(|c| {
                let mut e = El::zero();
                for a in 0..d {
                    for b in 0..d {
                        e.add_term(vec![a, b], self.alg.mul_basis(a, b).coeff(&[c]));
                    }
                }
                e
            })
            .collect();
        let counit = self.alg.unit.coords(d);
        let antipode = self.antipode.as_ref().map(|s| {
            (0..d)
                .map(|a| El::from_coords(&(0..d).map(|b| s[b].coeff(&[a])).collect::<Vec<_>>()))
                .collect()
        });
        let alg = Algebra {
            mode: self.mode(),
            labels,
            product,
            unit,
        };
        FinDimHopf {
            alg,
            coproduct,
            counit,
            antipode,
        }
    }

    pub fn to_file(&self) -> HopfFile {
        HopfFile::from_parts(self, None)
    }
}

fn show_pair(h: &FinDimHopf, l: &El, r: &El) -> String {
    let names = [h.labels()];
    format!("{} != {}", l.display(&names), r.display(&names))
}

/// Checks every bialgebra axiom, and the antipode laws when an antipode is
/// present, on basis elements.
pub fn hopf_verify(h: &FinDimHopf) -> VerificationReport {
    bialgebra_report(h, &|x, y| h.mul_n(x, y))
}

/// The bialgebra and antipode axioms with the algebra structure on `H⊗H`
/// given by `square_mul`; the ordinary tensor product gives
/// [`hopf_verify`], a braided tensor product the braided axioms.
pub fn bialgebra_report(h: &FinDimHopf, square_mul: &dyn Fn(&El, &El) -> El) -> VerificationReport {
    let d = h.dim();
    let lab = |a: usize| h.labels()[a].clone();
    let mut rep = h.alg.verify();

    let bad = (0..d).find_map(|a| {
        let x = h.basis(a);
        let l = h.delta_at(&h.delta(&x), 0);
        let r = h.delta_at(&h.delta(&x), 1);
        (l != r).then(|| format!("a={}: {}", lab(a), show_pair(h, &l, &r)))
    });
    rep.push("coassociativity", bad);

    let bad = (0..d).find_map(|a| {
        let x = h.basis(a);
        let dx = h.delta(&x);
        let l = h.eps_at(&dx, 0);
        let r = h.eps_at(&dx, 1);
        (l != x || r != x).then(|| format!("a={}", lab(a)))
    });
    rep.push("counit_law", bad);

    let mut bad = (h.delta(h.one()) != h.unit_n(2)).then(|| "Δ(1) != 1⊗1".to_string());
    'outer: for a in 0..d {
        for b in 0..d {
            if bad.is_some() {
                break 'outer;
            }
            let l = h.delta(h.alg.mul_basis(a, b));
            let r = square_mul(&h.coproduct[a], &h.coproduct[b]);
            if l != r {
                bad = Some(format!(
                    "a={}, b={}: {}",
                    lab(a),
                    lab(b),
                    show_pair(h, &l, &r)
                ));
            }
        }
    }
    rep.push("coproduct_multiplicative", bad);

    let mut bad = (!h.eps(h.one()).is_one()).then(|| "ε(1) != 1".to_string());
    if bad.is_none() {
        bad = (0..d)
            .flat_map(|a| (0..d).map(move |b| (a, b)))
            .find(|&(a, b)| h.eps(h.alg.mul_basis(a, b)) != &h.counit[a] * &h.counit[b])
            .map(|(a, b)| format!("a={}, b={}", lab(a), lab(b)));
    }
    rep.push("counit_multiplicative", bad);

    if h.has_antipode() {
        let bad = (0..d).find_map(|a| {
            let dx = h.delta(&h.basis(a));
            let target = h.one().scale(&h.counit[a]);
            let l = multiply_out(h, &h.s_at(&dx, 0));
            let r = multiply_out(h, &h.s_at(&dx, 1));
            if l != target {
                Some(format!("a={}: S(a₁)a₂ = {}", lab(a), h.display(&l)))
            } else if r != target {
                Some(format!("a={}: a₁S(a₂) = {}", lab(a), h.display(&r)))
            } else {
                None
            }
        });
        rep.push("antipode_law", bad);
    }
    rep
}

/// Multiplies all factors of a multi-factor element of `H^{⊗k}` together.
pub fn multiply_out(h: &FinDimHopf, x: &El) -> El {
    x.map_terms(|k| {
        k.iter()
            .fold(h.one().clone(), |acc, &i| h.mul(&acc, &h.basis(i)))
    })
}

/// Multiplies factors `slot` and `slot + 1` together.
pub fn multiply_slots(alg: &Algebra, x: &El, slot: usize) -> El {
    x.map_terms(|k| {
        let p = alg.mul_basis(k[slot], k[slot + 1]);
        let mut out = El::zero();
        for (m, c) in p.terms() {
            let mut key = k[..slot].to_vec();
            key.push(m[0]);
            key.extend_from_slice(&k[slot + 2..]);
            out.add_term(key, c.clone());
        }
        out
    })
}

/// Checks that `f` (column `a` is the image of `e_a`) is a bialgebra map.
pub fn bialgebra_map_check(src: &FinDimHopf, dst: &FinDimHopf, f: &Matrix) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let ds = src.dim();
    let fx = |x: &El| {
        x.map_terms(|k| {
            let mut e = El::scalar(Scalar::one());
            for &i in k {
                e = e.tensor(&El::from_coords(&f.col(i)));
            }
            e
        })
    };
    let bad = (0..ds)
        .flat_map(|a| (0..ds).map(move |b| (a, b)))
        .find(|&(a, b)| {
            fx(src.alg.mul_basis(a, b)) != dst.mul(&fx(&src.basis(a)), &fx(&src.basis(b)))
        })
        .map(|(a, b)| format!("a={}, b={}", src.labels()[a], src.labels()[b]));
    rep.push("multiplicative", bad);
    rep.push(
        "unital",
        (fx(src.one()) != *dst.one()).then(|| "f(1) != 1".to_string()),
    );
    let bad = (0..ds)
        .find(|&a| fx(&src.coproduct[a]) != dst.delta(&fx(&src.basis(a))))
        .map(|a| format!("a={}", src.labels()[a]));
    rep.push("comultiplicative", bad);
    let bad = (0..ds)
        .find(|&a| dst.eps(&fx(&src.basis(a))) != src.counit[a])
        .map(|a| format!("a={}", src.labels()[a]));
    rep.push("counital", bad);
    rep
}

/// The group algebra of `Z_{n_1} × … × Z_{n_r}`; basis indices are mixed-radix
/// exponent tuples with the first generator most significant.
pub fn group_algebra(orders: &[usize], mode: Mode) -> FinDimHopf {
    let d: usize = orders.iter().product();
    let labels: Vec<String> = tuples(orders).map(|e| group_label(&e, orders)).collect();
    let add = |a: usize, b: usize| {
        let (x, y) = (element::unflatten(a, orders), element::unflatten(b, orders));
        let s: Vec<usize> = x
            .iter()
            .zip(&y)
            .zip(orders)
            .map(|((i, j), n)| (i + j) % n)
            .collect();
        element::flatten(&s, orders)
    };
    let inv = |a: usize| {
        let x = element::unflatten(a, orders);
        let s: Vec<usize> = x.iter().zip(orders).map(|(i, n)| (n - i) % n).collect();
        element::flatten(&s, orders)
    };
    let product = (0..d * d)
        .map(|ab| El::basis([add(ab / d, ab % d)]))
        .collect();
    let alg = Algebra {
        mode,
        labels,
        product,
        unit: El::basis([0]),
    };
    let coproduct = (0..d).map(|a| El::basis([a, a])).collect();
    let counit = vec![Scalar::one(); d];
    let antipode = Some((0..d).map(|a| El::basis([inv(a)])).collect());
    FinDimHopf {
        alg,
        coproduct,
        counit,
        antipode,
    }
}

/// The Hopf algebra of functions on the same group as [`group_algebra`],
/// on the basis of delta functions.
pub fn function_algebra(orders: &[usize], mode: Mode) -> FinDimHopf {
    let g = group_algebra(orders, mode);
    let mut k = g.dual();
    k.alg.labels = g.labels().iter().map(|l| format!("d({l})")).collect();
    k
}

fn group_label(e: &[usize], orders: &[usize]) -> String {
    let single = orders.len() == 1;
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            let g = if single {
                "g".to_string()
            } else {
                format!("g{i}")
            };
            if k == 1 {
                g
            } else {
                format!("{g}^{k}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// JSON form: a named basis with dense tables of scalar literals.
/// `product[a][b]` and `antipode[a]` are coordinate vectors, `coproduct[a]`
/// and `R` are square coefficient arrays over basis pairs.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HopfFile {
    pub coeff_mode: String,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub product: Vec<Vec<Vec<String>>>,
    pub coproduct: Vec<Vec<Vec<String>>>,
    pub counit: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none", rename = "R")]
    pub r: Option<Vec<Vec<String>>>,
}

pub(crate) fn vec_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

pub(crate) fn square_strings(e: &El, d: usize) -> Vec<Vec<String>> {
    (0..d)
        .map(|a| (0..d).map(|b| e.coeff(&[a, b]).to_string()).collect())
        .collect()
}

pub(crate) fn parse_vec(v: &[String], d: usize, mode: Mode, what: &str) -> Result<Vec<Scalar>> {
    if v.len() != d {
        return Err(invalid(format!(
            "{what}: expected {d} entries, found {}",
            v.len()
        )));
    }
    v.iter().map(|s| Ok(Scalar::parse(s, mode)?)).collect()
}

pub(crate) fn parse_square(v: &[Vec<String>], d: usize, mode: Mode, what: &str) -> Result<El> {
    if v.len() != d {
        return Err(invalid(format!(
            "{what}: expected {d} rows, found {}",
            v.len()
        )));
    }
    let mut e = El::zero();
    for (a, row) in v.iter().enumerate() {
        for (b, c) in parse_vec(row, d, mode, what)?.into_iter().enumerate() {
            e.add_term(vec![a, b], c);
        }
    }
    Ok(e)
}

impl HopfFile {
    pub fn from_parts(h: &FinDimHopf, r: Option<&El>) -> Self {
        let d = h.dim();
        HopfFile {
            coeff_mode: h.mode().to_string(),
            basis: h.labels().to_vec(),
            unit: vec_strings(&h.one().coords(d)),
            product: (0..d)
                .map(|a| {
                    (0..d)
                        .map(|b| vec_strings(&h.alg.mul_basis(a, b).coords(d)))
                        .collect()
                })
                .collect(),
            coproduct: h.coproduct.iter().map(|e| square_strings(e, d)).collect(),
            counit: vec_strings(&h.counit),
            antipode: h
                .antipode
                .as_ref()
                .map(|s| s.iter().map(|e| vec_strings(&e.coords(d))).collect()),
            r: r.map(|e| square_strings(e, d)),
        }
    }

    /// The Hopf algebra and, when present, the quasitriangular element.
    pub fn build(&self) -> Result<(FinDimHopf, Option<El>)> {
        let mode: Mode = self.coeff_mode.parse()?;
        let d = self.basis.len();
        let unit = El::from_coords(&parse_vec(&self.unit, d, mode, "unit")?);
        if self.product.len() != d {
            return Err(invalid(format!("product: expected {d} rows")));
        }
        let mut product = Vec::with_capacity(d * d);
        for row in &self.product {
            if row.len() != d {
                return Err(invalid(format!("product: expected {d} columns")));
            }
            for v in row {
                product.push(El::from_coords(&parse_vec(v, d, mode, "product")?));
            }
        }
        let alg = Algebra::new(mode, self.basis.clone(), product, unit)?;
        if self.coproduct.len() != d {
            return Err(invalid(format!("coproduct: expected {d} entries")));
        }
        let coproduct = self
            .coproduct
            .iter()
            .map(|v| parse_square(v, d, mode, "coproduct"))
            .collect::<Result<_>>()?;
        let counit = parse_vec(&self.counit, d, mode, "counit")?;
        let antipode = match &self.antipode {
            Some(s) if s.len() != d => {
                return Err(invalid(format!("antipode: expected {d} entries")))
            }
            Some(s) => Some(
                s.iter()
                    .map(|v| Ok(El::from_coords(&parse_vec(v, d, mode, "antipode")?)))
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        let h = FinDimHopf::new(alg, coproduct, counit, antipode)?;
        let r = self
            .r
            .as_ref()
            .map(|v| parse_square(v, d, mode, "R"))
            .transpose()?;
        Ok((h, r))
    }
}

/// A linear map between finite-dimensional spaces in JSON form:
/// `images[a]` is the coordinate vector of the image of basis element `a`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MapFile {
    pub coeff_mode: String,
    pub images: Vec<Vec<String>>,
}

impl MapFile {
    pub fn from_matrix(m: &Matrix, mode: Mode) -> Self {
        MapFile {
            coeff_mode: mode.to_string(),
            images: (0..m.cols()).map(|c| vec_strings(&m.col(c))).collect(),
        }
    }

    /// The matrix whose column `a` is the image of `e_a`.
    pub fn build(&self, target_dim: usize) -> Result<Matrix> {
        let mode: Mode = self.coeff_mode.parse()?;
        let cols = self
            .images
            .iter()
            .map(|v| parse_vec(v, target_dim, mode, "map image"))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_fn(target_dim, cols.len(), |r, c| {
            cols[c][r].clone()
        }))
    }
}

/// A left module in JSON form: `action[h][v]` is the coordinate vector of
/// `e_h ▷ e_v`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ActionFile {
    pub coeff_mode: String,
    pub basis: Vec<String>,
    pub action: Vec<Vec<Vec<String>>>,
}

impl ActionFile {
    pub fn from_action(a: &ModuleAction, mode: Mode) -> Self {
        let d = a.dim();
        ActionFile {
            coeff_mode: mode.to_string(),
            basis: a.labels().to_vec(),
            action: (0..a.dim_h())
                .map(|h| {
                    (0..d)
                        .map(|v| vec_strings(&a.act_basis(h, v).coords(d)))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn build(&self, dim_h: usize) -> Result<ModuleAction> {
        let mode: Mode = self.coeff_mode.parse()?;
        let d = self.basis.len();
        if self.action.len() != dim_h {
            return Err(invalid(format!(
                "action: expected {dim_h} rows, found {}",
                self.action.len()
            )));
        }
        let mut table = Vec::with_capacity(dim_h * d);
        for row in &self.action {
            if row.len() != d {
                return Err(invalid(format!("action: expected {d} columns")));
            }
            for v in row {
                table.push(El::from_coords(&parse_vec(v, d, mode, "action")?));
            }
        }
        ModuleAction::new(dim_h, self.basis.clone(), table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_algebras_pass() {
        assert!(hopf_verify(&group_algebra(&[2], Mode::QField)).passed);
        assert!(hopf_verify(&group_algebra(&[3], Mode::Cyclotomic(3))).passed);
        assert!(hopf_verify(&group_algebra(&[2, 2], Mode::QField)).passed);
        assert_eq!(
            group_algebra(&[3], Mode::QField).labels(),
            ["1", "g", "g^2"]
        );
    }

    #[test]
    fn corrupted_antipode_fails_at_antipode_law() {
        let h = group_algebra(&[2], Mode::QField);
        let h = h.with_antipode(Some(vec![El::basis([0]), El::basis([0])]));
        let rep = hopf_verify(&h);
        assert!(!rep.passed);
        let failing: Vec<&str> = rep.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failing, ["antipode_law"]);
    }

    #[test]
    fn dual_and_solved_antipode() {
        let h = group_algebra(&[3], Mode::QField);
        let k = h.dual();
        assert!(hopf_verify(&k).passed);
        assert_eq!(k.dual().algebra().product, h.algebra().product);
        let solved = h.clone().with_antipode(None).solve_antipode().unwrap();
        assert_eq!(Some(solved), h.antipode);
        assert!(hopf_verify(&function_algebra(&[2, 2], Mode::QField)).passed);
    }

    #[test]
    fn json_roundtrip() {
        let h = group_algebra(&[3], Mode::Cyclotomic(3));
        let text = serde_json::to_string(&h.to_file()).unwrap();
        let back: HopfFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.build().unwrap().0, h);
    }

    #[test]
    fn identity_is_a_bialgebra_map() {
        let h = group_algebra(&[2], Mode::QField);
        assert!(bialgebra_map_check(&h, &h, &Matrix::identity(2)).passed);
        let swap = Matrix::from_fn(2, 2, |r, c| {
            if r != c {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        assert!(!bialgebra_map_check(&h, &h, &swap).passed);
    }
}
