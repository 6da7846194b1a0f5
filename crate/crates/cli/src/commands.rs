use crate::output::{matrix_json, usage, CliResult, Outcome};
use crate::{BMatrixOp, Cli, Command, FrtOp, HopfOp, MakeKind, PlaneArgs, PlaneOp, RMatrixOp};
use braidkit::bmatrix::BraidedMatrices;
use braidkit::findim_hopf::{
    anyonic_dim, drinfeld_double, hopf_verify, qt_identities_report, module_braiding, qt_verify,
    zn_prime, ActionFile, DualQT, El, FinDimHopf, GradedSpace, HopfFile, MapFile, QT,
};
use braidkit::frt::{parse_monomial, DqtPairing, EvalMode, FrtBialgebra};
use braidkit::ncalg::QuotientAlgebra;
use braidkit::planes::{choose_rprime, BraidedPlane, Calculus, RPrimeChoice};
use braidkit::transmute::{
    anyonic_line, bosonize, cobosonize, cocom_check, radford_decompose, transmute, CoactionFile,
};
use braidkit::{Matrix, Mode, RMatrix, Scalar, VerificationReport};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use std::path::Path;

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let ctx = Ctx {
        coeff: cli.coeff,
        degree: cli.degree,
    };
    match &cli.command {
        Command::Rmatrix { op } => ctx.rmatrix(op),
        Command::Frt { r, op } => ctx.frt(&ctx.load_r(r)?, op),
        Command::Bmatrix { r, op } => ctx.bmatrix(&ctx.load_r(r)?, op),
        Command::Plane(args) => ctx.plane(args),
        Command::Hopf { op } => ctx.hopf(op),
        Command::Transmute { h1, h, f } => ctx.transmute(h1, h, f),
        Command::Bosonize { h, b, action } => {
            let (h, qt) = ctx.load_qt_hopf(h)?;
            let (b, _) = ctx.load_hopf(b)?;
            let action: ActionFile = read_json(action)?;
            let action = action.build(h.dim())?;
            let out = bosonize(&h, &qt, &b, &action)?;
            Ok(Outcome::new(
                hopf_verify(&out),
                json!(HopfFile::from_parts(&out, None)),
            ))
        }
        Command::Cobosonize { a, b, coaction } => {
            let (a, r) = ctx.load_hopf(a)?;
            let r = r.ok_or_else(|| usage("A must carry the functional in its `R` field"))?;
            let d = a.dim();
            let r = DualQT {
                values: Matrix::from_fn(d, d, |x, y| r.coeff(&[x, y])),
            };
            let (b, _) = ctx.load_hopf(b)?;
            let co: CoactionFile = read_json(coaction)?;
            let co = co.build(a.dim())?;
            let out = cobosonize(&a, &r, &b, &co)?;
            Ok(Outcome::new(
                hopf_verify(&out),
                json!(HopfFile::from_parts(&out, None)),
            ))
        }
        Command::Radford { h1, h, p, i } => {
            let (h1, _) = ctx.load_hopf(h1)?;
            let (h, _) = ctx.load_hopf(h)?;
            let pf: MapFile = read_json(p)?;
            let if_: MapFile = read_json(i)?;
            let p = pf.build(h.dim())?;
            let i = if_.build(h1.dim())?;
            let dec = radford_decompose(&h1, &h, &p, &i)?;
            let mode = h1.mode();
            Ok(Outcome::new(
                dec.report,
                json!({
                    "b": HopfFile::from_parts(&dec.b, None),
                    "embedding": MapFile::from_matrix(&dec.embedding, mode),
                    "action": ActionFile::from_action(&dec.action, mode),
                    "biproduct": HopfFile::from_parts(&dec.biproduct, None),
                }),
            ))
        }
    }
}

/// Reads a file, accepting either the bare object or a report whose
/// `result` holds it.
fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let mut v: Value =
        serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    if let Some(obj) = v.as_object_mut() {
        if obj.contains_key("invocation") {
            if let Some(r) = obj.remove("result") {
                v = r;
            }
        }
    }
    serde_json::from_value(v).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn polys(alg: &QuotientAlgebra, ps: &[braidkit::ncalg::NCPoly]) -> Vec<String> {
    ps.iter().map(|p| alg.display(p)).collect()
}

fn rules_json(alg: &QuotientAlgebra) -> Value {
    let names = alg.names();
    let rules: Vec<Value> = alg
        .rules()
        .iter()
        .map(|r| json!({"lead": r.lead.display(names), "rhs": r.rhs.display(names)}))
        .collect();
    json!({
        "generators": names,
        "coeff_mode": alg.mode().to_string(),
        "status": format!("{:?}", alg.status()),
        "rules": rules,
    })
}

fn square_json(e: &El, d: usize) -> Value {
    let rows: Vec<Vec<String>> = (0..d)
        .map(|a| (0..d).map(|b| e.coeff(&[a, b]).to_string()).collect())
        .collect();
    json!(rows)
}

struct Ctx {
    coeff: Option<Mode>,
    degree: usize,
}

impl Ctx {
    fn mode_or(&self, default: Mode) -> Mode {
        self.coeff.unwrap_or(default)
    }

    fn bound(&self) -> usize {
        (self.degree + 1).max(4)
    }

    fn same_mode(&self, path: &Path, mode: Mode) -> CliResult<()> {
        match self.coeff {
            Some(m) if m != mode => Err(usage(format!(
                "{} uses coefficients {mode}, but --coeff is {m}",
                path.display()
            ))),
            _ => Ok(()),
        }
    }

    fn load_r(&self, path: &Path) -> CliResult<RMatrix> {
        let text =
            std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let r = match RMatrix::from_json(&text) {
            Ok(r) => r,
            Err(_) => RMatrix::from_file(&read_json(path)?)?,
        };
        self.same_mode(path, r.mode())?;
        Ok(r)
    }

    fn load_hopf(&self, path: &Path) -> CliResult<(FinDimHopf, Option<El>)> {
        let file: HopfFile = read_json(path)?;
        let (h, r) = file.build()?;
        self.same_mode(path, h.mode())?;
        Ok((h, r))
    }

    fn load_qt_hopf(&self, path: &Path) -> CliResult<(FinDimHopf, QT)> {
        let (h, r) = self.load_hopf(path)?;
        let r = r.ok_or_else(|| usage(format!("{} has no `R` field", path.display())))?;
        let qt = QT::new(&h, r)?;
        Ok((h, qt))
    }

    fn rmatrix(&self, op: &RMatrixOp) -> CliResult<Outcome> {
        match op {
            RMatrixOp::CheckQybe { file } => {
                let r = self.load_r(file)?;
                Ok(Outcome::new(r.qybe_check(), Value::Null))
            }
            RMatrixOp::Info { file } => {
                let r = self.load_r(file)?;
                let mut rep = VerificationReport::new();
                rep.absorb("", r.qybe_check());
                let inv = r.inverse();
                let triangular = inv.as_ref().map(|i| i.matrix() == r.r21().matrix());
                let minpoly = match r.pr_minimal_polynomial() {
                    Ok(m) => json!({
                        "coeffs": m.coeffs.iter().map(Scalar::to_string).collect::<Vec<_>>(),
                        "roots": m.roots.iter().map(Scalar::to_string).collect::<Vec<_>>(),
                    }),
                    Err(e) => json!({"error": e.to_string()}),
                };
                Ok(Outcome::new(
                    rep,
                    json!({
                        "n": r.n(),
                        "coeff_mode": r.mode().to_string(),
                        "invertible": inv.is_some(),
                        "triangular": triangular.unwrap_or(false),
                        "dualizable": r.second_inverse().is_ok(),
                        "pr_minimal_polynomial": minpoly,
                    }),
                ))
            }
            RMatrixOp::SecondInverse { file } => {
                let r = self.load_r(file)?;
                let rt = r.second_inverse()?;
                let mut rep = VerificationReport::new();
                rep.absorb("second_inverse", r.second_inverse_report(&rt));
                let db = r.dual_braidings()?;
                rep.absorb("dual_braidings", db.report.clone());
                Ok(Outcome::new(
                    rep,
                    json!({
                        "second_inverse": rt.to_file(),
                        "v_invertible": db.v_invertible,
                        "v": matrix_json(&r.v_matrix(&rt)),
                    }),
                ))
            }
            RMatrixOp::Rprime { file, index, alpha } => {
                let r = self.load_r(file)?;
                let alpha = alpha
                    .as_deref()
                    .map(|s| Scalar::parse(s, r.mode()))
                    .transpose()?;
                let rp = r.derive_rprime(*index, alpha)?;
                Ok(Outcome::new(
                    rp.report,
                    json!({
                        "rprime": rp.rprime.to_file(),
                        "rescaled": rp.rescaled.to_file(),
                        "lambda": rp.lambda.to_string(),
                        "alpha": rp.alpha.to_string(),
                    }),
                ))
            }
            RMatrixOp::Glq { n } => {
                let r = RMatrix::glq(*n, self.mode_or(Mode::QField))?;
                Ok(Outcome::new(r.qybe_check(), json!(r.to_file())))
            }
        }
    }

    fn frt(&self, r: &RMatrix, op: &FrtOp) -> CliResult<Outcome> {
        let frt = FrtBialgebra::new(r, self.bound())?;
        match op {
            FrtOp::Pair { a, b } => {
                let pairing = DqtPairing::new(r)?;
                let (wa, wb) = (frt.parse_word(a)?, frt.parse_word(b)?);
                let grid = pairing.pair(EvalMode::Grid, &wa, &wb);
                let rec = pairing.pair(EvalMode::Recursive, &wa, &wb);
                let mut rep = VerificationReport::new();
                rep.push(
                    "grid_matches_recursive",
                    (grid != rec).then(|| format!("grid {grid}, recursive {rec}")),
                );
                Ok(Outcome::new(rep, json!({"value": grid.to_string()})))
            }
            FrtOp::Verify => {
                let mut rep = VerificationReport::new();
                rep.absorb("frt", frt.self_check());
                rep.absorb(
                    "pairing",
                    DqtPairing::new(r)?.verify(&frt, self.degree.min(2)),
                );
                Ok(Outcome::new(rep, rules_json(frt.algebra())))
            }
        }
    }

    fn bmatrix(&self, r: &RMatrix, op: &BMatrixOp) -> CliResult<Outcome> {
        let bm = BraidedMatrices::new(r, self.bound())?;
        let alg = bm.algebra();
        match op {
            BMatrixOp::Relations => Ok(Outcome::result(rules_json(alg))),
            BMatrixOp::Verify => Ok(Outcome::new(bm.verify(self.degree), Value::Null)),
            BMatrixOp::Rep { word } => {
                let w = parse_monomial(alg, word)?;
                Ok(Outcome::result(matrix_json(&bm.canonical_rep(&w))))
            }
            BMatrixOp::Transmute { word } => {
                let frt = FrtBialgebra::new(r, self.bound())?;
                match word {
                    Some(word) => {
                        let w = frt.parse_word(word)?;
                        let p = bm.transmute_monomial(&frt, &w)?;
                        Ok(Outcome::result(json!(alg.display(&p))))
                    }
                    None => Ok(Outcome::new(
                        bm.transmute_check(&frt, self.degree),
                        Value::Null,
                    )),
                }
            }
            BMatrixOp::Chi => {
                let chi = bm.chi_relations();
                let names: &[String] = &chi.names;
                let relations: Vec<String> =
                    chi.relations.iter().map(|p| p.display(names)).collect();
                let coproduct: Vec<String> = chi
                    .coproduct
                    .iter()
                    .map(|t| t.display(&[names, names]))
                    .collect();
                Ok(Outcome::new(
                    chi.report,
                    json!({"generators": chi.names, "relations": relations, "coproduct": coproduct}),
                ))
            }
        }
    }

    fn plane(&self, args: &PlaneArgs) -> CliResult<Outcome> {
        let plane = match &args.r {
            None => BraidedPlane::braided_line(self.mode_or(Mode::QField), self.bound().max(7))?,
            Some(path) => {
                let r = self.load_r(path)?;
                let choice: RPrimeChoice = args.rprime.parse()?;
                let (rb, rp) = choose_rprime(&r, choice)?;
                if args.vector {
                    BraidedPlane::vector(&rb, &rp, self.bound())?
                } else {
                    BraidedPlane::covector(&rb, &rp, self.bound())?
                }
            }
        };
        let alg = plane.algebra();
        match &args.op {
            PlaneOp::Make => {
                let bi = plane.bialgebra();
                let names = alg.names();
                let mut out = rules_json(alg);
                out["coproduct"] = json!(bi
                    .coproduct
                    .iter()
                    .map(|t| t.display(&[names]))
                    .collect::<Vec<_>>());
                out["braiding"] = json!(bi.psi.to_file(names, names));
                out["antipode"] = json!(bi.antipode.as_ref().map(|s| polys(alg, s)));
                out["hopf"] = json!(plane.is_hopf());
                Ok(Outcome::result(out))
            }
            PlaneOp::Verify => Ok(Outcome::new(plane.verify(self.degree), Value::Null)),
            PlaneOp::Diff { i, poly } => {
                if *i >= alg.ngens() {
                    return Err(usage(format!("--i must be below {}", alg.ngens())));
                }
                let p = alg.parse_poly(poly)?;
                let d = Calculus::new(&plane)?.partial(*i, &p)?;
                Ok(Outcome::result(json!(alg.display(&d))))
            }
            PlaneOp::Leibniz => Ok(Outcome::new(
                Calculus::new(&plane)?.leibniz_check(self.degree + 1),
                Value::Null,
            )),
        }
    }

    fn hopf(&self, op: &HopfOp) -> CliResult<Outcome> {
        match op {
            HopfOp::Make { kind } => match kind {
                MakeKind::ZnPrime { n } => {
                    let (h, qt) = zn_prime(*n, self.mode_or(Mode::Cyclotomic(*n as u32)))?;
                    let mut rep = hopf_verify(&h);
                    rep.absorb("qt", qt_verify(&h, &qt));
                    Ok(Outcome::new(
                        rep,
                        json!(HopfFile::from_parts(&h, Some(&qt.r))),
                    ))
                }
                MakeKind::AnyonicLine { n } => {
                    let mode = self.mode_or(Mode::Cyclotomic(*n as u32));
                    let (h, qt, b, action) = anyonic_line(*n, mode)?;
                    Ok(Outcome::result(json!({
                        "background": HopfFile::from_parts(&h, Some(&qt.r)),
                        "line": HopfFile::from_parts(&b, None),
                        "action": ActionFile::from_action(&action, mode),
                    })))
                }
            },
            HopfOp::Verify { file } => {
                let (h, r) = self.load_hopf(file)?;
                let mut rep = hopf_verify(&h);
                if let Some(r) = r {
                    rep.absorb("qt", qt_verify(&h, &QT::new(&h, r)?));
                }
                Ok(Outcome::new(rep, Value::Null))
            }
            HopfOp::Lemma16 { file } => {
                let (h, qt) = self.load_qt_hopf(file)?;
                Ok(Outcome::new(qt_identities_report(&h, &qt)?, Value::Null))
            }
            HopfOp::Double { file } => {
                let (h, _) = self.load_hopf(file)?;
                let (d, qt) = drinfeld_double(&h)?;
                let mut rep = hopf_verify(&d);
                rep.absorb("qt", qt_verify(&d, &qt));
                Ok(Outcome::new(
                    rep,
                    json!(HopfFile::from_parts(&d, Some(&qt.r))),
                ))
            }
            HopfOp::Braiding { grading, file } => {
                let n = grading.len();
                if n == 0 {
                    return Err(usage("--grading needs at least one dimension"));
                }
                let (h, qt) = match file {
                    Some(f) => self.load_qt_hopf(f)?,
                    None => zn_prime(n, self.mode_or(Mode::Cyclotomic(n as u32)))?,
                };
                if h.dim() != n {
                    return Err(usage(format!(
                        "the grading has {n} parts but H has dimension {}",
                        h.dim()
                    )));
                }
                let v = GradedSpace::new(grading.clone()).module(h.mode())?;
                let (m, rep) = module_braiding(&h, &qt, &v, &v);
                Ok(Outcome::new(
                    rep,
                    json!({"basis": v.labels(), "matrix": matrix_json(&m)}),
                ))
            }
            HopfOp::AnyonicDim { grading } => {
                let n = grading.len();
                if n == 0 {
                    return Err(usage("--grading needs at least one dimension"));
                }
                let d = anyonic_dim(
                    &GradedSpace::new(grading.clone()),
                    self.mode_or(Mode::Cyclotomic(n as u32)),
                )?;
                Ok(Outcome::result(json!(d.to_string())))
            }
        }
    }

    fn transmute(&self, h1: &Path, h: &Path, f: &Path) -> CliResult<Outcome> {
        let (h1, qt1) = self.load_qt_hopf(h1)?;
        let (h, r) = self.load_hopf(h)?;
        let qt = r.map(|r| QT::new(&h, r)).transpose()?;
        let fm: MapFile = read_json(f)?;
        let f = fm.build(h1.dim())?;
        if f.cols() != h.dim() {
            return Err(usage(format!("f must have {} images", h.dim())));
        }
        let t = transmute(&h1, &qt1, &h, qt.as_ref(), &f)?;
        let mut rep = t.report.clone();
        if f == Matrix::identity(h.dim()) {
            rep.absorb("cocom", cocom_check(&t));
        }
        let d = t.dim();
        Ok(Outcome::new(
            rep,
            json!({
                "braided": HopfFile::from_parts(&t.hopf, t.r.as_ref()),
                "action": ActionFile::from_action(&t.action, h1.mode()),
                "op_coproduct": t.op_coproduct.as_ref().map(|v| v.iter().map(|e| square_json(e, d)).collect::<Vec<_>>()),
                "braiding": matrix_json(&t.braiding.matrix()),
            }),
        ))
    }
}
