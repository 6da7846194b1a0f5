use braidkit::bmatrix::BraidedMatrices;
use braidkit::findim_hopf::{
    anyonic_dim, crossed_module_check, drinfeld_double, group_algebra, hopf_verify, qt_identities_report,
    module_braiding, nfold_module_algebra_check, qt_verify, zn_prime, El, FinDimHopf, GradedSpace,
    QT,
};
use braidkit::frt::{scaling_check, DqtPairing, EvalMode, FrtBialgebra};
use braidkit::ncalg::{NCPoly, QuotientAlgebra, Status, Word};
use braidkit::planes::{choose_rprime, BraidedPlane, Calculus, RPrimeChoice};
use braidkit::transmute::{
    anyonic_line, anyonic_version, bosonize, cocom_check, radford_decompose, transmute,
};
use braidkit::{Matrix, Mode, RMatrix, Scalar, VerificationReport};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Outcome = Result<(), String>;
type Criterion = (&'static str, Option<u64>, fn() -> Outcome);

const QF: Mode = Mode::QField;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn passed(what: &str, rep: &VerificationReport) -> Outcome {
    match rep.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!(
            "{what}: {} failed ({})",
            c.name,
            c.witness.clone().unwrap_or_default()
        )),
    }
}

fn cyc(n: usize) -> Mode {
    Mode::Cyclotomic(n as u32)
}

fn qybe_suite() -> Outcome {
    for n in [2, 3] {
        let r = ok(RMatrix::glq(n, QF))?;
        passed(&format!("glq({n})"), &r.qybe_check())?;
        let mut file = r.to_file();
        file.entries.insert("0,1,1,0".into(), "q".into());
        let bad = ok(RMatrix::from_file(&file))?.qybe_check();
        ensure!(!bad.passed, "mutated glq({n}) still satisfies the QYBE");
        ensure!(
            bad.failures().all(|c| c.witness.is_some()),
            "failure without witness"
        );
    }
    Ok(())
}

fn dualizability() -> Outcome {
    for n in [2, 3] {
        let r = ok(RMatrix::glq(n, QF))?;
        let rt = ok(r.second_inverse())?;
        passed("second inverse", &r.second_inverse_report(&rt))?;
        let id = Matrix::identity(n * n);
        ensure!(
            rt.t2().matrix() * r.t2().matrix() == id,
            "contraction identity fails for n={n}"
        );
        let db = ok(r.dual_braidings())?;
        passed("dual braidings", &db.report)?;
    }
    Ok(())
}

fn frt_pairing() -> Outcome {
    let r = ok(RMatrix::glq(2, QF))?;
    let frt = ok(FrtBialgebra::new(&r, 4))?;
    let pairing = ok(DqtPairing::new(&r))?;
    let words: Vec<Word> = (1..=2).flat_map(|d| Word::all(4, d)).collect();
    for a in &words {
        for b in &words {
            let g = pairing.pair(EvalMode::Grid, a, b);
            let rec = pairing.pair(EvalMode::Recursive, a, b);
            ensure!(
                g == rec,
                "pair({:?}, {:?}): grid {g}, recursive {rec}",
                a.0,
                b.0
            );
            let g = pairing.inverse_pair(EvalMode::Grid, a, b);
            let rec = pairing.inverse_pair(EvalMode::Recursive, a, b);
            ensure!(
                g == rec,
                "inverse pair({:?}, {:?}): grid {g}, recursive {rec}",
                a.0,
                b.0
            );
        }
    }
    passed("pairing", &pairing.verify(&frt, 2))?;
    passed("scaling", &ok(scaling_check(&r, &Scalar::q(QF), 2, 1))?)
}

fn jordanian() -> Matrix {
    let rows = [[1, 1, -1, 1], [0, 1, 0, 1], [0, 0, 1, -1], [0, 0, 0, 1]];
    Matrix::from_fn(4, 4, |r, c| Scalar::from_int(rows[r][c]))
}

fn braided_matrices() -> Outcome {
    let r = ok(RMatrix::glq(2, QF))?;
    let bm = ok(BraidedMatrices::new(&r, 4))?;
    let rep = bm.verify(2);
    passed("BM_q(2)", &rep)?;
    ensure!(
        rep.check("coproduct_respects_relations").is_some(),
        "coproduct check missing"
    );
    passed("descent", &bm.bialgebra().psi_descends(3))?;
    for rule in bm.algebra().rules() {
        ensure!(
            bm.rep_of(&rule.as_poly()).is_zero(),
            "canonical rep does not annihilate a relation"
        );
    }
    let jordanian = ok(RMatrix::from_matrix(2, QF, jordanian()))?;
    passed("Jordanian", &jordanian.qybe_check())?;
    let tri = ok(BraidedMatrices::new(&jordanian, 4))?;
    ensure!(
        tri.q_matrix() == Matrix::identity(4),
        "triangular R gives Q != id"
    );
    passed("triangular BM", &tri.verify(2))?;
    let frt = ok(FrtBialgebra::new(&r, 4))?;
    passed("transmutation", &bm.transmute_check(&frt, 2))
}

fn q_integer(m: usize) -> Scalar {
    (0..m).map(|k| Scalar::q_pow(QF, k as i64)).sum()
}

fn planes_and_calculus() -> Outcome {
    let r = ok(RMatrix::glq(2, QF))?;
    let (rb, rp) = ok(choose_rprime(&r, RPrimeChoice::Hecke))?;
    let plane = ok(BraidedPlane::covector(&rb, &rp, 6))?;
    let alg = plane.algebra();
    let x = |i: u16| NCPoly::letter(i);
    let lhs = ok(alg.mul(&x(1), &x(0)))?;
    let rhs = ok(alg.normal_form(&(&x(0) * &x(1)).scale(&Scalar::q(QF))))?;
    ensure!(lhs == rhs, "x1 x0 = {}", alg.display(&lhs));
    ensure!(
        alg.rules().len() == 1,
        "{} rules, expected one",
        alg.rules().len()
    );
    ensure!(
        plane.is_hopf(),
        "antipode missing although R21 R'12 = R'21 R12"
    );
    let rep = plane.verify(3);
    passed("plane", &rep)?;
    ensure!(
        rep.check("antipode_braided_antimultiplicative").is_some(),
        "antipode not checked"
    );
    let calc = ok(Calculus::new(&plane))?;
    passed("plane calculus", &calc.leibniz_check(4))?;

    let line = ok(BraidedPlane::braided_line(QF, 7))?;
    let d = ok(Calculus::new(&line))?;
    for m in 1..=6 {
        let xm = NCPoly::word(Word(vec![0; m]));
        let got = ok(d.partial(0, &xm))?;
        let want = NCPoly::term(q_integer(m), Word(vec![0; m - 1]));
        ensure!(got == want, "d(x^{m}) = {}", line.algebra().display(&got));
    }
    passed("line calculus", &d.leibniz_check(4))
}

fn superflip(v: &GradedSpace) -> Matrix {
    let d = v.dim();
    let mut m = Matrix::zeros(d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            let sign = if v.degree(a) * v.degree(b) % 2 == 1 {
                -1
            } else {
                1
            };
            m[(b * d + a, a * d + b)] = Scalar::from_int(sign);
        }
    }
    m
}

fn findim_suite() -> Outcome {
    for n in [2, 3, 4] {
        let (h, qt) = ok(zn_prime(n, cyc(n)))?;
        passed(&format!("Z_{n}'"), &qt_verify(&h, &qt))?;
        let rep = ok(qt_identities_report(&h, &qt))?;
        passed("identities", &rep)?;
        ensure!(
            rep.checks.len() == 6,
            "{} identities, expected six",
            rep.checks.len()
        );
        if n == 2 {
            ensure!(qt.u(&h) == h.basis(1), "u = {}", h.display(&qt.u(&h)));
        }
    }
    for n in [2, 3] {
        let (d, qt) = ok(drinfeld_double(&group_algebra(&[n], QF)))?;
        passed("double", &hopf_verify(&d))?;
        passed("double", &qt_verify(&d, &qt))?;
    }
    let (h, qt) = ok(zn_prime(2, cyc(2)))?;
    let v = GradedSpace::new(vec![1, 1]);
    let action = ok(v.module(cyc(2)))?;
    let (m, rep) = module_braiding(&h, &qt, &action, &action);
    passed("braiding", &rep)?;
    ensure!(m == superflip(&v), "Z_2' braiding is not the super flip");
    for dims in [vec![1, 1], vec![3, 1], vec![2, 5]] {
        let sdim = dims[0] as i64 - dims[1] as i64;
        let got = ok(anyonic_dim(&GradedSpace::new(dims.clone()), cyc(2)))?;
        ensure!(
            got == Scalar::from_int(sdim),
            "anyonic dim of {dims:?} is {got}"
        );
    }
    Ok(())
}

fn same_tables(a: &FinDimHopf, b: &FinDimHopf) -> bool {
    (0..a.dim()).all(|x| {
        a.coproduct_basis(x) == b.coproduct_basis(x)
            && a.antipode_basis(x) == b.antipode_basis(x)
            && a.counit_basis(x) == b.counit_basis(x)
            && (0..a.dim()).all(|y| a.algebra().mul_basis(x, y) == b.algebra().mul_basis(x, y))
    })
}

fn sweedler_r(h: &FinDimHopf) -> Result<QT, String> {
    let half = Scalar::from_ratio(1, 2);
    let mut r = El::zero();
    for (a, b, s) in [
        (0, 0, 1),
        (0, 1, 1),
        (1, 0, 1),
        (1, 1, -1),
        (2, 2, 1),
        (2, 3, 1),
        (3, 2, -1),
        (3, 3, 1),
    ] {
        r.add_term(vec![a, b], &half * &Scalar::from_int(s));
    }
    ok(QT::new(h, r))
}

fn transmutation() -> Outcome {
    for n in [2, 3] {
        let (h, qt) = ok(zn_prime(n, cyc(n)))?;
        let t = ok(transmute(&h, &qt, &h, Some(&qt), &Matrix::identity(n)))?;
        passed("transmutation", &t.report)?;
        ensure!(
            same_tables(&t.hopf, &h),
            "B(Z_{n}', Z_{n}') differs from Z_{n}'"
        );
        passed("cocommutativity", &cocom_check(&t))?;
    }
    let (d, qt) = ok(drinfeld_double(&group_algebra(&[2], QF)))?;
    let t = ok(transmute(&d, &qt, &d, Some(&qt), &Matrix::identity(4)))?;
    passed("double", &t.report)?;
    passed("double cocommutativity", &cocom_check(&t))?;

    for n in [2, 3] {
        let (z, zqt) = ok(zn_prime(n, cyc(n)))?;
        let any = ok(anyonic_version(&z, Some(&zqt), 1, n))?;
        let t = ok(transmute(&z, &zqt, &z, Some(&zqt), &any.embedding))?;
        ensure!(
            same_tables(&t.hopf, &any.hopf),
            "closed form differs for Z_{n}'"
        );
        ensure!(t.r == any.r, "braided R differs for Z_{n}'");

        let (_, _, line, action) = ok(anyonic_line(n, cyc(n)))?;
        let big = ok(bosonize(&z, &zqt, &line, &action))?;
        let big_qt = if n == 2 {
            Some(sweedler_r(&big)?)
        } else {
            None
        };
        let any = ok(anyonic_version(&big, big_qt.as_ref(), 1, n))?;
        let t = ok(transmute(&z, &zqt, &big, big_qt.as_ref(), &any.embedding))?;
        passed("anyonic transmutation", &t.report)?;
        ensure!(
            same_tables(&t.hopf, &any.hopf),
            "closed form differs on bos(Z_{n}', line)"
        );
        ensure!(t.r == any.r, "braided R differs on bos(Z_{n}', line)");
        if let Some(op) = &t.op_coproduct {
            ensure!(*op == any.op_coproduct, "opposite coproduct differs");
        }
    }
    Ok(())
}

fn bosonization_round_trip() -> Outcome {
    let (h, qt, line, action) = ok(anyonic_line(2, cyc(2)))?;
    let big = ok(bosonize(&h, &qt, &line, &action))?;
    ensure!(big.dim() == 4, "dimension {}", big.dim());
    passed("bosonization", &hopf_verify(&big))?;
    let one = Scalar::one;
    let p = Matrix::from_fn(2, 4, |r, c| {
        if c < 2 && r == c {
            one()
        } else {
            Scalar::zero()
        }
    });
    let rad = ok(radford_decompose(&big, &h, &p, &p.transpose()))?;
    passed("decomposition", &rad.report)?;
    ensure!(rad.b.dim() == 2, "recovered dimension {}", rad.b.dim());
    ensure!(
        same_tables(&rad.b, &line),
        "recovered tables differ from the line"
    );
    let same_action =
        (0..2).all(|a| (0..2).all(|v| rad.action.act_basis(a, v) == action.act_basis(a, v)));
    ensure!(same_action, "recovered action differs");
    passed(
        "crossed module",
        &crossed_module_check(&h, &rad.action, &rad.coaction),
    )
}

fn module_algebras() -> Outcome {
    let k2 = group_algebra(&[2], QF);
    let (d, _) = ok(drinfeld_double(&k2))?;
    for h in [&k2, &d] {
        for n in [2, 3] {
            passed(&format!("n={n}"), &ok(nfold_module_algebra_check(h, n))?)?;
        }
    }
    Ok(())
}

fn quadratic_and_complete(alg: &QuotientAlgebra) -> Outcome {
    ensure!(
        matches!(alg.status(), Status::Complete),
        "status {:?}",
        alg.status()
    );
    ensure!(
        alg.rules().iter().all(|r| r.lead.len() == 2),
        "rules above degree 2"
    );
    passed("completion", &alg.completion_check(4))
}

fn rewriting_health() -> Outcome {
    let r = ok(RMatrix::glq(2, QF))?;
    let (rb, rp) = ok(choose_rprime(&r, RPrimeChoice::Hecke))?;
    let plane = ok(BraidedPlane::covector(&rb, &rp, 4))?;
    quadratic_and_complete(plane.algebra())?;
    let bm = ok(BraidedMatrices::new(&r, 4))?;
    quadratic_and_complete(bm.algebra())?;
    for d in 0..=6 {
        let got = plane.algebra().dim(d);
        ensure!(got == d + 1, "degree {d}: {got} normal words");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("QYBE suite", Some(5), qybe_suite),
        ("dualizability", Some(5), dualizability),
        ("FRT pairing", Some(60), frt_pairing),
        ("braided matrices", Some(60), braided_matrices),
        ("planes and calculus", Some(60), planes_and_calculus),
        ("finite-dimensional suite", Some(30), findim_suite),
        ("transmutation", Some(30), transmutation),
        (
            "bosonization/Radford round trip",
            Some(30),
            bosonization_round_trip,
        ),
        ("n-fold module algebras", Some(30), module_algebras),
        ("rewriting health", None, rewriting_health),
    ];
    let mut failures = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = f();
        let elapsed = start.elapsed();
        if let Some(s) = limit {
            if outcome.is_ok() && elapsed > Duration::from_secs(*s) {
                outcome = Err(format!("exceeded {s} s"));
            }
        }
        let budget = limit.map(|s| format!(", limit {s} s")).unwrap_or_default();
        match outcome {
            Ok(()) => println!(
                "criterion {:>2} PASS  {name} ({:.2} s{budget})",
                i + 1,
                elapsed.as_secs_f64()
            ),
            Err(e) => {
                failures += 1;
                println!(
                    "criterion {:>2} FAIL  {name} ({:.2} s{budget}): {e}",
                    i + 1,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
