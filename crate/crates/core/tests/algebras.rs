use braidkit::bmatrix::BraidedMatrices;
use braidkit::frt::{DqtPairing, EvalMode, FrtBialgebra};
use braidkit::ncalg::{AlgebraFile, NCPoly, QuotientAlgebra, Word};
use braidkit::planes::{choose_rprime, BraidedPlane, Calculus, RPrimeChoice};
use braidkit::{Mode, RMatrix, Scalar};

const QF: Mode = Mode::QField;

fn q() -> Scalar {
    Scalar::q(QF)
}

fn hecke_plane(n: usize, choice: RPrimeChoice) -> BraidedPlane {
    let r = RMatrix::glq(n, QF).unwrap();
    let (rb, rp) = choose_rprime(&r, choice).unwrap();
    BraidedPlane::covector(&rb, &rp, 4).unwrap()
}

#[test]
fn quantum_plane_relations() {
    for n in [2, 3] {
        let plane = hecke_plane(n, RPrimeChoice::Hecke);
        let alg = plane.algebra();
        for i in 0..n as u16 {
            for j in 0..i {
                let lhs = alg.mul(&NCPoly::letter(i), &NCPoly::letter(j)).unwrap();
                let rhs = alg
                    .normal_form(&NCPoly::word(Word(vec![j, i])).scale(&q()))
                    .unwrap();
                assert_eq!(lhs, rhs, "n={n}: x{i} x{j}");
            }
        }
        assert!(plane.is_hopf());
    }
}

#[test]
fn both_normalizations_give_braided_hopf_algebras() {
    let a = hecke_plane(2, RPrimeChoice::Factor(0));
    let b = hecke_plane(2, RPrimeChoice::Factor(1));
    for p in [&a, &b] {
        assert!(p.is_hopf());
        assert!(p.verify(3).passed);
    }
    assert_ne!(a.algebra().rules()[0].rhs, b.algebra().rules()[0].rhs);
}

#[test]
fn free_plane_has_no_relations() {
    let plane = hecke_plane(2, RPrimeChoice::Free);
    assert!(plane.algebra().rules().is_empty());
    for d in 0..=4 {
        assert_eq!(plane.algebra().dim(d), 1 << d);
    }
}

/// `[m]_q = (1 - q^m) / (1 - q)`.
fn q_number(m: usize) -> Scalar {
    let one = Scalar::one();
    (&one - &Scalar::q_pow(QF, m as i64))
        .try_div(&(&one - &q()))
        .unwrap()
}

#[test]
fn braided_line_derivative_is_jackson() {
    let line = BraidedPlane::braided_line(QF, 8).unwrap();
    let d = Calculus::new(&line).unwrap();
    for m in 1..=7 {
        let got = d.partial(0, &NCPoly::word(Word(vec![0; m]))).unwrap();
        assert_eq!(
            got,
            NCPoly::term(q_number(m), Word(vec![0; m - 1])),
            "m={m}"
        );
    }
    let bi = line.bialgebra();
    assert_eq!(bi.counit, vec![Scalar::zero()]);
    assert_eq!(
        bi.antipode.as_ref().unwrap()[0],
        NCPoly::letter(0).scale(&-Scalar::one())
    );
}

#[test]
fn glq2_pairing_on_generators() {
    let r = RMatrix::glq(2, QF).unwrap();
    let frt = FrtBialgebra::new(&r, 3).unwrap();
    let p = DqtPairing::new(&r).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let a = frt.parse_word(&format!("t[{i},{j}]")).unwrap();
                    let b = frt.parse_word(&format!("t[{k},{l}]")).unwrap();
                    assert_eq!(&p.pair(EvalMode::Grid, &a, &b), r.get(i, j, k, l));
                }
            }
        }
    }
    assert!(frt.self_check().passed);
}

#[test]
fn braided_matrices_of_glq2() {
    let r = RMatrix::glq(2, QF).unwrap();
    let bm = BraidedMatrices::new(&r, 4).unwrap();
    assert_eq!(bm.algebra().ngens(), 4);
    assert!(bm.verify(2).passed);
    assert!(!bm.is_triangular());
    let chi = bm.chi_relations();
    assert!(chi.report.passed, "{}", chi.report);
}

#[test]
fn algebra_file_round_trip() {
    let plane = hecke_plane(2, RPrimeChoice::Hecke);
    let file = plane.algebra().to_file();
    let text = serde_json::to_string(&file).unwrap();
    let back: AlgebraFile = serde_json::from_str(&text).unwrap();
    let alg = QuotientAlgebra::from_file(&back).unwrap();
    for d in 0..=4 {
        assert_eq!(alg.dim(d), d + 1);
    }
}
