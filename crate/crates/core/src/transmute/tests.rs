use super::*;
use crate::findim_hopf::{
    drinfeld_double, group_algebra, hopf_verify, qt_verify, zn_prime, DualQT,
};

fn cyc(n: u32) -> Mode {
    Mode::Cyclotomic(n)
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn half(n: i64) -> Scalar {
    Scalar::from_ratio(n, 2)
}

fn sweedler() -> (FinDimHopf, QT, FinDimHopf) {
    let (h, qt, b, action) = anyonic_line(2, cyc(2)).unwrap();
    let bos = bosonize(&h, &qt, &b, &action).unwrap();
    (h, qt, bos)
}

/// The one-parameter family of quasitriangular structures on the
/// 4-dimensional algebra with basis `1, g, x, xg` (indices 0..4).
fn sweedler_r(alpha: i64) -> El {
    let mut r = El::zero();
    for (k, c) in [([0, 0], 1), ([0, 1], 1), ([1, 0], 1), ([1, 1], -1)] {
        r.add_term(k.to_vec(), half(c));
    }
    // x⊗x + x⊗xg − xg⊗x + xg⊗xg
    for (k, c) in [([2, 2], 1), ([2, 3], 1), ([3, 2], -1), ([3, 3], 1)] {
        r.add_term(k.to_vec(), half(c * alpha));
    }
    r
}

#[test]
fn commutative_cocommutative_transmutes_to_itself() {
    for n in [2usize, 3] {
        let (h, qt) = zn_prime(n, cyc(n as u32)).unwrap();
        let t = transmute(&h, &qt, &h, Some(&qt), &Matrix::identity(n)).unwrap();
        assert!(t.report.passed, "{}", t.report);
        for b in 0..n {
            assert_eq!(t.hopf.coproduct_basis(b), h.coproduct_basis(b));
            assert_eq!(t.hopf.antipode_basis(b), h.antipode_basis(b));
        }
        assert!(cocom_check(&t).passed);
        assert_eq!(t.r.as_ref().unwrap(), &h.unit_n(2));
    }
}

#[test]
fn double_transmutes_cocommutatively() {
    let (d, qt) = drinfeld_double(&group_algebra(&[2], Mode::QField)).unwrap();
    let t = transmute(&d, &qt, &d, Some(&qt), &Matrix::identity(4)).unwrap();
    assert!(t.report.passed, "{}", t.report);
    let c = cocom_check(&t);
    assert!(c.passed, "{c}");
    assert_eq!(c.check("braided_r_trivial").unwrap().witness, None);
}

#[test]
fn non_map_is_rejected() {
    let (h, qt) = zn_prime(2, cyc(2)).unwrap();
    let mut f = Matrix::identity(2);
    f[(0, 1)] = s(1);
    assert!(matches!(
        transmute(&h, &qt, &h, None, &f),
        Err(Error::NotABialgebraMap(_))
    ));
}

#[test]
fn sweedler_family_is_quasitriangular() {
    let (_, _, h4) = sweedler();
    assert_eq!(h4.labels(), ["1⊗1", "1⊗g", "x⊗1", "x⊗g"]);
    for alpha in [0, 1, 3] {
        let qt = QT::new(&h4, sweedler_r(alpha)).unwrap();
        let rep = qt_verify(&h4, &qt);
        assert!(rep.passed, "alpha={alpha}: {rep}");
    }
}

#[test]
fn anyonic_closed_form_matches_transmutation() {
    let (z, zqt, h4) = sweedler();
    let qt = QT::new(&h4, sweedler_r(1)).unwrap();
    let any = anyonic_version(&h4, Some(&qt), 1, 2).unwrap();
    assert_eq!(any.degrees, vec![0, 0, 1, 1]);
    let t = transmute(&z, &zqt, &h4, Some(&qt), &any.embedding).unwrap();
    assert!(t.report.passed, "{}", t.report);
    for b in 0..4 {
        assert_eq!(t.hopf.coproduct_basis(b), any.hopf.coproduct_basis(b));
        assert_eq!(t.hopf.antipode_basis(b), any.hopf.antipode_basis(b));
        assert_eq!(&t.op_coproduct.as_ref().unwrap()[b], &any.op_coproduct[b]);
    }
    assert_eq!(t.r, any.r);
}

#[test]
fn anyonic_taft_algebra() {
    let (h, qt, b, action) = anyonic_line(3, cyc(3)).unwrap();
    let taft = bosonize(&h, &qt, &b, &action).unwrap();
    assert_eq!(taft.dim(), 9);
    let any = anyonic_version(&taft, None, 1, 3).unwrap();
    let t = transmute(&h, &qt, &taft, None, &any.embedding).unwrap();
    assert!(t.report.passed, "{}", t.report);
    assert!(t.r.is_none() && t.op_coproduct.is_none());
    for x in 0..9 {
        assert_eq!(t.hopf.coproduct_basis(x), any.hopf.coproduct_basis(x));
        assert_eq!(t.hopf.antipode_basis(x), any.hopf.antipode_basis(x));
    }
}

#[test]
fn inhomogeneous_basis_is_rejected() {
    let (_, _, h4) = sweedler();
    assert!(anyonic_version(&h4, None, 2, 2).is_err());
}

#[test]
fn super_line_bosonizes_to_sweedler() {
    let (_, _, h4) = sweedler();
    assert!(hopf_verify(&h4).passed);
    let (g, x) = (h4.basis(1), h4.basis(2));
    assert_eq!(h4.mul(&g, &g), *h4.one());
    assert_eq!(h4.mul(&g, &x), -&h4.mul(&x, &g));
    assert_eq!(h4.mul(&x, &x), El::zero());
    assert_eq!(h4.delta(&x), &x.tensor(h4.one()) + &g.tensor(&x));
}

#[test]
fn trivial_braided_group_bosonizes_to_background() {
    let (h, qt) = zn_prime(3, cyc(3)).unwrap();
    let (_, _, k, _) = anyonic_line(1, cyc(3)).unwrap();
    let action = ModuleAction::trivial(&h, k.labels().to_vec());
    let out = bosonize(&h, &qt, &k, &action).unwrap();
    assert_eq!(out.dim(), 3);
    for a in 0..3 {
        for b in 0..3 {
            assert_eq!(out.algebra().mul_basis(a, b), h.algebra().mul_basis(a, b));
        }
        assert_eq!(out.coproduct_basis(a), h.coproduct_basis(a));
    }
}

#[test]
fn corrupted_line_is_rejected() {
    let (h, qt, b, action) = anyonic_line(2, cyc(2)).unwrap();
    let mut cop: Vec<El> = (0..2).map(|k| b.coproduct_basis(k).clone()).collect();
    cop[1] = El::basis([1, 0]);
    let counit = (0..2).map(|k| b.counit_basis(k).clone()).collect();
    let bad = FinDimHopf::new(b.algebra().clone(), cop, counit, None).unwrap();
    assert!(matches!(
        bosonize(&h, &qt, &bad, &action),
        Err(Error::InputNotBraidedHopf(_))
    ));
}

#[test]
fn radford_recovers_the_line() {
    let (z, _, h4) = sweedler();
    let p = Matrix::from_fn(2, 4, |r, c| if c < 2 && r == c { s(1) } else { s(0) });
    let i = p.transpose();
    let rad = radford_decompose(&h4, &z, &p, &i).unwrap();
    assert!(rad.report.passed, "{}", rad.report);
    assert_eq!(rad.b.labels(), ["1⊗1", "x⊗1"]);
    let (_, _, line, _) = anyonic_line(2, cyc(2)).unwrap();
    for a in 0..2 {
        for b in 0..2 {
            assert_eq!(
                rad.b.algebra().mul_basis(a, b),
                line.algebra().mul_basis(a, b)
            );
        }
        assert_eq!(rad.b.coproduct_basis(a), line.coproduct_basis(a));
        assert_eq!(rad.b.antipode_basis(a), line.antipode_basis(a));
    }
    assert_eq!(rad.action.act_basis(1, 1), &El::term(s(-1), [1]));
}

#[test]
fn radford_of_taft() {
    let (h, qt, b, action) = anyonic_line(3, cyc(3)).unwrap();
    let taft = bosonize(&h, &qt, &b, &action).unwrap();
    let p = Matrix::from_fn(3, 9, |r, c| if c < 3 && r == c { s(1) } else { s(0) });
    let rad = radford_decompose(&taft, &h, &p, &p.transpose()).unwrap();
    assert!(rad.report.passed, "{}", rad.report);
    assert_eq!(rad.b.dim(), 3);
}

#[test]
fn radford_trivial_and_errors() {
    let (h, _) = zn_prime(2, cyc(2)).unwrap();
    let id = Matrix::identity(2);
    let rad = radford_decompose(&h, &h, &id, &id).unwrap();
    assert_eq!(rad.b.dim(), 1);
    assert!(rad.report.passed, "{}", rad.report);

    let (z, _, h4) = sweedler();
    let p = Matrix::from_fn(2, 4, |r, c| if c < 2 && r == c { s(1) } else { s(0) });
    let mut i = p.transpose();
    i[(0, 1)] = s(1);
    i[(1, 1)] = s(0);
    assert!(radford_decompose(&h4, &z, &p, &i).is_err());
    let g = group_algebra(&[2], cyc(2));
    let to_one = Matrix::from_fn(2, 2, |r, _| if r == 0 { s(1) } else { s(0) });
    assert!(matches!(
        radford_decompose(&g, &g, &to_one, &id),
        Err(Error::NotAProjection(_))
    ));
    let doubled = id.scale(&s(2));
    assert!(matches!(
        radford_decompose(&g, &g, &doubled, &id),
        Err(Error::NotABialgebraMap(_))
    ));
}

#[test]
fn cotransmute_trivial_and_bicharacter() {
    let (a, r, _, _) = comodule_anyonic_line(2, cyc(2)).unwrap();
    let t = cotransmute(&a, &r).unwrap();
    assert!(t.report.passed, "{}", t.report);
    for x in 0..2 {
        for y in 0..2 {
            assert_eq!(
                t.hopf.algebra().mul_basis(x, y),
                a.algebra().mul_basis(x, y)
            );
        }
    }
    let ones = DualQT {
        values: Matrix::from_fn(3, 3, |_, _| s(1)),
    };
    let g3 = group_algebra(&[3], cyc(3));
    let t = cotransmute(&g3, &ones).unwrap();
    assert!(t.report.passed, "{}", t.report);
}

#[test]
fn cotransmuted_dual_is_transposed_transmutation() {
    let (h, qt) = zn_prime(2, cyc(2)).unwrap();
    let t = transmute(&h, &qt, &h, Some(&qt), &Matrix::identity(2)).unwrap();
    let (a, r) = DualQT::from_qt(&h, &qt);
    let c = cotransmute(&a, &r).unwrap();
    assert!(c.report.passed, "{}", c.report);
    for x in 0..2 {
        for y in 0..2 {
            for z in 0..2 {
                assert_eq!(
                    c.hopf.algebra().mul_basis(x, y).coeff(&[z]),
                    t.hopf.coproduct_basis(z).coeff(&[x, y])
                );
            }
        }
    }
}

#[test]
fn cotransmute_of_dual_sweedler() {
    let (_, _, h4) = sweedler();
    let qt = QT::new(&h4, sweedler_r(1)).unwrap();
    let (a, r) = DualQT::from_qt(&h4, &qt);
    let c = cotransmute(&a, &r).unwrap();
    assert!(c.report.passed, "{}", c.report);
}

#[test]
fn cobosonize_super_line() {
    let (a, r, b, co) = comodule_anyonic_line(2, cyc(2)).unwrap();
    let out = cobosonize(&a, &r, &b, &co).unwrap();
    assert_eq!(out.dim(), 4);
    let (_, _, h4) = sweedler();
    let dual = h4.dual();
    assert_eq!(out.dim(), dual.dim());
    let cocommutative =
        |h: &FinDimHopf| (0..h.dim()).all(|x| h.coproduct_basis(x).flip() == *h.coproduct_basis(x));
    assert!(!cocommutative(&out));

    let trivial = RightCoaction::trivial(&a, 1);
    let (_, _, k, _) = anyonic_line(1, cyc(2)).unwrap();
    assert_eq!(cobosonize(&a, &r, &k, &trivial).unwrap().dim(), 2);

    let bad = RightCoaction::new(2, vec![El::basis([0, 0]), El::basis([1, 0])]).unwrap();
    assert!(matches!(
        cobosonize(&a, &r, &b, &bad),
        Err(Error::InputNotBraidedHopf(_))
    ));
}

#[test]
fn cobosonize_taft_dual() {
    let (a, r, b, co) = comodule_anyonic_line(3, cyc(3)).unwrap();
    let out = cobosonize(&a, &r, &b, &co).unwrap();
    assert_eq!(out.dim(), 9);
}

#[test]
fn theta_isomorphism() {
    let (h, qt) = zn_prime(2, cyc(2)).unwrap();
    let adj = ModuleAction::adjoint(&h).unwrap();
    assert!(theta_iso_check(&h, &qt, h.algebra(), &adj).unwrap().passed);

    let (_, _, h4) = sweedler();
    let qt = QT::new(&h4, sweedler_r(1)).unwrap();
    let adj = ModuleAction::adjoint(&h4).unwrap();
    let rep = theta_iso_check(&h4, &qt, h4.algebra(), &adj).unwrap();
    assert!(rep.passed, "{rep}");
    let trivial = QT::trivial(&h4);
    assert!(
        theta_iso_check(&h4, &trivial, h4.algebra(), &adj)
            .unwrap()
            .passed
    );
}

#[test]
fn sweedler_transmutation_and_module_algebras() {
    let (_, _, h4) = sweedler();
    let qt = QT::new(&h4, sweedler_r(1)).unwrap();
    let t = transmute(&h4, &qt, &h4, Some(&qt), &Matrix::identity(4)).unwrap();
    assert!(t.report.passed, "{}", t.report);
    let c = cocom_check(&t);
    assert!(c.passed, "{c}");
    let adj = ModuleAction::adjoint(&h4).unwrap();
    let rep = braided_module_algebra_check(&t, h4.algebra(), &adj).unwrap();
    assert!(rep.passed, "{rep}");
}

#[test]
fn braided_tensor_product_is_associative() {
    let (_, _, b, action) = anyonic_line(3, cyc(3)).unwrap();
    let (_, qt) = zn_prime(3, cyc(3)).unwrap();
    let psi = BasisBraiding::from_module(&qt, &action);
    let x = El::basis([1, 2]);
    let y = El::basis([2, 1]);
    let z = El::basis([1, 1]);
    let l = braided_tensor_mul(
        b.algebra(),
        &psi,
        2,
        &braided_tensor_mul(b.algebra(), &psi, 2, &x, &y),
        &z,
    );
    let r = braided_tensor_mul(
        b.algebra(),
        &psi,
        2,
        &x,
        &braided_tensor_mul(b.algebra(), &psi, 2, &y, &z),
    );
    assert_eq!(l, r);
}
