use braidkit::{Mode, RMatrix, Scalar};

const QF: Mode = Mode::QField;

fn q() -> Scalar {
    Scalar::q(QF)
}

fn kd(a: usize, b: usize) -> bool {
    a == b
}

/// Standard `GL_q(n)` entries written out from the defining formula.
fn glq_entry(i: usize, j: usize, k: usize, l: usize) -> Scalar {
    let mut s = Scalar::zero();
    if kd(i, j) && kd(k, l) {
        s = if i == k { q() } else { Scalar::one() };
    }
    if kd(i, l) && kd(j, k) && i < k {
        s = &s + &(&q() - &q().inv().unwrap());
    }
    s
}

/// `R12 R13 R23 - R23 R13 R12` by direct index contraction.
fn qybe_residual(r: &RMatrix) -> Option<[usize; 6]> {
    let n = r.n();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        for p in 0..n {
                            let mut lhs = Scalar::zero();
                            let mut rhs = Scalar::zero();
                            for a in 0..n {
                                for b in 0..n {
                                    for c in 0..n {
                                        lhs = &lhs
                                            + &(&(r.get(i, a, k, b) * r.get(a, j, m, c))
                                                * r.get(b, l, c, p));
                                        rhs = &rhs
                                            + &(&(r.get(k, b, m, c) * r.get(i, a, c, p))
                                                * r.get(a, j, b, l));
                                    }
                                }
                            }
                            if lhs != rhs {
                                return Some([i, j, k, l, m, p]);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

#[test]
fn glq_matches_formula() {
    for n in 2..=4 {
        let r = RMatrix::glq(n, QF).unwrap();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        assert_eq!(
                            r.get(i, j, k, l),
                            &glq_entry(i, j, k, l),
                            "n={n} ({i},{j},{k},{l})"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn qybe_verdict_agrees_with_direct_contraction() {
    for n in [2, 3] {
        let r = RMatrix::glq(n, QF).unwrap();
        assert!(qybe_residual(&r).is_none());
        assert!(r.qybe_check().passed);
    }
    let base = RMatrix::glq(2, QF).unwrap();
    let values = ["q", "2", "q^2", "-1"];
    for i in 0..16 {
        for v in values {
            let mut file = base.to_file();
            let key = format!("{},{},{},{}", i / 8, (i / 2) % 2, (i / 4) % 2, i % 2);
            file.entries.insert(key, v.into());
            let r = RMatrix::from_file(&file).unwrap();
            assert_eq!(
                r.qybe_check().passed,
                qybe_residual(&r).is_none(),
                "entry {i} set to {v}"
            );
        }
    }
}

#[test]
fn glq_is_hecke_with_expected_roots() {
    let r = RMatrix::glq(2, QF).unwrap();
    let mp = r.pr_minimal_polynomial().unwrap();
    let mut roots: Vec<String> = mp.roots.iter().map(Scalar::to_string).collect();
    roots.sort();
    let mut want = vec![q().to_string(), (-&q().inv().unwrap()).to_string()];
    want.sort();
    assert_eq!(roots, want);
}

#[test]
fn second_inverse_contracts_to_identity() {
    for n in [2, 3] {
        let r = RMatrix::glq(n, QF).unwrap();
        let rt = r.second_inverse().unwrap();
        let prod = rt.t2().matrix() * r.t2().matrix();
        assert_eq!(prod, braidkit::Matrix::identity(n * n));
    }
}

#[test]
fn json_round_trip() {
    let r = RMatrix::glq(3, QF).unwrap();
    let back = RMatrix::from_json(&r.to_json()).unwrap();
    assert_eq!(back.matrix(), r.matrix());
    assert!(RMatrix::from_json("{\"n\":2}").is_err());
}
