use braidkit::findim_hopf::{zn_prime, ActionFile, El, HopfFile, MapFile};
use braidkit::transmute::{anyonic_line, comodule_anyonic_line, CoactionFile};
use braidkit::{Matrix, Mode, RMatrix, Scalar};
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::Command;
use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_braidkit");

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn run(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(BIN)
        .current_dir(dir)
        .args(args)
        .output()
        .expect("spawn braidkit");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &Path, name: &str, v: &impl serde::Serialize) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p
}

fn glq2(dir: &Path) {
    std::fs::write(
        dir.join("glq2.json"),
        RMatrix::glq(2, Mode::QField).unwrap().to_json(),
    )
    .unwrap();
}

fn check_names(v: &Value) -> Vec<String> {
    v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn qybe_passes_and_mutation_fails() {
    let dir = TempDir::new().unwrap();
    glq2(dir.path());
    let r = run(dir.path(), &["rmatrix", "check-qybe", "glq2.json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.json();
    assert_eq!(v["passed"], true);
    assert_eq!(v["invocation"][0], "rmatrix");

    let mut file = RMatrix::glq(2, Mode::QField).unwrap().to_file();
    file.entries.insert("0,1,1,0".into(), "q".into());
    write(dir.path(), "bad.json", &file);
    let r = run(dir.path(), &["rmatrix", "check-qybe", "bad.json"]);
    assert_eq!(r.code, 1);
    let v = r.json();
    assert_eq!(v["passed"], false);
    assert!(v["checks"][0]["witness"].is_string());
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let a = run(dir.path(), &["rmatrix", "glq", "3"]);
    let b = run(dir.path(), &["rmatrix", "glq", "3"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    std::fs::write(dir.path().join("glq3.json"), &a.stdout).unwrap();
    let r = run(dir.path(), &["rmatrix", "check-qybe", "glq3.json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);

    let z = run(dir.path(), &["hopf", "make", "zn-prime", "3"]);
    let file: HopfFile = serde_json::from_value(z.json()["result"].clone()).unwrap();
    let (h, r) = file.build().unwrap();
    assert_eq!(h.dim(), 3);
    assert!(r.is_some());
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    assert_eq!(run(dir.path(), &["rmatrix"]).code, 2);
    assert_eq!(
        run(dir.path(), &["rmatrix", "check-qybe", "missing.json"]).code,
        2
    );
    assert_eq!(
        run(dir.path(), &["--coeff", "nonsense", "rmatrix", "glq", "2"]).code,
        2
    );
    glq2(dir.path());
    let r = run(
        dir.path(),
        &[
            "--coeff",
            "cyclotomic:3",
            "rmatrix",
            "check-qybe",
            "glq2.json",
        ],
    );
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("--coeff"));
    assert!(r.stdout.is_empty());
}

#[test]
fn pretty_is_opt_in() {
    let dir = TempDir::new().unwrap();
    glq2(dir.path());
    let plain = run(dir.path(), &["rmatrix", "info", "glq2.json"]);
    assert!(plain.stdout.starts_with('{'));
    let pretty = run(dir.path(), &["--pretty", "rmatrix", "info", "glq2.json"]);
    assert!(pretty.stdout.contains("PASSED"));
    assert!(pretty.stdout.contains("[pass] qybe"));
}

#[test]
fn rmatrix_info_and_duals() {
    let dir = TempDir::new().unwrap();
    glq2(dir.path());
    let v = run(dir.path(), &["rmatrix", "info", "glq2.json"]).json();
    assert_eq!(v["result"]["triangular"], false);
    assert_eq!(
        v["result"]["pr_minimal_polynomial"]["roots"]
            .as_array()
            .unwrap()
            .len(),
        2
    );
    let r = run(dir.path(), &["rmatrix", "second-inverse", "glq2.json"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = run(
        dir.path(),
        &["rmatrix", "rprime", "glq2.json", "--index", "0"],
    );
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.json()["result"]["rprime"]["entries"].is_object());
}

#[test]
fn frt_and_braided_matrices() {
    let dir = TempDir::new().unwrap();
    glq2(dir.path());
    let r = run(
        dir.path(),
        &[
            "frt",
            "--r",
            "glq2.json",
            "pair",
            "--a",
            "t[0,0]",
            "--b",
            "t[0,0]",
        ],
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.json()["result"]["value"], "q");
    let r = run(
        dir.path(),
        &["--degree", "2", "frt", "--r", "glq2.json", "verify"],
    );
    assert_eq!(r.code, 0, "{}", r.stdout);

    let r = run(
        dir.path(),
        &["--degree", "2", "bmatrix", "--r", "glq2.json", "verify"],
    );
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = run(dir.path(), &["bmatrix", "--r", "glq2.json", "relations"]).json();
    assert_eq!(v["result"]["generators"].as_array().unwrap().len(), 4);
    let r = run(
        dir.path(),
        &["bmatrix", "--r", "glq2.json", "rep", "--word", "u[0,0]"],
    );
    assert_eq!(r.json()["result"].as_array().unwrap().len(), 2);
    let r = run(
        dir.path(),
        &["--degree", "2", "bmatrix", "--r", "glq2.json", "transmute"],
    );
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = run(dir.path(), &["bmatrix", "--r", "glq2.json", "chi"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
}

#[test]
fn planes_and_jackson_derivative() {
    let dir = TempDir::new().unwrap();
    glq2(dir.path());
    let v = run(
        dir.path(),
        &["plane", "--line", "diff", "--i", "0", "--poly", "x*x*x"],
    )
    .json();
    assert_eq!(v["result"], "(q^2 + q + 1)*x*x");
    let v = run(
        dir.path(),
        &["plane", "--r", "glq2.json", "--rprime", "hecke", "make"],
    )
    .json();
    assert_eq!(v["result"]["rules"].as_array().unwrap().len(), 1);
    let r = run(
        dir.path(),
        &[
            "plane",
            "--r",
            "glq2.json",
            "--rprime",
            "hecke",
            "diff",
            "--i",
            "0",
            "--poly",
            "x0*x0*x0",
        ],
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = run(
        dir.path(),
        &["--degree", "3", "plane", "--r", "glq2.json", "verify"],
    );
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = run(
        dir.path(),
        &["--degree", "2", "plane", "--r", "glq2.json", "leibniz"],
    );
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = run(
        dir.path(),
        &[
            "plane",
            "--r",
            "glq2.json",
            "diff",
            "--i",
            "5",
            "--poly",
            "x0",
        ],
    );
    assert_eq!(r.code, 2);
}

#[test]
fn hopf_commands() {
    let dir = TempDir::new().unwrap();
    let z = run(dir.path(), &["hopf", "make", "zn-prime", "3"]);
    assert_eq!(z.code, 0);
    std::fs::write(dir.path().join("zn3.json"), &z.stdout).unwrap();
    let v = run(dir.path(), &["hopf", "lemma16", "zn3.json"]).json();
    assert_eq!(v["passed"], true);
    assert_eq!(check_names(&v).len(), 6);
    assert_eq!(run(dir.path(), &["hopf", "verify", "zn3.json"]).code, 0);
    assert_eq!(run(dir.path(), &["hopf", "double", "zn3.json"]).code, 0);

    let v = run(dir.path(), &["hopf", "braiding", "--grading", "1,1"]).json();
    let m = &v["result"]["matrix"];
    assert_eq!(m[3][3], "-1");
    assert_eq!(m[1][2], "1");
    let v = run(dir.path(), &["hopf", "anyonic-dim", "--grading", "2,1"]).json();
    assert_eq!(v["result"], "1");

    let (h, qt) = zn_prime(2, Mode::Cyclotomic(2)).unwrap();
    let mut bad = HopfFile::from_parts(&h, Some(&qt.r));
    bad.antipode = Some(vec![
        vec!["1".into(), "0".into()],
        vec!["1".into(), "0".into()],
    ]);
    write(dir.path(), "bad.json", &bad);
    let r = run(dir.path(), &["hopf", "verify", "bad.json"]);
    assert_eq!(r.code, 1);
    assert!(r.json()["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["name"] == "antipode_law" && c["passed"] == false));
}

fn identity_map(d: usize, mode: Mode) -> MapFile {
    MapFile::from_matrix(&Matrix::identity(d), mode)
}

#[test]
fn transmute_command() {
    let dir = TempDir::new().unwrap();
    let mode = Mode::Cyclotomic(3);
    let (h, qt) = zn_prime(3, mode).unwrap();
    write(dir.path(), "h.json", &HopfFile::from_parts(&h, Some(&qt.r)));
    write(dir.path(), "f.json", &identity_map(3, mode));
    let r = run(
        dir.path(),
        &[
            "transmute",
            "--h1",
            "h.json",
            "--h",
            "h.json",
            "--f",
            "f.json",
        ],
    );
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v = r.json();
    assert!(check_names(&v)
        .iter()
        .any(|n| n == "cocom.braided_cocommutative"));
    let braided: HopfFile = serde_json::from_value(v["result"]["braided"].clone()).unwrap();
    assert_eq!(braided.coproduct, HopfFile::from_parts(&h, None).coproduct);

    let zero = MapFile::from_matrix(&Matrix::zeros(3, 3), mode);
    write(dir.path(), "zero.json", &zero);
    let r = run(
        dir.path(),
        &[
            "transmute",
            "--h1",
            "h.json",
            "--h",
            "h.json",
            "--f",
            "zero.json",
        ],
    );
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["checks"][0]["name"], "bialgebra_map");
}

#[test]
fn bosonize_and_radford_commands() {
    let dir = TempDir::new().unwrap();
    let mode = Mode::Cyclotomic(2);
    let (h, qt, b, action) = anyonic_line(2, mode).unwrap();
    write(dir.path(), "h.json", &HopfFile::from_parts(&h, Some(&qt.r)));
    write(dir.path(), "b.json", &HopfFile::from_parts(&b, None));
    write(
        dir.path(),
        "act.json",
        &ActionFile::from_action(&action, mode),
    );
    let r = run(
        dir.path(),
        &[
            "bosonize", "--h", "h.json", "--b", "b.json", "--action", "act.json",
        ],
    );
    assert_eq!(r.code, 0, "{}", r.stdout);
    std::fs::write(dir.path().join("bos.json"), &r.stdout).unwrap();
    let bos: HopfFile = serde_json::from_value(r.json()["result"].clone()).unwrap();
    assert_eq!(bos.basis.len(), 4);

    let one = || Scalar::one();
    let p = Matrix::from_fn(2, 4, |row, col| {
        if col < 2 && row == col {
            one()
        } else {
            Scalar::zero()
        }
    });
    let i = Matrix::from_fn(
        4,
        2,
        |row, col| if row == col { one() } else { Scalar::zero() },
    );
    write(dir.path(), "p.json", &MapFile::from_matrix(&p, mode));
    write(dir.path(), "i.json", &MapFile::from_matrix(&i, mode));
    let r = run(
        dir.path(),
        &[
            "radford", "--h1", "bos.json", "--h", "h.json", "--p", "p.json", "--i", "i.json",
        ],
    );
    assert_eq!(r.code, 0, "{}", r.stdout);
    let recovered: HopfFile = serde_json::from_value(r.json()["result"]["b"].clone()).unwrap();
    assert_eq!(recovered.basis, ["1⊗1", "x⊗1"]);
    assert_eq!(
        recovered.coproduct,
        HopfFile::from_parts(&b, None).coproduct
    );

    let r = run(
        dir.path(),
        &[
            "radford", "--h1", "bos.json", "--h", "h.json", "--p", "i.json", "--i", "i.json",
        ],
    );
    assert_eq!(r.code, 2, "{}", r.stdout);

    let mut broken = ActionFile::from_action(&action, mode);
    broken.action[1][1] = vec!["0".into(), "1".into()];
    write(dir.path(), "broken.json", &broken);
    let r = run(
        dir.path(),
        &[
            "bosonize",
            "--h",
            "h.json",
            "--b",
            "b.json",
            "--action",
            "broken.json",
        ],
    );
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["checks"][0]["name"], "input_braided_hopf");
}

#[test]
fn cobosonize_command() {
    let dir = TempDir::new().unwrap();
    let mode = Mode::Cyclotomic(2);
    let (a, r, b, co) = comodule_anyonic_line(2, mode).unwrap();
    let mut functional = El::zero();
    for x in 0..2 {
        for y in 0..2 {
            functional.add_term(vec![x, y], r.eval_basis(x, y).clone());
        }
    }
    write(
        dir.path(),
        "a.json",
        &HopfFile::from_parts(&a, Some(&functional)),
    );
    write(dir.path(), "b.json", &HopfFile::from_parts(&b, None));
    write(
        dir.path(),
        "co.json",
        &CoactionFile::from_coaction(&co, mode),
    );
    let out = run(
        dir.path(),
        &[
            "cobosonize",
            "--a",
            "a.json",
            "--b",
            "b.json",
            "--coaction",
            "co.json",
        ],
    );
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    let file: HopfFile = serde_json::from_value(out.json()["result"].clone()).unwrap();
    assert_eq!(file.basis.len(), 4);

    write(dir.path(), "plain.json", &HopfFile::from_parts(&a, None));
    let out = run(
        dir.path(),
        &[
            "cobosonize",
            "--a",
            "plain.json",
            "--b",
            "b.json",
            "--coaction",
            "co.json",
        ],
    );
    assert_eq!(out.code, 2);
}
