use braidkit::{Error, Matrix, VerificationReport};
use serde_json::{json, Value};
use std::fmt::Write;

/// What a command produced: the checks it ran and its computed tables.
pub struct Outcome {
    pub report: VerificationReport,
    pub result: Value,
}

impl Outcome {
    pub fn new(report: VerificationReport, result: Value) -> Self {
        Outcome { report, result }
    }

    pub fn result(result: Value) -> Self {
        Outcome {
            report: VerificationReport::new(),
            result,
        }
    }

    /// A library error that amounts to a failed verification.
    pub fn failure(err: &Error) -> Self {
        let mut report = VerificationReport::new();
        report.fail(error_name(err), err.to_string());
        Outcome {
            report,
            result: Value::Null,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<braidkit::ScalarError> for CliError {
    fn from(e: braidkit::ScalarError) -> Self {
        CliError::Lib(e.into())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Errors that report on the input rather than reject it.
pub fn is_verification_error(err: &Error) -> bool {
    matches!(
        err,
        Error::NotDualizable
            | Error::NotBiInvertible
            | Error::IrreducibleFactor { .. }
            | Error::RPrimeConditionFailed { .. }
            | Error::SingularRPrime
            | Error::InconsistentRelations
            | Error::DegreeBoundExceeded { .. }
            | Error::NotABicharacter(_)
            | Error::MissingAntipode
            | Error::AntipodeNotInvertible
            | Error::NotABialgebraMap(_)
            | Error::NotAProjection(_)
            | Error::InputNotBraidedHopf(_)
            | Error::OutputVerificationFailed(_)
    )
}

fn error_name(err: &Error) -> &'static str {
    match err {
        Error::NotDualizable => "dualizable",
        Error::NotBiInvertible => "bi_invertible",
        Error::IrreducibleFactor { .. } => "minimal_polynomial_splits",
        Error::RPrimeConditionFailed { .. } => "rprime_conditions",
        Error::SingularRPrime => "rprime_invertible",
        Error::InconsistentRelations => "relations_consistent",
        Error::DegreeBoundExceeded { .. } => "within_degree_bound",
        Error::NotABicharacter(_) => "bicharacter",
        Error::MissingAntipode => "has_antipode",
        Error::AntipodeNotInvertible => "antipode_invertible",
        Error::NotABialgebraMap(_) => "bialgebra_map",
        Error::NotAProjection(_) => "projection",
        Error::InputNotBraidedHopf(_) => "input_braided_hopf",
        Error::OutputVerificationFailed(_) => "output_verified",
        _ => "error",
    }
}

pub fn render(invocation: &[String], out: &Outcome, pretty: bool) -> String {
    if !pretty {
        let v = json!({
            "invocation": invocation,
            "passed": out.report.passed,
            "checks": out.report.checks,
            "result": out.result,
        });
        return format!("{v}\n");
    }
    let mut s = String::new();
    let _ = writeln!(s, "braidkit {}", invocation.join(" "));
    let _ = writeln!(
        s,
        "{}",
        if out.report.passed {
            "PASSED"
        } else {
            "FAILED"
        }
    );
    s.push_str(&out.report.to_string());
    if !out.result.is_null() {
        let _ = writeln!(s, "result:");
        let _ = writeln!(
            s,
            "{}",
            serde_json::to_string_pretty(&out.result).unwrap_or_default()
        );
    }
    s
}

pub fn matrix_json(m: &Matrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect())
        .collect();
    json!(rows)
}
