mod commands;
mod output;

use braidkit::Mode;
use clap::{Args, Parser, Subcommand};
use output::{render, CliError, Outcome};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "braidkit",
    version,
    about = "Exact constructions and checks for R-matrices, braided groups and quasitriangular Hopf algebras"
)]
pub struct Cli {
    /// Coefficient field: `qfield` or `cyclotomic:<n>`.
    #[arg(long, global = true)]
    pub coeff: Option<Mode>,
    /// Degree up to which identities are checked.
    #[arg(long, global = true, default_value_t = 3)]
    pub degree: usize,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// R-matrices: QYBE, dualizability, R'.
    Rmatrix {
        #[command(subcommand)]
        op: RMatrixOp,
    },
    /// The FRT bialgebra A(R) and its pairing.
    Frt {
        #[arg(long)]
        r: PathBuf,
        #[command(subcommand)]
        op: FrtOp,
    },
    /// Braided matrices B(R).
    Bmatrix {
        #[arg(long)]
        r: PathBuf,
        #[command(subcommand)]
        op: BMatrixOp,
    },
    /// Braided covector and vector planes and their calculus.
    Plane(PlaneArgs),
    /// Finite-dimensional Hopf algebras.
    Hopf {
        #[command(subcommand)]
        op: HopfOp,
    },
    /// Transmutes `H1` along `f: H → H1` into a braided group.
    Transmute {
        #[arg(long)]
        h1: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        f: PathBuf,
    },
    /// Bosonizes a braided group `B` in the category of `H`-modules.
    Bosonize {
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        action: PathBuf,
    },
    /// Cobosonizes a braided group `B` in the category of `A`-comodules; the
    /// `R` field of `A` holds the dual quasitriangular functional.
    Cobosonize {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        coaction: PathBuf,
    },
    /// Splits `H1` with a projection `p` and section `i` onto `H` as `B⋊H`.
    Radford {
        #[arg(long)]
        h1: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        p: PathBuf,
        #[arg(long)]
        i: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum RMatrixOp {
    /// Checks the quantum Yang-Baxter equation.
    CheckQybe { file: PathBuf },
    /// Invertibility, triangularity and the minimal polynomial of `PR`.
    Info { file: PathBuf },
    /// The second inverse and the braidings of `V` with its dual.
    SecondInverse { file: PathBuf },
    /// Derives `R'` from a root of the minimal polynomial of `PR`.
    Rprime {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Writes the standard `GL_q(n)` R-matrix.
    Glq { n: usize },
}

#[derive(Subcommand, Debug)]
pub enum FrtOp {
    /// Evaluates the pairing on two monomials such as `t[0,0]*t[1,1]`.
    Pair {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Bialgebra relations, representations and pairing laws.
    Verify,
}

#[derive(Subcommand, Debug)]
pub enum BMatrixOp {
    /// The rewriting rules of the completed relations.
    Relations,
    /// Bialgebra axioms and descent of the braiding.
    Verify,
    /// The canonical representation of a monomial such as `u[0,0]*u[1,1]`.
    Rep {
        #[arg(long)]
        word: String,
    },
    /// Transmutes a monomial of A(R), or checks all relations when none is given.
    Transmute {
        #[arg(long)]
        word: Option<String>,
    },
    /// The relations and coproduct in the shifted generators `chi = u - 1`.
    Chi,
}

#[derive(Args, Debug)]
pub struct PlaneArgs {
    #[arg(long, required_unless_present = "line", conflicts_with = "line")]
    pub r: Option<PathBuf>,
    /// `free`, `hecke` or `factor:<k>`.
    #[arg(long, default_value = "hecke")]
    pub rprime: String,
    /// The vector plane instead of the covector plane.
    #[arg(long)]
    pub vector: bool,
    /// The braided line with `Ψ(x⊗x) = q x⊗x`.
    #[arg(long)]
    pub line: bool,
    #[command(subcommand)]
    pub op: PlaneOp,
}

#[derive(Subcommand, Debug)]
pub enum PlaneOp {
    /// Generators, rules and (co)product data.
    Make,
    /// Braided bialgebra axioms.
    Verify,
    /// Applies the braided partial derivative `∂_i` to a polynomial.
    Diff {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        poly: String,
    },
    /// The braided Leibniz rule.
    Leibniz,
}

#[derive(Subcommand, Debug)]
pub enum HopfOp {
    /// Writes a standard Hopf algebra.
    Make {
        #[command(subcommand)]
        kind: MakeKind,
    },
    /// Hopf algebra axioms, and quasitriangularity when `R` is present.
    Verify { file: PathBuf },
    /// The derived identities relating `R`, `u` and the antipode.
    Lemma16 { file: PathBuf },
    /// The Drinfeld double.
    Double { file: PathBuf },
    /// The braiding on a `Z_n`-graded space, `--grading` giving the dimensions of the homogeneous parts.
    Braiding {
        #[arg(long, value_delimiter = ',')]
        grading: Vec<usize>,
        /// A quasitriangular group algebra of `Z_n`; `Z_n′` when omitted.
        file: Option<PathBuf>,
    },
    /// The anyonic dimension of a `Z_n`-graded space.
    AnyonicDim {
        #[arg(long, value_delimiter = ',')]
        grading: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum MakeKind {
    /// The group algebra of `Z_n` with its nontrivial `R`.
    ZnPrime { n: usize },
    /// `k[x]/(xⁿ)` as a braided group over `Z_n′`, with the background and action.
    AnyonicLine { n: usize },
}

fn main() -> ExitCode {
    let invocation: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match commands::run(&cli) {
        Ok(out) => out,
        Err(CliError::Lib(e)) if output::is_verification_error(&e) => Outcome::failure(&e),
        Err(CliError::Lib(e)) => {
            eprintln!("braidkit: {e}");
            return ExitCode::from(2);
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("braidkit: {msg}");
            return ExitCode::from(2);
        }
    };
    print!("{}", render(&invocation, &outcome, cli.pretty));
    ExitCode::from(if outcome.report.passed { 0 } else { 1 })
}
