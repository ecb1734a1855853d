//! `ribbon`: command-line front end for ribbon-core.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ribbon_core::cone::EXTREME_RAYS_LIMIT;
use ribbon_core::perm::DESCENT_MATRIX_LIMIT;
use ribbon_core::sym::SKEW_CELL_LIMIT;
use ribbon_core::{json, Error};
use serde_json::Value;

mod commands;

/// Default bound on the degree of `ribbon` and `lr` computations.
const RIBBON_DEGREE_LIMIT: usize = SKEW_CELL_LIMIT;

#[derive(Parser, Debug)]
#[command(
    name = "ribbon",
    version,
    about = "Exact ribbon Schur functions, quasisymmetric expansions and the F-positive cone",
    after_help = "Compositions are written with commas (2,2,1,2) or as compact digits (2212).\n\
                  Exit status: 0 success, 1 failed verification, 2 usage or parse error, 3 resource bound exceeded.\n\
                  RIBBON_WORKERS sets the worker count for permutation enumeration."
)]
struct Cli {
    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irreducible factorization of a composition
    Factor { comp: String },
    /// Compositions whose ribbon Schur function equals that of COMP
    Class { comp: String },
    /// Decide whether two ribbons have equal Schur functions
    Equiv { left: String, right: String },
    /// Expand a ribbon Schur function
    Ribbon {
        comp: String,
        #[arg(long, value_enum, default_value_t = RibbonBasis::H)]
        basis: RibbonBasis,
        /// Largest accepted degree
        #[arg(long, default_value_t = RIBBON_DEGREE_LIMIT)]
        max_n: usize,
    },
    /// Expand a skew Schur function given as OUTER/INNER
    Skew {
        shape: String,
        #[arg(long, value_enum, default_value_t = SkewBasis::F)]
        basis: SkewBasis,
        /// Largest accepted number of cells
        #[arg(long, default_value_t = SKEW_CELL_LIMIT)]
        max_cells: usize,
    },
    /// Littlewood-Richardson coefficients encoded by a ribbon
    Lr {
        comp: String,
        /// Largest accepted degree
        #[arg(long, default_value_t = RIBBON_DEGREE_LIMIT)]
        max_n: usize,
    },
    /// Operations on quasisymmetric expressions stored as JSON
    Qsym {
        #[command(subcommand)]
        op: QsymOp,
    },
    /// Counts of permutations by descent composition of themselves and their inverses
    DescentsMatrix {
        n: usize,
        /// Largest accepted n
        #[arg(long, default_value_t = DESCENT_MATRIX_LIMIT)]
        max_n: usize,
        #[command(flatten)]
        workers: Workers,
    },
    /// The cone of F-positive symmetric functions
    Cone {
        #[command(subcommand)]
        op: ConeOp,
    },
    /// Run exhaustive property suites up to a given size
    Verify {
        /// Largest size checked
        #[arg(long = "n")]
        n_max: usize,
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        workers: Workers,
    },
}

#[derive(Subcommand, Debug)]
enum QsymOp {
    /// Rewrite an expression in another basis
    Convert {
        /// JSON file, or - for stdin
        file: PathBuf,
        #[arg(long, value_enum)]
        to: QsymBasis,
    },
    /// Product of two expressions, in the basis of the first
    Product { left: PathBuf, right: PathBuf },
    /// Test symmetry and give the Schur expansion when symmetric
    Symmetric { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ConeOp {
    /// Extreme rays of the cone in degree N
    Rays {
        n: usize,
        /// Largest accepted n
        #[arg(long, default_value_t = EXTREME_RAYS_LIMIT)]
        max_n: usize,
    },
    /// Irredundancy of every inequality class in degree N
    Facets {
        n: usize,
        /// Largest accepted n
        #[arg(long, default_value_t = EXTREME_RAYS_LIMIT)]
        max_n: usize,
    },
    /// Balance conditions of a multicollection stored as JSON
    Balanced { file: PathBuf },
}

#[derive(Args, Debug)]
struct Workers {
    /// Worker threads [default: available parallelism]
    #[arg(long, env = "RIBBON_WORKERS")]
    workers: Option<usize>,
}

impl Workers {
    fn get(&self) -> usize {
        self.workers.filter(|&w| w > 0).unwrap_or_else(ribbon_core::perm::workers_from_env)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RibbonBasis {
    #[value(name = "h")]
    H,
    #[value(name = "F")]
    F,
    #[value(name = "s")]
    S,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SkewBasis {
    #[value(name = "F")]
    F,
    #[value(name = "s")]
    S,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QsymBasis {
    #[value(name = "M")]
    M,
    #[value(name = "F")]
    F,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Equivalence,
    Ribbon,
    Descents,
    Cone,
    All,
}

/// A finished command: JSON payload, text rendering, and whether it
/// succeeded (only verification can fail without an error).
pub struct Output {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl Output {
    pub fn new(json: Value, text: String) -> Self {
        Output { json, text, ok: true }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(PathBuf, io::Error),
    Json(PathBuf, serde_json::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::ResourceBound { .. }) => 3,
            _ => 2,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            CliError::Core(e) => json::error_to_json(e),
            CliError::Io(path, e) => error_json("io_error", &format!("{}: {e}", path.display())),
            CliError::Json(path, e) => error_json("parse_error", &format!("{}: {e}", path.display())),
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io(path, e) => format!("{}: {e}", path.display()),
            CliError::Json(path, e) => format!("{}: invalid JSON: {e}", path.display()),
        }
    }
}

fn error_json(code: &str, message: &str) -> Value {
    serde_json::json!({ "error": { "code": code, "message": message } })
}

fn run(cli: Cli) -> Result<Output, CliError> {
    use commands as c;
    match cli.command {
        Command::Factor { comp } => c::factor(&comp),
        Command::Class { comp } => c::class(&comp),
        Command::Equiv { left, right } => c::equiv(&left, &right),
        Command::Ribbon { comp, basis, max_n } => c::ribbon(&comp, basis, max_n),
        Command::Skew { shape, basis, max_cells } => c::skew(&shape, basis, max_cells),
        Command::Lr { comp, max_n } => c::lr(&comp, max_n),
        Command::Qsym { op: QsymOp::Convert { file, to } } => c::qsym_convert(&file, to),
        Command::Qsym { op: QsymOp::Product { left, right } } => c::qsym_product(&left, &right),
        Command::Qsym { op: QsymOp::Symmetric { file } } => c::qsym_symmetric(&file),
        Command::DescentsMatrix { n, max_n, workers } => c::descents_matrix(n, max_n, workers.get()),
        Command::Cone { op: ConeOp::Rays { n, max_n } } => c::cone_rays(n, max_n),
        Command::Cone { op: ConeOp::Facets { n, max_n } } => c::cone_facets(n, max_n),
        Command::Cone { op: ConeOp::Balanced { file } } => c::cone_balanced(&file),
        Command::Verify { n_max, suite, workers } => c::verify(suite, n_max, workers.get()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    let mut stdout = io::stdout().lock();
    match run(cli) {
        Ok(out) => {
            let written = if as_json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("values serialize"))
            } else {
                write!(stdout, "{}", out.text)
            };
            if written.is_err() {
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if as_json {
                let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&e.to_json()).expect("values serialize"));
            }
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
