//! The `ratgen` command-line tool.
//!
//! Exit codes: 0 success, 1 unreadable file, 2 invalid input, 3 initial
//! data inconsistent or underdetermined, 4 verification mismatch.

pub mod format;
pub mod random;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::parse_rational_list;
use crate::oracle::{verify, OracleError, TableComparison};
use crate::poly::render::{render_ratfunc2, Style};
use crate::recurrence::ProblemError;
use crate::solver1d::gf_1d;
use crate::solver2d::{assemble_gf, assemble_gf_unreduced};
use format::{FormatError, GfFile, ProblemFile};
use random::{random_problem, Bounds};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DATA: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "ratgen", version, about = "Rational generating functions of 2-D linear recurrences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Latex,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generating function of a two-dimensional problem file.
    Solve2d {
        file: PathBuf,
        /// Compare series and direct expansions on [0,N]^2.
        #[arg(long, value_name = "N")]
        verify: Option<u32>,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
        /// Variable names, e.g. `z,w`.
        #[arg(long, value_name = "A,B")]
        vars: Option<String>,
        /// Skip the final gcd cancellation.
        #[arg(long)]
        no_reduce: bool,
        /// Verify this JSON-formatted function instead of the computed one.
        #[arg(long, value_name = "GF_JSON", requires = "verify")]
        claim: Option<PathBuf>,
    },
    /// Generating function of a one-dimensional recurrence.
    Solve1d {
        /// Recurrence coefficients c0,...,cm in increasing order.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Initial values phi(0),...,phi(m-1).
        #[arg(long, allow_hyphen_values = true)]
        init: String,
        #[arg(long, default_value = "z")]
        var: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Print a random valid problem file.
    GenRandom {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_m: u32,
        #[arg(long, default_value_t = 3)]
        max_order: u32,
        #[arg(long, default_value_t = 9)]
        max_coeff: i64,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

fn problem_failure(e: &ProblemError) -> Failure {
    let code = if e.is_data_conflict() { EXIT_DATA } else { EXIT_INVALID };
    Failure::new(code, e.to_string())
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        match &e {
            FormatError::Problem(p) => problem_failure(p),
            _ => Failure::new(EXIT_INVALID, e.to_string()),
        }
    }
}

impl From<ProblemError> for Failure {
    fn from(e: ProblemError) -> Self {
        problem_failure(&e)
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))
}

fn parse_vars(text: &str) -> Result<[String; 2], Failure> {
    match text.split(',').map(str::trim).collect::<Vec<_>>()[..] {
        [a, b] if !a.is_empty() && !b.is_empty() => Ok([a.to_string(), b.to_string()]),
        _ => Err(Failure::new(EXIT_INVALID, format!("--vars expects two names like `z,w`, got `{text}`"))),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Solve2d {
            file,
            verify: n,
            format,
            vars,
            no_reduce,
            claim,
        } => solve2d(&file, n, format, vars.as_deref(), no_reduce, claim.as_ref(), out, err),
        Command::Solve1d {
            coeffs,
            init,
            var,
            format,
        } => {
            let invalid = |e: &dyn std::fmt::Display| Failure::new(EXIT_INVALID, e.to_string());
            let c = parse_rational_list(&coeffs).map_err(|e| invalid(&e))?;
            let i = parse_rational_list(&init).map_err(|e| invalid(&e))?;
            let f = gf_1d(&c, &i).map_err(|e| invalid(&e))?;
            let text = match format {
                OutputFormat::Plain => f.render(&var, Style::Plain),
                OutputFormat::Latex => f.render(&var, Style::Latex),
                OutputFormat::Json => serde_json::json!({
                    "variable": var,
                    "numerator": f.numerator().coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "denominator": f.denominator().coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "text": f.render(&var, Style::Plain),
                })
                .to_string(),
            };
            writeln!(out, "{text}").map_err(|e| Failure::new(EXIT_IO, e.to_string()))
        }
        Command::GenRandom {
            seed,
            max_m,
            max_order,
            max_coeff,
        } => {
            let bounds = Bounds {
                max_m,
                max_order,
                max_coeff,
            };
            bounds.check().map_err(|m| Failure::new(EXIT_INVALID, m))?;
            let file = ProblemFile::from_problem(&random_problem(seed, bounds));
            writeln!(out, "{}", file.to_json()).map_err(|e| Failure::new(EXIT_IO, e.to_string()))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn solve2d(
    path: &PathBuf,
    n: Option<u32>,
    format: OutputFormat,
    vars: Option<&str>,
    no_reduce: bool,
    claim: Option<&PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let file = ProblemFile::parse(&read(path)?)?;
    let names = match vars {
        Some(v) => parse_vars(v)?,
        None => file
            .variables
            .clone()
            .unwrap_or_else(|| ["z1".to_string(), "z2".to_string()]),
    };
    let names = [names[0].as_str(), names[1].as_str()];
    let problem = file.to_problem()?;

    let f = match claim {
        Some(p) => GfFile::parse(&read(p)?)?.to_ratfunc()?,
        None if no_reduce => assemble_gf_unreduced(&problem)?,
        None => assemble_gf(&problem)?,
    };
    let io = |e: std::io::Error| Failure::new(EXIT_IO, e.to_string());
    let text = match format {
        OutputFormat::Plain => render_ratfunc2(&f, names, Style::Plain),
        OutputFormat::Latex => render_ratfunc2(&f, names, Style::Latex),
        OutputFormat::Json => GfFile::from_ratfunc(&f, names).to_json(),
    };
    writeln!(out, "{text}").map_err(io)?;

    let Some(n) = n else {
        return Ok(());
    };
    // Keep stdout parseable for JSON output.
    let report: &mut dyn Write = if format == OutputFormat::Json { err } else { out };
    match verify(&problem, &f, n) {
        Ok(TableComparison::Match) => {
            writeln!(report, "verified on [0,{n}]²").map_err(io)?;
            let table = crate::oracle::expand_table(&problem, (n, n))?;
            write!(report, "{table}").map_err(io)?;
            Ok(())
        }
        Ok(TableComparison::Mismatch { point, left, right }) => Err(Failure::new(
            EXIT_MISMATCH,
            format!("verification failed at {point:?}: recurrence gives {left}, series gives {right}"),
        )),
        Err(OracleError::NotExpandable { bound }) => Err(Failure::new(
            EXIT_MISMATCH,
            format!("verification failed: denominator has no term at {bound:?}, function does not expand"),
        )),
        Err(OracleError::Problem(p)) => Err(p.into()),
        Err(e) => Err(Failure::new(EXIT_MISMATCH, e.to_string())),
    }
}
