//! Command-line front end for `cfhankel`.
//!
//! Every subcommand reads and writes the JSON formats in [`json`]. Exit
//! codes: 0 success or agreement, 1 disagreement (`compare`, `verify`),
//! 2 usage or input error, 3 computation error.

pub mod json;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use cfhankel::catalog::{self, CatalogError, CatalogName};
use cfhankel::closedform::{self, Convention, ARBITRATED_CONVENTION};
use cfhankel::{cfrac, hankel, Rational};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cfhankel",
    version,
    about = "Exact C-fractions and Hankel transforms of power series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a series (constant term 1) into its C-fraction.
    Expand {
        /// Series JSON file, or `-` for standard input.
        #[arg(long)]
        series: PathBuf,
        /// Treat the series as exact, so a vanishing remainder terminates the fraction.
        #[arg(long)]
        exact: bool,
    },
    /// Taylor-expand a C-fraction.
    Eval {
        #[arg(long)]
        cfraction: PathBuf,
        #[arg(long)]
        order: usize,
    },
    /// Hankel determinants h_0..h_N of a series by direct elimination.
    Hankel {
        #[arg(long)]
        series: PathBuf,
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Hankel transform of a C-fraction from the closed form.
    Closed {
        #[arg(long)]
        cfraction: PathBuf,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, default_value_t = ARBITRATED_CONVENTION)]
        convention: Convention,
    },
    /// Compare the closed form with direct determinants; exit 0 iff equal.
    Compare {
        #[arg(long)]
        cfraction: PathBuf,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, default_value_t = ARBITRATED_CONVENTION)]
        convention: Convention,
    },
    /// Print a named example fraction.
    Catalog {
        /// catalan, aerated-catalan, fibonacci-cf or rogers-ramanujan.
        name: String,
        /// Numeric γ for rogers-ramanujan (symbolic when omitted).
        #[arg(long)]
        gamma: Option<Rational>,
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
    /// Check the published example values and report a verdict for each.
    Verify {
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }

    fn compute(e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_COMPUTE,
            message: e.to_string(),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
}

impl Io<'_> {
    fn read_json(&mut self, path: &PathBuf) -> Result<Value, Failure> {
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::usage(format!("reading standard input: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        };
        json::parse(&text).map_err(Failure::usage)
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut io = Io { stdin };
    match dispatch(cli.command, &mut io) {
        Ok((value, code)) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            if writeln!(stdout, "{text}").is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn catalog_failure(e: CatalogError) -> Failure {
    match e {
        CatalogError::ZeroConstantDenominator => Failure::compute(e),
        _ => Failure::usage(e),
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<(Value, i32), Failure> {
    match command {
        Command::Expand { series, exact } => {
            let input = json::series_from_json(&io.read_json(&series)?).map_err(Failure::usage)?;
            let cf =
                cfrac::correspond(&input.series, exact || input.exact).map_err(Failure::compute)?;
            Ok((json::cfraction_to_json(&cf), EXIT_OK))
        }
        Command::Eval { cfraction, order } => {
            let cf =
                json::cfraction_from_json(&io.read_json(&cfraction)?).map_err(Failure::usage)?;
            Ok((json::series_to_json(&cfrac::evaluate(&cf, order)), EXIT_OK))
        }
        Command::Hankel { series, max_n } => {
            let input = json::series_from_json(&io.read_json(&series)?).map_err(Failure::usage)?;
            let h =
                hankel::hankel_transform(input.series.coeffs(), max_n).map_err(Failure::compute)?;
            Ok((json!({ "hankel": json::scalars_to_json(&h) }), EXIT_OK))
        }
        Command::Closed {
            cfraction,
            max_n,
            convention,
        } => {
            let cf =
                json::cfraction_from_json(&io.read_json(&cfraction)?).map_err(Failure::usage)?;
            let d =
                closedform::dense_transform_of(&cf, max_n, convention).map_err(Failure::compute)?;
            Ok((json::dense_to_json(&d), EXIT_OK))
        }
        Command::Compare {
            cfraction,
            max_n,
            convention,
        } => {
            let cf =
                json::cfraction_from_json(&io.read_json(&cfraction)?).map_err(Failure::usage)?;
            compare(&cf, max_n, convention)
        }
        Command::Catalog { name, gamma, terms } => {
            let name: CatalogName = name.parse().map_err(catalog_failure)?;
            let cf =
                catalog::catalog_cfraction(name, gamma.as_ref(), terms).map_err(catalog_failure)?;
            Ok((json::cfraction_to_json(&cf), EXIT_OK))
        }
        Command::Verify { max_n } => {
            let report = catalog::verify_paper_claims(max_n);
            let code = if report.convention.is_some() {
                EXIT_OK
            } else {
                EXIT_DISAGREE
            };
            Ok((json::report_to_json(&report), code))
        }
    }
}

fn compare(
    cf: &cfhankel::CFraction,
    max_n: usize,
    convention: Convention,
) -> Result<(Value, i32), Failure> {
    let needed = 2 * max_n;
    if let Some(reliable) = cf.reliable_order() {
        if reliable < needed {
            return Err(Failure::compute(format!(
                "InsufficientTerms: the fraction pins the series through x^{reliable}, need x^{needed}"
            )));
        }
    }
    let series = cfrac::evaluate(cf, needed);
    let oracle = hankel::hankel_transform(series.coeffs(), max_n).map_err(Failure::compute)?;
    let closed = closedform::dense_transform_of(cf, max_n, convention).map_err(Failure::compute)?;
    let mismatch = oracle.iter().zip(&closed.dense).position(|(a, b)| a != b);
    let value = json!({
        "agree": mismatch.is_none(),
        "convention": convention.name(),
        "first_mismatch": mismatch,
        "oracle": json::scalars_to_json(&oracle),
        "closed": json::dense_to_json(&closed),
    });
    Ok((
        value,
        if mismatch.is_none() {
            EXIT_OK
        } else {
            EXIT_DISAGREE
        },
    ))
}
