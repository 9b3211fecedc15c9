//! Command-line front end. Exit status: 0 success, 1 verification or
//! validation failure, 2 usage or parse error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::algorithm::FactorMatrices;
use crate::arith::Field;
use crate::decomp::{build_algorithm, canonical_strassen_params, validate_params};
use crate::demo::run_demo;
use crate::engine::{bench, RecursiveMultiplier};
use crate::error::Error;
use crate::io;
use crate::suite::{run_lemma_suite, SuiteConfig};
use crate::verify::{verify_bilinear, verify_brent};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "strassen", version, about = "Generate, verify and run Strassen-type 2x2 algorithms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a rank-7 algorithm from a params file
    Gen {
        params: PathBuf,
        /// Output file (default: standard output)
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check an algorithm file on all 16 basis pairs and the coefficient equations
    Verify { algorithm: PathBuf },
    /// Derive Strassen's algorithm from the canonical parameters
    Demo,
    /// Multiply two square CSV matrices with an algorithm applied recursively
    Multiply {
        algorithm: PathBuf,
        a: PathBuf,
        b: PathBuf,
        /// Blocks of this size or smaller are multiplied naively
        #[arg(long, default_value_t = 1)]
        cutoff: usize,
        /// Read and write decimal floats instead of exact scalars
        #[arg(long)]
        float: bool,
    },
    /// Run the randomized identity checks
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// "rational" or "prime:p"
        #[arg(long, default_value = "rational")]
        field: Field,
    },
    /// Time recursive against naive float multiplication
    Bench {
        #[arg(long, default_value_t = 256)]
        n: usize,
        #[arg(long, default_value_t = 64)]
        cutoff: usize,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Algorithm file (default: canonical Strassen)
        #[arg(long)]
        algorithm: Option<PathBuf>,
    },
    /// Write an algorithm as factor matrices U, V, W
    Export {
        algorithm: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

/// Exit status for an error: parse and I/O problems are usage errors.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidField(_) | Error::Io(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(out: &mut dyn Write, path: Option<PathBuf>, text: &str) -> crate::Result<()> {
    match path {
        Some(p) => io::write_text(&p, text),
        None => out.write_all(text.as_bytes()).map_err(Error::from),
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> crate::Result<i32> {
    match command {
        Command::Gen { params, out: path } => {
            let p = io::params_from_json(&io::read_text(&params)?)?;
            let report = validate_params(&p);
            if let Some(msg) = report.diagnostic() {
                writeln!(err, "invalid params: {msg}")?;
                return Ok(EXIT_FAILURE);
            }
            let alg = build_algorithm(&p)?;
            emit(out, path, &io::algorithm_to_json(&alg))?;
            Ok(EXIT_OK)
        }
        Command::Verify { algorithm } => {
            let alg = io::algorithm_from_json(&io::read_text(&algorithm)?)?;
            let report = verify_bilinear(&alg);
            let brent = verify_brent(&FactorMatrices::from_algorithm(&alg));
            for f in &report.failures {
                writeln!(out, "mismatch: {f}")?;
            }
            writeln!(
                out,
                "basis pairs: {}/{} correct; coefficient equations: {}/{} hold",
                report.checked_count - report.failures.len(),
                report.checked_count,
                brent.checked_count - brent.violations.len(),
                brent.checked_count
            )?;
            Ok(if report.passed && brent.passed { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Demo => {
            let (text, matches) = run_demo()?;
            out.write_all(text.as_bytes())?;
            if !matches {
                writeln!(err, "demo output differs from the golden text")?;
                return Ok(EXIT_FAILURE);
            }
            Ok(EXIT_OK)
        }
        Command::Multiply { algorithm, a, b, cutoff, float } => {
            let alg = io::algorithm_from_json(&io::read_text(&algorithm)?)?;
            let (a, b) = (io::read_text(&a)?, io::read_text(&b)?);
            let text = if float {
                let (a, b) = (io::matrix_from_csv_f64(&a)?, io::matrix_from_csv_f64(&b)?);
                let (p, _) = RecursiveMultiplier::<f64>::new(&alg, cutoff)?.multiply(&a, &b)?;
                io::matrix_to_csv_f64(&p)
            } else {
                let field = alg.field();
                let (a, b) = (io::matrix_from_csv(&a, field)?, io::matrix_from_csv(&b, field)?);
                let (p, _) = RecursiveMultiplier::new(&alg, cutoff)?.multiply(&a, &b)?;
                io::matrix_to_csv(&p)
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Suite { seed, trials, field } => {
            if trials == 0 {
                writeln!(err, "error: --trials must be at least 1")?;
                return Ok(EXIT_USAGE);
            }
            let report = run_lemma_suite(&SuiteConfig::new(seed, trials, field));
            write!(out, "{report}")?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Bench { n, cutoff, reps, seed, algorithm } => {
            if n == 0 || reps == 0 || cutoff == 0 {
                writeln!(err, "error: --n, --cutoff and --reps must be at least 1")?;
                return Ok(EXIT_USAGE);
            }
            let alg = match algorithm {
                Some(p) => io::algorithm_from_json(&io::read_text(&p)?)?,
                None => build_algorithm(&canonical_strassen_params(Field::Rational))?,
            };
            let report = bench(&alg, n, cutoff, reps, seed)?;
            out.write_all(report.to_csv().as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Export { algorithm, out: path } => {
            let alg = io::algorithm_from_json(&io::read_text(&algorithm)?)?;
            emit(out, path, &io::factors_to_json(&FactorMatrices::from_algorithm(&alg)))?;
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("strassen").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&[]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["suite", "--trials", "0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["suite", "--field", "prime:4"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "/nonexistent/alg.json"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("multiply"));
    }

    #[test]
    fn demo_and_suite_run() {
        let (code, out, _) = run_args(&["demo"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("(ab)^{2,1} = II + IV"));
        let (code, out, _) = run_args(&["suite", "--trials", "3", "--field", "prime:2"]);
        assert_eq!(code, EXIT_OK, "{out}");
    }

    #[test]
    fn bench_prints_two_rows() {
        let (code, out, _) = run_args(&["bench", "--n", "8", "--cutoff", "2", "--reps", "1"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 3);
    }
}
