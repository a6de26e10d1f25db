//! The `chebdiff` command-line interface.
//!
//! Exit codes: 0 success, 1 verification or bench-equality failure,
//! 2 usage error (bad flags, bad values, undefined combinations).
//! Single-object results print as one JSON line; `verify` prints one report
//! JSON line per suite; `matrix` defaults to CSV; `eval` prints a bare
//! exact rational. `--output PATH` redirects stdout payloads to a file.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;
use serde::Serialize;

use crate::bench::run_bench;
use crate::combinatorics::ExactRational;
use crate::deriv::{
    derivative_oracle, t_derivative_explicit, u_derivative_explicit, u_derivative_triple_sum,
    DiffMatrix,
};
use crate::poly::{clenshaw_eval, monomial_to_u, parse_rational, ChebBasis, ChebExpansion};
use crate::verify::{
    verify_inner_sum, verify_inversion, verify_t_explicit, verify_triple_sum, verify_u_explicit,
    VerificationReport,
};
use crate::Error;

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "chebdiff",
    version,
    about = "Exact Chebyshev-basis derivatives of Chebyshev polynomials"
)]
struct Cli {
    /// Write the command's output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    /// First kind (T).
    #[value(name = "T", alias = "t")]
    T,
    /// Second kind (U).
    #[value(name = "U", alias = "u")]
    U,
}

impl From<KindArg> for ChebBasis {
    fn from(kind: KindArg) -> ChebBasis {
        match kind {
            KindArg::T => ChebBasis::FirstKind,
            KindArg::U => ChebBasis::SecondKind,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    /// Closed-form coefficients, straight into the Chebyshev basis.
    Explicit,
    /// Unsimplified double sum (U only); cross-checks the closed form.
    TripleSum,
    /// Repeated monomial power rule; re-expanded into U, monomial for T.
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    U,
    T,
    Inversion,
    InnerSum,
    TripleSum,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print the monomial coefficients of T_n or U_n.
    Gen {
        #[arg(long)]
        kind: KindArg,
        /// Degree.
        #[arg(long)]
        n: usize,
    },
    /// Print the s-th derivative of T_n or U_n in its own Chebyshev basis.
    Derive {
        #[arg(long)]
        kind: KindArg,
        /// Degree.
        #[arg(long)]
        n: usize,
        /// Derivative order.
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Explicit)]
        method: MethodArg,
    },
    /// Print the U-basis expansion of the single power x^j.
    Invert {
        /// Exponent j.
        #[arg(long)]
        power: usize,
    },
    /// Assemble the s-th order differentiation matrix and print it.
    Matrix {
        #[arg(long)]
        kind: KindArg,
        /// Derivative order.
        #[arg(long)]
        s: usize,
        /// Largest representable degree (matrix is square of side n-max+1).
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Evaluate T_n or U_n exactly at a rational point.
    Eval {
        #[arg(long)]
        kind: KindArg,
        /// Degree.
        #[arg(long)]
        n: usize,
        /// Evaluation point as "p" or "p/q" (negative values welcome).
        #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
        at: String,
    },
    /// Run identity sweeps; prints one report JSON per suite, exits 1 on any failure.
    Verify {
        #[arg(long)]
        suite: SuiteArg,
        /// Sweep bound (degree or exponent, depending on the suite).
        #[arg(long)]
        n_max: usize,
    },
    /// Time the closed form against the oracle baseline over a degree ladder.
    Bench {
        /// Largest degree measured.
        #[arg(long)]
        n_max: usize,
        /// Derivative order.
        #[arg(long)]
        s: usize,
    },
}

/// A failure that ends the run before any payload is produced.
struct CliError {
    message: String,
    code: i32,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        message: message.into(),
        code: EXIT_USAGE,
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut line = serde_json::to_string(value).expect("canonical forms always serialize");
    line.push('\n');
    line
}

/// Exit code a set of verification reports maps to.
fn verify_exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn run_suites(suite: SuiteArg, n_max: usize) -> Vec<VerificationReport> {
    match suite {
        SuiteArg::U => vec![verify_u_explicit(n_max)],
        SuiteArg::T => vec![verify_t_explicit(n_max)],
        SuiteArg::Inversion => vec![verify_inversion(n_max)],
        SuiteArg::InnerSum => vec![verify_inner_sum(n_max)],
        SuiteArg::TripleSum => vec![verify_triple_sum(n_max)],
        SuiteArg::All => vec![
            verify_u_explicit(n_max),
            verify_t_explicit(n_max),
            verify_inversion(n_max),
            verify_inner_sum(n_max),
            verify_triple_sum(n_max),
        ],
    }
}

/// Run one parsed command; on success returns the stdout payload and the
/// exit code (verify can succeed at producing reports yet exit nonzero).
fn execute(command: Cmd) -> Result<(String, i32), CliError> {
    match command {
        Cmd::Gen { kind, n } => Ok((json_line(&ChebBasis::from(kind).monomial(n)), EXIT_OK)),
        Cmd::Derive { kind, n, s, method } => {
            let text = match (method, ChebBasis::from(kind)) {
                (MethodArg::Explicit, ChebBasis::SecondKind) => {
                    json_line(&u_derivative_explicit(n, s))
                }
                (MethodArg::Explicit, ChebBasis::FirstKind) => {
                    json_line(&t_derivative_explicit(n, s))
                }
                (MethodArg::TripleSum, ChebBasis::SecondKind) => {
                    json_line(&u_derivative_triple_sum(n, s))
                }
                (MethodArg::TripleSum, ChebBasis::FirstKind) => {
                    return Err(usage("--method triple-sum is only defined for --kind U"));
                }
                (MethodArg::Oracle, ChebBasis::SecondKind) => json_line(&monomial_to_u(
                    &derivative_oracle(n, s, ChebBasis::SecondKind),
                )),
                // No monomial-to-T conversion exists, so the T oracle stays
                // in the monomial basis.
                (MethodArg::Oracle, ChebBasis::FirstKind) => {
                    json_line(&derivative_oracle(n, s, ChebBasis::FirstKind))
                }
            };
            Ok((text, EXIT_OK))
        }
        Cmd::Invert { power } => Ok((json_line(&crate::poly::monomial_power_to_u(power)), EXIT_OK)),
        Cmd::Matrix {
            kind,
            s,
            n_max,
            format,
        } => {
            let matrix = DiffMatrix::new(kind.into(), s, n_max);
            let text = match format {
                FormatArg::Csv => matrix.to_csv(),
                FormatArg::Json => json_line(&matrix),
            };
            Ok((text, EXIT_OK))
        }
        Cmd::Eval { kind, n, at } => {
            let x = parse_rational(&at).map_err(|e| usage(format!("--at: {e}")))?;
            let basis_poly = ChebExpansion::from_terms(kind.into(), [(n, ExactRational::one())]);
            Ok((format!("{}\n", clenshaw_eval(&basis_poly, &x)), EXIT_OK))
        }
        Cmd::Verify { suite, n_max } => {
            let reports = run_suites(suite, n_max);
            let text: String = reports.iter().map(json_line).collect();
            Ok((text, verify_exit_code(&reports)))
        }
        Cmd::Bench { n_max, s } => match run_bench(n_max, s) {
            Ok(report) => Ok((report.to_table(), EXIT_OK)),
            Err(e @ Error::InvalidArgument(_)) => Err(usage(e.to_string())),
            Err(e) => Err(CliError {
                message: e.to_string(),
                code: EXIT_VERIFY_FAILED,
            }),
        },
    }
}

/// Parse argv and run one command, returning the process exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // --help/--version land here by design and are not failures.
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };
    let (text, code) = match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            return failure.code;
        }
    };
    match cli.output {
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{text}"),
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_exit_code_distinguishes_failures() {
        let passing: VerificationReport =
            serde_json::from_str(r#"{"suite":"demo","cases":3,"failures":[],"elapsed_ms":1}"#)
                .unwrap();
        let failing: VerificationReport = serde_json::from_str(
            r#"{"suite":"demo","cases":3,"failures":[{"params":{"n":1},"expected":"1","actual":"2"}],"elapsed_ms":1}"#,
        )
        .unwrap();
        assert_eq!(verify_exit_code(std::slice::from_ref(&passing)), 0);
        assert_eq!(verify_exit_code(&[passing, failing]), 1);
        assert_eq!(verify_exit_code(&[]), 0);
    }

    #[test]
    fn suite_selection_covers_all() {
        let reports = run_suites(SuiteArg::All, 4);
        let names: Vec<&str> = reports.iter().map(|r| r.suite()).collect();
        assert_eq!(
            names,
            [
                "u-explicit",
                "t-explicit",
                "inversion",
                "inner-sum",
                "triple-sum"
            ]
        );
        assert_eq!(run_suites(SuiteArg::InnerSum, 4)[0].suite(), "inner-sum");
    }

    #[test]
    fn execute_rejects_t_triple_sum() {
        let outcome = execute(Cmd::Derive {
            kind: KindArg::T,
            n: 4,
            s: 1,
            method: MethodArg::TripleSum,
        });
        let err = outcome.expect_err("must be rejected");
        assert_eq!(err.code, EXIT_USAGE);
        assert!(err.message.contains("triple-sum"));
    }

    #[test]
    fn execute_formats_eval_exactly() {
        let (text, code) = execute(Cmd::Eval {
            kind: KindArg::U,
            n: 3,
            at: "1/2".to_string(),
        })
        .ok()
        .unwrap();
        assert_eq!(text, "-1\n");
        assert_eq!(code, 0);
    }

    #[test]
    fn execute_rejects_malformed_eval_point() {
        let err = execute(Cmd::Eval {
            kind: KindArg::T,
            n: 2,
            at: "1/0".to_string(),
        })
        .expect_err("zero denominator must be rejected");
        assert_eq!(err.code, EXIT_USAGE);
    }
}
