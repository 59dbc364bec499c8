//! Command-line front end.
//!
//! Exit codes: 0 success or passing verdict, 1 failing verdict, 2 usage
//! or resource-limit error, 3 I/O error, 4 malformed or invalid input.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gerst::checks::{
    check_bracket_structure_with, check_commutativity_with, check_thm2_with, check_thm3_with, Fault,
};
use gerst::cochain::{cohomology, cohomology_uncapped, Coefficients};
use gerst::hopf::check_hopf_axioms;
use gerst::io::parse_hopf;
use gerst::registry::BUILTINS;
use gerst::report::CheckReport;
use gerst::{builtin, with_hopf, AnyHopf, Error, FieldSpec};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_INPUT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "gerst",
    version,
    about = "Exact Hochschild cohomology and Gerstenhaber structure of finite-dimensional Hopf algebras",
    after_help = "Exit codes: 0 success/pass, 1 verdict fail, 2 usage or resource limit, 3 I/O error, 4 malformed or invalid input.\nThe resource guard defaults to 1e8 scalars per object; override with GERST_MAX_ENTRIES."
)]
struct Cli {
    /// Base field for built-in algebras: a prime (7, F7, F_7) or Q.
    #[arg(long, global = true)]
    field: Option<FieldSpec>,

    /// Report rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Import files without checking the Hopf axioms.
    #[arg(long, global = true)]
    skip_validation: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Coeff {
    Trivial,
    Adjoint,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Thm2,
    Thm3,
    Comm,
    Bracket,
}

#[derive(Subcommand)]
enum Command {
    /// Built-in algebras.
    Algebras {
        #[command(subcommand)]
        action: AlgebrasAction,
    },
    /// Check the Hopf axioms of a built-in or a HopfFile.
    Verify {
        /// Built-in name or path to a HopfFile.
        algebra: String,
    },
    /// Hochschild cohomology dimensions.
    Cohomology {
        algebra: String,
        #[arg(long, value_enum, default_value_t = Coeff::Trivial)]
        coefficients: Coeff,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Compute above the default degree cap for the dimension.
        #[arg(long)]
        no_degree_cap: bool,
        /// Include cocycle bases in JSON output.
        #[arg(long)]
        bases: bool,
    },
    /// Build the Drinfeld double and write it as a HopfFile.
    Double {
        algebra: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a verification check.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        algebra: String,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Degree budget for thm2 (default 4) and bracket (default 3).
        #[arg(long)]
        max_degree: Option<usize>,
        /// Inject a single perturbed scalar, e.g. hat:0, brace:3, cup:1, bracket:0.
        #[arg(long)]
        fault: Option<Fault>,
    },
    /// Write a built-in algebra as a HopfFile.
    Export {
        algebra: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum AlgebrasAction {
    /// List the built-in names.
    List,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) => EXIT_IO,
        Error::Malformed { .. }
        | Error::ScalarParse { .. }
        | Error::AxiomFailure { .. }
        | Error::DimensionMismatch { .. } => EXIT_INPUT,
        _ => EXIT_USAGE,
    }
}

/// A built-in name, or a path to a HopfFile when one exists there.
fn load(cli: &Cli, name: &str, validate: bool) -> Result<AnyHopf, Error> {
    let path = Path::new(name);
    if path.is_file() {
        parse_hopf(path, validate && !cli.skip_validation)
    } else if name.ends_with(".json") {
        Err(Error::Io(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("no such file: {name}"),
        )))
    } else {
        builtin(name, cli.field)
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit_check(cli: &Cli, report: &CheckReport) -> u8 {
    match cli.format {
        Format::Text => emit(&report.to_string()),
        Format::Json => emit(&format!("{}\n", report.to_json())),
    }
    if report.passed() {
        0
    } else {
        EXIT_FAIL
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Algebras {
            action: AlgebrasAction::List,
        } => {
            match cli.format {
                Format::Text => {
                    let width = BUILTINS.iter().map(|b| b.0.len()).max().unwrap_or(0);
                    for (name, about) in BUILTINS {
                        emit(&format!("{name:<width$}  {about}\n"));
                    }
                }
                Format::Json => {
                    let list: Vec<_> = BUILTINS
                        .iter()
                        .map(|(n, a)| serde_json::json!({"name": n, "description": a}))
                        .collect();
                    let text = serde_json::to_string_pretty(&list).expect("list serializes");
                    emit(&format!("{text}\n"));
                }
            }
            Ok(0)
        }
        Command::Verify { algebra } => {
            let h = load(cli, algebra, false)?;
            let report = with_hopf!(&h, h => check_hopf_axioms(h));
            if cli.format == Format::Text {
                emit(&format!(
                    "{} (dim {}, {})\n",
                    h.name(),
                    h.dim(),
                    h.field_spec()
                ));
            }
            Ok(emit_check(cli, &report))
        }
        Command::Cohomology {
            algebra,
            coefficients,
            max_degree,
            no_degree_cap,
            bases,
        } => {
            let h = load(cli, algebra, true)?;
            let coeff = match coefficients {
                Coeff::Trivial => Coefficients::Trivial,
                Coeff::Adjoint => Coefficients::Adjoint,
            };
            with_hopf!(&h, h => {
                let report = if *no_degree_cap {
                    cohomology_uncapped(h, coeff, *max_degree)?
                } else {
                    cohomology(h, coeff, *max_degree)?
                };
                match cli.format {
                    Format::Text => emit(&report.to_string()),
                    Format::Json => emit(&format!("{}\n", report.to_json(*bases))),
                }
            });
            Ok(0)
        }
        Command::Double { algebra, out } => {
            let h = load(cli, algebra, true)?.double()?;
            std::fs::write(out, h.to_json())?;
            emit(&format!(
                "wrote {} (dim {}, {}) to {}\n",
                h.name(),
                h.dim(),
                h.field_spec(),
                out.display()
            ));
            Ok(0)
        }
        Command::Export { algebra, out } => {
            let h = builtin(algebra, cli.field)?;
            std::fs::write(out, h.to_json())?;
            emit(&format!(
                "wrote {} (dim {}, {}) to {}\n",
                h.name(),
                h.dim(),
                h.field_spec(),
                out.display()
            ));
            Ok(0)
        }
        Command::Check {
            kind,
            algebra,
            p,
            q,
            trials,
            seed,
            max_degree,
            fault,
        } => {
            let h = load(cli, algebra, true)?;
            let (p, q, t, s, f) = (*p, *q, *trials, *seed, *fault);
            let report = with_hopf!(&h, h => match kind {
                CheckKind::Thm2 => check_thm2_with(h, max_degree.unwrap_or(4), t, s, f)?,
                CheckKind::Thm3 => check_thm3_with(h, p, q, t, s, f)?,
                CheckKind::Comm => check_commutativity_with(h, p, q, t, s, f)?,
                CheckKind::Bracket => {
                    check_bracket_structure_with(h, max_degree.unwrap_or(3), t, s, f)?
                }
            });
            Ok(emit_check(cli, &report))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
