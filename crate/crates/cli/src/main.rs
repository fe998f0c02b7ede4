//! Command-line front end for the polynomial workbench: generate exact
//! coefficients, run verification suites, isolate roots.
//!
//! Exit codes: 0 all checks pass, 1 verification failure, 2 usage or
//! precondition error, 3 internal error.

mod document;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use xilambda_core::poly::MAX_N;

#[derive(Parser)]
#[command(name = "xilambda", version, about = "Exact-arithmetic workbench for the Xi/Lambda polynomial families", max_term_width = 100)]
struct Cli {
    /// Omit the timestamp from reports (byte-identical reruns).
    #[arg(long, global = true)]
    no_timestamp: bool,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Xi,
    Lambda,
}

impl FamilyArg {
    fn to_family(self) -> xilambda_core::poly::Family {
        match self {
            FamilyArg::Xi => xilambda_core::poly::Family::Xi,
            FamilyArg::Lambda => xilambda_core::poly::Family::Lambda,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    /// Exact desk suites: structural, eulerian, pi-multiple, property.
    Structural,
    /// Sturm isolation, interlacing, extremal zeros.
    Roots,
    /// Quadrature against the series references.
    Integral,
    /// Everything.
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the exact coefficients of one polynomial.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Polynomial index (1..=64).
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Run verification suites and emit a pass/fail report.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Highest polynomial index; defaults to each suite's cap
        /// (structural 12, roots 10, integral 6).
        #[arg(long = "n-max")]
        n_max: Option<u32>,
        /// Working precision for the numeric suites in decimal digits.
        #[arg(long, default_value_t = 12)]
        digits: usize,
        /// Allow n-max beyond the per-suite caps (hard limit 64).
        #[arg(long)]
        force: bool,
        /// Worker pool size (defaults to the number of processors).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Isolate the real roots of the adapted polynomial at one index.
    Roots {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Polynomial index (1..=64).
        #[arg(long)]
        n: u32,
        /// Isolation width exponent: intervals are narrowed to 2^-W.
        #[arg(long = "width-bits", default_value_t = 80)]
        width_bits: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Gen { family, n, format } => {
            if *n < 1 || *n > MAX_N {
                eprintln!("error: n must lie in 1..={MAX_N}");
                2
            } else {
                run::gen(&cli, family.to_family(), *n, *format)
            }
        }
        Command::Verify {
            suite,
            n_max,
            digits,
            force,
            threads,
        } => run::verify(&cli, *suite, *n_max, *digits, *force, *threads),
        Command::Roots {
            family,
            n,
            width_bits,
        } => {
            if *n < 1 || *n > MAX_N {
                eprintln!("error: n must lie in 1..={MAX_N}");
                2
            } else if *width_bits == 0 || *width_bits > 512 {
                eprintln!("error: width-bits must lie in 1..=512");
                2
            } else {
                run::roots(&cli, family.to_family(), *n, *width_bits)
            }
        }
    };
    ExitCode::from(code)
}
