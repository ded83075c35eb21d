//! `sheafcalc`: command-line front end for the sheafcalc engines.
//!
//! Exit status: 0 success, 1 verification failure, 2 parse or usage error,
//! 3 when the only answer available is "indeterminate".

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "sheafcalc",
    version,
    about = "Exact Chern class, cohomology and liaison calculus on projective space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Total Chern class and rank of the sheaf a complex presents.
    Chern {
        /// Complex such as "0 -> O(-3) -> 4O -> E -> 0".
        complex: String,
        /// Report the class of the twist E(k) instead.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
        /// Ambient dimension n of P^n (line bundles only unless n = 3).
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    /// Euler characteristic chi(E(t)) as a polynomial, or its value at t.
    Chi {
        complex: String,
        #[arg(long, allow_hyphen_values = true)]
        at: Option<i64>,
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    /// h^0(E(t)) when the resolution shape determines it.
    H0 {
        complex: String,
        #[arg(long, allow_hyphen_values = true)]
        at: i64,
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    /// Hilbert polynomial of the curve a Betti table file resolves.
    Betti2hilb { file: PathBuf },
    /// Castelnuovo-Mumford regularity of a Betti table file.
    Reg { file: PathBuf },
    /// Global-generation verdict for I_Y(m).
    Ggcheck {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        twist: i64,
        /// The table resolves the saturated ideal (complete intersection, ACM).
        #[arg(long)]
        ci: bool,
    },
    /// Resolution of the bundle built from a curve table via (r-1)O -> E -> I_Y(3).
    Cone {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        rank: i64,
    },
    /// Residue of a curve (or a disjoint union) in a complete intersection.
    Liaison {
        /// Surface degrees "d1,d2".
        #[arg(long, value_name = "D1,D2")]
        ci: String,
        /// Curve "d,pa"; repeat for the components of a disjoint union.
        #[arg(long, value_name = "D,PA", required = true, allow_hyphen_values = true)]
        curve: Vec<String>,
        /// omega_Y = O_Y(e); one value, or one per --curve.
        #[arg(long, allow_hyphen_values = true)]
        omega: Vec<i64>,
        /// Treat a divergence from a registry-quoted value as a failure.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        registry: Option<PathBuf>,
    },
    /// Line factors (1 + a h) of a Chern class.
    Factor {
        /// Coefficients "1 3 9 27" or a class "1 + 3h + 9h^2 + 27h^3".
        coeffs: String,
        #[arg(long)]
        rank: i64,
        #[arg(long, default_value_t = 10)]
        bound: i64,
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    /// Replay the classification registry.
    Verify {
        /// Only this entry (1..9).
        #[arg(long)]
        entry: Option<u32>,
        /// Treat divergences from quoted values as failures.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Registry file; defaults to $SHEAFCALC_REGISTRY, then the built-in registry.
        #[arg(long)]
        registry: Option<PathBuf>,
    },
    /// Replay and list every excluded case with its rule.
    Exclusions {
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        registry: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
