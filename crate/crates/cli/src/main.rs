//! `hurwitz`: exact Hurwitz numbers of sphere coverings from the command
//! line. Factorization counting, generating-function expansion, closed
//! formulas, tree-algebra fitting, and a self-verification battery.

mod cache;
mod commands;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "hurwitz", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count transitive factorizations and print the Hurwitz number.
    Oracle(OracleArgs),
    /// Evaluate closed formulas.
    #[command(subcommand)]
    Closed(ClosedCommand),
    /// Expand the primitive-covering generating function F.
    ExpandF(ExpandArgs),
    /// Expand the simple-covering generating function G.
    ExpandG(ExpandArgs),
    /// Read a Hurwitz number off a generating-function coefficient.
    Extract(ExtractArgs),
    /// Enumerate decomposition lists with their q, p, m counts.
    Lists(ListsArgs),
    /// Work in the algebra generated by the tree series.
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    /// Run consistency checks; exit 1 on any failure.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args)]
struct OracleArgs {
    /// Sheet count.
    #[arg(long)]
    n: usize,
    /// Ramification profile, comma-separated parts; repeatable.
    #[arg(long = "kappa", value_name = "PARTS")]
    kappas: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum ClosedCommand {
    /// One-profile coverings: the classical closed formula.
    Hurwitz {
        #[arg(long)]
        n: u32,
        /// Profile parts, comma-separated (empty for no special point).
        #[arg(long, default_value = "")]
        kappa: String,
        #[arg(long)]
        json: bool,
    },
    /// The four closed formulas for small multi-point profiles.
    Profile {
        /// One of 2,2 / 2,3 / 3,3 / 2,2,2.
        #[arg(long)]
        parts: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Formulas for coverings with one distinguished critical point.
    OnePoint {
        #[arg(long, value_enum)]
        variant: OnePointVariant,
        #[arg(long)]
        n: u32,
        /// Factor count, for the max-cycle and next-max-cycle variants.
        #[arg(long)]
        k: Option<u32>,
        /// Multiplicity, for the single-cycle variant.
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Tabulated coefficient polynomials P_M.
    Pm {
        /// Monomial in y2, y3, ... (e.g. y2^2).
        #[arg(long)]
        monomial: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OnePointVariant {
    /// Critical point of the largest multiplicity n-1.
    MaxCycle,
    /// Critical point of multiplicity n-2.
    NextMaxCycle,
    /// One critical point of multiplicity i, all others simple.
    SingleCycle,
    /// All critical points simple.
    AllSimple,
}

#[derive(Args)]
struct ExpandArgs {
    /// Truncation order.
    #[arg(long)]
    order: u32,
    #[arg(long)]
    json: bool,
    /// Write the canonical JSON dump to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Series cache directory (HURWITZ_CACHE overrides the default
    /// ./.hurwitz-cache).
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct ExtractArgs {
    /// Which generating function to read.
    #[arg(long, value_parser = ["f", "g"])]
    series: String,
    /// Monomial such as y2^2*y1^4 or x1^2*x2 (t-degree implied).
    #[arg(long, conflicts_with = "table")]
    monomial: Option<String>,
    /// Print every (monomial, Hurwitz number) row up to --order instead.
    #[arg(long)]
    table: bool,
    /// Truncation order; defaults to the monomial's own degree.
    #[arg(long)]
    order: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ListsArgs {
    #[arg(long)]
    i: u32,
    #[arg(long)]
    j: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Express a series as a Laurent polynomial in X = 1 - Y.
    Express {
        /// fempty | dfempty | f1sq | f2 | f11 | y | z | z2
        #[arg(long)]
        target: String,
        /// Fixed Laurent degree; searched upward when omitted.
        #[arg(long)]
        max_deg: Option<u32>,
        /// Truncation order used for the fit.
        #[arg(long, default_value_t = 25)]
        order: u32,
        #[arg(long)]
        json: bool,
    },
    /// Fit a series coefficientwise as (L(n) n^n + P(n) A_n) / n!.
    Alg1Fit {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 4)]
        laurent_neg: u32,
        #[arg(long, default_value_t = 2)]
        laurent_pos: u32,
        #[arg(long, default_value_t = 2)]
        poly_deg: u32,
        #[arg(long, default_value_t = 30)]
        order: u32,
        #[arg(long)]
        json: bool,
    },
    /// Check the defining identities of the algebra.
    Identities {
        #[arg(long, default_value_t = 40)]
        order: u32,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// The recurrence for F against the closed construction.
    PdeF {
        #[arg(long, default_value_t = 10)]
        order: u32,
    },
    /// The recurrence for G against its displayed terms and coefficients.
    PdeG {
        #[arg(long, default_value_t = 8)]
        order: u32,
    },
    /// Generating-function coefficients against factorization counts.
    OracleCross {
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
    /// Tree-algebra identities and worked series.
    Algebra {
        #[arg(long, default_value_t = 40)]
        order: u32,
    },
    /// Everything above, plus the closed-formula and polynomial tables.
    All {
        /// Truncation order for G (other sections use their defaults).
        #[arg(long, default_value_t = 8)]
        order: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Oracle(args) => commands::oracle(args),
        Command::Closed(cmd) => commands::closed(cmd),
        Command::ExpandF(args) => commands::expand(hurwitz_core::VarFamily::X, args),
        Command::ExpandG(args) => commands::expand(hurwitz_core::VarFamily::Y, args),
        Command::Extract(args) => commands::extract(args),
        Command::Lists(args) => commands::lists(args),
        Command::Algebra(cmd) => commands::algebra(cmd),
        Command::Verify(cmd) => verify::run(cmd),
    }
}
