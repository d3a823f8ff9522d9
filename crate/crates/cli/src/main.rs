//! `hopfrb`: command-line front end.
//!
//! Exit codes: 0 pass, 1 check failure, 2 input error, 3 failed precondition.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopfrb_core::scalar::{FieldKind, Fp, Rational};
use hopfrb_core::VerificationReport;

#[derive(Parser, Debug)]
#[command(name = "hopfrb", version, about = "Exact checks for Hopf algebras, L-R smash (co)products and Rota-Baxter (co-)operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Coefficient field: `rational` or `gf:P`. Defaults to the field the inputs declare.
    #[arg(long, global = true)]
    pub field: Option<FieldKind>,
    /// Worker threads for enumerations and harness runs.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify the Hopf algebra axioms of an algebra file.
    CheckHopf { algebra: String },
    /// Verify a bimodule Hopf algebra: `[A H] ACTION`.
    CheckAction {
        #[arg(num_args = 1..=3, required = true)]
        paths: Vec<String>,
    },
    /// Verify a bicomodule Hopf algebra: `[C H] COACTION`.
    CheckCoaction {
        #[arg(num_args = 1..=3, required = true)]
        paths: Vec<String>,
    },
    /// Build the L-R smash product: `[A H] ACTION`.
    Smash {
        #[arg(num_args = 1..=3, required = true)]
        paths: Vec<String>,
    },
    /// Build the L-R smash coproduct: `[C H] COACTION`.
    Cosmash {
        #[arg(num_args = 1..=3, required = true)]
        paths: Vec<String>,
    },
    /// Check the Rota-Baxter operator identity for a map on an algebra.
    CheckRb { algebra: String, map: String },
    /// Check the Rota-Baxter co-operator identity for a map on an algebra.
    CheckCorb { algebra: String, map: String },
    /// Write the lift `B̄` of `R` and `B` to the smash product as a map file.
    Lift { action: String, r: String, b: String },
    /// Write the lift `B̃` of `R` and `B` to the smash coproduct as a map file.
    Colift { coaction: String, r: String, b: String },
    /// Check one family of lifting conditions.
    CheckConditions {
        #[arg(long)]
        which: Which,
        #[arg(long, conflicts_with = "coaction")]
        action: Option<String>,
        #[arg(long)]
        coaction: Option<String>,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        b: Option<String>,
    },
    /// List every Rota-Baxter map on a finite group as JSON lines.
    Enumerate {
        /// `C<n>`, `S<n>`, products such as `C2xC2`, or an algebra file with a group table.
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = hopfrb_core::search::DEFAULT_GROUP_BOUND)]
        bound: usize,
        /// Also test whether each transposed map is a co-operator on `k^G` (abelian groups).
        #[arg(long)]
        duality: bool,
    },
    /// Dualize an algebra, action, coaction or map file.
    Dualize { input: String },
    /// Run the lifting equivalence over every basis-permuting candidate `R`, as JSON lines.
    Harness {
        #[arg(long, conflicts_with = "coaction", required_unless_present = "coaction")]
        action: Option<String>,
        #[arg(long)]
        coaction: Option<String>,
        #[arg(long)]
        b: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    #[value(name = "2a2b")]
    Thm22,
    Cor24,
    Cor25,
    #[value(name = "3c3d")]
    Thm33,
    Cor34,
    Cor35,
    Cor36,
    Internal,
}

/// Why a command did not produce a result.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Precondition(String, Option<VerificationReport>),
}

impl From<hopfrb_core::Error> for CliError {
    fn from(e: hopfrb_core::Error) -> Self {
        use hopfrb_core::Error as E;
        match e {
            E::Precondition { context, report } => CliError::Precondition(context, Some(*report)),
            e @ (E::NotCocommutative(_) | E::NotCommutative(_)) => CliError::Precondition(e.to_string(), None),
            e => CliError::Input(e.to_string()),
        }
    }
}

/// Text to emit and whether the check passed.
pub struct Output {
    pub text: String,
    pub passed: bool,
}

macro_rules! dispatch {
    ($field:expr, $cli:expr, $($p:literal)*) => {
        match $field {
            FieldKind::Rational => commands::run::<Rational>($cli),
            $(FieldKind::Gf { p: $p } => commands::run::<Fp<$p>>($cli),)*
            FieldKind::Gf { p } => Err(CliError::Input(format!(
                "field `field`: gf:{p} is not supported; use a prime among {}",
                [$($p.to_string()),*].join(", ")
            ))),
        }
    };
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Input(format!("--jobs: {e}")))?;
    }
    let field = commands::effective_field(cli)?;
    dispatch!(field, cli, 2 3 5 7 11 13 17 19 23 29 31)
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.text) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Precondition(msg, report)) => {
            eprintln!("precondition failed: {msg}");
            if let Some(r) = report {
                print!("{}", hopfrb_core::format::to_canonical_json(&r));
            }
            ExitCode::from(3)
        }
    }
}
