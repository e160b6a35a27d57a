//! Argument parsing and the process-level contract (output and exit codes).

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use entwining::criteria::DEFAULT_BUDGET;
use entwining::exactlin::Field;

use crate::commands::{dispatch, Command, Options, SideChoice};
use crate::workspace::Workspace;

/// Exit code for unreadable or malformed input.
pub const EXIT_INPUT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Contra,
    Co,
    Both,
}

#[derive(Debug, Parser)]
#[command(name = "entwining", version, about = "Exact checks and decision procedures for entwining structures")]
pub struct Cli {
    /// Ground field: `rational` or `prime:P`; overrides the workspace field of a rational file.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Sub,
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse::<Field>().map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Verify the axioms of the named objects (all objects if none are named).
    Check {
        file: PathBuf,
        names: Vec<String>,
        /// Seed for the random adjunction probes on entwinings.
        #[arg(long, env = "SEED")]
        seed: Option<u64>,
    },
    /// Coinvariants, canonical map and Galois property of a Galois datum.
    Galois { file: PathBuf, name: String },
    /// Verify a measuring and test its Galois properties.
    Measuring { file: PathBuf, name: String },
    /// Right adjoint on entwined modules: pulls a target module back to the source.
    Cotensor { file: PathBuf, measuring: String, module: String },
    /// Left adjoint on entwined modules: pushes a source module to the target.
    Hattensor { file: PathBuf, measuring: String, module: String },
    /// Left adjoint on entwined contramodules: pulls a target contramodule back to the source.
    Cohom { file: PathBuf, measuring: String, contramodule: String },
    /// Right adjoint on entwined contramodules: pushes a source contramodule to the target.
    Homtilde { file: PathBuf, measuring: String, contramodule: String },
    /// Separability of the induction and forgetful functors on both sides.
    Separability { file: PathBuf, entwining: String },
    /// Whether the induction and forgetful functors form a Frobenius pair.
    Frobenius {
        file: PathBuf,
        entwining: String,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
        /// Maximum number of candidates for the exhaustive search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Search for a normalized cointegral.
    Cointegral { file: PathBuf, entwining: String },
    /// Maschke-type splitting checks on a small corpus, given a cointegral.
    MaschkeProbe { file: PathBuf, entwining: String },
}

fn split(sub: Sub) -> (PathBuf, Command, Options) {
    let mut opts = Options {
        budget: DEFAULT_BUDGET,
        seed: None,
        side: SideChoice::Both,
    };
    let (file, command) = match sub {
        Sub::Check { file, names, seed } => {
            opts.seed = Some(seed.unwrap_or(0));
            (file, Command::Check { names })
        }
        Sub::Galois { file, name } => (file, Command::Galois { name }),
        Sub::Measuring { file, name } => (file, Command::Measuring { name }),
        Sub::Cotensor { file, measuring, module } => (file, Command::Cotensor { measuring, module }),
        Sub::Hattensor { file, measuring, module } => (file, Command::HatTensor { measuring, module }),
        Sub::Cohom {
            file,
            measuring,
            contramodule,
        } => (file, Command::Cohom { measuring, contramodule }),
        Sub::Homtilde {
            file,
            measuring,
            contramodule,
        } => (file, Command::HomTilde { measuring, contramodule }),
        Sub::Separability { file, entwining } => (file, Command::Separability { entwining }),
        Sub::Frobenius {
            file,
            entwining,
            side,
            budget,
        } => {
            opts.budget = budget;
            opts.side = match side {
                SideArg::Contra => SideChoice::Contra,
                SideArg::Co => SideChoice::Co,
                SideArg::Both => SideChoice::Both,
            };
            (file, Command::Frobenius { entwining })
        }
        Sub::Cointegral { file, entwining } => (file, Command::Cointegral { entwining }),
        Sub::MaschkeProbe { file, entwining } => (file, Command::MaschkeProbe { entwining }),
    };
    (file, command, opts)
}

/// Runs the tool on `args` (including the program name) and returns stdout, stderr and the exit code.
pub fn run(args: &[String]) -> (String, String, i32) {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let text = e.render().to_string();
            return if e.use_stderr() {
                (String::new(), text, code)
            } else {
                (text, String::new(), code)
            };
        }
    };
    let format = cli.format;
    let (file, command, opts) = split(cli.command);
    let ws = match Workspace::load(&file, cli.field) {
        Ok(ws) => ws,
        Err(e) => return (String::new(), format!("error: {e}\n"), EXIT_INPUT),
    };
    match dispatch(&command, &ws, &opts) {
        Ok(outcome) => {
            let text = match format {
                Format::Json => outcome.to_json() + "\n",
                Format::Text => outcome.to_text(),
            };
            (text, String::new(), outcome.exit_code())
        }
        Err(e) => (String::new(), format!("error: {e}\n"), EXIT_INPUT),
    }
}
