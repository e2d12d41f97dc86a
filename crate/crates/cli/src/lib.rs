//! Command-line front end: JSON ingestion, analyses and reports.

pub mod commands;
pub mod error;
pub mod report;
pub mod schema;

use std::path::PathBuf;

use braidforge_core::Limits;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use error::CliError;
pub use report::Report;

#[derive(Parser, Debug)]
#[command(name = "braidforge", version, about = "Exact invariants of braided fusion data")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Config {
    /// Tolerance for Frobenius-Perron computations.
    #[arg(long, global = true, default_value_t = 1e-6, env = "BRAIDFORGE_TOLERANCE")]
    pub tolerance: f64,
    /// Largest group order whose subgroups are enumerated.
    #[arg(long, global = true, default_value_t = 256, env = "BRAIDFORGE_ENUM_GUARD")]
    pub enum_guard: u64,
    /// Largest group order whose automorphisms are enumerated.
    #[arg(long, global = true, default_value_t = 64, env = "BRAIDFORGE_AUT_GUARD")]
    pub aut_guard: u64,
    /// Largest rank whose subring lattice is built.
    #[arg(long, global = true, default_value_t = 12, env = "BRAIDFORGE_RANK_GUARD")]
    pub rank_guard: usize,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json, env = "BRAIDFORGE_OUTPUT")]
    pub output: Output,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Json,
    Text,
}

impl Config {
    pub fn limits(&self) -> Limits {
        Limits {
            enum_guard: self.enum_guard,
            aut_guard: self.aut_guard,
            rank_guard: self.rank_guard,
        }
    }

    pub fn check(&self) -> Result<(), CliError> {
        if !(self.tolerance > 0.0 && self.tolerance < 1e-2) {
            return Err(CliError::Schema(format!(
                "tolerance {} is outside (0, 0.01)",
                self.tolerance
            )));
        }
        if self.enum_guard == 0 || self.aut_guard == 0 || self.rank_guard == 0 {
            return Err(CliError::Schema("guards must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Pre-metric groups, from a qform file.
    Qform {
        #[command(subcommand)]
        op: QformOp,
    },
    /// Fusion rings, from a ring file.
    Fusion {
        #[command(subcommand)]
        op: FusionOp,
    },
    /// Pre-modular data, from a datum file.
    Premodular {
        #[command(subcommand)]
        op: PremodularOp,
    },
    /// Writes a datum file for a built-in example.
    Catalog {
        #[command(subcommand)]
        op: CatalogOp,
    },
}

#[derive(Subcommand, Debug)]
pub enum QformOp {
    Analyze { file: PathBuf },
    Classify { file: PathBuf },
    Gauss { file: PathBuf },
    Witt { file: PathBuf },
    Core { file: PathBuf },
    Wap { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum FusionOp {
    Check { file: PathBuf },
    Dims { file: PathBuf },
    Grading { file: PathBuf },
    Subrings { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum PremodularOp {
    Report {
        file: PathBuf,
    },
    Centralizer {
        file: PathBuf,
        /// Basis indices of the subring, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        subring: Vec<usize>,
    },
    Gfp {
        file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogOp {
    /// The Ising datum at ζ = e^{2πi k/16}.
    Ising {
        /// `k/16` with `k` odd.
        #[arg(long)]
        zeta: String,
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
    },
    /// The group ring of a pre-metric group, twisted by an optional sign
    /// character.
    Pointed {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        chi: Option<PathBuf>,
    },
    Product {
        a: PathBuf,
        b: PathBuf,
    },
}

/// What a run prints and the exit code it ends with.
pub struct Outcome {
    pub text: String,
    pub code: i32,
    /// Set when the run stopped on an error.
    pub diagnostic: Option<String>,
}

pub fn run(cli: &Cli) -> Outcome {
    let subject = commands::subject(&cli.command);
    let result = cli.config.check().and_then(|_| commands::dispatch(&cli.command, &cli.config));
    let (text, code, diagnostic) = match result {
        Ok(commands::Produced::Datum(s)) => (s, 0, None),
        Ok(commands::Produced::Report(r)) => {
            let code = if r.all_pass() { 0 } else { 1 };
            (render(&r, cli.config.output), code, None)
        }
        Err(e) => (
            render(&Report::failed(subject, &e), cli.config.output),
            e.exit_code(),
            Some(format!("{}: {e}", e.kind())),
        ),
    };
    match &cli.config.out {
        Some(path) => match report::write_atomic(path, &text) {
            Ok(()) => Outcome {
                text: String::new(),
                code,
                diagnostic,
            },
            Err(e) => Outcome {
                text: String::new(),
                code: e.exit_code(),
                diagnostic: Some(e.to_string()),
            },
        },
        None => Outcome {
            text,
            code,
            diagnostic,
        },
    }
}

fn render(r: &Report, output: Output) -> String {
    match output {
        Output::Json => r.render_json(),
        Output::Text => r.render_text(),
    }
}
