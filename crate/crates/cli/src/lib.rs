//! Command-line front end for `wzb-core`: the term-definition language and
//! the command implementations.

mod commands;
pub mod dsl;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use commands::execute;

#[derive(Debug, Parser)]
#[command(name = "wzb", version, about = "WZ pairs, Barnes integrals and Ramanujan-type series at high precision")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, clap::Args)]
pub struct NumericArgs {
    /// Significant decimal digits (at least 10).
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(10..=2000))]
    pub digits: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run registered identities and compare them with their closed forms.
    Reproduce {
        #[arg(long, conflicts_with = "item")]
        all: bool,
        #[arg(long)]
        item: Option<String>,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// List the registered identities.
    List,
    /// Check the WZ equation exactly for every pair in a file.
    Verify { file: PathBuf },
    /// Evaluate every integrand in a file on its pole-separating line.
    Barnes {
        file: PathBuf,
        /// Value of the parameter t.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Sum the left residue families of every integrand in a file.
    Residues {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Sum every weighted series in a file.
    Series {
        file: PathBuf,
        /// Value of the parameter x.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Diagonal summation identity for every pair in a file.
    Diagonal {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Row-sum formula sum_n G(n,k) - G(n,k+1) = F(n0,k) - lim F for every pair in a file.
    Rowsum {
        file: PathBuf,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Print the dual of every term and pair in a file: t(n,k) -> t(-n,-k) with
    /// Gamma reflection, and (F, G) -> (F^(n,k), G^(n+1,k-1)) for pairs.
    Dual { file: PathBuf },
    /// Evaluate every term in a file at a point.
    Eval {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        k: String,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Print a file in canonical form.
    Fmt { file: PathBuf },
    /// Run every acceptance criterion.
    Acceptance {
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(10..=2000))]
        digits: u32,
        /// Precision of the second run used for the monotonicity check.
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(10..=2000))]
        high_digits: u32,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: dsl::ParseError,
    },
    #[error("{path}: {source}")]
    Lower {
        path: PathBuf,
        #[source]
        source: dsl::LowerError,
    },
    #[error(transparent)]
    Core(#[from] wzb_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(_) => 1,
            _ => 2,
        }
    }
}

/// Parse arguments, run the command and return the process exit code:
/// 0 when everything passes, 1 on any failure, 2 on usage or parse errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(all_pass) => i32::from(!all_pass),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
