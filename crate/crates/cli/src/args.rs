//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qtchar::{FactorSpec, Orbit, RootDatum, SpectralShift};

#[derive(Debug, Parser)]
#[command(
    name = "qtchar",
    version,
    about = "q,t-characters of standard modules and their Jordan data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character of a fundamental module V_node(shift).
    Fundamental {
        #[command(flatten)]
        datum: DatumArg,
        #[arg(long)]
        node: usize,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        shift: i64,
        #[arg(long, default_value = "a", value_parser = parse_orbit)]
        orbit: Orbit,
        #[command(flatten)]
        compute: ComputeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Character of a standard module, the twisted product of fundamentals.
    Standard {
        #[command(flatten)]
        datum: DatumArg,
        /// Comma separated factors `node:shift[@orbit]`, e.g. `1:0,2:1`.
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_factor, allow_hyphen_values = true)]
        factors: Vec<FactorSpec>,
        #[command(flatten)]
        compute: ComputeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Jordan data of every coefficient of a character document.
    Decode {
        #[command(flatten)]
        input: InputArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Runs the Lefschetz validators and, when w/v data is present, the
    /// consistency checks on a character document.
    Check {
        #[command(flatten)]
        input: InputArg,
    },
    /// Graphviz lowering graph of a character document or of a computed
    /// module (give --type with --node or --factors).
    Dot {
        /// Character document to draw; `-` reads standard input.
        #[arg(long, conflicts_with_all = ["type_name", "node", "factors"])]
        input: Option<PathBuf>,
        #[arg(long = "type", value_parser = parse_datum)]
        type_name: Option<RootDatum>,
        #[arg(long, conflicts_with = "factors")]
        node: Option<usize>,
        #[arg(long, value_delimiter = ',', value_parser = parse_factor, allow_hyphen_values = true)]
        factors: Option<Vec<FactorSpec>>,
        #[command(flatten)]
        compute: ComputeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recomputes the shipped reference characters and diffs them exactly.
    Fixtures {
        /// Only this fixture.
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        compute: ComputeArgs,
    },
}

#[derive(Debug, Args)]
pub struct DatumArg {
    /// Dynkin type such as A2, D4 or E6.
    #[arg(long = "type", value_parser = parse_datum)]
    pub datum: RootDatum,
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Character document; `-` reads standard input.
    #[arg(long, default_value = "-")]
    pub input: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    /// Largest lowering degree explored before giving up.
    #[arg(long, default_value_t = 200)]
    pub depth_cap: u64,
    /// Run on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Attach Jordan data to every term.
    #[arg(long)]
    pub decode: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

fn parse_datum(s: &str) -> Result<RootDatum, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_orbit(s: &str) -> Result<Orbit, String> {
    Orbit::new(s).ok_or_else(|| format!("invalid orbit name {s:?}"))
}

/// `node:shift` with an optional `@orbit` suffix.
pub fn parse_factor(s: &str) -> Result<FactorSpec, String> {
    let bad = || format!("invalid factor {s:?}, expected node:shift[@orbit]");
    let (body, orbit) = match s.split_once('@') {
        Some((b, o)) => (b, parse_orbit(o)?),
        None => (s, Orbit::default()),
    };
    let (node, shift) = body.split_once(':').ok_or_else(bad)?;
    let node = node.trim().parse().map_err(|_| bad())?;
    let shift = shift.trim().parse().map_err(|_| bad())?;
    Ok(FactorSpec::new(node, SpectralShift::new(orbit, shift)))
}
