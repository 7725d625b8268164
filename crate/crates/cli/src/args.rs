//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperaccel::exact_arith::{parse_rational, Rational};
use hyperaccel::hypergeom_terms::FamilyId;

#[derive(Debug, Parser)]
#[command(name = "hyperaccel", version, about = "Accelerate and verify hypergeometric series identities")]
pub struct Cli {
    /// Output layout.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the printed symbolic recurrences with all parameters free.
    VerifySymbolic {
        /// Family to check; all printed families when omitted.
        #[arg(long, value_parser = parse_family)]
        family: Option<FamilyId>,
    },
    /// Find a first-order recurrence in n for one family instance.
    Derive {
        #[command(flatten)]
        instance: Instance,
        /// Shift in n; both 1 and 2 are tried when omitted.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
        r: Option<u32>,
        /// Largest certificate degree searched.
        #[arg(long, default_value_t = hyperaccel::telescoper::DEFAULT_MAX_DEG)]
        max_deg: usize,
    },
    /// Print the accelerated term stream or its bracket form.
    Accelerate {
        #[command(flatten)]
        instance: Instance,
        /// Shift in n: `auto`, 1 or 2.
        #[arg(long, default_value = "auto", value_parser = parse_shift)]
        r: Shift,
        /// Number of stream terms printed.
        #[arg(long, default_value_t = 10)]
        terms: usize,
        /// Print the normalized series instead of the terms.
        #[arg(long)]
        chu: bool,
    },
    /// Evaluate a series to a certified enclosure.
    Eval {
        #[command(flatten)]
        source: SeriesSource,
        #[arg(long, default_value_t = 50)]
        digits: u32,
    },
    /// Compare one catalog series with its closed form.
    Check {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 50)]
        digits: u32,
    },
    /// Compare every catalog series with its closed form.
    CheckAll {
        #[arg(long, default_value_t = 50)]
        digits: u32,
        /// Worker threads; the number of cores when omitted.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Inspect or export the identity catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Print the convergence rate of a family, instance, entry or series.
    Rate {
        #[arg(long, value_parser = parse_family, conflicts_with_all = ["id", "series"])]
        family: Option<FamilyId>,
        #[arg(long, value_parser = parse_rational_arg, value_delimiter = ',', allow_hyphen_values = true, requires = "family")]
        params: Option<Vec<Rational>>,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true, requires = "params")]
        n: Option<Rational>,
        #[arg(long, conflicts_with = "series")]
        id: Option<String>,
        #[arg(long)]
        series: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// One line per entry.
    List,
    /// Write the catalog in its line-oriented text format.
    Export {
        #[arg(long)]
        out: std::path::PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct Instance {
    #[arg(long, value_parser = parse_family)]
    pub family: FamilyId,
    /// Comma-separated exact rationals.
    #[arg(long, value_parser = parse_rational_arg, value_delimiter = ',', allow_hyphen_values = true)]
    pub params: Vec<Rational>,
    /// Start point of the progression in n.
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true, default_value = "1")]
    pub n: Rational,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SeriesSource {
    #[arg(long)]
    pub id: Option<String>,
    /// Series in the canonical bracket text form.
    #[arg(long)]
    pub series: Option<String>,
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    FamilyId::parse(s).map_err(|e| e.to_string())
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// A fixed shift in n, or `None` for the family's own choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shift(pub Option<u32>);

fn parse_shift(s: &str) -> Result<Shift, String> {
    match s {
        "auto" => Ok(Shift(None)),
        "1" => Ok(Shift(Some(1))),
        "2" => Ok(Shift(Some(2))),
        _ => Err(format!("expected auto, 1 or 2, got `{s}`")),
    }
}
