use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::chern::{ChernConfig, MethodChoice};
use crate::combinatorics::Partition;
use crate::repring::RepConfig;

#[derive(Debug, Parser)]
#[command(
    name = "schern",
    version,
    about = "Second Chern classes of SL_n representations and generator tables for SL_n/mu_d"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by every subcommand. Precedence: flag, then `SCHERN_*`
/// environment variable, then the default.
#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format (csv applies to `generators` and `table`)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Refuse tableau enumeration above this dimension
    #[arg(
        long,
        global = true,
        env = "SCHERN_ENUM_CEILING",
        default_value_t = 20_000_000
    )]
    pub enum_ceiling: u64,

    /// Cross-check the closed form by enumeration up to this dimension
    #[arg(
        long,
        global = true,
        env = "SCHERN_CROSS_CHECK_CEILING",
        default_value_t = 100_000
    )]
    pub cross_check_ceiling: u64,

    /// Refuse Hilbert-basis searches with more candidates than this
    #[arg(
        long,
        global = true,
        env = "SCHERN_CANDIDATE_CEILING",
        default_value_t = 250_000_000
    )]
    pub candidate_ceiling: u64,

    /// Largest ell accepted by `conjecture`
    #[arg(long, global = true, env = "SCHERN_ELL_CEILING", default_value_t = 7)]
    pub ell_ceiling: u64,

    /// Worker threads (defaults to the number of CPUs)
    #[arg(long, global = true, env = "SCHERN_THREADS")]
    pub threads: Option<usize>,

    /// JSON-lines result cache
    #[arg(long, global = true, env = "SCHERN_CACHE")]
    pub cache: Option<PathBuf>,

    /// Do not read or write the result cache
    #[arg(long, global = true)]
    pub no_cache: bool,
}

impl GlobalOpts {
    pub fn rep_config(&self, method: MethodChoice) -> RepConfig {
        RepConfig {
            chern: ChernConfig {
                enumeration_ceiling: self.enum_ceiling,
                cross_check_ceiling: self.cross_check_ceiling,
            },
            method,
            candidate_ceiling: self.candidate_ceiling,
            ell_ceiling: self.ell_ceiling,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Tableau enumeration
    Enum,
    /// Closed form dim * (lambda, lambda + 2 rho) / (n^2 - 1)
    Weyl,
    /// Both, failing on disagreement
    Both,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Enum => MethodChoice::Enumeration,
            MethodArg::Weyl => MethodChoice::ClosedForm,
            MethodArg::Both => MethodChoice::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    #[value(name = "sl8-mu2")]
    Sl8Mu2,
    #[value(name = "sl9-mu3")]
    Sl9Mu3,
}

impl CaseArg {
    pub fn id(self) -> &'static str {
        match self {
            CaseArg::Sl8Mu2 => "sl8-mu2",
            CaseArg::Sl9Mu3 => "sl9-mu3",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// n_lambda with c2(gamma_n^lambda) = n_lambda * c2(gamma_n)
    C2 {
        n: usize,
        /// Comma-separated parts, e.g. 2,2,2
        #[arg(value_parser = parse_partition, allow_hyphen_values = true)]
        partition: Partition,
        /// Default: closed form, cross-checked by enumeration when the
        /// dimension is below the cross-check ceiling
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Dimension of gamma_n^lambda
    Dim {
        n: usize,
        #[arg(value_parser = parse_partition, allow_hyphen_values = true)]
        partition: Partition,
    },
    /// Hilbert-basis generators of R[SL_n/mu_d] with their n_lambda
    Generators { n: usize, d: usize },
    /// gcd of n_lambda over the generators of R[SL_n/mu_d]
    ImageIndex { n: usize, d: usize },
    /// Compare a stored case against its expected values
    Verify { case_id: String },
    /// Recompute a published generator table
    Table {
        #[arg(long, value_enum)]
        case: CaseArg,
    },
    /// Image index of SL_{ell^2}/mu_ell (closed form only)
    Conjecture { ell: u64 },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}
