use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Multigraded Hilbert series, mixed multiplicities, multidegrees and
/// projective degrees of rational maps over a prime field.
#[derive(Debug, Parser)]
#[command(name = "mm", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// K-polynomial, Hilbert series and Hilbert polynomial of B/J.
    Hilbert {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Pivot::MostFrequent)]
        pivot: Pivot,
    },
    /// Mixed multiplicity tables by the series and polynomial routes.
    MixedMult {
        #[command(flatten)]
        common: Common,
    },
    /// Multidegrees of multProj(B/J), for one type vector or all of them.
    Multidegree {
        #[command(flatten)]
        common: Common,
        /// Type vector, e.g. `1,1`; omitted means every type.
        #[arg(long = "type", value_delimiter = ',', allow_negative_numbers = true)]
        type_vector: Option<Vec<i64>>,
    },
    /// Projective degrees of a rational map.
    Projdeg {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Closed-form projective degrees.
    Formula(FormulaArgs),
    /// Dimensions of the saturated special fiber ring and the d_0 probe.
    Satfiber {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        q_max: usize,
    },
    /// The G_s condition through heights of Fitting ideals.
    CheckG {
        #[command(flatten)]
        common: Common,
        /// Defaults to d + 1.
        #[arg(long)]
        s: Option<usize>,
        /// Turn a failed condition into a failed check.
        #[arg(long)]
        assert: bool,
    },
    /// Count points cut out by random filter-regular hyperplanes.
    Slice {
        #[command(flatten)]
        common: Common,
        #[arg(
            long = "type",
            value_delimiter = ',',
            required = true,
            allow_negative_numbers = true
        )]
        type_vector: Vec<i64>,
        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// JSON input file.
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Gröbner pair budget; falls back to MM_PAIR_BUDGET, then the library default.
    #[arg(long, env = "MM_PAIR_BUDGET")]
    pub pair_budget: Option<usize>,
    /// Exit 0 even when a check fails.
    #[arg(long)]
    pub allow_failed_checks: bool,
    #[arg(long, value_enum, default_value_t = OutputMode::Pretty)]
    pub output: OutputMode,
}

#[derive(Debug, Args)]
pub struct Sampling {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
}

#[derive(Debug, Args)]
pub struct FormulaArgs {
    /// Perfect height 2: d_i = e_{d-i}(mu).
    #[arg(long, conflicts_with = "ht3", required_unless_present = "ht3")]
    pub ht2: bool,
    /// Gorenstein height 3 with entry degree D.
    #[arg(long)]
    pub ht3: bool,
    #[arg(long)]
    pub d: usize,
    /// Column degrees of the Hilbert-Burch matrix (height 2).
    #[arg(long, value_delimiter = ',', required_if_eq("ht2", "true"))]
    pub mu: Option<Vec<u64>>,
    /// Target dimension n (height 3).
    #[arg(long, required_if_eq("ht3", "true"))]
    pub n: Option<usize>,
    /// Common entry degree D of the alternating matrix (height 3).
    #[arg(long, default_value_t = 1)]
    pub entry_degree: u64,
    /// Degree of the forms; defaults to D*n/2 (height 3).
    #[arg(long)]
    pub delta: Option<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Pivot {
    MostFrequent,
    FirstVariable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Elimination,
    Slicing,
    Formula,
    /// Elimination and slicing, plus the formula when a matrix is given.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Pretty,
    Compact,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Hilbert { .. } => "hilbert",
            Command::MixedMult { .. } => "mixed-mult",
            Command::Multidegree { .. } => "multidegree",
            Command::Projdeg { .. } => "projdeg",
            Command::Formula(_) => "formula",
            Command::Satfiber { .. } => "satfiber",
            Command::CheckG { .. } => "check-g",
            Command::Slice { .. } => "slice",
        }
    }

    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Hilbert { common, .. }
            | Command::MixedMult { common }
            | Command::Multidegree { common, .. }
            | Command::Projdeg { common, .. }
            | Command::Satfiber { common, .. }
            | Command::CheckG { common, .. }
            | Command::Slice { common, .. } => &common.output,
            Command::Formula(f) => &f.output,
        }
    }

    pub fn input(&self) -> Option<&std::path::Path> {
        match self {
            Command::Hilbert { common, .. }
            | Command::MixedMult { common }
            | Command::Multidegree { common, .. }
            | Command::Projdeg { common, .. }
            | Command::Satfiber { common, .. }
            | Command::CheckG { common, .. }
            | Command::Slice { common, .. } => Some(&common.input),
            Command::Formula(_) => None,
        }
    }
}
