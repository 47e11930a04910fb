use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cayley-rep", version, about = "Decide when the Cayley transform applies to a representation")]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized probe.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight-lattice test for one highest weight.
    CheckConfig(WeightArgs),
    /// Run the exact (and optionally numerical) criteria on a catalog entry.
    Verify(VerifyArgs),
    /// Bounded classification over dominant weights.
    Classify(ClassifyArgs),
    /// Log-membership residual over seeded random directions.
    Residual(ResidualArgs),
    /// Padé-order probe ‖C(tu/2) − exp(tu)‖ for decreasing t.
    Pade(PadeArgs),
    /// Matrix realizations from the catalog.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Weight diagram (weights with multiplicities) as JSON or text.
    Diagram(WeightArgs),
    /// Weight diagram of a rank ≤ 2 system as an SVG scatter plot.
    DiagramSvg(DiagramSvgArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "D")]
    D,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub family: FamilyArg,
    #[arg(long)]
    pub rank: usize,
    /// Highest weight in fundamental-weight coefficients, e.g. `1,0`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "weight")]
    pub coeffs: Option<Vec<i64>>,
    /// Highest weight in L-coordinates, e.g. `1/2,1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub label: String,
    /// Comma-separated subset of geometric, triple, cartan, odd, residual.
    #[arg(long, value_delimiter = ',', default_value = "geometric,triple,cartan,odd")]
    pub criteria: Vec<Criterion>,
    /// Number of seeds for the residual criterion.
    #[arg(long, default_value_t = 20)]
    pub seeds: u64,
    /// Median residual below which the numerical criterion holds.
    #[arg(long, default_value_t = 1e-8)]
    pub residual_threshold: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Criterion {
    Geometric,
    Triple,
    Cartan,
    Odd,
    Residual,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Self::Geometric => "geometric",
            Self::Triple => "triple",
            Self::Cartan => "cartan",
            Self::Odd => "odd",
            Self::Residual => "residual",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, default_value_t = 4)]
    pub max_rank: usize,
    #[arg(long, default_value_t = 3)]
    pub bound: u32,
    /// Restrict to one family.
    #[arg(long, value_enum, ignore_case = true)]
    pub family: Option<FamilyArg>,
    /// Restrict to one rank (with `--family`).
    #[arg(long, requires = "family")]
    pub rank: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: TableFormat,
    /// Print only rows with a Cayley configuration.
    #[arg(long)]
    pub only_true: bool,
}

#[derive(Debug, Args)]
pub struct ResidualArgs {
    #[arg(long)]
    pub label: String,
    #[arg(long, default_value_t = 20)]
    pub seeds: u64,
    /// Operator norm of each sampled direction.
    #[arg(long, default_value_t = 0.2)]
    pub norm: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub threshold: f64,
}

#[derive(Debug, Args)]
pub struct PadeArgs {
    #[arg(long)]
    pub label: String,
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.05,0.025,0.0125")]
    pub scales: Vec<f64>,
    /// Number of seeded directions, starting at `--seed`.
    #[arg(long, default_value_t = 10)]
    pub directions: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DumpFormat {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum RepCommand {
    /// Print dimension, basis matrices and weight labels.
    Dump {
        #[arg(long)]
        label: String,
        #[arg(long, value_enum, default_value = "text")]
        format: DumpFormat,
    },
    /// List catalog labels.
    List,
}

#[derive(Debug, Args)]
pub struct DiagramSvgArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
