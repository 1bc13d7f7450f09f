//! Command-line definitions. Every value-carrying flag is optional at the
//! clap layer; resolution against the config file and defaults happens in
//! [`crate::config`], so flags always win over file entries.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "tomo",
    version,
    about = "Decoherence from universal tomographic measurements: channel iteration, Lindblad flow, quasiprobability thresholds, and figure datasets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Iterate the tomographic measurement channel and tabulate diagnostics
    Channel(ChannelArgs),
    /// Integrate the Lindblad master equation (closed form or RK4)
    Lindblad(LindbladArgs),
    /// Tabulate the sharp minimum of the order-sigma distribution
    Wmin(WminArgs),
    /// Print the classicality thresholds k* and t* for one parameter point
    Timescale(TimescaleArgs),
    /// Dataset behind the w_min-vs-sigma figure for several dimensions
    Fig1a(Fig1aArgs),
    /// Dataset behind the (sigma, t) phase diagram of the evolved minimum
    Fig1b(Fig1bArgs),
    /// Run the verification suite; nonzero exit on any failing check
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InitKind {
    /// The basis state |0><0|
    Basis,
    /// A Haar-random pure state drawn from the seed
    Haar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RhsArg {
    /// Evaluate the exact solution on the output grid
    Closed,
    /// RK4 with the explicit sum over all N^2-1 jump operators
    Full,
    /// RK4 with the reduced right-hand side
    Reduced,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Flat key=value config file; command-line flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// RNG seed; falls back to TOMO_SEED, then 0
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output file path (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format [default: csv]
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Args)]
pub struct ChannelArgs {
    /// Hilbert space dimension N [default: 2]
    #[arg(long)]
    pub dim: Option<usize>,
    /// Number of measurements to tabulate [default: 10]
    #[arg(long)]
    pub k: Option<u64>,
    /// Order parameter for the reported minimum [default: 0]
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Initial state [default: basis]
    #[arg(long, value_enum)]
    pub init: Option<InitKind>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct LindbladArgs {
    /// Hilbert space dimension N [default: 2]
    #[arg(long)]
    pub dim: Option<usize>,
    /// Coupling strength [default: 1]
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Final time [default: 1]
    #[arg(long)]
    pub t_max: Option<f64>,
    /// Number of output steps [default: 200]
    #[arg(long)]
    pub steps: Option<usize>,
    /// Right-hand side [default: closed]
    #[arg(long, value_enum)]
    pub rhs: Option<RhsArg>,
    /// Order parameter for the reported minimum [default: 0]
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Initial state [default: basis]
    #[arg(long, value_enum)]
    pub init: Option<InitKind>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct WminArgs {
    /// Hilbert space dimension N [default: 2]
    #[arg(long)]
    pub dim: Option<usize>,
    /// Lower end of the sigma grid [default: -1.5]
    #[arg(long)]
    pub sigma_min: Option<f64>,
    /// Upper end of the sigma grid [default: 3]
    #[arg(long)]
    pub sigma_max: Option<f64>,
    /// Sigma grid step [default: 0.05]
    #[arg(long)]
    pub sigma_step: Option<f64>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct TimescaleArgs {
    /// Hilbert space dimension N [default: 2]
    #[arg(long)]
    pub dim: Option<usize>,
    /// Order parameter [default: 0]
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Coupling strength [default: 1]
    #[arg(long)]
    pub gamma: Option<f64>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct Fig1aArgs {
    /// Comma-separated dimensions [default: 2,3,4,5]
    #[arg(long)]
    pub dims: Option<String>,
    /// Lower end of the sigma grid [default: -1.5]
    #[arg(long)]
    pub sigma_min: Option<f64>,
    /// Upper end of the sigma grid [default: 3]
    #[arg(long)]
    pub sigma_max: Option<f64>,
    /// Sigma grid step [default: 0.05]
    #[arg(long)]
    pub sigma_step: Option<f64>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct Fig1bArgs {
    /// Hilbert space dimension N [default: 4]
    #[arg(long)]
    pub dim: Option<usize>,
    /// Coupling strength [default: 1]
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Lower end of the sigma grid [default: -1.5]
    #[arg(long)]
    pub sigma_min: Option<f64>,
    /// Upper end of the sigma grid [default: 3]
    #[arg(long)]
    pub sigma_max: Option<f64>,
    /// Sigma grid step [default: 0.05]
    #[arg(long)]
    pub sigma_step: Option<f64>,
    /// Final time [default: 2 t*(sigma_max)]
    #[arg(long)]
    pub t_max: Option<f64>,
    /// Number of time steps [default: 200]
    #[arg(long)]
    pub t_steps: Option<usize>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Hilbert space dimension for dimension-free checks (2..=8) [default: 3]
    #[arg(long)]
    pub dim: Option<usize>,
    /// Monte Carlo samples per stochastic check [default: 1000000]
    #[arg(long)]
    pub samples: Option<u64>,
    #[command(flatten)]
    pub common: CommonArgs,
}
