use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "qpa-sim", version, about = "Quantum privacy amplification simulator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check both output tables against the circuit, plus structural properties.
    VerifyTables(VerifyArgs),
    /// Run the four-step protocol once.
    Run(RunArgs),
    /// Monte Carlo estimate of P_m for one (r, m).
    Leakage(LeakageArgs),
    /// Leakage estimates over an (r, m) grid.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChannelArg {
    Ideal,
    Intercept,
    Depolarizing,
}

impl ChannelArg {
    pub fn name(self) -> &'static str {
        match self {
            ChannelArg::Ideal => "ideal",
            ChannelArg::Intercept => "intercept",
            ChannelArg::Depolarizing => "depolarizing",
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// JSON config file; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long)]
    pub n_batch: Option<usize>,
    #[arg(long)]
    pub check_fraction: Option<f64>,
    /// Abort when the detected error rate exceeds this.
    #[arg(long)]
    pub threshold: Option<f64>,
    /// Qubits per condensation cascade.
    #[arg(long)]
    pub group_size: Option<usize>,
    #[arg(long, value_enum)]
    pub channel: Option<ChannelArg>,
    #[arg(long)]
    pub rate: Option<f64>,
    #[arg(long, conflicts_with_all = ["message_file", "message_random"])]
    pub message_hex: Option<String>,
    #[arg(long, conflicts_with = "message_random")]
    pub message_file: Option<PathBuf>,
    /// Random message of this many bits, drawn from the root seed.
    #[arg(long)]
    pub message_random: Option<usize>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct LeakageArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub trials: Option<u64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_delimiter = ',')]
    pub r_list: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    pub m_list: Option<Vec<u32>>,
    #[arg(long)]
    pub trials: Option<u64>,
}
