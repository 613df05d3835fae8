//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "maxcut-qaoa",
    version,
    about = "Max-Cut QAOA landscapes, roughness metrics and SPSA runs"
)]
pub struct Cli {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub eval: EvalArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ising model, augmented matrix, sparsity and symmetry periods as JSON.
    Hamiltonian,
    /// Energy landscape as a `beta,gamma,energy` CSV plus a metadata sidecar.
    Landscape,
    /// Sparsity, total variation and Fourier density.
    Metrics,
    /// SPSA minimization of the p=1 energy.
    Optimize(OptimizeArgs),
    /// List the built-in fixtures or the records of a graph6 file.
    Graphs,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Built-in experiment graph (1, 2, 3, 7, 13, 18, 23 or 33).
    #[arg(long, global = true, value_name = "ID")]
    pub fixture: Option<u32>,
    /// Graph given as a graph6 string.
    #[arg(long, global = true, value_name = "TEXT")]
    pub graph6: Option<String>,
    /// File with one graph6 record per line.
    #[arg(long, global = true, value_name = "PATH")]
    pub graph6_file: Option<PathBuf>,
    /// 0-based record index within --graph6-file.
    #[arg(long, global = true, value_name = "N")]
    pub record: Option<usize>,
    /// Run on all eight built-in fixtures.
    #[arg(long, global = true)]
    pub all_fixtures: bool,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Number of beta samples.
    #[arg(long, global = true, value_name = "N")]
    pub beta_steps: Option<usize>,
    /// Number of gamma samples.
    #[arg(long, global = true, value_name = "N")]
    pub gamma_steps: Option<usize>,
    /// Exclusive upper end of the beta range (the range starts at 0).
    #[arg(long, global = true, value_name = "RAD")]
    pub beta_max: Option<f64>,
    /// Exclusive upper end of the gamma range (the range starts at 0).
    #[arg(long, global = true, value_name = "RAD")]
    pub gamma_max: Option<f64>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Energy evaluator.
    #[arg(long, global = true, value_enum)]
    pub mode: Option<Mode>,
    /// Shorthand for --mode exact-sim.
    #[arg(long, global = true)]
    pub exact: bool,
    /// Measurement shots per evaluation; implies sampled mode.
    #[arg(long, global = true, value_name = "N")]
    pub shots: Option<u32>,
    /// SPSA iterations.
    #[arg(long, global = true, value_name = "N")]
    pub max_iter: Option<usize>,
    /// Seed for shot sampling and the optimizer.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file; standard output when omitted.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    /// Starting point.
    #[arg(long, value_enum, default_value_t = Init::Random)]
    pub init: Init,
    /// Also write the trace as `iter,beta,gamma,estimate` CSV.
    #[arg(long, value_name = "PATH")]
    pub trace: Option<PathBuf>,
    /// Step gain numerator.
    #[arg(long, value_name = "A")]
    pub spsa_a: Option<f64>,
    /// Perturbation gain numerator.
    #[arg(long, value_name = "C")]
    pub spsa_c: Option<f64>,
    /// Stability constant of the step gain.
    #[arg(long, value_name = "A0")]
    pub spsa_stability: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Analytic,
    ExactSim,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Init {
    Random,
    Center,
}
