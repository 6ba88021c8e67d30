use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "empskit",
    version,
    about = "Marginal passive-state energies of multi-qubit states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// EMPS vector, total, eta and polygon report of a state.
    Emps {
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Three-qubit class verdict with facet evidence.
    Classify {
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Facet-by-facet membership of a three-qubit EMPS point.
    Polytope {
        /// EMPS point `e1,e2,e3` (in units of E); alternative to a state.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        point: Option<Vec<f64>>,
        /// Polytope to test; both when omitted.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// EMPS point cloud over random local invertible operations.
    Orbit {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Ground state and entanglement indicators of a spin chain.
    Ising {
        #[command(flatten)]
        chain: ChainArgs,
        /// Write the ground state as a JSON state file.
        #[arg(long)]
        dump_state: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Indicator sweep over one spin-chain parameter.
    Sweep {
        #[command(flatten)]
        chain: ChainArgs,
        /// J, h or coeff:<index> (index into the extra Pauli terms).
        #[arg(long, default_value = "h")]
        param: String,
        /// Explicit parameter values; overrides --from/--to/--steps.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        values: Option<Vec<f64>>,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
        to: f64,
        #[arg(long, default_value_t = 21)]
        steps: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuilderArg {
    Ghz,
    W,
    Dicke,
    GeneralizedDicke,
    Biseparable,
    NoisyW,
    NoisyGhz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    W,
    Ghz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HamiltonianArg {
    /// Nearest-neighbour chain on 5 sites.
    H1,
    /// H1 plus the long-range X terms.
    H2,
}

/// A state given either as a JSON file or as a builder with parameters.
#[derive(Debug, Args)]
pub struct StateArgs {
    /// JSON state file (amplitudes, density matrix or builder spec).
    #[arg(long, conflicts_with = "builder")]
    pub state: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub builder: Option<BuilderArg>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Radians.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    /// W weights a_i, or generalized Dicke amplitudes.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub coeffs: Option<Vec<f64>>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// 1-based qubit that factors out of a biseparable state.
    #[arg(long)]
    pub position: Option<usize>,
    /// Noise parameter of the noisy W/GHZ mixtures.
    #[arg(long)]
    pub v: Option<f64>,
    /// Write the resolved state as a JSON state file.
    #[arg(long)]
    pub dump_state: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    #[arg(long, value_enum, default_value = "h2", conflicts_with = "spec")]
    pub hamiltonian: HamiltonianArg,
    /// JSON chain spec `{"N", "J", "h", "extra_terms"}`.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Coupling J; overrides the value in --spec.
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<f64>,
    /// Field h; overrides the value in --spec.
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<f64>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, env = "EMPSKIT_SEED", default_value_t = 42)]
    pub seed: u64,
}
