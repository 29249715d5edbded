use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "minkowski", version, about = "Spectra and wavefunctions on the Minkowski plane")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    #[arg(long, global = true)]
    pub hbar: Option<f64>,
    #[arg(long, global = true)]
    pub mass: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write records here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Named tolerance, e.g. --tol root=1e-12 (repeatable)
    #[arg(long = "tol", global = true, value_name = "NAME=VALUE")]
    pub tol: Vec<String>,
    /// Flat key = value file; flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SystemArg {
    Free,
    Oscillator,
    Coulomb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LadderArg {
    Deep,
    Shallow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WaveBranch {
    U1,
    U2,
    Third,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Specfun,
    Phases,
    Spectra,
    Oracle,
    Duality,
    All,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SystemArgs {
    #[arg(long, value_enum)]
    pub system: Option<SystemArg>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub omega: Option<f64>,
    /// Angular eigenvalue M
    #[arg(long = "M", allow_negative_numbers = true)]
    pub m: Option<f64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GridArgs {
    /// MIN,MAX,COUNT
    #[arg(long)]
    pub grid: Option<String>,
    #[arg(long, value_enum)]
    pub spacing: Option<Spacing>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels
    Spectrum {
        #[command(flatten)]
        system: SystemArgs,
        /// Level indices, A..B inclusive
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
        /// Reference level for the quantized spectrum
        #[arg(long = "E0", allow_negative_numbers = true)]
        e0: Option<f64>,
        /// Terminating-series (complex) levels
        #[arg(long)]
        closed: bool,
        /// Asymptotic ladder instead of the quantization condition
        #[arg(long, value_enum, conflicts_with = "closed")]
        ladder: Option<LadderArg>,
        #[arg(long, allow_negative_numbers = true)]
        g0: Option<f64>,
    },
    /// Radial amplitudes on a grid
    Wavefunction {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum)]
        branch: Option<WaveBranch>,
        /// Level index of a closed-form state
        #[arg(long)]
        n: Option<u32>,
        #[arg(long = "E", allow_negative_numbers = true)]
        e: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        g: Option<f64>,
        /// Reflection phase of the third solution; solved from decay when absent
        #[arg(long, allow_negative_numbers = true)]
        gamma: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        phi: Option<f64>,
    },
    /// Bare and effective potentials on a grid
    Potential {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Reflection phase at one energy
    Phase {
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        #[arg(long = "M", allow_negative_numbers = true)]
        m: Option<f64>,
        #[arg(long = "E", allow_negative_numbers = true)]
        e: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        g: Option<f64>,
    },
    /// Coulomb to oscillator parameter map
    Duality {
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        #[arg(long = "E", allow_negative_numbers = true)]
        e: Option<f64>,
        #[arg(long = "M", allow_negative_numbers = true)]
        m: Option<f64>,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "omega")]
        r0: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        omega: Option<f64>,
    },
    /// Run an invariant suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Spectrum { .. } => "spectrum",
            Command::Wavefunction { .. } => "wavefunction",
            Command::Potential { .. } => "potential",
            Command::Phase { .. } => "phase",
            Command::Duality { .. } => "duality",
            Command::Verify { .. } => "verify",
        }
    }
}
