use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use glkm::Scalar;

#[derive(Parser, Debug)]
#[command(name = "glkm", version, about = "Exact checks for deformed-flip braid solutions and gl(k,m) representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Leg order of the coproduct.
    #[arg(long, global = true, value_enum, default_value_t = ConventionArg::Standard)]
    pub convention: ConventionArg,

    /// Zero every duration so identical runs give identical bytes.
    #[arg(long, global = true)]
    pub no_timings: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Standard,
    Swapped,
}

impl From<ConventionArg> for glkm::yangian::Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Standard => glkm::yangian::Convention::Standard,
            ConventionArg::Swapped => glkm::yangian::Convention::Swapped,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Quadratic,
    Serre,
    Hatted,
    Rtt,
    Centralizer,
    All,
}

/// `n = k + m`; any two of the three determine the third.
#[derive(Args, Debug, Clone, Default)]
pub struct Dims {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct Chain {
    #[command(flatten)]
    pub dims: Dims,
    /// Number of tensor factors N.
    #[arg(long, default_value_t = 2)]
    pub sites: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one verification.
    #[command(subcommand)]
    Verify(Verify),
    /// Classify ř(α), or the cyclic-shift solution with --lyubashenko.
    Classify {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        alpha: i64,
        #[arg(long)]
        lyubashenko: bool,
    },
    /// Basis multi-indices.
    #[command(subcommand)]
    Basis(Basis),
    /// Two-site eigenvectors of ř; with --dot, the transition graph.
    Spectrum2 {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum, default_value_t = SignArg::Plus)]
        sign: SignArg,
    },
    /// The gl(1,1) checks.
    #[command(subcommand)]
    Gl11(Gl11),
    /// Every acceptance criterion.
    ReportAll,
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    Braid {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        alpha: i64,
    },
    Ybe {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        alpha: i64,
        /// Spectral parameters, comma separated or repeated, taken in consecutive pairs (λ1, λ2).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<Scalar>,
    },
    Unitarity {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        alpha: i64,
        /// Spectral parameters, comma separated or repeated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<Scalar>,
    },
    Relations {
        #[command(flatten)]
        chain: Chain,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Deformation used by the monodromy and centralizer suites.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        alpha: i64,
    },
    Casimir {
        #[command(flatten)]
        chain: Chain,
        /// Truncation order K; defaults to 2N+2.
        #[arg(long)]
        order: Option<usize>,
    },
    Antipode {
        #[command(flatten)]
        chain: Chain,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    Action {
        #[command(flatten)]
        chain: Chain,
    },
}

#[derive(Subcommand, Debug)]
pub enum Basis {
    Enumerate {
        #[command(flatten)]
        chain: Chain,
        #[arg(long, value_enum, default_value_t = SignArg::Both)]
        sign: SignArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum Gl11 {
    /// Pauli form of the Hamiltonian.
    Xx {
        #[arg(long, default_value_t = 3)]
        sites: usize,
    },
    /// Highest-weight modules and kernel bases at N sites.
    Modules {
        #[arg(long, default_value_t = 3)]
        sites: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// V(N1,p1) ⊗ V(N2,p2) for every pair of kernel vectors.
    Tensor {
        #[arg(long, default_value_t = 1)]
        n1: usize,
        #[arg(long, default_value_t = 0)]
        p1: usize,
        #[arg(long, default_value_t = 1)]
        n2: usize,
        #[arg(long, default_value_t = 0)]
        p2: usize,
    },
    /// Hook tableaux paired with the module basis.
    Ssyt {
        #[arg(long, default_value_t = 3)]
        sites: usize,
        #[arg(long, default_value_t = 1)]
        p: usize,
    },
}
