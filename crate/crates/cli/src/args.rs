use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser, Serialize)]
#[command(name = "qhe-cyclic", version, about = "Cyclic U_q(sl2) representations, hierarchy filling factors and trial wavefunction overlaps")]
pub struct Cli {
    #[command(flatten)]
    #[serde(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Serialize)]
pub struct Common {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Per-entry tolerance for relation checks (scaled by the matrix dimension)
    #[arg(long, global = true, default_value_t = qhe_cyclic::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Generic cyclic representations
    #[command(subcommand)]
    Rep(RepCmd),
    /// Ladder representations on the 2p+1 filling-factor basis
    #[command(subcommand)]
    Ladder(LadderCmd),
    /// Filling factors and hierarchy continued fractions
    #[command(subcommand)]
    Ff(FfCmd),
    /// Trial wavefunctions and their overlaps
    #[command(subcommand)]
    Wf(WfCmd),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct RootArgs {
    /// Root order is 2p+1
    #[arg(long, default_value_t = 1)]
    pub p: i64,
    /// q = exp(2πik/(2p+1)), k coprime to 2p+1
    #[arg(long, default_value_t = 1)]
    pub k: i64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct BaseArgs {
    /// Free base of the magnitude chain [default: infimum + 1]
    #[arg(long)]
    pub base: Option<f64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct LambdaArgs {
    /// λ = q^s
    #[arg(long, conflicts_with = "phase")]
    pub s: Option<i64>,
    /// λ = exp(i·phase) [default: 0, i.e. λ = 1]
    #[arg(long, allow_hyphen_values = true)]
    pub phase: Option<f64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct InputArgs {
    /// Representation document (a bare document or a full report)
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepCmd {
    /// Solve for the generic coefficients g_m, f_m
    Solve {
        #[command(flatten)]
        #[serde(flatten)]
        root: RootArgs,
        #[command(flatten)]
        #[serde(flatten)]
        lambda: LambdaArgs,
        #[command(flatten)]
        #[serde(flatten)]
        base: BaseArgs,
    },
    /// Build the generic representation document
    Build {
        #[command(flatten)]
        #[serde(flatten)]
        root: RootArgs,
        #[command(flatten)]
        #[serde(flatten)]
        lambda: LambdaArgs,
        #[command(flatten)]
        #[serde(flatten)]
        base: BaseArgs,
        /// Phases of g_m, comma separated [default: all zero]
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        phases: Option<Vec<f64>>,
    },
    /// Check the algebra relations and cyclicity of a stored representation
    Verify {
        #[command(flatten)]
        #[serde(flatten)]
        input: InputArgs,
    },
    /// Map the ladder representation onto the generic form with λ = q^s
    Intertwine {
        #[command(flatten)]
        #[serde(flatten)]
        root: RootArgs,
        #[command(flatten)]
        #[serde(flatten)]
        base: BaseArgs,
        /// Label shift
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        s: i64,
    },
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LadderCmd {
    /// Solve |a_i|² around the step-two cycle
    Magnitudes {
        #[command(flatten)]
        #[serde(flatten)]
        root: RootArgs,
        #[command(flatten)]
        #[serde(flatten)]
        base: BaseArgs,
    },
    /// Build the ladder representation document
    Build {
        #[command(flatten)]
        #[serde(flatten)]
        root: RootArgs,
        #[command(flatten)]
        #[serde(flatten)]
        base: BaseArgs,
        /// Phases of a_i, comma separated [default: all zero]
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        phases: Option<Vec<f64>>,
    },
    /// Check the algebra relations (from --input, or freshly built)
    Verify {
        #[command(flatten)]
        #[serde(flatten)]
        input: InputArgs,
        #[command(flatten)]
        #[serde(flatten)]
        root: RootArgs,
        #[command(flatten)]
        #[serde(flatten)]
        base: BaseArgs,
    },
    /// Check that E±^(2p+1) is a nonzero scalar
    Cyclicity {
        #[command(flatten)]
        #[serde(flatten)]
        input: InputArgs,
        #[command(flatten)]
        #[serde(flatten)]
        root: RootArgs,
        #[command(flatten)]
        #[serde(flatten)]
        base: BaseArgs,
        /// Zero the coefficient a_i before checking (repeatable)
        #[arg(long)]
        zero: Vec<i64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CfFormArg {
    Standard,
    Positive,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FfCmd {
    /// Evaluate a continued fraction
    Eval {
        /// Coefficients, comma separated
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        cf: Vec<i64>,
        #[arg(long, value_enum, default_value_t = CfFormArg::Standard)]
        form: CfFormArg,
    },
    /// Expand a filling factor P/Q into a continued fraction
    Decompose {
        #[arg(long)]
        nu: String,
        #[arg(long, value_enum, default_value_t = CfFormArg::Standard)]
        form: CfFormArg,
    },
    /// The family i/(2p+1), i = 1..2p, followed by 1
    Family {
        #[arg(long, default_value_t = 1)]
        p: u64,
    },
    /// Auxiliary θ and q sequences of a plus-sign continued fraction
    Blokwen {
        /// Plus-sign coefficients, comma separated
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        cf: Vec<i64>,
    },
    /// Basis label (i, p) of a filling factor
    Index {
        #[arg(long)]
        nu: String,
        /// Family to place ν in [default: Q = 2p+1]
        #[arg(long)]
        family: Option<u64>,
    },
}

/// A wavefunction on the command line: `laughlin:M` or `r1:A0,A1,B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(into = "String")]
pub enum WfArg {
    Laughlin(u32),
    R1 { a0: u32, a1: i64, b: i8 },
}

impl fmt::Display for WfArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WfArg::Laughlin(m) => write!(f, "laughlin:{m}"),
            WfArg::R1 { a0, a1, b } => write!(f, "r1:{a0},{a1},{b}"),
        }
    }
}

impl From<WfArg> for String {
    fn from(w: WfArg) -> String {
        w.to_string()
    }
}

impl FromStr for WfArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("expected laughlin:M or r1:A0,A1,B, got {s:?}");
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "laughlin" => rest.trim().parse().map(WfArg::Laughlin).map_err(|_| bad()),
            "r1" => {
                let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
                let [a0, a1, b] = parts[..] else { return Err(bad()) };
                Ok(WfArg::R1 {
                    a0: a0.parse().map_err(|_| bad())?,
                    a1: a1.parse().map_err(|_| bad())?,
                    b: b.parse().map_err(|_| bad())?,
                })
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
    Exact,
    Mc,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SamplingArgs {
    #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
    pub method: MethodArg,
    /// Monte Carlo sample count
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    /// Monte Carlo seed
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; never changes the result
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Gauss–Hermite order per axis for the quasihole integral
    #[arg(long, default_value_t = qhe_cyclic::wavefn::DEFAULT_QUAD_ORDER)]
    pub quad_order: usize,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WfCmd {
    /// Evaluate a wavefunction at one configuration
    Eval {
        #[arg(long)]
        wf: WfArg,
        /// Electron positions as x,y pairs separated by ';'
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value_t = qhe_cyclic::wavefn::DEFAULT_QUAD_ORDER)]
        quad_order: usize,
    },
    /// Overlap of two wavefunctions
    Inner {
        /// Exactly two wavefunctions
        #[arg(long, num_args = 1, required = true)]
        wf: Vec<WfArg>,
        /// Electron count
        #[arg(long, default_value_t = 2)]
        n0: usize,
        #[command(flatten)]
        #[serde(flatten)]
        sampling: SamplingArgs,
    },
    /// Matrix of pairwise overlaps
    Gram {
        #[arg(long, num_args = 1, required = true)]
        wf: Vec<WfArg>,
        #[arg(long, default_value_t = 2)]
        n0: usize,
        /// Divide by the diagonal
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        #[serde(flatten)]
        sampling: SamplingArgs,
    },
}
