use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::grid::{DegreeSpec, RangeSpec};

#[derive(Debug, Parser)]
#[command(name = "fecc", version, about = "Exact C^m finite element cochain complexes: tables, verification, plot data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one interval element and emit its tables.
    Element(ElementArgs),
    /// Run verification suites over a parameter grid.
    Verify(VerifyArgs),
    /// Emit tensor-product element tables or 2D basis samples.
    Tensor(TensorArgs),
    /// Sample an interpolant of a named function or polynomial literal.
    Interp(InterpArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; relative paths resolve against $FECC_OUT_DIR when set. Defaults to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ElementEmit {
    Table,
    Matrix,
    Basis,
    Functionals,
    Alpha,
    BasisSamples,
}

#[derive(Debug, Args)]
pub struct ElementArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "table")]
    pub emit: ElementEmit,
    /// Grid points for `--emit basis-samples`.
    #[arg(long, default_value_t = 101)]
    pub samples: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    Unisolvence,
    LemmaHypotheses,
    Commutation,
    DdZero,
    TensorCommutation,
    Dimensions,
    ContinuityDemo,
}

/// Deliberately corrupted constructions, for exercising the verifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fixture {
    SwappedBasis,
    WrongFunctionalOrder,
    PermutedAlpha1,
    UnsignedTheta,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Continuity orders: `2`, `0..3` (inclusive) or `0,2`.
    #[arg(long, default_value = "0..2")]
    pub m: RangeSpec,
    /// Degrees: explicit like `--m`, or `auto+K` for 2m+1..=2m+1+K.
    #[arg(long, default_value = "auto+2")]
    pub n: DegreeSpec,
    /// Tensor factor counts for the tensor checks.
    #[arg(long = "N", default_value = "2")]
    pub n_factors: RangeSpec,
    /// Form degree for tensor-commutation; all degrees when omitted.
    #[arg(long)]
    pub nu: Option<usize>,
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    pub checks: Vec<Check>,
    /// Highest probe degree; defaults to n+5 in 1D and n+3 per tensor factor.
    #[arg(long)]
    pub probe_degree: Option<usize>,
    /// Extra random rational probes per grid point.
    #[arg(long, default_value_t = 4)]
    pub random_probes: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Input of the continuity demo: a built-in name or a polynomial literal.
    #[arg(long, default_value = "sin")]
    pub input: String,
    #[arg(long, value_enum)]
    pub fixture: Option<Fixture>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TensorEmit {
    Table,
    Samples,
}

#[derive(Debug, Args)]
pub struct TensorArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long = "N", default_value_t = 2)]
    pub n_factors: usize,
    #[arg(long)]
    pub nu: Option<usize>,
    /// Include the Kronecker node matrices in the table.
    #[arg(long)]
    pub matrices: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub emit: TensorEmit,
    /// Block for `--emit samples`, e.g. `0,1`.
    #[arg(long, default_value = "0,0")]
    pub chi: String,
    #[arg(long, default_value_t = 21)]
    pub samples: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct InterpArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// `sin`, `cos`, `exp`, `kink`, or a polynomial such as `3x^2 - 1/2x + 1`.
    #[arg(long)]
    pub input: String,
    /// 1 samples `[0, 1]`; 2 samples `[0, 2]` split at `x = 1` and checks continuity there.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub cells: u8,
    #[arg(long, default_value_t = 101)]
    pub samples: usize,
    #[arg(long)]
    pub quadrature_order: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}
