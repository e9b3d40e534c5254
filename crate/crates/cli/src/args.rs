use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "stirling-kit",
    version,
    about = "Exact generalized Stirling transforms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stirling transform of a sequence (or its inverse).
    Transform(TransformArgs),
    /// Render a block of the transform matrix.
    Matrix(MatrixArgs),
    /// Print a built-in sequence.
    Seq(SeqArgs),
    /// Exponential generating function operations.
    Egf(EgfArgs),
    /// Hankel transform of a sequence.
    Hankel(HankelArgs),
    /// Run identity checks and print a report.
    Check(CheckArgs),
}

/// Where a sequence comes from: a built-in generator or a JSON sequence file.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Built-in sequence name.
    #[arg(long)]
    pub seq: Option<String>,
    /// JSON sequence file; `-` reads standard input.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[command(flatten)]
    pub source: Source,
    /// Number of terms to generate with `--seq`.
    #[arg(long, default_value_t = 10)]
    pub len: usize,
    /// Apply the inverse transform.
    #[arg(long)]
    pub inverse: bool,
    #[arg(long, value_enum, default_value_t = SeqFormat::Json)]
    pub format: SeqFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FromEdge {
    Initial,
    Final,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Which edge the sequence supplies: row 0 or column 0.
    #[arg(long, value_enum)]
    pub from: FromEdge,
    #[command(flatten)]
    pub source: Source,
    /// Largest row index; the block has `rows + 1` rows.
    #[arg(long)]
    pub rows: usize,
    /// Largest column index; the block has `cols + 1` columns.
    #[arg(long)]
    pub cols: usize,
    #[arg(long, value_enum, default_value_t = MatrixFormat::Table)]
    pub format: MatrixFormat,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[arg(long)]
    pub seq: String,
    #[arg(long)]
    pub len: usize,
    #[arg(long, value_enum, default_value_t = SeqFormat::Json)]
    pub format: SeqFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EgfOp {
    /// Compose the input series with a kernel series.
    Compose,
    /// Column `r` from the row generating function.
    Theorem3,
    /// Row `r` from the column generating function.
    Theorem4,
    /// Coefficients of 1F1(p; q; scale z).
    #[value(name = "1f1")]
    Hypergeometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kernel {
    /// e^z - 1
    ExpMinusOne,
    /// ln(1 + z)
    Log1p,
    /// z
    Z,
}

#[derive(Debug, Args)]
pub struct EgfArgs {
    #[arg(long, value_enum)]
    pub op: EgfOp,
    /// Input series (not used by `1f1`).
    #[arg(long)]
    pub seq: Option<String>,
    #[arg(long, conflicts_with = "seq")]
    pub input: Option<PathBuf>,
    /// Highest EGF coefficient index; defaults to `STIRLING_KIT_ORDER` or 16.
    #[arg(long)]
    pub order: Option<usize>,
    /// Row or column index for `theorem3` / `theorem4`.
    #[arg(long, default_value_t = 0)]
    pub r: usize,
    /// Inner series for `compose`.
    #[arg(long, value_enum, default_value_t = Kernel::ExpMinusOne)]
    pub inner: Kernel,
    /// Numerator parameter of `1f1` (canonical rational text).
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    /// Denominator parameter of `1f1`.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Argument scale of `1f1`.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub scale: i64,
    #[arg(long, value_enum, default_value_t = SeqFormat::Json)]
    pub format: SeqFormat,
}

#[derive(Debug, Args)]
pub struct HankelArgs {
    #[command(flatten)]
    pub source: Source,
    /// Largest Hankel order; determinants for `0..=n` are printed.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = SeqFormat::Json)]
    pub format: SeqFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    All,
    Ega,
    Egf,
    Hankel,
    Rstirling,
    CatalanMotzkin,
    Bernoulli,
    Matrices,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Upper bound for the index ranges of every identity.
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}
