//! Command-line grammar.

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use dedekind_lab::{GroupSpec, Weight, Weighting};

#[derive(Debug, Parser)]
#[command(
    name = "dedekind-lab",
    version,
    about = "Dedekind sums, symbols, Kloosterman sums and equidistribution scans"
)]
#[command(args_override_self = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; scalar results print bare and tables as CSV when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,

    /// Write results here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,

    /// Worker threads (default: DEDEKIND_LAB_THREADS, else all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=4096))]
    pub threads: Option<u32>,

    /// key=value file of default flags; explicit flags win.
    #[arg(long, global = true)]
    pub config: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Fast,
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightingArg {
    Unweighted,
    OverC,
}

impl From<WeightingArg> for Weighting {
    fn from(w: WeightingArg) -> Self {
        match w {
            WeightingArg::Unweighted => Weighting::Unweighted,
            WeightingArg::OverC => Weighting::OverC,
        }
    }
}

fn parse_group(s: &str) -> Result<GroupSpec, String> {
    s.parse().map_err(|e: dedekind_lab::Error| e.to_string())
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    s.parse().map_err(|e: dedekind_lab::Error| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dedekind sum s(a; c).
    Dedekind(DedekindArgs),
    /// Φ, φ and ψ of a matrix, given by entries or as a random word.
    Phi(PhiArgs),
    /// Dedekind symbol of the double coset with left column (a; c).
    Symbol(SymbolArgs),
    /// Double coset representatives with c <= x.
    Cosets(GroupX),
    /// Coset count π(x) against its main term.
    Count(GroupX),
    /// Partial sum of the coset zeta function.
    Zeta(ZetaArgs),
    /// Classical Kloosterman sums: one modulus, a scan, or a partial sum.
    Kloosterman(KloostermanArgs),
    /// Multiplier-twisted Kloosterman sums.
    Twisted(TwistedArgs),
    /// Per-modulus residuals of the Vardi identity.
    Vardi(VardiArgs),
    /// Weyl sums of {k s(a; c)}.
    Weyl(WeylArgs),
    /// Star discrepancy and Erdős–Turán bound of {k s(a; c)}.
    Discrepancy(DiscrepancyArgs),
    /// Histogram of {k s(a; c)}.
    Histogram(HistogramArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dedekind(_) => "dedekind",
            Command::Phi(_) => "phi",
            Command::Symbol(_) => "symbol",
            Command::Cosets(_) => "cosets",
            Command::Count(_) => "count",
            Command::Zeta(_) => "zeta",
            Command::Kloosterman(_) => "kloosterman",
            Command::Twisted(_) => "twisted",
            Command::Vardi(_) => "vardi",
            Command::Weyl(_) => "weyl",
            Command::Discrepancy(_) => "discrepancy",
            Command::Histogram(_) => "histogram",
        }
    }
}

#[derive(Debug, Args)]
pub struct DedekindArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: i64,
    #[arg(long)]
    pub c: i64,
    #[arg(long, value_enum, default_value = "fast")]
    pub method: Method,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["a", "seed"])))]
pub struct PhiArgs {
    #[arg(long, allow_hyphen_values = true, requires_all = ["b", "c", "d"])]
    pub a: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
    /// Seed for a random word in S^±1, T^±1.
    #[arg(long, conflicts_with = "a")]
    pub seed: Option<u64>,
    /// Length of the random word.
    #[arg(long, default_value_t = 10)]
    pub length: usize,
}

#[derive(Debug, Args)]
pub struct SymbolArgs {
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub c: u64,
    #[arg(long, value_parser = parse_group, default_value = "sl2z")]
    pub group: GroupSpec,
}

#[derive(Debug, Args)]
pub struct GroupX {
    #[arg(long, value_parser = parse_group, default_value = "sl2z")]
    pub group: GroupSpec,
    #[arg(long)]
    pub x: f64,
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    #[arg(long, value_parser = parse_group, default_value = "sl2z")]
    pub group: GroupSpec,
    #[arg(long, default_value_t = 2.0)]
    pub s: f64,
    #[arg(long)]
    pub x: f64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("range").required(true).args(["c", "cmax", "x"])))]
pub struct KloostermanArgs {
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub m: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub n: i64,
    /// Single modulus.
    #[arg(long)]
    pub c: Option<u64>,
    /// All moduli 1..=cmax.
    #[arg(long)]
    pub cmax: Option<u64>,
    /// Partial sum over c <= x.
    #[arg(long)]
    pub x: Option<f64>,
    #[arg(long, value_enum, default_value = "unweighted")]
    pub weighting: WeightingArg,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("range").required(true).args(["c", "cmax"])))]
pub struct TwistedArgs {
    #[arg(long, value_parser = parse_weight)]
    pub k: Weight,
    #[arg(long, value_parser = parse_group, default_value = "sl2z")]
    pub group: GroupSpec,
    #[arg(long)]
    pub c: Option<u64>,
    #[arg(long)]
    pub cmax: Option<u64>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("range").required(true).args(["c", "cmax"])))]
pub struct VardiArgs {
    #[arg(long, value_parser = parse_weight)]
    pub k: Weight,
    #[arg(long)]
    pub c: Option<u64>,
    #[arg(long)]
    pub cmax: Option<u64>,
}

#[derive(Debug, Args)]
pub struct StreamArgs {
    #[arg(long, value_parser = parse_weight)]
    pub k: Weight,
    #[arg(long, value_parser = parse_group, default_value = "sl2z")]
    pub group: GroupSpec,
    #[arg(long)]
    pub x: f64,
}

#[derive(Debug, Args)]
pub struct WeylArgs {
    #[command(flatten)]
    pub stream: StreamArgs,
    /// Single frequency; otherwise m = 1..=M.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(long = "M", default_value_t = 5)]
    pub big_m: u32,
}

#[derive(Debug, Args)]
pub struct DiscrepancyArgs {
    #[command(flatten)]
    pub stream: StreamArgs,
    /// Erdős–Turán truncation.
    #[arg(long = "M", default_value_t = 50)]
    pub big_m: u32,
}

#[derive(Debug, Args)]
pub struct HistogramArgs {
    #[command(flatten)]
    pub stream: StreamArgs,
    #[arg(long, default_value_t = 20)]
    pub bins: usize,
}
