use std::path::PathBuf;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use qhermite::families::FAMILY_NAMES;
use qhermite::identities::registry;
use qhermite::moments::NamedSpec;

#[derive(Parser, Debug)]
#[command(
    name = "qhermite",
    version,
    about = "Exact q-Hermite polynomials, continued fractions and matching statistics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the members p_0..p_N of a polynomial family.
    Table(TableArgs),
    /// Moments and extracted S-fraction coefficients of a named J-fraction.
    Cf(CfArgs),
    /// Hankel determinants d(n,0), d(n,1) and the product-formula residual.
    Hankel(HankelArgs),
    /// Crossing generating polynomials c(n,k,q) by enumerating matchings.
    Oracle(OracleArgs),
    /// Run the identity verification suite.
    Verify(VerifyArgs),
    /// Dump every family, the moments of every spec and the c(n,k,q) triangle as JSON.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Latex => "latex",
        }
    }
}

#[derive(Args, Debug)]
pub struct Output {
    /// Output format; each subcommand accepts a subset.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SpecArg {
    /// J-fraction name.
    #[arg(long, value_parser = PossibleValuesParser::new(NamedSpec::NAMES))]
    pub spec: String,
    /// Parameter m of the `w` spec.
    #[arg(long, default_value_t = 0)]
    pub m: u32,
}

impl SpecArg {
    pub fn named(&self) -> NamedSpec {
        NamedSpec::parse(&self.spec, self.m).expect("restricted by the parser")
    }
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_parser = PossibleValuesParser::new(FAMILY_NAMES))]
    pub family: String,
    /// Highest degree.
    #[arg(long = "n", visible_alias = "max-n")]
    pub n: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Part {
    Moments,
    Sfraction,
    Both,
}

#[derive(Args, Debug)]
pub struct CfArgs {
    #[command(flatten)]
    pub spec: SpecArg,
    /// Moments mu_0..mu_N and S-coefficients c_1..c_N.
    #[arg(long = "n", visible_alias = "max-n")]
    pub n: usize,
    /// What to print.
    #[arg(long, value_enum, default_value_t = Part::Both)]
    pub part: Part,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct HankelArgs {
    #[command(flatten)]
    pub spec: SpecArg,
    /// Orders 0..=N.
    #[arg(long = "n", visible_alias = "max-n")]
    pub n: usize,
    /// Also print d(n,shift) for this shift.
    #[arg(long)]
    pub shift: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    /// Number of vertices.
    #[arg(long = "n", visible_alias = "max-n")]
    pub n: usize,
    /// Only the polynomial with k unmatched vertices.
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("which").required(true).args(["all", "identity", "list"]))]
pub struct VerifyArgs {
    /// Run every identity.
    #[arg(long)]
    pub all: bool,
    /// Run only the named identities.
    #[arg(long, value_parser = identity_names())]
    pub identity: Vec<String>,
    /// List identity names and descriptions.
    #[arg(long)]
    pub list: bool,
    /// Override every identity's default range (each is still capped).
    #[arg(long = "max-n", visible_alias = "n")]
    pub max_n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Random points per degree for the numeric check.
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[command(flatten)]
    pub output: Output,
}

fn identity_names() -> PossibleValuesParser {
    PossibleValuesParser::new(registry().into_iter().map(|i| i.name))
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    /// Highest degree / moment index / triangle row.
    #[arg(long = "n", visible_alias = "max-n")]
    pub n: usize,
    #[command(flatten)]
    pub output: Output,
}
