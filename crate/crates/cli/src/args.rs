use clap::{Args, Parser, Subcommand, ValueEnum};
use stirbern::num::parse_rat;
use stirbern::ExactRat;

#[derive(Debug, Parser)]
#[command(
    name = "stirbern",
    version,
    about = "Exact Stirling, Bernoulli and Euler numbers, and identity sweeps over them"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one value or one row of a sequence.
    Compute(ComputeArgs),
    /// Check identities for every n in 0..=max-n.
    Verify(VerifyArgs),
    /// Cross-check every sequence against an independent algorithm.
    Selftest(SelftestArgs),
    /// Time sequence computation and identity sweeps.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sequence {
    Stirling,
    Bernoulli,
    Euler,
    BernoulliPoly,
    Falling,
    Rising,
    DoubleFactorial,
}

impl Sequence {
    pub fn name(self) -> &'static str {
        match self {
            Sequence::Stirling => "stirling",
            Sequence::Bernoulli => "bernoulli",
            Sequence::Euler => "euler",
            Sequence::BernoulliPoly => "bernoulli-poly",
            Sequence::Falling => "falling",
            Sequence::Rising => "rising",
            Sequence::DoubleFactorial => "double-factorial",
        }
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub sequence: Sequence,

    /// Index or order.
    #[arg(long)]
    pub n: Option<usize>,

    /// Column index for a single Stirling number.
    #[arg(long)]
    pub k: Option<usize>,

    /// Rational argument as p/q or p.
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub x: Option<ExactRat>,

    /// Print a whole row: s(n, 0..=n), B_0..B_n, E_0..E_n, or the
    /// coefficients of B_n(x) in ascending degree.
    #[arg(long)]
    pub row: bool,

    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    First,
    Second,
    Third,
    Recur,
    Stirdef,
    Telescoped,
    Half,
    Quarter,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub identity: IdentityArg,

    #[arg(long, default_value_t = 100)]
    pub max_n: usize,

    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,

    /// Evaluate with B_1 = +1/2 instead of -1/2.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    Bernoulli,
    Euler,
    Stirling,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Largest index compared against the oracles.
    #[arg(long, default_value_t = 200)]
    pub max_n: usize,

    /// Check von Staudt-Clausen denominators of B_2m for 1 <= m <= this.
    #[arg(long, default_value_t = 50)]
    pub vsc_max_m: usize,

    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,

    /// Corrupt one memoized value before cross-checking.
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<FaultArg>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 100)]
    pub max_n: usize,

    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub repeats: u32,

    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

fn parse_rational_arg(s: &str) -> Result<ExactRat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn negative_rational_argument() {
        let cli =
            Cli::try_parse_from(["stirbern", "compute", "falling", "--x", "-1/2", "--n", "2"])
                .unwrap();
        match cli.command {
            Command::Compute(a) => assert_eq!(a.x, Some(parse_rat("-1/2").unwrap())),
            _ => panic!("wrong subcommand"),
        }
    }

    #[test]
    fn repeats_must_be_positive() {
        assert!(Cli::try_parse_from(["stirbern", "bench", "--repeats", "0"]).is_err());
        assert!(Cli::try_parse_from(["stirbern", "bench", "--repeats", "1"]).is_ok());
    }
}
