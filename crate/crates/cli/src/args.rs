use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "hecke",
    version,
    about = "Knot and link invariants of closed braids via the Ocneanu trace"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ocneanu trace of the braid's Hecke algebra image, in q and z.
    Trace(TargetArgs),
    /// Alexander polynomial.
    Alexander(AlexanderArgs),
    /// Jones polynomial.
    Jones(TargetArgs),
    /// HOMFLY-PT polynomial in a and z.
    Homfly(TargetArgs),
    /// Rational Khovanov rank table (weaving knots only).
    Khovanov(TargetArgs),
    /// Twist numbers T_j of the Jones polynomial and the ratios f_k, g_k.
    Twist(TwistArgs),
    /// Volume-bound curves built from the twist ratios.
    Bounds(BoundsArgs),
    /// Normalized Khovanov rank statistics.
    Stats(TargetArgs),
    /// Recompute a published table and compare with the printed values.
    Table(TableArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Directory for cached traces.
    #[arg(long, env = "HECKE_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads for independent jobs.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct TargetArgs {
    /// Weaving parameters `N,m`, or just `N` together with --m-range.
    #[arg(long, conflicts_with = "braid")]
    pub weaving: Option<String>,
    /// Braid word such as `1,-2,(1,2)^3`.
    #[arg(long)]
    pub braid: Option<String>,
    /// Strand count for --braid; defaults to one more than the largest generator.
    #[arg(long, requires = "braid")]
    pub strands: Option<usize>,
    /// Inclusive range `a..b` of m values for --weaving.
    #[arg(long, conflicts_with = "braid")]
    pub m_range: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct AlexanderArgs {
    #[command(flatten)]
    pub target: TargetArgs,
    /// Keep the extra (1-b) factor of the faithful specialization.
    #[arg(long)]
    pub faithful: bool,
}

#[derive(Args, Debug, Clone)]
pub struct TwistArgs {
    #[command(flatten)]
    pub target: TargetArgs,
    /// Orders k of the ratios f_k, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub k: Vec<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub target: TargetArgs,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub k: Vec<usize>,
    /// Curve family 1-4; all four when omitted.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub variant: Option<u8>,
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    /// One of fk3, fk4, fk5, fk6, stats3, stats4, stats5, stats6, kh43, kh53.
    pub name: String,
    /// Only recompute rows with m in `a..b`.
    #[arg(long)]
    pub m_range: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Plain,
    Latex,
}

/// Parses `a..b` (inclusive) or a single value.
pub fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let bad = || format!("invalid range {text:?}, expected a..b");
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (text.trim(), text.trim()),
    };
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..7"), Ok((3, 7)));
        assert_eq!(parse_range("3..=7"), Ok((3, 7)));
        assert_eq!(parse_range("5"), Ok((5, 5)));
        assert!(parse_range("7..3").is_err());
        assert!(parse_range("a..b").is_err());
    }
}
