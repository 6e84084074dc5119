//! Argument grammar of the `wed` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "wed",
    version,
    about = "Bounded weighted edit distances for strings, forests, and bracket strings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Weighted string edit distance up to a threshold.
    String(StringArgs),
    /// Weighted tree edit distance between two forests up to a threshold.
    Tree(TreeArgs),
    /// Weighted Dyck edit distance of a bracket string up to a threshold.
    Dyck(DyckArgs),
    /// Check a weight table against a validation mode.
    ValidateWeights(ValidateArgs),
}

#[derive(Args)]
pub struct StringArgs {
    /// Left input file.
    #[arg(long, conflicts_with = "batch", required_unless_present = "batch")]
    pub x: Option<PathBuf>,
    /// Right input file.
    #[arg(long, conflicts_with = "batch", required_unless_present = "batch")]
    pub y: Option<PathBuf>,
    /// Weight table file.
    #[arg(long)]
    pub weights: PathBuf,
    /// Distance threshold; anything larger reports as INF.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    /// Write the kernelized pair to PREFIX.x and PREFIX.y.
    #[arg(long, value_name = "PREFIX", conflicts_with = "batch")]
    pub kernel_out: Option<PathBuf>,
    /// Also run the brute-force reference and print its value.
    #[arg(long)]
    pub oracle: bool,
    /// Treat every byte of the input as one symbol.
    #[arg(long, conflicts_with = "chars")]
    pub bytes: bool,
    /// Treat every Unicode scalar of the input as one symbol.
    #[arg(long)]
    pub chars: bool,
    /// File listing `X_PATH Y_PATH` per line; prints one distance per
    /// line in list order.
    #[arg(long, value_name = "LIST")]
    pub batch: Option<PathBuf>,
}

#[derive(Args)]
pub struct TreeArgs {
    /// Left forest file (s-expressions).
    #[arg(long, conflicts_with = "batch", required_unless_present = "batch")]
    pub f: Option<PathBuf>,
    /// Right forest file (s-expressions).
    #[arg(long, conflicts_with = "batch", required_unless_present = "batch")]
    pub g: Option<PathBuf>,
    /// Weight table file.
    #[arg(long)]
    pub weights: PathBuf,
    /// Distance threshold; anything larger reports as INF.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    /// Write the kernelized pair to PREFIX.x and PREFIX.y.
    #[arg(long, value_name = "PREFIX", conflicts_with = "batch")]
    pub kernel_out: Option<PathBuf>,
    /// Also run the brute-force reference and print its value.
    #[arg(long)]
    pub oracle: bool,
    /// File listing `F_PATH G_PATH` per line; prints one distance per
    /// line in list order.
    #[arg(long, value_name = "LIST")]
    pub batch: Option<PathBuf>,
}

#[derive(Args)]
pub struct DyckArgs {
    /// Input bracket string file.
    #[arg(long, conflicts_with = "batch", required_unless_present = "batch")]
    pub x: Option<PathBuf>,
    /// Bracket pair file: one `OPEN<TAB>CLOSE` line per pair.
    #[arg(long)]
    pub pairs: PathBuf,
    /// Weight table file.
    #[arg(long)]
    pub weights: PathBuf,
    /// Distance threshold; anything larger reports as INF.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    /// Write the kernelized string to PREFIX.x.
    #[arg(long, value_name = "PREFIX", conflicts_with = "batch")]
    pub kernel_out: Option<PathBuf>,
    /// Also run the brute-force reference and print its value.
    #[arg(long)]
    pub oracle: bool,
    /// Treat every byte of the input as one symbol.
    #[arg(long, conflicts_with = "chars")]
    pub bytes: bool,
    /// Treat every Unicode scalar of the input as one symbol.
    #[arg(long)]
    pub chars: bool,
    /// File listing one `X_PATH` per line; prints one distance per line
    /// in list order.
    #[arg(long, value_name = "LIST")]
    pub batch: Option<PathBuf>,
}

#[derive(Args)]
pub struct ValidateArgs {
    /// Weight table file.
    #[arg(long)]
    pub weights: PathBuf,
    /// Validation strength: normalized, quasimetric, or skewmetric.
    #[arg(long)]
    pub mode: String,
    /// Bracket pair file installing the complement involution
    /// (required for skewmetric checks).
    #[arg(long)]
    pub pairs: Option<PathBuf>,
}
