use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "fhdiag",
    version,
    about = "Perimeter, area and isoperimetric deficit of triangles: diagram, slices, inversion and inequality checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate triangles and their diagram points.
    Sample(SampleArgs),
    /// Attainable Y range and admissible z intervals at a fixed X.
    Slice(SliceArgs),
    /// Witness triangle (perimeter 1) for a diagram point.
    Invert(InvertArgs),
    /// Check every inequality on random or user-supplied triangles.
    Verify(VerifyArgs),
    /// Boundary values at X, or empirical sharp linear constants.
    Bounds(BoundsArgs),
    /// Draw the diagram (or the graph of h along one slice) as SVG.
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("strategy").args(["random", "grid"])))]
pub struct SampleArgs {
    /// Uniform random Ravi coordinates (default).
    #[arg(long)]
    pub random: bool,
    /// Equally spaced diagram points inverted to witness triangles.
    #[arg(long)]
    pub grid: bool,
    /// Number of random samples; accepts forms like 1e6.
    #[arg(short = 'n', default_value = "10000", value_parser = parse_count)]
    pub n: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Grid columns (X values) for --grid.
    #[arg(long, default_value = "9", value_parser = parse_count)]
    pub nx: u64,
    /// Grid rows (Y values per slice) for --grid.
    #[arg(long, default_value = "7", value_parser = parse_count)]
    pub ny: u64,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    /// csv (default) or svg scatter over the diagram.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Membership tolerance reported for the svg overlay.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct SliceArgs {
    #[arg(long = "x", allow_negative_numbers = true)]
    pub x: f64,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    /// text (default) or csv.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct InvertArgs {
    #[arg(long = "x", allow_negative_numbers = true)]
    pub x: f64,
    #[arg(long = "y", allow_negative_numbers = true)]
    pub y: f64,
    /// Membership tolerance for the input point.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    /// text (default) or csv.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["random", "input"])))]
pub struct VerifyArgs {
    /// Check seeded random triangles.
    #[arg(long)]
    pub random: bool,
    /// Check `a,b,c` (or `a,b,c,X,Y`) rows from a CSV file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(short = 'n', default_value = "10000", value_parser = parse_count)]
    pub n: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    /// csv (default) or text.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Evaluate the boundary curves and linear bounds at this X.
    #[arg(long = "x", allow_negative_numbers = true)]
    pub x: Option<f64>,
    /// Boundary points per piece for the sharp-constant estimate.
    #[arg(short = 'n', default_value = "10000", value_parser = parse_count)]
    pub n: u64,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    /// text (default) or csv.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(short = 'o', long)]
    pub output: PathBuf,
    /// Overlay the points of a sample CSV (`a,b,c[,X,Y]`).
    #[arg(long)]
    pub samples: Option<PathBuf>,
    /// Plot h over the admissible z at this X instead of the diagram.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "samples")]
    pub slice: Option<f64>,
    /// Membership tolerance used to count overlay escapees.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Only svg is supported.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

/// Nonnegative integer count, also accepting exact scientific forms like `1e6`.
pub fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 => {
            Ok(v as u64)
        }
        _ => Err(format!("expected a nonnegative integer count, got {s:?}")),
    }
}
