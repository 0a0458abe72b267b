use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphene_cs::LadderFamily64;

use crate::parse::{parse_angle, parse_angle_list, parse_range, parse_real_list, Range, RealList};

#[derive(Debug, Parser)]
#[command(
    name = "graphene-cs",
    version,
    about = "Coherent states of a graphene electron in a constant magnetic field"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Variances and uncertainty product over the alpha plane
    Uncertainty(PlaneArgs),
    /// Probability density over an x-grid for lists of r and theta
    Density(DensityArgs),
    /// Mean energy over the alpha plane
    Energy(PlaneArgs),
    /// Coefficient vectors with truncation diagnostics
    Coeffs(PlaneArgs),
    /// Run the invariant suite and print a JSON report
    Verify(VerifyArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Uncertainty(_) => "uncertainty",
            Command::Density(_) => "density",
            Command::Energy(_) => "energy",
            Command::Coeffs(_) => "coeffs",
            Command::Verify(_) => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    One,
    Shifted,
    Cubic,
}

impl Family {
    pub fn ladder(self) -> LadderFamily64 {
        match self {
            Family::One => LadderFamily64::One,
            Family::Shifted => LadderFamily64::Shifted,
            Family::Cubic => LadderFamily64::Cubic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    /// Magnetic field strength B0 (omega = 2 B0)
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub b0: f64,
    /// Wavenumber along y
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub k: f64,
    /// Truncation tolerance on the discarded probability, in (0, 1e-8]
    #[arg(long, default_value_t = 1e-15)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format (csv for grids, json for verify by default)
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PlaneArgs {
    #[arg(long, value_enum, default_value = "one")]
    pub family: Family,
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["r", "theta", "grid_re"])]
    pub alpha_re: Option<f64>,
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["r", "theta", "grid_im"])]
    pub alpha_im: Option<f64>,
    /// |alpha|
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["grid_re", "grid_im"])]
    pub r: Option<f64>,
    /// arg(alpha); accepts multiples of pi such as pi/4
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true, conflicts_with_all = ["grid_re", "grid_im"])]
    pub theta: Option<f64>,
    /// Real-axis sweep lo:hi:n
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub grid_re: Option<Range>,
    /// Imaginary-axis sweep lo:hi:n
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub grid_im: Option<Range>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DensityArgs {
    #[arg(long, value_enum, default_value = "one")]
    pub family: Family,
    #[command(flatten)]
    pub field: FieldArgs,
    /// x-grid lo:hi:n; defaults to the support of every requested state
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub x: Option<Range>,
    /// Single |alpha|
    #[arg(long, allow_negative_numbers = true, conflicts_with = "r_list")]
    pub r: Option<f64>,
    /// Single arg(alpha)
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true, conflicts_with = "theta_list")]
    pub theta: Option<f64>,
    /// Comma-separated |alpha| values
    #[arg(long, value_parser = parse_real_list, allow_hyphen_values = true)]
    pub r_list: Option<RealList>,
    /// Comma-separated arg(alpha) values
    #[arg(long, value_parser = parse_angle_list, allow_hyphen_values = true)]
    pub theta_list: Option<RealList>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}
