use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::space::CollapseVariant;

#[derive(Debug, Parser)]
#[command(name = "hvi", version, about = "HVI color space transforms and evaluation")]
pub struct Cli {
    /// File of `key = value` defaults; command-line flags win.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Seed for commands that draw random numbers.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert an sRGB PNG to an HVI1 tensor.
    #[command(args_override_self = true)]
    ToHvi(ToHviArgs),
    /// Convert an HVI1 tensor back to an sRGB PNG.
    #[command(args_override_self = true)]
    FromHvi(FromHviArgs),
    /// PSNR / SSIM of predictions against references.
    #[command(args_override_self = true)]
    Report(ReportArgs),
    /// Corrected-image PSNR in four color spaces.
    #[command(args_override_self = true)]
    AblateSpace(AblateArgs),
    /// Sample collapse curves C_k(I).
    #[command(args_override_self = true)]
    SweepK(SweepArgs),
    /// Apply a seeded random gamma curve to an image.
    #[command(args_override_self = true)]
    Augment(AugmentArgs),
}

/// Optional hue remap and saturation function.
#[derive(Debug, Clone, Args)]
pub struct GeneralizeArgs {
    #[arg(long, requires = "gamma_b", value_parser = finite)]
    pub gamma_g: Option<f64>,
    #[arg(long, requires = "gamma_g", value_parser = finite)]
    pub gamma_b: Option<f64>,
    /// unit | parabolic | file:<path>
    #[arg(long, default_value = "unit")]
    pub sat: String,
}

#[derive(Debug, Clone, Args)]
pub struct ToHviArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, default_value_t = 1.0, value_parser = positive)]
    pub k: f64,
    #[arg(long, default_value_t = CollapseVariant::Sin)]
    pub variant: CollapseVariant,
    #[command(flatten)]
    pub generalize: GeneralizeArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FromHviArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, default_value_t = 1.0, value_parser = non_negative)]
    pub alpha_s: f64,
    #[arg(long, default_value_t = 1.0, value_parser = non_negative)]
    pub alpha_i: f64,
    #[command(flatten)]
    pub generalize: GeneralizeArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ReportArgs {
    /// Prediction image or directory.
    #[arg(long)]
    pub pred: PathBuf,
    /// Reference image or directory.
    #[arg(long = "ref")]
    pub reference: PathBuf,
    /// Scale each prediction to the reference's mean luma before scoring.
    #[arg(long)]
    pub gt_mean: bool,
    /// Write per-image rows here instead of stdout.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct AblateArgs {
    #[arg(long)]
    pub low: PathBuf,
    #[arg(long = "ref")]
    pub reference: PathBuf,
    #[arg(long, default_value_t = 1.0, value_parser = positive)]
    pub k: f64,
    #[arg(long, default_value_t = CollapseVariant::Sin)]
    pub variant: CollapseVariant,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Directory for 16-bit error-map PNGs of each corrected image.
    #[arg(long)]
    pub error_maps: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Comma-separated density values.
    #[arg(long, required = true, value_delimiter = ',', value_parser = positive)]
    pub ks: Vec<f64>,
    /// Grid points on I in [0, 1], endpoints included.
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u64).range(2..))]
    pub samples: u64,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = CollapseVariant::Sin)]
    pub variant: CollapseVariant,
}

#[derive(Debug, Clone, Args)]
pub struct AugmentArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
}

fn finite(s: &str) -> Result<f64, String> {
    let x: f64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("expected a finite number, got {s}"))
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let x = finite(s)?;
    if x > 0.0 {
        Ok(x)
    } else {
        Err(format!("must be > 0, got {s}"))
    }
}

fn non_negative(s: &str) -> Result<f64, String> {
    let x = finite(s)?;
    if x >= 0.0 {
        Ok(x)
    } else {
        Err(format!("must be >= 0, got {s}"))
    }
}
