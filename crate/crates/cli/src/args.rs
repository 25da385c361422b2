use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "spectral-zeta",
    version,
    about = "Spectral zeta functions of spheres and real projective spaces"
)]
pub struct Cli {
    /// Output format: json (one record per line) or csv.
    #[arg(long, global = true)]
    pub format: Option<String>,

    /// File of `key = value` flag defaults.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient row B_{k,0..k-1} of the shifted multiplicity polynomial.
    Coeffs {
        #[arg(long)]
        k: Option<usize>,
        /// all, expansion, stirling or recursion.
        #[arg(long)]
        method: Option<String>,
    },
    /// Evaluate the continued zeta function at one point.
    Eval {
        #[command(flatten)]
        target: Target,
        /// Argument in `re+imi` form.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[command(flatten)]
        numeric: NumericFlags,
    },
    /// Exact residues at s = k/2 - n for n = 0..=n_max.
    Residues {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Exact values at s = -n for n = 0..=n_max.
    Special {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Run the exact and numeric self-checks.
    Verify {
        #[arg(long)]
        k_max: Option<usize>,
        #[command(flatten)]
        numeric: NumericFlags,
    },
    /// Evaluate a list of points, one per line, from --input or stdin.
    Table {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        numeric: NumericFlags,
    },
}

#[derive(Debug, Args)]
pub struct Target {
    /// sphere or projective.
    #[arg(long)]
    pub space: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct NumericFlags {
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub max_l: Option<usize>,
    #[arg(long)]
    pub pole_eps: Option<f64>,
    #[arg(long)]
    pub em_order: Option<usize>,
}
