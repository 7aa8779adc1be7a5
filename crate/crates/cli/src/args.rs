use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use micz_core::HalfInt;
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "micz", version, about = "Spectra, eigenfunctions and su(1,1) checks for the generalized MICZ-Kepler problem")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analytic energy levels of one or more (m, j) sectors.
    Spectrum(SpectrumArgs),
    /// Tabulate a radial or angular eigenfunction.
    Eigenfunction(EigenfunctionArgs),
    /// Exact operator identities and the monomial-action cross-check.
    VerifyAlgebra(AlgebraArgs),
    /// Grid checks of the closed-form states.
    VerifyStates(StatesArgs),
    /// Finite-difference eigenvalues next to the analytic spectrum.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Radial,
    Angular,
}

/// Monopole charge, couplings and the `(m, j)` selectors.
#[derive(Debug, Clone, Args, Serialize)]
pub struct SectorArgs {
    /// Monopole charge, integer or half-integer ("1/2", "1.5").
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub s: HalfInt,
    #[arg(long, default_value_t = 0.0)]
    pub c1: f64,
    #[arg(long, default_value_t = 0.0)]
    pub c2: f64,
    /// Magnetic quantum number [default: s].
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<HalfInt>,
    /// Angular momentum [default: the lowest allowed value].
    #[arg(long)]
    pub j: Option<HalfInt>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub sector: SectorArgs,
    /// Levels per j tower.
    #[arg(long, default_value_t = 3)]
    pub nmax: u32,
    /// Number of extra j values above the lowest when --j is not given.
    #[arg(long, default_value_t = 0)]
    pub jcap: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EigenfunctionArgs {
    #[command(flatten)]
    pub sector: SectorArgs,
    #[arg(long, value_enum, default_value_t = Kind::Radial)]
    pub kind: Kind,
    /// Principal quantum number [default: j + 1].
    #[arg(long)]
    pub n: Option<HalfInt>,
    /// Upper end of the scaled radial window [default: 10 + 4K].
    #[arg(long)]
    pub rmax: Option<f64>,
    #[arg(long, default_value_t = 200)]
    pub npoints: usize,
    /// Azimuth for angular tables.
    #[arg(long, default_value_t = 0.0)]
    pub phi: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct AlgebraArgs {
    /// Largest k in the monomial-action sweep over k = -4..=K.
    #[arg(long, default_value_t = 12)]
    pub deg_check_max: i64,
    /// Negate one coefficient of the given identity before checking.
    #[arg(long, hide = true)]
    pub corrupt: Option<usize>,
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct StatesArgs {
    #[command(flatten)]
    pub sector: SectorArgs,
    /// Check only this level [default: the first --nmax levels].
    #[arg(long)]
    pub n: Option<HalfInt>,
    #[arg(long, default_value_t = 3)]
    pub nmax: u32,
    /// Upper end of the scaled radial window [default: 10 + 4K of the level above the highest checked].
    #[arg(long)]
    pub rmax: Option<f64>,
    #[arg(long, default_value_t = 4000)]
    pub npoints: usize,
    /// Override every tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OracleArgs {
    #[command(flatten)]
    pub sector: SectorArgs,
    /// Use this J directly instead of deriving it from the sector.
    #[arg(long)]
    pub big_j: Option<f64>,
    #[arg(long, default_value_t = 3)]
    pub nmax: u32,
    /// Radial box size [default: 12 K² of the highest level].
    #[arg(long)]
    pub rmax: Option<f64>,
    #[arg(long, default_value_t = 6000)]
    pub npoints: usize,
    #[arg(long, default_value_t = 1e-4)]
    pub tol: f64,
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}
