//! Grid checks of the analytic states against the ladder algebra.
//!
//! All radial checks work in the scaled variable `x = r/K`, on a
//! [`RadialGrid`] whose `rmax` is read as the upper end of the `x` window.

use crate::analytic_states::{angular_mesh, default_window, AngularState, RadialState};
use crate::error::{Error, Result};
use crate::operator_algebra::{build_ln, build_t3, build_tpm, NormalOrderedOperator as Op, Sign};
use crate::quantum_numbers::{energy, make_sector, HalfInt, MonopoleParams, SectorLabels};

use super::apply::apply_operator;
use super::eigensolver::eig_oracle;
use super::grid::{similarity_defect, GridFunction, RadialGrid};
use super::report::VerificationReport;

pub const LADDER_TOL: f64 = 1e-7;
pub const ANNIHILATION_TOL: f64 = 1e-8;
pub const EIGEN_TOL: f64 = 1e-8;
pub const RADIAL_ODE_TOL: f64 = 1e-9;
pub const ANGULAR_TOL: f64 = 1e-9;
pub const SPECTRUM_TOL: f64 = 1e-4;
pub const DEFAULT_STATE_POINTS: usize = 4000;

/// Where derivatives of the sampled state come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DerivativeMode {
    #[default]
    Analytic,
    /// Fourth-order finite differences; nodes with `x < 5h` and the last
    /// two nodes are dropped from the norms.
    FiniteDifference,
}

/// Scaled window `(0, 10 + 4K]` covering the level `n` of the sector.
pub fn state_grid(sector: &SectorLabels, n: HalfInt, npoints: usize) -> Result<RadialGrid> {
    let k = energy(sector, n)?.k;
    RadialGrid::new(default_window(k), npoints)
}

/// Oracle window `12 K²` for the highest requested level.
pub fn default_oracle_rmax(k_max: f64) -> f64 {
    12.0 * k_max * k_max
}

fn sample(state: &RadialState, grid: &RadialGrid) -> Result<GridFunction> {
    GridFunction::sample(grid, |x| state.derivative_unchecked(0, x))
}

fn apply_to_state(
    op: &Op,
    state: &RadialState,
    f: &GridFunction,
    mode: DerivativeMode,
) -> Result<GridFunction> {
    let numeric = op.substitute(state.sector.big_j, state.k());
    match mode {
        DerivativeMode::Analytic => {
            let cb = |q: u32, x: f64| state.derivative_unchecked(q, x);
            apply_operator(&numeric, f, Some(&cb))
        }
        DerivativeMode::FiniteDifference => apply_operator(&numeric, f, None),
    }
}

fn trim(f: &GridFunction, mode: DerivativeMode) -> GridFunction {
    match mode {
        DerivativeMode::Analytic => f.clone(),
        DerivativeMode::FiniteDifference => {
            let h = f.grid.spacing();
            let n = f.grid.npoints;
            f.masked(|i, x| x >= 5.0 * h && i + 2 < n)
        }
    }
}

fn level_report(name: &str, residual: f64, tol: f64, sector: &SectorLabels, n: HalfInt) -> VerificationReport {
    VerificationReport::new(name, residual, tol).with_sector(sector).input("n", n)
}

/// `T±` on `χ_n`: similarity defect against `χ_{n±1}`, or `‖T₋χ‖/‖χ‖` at
/// the bottom of the tower.
pub fn ladder_check(sector: &SectorLabels, n: HalfInt, sign: Sign, grid: &RadialGrid) -> Result<VerificationReport> {
    ladder_check_with(sector, n, sign, grid, DerivativeMode::Analytic)
}

pub fn ladder_check_with(
    sector: &SectorLabels,
    n: HalfInt,
    sign: Sign,
    grid: &RadialGrid,
    mode: DerivativeMode,
) -> Result<VerificationReport> {
    let state = RadialState::new(sector, n)?;
    let chi = sample(&state, grid)?;
    let y = trim(&apply_to_state(&build_tpm(sign), &state, &chi, mode)?, mode);
    let target_n = n + HalfInt::from_int(sign.value());
    match energy(sector, target_n) {
        Ok(_) => {
            let target = trim(&sample(&RadialState::new(sector, target_n)?, grid)?, mode);
            let name = match sign {
                Sign::Plus => "ladder_raise",
                Sign::Minus => "ladder_lower",
            };
            Ok(level_report(name, similarity_defect(&y, &target), LADDER_TOL, sector, n)
                .with_grid(grid)
                .input("target_n", target_n)
                .measure("ratio", y.inner(&target) / target.inner(&target)))
        }
        Err(Error::InvalidLevel(_)) if sign == Sign::Minus => {
            let chi = trim(&chi, mode);
            let ratio = y.norm() / chi.norm();
            Ok(level_report("ladder_annihilation", ratio, ANNIHILATION_TOL, sector, n).with_grid(grid))
        }
        Err(e) => Err(e),
    }
}

fn rayleigh(op: &Op, state: &RadialState, f: &GridFunction, expected: f64) -> Result<(f64, f64)> {
    let g = apply_to_state(op, state, f, DerivativeMode::Analytic)?;
    let eigen = f.inner(&g) / f.inner(f);
    let residual = g.axpy(expected, f).norm() / f.norm();
    Ok((eigen, residual))
}

/// `T₃χ = Kχ`, plus `T₃(T±χ) = (K±1) T±χ` through the composed operators.
/// The residual is the largest of the relative norms.
pub fn t3_eigen_check(sector: &SectorLabels, n: HalfInt, grid: &RadialGrid) -> Result<VerificationReport> {
    let state = RadialState::new(sector, n)?;
    let chi = sample(&state, grid)?;
    let k = state.k();
    let t3 = build_t3();
    let (eigen, mut residual) = rayleigh(&t3, &state, &chi, k)?;
    let mut report = level_report("t3_eigen", 0.0, EIGEN_TOL, sector, n)
        .with_grid(grid)
        .measure("eigenvalue", eigen)
        .measure("expected", k);

    for sign in [Sign::Plus, Sign::Minus] {
        if sign == Sign::Minus && n == sector.lowest_n() {
            continue;
        }
        let ladder = build_tpm(sign);
        let y = apply_to_state(&ladder, &state, &chi, DerivativeMode::Analytic)?;
        let t3y = apply_to_state(&t3.compose(&ladder), &state, &chi, DerivativeMode::Analytic)?;
        let shifted = k + sign.value() as f64;
        let eig = y.inner(&t3y) / y.inner(&y);
        residual = residual.max(t3y.axpy(shifted, &y).norm() / y.norm());
        let key = match sign {
            Sign::Plus => "raised_eigenvalue",
            Sign::Minus => "lowered_eigenvalue",
        };
        report = report.measure(key, eig);
    }
    Ok(report.with_residual(residual))
}

/// Rayleigh quotients of `T₃` on the first `levels` states; the residual is
/// the largest `|Δ − 1|` between neighbours.
pub fn k_recursion_check(sector: &SectorLabels, levels: u32, npoints: usize) -> Result<VerificationReport> {
    if levels < 2 {
        return Err(Error::ParamOutOfRange(format!("need at least 2 levels, got {levels}")));
    }
    let grid = state_grid(sector, sector.n_for(levels - 1), npoints)?;
    let t3 = build_t3();
    let mut eigen = Vec::with_capacity(levels as usize);
    for nprime in 0..levels {
        let state = RadialState::new(sector, sector.n_for(nprime))?;
        let chi = sample(&state, &grid)?;
        eigen.push(rayleigh(&t3, &state, &chi, state.k())?.0);
    }
    let worst = eigen.windows(2).map(|w| (w[1] - w[0] - 1.0).abs()).fold(0.0, f64::max);
    let mut report = VerificationReport::new("k_recursion", worst, EIGEN_TOL)
        .with_sector(sector)
        .with_grid(&grid)
        .input("levels", levels);
    for (i, e) in eigen.iter().enumerate() {
        report = report.measure(&format!("eigenvalue_{i}"), *e);
    }
    Ok(report)
}

/// `‖T²χ − J(J+1)χ‖/‖χ‖` with `T² = −T₊T₋ + T₃² − T₃` applied piecewise.
pub fn casimir_check(sector: &SectorLabels, n: HalfInt, grid: &RadialGrid) -> Result<VerificationReport> {
    let state = RadialState::new(sector, n)?;
    let chi = sample(&state, grid)?;
    let t3 = build_t3();
    let pieces = [
        -build_tpm(Sign::Plus).compose(&build_tpm(Sign::Minus)),
        t3.compose(&t3),
        -t3,
    ];
    let mut total = GridFunction { grid: grid.clone(), values: vec![0.0; grid.npoints] };
    for piece in &pieces {
        let part = apply_to_state(piece, &state, &chi, DerivativeMode::Analytic)?;
        total = total.axpy(-1.0, &part);
    }
    let expected = sector.sep_const;
    let residual = total.axpy(expected, &chi).norm() / chi.norm();
    Ok(level_report("casimir", residual, EIGEN_TOL, sector, n)
        .with_grid(grid)
        .measure("eigenvalue", chi.inner(&total) / chi.inner(&chi))
        .measure("expected", expected))
}

/// `max |(𝓛ₙ + J(J+1)) χ| / max |χ|` on `x ∈ [0.01, 40]`.
pub fn radial_ode_check(sector: &SectorLabels, n: HalfInt) -> Result<VerificationReport> {
    const POINTS: usize = 4000;
    let (lo, hi) = (0.01, 40.0);
    let state = RadialState::new(sector, n)?;
    let op = build_ln().substitute(sector.big_j, state.k());
    let mut max_res: f64 = 0.0;
    let mut max_chi: f64 = 0.0;
    for i in 0..POINTS {
        let x = lo + (hi - lo) * i as f64 / (POINTS - 1) as f64;
        let chi = state.derivative_unchecked(0, x);
        let lhs = op.apply_at(x, |q, x| state.derivative_unchecked(q, x)) + sector.sep_const * chi;
        max_res = max_res.max(lhs.abs());
        max_chi = max_chi.max(chi.abs());
    }
    Ok(level_report("radial_ode", max_res / max_chi, RADIAL_ODE_TOL, sector, n)
        .input("xmin", lo)
        .input("xmax", hi))
}

/// Separated angular equation on an interior `n_theta × n_phi` mesh.
pub fn angular_check(sector: &SectorLabels, n_theta: usize, n_phi: usize) -> Result<VerificationReport> {
    let state = AngularState::new(sector)?;
    let mesh = angular_mesh(n_theta, n_phi);
    let residual = state.residual(&mesh.0, &mesh.1)?;
    Ok(VerificationReport::new("angular", residual, ANGULAR_TOL)
        .with_sector(sector)
        .input("n_theta", n_theta)
        .input("n_phi", n_phi))
}

/// Oracle eigenvalues against `−1/(2K²)` for the first `levels` levels.
pub fn spectrum_cross_check(
    params: &MonopoleParams,
    m: HalfInt,
    j: HalfInt,
    levels: u32,
    grid: &RadialGrid,
) -> Result<Vec<VerificationReport>> {
    spectrum_cross_check_with(params, m, j, levels, grid, SPECTRUM_TOL)
}

pub fn spectrum_cross_check_with(
    params: &MonopoleParams,
    m: HalfInt,
    j: HalfInt,
    levels: u32,
    grid: &RadialGrid,
    tolerance: f64,
) -> Result<Vec<VerificationReport>> {
    if levels == 0 {
        return Err(Error::ParamOutOfRange("levels must be at least 1".into()));
    }
    let sector = make_sector(params, m, j)?;
    let oracle = eig_oracle(sector.big_j, grid, levels as usize)?;
    Ok(sector
        .levels(levels)
        .iter()
        .zip(oracle)
        .map(|(level, e)| {
            let rel = ((e - level.energy) / level.energy).abs();
            level_report("spectrum", rel, tolerance, &sector, level.n)
                .with_grid(grid)
                .measure("oracle", e)
                .measure("analytic", level.energy)
        })
        .collect())
}
