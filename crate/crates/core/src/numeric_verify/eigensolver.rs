//! Finite-difference radial eigensolver.
//!
//! The reduced radial equation `−½χ″ − χ/r + J(J+1)/(2r²) χ = Eχ` is
//! discretized with the three-point Laplacian on a Dirichlet grid, giving a
//! symmetric tridiagonal matrix whose lowest eigenvalues are isolated by
//! Sturm-sequence bisection. `χ ∝ r^(J+1)` at the origin, so the Dirichlet
//! condition at `r = 0` is exact.

use std::f64::consts::PI;

use crate::error::{Error, Result};

use super::grid::RadialGrid;

const MAX_BISECTIONS: usize = 300;
/// Minimum nodes per expected wavelength before the grid is rejected.
pub const MIN_NODES_PER_WAVELENGTH: f64 = 8.0;

/// Symmetric tridiagonal matrix as (diagonal, off-diagonal).
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiagonal {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `lambda` (count of negative
    /// pivots in the LDLᵀ factorization of `T − λ`).
    pub fn sturm_count(&self, lambda: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0f64;
        for i in 0..self.diag.len() {
            let coupling = if i == 0 { 0.0 } else { self.off[i - 1] * self.off[i - 1] };
            let guard = if q == 0.0 { f64::EPSILON * (coupling.abs() + 1.0) } else { q };
            q = self.diag[i] - lambda - if i == 0 { 0.0 } else { coupling / guard };
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing every eigenvalue.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// The `count` lowest eigenvalues, ascending.
    pub fn lowest_eigenvalues(&self, count: usize) -> Result<Vec<f64>> {
        if count > self.len() {
            return Err(Error::ConvergenceFailure(format!(
                "requested {count} eigenvalues of a {}×{} matrix",
                self.len(),
                self.len()
            )));
        }
        if count == 0 {
            return Ok(Vec::new());
        }
        if self.diag.iter().chain(&self.off).any(|v| !v.is_finite()) {
            return Err(Error::ConvergenceFailure("matrix has non-finite entries".into()));
        }
        let (lo0, hi0) = self.gershgorin();
        let pad = 1e-8 * (lo0.abs() + hi0.abs() + 1.0);
        let (lo0, hi0) = (lo0 - pad, hi0 + pad);
        if self.sturm_count(lo0) != 0 || self.sturm_count(hi0) != self.len() {
            return Err(Error::ConvergenceFailure(
                "Sturm counts do not bracket the spectrum".into(),
            ));
        }

        let mut out = Vec::with_capacity(count);
        let mut lower = lo0;
        for k in 0..count {
            let (mut a, mut b) = (lower, hi0);
            let mut converged = false;
            for _ in 0..MAX_BISECTIONS {
                let mid = 0.5 * (a + b);
                if b - a <= 2.0 * f64::EPSILON * mid.abs().max(f64::MIN_POSITIVE) || mid == a || mid == b {
                    converged = true;
                    break;
                }
                if self.sturm_count(mid) <= k {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            if !converged {
                return Err(Error::ConvergenceFailure(format!(
                    "eigenvalue {k} not isolated after {MAX_BISECTIONS} bisections"
                )));
            }
            let value = 0.5 * (a + b);
            out.push(value);
            lower = a;
        }
        Ok(out)
    }
}

/// Finite-difference matrix of `−½ d²/dr² − 1/r + J(J+1)/(2r²)`.
pub fn radial_hamiltonian(big_j: f64, grid: &RadialGrid) -> Tridiagonal {
    let h = grid.spacing();
    let centrifugal = big_j * (big_j + 1.0);
    let diag = grid
        .nodes()
        .map(|r| 1.0 / (h * h) - 1.0 / r + centrifugal / (2.0 * r * r))
        .collect();
    let off = vec![-0.5 / (h * h); grid.npoints - 1];
    Tridiagonal { diag, off }
}

/// Expected shortest wavelength, `2π(J+1)`: the oscillation scale of the
/// lowest bound state of the `J` sector.
pub fn expected_wavelength(big_j: f64) -> f64 {
    2.0 * PI * (big_j + 1.0)
}

/// The `count` lowest eigenvalues of the discretized radial problem.
pub fn eig_oracle(big_j: f64, grid: &RadialGrid, count: usize) -> Result<Vec<f64>> {
    if big_j.is_nan() || big_j < 0.0 {
        return Err(Error::ParamOutOfRange(format!("J must be non-negative, got {big_j}")));
    }
    if count > grid.npoints {
        return Err(Error::ParamOutOfRange(format!(
            "count {count} exceeds the {} grid points",
            grid.npoints
        )));
    }
    let per_wavelength = expected_wavelength(big_j) / grid.spacing();
    if per_wavelength < MIN_NODES_PER_WAVELENGTH {
        return Err(Error::GridTooCoarse(format!(
            "{per_wavelength:.2} nodes per wavelength (need {MIN_NODES_PER_WAVELENGTH}) at h = {}",
            grid.spacing()
        )));
    }
    radial_hamiltonian(big_j, grid).lowest_eigenvalues(count)
}
