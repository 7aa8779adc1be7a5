use serde::Serialize;

use crate::error::{Error, Result};

pub const MIN_POINTS: usize = 16;

/// Uniform interior grid `r_i = i h`, `i = 1..=npoints`, `h = rmax/(npoints+1)`.
/// Both endpoints are excluded (Dirichlet boundary).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadialGrid {
    pub rmax: f64,
    pub npoints: usize,
}

impl RadialGrid {
    pub fn new(rmax: f64, npoints: usize) -> Result<Self> {
        if !rmax.is_finite() || rmax <= 0.0 {
            return Err(Error::InvalidGrid(format!("rmax must be positive, got {rmax}")));
        }
        if npoints < MIN_POINTS {
            return Err(Error::InvalidGrid(format!(
                "need at least {MIN_POINTS} interior points, got {npoints}"
            )));
        }
        Ok(RadialGrid { rmax, npoints })
    }

    pub fn spacing(&self) -> f64 {
        self.rmax / (self.npoints + 1) as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        (i + 1) as f64 * self.spacing()
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        let h = self.spacing();
        (1..self.npoints + 1).map(move |i| i as f64 * h)
    }
}

/// Values of a function at the nodes of a grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridFunction {
    pub grid: RadialGrid,
    pub values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: RadialGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.npoints {
            return Err(Error::InvalidGrid(format!(
                "{} values for a grid of {} points",
                values.len(),
                grid.npoints
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid(format!("non-finite value at node {i}")));
        }
        Ok(GridFunction { grid, values })
    }

    pub fn sample(grid: &RadialGrid, f: impl Fn(f64) -> f64) -> Result<Self> {
        GridFunction::new(grid.clone(), grid.nodes().map(f).collect())
    }

    /// Trapezoid-rule inner product. The implicit endpoint values are zero,
    /// so this is `h Σ fᵢ gᵢ`.
    pub fn inner(&self, other: &GridFunction) -> f64 {
        let h = self.grid.spacing();
        h * self.values.iter().zip(&other.values).map(|(a, b)| a * b).sum::<f64>()
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn normalized(&self) -> GridFunction {
        let n = self.norm();
        let scale = if n > 0.0 { 1.0 / n } else { 1.0 };
        GridFunction {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v * scale).collect(),
        }
    }

    /// `self − c · other`.
    pub fn axpy(&self, c: f64, other: &GridFunction) -> GridFunction {
        GridFunction {
            grid: self.grid.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - c * b).collect(),
        }
    }

    /// Same function with nodes outside `keep` zeroed.
    pub fn masked(&self, keep: impl Fn(usize, f64) -> bool) -> GridFunction {
        let values = self
            .values
            .iter()
            .zip(self.grid.nodes())
            .enumerate()
            .map(|(i, (&v, x))| if keep(i, x) { v } else { 0.0 })
            .collect();
        GridFunction { grid: self.grid.clone(), values }
    }
}

/// `1 − |⟨a,b⟩| / (‖a‖ ‖b‖)`; zero when the two are proportional.
pub fn similarity_defect(a: &GridFunction, b: &GridFunction) -> f64 {
    let (na, nb) = (a.norm(), b.norm());
    if na == 0.0 || nb == 0.0 {
        return 1.0;
    }
    (1.0 - a.inner(b).abs() / (na * nb)).max(0.0)
}
