use std::collections::BTreeMap;

use serde::Serialize;

use crate::quantum_numbers::SectorLabels;

use super::grid::RadialGrid;

/// Outcome of one numerical check. `passed` is `residual ≤ tolerance`;
/// a NaN residual fails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub inputs: BTreeMap<String, String>,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Wall time, left empty by the library so reports stay reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
    /// Auxiliary measured quantities (eigenvalues, ratios, norms).
    pub measured: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn new(check_name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        VerificationReport {
            check_name: check_name.into(),
            inputs: BTreeMap::new(),
            residual,
            tolerance,
            passed: residual <= tolerance,
            runtime_ms: None,
            measured: BTreeMap::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_owned(), value.to_string());
        self
    }

    pub fn measure(mut self, key: &str, value: f64) -> Self {
        self.measured.insert(key.to_owned(), value);
        self
    }

    pub fn with_sector(self, sector: &SectorLabels) -> Self {
        self.input("s", sector.params.s)
            .input("c1", sector.params.c1)
            .input("c2", sector.params.c2)
            .input("m", sector.m)
            .input("j", sector.j)
            .input("J", sector.big_j)
    }

    pub fn with_grid(self, grid: &RadialGrid) -> Self {
        self.input("rmax", grid.rmax).input("npoints", grid.npoints)
    }

    /// Replaces the residual and recomputes `passed`.
    pub fn with_residual(mut self, residual: f64) -> Self {
        self.residual = residual;
        self.passed = residual <= self.tolerance;
        self
    }

    /// Replaces the tolerance and recomputes `passed`.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self.passed = self.residual <= tolerance;
        self
    }

    pub fn with_runtime(mut self, ms: f64) -> Self {
        self.runtime_ms = Some(ms);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passed_tracks_residual() {
        assert!(VerificationReport::new("a", 1e-9, 1e-8).passed);
        assert!(VerificationReport::new("a", 1e-8, 1e-8).passed);
        assert!(!VerificationReport::new("a", 2e-8, 1e-8).passed);
        assert!(!VerificationReport::new("a", f64::NAN, 1e-8).passed);
        assert!(VerificationReport::new("a", 1.0, 1e-8).with_residual(0.0).passed);
    }

    #[test]
    fn runtime_is_omitted_when_absent() {
        let r = VerificationReport::new("a", 0.0, 1.0);
        let json = serde_json::to_string(&r).unwrap();
        assert!(!json.contains("runtime_ms"));
        let json = serde_json::to_string(&r.with_runtime(1.5)).unwrap();
        assert!(json.contains("\"runtime_ms\":1.5"));
    }
}
