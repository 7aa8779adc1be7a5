//! Shared fixtures for the criterion benchmarks.

use micz_core::{make_sector, HalfInt, MonopoleParams, SectorLabels};

/// The `s = 1/2, c₁ = 1, c₂ = 0, m = j = 1/2` sector.
pub fn shifted_sector() -> SectorLabels {
    let half = HalfInt::HALF;
    let params = MonopoleParams::new(half, 1.0, 0.0).expect("valid couplings");
    make_sector(&params, half, half).expect("valid sector")
}

pub fn hydrogen_sector() -> SectorLabels {
    let params = MonopoleParams::micz(HalfInt::ZERO);
    make_sector(&params, HalfInt::ZERO, HalfInt::ZERO).expect("valid sector")
}
