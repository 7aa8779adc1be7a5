//! Schrödinger factorization and the su(1,1) dynamical algebra of the
//! generalized MICZ-Kepler problem.
//!
//! * [`quantum_numbers`]: exact half-integer bookkeeping, coupling shifts and
//!   the analytic spectrum.
//! * [`special_functions`]: Jacobi polynomials and the terminating Kummer
//!   function.
//! * [`operator_algebra`]: exact normal-ordered differential operators, the
//!   factorization solver and the su(1,1) identities.
//! * [`analytic_states`]: closed-form radial and angular eigenfunctions.
//! * [`numeric_verify`]: finite-difference eigensolver and grid-based checks.

pub mod analytic_states;
pub mod error;
pub mod numeric_verify;
pub mod operator_algebra;
pub mod quantum_numbers;
pub mod special_functions;

pub use error::{Error, Result};
pub use quantum_numbers::{
    energy, irrep_labels, make_sector, HalfInt, IrrepLabels, LevelLabels, MonopoleParams,
    SectorLabels,
};
