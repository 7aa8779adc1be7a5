//! Numerical verification on radial grids: a finite-difference eigensolver
//! for the radial equation, operator application to sampled states and the
//! checks built on them.

pub mod apply;
pub mod checks;
pub mod eigensolver;
pub mod grid;
pub mod report;

pub use apply::{apply_operator, fd_derivative, fd_weights, Derivatives, MAX_FD_ORDER};
pub use checks::{
    angular_check, casimir_check, default_oracle_rmax, k_recursion_check, ladder_check,
    ladder_check_with, radial_ode_check, spectrum_cross_check, spectrum_cross_check_with,
    state_grid, t3_eigen_check, DerivativeMode,
};
pub use eigensolver::{eig_oracle, radial_hamiltonian, Tridiagonal};
pub use grid::{similarity_defect, GridFunction, RadialGrid};
pub use report::VerificationReport;
