//! Exact algebra of one-variable differential operators with coefficients
//! polynomial in `J` and `K`.

pub mod ansatz;
pub mod operator;
pub mod param_poly;
pub mod su11;

pub use ansatz::{
    solve_schrodinger_ansatz, solve_schrodinger_ansatz_with_eigenvalue, FactorizationSolution,
    FactorizationSummary,
};
pub use operator::{NormalOrderedOperator, NumericOperator, NumericTerm, OpMonomial};
pub use param_poly::{rational, ParamPoly, Rational};
pub use su11::{
    build_ln, build_t3, build_tpm, build_tpm_n, casimir, casimir_variant, definitional_identity,
    identities, Identity, Sign,
};
