#![allow(dead_code)]

use micz_core::operator_algebra::{NormalOrderedOperator as Op, OpMonomial, ParamPoly};
use rand::rngs::StdRng;
use rand::Rng;

/// Small random coefficient: an integer combination of 1, J, K, JK.
pub fn random_coeff(rng: &mut StdRng) -> ParamPoly {
    let basis = [
        ParamPoly::one(),
        ParamPoly::j(),
        ParamPoly::k(),
        &ParamPoly::j() * &ParamPoly::k(),
    ];
    basis.iter().fold(ParamPoly::zero(), |acc, b| {
        let c: i64 = rng.random_range(-3..=3);
        &acc + &b.scale(&micz_core::operator_algebra::rational(c, 1))
    })
}

/// Random operator with `xpow ∈ [−2, 3]`, `dorder ≤ 3` and up to `max_terms` terms.
pub fn random_op(rng: &mut StdRng, max_terms: usize) -> Op {
    let mut op = Op::zero();
    for _ in 0..rng.random_range(1..=max_terms) {
        let xpow = rng.random_range(-2..=3);
        let dorder = rng.random_range(0..=3);
        op.add_term(OpMonomial::new(xpow, dorder), random_coeff(rng));
    }
    op
}

/// A second expression of `op`, built by a different route through the
/// algebra so that equality is not syntactic.
pub fn rewrite(op: &Op, rng: &mut StdRng) -> Op {
    let other = random_op(rng, 3);
    match rng.random_range(0..4) {
        0 => &(op + &other) - &other,
        1 => &(&(&op.commutator(&other) - &op.compose(&other)) + &other.compose(op)) + op,
        2 => op.compose(&Op::x()).compose(&Op::x_pow(-1)),
        _ => Op::identity().compose(op).compose(&Op::identity()),
    }
}

/// `k` range of the monomial-action oracle.
pub const ORACLE_KS: std::ops::RangeInclusive<i64> = -4..=12;
