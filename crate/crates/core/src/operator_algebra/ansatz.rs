//! Coefficient matching for the first-order factorization
//! `(xD + a x + b)(−xD + c x + f) = target − λ + g`, where `target χ = λ χ`
//! is the eigenvalue equation being factorized.
//!
//! Expanding the product in normal order gives
//!
//! ```text
//! −x²D² + (c − a) x²D + (f − b − 1) xD + ac x² + (c + af + bc) x + bf
//! ```
//!
//! so matching against the target fixes `c − a`, `f − b`, `ac` and the linear
//! coefficient; `g` absorbs the constants.

use serde::Serialize;

use super::operator::{NormalOrderedOperator as Op, OpMonomial};
use super::param_poly::{rational, ParamPoly};
use crate::error::{Error, Result};

/// One branch of the factorization. `branch` is the sign of `a`'s root
/// choice (`Plus` for the root with positive leading coefficient).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationSolution {
    pub a: ParamPoly,
    pub b: ParamPoly,
    pub c: ParamPoly,
    pub f: ParamPoly,
    pub g: ParamPoly,
    pub branch: super::su11::Sign,
}

/// Printable form of a [`FactorizationSolution`].
#[derive(Debug, Clone, Serialize)]
pub struct FactorizationSummary {
    pub branch: char,
    pub a: String,
    pub b: String,
    pub c: String,
    pub f: String,
    pub g: String,
}

impl FactorizationSolution {
    /// `xD + a x + b`.
    pub fn left_factor(&self) -> Op {
        let mut op = Op::term(ParamPoly::one(), 1, 1);
        op.add_term(OpMonomial::new(1, 0), self.a.clone());
        op.add_term(OpMonomial::new(0, 0), self.b.clone());
        op
    }

    /// `−xD + c x + f`.
    pub fn right_factor(&self) -> Op {
        let mut op = Op::term(ParamPoly::int(-1), 1, 1);
        op.add_term(OpMonomial::new(1, 0), self.c.clone());
        op.add_term(OpMonomial::new(0, 0), self.f.clone());
        op
    }

    /// Re-expands the product and checks it against `target − λ + g`.
    pub fn verify(&self, target: &Op, eigenvalue: &ParamPoly) -> bool {
        let product = self.left_factor().compose(&self.right_factor());
        let expect = target + &Op::scalar(&self.g - eigenvalue);
        product == expect
    }

    pub fn summary(&self) -> FactorizationSummary {
        FactorizationSummary {
            branch: self.branch.symbol(),
            a: self.a.to_string(),
            b: self.b.to_string(),
            c: self.c.to_string(),
            f: self.f.to_string(),
            g: self.g.to_string(),
        }
    }
}

/// Factorizes `target` under the eigenvalue equation `target χ = −J(J+1) χ`,
/// the form taken by the scaled radial equation.
pub fn solve_schrodinger_ansatz(target: &Op) -> Result<Vec<FactorizationSolution>> {
    solve_schrodinger_ansatz_with_eigenvalue(target, &-ParamPoly::j_j1())
}

pub fn solve_schrodinger_ansatz_with_eigenvalue(
    target: &Op,
    eigenvalue: &ParamPoly,
) -> Result<Vec<FactorizationSolution>> {
    const SHAPE: [(i32, u32); 6] = [(2, 2), (2, 1), (1, 1), (2, 0), (1, 0), (0, 0)];
    if let Some((m, _)) = target
        .terms()
        .find(|(m, _)| !SHAPE.contains(&(m.xpow, m.dorder)))
    {
        return Err(Error::NoFactorization(format!(
            "target has a term x^{} D^{} outside the first-order product shape",
            m.xpow, m.dorder
        )));
    }
    if target.coeff(2, 2) != ParamPoly::int(-1) {
        return Err(Error::NoFactorization(format!(
            "coefficient of x^2 D^2 must be -1, got {}",
            target.coeff(2, 2)
        )));
    }
    let t21 = target.coeff(2, 1);
    let t11 = target.coeff(1, 1);
    let t20 = target.coeff(2, 0);
    let t10 = target.coeff(1, 0);
    let t00 = target.coeff(0, 0);

    // c = a + t21 and a c = t20  ⇒  a² + t21 a − t20 = 0.
    let disc = &(&t21 * &t21) + &t20.scale(&rational(4, 1));
    let root = disc.sqrt_exact().ok_or_else(|| {
        Error::NoFactorization(format!(
            "discriminant {disc} of a² + ({t21}) a − ({t20}) = 0 is not a perfect square"
        ))
    })?;
    let half = rational(1, 2);
    let mut candidates = vec![(super::su11::Sign::Plus, (&root - &t21).scale(&half))];
    if !root.is_zero() {
        candidates.push((super::su11::Sign::Minus, (&-&root - &t21).scale(&half)));
    }

    let mut solutions = Vec::with_capacity(candidates.len());
    for (branch, a) in candidates {
        let c = &a + &t21;
        // f = b + 1 + t11; linear x term: c + a f + b c = t10
        //   ⇒ b (a + c) = t10 − c − a (1 + t11)
        let sum = &a + &c;
        let rhs = &(&t10 - &c) - &(&a * &(&ParamPoly::one() + &t11));
        let b = match sum.as_constant() {
            Some(s) if s != num::Zero::zero() => rhs.div_constant(&s).expect("non-zero divisor"),
            Some(_) => {
                return if rhs.is_zero() {
                    Err(Error::Underdetermined(format!(
                        "a + c vanishes on branch a = {a}; b and f are unconstrained"
                    )))
                } else {
                    Err(Error::NoFactorization(format!(
                        "a + c vanishes on branch a = {a} but the x coefficient needs {rhs}"
                    )))
                };
            }
            None => {
                return Err(Error::NoFactorization(format!(
                    "a + c = {sum} is not a constant; division is not supported"
                )))
            }
        };
        let f = &(&b + &ParamPoly::one()) + &t11;
        let g = &(&(&b * &f) - &t00) + eigenvalue;
        let sol = FactorizationSolution { a, b, c, f, g, branch };
        debug_assert!(sol.verify(target, eigenvalue));
        solutions.push(sol);
    }
    Ok(solutions)
}
