//! One-variable differential operators in normal order.
//!
//! An operator is a finite sum `Σ c(J,K) · x^p · D^q` with every `D = d/dx`
//! to the right. Powers `p` may be negative. Products are brought back to
//! normal order with `D x^k = x^k D + k x^(k−1)`; iterating that rewrite
//! gives the Leibniz form `D^b x^k = Σ_i C(b,i) k(k−1)…(k−i+1) x^(k−i) D^(b−i)`,
//! which `compose` applies directly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Zero};
use serde::Serialize;

use super::param_poly::{ParamPoly, Rational};

/// Key of a normal-ordered term. Field order fixes the canonical ordering:
/// by derivative order, then by power of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OpMonomial {
    pub dorder: u32,
    pub xpow: i32,
}

impl OpMonomial {
    pub const fn new(xpow: i32, dorder: u32) -> Self {
        OpMonomial { dorder, xpow }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NormalOrderedOperator {
    terms: BTreeMap<OpMonomial, ParamPoly>,
}

/// `k (k−1) ⋯ (k−n+1)` for integer `k`, possibly negative.
pub fn falling_factorial(k: i64, n: u32) -> BigInt {
    (0..i64::from(n)).fold(BigInt::one(), |acc, i| acc * BigInt::from(k - i))
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

impl NormalOrderedOperator {
    pub fn zero() -> Self {
        NormalOrderedOperator::default()
    }

    pub fn identity() -> Self {
        NormalOrderedOperator::scalar(ParamPoly::one())
    }

    pub fn scalar(c: ParamPoly) -> Self {
        NormalOrderedOperator::term(c, 0, 0)
    }

    /// `c · x^xpow · D^dorder`.
    pub fn term(c: ParamPoly, xpow: i32, dorder: u32) -> Self {
        let mut op = NormalOrderedOperator::zero();
        op.add_term(OpMonomial::new(xpow, dorder), c);
        op
    }

    /// Multiplication by `x`.
    pub fn x() -> Self {
        NormalOrderedOperator::x_pow(1)
    }

    pub fn x_pow(p: i32) -> Self {
        NormalOrderedOperator::term(ParamPoly::one(), p, 0)
    }

    /// `d/dx`.
    pub fn d() -> Self {
        NormalOrderedOperator::term(ParamPoly::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, xpow: i32, dorder: u32) -> ParamPoly {
        self.terms
            .get(&OpMonomial::new(xpow, dorder))
            .cloned()
            .unwrap_or_default()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&OpMonomial, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_dorder(&self) -> u32 {
        self.terms.keys().map(|m| m.dorder).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, mono: OpMonomial, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    /// Replaces the coefficient of one monomial (removing it when zero).
    pub fn set_coeff(&mut self, mono: OpMonomial, c: ParamPoly) {
        if c.is_zero() {
            self.terms.remove(&mono);
        } else {
            self.terms.insert(mono, c);
        }
    }

    /// Left multiplication by a parameter polynomial.
    pub fn scale(&self, c: &ParamPoly) -> Self {
        let mut out = NormalOrderedOperator::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, c * v);
        }
        out
    }

    /// Normal-ordered product `self ∘ rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out = NormalOrderedOperator::zero();
        for (lm, lc) in &self.terms {
            for (rm, rc) in &rhs.terms {
                let coeff = lc * rc;
                // x^a D^b ∘ x^c D^d = Σ_i C(b,i) (c)_i↓ x^(a+c−i) D^(b−i+d)
                for i in 0..=lm.dorder {
                    let factor = binomial(lm.dorder, i) * falling_factorial(i64::from(rm.xpow), i);
                    if factor.is_zero() {
                        continue;
                    }
                    let mono = OpMonomial::new(lm.xpow + rm.xpow - i as i32, lm.dorder - i + rm.dorder);
                    out.add_term(mono, coeff.scale(&Rational::from_integer(factor)));
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.compose(rhs) - &rhs.compose(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(NormalOrderedOperator::identity(), |acc, _| acc.compose(self))
    }

    /// Image of `x^k`: `x^a D^b x^k = k(k−1)⋯(k−b+1) x^(k+a−b)`. Returned as
    /// a map from the resulting power to its coefficient.
    pub fn monomial_action(&self, k: i64) -> BTreeMap<i64, ParamPoly> {
        let mut out: BTreeMap<i64, ParamPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let ff = falling_factorial(k, m.dorder);
            if ff.is_zero() {
                continue;
            }
            let power = k + i64::from(m.xpow) - i64::from(m.dorder);
            let slot = out.entry(power).or_default();
            *slot += c.scale(&Rational::from_integer(ff));
            if slot.is_zero() {
                out.remove(&power);
            }
        }
        out
    }

    /// Equality judged only through the action on `x^k`, `k ∈ ks`.
    pub fn action_equal(&self, other: &Self, ks: impl IntoIterator<Item = i64>) -> bool {
        ks.into_iter().all(|k| self.monomial_action(k) == other.monomial_action(k))
    }

    /// Replaces every `K^p` by `replacement^p`, multiplied from the left
    /// (the scalar coefficients are treated as standing left of `x^a D^b`).
    pub fn substitute_k_with(&self, replacement: &Self) -> Self {
        let mut out = NormalOrderedOperator::zero();
        for (m, c) in &self.terms {
            let base = NormalOrderedOperator::term(ParamPoly::one(), m.xpow, m.dorder);
            for (&(jp, kp), rc) in c.terms() {
                let scalar = ParamPoly::monomial(rc.clone(), jp, 0);
                let piece = replacement.pow(kp).compose(&base).scale(&scalar);
                out = &out + &piece;
            }
        }
        out
    }

    /// Numeric operator at fixed `(J, K)`.
    pub fn substitute(&self, j: f64, k: f64) -> NumericOperator {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| NumericTerm { xpow: m.xpow, dorder: m.dorder, coeff: c.eval(j, k) })
            .filter(|t| t.coeff != 0.0)
            .collect();
        NumericOperator { terms }
    }
}

impl Add<&NormalOrderedOperator> for &NormalOrderedOperator {
    type Output = NormalOrderedOperator;
    fn add(self, rhs: &NormalOrderedOperator) -> NormalOrderedOperator {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&NormalOrderedOperator> for &NormalOrderedOperator {
    type Output = NormalOrderedOperator;
    fn sub(self, rhs: &NormalOrderedOperator) -> NormalOrderedOperator {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul<&NormalOrderedOperator> for &NormalOrderedOperator {
    type Output = NormalOrderedOperator;
    fn mul(self, rhs: &NormalOrderedOperator) -> NormalOrderedOperator {
        self.compose(rhs)
    }
}

impl Neg for &NormalOrderedOperator {
    type Output = NormalOrderedOperator;
    fn neg(self) -> NormalOrderedOperator {
        self.scale(&ParamPoly::int(-1))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<NormalOrderedOperator> for NormalOrderedOperator {
            type Output = NormalOrderedOperator;
            fn $method(self, rhs: NormalOrderedOperator) -> NormalOrderedOperator { (&self).$method(&rhs) }
        }
        impl $tr<&NormalOrderedOperator> for NormalOrderedOperator {
            type Output = NormalOrderedOperator;
            fn $method(self, rhs: &NormalOrderedOperator) -> NormalOrderedOperator { (&self).$method(rhs) }
        }
        impl $tr<NormalOrderedOperator> for &NormalOrderedOperator {
            type Output = NormalOrderedOperator;
            fn $method(self, rhs: NormalOrderedOperator) -> NormalOrderedOperator { self.$method(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for NormalOrderedOperator {
    type Output = NormalOrderedOperator;
    fn neg(self) -> NormalOrderedOperator {
        -&self
    }
}

impl From<ParamPoly> for NormalOrderedOperator {
    fn from(c: ParamPoly) -> Self {
        NormalOrderedOperator::scalar(c)
    }
}

fn fmt_op_monomial(m: &OpMonomial) -> String {
    let x = match m.xpow {
        0 => String::new(),
        1 => "x".to_string(),
        p => format!("x^{p}"),
    };
    let d = match m.dorder {
        0 => String::new(),
        1 => "D".to_string(),
        q => format!("D^{q}"),
    };
    match (x.is_empty(), d.is_empty()) {
        (true, true) => String::new(),
        (false, true) => x,
        (true, false) => d,
        (false, false) => format!("{x} {d}"),
    }
}

/// Renders e.g. `(-1) x^2 D^2 + (-2K) x + x^2`: highest derivative order
/// first, ascending powers of `x` within one order, coefficients in
/// parentheses unless they are exactly 1. The zero operator renders as `0`.
impl fmt::Display for NormalOrderedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|(m, _)| (std::cmp::Reverse(m.dorder), m.xpow));
        let parts: Vec<String> = ordered
            .into_iter()
            .map(|(m, c)| {
                let mono = fmt_op_monomial(m);
                let unit = c.as_constant().is_some_and(|v| v.is_one());
                match (mono.is_empty(), unit) {
                    (true, _) => format!("({c})"),
                    (false, true) => mono,
                    (false, false) => format!("({c}) {mono}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A term `coeff · x^xpow · D^dorder` with a numeric coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericTerm {
    pub xpow: i32,
    pub dorder: u32,
    pub coeff: f64,
}

/// A normal-ordered operator with `J`, `K` replaced by numbers.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct NumericOperator {
    pub terms: Vec<NumericTerm>,
}

impl NumericOperator {
    pub fn identity() -> Self {
        NumericOperator { terms: vec![NumericTerm { xpow: 0, dorder: 0, coeff: 1.0 }] }
    }

    pub fn max_dorder(&self) -> u32 {
        self.terms.iter().map(|t| t.dorder).max().unwrap_or(0)
    }

    pub fn coeff(&self, xpow: i32, dorder: u32) -> f64 {
        self.terms
            .iter()
            .filter(|t| t.xpow == xpow && t.dorder == dorder)
            .map(|t| t.coeff)
            .sum()
    }

    /// `(op f)(x)` given `f^(q)(x)` through `deriv(q, x)`.
    pub fn apply_at(&self, x: f64, deriv: impl Fn(u32, f64) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff * x.powi(t.xpow) * deriv(t.dorder, x))
            .sum()
    }

    /// True when the operator is `c · 1` for some `c`.
    pub fn as_scalar(&self) -> Option<f64> {
        match self.terms.as_slice() {
            [] => Some(0.0),
            [t] if t.xpow == 0 && t.dorder == 0 => Some(t.coeff),
            _ => None,
        }
    }
}
