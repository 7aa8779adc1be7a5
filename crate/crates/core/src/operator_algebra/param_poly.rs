//! Polynomials in the two indeterminates `J` and `K` over exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Exponent pair `(jpow, kpow)` of a monomial `J^jpow K^kpow`.
pub type ParamMonomial = (u32, u32);

/// Exact polynomial in `J`, `K`. Zero coefficients are never stored, so
/// structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<ParamMonomial, Rational>,
}

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        ParamPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        ParamPoly::monomial(c, 0, 0)
    }

    pub fn int(c: i64) -> Self {
        ParamPoly::constant(rational(c, 1))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        ParamPoly::constant(rational(num, den))
    }

    /// The indeterminate `J`.
    pub fn j() -> Self {
        ParamPoly::monomial(Rational::one(), 1, 0)
    }

    /// The indeterminate `K`.
    pub fn k() -> Self {
        ParamPoly::monomial(Rational::one(), 0, 1)
    }

    /// `J(J+1)`.
    pub fn j_j1() -> Self {
        ParamPoly::j() * (ParamPoly::j() + ParamPoly::one())
    }

    pub fn monomial(c: Rational, jpow: u32, kpow: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((jpow, kpow), c);
        }
        ParamPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, jpow: u32, kpow: u32) -> Rational {
        self.terms.get(&(jpow, kpow)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(ParamPoly::one(), |acc, _| &acc * self)
    }

    fn add_term(&mut self, mono: ParamMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Numeric value at `(J, K)`.
    pub fn eval(&self, j: f64, k: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(jp, kp), c)| {
                c.to_f64().unwrap_or(f64::NAN) * j.powi(jp as i32) * k.powi(kp as i32)
            })
            .sum()
    }

    /// Exact evaluation at rational `(J, K)`.
    pub fn eval_exact(&self, j: &Rational, k: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (&(jp, kp), c)| {
            acc + c * num::pow(j.clone(), jp as usize) * num::pow(k.clone(), kp as usize)
        })
    }

    /// Graded-lexicographic leading monomial (highest total degree, then
    /// highest `J` power).
    fn leading(&self) -> Option<(ParamMonomial, &Rational)> {
        self.terms
            .iter()
            .max_by_key(|(&(jp, kp), _)| (jp + kp, jp))
            .map(|(m, c)| (*m, c))
    }

    /// Exact division by a non-zero constant.
    pub fn div_constant(&self, c: &Rational) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        Some(self.scale(&(Rational::one() / c)))
    }

    /// Exact square root, when `self = q²` for some `q` with rational
    /// coefficients. Returns the root with positive leading coefficient.
    pub fn sqrt_exact(&self) -> Option<Self> {
        let Some(((jp, kp), lc)) = self.leading() else {
            return Some(ParamPoly::zero());
        };
        if jp % 2 != 0 || kp % 2 != 0 || lc.is_negative() {
            return None;
        }
        let lead_root = rational_sqrt(lc)?;
        let mut root = ParamPoly::monomial(lead_root, jp / 2, kp / 2);
        let two_lead = root.scale(&rational(2, 1));
        let ((ljp, lkp), lcoef) = {
            let (m, c) = two_lead.leading().expect("non-zero");
            (m, c.clone())
        };
        // One new root term per step, each strictly below the previous one in
        // graded order, so the number of steps is bounded by the monomial count.
        let half_deg = ((jp + kp) / 2) as usize;
        let max_steps = (half_deg + 1) * (half_deg + 2) / 2 + 1;
        for _ in 0..max_steps {
            let rem = self - &(&root * &root);
            let Some(((rj, rk), rc)) = rem.leading() else {
                return Some(root);
            };
            if rj < ljp || rk < lkp {
                return None;
            }
            let (qj, qk) = (rj - ljp, rk - lkp);
            if (qj + qk, qj) >= (ljp + lkp, ljp) {
                return None;
            }
            root += ParamPoly::monomial(rc / &lcoef, qj, qk);
        }
        None
    }
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl From<i64> for ParamPoly {
    fn from(c: i64) -> Self {
        ParamPoly::int(c)
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        ParamPoly::constant(c)
    }
}

impl AddAssign<ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: ParamPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: &ParamPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Add<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (&(aj, ak), ac) in &self.terms {
            for (&(bj, bk), bc) in &rhs.terms {
                out.add_term((aj + bj, ak + bk), ac * bc);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: ParamPoly) -> ParamPoly { (&self).$method(&rhs) }
        }
        impl $tr<&ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: &ParamPoly) -> ParamPoly { (&self).$method(rhs) }
        }
        impl $tr<ParamPoly> for &ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: ParamPoly) -> ParamPoly { self.$method(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

fn fmt_monomial(jp: u32, kp: u32) -> String {
    let part = |sym: &str, p: u32| match p {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{p}"),
    };
    format!("{}{}", part("J", jp), part("K", kp))
}

/// Renders e.g. `J^2/2 + J/2`, `-2K`, `K^2 - K - 1`. Terms run from the
/// highest graded-lexicographic monomial down.
impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|(&(jp, kp), _)| std::cmp::Reverse((jp + kp, jp)));
        for (idx, (&(jp, kp), c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = fmt_monomial(jp, kp);
            let numer = mag.numer();
            let denom = mag.denom();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if numer.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{numer}{mono}")?;
            }
            if !mono.is_empty() && !denom.is_one() {
                write!(f, "/{denom}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = ParamPoly::j() - ParamPoly::j();
        assert!(p.is_zero());
        assert_eq!(p, ParamPoly::zero());
        assert_eq!(ParamPoly::monomial(rational(0, 1), 3, 1), ParamPoly::zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(ParamPoly::zero().to_string(), "0");
        assert_eq!(ParamPoly::int(-1).to_string(), "-1");
        assert_eq!((ParamPoly::k() * ParamPoly::int(-2)).to_string(), "-2K");
        let half_jj1 = ParamPoly::j_j1().scale(&rational(1, 2));
        assert_eq!(half_jj1.to_string(), "J^2/2 + J/2");
        let g = ParamPoly::k() * (ParamPoly::k() + ParamPoly::one()) - ParamPoly::j_j1();
        assert_eq!(g.to_string(), "-J^2 + K^2 - J + K");
        assert_eq!(ParamPoly::frac(3, 4).to_string(), "3/4");
    }

    #[test]
    fn evaluation() {
        let p = ParamPoly::j_j1() - ParamPoly::k().scale(&rational(3, 2));
        assert_eq!(p.eval(1.5, 2.0), 3.75 - 3.0);
        assert_eq!(p.eval_exact(&rational(3, 2), &rational(2, 1)), rational(3, 4));
    }

    #[test]
    fn square_roots() {
        let q = ParamPoly::k() + ParamPoly::frac(1, 2) - ParamPoly::j().scale(&rational(3, 1));
        let sq = &q * &q;
        let r = sq.sqrt_exact().unwrap();
        assert!(r == q || r == -&q);
        assert_eq!(ParamPoly::int(4).sqrt_exact(), Some(ParamPoly::int(2)));
        assert_eq!(ParamPoly::frac(9, 4).sqrt_exact(), Some(ParamPoly::frac(3, 2)));
        assert_eq!(ParamPoly::int(2).sqrt_exact(), None);
        assert_eq!(ParamPoly::int(-4).sqrt_exact(), None);
        assert_eq!((ParamPoly::k() + ParamPoly::one()).sqrt_exact(), None);
        assert_eq!(ParamPoly::zero().sqrt_exact(), Some(ParamPoly::zero()));
        let not_square = &sq + &ParamPoly::j();
        assert_eq!(not_square.sqrt_exact(), None);
    }
}
