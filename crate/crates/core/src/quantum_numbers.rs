//! Quantum numbers, coupling shifts and the analytic spectrum.
//!
//! The monopole charge `s` and the labels `m`, `j`, `n` are integers or
//! half-odd integers, all of the same kind as `s`. They are stored as
//! [`HalfInt`] so every parity test is exact integer arithmetic.
//!
//! Note on `δ₁, δ₂`: they are built from `|m ∓ s|` and therefore depend on
//! `m`. The energy of a level inherits that dependence; it is reported per
//! `(m, j)` sector and no `m`-degeneracy is assumed.
//!
//! The principal quantum number follows `n = j + n' + 1`, `n' = 0, 1, …`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Default number of `j` values enumerated above `m₊`.
pub const DEFAULT_J_CAP: u32 = 32;
/// Default number of levels enumerated per `j` tower.
pub const DEFAULT_N_CAP: u32 = 32;

/// An integer or half-odd integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt { twice: 2 * value }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    /// True when `self` and `other` are both integers or both half-odd.
    pub const fn same_parity(self, other: HalfInt) -> bool {
        (self.twice - other.twice) % 2 == 0
    }

    /// `Some(k)` when `self` is the non-negative integer `k`.
    pub fn as_nonneg_integer(self) -> Option<u32> {
        if self.twice >= 0 && self.is_integer() {
            u32::try_from(self.twice / 2).ok()
        } else {
            None
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl From<i64> for HalfInt {
    fn from(value: i64) -> Self {
        HalfInt::from_int(value)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Error returned when a string is not an exact integer or half-integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseHalfIntError(String);

impl fmt::Display for ParseHalfIntError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not an integer or half-integer: {:?}", self.0)
    }
}

impl std::error::Error for ParseHalfIntError {}

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    /// Accepts `"3"`, `"-3/2"`, `"1.5"`, `"-0.5"`, `"2.0"`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseHalfIntError(s.to_string());
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| err())?;
            let den: i64 = den.trim().parse().map_err(|_| err())?;
            return match den {
                1 => Ok(HalfInt::from_int(num)),
                2 => Ok(HalfInt::from_twice(num)),
                -1 => Ok(HalfInt::from_int(-num)),
                -2 => Ok(HalfInt::from_twice(-num)),
                _ => Err(err()),
            };
        }
        if let Ok(v) = t.parse::<i64>() {
            return Ok(HalfInt::from_int(v));
        }
        // Decimal form: the fractional digits must be 0 or 5 followed by zeros.
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (int_part, frac) = body.split_once('.').ok_or_else(err)?;
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let int_val: i64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().map_err(|_| err())?
        };
        let half = match frac.trim_end_matches('0') {
            "" => 0,
            "5" => 1,
            _ => return Err(err()),
        };
        let twice = 2 * int_val + half;
        Ok(HalfInt::from_twice(if neg { -twice } else { twice }))
    }
}

/// External couplings of the generalized MICZ-Kepler Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonopoleParams {
    pub s: HalfInt,
    pub c1: f64,
    pub c2: f64,
}

impl MonopoleParams {
    pub fn new(s: HalfInt, c1: f64, c2: f64) -> Result<Self> {
        for (name, c) in [("c1", c1), ("c2", c2)] {
            if !c.is_finite() || c < 0.0 {
                return Err(Error::InvalidParams(format!(
                    "{name} must be a finite non-negative number, got {c}"
                )));
            }
        }
        Ok(MonopoleParams { s, c1, c2 })
    }

    /// Plain MICZ-Kepler (`c₁ = c₂ = 0`).
    pub fn micz(s: HalfInt) -> Self {
        MonopoleParams { s, c1: 0.0, c2: 0.0 }
    }

    /// `m₊ = (|m+s| + |m−s|)/2`.
    pub fn mplus(&self, m: HalfInt) -> HalfInt {
        let sum = (m + self.s).abs().twice() + (m - self.s).abs().twice();
        // |a| + |b| is even whenever a and b share parity, which holds here.
        HalfInt::from_twice(sum / 2)
    }

    /// Valid `j` values for a given `m`: `m₊, m₊+1, …, m₊+cap`.
    pub fn valid_j(&self, m: HalfInt, cap: u32) -> Result<Vec<HalfInt>> {
        if !m.same_parity(self.s) {
            return Err(parity_error("m", m, self.s));
        }
        let start = self.mplus(m);
        Ok((0..=i64::from(cap)).map(|k| start + HalfInt::from_int(k)).collect())
    }
}

fn parity_error(name: &str, value: HalfInt, s: HalfInt) -> Error {
    Error::InvalidQuantumNumbers(format!(
        "{name} = {value} must be {} like s = {s}",
        if s.is_integer() { "an integer" } else { "a half-odd integer" }
    ))
}

/// `√(a² + 4c) − |a|`, written to avoid cancellation when `c ≪ a²`.
fn coupling_shift(a: f64, c: f64) -> f64 {
    if c == 0.0 {
        return 0.0;
    }
    let root = (a * a + 4.0 * c).sqrt();
    4.0 * c / (root + a.abs())
}

/// Derived labels of one `(m, j)` sector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorLabels {
    pub params: MonopoleParams,
    pub m: HalfInt,
    pub j: HalfInt,
    pub m1: f64,
    pub m2: f64,
    pub mplus: HalfInt,
    pub delta1: f64,
    pub delta2: f64,
    /// `J = j + (δ₁+δ₂)/2`.
    pub big_j: f64,
    /// Separation constant `𝒜 = J(J+1)`.
    pub sep_const: f64,
}

impl SectorLabels {
    /// `(δ₁+δ₂)/2`.
    pub fn half_delta_sum(&self) -> f64 {
        0.5 * (self.delta1 + self.delta2)
    }

    /// Degree of the angular Jacobi factor, `j − m₊`.
    pub fn angular_degree(&self) -> u32 {
        (self.j - self.mplus)
            .as_nonneg_integer()
            .expect("validated at construction")
    }

    /// The lowest principal quantum number of the tower, `n = j + 1`.
    pub fn lowest_n(&self) -> HalfInt {
        self.j + HalfInt::ONE
    }

    /// `n = j + 1 + n'`.
    pub fn n_for(&self, nprime: u32) -> HalfInt {
        self.lowest_n() + HalfInt::from_int(i64::from(nprime))
    }

    /// Levels `n = j+1, …, j+count`.
    pub fn levels(&self, count: u32) -> Vec<LevelLabels> {
        (0..count)
            .map(|k| energy(self, self.n_for(k)).expect("n = j + 1 + k is always valid"))
            .collect()
    }
}

/// Validates `(m, j)` against `s` and derives the sector labels.
pub fn make_sector(params: &MonopoleParams, m: HalfInt, j: HalfInt) -> Result<SectorLabels> {
    let s = params.s;
    if !m.same_parity(s) {
        return Err(parity_error("m", m, s));
    }
    if !j.same_parity(s) {
        return Err(parity_error("j", j, s));
    }
    let mplus = params.mplus(m);
    if j < mplus {
        return Err(Error::InvalidQuantumNumbers(format!(
            "j = {j} is below m₊ = {mplus}; need j ≥ m₊"
        )));
    }
    if m.abs() > j {
        return Err(Error::InvalidQuantumNumbers(format!(
            "|m| = {} exceeds j = {j}",
            m.abs()
        )));
    }
    if (j - mplus).as_nonneg_integer().is_none() {
        return Err(Error::InvalidQuantumNumbers(format!(
            "j − m₊ = {} is not a non-negative integer",
            j - mplus
        )));
    }

    let a1 = (m - s).to_f64();
    let a2 = (m + s).to_f64();
    let delta1 = coupling_shift(a1, params.c1);
    let delta2 = coupling_shift(a2, params.c2);
    let big_j = j.to_f64() + 0.5 * (delta1 + delta2);
    Ok(SectorLabels {
        params: *params,
        m,
        j,
        m1: a1.abs() + delta1,
        m2: a2.abs() + delta2,
        mplus,
        delta1,
        delta2,
        big_j,
        sep_const: big_j * (big_j + 1.0),
    })
}

/// A bound level of a sector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LevelLabels {
    pub n: HalfInt,
    /// `K_n = n + (δ₁+δ₂)/2`.
    pub k: f64,
    /// `ε = 1/K_n`.
    pub epsilon: f64,
    pub energy: f64,
}

impl LevelLabels {
    /// `n' = n − j − 1`.
    pub fn nprime(&self, sector: &SectorLabels) -> u32 {
        (self.n - sector.lowest_n())
            .as_nonneg_integer()
            .expect("validated at construction")
    }
}

/// `E_n = −1/(2 K_n²)` with `K_n = n + (δ₁+δ₂)/2`.
pub fn energy(sector: &SectorLabels, n: HalfInt) -> Result<LevelLabels> {
    let offset = n - sector.lowest_n();
    if offset.as_nonneg_integer().is_none() {
        return Err(Error::InvalidLevel(format!(
            "n = {n} is not of the form j + 1 + n' with n' = 0, 1, … (j = {})",
            sector.j
        )));
    }
    let k = n.to_f64() + sector.half_delta_sum();
    Ok(LevelLabels {
        n,
        k,
        epsilon: 1.0 / k,
        energy: -1.0 / (2.0 * k * k),
    })
}

/// Labels of the su(1,1) lowest-weight irrep containing a level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IrrepLabels {
    pub mu: f64,
    pub nu: f64,
    pub nprime: u32,
}

/// `μ = J`, `ν = μ + n' + 1`.
pub fn irrep_labels(sector: &SectorLabels, nprime: u32) -> IrrepLabels {
    let mu = sector.big_j;
    IrrepLabels {
        mu,
        nu: mu + f64::from(nprime) + 1.0,
        nprime,
    }
}
