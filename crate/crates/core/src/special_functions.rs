//! Jacobi polynomials with real parameters and the terminating Kummer
//! function `₁F₁(−k; b; z)`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Default upper bound on the Jacobi degree.
pub const DEFAULT_DEGREE_CAP: u32 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JacobiParams {
    pub degree: u32,
    pub a: f64,
    pub b: f64,
}

impl JacobiParams {
    pub fn new(degree: u32, a: f64, b: f64) -> Result<Self> {
        let p = JacobiParams { degree, a, b };
        p.check(DEFAULT_DEGREE_CAP)?;
        Ok(p)
    }

    fn check(&self, cap: u32) -> Result<()> {
        if !self.a.is_finite() || !self.b.is_finite() || self.a <= -1.0 || self.b <= -1.0 {
            return Err(Error::ParamOutOfRange(format!(
                "Jacobi parameters must satisfy a, b > -1 (got a = {}, b = {})",
                self.a, self.b
            )));
        }
        if self.degree > cap {
            return Err(Error::DegreeCapExceeded { degree: self.degree, cap });
        }
        Ok(())
    }
}

/// `P^(a,b)_k(z)` by forward three-term recurrence in the degree.
pub fn jacobi(p: &JacobiParams, z: f64) -> Result<f64> {
    jacobi_with_cap(p, z, DEFAULT_DEGREE_CAP)
}

pub fn jacobi_with_cap(p: &JacobiParams, z: f64, cap: u32) -> Result<f64> {
    p.check(cap)?;
    Ok(jacobi_unchecked(p.degree, p.a, p.b, z))
}

fn jacobi_unchecked(degree: u32, a: f64, b: f64, z: f64) -> f64 {
    if degree == 0 {
        return 1.0;
    }
    let ab = a + b;
    let mut prev = 1.0;
    let mut cur = 0.5 * (a - b) + 0.5 * (ab + 2.0) * z;
    for k in 2..=degree {
        let k = f64::from(k);
        let t = 2.0 * k + ab;
        let c0 = 2.0 * k * (k + ab) * (t - 2.0);
        let c1 = (t - 1.0) * (t * (t - 2.0) * z + a * a - b * b);
        let c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * t;
        let next = (c1 * cur - c2 * prev) / c0;
        prev = cur;
        cur = next;
    }
    cur
}

/// `d/dz P^(a,b)_k(z) = (k+a+b+1)/2 · P^(a+1,b+1)_{k−1}(z)`.
pub fn jacobi_deriv(p: &JacobiParams, z: f64) -> Result<f64> {
    p.check(DEFAULT_DEGREE_CAP)?;
    Ok(jacobi_deriv_unchecked(p.degree, p.a, p.b, z, 1))
}

/// Derivative of order `order` in `z`.
pub fn jacobi_deriv_n(p: &JacobiParams, z: f64, order: u32) -> Result<f64> {
    p.check(DEFAULT_DEGREE_CAP)?;
    Ok(jacobi_deriv_unchecked(p.degree, p.a, p.b, z, order))
}

fn jacobi_deriv_unchecked(degree: u32, a: f64, b: f64, z: f64, order: u32) -> f64 {
    if order > degree {
        return 0.0;
    }
    let k = f64::from(degree);
    let scale: f64 = (0..order)
        .map(|i| 0.5 * (k + a + b + 1.0 + f64::from(i)))
        .product();
    let shift = f64::from(order);
    scale * jacobi_unchecked(degree - order, a + shift, b + shift, z)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KummerParams {
    /// The first argument of `₁F₁` is `−k`.
    pub k: u32,
    pub bparam: f64,
}

/// `F(−k, b; z) = Σ_{i=0}^{k} (−k)_i / ((b)_i i!) zⁱ`, summed with
/// Neumaier compensation.
pub fn kummer_terminating(p: &KummerParams, z: f64) -> Result<f64> {
    if !p.bparam.is_finite() || p.bparam <= 0.0 {
        return Err(Error::ParamOutOfRange(format!(
            "Kummer parameter b must be positive (got {})",
            p.bparam
        )));
    }
    Ok(neumaier_sum(kummer_terms(p.k, p.bparam).map(|(i, c)| c * z.powi(i as i32))))
}

/// Coefficients `(i, (−k)_i / ((b)_i i!))` for `i = 0..=k`.
pub(crate) fn kummer_terms(k: u32, b: f64) -> impl Iterator<Item = (u32, f64)> {
    let mut coeff = 1.0;
    (0..=k).map(move |i| {
        let out = (i, coeff);
        let fi = f64::from(i);
        coeff *= (fi - f64::from(k)) / ((b + fi) * (fi + 1.0));
        out
    })
}

pub(crate) fn neumaier_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, BigRational, One, ToPrimitive, Zero};
    use proptest::prelude::*;

    fn rat(x: f64) -> BigRational {
        BigRational::from_float(x).unwrap()
    }

    /// Exact `(a+1)_k / k! · ₂F₁(−k, k+a+b+1; a+1; (1−z)/2)` for dyadic inputs.
    fn jacobi_series_exact(k: u32, a: f64, b: f64, z: f64) -> f64 {
        let (a, b, z) = (rat(a), rat(b), rat(z));
        let one = BigRational::one();
        let w = (&one - &z) / BigRational::from_integer(BigInt::from(2));
        let kk = BigRational::from_integer(BigInt::from(k));
        // (a+1)_k / k!
        let mut pre = BigRational::one();
        for i in 0..k {
            let i = BigRational::from_integer(BigInt::from(i));
            pre = pre * (&a + &one + &i) / (&i + &one);
        }
        let mut term = BigRational::one();
        let mut sum = BigRational::zero();
        for i in 0..=k {
            sum += &term;
            let ir = BigRational::from_integer(BigInt::from(i));
            term = term * (&ir - &kk) * (&kk + &a + &b + &one + &ir) / ((&a + &one + &ir) * (&ir + &one))
                * &w;
        }
        (pre * sum).to_f64().unwrap()
    }

    #[test]
    fn degree_zero_is_one() {
        for &(a, b, z) in &[(0.0, 0.0, 0.3), (2.5, -0.5, -0.9), (4.0, 1.0, 7.0)] {
            assert_eq!(jacobi(&JacobiParams::new(0, a, b).unwrap(), z).unwrap(), 1.0);
            assert_eq!(jacobi_deriv(&JacobiParams::new(0, a, b).unwrap(), z).unwrap(), 0.0);
        }
    }

    #[test]
    fn legendre_p2() {
        let v = jacobi(&JacobiParams::new(2, 0.0, 0.0).unwrap(), 0.5).unwrap();
        assert_eq!(jacobi_series_exact(2, 0.0, 0.0, 0.5), -0.125);
        assert!((v + 0.125).abs() < 1e-15);
    }

    #[test]
    fn degree_three_against_series() {
        let p = JacobiParams::new(3, 1.7, 0.3).unwrap();
        let v = jacobi(&p, 0.2).unwrap();
        let oracle = jacobi_series_exact(3, 1.7, 0.3, 0.2);
        assert!((v - oracle).abs() <= 1e-12 * oracle.abs(), "{v} vs {oracle}");
    }

    #[test]
    fn derivative_examples() {
        let p1 = JacobiParams::new(1, 0.0, 0.0).unwrap();
        let p2 = JacobiParams::new(2, 0.0, 0.0).unwrap();
        for z in [-0.7, 0.0, 0.4] {
            assert!((jacobi_deriv(&p1, z).unwrap() - 1.0).abs() < 1e-15);
        }
        assert!((jacobi_deriv(&p2, 0.3).unwrap() - 0.9).abs() < 1e-15);
        // second derivative of (3z²−1)/2 is 3
        assert!((jacobi_deriv_n(&p2, 0.3, 2).unwrap() - 3.0).abs() < 1e-15);
        assert_eq!(jacobi_deriv_n(&p2, 0.3, 3).unwrap(), 0.0);
    }

    #[test]
    fn derivative_matches_central_difference() {
        let p = JacobiParams::new(7, 2.3, 0.6).unwrap();
        let h = 1e-5;
        for z in [-0.8, -0.1, 0.45, 0.9] {
            let fd = (jacobi(&p, z + h).unwrap() - jacobi(&p, z - h).unwrap()) / (2.0 * h);
            let an = jacobi_deriv(&p, z).unwrap();
            assert!((fd - an).abs() <= 1e-6 * an.abs().max(1.0), "z={z}: {fd} vs {an}");
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(JacobiParams::new(2, -1.0, 0.0), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(JacobiParams::new(2, 0.0, -1.5), Err(Error::ParamOutOfRange(_))));
        assert!(matches!(
            JacobiParams::new(201, 0.0, 0.0),
            Err(Error::DegreeCapExceeded { degree: 201, cap: 200 })
        ));
        let p = JacobiParams { degree: 12, a: 0.0, b: 0.0 };
        assert!(jacobi_with_cap(&p, 0.1, 10).is_err());
        assert!(jacobi_with_cap(&p, 0.1, 12).is_ok());
    }

    #[test]
    fn kummer_examples() {
        let f = |k, b, z| kummer_terminating(&KummerParams { k, bparam: b }, z).unwrap();
        assert_eq!(f(0, 3.7, 11.0), 1.0);
        assert_eq!(f(1, 2.0, 2.0), 0.0);
        // 1 − 2/3 + 1/12 = 5/12
        let oracle = 5.0 / 12.0;
        assert!((f(2, 3.0, 1.0) - oracle).abs() < 1e-15);
        assert!(kummer_terminating(&KummerParams { k: 2, bparam: 0.0 }, 1.0).is_err());
    }

    #[test]
    fn kummer_against_exact_sum() {
        for k in 0..12u32 {
            for &(b, z) in &[(2.0, 0.5), (5.0, 3.25), (3.5, 10.0)] {
                let (br, zr) = (rat(b), rat(z));
                let mut term = BigRational::one();
                let mut sum = BigRational::zero();
                for i in 0..=k {
                    sum += &term;
                    let ir = BigRational::from_integer(BigInt::from(i));
                    let kr = BigRational::from_integer(BigInt::from(k));
                    term = term * (&ir - &kr) * &zr / ((&br + &ir) * (&ir + BigRational::one()));
                }
                let exact = sum.to_f64().unwrap();
                let v = kummer_terminating(&KummerParams { k, bparam: b }, z).unwrap();
                assert!((v - exact).abs() <= 1e-12 * exact.abs().max(1.0), "k={k} b={b} z={z}");
            }
        }
    }

    fn dyadic(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
        let steps = ((hi - lo) * 64.0) as i64;
        (0..=steps).prop_map(move |i| lo + i as f64 / 64.0)
    }

    proptest! {
        #[test]
        fn reflection_symmetry(k in 0u32..=20, a in dyadic(-0.875, 5.0), b in dyadic(-0.875, 5.0), z in dyadic(-1.0, 1.0)) {
            let lhs = jacobi(&JacobiParams::new(k, a, b).unwrap(), -z).unwrap();
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = sign * jacobi(&JacobiParams::new(k, b, a).unwrap(), z).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0), "{} vs {}", lhs, rhs);
        }

        #[test]
        fn recurrence_matches_series(k in 0u32..=20, a in dyadic(-0.875, 5.0), b in dyadic(-0.875, 5.0), z in dyadic(-1.0, 1.0)) {
            let v = jacobi(&JacobiParams::new(k, a, b).unwrap(), z).unwrap();
            let oracle = jacobi_series_exact(k, a, b, z);
            prop_assert!((v - oracle).abs() <= 1e-10 * oracle.abs().max(1.0), "{} vs {}", v, oracle);
        }
    }
}
