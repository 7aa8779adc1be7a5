//! Closed-form eigenfunctions.
//!
//! Radial states are kept in the scaled variable `x = r/K_n`, where
//! `χ_{n,j}(x) = (2x)^(J+1) e^(−x) F(j+1−n, 2J+2; 2x)`. The stored form does
//! not depend on `K_n`, so every level of one `j` tower lives on the same
//! `x` axis and the ladder operators act within it.

use num::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quantum_numbers::{energy, HalfInt, LevelLabels, SectorLabels};
use crate::special_functions::{jacobi_deriv_n, kummer_terms, JacobiParams};

/// Default evaluation window `(0, 10 + 4K]`.
pub fn default_window(k: f64) -> f64 {
    10.0 + 4.0 * k
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadialState {
    pub sector: SectorLabels,
    pub level: LevelLabels,
    /// Power of `x` multiplying the polynomial, `J + 1`.
    pub exponent: f64,
    /// Decay rate in the scaled variable (always 1).
    pub decay: f64,
    /// Coefficients of the polynomial factor in powers of `x`, lowest first.
    pub poly: Vec<f64>,
    /// `2^(J+1)`.
    pub prefactor: f64,
}

impl RadialState {
    pub fn new(sector: &SectorLabels, n: HalfInt) -> Result<Self> {
        let level = energy(sector, n)?;
        let degree = level.nprime(sector);
        let big_j = sector.big_j;
        let b = 2.0 * big_j + 2.0;
        // F(−k, b; 2x) = Σ c_i 2^i x^i
        let poly = kummer_terms(degree, b)
            .map(|(i, c)| c * 2f64.powi(i as i32))
            .collect();
        Ok(RadialState {
            sector: *sector,
            level,
            exponent: big_j + 1.0,
            decay: 1.0,
            poly,
            prefactor: 2f64.powf(big_j + 1.0),
        })
    }

    pub fn k(&self) -> f64 {
        self.level.k
    }

    pub fn poly_degree(&self) -> usize {
        self.poly.len() - 1
    }

    /// The polynomial factor `F(j+1−n, 2J+2; 2x)`.
    pub fn poly_value(&self, x: f64) -> f64 {
        self.poly.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    fn check_domain(x: f64) -> Result<()> {
        if x > 0.0 && x.is_finite() {
            Ok(())
        } else {
            Err(Error::DomainError(format!("radial argument must be positive, got {x}")))
        }
    }

    pub fn chi(&self, x: f64) -> Result<f64> {
        self.derivative(0, x)
    }

    pub fn chi_d1(&self, x: f64) -> Result<f64> {
        self.derivative(1, x)
    }

    pub fn chi_d2(&self, x: f64) -> Result<f64> {
        self.derivative(2, x)
    }

    /// `d^order χ / dx^order` in closed form.
    ///
    /// With `q(x) = Σ p_l x^(l+J+1)`, `χ = 2^(J+1) e^(−x) q` and
    /// `χ^(k) = 2^(J+1) e^(−x) Σ_i C(k,i) (−1)^(k−i) q^(i)`.
    pub fn derivative(&self, order: u32, x: f64) -> Result<f64> {
        Self::check_domain(x)?;
        Ok(self.derivative_unchecked(order, x))
    }

    pub(crate) fn derivative_unchecked(&self, order: u32, x: f64) -> f64 {
        let mut total = 0.0;
        let mut binom = 1.0;
        for i in 0..=order {
            let sign = if (order - i).is_multiple_of(2) { 1.0 } else { -1.0 };
            total += sign * binom * self.q_derivative(i, x);
            binom = binom * f64::from(order - i) / f64::from(i + 1);
        }
        self.prefactor * (-x).exp() * total
    }

    fn q_derivative(&self, order: u32, x: f64) -> f64 {
        self.poly
            .iter()
            .enumerate()
            .map(|(l, &c)| {
                let p = l as f64 + self.exponent;
                let ff: f64 = (0..order).map(|t| p - f64::from(t)).product();
                c * ff * x.powf(p - f64::from(order))
            })
            .sum()
    }

    /// Solution of the unscaled radial equation,
    /// `R(r) = (2εr)^J e^(−εr) F(j+1−n, 2J+2; 2εr)`.
    ///
    /// Satisfies `r R(r) = (K/2) χ(r/K)`.
    pub fn radial_r(&self, r: f64) -> Result<f64> {
        Self::check_domain(r)?;
        let x = r * self.level.epsilon;
        Ok((2.0 * x).powf(self.sector.big_j) * (-x).exp() * self.poly_value(x))
    }
}

/// Angular eigenfunction
/// `Z(θ,φ) = cos(θ/2)^m₁ sin(θ/2)^m₂ P^(m₂,m₁)_{j−m₊}(cos θ) e^{i(m−s)φ}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AngularState {
    pub sector: SectorLabels,
    /// `m − s`.
    pub phase_rate: f64,
    pub jacobi: JacobiParams,
}

impl AngularState {
    pub fn new(sector: &SectorLabels) -> Result<Self> {
        let jacobi = JacobiParams::new(sector.angular_degree(), sector.m2, sector.m1)?;
        Ok(AngularState {
            sector: *sector,
            phase_rate: (sector.m - sector.params.s).to_f64(),
            jacobi,
        })
    }

    fn check_theta(theta: f64) -> Result<()> {
        if theta > 0.0 && theta < std::f64::consts::PI {
            Ok(())
        } else {
            Err(Error::DomainError(format!(
                "polar angle must lie strictly inside (0, π), got {theta}"
            )))
        }
    }

    /// θ-dependent factor and its first two θ-derivatives.
    fn theta_part(&self, theta: f64) -> Result<[f64; 3]> {
        Self::check_theta(theta)?;
        let (m1, m2) = (self.sector.m1, self.sector.m2);
        let (sh, ch) = (0.5 * theta).sin_cos();
        let w = ch.powf(m1) * sh.powf(m2);
        // (ln w)' and its derivative
        let g = -0.5 * m1 * sh / ch + 0.5 * m2 * ch / sh;
        let dg = -0.25 * m1 / (ch * ch) - 0.25 * m2 / (sh * sh);
        let dw = w * g;
        let d2w = w * (g * g + dg);

        let (st, ct) = theta.sin_cos();
        let p = jacobi_deriv_n(&self.jacobi, ct, 0)?;
        let dp = jacobi_deriv_n(&self.jacobi, ct, 1)?;
        let d2p = jacobi_deriv_n(&self.jacobi, ct, 2)?;
        let pt = -st * dp;
        let ptt = st * st * d2p - ct * dp;

        Ok([w * p, dw * p + w * pt, d2w * p + 2.0 * dw * pt + w * ptt])
    }

    pub fn angular_z(&self, theta: f64, phi: f64) -> Result<Complex<f64>> {
        let [t, _, _] = self.theta_part(theta)?;
        Ok(Complex::from_polar(1.0, self.phase_rate * phi) * t)
    }

    /// Max over the mesh of `|LHS(Z) + 𝒜 Z| / max|Z|` for the separated
    /// angular equation, with `sep_const` standing in for `𝒜`.
    pub fn residual_with(&self, sep_const: f64, thetas: &[f64], phis: &[f64]) -> Result<f64> {
        let s = self.sector.params.s.to_f64();
        let (c1, c2) = (self.sector.params.c1, self.sector.params.c2);
        let mu = self.phase_rate;
        // ∂φ² → −(m−s)², (∂φ + 2is)² → −(m+s)² on e^{i(m−s)φ}
        let phi_1 = -mu * mu - 4.0 * c1;
        let phi_2 = -(mu + 2.0 * s).powi(2) - 4.0 * c2;

        let mut max_res: f64 = 0.0;
        let mut max_z: f64 = 0.0;
        for &theta in thetas {
            let [t, dt, d2t] = self.theta_part(theta)?;
            let (sh, ch) = (0.5 * theta).sin_cos();
            let cot = theta.cos() / theta.sin();
            let lhs = d2t + cot * dt
                + phi_1 / (4.0 * ch * ch) * t
                + phi_2 / (4.0 * sh * sh) * t;
            let res = lhs + sep_const * t;
            for &phi in phis {
                let phase = Complex::from_polar(1.0, mu * phi);
                max_res = max_res.max((phase * res).norm());
                max_z = max_z.max((phase * t).norm());
            }
        }
        if max_z == 0.0 {
            return Ok(max_res);
        }
        Ok(max_res / max_z)
    }

    pub fn residual(&self, thetas: &[f64], phis: &[f64]) -> Result<f64> {
        self.residual_with(self.sector.sep_const, thetas, phis)
    }
}

/// Interior `(θ, φ)` mesh: `θ_i = iπ/(nθ+1)`, `φ_k = 2πk/nφ`.
pub fn angular_mesh(n_theta: usize, n_phi: usize) -> (Vec<f64>, Vec<f64>) {
    use std::f64::consts::PI;
    let thetas = (1..=n_theta).map(|i| PI * i as f64 / (n_theta + 1) as f64).collect();
    let phis = (0..n_phi).map(|k| 2.0 * PI * k as f64 / n_phi as f64).collect();
    (thetas, phis)
}

/// Angular residual over an interior mesh.
pub fn angular_residual(state: &AngularState, mesh: &(Vec<f64>, Vec<f64>)) -> Result<f64> {
    state.residual(&mesh.0, &mesh.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum_numbers::{make_sector, MonopoleParams};
    use crate::special_functions::{kummer_terminating, KummerParams};

    fn hydrogen(j: i64) -> SectorLabels {
        make_sector(&MonopoleParams::micz(HalfInt::ZERO), HalfInt::ZERO, HalfInt::from_int(j)).unwrap()
    }

    fn shifted() -> SectorLabels {
        let p = MonopoleParams::new(HalfInt::HALF, 1.0, 0.0).unwrap();
        make_sector(&p, HalfInt::HALF, HalfInt::HALF).unwrap()
    }

    #[test]
    fn tower_bottom_is_pure_power_times_exponential() {
        let sec = shifted();
        let st = RadialState::new(&sec, sec.lowest_n()).unwrap();
        assert_eq!(st.poly, vec![1.0]);
        for x in [0.1f64, 1.0, 3.7, 12.0] {
            let want = (2.0 * x).powf(2.5) * (-x).exp();
            assert!((st.chi(x).unwrap() - want).abs() <= 1e-14 * want);
        }
    }

    #[test]
    fn hydrogen_2s() {
        let st = RadialState::new(&hydrogen(0), HalfInt::from_int(2)).unwrap();
        for x in [0.2f64, 0.9, 1.0, 2.5] {
            let want = 2.0 * x * (-x).exp() * (1.0 - x);
            assert!((st.chi(x).unwrap() - want).abs() <= 1e-15, "x={x}");
        }
    }

    #[test]
    fn polynomial_matches_kummer() {
        let sec = shifted();
        for nprime in 0..6 {
            let st = RadialState::new(&sec, sec.n_for(nprime)).unwrap();
            assert_eq!(st.poly_degree(), nprime as usize);
            let kp = KummerParams { k: nprime, bparam: 2.0 * sec.big_j + 2.0 };
            for x in [0.05, 0.7, 3.0, 9.5] {
                let want = kummer_terminating(&kp, 2.0 * x).unwrap();
                assert!((st.poly_value(x) - want).abs() <= 1e-12 * want.abs().max(1.0));
            }
        }
    }

    #[test]
    fn vanishes_at_origin_and_infinity() {
        let st = RadialState::new(&hydrogen(0), HalfInt::from_int(3)).unwrap();
        assert!(st.chi(1e-12).unwrap().abs() < 1e-10);
        assert!(st.chi(200.0).unwrap().abs() < 1e-60);
        assert!(matches!(st.chi(0.0), Err(Error::DomainError(_))));
        assert!(matches!(st.chi(-1.0), Err(Error::DomainError(_))));
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let sec = shifted();
        let st = RadialState::new(&sec, sec.n_for(3)).unwrap();
        let h = 1e-4;
        for x in [0.5, 2.0, 6.0, 11.0] {
            for order in 1..=4u32 {
                let fd = (st.derivative(order - 1, x + h).unwrap()
                    - st.derivative(order - 1, x - h).unwrap())
                    / (2.0 * h);
                let an = st.derivative(order, x).unwrap();
                let scale = an.abs().max(st.derivative(order - 1, x).unwrap().abs()).max(1e-3);
                assert!((fd - an).abs() <= 1e-6 * scale, "x={x} order={order}: {fd} vs {an}");
            }
        }
    }

    #[test]
    fn node_count_equals_radial_degree() {
        let sec = shifted();
        for nprime in 0..6u32 {
            let st = RadialState::new(&sec, sec.n_for(nprime)).unwrap();
            let xs: Vec<f64> = (1..20000).map(|i| i as f64 * 0.002).collect();
            let signs: Vec<bool> = xs.iter().map(|&x| st.chi(x).unwrap() > 0.0).collect();
            let nodes = signs.windows(2).filter(|w| w[0] != w[1]).count();
            assert_eq!(nodes as u32, nprime);
        }
    }

    #[test]
    fn radial_r_scaling_relation() {
        let sec = shifted();
        let st = RadialState::new(&sec, sec.n_for(2)).unwrap();
        let k = st.k();
        // deterministic pseudo-random radii in (0, 40)
        let mut r = 0.37;
        for _ in 0..50 {
            r = (r * 7.31 + 0.913) % 40.0 + 1e-3;
            let lhs = st.radial_r(r).unwrap() * r;
            let rhs = 0.5 * k * st.chi(r / k).unwrap();
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1e-300), "r={r}");
        }
    }

    #[test]
    fn hydrogen_ground_state_radial_function() {
        let st = RadialState::new(&hydrogen(0), HalfInt::ONE).unwrap();
        for r in [0.1, 1.0, 4.0] {
            assert!((st.radial_r(r).unwrap() - (-r).exp()).abs() < 1e-15);
        }
    }

    #[test]
    fn radial_r_is_square_integrable() {
        let st = RadialState::new(&shifted(), shifted().n_for(1)).unwrap();
        let h = 1e-3;
        let integral = |rmax: f64| -> f64 {
            let n = (rmax / h) as usize;
            (1..n)
                .map(|i| {
                    let r = i as f64 * h;
                    let v = st.radial_r(r).unwrap();
                    v * v * r * r * h
                })
                .sum()
        };
        let (a, b) = (integral(150.0), integral(300.0));
        assert!(a.is_finite() && a > 0.0);
        assert!((b - a).abs() <= 1e-10 * a);
    }

    #[test]
    fn trivial_angular_states() {
        let st = AngularState::new(&hydrogen(0)).unwrap();
        for theta in [0.1, 1.0, 3.0] {
            let z = st.angular_z(theta, 0.7).unwrap();
            assert!((z - Complex::new(1.0, 0.0)).norm() < 1e-15);
        }
        let st = AngularState::new(&hydrogen(1)).unwrap();
        for theta in [0.3, 1.2, 2.9] {
            let z = st.angular_z(theta, 1.3).unwrap();
            assert!((z.re - theta.cos()).abs() < 1e-15);
            assert_eq!(z.im, 0.0);
        }
        assert!(st.angular_z(0.0, 0.0).is_err());
        assert!(st.angular_z(std::f64::consts::PI, 0.0).is_err());
    }

    #[test]
    fn modulus_is_phi_independent() {
        let st = AngularState::new(&shifted()).unwrap();
        let base = st.angular_z(0.8, 0.0).unwrap().norm();
        for phi in [0.5, 2.0, 5.5] {
            assert!((st.angular_z(0.8, phi).unwrap().norm() - base).abs() < 1e-15);
        }
    }

    #[test]
    fn angular_residuals() {
        let mesh = angular_mesh(200, 8);
        assert_eq!(angular_residual(&AngularState::new(&hydrogen(0)).unwrap(), &mesh).unwrap(), 0.0);
        let st = AngularState::new(&shifted()).unwrap();
        assert!(angular_residual(&st, &mesh).unwrap() <= 1e-9);
        let bad = st.residual_with(shifted().sep_const + 1.0, &mesh.0, &mesh.1).unwrap();
        assert!(bad >= 0.1, "perturbed residual {bad}");
    }
}
