//! The radial operator, its Schrödinger factors and the su(1,1) generators,
//! all with `J` and `K` left symbolic.
//!
//! Sign convention: `Sign::Plus` selects the upper sign in `T±ⁿ`, `T±`.

use serde::Serialize;

use super::operator::NormalOrderedOperator as Op;
use super::param_poly::ParamPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

fn xd() -> Op {
    Op::term(ParamPoly::one(), 1, 1)
}

/// `𝓛ₙ = −x²D² − 2K x + x²`.
pub fn build_ln() -> Op {
    let mut op = Op::term(ParamPoly::int(-1), 2, 2);
    op = &op + &Op::term(ParamPoly::k().scale(&super::param_poly::rational(-2, 1)), 1, 0);
    &op + &Op::x_pow(2)
}

/// `T±ⁿ = ∓xD + x − K`.
pub fn build_tpm_n(sign: Sign) -> Op {
    let lead = xd().scale(&ParamPoly::int(-sign.value()));
    &(&lead + &Op::x()) - &Op::scalar(ParamPoly::k())
}

/// `T₃ = ½(−xD² + x + J(J+1)/x)`.
pub fn build_t3() -> Op {
    let half = ParamPoly::frac(1, 2);
    let inner = &(&Op::term(ParamPoly::int(-1), 1, 2) + &Op::x())
        + &Op::term(ParamPoly::j_j1(), -1, 0);
    inner.scale(&half)
}

/// `T± = ∓xD + x − T₃`.
pub fn build_tpm(sign: Sign) -> Op {
    let lead = xd().scale(&ParamPoly::int(-sign.value()));
    &(&lead + &Op::x()) - &build_t3()
}

/// Casimir `−T₊T₋ + T₃² − T₃`.
pub fn casimir() -> Op {
    casimir_variant(Sign::Plus)
}

/// `−T±T∓ + T₃² ∓ T₃`; both signs give the same operator.
pub fn casimir_variant(sign: Sign) -> Op {
    let (first, second) = match sign {
        Sign::Plus => (build_tpm(Sign::Plus), build_tpm(Sign::Minus)),
        Sign::Minus => (build_tpm(Sign::Minus), build_tpm(Sign::Plus)),
    };
    let t3 = build_t3();
    let t3_sq = t3.compose(&t3);
    let linear = t3.scale(&ParamPoly::int(-sign.value()));
    &(&(-&first.compose(&second)) + &t3_sq) + &linear
}

/// An operator identity `lhs = rhs` to be checked in canonical form.
#[derive(Debug, Clone)]
pub struct Identity {
    pub name: &'static str,
    pub lhs: Op,
    pub rhs: Op,
}

impl Identity {
    /// `lhs − rhs`, which must be the zero operator.
    pub fn remainder(&self) -> Op {
        &self.lhs - &self.rhs
    }

    pub fn holds(&self) -> bool {
        self.remainder().is_zero()
    }
}

/// The six exact identities: the commutation relations, the two
/// factorizations of `𝓛ₙ` and the Casimir value.
pub fn identities() -> Vec<Identity> {
    let tp = build_tpm(Sign::Plus);
    let tm = build_tpm(Sign::Minus);
    let t3 = build_t3();
    let ln = build_ln();
    let one = Op::identity();
    let k = ParamPoly::k();
    vec![
        Identity {
            name: "[T+, T-] = -2 T3",
            lhs: tp.commutator(&tm),
            rhs: t3.scale(&ParamPoly::int(-2)),
        },
        Identity {
            name: "[T+, T3] = -T+",
            lhs: tp.commutator(&t3),
            rhs: -&tp,
        },
        Identity {
            name: "[T-, T3] = T-",
            lhs: tm.commutator(&t3),
            rhs: tm.clone(),
        },
        Identity {
            name: "(T-^n - 1) T+^n = L_n + K(K+1)",
            lhs: (&build_tpm_n(Sign::Minus) - &one).compose(&build_tpm_n(Sign::Plus)),
            rhs: &ln + &Op::scalar(&k * &(&k + &ParamPoly::one())),
        },
        Identity {
            name: "(T+^n + 1) T-^n = L_n + K(K-1)",
            lhs: (&build_tpm_n(Sign::Plus) + &one).compose(&build_tpm_n(Sign::Minus)),
            rhs: &ln + &Op::scalar(&k * &(&k - &ParamPoly::one())),
        },
        Identity {
            name: "T^2 = J(J+1)",
            lhs: casimir(),
            rhs: Op::scalar(ParamPoly::j_j1()),
        },
    ]
}

/// `T± = T±ⁿ` with `K` replaced by the operator `T₃`.
pub fn definitional_identity(sign: Sign) -> Identity {
    Identity {
        name: match sign {
            Sign::Plus => "T+ = T+^n with K -> T3",
            Sign::Minus => "T- = T-^n with K -> T3",
        },
        lhs: build_tpm(sign),
        rhs: build_tpm_n(sign).substitute_k_with(&build_t3()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator_algebra::param_poly::rational;
    use std::collections::BTreeMap;

    #[test]
    fn ln_shape_and_rendering() {
        let ln = build_ln();
        assert_eq!(ln.coeff(2, 2), ParamPoly::int(-1));
        assert_eq!(ln.coeff(1, 0), ParamPoly::k().scale(&rational(-2, 1)));
        assert_eq!(ln.coeff(2, 0), ParamPoly::one());
        assert_eq!(ln.len(), 3);
        assert_eq!(ln.to_string(), "(-1) x^2 D^2 + (-2K) x + x^2");
    }

    #[test]
    fn ln_on_monomials() {
        let ln = build_ln();
        let k = ParamPoly::k();
        // x² ↦ −2x² − 2K x³ + x⁴
        let expect: BTreeMap<i64, ParamPoly> = [
            (2, ParamPoly::int(-2)),
            (3, k.scale(&rational(-2, 1))),
            (4, ParamPoly::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(ln.monomial_action(2), expect);
        for kk in -4i64..=12 {
            let mut want: BTreeMap<i64, ParamPoly> = BTreeMap::new();
            let ff = -kk * (kk - 1);
            if ff != 0 {
                want.insert(kk, ParamPoly::int(ff));
            }
            want.insert(kk + 1, k.scale(&rational(-2, 1)));
            want.insert(kk + 2, ParamPoly::one());
            assert_eq!(ln.monomial_action(kk), want, "k={kk}");
        }
    }

    #[test]
    fn t3_inverse_power_coefficient() {
        let t3 = build_t3();
        assert_eq!(t3.coeff(-1, 0), ParamPoly::j_j1().scale(&rational(1, 2)));
        assert_eq!(t3.coeff(1, 2), ParamPoly::frac(-1, 2));
        assert_eq!(t3.coeff(1, 0), ParamPoly::frac(1, 2));
    }

    #[test]
    fn tpm_is_second_order() {
        for sign in [Sign::Plus, Sign::Minus] {
            let t = build_tpm(sign);
            assert_eq!(t.max_dorder(), 2);
            assert!(!t.coeff(-1, 0).is_zero());
            let expect = &(&Op::term(ParamPoly::int(-sign.value()), 1, 1) + &Op::x()) - &build_t3();
            assert_eq!(t, expect);
        }
    }

    #[test]
    fn all_identities_hold() {
        for id in identities() {
            assert!(id.holds(), "{} leaves {}", id.name, id.remainder());
        }
    }

    #[test]
    fn definitional_identities_hold() {
        for sign in [Sign::Plus, Sign::Minus] {
            let id = definitional_identity(sign);
            assert!(id.holds(), "{} leaves {}", id.name, id.remainder());
        }
    }

    #[test]
    fn casimir_variants_agree() {
        assert_eq!(casimir_variant(Sign::Plus), casimir_variant(Sign::Minus));
        let c = casimir();
        assert_eq!(c, Op::scalar(ParamPoly::j_j1()));
        assert_eq!(c.substitute(1.5, 7.0).as_scalar(), Some(3.75));
        assert_eq!(c.substitute(0.0, 1.0).as_scalar(), Some(0.0));
    }

    #[test]
    fn substituted_operators() {
        let t3 = build_t3().substitute(0.0, 123.0);
        assert_eq!(t3.coeff(-1, 0), 0.0);
        assert!(t3.terms.iter().all(|t| t.xpow != -1));
        assert_eq!(t3.coeff(1, 2), -0.5);
        assert_eq!(t3.coeff(1, 0), 0.5);
        assert_eq!(build_ln().substitute(0.3, 1.0).coeff(1, 0), -2.0);
    }

    #[test]
    fn corrupted_identity_is_detected() {
        let mut id = identities().remove(0);
        let (m, c) = id.lhs.terms().next().map(|(m, c)| (*m, c.clone())).unwrap();
        id.lhs.set_coeff(m, -c);
        assert!(!id.holds());
        assert_ne!(id.remainder().to_string(), "0");
    }
}
