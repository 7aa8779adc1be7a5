mod common;

use micz_core::operator_algebra::{rational, NormalOrderedOperator as Op, OpMonomial, ParamPoly};
use micz_core::quantum_numbers::{energy, make_sector, HalfInt, MonopoleParams};
use micz_core::Error;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn coeff() -> impl Strategy<Value = ParamPoly> {
    (-3i64..=3, -2i64..=2, -2i64..=2).prop_map(|(c, cj, ck)| {
        &(&ParamPoly::int(c) + &ParamPoly::j().scale(&rational(cj, 1)))
            + &ParamPoly::k().scale(&rational(ck, 2))
    })
}

fn op() -> impl Strategy<Value = Op> {
    prop::collection::vec((-2i32..=3, 0u32..=3, coeff()), 1..4).prop_map(|terms| {
        let mut o = Op::zero();
        for (p, q, c) in terms {
            o.add_term(OpMonomial::new(p, q), c);
        }
        o
    })
}

fn half_int(lo: i64, hi: i64) -> impl Strategy<Value = HalfInt> {
    (lo..=hi).prop_map(HalfInt::from_twice)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(a in op(), b in op(), c in op()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn composition_distributes(a in op(), b in op(), c in op()) {
        prop_assert_eq!(a.compose(&(&b + &c)), &a.compose(&b) + &a.compose(&c));
        prop_assert_eq!((&a + &b).compose(&c), &a.compose(&c) + &b.compose(&c));
    }

    #[test]
    fn identity_and_zero(a in op()) {
        prop_assert_eq!(a.compose(&Op::identity()), a.clone());
        prop_assert_eq!(Op::identity().compose(&a), a.clone());
        prop_assert!(a.compose(&Op::zero()).is_zero());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn jacobi_identity(a in op(), b in op(), c in op()) {
        let total = &(&a.commutator(&b.commutator(&c)) + &b.commutator(&c.commutator(&a)))
            + &c.commutator(&a.commutator(&b));
        prop_assert!(total.is_zero());
    }

    #[test]
    fn action_oracle_agrees_with_equality(a in op(), b in op()) {
        prop_assert_eq!(a.action_equal(&b, common::ORACLE_KS), a == b);
        let same = &(&a + &b) - &b;
        prop_assert!(a.action_equal(&same, common::ORACLE_KS));
    }

    #[test]
    fn action_is_a_homomorphism(a in op(), b in op(), k in -4i64..=8) {
        // (a∘b) x^k = a (b x^k)
        let mut via = std::collections::BTreeMap::<i64, ParamPoly>::new();
        for (p, c) in b.monomial_action(k) {
            for (q, d) in a.monomial_action(p) {
                let e = via.entry(q).or_insert_with(ParamPoly::zero);
                *e = &*e + &(&c * &d);
            }
        }
        via.retain(|_, v| !v.is_zero());
        prop_assert_eq!(a.compose(&b).monomial_action(k), via);
    }

    #[test]
    fn enumeration_matches_validation(
        s in half_int(-4, 4),
        m in half_int(-8, 8),
        j in half_int(0, 14),
        c1 in 0.0f64..3.0,
        c2 in 0.0f64..3.0,
    ) {
        let p = MonopoleParams::new(s, c1, c2).unwrap();
        let listed = p.valid_j(m, 20);
        match (&listed, make_sector(&p, m, j)) {
            (Err(_), r) => prop_assert!(matches!(r, Err(Error::InvalidQuantumNumbers(_)))),
            (Ok(js), Ok(_)) => prop_assert!(js.contains(&j)),
            (Ok(js), Err(_)) => prop_assert!(!js.contains(&j)),
        }
        if let Ok(js) = listed {
            for j in js {
                prop_assert!(j.same_parity(s));
                prop_assert!(make_sector(&p, m, j).is_ok());
            }
        }
    }

    #[test]
    fn energies_increase_and_invert(
        s in half_int(0, 4),
        c1 in 0.0f64..5.0,
        c2 in 0.0f64..5.0,
        extra in 0i64..4,
    ) {
        let p = MonopoleParams::new(s, c1, c2).unwrap();
        let m = s;
        let j = p.mplus(m) + HalfInt::from_int(extra);
        let sector = make_sector(&p, m, j).unwrap();
        let levels = sector.levels(8);
        prop_assert!(levels.windows(2).all(|w| w[0].energy < w[1].energy && w[1].energy < 0.0));
        for l in &levels {
            let k = (-1.0 / (2.0 * l.energy)).sqrt();
            prop_assert!((k - l.k).abs() <= 1e-12 * l.k);
            prop_assert_eq!(energy(&sector, l.n).unwrap(), *l);
        }
    }
}

#[test]
fn oracle_agrees_on_seeded_pairs() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut equal = 0;
    for i in 0..400 {
        let a = common::random_op(&mut rng, 4);
        let b = if i % 2 == 0 { common::rewrite(&a, &mut rng) } else { common::random_op(&mut rng, 4) };
        let canonical = a == b;
        assert_eq!(a.action_equal(&b, common::ORACLE_KS), canonical, "{a} vs {b}");
        equal += usize::from(canonical);
    }
    assert!(equal >= 200);
}
