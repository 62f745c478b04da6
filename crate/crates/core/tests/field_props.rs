use std::cmp::Ordering;

use proptest::prelude::*;
use pyrito_core::FieldScalar;

fn scalar() -> impl Strategy<Value = FieldScalar> {
    let frac = || (-40i64..=40, 1i64..=9);
    (frac(), frac(), frac(), frac()).prop_map(|(a, b, c, d)| FieldScalar::from_fracs(a, b, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, FieldScalar::zero());
    }

    #[test]
    fn inverse(a in scalar()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.inv().unwrap(), FieldScalar::one());
    }

    #[test]
    fn sign_matches_float(a in scalar(), b in scalar()) {
        let diff = a.to_f64() - b.to_f64();
        prop_assume!(diff.abs() > 1e-9);
        let expected = if diff > 0.0 { Ordering::Greater } else { Ordering::Less };
        prop_assert_eq!(a.real_cmp(&b), expected);
    }

    #[test]
    fn sign_is_multiplicative(a in scalar(), b in scalar()) {
        prop_assert_eq!((&a * &b).sign(), a.sign() * b.sign());
    }

    #[test]
    fn text_round_trip(a in scalar()) {
        let back: FieldScalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn galois_conjugations_are_homomorphisms(a in scalar(), b in scalar()) {
        prop_assert_eq!((&a * &b).conj5(), &a.conj5() * &b.conj5());
        prop_assert_eq!((&a + &b).conj2(), &a.conj2() + &b.conj2());
    }
}

#[test]
fn named_constants() {
    let tau = FieldScalar::tau();
    let sigma = FieldScalar::sigma();
    assert_eq!(&tau + &sigma, FieldScalar::one());
    assert_eq!(&tau * &sigma, FieldScalar::from_int(-1));
    assert_eq!(&FieldScalar::sqrt2() * &FieldScalar::sqrt5(), FieldScalar::sqrt10());
    assert_eq!("r10".parse::<FieldScalar>().unwrap(), FieldScalar::sqrt10());
    assert_eq!(tau.to_decimal(12), "1.61803398875");
}
