mod common;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use proptest::prelude::*;

use common::{abs_at, places_of, rf, small_primes_of};
use subgen_core::qarith::{
    is_prime_u64, norm, ord_p, parse_rat, prime_factors, product_formula_check, relevant_places, Prime,
};
use subgen_core::{Place, PlaceSet, Rat};

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (-100_000i64..=100_000, 1i64..=100_000)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| rf(n, d))
}

fn any_rat() -> impl Strategy<Value = Rat> {
    (-100_000i64..=100_000, 1i64..=100_000).prop_map(|(n, d)| rf(n, d))
}

fn place() -> impl Strategy<Value = Place> {
    prop_oneof![
        Just(Place::Infinity),
        prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 97, 65537]).prop_map(|p| Place::prime(p).unwrap()),
    ]
}

fn oracle_key(v: Place) -> u64 {
    match v {
        Place::Infinity => 0,
        Place::Prime(p) => p.get(),
    }
}

proptest! {
    #[test]
    fn multiplicative(x in any_rat(), y in any_rat(), v in place()) {
        prop_assert_eq!(norm(&(&x * &y), v), norm(&x, v) * norm(&y, v));
    }

    #[test]
    fn ultrametric(x in any_rat(), y in any_rat(), p in prop::sample::select(vec![2u64, 3, 5, 7, 101])) {
        let v = Place::prime(p).unwrap();
        let sum = norm(&(&x + &y), v);
        prop_assert!(sum <= norm(&x, v).max(norm(&y, v)));
    }

    #[test]
    fn norms_match_trial_division(x in nonzero_rat(), v in place()) {
        prop_assert_eq!(norm(&x, v), abs_at(&x, oracle_key(v)));
    }

    #[test]
    fn product_formula(x in nonzero_rat()) {
        prop_assert!(product_formula_check(&x).unwrap().is_one());
        let oracle: Rat = places_of([&x]).iter().map(|&p| abs_at(&x, p)).product();
        prop_assert!(oracle.is_one());
    }

    #[test]
    fn relevant_places_are_support(x in nonzero_rat()) {
        let places = relevant_places(&x).unwrap();
        let expected: Vec<u64> = places_of([&x]);
        let got: Vec<u64> = places.iter().map(|&v| oracle_key(v)).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn valuation_of_product(x in nonzero_rat(), y in nonzero_rat(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let p = Prime::new(p).unwrap();
        prop_assert_eq!(ord_p(&(&x * &y), p), ord_p(&x, p) + ord_p(&y, p));
    }

    #[test]
    fn rational_round_trip(x in any_rat()) {
        prop_assert_eq!(parse_rat(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn primality_matches_trial_division(n in 2u64..200_000) {
        let trial = small_primes_of(&BigInt::from(n)) == vec![n];
        prop_assert_eq!(is_prime_u64(n), trial);
    }

    #[test]
    fn factors_divide_out(n in 1u64..u64::MAX) {
        let primes = prime_factors(&BigUint::from(n)).unwrap();
        let mut rest = n;
        for p in &primes {
            prop_assert!(is_prime_u64(*p));
            prop_assert_eq!(rest % p, 0);
            while rest % p == 0 {
                rest /= p;
            }
        }
        prop_assert_eq!(rest, 1);
    }
}

#[test]
fn zero_has_no_support() {
    assert!(relevant_places(&Rat::zero()).is_err());
    assert!(product_formula_check(&Rat::zero()).is_err());
}

#[test]
fn place_sets() {
    let s = PlaceSet::parse_list("inf,2,3").unwrap();
    assert_eq!(s.to_string(), "{inf, p=2, p=3}");
    assert!(PlaceSet::parse_list("2,2").is_err());
    assert!(PlaceSet::parse_list("inf,4").is_err());
    assert_eq!(PlaceSet::default_s().len(), 4);
}

#[test]
fn large_prime_factors() {
    let p = 1_000_000_007u64;
    let q = 998_244_353u64;
    let n = BigUint::from(p) * BigUint::from(q);
    assert_eq!(prime_factors(&n).unwrap(), vec![q, p]);
}
