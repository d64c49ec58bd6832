mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{r, random_hompoly, rf};
use subgen_core::polyring::{binomial, monomials_of_degree, normalize_degrees, parse_poly};
use subgen_core::{HomPoly, Poly, ProjPoint, Rat};

fn hompoly(max_vars: usize, max_deg: u32) -> impl Strategy<Value = HomPoly> {
    (2..=max_vars, 1..=max_deg, any::<u64>())
        .prop_map(|(k, d, seed)| random_hompoly(&mut ChaCha8Rng::seed_from_u64(seed), k, d, 9))
}

fn coords(k: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, k).prop_filter("nonzero", |v| v.iter().any(|&c| c != 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn power_is_additive(q in hompoly(3, 2), a in 1u32..=3, b in 1u32..=3) {
        prop_assert_eq!(q.power(a + b), q.power(a).mul(&q.power(b)));
    }

    #[test]
    fn evaluation_scales_by_lambda_power(q in hompoly(4, 3), x in coords(4), num in 1i64..=9, den in 1i64..=9) {
        let k = q.num_vars();
        let x: Vec<Rat> = x[..k].iter().map(|&c| r(c)).collect();
        let lambda = rf(num, den);
        let scaled: Vec<Rat> = x.iter().map(|c| c * &lambda).collect();
        let lhs = q.as_poly().eval(&scaled).unwrap();
        let rhs = q.as_poly().eval(&x).unwrap() * num_traits::pow(lambda, q.degree() as usize);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_point_is_scale_free(x in coords(3), num in -9i64..=9, den in 1i64..=9) {
        prop_assume!(num != 0);
        let lambda = rf(num, den);
        let xs: Vec<Rat> = x.iter().map(|&c| r(c)).collect();
        let scaled: Vec<Rat> = xs.iter().map(|c| c * &lambda).collect();
        let p = ProjPoint::new(&xs).unwrap();
        prop_assert_eq!(&ProjPoint::new(&scaled).unwrap(), &p);
        let q = HomPoly::parse("x0^2 - 3*x1*x2 + x2^2", 3).unwrap();
        prop_assert_eq!(q.evaluate(&ProjPoint::new(&scaled).unwrap()).unwrap(), q.evaluate(&p).unwrap());
    }

    #[test]
    fn polynomial_round_trip(q in hompoly(4, 3)) {
        let printed = q.to_string();
        prop_assert_eq!(HomPoly::parse(&printed, q.num_vars()).unwrap(), q);
    }

    #[test]
    fn point_round_trip(x in coords(3)) {
        let p = ProjPoint::from_ints(&x).unwrap();
        prop_assert_eq!(p.to_string().parse::<ProjPoint>().unwrap(), p);
    }

    #[test]
    fn normalized_degrees_agree(qs in prop::collection::vec(hompoly(3, 3), 1..4)) {
        let k = qs[0].num_vars();
        prop_assume!(qs.iter().all(|q| q.num_vars() == k));
        let (norm, d) = normalize_degrees(&qs).unwrap();
        for (q, n) in qs.iter().zip(&norm) {
            prop_assert_eq!(n.degree(), d);
            prop_assert_eq!(n, &q.power(d / q.degree()));
        }
    }
}

#[test]
fn monomial_counts() {
    for m in 0..=8usize {
        for d in 0..=8u32 {
            let mons = monomials_of_degree(m, d);
            assert_eq!(mons.len() as u64, binomial(d as u64 + m as u64, m as u64), "m={m} d={d}");
            assert!(mons.iter().all(|mo| mo.degree() == d));
        }
    }
}

#[test]
fn parsing_examples() {
    let p = parse_poly("3/2*x0^3 - x0*x1^2", None).unwrap();
    assert_eq!(p.num_vars(), 2);
    assert_eq!(p.to_string(), "3/2*x0^3 - x0*x1^2");
    assert!(HomPoly::parse("x0 + x1^2", 2).is_err());
    assert!(HomPoly::parse("0", 2).is_err());
    assert!(Poly::parse("x0 +", 2).is_err());
    assert!("(0 : 0)".parse::<ProjPoint>().is_err());
    let p: ProjPoint = "(-2 : 4 : 6)".parse().unwrap();
    assert_eq!(p.coords(), &[BigInt::from(1), BigInt::from(-2), BigInt::from(-3)]);
}
