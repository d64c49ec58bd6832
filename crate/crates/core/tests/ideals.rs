mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_hilbert, r, random_hompoly};
use subgen_core::ideals::{
    eliminate, emptiness_bound, hilbert_function, image_ideal, is_projectively_empty, quotient_basis,
    variety_dim_deg,
};
use subgen_core::{HomPoly, Monomial, MonomialOrder, Poly, PolyIdeal, Rat};

/// A small random homogeneous ideal in `k` variables.
fn ideal(k: usize, max_gens: usize, max_deg: u32) -> impl Strategy<Value = PolyIdeal> {
    (1..=max_gens, any::<u64>()).prop_map(move |(g, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = (0..g)
            .map(|_| {
                let d = rng.random_range(1..=max_deg);
                random_hompoly(&mut rng, k, d, 3)
            })
            .collect();
        PolyIdeal::new(k, gens).unwrap()
    })
}

fn poly(k: usize, max_deg: u32) -> impl Strategy<Value = Poly> {
    (1..=max_deg, any::<u64>())
        .prop_map(move |(d, seed)| random_hompoly(&mut ChaCha8Rng::seed_from_u64(seed), k, d, 5).into_poly())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hilbert_matches_rank_oracle(i in prop_oneof![ideal(3, 3, 2), ideal(4, 2, 2)]) {
        for u in 0..=6 {
            prop_assert_eq!(hilbert_function(&i, u), brute_hilbert(&i, u), "u = {}", u);
        }
    }

    #[test]
    fn quotient_basis_has_hilbert_size(i in ideal(3, 3, 2), u in 0u32..=5) {
        let h = hilbert_function(&i, u);
        prop_assert_eq!(quotient_basis(&i, u, &MonomialOrder::Grevlex).len(), h);
        prop_assert_eq!(quotient_basis(&i, u, &MonomialOrder::Lex).len(), h);
    }

    #[test]
    fn normal_form_ignores_ideal_elements(i in ideal(3, 3, 2), f in poly(3, 2), h in poly(3, 3)) {
        let gb = i.grevlex_basis();
        prop_assert!(gb.satisfies_buchberger_criterion());
        let g = i.generators()[0].as_poly();
        let shifted = &(&f * g) + &h;
        let nf = gb.normal_form(&h);
        prop_assert_eq!(gb.normal_form(&shifted), nf.clone());
        prop_assert_eq!(gb.normal_form(&nf), nf);
        for gen in i.generators() {
            prop_assert!(i.contains(gen.as_poly()));
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(i in ideal(3, 3, 2)) {
        let mut gens = i.generators().to_vec();
        gens.reverse();
        let j = PolyIdeal::new(3, gens).unwrap();
        prop_assert_eq!(i.grevlex_basis().basis(), j.grevlex_basis().basis());
    }

    #[test]
    fn hypersurface_dim_deg(m in 1usize..=3, e in 1u32..=4, seed in any::<u64>()) {
        let q = random_hompoly(&mut ChaCha8Rng::seed_from_u64(seed), m + 1, e, 4);
        let i = PolyIdeal::new(m + 1, vec![q]).unwrap();
        prop_assert_eq!(variety_dim_deg(&i).unwrap(), (m - 1, e as usize));
    }

    #[test]
    fn emptiness_iff_variable_powers(i in ideal(3, 4, 2)) {
        let gb = i.grevlex_basis();
        let bound = emptiness_bound(&i).max(1) as u32 + 2;
        let powers = (0..3).all(|j| (1..=bound).any(|k| {
            gb.contains(&Poly::term(Monomial::var(3, j), Rat::from_integer(1.into())).pow(k))
        }));
        prop_assert_eq!(is_projectively_empty(&i).unwrap(), powers);
    }
}

#[test]
fn twisted_cubic_contains_image_points() {
    let map: Vec<HomPoly> = ["x0^3", "x0^2*x1", "x0*x1^2", "x1^3"]
        .iter()
        .map(|s| HomPoly::parse(s, 2).unwrap())
        .collect();
    let cubic = image_ideal(&PolyIdeal::zero(2), &map).unwrap();
    assert_eq!(cubic.generators().len(), 3);
    for (s, t) in [(1, 2), (3, -1), (2, 5), (0, 1)] {
        let image: Vec<Rat> = [s * s * s, s * s * t, s * t * t, t * t * t].iter().map(|&c| r(c)).collect();
        for g in cubic.generators() {
            assert_eq!(g.as_poly().eval(&image).unwrap(), r(0));
        }
    }
    assert_eq!(variety_dim_deg(&cubic).unwrap(), (1, 3));
}

#[test]
fn eliminate_line_through_origin() {
    // y0 - x0, y1 - 2*x0 in k[x0, y0, y1]: eliminating x0 leaves 2*y0 - y1.
    let gens = [Poly::parse("x1 - x0", 3).unwrap(), Poly::parse("x2 - 2*x0", 3).unwrap()];
    let out = eliminate(3, &gens, &[1, 2]).unwrap();
    assert_eq!(out.len(), 1);
    let p = &out[0];
    assert_eq!(p.eval(&[r(1), r(2)]).unwrap(), r(0));
    assert_ne!(p.eval(&[r(1), r(1)]).unwrap(), r(0));
}
