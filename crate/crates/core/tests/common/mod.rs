//! Independent oracles shared by the integration tests. Nothing here calls the
//! algorithm under test: norms come from trial division, Hilbert data from
//! dense linear algebra on the degree-`u` slice, Hilbert weights from
//! exhaustive search, and Chow weights from literal substitution.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use subgen_core::chow::ChowForm;
use subgen_core::{HomPoly, Monomial, Poly, PolyIdeal, Rat};

pub fn r(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rf(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Prime divisors by trial division.
pub fn small_primes_of(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs().to_u64().expect("oracle inputs are small");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `|x|_p = p^{−ord_p x}`, with `p = 0` standing for the real absolute value.
pub fn abs_at(x: &Rat, p: u64) -> Rat {
    if p == 0 {
        return x.abs();
    }
    if x.is_zero() {
        return Rat::zero();
    }
    let pb = BigInt::from(p);
    let ord = |mut n: BigInt| {
        let mut k = 0i32;
        while (&n % &pb).is_zero() {
            n /= &pb;
            k += 1;
        }
        k
    };
    let e = ord(x.numer().clone()) - ord(x.denom().clone());
    let base = Rat::from_integer(pb);
    if e >= 0 {
        Rat::one() / num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base, (-e) as usize)
    }
}

/// `0` (the real place) plus every prime dividing a numerator or denominator.
pub fn places_of<'a>(values: impl IntoIterator<Item = &'a Rat>) -> Vec<u64> {
    let mut ps = vec![0];
    for x in values {
        if x.is_zero() {
            continue;
        }
        ps.extend(small_primes_of(x.numer()));
        ps.extend(small_primes_of(x.denom()));
    }
    ps.sort();
    ps.dedup();
    ps
}

pub fn max_abs_at(values: &[Rat], p: u64) -> Rat {
    values.iter().map(|x| abs_at(x, p)).max().unwrap()
}

pub fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let n: i64 = rng.random_range(-1_000_000..=1_000_000);
        let d: i64 = rng.random_range(1..=1_000_000);
        if n != 0 {
            return rf(n, d);
        }
    }
}

/// All monomials of degree `d` in `k` variables, in no particular order.
pub fn monomials(k: usize, d: u32) -> Vec<Vec<u32>> {
    if k == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for a in 0..=d {
        for mut rest in monomials(k - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

pub fn random_hompoly(rng: &mut ChaCha8Rng, k: usize, d: u32, range: i64) -> HomPoly {
    loop {
        let mut p = Poly::zero(k);
        for e in monomials(k, d) {
            if rng.random_bool(0.6) {
                p.add_term(Monomial::new(e), r(rng.random_range(-range..=range)));
            }
        }
        if let Ok(q) = HomPoly::new(p) {
            return q;
        }
    }
}

pub fn random_weights(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rat> {
    (0..k)
        .map(|_| rf(rng.random_range(0..=12), rng.random_range(1..=4)))
        .collect()
}

/// Row rank by plain Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let pivot = rows[rank][col].clone();
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let f = &rows[i][col] / &pivot;
                let pivot_row = rows[rank].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rows spanning `I_u`: every generator times every monomial of the
/// complementary degree, written in the basis `mons`.
pub fn ideal_slice(ideal: &PolyIdeal, u: u32, mons: &[Vec<u32>]) -> Vec<Vec<Rat>> {
    let k = ideal.num_vars();
    let mut rows = Vec::new();
    for g in ideal.generators() {
        if g.degree() > u {
            continue;
        }
        for e in monomials(k, u - g.degree()) {
            let prod = g.as_poly().mul_monomial(&Monomial::new(e), &Rat::one());
            rows.push(
                mons.iter()
                    .map(|m| prod.coeff(&Monomial::new(m.clone())))
                    .collect(),
            );
        }
    }
    rows
}

pub fn brute_hilbert(ideal: &PolyIdeal, u: u32) -> usize {
    let mons = monomials(ideal.num_vars(), u);
    let rows = ideal_slice(ideal, u, &mons);
    mons.len() - dense_rank(rows)
}

fn unit(len: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); len];
    v[i] = Rat::one();
    v
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = choose(n - 1, k);
    for mut s in choose(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Maximum of `Σ a · c` over all monomial bases of `k[x]_u / I_u`, by
/// enumerating every subset of the right size.
pub fn brute_hilbert_weight(ideal: &PolyIdeal, u: u32, c: &[Rat]) -> Rat {
    let mons = monomials(ideal.num_vars(), u);
    let slice = ideal_slice(ideal, u, &mons);
    let ideal_rank = dense_rank(slice.clone());
    let h = mons.len() - ideal_rank;
    let weight = |m: &Vec<u32>| -> Rat { m.iter().zip(c).map(|(&e, ci)| r(e as i64) * ci).sum() };
    let mut best: Option<Rat> = None;
    for subset in choose(mons.len(), h) {
        let mut rows = slice.clone();
        rows.extend(subset.iter().map(|&i| unit(mons.len(), i)));
        if dense_rank(rows) == ideal_rank + h {
            let w: Rat = subset.iter().map(|&i| weight(&mons[i])).sum();
            if best.as_ref().is_none_or(|b| &w > b) {
                best = Some(w);
            }
        }
    }
    best.expect("some monomial basis exists")
}

/// `e(c)` by substituting `u_{ij} ↦ s^{L c_j} u_{ij}` into the Chow form,
/// expanding, and reading the top power of `s` (divided by `L`).
pub fn substitution_weight(cf: &ChowForm, c: &[Rat]) -> Rat {
    let l = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let len = cf.block_len();
    let nv = cf.poly().num_vars();
    let s = nv;
    let subs: Vec<Poly> = (0..nv)
        .map(|k| {
            let e = (&c[k % len] * Rat::from_integer(l.clone())).to_integer().to_u32().unwrap();
            let mut exps = vec![0; nv + 1];
            exps[k] = 1;
            exps[s] = e;
            Poly::term(Monomial::new(exps), Rat::one())
        })
        .collect();
    let expanded = cf.poly().compose(&subs).unwrap();
    let top = expanded
        .terms()
        .map(|(m, _)| m.exponents()[s])
        .max()
        .expect("nonzero Chow form");
    r(top as i64) / Rat::from_integer(l)
}
