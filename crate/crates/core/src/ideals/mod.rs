//! Homogeneous ideals over ℚ: Gröbner bases, Hilbert functions, quotient
//! monomial bases, dimension and degree, projective emptiness, elimination.

mod groebner;
mod order;

use std::sync::OnceLock;

pub use groebner::GroebnerBasis;
pub use order::MonomialOrder;

use crate::error::{Error, Result};
use crate::polyring::{monomials_of_degree, HomPoly, Monomial, Poly};

/// Largest graph ideal (source plus target variables) `eliminate` accepts.
pub const ELIMINATION_VAR_LIMIT: usize = 12;

/// A homogeneous ideal given by generators. The grevlex Gröbner basis is
/// computed on first use and cached.
#[derive(Debug, Clone)]
pub struct PolyIdeal {
    num_vars: usize,
    generators: Vec<HomPoly>,
    grevlex: OnceLock<GroebnerBasis>,
}

impl PartialEq for PolyIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.num_vars == other.num_vars && self.generators == other.generators
    }
}

impl PolyIdeal {
    pub fn new(num_vars: usize, generators: Vec<HomPoly>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::Invalid("an ideal needs at least one variable".into()));
        }
        for g in &generators {
            if g.num_vars() != num_vars {
                return Err(Error::DimensionMismatch {
                    expected: num_vars,
                    found: g.num_vars(),
                });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(PolyIdeal {
            num_vars,
            generators,
            grevlex: OnceLock::new(),
        })
    }

    pub fn zero(num_vars: usize) -> Self {
        PolyIdeal::new(num_vars, Vec::new()).expect("valid")
    }

    pub fn parse(num_vars: usize, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| HomPoly::parse(s, num_vars))
            .collect::<Result<Vec<_>>>()?;
        PolyIdeal::new(num_vars, gens)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// `m` in ℙ^m.
    pub fn ambient_dim(&self) -> usize {
        self.num_vars - 1
    }

    pub fn generators(&self) -> &[HomPoly] {
        &self.generators
    }

    /// `I + ⟨extra⟩`.
    pub fn with_generators<'a>(&self, extra: impl IntoIterator<Item = &'a HomPoly>) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend(extra.into_iter().cloned());
        PolyIdeal::new(self.num_vars, gens)
    }

    fn polys(&self) -> Vec<Poly> {
        self.generators.iter().map(|g| g.as_poly().clone()).collect()
    }

    pub fn groebner(&self, order: &MonomialOrder) -> GroebnerBasis {
        if *order == MonomialOrder::Grevlex {
            return self.grevlex_basis().clone();
        }
        GroebnerBasis::compute(self.num_vars, &self.polys(), order)
    }

    pub fn grevlex_basis(&self) -> &GroebnerBasis {
        self.grevlex
            .get_or_init(|| GroebnerBasis::compute(self.num_vars, &self.polys(), &MonomialOrder::Grevlex))
    }

    /// Reduced grevlex basis elements as homogeneous polynomials.
    pub fn groebner_generators(&self) -> Vec<HomPoly> {
        self.grevlex_basis()
            .basis()
            .iter()
            .map(|p| HomPoly::new(p.clone()).expect("basis of a homogeneous ideal is homogeneous"))
            .collect()
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.grevlex_basis().contains(f)
    }
}

/// Reduced Gröbner basis of `⟨gens⟩` for `order`.
pub fn groebner(ideal: &PolyIdeal, order: &MonomialOrder) -> GroebnerBasis {
    ideal.groebner(order)
}

fn count_standard(gb: &GroebnerBasis, u: u32) -> usize {
    if gb.is_unit() {
        return 0;
    }
    monomials_of_degree(gb.num_vars() - 1, u)
        .iter()
        .filter(|m| gb.is_standard(m))
        .count()
}

/// `H(u) = dim k[x]_u / I_u`, counted as degree-`u` standard monomials.
pub fn hilbert_function(ideal: &PolyIdeal, u: u32) -> usize {
    count_standard(ideal.grevlex_basis(), u)
}

/// Degree-`u` standard monomials for `order`, in lexicographic order; their
/// residues form a basis of `k[x]_u / I_u`.
pub fn quotient_basis(ideal: &PolyIdeal, u: u32, order: &MonomialOrder) -> Vec<Monomial> {
    let gb = ideal.groebner(order);
    if gb.is_unit() {
        return Vec::new();
    }
    monomials_of_degree(ideal.ambient_dim(), u)
        .into_iter()
        .filter(|m| gb.is_standard(m))
        .collect()
}

/// Projective dimension and degree of `V(I)` read off its Hilbert polynomial.
///
/// `H` is evaluated on `0..=u0 + 2m + 4`, where `u0` bounds the index from
/// which `H` is polynomial (the larger of `maxdeg · #gens` and the degree of
/// the lcm of the leading monomials). The dimension is the least `n` whose
/// `n`-th backward difference is a nonzero constant on every window point
/// from `u0 + n` on (at least `n + 2` of them); that constant is the degree.
pub fn variety_dim_deg(ideal: &PolyIdeal) -> Result<(usize, usize)> {
    dim_deg_from_basis(ideal.grevlex_basis(), &ideal.generators)
}

fn regularity_hint(gb: &GroebnerBasis, gens: &[HomPoly]) -> u32 {
    let maxdeg = gens.iter().map(HomPoly::degree).max().unwrap_or(0);
    let from_gens = maxdeg * gens.len() as u32;
    let lcm_deg = gb
        .leading_monomials()
        .iter()
        .fold(Monomial::one(gb.num_vars()), |acc, m| acc.lcm(m))
        .degree();
    from_gens.max(lcm_deg)
}

fn dim_deg_from_basis(gb: &GroebnerBasis, gens: &[HomPoly]) -> Result<(usize, usize)> {
    if gb.is_unit() {
        return Err(Error::EmptyVariety);
    }
    let m = gb.num_vars() - 1;
    let u0 = regularity_hint(gb, gens);
    let top = u0 + 2 * m as u32 + 4;
    let values: Vec<i128> = (0..=top).map(|u| count_standard(gb, u) as i128).collect();
    if values[u0 as usize..].iter().all(|&h| h == 0) {
        return Err(Error::EmptyVariety);
    }
    for n in 0..=m {
        let diffs: Vec<i128> = ((u0 as usize + n)..=top as usize)
            .map(|u| backward_difference(&values, u, n))
            .collect();
        if diffs.len() >= n + 2 && diffs[0] > 0 && diffs.iter().all(|&d| d == diffs[0]) {
            return Ok((n, diffs[0] as usize));
        }
    }
    Err(Error::Invalid("Hilbert function did not stabilize".into()))
}

fn backward_difference(values: &[i128], u: usize, k: usize) -> i128 {
    let mut binom: i128 = 1;
    let mut acc = 0;
    for i in 0..=k {
        let term = binom * values[u - i];
        acc += if i % 2 == 0 { term } else { -term };
        binom = binom * (k - i) as i128 / (i as i128 + 1);
    }
    acc
}

/// Macaulay-type bound `1 + Σ (d_i − 1)` over the `m + 1` largest generator
/// degrees.
pub fn emptiness_bound(ideal: &PolyIdeal) -> usize {
    let mut degs: Vec<u32> = ideal.generators.iter().map(HomPoly::degree).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    1 + degs
        .iter()
        .take(ideal.num_vars)
        .map(|d| d.saturating_sub(1) as usize)
        .sum::<usize>()
}

/// Whether `V(I)` is empty over the algebraic closure: true once `H(u) = 0`
/// for some `u` up to [`emptiness_bound`], false once `H` settles on a
/// positive Hilbert polynomial.
pub fn is_projectively_empty(ideal: &PolyIdeal) -> Result<bool> {
    let gb = ideal.grevlex_basis();
    if gb.is_unit() {
        return Ok(true);
    }
    let bound = emptiness_bound(ideal);
    if (0..=bound as u32).any(|u| count_standard(gb, u) == 0) {
        return Ok(true);
    }
    match dim_deg_from_basis(gb, &ideal.generators) {
        Ok(_) => Ok(false),
        Err(_) => Err(Error::EmptinessUndecided { bound }),
    }
}

/// Generators of `⟨gens⟩ ∩ k[x_keep]`, re-indexed so that `keep[i]` becomes
/// variable `i`.
pub fn eliminate(num_vars: usize, gens: &[Poly], keep: &[usize]) -> Result<Vec<Poly>> {
    if num_vars > ELIMINATION_VAR_LIMIT {
        return Err(Error::EliminationTooLarge {
            vars: num_vars,
            limit: ELIMINATION_VAR_LIMIT,
        });
    }
    if keep.iter().any(|&k| k >= num_vars) {
        return Err(Error::Invalid("kept variable out of range".into()));
    }
    let dropped: Vec<usize> = (0..num_vars).filter(|i| !keep.contains(i)).collect();
    // new position of each old variable: dropped block first
    let mut to_new = vec![0; num_vars];
    for (pos, &v) in dropped.iter().chain(keep.iter()).enumerate() {
        to_new[v] = pos;
    }
    let permuted: Vec<Poly> = gens.iter().map(|g| g.remap(num_vars, &to_new)).collect();
    let order = MonomialOrder::Elimination {
        eliminate: dropped.len(),
    };
    let gb = GroebnerBasis::compute(num_vars, &permuted, &order);
    let k = dropped.len();
    let back: Vec<usize> = (0..num_vars).map(|i| i.saturating_sub(k)).collect();
    Ok(gb
        .basis()
        .iter()
        .filter(|p| p.terms().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|p| p.remap(keep.len(), &back).primitive())
        .collect())
}

/// Ideal of the closure of the image of `V(I)` under `x ↦ (P_0(x) : … : P_k(x))`.
pub fn image_ideal(source: &PolyIdeal, map: &[HomPoly]) -> Result<PolyIdeal> {
    let Some(first) = map.first() else {
        return Err(Error::Invalid("empty map".into()));
    };
    if map.iter().any(|p| p.degree() != first.degree() || p.num_vars() != source.num_vars) {
        return Err(Error::Invalid("map components must share variables and degree".into()));
    }
    let nx = source.num_vars;
    let total = nx + map.len();
    let embed: Vec<usize> = (0..nx).collect();
    let mut graph: Vec<Poly> = source
        .generators
        .iter()
        .map(|g| g.as_poly().remap(total, &embed))
        .collect();
    for (j, p) in map.iter().enumerate() {
        graph.push(&Poly::var(total, nx + j) - &p.as_poly().remap(total, &embed));
    }
    let keep: Vec<usize> = (nx..total).collect();
    let gens = eliminate(total, &graph, &keep)?
        .into_iter()
        .map(HomPoly::new)
        .collect::<Result<Vec<_>>>()?;
    PolyIdeal::new(map.len(), gens)
}

/// A projective variety given by its ideal, with dimension and degree.
#[derive(Debug, Clone, PartialEq)]
pub struct VarietySpec {
    ideal: PolyIdeal,
    dim: usize,
    degree: usize,
}

impl VarietySpec {
    /// Irreducibility of `V(I)` is taken on trust.
    pub fn new(ideal: PolyIdeal) -> Result<Self> {
        let (dim, degree) = variety_dim_deg(&ideal)?;
        Ok(VarietySpec { ideal, dim, degree })
    }

    pub fn projective_space(m: usize) -> Self {
        VarietySpec {
            ideal: PolyIdeal::zero(m + 1),
            dim: m,
            degree: 1,
        }
    }

    pub fn ideal(&self) -> &PolyIdeal {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.ideal.num_vars
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conic() -> PolyIdeal {
        PolyIdeal::parse(3, &["x0*x2 - x1^2"]).unwrap()
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_function(&PolyIdeal::zero(3), 2), 6);
        assert_eq!(hilbert_function(&conic(), 3), 7);
        let point = PolyIdeal::parse(2, &["x1"]).unwrap();
        for u in 0..6 {
            assert_eq!(hilbert_function(&point, u), 1);
        }
    }

    #[test]
    fn quotient_basis_examples() {
        let g = MonomialOrder::Grevlex;
        assert_eq!(quotient_basis(&PolyIdeal::zero(2), 2, &g).len(), 3);
        let point = PolyIdeal::parse(2, &["x1"]).unwrap();
        assert_eq!(quotient_basis(&point, 3, &g), vec![Monomial::new(vec![3, 0])]);
        let qb = quotient_basis(&conic(), 2, &g);
        assert_eq!(qb.len(), 5);
        let c = conic();
        let lm = &c.grevlex_basis().leading_monomials()[0];
        assert!(qb.iter().all(|m| !lm.divides(m)));
    }

    #[test]
    fn dim_deg_examples() {
        assert_eq!(variety_dim_deg(&PolyIdeal::zero(3)).unwrap(), (2, 1));
        assert_eq!(variety_dim_deg(&conic()).unwrap(), (1, 2));
        assert_eq!(variety_dim_deg(&PolyIdeal::parse(2, &["x1"]).unwrap()).unwrap(), (0, 1));
        let irrelevant = PolyIdeal::parse(2, &["x0", "x1"]).unwrap();
        assert_eq!(variety_dim_deg(&irrelevant), Err(Error::EmptyVariety));
        // two points in P^1
        let two = PolyIdeal::parse(2, &["x0^2 - x1^2"]).unwrap();
        assert_eq!(variety_dim_deg(&two).unwrap(), (0, 2));
    }

    #[test]
    fn emptiness_examples() {
        let e = |gens: &[&str]| is_projectively_empty(&PolyIdeal::parse(3, gens).unwrap()).unwrap();
        assert!(e(&["x0", "x1", "x2"]));
        assert!(!e(&["x0*x2 - x1^2", "x0"]));
        assert!(e(&["x0", "x1", "x0 + x1 + x2"]));
        assert!(!e(&[]));
        assert!(e(&["x0*x2 - x1^2", "x0", "x2"]));
    }

    #[test]
    fn elimination_examples() {
        let p1 = PolyIdeal::zero(2);
        let veronese = image_ideal(&p1, &[
            HomPoly::parse("x0^2", 2).unwrap(),
            HomPoly::parse("x0*x1", 2).unwrap(),
            HomPoly::parse("x1^2", 2).unwrap(),
        ])
        .unwrap();
        let shown: Vec<String> = veronese.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x0*x2 - x1^2"]);

        let identity = image_ideal(&p1, &[HomPoly::parse("x0", 2).unwrap(), HomPoly::parse("x1", 2).unwrap()])
            .unwrap();
        assert!(identity.generators().is_empty());

        let cubic = twisted_cubic();
        assert_eq!(cubic.generators().len(), 3);
        assert!(cubic.generators().iter().all(|g| g.degree() == 2));
        assert_eq!(variety_dim_deg(&cubic).unwrap(), (1, 3));
    }

    fn twisted_cubic() -> PolyIdeal {
        let map: Vec<HomPoly> = ["x0^3", "x0^2*x1", "x0*x1^2", "x1^3"]
            .iter()
            .map(|s| HomPoly::parse(s, 2).unwrap())
            .collect();
        image_ideal(&PolyIdeal::zero(2), &map).unwrap()
    }

    #[test]
    fn elimination_guard() {
        let gens = vec![Poly::var(13, 0)];
        assert!(matches!(
            eliminate(13, &gens, &[1]),
            Err(Error::EliminationTooLarge { .. })
        ));
    }
}
