//! Hilbert weights, Chow forms and Chow weights.
//!
//! Hilbert weights are computed exactly by a matroid greedy over the residues
//! of degree-`u` monomials. Chow forms are built symbolically for points,
//! linear subvarieties and hypersurfaces; any other variety gets a certified
//! interval from the Hilbert-weight inequality paired with the coordinate
//! subset lower bound.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideals::{
    hilbert_function, is_projectively_empty, quotient_basis, variety_dim_deg, MonomialOrder,
    PolyIdeal,
};
use crate::linalg::{nullspace, rank, Echelon};
use crate::polyring::{monomials_of_degree, HomPoly, Monomial, Poly, ProjPoint};
use crate::qarith::{parse_rat, Rat};

/// Nonnegative rational weights `(c_0, …, c_m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<Rat>);

impl WeightVector {
    pub fn new(entries: Vec<Rat>) -> Result<Self> {
        if entries.iter().any(Signed::is_negative) {
            return Err(Error::NegativeWeight);
        }
        Ok(WeightVector(entries))
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    pub fn entries(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Rat {
        self.0.iter().cloned().max().unwrap_or_else(Rat::zero)
    }

    pub fn scaled(&self, t: &Rat) -> Result<Self> {
        Self::new(self.0.iter().map(|c| c * t).collect())
    }

    pub fn sum_over(&self, indices: &[usize]) -> Rat {
        indices.iter().map(|&i| self.0[i].clone()).sum()
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    /// Comma separated rationals, e.g. `1,0,1/2`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s.split(',').map(parse_rat).collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn check_len(c: &WeightVector, num_vars: usize) -> Result<()> {
    if c.len() != num_vars {
        return Err(Error::DimensionMismatch {
            expected: num_vars,
            found: c.len(),
        });
    }
    Ok(())
}

/// `S_X(u, c)` with a basis attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct HilbertWeight {
    pub value: Rat,
    pub basis: Vec<Monomial>,
}

/// Maximum of `Σ a_i · c` over monomial bases of `k[x]_u / I_u`.
///
/// Degree-`u` monomials are visited by decreasing weight (lexicographic
/// order among equal weights) and kept when their residue is independent of
/// those already kept. Residues live in the linear matroid spanned by the
/// standard monomials, where the greedy choice is optimal.
pub fn hilbert_weight(ideal: &PolyIdeal, u: u32, c: &WeightVector) -> Result<HilbertWeight> {
    check_len(c, ideal.num_vars())?;
    let gb = ideal.grevlex_basis();
    let standard = quotient_basis(ideal, u, &MonomialOrder::Grevlex);
    let target = standard.len();
    let index: BTreeMap<&Monomial, usize> = standard.iter().enumerate().map(|(i, m)| (m, i)).collect();

    let mut candidates: Vec<(Rat, Monomial)> = monomials_of_degree(ideal.ambient_dim(), u)
        .into_iter()
        .map(|m| (m.weight(c.entries()), m))
        .collect();
    candidates.sort_by(|a, b| b.0.cmp(&a.0));

    let mut echelon = Echelon::new();
    let mut basis = Vec::with_capacity(target);
    let mut value = Rat::zero();
    for (w, m) in candidates {
        if echelon.rank() == target {
            break;
        }
        let residue = gb.normal_form(&Poly::term(m.clone(), Rat::one()));
        let mut v = vec![Rat::zero(); target];
        for (sm, coef) in residue.terms() {
            v[index[sm]] = coef.clone();
        }
        if echelon.insert(&v) {
            value += w;
            basis.push(m);
        }
    }
    Ok(HilbertWeight { value, basis })
}

/// A Chow form in `blocks` blocks of `block_len` variables `u_{ij}`; the
/// variable `u_{ij}` has index `i · block_len + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChowForm {
    blocks: usize,
    block_len: usize,
    poly: Poly,
}

impl ChowForm {
    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn block_len(&self) -> usize {
        self.block_len
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// Degree of the form in block `i`, if homogeneous there.
    pub fn block_degree(&self, i: usize) -> Option<u32> {
        let range = i * self.block_len..(i + 1) * self.block_len;
        let mut degs = self
            .poly
            .terms()
            .map(|(m, _)| m.exponents()[range.clone()].iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    fn var_name(&self) -> impl Fn(usize) -> String + '_ {
        move |k| format!("u{}_{}", k / self.block_len, k % self.block_len)
    }
}

impl fmt::Display for ChowForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.var_name();
        self.poly.display_with(&name).fmt(f)
    }
}

fn block_var(nvars: usize, block_len: usize, i: usize, j: usize) -> Poly {
    Poly::var(nvars, i * block_len + j)
}

/// Laplace expansion along the first row.
fn determinant(matrix: &[Vec<Poly>], nvars: usize) -> Poly {
    let n = matrix.len();
    if n == 0 {
        return Poly::constant(nvars, Rat::one());
    }
    if n == 1 {
        return matrix[0][0].clone();
    }
    let mut acc = Poly::zero(nvars);
    for col in 0..n {
        if matrix[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &matrix[0][col] * &determinant(&minor, nvars);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `Σ_j p_j u_{0j}`: vanishes exactly on hyperplanes through `p`.
pub fn chow_form_point(p: &ProjPoint) -> ChowForm {
    let n = p.num_vars();
    let mut poly = Poly::zero(n);
    for (j, c) in p.coords_rat().into_iter().enumerate() {
        poly.add_term(Monomial::var(n, j), c);
    }
    ChowForm {
        blocks: 1,
        block_len: n,
        poly,
    }
}

/// `det(u_i · b_t)` for the linear span of the given vectors.
pub fn chow_form_linear(basis: &[Vec<Rat>]) -> Result<ChowForm> {
    let Some(first) = basis.first() else {
        return Err(Error::Invalid("empty basis".into()));
    };
    let block_len = first.len();
    if basis.iter().any(|b| b.len() != block_len) {
        return Err(Error::Invalid("basis vectors of different lengths".into()));
    }
    if rank(basis) < basis.len() {
        return Err(Error::DependentBasis);
    }
    let blocks = basis.len();
    let nvars = blocks * block_len;
    let matrix: Vec<Vec<Poly>> = (0..blocks)
        .map(|i| {
            basis
                .iter()
                .map(|b| {
                    let mut p = Poly::zero(nvars);
                    for (j, bj) in b.iter().enumerate() {
                        p.add_term(Monomial::var(nvars, i * block_len + j), bj.clone());
                    }
                    p
                })
                .collect()
        })
        .collect();
    Ok(ChowForm {
        blocks,
        block_len,
        poly: determinant(&matrix, nvars),
    })
}

/// Chow form of ℙ^m itself, `det(u_{ij})`.
pub fn chow_form_projective_space(m: usize) -> ChowForm {
    let basis: Vec<Vec<Rat>> = (0..=m)
        .map(|t| (0..=m).map(|j| if j == t { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    chow_form_linear(&basis).expect("identity basis is independent")
}

/// `F(p(u_0, …, u_{m−1}))` with `p_j` the signed maximal minors of the
/// `m × (m+1)` block matrix: the common point of `m` generic hyperplanes.
pub fn chow_form_hypersurface(f: &HomPoly) -> Result<ChowForm> {
    if f.degree() == 0 {
        return Err(Error::Invalid("hypersurface of degree 0".into()));
    }
    let block_len = f.num_vars();
    let blocks = block_len - 1;
    let nvars = blocks * block_len;
    let p: Vec<Poly> = (0..block_len)
        .map(|skip| {
            let minor: Vec<Vec<Poly>> = (0..blocks)
                .map(|i| {
                    (0..block_len)
                        .filter(|&j| j != skip)
                        .map(|j| block_var(nvars, block_len, i, j))
                        .collect()
                })
                .collect();
            let d = determinant(&minor, nvars);
            if skip % 2 == 0 {
                d
            } else {
                -&d
            }
        })
        .collect();
    Ok(ChowForm {
        blocks,
        block_len,
        poly: f.as_poly().compose(&p)?,
    })
}

/// Exact Chow form for the supported classes: linear subvarieties
/// (including points and ℙ^m) and hypersurfaces.
pub fn chow_form_of_ideal(ideal: &PolyIdeal) -> Result<ChowForm> {
    let gens = ideal.groebner_generators();
    let n = ideal.num_vars();
    if gens.iter().all(|g| g.degree() == 1) {
        let rows: Vec<Vec<Rat>> = gens
            .iter()
            .map(|g| (0..n).map(|j| g.as_poly().coeff(&Monomial::var(n, j))).collect())
            .collect();
        let span = nullspace(&rows, n);
        if span.is_empty() {
            return Err(Error::EmptyVariety);
        }
        return chow_form_linear(&span);
    }
    if gens.len() == 1 {
        return chow_form_hypersurface(&gens[0]);
    }
    Err(Error::UnsupportedChowForm)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstantConvention {
    /// Constants in the ambient dimension `m`: `(m+1)Δ` and `(2m+1)Δ`.
    AsPrinted,
    /// Constants in the variety's dimension `n`: `(n+1)Δ` and `(2n+1)Δ`.
    Dimension,
}

impl ConstantConvention {
    pub const ALL: [ConstantConvention; 2] = [ConstantConvention::AsPrinted, ConstantConvention::Dimension];

    fn k(self, m: usize, n: usize) -> usize {
        match self {
            ConstantConvention::AsPrinted => m,
            ConstantConvention::Dimension => n,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConstantConvention::AsPrinted => "as-printed",
            ConstantConvention::Dimension => "dimension",
        }
    }
}

impl FromStr for ConstantConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "as-printed" | "printed" | "m" => Ok(ConstantConvention::AsPrinted),
            "dimension" | "dim" | "n" => Ok(ConstantConvention::Dimension),
            _ => Err(Error::Parse(format!("unknown constant convention {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChowMethod {
    Exact,
    Estimated { u: u32, convention: ConstantConvention },
}

/// `e_X(c)`, either exact (`lo = hi`) or a certified interval.
#[derive(Debug, Clone, PartialEq)]
pub struct ChowWeightResult {
    pub lo: Rat,
    pub hi: Rat,
    pub method: ChowMethod,
}

impl ChowWeightResult {
    pub fn exact(value: Rat) -> Self {
        ChowWeightResult {
            lo: value.clone(),
            hi: value,
            method: ChowMethod::Exact,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.method == ChowMethod::Exact
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

impl fmt::Display for ChowWeightResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.method {
            ChowMethod::Exact => write!(f, "{}", self.lo),
            ChowMethod::Estimated { u, convention } => {
                write!(f, "[{}, {}] (estimated, u={u}, {})", self.lo, self.hi, convention.name())
            }
        }
    }
}

/// `t`-exponent picked up by a monomial of the Chow form under
/// `u_{ij} ↦ t^{c_j} u_{ij}`.
fn t_exponent(m: &Monomial, block_len: usize, c: &WeightVector) -> Rat {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(k, e)| &c.entries()[k % block_len] * Rat::from_integer(BigInt::from(*e)))
        .sum()
}

/// The decomposition `Σ t^{e_i} G_i` with `e_0 > e_1 > …`, dropping groups
/// whose sum cancels.
pub fn chow_decomposition(cf: &ChowForm, c: &WeightVector) -> Result<Vec<(Rat, Poly)>> {
    check_len(c, cf.block_len)?;
    let mut groups: BTreeMap<Rat, Poly> = BTreeMap::new();
    for (m, coef) in cf.poly.terms() {
        groups
            .entry(t_exponent(m, cf.block_len, c))
            .or_insert_with(|| Poly::zero(cf.poly.num_vars()))
            .add_term(m.clone(), coef.clone());
    }
    Ok(groups.into_iter().rev().filter(|(_, g)| !g.is_zero()).collect())
}

/// `e_X(c)`: the top exponent of the decomposition.
pub fn chow_weight(cf: &ChowForm, c: &WeightVector) -> Result<ChowWeightResult> {
    let groups = chow_decomposition(cf, c)?;
    let (top, _) = groups
        .into_iter()
        .next()
        .ok_or_else(|| Error::Invalid("zero Chow form".into()))?;
    Ok(ChowWeightResult::exact(top))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `k`-subsets of `{0, …, n−1}` in lexicographic order.
pub fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    subsets(n, k)
}

fn coordinate_cut(ideal: &PolyIdeal, subset: &[usize]) -> Result<PolyIdeal> {
    let n = ideal.num_vars();
    let vars: Vec<HomPoly> = subset
        .iter()
        .map(|&i| HomPoly::new(Poly::var(n, i)))
        .collect::<Result<_>>()?;
    ideal.with_generators(&vars)
}

/// `max (Σ_{i∈J} c_i) · Δ` over `(n+1)`-subsets `J` whose coordinate
/// hyperplanes miss `X`; 0 when there is none.
pub fn subset_lower_bound(ideal: &PolyIdeal, c: &WeightVector) -> Result<Rat> {
    let (n, delta) = variety_dim_deg(ideal)?;
    let mut best = Rat::zero();
    for s in subsets(ideal.num_vars(), n + 1) {
        if is_projectively_empty(&coordinate_cut(ideal, &s)?)? {
            let b = c.sum_over(&s) * Rat::from_integer(BigInt::from(delta));
            if b > best {
                best = b;
            }
        }
    }
    Ok(best)
}

struct WeightData {
    n: usize,
    delta: Rat,
    hilbert: Rat,
    s: Rat,
}

fn weight_data(ideal: &PolyIdeal, c: &WeightVector, u: u32) -> Result<WeightData> {
    check_len(c, ideal.num_vars())?;
    let (n, delta) = variety_dim_deg(ideal)?;
    if u as usize <= delta {
        return Err(Error::DegreeTooSmall { u: u as usize, degree: delta });
    }
    let h = hilbert_function(ideal, u);
    let s = hilbert_weight(ideal, u, c)?.value;
    Ok(WeightData {
        n,
        delta: Rat::from_integer(BigInt::from(delta)),
        hilbert: Rat::from_integer(BigInt::from(h)),
        s,
    })
}

fn int(k: usize) -> Rat {
    Rat::from_integer(BigInt::from(k))
}

/// Interval for `e_X(c)`: the upper end rearranges
/// `S/(uH) ≥ e/((k+1)Δ) − (2k+1)Δ/u · max c`, the lower end is
/// [`subset_lower_bound`].
pub fn chow_weight_estimate(
    ideal: &PolyIdeal,
    c: &WeightVector,
    u: u32,
    convention: ConstantConvention,
) -> Result<ChowWeightResult> {
    let d = weight_data(ideal, c, u)?;
    let k = convention.k(ideal.ambient_dim(), d.n);
    let uu = int(u as usize);
    let hi = int(k + 1) * &d.delta * (&d.s / (&uu * &d.hilbert) + int(2 * k + 1) * &d.delta / &uu * c.max());
    let lo = subset_lower_bound(ideal, c)?;
    if lo > hi {
        return Err(Error::Invalid(format!("empty Chow weight interval [{lo}, {hi}]")));
    }
    Ok(ChowWeightResult {
        lo,
        hi,
        method: ChowMethod::Estimated { u, convention },
    })
}

/// Outcome of an inequality check with its exact margin.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityCheck {
    pub holds: bool,
    pub margin: Rat,
}

impl InequalityCheck {
    fn from_margin(margin: Rat) -> Self {
        InequalityCheck {
            holds: !margin.is_negative(),
            margin,
        }
    }
}

/// `S/(uH) − e/((k+1)Δ) + (2k+1)Δ/u · max c ≥ 0`.
pub fn check_theorem_2_12(
    ideal: &PolyIdeal,
    c: &WeightVector,
    u: u32,
    e_exact: &Rat,
    convention: ConstantConvention,
) -> Result<InequalityCheck> {
    let d = weight_data(ideal, c, u)?;
    let k = convention.k(ideal.ambient_dim(), d.n);
    let uu = int(u as usize);
    let margin = &d.s / (&uu * &d.hilbert) - e_exact / (int(k + 1) * &d.delta)
        + int(2 * k + 1) * &d.delta / &uu * c.max();
    Ok(InequalityCheck::from_margin(margin))
}

/// Result of the coordinate-subset lower bound check.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaCheck {
    pub holds: bool,
    pub slack: Rat,
    pub chow_weight: ChowWeightResult,
    pub bound: Rat,
}

/// `e_Y(c) ≥ (Σ_{i∈subset} c_i) · Δ` for a subset of `n + 1` coordinates
/// whose hyperplanes miss `Y`. When no exact Chow form is available the
/// upper end of [`chow_weight_estimate`] (at `u = Δ + 1`) is compared, which
/// is a necessary condition only.
pub fn check_lemma_2_13(ideal: &PolyIdeal, c: &WeightVector, subset: &[usize]) -> Result<LemmaCheck> {
    check_len(c, ideal.num_vars())?;
    let (n, delta) = variety_dim_deg(ideal)?;
    if subset.len() != n + 1 || subset.iter().any(|&i| i >= ideal.num_vars()) {
        return Err(Error::Invalid(format!("subset must hold {} coordinate indices", n + 1)));
    }
    if !is_projectively_empty(&coordinate_cut(ideal, subset)?)? {
        return Err(Error::SubsetNotInGeneralPosition);
    }
    let e = match chow_form_of_ideal(ideal) {
        Ok(cf) => chow_weight(&cf, c)?,
        Err(Error::UnsupportedChowForm) => {
            chow_weight_estimate(ideal, c, delta as u32 + 1, ConstantConvention::Dimension)?
        }
        Err(e) => return Err(e),
    };
    let bound = c.sum_over(subset) * int(delta);
    let slack = &e.hi - &bound;
    Ok(LemmaCheck {
        holds: !slack.is_negative(),
        slack,
        chow_weight: e,
        bound,
    })
}

/// Result of scaling the columns of a bracket.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketCheck {
    pub holds: bool,
    pub exponent: Rat,
}

/// Verifies symbolically that `[J](t^{c_0}u_{00}, …) = t^{Σ_{j∈J} c_j} [J](u)`.
/// Rational weights are cleared by a common denominator `L`, so the identity
/// is checked for `s = t^{1/L}` with integer exponents.
pub fn bracket_weight_check(subset: &[usize], c: &WeightVector) -> Result<BracketCheck> {
    let block_len = c.len();
    let k = subset.len();
    if k == 0 || k > block_len || subset.iter().any(|&j| j >= block_len) {
        return Err(Error::Invalid("bracket index set out of range".into()));
    }
    let den = c
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let exps: Vec<u32> = c
        .entries()
        .iter()
        .map(|x| {
            let v = (x * Rat::from_integer(den.clone())).to_integer();
            u32::try_from(v).map_err(|_| Error::Invalid("weight too large for a symbolic check".into()))
        })
        .collect::<Result<_>>()?;
    let nvars = k * block_len + 1;
    let t = nvars - 1;
    let plain: Vec<Vec<Poly>> = (0..k)
        .map(|i| subset.iter().map(|&j| block_var(nvars, block_len, i, j)).collect())
        .collect();
    let scaled: Vec<Vec<Poly>> = (0..k)
        .map(|i| {
            subset
                .iter()
                .map(|&j| {
                    let mut e = vec![0; nvars];
                    e[i * block_len + j] = 1;
                    e[t] = exps[j];
                    Poly::term(Monomial::new(e), Rat::one())
                })
                .collect()
        })
        .collect();
    let total: u32 = subset.iter().map(|&j| exps[j]).sum();
    let mut te = vec![0; nvars];
    te[t] = total;
    let lhs = determinant(&scaled, nvars);
    let rhs = &Poly::term(Monomial::new(te), Rat::one()) * &determinant(&plain, nvars);
    Ok(BracketCheck {
        holds: lhs == rhs,
        exponent: c.sum_over(subset),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::{rat, rat_frac};

    fn w(c: &[i64]) -> WeightVector {
        WeightVector::from_ints(c).unwrap()
    }

    fn conic() -> PolyIdeal {
        PolyIdeal::parse(3, &["x0*x2 - x1^2"]).unwrap()
    }

    fn point() -> PolyIdeal {
        PolyIdeal::parse(2, &["x1"]).unwrap()
    }

    #[test]
    fn hilbert_weight_examples() {
        let hw = hilbert_weight(&PolyIdeal::zero(2), 2, &w(&[1, 0])).unwrap();
        assert_eq!(hw.value, rat(3));
        assert_eq!(hw.basis.len(), 3);
        for u in 1..5 {
            let hw = hilbert_weight(&point(), u, &w(&[3, 2])).unwrap();
            assert_eq!(hw.value, rat(3 * u as i64));
            assert_eq!(hw.basis, vec![Monomial::new(vec![u, 0])]);
        }
        let hw = hilbert_weight(&conic(), 1, &w(&[1, 0, 0])).unwrap();
        assert_eq!(hw.value, rat(1));
        assert_eq!(hw.basis.len(), 3);
        assert_eq!(hilbert_weight(&conic(), 3, &w(&[1, 0, 0])).unwrap().value, rat(9));
    }

    #[test]
    fn chow_form_examples() {
        let cf = |s: &str| chow_form_point(&s.parse().unwrap()).to_string();
        assert_eq!(cf("(1:0)"), "u0_0");
        assert_eq!(cf("(0:1:0)"), "u0_1");
        assert_eq!(cf("(1:-2)"), "u0_0 - 2*u0_1");

        let p1 = chow_form_projective_space(1);
        assert_eq!(p1.to_string(), "u0_0*u1_1 - u0_1*u1_0");
        let line = chow_form_linear(&[vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)]]).unwrap();
        assert_eq!(line.to_string(), "u0_0*u1_1 - u0_1*u1_0");
        let p2 = chow_form_projective_space(2);
        assert_eq!(p2.poly().len(), 6);
        assert!((0..3).all(|i| p2.block_degree(i) == Some(1)));
        assert_eq!(
            chow_form_linear(&[vec![rat(1), rat(2)], vec![rat(2), rat(4)]]),
            Err(Error::DependentBasis)
        );

        let hs = |s: &str, n: usize| chow_form_hypersurface(&HomPoly::parse(s, n).unwrap()).unwrap();
        assert_eq!(hs("x0", 2).to_string(), "u0_1");
        assert_eq!(hs("x0 + x1", 2).to_string(), "-u0_0 + u0_1");
        let conic_form = hs("x0*x2 - x1^2", 3);
        assert_eq!(conic_form.blocks(), 2);
        assert_eq!(conic_form.block_degree(0), Some(2));
        assert_eq!(conic_form.block_degree(1), Some(2));
    }

    #[test]
    fn chow_weight_examples() {
        let point_form = chow_form_point(&"(1:0)".parse().unwrap());
        assert_eq!(chow_weight(&point_form, &w(&[3, 1])).unwrap().lo, rat(3));
        for m in 1..=3 {
            let c = WeightVector::new((0..=m).map(|j| rat_frac(j as i64 + 1, 2)).collect()).unwrap();
            let total: Rat = c.entries().iter().sum();
            assert_eq!(chow_weight(&chow_form_projective_space(m), &c).unwrap().lo, total);
        }
        let cf = chow_form_of_ideal(&conic()).unwrap();
        assert_eq!(chow_weight(&cf, &w(&[1, 0, 0])).unwrap().lo, rat(2));
        let groups = chow_decomposition(&cf, &w(&[1, 0, 0])).unwrap();
        assert_eq!(groups.iter().map(|g| g.0.clone()).collect::<Vec<_>>(), [rat(2), rat(1)]);
    }

    #[test]
    fn classification() {
        assert_eq!(chow_form_of_ideal(&point()).unwrap().to_string(), "u0_0");
        assert_eq!(chow_form_of_ideal(&PolyIdeal::zero(2)).unwrap(), chow_form_projective_space(1));
        let cubic = PolyIdeal::parse(4, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]).unwrap();
        assert_eq!(chow_form_of_ideal(&cubic), Err(Error::UnsupportedChowForm));
    }

    #[test]
    fn estimate_examples() {
        let dim = ConstantConvention::Dimension;
        let est = chow_weight_estimate(&point(), &w(&[1, 0]), 2, dim).unwrap();
        assert!(est.contains(&rat(1)));
        assert_eq!((est.lo.clone(), est.hi.clone()), (rat(1), rat_frac(3, 2)));
        let est = chow_weight_estimate(&PolyIdeal::zero(2), &w(&[1, 1]), 3, dim).unwrap();
        assert!(est.contains(&rat(2)));
        let est = chow_weight_estimate(&conic(), &w(&[1, 0, 0]), 3, dim).unwrap();
        assert!(est.contains(&rat(2)));
        assert!(matches!(
            chow_weight_estimate(&conic(), &w(&[1, 0, 0]), 2, dim),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn theorem_checks() {
        let dim = ConstantConvention::Dimension;
        let r = check_theorem_2_12(&point(), &w(&[1, 0]), 2, &rat(1), dim).unwrap();
        assert!(r.holds);
        assert_eq!(r.margin, rat_frac(1, 2));
        let r = check_theorem_2_12(&PolyIdeal::zero(2), &w(&[1, 0]), 3, &rat(1), dim).unwrap();
        assert!(r.holds);
        assert_eq!(r.margin, rat(1));
        let e = chow_weight(&chow_form_of_ideal(&conic()).unwrap(), &w(&[1, 1, 1])).unwrap();
        assert!(check_theorem_2_12(&conic(), &w(&[1, 1, 1]), 3, &e.lo, dim).unwrap().holds);
    }

    #[test]
    fn lemma_checks() {
        let r = check_lemma_2_13(&point(), &w(&[3, 1]), &[0]).unwrap();
        assert!(r.holds);
        assert_eq!(r.slack, rat(0));
        let r = check_lemma_2_13(&conic(), &w(&[1, 0, 0]), &[0, 2]).unwrap();
        assert!(r.holds);
        assert_eq!(r.slack, rat(0));
        let r = check_lemma_2_13(&PolyIdeal::zero(2), &w(&[1, 1]), &[0, 1]).unwrap();
        assert!(r.holds);
        assert_eq!(r.slack, rat(0));
        assert_eq!(
            check_lemma_2_13(&conic(), &w(&[1, 0, 0]), &[0, 1]),
            Err(Error::SubsetNotInGeneralPosition)
        );
    }

    #[test]
    fn bracket_examples() {
        let r = bracket_weight_check(&[0, 1], &w(&[1, 2])).unwrap();
        assert!(r.holds);
        assert_eq!(r.exponent, rat(3));
        let r = bracket_weight_check(&[0], &w(&[5, 1])).unwrap();
        assert_eq!((r.holds, r.exponent), (true, rat(5)));
        let r = bracket_weight_check(&[0, 2], &w(&[1, 0, 4])).unwrap();
        assert_eq!((r.holds, r.exponent), (true, rat(5)));
        let c = WeightVector::new(vec![rat_frac(1, 2), rat_frac(1, 3), rat(0)]).unwrap();
        assert!(bracket_weight_check(&[0, 1, 2], &c).unwrap().holds);
    }

    #[test]
    fn weight_vector_parsing() {
        let c: WeightVector = "1, 0, 1/2".parse().unwrap();
        assert_eq!(c.entries(), &[rat(1), rat(0), rat_frac(1, 2)]);
        assert_eq!("1,-1".parse::<WeightVector>(), Err(Error::NegativeWeight));
    }
}
