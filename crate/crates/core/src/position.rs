//! Subgeneral position and the replacing-hypersurfaces construction.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chow::index_subsets;
use crate::error::{Error, Result};
use crate::ideals::{is_projectively_empty, VarietySpec};
use crate::polyring::HomPoly;
use crate::qarith::Rat;

/// Attempt budget for [`replace_hypersurfaces`].
pub const MAX_ATTEMPTS: usize = 200;
/// The coefficient bound doubles after this many attempts.
pub const ATTEMPTS_PER_BOUND: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionReport {
    pub n_tested: usize,
    pub holds: bool,
    /// First (lexicographic) index subset whose common zero meets `V`.
    pub witness: Option<Vec<usize>>,
}

fn meets_variety(variety: &VarietySpec, polys: &[&HomPoly]) -> Result<bool> {
    let ideal = variety.ideal().with_generators(polys.iter().copied())?;
    Ok(!is_projectively_empty(&ideal)?)
}

fn check_vars(variety: &VarietySpec, qs: &[HomPoly]) -> Result<()> {
    for q in qs {
        if q.num_vars() != variety.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: variety.num_vars(),
                found: q.num_vars(),
            });
        }
    }
    Ok(())
}

/// Tests every `(N+1)`-subset of `qs` for an empty common zero on `V`.
pub fn check_subgeneral(variety: &VarietySpec, qs: &[HomPoly], n_big: usize) -> Result<PositionReport> {
    check_vars(variety, qs)?;
    if n_big < variety.dim() || qs.len() < n_big + 1 {
        return Err(Error::Invalid(format!(
            "need #polys ≥ N+1 ≥ dim V + 1, got {} polys, N = {n_big}, dim V = {}",
            qs.len(),
            variety.dim()
        )));
    }
    let subsets = index_subsets(qs.len(), n_big + 1);
    let verdicts: Vec<Result<bool>> = subsets
        .par_iter()
        .map(|s| meets_variety(variety, &s.iter().map(|&i| &qs[i]).collect::<Vec<_>>()))
        .collect();
    for (s, verdict) in subsets.into_iter().zip(verdicts) {
        if verdict? {
            return Ok(PositionReport {
                n_tested: n_big,
                holds: false,
                witness: Some(s),
            });
        }
    }
    Ok(PositionReport {
        n_tested: n_big,
        holds: true,
        witness: None,
    })
}

/// `P_0 = Q_0` and `P_t = Σ_{j=1}^{N−n+t} c_{tj} Q_j` for `t = 1..=n`
/// (indices from 0), with `∩ {P_t = 0} ∩ V = ∅` verified.
#[derive(Debug, Clone, PartialEq)]
pub struct ReplacementResult {
    pub polys: Vec<HomPoly>,
    /// `coeffs[t − 1][j − 1] = c_{tj}` for `j = 1..=N−n+t`.
    pub coeffs: Vec<Vec<Rat>>,
    pub attempts: usize,
}

impl ReplacementResult {
    /// Rebuilds each `P_t` from `qs` and the stored coefficients.
    pub fn matches(&self, qs: &[HomPoly]) -> bool {
        if self.polys.first() != qs.first() {
            return false;
        }
        self.coeffs.iter().enumerate().all(|(t, row)| {
            let support: Vec<&HomPoly> = qs[1..=row.len()].iter().collect();
            HomPoly::linear_combination(row, &support)
                .map(|p| p.as_poly() == self.polys[t + 1].as_poly())
                .unwrap_or(false)
        })
    }
}

/// `P_t = Q_{N−n+t}`: the last polynomial each row may use.
fn tail_coeffs(n: usize, n_big: usize) -> Vec<Vec<Rat>> {
    (1..=n)
        .map(|t| {
            let last = n_big - n + t;
            (1..=last)
                .map(|j| if j == last { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect()
}

fn random_coeffs(rng: &mut ChaCha8Rng, n: usize, n_big: usize, bound: i64) -> Vec<Vec<Rat>> {
    (1..=n)
        .map(|t| {
            (1..=n_big - n + t)
                .map(|_| {
                    let mag = rng.random_range(1..=bound);
                    let c = if rng.random_bool(0.5) { mag } else { -mag };
                    Rat::from_integer(BigInt::from(c))
                })
                .collect()
        })
        .collect()
}

/// Seeded search for the triangular combinations. The first candidate is the
/// sparse `P_t = Q_{N−n+t}` (so `P_t = Q_t` when `N = n`); later candidates
/// draw nonzero integers from `[−B, B]` with `B` doubling every
/// [`ATTEMPTS_PER_BOUND`] attempts.
pub fn replace_hypersurfaces(variety: &VarietySpec, qs: &[HomPoly], seed: u64) -> Result<ReplacementResult> {
    check_vars(variety, qs)?;
    let n = variety.dim();
    let Some(first) = qs.first() else {
        return Err(Error::NotInPosition);
    };
    if qs.len() < n + 1 {
        return Err(Error::NotInPosition);
    }
    if qs.iter().any(|q| q.degree() != first.degree()) {
        return Err(Error::Invalid("polynomials must share one degree; normalize first".into()));
    }
    let n_big = qs.len() - 1;
    if meets_variety(variety, &qs.iter().collect::<Vec<_>>())? {
        return Err(Error::NotInPosition);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..MAX_ATTEMPTS {
        let coeffs = if attempt == 0 {
            tail_coeffs(n, n_big)
        } else {
            let bound = 1i64 << (attempt / ATTEMPTS_PER_BOUND);
            random_coeffs(&mut rng, n, n_big, bound)
        };
        let mut polys = vec![first.clone()];
        let mut degenerate = false;
        for row in &coeffs {
            let support: Vec<&HomPoly> = qs[1..=row.len()].iter().collect();
            let p = HomPoly::linear_combination(row, &support)?;
            degenerate |= p.is_zero();
            polys.push(p);
        }
        if degenerate {
            continue;
        }
        match meets_variety(variety, &polys.iter().collect::<Vec<_>>()) {
            Ok(false) => {
                return Ok(ReplacementResult {
                    polys,
                    coeffs,
                    attempts: attempt + 1,
                })
            }
            Ok(true) | Err(Error::EmptinessUndecided { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Err(Error::BudgetExhausted { attempts: MAX_ATTEMPTS })
}
