//! Empirical verification of the subspace-type inequality on rational points
//! of bounded height.
//!
//! For `x` off every `Q_j`, the left side is
//! `Σ_{v∈S} Σ_j λ_{Q_j,v}(x) / deg Q_j` and the right side is
//! `(coefficient + ε) · h(x)`, the coefficient depending on [`BoundMode`].
//! Points where the inequality fails are reported, never certified: the
//! exceptional set is ineffective, so the harness only checks that the
//! violators stop appearing as the height bound grows.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::heights::{format_real, point_norm, poly_norm, weil};
use crate::ideals::VarietySpec;
use crate::polyring::{normalize_degrees, HomPoly, ProjPoint};
use crate::position::{check_subgeneral, replace_hypersurfaces, ReplacementResult};
use crate::qarith::{ln_rat, norm, Place, PlaceSet, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundMode {
    /// `(N − n + 1)(n + 1)`
    Main,
    /// `n + 1`
    TheoremB,
    /// `2N − n + 1`, stated for linear forms only
    TheoremC,
    /// `n + 1`
    TheoremD,
    /// `N(n + 1)`
    TheoremE,
}

impl BoundMode {
    pub const ALL: [BoundMode; 5] = [
        BoundMode::Main,
        BoundMode::TheoremB,
        BoundMode::TheoremC,
        BoundMode::TheoremD,
        BoundMode::TheoremE,
    ];

    pub fn coefficient(self, n_big: usize, n: usize) -> u64 {
        let (nb, n) = (n_big as u64, n as u64);
        match self {
            BoundMode::Main => (nb - n + 1) * (n + 1),
            BoundMode::TheoremB | BoundMode::TheoremD => n + 1,
            BoundMode::TheoremC => 2 * nb - n + 1,
            BoundMode::TheoremE => nb * (n + 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundMode::Main => "main",
            BoundMode::TheoremB => "theoremB",
            BoundMode::TheoremC => "theoremC",
            BoundMode::TheoremD => "theoremD",
            BoundMode::TheoremE => "theoremE",
        }
    }
}

impl fmt::Display for BoundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        let key = key.strip_prefix("theorem").unwrap_or(&key);
        Ok(match key {
            "main" => BoundMode::Main,
            "b" => BoundMode::TheoremB,
            "c" => BoundMode::TheoremC,
            "d" => BoundMode::TheoremD,
            "e" => BoundMode::TheoremE,
            _ => return Err(Error::Parse(format!("unknown bound mode {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub variety: VarietySpec,
    pub polys: Vec<HomPoly>,
    pub places: PlaceSet,
    pub n_big: usize,
    pub epsilon: Rat,
    pub height_bound: u64,
    pub mode: BoundMode,
    /// Seed for the replacement search used by the diagnostics.
    pub seed: u64,
}

impl ExperimentConfig {
    /// Checks `ε > 0`, `∞ ∈ S`, `H ≥ 1` and `N`-subgeneral position.
    pub fn validate(&self) -> Result<()> {
        if !self.epsilon.is_positive() {
            return Err(Error::Invalid("epsilon must be positive".into()));
        }
        if !self.places.contains_infinity() {
            return Err(Error::Invalid("the place set must contain inf".into()));
        }
        if self.height_bound == 0 {
            return Err(Error::Invalid("height bound must be at least 1".into()));
        }
        if !check_subgeneral(&self.variety, &self.polys, self.n_big)?.holds {
            return Err(Error::NotInPosition);
        }
        Ok(())
    }

    pub fn coefficient(&self) -> u64 {
        self.mode.coefficient(self.n_big, self.variety.dim())
    }
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &c| g.gcd(&c))
}

/// Every point of `V(ℚ)` with coprime integer coordinates bounded by `H` in
/// absolute value, canonical and in lexicographic order.
pub fn enumerate_points(variety: &VarietySpec, height_bound: u64) -> Vec<ProjPoint> {
    let k = variety.num_vars();
    let h = height_bound as i64;
    let gens: Vec<&HomPoly> = variety.ideal().generators().iter().collect();
    // Fix the position and value of the leading (positive) coordinate, then
    // run over the tail.
    let heads: Vec<(usize, i64)> = (0..k).flat_map(|i| (1..=h).map(move |a| (i, a))).collect();
    let mut points: Vec<ProjPoint> = heads
        .par_iter()
        .flat_map_iter(|&(lead, a)| {
            let tail = k - lead - 1;
            let span = (2 * h + 1) as u64;
            let total = span.pow(tail as u32);
            let gens = &gens;
            (0..total).filter_map(move |mut idx| {
                let mut coords = vec![0i64; k];
                coords[lead] = a;
                for c in coords[lead + 1..].iter_mut().rev() {
                    *c = (idx % span) as i64 - h;
                    idx /= span;
                }
                if gcd_all(&coords) != 1 {
                    return None;
                }
                let x: Vec<Rat> = coords.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect();
                let on_v = gens
                    .iter()
                    .all(|g| g.as_poly().eval(&x).map(|y| y.is_zero()).unwrap_or(false));
                on_v.then(|| ProjPoint::from_canonical(coords.iter().map(|&c| BigInt::from(c)).collect()))
            })
        })
        .collect();
    points.sort();
    points
}

/// `h(x) = log max |x_i|` for coprime integer coordinates.
pub fn point_height(x: &ProjPoint) -> f64 {
    ln_rat(&Rat::from_integer(x.max_abs()))
}

/// Indices ordered by `‖Q_i(x)‖_v`, ties by index.
pub fn sort_permutation(qs: &[HomPoly], v: Place, x: &ProjPoint) -> Result<Vec<usize>> {
    let values: Vec<Rat> = qs
        .iter()
        .map(|q| q.evaluate(x).map(|y| norm(&y, v)))
        .collect::<Result<_>>()?;
    let mut perm: Vec<usize> = (0..qs.len()).collect();
    perm.sort_by(|&a, &b| values[a].cmp(&values[b]));
    Ok(perm)
}

/// `c_j = λ_{P_j,v}(x)` for the realized permutation.
pub fn weight_vector(ps: &[HomPoly], v: Place, x: &ProjPoint) -> Result<Vec<f64>> {
    ps.iter().map(|p| weil(p, v, x)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ineq32 {
    /// `log ∏_i ‖x‖_v^d / ‖Q_i(x)‖_v`
    pub lhs: f64,
    /// `(N − n + 1) log ‖x‖_v^{(n+1)d} / ∏_t ‖P_t(x)‖_v`
    pub main_term: f64,
    pub difference: f64,
}

/// Both sides of the per-place chain inequality at `x`, with `ps` built from
/// the `N + 1` polynomials of smallest `‖Q(x)‖_v`.
pub fn check_ineq_3_2(qs: &[HomPoly], ps: &ReplacementResult, n_big: usize, v: Place, x: &ProjPoint) -> Result<Ineq32> {
    let d = qs.first().ok_or_else(|| Error::Invalid("no polynomials".into()))?.degree() as usize;
    let n = ps.polys.len() - 1;
    let xn = point_norm(x, v);
    let xd = num_traits::pow(xn.clone(), d);
    let mut lhs = Rat::one();
    for q in qs {
        let y = q.evaluate(x)?;
        if y.is_zero() {
            return Err(Error::PointOnDivisor);
        }
        lhs *= &xd / norm(&y, v);
    }
    let mut chain = num_traits::pow(xn, (n + 1) * d);
    for p in &ps.polys {
        let y = p.evaluate(x)?;
        if y.is_zero() {
            return Err(Error::PointOnDivisor);
        }
        chain /= norm(&y, v);
    }
    let lhs = ln_rat(&lhs);
    let main_term = (n_big - n + 1) as f64 * ln_rat(&chain);
    Ok(Ineq32 {
        lhs,
        main_term,
        difference: lhs - main_term,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ineq32Scan {
    pub evaluated: usize,
    /// Points on some `Q_i` or some `P_t`.
    pub skipped: usize,
    pub max_difference: f64,
    pub argmax: Option<ProjPoint>,
    /// `(H, max difference over points with max |x_i| ≤ H)` for `H = 1, 2, …`.
    pub running_max: Vec<(u64, f64)>,
}

/// Evaluates [`check_ineq_3_2`] over `points`, building one replacement per
/// distinct sorted prefix (all with the same seed).
pub fn ineq_3_2_scan(
    variety: &VarietySpec,
    qs: &[HomPoly],
    n_big: usize,
    v: Place,
    points: &[ProjPoint],
    seed: u64,
) -> Result<Ineq32Scan> {
    let (qs, _) = normalize_degrees(qs)?;
    let prefixes: Vec<Option<Vec<usize>>> = points
        .par_iter()
        .map(|x| {
            let on_divisor = qs.iter().any(|q| q.evaluate(x).map(|y| y.is_zero()).unwrap_or(true));
            if on_divisor {
                return Ok(None);
            }
            let mut perm = sort_permutation(&qs, v, x)?;
            perm.truncate(n_big + 1);
            Ok(Some(perm))
        })
        .collect::<Result<_>>()?;
    let mut cache: BTreeMap<Vec<usize>, ReplacementResult> = BTreeMap::new();
    for key in prefixes.iter().flatten() {
        if !cache.contains_key(key) {
            let chosen: Vec<HomPoly> = key.iter().map(|&i| qs[i].clone()).collect();
            cache.insert(key.clone(), replace_hypersurfaces(variety, &chosen, seed)?);
        }
    }
    let values: Vec<Option<f64>> = points
        .par_iter()
        .zip(&prefixes)
        .map(|(x, key)| {
            let Some(key) = key else { return Ok(None) };
            match check_ineq_3_2(&qs, &cache[key], n_big, v, x) {
                Ok(r) => Ok(Some(r.difference)),
                Err(Error::PointOnDivisor) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;

    let top = points.iter().map(|x| x.max_abs().to_u64().unwrap_or(u64::MAX)).max().unwrap_or(0);
    let mut by_height = vec![f64::NEG_INFINITY; top as usize + 1];
    let mut scan = Ineq32Scan {
        evaluated: 0,
        skipped: 0,
        max_difference: f64::NEG_INFINITY,
        argmax: None,
        running_max: Vec::new(),
    };
    for (x, val) in points.iter().zip(values) {
        let Some(val) = val else {
            scan.skipped += 1;
            continue;
        };
        scan.evaluated += 1;
        let hx = x.max_abs().to_usize().unwrap_or(usize::MAX).min(top as usize);
        by_height[hx] = by_height[hx].max(val);
        if val > scan.max_difference {
            scan.max_difference = val;
            scan.argmax = Some(x.clone());
        }
    }
    let mut running = f64::NEG_INFINITY;
    for (hx, m) in by_height.into_iter().enumerate().skip(1) {
        running = running.max(m);
        scan.running_max.push((hx as u64, running));
    }
    Ok(scan)
}

/// A point with its height and, unless it lies on some `Q_j`, the left side.
#[derive(Debug, Clone, PartialEq)]
pub struct PointEval {
    pub point: ProjPoint,
    pub h: f64,
    pub lhs: Option<f64>,
}

fn products_with_norms(
    polys: &[HomPoly],
    places: &[Place],
    q_norms: &[Vec<Rat>],
    coords: &[Rat],
) -> Result<Option<Vec<Rat>>> {
    let x_norms: Vec<Rat> = places
        .iter()
        .map(|&v| coords.iter().map(|c| norm(c, v)).max().unwrap_or_else(Rat::zero))
        .collect();
    let mut out = Vec::with_capacity(polys.len());
    for (q, qn) in polys.iter().zip(q_norms) {
        let y = q.as_poly().eval(coords)?;
        if y.is_zero() {
            return Ok(None);
        }
        let mut r = Rat::one();
        for ((&v, xn), qv) in places.iter().zip(&x_norms).zip(qn) {
            r *= num_traits::pow(xn.clone(), q.degree() as usize) * qv / norm(&y, v);
        }
        out.push(r);
    }
    Ok(Some(out))
}

fn norms_table(polys: &[HomPoly], places: &[Place]) -> Vec<Vec<Rat>> {
    polys
        .iter()
        .map(|q| places.iter().map(|&v| poly_norm(q, v)).collect())
        .collect()
}

/// `R_j = ∏_{v∈S} ‖x‖_v^{d_j} ‖Q_j‖_v / ‖Q_j(x)‖_v` for each `j`, so that
/// `Σ_{v∈S} λ_{Q_j,v}(x) = log R_j`; `None` when `x` lies on some `Q_j`.
/// Any coordinate vector of the point may be passed.
pub fn weil_products(polys: &[HomPoly], places: &PlaceSet, coords: &[Rat]) -> Result<Option<Vec<Rat>>> {
    let places: Vec<Place> = places.iter().copied().collect();
    products_with_norms(polys, &places, &norms_table(polys, &places), coords)
}

/// `Σ_j log R_j / deg Q_j`: one logarithm per polynomial.
pub fn lhs_from_products(polys: &[HomPoly], products: &[Rat]) -> f64 {
    polys
        .iter()
        .zip(products)
        .map(|(q, r)| ln_rat(r) / f64::from(q.degree()))
        .sum()
}

/// `Σ_{v∈S} Σ_j λ_{Q_j,v}(x) / deg Q_j` for every enumerated point, in
/// lexicographic point order.
pub fn evaluate_points(cfg: &ExperimentConfig) -> Result<Vec<PointEval>> {
    cfg.validate()?;
    let places: Vec<Place> = cfg.places.iter().copied().collect();
    let q_norms = norms_table(&cfg.polys, &places);
    let points = enumerate_points(&cfg.variety, cfg.height_bound);
    points
        .into_par_iter()
        .map(|x| {
            let h = point_height(&x);
            let lhs = products_with_norms(&cfg.polys, &places, &q_norms, &x.coords_rat())?
                .map(|r| lhs_from_products(&cfg.polys, &r));
            Ok(PointEval { point: x, h, lhs })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub point: ProjPoint,
    pub h: f64,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub margin: Option<f64>,
    pub excluded: bool,
}

impl VerificationRecord {
    pub fn is_violation(&self) -> bool {
        self.margin.is_some_and(|m| m < 0.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub evaluated: usize,
    pub excluded: usize,
    pub violations: usize,
    pub violators: Vec<ProjPoint>,
    /// Largest `lhs / h(x)` over evaluated points with `h(x) > 0`.
    pub max_ratio: Option<f64>,
    /// The same maximum restricted to non-violators.
    pub max_ratio_non_violators: Option<f64>,
    /// No violator has `max |x_i|` beyond this value (1 when there are none).
    pub stable_from_h: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub mode: BoundMode,
    pub coefficient: u64,
    pub epsilon: Rat,
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn max_opt(acc: Option<f64>, x: f64) -> Option<f64> {
    Some(acc.map_or(x, |a| a.max(x)))
}

/// Turns evaluated points into records for one bound coefficient.
pub fn build_report(evals: &[PointEval], mode: BoundMode, coefficient: u64, epsilon: &Rat) -> Report {
    let factor = coefficient as f64 + rat_to_f64(epsilon);
    let mut summary = Summary {
        evaluated: 0,
        excluded: 0,
        violations: 0,
        violators: Vec::new(),
        max_ratio: None,
        max_ratio_non_violators: None,
        stable_from_h: 1,
    };
    let records = evals
        .iter()
        .map(|e| {
            let Some(lhs) = e.lhs else {
                summary.excluded += 1;
                return VerificationRecord {
                    point: e.point.clone(),
                    h: e.h,
                    lhs: None,
                    rhs: None,
                    margin: None,
                    excluded: true,
                };
            };
            summary.evaluated += 1;
            let rhs = factor * e.h;
            let margin = rhs - lhs;
            let violation = margin < 0.0;
            if e.h > 0.0 {
                let ratio = lhs / e.h;
                summary.max_ratio = max_opt(summary.max_ratio, ratio);
                if !violation {
                    summary.max_ratio_non_violators = max_opt(summary.max_ratio_non_violators, ratio);
                }
            }
            if violation {
                summary.violations += 1;
                let hx = e.point.max_abs().to_u64().unwrap_or(u64::MAX);
                summary.stable_from_h = summary.stable_from_h.max(hx);
                summary.violators.push(e.point.clone());
            }
            VerificationRecord {
                point: e.point.clone(),
                h: e.h,
                lhs: Some(lhs),
                rhs: Some(rhs),
                margin: Some(margin),
                excluded: false,
            }
        })
        .collect();
    Report {
        mode,
        coefficient,
        epsilon: epsilon.clone(),
        records,
        summary,
    }
}

pub fn main_theorem_report(cfg: &ExperimentConfig) -> Result<Report> {
    let evals = evaluate_points(cfg)?;
    Ok(build_report(&evals, cfg.mode, cfg.coefficient(), &cfg.epsilon))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub point: ProjPoint,
    pub h: f64,
    pub lhs: Option<f64>,
    /// Margins in [`BoundMode::ALL`] order.
    pub margins: Vec<Option<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub coefficients: Vec<(BoundMode, u64)>,
    pub rows: Vec<ComparisonRow>,
    /// Main-mode margin ≤ theoremE-mode margin at every evaluated point.
    pub main_le_theorem_e: bool,
    pub violations: Vec<(BoundMode, usize)>,
}

/// Margins under all five bound modes side by side.
pub fn compare_bounds(cfg: &ExperimentConfig) -> Result<Comparison> {
    let evals = evaluate_points(cfg)?;
    let n = cfg.variety.dim();
    let coefficients: Vec<(BoundMode, u64)> =
        BoundMode::ALL.iter().map(|&m| (m, m.coefficient(cfg.n_big, n))).collect();
    let eps = rat_to_f64(&cfg.epsilon);
    let rows: Vec<ComparisonRow> = evals
        .into_iter()
        .map(|e| ComparisonRow {
            margins: coefficients
                .iter()
                .map(|&(_, c)| e.lhs.map(|l| (c as f64 + eps) * e.h - l))
                .collect(),
            point: e.point,
            h: e.h,
            lhs: e.lhs,
        })
        .collect();
    let main = BoundMode::ALL.iter().position(|&m| m == BoundMode::Main).unwrap();
    let e_idx = BoundMode::ALL.iter().position(|&m| m == BoundMode::TheoremE).unwrap();
    let main_le_theorem_e = rows.iter().all(|r| match (r.margins[main], r.margins[e_idx]) {
        (Some(a), Some(b)) => a <= b,
        _ => true,
    });
    let violations = coefficients
        .iter()
        .enumerate()
        .map(|(i, &(m, _))| (m, rows.iter().filter(|r| r.margins[i].is_some_and(|x| x < 0.0)).count()))
        .collect();
    Ok(Comparison {
        coefficients,
        rows,
        main_le_theorem_e,
        violations,
    })
}

fn opt_real(x: Option<f64>) -> String {
    x.map(format_real).unwrap_or_default()
}

pub const CSV_HEADER: &str = "point,h,lhs,mode,coefficient,rhs,margin,excluded";

pub fn write_csv(report: &Report, out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in &report.records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.point,
            format_real(r.h),
            opt_real(r.lhs),
            report.mode,
            report.coefficient,
            opt_real(r.rhs),
            opt_real(r.margin),
            r.excluded
        )?;
    }
    Ok(())
}

pub fn csv_string(report: &Report) -> String {
    let mut buf = Vec::new();
    write_csv(report, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("CSV is UTF-8")
}

pub fn summary_json(report: &Report) -> serde_json::Value {
    let s = &report.summary;
    json!({
        "violations": s.violations,
        "max_ratio": s.max_ratio,
        "stable_from_H": s.stable_from_h,
        "mode": report.mode.name(),
        "coefficient": report.coefficient,
        "epsilon": report.epsilon.to_string(),
        "evaluated": s.evaluated,
        "excluded": s.excluded,
        "max_ratio_non_violators": s.max_ratio_non_violators,
        "violators": s.violators.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

pub fn write_comparison_csv(cmp: &Comparison, out: &mut impl Write) -> io::Result<()> {
    let modes: Vec<&str> = cmp.coefficients.iter().map(|(m, _)| m.name()).collect();
    writeln!(out, "point,h,lhs,{}", modes.join(","))?;
    for r in &cmp.rows {
        let margins: Vec<String> = r.margins.iter().map(|m| opt_real(*m)).collect();
        writeln!(out, "{},{},{},{}", r.point, format_real(r.h), opt_real(r.lhs), margins.join(","))?;
    }
    Ok(())
}
