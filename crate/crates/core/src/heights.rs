//! Local norms of points and polynomials, absolute logarithmic heights and
//! Weil functions.
//!
//! Every quantity is first assembled as an exact product of normalized
//! absolute values; the logarithm is taken once, at the end. "All places"
//! always means the finite union of places where some ingredient has norm
//! different from 1, since every other place contributes `log 1 = 0`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{HomPoly, ProjPoint};
use crate::qarith::{ln_rat, norm, relevant_places, Place, PlaceSet, Rat};

/// A logarithmic height together with the exact norm product it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct HeightValue {
    pub log_value: f64,
    pub exact_norm_product: Rat,
}

impl HeightValue {
    pub fn from_product(product: Rat) -> Self {
        HeightValue {
            log_value: ln_rat(&product),
            exact_norm_product: product,
        }
    }
}

impl fmt::Display for HeightValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_real(self.log_value))
    }
}

/// Fixed twelve-digit decimal rendering used for every real printed by the
/// toolkit.
pub fn format_real(x: f64) -> String {
    let s = format!("{x:.12}");
    if s == "-0.000000000000" {
        "0.000000000000".to_string()
    } else {
        s
    }
}

/// Places where some nonzero entry of `values` has norm ≠ 1, plus ∞.
pub fn support_of<'a>(values: impl IntoIterator<Item = &'a Rat>) -> Result<PlaceSet> {
    let mut set = PlaceSet::infinity();
    for x in values {
        if !x.is_zero() {
            set.extend(&relevant_places(x)?);
        }
    }
    Ok(set)
}

fn max_norm<'a>(values: impl IntoIterator<Item = &'a Rat>, v: Place) -> Rat {
    values
        .into_iter()
        .map(|x| norm(x, v))
        .max()
        .unwrap_or_else(Rat::zero)
}

/// `‖x‖_v = max_i ‖x_i‖_v` on the canonical representative.
pub fn point_norm(x: &ProjPoint, v: Place) -> Rat {
    max_norm(&x.coords_rat(), v)
}

/// `‖Q‖_v`, the largest coefficient norm.
pub fn poly_norm(q: &HomPoly, v: Place) -> Rat {
    max_norm(q.coefficients(), v)
}

/// `Σ_v log max_i ‖x_i‖_v` for an arbitrary (not necessarily canonical)
/// coordinate vector.
pub fn height_coords(coords: &[Rat]) -> Result<HeightValue> {
    if coords.iter().all(Zero::is_zero) {
        return Err(Error::ZeroPoint);
    }
    let places = support_of(coords)?;
    let product = places
        .iter()
        .fold(Rat::one(), |acc, &v| acc * max_norm(coords, v));
    Ok(HeightValue::from_product(product))
}

pub fn height_point(x: &ProjPoint) -> HeightValue {
    height_coords(&x.coords_rat()).expect("projective points are nonzero")
}

pub fn height_poly(q: &HomPoly) -> Result<HeightValue> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let places = support_of(q.coefficients())?;
    let product = places
        .iter()
        .fold(Rat::one(), |acc, &v| acc * poly_norm(q, v));
    Ok(HeightValue::from_product(product))
}

/// The ratio `‖x‖_v^d · ‖Q‖_v / ‖Q(x)‖_v` whose logarithm is `λ_{Q,v}(x)`.
pub fn weil_ratio(q: &HomPoly, v: Place, x: &ProjPoint) -> Result<Rat> {
    let value = q.evaluate(x)?;
    if value.is_zero() {
        return Err(Error::PointOnDivisor);
    }
    weil_ratio_with_value(q, v, x, &value)
}

pub(crate) fn weil_ratio_with_value(q: &HomPoly, v: Place, x: &ProjPoint, value: &Rat) -> Result<Rat> {
    let xn = num_traits::pow(point_norm(x, v), q.degree() as usize);
    Ok(xn * poly_norm(q, v) / norm(value, v))
}

/// Weil function `λ_{Q,v}(x)`.
pub fn weil(q: &HomPoly, v: Place, x: &ProjPoint) -> Result<f64> {
    weil_ratio(q, v, x).map(|r| ln_rat(&r))
}

/// Both sides of `Σ_v λ_{Q,v}(x) = d·h(x) + h(Q)`.
#[derive(Debug, Clone)]
pub struct WeilIdentity {
    pub places: PlaceSet,
    pub lhs: HeightValue,
    pub rhs: HeightValue,
}

impl WeilIdentity {
    /// Exact equality of the two norm products.
    pub fn holds(&self) -> bool {
        self.lhs.exact_norm_product == self.rhs.exact_norm_product
    }
}

pub fn global_weil_identity(q: &HomPoly, x: &ProjPoint) -> Result<WeilIdentity> {
    let value = q.evaluate(x)?;
    if value.is_zero() {
        return Err(Error::PointOnDivisor);
    }
    let coords = x.coords_rat();
    let mut places = support_of(&coords)?;
    places.extend(&support_of(q.coefficients())?);
    places.extend(&relevant_places(&value)?);

    let mut lhs = Rat::one();
    let mut x_prod = Rat::one();
    let mut q_prod = Rat::one();
    for &v in places.iter() {
        lhs *= weil_ratio_with_value(q, v, x, &value)?;
        x_prod *= max_norm(&coords, v);
        q_prod *= poly_norm(q, v);
    }
    let rhs = num_traits::pow(x_prod, q.degree() as usize) * q_prod;
    Ok(WeilIdentity {
        places,
        lhs: HeightValue::from_product(lhs),
        rhs: HeightValue::from_product(rhs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::{rat, rat_frac};

    fn pt(s: &str) -> ProjPoint {
        s.parse().unwrap()
    }

    fn hp(s: &str, n: usize) -> HomPoly {
        HomPoly::parse(s, n).unwrap()
    }

    fn two() -> Place {
        Place::prime(2).unwrap()
    }

    #[test]
    fn point_norm_examples() {
        assert_eq!(point_norm(&pt("(1:2:3)"), Place::Infinity), rat(3));
        assert_eq!(point_norm(&pt("(1:2:3)"), two()), rat(1));
        assert_eq!(point_norm(&pt("(4:6)"), two()), rat(1));
    }

    #[test]
    fn height_examples() {
        assert_eq!(height_point(&pt("(1:1)")).log_value, 0.0);
        let h = height_point(&pt("(1:2:3)"));
        assert_eq!(h.exact_norm_product, rat(3));
        assert!((h.log_value - 3f64.ln()).abs() < 1e-15);
        assert_eq!(height_point(&pt("(1/2:1/3)")), height_point(&pt("(3:2)")));
        assert_eq!(height_point(&pt("(1/2:1/3)")).exact_norm_product, rat(3));
        // non-canonical coordinates give the same product
        let h = height_coords(&[rat_frac(1, 2), rat_frac(1, 3)]).unwrap();
        assert_eq!(h.exact_norm_product, rat(3));
    }

    #[test]
    fn poly_height_examples() {
        assert_eq!(height_poly(&hp("x0", 2)).unwrap().exact_norm_product, rat(1));
        assert_eq!(height_poly(&hp("2*x0 + 3*x1", 2)).unwrap().exact_norm_product, rat(3));
        assert_eq!(height_poly(&hp("1/2*x0 + x1", 2)).unwrap().exact_norm_product, rat(2));
        assert_eq!(poly_norm(&hp("1/2*x0 + x1", 2), two()), rat(2));
    }

    #[test]
    fn weil_examples() {
        assert_eq!(weil(&hp("x0", 2), Place::Infinity, &pt("(1:1)")).unwrap(), 0.0);
        let q = hp("x0 - x1", 2);
        assert_eq!(weil_ratio(&q, Place::Infinity, &pt("(2:1)")).unwrap(), rat(2));
        assert_eq!(weil(&q, two(), &pt("(2:1)")).unwrap(), 0.0);
        assert_eq!(weil(&q, two(), &pt("(1:1)")), Err(Error::PointOnDivisor));
    }

    #[test]
    fn global_identity_examples() {
        let id = global_weil_identity(&hp("x0", 2), &pt("(1:1)")).unwrap();
        assert!(id.holds());
        assert_eq!(id.lhs.log_value, 0.0);

        let id = global_weil_identity(&hp("x0 - x1", 2), &pt("(2:1)")).unwrap();
        assert!(id.holds());
        assert_eq!(id.rhs.exact_norm_product, rat(2));

        let id = global_weil_identity(&hp("2*x0 + 3*x1", 2), &pt("(1:5)")).unwrap();
        assert!(id.holds());
        assert_eq!(id.lhs.exact_norm_product, rat(15));
        assert!((id.lhs.log_value - (5f64.ln() + 3f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_real(3f64.ln()), "1.098612288668");
        assert_eq!(format_real(-0.0), "0.000000000000");
    }
}
