//! Exact rationals, the places of ℚ and their normalized absolute values.
//!
//! Over ℚ the local degree `n_v` is 1 at every place, so `‖x‖_v = |x|_v`:
//! the archimedean place gives the usual absolute value and the place above
//! `p` gives `p^(-ord_p x)`. Every norm is returned as an exact rational;
//! logarithms are only taken by the height layer.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"a/b"` or `"a"` in base 10.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let den = BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(num, den))
}

/// Natural logarithm of a positive rational in double precision.
pub fn ln_rat(x: &Rat) -> f64 {
    debug_assert!(x.is_positive());
    if let Some(f) = x.to_f64() {
        if f.is_finite() && f > 0.0 {
            return f.ln();
        }
    }
    ln_big(x.numer().magnitude()) - ln_big(x.denom().magnitude())
}

fn ln_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits < 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// A rational prime, checked on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// A place of ℚ. `Infinity` sorts before every finite place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinity,
    Prime(Prime),
}

impl Place {
    pub fn prime(p: u64) -> Result<Self> {
        Prime::new(p).map(Place::Prime)
    }

    pub fn is_archimedean(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    /// `n_v = [k_v : ℚ_v] / [k : ℚ]`, identically 1 for k = ℚ.
    pub const fn local_degree(&self) -> u32 {
        1
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Prime(p) => write!(f, "p={}", p.0),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    /// Accepts `inf`, `p=<prime>` or a bare prime.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Place::Infinity);
        }
        let digits = s.strip_prefix("p=").unwrap_or(s);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad place `{s}`")))?;
        Place::prime(p)
    }
}

/// A finite, ordered, duplicate-free set of places.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PlaceSet {
    places: BTreeSet<Place>,
}

impl PlaceSet {
    pub fn new(places: impl IntoIterator<Item = Place>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in places {
            if !set.insert(p) {
                return Err(Error::Invalid(format!("duplicate place {p}")));
            }
        }
        Ok(PlaceSet { places: set })
    }

    pub fn infinity() -> Self {
        PlaceSet {
            places: BTreeSet::from([Place::Infinity]),
        }
    }

    /// `{∞, 2, 3, 5}`.
    pub fn default_s() -> Self {
        let mut s = Self::infinity();
        for p in [2, 3, 5] {
            s.places.insert(Place::Prime(Prime(p)));
        }
        s
    }

    /// Parses a comma separated list such as `inf,2,3`.
    pub fn parse_list(s: &str) -> Result<Self> {
        let places = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(Place::from_str)
            .collect::<Result<Vec<_>>>()?;
        Self::new(places)
    }

    pub fn contains(&self, v: &Place) -> bool {
        self.places.contains(v)
    }

    pub fn contains_infinity(&self) -> bool {
        self.contains(&Place::Infinity)
    }

    pub fn insert(&mut self, v: Place) -> bool {
        self.places.insert(v)
    }

    pub fn extend(&mut self, other: &PlaceSet) {
        self.places.extend(other.places.iter().copied());
    }

    pub fn iter(&self) -> impl Iterator<Item = &Place> {
        self.places.iter()
    }

    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }
}

impl fmt::Display for PlaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.places.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// p-adic order of a nonzero integer.
pub fn ord_p_int(n: &BigInt, p: u64) -> u64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// `ord_p(x)` for nonzero rational `x`.
pub fn ord_p(x: &Rat, p: Prime) -> i64 {
    ord_p_int(x.numer(), p.0) as i64 - ord_p_int(x.denom(), p.0) as i64
}

/// Normalized absolute value `‖x‖_v`, exact.
pub fn norm(x: &Rat, v: Place) -> Rat {
    if x.is_zero() {
        return Rat::zero();
    }
    match v {
        Place::Infinity => x.abs(),
        Place::Prime(p) => {
            let e = ord_p(x, p);
            let base = BigInt::from(p.0);
            let pow = num_traits::pow(base, e.unsigned_abs() as usize);
            if e >= 0 {
                Rat::new(BigInt::one(), pow)
            } else {
                Rat::from_integer(pow)
            }
        }
    }
}

/// `{∞} ∪ {p : p | numerator·denominator}`; every other place has norm 1.
pub fn relevant_places(x: &Rat) -> Result<PlaceSet> {
    if x.is_zero() {
        return Err(Error::ZeroSupport);
    }
    let mut set = PlaceSet::infinity();
    for n in [x.numer(), x.denom()] {
        for p in prime_factors(n.magnitude())? {
            set.insert(Place::Prime(Prime(p)));
        }
    }
    Ok(set)
}

/// `∏_{v ∈ relevant_places(x)} ‖x‖_v`, which the product formula forces to 1.
pub fn product_formula_check(x: &Rat) -> Result<Rat> {
    let places = relevant_places(x)?;
    Ok(places.iter().fold(Rat::one(), |acc, &v| acc * norm(x, v)))
}

const TRIAL_LIMIT: u64 = 1 << 16;
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigUint::from(n))
}

/// Trial division up to 2^16, then Miller–Rabin with the first thirteen
/// prime bases (deterministic below 3.3·10^24).
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        let mut d = 2u64;
        while d < TRIAL_LIMIT && d * d <= small {
            if small % d == 0 {
                return false;
            }
            d += 1;
        }
        if d * d > small {
            return true;
        }
    } else {
        for d in 2..TRIAL_LIMIT {
            if (n % d).is_zero() {
                return false;
            }
        }
    }
    miller_rabin(n)
}

fn miller_rabin(n: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in &MR_BASES {
        let a = BigUint::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(n: &BigUint) -> Result<Vec<u64>> {
    let mut out = BTreeSet::new();
    let mut n = n.clone();
    if n.is_zero() {
        return Err(Error::ZeroSupport);
    }
    let mut d = 2u64;
    while d < TRIAL_LIMIT {
        if BigUint::from(d) * BigUint::from(d) > n {
            break;
        }
        if (&n % d).is_zero() {
            out.insert(d);
            while (&n % d).is_zero() {
                n /= d;
            }
        }
        d += 1;
    }
    split_cofactor(n, &mut out)?;
    Ok(out.into_iter().collect())
}

fn split_cofactor(n: BigUint, out: &mut BTreeSet<u64>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if is_prime(&n) {
        out.insert(n.to_u64().ok_or(Error::PrimeTooLarge)?);
        return Ok(());
    }
    let f = pollard_rho(&n);
    let g = &n / &f;
    split_cofactor(f, out)?;
    split_cofactor(g, out)
}

/// Brent's variant; `n` is composite and free of small factors.
fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

/// `log max(1, ‖x‖_v)`.
pub fn log_plus(x: &Rat, v: Place) -> f64 {
    let nx = norm(x, v);
    if nx > Rat::one() {
        ln_rat(&nx)
    } else {
        0.0
    }
}

/// Height of a scalar, `Σ_v log⁺ ‖x‖_v`. Zero has height 0.
pub fn scalar_height(x: &Rat) -> f64 {
    match relevant_places(x) {
        Ok(places) => places.iter().map(|&v| log_plus(x, v)).sum(),
        Err(_) => 0.0,
    }
}
