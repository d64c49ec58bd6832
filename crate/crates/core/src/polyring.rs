//! Sparse multivariate polynomials over ℚ, homogeneous polynomials with a
//! declared degree, and canonical projective points.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qarith::{parse_rat, Rat};

/// Exponent vector `(i_0, …, i_m)`. Derived `Ord` is lexicographic on the
/// exponents, so `x0 > x1 > …` when compared as monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `a · c` for a weight vector `c`.
    pub fn weight(&self, c: &[Rat]) -> Rat {
        self.0
            .iter()
            .zip(c)
            .filter(|(e, _)| **e > 0)
            .fold(Rat::zero(), |acc, (e, w)| acc + w * Rat::from_integer(BigInt::from(*e)))
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        let mut acc = Rat::one();
        for (e, xi) in self.0.iter().zip(x) {
            if *e > 0 {
                acc *= num_traits::pow(xi.clone(), *e as usize);
            }
        }
        acc
    }

    fn write_with(&self, f: &mut fmt::Formatter<'_>, name: &dyn Fn(usize) -> String) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All degree-`d` monomials in `m + 1` variables, lexicographically
/// descending (`x0^d` first). There are `C(d + m, m)` of them.
pub fn monomials_of_degree(m: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; m + 1];
    fill_monomials(&mut cur, 0, d, &mut out);
    out
}

fn fill_monomials(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(Monomial(cur.clone()));
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill_monomials(cur, i + 1, left - e, out);
    }
    cur[i] = 0;
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    num_vars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(num_vars: usize) -> Self {
        Poly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Rat) -> Self {
        Self::term(Monomial::one(num_vars), c)
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        Self::term(Monomial::var(num_vars, i), Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut p = Poly::zero(m.num_vars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(num_vars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Poly::zero(num_vars);
        for (m, c) in terms {
            assert_eq!(m.num_vars(), num_vars);
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` if every term has degree `d`; the zero polynomial gives `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.num_vars);
        }
        Poly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> Poly {
        Poly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(self.num_vars, Rat::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &[Rat]) -> Result<Rat> {
        if x.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: x.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .fold(Rat::zero(), |acc, (m, c)| acc + c * m.eval(x)))
    }

    /// Substitutes polynomial `subs[i]` for `x_i`.
    pub fn compose(&self, subs: &[Poly]) -> Result<Poly> {
        if subs.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: subs.len(),
            });
        }
        let target = subs.first().map_or(0, Poly::num_vars);
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (e, s) in m.exponents().iter().zip(subs) {
                if *e > 0 {
                    t = &t * &s.pow(*e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Re-embeds into `num_vars` variables, sending `x_i` to `x_{map[i]}`.
    pub fn remap(&self, num_vars: usize, map: &[usize]) -> Poly {
        let mut out = Poly::zero(num_vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; num_vars];
            for (i, &k) in m.exponents().iter().enumerate() {
                e[map[i]] += k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Scales to coprime integer coefficients with a positive coefficient on
    /// the lexicographically largest monomial.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut s = Rat::new(den, num);
        if self.terms.values().next_back().unwrap().is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    pub fn display_with<'a>(&'a self, name: &'a dyn Fn(usize) -> String) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, name }
    }

    pub fn parse(s: &str, num_vars: usize) -> Result<Poly> {
        parse_poly(s, Some(num_vars))
    }
}

pub fn x_name(i: usize) -> String {
    format!("x{i}")
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    name: &'a dyn Fn(usize) -> String,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_const = m.degree() == 0;
            if is_const {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                m.write_with(f, self.name)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&x_name).fmt(f)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.num_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// Homogeneous polynomial with a declared degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomPoly {
    poly: Poly,
    degree: u32,
}

impl HomPoly {
    /// Wraps a nonzero homogeneous polynomial, reading the degree off its terms.
    pub fn new(poly: Poly) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let degree = poly.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        Ok(HomPoly { poly, degree })
    }

    /// Accepts the zero polynomial too, as an element of degree `degree`.
    pub fn with_degree(poly: Poly, degree: u32) -> Result<Self> {
        if poly.terms.keys().any(|m| m.degree() != degree) {
            return Err(Error::NotHomogeneous);
        }
        Ok(HomPoly { poly, degree })
    }

    pub fn parse(s: &str, num_vars: usize) -> Result<Self> {
        HomPoly::new(Poly::parse(s, num_vars)?)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.poly.num_vars
    }

    pub fn as_poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &Rat> {
        self.poly.terms.values()
    }

    pub fn evaluate(&self, x: &ProjPoint) -> Result<Rat> {
        self.poly.eval(&x.coords_rat())
    }

    pub fn power(&self, k: u32) -> HomPoly {
        assert!(k >= 1, "power requires k >= 1");
        HomPoly {
            poly: self.poly.pow(k),
            degree: self.degree * k,
        }
    }

    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        HomPoly {
            poly: &self.poly * &other.poly,
            degree: self.degree + other.degree,
        }
    }

    /// `Σ c_i · Q_i` over polynomials of one common degree.
    pub fn linear_combination(coeffs: &[Rat], polys: &[&HomPoly]) -> Result<HomPoly> {
        let first = polys.first().ok_or(Error::Invalid("empty combination".into()))?;
        let mut acc = Poly::zero(first.num_vars());
        for (c, q) in coeffs.iter().zip(polys) {
            if q.degree != first.degree {
                return Err(Error::Invalid("combination of different degrees".into()));
            }
            acc = &acc + &q.poly.scale(c);
        }
        HomPoly::with_degree(acc, first.degree)
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// `Q^k` for `k ≥ 1`.
pub fn power(q: &HomPoly, k: u32) -> HomPoly {
    q.power(k)
}

/// Raises each `Q_i` to `d / d_i` where `d = lcm(d_i)`.
pub fn normalize_degrees(qs: &[HomPoly]) -> Result<(Vec<HomPoly>, u32)> {
    if qs.iter().any(HomPoly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let d = qs.iter().fold(1u32, |acc, q| acc.lcm(&q.degree.max(1)));
    let out = qs
        .iter()
        .map(|q| if q.degree == 0 || q.degree == d { q.clone() } else { q.power(d / q.degree) })
        .collect();
    Ok((out, d))
}

/// A point of ℙ^m(ℚ) stored as coprime integers with first nonzero
/// coordinate positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: Vec<BigInt>,
}

impl ProjPoint {
    pub fn new(coords: &[Rat]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroPoint);
        }
        let den = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coords
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::from_integers(ints))
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        if coords.iter().all(|c| *c == 0) {
            return Err(Error::ZeroPoint);
        }
        Ok(Self::from_integers(coords.iter().map(|&c| BigInt::from(c)).collect()))
    }

    fn from_integers(mut ints: Vec<BigInt>) -> Self {
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let lead_neg = ints.iter().find(|c| !c.is_zero()).unwrap().is_negative();
        for c in &mut ints {
            *c = &*c / &g;
            if lead_neg {
                *c = -&*c;
            }
        }
        ProjPoint { coords: ints }
    }

    /// Builds from integers already known to be canonical.
    pub(crate) fn from_canonical(coords: Vec<BigInt>) -> Self {
        ProjPoint { coords }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn coords_rat(&self) -> Vec<Rat> {
        self.coords.iter().map(|c| Rat::from_integer(c.clone())).collect()
    }

    pub fn num_vars(&self) -> usize {
        self.coords.len()
    }

    pub fn max_abs(&self) -> BigInt {
        self.coords.iter().map(|c| c.abs()).max().unwrap()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

impl FromStr for ProjPoint {
    type Err = Error;

    /// `"(a0 : a1 : … : am)"` with rational entries.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("point must be parenthesised: `{s}`")))?;
        let coords = inner.split(':').map(parse_rat).collect::<Result<Vec<_>>>()?;
        ProjPoint::new(&coords)
    }
}

/// Parses the grammar `[±] term (± term)*` with `term = factor (* factor)*`
/// and `factor = rational | x<i>[^e]`. With `num_vars = None` the arity is
/// one more than the largest variable index seen.
pub fn parse_poly(s: &str, num_vars: Option<usize>) -> Result<Poly> {
    let toks = tokenize(s)?;
    let max_var = toks
        .iter()
        .filter_map(|t| if let Tok::Var(i) = t { Some(*i) } else { None })
        .max();
    let n = match (num_vars, max_var) {
        (Some(n), Some(v)) if v >= n => {
            return Err(Error::Parse(format!("variable x{v} out of range for {n} variables")))
        }
        (Some(n), _) => n,
        (None, Some(v)) => v + 1,
        (None, None) => 1,
    };
    let mut out = Poly::zero(n);
    let mut i = 0;
    let mut first = true;
    while i < toks.len() {
        let mut sign = Rat::one();
        match toks[i] {
            Tok::Plus => i += 1,
            Tok::Minus => {
                sign = -sign;
                i += 1;
            }
            _ if first => {}
            _ => return Err(Error::Parse(format!("expected + or - in `{s}`"))),
        }
        first = false;
        let mut coef = sign;
        let mut exps = vec![0u32; n];
        let mut expect_factor = true;
        while i < toks.len() {
            match &toks[i] {
                Tok::Num(r) if expect_factor => coef *= r,
                Tok::Var(v) if expect_factor => {
                    let mut e = 1;
                    if let Some(Tok::Caret) = toks.get(i + 1) {
                        match toks.get(i + 2) {
                            Some(Tok::Num(r)) if r.is_integer() && !r.is_negative() => {
                                e = r
                                    .to_integer()
                                    .try_into()
                                    .map_err(|_| Error::Parse("exponent too large".into()))?;
                                i += 2;
                            }
                            _ => return Err(Error::Parse(format!("bad exponent in `{s}`"))),
                        }
                    }
                    exps[*v] += e;
                }
                Tok::Star if !expect_factor => {}
                Tok::Plus | Tok::Minus if !expect_factor => break,
                _ => return Err(Error::Parse(format!("unexpected token in `{s}`"))),
            }
            expect_factor = !expect_factor;
            i += 1;
        }
        if expect_factor {
            return Err(Error::Parse(format!("dangling operator in `{s}`")));
        }
        out.add_term(Monomial(exps), coef);
    }
    if first {
        return Err(Error::Parse("empty polynomial".into()));
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Tok {
    Num(Rat),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>()
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            'x' => {
                i += 1;
                let d = digits(&mut i);
                let v = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("variable without index in `{s}`")))?;
                out.push(Tok::Var(v));
            }
            c if c.is_ascii_digit() => {
                let num = digits(&mut i);
                let mut text = num;
                if i < chars.len() && chars[i] == '/' {
                    i += 1;
                    let den = digits(&mut i);
                    text = format!("{text}/{den}");
                }
                out.push(Tok::Num(parse_rat(&text)?));
            }
            _ => return Err(Error::Parse(format!("unexpected `{c}` in `{s}`"))),
        }
    }
    Ok(out)
}
