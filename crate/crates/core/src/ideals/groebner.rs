//! Buchberger's algorithm with the sugar selection strategy and both of
//! Buchberger's criteria.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;
use crate::polyring::{Monomial, Poly};
use crate::qarith::Rat;

/// Terms sorted ascending under the active order, leading term last.
type Terms = Vec<(Monomial, Rat)>;

#[derive(Debug, Clone)]
struct Element {
    terms: Terms,
    sugar: u32,
}

impl Element {
    fn lm(&self) -> &Monomial {
        &self.terms.last().unwrap().0
    }

    fn lc(&self) -> &Rat {
        &self.terms.last().unwrap().1
    }
}

fn to_terms(p: &Poly, order: &MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| order.cmp(&a.0, &b.0));
    t
}

fn to_poly(num_vars: usize, t: &Terms) -> Poly {
    Poly::from_terms(num_vars, t.iter().cloned())
}

/// `f - c · m · g` for ascending term lists.
fn sub_scaled(f: &Terms, c: &Rat, m: &Monomial, g: &Terms, order: &MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut gi = g.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
    let mut fi = f.iter().peekable();
    loop {
        match (fi.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(fi.next().unwrap().clone()),
            (None, Some(_)) => {
                let (gm, gc) = gi.next().unwrap();
                out.push((gm, -gc));
            }
            (Some((fm, _)), Some((gm, _))) => match order.cmp(fm, gm) {
                Ordering::Less => out.push(fi.next().unwrap().clone()),
                Ordering::Greater => {
                    let (gm, gc) = gi.next().unwrap();
                    out.push((gm, -gc));
                }
                Ordering::Equal => {
                    let (fm, fc) = fi.next().unwrap();
                    let (_, gc) = gi.next().unwrap();
                    let s = fc - gc;
                    if !s.is_zero() {
                        out.push((fm.clone(), s));
                    }
                }
            },
        }
    }
    out
}

/// Full reduction of `f` modulo `basis`.
fn reduce(mut p: Terms, basis: &[&Element], order: &MonomialOrder) -> Terms {
    let mut rem: Terms = Vec::new();
    while let Some((m, c)) = p.last() {
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                let q = m.div(g.lm());
                let coef = c / g.lc();
                p = sub_scaled(&p, &coef, &q, &g.terms, order);
            }
            None => rem.push(p.pop().unwrap()),
        }
    }
    rem.reverse();
    rem
}

/// Content removal: coprime integer coefficients, positive leading coefficient.
fn make_primitive(t: &mut Terms) {
    if t.is_empty() {
        return;
    }
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for (_, c) in t.iter() {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    let mut s = Rat::new(den, num);
    if t.last().unwrap().1.is_negative() {
        s = -s;
    }
    for (_, c) in t.iter_mut() {
        *c *= &s;
    }
}

fn make_monic(t: &mut Terms) {
    if let Some((_, lc)) = t.last() {
        let inv = Rat::one() / lc;
        for (_, c) in t.iter_mut() {
            *c *= &inv;
        }
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Reduced Gröbner basis of a polynomial ideal for a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    num_vars: usize,
    order: MonomialOrder,
    basis: Vec<Poly>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    /// Buchberger's algorithm. Output is monic, reduced, and sorted by
    /// leading monomial descending; it depends only on the input order of
    /// `gens`.
    pub fn compute(num_vars: usize, gens: &[Poly], order: &MonomialOrder) -> Self {
        let mut elems: Vec<Element> = Vec::new();
        let mut pending: Vec<Pair> = Vec::new();
        let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

        let add = |mut t: Terms,
                   sugar: u32,
                   elems: &mut Vec<Element>,
                   pending: &mut Vec<Pair>,
                   pending_set: &mut HashSet<(usize, usize)>| {
            make_primitive(&mut t);
            let new = Element { terms: t, sugar };
            let j = elems.len();
            for (i, e) in elems.iter().enumerate() {
                let lcm = e.lm().lcm(new.lm());
                let d = lcm.degree();
                let sugar = (e.sugar + d - e.lm().degree()).max(new.sugar + d - new.lm().degree());
                pending.push(Pair { i, j, lcm, sugar });
                pending_set.insert((i, j));
            }
            elems.push(new);
        };

        for g in gens {
            let t = to_terms(g, order);
            let refs: Vec<&Element> = elems.iter().collect();
            let r = reduce(t, &refs, order);
            if !r.is_empty() {
                let sugar = g.total_degree().unwrap_or(0);
                add(r, sugar, &mut elems, &mut pending, &mut pending_set);
            }
        }

        while !pending.is_empty() {
            let best = (0..pending.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&pending[a], &pending[b]);
                    pa.sugar
                        .cmp(&pb.sugar)
                        .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                        .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
                })
                .unwrap();
            let pair = pending.swap_remove(best);
            pending_set.remove(&(pair.i, pair.j));
            let (fi, fj) = (&elems[pair.i], &elems[pair.j]);

            if fi.lm().is_coprime(fj.lm()) {
                continue;
            }
            let chain = (0..elems.len()).any(|k| {
                k != pair.i
                    && k != pair.j
                    && elems[k].lm().divides(&pair.lcm)
                    && !pending_set.contains(&(pair.i.min(k), pair.i.max(k)))
                    && !pending_set.contains(&(pair.j.min(k), pair.j.max(k)))
            });
            if chain {
                continue;
            }

            let mi = pair.lcm.div(fi.lm());
            let mj = pair.lcm.div(fj.lm());
            let ci = Rat::one() / fi.lc();
            let cj = Rat::one() / fj.lc();
            let a: Terms = fi.terms.iter().map(|(m, c)| (m.mul(&mi), c * &ci)).collect();
            let s = sub_scaled(&a, &cj, &mj, &fj.terms, order);
            let refs: Vec<&Element> = elems.iter().collect();
            let r = reduce(s, &refs, order);
            if !r.is_empty() {
                add(r, pair.sugar, &mut elems, &mut pending, &mut pending_set);
            }
        }

        Self::finish(num_vars, elems, order)
    }

    fn finish(num_vars: usize, elems: Vec<Element>, order: &MonomialOrder) -> Self {
        // minimalize: drop elements whose leading monomial is divisible by another's
        let mut keep: Vec<Element> = Vec::new();
        for (idx, e) in elems.iter().enumerate() {
            let redundant = elems.iter().enumerate().any(|(k, f)| {
                k != idx && f.lm().divides(e.lm()) && (f.lm() != e.lm() || k < idx)
            });
            if !redundant {
                keep.push(e.clone());
            }
        }
        // interreduce
        let mut reduced: Vec<Terms> = Vec::with_capacity(keep.len());
        for idx in 0..keep.len() {
            let others: Vec<&Element> = keep
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, e)| e)
                .collect();
            let mut r = reduce(keep[idx].terms.clone(), &others, order);
            make_monic(&mut r);
            reduced.push(r);
        }
        reduced.sort_by(|a, b| order.cmp(&b.last().unwrap().0, &a.last().unwrap().0));
        let leading = reduced.iter().map(|t| t.last().unwrap().0.clone()).collect();
        let basis = reduced.iter().map(|t| to_poly(num_vars, t)).collect();
        GroebnerBasis {
            num_vars,
            order: order.clone(),
            basis,
            leading,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(|m| m.degree() == 0)
    }

    /// Not divisible by any leading monomial.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leading.iter().any(|l| l.divides(m))
    }

    fn elements(&self) -> Vec<Element> {
        self.basis
            .iter()
            .map(|p| Element {
                terms: to_terms(p, &self.order),
                sugar: 0,
            })
            .collect()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        let elems = self.elements();
        let refs: Vec<&Element> = elems.iter().collect();
        to_poly(self.num_vars, &reduce(to_terms(f, &self.order), &refs, &self.order))
    }

    /// Normal forms of many polynomials sharing one conversion of the basis.
    pub fn normal_forms<'a>(&self, fs: impl IntoIterator<Item = &'a Poly>) -> Vec<Poly> {
        let elems = self.elements();
        let refs: Vec<&Element> = elems.iter().collect();
        fs.into_iter()
            .map(|f| to_poly(self.num_vars, &reduce(to_terms(f, &self.order), &refs, &self.order)))
            .collect()
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks that every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let elems = self.elements();
        let refs: Vec<&Element> = elems.iter().collect();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                let (fi, fj) = (&elems[i], &elems[j]);
                let lcm = fi.lm().lcm(fj.lm());
                let a: Terms = fi
                    .terms
                    .iter()
                    .map(|(m, c)| (m.mul(&lcm.div(fi.lm())), c / fi.lc()))
                    .collect();
                let s = sub_scaled(&a, &(Rat::one() / fj.lc()), &lcm.div(fj.lm()), &fj.terms, &self.order);
                if !reduce(s, &refs, &self.order).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
