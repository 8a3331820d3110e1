//! Mora's tangent-cone algorithm: weak normal forms and standard bases in
//! the localization of `Q[x]` at the origin.
//!
//! Once the leading monomials of the partial basis leave only finitely many
//! standard monomials, the ideal contains `m^D` where `D` is one more than
//! the largest standard degree. From then on every polynomial is truncated
//! above degree `D`, which keeps the remaining reductions finite and cheap.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use super::colength::staircase;
use super::{LocalError, LocalOrder};
use crate::polynomial::{Monomial, Polynomial, Rational};

/// Terms sorted from the largest monomial (the leading one) downwards.
#[derive(Debug, Clone)]
pub(crate) struct SortedPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl SortedPoly {
    pub(crate) fn new(p: &Polynomial, order: &LocalOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        SortedPoly { terms }
    }

    pub(crate) fn to_polynomial(&self, num_vars: usize) -> Polynomial {
        Polynomial::from_terms(num_vars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Monomial, Rational) {
        &self.terms[0]
    }

    fn order_of_vanishing(&self) -> u32 {
        self.terms[0].0.degree()
    }

    fn ecart(&self) -> u32 {
        let top = self
            .terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0);
        top - self.order_of_vanishing()
    }

    fn make_monic(&mut self) {
        let inv = self.terms[0].1.recip();
        if !inv.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c *= &inv;
            }
        }
    }

    fn truncate(&mut self, degree: Option<u32>) {
        if let Some(d) = degree {
            self.terms.retain(|(m, _)| m.degree() <= d);
        }
    }

    /// `self - c * shift * g`, truncated above `trunc`.
    fn sub_multiple(
        &self,
        c: &Rational,
        shift: &Monomial,
        g: &SortedPoly,
        order: &LocalOrder,
        trunc: Option<u32>,
    ) -> SortedPoly {
        let keep = |m: &Monomial| trunc.is_none_or(|d| m.degree() <= d);
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(m, k)| (shift.mul(m), k)).peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match step {
                Ordering::Greater => {
                    let (m, k) = a.next().unwrap();
                    if keep(m) {
                        out.push((m.clone(), k.clone()));
                    }
                }
                Ordering::Less => {
                    let (m, k) = b.next().unwrap();
                    if keep(&m) {
                        out.push((m, -(c * k)));
                    }
                }
                Ordering::Equal => {
                    let (m, k1) = a.next().unwrap();
                    let (_, k2) = b.next().unwrap();
                    if keep(m) {
                        let v = k1 - c * k2;
                        if !v.is_zero() {
                            out.push((m.clone(), v));
                        }
                    }
                }
            }
        }
        SortedPoly { terms: out }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Reducer {
    poly: SortedPoly,
    lm: Monomial,
    ecart: u32,
}

impl Reducer {
    fn new(poly: SortedPoly) -> Self {
        let lm = poly.lead().0.clone();
        let ecart = poly.ecart();
        Reducer { poly, lm, ecart }
    }
}

/// Mora's weak normal form. Reducers are chosen with minimal ecart, ties
/// going to the oldest; the intermediate remainders join the reducer set
/// whenever the chosen reducer has a larger ecart than the remainder.
///
/// The order of the remainder never drops, so once it exceeds `stop_order`
/// the partial remainder is returned as it stands.
fn weak_normal_form(
    f: SortedPoly,
    basis: &[&Reducer],
    order: &LocalOrder,
    trunc: Option<u32>,
    stop_order: Option<u32>,
) -> SortedPoly {
    let mut h = f;
    h.truncate(trunc);
    let mut extra: Vec<Reducer> = Vec::new();
    while !h.is_zero() {
        if stop_order.is_some_and(|s| h.order_of_vanishing() > s) {
            break;
        }
        let lm = &h.lead().0;
        let best = basis
            .iter()
            .copied()
            .chain(extra.iter())
            .enumerate()
            .filter(|(_, r)| r.lm.divides(lm))
            .min_by_key(|(age, r)| (r.ecart, *age))
            .map(|(age, _)| age);
        let Some(idx) = best else { break };
        let (next, keep_h) = {
            let reducer = if idx < basis.len() {
                basis[idx]
            } else {
                &extra[idx - basis.len()]
            };
            let shift = reducer.lm.quotient_of(lm).expect("divisible");
            let c = &h.lead().1 / &reducer.poly.lead().1;
            (
                h.sub_multiple(&c, &shift, &reducer.poly, order, trunc),
                reducer.ecart > h.ecart(),
            )
        };
        if keep_h {
            extra.push(Reducer::new(h));
        }
        h = next;
    }
    h
}

fn check_ring(polys: &[Polynomial], order: &LocalOrder) -> Result<(), LocalError> {
    for p in polys {
        if p.num_vars() != order.num_vars {
            return Err(LocalError::DimensionMismatch {
                expected: order.num_vars,
                found: p.num_vars(),
            });
        }
    }
    Ok(())
}

/// Weak normal form of `f` with respect to `basis` in the local ring.
///
/// The result `r` satisfies `u·f ≡ r` modulo the ideal for some unit `u`,
/// and its leading monomial is not divisible by any leading monomial of
/// `basis`. Zero entries of `basis` are ignored.
pub fn mora_normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &LocalOrder,
) -> Result<Polynomial, LocalError> {
    check_ring(core::slice::from_ref(f), order)?;
    check_ring(basis, order)?;
    let reducers: Vec<Reducer> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut s = SortedPoly::new(p, order);
            s.make_monic();
            Reducer::new(s)
        })
        .collect();
    if reducers.is_empty() {
        return Err(LocalError::EmptyGenerators);
    }
    let refs: Vec<&Reducer> = reducers.iter().collect();
    let r = weak_normal_form(SortedPoly::new(f, order), &refs, order, None, None);
    Ok(r.to_polynomial(order.num_vars))
}

/// Local standard basis together with its leading-term data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardBasisResult {
    pub generators: Vec<Polynomial>,
    pub leading_monomials: Vec<Monomial>,
    /// Some S-polynomial reduced to order above the cap and was discarded
    /// without finishing the reduction.
    pub degree_cap_hit: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine<'o> {
    order: &'o LocalOrder,
    basis: Vec<Reducer>,
    alive: Vec<bool>,
    pairs: Vec<Pair>,
    trunc: Option<u32>,
    degree_cap: u32,
}

impl Engine<'_> {
    fn active(&self) -> impl Iterator<Item = &Reducer> {
        self.basis
            .iter()
            .zip(&self.alive)
            .filter(|(_, a)| **a)
            .map(|(r, _)| r)
    }

    fn reduce(&self, f: SortedPoly) -> SortedPoly {
        let active: Vec<&Reducer> = self.active().collect();
        weak_normal_form(f, &active, self.order, self.trunc, Some(self.degree_cap))
    }

    fn insert(&mut self, mut h: SortedPoly) {
        h.make_monic();
        let r = Reducer::new(h);
        let k = self.basis.len();
        for i in 0..k {
            if self.alive[i] {
                let lcm = self.basis[i].lm.lcm(&r.lm);
                self.pairs.push(Pair { i, j: k, lcm });
            }
        }
        self.basis.push(r);
        self.alive.push(true);
        self.update_corner();
    }

    /// Switches on (or tightens) truncation once the staircase is finite.
    fn update_corner(&mut self) {
        let lms: Vec<Monomial> = self.active().map(|r| r.lm.clone()).collect();
        let Some(st) = staircase(&lms, self.order.num_vars) else {
            return;
        };
        let corner = st.corner_degree();
        if self.trunc.is_some_and(|t| t <= corner) {
            return;
        }
        self.trunc = Some(corner);
        for (r, alive) in self.basis.iter_mut().zip(self.alive.iter_mut()) {
            if !*alive {
                continue;
            }
            if r.lm.degree() > corner {
                *alive = false;
            } else {
                r.poly.truncate(Some(corner));
                r.ecart = r.poly.ecart();
            }
        }
        let alive = &self.alive;
        self.pairs
            .retain(|p| alive[p.i] && alive[p.j] && p.lcm.degree() <= corner);
    }

    /// Largest lcm under the local order first; ties by pair indices.
    fn pop_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| {
                order
                    .cmp(&a.lcm, &b.lcm)
                    .then_with(|| (b.i, b.j).cmp(&(a.i, a.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, p: &Pair) -> SortedPoly {
        let (a, b) = (&self.basis[p.i], &self.basis[p.j]);
        let sa = a.lm.quotient_of(&p.lcm).unwrap();
        let sb = b.lm.quotient_of(&p.lcm).unwrap();
        let zero = SortedPoly { terms: Vec::new() };
        let left = zero.sub_multiple(&-Rational::one(), &sa, &a.poly, self.order, self.trunc);
        left.sub_multiple(&Rational::one(), &sb, &b.poly, self.order, self.trunc)
    }
}

/// Standard basis of the ideal generated by `generators` in the local ring,
/// under `order`. Zero generators are ignored.
pub fn standard_basis(
    generators: &[Polynomial],
    order: &LocalOrder,
    degree_cap: u32,
) -> Result<StandardBasisResult, LocalError> {
    run(generators, order, degree_cap, None)
}

/// Standard basis of `I + m^(degree+1)`, reported without the generators of
/// `m^(degree+1)`. For a degree-compatible local order its leading
/// monomials of degree at most `degree` are exactly those of `I`.
pub(crate) fn truncated_standard_basis(
    generators: &[Polynomial],
    order: &LocalOrder,
    degree: u32,
) -> Result<StandardBasisResult, LocalError> {
    run(generators, order, degree, Some(degree))
}

fn run(
    generators: &[Polynomial],
    order: &LocalOrder,
    degree_cap: u32,
    trunc: Option<u32>,
) -> Result<StandardBasisResult, LocalError> {
    check_ring(generators, order)?;
    let gens: Vec<&Polynomial> = generators.iter().filter(|p| !p.is_zero()).collect();
    if gens.is_empty() {
        return Err(LocalError::EmptyGenerators);
    }
    let mut engine = Engine {
        order,
        basis: Vec::new(),
        alive: Vec::new(),
        pairs: Vec::new(),
        trunc,
        degree_cap,
    };
    let mut cap_hit = false;
    for g in gens {
        let h = engine.reduce(SortedPoly::new(g, order));
        if !h.is_zero() {
            if h.order_of_vanishing() > degree_cap {
                cap_hit = true;
                continue;
            }
            engine.insert(h);
        }
    }
    while let Some(pair) = engine.pop_pair() {
        if !(engine.alive[pair.i] && engine.alive[pair.j]) {
            continue;
        }
        if engine.trunc.is_some_and(|t| pair.lcm.degree() > t) {
            continue;
        }
        let s = engine.s_polynomial(&pair);
        let h = engine.reduce(s);
        if h.is_zero() {
            continue;
        }
        if h.order_of_vanishing() > degree_cap {
            cap_hit = true;
            continue;
        }
        engine.insert(h);
    }

    // Keep one element per minimal leading monomial.
    let n = order.num_vars;
    let active: Vec<&Reducer> = engine.active().collect();
    let mut generators = Vec::new();
    let mut leading_monomials = Vec::new();
    for (k, r) in active.iter().enumerate() {
        let redundant = active
            .iter()
            .enumerate()
            .any(|(l, other)| l != k && other.lm.divides(&r.lm) && (other.lm != r.lm || l < k));
        if !redundant {
            generators.push(r.poly.to_polynomial(n));
            leading_monomials.push(r.lm.clone());
        }
    }
    Ok(StandardBasisResult {
        generators,
        leading_monomials,
        degree_cap_hit: cap_hit,
    })
}
