//! Left reduction, S-polynomials, Buchberger completion and membership for
//! left ideals of a bijective skew PBW extension over a field.
//!
//! The engine is generic over [`LeftElement`] so that the same code serves
//! ideals (`Polynomial`) and submodules of free modules
//! ([`crate::freemod::VectorPoly`]).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Debug;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{AlgebraPresentation, Exponent, Polynomial};
use crate::field::Scalar;
use crate::orders::MonomialOrder;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("presentation failed the overlap consistency check")]
    InconsistentPresentation,
    #[error("basis is not marked verified")]
    Unverified,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,
    #[error("operands belong to different algebras or ranks")]
    Mismatch,
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

/// Elements of a free left module over the algebra, as seen by the
/// reduction engine. Monomials are exponent vectors tagged with a slot
/// (the component for vectors, nothing for polynomials).
pub trait LeftElement: Clone + PartialEq + Debug + Send + Sync {
    type Mon: Clone + Eq + Debug + Send + Sync;
    type Order: Clone + Debug + Send + Sync;

    fn algebra(&self) -> &Arc<AlgebraPresentation>;
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn leading(&self, order: &Self::Order) -> Option<(Scalar, Self::Mon)>;
    fn exponent(mon: &Self::Mon) -> &Exponent;
    fn same_slot(a: &Self::Mon, b: &Self::Mon) -> bool;
    fn with_exponent(mon: &Self::Mon, exp: Exponent) -> Self::Mon;
    fn compare(order: &Self::Order, a: &Self::Mon, b: &Self::Mon) -> Ordering;
    /// `x^gamma * self`.
    fn left_shift(&self, gamma: &Exponent) -> Self;
    /// `a * self`.
    fn act(&self, a: &Polynomial) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn remove_term(&mut self, mon: &Self::Mon);
    fn add_monomial(&mut self, mon: Self::Mon, c: Scalar);
    fn compatible(&self, other: &Self) -> bool;
    /// Whether coprime leading monomials may skip their S-pair.
    fn product_criterion_applies(&self) -> bool;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-&self.algebra().field().one()))
    }

    fn monic(&self, order: &Self::Order) -> Self {
        match self.leading(order) {
            None => self.clone(),
            Some((lc, _)) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }
}

impl LeftElement for Polynomial {
    type Mon = Exponent;
    type Order = MonomialOrder;

    fn algebra(&self) -> &Arc<AlgebraPresentation> {
        Polynomial::algebra(self)
    }

    fn zero_like(&self) -> Self {
        Polynomial::zero(Polynomial::algebra(self))
    }

    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }

    fn leading(&self, order: &MonomialOrder) -> Option<(Scalar, Exponent)> {
        self.leading_term(order).map(|(c, e)| (c.clone(), e.clone()))
    }

    fn exponent(mon: &Exponent) -> &Exponent {
        mon
    }

    fn same_slot(_: &Exponent, _: &Exponent) -> bool {
        true
    }

    fn with_exponent(_: &Exponent, exp: Exponent) -> Exponent {
        exp
    }

    fn compare(order: &MonomialOrder, a: &Exponent, b: &Exponent) -> Ordering {
        order.compare(a, b)
    }

    fn left_shift(&self, gamma: &Exponent) -> Self {
        Polynomial::left_shift(self, gamma)
    }

    fn act(&self, a: &Polynomial) -> Self {
        a * self
    }

    fn scale(&self, c: &Scalar) -> Self {
        Polynomial::scale(self, c)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn remove_term(&mut self, mon: &Exponent) {
        self.terms.remove(mon);
    }

    fn add_monomial(&mut self, mon: Exponent, c: Scalar) {
        crate::algebra::add_term(&mut self.terms, mon, c);
    }

    fn compatible(&self, other: &Self) -> bool {
        Polynomial::algebra(self).same_as(Polynomial::algebra(other))
    }

    fn product_criterion_applies(&self) -> bool {
        Polynomial::algebra(self).is_commutative()
    }
}

/// `f = sum cofactors[k] * basis[k] + remainder`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionTrace<V: LeftElement = Polynomial> {
    pub remainder: V,
    /// One cofactor per basis element, in basis order.
    pub cofactors: Vec<Polynomial>,
}

impl<V: LeftElement> ReductionTrace<V> {
    /// Recomputes `sum cofactors[k] * basis[k] + remainder`.
    pub fn recombine(&self, basis: &[V]) -> V {
        self.cofactors
            .iter()
            .zip(basis)
            .fold(self.remainder.clone(), |acc, (a, g)| acc.plus(&g.act(a)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceMode {
    /// Stop once the leading monomial has no divisor.
    Top,
    /// Keep reducing lower terms.
    Full,
}

/// `Some(beta - alpha)` when `x^alpha` divides `x^beta`.
pub fn divides(alpha: &Exponent, beta: &Exponent) -> Option<Exponent> {
    alpha.divides(beta)
}

fn divisor_of<V: LeftElement>(
    leads: &[Option<(Scalar, V::Mon)>],
    mon: &V::Mon,
) -> Option<(usize, Exponent)> {
    leads.iter().enumerate().find_map(|(k, lead)| {
        let (_, lm) = lead.as_ref()?;
        if !V::same_slot(lm, mon) {
            return None;
        }
        V::exponent(lm).divides(V::exponent(mon)).map(|gamma| (k, gamma))
    })
}

/// Reduces `f` by `basis`; the earliest divisor in list order wins.
pub fn reduce_generic<V: LeftElement>(
    f: &V,
    basis: &[V],
    order: &V::Order,
    mode: ReduceMode,
) -> ReductionTrace<V> {
    let alg = f.algebra().clone();
    let leads: Vec<_> = basis.iter().map(|g| g.leading(order)).collect();
    let mut cofactors = vec![Polynomial::zero(&alg); basis.len()];
    let mut current = f.clone();
    let mut remainder = f.zero_like();
    while let Some((lc, lm)) = current.leading(order) {
        match divisor_of::<V>(&leads, &lm) {
            Some((k, gamma)) => {
                let (lc_g, lm_g) = leads[k].as_ref().expect("divisor has a leading term");
                let c_gamma = alg.product_constant(&gamma, V::exponent(lm_g));
                let factor = &lc * &(lc_g * &c_gamma).inv().expect("nonzero in a field");
                current = current.minus(&basis[k].left_shift(&gamma).scale(&factor));
                let step = Polynomial::monomial(&alg, gamma, factor);
                cofactors[k] = &cofactors[k] + &step;
            }
            None if mode == ReduceMode::Top => break,
            None => {
                current.remove_term(&lm);
                remainder.add_monomial(lm, lc);
            }
        }
    }
    ReductionTrace { remainder: remainder.plus(&current), cofactors }
}

type Multiplier = (Scalar, Exponent);

/// The multipliers `(a, x^sf)` and `(b, x^sg)` with
/// `S(f, g) = a x^sf f - b x^sg g`.
fn s_multipliers<V: LeftElement>(
    f: &V,
    g: &V,
    order: &V::Order,
) -> Result<Option<(Multiplier, Multiplier)>, GroebnerError> {
    let (lc_f, lm_f) = f.leading(order).ok_or(GroebnerError::ZeroInput)?;
    let (lc_g, lm_g) = g.leading(order).ok_or(GroebnerError::ZeroInput)?;
    if !V::same_slot(&lm_f, &lm_g) {
        return Ok(None);
    }
    let alg = f.algebra();
    let (bf, bg) = (V::exponent(&lm_f), V::exponent(&lm_g));
    let gamma = bf.lcm(bg);
    let side = |lc: &Scalar, beta: &Exponent| {
        let shift = beta.divides(&gamma).expect("lcm is a multiple");
        let c = alg.product_constant(&shift, beta);
        ((lc * &c).inv().expect("nonzero in a field"), shift)
    };
    Ok(Some((side(&lc_f, bf), side(&lc_g, bg))))
}

/// Left S-element of `f` and `g`, or `None` when their leading monomials
/// sit in different slots.
pub fn s_element<V: LeftElement>(f: &V, g: &V, order: &V::Order) -> Result<Option<V>, GroebnerError> {
    Ok(s_multipliers(f, g, order)?.map(|((a, sf), (b, sg))| {
        f.left_shift(&sf).scale(&a).minus(&g.left_shift(&sg).scale(&b))
    }))
}

/// Coefficients expressing one element as `sum rep[k] * generators[k]`.
type Representation = Vec<Polynomial>;

fn rep_shifted(rep: &Representation, c: &Scalar, gamma: &Exponent) -> Representation {
    rep.iter().map(|p| p.left_shift(gamma).scale(c)).collect()
}

fn rep_sub(a: &Representation, b: &Representation) -> Representation {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn rep_combine(coeffs: &[Polynomial], reps: &[Representation], width: usize, alg: &Arc<AlgebraPresentation>) -> Representation {
    let mut out = vec![Polynomial::zero(alg); width];
    for (q, rep) in coeffs.iter().zip(reps) {
        if q.is_zero() {
            continue;
        }
        for (slot, p) in out.iter_mut().zip(rep) {
            *slot = &*slot + &(q * p);
        }
    }
    out
}

struct Completion<V> {
    basis: Vec<V>,
    reps: Option<Vec<Representation>>,
}

fn complete<V: LeftElement>(generators: &[V], order: &V::Order, track: bool) -> Result<Completion<V>, GroebnerError> {
    let width = generators.len();
    let kept: Vec<usize> = (0..width).filter(|&k| !generators[k].is_zero()).collect();
    let mut basis: Vec<V> = kept.iter().map(|&k| generators[k].clone()).collect();
    let Some(first) = basis.first() else {
        return Ok(Completion { basis, reps: track.then(Vec::new) });
    };
    if !first.algebra().is_consistent() {
        return Err(GroebnerError::InconsistentPresentation);
    }
    if basis.iter().any(|g| !g.compatible(first)) {
        return Err(GroebnerError::Mismatch);
    }
    let alg = first.algebra().clone();
    let mut reps: Option<Vec<Representation>> = track.then(|| {
        kept.iter()
            .map(|&k| {
                let mut rep = vec![Polynomial::zero(&alg); width];
                rep[k] = Polynomial::one(&alg);
                rep
            })
            .collect()
    });
    let criterion = first.product_criterion_applies();
    let mut leads: Vec<(Scalar, V::Mon)> =
        basis.iter().map(|g| g.leading(order).expect("nonzero")).collect();
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let enqueue = |queue: &mut BTreeSet<_>, leads: &[(Scalar, V::Mon)], j: usize| {
        let mj = &leads[j].1;
        for (i, (_, mi)) in leads[..j].iter().enumerate() {
            if !V::same_slot(mi, mj) {
                continue;
            }
            let (ei, ej) = (V::exponent(mi), V::exponent(mj));
            if criterion && ei.is_coprime(ej) {
                continue;
            }
            queue.insert((ei.lcm(ej).degree(), j, i));
        }
    };
    for j in 1..basis.len() {
        enqueue(&mut queue, &leads, j);
    }
    while let Some((_, j, i)) = queue.pop_first() {
        let ((a, sa), (b, sb)) = s_multipliers(&basis[i], &basis[j], order)?.expect("queued pairs share a slot");
        let s = basis[i].left_shift(&sa).scale(&a).minus(&basis[j].left_shift(&sb).scale(&b));
        let trace = reduce_generic(&s, &basis, order, ReduceMode::Full);
        let r = trace.remainder;
        if r.is_zero() {
            continue;
        }
        let (lc, lm) = r.leading(order).expect("nonzero");
        let inv = lc.inv().expect("nonzero in a field");
        if let Some(reps) = reps.as_mut() {
            let s_rep = rep_sub(&rep_shifted(&reps[i], &a, &sa), &rep_shifted(&reps[j], &b, &sb));
            let reduced = rep_sub(&s_rep, &rep_combine(&trace.cofactors, reps, width, &alg));
            let zero = Exponent::zero(alg.nvars());
            reps.push(rep_shifted(&reduced, &inv, &zero));
        }
        leads.push((alg.field().one(), lm));
        basis.push(r.scale(&inv));
        enqueue(&mut queue, &leads, basis.len() - 1);
    }
    Ok(Completion { basis, reps })
}

/// Buchberger completion. The pair queue is ordered by the degree of the
/// lcm, then by pair index; S-elements are fully reduced against the
/// current basis and appended monic.
pub fn buchberger_generic<V: LeftElement>(
    generators: &[V],
    order: &V::Order,
) -> Result<Vec<V>, GroebnerError> {
    Ok(complete(generators, order, false)?.basis)
}

/// Like [`buchberger_generic`] followed by autoreduction, also returning
/// for each output element `g` coefficients `a` with
/// `g = sum a[k] * generators[k]`.
pub fn buchberger_certified<V: LeftElement>(
    generators: &[V],
    order: &V::Order,
) -> Result<(Vec<V>, Vec<Representation>), GroebnerError> {
    let done = complete(generators, order, true)?;
    let raw_reps = done.reps.expect("tracking requested");
    let reduced = autoreduce_generic(&done.basis, order);
    let Some(first) = reduced.first() else {
        return Ok((reduced, Vec::new()));
    };
    let alg = first.algebra().clone();
    let reps = reduced
        .iter()
        .map(|g| {
            let trace = reduce_generic(g, &done.basis, order, ReduceMode::Full);
            debug_assert!(trace.remainder.is_zero());
            rep_combine(&trace.cofactors, &raw_reps, generators.len(), &alg)
        })
        .collect();
    Ok((reduced, reps))
}

/// True iff every S-element of a same-slot pair fully reduces to zero.
pub fn is_groebner_generic<V: LeftElement>(basis: &[V], order: &V::Order) -> bool {
    let basis: Vec<V> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    let pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    pairs.par_iter().all(|&(i, j)| match s_element(&basis[i], &basis[j], order) {
        Ok(Some(s)) => reduce_generic(&s, &basis, order, ReduceMode::Full).remainder.is_zero(),
        Ok(None) => true,
        Err(_) => false,
    })
}

/// Monic, minimal, tail-reduced form of a basis, sorted by ascending
/// leading monomial.
pub fn autoreduce_generic<V: LeftElement>(basis: &[V], order: &V::Order) -> Vec<V> {
    let mut items: Vec<(V, V::Mon)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let g = g.monic(order);
            let lm = g.leading(order).expect("nonzero").1;
            (g, lm)
        })
        .collect();
    items.sort_by(|a, b| V::compare(order, &a.1, &b.1));
    let mut kept: Vec<(V, V::Mon)> = Vec::new();
    for (g, lm) in items {
        let redundant = kept.iter().any(|(_, m)| {
            V::same_slot(m, &lm) && V::exponent(m).divides(V::exponent(&lm)).is_some()
        });
        if !redundant {
            kept.push((g, lm));
        }
    }
    let gens: Vec<V> = kept.iter().map(|(g, _)| g.clone()).collect();
    (0..gens.len())
        .map(|k| {
            let others: Vec<V> =
                gens.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
            reduce_generic(&gens[k], &others, order, ReduceMode::Full).remainder
        })
        .collect()
}

/// A finite set of generators of a left ideal together with its order.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    algebra: Arc<AlgebraPresentation>,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    verified: bool,
    reduced: bool,
}

impl GroebnerBasis {
    /// Packages `generators` without any verification.
    pub fn unverified(
        algebra: &Arc<AlgebraPresentation>,
        generators: Vec<Polynomial>,
        order: MonomialOrder,
    ) -> Self {
        GroebnerBasis { algebra: algebra.clone(), generators, order, verified: false, reduced: false }
    }

    /// Packages `generators`, marking the result verified when
    /// [`is_groebner`] confirms it.
    pub fn checked(
        algebra: &Arc<AlgebraPresentation>,
        generators: Vec<Polynomial>,
        order: MonomialOrder,
    ) -> Self {
        let verified = is_groebner(&generators, &order);
        GroebnerBasis { algebra: algebra.clone(), generators, order, verified, reduced: false }
    }

    pub fn algebra(&self) -> &Arc<AlgebraPresentation> {
        &self.algebra
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

pub fn reduce(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder, mode: ReduceMode) -> ReductionTrace {
    reduce_generic(f, basis, order, mode)
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial, GroebnerError> {
    Ok(s_element(f, g, order)?.expect("polynomials share the single slot"))
}

/// Reduced Gröbner basis of the left ideal generated by `generators`.
pub fn buchberger(
    algebra: &Arc<AlgebraPresentation>,
    generators: &[Polynomial],
    order: &MonomialOrder,
) -> Result<GroebnerBasis, GroebnerError> {
    if generators.iter().any(|g| !g.algebra().same_as(algebra)) {
        return Err(GroebnerError::Mismatch);
    }
    if !algebra.is_consistent() {
        return Err(GroebnerError::InconsistentPresentation);
    }
    let raw = buchberger_generic(generators, order)?;
    let basis = GroebnerBasis {
        algebra: algebra.clone(),
        generators: raw,
        order: order.clone(),
        verified: true,
        reduced: false,
    };
    autoreduce(&basis)
}

/// [`buchberger`] together with, for each basis element, its expression
/// in terms of `generators` (one row per basis element).
pub fn buchberger_with_certificates(
    algebra: &Arc<AlgebraPresentation>,
    generators: &[Polynomial],
    order: &MonomialOrder,
) -> Result<(GroebnerBasis, Vec<Vec<Polynomial>>), GroebnerError> {
    if generators.iter().any(|g| !g.algebra().same_as(algebra)) {
        return Err(GroebnerError::Mismatch);
    }
    if !algebra.is_consistent() {
        return Err(GroebnerError::InconsistentPresentation);
    }
    let (gens, reps) = buchberger_certified(generators, order)?;
    let basis = GroebnerBasis {
        algebra: algebra.clone(),
        generators: gens,
        order: order.clone(),
        verified: true,
        reduced: true,
    };
    Ok((basis, reps))
}

pub fn autoreduce(basis: &GroebnerBasis) -> Result<GroebnerBasis, GroebnerError> {
    if !basis.verified {
        return Err(GroebnerError::Unverified);
    }
    Ok(GroebnerBasis {
        algebra: basis.algebra.clone(),
        generators: autoreduce_generic(&basis.generators, &basis.order),
        order: basis.order.clone(),
        verified: true,
        reduced: true,
    })
}

pub fn is_groebner(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    is_groebner_generic(basis, order)
}

/// Decides `f ∈ I` for the ideal `I` with verified basis `basis`; the
/// trace is the membership certificate.
pub fn ideal_membership(f: &Polynomial, basis: &GroebnerBasis) -> Result<(bool, ReductionTrace), GroebnerError> {
    if !basis.verified {
        return Err(GroebnerError::Unverified);
    }
    if !f.algebra().same_as(&basis.algebra) {
        return Err(GroebnerError::Mismatch);
    }
    let trace = reduce(f, &basis.generators, &basis.order, ReduceMode::Full);
    Ok((trace.remainder.is_zero(), trace))
}
