use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{AlgebraError, AlgebraPresentation};
use crate::field::Scalar;
use crate::orders::MonomialOrder;

/// Exponent vector `(a_1, ..., a_n)` of the standard monomial
/// `x_1^a_1 * ... * x_n^a_n`.
///
/// The `Ord` impl is the canonical storage order (degrevlex with
/// `x_1 > ... > x_n`). It is not the user's monomial order; see
/// [`MonomialOrder`] for that.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn unit(n: usize, var: usize) -> Self {
        let mut e = vec![0; n];
        e[var] = 1;
        Exponent(e)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `Some(other - self)` when `self` divides `other` componentwise.
    pub fn divides(&self, other: &Exponent) -> Option<Exponent> {
        if self.0.len() != other.0.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| b.checked_sub(*a))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the last variable with a nonzero exponent.
    pub(crate) fn last_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&a| a > 0)
    }

    pub(crate) fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&a| a > 0)
    }

    pub(crate) fn bumped(&self, var: usize, delta: i32) -> Exponent {
        let mut e = self.0.clone();
        e[var] = (e[var] as i32 + delta) as u32;
        Exponent(e)
    }

    /// The standard word `x_1..x_1 x_2..x_2 ...` as variable indices.
    pub fn to_word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(v, &a)| std::iter::repeat_n(v, a as usize))
            .collect()
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

pub(crate) type Terms = BTreeMap<Exponent, Scalar>;

pub(crate) fn add_term(terms: &mut Terms, exp: Exponent, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(exp) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get() + &coeff;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

pub(crate) fn add_scaled(terms: &mut Terms, other: &Terms, scale: &Scalar) {
    for (e, c) in other {
        add_term(terms, e.clone(), c * scale);
    }
}

/// An element of the algebra written in the PBW basis: a finite map from
/// exponents to nonzero scalars.
#[derive(Clone)]
pub struct Polynomial {
    pub(crate) algebra: Arc<AlgebraPresentation>,
    pub(crate) terms: Terms,
}

impl Polynomial {
    pub fn zero(algebra: &Arc<AlgebraPresentation>) -> Self {
        Polynomial { algebra: algebra.clone(), terms: Terms::new() }
    }

    pub fn one(algebra: &Arc<AlgebraPresentation>) -> Self {
        Self::constant(algebra, algebra.field().one())
    }

    pub fn constant(algebra: &Arc<AlgebraPresentation>, c: Scalar) -> Self {
        Self::monomial(algebra, Exponent::zero(algebra.nvars()), c)
    }

    pub fn monomial(algebra: &Arc<AlgebraPresentation>, exp: Exponent, c: Scalar) -> Self {
        assert_eq!(exp.len(), algebra.nvars(), "exponent length mismatch");
        let mut terms = Terms::new();
        add_term(&mut terms, exp, c);
        Polynomial { algebra: algebra.clone(), terms }
    }

    pub fn variable(algebra: &Arc<AlgebraPresentation>, var: usize) -> Self {
        Self::monomial(algebra, Exponent::unit(algebra.nvars(), var), algebra.field().one())
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<I>(algebra: &Arc<AlgebraPresentation>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Scalar, Exponent)>,
    {
        let mut map = Terms::new();
        for (c, e) in terms {
            assert_eq!(e.len(), algebra.nvars(), "exponent length mismatch");
            add_term(&mut map, e, c);
        }
        Polynomial { algebra: algebra.clone(), terms: map }
    }

    pub(crate) fn from_map(algebra: &Arc<AlgebraPresentation>, terms: Terms) -> Self {
        Polynomial { algebra: algebra.clone(), terms }
    }

    pub fn algebra(&self) -> &Arc<AlgebraPresentation> {
        &self.algebra
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

    /// Terms in canonical storage order (ascending degrevlex).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &Exponent) -> Option<&Scalar> {
        self.terms.get(exp)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        // canonical order is degree first
        self.terms.keys().next_back().map(Exponent::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Exponent::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Terms of degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.degree() == d)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Polynomial { algebra: self.algebra.clone(), terms }
    }

    /// `(lc, lm)` under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Scalar, &Exponent)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(a.0, b.0))
            .map(|(e, c)| (c, e))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Exponent> {
        self.leading_term(order).map(|(_, e)| e)
    }

    fn check(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.algebra.same_as(&other.algebra) {
            Ok(())
        } else {
            Err(AlgebraError::Mismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e.clone(), c.clone());
        }
        Ok(Polynomial { algebra: self.algebra.clone(), terms })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check(other)?;
        let alg = &self.algebra;
        let mut terms = Terms::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let prod = alg.monomial_product(a, b);
                add_scaled(&mut terms, &prod, &(ca * cb));
            }
        }
        Ok(Polynomial { algebra: alg.clone(), terms })
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let terms = if c.is_zero() {
            Terms::new()
        } else {
            self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect()
        };
        Polynomial { algebra: self.algebra.clone(), terms }
    }

    /// `x^gamma * self`.
    pub fn left_shift(&self, gamma: &Exponent) -> Polynomial {
        let mut terms = Terms::new();
        for (e, c) in &self.terms {
            let prod = self.algebra.monomial_product(gamma, e);
            add_scaled(&mut terms, &prod, c);
        }
        Polynomial { algebra: self.algebra.clone(), terms }
    }

    /// Leading coefficient becomes one.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((lc, _)) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Same terms, reinterpreted over another algebra with the same number
    /// of variables and the same field.
    pub fn retype(&self, algebra: &Arc<AlgebraPresentation>) -> Polynomial {
        assert_eq!(algebra.nvars(), self.algebra.nvars());
        assert_eq!(algebra.field(), self.algebra.field());
        Polynomial { algebra: algebra.clone(), terms: self.terms.clone() }
    }

    /// Canonical text: terms descending under `order`, unit coefficients
    /// and zero exponents omitted.
    pub fn format_with(&self, order: &MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| order.compare(b.0, a.0));
        let mut out = String::new();
        for (k, (e, c)) in items.into_iter().enumerate() {
            let (neg, abs) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.algebra.format_monomial(e);
            match (abs.is_one(), mono.is_empty()) {
                (_, true) => out.push_str(&abs.to_string()),
                (true, false) => out.push_str(&mono),
                (false, false) => {
                    out.push_str(&abs.to_string());
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.algebra.same_as(&other.algebra)
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = MonomialOrder::deglex(self.algebra.nvars());
        f.write_str(&self.format_with(&order))
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("algebra mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("algebra mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("algebra mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        Polynomial { algebra: self.algebra.clone(), terms }
    }
}
