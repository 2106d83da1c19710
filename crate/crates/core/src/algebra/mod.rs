//! Presentations of bijective skew PBW extensions over a field, polynomials
//! in the PBW basis, and the rewriting system that multiplies them.
//!
//! A presentation on variables `x_1, ..., x_n` fixes, for every pair
//! `i < j`, a nonzero constant `c_ij` and a linear remainder `d_ij` with
//!
//! ```text
//! x_j * x_i = c_ij * x_i * x_j + d_ij
//! ```
//!
//! Pairs that are not mentioned commute.

mod poly;
mod rewrite;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;
use thiserror::Error;

use crate::field::{FieldError, FieldSpec, Scalar};

pub use poly::{Exponent, Polynomial};
pub(crate) use poly::{add_scaled, add_term, Terms};
pub use rewrite::OverlapFailure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    #[error("relation {upper}*{lower}: left factor must come later in the variable list")]
    PairOrder { upper: String, lower: String },
    #[error("relation for pair {upper}*{lower} given twice")]
    DuplicatePair { upper: String, lower: String },
    #[error("relation {upper}*{lower}: constant must be nonzero")]
    ZeroConstant { upper: String, lower: String },
    #[error("relation {upper}*{lower}: remainder must have degree at most 1")]
    NonlinearRemainder { upper: String, lower: String },
    #[error("operands belong to different algebras")]
    Mismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Input form of one relation `upper * lower = c * lower * upper + d`.
///
/// `d` is a list of `(word, coefficient)` terms; a word of length zero is the
/// constant term, length one a variable. Longer words are rejected.
#[derive(Debug, Clone)]
pub struct Relation {
    pub upper: String,
    pub lower: String,
    pub c: Scalar,
    pub d: Vec<(Vec<String>, Scalar)>,
}

impl Relation {
    pub fn new(upper: &str, lower: &str, c: Scalar) -> Self {
        Relation { upper: upper.to_string(), lower: lower.to_string(), c, d: Vec::new() }
    }

    pub fn plus(mut self, word: &[&str], coeff: Scalar) -> Self {
        self.d.push((word.iter().map(|s| s.to_string()).collect(), coeff));
        self
    }
}

/// The element `constant + sum coeffs[v] * x_v` of `k + k x_1 + ... + k x_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRemainder {
    pub coeffs: Vec<(usize, Scalar)>,
    pub constant: Scalar,
}

impl LinearRemainder {
    fn zero(field: FieldSpec) -> Self {
        LinearRemainder { coeffs: Vec::new(), constant: field.zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.constant.is_zero()
    }
}

/// `x^a x^b = c_ab x^(a+b) + tail`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductData {
    pub c: Scalar,
    pub tail: Polynomial,
}

type Cached = Arc<Terms>;

pub struct AlgebraPresentation {
    field: FieldSpec,
    names: Vec<String>,
    // c[i][j], d[i][j] are meaningful for i < j only
    c: Vec<Vec<Scalar>>,
    d: Vec<Vec<LinearRemainder>>,
    var_cache: RwLock<HashMap<(Exponent, usize), Cached>>,
    mono_cache: RwLock<HashMap<(Exponent, Exponent), Cached>>,
    consistent: OnceLock<bool>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl AlgebraPresentation {
    /// Validates and builds a presentation. PBW consistency is not checked
    /// here; see [`AlgebraPresentation::consistency_check`].
    pub fn new(
        field: FieldSpec,
        var_names: &[&str],
        relations: &[Relation],
    ) -> Result<Arc<Self>, AlgebraError> {
        let n = var_names.len();
        let mut index = HashMap::new();
        for (i, name) in var_names.iter().enumerate() {
            if !valid_name(name) {
                return Err(AlgebraError::InvalidName(name.to_string()));
            }
            if index.insert(name.to_string(), i).is_some() {
                return Err(AlgebraError::DuplicateVariable(name.to_string()));
            }
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
        };
        let mut c = vec![vec![field.one(); n]; n];
        let mut d = vec![vec![LinearRemainder::zero(field); n]; n];
        let mut seen = vec![vec![false; n]; n];
        for rel in relations {
            let j = lookup(&rel.upper)?;
            let i = lookup(&rel.lower)?;
            let names = || (rel.upper.clone(), rel.lower.clone());
            if i >= j {
                let (upper, lower) = names();
                return Err(AlgebraError::PairOrder { upper, lower });
            }
            if seen[i][j] {
                let (upper, lower) = names();
                return Err(AlgebraError::DuplicatePair { upper, lower });
            }
            seen[i][j] = true;
            if rel.c.field() != field {
                return Err(FieldError::Mismatch(field, rel.c.field()).into());
            }
            if rel.c.is_zero() {
                let (upper, lower) = names();
                return Err(AlgebraError::ZeroConstant { upper, lower });
            }
            let mut coeffs: Vec<Scalar> = vec![field.zero(); n];
            let mut constant = field.zero();
            for (word, coeff) in &rel.d {
                if coeff.field() != field {
                    return Err(FieldError::Mismatch(field, coeff.field()).into());
                }
                match word.as_slice() {
                    [] => constant = &constant + coeff,
                    [v] => {
                        let v = lookup(v)?;
                        coeffs[v] = &coeffs[v] + coeff;
                    }
                    _ if coeff.is_zero() => {}
                    _ => {
                        let (upper, lower) = names();
                        return Err(AlgebraError::NonlinearRemainder { upper, lower });
                    }
                }
            }
            c[i][j] = rel.c.clone();
            d[i][j] = LinearRemainder {
                coeffs: coeffs.into_iter().enumerate().filter(|(_, s)| !s.is_zero()).collect(),
                constant,
            };
        }
        Ok(Arc::new(Self::from_parts(
            field,
            var_names.iter().map(|s| s.to_string()).collect(),
            c,
            d,
        )))
    }

    pub(crate) fn from_parts(
        field: FieldSpec,
        names: Vec<String>,
        c: Vec<Vec<Scalar>>,
        d: Vec<Vec<LinearRemainder>>,
    ) -> Self {
        AlgebraPresentation {
            field,
            names,
            c,
            d,
            var_cache: RwLock::new(HashMap::new()),
            mono_cache: RwLock::new(HashMap::new()),
            consistent: OnceLock::new(),
        }
    }

    /// Polynomial ring `k[x_1, ..., x_n]`.
    pub fn commutative(field: FieldSpec, var_names: &[&str]) -> Result<Arc<Self>, AlgebraError> {
        Self::new(field, var_names, &[])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `c_ij` for `i < j`.
    pub fn constant(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < j, "constant(i, j) needs i < j");
        &self.c[i][j]
    }

    /// `d_ij` for `i < j`.
    pub fn remainder(&self, i: usize, j: usize) -> &LinearRemainder {
        assert!(i < j, "remainder(i, j) needs i < j");
        &self.d[i][j]
    }

    /// Same field, names and `c_ij`, with every `d_ij` set to zero.
    pub fn drop_remainders(&self) -> Arc<AlgebraPresentation> {
        let n = self.nvars();
        let d = vec![vec![LinearRemainder::zero(self.field); n]; n];
        Arc::new(Self::from_parts(self.field, self.names.clone(), self.c.clone(), d))
    }

    /// All `d_ij` vanish.
    pub fn is_quasi_commutative(&self) -> bool {
        self.pairs().all(|(i, j)| self.d[i][j].is_zero())
    }

    /// Quasi-commutative with every `c_ij = 1`.
    pub fn is_commutative(&self) -> bool {
        self.is_quasi_commutative() && self.pairs().all(|(i, j)| self.c[i][j].is_one())
    }

    /// Every `c_ij` is invertible (nonzero); guaranteed by construction.
    pub fn is_bijective(&self) -> bool {
        self.pairs().all(|(i, j)| !self.c[i][j].is_zero())
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.nvars();
        (0..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
    }

    /// Structural equality, ignoring caches.
    pub fn same_as(&self, other: &AlgebraPresentation) -> bool {
        std::ptr::eq(self, other)
            || (self.field == other.field
                && self.names == other.names
                && self.c == other.c
                && self.d == other.d)
    }

    /// Cached result of [`Self::consistency_check`] being empty.
    pub fn is_consistent(self: &Arc<Self>) -> bool {
        *self.consistent.get_or_init(|| self.consistency_check().is_empty())
    }

    pub(crate) fn format_monomial(&self, exp: &Exponent) -> String {
        let mut parts = Vec::new();
        for (v, &a) in exp.entries().iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(self.names[v].clone()),
                _ => parts.push(format!("{}^{}", self.names[v], a)),
            }
        }
        parts.join("*")
    }

    /// Canonical text form of the presentation (the `.alg` file format).
    pub fn to_text(&self) -> String {
        let mut out = format!("field {}\nvars {}\n", self.field, self.names.join(" "));
        let ring = commutative_shadow(self);
        for (i, j) in self.pairs() {
            let (c, d) = (&self.c[i][j], &self.d[i][j]);
            if c.is_one() && d.is_zero() {
                continue;
            }
            let mut e = Exponent::zero(self.nvars()).bumped(i, 1).bumped(j, 1);
            let mut terms = vec![(c.clone(), e.clone())];
            for (v, s) in &d.coeffs {
                terms.push((s.clone(), Exponent::unit(self.nvars(), *v)));
            }
            e = Exponent::zero(self.nvars());
            terms.push((d.constant.clone(), e));
            let rhs = Polynomial::from_terms(&ring, terms);
            let order = crate::orders::MonomialOrder::deglex(self.nvars());
            out.push_str(&format!(
                "rel {}*{} = {}\n",
                self.names[j],
                self.names[i],
                rhs.format_with(&order)
            ));
        }
        out
    }

    /// Basis expansion of `x^a * x_var`.
    fn mul_var(&self, a: &Exponent, var: usize) -> Cached {
        let key = (a.clone(), var);
        if let Some(hit) = self.var_cache.read().get(&key) {
            return hit.clone();
        }
        let mut out = Terms::new();
        match a.last_var() {
            Some(k) if k > var => {
                // x^a x_var = x^a' (c x_var x_k + d) with a = a' + e_k
                let rest = a.bumped(k, -1);
                let c = &self.c[var][k];
                let inner = self.mul_var(&rest, var);
                for (t, ct) in inner.iter() {
                    add_scaled(&mut out, &self.mul_var(t, k), &(ct * c));
                }
                let d = &self.d[var][k];
                add_term(&mut out, rest.clone(), d.constant.clone());
                for (l, cl) in &d.coeffs {
                    add_scaled(&mut out, &self.mul_var(&rest, *l), cl);
                }
            }
            _ => {
                add_term(&mut out, a.bumped(var, 1), self.field.one());
            }
        }
        let out = Arc::new(out);
        self.var_cache.write().insert(key, out.clone());
        out
    }

    /// Basis expansion of `x^a * x^b`.
    pub(crate) fn monomial_product(&self, a: &Exponent, b: &Exponent) -> Cached {
        let in_order = match (a.last_var(), b.first_var()) {
            (None, _) | (_, None) => true,
            (Some(k), Some(j)) => k <= j,
        };
        if in_order {
            let mut out = Terms::new();
            add_term(&mut out, a.add(b), self.field.one());
            return Arc::new(out);
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.mono_cache.read().get(&key) {
            return hit.clone();
        }
        let j = b.first_var().expect("nonzero exponent");
        let rest = b.bumped(j, -1);
        let mut out = Terms::new();
        for (t, ct) in self.mul_var(a, j).iter() {
            add_scaled(&mut out, &self.monomial_product(t, &rest), ct);
        }
        let out = Arc::new(out);
        self.mono_cache.write().insert(key, out.clone());
        out
    }

    /// `(c_ab, p_ab)` with `x^a x^b = c_ab x^(a+b) + p_ab`.
    pub fn monomial_product_data(self: &Arc<Self>, a: &Exponent, b: &Exponent) -> ProductData {
        let mut terms = (*self.monomial_product(a, b)).clone();
        let c = terms.remove(&a.add(b)).expect("leading coefficient of a monomial product is nonzero");
        ProductData { c, tail: Polynomial::from_map(self, terms) }
    }

    /// Only `c_ab`; cheaper to read off in reduction loops.
    pub(crate) fn product_constant(&self, a: &Exponent, b: &Exponent) -> Scalar {
        self.monomial_product(a, b)
            .get(&a.add(b))
            .cloned()
            .expect("leading coefficient of a monomial product is nonzero")
    }
}

/// The commutative ring on the same variables and field.
pub(crate) fn commutative_shadow(alg: &AlgebraPresentation) -> Arc<AlgebraPresentation> {
    let names: Vec<&str> = alg.names.iter().map(String::as_str).collect();
    AlgebraPresentation::commutative(alg.field, &names).expect("names already validated")
}

impl PartialEq for AlgebraPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for AlgebraPresentation {}

impl std::fmt::Debug for AlgebraPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraPresentation")
            .field("field", &self.field)
            .field("vars", &self.names)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests;
