//! Free left modules `A^m`, submodule Gröbner bases and the module
//! versions of the filtered/graded transfer.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraPresentation, Exponent, Polynomial};
use crate::field::Scalar;
use crate::graded::GradedAlgebra;
use crate::groebner::{
    autoreduce_generic, buchberger_generic, is_groebner_generic, reduce_generic, GroebnerError, LeftElement,
    ReduceMode, ReductionTrace,
};
use crate::orders::{induce_graded_module_order, ModuleOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("operands differ in algebra or rank")]
    Mismatch,
    #[error("zero input where a nonzero one is required")]
    ZeroInput,
    #[error("basis is not marked verified")]
    Unverified,
    #[error("graded basis element {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("symbol of lift {index} differs from graded basis element {index}")]
    SymbolMismatch { index: usize },
    #[error("{lifts} lifts given for {graded} graded basis elements")]
    LengthMismatch { lifts: usize, graded: usize },
    #[error("graded basis order is not the induced order")]
    OrderMismatch,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

/// An element of `A^m`, stored componentwise.
#[derive(Clone, PartialEq)]
pub struct VectorPoly {
    algebra: Arc<AlgebraPresentation>,
    components: Vec<Polynomial>,
}

impl VectorPoly {
    pub fn zero(algebra: &Arc<AlgebraPresentation>, rank: usize) -> Self {
        VectorPoly { algebra: algebra.clone(), components: vec![Polynomial::zero(algebra); rank] }
    }

    pub fn new(algebra: &Arc<AlgebraPresentation>, components: Vec<Polynomial>) -> Result<Self, ModuleError> {
        if components.iter().any(|c| !c.algebra().same_as(algebra)) {
            return Err(ModuleError::Mismatch);
        }
        Ok(VectorPoly { algebra: algebra.clone(), components })
    }

    /// `e_i` scaled by `f`.
    pub fn basis_multiple(f: Polynomial, component: usize, rank: usize) -> Self {
        let mut v = Self::zero(f.algebra(), rank);
        v.components[component] = f;
        v
    }

    pub fn algebra(&self) -> &Arc<AlgebraPresentation> {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Terms as `(component, exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Exponent, &Scalar)> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().map(move |(e, c)| (i, e, c)))
    }

    pub fn leading_term(&self, order: &ModuleOrder) -> Option<(Scalar, (usize, Exponent))> {
        self.terms()
            .max_by(|a, b| order.compare((a.0, a.1), (b.0, b.1)))
            .map(|(i, e, c)| (c.clone(), (i, e.clone())))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms().map(|(_, e, _)| e.degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    fn compatible_with(&self, other: &VectorPoly) -> bool {
        self.rank() == other.rank() && self.algebra.same_as(&other.algebra)
    }

    fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> VectorPoly {
        VectorPoly { algebra: self.algebra.clone(), components: self.components.iter().map(f).collect() }
    }

    fn retype(&self, algebra: &Arc<AlgebraPresentation>) -> VectorPoly {
        VectorPoly { algebra: algebra.clone(), components: self.components.iter().map(|p| p.retype(algebra)).collect() }
    }
}

impl fmt::Debug for VectorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorPoly({self})")
    }
}

impl fmt::Display for VectorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl VectorPoly {
    /// Canonical text with each component printed under the base order.
    pub fn format_with(&self, order: &ModuleOrder) -> String {
        let parts: Vec<String> = self.components.iter().map(|c| c.format_with(order.base())).collect();
        format!("[{}]", parts.join(", "))
    }
}

pub fn vec_add(f: &VectorPoly, g: &VectorPoly) -> Result<VectorPoly, ModuleError> {
    if !f.compatible_with(g) {
        return Err(ModuleError::Mismatch);
    }
    Ok(f.plus(g))
}

pub fn vec_scale(c: &Scalar, f: &VectorPoly) -> Result<VectorPoly, ModuleError> {
    if c.field() != f.algebra.field() {
        return Err(ModuleError::Mismatch);
    }
    Ok(f.map(|p| p.scale(c)))
}

/// `a * f`, componentwise.
pub fn act(a: &Polynomial, f: &VectorPoly) -> Result<VectorPoly, ModuleError> {
    if !a.algebra().same_as(&f.algebra) {
        return Err(ModuleError::Mismatch);
    }
    Ok(f.map(|p| a * p))
}

impl LeftElement for VectorPoly {
    type Mon = (usize, Exponent);
    type Order = ModuleOrder;

    fn algebra(&self) -> &Arc<AlgebraPresentation> {
        &self.algebra
    }

    fn zero_like(&self) -> Self {
        VectorPoly::zero(&self.algebra, self.rank())
    }

    fn is_zero(&self) -> bool {
        VectorPoly::is_zero(self)
    }

    fn leading(&self, order: &ModuleOrder) -> Option<(Scalar, (usize, Exponent))> {
        self.leading_term(order)
    }

    fn exponent(mon: &(usize, Exponent)) -> &Exponent {
        &mon.1
    }

    fn same_slot(a: &(usize, Exponent), b: &(usize, Exponent)) -> bool {
        a.0 == b.0
    }

    fn with_exponent(mon: &(usize, Exponent), exp: Exponent) -> (usize, Exponent) {
        (mon.0, exp)
    }

    fn compare(order: &ModuleOrder, a: &(usize, Exponent), b: &(usize, Exponent)) -> Ordering {
        order.compare((a.0, &a.1), (b.0, &b.1))
    }

    fn left_shift(&self, gamma: &Exponent) -> Self {
        self.map(|p| p.left_shift(gamma))
    }

    fn act(&self, a: &Polynomial) -> Self {
        self.map(|p| a * p)
    }

    fn scale(&self, c: &Scalar) -> Self {
        self.map(|p| p.scale(c))
    }

    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        VectorPoly {
            algebra: self.algebra.clone(),
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        }
    }

    fn remove_term(&mut self, mon: &(usize, Exponent)) {
        self.components[mon.0].remove_term(&mon.1);
    }

    fn add_monomial(&mut self, mon: (usize, Exponent), c: Scalar) {
        self.components[mon.0].add_monomial(mon.1, c);
    }

    fn compatible(&self, other: &Self) -> bool {
        self.compatible_with(other)
    }

    fn product_criterion_applies(&self) -> bool {
        self.rank() == 1 && self.algebra.is_commutative()
    }
}

/// Maximum term degree across components; `None` for the zero vector.
pub fn module_degree(f: &VectorPoly) -> Option<u32> {
    f.components.iter().filter_map(Polynomial::degree).max()
}

/// A vector over `Gr(A)` whose terms share one degree.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedVectorPoly(VectorPoly);

impl GradedVectorPoly {
    pub fn new(v: VectorPoly) -> Option<Self> {
        v.is_homogeneous().then_some(GradedVectorPoly(v))
    }

    pub fn vector(&self) -> &VectorPoly {
        &self.0
    }

    pub fn into_vector(self) -> VectorPoly {
        self.0
    }

    pub fn degree(&self) -> Option<u32> {
        module_degree(&self.0)
    }
}

impl fmt::Display for GradedVectorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `η(f)`: the top-degree terms of all components, read over `Gr(A)`.
pub fn module_symbol(gr: &GradedAlgebra, f: &VectorPoly) -> Result<GradedVectorPoly, ModuleError> {
    if !f.algebra.same_as(gr.source()) {
        return Err(ModuleError::Mismatch);
    }
    let top = match module_degree(f) {
        Some(d) => f.map(|p| p.homogeneous_part(d)),
        None => f.clone(),
    };
    Ok(GradedVectorPoly(top.retype(gr.presentation())))
}

/// `η(r) η(f)` computed in `Gr(A)^m` against `η(r f)` (or `0` when the
/// degree of `r f` drops).
pub fn graded_action_check(gr: &GradedAlgebra, r: &Polynomial, f: &VectorPoly) -> Result<bool, ModuleError> {
    if r.is_zero() || f.is_zero() {
        return Err(ModuleError::ZeroInput);
    }
    let eta_r = gr.symbol(r).map_err(|_| ModuleError::Mismatch)?;
    let eta_f = module_symbol(gr, f)?;
    let left = act(eta_r.poly(), eta_f.vector())?;
    let rf = act(r, f)?;
    let expected = r.degree().zip(module_degree(f)).map(|(a, b)| a + b);
    let right = if module_degree(&rf) == expected {
        module_symbol(gr, &rf)?.into_vector()
    } else {
        VectorPoly::zero(gr.presentation(), f.rank())
    };
    Ok(left == right)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModuleGroebnerBasis {
    algebra: Arc<AlgebraPresentation>,
    rank: usize,
    generators: Vec<VectorPoly>,
    order: ModuleOrder,
    verified: bool,
    reduced: bool,
}

impl ModuleGroebnerBasis {
    pub fn unverified(
        algebra: &Arc<AlgebraPresentation>,
        generators: Vec<VectorPoly>,
        order: ModuleOrder,
    ) -> Self {
        let rank = order.rank();
        ModuleGroebnerBasis { algebra: algebra.clone(), rank, generators, order, verified: false, reduced: false }
    }

    pub fn checked(
        algebra: &Arc<AlgebraPresentation>,
        generators: Vec<VectorPoly>,
        order: ModuleOrder,
    ) -> Self {
        let verified = is_groebner_generic(&generators, &order);
        let rank = order.rank();
        ModuleGroebnerBasis { algebra: algebra.clone(), rank, generators, order, verified, reduced: false }
    }

    pub fn algebra(&self) -> &Arc<AlgebraPresentation> {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[VectorPoly] {
        &self.generators
    }

    pub fn order(&self) -> &ModuleOrder {
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

pub fn module_reduce(
    f: &VectorPoly,
    basis: &[VectorPoly],
    order: &ModuleOrder,
    mode: ReduceMode,
) -> ReductionTrace<VectorPoly> {
    reduce_generic(f, basis, order, mode)
}

pub fn module_is_groebner(basis: &[VectorPoly], order: &ModuleOrder) -> bool {
    is_groebner_generic(basis, order)
}

/// Reduced Gröbner basis of the submodule generated by `generators`.
pub fn module_buchberger(
    algebra: &Arc<AlgebraPresentation>,
    generators: &[VectorPoly],
    order: &ModuleOrder,
) -> Result<ModuleGroebnerBasis, ModuleError> {
    let rank = order.rank();
    if generators.iter().any(|g| g.rank() != rank || !g.algebra.same_as(algebra)) {
        return Err(ModuleError::Mismatch);
    }
    if !algebra.is_consistent() {
        return Err(GroebnerError::InconsistentPresentation.into());
    }
    let raw = buchberger_generic(generators, order)?;
    Ok(ModuleGroebnerBasis {
        algebra: algebra.clone(),
        rank,
        generators: autoreduce_generic(&raw, order),
        order: order.clone(),
        verified: true,
        reduced: true,
    })
}

pub fn module_membership(
    f: &VectorPoly,
    basis: &ModuleGroebnerBasis,
) -> Result<(bool, ReductionTrace<VectorPoly>), ModuleError> {
    if !basis.verified {
        return Err(ModuleError::Unverified);
    }
    if f.rank() != basis.rank || !f.algebra.same_as(&basis.algebra) {
        return Err(ModuleError::Mismatch);
    }
    let trace = module_reduce(f, &basis.generators, &basis.order, ReduceMode::Full);
    Ok((trace.remainder.is_zero(), trace))
}

pub fn module_transfer_to_graded(
    basis: &ModuleGroebnerBasis,
    gr: &GradedAlgebra,
) -> Result<ModuleGroebnerBasis, ModuleError> {
    if !basis.verified {
        return Err(ModuleError::Unverified);
    }
    let symbols = basis
        .generators
        .iter()
        .map(|g| module_symbol(gr, g).map(GradedVectorPoly::into_vector))
        .collect::<Result<Vec<_>, _>>()?;
    let graded = ModuleGroebnerBasis::checked(gr.presentation(), symbols, induce_graded_module_order(&basis.order));
    if !graded.verified {
        return Err(ModuleError::Internal("symbols of a module Gröbner basis failed is_groebner".into()));
    }
    Ok(graded)
}

/// Packages `lifts` after checking `η(lifts[j]) = graded[j]`; membership of
/// the lifts in the target submodule is the caller's responsibility.
pub fn module_transfer_from_graded(
    gr: &GradedAlgebra,
    graded: &ModuleGroebnerBasis,
    lifts: &[VectorPoly],
    order: &ModuleOrder,
) -> Result<ModuleGroebnerBasis, ModuleError> {
    if !graded.algebra.same_as(gr.presentation()) || graded.rank != order.rank() {
        return Err(ModuleError::Mismatch);
    }
    if !graded.verified {
        return Err(ModuleError::Unverified);
    }
    if graded.order != induce_graded_module_order(order) {
        return Err(ModuleError::OrderMismatch);
    }
    if let Some(index) = graded.generators.iter().position(|g| !g.is_homogeneous()) {
        return Err(ModuleError::NotHomogeneous { index });
    }
    if lifts.len() != graded.len() {
        return Err(ModuleError::LengthMismatch { lifts: lifts.len(), graded: graded.len() });
    }
    for (index, (lift, target)) in lifts.iter().zip(&graded.generators).enumerate() {
        if lift.rank() != graded.rank {
            return Err(ModuleError::Mismatch);
        }
        if module_symbol(gr, lift)?.vector() != target {
            return Err(ModuleError::SymbolMismatch { index });
        }
    }
    Ok(ModuleGroebnerBasis::checked(gr.source(), lifts.to_vec(), order.clone()))
}
