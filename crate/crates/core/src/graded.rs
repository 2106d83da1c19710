//! Standard degree filtration, principal symbols, the associated graded
//! algebra and Gröbner-basis transfer between `A` and `Gr(A)`.
//!
//! `Gr(A)` is stored as an ordinary presentation with the same `c_ij` and
//! no lower-order remainders. A symbol `η(f)` is the top-degree part of
//! `f` read over that presentation.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraPresentation, Exponent, Polynomial};
use crate::groebner::{self, GroebnerBasis, GroebnerError, ReduceMode};
use crate::orders::{induce_graded_order, MonomialOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("polynomial belongs to a different algebra")]
    Mismatch,
    #[error("zero polynomial where a nonzero one is required")]
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

/// `max |α|` over the terms of `f`; `None` stands for `-∞` (the zero
/// polynomial).
pub fn degree(f: &Polynomial) -> Option<u32> {
    f.degree()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GradedAlgebra {
    presentation: Arc<AlgebraPresentation>,
    source: Arc<AlgebraPresentation>,
}

/// A polynomial over `Gr(A)` whose terms all share one degree.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousPolynomial(Polynomial);

impl HomogeneousPolynomial {
    pub fn new(poly: Polynomial) -> Option<Self> {
        poly.is_homogeneous().then_some(HomogeneousPolynomial(poly))
    }

    pub fn poly(&self) -> &Polynomial {
        &self.0
    }

    pub fn into_poly(self) -> Polynomial {
        self.0
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl std::fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

pub fn associated_graded(algebra: &Arc<AlgebraPresentation>) -> GradedAlgebra {
    GradedAlgebra { presentation: algebra.drop_remainders(), source: algebra.clone() }
}

impl GradedAlgebra {
    pub fn presentation(&self) -> &Arc<AlgebraPresentation> {
        &self.presentation
    }

    pub fn source(&self) -> &Arc<AlgebraPresentation> {
        &self.source
    }

    /// `η(f)`.
    pub fn symbol(&self, f: &Polynomial) -> Result<HomogeneousPolynomial, GradedError> {
        if !f.algebra().same_as(&self.source) {
            return Err(GradedError::Mismatch);
        }
        let top = match f.degree() {
            Some(d) => f.homogeneous_part(d),
            None => f.clone(),
        };
        Ok(HomogeneousPolynomial(top.retype(&self.presentation)))
    }

    /// `η(x^α)`, the monomial `x^α` of `Gr(A)`.
    pub fn monomial_symbol(&self, alpha: &Exponent) -> Polynomial {
        Polynomial::monomial(&self.presentation, alpha.clone(), self.presentation.field().one())
    }
}

pub fn principal_symbol(f: &Polynomial, gr: &GradedAlgebra) -> Result<HomogeneousPolynomial, GradedError> {
    gr.symbol(f)
}

/// `η(x^α x^β) == η(x^α) η(x^β)`.
pub fn symbol_of_product_check(gr: &GradedAlgebra, alpha: &Exponent, beta: &Exponent) -> bool {
    let one = gr.source.field().one();
    let a = Polynomial::monomial(&gr.source, alpha.clone(), one.clone());
    let b = Polynomial::monomial(&gr.source, beta.clone(), one);
    let left = gr.symbol(&(&a * &b)).expect("same algebra").into_poly();
    let right = &gr.monomial_symbol(alpha) * &gr.monomial_symbol(beta);
    left == right
}

/// `η(lm(f)) == lm(η(f))`, the graded side under the induced order.
pub fn symbol_lm_check(gr: &GradedAlgebra, f: &Polynomial, order: &MonomialOrder) -> Result<bool, GradedError> {
    let lm = f.leading_monomial(order).ok_or(GradedError::ZeroInput)?;
    let symbol = gr.symbol(f)?;
    let graded_order = induce_graded_order(order);
    Ok(symbol.poly().leading_monomial(&graded_order) == Some(lm))
}

/// `{η(g) : g ∈ G}`.
pub fn gr_ideal_generators(
    basis: &GroebnerBasis,
    gr: &GradedAlgebra,
) -> Result<Vec<HomogeneousPolynomial>, GradedError> {
    if !basis.is_verified() {
        return Err(GradedError::Unverified);
    }
    basis.generators().iter().map(|g| gr.symbol(g)).collect()
}

/// Symbols of a verified basis, packaged and re-verified over `Gr(A)`.
pub fn transfer_to_graded(basis: &GroebnerBasis, gr: &GradedAlgebra) -> Result<GroebnerBasis, GradedError> {
    let symbols = gr_ideal_generators(basis, gr)?;
    let graded = GroebnerBasis::checked(
        &gr.presentation,
        symbols.into_iter().map(HomogeneousPolynomial::into_poly).collect(),
        induce_graded_order(basis.order()),
    );
    if !graded.is_verified() {
        return Err(GradedError::Internal("symbols of a Gröbner basis failed is_groebner".into()));
    }
    Ok(graded)
}

/// Packages `lifts` as a basis under `order` after checking that
/// `η(lifts[j]) = graded[j]`. The lifts are assumed to lie in the target
/// ideal; the returned basis is marked verified iff `is_groebner` holds.
pub fn transfer_from_graded(
    gr: &GradedAlgebra,
    graded: &GroebnerBasis,
    lifts: &[Polynomial],
    order: &MonomialOrder,
) -> Result<GroebnerBasis, GradedError> {
    if !graded.algebra().same_as(&gr.presentation) {
        return Err(GradedError::Mismatch);
    }
    if !graded.is_verified() {
        return Err(GradedError::Unverified);
    }
    if graded.order() != &induce_graded_order(order) {
        return Err(GradedError::OrderMismatch);
    }
    if let Some(index) = graded.generators().iter().position(|g| !g.is_homogeneous()) {
        return Err(GradedError::NotHomogeneous { index });
    }
    if lifts.len() != graded.len() {
        return Err(GradedError::LengthMismatch { lifts: lifts.len(), graded: graded.len() });
    }
    for (index, (lift, target)) in lifts.iter().zip(graded.generators()).enumerate() {
        if gr.symbol(lift)?.poly() != target {
            return Err(GradedError::SymbolMismatch { index });
        }
    }
    Ok(GroebnerBasis::checked(&gr.source, lifts.to_vec(), order.clone()))
}

/// An element of `Gr(I)` outside the ideal generated by the symbols of
/// the original generators.
#[derive(Debug, Clone, PartialEq)]
pub struct GapElement {
    /// Position in [`GapReport::basis`].
    pub index: usize,
    pub symbol: HomogeneousPolynomial,
    /// Nonzero normal form of `symbol` modulo the naive graded basis.
    pub naive_remainder: Polynomial,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    /// Reduced Gröbner basis of `I = ⟨F⟩`.
    pub basis: GroebnerBasis,
    /// `certificates[i][k]` are the coefficients with
    /// `basis[i] = sum_k certificates[i][k] * F[k]`.
    pub certificates: Vec<Vec<Polynomial>>,
    /// `η(G)`, generating `Gr(I)`.
    pub graded_basis: Vec<HomogeneousPolynomial>,
    /// `η(F)`.
    pub naive_generators: Vec<HomogeneousPolynomial>,
    /// Reduced Gröbner basis of `⟨η(F)⟩` over `Gr(A)`.
    pub naive_basis: GroebnerBasis,
    pub gap_elements: Vec<GapElement>,
}

/// Compares `Gr(⟨F⟩)` with `⟨η(F)⟩`.
pub fn naive_transfer_gap_demo(
    gr: &GradedAlgebra,
    generators: &[Polynomial],
    order: &MonomialOrder,
) -> Result<GapReport, GradedError> {
    let (basis, certificates) = groebner::buchberger_with_certificates(&gr.source, generators, order)?;
    let graded_basis = gr_ideal_generators(&basis, gr)?;
    let naive_generators: Vec<HomogeneousPolynomial> =
        generators.iter().map(|f| gr.symbol(f)).collect::<Result<_, _>>()?;
    let graded_order = induce_graded_order(order);
    let naive: Vec<Polynomial> = naive_generators.iter().map(|h| h.poly().clone()).collect();
    let naive_basis = groebner::buchberger(&gr.presentation, &naive, &graded_order)?;
    let gap_elements = graded_basis
        .iter()
        .enumerate()
        .filter_map(|(index, symbol)| {
            let trace = groebner::reduce(symbol.poly(), naive_basis.generators(), &graded_order, ReduceMode::Full);
            (!trace.remainder.is_zero()).then(|| GapElement {
                index,
                symbol: symbol.clone(),
                naive_remainder: trace.remainder,
            })
        })
        .collect();
    Ok(GapReport { basis, certificates, graded_basis, naive_generators, naive_basis, gap_elements })
}
