//! Exact computer algebra for bijective skew PBW extensions over a field:
//! normal-form arithmetic, left Gröbner bases for ideals and submodules of
//! free modules, the associated graded algebra, and Gröbner basis transfer
//! between an algebra and its associated graded algebra.

pub mod algebra;
pub mod corpus;
pub mod field;
pub mod freemod;
pub mod graded;
pub mod groebner;
pub mod orders;
pub mod parse;

pub use algebra::{AlgebraError, AlgebraPresentation, Exponent, Polynomial, ProductData, Relation};
pub use field::{FieldError, FieldSpec, Scalar};
pub use orders::{ModuleOrder, ModuleScheme, MonomialOrder, OrderKind};
