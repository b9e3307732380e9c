//! Analysis of finite tuples of real square matrices under the subadditive
//! thermodynamic formalism.
//!
//! Given an `N`-tuple `A = (A_1, ..., A_N)` of `d x d` matrices and a
//! parameter `s > 0`, this crate estimates the pressure
//! `P(A, s) = lim (1/n) log sum_{|w|=n} ||A_w||^s`, decides irreducibility
//! of the tuple with checkable certificates, constructs block-triangular
//! and cyclic (imprimitive) normal forms, and classifies whether the
//! associated matrix equilibrium state is mixing.
//!
//! Matrices come in two scalar modes: exact arbitrary-precision rationals
//! ([`Rat`]) and 64-bit floats. Structural certificates (invariant
//! subspaces, change-of-basis matrices, spectral-radius comparisons) are
//! produced in exact mode; pressure truncations are floating-point with a
//! reproducible pairwise summation contract.

pub mod budget;
pub mod error;
pub mod fixtures;
pub mod gibbs;
pub mod linalg;
pub mod mats;
pub mod numfield;
pub mod oracle;
pub mod poly;
pub mod pressure;
pub mod structure;
pub mod subspace;

mod scalar;

pub use budget::Budget;
pub use error::{Error, Result};
pub use mats::{ExactTuple, FloatTuple, Matrix, MatrixTuple, NormKind, Word};
pub use scalar::{FieldScalar, Rat, Scalar};
pub use subspace::Subspace;
