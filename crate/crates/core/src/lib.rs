//! Interval and generalized-interval categories of finite posets.
//!
//! Given finite posets `X`, `Y` and a monotone map `F : Y -> J(X)` into the
//! closed subsets of `X`, this crate builds the poset `Γ` of pairs `(x, y)`
//! with `x ∈ F(y)` and the zero-relation category on the same objects, and
//! checks exactly that the two have the same derived invariants: the
//! Coxeter polynomial, and the Ext-vanishing and endomorphism algebra of
//! the explicit tilting module.
//!
//! The linear algebra is generic over [`Field`]; the aliases below fix the
//! exact scalar types used everywhere else.

pub mod algebra;
pub mod enumerate;
mod error;
pub mod format;
pub mod gamma;
pub mod iso;
pub mod linalg;
pub mod orientations;
pub mod paths;
pub mod polynomial;
pub mod poset;
pub mod rep;
pub mod samples;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Field, Scalar};

/// Exact integers for Cartan and Coxeter matrices.
pub type Integer = num_bigint::BigInt;
/// Exact rationals for all rank computations.
pub type Rational = num_rational::BigRational;
pub type IntPolynomial = polynomial::Polynomial<Integer>;
pub type IntMatrix = linalg::Matrix<Integer>;
pub type RationalMatrix = linalg::Matrix<Rational>;
pub type RationalModule = rep::Module<Rational>;
