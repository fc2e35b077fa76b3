//! Invariants of Cuntz-Krieger algebras computed from their defining 0-1
//! matrices by exact integer linear algebra.
//!
//! The layers, bottom up:
//!
//! * [`intmat`]: integer matrices, Smith and Hermite normal forms, kernels,
//!   cokernels and lattice membership, generic over [`IntScalar`].
//! * [`fgab`] and [`presented`]: finitely generated abelian groups in
//!   canonical form, presented groups with elements and homomorphisms, and
//!   exactness checks.
//! * [`ck`]: matrix validation, the K-groups, extension groups and homotopy
//!   groups of the automorphism group, the five-term exact sequence and the
//!   isomorphism decisions.
//! * [`realize`]: matrices with prescribed K-groups and the group-pair
//!   correspondences between unit classes and extension groups.

pub mod ck;
pub mod error;
pub mod fgab;
pub mod intmat;
pub mod presented;
pub mod realize;
pub mod scalar;

pub use error::{CkError, GroupError, MatrixError, RealizeError, ValidationError};
pub use fgab::FgAbGroup;
pub use intmat::{HermiteDecomposition, Matrix, SmithDecomposition};
pub use presented::{GroupElement, GroupHom, PresentedGroup};
pub use scalar::IntScalar;

pub use num_bigint::BigInt;

/// Arbitrary-precision integer matrix; the instantiation every invariant
/// computation uses.
pub type IntMatrix = Matrix<BigInt>;
/// Fixed-width matrix for small inputs; arithmetic may overflow.
pub type I64Matrix = Matrix<i64>;
pub type I128Matrix = Matrix<i128>;

pub type IntSmith = SmithDecomposition<BigInt>;
pub type IntHermite = HermiteDecomposition<BigInt>;
