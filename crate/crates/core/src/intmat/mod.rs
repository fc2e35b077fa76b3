//! Exact integer linear algebra: normal forms, kernels, cokernels and
//! lattice membership.

mod hermite;
mod matrix;
mod smith;

pub use hermite::{
    hermite_normal_form, kernel_basis, lattice_contains, lattice_solve, HermiteDecomposition,
};
pub use matrix::Matrix;
pub use smith::{cokernel_invariants, rank, smith_diagonal, smith_normal_form, SmithDecomposition};
