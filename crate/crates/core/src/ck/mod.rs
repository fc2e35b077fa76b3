//! Invariants of Cuntz-Krieger algebras `O_A` read off the matrix `A`.
//!
//! | group | computed as |
//! |---|---|
//! | `K0 = ExtW1` | `Z^N/(I-A^t)Z^N ≅ Z^N/(I-A)Z^N` |
//! | `K1 = ExtW0` | `Ker(I-A)` |
//! | `ExtS1` | `Z^N/(I-Â)Z^N` |
//! | `ExtS0` | `Ker(A_T) ≅ Ker(I-Â)/i1(Z)` |
//!
//! The homotopy groups of `Aut(O_A)` and of its stabilisation follow from
//! these by tensor and Tor formulas.

mod decide;
mod matrix;
mod report;
mod sequence;

pub use decide::{compare, is_isomorphic_ck, is_stably_isomorphic_ck, Comparison, InvariantPair};
pub use matrix::{
    a_t_matrix, gen_amplified, gen_cuntz, gen_random_irreducible, hat, hat_with_row, i_minus,
    i_minus_hat, r1, validate, ZeroOneMatrix,
};
pub use report::{invariants, pi_aut, pi_aut_stable, BaseGroups, CkReport};
pub use sequence::{
    iota_one, k0_presentation, six_term, unit_class, FiveTermSequence, IotaOne, MAP_NAMES,
    NODE_NAMES,
};
