use serde::{Deserialize, Serialize};

use crate::ck::matrix::{i_minus, i_minus_hat, ZeroOneMatrix};
use crate::ck::report::{invariants, CkReport};
use crate::fgab::FgAbGroup;
use crate::intmat::cokernel_invariants;

/// `O_A ≅ O_B` iff `Z^N/(I-A)` and `Z^N/(I-Â)` match their counterparts.
pub fn is_isomorphic_ck(a: &ZeroOneMatrix, b: &ZeroOneMatrix) -> bool {
    is_stably_isomorphic_ck(a, b)
        && cokernel_invariants(&i_minus_hat(a)) == cokernel_invariants(&i_minus_hat(b))
}

/// Stable isomorphism: the weak extension groups (equivalently `K0`) agree.
pub fn is_stably_isomorphic_ck(a: &ZeroOneMatrix, b: &ZeroOneMatrix) -> bool {
    cokernel_invariants(&i_minus(a)) == cokernel_invariants(&i_minus(b))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantPair {
    pub invariant: String,
    pub left: FgAbGroup,
    pub right: FgAbGroup,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub isomorphic: bool,
    pub stably_isomorphic: bool,
    pub invariants: Vec<InvariantPair>,
}

/// Full side-by-side comparison. The verdicts come from the cokernel
/// criteria; the table lists every reported group.
pub fn compare(a: &ZeroOneMatrix, b: &ZeroOneMatrix) -> Comparison {
    let (ra, rb) = (invariants(a), invariants(b));
    Comparison {
        isomorphic: is_isomorphic_ck(a, b),
        stably_isomorphic: is_stably_isomorphic_ck(a, b),
        invariants: pair_table(&ra, &rb),
    }
}

fn pair_table(ra: &CkReport, rb: &CkReport) -> Vec<InvariantPair> {
    ra.groups()
        .into_iter()
        .zip(rb.groups())
        .map(|((name, l), (_, r))| InvariantPair {
            invariant: name.to_string(),
            left: l.clone(),
            right: r.clone(),
            equal: l == r,
        })
        .collect()
}
