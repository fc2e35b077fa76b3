use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::ck::matrix::{a_t_matrix, i_minus, i_minus_hat, ZeroOneMatrix};
use crate::ck::sequence::iota_one;
use crate::error::CkError;
use crate::fgab::{FgAbGroup, Natural};
use crate::intmat::{cokernel_invariants, kernel_basis};

/// Every invariant of `O_A` this crate computes, as canonical groups.
///
/// Field order and names follow the report JSON schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CkReport {
    pub n: usize,
    #[serde(rename = "K0")]
    pub k0: FgAbGroup,
    #[serde(rename = "K1")]
    pub k1: FgAbGroup,
    #[serde(rename = "ExtW1")]
    pub ext_w1: FgAbGroup,
    #[serde(rename = "ExtW0")]
    pub ext_w0: FgAbGroup,
    #[serde(rename = "ExtS1")]
    pub ext_s1: FgAbGroup,
    #[serde(rename = "ExtS0")]
    pub ext_s0: FgAbGroup,
    pub pi1_aut: FgAbGroup,
    pub pi2_aut: FgAbGroup,
    pub pi1_aut_stable: FgAbGroup,
    pub pi2_aut_stable: FgAbGroup,
    /// Order of the class of `(I - A) e1` in `ExtS1`; 0 means infinite.
    #[serde(with = "natural")]
    pub iota_one_order: BigInt,
}

mod natural {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        Natural(v.clone()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        Ok(Natural::deserialize(d)?.0)
    }
}

impl CkReport {
    /// `(label, group)` pairs in schema order.
    pub fn groups(&self) -> [(&'static str, &FgAbGroup); 10] {
        [
            ("K0", &self.k0),
            ("K1", &self.k1),
            ("ExtW1", &self.ext_w1),
            ("ExtW0", &self.ext_w0),
            ("ExtS1", &self.ext_s1),
            ("ExtS0", &self.ext_s0),
            ("pi1_aut", &self.pi1_aut),
            ("pi2_aut", &self.pi2_aut),
            ("pi1_aut_stable", &self.pi1_aut_stable),
            ("pi2_aut_stable", &self.pi2_aut_stable),
        ]
    }
}

/// The four groups the homotopy formulas consume.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseGroups {
    pub k0: FgAbGroup,
    pub k1: FgAbGroup,
    pub ext_s1: FgAbGroup,
    pub ext_s0: FgAbGroup,
}

impl BaseGroups {
    pub fn of(a: &ZeroOneMatrix) -> Self {
        let ia = i_minus(a);
        let k0 = cokernel_invariants(&ia.transpose());
        assert_eq!(
            k0,
            cokernel_invariants(&ia),
            "cokernels of I - A and I - A^t must agree"
        );
        BaseGroups {
            k0,
            k1: FgAbGroup::free(kernel_basis(&ia).len()),
            ext_s1: cokernel_invariants(&i_minus_hat(a)),
            ext_s0: FgAbGroup::free(kernel_basis(&a_t_matrix(a)).len()),
        }
    }

    /// Unstabilised homotopy groups:
    /// `pi1 = (S1 (x) K0) + (S0 (x) K1)`,
    /// `pi2 = (S1 (x) K1) + (S0 (x) K0) + Tor(S1, K0)`.
    pub fn pi(&self, degree: u32) -> Result<FgAbGroup, CkError> {
        pi_formula(&self.ext_s1, &self.ext_s0, &self.k0, &self.k1, degree)
    }

    /// Stabilised homotopy groups: the same formulas with the weak
    /// extension groups `(K0, K1)` in place of `(S1, S0)`.
    pub fn pi_stable(&self, degree: u32) -> Result<FgAbGroup, CkError> {
        pi_formula(&self.k0, &self.k1, &self.k0, &self.k1, degree)
    }
}

fn pi_formula(
    e1: &FgAbGroup,
    e0: &FgAbGroup,
    k0: &FgAbGroup,
    k1: &FgAbGroup,
    degree: u32,
) -> Result<FgAbGroup, CkError> {
    match degree {
        1 => Ok(e1.tensor(k0).direct_sum(&e0.tensor(k1))),
        2 => Ok(e1
            .tensor(k1)
            .direct_sum(&e0.tensor(k0))
            .direct_sum(&e1.tor(k0))),
        d => Err(CkError::BadDegree(d)),
    }
}

pub fn invariants(a: &ZeroOneMatrix) -> CkReport {
    let base = BaseGroups::of(a);
    let ext_w1 = cokernel_invariants(&i_minus(a));
    let ext_w0 = base.k1.clone();
    CkReport {
        n: a.size(),
        pi1_aut: base.pi(1).expect("degree 1"),
        pi2_aut: base.pi(2).expect("degree 2"),
        pi1_aut_stable: base.pi_stable(1).expect("degree 1"),
        pi2_aut_stable: base.pi_stable(2).expect("degree 2"),
        iota_one_order: iota_one(a).order,
        k0: base.k0,
        k1: base.k1,
        ext_w1,
        ext_w0,
        ext_s1: base.ext_s1,
        ext_s0: base.ext_s0,
    }
}

pub fn pi_aut(a: &ZeroOneMatrix, degree: u32) -> Result<FgAbGroup, CkError> {
    BaseGroups::of(a).pi(degree)
}

pub fn pi_aut_stable(a: &ZeroOneMatrix, degree: u32) -> Result<FgAbGroup, CkError> {
    BaseGroups::of(a).pi_stable(degree)
}
