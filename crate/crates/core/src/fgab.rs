//! Finitely generated abelian groups in invariant-factor form.
//!
//! A group is `Z^r + Z/d1 + ... + Z/dk` with `2 <= d1 | d2 | ... | dk`.
//! Two values compare equal exactly when the groups are isomorphic.
//! Tensor, Tor, Hom and Ext are evaluated by their closed forms on cyclic
//! summands.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GroupError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// `Z/n`, with `Z/0 = Z`.
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        Self::from_cyclic(&[n.into()])
    }

    /// Canonical form of `Z/m1 + Z/m2 + ...`; a modulus of 0 contributes a
    /// free summand, a modulus of 1 nothing. Signs are ignored.
    pub fn from_cyclic(moduli: &[BigInt]) -> Self {
        let mut free_rank = 0;
        let mut torsion = Vec::new();
        for m in moduli {
            if m.is_zero() {
                free_rank += 1;
            } else if !m.abs().is_one() {
                torsion.push(m.abs());
            }
        }
        FgAbGroup {
            free_rank,
            invariant_factors: invariant_chain(torsion),
        }
    }

    /// Assembles a group from an already divisible chain of factors that
    /// are all at least 2. Intended for normal-form output.
    pub(crate) fn from_chain(free_rank: usize, factors: Vec<BigInt>) -> Self {
        debug_assert!(factors.iter().all(|d| *d > BigInt::one()));
        debug_assert!(factors.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        FgAbGroup {
            free_rank,
            invariant_factors: factors,
        }
    }

    /// Checked constructor for externally supplied canonical data.
    pub fn try_new(free_rank: usize, invariant_factors: Vec<BigInt>) -> Result<Self, GroupError> {
        if let Some(d) = invariant_factors.iter().find(|d| **d < BigInt::from(2)) {
            return Err(GroupError::NotCanonical(format!("factor {d} is below 2")));
        }
        if let Some(w) = invariant_factors
            .windows(2)
            .find(|w| !w[1].is_multiple_of(&w[0]))
        {
            return Err(GroupError::NotCanonical(format!(
                "{} does not divide {}",
                w[0], w[1]
            )));
        }
        Ok(FgAbGroup {
            free_rank,
            invariant_factors,
        })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn torsion_part(&self) -> FgAbGroup {
        FgAbGroup::from_chain(0, self.invariant_factors.clone())
    }

    /// Order of the group; `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().product())
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut factors = self.invariant_factors.clone();
        factors.extend(other.invariant_factors.iter().cloned());
        FgAbGroup {
            free_rank: self.free_rank + other.free_rank,
            invariant_factors: invariant_chain(factors),
        }
    }

    pub fn tensor(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut factors = Vec::new();
        for _ in 0..self.free_rank {
            factors.extend(other.invariant_factors.iter().cloned());
        }
        for _ in 0..other.free_rank {
            factors.extend(self.invariant_factors.iter().cloned());
        }
        factors.extend(self.pairwise_gcds(other));
        FgAbGroup {
            free_rank: self.free_rank * other.free_rank,
            invariant_factors: invariant_chain(factors),
        }
    }

    pub fn tor(&self, other: &FgAbGroup) -> FgAbGroup {
        FgAbGroup {
            free_rank: 0,
            invariant_factors: invariant_chain(self.pairwise_gcds(other).collect()),
        }
    }

    /// `Hom(self, other)`.
    pub fn hom(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut factors = Vec::new();
        for _ in 0..self.free_rank {
            factors.extend(other.invariant_factors.iter().cloned());
        }
        factors.extend(self.pairwise_gcds(other));
        FgAbGroup {
            free_rank: self.free_rank * other.free_rank,
            invariant_factors: invariant_chain(factors),
        }
    }

    /// `Ext^1(self, other)`: each `Z/n` summand of `self` contributes
    /// `other / n other`.
    pub fn ext1(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut factors = Vec::new();
        for n in &self.invariant_factors {
            factors.extend(std::iter::repeat_n(n.clone(), other.free_rank));
        }
        factors.extend(self.pairwise_gcds(other));
        FgAbGroup {
            free_rank: 0,
            invariant_factors: invariant_chain(factors),
        }
    }

    pub fn is_isomorphic(&self, other: &FgAbGroup) -> bool {
        self == other
    }

    /// ASCII rendering: `0`, `Z^2`, `Z/2 + Z/6`, `Z^1 + Z/2`.
    pub fn render(&self) -> String {
        self.to_string()
    }

    fn pairwise_gcds<'a>(&'a self, other: &'a FgAbGroup) -> impl Iterator<Item = BigInt> + 'a {
        self.invariant_factors.iter().flat_map(move |d| {
            other.invariant_factors.iter().map(move |e| d.gcd(e))
        })
    }
}

/// Rewrites a list of positive moduli into a divisibility chain with unit
/// factors removed. Each `(gcd, lcm)` exchange preserves the prime-power
/// multiset, so no factorisation is needed.
fn invariant_chain(mut f: Vec<BigInt>) -> Vec<BigInt> {
    f.retain(|d| !d.is_one());
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if !f[j].is_multiple_of(&f[i]) {
                let g = f[i].gcd(&f[j]);
                let l = f[i].lcm(&f[j]);
                f[i] = g;
                f[j] = l;
            }
        }
    }
    f.retain(|d| !d.is_one());
    f
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" + "))
    }
}

/// A non-negative integer serialized as a JSON number when it fits in `u64`
/// and as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Natural(pub BigInt);

impl Serialize for Natural {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Natural {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(Natural(v.into())),
            Repr::Text(t) => t
                .parse::<BigInt>()
                .ok()
                .filter(|v| !v.is_negative())
                .map(Natural)
                .ok_or_else(|| serde::de::Error::custom(format!("not a natural number: {t}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupRepr {
    rank: usize,
    torsion: Vec<Natural>,
}

impl Serialize for FgAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GroupRepr {
            rank: self.free_rank,
            torsion: self.invariant_factors.iter().cloned().map(Natural).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FgAbGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = GroupRepr::deserialize(d)?;
        FgAbGroup::try_new(r.rank, r.torsion.into_iter().map(|n| n.0).collect())
            .map_err(serde::de::Error::custom)
    }
}
