//! Matrices with prescribed K-groups and the group-level correspondence
//! between `(K0, unit class)` pairs and `(ExtW, ExtS)` pairs.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ck::{i_minus, validate, ZeroOneMatrix};
use crate::error::{GroupError, RealizeError};
use crate::fgab::FgAbGroup;
use crate::intmat::{cokernel_invariants, kernel_basis};
use crate::presented::{GroupElement, PresentedGroup};
use crate::IntMatrix;

/// Target `Z^rank + Z/n1 + ... + Z/nk`; the factors need not form a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationTarget {
    pub rank: usize,
    pub factors: Vec<BigInt>,
}

impl RealizationTarget {
    pub fn new(rank: usize, factors: Vec<BigInt>) -> Result<Self, RealizeError> {
        if let Some(f) = factors.iter().find(|f| **f < BigInt::from(2)) {
            return Err(RealizeError::BadFactor(f.clone()));
        }
        Ok(RealizationTarget { rank, factors })
    }

    pub fn group(&self) -> FgAbGroup {
        FgAbGroup::free(self.rank).direct_sum(&FgAbGroup::from_cyclic(&self.factors))
    }

    /// `rank + sum(1 + n_i) + 3`.
    pub fn matrix_size(&self) -> Result<usize, RealizeError> {
        let mut size = self.rank + 3;
        for f in &self.factors {
            let f: usize = f
                .try_into()
                .map_err(|_| RealizeError::BadFactor(f.clone()))?;
            size += 1 + f;
        }
        Ok(size)
    }
}

/// Block matrix with `Z^N/(I-A)Z^N ≅ Z^r + T` and `Ker(I-A) ≅ Z^r`.
///
/// The upper-left block is `D = diag(I_r, J_1, ..., J_k)` with `J_i` the
/// all-ones `(1+n_i)`-square; every `D` row ends in `0 0 1`, followed by the
/// rows `[1..1 | 0 0 1]`, `[0..0 | 0 1 1]`, `[0..0 | 1 1 1]`. The result is
/// validated and its invariants checked before it is returned.
pub fn realize_k0(target: &RealizationTarget) -> Result<ZeroOneMatrix, RealizeError> {
    let size = target.matrix_size()?;
    let d = size - 3;
    let mut rows = vec![vec![0u8; size]; size];
    for (i, row) in rows.iter_mut().enumerate().take(target.rank) {
        row[i] = 1;
    }
    let mut offset = target.rank;
    for f in &target.factors {
        let block: usize = f.try_into().expect("checked in matrix_size");
        let block = block + 1;
        for row in rows.iter_mut().skip(offset).take(block) {
            row[offset..offset + block].fill(1);
        }
        offset += block;
    }
    for row in rows.iter_mut().take(d) {
        row[size - 1] = 1;
    }
    rows[d][..d].fill(1);
    rows[d][size - 1] = 1;
    rows[d + 1][size - 2] = 1;
    rows[d + 1][size - 1] = 1;
    rows[d + 2][size - 3..].fill(1);

    let raw = IntMatrix::from_fn(size, size, |i, j| BigInt::from(rows[i][j]));
    let a = validate(&raw).map_err(|e| RealizeError::Verification(e.to_string()))?;

    let ia = i_minus(&a);
    let coker = cokernel_invariants(&ia);
    if coker != target.group() {
        return Err(RealizeError::Verification(format!(
            "cokernel {coker} differs from target {}",
            target.group()
        )));
    }
    let kernel_rank = kernel_basis(&ia).len();
    if kernel_rank != target.rank {
        return Err(RealizeError::Verification(format!(
            "kernel rank {kernel_rank} differs from {}",
            target.rank
        )));
    }
    Ok(a)
}

/// `G / Ze`.
pub fn quotient_by_cyclic(g: &PresentedGroup, e: &GroupElement) -> Result<FgAbGroup, GroupError> {
    g.quotient_by_elements(std::slice::from_ref(e))
}

/// Equivalence of pointed groups `(G, d) ~ (H, e)` decided by
/// `G ≅ H` and `G/Zd ≅ H/Ze`.
pub fn pair_equivalent(
    g: &PresentedGroup,
    d: &GroupElement,
    h: &PresentedGroup,
    e: &GroupElement,
) -> Result<bool, GroupError> {
    let quotients = quotient_by_cyclic(g, d)? == quotient_by_cyclic(h, e)?;
    Ok(g.group() == h.group() && quotients)
}

/// The `(ExtW, ExtS)` pair predicted by a pointed group `(G, d)`:
/// `(G, Z + G/Zd)`.
pub fn ext_pair_from_k0_pair(
    g: &PresentedGroup,
    d: &GroupElement,
) -> Result<(FgAbGroup, FgAbGroup), GroupError> {
    let strong = FgAbGroup::free(1).direct_sum(&quotient_by_cyclic(g, d)?);
    Ok((g.group().clone(), strong))
}

/// Searches `e in Z + M` with `(Z + M)/Ze ≅ G`.
///
/// Free coordinates range over `[-bound, bound]`, torsion coordinates over
/// all residues. Coordinates are `(Z, free part of M, torsion of M)` in
/// canonical order. The first witness in the order that visits each free
/// coordinate as `0, 1, -1, 2, -2, ...` (lexicographic across coordinates)
/// is returned. `None` only means nothing was found within the bound.
pub fn range_witness(g: &FgAbGroup, m: &FgAbGroup, bound: u64) -> Option<Vec<BigInt>> {
    let ambient = PresentedGroup::from_canonical(&FgAbGroup::free(1).direct_sum(m));
    let free = 1 + m.free_rank();
    let free_values = signed_sequence(bound);
    let ranges: Vec<Vec<BigInt>> = (0..ambient.generators())
        .map(|i| {
            if i < free {
                free_values.clone()
            } else {
                let d = &m.invariant_factors()[i - free];
                num_iter(d)
            }
        })
        .collect();

    let mut idx = vec![0usize; ranges.len()];
    loop {
        let coords: Vec<BigInt> = idx.iter().zip(&ranges).map(|(&i, r)| r[i].clone()).collect();
        let e = ambient.element(coords.clone()).expect("length matches");
        let q = quotient_by_cyclic(&ambient, &e).expect("same presentation");
        if &q == g {
            return Some(coords);
        }
        // advance the last coordinate fastest
        let mut k = idx.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < ranges[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn signed_sequence(bound: u64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero()];
    for k in 1..=bound {
        v.push(BigInt::from(k));
        v.push(-BigInt::from(k));
    }
    v
}

fn num_iter(d: &BigInt) -> Vec<BigInt> {
    let mut v = Vec::new();
    let mut x = BigInt::zero();
    while &x < d {
        v.push(x.clone());
        x += BigInt::one();
    }
    v
}
