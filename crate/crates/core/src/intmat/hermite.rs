//! Column-style Hermite normal form, kernels and lattice membership.

use num_bigint::BigInt;

use crate::error::MatrixError;
use crate::intmat::Matrix;
use crate::scalar::IntScalar;

/// `m * u = h` with `u` unimodular.
///
/// `h` is in column echelon form: pivot `k` sits at `(pivots[k], k)`, is
/// positive, every entry above it is zero, and the entries to its left in the
/// pivot row lie in `[0, pivot)`. Columns from `pivots.len()` on are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteDecomposition<T = BigInt> {
    pub h: Matrix<T>,
    pub u: Matrix<T>,
    /// Row index of each pivot, in column order.
    pub pivots: Vec<usize>,
}

impl<T: IntScalar> HermiteDecomposition<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// A basis of the column lattice of the source matrix.
    pub fn lattice_basis(&self) -> Matrix<T> {
        self.h.select_columns(0..self.rank())
    }

    /// A basis of the integer kernel of the source matrix, one vector per
    /// column of the result.
    pub fn kernel_matrix(&self) -> Matrix<T> {
        let mut k = self.u.select_columns(self.rank()..self.u.cols());
        for j in 0..k.cols() {
            let first = (0..k.rows()).map(|i| k.get(i, j)).find(|v| !v.is_zero());
            if first.is_some_and(|v| v.is_negative()) {
                k.negate_col(j);
            }
        }
        k
    }

    /// Solves `m x = v` over the integers. `None` if `v` is not in the
    /// column lattice.
    pub fn solve(&self, v: &[T]) -> Result<Option<Vec<T>>, MatrixError> {
        if v.len() != self.h.rows() {
            return Err(MatrixError::DimensionMismatch {
                expected: self.h.rows(),
                found: v.len(),
            });
        }
        let mut residual = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        let mut next = 0;
        for i in 0..residual.len() {
            let value = residual[i].clone();
            if next < self.pivots.len() && self.pivots[next] == i {
                let p = self.h.get(i, next);
                if !value.is_multiple_of(p) {
                    return Ok(None);
                }
                let c = value / p.clone();
                if !c.is_zero() {
                    for (row, slot) in residual.iter_mut().enumerate().skip(i) {
                        let e = self.h.get(row, next);
                        if !e.is_zero() {
                            *slot = slot.clone() - c.clone() * e.clone();
                        }
                    }
                }
                coeffs.push(c);
                next += 1;
            } else if !value.is_zero() {
                return Ok(None);
            }
        }
        let mut x = vec![T::zero(); self.u.rows()];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, xi) in x.iter_mut().enumerate() {
                let e = self.u.get(i, k);
                if !e.is_zero() {
                    *xi = xi.clone() + c.clone() * e.clone();
                }
            }
        }
        Ok(Some(x))
    }
}

pub fn hermite_normal_form<T: IntScalar>(m: &Matrix<T>) -> HermiteDecomposition<T> {
    let mut h = m.clone();
    let mut u = Matrix::identity(m.cols());
    let mut pivots = Vec::new();
    let cols = m.cols();

    for r in 0..m.rows() {
        let pc = pivots.len();
        if pc == cols {
            break;
        }
        // Euclid across the row until only column `pc` is nonzero.
        loop {
            let best = (pc..cols)
                .filter(|&j| !h.get(r, j).is_zero())
                .min_by(|&a, &b| h.get(r, a).abs().cmp(&h.get(r, b).abs()));
            let Some(j) = best else { break };
            h.swap_cols(pc, j);
            u.swap_cols(pc, j);
            let p = h.get(r, pc).clone();
            let mut clean = true;
            for k in pc + 1..cols {
                let e = h.get(r, k);
                if !e.is_zero() {
                    let q = -e.div_floor(&p);
                    h.add_col_multiple(k, pc, &q);
                    u.add_col_multiple(k, pc, &q);
                    clean &= h.get(r, k).is_zero();
                }
            }
            if clean {
                break;
            }
        }
        if h.get(r, pc).is_zero() {
            continue;
        }
        if h.get(r, pc).is_negative() {
            h.negate_col(pc);
            u.negate_col(pc);
        }
        let p = h.get(r, pc).clone();
        for k in 0..pc {
            let q = -h.get(r, k).div_floor(&p);
            h.add_col_multiple(k, pc, &q);
            u.add_col_multiple(k, pc, &q);
        }
        pivots.push(r);
    }
    HermiteDecomposition { h, u, pivots }
}

/// Basis of `{x : m x = 0}`, one vector per entry. Each vector has a positive
/// first nonzero coordinate.
pub fn kernel_basis<T: IntScalar>(m: &Matrix<T>) -> Vec<Vec<T>> {
    hermite_normal_form(m).kernel_matrix().columns().collect()
}

/// Whether `v` lies in the column lattice of `m`.
pub fn lattice_contains<T: IntScalar>(m: &Matrix<T>, v: &[T]) -> Result<bool, MatrixError> {
    Ok(lattice_solve(m, v)?.is_some())
}

/// An integer solution of `m x = v`, if one exists.
pub fn lattice_solve<T: IntScalar>(m: &Matrix<T>, v: &[T]) -> Result<Option<Vec<T>>, MatrixError> {
    hermite_normal_form(m).solve(v)
}
