//! Smith normal form over an exact integer scalar.
//!
//! Pivoting always takes the nonzero entry of least absolute value in the
//! active block. Row and column reductions use floor division, so every
//! remainder is strictly smaller than the pivot and the pivot magnitude
//! decreases until the pivot row and column are clear.

use num_bigint::BigInt;

use crate::fgab::FgAbGroup;
use crate::intmat::Matrix;
use crate::scalar::IntScalar;

/// `u * m * v = s` with `u`, `v` unimodular and `s` diagonal with
/// non-negative entries forming a divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition<T = BigInt> {
    pub u: Matrix<T>,
    pub s: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: IntScalar> SmithDecomposition<T> {
    /// The `min(rows, cols)` diagonal entries of `s`, unit factors included.
    pub fn diagonal(&self) -> Vec<T> {
        let k = self.s.rows().min(self.s.cols());
        (0..k).map(|i| self.s.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form<T: IntScalar>(m: &Matrix<T>) -> SmithDecomposition<T> {
    let mut w = Reducer {
        s: m.clone(),
        u: Some(Matrix::identity(m.rows())),
        v: Some(Matrix::identity(m.cols())),
    };
    w.run();
    SmithDecomposition {
        u: w.u.unwrap(),
        s: w.s,
        v: w.v.unwrap(),
    }
}

/// Diagonal of the Smith form without tracking transforms.
pub fn smith_diagonal<T: IntScalar>(m: &Matrix<T>) -> Vec<T> {
    let mut w = Reducer {
        s: m.clone(),
        u: None,
        v: None,
    };
    w.run();
    let k = m.rows().min(m.cols());
    (0..k).map(|i| w.s.get(i, i).clone()).collect()
}

/// Rank over the rationals.
pub fn rank<T: IntScalar>(m: &Matrix<T>) -> usize {
    smith_diagonal(m).iter().filter(|d| !d.is_zero()).count()
}

/// Canonical form of `Z^rows / (column lattice of m)`.
pub fn cokernel_invariants<T: IntScalar>(m: &Matrix<T>) -> FgAbGroup {
    let diag = smith_diagonal(m);
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion = diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .map(IntScalar::to_big)
        .collect();
    FgAbGroup::from_chain(m.rows() - rank, torsion)
}

struct Reducer<T> {
    s: Matrix<T>,
    u: Option<Matrix<T>>,
    v: Option<Matrix<T>>,
}

impl<T: IntScalar> Reducer<T> {
    fn run(&mut self) {
        let k = self.s.rows().min(self.s.cols());
        for t in 0..k {
            if !self.reduce_at(t) {
                break;
            }
            if self.s.get(t, t).is_negative() {
                self.s.negate_row(t);
                if let Some(u) = &mut self.u {
                    u.negate_row(t);
                }
            }
        }
    }

    /// Clears row and column `t` around a pivot dividing the whole remaining
    /// block. Returns false if the remaining block is zero.
    fn reduce_at(&mut self, t: usize) -> bool {
        loop {
            let Some((pi, pj)) = self.min_pivot(t) else {
                return false;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);

            let pivot = self.s.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..self.s.rows() {
                let e = self.s.get(i, t);
                if !e.is_zero() {
                    let q = e.div_floor(&pivot);
                    self.add_row(i, t, &-q);
                    clean &= self.s.get(i, t).is_zero();
                }
            }
            for j in t + 1..self.s.cols() {
                let e = self.s.get(t, j);
                if !e.is_zero() {
                    let q = e.div_floor(&pivot);
                    self.add_col(j, t, &-q);
                    clean &= self.s.get(t, j).is_zero();
                }
            }
            if !clean {
                continue;
            }

            // Divisibility: fold an offending row into the pivot row and retry.
            match self.non_divisible_row(t, &pivot) {
                Some(i) => self.add_row(t, i, &T::one()),
                None => return true,
            }
        }
    }

    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, T)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let e = self.s.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let a = e.abs();
                if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    let done = a.is_one();
                    best = Some((i, j, a));
                    if done {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn non_divisible_row(&self, t: usize, pivot: &T) -> Option<usize> {
        (t + 1..self.s.rows()).find(|&i| {
            (t + 1..self.s.cols()).any(|j| !self.s.get(i, j).is_multiple_of(pivot))
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
    }

    fn add_row(&mut self, target: usize, source: usize, f: &T) {
        self.s.add_row_multiple(target, source, f);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(target, source, f);
        }
    }

    fn add_col(&mut self, target: usize, source: usize, f: &T) {
        self.s.add_col_multiple(target, source, f);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(target, source, f);
        }
    }
}
