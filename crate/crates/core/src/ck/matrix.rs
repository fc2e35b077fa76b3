use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CkError, ValidationError};
use crate::IntMatrix;

/// A square 0-1 matrix that is irreducible and not a permutation matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZeroOneMatrix {
    n: usize,
    entries: Vec<bool>,
}

impl ZeroOneMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.n + j]
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| {
            if self.get(i, j) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Rows as 0/1 bytes.
    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| u8::from(self.get(i, j))).collect())
            .collect()
    }

    /// The transpose is again irreducible and not a permutation.
    pub fn transpose(&self) -> ZeroOneMatrix {
        let n = self.n;
        ZeroOneMatrix {
            n,
            entries: (0..n * n).map(|k| self.get(k % n, k / n)).collect(),
        }
    }

    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self, ValidationError> {
        let m = IntMatrix::from_fn(rows.len(), rows.first().map_or(0, |r| r.as_ref().len()), |i, j| {
            BigInt::from(rows[i].as_ref().get(j).copied().unwrap_or(0))
        });
        if rows.iter().any(|r| r.as_ref().len() != m.cols()) {
            return Err(ValidationError::NotSquare {
                rows: rows.len(),
                cols: m.cols(),
            });
        }
        validate(&m)
    }

    fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.get(v, w))
    }

    fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.get(w, v))
    }
}

impl fmt::Display for ZeroOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<&str> = (0..self.n)
                .map(|j| if self.get(i, j) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Checks shape, entry range, the permutation condition and irreducibility,
/// in that order.
pub fn validate(m: &IntMatrix) -> Result<ZeroOneMatrix, ValidationError> {
    if !m.is_square() {
        return Err(ValidationError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Err(ValidationError::Empty);
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if v.is_zero() {
                entries.push(false);
            } else if v.is_one() {
                entries.push(true);
            } else {
                return Err(ValidationError::EntryOutOfRange {
                    row: i,
                    col: j,
                    value: v.clone(),
                });
            }
        }
    }
    let a = ZeroOneMatrix { n, entries };
    if is_permutation(&a) {
        return Err(ValidationError::Permutation);
    }
    if !is_irreducible(&a) {
        return Err(ValidationError::Reducible);
    }
    Ok(a)
}

fn is_permutation(a: &ZeroOneMatrix) -> bool {
    (0..a.n).all(|i| a.successors(i).count() == 1 && a.predecessors(i).count() == 1)
}

/// Every vertex reaches vertex 0 and is reached from it by a path of
/// positive length. For `n = 1` this requires a loop.
fn is_irreducible(a: &ZeroOneMatrix) -> bool {
    reaches_all(a.n, |v| a.successors(v).collect()) && reaches_all(a.n, |v| a.predecessors(v).collect())
}

fn reaches_all(n: usize, next: impl Fn(usize) -> Vec<usize>) -> bool {
    let mut seen = vec![false; n];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for w in next(0) {
        if !seen[w] {
            seen[w] = true;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for w in next(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// `A + R1 - A R1`, where `R1` has an all-ones first row.
/// Entrywise `hat(i, j) = A(i, j) + [i = 0] - A(i, 0)`; its first column is `e1`.
pub fn hat(a: &ZeroOneMatrix) -> IntMatrix {
    hat_with_row(a, 0)
}

/// Variant of [`hat`] built from the matrix with all-ones row `row`
/// instead of the first. Only `row = 0` enters any invariant.
pub fn hat_with_row(a: &ZeroOneMatrix, row: usize) -> IntMatrix {
    assert!(row < a.n, "row index out of range");
    IntMatrix::from_fn(a.n, a.n, |i, j| {
        let mut v = BigInt::from(u8::from(a.get(i, j)));
        if i == row {
            v += 1;
        }
        v - u8::from(a.get(i, row))
    })
}

/// `R1`: all-ones first row, zero elsewhere.
pub fn r1(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, _| if i == 0 { BigInt::one() } else { BigInt::zero() })
}

/// `I - A`.
pub fn i_minus(a: &ZeroOneMatrix) -> IntMatrix {
    IntMatrix::identity(a.n)
        .subtract(&a.to_int_matrix())
        .expect("square")
}

pub fn i_minus_hat(a: &ZeroOneMatrix) -> IntMatrix {
    IntMatrix::identity(a.n).subtract(&hat(a)).expect("square")
}

/// The `(N+1) x N` matrix with an all-ones first row on top of `I - A`.
pub fn a_t_matrix(a: &ZeroOneMatrix) -> IntMatrix {
    let ia = i_minus(a);
    IntMatrix::from_fn(a.n + 1, a.n, |i, j| {
        if i == 0 {
            BigInt::one()
        } else {
            ia.get(i - 1, j).clone()
        }
    })
}

/// The all-ones `n x n` matrix (Cuntz algebra `O_n`).
pub fn gen_cuntz(n: usize) -> Result<ZeroOneMatrix, CkError> {
    if n < 2 {
        return Err(CkError::BadParameter(format!("cuntz size must be at least 2, got {n}")));
    }
    Ok(ZeroOneMatrix {
        n,
        entries: vec![true; n * n],
    })
}

/// The `nk x nk` block matrix with an all-ones `n x n` block in the top-right
/// corner and identity blocks on the block subdiagonal.
pub fn gen_amplified(n: usize, k: usize) -> Result<ZeroOneMatrix, CkError> {
    if n < 2 {
        return Err(CkError::BadParameter(format!("block size must be at least 2, got {n}")));
    }
    if k == 0 {
        return Err(CkError::BadParameter("amplification k must be at least 1".into()));
    }
    let size = n * k;
    let mut entries = vec![false; size * size];
    for i in 0..n {
        for j in 0..n {
            entries[i * size + (k - 1) * n + j] = true;
        }
    }
    for b in 1..k {
        for i in 0..n {
            entries[(b * n + i) * size + (b - 1) * n + i] = true;
        }
    }
    let m = ZeroOneMatrix { n: size, entries };
    debug_assert!(validate(&m.to_int_matrix()).is_ok());
    Ok(m)
}

/// Random irreducible non-permutation matrix: a random Hamiltonian cycle plus
/// independent extra entries with probability `density`. Permutation outcomes
/// are redrawn. Deterministic for a given seed.
pub fn gen_random_irreducible(n: usize, density: f64, seed: u64) -> Result<ZeroOneMatrix, CkError> {
    if n < 2 {
        return Err(CkError::BadParameter(format!("size must be at least 2, got {n}")));
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(CkError::BadParameter(format!("density must lie in (0, 1], got {density}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut entries = vec![false; n * n];
        for w in 0..n {
            entries[order[w] * n + order[(w + 1) % n]] = true;
        }
        for e in entries.iter_mut() {
            if rng.gen_bool(density) {
                *e = true;
            }
        }
        let m = ZeroOneMatrix { n, entries };
        if !is_permutation(&m) {
            debug_assert!(is_irreducible(&m));
            return Ok(m);
        }
    }
}
