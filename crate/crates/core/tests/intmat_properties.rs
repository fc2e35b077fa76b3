use ckinv::intmat::{cokernel_invariants, kernel_basis, lattice_contains, smith_normal_form};
use ckinv::{BigInt, IntMatrix};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn arb_matrix(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(-5i64..=5, r * c)
            .prop_map(move |v| IntMatrix::from_fn(r, c, |i, j| BigInt::from(v[i * c + j])))
    })
}

fn arb_square(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n * n)
            .prop_map(move |v| IntMatrix::from_fn(n, n, |i, j| BigInt::from(v[i * n + j])))
    })
}

fn basis_matrix(rows: usize, basis: &[Vec<BigInt>]) -> IntMatrix {
    IntMatrix::from_columns(rows, basis).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_decomposition_is_exact(m in arb_matrix(8)) {
        let d = smith_normal_form(&m);
        prop_assert_eq!(d.u.multiply(&m).unwrap().multiply(&d.v).unwrap(), d.s.clone());
        prop_assert_eq!(d.u.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(d.v.determinant().abs(), BigInt::from(1));
        let diag = d.diagonal();
        let nonzero: Vec<&BigInt> = diag.iter().take_while(|x| !x.is_zero()).collect();
        prop_assert_eq!(nonzero.len(), d.rank());
        prop_assert!(diag[d.rank()..].iter().all(Zero::is_zero));
        prop_assert!(nonzero.iter().all(|x| x.is_positive()));
        prop_assert!(nonzero.windows(2).all(|w| w[1].is_multiple_of(w[0])));
    }

    #[test]
    fn cokernel_is_transpose_invariant(m in arb_square(6)) {
        prop_assert_eq!(cokernel_invariants(&m), cokernel_invariants(&m.transpose()));
    }

    #[test]
    fn rank_nullity_for_square_matrices(m in arb_square(7)) {
        prop_assert_eq!(cokernel_invariants(&m).free_rank(), kernel_basis(&m).len());
    }

    #[test]
    fn images_lie_in_the_lattice(m in arb_matrix(6), x in prop::collection::vec(-9i64..=9, 6)) {
        let x: Vec<BigInt> = x.iter().take(m.cols()).map(|&v| BigInt::from(v)).collect();
        let y = m.apply(&x).unwrap();
        prop_assert!(lattice_contains(&m, &y).unwrap());
    }

    #[test]
    fn kernel_basis_is_complete(
        (r, c) in (1usize..=3, 2usize..=4),
        entries in prop::collection::vec(-2i64..=2, 12),
    ) {
        let m = IntMatrix::from_fn(r, c, |i, j| BigInt::from(entries[i * c + j]));
        assert_complete_on_box(&m, 2);
    }

}

/// Every kernel vector in `[-k, k]^n` is an integer combination of the basis.
fn assert_complete_on_box(m: &IntMatrix, k: i64) {
    let n = m.cols();
    let basis = kernel_basis(m);
    for b in &basis {
        assert!(m.apply(b).unwrap().iter().all(Zero::is_zero));
    }
    let bm = (!basis.is_empty()).then(|| basis_matrix(n, &basis));
    let side = (2 * k + 1) as usize;
    for code in 0..side.pow(n as u32) {
        let mut rest = code;
        let v: Vec<BigInt> = (0..n)
            .map(|_| {
                let d = (rest % side) as i64 - k;
                rest /= side;
                BigInt::from(d)
            })
            .collect();
        if m.apply(&v).unwrap().iter().all(Zero::is_zero) {
            match &bm {
                Some(bm) => assert!(lattice_contains(bm, &v).unwrap(), "{v:?} missed for\n{m}"),
                None => assert!(v.iter().all(Zero::is_zero), "{v:?} missed for\n{m}"),
            }
        }
    }
}

#[test]
fn kernel_basis_complete_on_fixed_cases() {
    let cases = [
        IntMatrix::from_i64_rows(&[[2, 4, 6]]),
        IntMatrix::from_i64_rows(&[[1, 2, 3], [2, 4, 6]]),
        IntMatrix::from_i64_rows(&[[3, -3, 0], [0, 2, -2]]),
        IntMatrix::from_i64_rows(&[[0, 0, 0]]),
    ];
    for m in &cases {
        assert_complete_on_box(m, 4);
    }
}
