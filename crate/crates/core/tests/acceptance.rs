//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Every comparison is exact equality of canonical forms.

use std::process::ExitCode;
use std::time::Instant;

use ckinv::ck::{
    compare, gen_amplified, gen_cuntz, gen_random_irreducible, hat, i_minus, i_minus_hat, invariants, is_isomorphic_ck,
    k0_presentation, pi_aut, r1, six_term, unit_class, ZeroOneMatrix,
};
use ckinv::intmat::{cokernel_invariants, kernel_basis, smith_normal_form};
use ckinv::realize::{realize_k0, RealizationTarget};
use ckinv::{BigInt, FgAbGroup, I128Matrix, IntMatrix};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CORPUS_SIZE: u64 = 500;
const PAIRS: u64 = 200;
const SNF_CASES: u64 = 1000;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn cyc(m: &[i64]) -> FgAbGroup {
    FgAbGroup::from_cyclic(&m.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>())
}

fn corpus() -> Vec<ZeroOneMatrix> {
    const DENSITIES: [f64; 4] = [0.1, 0.2, 0.35, 0.5];
    (0..CORPUS_SIZE)
        .map(|seed| {
            let n = 2 + (seed % 11) as usize;
            gen_random_irreducible(n, DENSITIES[(seed / 11 % 4) as usize], 0xC0FFEE + seed).unwrap()
        })
        .collect()
}

fn expect_eq(what: &str, got: &FgAbGroup, want: &FgAbGroup) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn over_corpus(
    corpus: &[ZeroOneMatrix],
    check: impl Fn(&ZeroOneMatrix) -> Result<(), String>,
) -> Outcome {
    for (i, a) in corpus.iter().enumerate() {
        check(a).map_err(|e| format!("corpus matrix {i} (N = {}): {e}", a.size()))?;
    }
    Ok(format!("{} matrices", corpus.len()))
}

fn cuntz_fixtures() -> Outcome {
    for n in 2..=12usize {
        let r = invariants(&gen_cuntz(n).unwrap());
        let k = cyc(&[n as i64 - 1]);
        let zero = FgAbGroup::trivial();
        let ctx = |s: &str| format!("N = {n}, {s}");
        expect_eq(&ctx("K0"), &r.k0, &k)?;
        expect_eq(&ctx("K1"), &r.k1, &zero)?;
        expect_eq(&ctx("ExtS1"), &r.ext_s1, &FgAbGroup::free(1))?;
        expect_eq(&ctx("ExtS0"), &r.ext_s0, &zero)?;
        expect_eq(&ctx("pi1"), &r.pi1_aut, &k)?;
        expect_eq(&ctx("pi2"), &r.pi2_aut, &zero)?;
        expect_eq(&ctx("stable pi1"), &r.pi1_aut_stable, &k)?;
        expect_eq(&ctx("stable pi2"), &r.pi2_aut_stable, &k)?;
    }
    Ok("N = 2..12".into())
}

fn amplification_fixtures() -> Outcome {
    let mut count = 0;
    for n in 2..=5i64 {
        for k in 1..=6i64 {
            let r = invariants(&gen_amplified(n as usize, k as usize).unwrap());
            let g = (n - 1).gcd(&k);
            let ctx = |s: &str| format!("(N, k) = ({n}, {k}), {s}");
            expect_eq(&ctx("ExtS1"), &r.ext_s1, &FgAbGroup::free(1).direct_sum(&cyc(&[g])))?;
            expect_eq(&ctx("pi1"), &r.pi1_aut, &cyc(&[n - 1, g]))?;
            expect_eq(&ctx("pi2"), &r.pi2_aut, &cyc(&[g]))?;
            count += 1;
        }
    }
    Ok(format!("{count} (N, k) pairs"))
}

fn example3_fixture() -> Outcome {
    let a = ZeroOneMatrix::from_rows(&[[1, 1, 1], [1, 1, 1], [1, 0, 0]]).unwrap();
    let b = ZeroOneMatrix::from_rows(&[[1, 1, 1], [1, 1, 0], [1, 1, 0]]).unwrap();
    let z2 = cyc(&[2]);
    let (ra, rb) = (invariants(&a), invariants(&b));
    for (label, r) in [("A", &ra), ("B", &rb)] {
        expect_eq(&format!("{label} K0"), &r.k0, &z2)?;
        expect_eq(&format!("{label} stable pi1"), &r.pi1_aut_stable, &z2)?;
        expect_eq(&format!("{label} stable pi2"), &r.pi2_aut_stable, &z2)?;
    }
    expect_eq("A ExtS1", &ra.ext_s1, &FgAbGroup::free(1))?;
    expect_eq("B ExtS1", &rb.ext_s1, &cyc(&[0, 2]))?;
    expect_eq("A pi1", &ra.pi1_aut, &z2)?;
    expect_eq("B pi1", &rb.pi1_aut, &cyc(&[2, 2]))?;
    expect_eq("A pi2", &ra.pi2_aut, &FgAbGroup::trivial())?;
    expect_eq("B pi2", &rb.pi2_aut, &z2)?;
    let c = compare(&a, &b);
    if c.isomorphic || !c.stably_isomorphic {
        return Err(format!(
            "verdict isomorphic = {}, stably_isomorphic = {}",
            c.isomorphic, c.stably_isomorphic
        ));
    }
    Ok("A and B: not isomorphic, stably isomorphic".into())
}

fn rank_identity(corpus: &[ZeroOneMatrix]) -> Outcome {
    let reports: Vec<_> = corpus.iter().map(invariants).collect();
    let free = reports.iter().filter(|r| r.k1.free_rank() > 0).count();
    let torsion = reports.iter().filter(|r| !r.k0.torsion_part().is_trivial()).count();
    let detail = over_corpus(corpus, |a| {
        let r = invariants(a);
        if r.ext_s1.free_rank() != r.ext_s0.free_rank() + 1 {
            return Err(format!("rank ExtS1 = {}, rank ExtS0 = {}", r.ext_s1.free_rank(), r.ext_s0.free_rank()));
        }
        if r.k0.free_rank() != r.k1.free_rank() {
            return Err(format!("rank K0 = {}, rank K1 = {}", r.k0.free_rank(), r.k1.free_rank()));
        }
        Ok(())
    })?;
    Ok(format!("{detail}, {free} with K1 != 0, {torsion} with torsion in K0"))
}

fn torsion_splitting(corpus: &[ZeroOneMatrix]) -> Outcome {
    over_corpus(corpus, |a| {
        let r = invariants(a);
        expect_eq("pi1 vs pi2 + Tor(K0)", &r.pi1_aut, &r.pi2_aut.direct_sum(&r.k0.torsion_part()))
    })
}

fn stable_equality(corpus: &[ZeroOneMatrix]) -> Outcome {
    over_corpus(corpus, |a| {
        let r = invariants(a);
        expect_eq("stable pi1 vs stable pi2", &r.pi1_aut_stable, &r.pi2_aut_stable)
    })
}

fn exact_sequence(corpus: &[ZeroOneMatrix]) -> Outcome {
    over_corpus(corpus, |a| {
        let seq = six_term(a).map_err(|e| e.to_string())?;
        if !seq.j_injective || !seq.q_surjective {
            return Err(format!("j injective {}, q surjective {}", seq.j_injective, seq.q_surjective));
        }
        seq.verify().map_err(|e| e.to_string())
    })
}

fn hat_factorization(corpus: &[ZeroOneMatrix]) -> Outcome {
    over_corpus(corpus, |a| {
        let n = a.size();
        let id = IntMatrix::identity(n);
        let lhs = id.subtract(&hat(a)).unwrap();
        let rhs = i_minus(a).multiply(&id.subtract(&r1(n)).unwrap()).unwrap();
        if lhs != rhs || lhs != i_minus_hat(a) {
            return Err("I - hat(A) differs from (I - A)(I - R1)".into());
        }
        Ok(())
    })
}

fn permuted(a: &ZeroOneMatrix, perm: &[usize]) -> ZeroOneMatrix {
    let rows = a.rows();
    let out: Vec<Vec<u8>> = perm
        .iter()
        .map(|&i| perm.iter().map(|&j| rows[i][j]).collect())
        .collect();
    ZeroOneMatrix::from_rows(&out).unwrap()
}

/// Half the pairs are independent draws (mostly non-isomorphic), half are a
/// matrix against a vertex relabelling of itself (always isomorphic), so both
/// verdicts are exercised.
fn decision_coherence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut iso, mut non_iso) = (0, 0);
    for p in 0..PAIRS {
        let n = rng.gen_range(2..=6);
        let a = gen_random_irreducible(n, 0.3, rng.gen()).unwrap();
        let b = if p % 2 == 0 {
            gen_random_irreducible(rng.gen_range(2..=6), 0.3, rng.gen()).unwrap()
        } else {
            let mut perm: Vec<usize> = (0..n).collect();
            rand::seq::SliceRandom::shuffle(&mut perm[..], &mut rng);
            permuted(&a, &perm)
        };
        let by_pi = (1..=2).all(|d| pi_aut(&a, d).unwrap() == pi_aut(&b, d).unwrap());
        let decided = is_isomorphic_ck(&a, &b);
        if by_pi != decided {
            return Err(format!("pair {p}: homotopy groups say {by_pi}, cokernels say {decided}\n{a}\n{b}"));
        }
        if p % 2 == 1 && !decided {
            return Err(format!("pair {p}: relabelled matrix judged non-isomorphic"));
        }
        if decided {
            iso += 1;
        } else {
            non_iso += 1;
        }
    }
    Ok(format!("{PAIRS} pairs, {iso} isomorphic, {non_iso} not"))
}

fn multisets(max_len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for m in &frontier {
            let start = m.last().copied().unwrap_or(lo);
            for f in start..=hi {
                let mut e: Vec<i64> = m.clone();
                e.push(f);
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn realization_roundtrip() -> Outcome {
    let sets = multisets(3, 2, 12);
    let mut count = 0;
    for rank in 0..=3usize {
        for f in &sets {
            let target = RealizationTarget::new(rank, f.iter().map(|&v| BigInt::from(v)).collect()).unwrap();
            let a = realize_k0(&target).map_err(|e| format!("r = {rank}, {f:?}: {e}"))?;
            // recheck through the fixed-width backend
            let ia = I128Matrix::from_fn(a.size(), a.size(), |i, j| {
                i128::from(i == j) - i128::from(a.get(i, j))
            });
            let want = FgAbGroup::free(rank).direct_sum(&FgAbGroup::from_cyclic(&target.factors));
            expect_eq(&format!("r = {rank}, {f:?}"), &cokernel_invariants(&ia), &want)?;
            if kernel_basis(&ia).len() != rank {
                return Err(format!("r = {rank}, {f:?}: kernel rank differs"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} targets"))
}

fn unit_class_cross_check(corpus: &[ZeroOneMatrix]) -> Outcome {
    over_corpus(corpus, |a| {
        let k0 = k0_presentation(a);
        let q = k0.quotient_by_elements(&[unit_class(&k0)]).map_err(|e| e.to_string())?;
        expect_eq("ExtS1 vs Z + K0/Z[1]", &invariants(a).ext_s1, &FgAbGroup::free(1).direct_sum(&q))
    })
}

/// Independent Smith oracle on `i128`: first-nonzero pivoting, Euclid by
/// repeated remainders, then a gcd/lcm pass over the diagonal.
fn oracle_diagonal(m: &[Vec<i128>]) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .find(|&(i, j)| a[i][j] != 0)
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    if a[i][t].abs() < a[t][t].abs() {
                        a.swap(t, i);
                    }
                    let q = a[i][t] / a[t][t];
                    let pivot_row = a[t].clone();
                    for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                        *x -= q * p;
                    }
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    if a[t][j].abs() < a[t][t].abs() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                    let q = a[t][j] / a[t][t];
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let (g, l) = (diag[i].gcd(&diag[j]), diag[i].lcm(&diag[j]));
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

fn snf_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for case in 0..SNF_CASES {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let raw: Vec<Vec<i128>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-5..=5)).collect()).collect();
        let m = IntMatrix::from_fn(r, c, |i, j| BigInt::from(raw[i][j]));
        let d = smith_normal_form(&m);
        if d.u.multiply(&m).unwrap().multiply(&d.v).unwrap() != d.s {
            return Err(format!("case {case}: u M v != s"));
        }
        let one = BigInt::from(1);
        if d.u.determinant().magnitude() != one.magnitude() || d.v.determinant().magnitude() != one.magnitude() {
            return Err(format!("case {case}: transform not unimodular"));
        }
        for i in 0..r {
            for j in 0..c {
                if i != j && d.s[(i, j)] != BigInt::from(0) {
                    return Err(format!("case {case}: off-diagonal entry"));
                }
            }
        }
        let diag = d.diagonal();
        let nonzero: Vec<&BigInt> = diag.iter().filter(|x| **x != BigInt::from(0)).collect();
        if nonzero.len() != d.rank() || diag.iter().take(d.rank()).any(|x| *x <= BigInt::from(0)) {
            return Err(format!("case {case}: diagonal {diag:?} not positive-then-zero"));
        }
        if nonzero.windows(2).any(|w| !w[1].is_multiple_of(w[0])) {
            return Err(format!("case {case}: divisibility fails in {diag:?}"));
        }
        let want = oracle_diagonal(&raw);
        let got: Vec<i128> = nonzero.iter().map(|x| i128::try_from(*x).unwrap()).collect();
        if got != want {
            return Err(format!("case {case}: diagonal {got:?}, oracle {want:?}"));
        }
    }
    Ok(format!("{SNF_CASES} matrices"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("cuntz fixtures", Box::new(cuntz_fixtures)),
        ("amplification fixtures", Box::new(amplification_fixtures)),
        ("example-3 fixture", Box::new(example3_fixture)),
        ("rank identity", Box::new(|| rank_identity(&corpus))),
        ("torsion splitting", Box::new(|| torsion_splitting(&corpus))),
        ("stable equality", Box::new(|| stable_equality(&corpus))),
        ("exact sequence", Box::new(|| exact_sequence(&corpus))),
        ("hat factorization", Box::new(|| hat_factorization(&corpus))),
        ("decision coherence", Box::new(decision_coherence)),
        ("realization roundtrip", Box::new(realization_roundtrip)),
        ("unit-class cross-check", Box::new(|| unit_class_cross_check(&corpus))),
        ("SNF oracle equivalence", Box::new(snf_oracle)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
