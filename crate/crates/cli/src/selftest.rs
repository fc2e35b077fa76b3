//! Built-in fixtures and fixed-seed property checks.

use ckinv::ck::{
    compare, gen_amplified, gen_cuntz, gen_random_irreducible, i_minus, i_minus_hat, invariants, k0_presentation,
    r1, six_term, unit_class, validate, ZeroOneMatrix,
};
use ckinv::realize::{ext_pair_from_k0_pair, range_witness, realize_k0, RealizationTarget};
use ckinv::{BigInt, FgAbGroup, IntMatrix, ValidationError};

type CheckFn = fn() -> Result<(), String>;

pub struct Check {
    pub name: String,
    pub outcome: Result<(), String>,
}

fn cyc(m: &[i64]) -> FgAbGroup {
    FgAbGroup::from_cyclic(&m.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>())
}

fn same(what: &str, got: &FgAbGroup, want: &FgAbGroup) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn example3() -> (ZeroOneMatrix, ZeroOneMatrix) {
    let a = ZeroOneMatrix::from_rows(&[[1, 1, 1], [1, 1, 1], [1, 0, 0]]).expect("valid fixture");
    let b = a.transpose();
    (a, b)
}

fn cuntz() -> Result<(), String> {
    for n in 2..=12usize {
        let r = invariants(&gen_cuntz(n).map_err(|e| e.to_string())?);
        let k = cyc(&[n as i64 - 1]);
        same(&format!("O_{n} K0"), &r.k0, &k)?;
        same(&format!("O_{n} ExtS1"), &r.ext_s1, &FgAbGroup::free(1))?;
        same(&format!("O_{n} pi1"), &r.pi1_aut, &k)?;
        same(&format!("O_{n} pi2"), &r.pi2_aut, &FgAbGroup::trivial())?;
        same(&format!("O_{n} stable pi2"), &r.pi2_aut_stable, &k)?;
    }
    Ok(())
}

fn amplified() -> Result<(), String> {
    for n in 2..=5i64 {
        for k in 1..=6i64 {
            let r = invariants(&gen_amplified(n as usize, k as usize).map_err(|e| e.to_string())?);
            let g = num_integer::gcd(n - 1, k);
            same(&format!("({n}, {k}) ExtS1"), &r.ext_s1, &cyc(&[0, g]))?;
            same(&format!("({n}, {k}) pi1"), &r.pi1_aut, &cyc(&[n - 1, g]))?;
            same(&format!("({n}, {k}) pi2"), &r.pi2_aut, &cyc(&[g]))?;
        }
    }
    Ok(())
}

fn example3_groups() -> Result<(), String> {
    let (a, b) = example3();
    let (ra, rb) = (invariants(&a), invariants(&b));
    same("A K0", &ra.k0, &cyc(&[2]))?;
    same("B K0", &rb.k0, &cyc(&[2]))?;
    same("A ExtS1", &ra.ext_s1, &FgAbGroup::free(1))?;
    same("B ExtS1", &rb.ext_s1, &cyc(&[0, 2]))?;
    same("A pi1", &ra.pi1_aut, &cyc(&[2]))?;
    same("B pi1", &rb.pi1_aut, &cyc(&[2, 2]))?;
    same("A pi2", &ra.pi2_aut, &FgAbGroup::trivial())?;
    same("B pi2", &rb.pi2_aut, &cyc(&[2]))?;
    let c = compare(&a, &b);
    ensure(!c.isomorphic && c.stably_isomorphic, || {
        format!("verdict {} / {}", c.isomorphic, c.stably_isomorphic)
    })
}

fn comparisons() -> Result<(), String> {
    let o3 = gen_cuntz(3).map_err(|e| e.to_string())?;
    let amp = gen_amplified(3, 3).map_err(|e| e.to_string())?;
    ensure(compare(&o3, &o3).isomorphic, || "O_3 not isomorphic to itself".into())?;
    ensure(compare(&o3, &amp).isomorphic, || "O_3 vs amplified(3, 3) not isomorphic".into())
}

fn validation() -> Result<(), String> {
    let cases: [(IntMatrix, Option<ValidationError>); 4] = [
        (IntMatrix::from_i64_rows(&[[1, 1], [1, 1]]), None),
        (IntMatrix::identity(3), Some(ValidationError::Permutation)),
        (IntMatrix::zeros(2, 3), Some(ValidationError::NotSquare { rows: 2, cols: 3 })),
        (IntMatrix::from_i64_rows(&[[1, 1, 0], [1, 1, 0], [0, 0, 1]]), Some(ValidationError::Reducible)),
    ];
    for (m, want) in cases {
        let got = validate(&m).err();
        ensure(got == want, || format!("validate gave {got:?}, expected {want:?}"))?;
    }
    Ok(())
}

fn realization() -> Result<(), String> {
    let cases: [(usize, &[i64], usize); 4] = [(0, &[2], 6), (1, &[], 4), (0, &[2, 4], 11), (2, &[], 5)];
    for (rank, factors, size) in cases {
        let t = RealizationTarget::new(rank, factors.iter().map(|&f| BigInt::from(f)).collect())
            .map_err(|e| e.to_string())?;
        let a = realize_k0(&t).map_err(|e| e.to_string())?;
        ensure(a.size() == size, || format!("size {} for {rank}, {factors:?}", a.size()))?;
        same("realized ExtW1", &invariants(&a).ext_w1, &t.group())?;
    }
    Ok(())
}

fn group_pairs() -> Result<(), String> {
    let (a, b) = example3();
    for (m, want) in [(&a, cyc(&[0])), (&b, cyc(&[0, 2]))] {
        let k0 = k0_presentation(m);
        let (w, s) = ext_pair_from_k0_pair(&k0, &unit_class(&k0)).map_err(|e| e.to_string())?;
        same("weak", &w, &cyc(&[2]))?;
        same("strong", &s, &want)?;
    }
    ensure(
        range_witness(&cyc(&[2]), &FgAbGroup::trivial(), 3) == Some(vec![BigInt::from(2)]),
        || "range witness for Z/2".into(),
    )?;
    ensure(range_witness(&cyc(&[3]), &cyc(&[2]), 3).is_none(), || "spurious witness for Z/3".into())
}

fn properties() -> Result<(), String> {
    for seed in 0..60u64 {
        let n = 2 + (seed % 9) as usize;
        let a = gen_random_irreducible(n, 0.25, seed).map_err(|e| e.to_string())?;
        let r = invariants(&a);
        let ctx = |s: &str| format!("seed {seed}: {s}");
        ensure(r.ext_s1.free_rank() == r.ext_s0.free_rank() + 1, || ctx("ExtS ranks"))?;
        ensure(r.k0.free_rank() == r.k1.free_rank(), || ctx("K ranks"))?;
        same(&ctx("torsion splitting"), &r.pi1_aut, &r.pi2_aut.direct_sum(&r.k0.torsion_part()))?;
        same(&ctx("stable equality"), &r.pi1_aut_stable, &r.pi2_aut_stable)?;
        let seq = six_term(&a).map_err(|e| e.to_string())?;
        seq.verify().map_err(|e| ctx(&e.to_string()))?;
        let id = IntMatrix::identity(n);
        let factored = i_minus(&a).multiply(&id.subtract(&r1(n)).expect("square")).expect("square");
        ensure(factored == i_minus_hat(&a), || ctx("hat factorization"))?;
        let k0 = k0_presentation(&a);
        let (_, strong) = ext_pair_from_k0_pair(&k0, &unit_class(&k0)).map_err(|e| e.to_string())?;
        same(&ctx("unit-class cross-check"), &r.ext_s1, &strong)?;
    }
    Ok(())
}

pub fn run() -> Vec<Check> {
    let checks: [(&str, CheckFn); 9] = [
        ("cuntz fixtures", cuntz),
        ("amplification fixtures", amplified),
        ("example-3 groups and verdict", example3_groups),
        ("comparison examples", comparisons),
        ("validation examples", validation),
        ("realization examples", realization),
        ("group-pair examples", group_pairs),
        ("fixed-seed properties", properties),
        ("realization roundtrip", realization_roundtrip),
    ];
    checks
        .into_iter()
        .map(|(name, f)| Check {
            name: name.to_string(),
            outcome: f(),
        })
        .collect()
}

fn realization_roundtrip() -> Result<(), String> {
    for rank in 0..=2usize {
        for f in 2..=6i64 {
            let t = RealizationTarget::new(rank, vec![BigInt::from(f), BigInt::from(f + 1)])
                .map_err(|e| e.to_string())?;
            let a = realize_k0(&t).map_err(|e| e.to_string())?;
            let r = invariants(&a);
            same("ExtW1", &r.ext_w1, &t.group())?;
            ensure(r.k1.free_rank() == rank, || format!("K1 rank for {rank}"))?;
        }
    }
    Ok(())
}
