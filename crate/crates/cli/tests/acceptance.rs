//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use alexmod_core::coinvariants::{
    divisibility_check, global_alexander_module, group_coinvariants, local_alexander_module,
};
use alexmod_core::linalg::{
    characteristic_matrix, charpoly, det, inverse, smith_normal_form_poly, smith_normal_form_z,
};
use alexmod_core::module::{
    alexander_polynomial, cover_homology, dominance_check, module_from_automorphism, power_transform,
};
use alexmod_core::monodromy::section7::LABEL_B1;
use alexmod_core::monodromy::{
    conjugacy_check, infinity_jordan, m1_jordan, m2_jordan, section7_rep, Section7Family,
};
use alexmod_core::topo::{milnor_bounds, suspension_sequence_solve, MilnorData};
use alexmod_core::{
    AbelianGroup, CycloField, FieldElement, FieldMatrix, FreeWord, IntMatrix, LaurentModule, Mode, MonodromyRep,
    UniPoly, ZLaurentModule, DEFAULT_CYCLOTOMIC_BOUND,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const INSTANCES: usize = 200;
const WORDS: usize = 200;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn render(t: &FieldMatrix) -> String {
    module_from_automorphism(t).unwrap().render(DEFAULT_CYCLOTOMIC_BOUND)
}

fn criterion_1() -> Check {
    let cases = [
        (m1_jordan(), "Λ/(t-1) ⊕ Λ/(t-1) ⊕ Λ/(t-1)^2"),
        (m2_jordan(), "Λ/(t-1) ⊕ Λ/(t-1) ⊕ Λ/(t-z) ⊕ Λ/(t+z+1)"),
        (infinity_jordan(), "Λ/(t-1) ⊕ Λ/(t-1) ⊕ Λ/(t+1)^2"),
    ];
    for (t, want) in &cases {
        let got = render(t);
        ensure(got == *want, format!("got {got}, expected {want}"))?;
    }
    let chain = module_from_automorphism(&infinity_jordan()).unwrap();
    let expected_chain = vec![
        UniPoly::from_ints(&[-1, 1]),
        &UniPoly::from_ints(&[-1, 1]) * &UniPoly::from_ints(&[1, 1]).pow(2),
    ];
    ensure(chain.invariant_factors() == expected_chain.as_slice(), "invariant-factor chain mismatch")?;
    Ok("three fiber modules match".into())
}

fn criterion_2() -> Check {
    for a in [0, 5] {
        let rep = section7_rep(FieldElement::int(a), 2).unwrap();
        let g = global_alexander_module(&rep, Mode::Field).unwrap();
        ensure(g.render() == "Λ_2/(t1-1,t2-1)", format!("a={a}: M(h) = {g}"))?;
        let l0 = local_alexander_module(&rep, Mode::Field).unwrap();
        ensure(l0.to_string() == "Λ/(t-1)", format!("a={a}: M(h,0) = {l0}"))?;
        let b1 = rep.label_index(LABEL_B1).unwrap();
        let l1 = local_alexander_module(&rep.with_distinguished(b1).unwrap(), Mode::Field).unwrap();
        ensure(l1.to_string() == "Λ/(t-1)", format!("a={a}: M(h,b1) = {l1}"))?;
    }
    let rep = section7_rep(FieldElement::int(0), 1).unwrap();
    ensure(global_alexander_module(&rep, Mode::Field).unwrap().is_zero(), "case 1: M(h) != 0")?;
    Ok("M(h), M(h,0), M(h,b1) at a = 0, 5; case 1 gives 0".into())
}

fn criterion_3() -> Check {
    let valid = Section7Family::new(FieldElement::int(0), 2).unwrap();
    ensure(
        conjugacy_check(&(&valid.m1() * &valid.m2()), &infinity_jordan()).unwrap(),
        "a = 0: not conjugate",
    )?;
    for which in ["b", "c"] {
        let mut fam = valid.clone();
        if which == "b" {
            fam.b = FieldElement::int(0);
        } else {
            fam.c = FieldElement::int(0);
        }
        ensure(
            !conjugacy_check(&(&fam.m1() * &fam.m2()), &infinity_jordan()).unwrap(),
            format!("{which} = 0 still conjugate"),
        )?;
    }
    Ok("true at a = 0, false for b = 0 and c = 0".into())
}

fn criterion_4() -> Check {
    let h = ZLaurentModule::new(IntMatrix::from_i64(1, 1, &[-1])).unwrap();
    let cover = cover_homology(&h, &ZLaurentModule::zero(), 1).unwrap();
    ensure(cover.to_string() == "ℤ/2", format!("cover {cover}"))?;
    let rep = MonodromyRep::new_integral(vec![IntMatrix::from_i64(1, 1, &[-1])], vec!["0".into()], 0)
        .unwrap()
        .with_n(2);
    let c = group_coinvariants(&rep, Mode::Integer).unwrap();
    ensure(c.group.to_string() == "ℤ/2", format!("coinvariants {}", c.group))?;
    let l = local_alexander_module(&rep, Mode::Integer).unwrap();
    ensure(l.to_string() == "Λ_ℤ/(t+1)", format!("local {l}"))?;
    let oracle = charpoly(&FieldMatrix::from_i64(1, 1, &[-1]));
    ensure(oracle == UniPoly::from_ints(&[1, 1]), "companion oracle")?;
    let out = Command::new(env!("CARGO_BIN_EXE_alexctl")).arg("verify-paper").output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    ensure(
        text.lines().any(|l| l.starts_with("WARN: quadric-local-module") && l.contains("Λ_ℤ/(t+1)")),
        "discrepancy warning not emitted",
    )?;
    Ok("ℤ/2 twice; Λ_ℤ/(t+1) with warning".into())
}

fn criterion_5() -> Check {
    let h = ZLaurentModule::new(IntMatrix::identity(5)).unwrap();
    let g = cover_homology(&h, &ZLaurentModule::zero(), 3).unwrap();
    ensure(g == AbelianGroup::free(5), format!("cover {g}"))?;
    let b = milnor_bounds(MilnorData { mu_x: 10, mu0_x: 10, mu: 16 }).unwrap();
    ensure(b == (4, 10), format!("bounds {b:?}"))?;
    Ok("rank 5; bounds (4, 10)".into())
}

fn criterion_6() -> Check {
    let g = suspension_sequence_solve(&IntMatrix::from_i64(2, 2, &[1, 0, 0, 3])).unwrap();
    ensure(g.to_string() == "ℤ/3", format!("got {g}"))?;
    Ok("ℤ/3".into())
}

fn companion(p: &UniPoly) -> FieldMatrix {
    let d = p.deg();
    let mut c = FieldMatrix::zeros(d, d);
    for i in 1..d {
        c[(i, i - 1)] = FieldElement::int(1);
    }
    for i in 0..d {
        c[(i, d - 1)] = -&p.coeff(i);
    }
    c
}

fn random_monic(rng: &mut ChaCha8Rng) -> UniPoly {
    let d = rng.random_range(1..=4);
    let mut c: Vec<i64> = (0..d).map(|_| rng.random_range(-3..=3)).collect();
    if c[0] == 0 {
        c[0] = 1;
    }
    c.push(1);
    UniPoly::from_ints(&c)
}

fn random_unimodular(rng: &mut ChaCha8Rng, m: usize) -> IntMatrix {
    let mut a = IntMatrix::identity(m);
    for _ in 0..2 * m {
        let (i, j) = (rng.random_range(0..m), rng.random_range(0..m));
        if i != j {
            a.add_row_multiple(i, j, &BigInt::from(rng.random_range(-2..=2)));
        } else if rng.random_bool(0.5) {
            a.scale_row(i, &BigInt::from(-1));
        }
    }
    a
}

fn random_integral_rep(rng: &mut ChaCha8Rng) -> MonodromyRep {
    let m = rng.random_range(1..=5);
    let g = rng.random_range(1..=3);
    let mats = (0..g).map(|_| random_unimodular(rng, m)).collect();
    let labels = (0..g).map(|i| format!("g{i}")).collect();
    MonodromyRep::new_integral(mats, labels, rng.random_range(0..g)).unwrap().with_n(2)
}

fn random_field_rep(rng: &mut ChaCha8Rng) -> MonodromyRep {
    let k = CycloField::get(3);
    let z = FieldElement::zeta(&k);
    let m = rng.random_range(1..=5);
    let g = rng.random_range(1..=3);
    let mut mats = Vec::new();
    while mats.len() < g {
        let data: Vec<FieldElement> = (0..m * m)
            .map(|_| {
                let a = FieldElement::int(rng.random_range(-2..=2)).lift_to(&k);
                let b = FieldElement::int(if rng.random_bool(0.2) { rng.random_range(-1..=1) } else { 0 });
                &a + &(&b.lift_to(&k) * &z)
            })
            .collect();
        let a = FieldMatrix::new(m, m, data);
        if !det(&a).is_zero() {
            mats.push(a);
        }
    }
    let labels = (0..g).map(|i| format!("g{i}")).collect();
    MonodromyRep::new(mats, labels, rng.random_range(0..g)).unwrap()
}

fn random_word(rng: &mut ChaCha8Rng, g: usize) -> FreeWord {
    let len = rng.random_range(0..=12);
    FreeWord::new(
        (0..len)
            .map(|_| (rng.random_range(0..g), if rng.random_bool(0.5) { 1 } else { -1 }))
            .collect(),
    )
}

fn random_module(rng: &mut ChaCha8Rng) -> LaurentModule {
    let pool = [
        UniPoly::from_ints(&[-1, 1]),
        UniPoly::from_ints(&[1, 1]),
        UniPoly::from_ints(&[1, 1, 1]),
        UniPoly::from_ints(&[-2, 1]),
    ];
    let summands: Vec<UniPoly> = (0..rng.random_range(0..=5))
        .map(|_| pool[rng.random_range(0..pool.len())].pow(rng.random_range(1..=3)))
        .collect();
    LaurentModule::from_cyclic_summands(0, &summands, 1)
}

fn quotient_module(rng: &mut ChaCha8Rng, m: &LaurentModule) -> LaurentModule {
    let mut summands = Vec::new();
    for d in m.invariant_factors() {
        if !rng.random_bool(0.8) {
            continue;
        }
        let (divs, _) = LaurentModule::from_cyclic_summands(0, &[d.clone()], 1).elementary_divisors(12);
        let mut q = UniPoly::one();
        for (p, k) in &divs {
            q = &q * &p.pow(rng.random_range(0..=*k));
        }
        summands.push(q);
    }
    LaurentModule::from_cyclic_summands(0, &summands, 1)
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut notes = Vec::new();

    for _ in 0..INSTANCES {
        let p = random_monic(&mut rng);
        let ell: i64 = rng.random_range(-4..=4);
        let c = companion(&p);
        let power = if ell >= 0 {
            c.pow(ell as u64)
        } else {
            inverse(&c).unwrap().pow(ell.unsigned_abs())
        };
        ensure(
            power_transform(&p, ell).unwrap() == charpoly(&power),
            format!("power_transform({p}, {ell})"),
        )?;
    }
    notes.push(format!("power transform {INSTANCES}"));

    for _ in 0..INSTANCES {
        let m = rng.random_range(1..=4);
        let v: Vec<i64> = (0..m * m).map(|_| rng.random_range(-5..=5)).collect();
        let a = IntMatrix::from_i64(m, m, &v);
        let f = a.to_field();
        let chain = smith_normal_form_poly(&characteristic_matrix(&f), true);
        let prod = chain.iter().fold(UniPoly::one(), |acc, d| &acc * d);
        ensure(prod == charpoly(&f), "invariant factors vs charpoly")?;
        let d = det(&f).as_integer().unwrap().abs();
        let s = smith_normal_form_z(&a);
        if d.is_zero() {
            ensure(s.len() < m, "singular matrix with full Smith rank")?;
        } else {
            let p = s.iter().fold(BigInt::one(), |acc, x| acc * x.abs());
            ensure(p == d, "Smith product vs determinant")?;
        }
    }
    notes.push(format!("SNF {INSTANCES}"));

    for _ in 0..INSTANCES {
        let rep = random_integral_rep(&mut rng);
        let p = random_unimodular(&mut rng, rep.fiber_rank()).to_field();
        let conj = rep.conjugate(&p).unwrap();
        for mode in [Mode::Integer, Mode::Field] {
            ensure(
                group_coinvariants(&rep, mode).unwrap().group == group_coinvariants(&conj, mode).unwrap().group,
                "coinvariants not invariant",
            )?;
            ensure(
                global_alexander_module(&rep, mode).unwrap().quotient.group()
                    == global_alexander_module(&conj, mode).unwrap().quotient.group(),
                "global module not invariant",
            )?;
            let (a, b) = (
                local_alexander_module(&rep, mode).unwrap(),
                local_alexander_module(&conj, mode).unwrap(),
            );
            ensure(
                a.module == b.module && a.torsion == b.torsion,
                "local module not invariant",
            )?;
        }
    }
    notes.push(format!("conjugation {INSTANCES}"));

    for i in 0..INSTANCES {
        let (rep, mode) = if i % 2 == 0 {
            (random_integral_rep(&mut rng), Mode::Integer)
        } else {
            (random_field_rep(&mut rng), Mode::Field)
        };
        let g = global_alexander_module(&rep, mode).unwrap();
        ensure(g.quotient.actions_commute(), "induced actions do not commute")?;
        ensure(
            g.collapse().unwrap().group() == group_coinvariants(&rep, mode).unwrap().group,
            "collapse differs from coinvariants",
        )?;
    }
    notes.push(format!("collapse {INSTANCES}"));

    let rep = section7_rep(FieldElement::int(0), 2).unwrap();
    for _ in 0..WORDS {
        let w = random_word(&mut rng, 2);
        ensure(divisibility_check(&rep, &w).unwrap().holds(), format!("divisibility fails for {w}"))?;
    }
    notes.push(format!("divisibility {WORDS}"));

    let mut nontrivial = 0;
    for _ in 0..INSTANCES {
        let a = random_module(&mut rng);
        let b = quotient_module(&mut rng, &a);
        let c = quotient_module(&mut rng, &b);
        ensure(dominance_check(&a, &b) && dominance_check(&b, &c), "quotient not dominated")?;
        ensure(dominance_check(&a, &c), "dominance not transitive")?;
        ensure(
            alexander_polynomial(&c).divides(&alexander_polynomial(&a)),
            "dominance without divisibility",
        )?;
        let x = random_module(&mut rng);
        if dominance_check(&a, &x) {
            nontrivial += 1;
            ensure(alexander_polynomial(&x).divides(&alexander_polynomial(&a)), "Δ divisibility")?;
        }
    }
    notes.push(format!("dominance {INSTANCES} ({nontrivial} random pairs dominated)"));
    Ok(notes.join(", "))
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_alexctl")).arg("verify-paper").output().unwrap();
    let elapsed = start.elapsed();
    let text = String::from_utf8(out.stdout).unwrap();
    ensure(out.status.code() == Some(0), format!("exit {:?}\n{text}", out.status.code()))?;
    for id in [
        "fiber-module-m1",
        "fiber-module-m2",
        "fiber-module-infinity",
        "coinvariants-a0",
        "coinvariants-a5",
        "coinvariants-case1",
        "conjugacy-valid",
        "conjugacy-b0",
        "conjugacy-c0",
        "quadric-cover",
        "quadric-coinvariants",
        "quadric-local-module",
        "nodal-cover-rank",
        "milnor-bounds",
        "suspension-sequence",
    ] {
        ensure(
            text.lines().any(|l| l.starts_with(&format!("{id}: PASS"))),
            format!("case {id} missing or failing"),
        )?;
    }
    ensure(elapsed < Duration::from_secs(10), format!("took {elapsed:?}"))?;
    Ok(format!("exit 0 in {elapsed:.2?}"))
}

fn main() {
    let criteria: [(&str, fn() -> Check, Duration); 8] = [
        ("fiber modules of the two-generator family", criterion_1, Duration::from_secs(1)),
        ("global and local coinvariant modules", criterion_2, Duration::from_secs(1)),
        ("conjugacy constraint bc != 0", criterion_3, Duration::from_secs(5)),
        ("quadric with T = -Id", criterion_4, Duration::from_secs(10)),
        ("trivial cover rank and Milnor bounds", criterion_5, Duration::from_secs(5)),
        ("suspension sequence", criterion_6, Duration::from_secs(5)),
        ("property suites", criterion_7, Duration::from_secs(60)),
        ("verify-paper exits 0", criterion_8, Duration::from_secs(20)),
    ];
    let mut failures = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|s| {
            if elapsed <= *limit {
                Ok(s)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}; {elapsed:.2?})", i + 1),
            Err(e) => {
                failures += 1;
                println!("criterion {}: FAIL {name} ({e})", i + 1);
            }
        }
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
