//! Built-in reproduction suite behind `verify-paper`.

use alexmod_core::arith::parse_element;
use alexmod_core::coinvariants::{
    divisibility_check, factorization_chain_report, global_alexander_module, group_coinvariants,
    local_alexander_module,
};
use alexmod_core::linalg::charpoly;
use alexmod_core::module::{cover_homology, module_from_automorphism};
use alexmod_core::monodromy::section7::{cube_roots, LABEL_B1, LABEL_ZERO};
use alexmod_core::monodromy::{conjugacy_check, infinity_jordan, m1_jordan, m2_jordan, Section7Family};
use alexmod_core::topo::{milnor_bounds, suspension_sequence_solve, variation_complement_homology, MilnorData};
use alexmod_core::{
    AbelianGroup, FieldElement, FieldMatrix, FreeWord, IntMatrix, Mode, MonodromyRep, Result, UniPoly,
    ZLaurentModule,
};

use crate::error::CliError;
use crate::report::Report;
use crate::Outcome;

pub const EQ1: &str = "Λ/(t-1) ⊕ Λ/(t-1) ⊕ Λ/(t-1)^2";
pub const EQ2: &str = "Λ/(t-1) ⊕ Λ/(t-1) ⊕ Λ/(t-z) ⊕ Λ/(t+z+1)";
pub const EQ3: &str = "Λ/(t-1) ⊕ Λ/(t-1) ⊕ Λ/(t+1)^2";
pub const GLOBAL: &str = "Λ_2/(t1-1,t2-1)";
pub const LOCAL: &str = "Λ/(t-1)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Warn(String),
}

/// Parameter overrides applied to every two-generator family case.
#[derive(Clone, Debug, Default)]
pub struct Params {
    overrides: Vec<(String, FieldElement)>,
}

impl Params {
    pub fn parse(set: &[String]) -> std::result::Result<Self, CliError> {
        let k = cube_roots();
        let mut overrides = Vec::new();
        for s in set {
            let (key, val) = s
                .split_once('=')
                .ok_or_else(|| CliError::Parse(format!("override '{s}' is not key=value")))?;
            let key = key.trim();
            if !["a", "alpha", "beta", "gamma", "b", "c"].contains(&key) {
                return Err(CliError::Parse(format!("unknown parameter '{key}'")));
            }
            overrides.push((key.to_string(), parse_element(val, &k)?));
        }
        Ok(Params { overrides })
    }

    pub fn family(&self, a: i64, case: u8) -> Result<Section7Family> {
        let mut fam = Section7Family::new(FieldElement::int(a), case)?;
        for (key, v) in &self.overrides {
            let slot = match key.as_str() {
                "a" => &mut fam.a,
                "alpha" => &mut fam.alpha,
                "beta" => &mut fam.beta,
                "gamma" => &mut fam.gamma,
                "b" => &mut fam.b,
                _ => &mut fam.c,
            };
            *slot = v.clone();
        }
        Ok(fam)
    }
}

pub struct Case {
    pub id: &'static str,
    pub description: &'static str,
    run: fn(&Params, u64) -> Result<Status>,
}

fn expect<T: PartialEq + std::fmt::Display>(what: &str, got: T, want: T) -> Status {
    if got == want {
        Status::Pass
    } else {
        Status::Fail(format!("{what}: got {got}, expected {want}"))
    }
}

fn all(statuses: Vec<Status>) -> Status {
    statuses.into_iter().find(|s| *s != Status::Pass).unwrap_or(Status::Pass)
}

fn render(t: &FieldMatrix, bound: u64) -> Result<String> {
    Ok(module_from_automorphism(t)?.render(bound))
}

fn quadric() -> Result<MonodromyRep> {
    Ok(MonodromyRep::new_integral(vec![IntMatrix::from_i64(1, 1, &[-1])], vec!["0".into()], 0)?.with_n(2))
}

fn global_and_locals(p: &Params, a: i64, bound: u64) -> Result<Status> {
    let rep = p.family(a, 2)?.rep()?;
    let g = global_alexander_module(&rep, Mode::Field)?;
    let l0 = local_alexander_module(&rep, Mode::Field)?;
    let b1 = rep.label_index(LABEL_B1).expect("label");
    let l1 = local_alexander_module(&rep.with_distinguished(b1)?, Mode::Field)?;
    Ok(all(vec![
        expect("M(h)", g.render(), GLOBAL.to_string()),
        expect("M(h,0)", l0.render(bound), LOCAL.to_string()),
        expect("M(h,b1)", l1.render(bound), LOCAL.to_string()),
    ]))
}

fn divisibility(p: &Params, word: &str) -> Result<Status> {
    let rep = p.family(0, 2)?.rep()?;
    let w = FreeWord::parse(word, rep.labels())?;
    let c = divisibility_check(&rep, &w)?;
    Ok(if c.holds() {
        Status::Pass
    } else {
        Status::Fail(format!("{} does not divide {}", c.transformed, c.charpoly))
    })
}

fn chain(p: &Params, value: &str) -> Result<Status> {
    let rep = p.family(0, 2)?.rep()?;
    let i = rep.label_index(value).expect("label");
    let r = factorization_chain_report(&rep.with_distinguished(i)?)?;
    let dims = format!("{} -> {} -> {}", r.dims[0], r.dims[1], r.dims[2]);
    Ok(all(vec![
        expect("chain", dims, "4 -> 1 -> 1".to_string()),
        expect("dominance", r.dominance, true),
    ]))
}

pub fn cases() -> Vec<Case> {
    vec![
        Case {
            id: "fiber-module-m1",
            description: "module of the unipotent generator at b1",
            run: |p, bound| {
                let fam = p.family(0, 2)?;
                Ok(all(vec![
                    expect("Jordan form", render(&m1_jordan(), bound)?, EQ1.to_string()),
                    expect("generator", render(&fam.m1(), bound)?, EQ1.to_string()),
                ]))
            },
        },
        Case {
            id: "fiber-module-m2",
            description: "module of the generator at 0, eigenvalues 1, 1, j, j^2",
            run: |p, bound| {
                let fam = p.family(0, 2)?;
                Ok(all(vec![
                    expect("Jordan form", render(&m2_jordan(), bound)?, EQ2.to_string()),
                    expect("generator", render(&fam.m2(), bound)?, EQ2.to_string()),
                ]))
            },
        },
        Case {
            id: "fiber-module-infinity",
            description: "module of the monodromy at infinity",
            run: |p, bound| {
                let fam = p.family(0, 2)?;
                Ok(all(vec![
                    expect("Jordan form", render(&infinity_jordan(), bound)?, EQ3.to_string()),
                    expect("product", render(&(&fam.m1() * &fam.m2()), bound)?, EQ3.to_string()),
                ]))
            },
        },
        Case {
            id: "coinvariants-a0",
            description: "M(h), M(h,0), M(h,b1) for a = 0, alpha = 0",
            run: |p, bound| global_and_locals(p, 0, bound),
        },
        Case {
            id: "coinvariants-a5",
            description: "M(h), M(h,0), M(h,b1) for a = 5, alpha = 0",
            run: |p, bound| global_and_locals(p, 5, bound),
        },
        Case {
            id: "coinvariants-case1",
            description: "M(h) = 0 for alpha = 1",
            run: |p, _| {
                let rep = p.family(0, 1)?.rep()?;
                Ok(expect("M(h)", global_alexander_module(&rep, Mode::Field)?.render(), "0".to_string()))
            },
        },
        Case {
            id: "coinvariants-dimension",
            description: "group coinvariants of the two-generator representation are one-dimensional",
            run: |p, _| {
                let rep = p.family(0, 2)?.rep()?;
                Ok(expect("dim", group_coinvariants(&rep, Mode::Field)?.dim(), 1))
            },
        },
        Case {
            id: "conjugacy-valid",
            description: "m1 m2 is conjugate to J2(-1) + 1 + 1 for a = 0",
            run: |p, _| {
                let fam = p.family(0, 2)?;
                Ok(expect("conjugate", conjugacy_check(&(&fam.m1() * &fam.m2()), &infinity_jordan())?, true))
            },
        },
        Case {
            id: "conjugacy-b0",
            description: "b = 0 breaks the conjugacy",
            run: |p, _| {
                let mut fam = p.family(0, 2)?;
                fam.b = FieldElement::int(0);
                Ok(expect("conjugate", conjugacy_check(&(&fam.m1() * &fam.m2()), &infinity_jordan())?, false))
            },
        },
        Case {
            id: "conjugacy-c0",
            description: "c = 0 breaks the conjugacy",
            run: |p, _| {
                let mut fam = p.family(0, 2)?;
                fam.c = FieldElement::int(0);
                Ok(expect("conjugate", conjugacy_check(&(&fam.m1() * &fam.m2()), &infinity_jordan())?, false))
            },
        },
        Case {
            id: "divisibility-generator",
            description: "t-1 divides the charpoly of the loop around 0",
            run: |p, _| divisibility(p, LABEL_ZERO),
        },
        Case {
            id: "divisibility-infinity",
            description: "t-1 divides the charpoly of the loop at infinity",
            run: |p, _| divisibility(p, &format!("{LABEL_B1} {LABEL_ZERO}")),
        },
        Case {
            id: "chain-0",
            description: "factorization chain towards 0",
            run: |p, _| chain(p, LABEL_ZERO),
        },
        Case {
            id: "chain-b1",
            description: "factorization chain towards b1 (an upper bound; the true group vanishes)",
            run: |p, _| chain(p, LABEL_B1),
        },
        Case {
            id: "quadric-cover",
            description: "cover of degree 1 for T = -Id on Z",
            run: |_, _| {
                let h = ZLaurentModule::new(IntMatrix::from_i64(1, 1, &[-1]))?;
                let g = cover_homology(&h, &ZLaurentModule::zero(), 1)?;
                Ok(expect("H_n", g.to_string(), "ℤ/2".to_string()))
            },
        },
        Case {
            id: "quadric-coinvariants",
            description: "group coinvariants for T = -Id on Z",
            run: |_, _| {
                let c = group_coinvariants(&quadric()?, Mode::Integer)?;
                Ok(expect("coinvariants", c.group.to_string(), "ℤ/2".to_string()))
            },
        },
        Case {
            id: "quadric-local-module",
            description: "local module for T = -Id on Z",
            run: |_, _| {
                let l = local_alexander_module(&quadric()?, Mode::Integer)?;
                let oracle = charpoly(&FieldMatrix::from_i64(1, 1, &[-1]));
                let got = l.to_string();
                if got != "Λ_ℤ/(t+1)" || oracle != UniPoly::from_ints(&[1, 1]) {
                    return Ok(Status::Fail(format!("got {got}, companion oracle {oracle}")));
                }
                Ok(Status::Warn(
                    "stated as Λ/(t-1); T = -Id gives Λ_ℤ/(t+1) (companion oracle: charpoly of [-1] is t+1)".into(),
                ))
            },
        },
        Case {
            id: "quadric-variation",
            description: "complement homology from the variation map V = [-2], n = 2",
            run: |_, _| {
                let h = variation_complement_homology(&IntMatrix::from_i64(1, 1, &[-2]), 2, 1, None)?;
                Ok(all(vec![
                    expect("H_2", h[&2].to_string(), "ℤ/2".to_string()),
                    expect("H_3", h[&3].to_string(), "0".to_string()),
                ]))
            },
        },
        Case {
            id: "nodal-cover-rank",
            description: "cover of degree 3 with trivial monodromy on Z^5",
            run: |_, _| {
                let h = ZLaurentModule::new(IntMatrix::identity(5))?;
                let g = cover_homology(&h, &ZLaurentModule::zero(), 3)?;
                Ok(expect("H_3", g, AbelianGroup::free(5)))
            },
        },
        Case {
            id: "milnor-bounds",
            description: "bounds for mu_X = 10, mu_0X = 10, mu = 16",
            run: |_, _| {
                let (lo, hi) = milnor_bounds(MilnorData { mu_x: 10, mu0_x: 10, mu: 16 })?;
                Ok(all(vec![expect("lower", lo, 4), expect("upper", hi, 10)]))
            },
        },
        Case {
            id: "suspension-sequence",
            description: "cokernel of diag(1, 3)",
            run: |_, _| {
                let g = suspension_sequence_solve(&IntMatrix::from_i64(2, 2, &[1, 0, 0, 3]))?;
                Ok(expect("cokernel", g.to_string(), "ℤ/3".to_string()))
            },
        },
    ]
}

pub fn run(list: bool, set: &[String], bound: u64, echo: &[u8]) -> std::result::Result<Outcome, CliError> {
    let params = Params::parse(set)?;
    let mut report = Report::new("verify-paper", echo);
    if list {
        for c in cases() {
            report.push(c.id, c.description);
        }
        return Ok(Outcome { report, code: 0 });
    }
    let mut failed = 0;
    for c in cases() {
        let status = (c.run)(&params, bound).unwrap_or_else(|e| Status::Fail(e.to_string()));
        match status {
            Status::Pass => report.push(c.id, "PASS"),
            Status::Warn(w) => {
                report.push(c.id, "PASS (with warning)");
                report.warn(format!("{}: {w}", c.id));
            }
            Status::Fail(f) => {
                failed += 1;
                report.push(c.id, format!("FAIL: {f}"));
            }
        }
    }
    report.push("summary", format!("{} cases, {failed} failed", cases().len()));
    report.hypothesis("the two-generator family is h-good");
    Ok(Outcome {
        report,
        code: if failed > 0 { 3 } else { 0 },
    })
}
