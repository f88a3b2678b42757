//! `alexctl`: command-line front end for alexmod-core.

pub mod document;
pub mod error;
pub mod report;
pub mod suite;

use std::fs;

use alexmod_core::arith::{parse_element, parse_poly};
use alexmod_core::coinvariants::{
    divisibility_check, factorization_chain_report, global_alexander_module, group_coinvariants,
    local_alexander_module, total_space_homology,
};
use alexmod_core::linalg::{cokernel_z, smith_normal_form_z};
use alexmod_core::module::{cover_homology, module_from_automorphism, power_transform, torsion_order_at_one};
use alexmod_core::monodromy::{evaluate_word, monodromy_at_infinity};
use alexmod_core::topo::{
    milnor_bounds, suspension_order_bound, suspension_sequence_solve, torsion_constraint_check,
    variation_complement_homology, MilnorData, TorsionShape,
};
use alexmod_core::{
    CycloField, FreeWord, IntMatrix, IntPoly, Mode, MonodromyRep, UniPoly, ZLaurentModule, DEFAULT_CYCLOTOMIC_BOUND,
};
use clap::{Parser, Subcommand};
use serde_json::json;

pub use document::RepDocument;
pub use error::CliError;
pub use report::{Format, Report};

#[derive(Debug, Parser)]
#[command(name = "alexctl", version, about = "Exact Alexander-module invariants from monodromy data")]
pub struct Cli {
    /// Representation document (JSON).
    #[arg(long, global = true)]
    pub input: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Largest order of roots of unity tried when factoring.
    #[arg(long, global = true, default_value_t = DEFAULT_CYCLOTOMIC_BOUND)]
    pub cyclotomic_bound: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Module of one operator: a generator, a word, or the loop at infinity.
    FiberModule {
        #[arg(long)]
        label: Option<String>,
        /// Space-separated word such as "b1 0^-1".
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        infinity: bool,
    },
    /// Global Alexander module M(f).
    Global,
    /// Local Alexander module M(f, b) and the factorization chain.
    Local {
        /// Label of the value b (defaults to the document's distinguished value).
        #[arg(long)]
        value: Option<String>,
    },
    /// Coinvariants and homology of the total space.
    Homology,
    /// Divisibility of the charpoly of a word by the transformed local polynomial.
    Divisibility {
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Built-in reproduction suite.
    VerifyPaper {
        #[arg(long)]
        list: bool,
        /// Parameter override such as b=0 (a, alpha, beta, gamma, b, c).
        #[arg(long = "set")]
        set: Vec<String>,
    },
    /// Polynomial whose roots are the ell-th powers of the roots of P.
    PolyTransform {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        ell: i64,
        /// Cyclotomic order of the coefficient field.
        #[arg(long, default_value_t = 1)]
        field: u32,
    },
    /// |Δ(1)| for an integer polynomial.
    OrderAtOne {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// p-torsion constraints for the fiber of a homogeneous polynomial.
    ConstraintCheck {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
        /// Exponents, comma separated.
        #[arg(long)]
        shape: String,
    },
    /// Milnor-number bounds on dim H_n(M_X).
    Bounds {
        #[arg(long)]
        mux: u64,
        #[arg(long)]
        mu0x: u64,
        #[arg(long)]
        mu: u64,
    },
    /// Homology of the cyclic cover of degree e.
    Cover {
        #[arg(long)]
        e: u64,
        /// Action on H_k as a literal "a,b;c,d" (defaults to the distinguished generator).
        #[arg(long)]
        action: Option<String>,
        /// Action on H_{k-1} (defaults to the zero module).
        #[arg(long)]
        lower: Option<String>,
    },
    /// Smith normal form and cokernel of an integer matrix.
    Snf {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// |Res(t^d - 1, ∏ Δ_i)|.
    SuspensionBound {
        #[arg(long)]
        d: u64,
        /// Integer polynomials separated by ';'.
        #[arg(long)]
        factors: String,
    },
    /// Cokernel of an injection in the suspension sequence.
    SuspensionSequence {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Homology of the complement from the variation map.
    Variation {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        n: usize,
        /// b_n(F); defaults to the number of columns.
        #[arg(long)]
        bnf: Option<usize>,
        #[arg(long)]
        components: Option<usize>,
    },
}

/// Report plus the exit status it implies.
pub struct Outcome {
    pub report: Report,
    pub code: i32,
}

fn read_input(path: &Option<String>) -> Result<(RepDocument, Vec<u8>), CliError> {
    let path = path
        .as_ref()
        .ok_or_else(|| CliError::Parse("this command needs --input FILE".into()))?;
    let bytes = fs::read(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok((RepDocument::from_json(&text)?, bytes))
}

fn load_rep(cli: &Cli, name: &str) -> Result<(MonodromyRep, Report, Mode), CliError> {
    let (doc, bytes) = read_input(&cli.input)?;
    let rep = doc.to_rep()?;
    let mut report = Report::new(name, &bytes);
    if rep.h_good {
        report.hypothesis("f is h-good (asserted by the input)");
    }
    Ok((rep, report, doc.mode()))
}

/// Integer matrix from a literal `"a,b;c,d"`; the empty literal is `0 x cols`.
pub fn parse_int_matrix(src: &str, empty_cols: usize) -> Result<IntMatrix, CliError> {
    let rows = document::split_literal(src);
    if rows.is_empty() {
        return Ok(IntMatrix::zeros(0, empty_cols));
    }
    let q = CycloField::rationals();
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Parse("rows of unequal length".into()));
    }
    let mut data = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let x = parse_element(e, &q)
                .map_err(|err| CliError::Parse(format!("entry ({}, {}): {err}", i + 1, j + 1)))?;
            data.push(
                x.as_integer()
                    .ok_or_else(|| CliError::Parse(format!("entry ({}, {}) is not an integer", i + 1, j + 1)))?,
            );
        }
    }
    Ok(IntMatrix::new(rows.len(), cols, data))
}

pub fn parse_int_poly(src: &str) -> Result<IntPoly, CliError> {
    let p = parse_poly(src, &CycloField::rationals())?;
    let c = p
        .coeffs()
        .iter()
        .map(|x| x.as_integer())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| CliError::Parse(format!("'{src}' does not have integer coefficients")))?;
    Ok(IntPoly::new(c))
}

fn args_echo(cli: &Cli) -> String {
    format!("{:?}", cli.command)
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let bound = cli.cyclotomic_bound;
    let ok = |report| Ok(Outcome { report, code: 0 });
    match &cli.command {
        Command::FiberModule { label, word, infinity } => {
            let (rep, mut report, mode) = load_rep(cli, "fiber-module")?;
            let (name, t) = match (label, word, infinity) {
                (Some(l), None, false) => {
                    let i = rep
                        .label_index(l)
                        .ok_or_else(|| CliError::Parse(format!("unknown generator '{l}'")))?;
                    (l.clone(), rep.matrices()[i].clone())
                }
                (None, Some(w), false) => {
                    let w = FreeWord::parse(w, rep.labels())?;
                    (w.render(rep.labels()), evaluate_word(&rep, &w)?)
                }
                (None, None, true) => ("infinity".to_string(), monodromy_at_infinity(&rep)),
                _ => return Err(CliError::Parse("give exactly one of --label, --word, --infinity".into())),
            };
            report.push("operator", &name);
            let m = module_from_automorphism(&t)?;
            report.push_module("module", &m, bound);
            if mode == Mode::Integer {
                let z = ZLaurentModule::new(t.to_integer().expect("integral"))?;
                report.push("lattice module", z.render());
            }
            ok(report)
        }
        Command::Global => {
            let (rep, mut report, mode) = load_rep(cli, "global")?;
            let g = global_alexander_module(&rep, mode)?;
            let actions: Vec<String> = g.induced_actions().iter().map(|a| a.to_string()).collect();
            report.push_data(
                "global module",
                g.render(),
                json!({"dimension": g.dim(), "group": g.quotient.group().to_string(), "induced_actions": actions}),
            );
            report.push("kernel dimension", g.kernel_basis().len());
            let collapsed = g.collapse()?.group();
            let coinv = group_coinvariants(&rep, mode)?;
            report.push("collapse equals coinvariants", collapsed == coinv.group);
            ok(report)
        }
        Command::Local { value } => {
            let (mut rep, mut report, mode) = load_rep(cli, "local")?;
            if let Some(v) = value {
                let i = rep
                    .label_index(v)
                    .ok_or_else(|| CliError::Parse(format!("unknown value '{v}'")))?;
                rep = rep.with_distinguished(i)?;
            }
            report.push("value", &rep.labels()[rep.distinguished()]);
            let l = local_alexander_module(&rep, mode)?;
            if mode == Mode::Integer {
                report.push("local module", l.render(bound));
                report.push_module("local module over Q", &l.module, bound);
            } else {
                report.push_module("local module", &l.module, bound);
            }
            report.push("induced t", &l.induced_t);
            let chain = factorization_chain_report(&rep)?;
            report.push(
                "chain dimensions",
                format!("{} -> {} -> {}", chain.dims[0], chain.dims[1], chain.dims[2]),
            );
            report.push_module("fiber module", &chain.fiber, bound);
            report.push_module("global module at value", &chain.global, bound);
            report.push("dominance", chain.dominance);
            for n in &chain.notes {
                report.push("note", n);
            }
            if !rep.h_good {
                report.warn("h-good hypothesis not asserted; the bound is not certified");
            }
            ok(report)
        }
        Command::Homology => {
            let (rep, mut report, mode) = load_rep(cli, "homology")?;
            let c = group_coinvariants(&rep, mode)?;
            report.push("coinvariants", &c);
            let h = total_space_homology(&rep, mode)?;
            for (k, g) in &h.groups {
                if mode == Mode::Field && *k != 1 {
                    report.push(format!("dim H_{k}(E; K)"), g.rank);
                } else {
                    report.push_group(&format!("H_{k}(E)"), g);
                }
            }
            if let Some((a, b)) = &h.extension {
                report.push("H_1(E) extension", format!("0 -> {a} -> H_1(E) -> {b} -> 0"));
            }
            ok(report)
        }
        Command::Divisibility { word } => {
            let (rep, mut report, _) = load_rep(cli, "divisibility")?;
            let w = FreeWord::parse(word, rep.labels())?;
            let c = divisibility_check(&rep, &w)?;
            report.push("word", if w.is_empty() { "1".into() } else { w.render(rep.labels()) });
            report.push("winding", c.ell);
            report.push("local polynomial", &c.local_polynomial);
            report.push("transformed", &c.transformed);
            report.push("charpoly", &c.charpoly);
            report.push("divides", c.holds());
            if let Some(q) = &c.quotient {
                report.push("quotient", q);
            }
            ok(report)
        }
        Command::VerifyPaper { list, set } => suite::run(*list, set, bound, args_echo(cli).as_bytes()),
        Command::PolyTransform { poly, ell, field } => {
            let mut report = Report::new("poly-transform", args_echo(cli).as_bytes());
            if *field == 0 {
                return Err(CliError::Parse("field order must be positive".into()));
            }
            let p: UniPoly = parse_poly(poly, &CycloField::get(*field))?;
            report.push("input", &p);
            report.push("ell", ell);
            report.push("transform", power_transform(&p, *ell)?);
            ok(report)
        }
        Command::OrderAtOne { poly } => {
            let mut report = Report::new("order-at-one", args_echo(cli).as_bytes());
            let p = parse_int_poly(poly)?;
            report.push("polynomial", &p);
            report.push("order", torsion_order_at_one(&p));
            ok(report)
        }
        Command::ConstraintCheck { p, d, shape } => {
            let mut report = Report::new("constraint-check", args_echo(cli).as_bytes());
            let exps = shape
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Parse(format!("shape: {e}")))?;
            let r = torsion_constraint_check(&TorsionShape::new(*p, exps, *d)?)?;
            report.push("verdict", r.verdict);
            for reason in r.reasons {
                report.push("reason", reason);
            }
            ok(report)
        }
        Command::Bounds { mux, mu0x, mu } => {
            let mut report = Report::new("bounds", args_echo(cli).as_bytes());
            let (lo, hi) = milnor_bounds(MilnorData {
                mu_x: *mux,
                mu0_x: *mu0x,
                mu: *mu,
            })?;
            report.push("lower", lo);
            report.push("upper", hi);
            report.hypothesis("f is a (topologically) good polynomial");
            ok(report)
        }
        Command::Cover { e, action, lower } => {
            let (hk, bytes) = match action {
                Some(a) => (parse_int_matrix(a, 0)?, args_echo(cli).into_bytes()),
                None => {
                    let (doc, bytes) = read_input(&cli.input)?;
                    let rep = doc.to_rep()?;
                    let t = rep.matrices()[rep.distinguished()]
                        .to_integer()
                        .ok_or_else(|| CliError::Parse("cover needs integer matrices".into()))?;
                    (t, bytes)
                }
            };
            let mut report = Report::new("cover", &bytes);
            let low = match lower {
                Some(l) => ZLaurentModule::new(parse_int_matrix(l, 0)?)?,
                None => ZLaurentModule::zero(),
            };
            let g = cover_homology(&ZLaurentModule::new(hk)?, &low, *e)?;
            report.push_group("cover homology", &g);
            ok(report)
        }
        Command::Snf { matrix } => {
            let mut report = Report::new("snf", args_echo(cli).as_bytes());
            let a = parse_int_matrix(matrix, 0)?;
            let d: Vec<String> = smith_normal_form_z(&a).iter().map(|x| x.to_string()).collect();
            report.push("diagonal", d.join(", "));
            report.push_group("cokernel", &cokernel_z(&a));
            ok(report)
        }
        Command::SuspensionBound { d, factors } => {
            let mut report = Report::new("suspension-bound", args_echo(cli).as_bytes());
            let polys = factors
                .split(';')
                .filter(|s| !s.trim().is_empty())
                .map(parse_int_poly)
                .collect::<Result<Vec<_>, _>>()?;
            report.push("bound", suspension_order_bound(&polys, *d)?);
            ok(report)
        }
        Command::SuspensionSequence { matrix } => {
            let mut report = Report::new("suspension-sequence", args_echo(cli).as_bytes());
            report.push_group("cokernel", &suspension_sequence_solve(&parse_int_matrix(matrix, 0)?)?);
            ok(report)
        }
        Command::Variation {
            matrix,
            n,
            bnf,
            components,
        } => {
            let mut report = Report::new("variation", args_echo(cli).as_bytes());
            let v = parse_int_matrix(matrix, bnf.unwrap_or(0))?;
            let b = bnf.unwrap_or(v.cols());
            let h = variation_complement_homology(&v, *n, b, *components)?;
            for (k, g) in &h {
                report.push_group(&format!("H_{k}(M_X)"), g);
            }
            report.hypothesis("f is h-good");
            ok(report)
        }
    }
}
