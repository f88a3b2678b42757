//! Coinvariants of the monodromy module: `ℋ_G`, the global Alexander module
//! `M(f) = ℋ_H` for `H = [G, G]`, and the local modules `M(f, b)`.
//!
//! Key lemma: `ℋ_0 = span{(h - 1)v : h ∈ H}` is the smallest `G`-stable
//! submodule containing the images of `ρ([γ_i, γ_j]) - 1`, `i < j`. Indeed
//! `(h₁h₂ - 1)v = (h₁ - 1)h₂v + (h₂ - 1)v`, and
//! `(g c g⁻¹ - 1)v = g (c - 1)(g⁻¹ v)`, while `H` is the normal closure of
//! the basic commutators.

pub mod presented;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::arith::{CycloField, FieldElement, UniPoly, DEFAULT_CYCLOTOMIC_BOUND};
use crate::error::{Error, Result};
use crate::linalg::{charpoly, det, rank, AbelianGroup, FieldMatrix, Mode};
use crate::module::{
    alexander_polynomial, dominance_check, module_from_automorphism, power_transform, LaurentModule,
    ZLaurentModule,
};
use crate::monodromy::{evaluate_word, winding, FreeWord, MonodromyRep};

pub use presented::PresentedModule;

fn check_mode(rep: &MonodromyRep, mode: Mode) -> Result<()> {
    if mode == Mode::Integer && rep.integer_matrices().is_none() {
        return Err(Error::Invalid("integer mode needs integral generator matrices".into()));
    }
    Ok(())
}

fn field_name(field: &Arc<CycloField>) -> String {
    match field.order() {
        1 | 2 => "ℚ".to_string(),
        n => format!("ℚ(ζ_{n})"),
    }
}

/// `ℋ_G` with a basis of the relation submodule as witness.
#[derive(Clone, Debug, PartialEq)]
pub struct Coinvariants {
    pub mode: Mode,
    pub field: Arc<CycloField>,
    /// Free rank is the dimension in field mode.
    pub group: AbelianGroup,
    pub witness: Vec<Vec<FieldElement>>,
}

impl Coinvariants {
    pub fn dim(&self) -> usize {
        self.group.rank
    }
}

impl fmt::Display for Coinvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            Mode::Integer => write!(f, "{}", self.group),
            Mode::Field => match self.group.rank {
                0 => write!(f, "0"),
                1 => write!(f, "{}", field_name(&self.field)),
                d => write!(f, "{}^{d}", field_name(&self.field)),
            },
        }
    }
}

/// `ℋ / Σ_i (m_i - I)ℋ`.
pub fn group_coinvariants(rep: &MonodromyRep, mode: Mode) -> Result<Coinvariants> {
    check_mode(rep, mode)?;
    let m = rep.fiber_rank();
    let id = FieldMatrix::identity(m);
    let mut images = Vec::new();
    for a in rep.matrices() {
        let d = a - &id;
        images.extend((0..m).map(|j| d.column(j)));
    }
    let q = PresentedModule::quotient_of_free(mode, rep.field().clone(), m, &images, rep.matrices())?;
    Ok(Coinvariants {
        mode,
        field: q.field.clone(),
        group: q.group(),
        witness: q.relations,
    })
}

/// `M(f)`: the quotient `ℋ / ℋ_0` with the commuting actions of `t_1, ..., t_g`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiActionModule {
    pub ambient: usize,
    pub quotient: PresentedModule,
}

impl MultiActionModule {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn induced_actions(&self) -> &[FieldMatrix] {
        &self.quotient.actions
    }

    /// Basis of `ℋ_0`.
    pub fn kernel_basis(&self) -> &[Vec<FieldElement>] {
        &self.quotient.relations
    }

    pub fn is_zero(&self) -> bool {
        self.quotient.is_zero()
    }

    /// `M(f)_{Z^g}`.
    pub fn collapse(&self) -> Result<PresentedModule> {
        self.quotient.collapse()
    }

    /// `Λ_g/(t1-a1,...,tg-ag)` summands when every action is diagonal,
    /// otherwise the underlying group with the action matrices.
    pub fn render(&self) -> String {
        let q = &self.quotient;
        if q.is_zero() {
            return "0".into();
        }
        let g = q.actions.len();
        let diagonal = q.actions.iter().all(|a| {
            (0..a.rows()).all(|i| (0..a.cols()).all(|j| i == j || a[(i, j)].is_zero()))
        });
        if !diagonal {
            let mats: Vec<String> = q.actions.iter().map(|a| a.to_string()).collect();
            return format!("{} with t_i acting by {}", group_text(q), mats.join(", "));
        }
        let ring = match q.mode {
            Mode::Field => format!("Λ_{g}"),
            Mode::Integer => format!("Λ_{{ℤ,{g}}}"),
        };
        let mut parts = Vec::new();
        for i in 0..q.dim() {
            let mut gens = Vec::new();
            if q.mode == Mode::Integer && !q.orders[i].is_zero() {
                gens.push(q.orders[i].to_string());
            }
            for (k, a) in q.actions.iter().enumerate() {
                let var = if g == 1 { "t".to_string() } else { format!("t{}", k + 1) };
                let p = UniPoly::linear(a[(i, i)].clone());
                gens.push(p.to_string().replace('t', &var));
            }
            parts.push(format!("{ring}/({})", gens.join(",")));
        }
        parts.join(" ⊕ ")
    }
}

fn group_text(q: &PresentedModule) -> String {
    match q.mode {
        Mode::Integer => q.group().to_string(),
        Mode::Field => format!("{}^{}", field_name(&q.field), q.dim()),
    }
}

impl fmt::Display for MultiActionModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn validate(q: &PresentedModule) -> Result<()> {
    if !q.actions_commute() {
        return Err(Error::Invalid("induced actions do not commute".into()));
    }
    let free = q.free_indices();
    for i in 0..q.actions.len() {
        let a = q.free_action(i);
        if free.is_empty() {
            continue;
        }
        let d = det(&a);
        let ok = match q.mode {
            Mode::Field => !d.is_zero(),
            Mode::Integer => d.as_integer().is_some_and(|x| x.abs() == num_bigint::BigInt::from(1)),
        };
        if !ok {
            return Err(Error::NotAutomorphism);
        }
    }
    Ok(())
}

/// `M(f) = ℋ_H`, saturating the basic commutator images under all generators.
pub fn global_alexander_module(rep: &MonodromyRep, mode: Mode) -> Result<MultiActionModule> {
    check_mode(rep, mode)?;
    let m = rep.fiber_rank();
    let id = FieldMatrix::identity(m);
    let mut images = Vec::new();
    for i in 0..rep.g() {
        for j in i + 1..rep.g() {
            let c = FreeWord::commutator(&FreeWord::generator(i), &FreeWord::generator(j));
            let d = &evaluate_word(rep, &c)? - &id;
            images.extend((0..m).map(|k| d.column(k)));
        }
    }
    let quotient = PresentedModule::quotient_of_free(mode, rep.field().clone(), m, &images, rep.matrices())?;
    validate(&quotient)?;
    Ok(MultiActionModule { ambient: m, quotient })
}

/// `M(f, b)` with `t` the class of the distinguished loop.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalModuleResult {
    pub presented: PresentedModule,
    pub induced_t: FieldMatrix,
    /// Over the working field; in integer mode, of the free part over `Q`.
    pub module: LaurentModule,
    /// Integer mode: the free part as a lattice module.
    pub z_module: Option<ZLaurentModule>,
    /// Integer mode: the torsion subgroup of `M(f, b)`.
    pub torsion: Option<AbelianGroup>,
}

impl LocalModuleResult {
    pub fn render(&self, bound: u64) -> String {
        match (&self.z_module, &self.torsion) {
            (Some(z), Some(tors)) if tors.is_trivial() => z.render(),
            (Some(z), Some(tors)) if z.rank() == 0 => format!("{tors}"),
            (Some(z), Some(tors)) => format!("{z} ⊕ {tors}"),
            _ => self.module.render(bound),
        }
    }
}

impl fmt::Display for LocalModuleResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(DEFAULT_CYCLOTOMIC_BOUND))
    }
}

/// `M(f, b) = M(f) / Σ_{i ≠ b} (t_i - 1) M(f)`.
pub fn local_alexander_module(rep: &MonodromyRep, mode: Mode) -> Result<LocalModuleResult> {
    let global = global_alexander_module(rep, mode)?;
    local_from_global(&global, rep.distinguished())
}

/// Second step of the two-step quotient.
pub fn local_from_global(global: &MultiActionModule, distinguished: usize) -> Result<LocalModuleResult> {
    let q = &global.quotient;
    if distinguished >= q.actions.len() {
        return Err(Error::Invalid(format!("distinguished index {distinguished} out of range")));
    }
    let others: Vec<usize> = (0..q.actions.len()).filter(|&i| i != distinguished).collect();
    let mut local = q.quotient(&q.augmentation_images(&others))?;
    let induced_t = local.actions[distinguished].clone();
    local.actions = vec![induced_t.clone()];
    let free_t = local.free_action(0);
    let module = module_from_automorphism(&free_t)?;
    let (z_module, torsion) = match local.mode {
        Mode::Field => (None, None),
        Mode::Integer => {
            let z = free_t
                .to_integer()
                .ok_or_else(|| Error::Invalid("non-integral induced action".into()))?;
            let tors: Vec<_> = local.orders.iter().filter(|o| !o.is_zero()).cloned().collect();
            (Some(ZLaurentModule::new(z)?), Some(AbelianGroup::from_orders(0, &tors)))
        }
    };
    Ok(LocalModuleResult {
        presented: local,
        induced_t,
        module,
        z_module,
        torsion,
    })
}

/// Homology of the total space `E` of the fibration over `C \ B`.
#[derive(Clone, Debug, PartialEq)]
pub struct TotalSpaceHomology {
    pub n: usize,
    /// Degrees `1`, `n`, `n + 1` (for `n = 1` only degree `2`).
    pub groups: BTreeMap<usize, AbelianGroup>,
    /// For `n = 1`: the ends `(ℋ_G, Z^g)` of `0 -> ℋ_G -> H_1(E) -> Z^g -> 0`.
    pub extension: Option<(AbelianGroup, AbelianGroup)>,
}

/// `H_1 = Z^g`, `H_n = ℋ_G`, `H_{n+1} = ker(ℋ^g -> ℋ, (v_i) -> Σ (m_i - I) v_i)`.
pub fn total_space_homology(rep: &MonodromyRep, mode: Mode) -> Result<TotalSpaceHomology> {
    let hg = group_coinvariants(rep, mode)?.group;
    let m = rep.fiber_rank();
    let g = rep.g();
    let mut stacked = FieldMatrix::zeros(m, g * m);
    for (k, a) in rep.matrices().iter().enumerate() {
        for i in 0..m {
            for j in 0..m {
                let mut x = a[(i, j)].clone();
                if i == j {
                    x = &x - &FieldElement::int(1).lift_to(rep.field());
                }
                stacked[(i, k * m + j)] = x;
            }
        }
    }
    let top = AbelianGroup::free(g * m - rank(&stacked));
    let n = rep.n;
    let mut groups = BTreeMap::new();
    let extension = if n == 1 {
        groups.insert(2, top);
        Some((hg, AbelianGroup::free(g)))
    } else {
        groups.insert(1, AbelianGroup::free(g));
        groups.insert(n, hg);
        groups.insert(n + 1, top);
        None
    };
    Ok(TotalSpaceHomology { n, groups, extension })
}

/// `ℋ -> M(f) -> M(f, b)` over the working field.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainReport {
    pub dims: [usize; 3],
    /// `ℋ` with `t` acting by the distinguished generator.
    pub fiber: LaurentModule,
    /// `M(f)` with `t` acting by the class of the distinguished generator.
    pub global: LaurentModule,
    pub local: LaurentModule,
    pub dominance: bool,
    pub h_good: bool,
    pub notes: Vec<String>,
}

pub fn factorization_chain_report(rep: &MonodromyRep) -> Result<ChainReport> {
    let b = rep.distinguished();
    let global = global_alexander_module(rep, Mode::Field)?;
    let local = local_from_global(&global, b)?;
    let fiber = module_from_automorphism(&rep.matrices()[b])?;
    let global_b = module_from_automorphism(&global.quotient.actions[b])?;
    let dominance = dominance_check(&fiber, &global_b) && dominance_check(&global_b, &local.module);
    let mut notes = vec![
        "M(f,b) is an epimorphic upper bound for the homotopy group; the true value can be strictly smaller"
            .to_string(),
    ];
    if !rep.h_good {
        notes.push("f is not asserted to be good; the bound is not certified".to_string());
    }
    Ok(ChainReport {
        dims: [rep.fiber_rank(), global.dim(), local.presented.dim()],
        fiber,
        global: global_b,
        local: local.module,
        dominance,
        h_good: rep.h_good,
        notes,
    })
}

/// `power_transform(Δ(M(f,b)), ℓ)` divides `charpoly(ρ(w))`, `ℓ = p_0(w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisibilityCertificate {
    pub ell: i64,
    pub local_polynomial: UniPoly,
    pub transformed: UniPoly,
    pub charpoly: UniPoly,
    /// Cofactor when the division is exact.
    pub quotient: Option<UniPoly>,
}

impl DivisibilityCertificate {
    pub fn holds(&self) -> bool {
        self.quotient.is_some()
    }
}

pub fn divisibility_check(rep: &MonodromyRep, w: &FreeWord) -> Result<DivisibilityCertificate> {
    let local = local_alexander_module(rep, Mode::Field)?;
    let ell = winding(rep, w);
    let delta = alexander_polynomial(&local.module);
    let transformed = power_transform(&delta, ell)?;
    let cp = charpoly(&evaluate_word(rep, w)?);
    let quotient = transformed.exact_quotient_of(&cp);
    Ok(DivisibilityCertificate {
        ell,
        local_polynomial: delta,
        transformed,
        charpoly: cp,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;
    use crate::monodromy::section7_rep;

    fn fe(n: i64) -> FieldElement {
        FieldElement::int(n)
    }

    fn quadric() -> MonodromyRep {
        MonodromyRep::new_integral(vec![IntMatrix::from_i64(1, 1, &[-1])], vec!["0".into()], 0)
            .unwrap()
            .with_n(2)
    }

    #[test]
    fn quadric_coinvariants_are_z2() {
        let c = group_coinvariants(&quadric(), Mode::Integer).unwrap();
        assert_eq!(c.group.to_string(), "ℤ/2");
        let h = total_space_homology(&quadric(), Mode::Integer).unwrap();
        assert_eq!(h.groups[&3], AbelianGroup::trivial());
        assert_eq!(h.groups[&2].to_string(), "ℤ/2");
        let l = local_alexander_module(&quadric(), Mode::Integer).unwrap();
        assert_eq!(l.to_string(), "Λ_ℤ/(t+1)");
    }

    #[test]
    fn identity_rep_keeps_everything() {
        let i = IntMatrix::identity(3);
        let rep = MonodromyRep::new_integral(vec![i.clone(), i], vec!["a".into(), "b".into()], 0).unwrap();
        assert_eq!(group_coinvariants(&rep, Mode::Integer).unwrap().group, AbelianGroup::free(3));
        let h = total_space_homology(&rep.clone().with_n(2), Mode::Field).unwrap();
        assert_eq!(h.groups[&3], AbelianGroup::free(6));
        let r = factorization_chain_report(&rep).unwrap();
        assert_eq!(r.dims, [3, 3, 3]);
        assert!(r.dominance);
    }

    #[test]
    fn section7_case2_modules() {
        for a in [0, 5] {
            let rep = section7_rep(fe(a), 2).unwrap();
            let c = group_coinvariants(&rep, Mode::Field).unwrap();
            assert_eq!(c.dim(), 1);
            let g = global_alexander_module(&rep, Mode::Field).unwrap();
            assert_eq!(g.to_string(), "Λ_2/(t1-1,t2-1)");
            let l0 = local_alexander_module(&rep, Mode::Field).unwrap();
            assert_eq!(l0.to_string(), "Λ/(t-1)");
            let l1 = local_alexander_module(&rep.with_distinguished(0).unwrap(), Mode::Field).unwrap();
            assert_eq!(l1.to_string(), "Λ/(t-1)");
            let h = total_space_homology(&rep, Mode::Field).unwrap();
            assert_eq!(h.groups[&4], AbelianGroup::free(5));
            let r = factorization_chain_report(&rep).unwrap();
            assert_eq!(r.dims, [4, 1, 1]);
            assert!(r.dominance);
        }
    }

    #[test]
    fn section7_case1_global_module_vanishes() {
        let rep = section7_rep(fe(0), 1).unwrap();
        assert!(global_alexander_module(&rep, Mode::Field).unwrap().is_zero());
    }

    #[test]
    fn section7_divisibilities() {
        let rep = section7_rep(fe(0), 2).unwrap();
        let w = FreeWord::parse("0", rep.labels()).unwrap();
        let c = divisibility_check(&rep, &w).unwrap();
        assert_eq!(c.ell, 1);
        assert_eq!(c.transformed, UniPoly::from_ints(&[-1, 1]));
        assert!(c.holds());
        let w = FreeWord::parse("b1 0", rep.labels()).unwrap();
        let c = divisibility_check(&rep, &w).unwrap();
        assert_eq!(c.charpoly, UniPoly::from_ints(&[1, 0, -2, 0, 1]));
        assert!(c.holds());
    }

    #[test]
    fn collapse_matches_coinvariants() {
        let rep = section7_rep(fe(0), 2).unwrap();
        let g = global_alexander_module(&rep, Mode::Field).unwrap();
        assert_eq!(g.collapse().unwrap().dim(), group_coinvariants(&rep, Mode::Field).unwrap().dim());
    }

    #[test]
    fn integer_mode_rejects_fractional_matrices() {
        let rep = section7_rep(fe(0), 2).unwrap();
        assert!(group_coinvariants(&rep, Mode::Integer).is_err());
    }
}
