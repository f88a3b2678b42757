use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::arith::factor::{cmp_poly, factorize_in, is_certified_irreducible, is_cyclotomic_factor};
use crate::arith::{CycloField, FieldElement, UniPoly, DEFAULT_CYCLOTOMIC_BOUND};
use crate::error::{Error, Result};
use crate::linalg::{characteristic_matrix, det, smith_normal_form_poly, FieldMatrix, Matrix};

/// Finitely generated module over `K[t, 1/t]`, `K = Q(zeta_N)`:
/// `Λ^free_rank ⊕ Λ/(d_1) ⊕ ... ⊕ Λ/(d_a)` with `d_1 | ... | d_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentModule {
    free_rank: usize,
    invariant_factors: Vec<UniPoly>,
    field_order: u32,
}

impl LaurentModule {
    /// Checks the chain: monic, nonunit, not divisible by `t`, `d_i | d_{i+1}`.
    pub fn new(free_rank: usize, invariant_factors: Vec<UniPoly>, field_order: u32) -> Result<Self> {
        for d in &invariant_factors {
            if d.is_zero() || d.deg() == 0 {
                return Err(Error::Invalid(format!("invariant factor {d} is zero or a unit")));
            }
            if d.leading() != FieldElement::int(1) {
                return Err(Error::Invalid(format!("invariant factor {d} is not monic")));
            }
            if d.coeff(0).is_zero() {
                return Err(Error::Invalid(format!("invariant factor {d} is divisible by t")));
            }
        }
        for w in invariant_factors.windows(2) {
            if !w[0].divides(&w[1]) {
                return Err(Error::Invalid(format!("{} does not divide {}", w[0], w[1])));
            }
        }
        Ok(LaurentModule {
            free_rank,
            invariant_factors,
            field_order,
        })
    }

    pub fn zero(field_order: u32) -> Self {
        LaurentModule {
            free_rank: 0,
            invariant_factors: Vec::new(),
            field_order,
        }
    }

    /// `Λ^free_rank ⊕ ⊕ Λ/(f_i)` for arbitrary nonzero `f_i`; units vanish and
    /// factors of `t` are removed since `t` is invertible.
    pub fn from_cyclic_summands(free_rank: usize, summands: &[UniPoly], field_order: u32) -> Self {
        let field = CycloField::get(field_order);
        let diag: Vec<UniPoly> = summands
            .iter()
            .map(|f| strip_t(&f.map(|c| c.lift_to(&field))))
            .collect();
        let chain = smith_normal_form_poly(&Matrix::diagonal(diag), true);
        LaurentModule {
            free_rank,
            invariant_factors: chain.into_iter().map(|d| d.monic()).collect(),
            field_order,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[UniPoly] {
        &self.invariant_factors
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn field(&self) -> Arc<CycloField> {
        CycloField::get(self.field_order)
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }

    /// Dimension over `K` of the torsion part.
    pub fn torsion_dim(&self) -> usize {
        self.invariant_factors.iter().map(UniPoly::deg).sum()
    }

    /// Elementary divisors `(p, k)` meaning a summand `Λ/p^k`, in canonical
    /// order (prime by degree then coefficients, exponent ascending), plus a
    /// flag telling whether every factor was resolved.
    pub fn elementary_divisors(&self, bound: u64) -> (Vec<(UniPoly, u32)>, bool) {
        let field = self.field();
        let mut out = Vec::new();
        let mut complete = true;
        for d in &self.invariant_factors {
            let rep = factorize_in(d, &field, bound);
            complete &= rep.complete;
            out.extend(rep.resolved);
            out.extend(rep.unresolved);
        }
        out.sort_by(|a, b| cmp_poly(&a.0, &b.0).then(a.1.cmp(&b.1)));
        (out, complete)
    }

    /// Canonical text such as `Λ/(t-1) ⊕ Λ/(t-1)^2`.
    pub fn render(&self, bound: u64) -> String {
        let (divs, _) = self.elementary_divisors(bound);
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Λ".to_string()),
            k => parts.push(format!("Λ^{k}")),
        }
        for (p, k) in divs {
            if k == 1 {
                parts.push(format!("Λ/({p})"));
            } else {
                parts.push(format!("Λ/({p})^{k}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

impl fmt::Display for LaurentModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(DEFAULT_CYCLOTOMIC_BOUND))
    }
}

fn strip_t(f: &UniPoly) -> UniPoly {
    let shift = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    UniPoly::new(f.coeffs()[shift..].to_vec())
}

/// Largest field among the entries of `m` and the matrix lifted into it.
pub fn common_field(m: &FieldMatrix) -> (Arc<CycloField>, FieldMatrix) {
    let field = m
        .entries()
        .iter()
        .map(|c| c.field())
        .max_by_key(|f| f.degree())
        .cloned()
        .unwrap_or_else(CycloField::rationals);
    let lifted = m.lift_to(&field);
    (field, lifted)
}

/// The `Λ`-module `K^m` with `t` acting by `T`.
pub fn module_from_automorphism(t: &FieldMatrix) -> Result<LaurentModule> {
    if !t.is_square() {
        return Err(Error::DimensionMismatch("automorphism must be square".into()));
    }
    let (field, t) = common_field(t);
    if t.rows() > 0 && det(&t).is_zero() {
        return Err(Error::NotAutomorphism);
    }
    let chain = smith_normal_form_poly(&characteristic_matrix(&t), true);
    Ok(LaurentModule {
        free_rank: 0,
        invariant_factors: chain,
        field_order: field.order(),
    })
}

/// Monic product of the invariant factors; the free part is ignored.
pub fn alexander_polynomial(m: &LaurentModule) -> UniPoly {
    m.invariant_factors
        .iter()
        .fold(UniPoly::one(), |acc, d| &acc * d)
}

/// `K(M, p)`: exponents `k_1 >= k_2 >= ... >= 1` of the prime `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionSequence {
    pub prime: UniPoly,
    pub exponents: Vec<u32>,
}

impl TorsionSequence {
    /// `(k_1, ..., k_a) >= (m_1, ..., m_b)`: `a >= b` and `k_i >= m_i`.
    pub fn dominates(&self, other: &TorsionSequence) -> bool {
        self.exponents.len() >= other.exponents.len()
            && self.exponents.iter().zip(&other.exponents).all(|(k, m)| k >= m)
    }
}

fn multiplicity(p: &UniPoly, f: &UniPoly) -> u32 {
    let mut k = 0;
    let mut rest = f.clone();
    while let Some(q) = p.exact_quotient_of(&rest) {
        k += 1;
        rest = q;
        if rest.deg() < p.deg() {
            break;
        }
    }
    k
}

pub fn p_torsion_sequence(m: &LaurentModule, p: &UniPoly, bound: u64) -> Result<TorsionSequence> {
    let field = m.field();
    let p = p.map(|c| c.lift_to(&field)).monic();
    if p.deg() == 0 {
        return Err(Error::Reducible(format!("{p} is a unit")));
    }
    if p == UniPoly::t() {
        return Err(Error::Invalid("t is a unit in Λ".into()));
    }
    match is_certified_irreducible(&p, &field, bound) {
        Some(true) => {}
        Some(false) => return Err(Error::Reducible(p.to_string())),
        None => {
            return Err(Error::Reducible(format!(
                "{p} (irreducibility could not be certified)"
            )))
        }
    }
    let exponents = m
        .invariant_factors
        .iter()
        .rev()
        .map(|d| multiplicity(&p, d))
        .filter(|&k| k > 0)
        .collect();
    Ok(TorsionSequence { prime: p, exponents })
}

/// `K(M, p) >= K(N, p)` for every prime `p`, decided without factoring:
/// with chains `d_1 | ... | d_a` and `e_1 | ... | e_b`, true iff `b <= a` and
/// `e_{b-i}` divides `d_{a-i}` for all `i`.
pub fn dominance_check(m: &LaurentModule, n: &LaurentModule) -> bool {
    let d = &m.invariant_factors;
    let e = &n.invariant_factors;
    e.len() <= d.len() && e.iter().rev().zip(d.iter().rev()).all(|(ei, di)| ei.divides(di))
}

/// Irreducible factors of `Δ(M)` that do not divide any `t^k - 1`, `k <= bound`.
pub fn roots_of_unity_audit(m: &LaurentModule, bound: u64) -> Vec<UniPoly> {
    let (divs, _) = m.elementary_divisors(bound);
    let mut out: Vec<UniPoly> = Vec::new();
    for (p, _) in divs {
        if !is_cyclotomic_factor(&p, bound) && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// `N(a, k)`: the number of invariant factors of `M` vanishing at `a`.
pub fn count_a_summands(m: &LaurentModule, a: &FieldElement) -> Result<usize> {
    let field = m.field();
    if a.field().degree() > 1 && field.degree() > 1 && a.order() != field.order() {
        return Err(Error::FieldMismatch(a.order(), field.order()));
    }
    Ok(m
        .invariant_factors
        .iter()
        .filter(|d| d.eval(a).is_zero())
        .count())
}

/// Dimensions of `H_k(M_X, L_a)` for `0 <= k <= n + 1` from the torsion
/// Alexander modules (missing degrees are zero modules):
/// `N(a,k) + N(a,k-1)` for `k <= n` and `N(a,n) + |χ|` in degree `n + 1`.
pub fn local_system_dims(
    torsion_by_degree: &BTreeMap<usize, LaurentModule>,
    a: &FieldElement,
    n: usize,
    euler_mx: i64,
) -> Result<BTreeMap<usize, usize>> {
    if a.is_zero() {
        return Err(Error::Invalid("a must be nonzero".into()));
    }
    let mut counts = vec![0usize; n + 1];
    for (&k, m) in torsion_by_degree {
        if k > n {
            continue;
        }
        if !m.is_torsion() {
            return Err(Error::Hypothesis(format!(
                "Alexander module in degree {k} is not torsion"
            )));
        }
        counts[k] = count_a_summands(m, a)?;
    }
    let mut out = BTreeMap::new();
    for k in 0..=n {
        let prev = if k == 0 { 0 } else { counts[k - 1] };
        out.insert(k, counts[k] + prev);
    }
    out.insert(n + 1, counts[n] + euler_mx.unsigned_abs() as usize);
    Ok(out)
}
