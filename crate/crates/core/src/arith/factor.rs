//! Best-effort factorization over `Q(zeta_N)`.
//!
//! Squarefree parts are split by, in order: roots in the field (roots of unity
//! and rational-root candidates), trial division by cyclotomic polynomials
//! `Phi_k`, `k <= bound` (split further into their irreducible factors over
//! the working field), and a closure for what is left in degree at most two.
//! Anything else is reported as unresolved and the report is marked
//! incomplete; nothing is ever guessed.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::{cyclotomic_poly, euler_phi, lcm};
use super::field::{CycloField, FieldElement};
use super::poly::UniPoly;

pub const DEFAULT_CYCLOTOMIC_BOUND: u64 = 120;

/// Integers above this are not trial-factored.
const TRIAL_LIMIT: u64 = 10_000_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationReport {
    pub resolved: Vec<(UniPoly, u32)>,
    pub unresolved: Vec<(UniPoly, u32)>,
    pub complete: bool,
}

impl FactorizationReport {
    /// Product of every listed factor with multiplicity.
    pub fn product(&self) -> UniPoly {
        self.resolved
            .iter()
            .chain(&self.unresolved)
            .fold(UniPoly::one(), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

/// Field the polynomial's coefficients live in (the largest order seen).
pub(crate) fn field_of(p: &UniPoly) -> Arc<CycloField> {
    p.coeffs()
        .iter()
        .map(|c| c.field())
        .max_by_key(|f| f.degree())
        .cloned()
        .unwrap_or_else(CycloField::rationals)
}

/// Factorization of `p` over the field of its coefficients. A non-monic input
/// is normalized first; the zero polynomial and constants give an empty,
/// complete report.
pub fn factorize(p: &UniPoly, cyclotomic_bound: u64) -> FactorizationReport {
    let field = field_of(p);
    factorize_in(p, &field, cyclotomic_bound)
}

/// Same as [`factorize`] with an explicit working field.
pub fn factorize_in(p: &UniPoly, field: &Arc<CycloField>, cyclotomic_bound: u64) -> FactorizationReport {
    let mut report = FactorizationReport {
        resolved: Vec::new(),
        unresolved: Vec::new(),
        complete: true,
    };
    if p.is_zero() {
        return report;
    }
    for (part, mult) in p.monic().squarefree_decomposition() {
        let (found, rest) = split_squarefree(&part, field, cyclotomic_bound);
        report.resolved.extend(found.into_iter().map(|f| (f, mult)));
        for r in rest {
            report.unresolved.push((r, mult));
            report.complete = false;
        }
    }
    report.resolved.sort_by(|a, b| cmp_poly(&a.0, &b.0).then(a.1.cmp(&b.1)));
    report.unresolved.sort_by(|a, b| cmp_poly(&a.0, &b.0).then(a.1.cmp(&b.1)));
    report
}

/// Canonical order: degree first, then coefficients lowest degree first.
pub fn cmp_poly(a: &UniPoly, b: &UniPoly) -> std::cmp::Ordering {
    a.coeffs().len().cmp(&b.coeffs().len()).then_with(|| {
        for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
            let o = x.cmp_canonical(y);
            if o.is_ne() {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}

fn split_squarefree(
    s: &UniPoly,
    field: &Arc<CycloField>,
    bound: u64,
) -> (Vec<UniPoly>, Vec<UniPoly>) {
    let mut found = Vec::new();
    let mut rest = s.monic();

    for root in candidate_roots(&rest, field) {
        if rest.deg() == 0 {
            break;
        }
        if rest.eval(&root).is_zero() {
            let lin = UniPoly::linear(root);
            rest = lin.exact_quotient_of(&rest).expect("root divides");
            found.push(lin);
        }
    }

    for k in 1..=bound {
        if rest.deg() < 2 {
            break;
        }
        let phi = cyclotomic_poly(k).map(|c| FieldElement::from_integer(c.clone()).lift_to(field));
        let g = rest.gcd(&phi);
        if g.deg() == 0 {
            continue;
        }
        for f in cyclotomic_factors_over(k, field) {
            if f.divides(&g) {
                rest = f.exact_quotient_of(&rest).expect("factor divides");
                found.push(f);
            }
        }
    }

    let mut unresolved = Vec::new();
    match rest.deg() {
        0 => {}
        1 => found.push(rest),
        2 => match quadratic_split(&rest, field) {
            QuadVerdict::Irreducible => found.push(rest),
            QuadVerdict::Split(a, b) => {
                found.push(a);
                found.push(b);
            }
            QuadVerdict::Unknown => unresolved.push(rest),
        },
        _ => unresolved.push(rest),
    }
    (found, unresolved)
}

/// Roots of unity of the field followed by rational-root candidates.
fn candidate_roots(p: &UniPoly, field: &Arc<CycloField>) -> Vec<FieldElement> {
    let n = field.order() as i64;
    let mut out = Vec::new();
    for k in 0..n {
        let z = FieldElement::zeta_pow(field, k);
        out.push(-&z);
        out.push(z);
    }
    if p.coeffs().iter().all(|c| c.as_rational().is_some()) {
        out.extend(rational_root_candidates(p).into_iter().map(FieldElement::from_rational));
    }
    dedup(out)
}

fn dedup(v: Vec<FieldElement>) -> Vec<FieldElement> {
    let mut out: Vec<FieldElement> = Vec::new();
    for x in v {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

fn rational_root_candidates(p: &UniPoly) -> Vec<BigRational> {
    let coeffs: Vec<BigRational> = p.coeffs().iter().map(|c| c.as_rational().unwrap()).collect();
    let den_lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(den_lcm.clone())).to_integer())
        .collect();
    let mut out = Vec::new();
    let lowest = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lowest > 0 {
        out.push(BigRational::zero());
    }
    let (Some(a0), Some(an)) = (small_divisors(&ints[lowest]), small_divisors(ints.last().unwrap())) else {
        return out;
    };
    for d in &a0 {
        for e in &an {
            let q = BigRational::new(BigInt::from(*d), BigInt::from(*e));
            out.push(q.clone());
            out.push(-q);
        }
    }
    out
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64().filter(|&n| n <= TRIAL_LIMIT)?;
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            out.push(n / i);
        }
        i += 1;
    }
    Some(out)
}

/// Irreducible factors of `Phi_k` over `Q(zeta_N)`.
///
/// With `m = lcm(k, N)`, `Gal(Q(zeta_m)/Q(zeta_N))` is the group `H` of units
/// `u mod m` with `u = 1 mod N`; each factor is `prod_{u in H} (t - r^u)` for a
/// primitive `k`-th root `r`, computed in `Q(zeta_m)` and pulled back.
pub fn cyclotomic_factors_over(k: u64, field: &Arc<CycloField>) -> Vec<UniPoly> {
    let n = field.order() as u64;
    let phi_k = cyclotomic_poly(k).map(|c| FieldElement::from_integer(c.clone()).lift_to(field));
    let m = lcm(k, n);
    let ext_degree = euler_phi(m) / euler_phi(n);
    if ext_degree == euler_phi(k) {
        return vec![phi_k];
    }
    let big = CycloField::get(m as u32);
    let galois: Vec<u64> = (1..=m).filter(|u| u.gcd(&m) == 1 && u % n == 1 % n).collect();
    let mut covered = vec![false; k as usize];
    let mut out = Vec::new();
    for a in 1..=k {
        if a.gcd(&k) != 1 || covered[(a % k) as usize] {
            continue;
        }
        let mut f = UniPoly::one();
        for &u in &galois {
            let e = (a * u) % k;
            covered[e as usize] = true;
            let root = FieldElement::zeta_pow(&big, (e * (m / k)) as i64);
            f = &f * &UniPoly::linear(root);
        }
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| descend(c, field).expect("Galois-invariant coefficient"))
            .collect();
        out.push(UniPoly::new(coeffs));
    }
    debug_assert_eq!(
        out.iter().fold(UniPoly::one(), |acc, f| &acc * f),
        phi_k
    );
    out
}

/// Express an element of `Q(zeta_m)` lying in the subfield `Q(zeta_N)`,
/// `N | m`, in the power basis of the subfield.
fn descend(c: &FieldElement, sub: &Arc<CycloField>) -> Option<FieldElement> {
    if c.order() == sub.order() {
        return Some(c.clone());
    }
    if let Some(q) = c.as_rational() {
        return Some(FieldElement::from_rational(q).lift_to(sub));
    }
    let big = c.field().clone();
    let step = (big.order() / sub.order()) as i64;
    let d = sub.degree();
    let rows = big.degree();
    // Columns: images of z_N^i = z_m^(step*i); solve A x = c.
    let basis: Vec<FieldElement> = (0..d).map(|i| FieldElement::zeta_pow(&big, step * i as i64)).collect();
    let mut aug: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b.coords()[r].clone()).collect();
            row.push(c.coords()[r].clone());
            row
        })
        .collect();
    let sol = solve_rational(&mut aug, d)?;
    Some(FieldElement::new(sub.clone(), sol))
}

fn solve_rational(aug: &mut [Vec<BigRational>], unknowns: usize) -> Option<Vec<BigRational>> {
    let rows = aug.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][col].recip();
        for v in aug[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for j in 0..=unknowns {
                    let v = &aug[r][j] * &f;
                    aug[i][j] -= v;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if aug[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); unknowns];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = aug[i][unknowns].clone();
    }
    Some(x)
}

enum QuadVerdict {
    Irreducible,
    Split(UniPoly, UniPoly),
    Unknown,
}

/// Monic `t^2 + b t + c` with no root among the candidates already tried.
fn quadratic_split(q: &UniPoly, field: &Arc<CycloField>) -> QuadVerdict {
    let b = q.coeff(1);
    let c = q.coeff(0);
    let disc = &(&b * &b) - &(&FieldElement::int(4) * &c);
    let Some(d) = disc.as_rational() else {
        return QuadVerdict::Unknown;
    };
    if let Some(root) = rational_sqrt(&d) {
        let two = FieldElement::int(2);
        let r = FieldElement::from_rational(root);
        let r1 = &(&(-&b) + &r) / &two;
        let r2 = &(&(-&b) - &r) / &two;
        return QuadVerdict::Split(UniPoly::linear(r1), UniPoly::linear(r2));
    }
    if field.degree() == 1 {
        return QuadVerdict::Irreducible;
    }
    // sqrt(d) lies in Q(zeta_N) iff the conductor of Q(sqrt(d0)) divides N.
    let num = d.numer() * d.denom();
    let Some(d0) = squarefree_part(&num) else {
        return QuadVerdict::Unknown;
    };
    let d0m4 = d0.mod_floor(&BigInt::from(4));
    let conductor: BigInt = if d0m4 == BigInt::from(1) { d0.abs() } else { d0.abs() * 4 };
    if (BigInt::from(field.order()) % conductor).is_zero() {
        QuadVerdict::Unknown
    } else {
        QuadVerdict::Irreducible
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

fn squarefree_part(n: &BigInt) -> Option<BigInt> {
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs().to_u64().filter(|&m| m <= TRIAL_LIMIT)?;
    let mut out: u64 = 1;
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= p;
        }
        p += 1;
    }
    out *= m;
    Some(BigInt::from(out) * sign)
}

/// `p` is irreducible over the working field and the strategy can certify it.
pub fn is_certified_irreducible(p: &UniPoly, field: &Arc<CycloField>, bound: u64) -> Option<bool> {
    if p.deg() == 0 {
        return Some(false);
    }
    let rep = factorize_in(p, field, bound);
    if !rep.complete {
        return None;
    }
    Some(rep.resolved.len() == 1 && rep.resolved[0].1 == 1)
}

/// Whether the irreducible `f` divides `t^k - 1` for some `k <= bound`.
pub fn is_cyclotomic_factor(f: &UniPoly, bound: u64) -> bool {
    if f.is_zero() || f.coeff(0).is_zero() {
        return false;
    }
    let t = UniPoly::t();
    (1..=bound).any(|k| t.pow_mod(k, f).rem(f) == UniPoly::one().rem(f))
}
