//! Numerical formulas: Milnor-number bounds, torsion constraints, local
//! characteristic polynomials, suspension bookkeeping and the homology of
//! the complement from the variation map.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_prime, resultant_int, IntPoly, UniPoly};
use crate::error::{Error, Result};
use crate::linalg::{cokernel_z, rank, AbelianGroup, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MilnorData {
    pub mu_x: u64,
    pub mu0_x: u64,
    pub mu: u64,
}

/// `(max(0, μ_X + μ_{0,X} - μ), μ_{0,X})`.
pub fn milnor_bounds(data: MilnorData) -> Result<(u64, u64)> {
    if data.mu < data.mu_x {
        return Err(Error::Invalid("special fiber exceeds total Milnor number".into()));
    }
    let lower = (data.mu_x + data.mu0_x).saturating_sub(data.mu);
    Ok((lower, data.mu0_x))
}

/// Fiber torsion `Z/p^{k_1} ⊕ ... ⊕ Z/p^{k_m}` of a homogeneous polynomial of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionShape {
    pub p: u64,
    pub exponents: Vec<u32>,
    pub d: u64,
}

impl TorsionShape {
    /// Exponents are sorted nonincreasingly; zero exponents are rejected.
    pub fn new(p: u64, mut exponents: Vec<u32>, d: u64) -> Result<Self> {
        if exponents.contains(&0) {
            return Err(Error::Invalid("exponents must be positive".into()));
        }
        if d == 0 {
            return Err(Error::Invalid("degree must be positive".into()));
        }
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        Ok(TorsionShape { p, exponents, d })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Inconsistent,
    NoConstraint,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::Inconsistent => "inconsistent",
            Verdict::NoConstraint => "no-constraint",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintReport {
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

/// Necessary conditions on the `p`-torsion of the fiber when the complement
/// has no `p`-torsion: `(p-1, d) = 1` forces `m >= 2, k_1 = k_2`, and
/// `((p-1)p(p+1), d) = 1` forces `m >= 3, k_1 = k_2 = k_3`.
pub fn torsion_constraint_check(shape: &TorsionShape) -> Result<ConstraintReport> {
    let p = shape.p;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let d = BigInt::from(shape.d);
    let pb = BigInt::from(p);
    let one = BigInt::one();
    let g1 = (&pb - &one).gcd(&d);
    let g2 = ((&pb - &one) * &pb * (&pb + &one)).gcd(&d);
    let k = &shape.exponents;
    let mut triggered = false;
    let mut failed = false;
    let mut reasons = Vec::new();
    for (g, expr, need) in [(g1, "gcd(p-1,d)", 2usize), (g2, "gcd((p-1)p(p+1),d)", 3)] {
        if !g.is_one() {
            reasons.push(format!("{expr} = {g}, no condition"));
            continue;
        }
        triggered = true;
        let ok = k.len() >= need && k[..need].iter().all(|&e| e == k[0]);
        let lhs = (1..=need).map(|i| format!("k{i}")).collect::<Vec<_>>().join("=");
        if ok {
            reasons.push(format!("{expr} = 1 forces m>={need} and {lhs}: satisfied"));
        } else {
            failed = true;
            reasons.push(format!("{expr} = 1 forces m>={need} and {lhs}: violated"));
        }
    }
    let verdict = if failed {
        Verdict::Inconsistent
    } else if triggered {
        Verdict::Consistent
    } else {
        Verdict::NoConstraint
    };
    Ok(ConstraintReport { verdict, reasons })
}

/// `(t - 1)^k ∏ Δ_i` with `k = b_n(F) - Σ deg Δ_i`; returns the polynomial and `k`.
pub fn assemble_local_charpoly(local_factors: &[UniPoly], b_n_f: usize) -> Result<(UniPoly, usize)> {
    let total: usize = local_factors.iter().map(UniPoly::deg).sum();
    if total > b_n_f {
        return Err(Error::Invalid("local data exceeds fiber rank".into()));
    }
    let k = b_n_f - total;
    let base = UniPoly::from_ints(&[-1, 1]).pow(k as u32);
    let p = local_factors.iter().fold(base, |acc, d| &acc * d);
    Ok((p, k))
}

/// `|Res(t^d - 1, ∏ Δ_i)| = |∏_{k=1..d} ∏_i Δ_i(α^k)|`, `α = e^{2πi/d}`.
pub fn suspension_order_bound(local_factors: &[IntPoly], d: u64) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::Invalid("d must be positive".into()));
    }
    let prod = local_factors.iter().fold(IntPoly::one(), |acc, p| &acc * p);
    let mut c = vec![BigInt::zero(); d as usize + 1];
    c[0] = BigInt::from(-1);
    c[d as usize] = BigInt::one();
    let r = resultant_int(&IntPoly::new(c), &prod)?;
    if r.is_zero() {
        return Err(Error::Hypothesis("hypothesis Δ_i(α^k)≠0 violated".into()));
    }
    Ok(r.abs())
}

/// Homology of the complement of an h-good polynomial from the variation map
/// `V: H_n(F) -> 𝒱_0` (`b_n(F)` columns). Degrees not listed are zero.
/// For `n = 1` the count of irreducible components, when given, is checked
/// against the rank of `H_1`.
pub fn variation_complement_homology(
    v: &IntMatrix,
    n: usize,
    b_n_f: usize,
    r_components: Option<usize>,
) -> Result<BTreeMap<usize, AbelianGroup>> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    if v.cols() != b_n_f {
        return Err(Error::DimensionMismatch(format!(
            "variation has {} columns, expected b_n(F) = {b_n_f}",
            v.cols()
        )));
    }
    let r = rank(&v.to_field());
    if r > v.rows().min(v.cols()) {
        return Err(Error::Invalid("rank exceeds matrix dimensions".into()));
    }
    let coker = cokernel_z(v);
    let top = AbelianGroup::free(b_n_f - r);
    let mut out = BTreeMap::new();
    out.insert(0, AbelianGroup::free(1));
    if n > 1 {
        out.insert(1, AbelianGroup::free(1));
        out.insert(n, coker);
        out.insert(n + 1, top);
    } else {
        let h1 = coker.direct_sum(&AbelianGroup::free(1));
        if let Some(rc) = r_components {
            if !h1.torsion.is_empty() || h1.rank != rc {
                return Err(Error::Hypothesis(format!(
                    "H_1 = {h1} is not free of rank {rc}, the number of components"
                )));
            }
        }
        out.insert(1, h1);
        out.insert(2, top);
    }
    Ok(out)
}

/// Third term of `0 -> H_q(M_X) -> H_q(M_{X,d}) -> H_{q+1}(M_Y) -> 0`.
pub fn suspension_sequence_solve(inclusion: &IntMatrix) -> Result<AbelianGroup> {
    if rank(&inclusion.to_field()) != inclusion.cols() {
        return Err(Error::Invalid("sequence not exact on the left".into()));
    }
    Ok(cokernel_z(inclusion))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(p: u64, k: &[u32], d: u64) -> TorsionShape {
        TorsionShape::new(p, k.to_vec(), d).unwrap()
    }

    #[test]
    fn milnor_examples() {
        let b = |x, y, z| milnor_bounds(MilnorData { mu_x: x, mu0_x: y, mu: z });
        assert_eq!(b(10, 10, 16).unwrap(), (4, 10));
        assert_eq!(b(7, 3, 7).unwrap(), (3, 3));
        assert_eq!(b(0, 0, 5).unwrap(), (0, 0));
        assert!(b(6, 1, 5).is_err());
    }

    #[test]
    fn constraint_examples() {
        let v = |s| torsion_constraint_check(&s).unwrap().verdict;
        assert_eq!(v(shape(2, &[1], 3)), Verdict::Inconsistent);
        assert_eq!(v(shape(2, &[2, 2, 1], 5)), Verdict::Inconsistent);
        assert_eq!(v(shape(7, &[3], 14)), Verdict::NoConstraint);
        assert_eq!(v(shape(2, &[2, 2, 2], 5)), Verdict::Consistent);
        assert_eq!(torsion_constraint_check(&shape(4, &[1], 3)), Err(Error::NotPrime(4)));
    }

    #[test]
    fn local_charpoly_examples() {
        let (p, k) = assemble_local_charpoly(&[], 3).unwrap();
        assert_eq!((p, k), (UniPoly::from_ints(&[-1, 1]).pow(3), 3));
        let (p, k) = assemble_local_charpoly(&[UniPoly::from_ints(&[1, 1])], 1).unwrap();
        assert_eq!((p, k), (UniPoly::from_ints(&[1, 1]), 0));
        let nodes = vec![UniPoly::from_ints(&[-1, 1]); 10];
        let (p, k) = assemble_local_charpoly(&nodes, 16).unwrap();
        assert_eq!((p, k), (UniPoly::from_ints(&[-1, 1]).pow(16), 6));
        assert!(assemble_local_charpoly(&nodes, 9).is_err());
    }

    #[test]
    fn suspension_bound_examples() {
        assert_eq!(suspension_order_bound(&[IntPoly::from_ints(&[1, 1])], 3).unwrap(), BigInt::from(2));
        assert_eq!(suspension_order_bound(&[IntPoly::from_ints(&[-2, 1])], 1).unwrap(), BigInt::from(1));
        assert!(suspension_order_bound(&[IntPoly::from_ints(&[-1, 1])], 4).is_err());
    }

    #[test]
    fn variation_examples() {
        let h = variation_complement_homology(&IntMatrix::from_i64(1, 1, &[-2]), 2, 1, None).unwrap();
        assert_eq!(h[&2].to_string(), "ℤ/2");
        assert!(h[&3].is_trivial());
        let h = variation_complement_homology(&IntMatrix::zeros(0, 3), 2, 3, None).unwrap();
        assert!(h[&2].is_trivial());
        assert_eq!(h[&3], AbelianGroup::free(3));
        let h = variation_complement_homology(&IntMatrix::from_i64(2, 2, &[1, 0, 0, 3]), 2, 2, None).unwrap();
        assert_eq!(h[&2].to_string(), "ℤ/3");
        assert!(h[&3].is_trivial());
    }

    #[test]
    fn suspension_sequence_examples() {
        let g = suspension_sequence_solve(&IntMatrix::from_i64(2, 2, &[1, 0, 0, 3])).unwrap();
        assert_eq!(g.to_string(), "ℤ/3");
        assert!(suspension_sequence_solve(&IntMatrix::identity(3)).unwrap().is_trivial());
        assert_eq!(suspension_sequence_solve(&IntMatrix::from_i64(1, 1, &[2])).unwrap().to_string(), "ℤ/2");
        assert!(suspension_sequence_solve(&IntMatrix::from_i64(2, 2, &[1, 1, 1, 1])).is_err());
    }
}
