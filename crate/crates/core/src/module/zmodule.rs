use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::IntPoly;
use crate::error::{Error, Result};
use crate::linalg::{charpoly, cokernel_z, det, rank, AbelianGroup, IntMatrix};

/// Free lattice `Z^m` with `t` acting by an automorphism (`det = ±1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZLaurentModule {
    action: IntMatrix,
}

impl ZLaurentModule {
    pub fn new(action: IntMatrix) -> Result<Self> {
        if !action.is_square() {
            return Err(Error::DimensionMismatch("action must be square".into()));
        }
        if action.rows() > 0 && !det(&action.to_field()).as_integer().is_some_and(|d| d.abs().is_one()) {
            return Err(Error::NotAutomorphism);
        }
        Ok(ZLaurentModule { action })
    }

    pub fn zero() -> Self {
        ZLaurentModule {
            action: IntMatrix::zeros(0, 0),
        }
    }

    pub fn rank(&self) -> usize {
        self.action.rows()
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    pub fn charpoly(&self) -> IntPoly {
        charpoly(&self.action.to_field()).map(|c| c.as_integer().expect("integral matrix"))
    }

    /// A vector `v` with `v, Tv, ..., T^{m-1}v` a basis of `Z^m`, searched
    /// among vectors with entries in `{-1, 0, 1}` (up to rank 8).
    pub fn cyclic_generator(&self) -> Option<Vec<BigInt>> {
        let m = self.rank();
        if m == 0 || m > 8 {
            return None;
        }
        let total = 3usize.pow(m as u32);
        (1..total).find_map(|code| {
            let mut c = code;
            let v: Vec<BigInt> = (0..m)
                .map(|_| {
                    let digit = (c % 3) as i64 - 1;
                    c /= 3;
                    BigInt::from(digit)
                })
                .collect();
            self.is_cyclic_vector(&v).then_some(v)
        })
    }

    fn is_cyclic_vector(&self, v: &[BigInt]) -> bool {
        let m = self.rank();
        let mut cols = Vec::with_capacity(m);
        let mut w = v.to_vec();
        for _ in 0..m {
            cols.push(w.clone());
            w = self.action.mul_vec(&w);
        }
        let k = IntMatrix::from_columns(m, &cols);
        det(&k.to_field())
            .as_integer()
            .is_some_and(|d| d.abs().is_one())
    }

    /// `Λ_ℤ/(Δ)` when a cyclic generator certifies it, otherwise the lattice
    /// with the characteristic polynomial of `t`.
    pub fn render(&self) -> String {
        if self.rank() == 0 {
            return "0".into();
        }
        let p = self.charpoly();
        if self.cyclic_generator().is_some() {
            format!("Λ_ℤ/({p})")
        } else {
            let m = self.rank();
            format!("ℤ^{m} with t of characteristic polynomial {p}")
        }
    }
}

impl fmt::Display for ZLaurentModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `H_k(M_{X,e}, Z) = coker(T^e - I on H_k) ⊕ ker(T^e - I on H_{k-1})`;
/// the kernel is a subgroup of a free group, hence free, and the extension splits.
pub fn cover_homology(hk: &ZLaurentModule, hk_minus_1: &ZLaurentModule, e: u64) -> Result<AbelianGroup> {
    if e == 0 {
        return Err(Error::Invalid("cover degree must be positive".into()));
    }
    let a = &hk.action.pow(e) - &IntMatrix::identity(hk.rank());
    let b = &hk_minus_1.action.pow(e) - &IntMatrix::identity(hk_minus_1.rank());
    let kernel_rank = hk_minus_1.rank() - rank(&b.to_field());
    Ok(cokernel_z(&a).direct_sum(&AbelianGroup::free(kernel_rank)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderAtOne {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for OrderAtOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderAtOne::Finite(n) => write!(f, "{n}"),
            OrderAtOne::Infinite => write!(f, "infinite"),
        }
    }
}

/// `|Δ(1)|`, or infinite when `Δ(1) = 0`.
pub fn torsion_order_at_one(delta: &IntPoly) -> OrderAtOne {
    let v = delta.eval(&BigInt::one());
    if v.is_zero() {
        OrderAtOne::Infinite
    } else {
        OrderAtOne::Finite(v.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zm(n: usize, d: &[i64]) -> ZLaurentModule {
        ZLaurentModule::new(IntMatrix::from_i64(n, n, d)).unwrap()
    }

    #[test]
    fn quadric_cover() {
        let h = zm(1, &[-1]);
        let g = cover_homology(&h, &ZLaurentModule::zero(), 1).unwrap();
        assert_eq!(g.to_string(), "ℤ/2");
        assert_eq!(h.render(), "Λ_ℤ/(t+1)");
        let g = cover_homology(&h, &ZLaurentModule::zero(), 2).unwrap();
        assert_eq!(g, AbelianGroup::free(1));
    }

    #[test]
    fn trivial_action_cover() {
        let h = ZLaurentModule::new(IntMatrix::identity(5)).unwrap();
        assert_eq!(cover_homology(&h, &ZLaurentModule::zero(), 3).unwrap(), AbelianGroup::free(5));
        assert_eq!(cover_homology(&ZLaurentModule::zero(), &h, 3).unwrap(), AbelianGroup::free(5));
    }

    #[test]
    fn non_automorphism_rejected() {
        assert_eq!(ZLaurentModule::new(IntMatrix::from_i64(1, 1, &[2])), Err(Error::NotAutomorphism));
    }

    #[test]
    fn order_at_one() {
        assert_eq!(torsion_order_at_one(&IntPoly::from_ints(&[1, 1])), OrderAtOne::Finite(BigInt::from(2)));
        assert_eq!(torsion_order_at_one(&IntPoly::from_ints(&[1, 1, 1])), OrderAtOne::Finite(BigInt::from(3)));
        assert_eq!(torsion_order_at_one(&IntPoly::from_ints(&[-1, 0, 1])), OrderAtOne::Infinite);
    }

    #[test]
    fn non_cyclic_lattice() {
        let h = ZLaurentModule::new(IntMatrix::identity(2)).unwrap();
        assert!(h.cyclic_generator().is_none());
        assert_eq!(h.render(), "ℤ^2 with t of characteristic polynomial t^2-2t+1");
        let c = zm(2, &[0, -1, 1, -1]);
        assert_eq!(c.render(), "Λ_ℤ/(t^2+t+1)");
    }
}
