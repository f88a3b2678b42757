use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::smith::smith_normal_form_z;

/// Finitely generated abelian group `Z^rank ⊕ Z/c_1 ⊕ ... ⊕ Z/c_k` with
/// `c_1 | c_2 | ...` and every `c_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// `Z^rank ⊕ ⊕ Z/orders_i`, canonicalized. Orders may be any integers;
    /// zero contributes a free summand and units vanish.
    pub fn from_orders(rank: usize, orders: &[BigInt]) -> Self {
        let extra = orders.iter().filter(|o| o.is_zero()).count();
        let finite: Vec<BigInt> = orders.iter().filter(|o| !o.is_zero()).cloned().collect();
        let diag = IntMatrix::diagonal(finite);
        let torsion = smith_normal_form_z(&diag)
            .into_iter()
            .map(|d| d.abs())
            .filter(|d| !d.is_one())
            .collect();
        AbelianGroup {
            rank: rank + extra,
            torsion,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Direct sum, canonicalized.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        AbelianGroup::from_orders(self.rank + other.rank, &orders)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("ℤ".to_string()),
            r => parts.push(format!("ℤ^{r}")),
        }
        parts.extend(self.torsion.iter().map(|c| format!("ℤ/{c}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// `Z^rows / image(A)`.
pub fn cokernel_z(a: &IntMatrix) -> AbelianGroup {
    let nonzero = smith_normal_form_z(a);
    AbelianGroup::from_orders(a.rows() - nonzero.len(), &nonzero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernels() {
        assert_eq!(cokernel_z(&IntMatrix::from_i64(1, 1, &[-2])).to_string(), "ℤ/2");
        assert_eq!(cokernel_z(&IntMatrix::from_i64(1, 1, &[3])).to_string(), "ℤ/3");
        let a = IntMatrix::from_i64(3, 2, &[2, 0, 0, 3, 0, 0]);
        let g = cokernel_z(&a);
        assert_eq!(g.rank, 1);
        assert_eq!(g.torsion, vec![BigInt::from(6)]);
        assert_eq!(cokernel_z(&IntMatrix::zeros(3, 3)), AbelianGroup::free(3));
    }

    #[test]
    fn canonical_orders() {
        let g = AbelianGroup::from_orders(0, &[BigInt::from(4), BigInt::from(6), BigInt::from(1)]);
        assert_eq!(g.torsion, vec![BigInt::from(2), BigInt::from(12)]);
        assert_eq!(g.to_string(), "ℤ/2 ⊕ ℤ/12");
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
    }
}
