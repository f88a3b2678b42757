use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{CycloField, FieldElement};
use crate::error::{Error, Result};
use crate::linalg::saturate::saturate_subspace_raw;
use crate::linalg::{
    hermite_rows, saturate_lattice, smith_with_transforms, AbelianGroup, FieldMatrix, IntMatrix, Mode,
};

/// Quotient module `ℋ / W` with the induced actions of commuting operators.
///
/// Field mode: `K^dim` in the basis of the complement coordinates.
/// Integer mode: `⊕ Z/orders_i` (an order of zero is a free summand), in the
/// coordinates that diagonalize the relations.
#[derive(Clone, Debug, PartialEq)]
pub struct PresentedModule {
    pub mode: Mode,
    pub field: Arc<CycloField>,
    dim: usize,
    pub orders: Vec<BigInt>,
    pub actions: Vec<FieldMatrix>,
    /// Basis of the relation submodule in the parent coordinates (echelon
    /// rows in field mode, Hermite rows in integer mode).
    pub relations: Vec<Vec<FieldElement>>,
}

impl PresentedModule {
    /// The free module of rank `dim` with the given actions.
    pub fn free(mode: Mode, field: Arc<CycloField>, dim: usize, actions: Vec<FieldMatrix>) -> Self {
        PresentedModule {
            mode,
            field,
            dim,
            orders: if mode == Mode::Integer {
                vec![BigInt::zero(); dim]
            } else {
                Vec::new()
            },
            actions,
            relations: Vec::new(),
        }
    }

    /// Number of generators (field mode: the dimension).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Underlying abelian group; in field mode the dimension as a free rank.
    pub fn group(&self) -> AbelianGroup {
        match self.mode {
            Mode::Field => AbelianGroup::free(self.dim),
            Mode::Integer => AbelianGroup::from_orders(0, &self.orders),
        }
    }

    /// Rank over the field of fractions.
    pub fn rank(&self) -> usize {
        match self.mode {
            Mode::Field => self.dim,
            Mode::Integer => self.orders.iter().filter(|o| o.is_zero()).count(),
        }
    }

    /// Indices of the free generators (all of them in field mode).
    pub fn free_indices(&self) -> Vec<usize> {
        match self.mode {
            Mode::Field => (0..self.dim).collect(),
            Mode::Integer => (0..self.dim).filter(|&i| self.orders[i].is_zero()).collect(),
        }
    }

    /// Action of operator `i` on the free quotient `M / torsion`.
    pub fn free_action(&self, i: usize) -> FieldMatrix {
        let idx = self.free_indices();
        self.actions[i].submatrix(&idx, &idx)
    }

    /// Whether all induced actions commute pairwise (on the module, i.e.
    /// modulo the relation orders in integer mode).
    pub fn actions_commute(&self) -> bool {
        for (i, a) in self.actions.iter().enumerate() {
            for b in &self.actions[i + 1..] {
                let c = &(a * b) - &(b * a);
                if !self.is_zero_map(&c) {
                    return false;
                }
            }
        }
        true
    }

    fn is_zero_map(&self, c: &FieldMatrix) -> bool {
        match self.mode {
            Mode::Field => c.is_zero(),
            Mode::Integer => (0..self.dim).all(|r| {
                (0..self.dim).all(|s| {
                    let x = c[(r, s)].as_integer().expect("integral");
                    if self.orders[r].is_zero() {
                        x.is_zero()
                    } else {
                        x.mod_floor(&self.orders[r]).is_zero()
                    }
                })
            }),
        }
    }

    /// Quotient of `K^dim` or `Z^dim` by the smallest submodule containing
    /// `relations` and stable under `ops` and their inverses.
    pub fn quotient_of_free(
        mode: Mode,
        field: Arc<CycloField>,
        dim: usize,
        relations: &[Vec<FieldElement>],
        ops: &[FieldMatrix],
    ) -> Result<Self> {
        match mode {
            Mode::Field => field_quotient(field, dim, relations, ops),
            Mode::Integer => {
                let rel = to_int_vectors(relations)?;
                let ops_z = to_int_matrices(ops)?;
                let lattice = saturate_lattice(dim, &rel, &ops_z)?;
                integer_quotient(field, dim, &lattice, &ops_z)
            }
        }
    }

    /// Further quotient by the submodule generated by `relations`, which
    /// are given in this module's coordinates and saturated under its actions.
    pub fn quotient(&self, relations: &[Vec<FieldElement>]) -> Result<Self> {
        match self.mode {
            Mode::Field => field_quotient(self.field.clone(), self.dim, relations, &self.actions),
            Mode::Integer => {
                let mut rel = to_int_vectors(relations)?;
                for (i, o) in self.orders.iter().enumerate() {
                    if !o.is_zero() {
                        let mut v = vec![BigInt::zero(); self.dim];
                        v[i] = o.clone();
                        rel.push(v);
                    }
                }
                let ops_z = to_int_matrices(&self.actions)?;
                let lattice = invariant_lattice(self.dim, &rel, &ops_z)?;
                integer_quotient(self.field.clone(), self.dim, &lattice, &ops_z)
            }
        }
    }

    /// Images of `(A_i - I)` for the listed operators, as relation vectors.
    pub fn augmentation_images(&self, which: &[usize]) -> Vec<Vec<FieldElement>> {
        let id = FieldMatrix::identity(self.dim);
        let mut out = Vec::new();
        for &i in which {
            let d = &self.actions[i] - &id;
            out.extend((0..self.dim).map(|j| d.column(j)));
        }
        out
    }

    /// `M / Σ (t_i - 1) M`, the coinvariants under all operators.
    pub fn collapse(&self) -> Result<Self> {
        let all: Vec<usize> = (0..self.actions.len()).collect();
        self.quotient(&self.augmentation_images(&all))
    }

    /// Whether every operator acts as the identity on the module.
    pub fn actions_trivial(&self) -> bool {
        let id = FieldMatrix::identity(self.dim);
        self.actions.iter().all(|a| self.is_zero_map(&(a - &id)))
    }
}

fn to_int_vectors(v: &[Vec<FieldElement>]) -> Result<Vec<Vec<BigInt>>> {
    v.iter()
        .map(|x| x.iter().map(FieldElement::as_integer).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Invalid("non-integral vector in integer mode".into()))
}

fn to_int_matrices(ops: &[FieldMatrix]) -> Result<Vec<IntMatrix>> {
    ops.iter()
        .map(FieldMatrix::to_integer)
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Invalid("non-integral operator in integer mode".into()))
}

/// Saturation of `rel` under operators that are only automorphisms modulo the
/// relation orders: images are added until the lattice is stable.
fn invariant_lattice(
    dim: usize,
    rel: &[Vec<BigInt>],
    ops: &[IntMatrix],
) -> Result<Vec<Vec<BigInt>>> {
    let mut basis = hermite_rows(rel, dim);
    // The lattice contains the relation lattice of the module, on which the
    // operators are well defined; each pass strictly enlarges it or stops,
    // and ascending chains in Z^dim stabilize.
    loop {
        let mut extra = Vec::new();
        for b in &basis {
            for op in ops {
                let w = op.mul_vec(b);
                if !crate::linalg::lattice_contains(&basis, &w) {
                    extra.push(w);
                }
            }
        }
        if extra.is_empty() {
            return Ok(basis);
        }
        extra.extend(basis.iter().cloned());
        basis = hermite_rows(&extra, dim);
    }
}

fn field_quotient(
    field: Arc<CycloField>,
    dim: usize,
    relations: &[Vec<FieldElement>],
    ops: &[FieldMatrix],
) -> Result<PresentedModule> {
    let relations: Vec<Vec<FieldElement>> = relations
        .iter()
        .map(|v| v.iter().map(|x| x.lift_to(&field)).collect())
        .collect();
    let ops: Vec<FieldMatrix> = ops.iter().map(|a| a.lift_to(&field)).collect();
    let w = saturate_subspace_raw(dim, &relations, &ops)?;
    let basis = w.basis();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect();
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let q = free.len();
    let mut actions = Vec::with_capacity(ops.len());
    for a in &ops {
        let mut m = FieldMatrix::zeros(q, q);
        for (col, &j) in free.iter().enumerate() {
            let image = w.reduce(&a.column(j));
            for (row, &i) in free.iter().enumerate() {
                m[(row, col)] = image[i].clone();
            }
        }
        actions.push(m);
    }
    Ok(PresentedModule {
        mode: Mode::Field,
        field,
        dim: q,
        orders: Vec::new(),
        actions,
        relations: basis,
    })
}

/// `Z^dim / L` for the invariant lattice `L` (Hermite rows), with actions
/// transported to the Smith coordinates `y = U x`; coordinates of order one
/// are dropped.
fn integer_quotient(
    field: Arc<CycloField>,
    dim: usize,
    lattice: &[Vec<BigInt>],
    ops: &[IntMatrix],
) -> Result<PresentedModule> {
    let b = IntMatrix::from_columns(dim, lattice);
    let s = smith_with_transforms(&b);
    let mut orders = vec![BigInt::zero(); dim];
    for (i, d) in s.diagonal.iter().enumerate() {
        orders[i] = d.abs();
    }
    let keep: Vec<usize> = (0..dim).filter(|&i| !orders[i].is_one()).collect();
    let mut actions = Vec::with_capacity(ops.len());
    for a in ops {
        let t = &(&s.u * a) * &s.u_inv;
        let mut m = t.submatrix(&keep, &keep);
        for (r, &i) in keep.iter().enumerate() {
            if !orders[i].is_zero() {
                for c in 0..keep.len() {
                    m[(r, c)] = m[(r, c)].mod_floor(&orders[i]);
                }
            }
        }
        actions.push(m.to_field());
    }
    Ok(PresentedModule {
        mode: Mode::Integer,
        field,
        dim: keep.len(),
        orders: keep.iter().map(|&i| orders[i].clone()).collect(),
        actions,
        relations: lattice
            .iter()
            .map(|r| r.iter().map(|x| FieldElement::from_integer(x.clone())).collect())
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: &[i64]) -> Vec<FieldElement> {
        v.iter().map(|&x| FieldElement::int(x)).collect()
    }

    #[test]
    fn integer_quotient_by_twice_identity() {
        let q = CycloField::rationals();
        let t = IntMatrix::from_i64(1, 1, &[-1]).to_field();
        let m = PresentedModule::quotient_of_free(Mode::Integer, q, 1, &[fe(&[2])], &[t]).unwrap();
        assert_eq!(m.group().to_string(), "ℤ/2");
        assert!(m.actions_trivial());
    }

    #[test]
    fn field_quotient_coordinates() {
        let q = CycloField::rationals();
        let shift = FieldMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        let m = PresentedModule::quotient_of_free(Mode::Field, q, 2, &[fe(&[1, -1])], &[shift]).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.actions_trivial());
    }

    #[test]
    fn collapse_of_free_module() {
        let q = CycloField::rationals();
        let a = FieldMatrix::from_i64(2, 2, &[1, 1, 0, 1]);
        let m = PresentedModule::free(Mode::Integer, q, 2, vec![a]);
        let c = m.collapse().unwrap();
        assert_eq!(c.group(), AbelianGroup::free(1));
    }
}
