//! Smallest invariant subspace or sublattice containing given vectors.

use num_bigint::BigInt;

use crate::arith::{Field, FieldElement};
use crate::error::{Error, Result};

use super::echelon::{inverse, rref};
use super::hermite::{hermite_rows, lattice_contains};
use super::matrix::{FieldMatrix, IntMatrix, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Field,
    Integer,
}

/// Incrementally maintained echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct Subspace<F> {
    dim: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Subspace<F> {
    pub fn new(dim: usize) -> Self {
        Subspace { dim, rows: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// `v` minus its component along the current basis.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let c = w[*p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.clone() - c.clone() * y.clone();
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns whether the subspace grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim, "vector has wrong length");
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero");
        let w = w.into_iter().map(|x| x * inv.clone()).collect();
        self.rows.push((p, w));
        true
    }

    /// Basis in reduced row echelon form.
    pub fn basis(&self) -> Vec<Vec<F>> {
        if self.rows.is_empty() {
            return Vec::new();
        }
        let m = Matrix::from_rows(self.rows.iter().map(|(_, r)| r.clone()).collect())
            .expect("rectangular");
        let (r, piv) = rref(&m);
        (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
    }
}

fn check_square<T: crate::arith::Ring>(ops: &[Matrix<T>], dim: usize) -> Result<()> {
    for op in ops {
        if op.rows() != dim || op.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "operator is {}x{}, vectors have length {dim}",
                op.rows(),
                op.cols()
            )));
        }
    }
    Ok(())
}

/// Smallest subspace of `F^dim` containing `generators` and stable under each
/// operator and its inverse. Returns an RREF basis.
pub fn saturate_subspace<F: Field>(
    dim: usize,
    generators: &[Vec<F>],
    operators: &[Matrix<F>],
) -> Result<Vec<Vec<F>>> {
    Ok(saturate_subspace_raw(dim, generators, operators)?.basis())
}

pub(crate) fn saturate_subspace_raw<F: Field>(
    dim: usize,
    generators: &[Vec<F>],
    operators: &[Matrix<F>],
) -> Result<Subspace<F>> {
    check_square(operators, dim)?;
    if generators.iter().any(|g| g.len() != dim) {
        return Err(Error::DimensionMismatch("generator has wrong length".into()));
    }
    let mut all = operators.to_vec();
    for op in operators {
        all.push(inverse(op)?);
    }
    let mut space = Subspace::new(dim);
    let mut queue: Vec<Vec<F>> = Vec::new();
    for g in generators {
        if space.insert(g) {
            queue.push(g.clone());
        }
    }
    // Every vector that enlarged the space is pushed once; the dimension is
    // bounded by `dim`, so the queue drains.
    while let Some(v) = queue.pop() {
        for op in &all {
            let w = op.mul_vec(&v);
            if space.insert(&w) {
                queue.push(w);
            }
        }
    }
    Ok(space)
}

/// Inverse of a matrix with determinant `±1`, computed over `Q`.
pub fn unimodular_inverse(a: &IntMatrix) -> Result<IntMatrix> {
    inverse(&a.to_field())?
        .to_integer()
        .ok_or(Error::NotAutomorphism)
}

/// Smallest subgroup of `Z^dim` containing `generators` and stable under each
/// operator and its inverse. Returns a Hermite basis.
pub fn saturate_lattice(
    dim: usize,
    generators: &[Vec<BigInt>],
    operators: &[IntMatrix],
) -> Result<Vec<Vec<BigInt>>> {
    check_square(operators, dim)?;
    if generators.iter().any(|g| g.len() != dim) {
        return Err(Error::DimensionMismatch("generator has wrong length".into()));
    }
    let mut all = operators.to_vec();
    for op in operators {
        all.push(unimodular_inverse(op)?);
    }
    let mut basis = hermite_rows(generators, dim);
    // Each pass either leaves the Hermite basis unchanged or strictly enlarges
    // the lattice. Ascending chains of subgroups of Z^dim stabilize, so the
    // loop terminates.
    loop {
        let mut extra = Vec::new();
        for b in &basis {
            for op in &all {
                let w = op.mul_vec(b);
                if !lattice_contains(&basis, &w) {
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

/// Saturation of cyclotomic vectors; in integer mode all data must be integral
/// and the result is a Hermite basis of the sublattice.
pub fn saturate_subgroup(
    dim: usize,
    generators: &[Vec<FieldElement>],
    operators: &[FieldMatrix],
    mode: Mode,
) -> Result<Vec<Vec<FieldElement>>> {
    match mode {
        Mode::Field => saturate_subspace(dim, generators, operators),
        Mode::Integer => {
            let gens = generators
                .iter()
                .map(|g| g.iter().map(FieldElement::as_integer).collect::<Option<Vec<_>>>())
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Invalid("non-integral generator in integer mode".into()))?;
            let ops = operators
                .iter()
                .map(FieldMatrix::to_integer)
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Invalid("non-integral operator in integer mode".into()))?;
            let basis = saturate_lattice(dim, &gens, &ops)?;
            Ok(basis
                .into_iter()
                .map(|v| v.into_iter().map(FieldElement::from_integer).collect())
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn qv(x: &[i64]) -> Vec<BigRational> {
        x.iter().map(|&a| BigRational::from_integer(a.into())).collect()
    }

    fn iv(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn trivial_cases() {
        let id = Matrix::<BigRational>::identity(3);
        assert!(saturate_subspace(3, &[], &[id.clone()]).unwrap().is_empty());
        let b = saturate_subspace(3, &[qv(&[1, 0, 0])], &[id]).unwrap();
        assert_eq!(b, vec![qv(&[1, 0, 0])]);
    }

    #[test]
    fn cyclic_shift_fills_space() {
        let shift = Matrix::<BigRational>::from_i64(3, 3, &[0, 0, 1, 1, 0, 0, 0, 1, 0]);
        let b = saturate_subspace(3, &[qv(&[1, 0, 0])], &[shift.clone()]).unwrap();
        assert_eq!(b.len(), 3);
        let b = saturate_subspace(3, &[qv(&[1, 1, 1])], &[shift]).unwrap();
        assert_eq!(b.len(), 1);
    }

    #[test]
    fn lattice_saturation() {
        let swap = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        let b = saturate_lattice(2, &[iv(&[2, 0])], &[swap]).unwrap();
        assert_eq!(b, vec![iv(&[2, 0]), iv(&[0, 2])]);
        let bad = IntMatrix::from_i64(1, 1, &[2]);
        assert_eq!(saturate_lattice(1, &[iv(&[1])], &[bad]), Err(Error::NotAutomorphism));
    }

    #[test]
    fn dimension_mismatch() {
        let id = Matrix::<BigRational>::identity(2);
        assert!(matches!(
            saturate_subspace(3, &[qv(&[1, 0, 0])], &[id]),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
