//! Gaussian elimination over a field.

use crate::arith::{Field, Poly};
use crate::error::{Error, Result};

use super::matrix::Matrix;

/// Reduced row echelon form and the pivot column of each nonzero row.
pub fn rref<F: Field>(a: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols() {
        if row == m.rows() {
            break;
        }
        let Some(p) = (row..m.rows()).find(|&r| !m[(r, col)].is_zero()) else {
            continue;
        };
        m.swap_rows(p, row);
        let inv = m[(row, col)].inv().expect("nonzero pivot");
        m.scale_row(row, &inv);
        for r in 0..m.rows() {
            if r != row && !m[(r, col)].is_zero() {
                let c = -m[(r, col)].clone();
                m.add_row_multiple(r, row, &c);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

pub fn rank<F: Field>(a: &Matrix<F>) -> usize {
    rref(a).1.len()
}

/// Basis of the right kernel `{x : A x = 0}`, one vector per free column.
pub fn kernel_basis<F: Field>(a: &Matrix<F>) -> Vec<Vec<F>> {
    let (r, pivots) = rref(a);
    let n = a.cols();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); n];
        v[free] = F::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r[(i, free)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Basis of the column space, in row echelon form (rows of the returned list).
pub fn column_space<F: Field>(a: &Matrix<F>) -> Vec<Vec<F>> {
    let (r, pivots) = rref(&a.transpose());
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

pub fn inverse<F: Field>(a: &Matrix<F>) -> Result<Matrix<F>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(a.clone());
    }
    let aug = Matrix::hstack(&[a.clone(), Matrix::identity(n)])?;
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::NotAutomorphism);
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Ok(r.submatrix(&rows, &cols))
}

pub fn det<F: Field>(a: &Matrix<F>) -> F {
    assert!(a.is_square(), "determinant of a non-square matrix");
    crate::arith::resultant::determinant(a.to_rows())
}

/// Some solution of `A x = b`, or `None` if the system is inconsistent.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(b.len(), a.rows(), "right-hand side has wrong length");
    let bcol = Matrix::from_columns(a.rows(), &[b.to_vec()]);
    let aug = Matrix::hstack(&[a.clone(), bcol]).expect("same row count");
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols()) {
        return None;
    }
    let mut x = vec![F::zero(); a.cols()];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[(i, a.cols())].clone();
    }
    Some(x)
}

/// Characteristic polynomial `det(tI - A)` through reduction to Hessenberg form.
pub fn charpoly<F: Field>(a: &Matrix<F>) -> Poly<F> {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let n = a.rows();
    let mut h = a.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&i| !h[(i, j)].is_zero()) else {
            continue;
        };
        h.swap_rows(p, j + 1);
        h.swap_cols(p, j + 1);
        let inv = h[(j + 1, j)].inv().expect("nonzero pivot");
        for r in j + 2..n {
            if h[(r, j)].is_zero() {
                continue;
            }
            let u = h[(r, j)].clone() * inv.clone();
            h.add_row_multiple(r, j + 1, &(-u.clone()));
            h.add_col_multiple(j + 1, r, &u);
        }
    }
    // p[k] is the charpoly of the leading k x k block.
    let mut p: Vec<Poly<F>> = vec![Poly::one()];
    for m in 0..n {
        let mut next = &Poly::linear(h[(m, m)].clone()) * &p[m];
        let mut sub = F::one();
        for i in (0..m).rev() {
            sub = sub * h[(i + 1, i)].clone();
            if sub.is_zero() {
                break;
            }
            let c = h[(i, m)].clone() * sub.clone();
            next = &next - &p[i].scale(&c);
        }
        p.push(next);
    }
    p.pop().expect("nonempty")
}
