//! Row-style Hermite normal form and lattices in `Z^m`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Hermite normal form of the lattice spanned by `rows` (vectors of length
/// `ncols`): echelon rows with positive pivots, entries above each pivot
/// reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_rows(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .inspect(|r| assert_eq!(r.len(), ncols, "vector has wrong length"))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut top = 0;
    for col in 0..ncols {
        if top == m.len() {
            break;
        }
        loop {
            let piv = (top..m.len())
                .filter(|&i| !m[i][col].is_zero())
                .min_by(|&a, &b| m[a][col].magnitude().cmp(m[b][col].magnitude()));
            let Some(p) = piv else { break };
            m.swap(top, p);
            let mut done = true;
            for i in top + 1..m.len() {
                if m[i][col].is_zero() {
                    continue;
                }
                let q = m[i][col].div_floor(&m[top][col]);
                let pivot_row = m[top].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                if !m[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if top == m.len() || m[top][col].is_zero() {
            continue;
        }
        if m[top][col].is_negative() {
            for x in m[top].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..top {
            let q = m[i][col].div_floor(&m[top][col]);
            if q.is_zero() {
                continue;
            }
            let pivot_row = m[top].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                *x -= &q * y;
            }
        }
        top += 1;
        m.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    m.truncate(top);
    m
}

/// Reduces `v` against an HNF basis; the result is zero iff `v` lies in the lattice.
pub fn reduce_by_hermite(basis: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    let mut v = v.to_vec();
    for row in basis {
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let q = v[p].div_floor(&row[p]);
        if q.is_zero() {
            continue;
        }
        for (x, y) in v.iter_mut().zip(row) {
            *x -= &q * y;
        }
    }
    v
}

pub fn lattice_contains(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    reduce_by_hermite(basis, v).iter().all(Zero::is_zero)
}

/// HNF of the column space of `a`, as row vectors.
pub fn column_lattice(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let cols: Vec<Vec<BigInt>> = (0..a.cols()).map(|j| a.column(j)).collect();
    hermite_rows(&cols, a.rows())
}
