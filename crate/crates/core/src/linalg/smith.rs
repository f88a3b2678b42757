//! Smith normal form over a Euclidean domain.

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use crate::arith::{Field, Poly};

use super::matrix::Matrix;

/// Euclidean domain with canonical associates.
pub trait Euclidean: crate::arith::Ring {
    type Size: Ord;
    /// Euclidean size of a nonzero element.
    fn size(&self) -> Self::Size;
    fn div_rem_e(&self, d: &Self) -> (Self, Self);
    /// Unit `u` with `u * self` canonical (positive, monic).
    fn normalizing_unit(&self) -> Self;
    fn unit_inverse(u: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Euclidean for BigInt {
    type Size = BigUint;
    fn size(&self) -> BigUint {
        self.magnitude().clone()
    }
    fn div_rem_e(&self, d: &Self) -> (Self, Self) {
        use num_integer::Integer;
        self.div_mod_floor(d)
    }
    fn normalizing_unit(&self) -> Self {
        if self.is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::from(1)
        }
    }
    fn unit_inverse(u: &Self) -> Self {
        u.clone()
    }
    fn is_unit(&self) -> bool {
        self.magnitude() == &BigUint::from(1u32)
    }
}

impl<F: Field> Euclidean for Poly<F> {
    type Size = usize;
    fn size(&self) -> usize {
        self.deg()
    }
    fn div_rem_e(&self, d: &Self) -> (Self, Self) {
        self.div_rem(d)
    }
    fn normalizing_unit(&self) -> Self {
        if self.is_zero() {
            return Poly::one();
        }
        Poly::constant(self.leading().inv().expect("nonzero leading coefficient"))
    }
    fn unit_inverse(u: &Self) -> Self {
        Poly::constant(u.coeff(0).inv().expect("unit"))
    }
    fn is_unit(&self) -> bool {
        !self.is_zero() && self.deg() == 0
    }
}

/// `U * A * V = diag(diagonal)` with unimodular `U`, `V`; `u_inv` is `U^{-1}`.
#[derive(Clone, Debug)]
pub struct Smith<R> {
    /// Canonical diagonal `d_1 | d_2 | ...` of length `min(rows, cols)`, zeros last.
    pub diagonal: Vec<R>,
    pub u: Matrix<R>,
    pub u_inv: Matrix<R>,
    pub v: Matrix<R>,
}

struct Work<R: Euclidean> {
    a: Matrix<R>,
    u: Option<(Matrix<R>, Matrix<R>)>,
    v: Option<Matrix<R>>,
}

impl<R: Euclidean> Work<R> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some((u, ui)) = &mut self.u {
            u.swap_rows(i, j);
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &R) {
        self.a.add_row_multiple(dst, src, c);
        if let Some((u, ui)) = &mut self.u {
            u.add_row_multiple(dst, src, c);
            ui.add_col_multiple(src, dst, &(-c.clone()));
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, c: &R) {
        self.a.add_col_multiple(dst, src, c);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, c);
        }
    }

    fn scale_row(&mut self, i: usize, unit: &R) {
        self.a.scale_row(i, unit);
        if let Some((u, ui)) = &mut self.u {
            u.scale_row(i, unit);
            ui.scale_col(i, &R::unit_inverse(unit));
        }
    }

    /// Position of a smallest nonzero entry in the block `[t.., t..]`.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), R::Size)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let s = x.size();
                if best.as_ref().is_none_or(|(_, b)| s < *b) {
                    best = Some(((i, j), s));
                }
            }
        }
        best.map(|(p, _)| p)
    }

    fn run(&mut self) {
        let n = self.a.rows().min(self.a.cols());
        for t in 0..n {
            let Some((pi, pj)) = self.pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                if let Some((i, j)) = self.clear_cross(t) {
                    // A remainder survived; it is smaller than the pivot.
                    self.swap_rows(t, i);
                    self.swap_cols(t, j);
                    continue;
                }
                // Pivot must divide the rest of the block.
                let bad = (t + 1..self.a.rows()).find(|&i| {
                    (t + 1..self.a.cols()).any(|j| {
                        !self.a[(i, j)].div_rem_e(&self.a[(t, t)]).1.is_zero()
                    })
                });
                match bad {
                    Some(i) => self.add_row(t, i, &R::one()),
                    None => break,
                }
            }
            let unit = self.a[(t, t)].normalizing_unit();
            self.scale_row(t, &unit);
        }
    }

    /// Clears row and column `t` using the pivot at `(t, t)`. Returns the
    /// position of a nonzero remainder if one appears.
    fn clear_cross(&mut self, t: usize) -> Option<(usize, usize)> {
        let mut leftover = None;
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let (q, r) = self.a[(i, t)].div_rem_e(&self.a[(t, t)]);
            self.add_row(i, t, &(-q));
            if !r.is_zero() && leftover.is_none() {
                leftover = Some((i, t));
            }
        }
        if leftover.is_some() {
            return leftover;
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let (q, r) = self.a[(t, j)].div_rem_e(&self.a[(t, t)]);
            self.add_col(j, t, &(-q));
            if !r.is_zero() && leftover.is_none() {
                leftover = Some((t, j));
            }
        }
        leftover
    }
}

/// Smith normal form with unimodular transforms.
pub fn smith_with_transforms<R: Euclidean>(a: &Matrix<R>) -> Smith<R> {
    let mut w = Work {
        a: a.clone(),
        u: Some((Matrix::identity(a.rows()), Matrix::identity(a.rows()))),
        v: Some(Matrix::identity(a.cols())),
    };
    w.run();
    let (u, u_inv) = w.u.expect("tracked");
    Smith {
        diagonal: diag_of(&w.a),
        u,
        u_inv,
        v: w.v.expect("tracked"),
    }
}

/// Diagonal of the Smith normal form, `d_1 | d_2 | ...`, zeros last.
pub fn smith_diagonal<R: Euclidean>(a: &Matrix<R>) -> Vec<R> {
    let mut w = Work {
        a: a.clone(),
        u: None,
        v: None,
    };
    w.run();
    diag_of(&w.a)
}

fn diag_of<R: Euclidean>(a: &Matrix<R>) -> Vec<R> {
    (0..a.rows().min(a.cols())).map(|i| a[(i, i)].clone()).collect()
}

/// Nonzero invariant factors of an integer matrix (units included).
pub fn smith_normal_form_z(a: &Matrix<BigInt>) -> Vec<BigInt> {
    smith_diagonal(a).into_iter().filter(|d| !num_traits::Zero::is_zero(d)).collect()
}

/// Monic invariant factors of a polynomial matrix; units dropped when
/// `drop_units` is set. Zero factors are omitted.
pub fn smith_normal_form_poly<F: Field>(a: &Matrix<Poly<F>>, drop_units: bool) -> Vec<Poly<F>> {
    smith_diagonal(a)
        .into_iter()
        .filter(|d| !d.is_zero() && !(drop_units && d.is_unit()))
        .collect()
}

/// The matrix `tI - T` over `F[t]`.
pub fn characteristic_matrix<F: Field>(t: &Matrix<F>) -> Matrix<Poly<F>> {
    assert!(t.is_square(), "characteristic matrix of a non-square matrix");
    let n = t.rows();
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let c = -t[(i, j)].clone();
            out[(i, j)] = if i == j {
                &Poly::t() + &Poly::constant(c)
            } else {
                Poly::constant(c)
            };
        }
    }
    out
}
