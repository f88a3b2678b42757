//! Resultants through the Sylvester matrix.

use num_bigint::BigInt;

use super::field::FieldElement;
use super::poly::{IntPoly, Poly};
use super::ring::Field;
use crate::error::{Error, Result};

/// `Res(p, q) = det Syl(p, q) = lc(p)^deg(q) * prod_{p(a)=0} q(a)`.
pub fn resultant<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Result<F> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroResultant);
    }
    let (m, n) = (p.deg(), q.deg());
    if m == 0 {
        return Ok(pow(&p.coeff(0), n));
    }
    if n == 0 {
        return Ok(pow(&q.coeff(0), m));
    }
    let size = m + n;
    let mut syl = vec![vec![F::zero(); size]; size];
    // Coefficients highest degree first, shifted one column per row.
    for (i, row) in syl.iter_mut().take(n).enumerate() {
        for (j, c) in p.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
    }
    for (i, row) in syl.iter_mut().skip(n).enumerate() {
        for (j, c) in q.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
    }
    Ok(determinant(syl))
}

/// Resultant of integer polynomials; computed over `Q` and exact in `Z`.
pub fn resultant_int(p: &IntPoly, q: &IntPoly) -> Result<BigInt> {
    let pq = p.map(|c| FieldElement::from_integer(c.clone()));
    let qq = q.map(|c| FieldElement::from_integer(c.clone()));
    let r = resultant(&pq, &qq)?;
    Ok(r.as_integer().expect("resultant of integer polynomials is an integer"))
}

fn pow<F: Field>(a: &F, e: usize) -> F {
    (0..e).fold(F::one(), |acc, _| acc * a.clone())
}

/// Gaussian elimination determinant over a field.
pub(crate) fn determinant<F: Field>(mut a: Vec<Vec<F>>) -> F {
    let n = a.len();
    let mut det = F::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return F::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = det * p.clone();
        let inv = p.inv().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() * inv.clone();
            for c in col..n {
                let v = a[col][c].clone();
                a[r][c] = a[r][c].clone() - factor.clone() * v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(c: &[i64]) -> Poly<BigRational> {
        Poly::from_ints(c)
    }

    #[test]
    fn linear_pair() {
        assert_eq!(resultant(&q(&[-1, 1]), &q(&[1, 1])).unwrap(), BigRational::from_integer(2.into()));
    }

    #[test]
    fn cubic_against_linear() {
        // det of the 4x4 Sylvester matrix [[1,0,0,-1],[1,1,0,0],[0,1,1,0],[0,0,1,1]]
        let p = q(&[-1, 0, 0, 1]);
        let l = q(&[1, 1]);
        assert_eq!(resultant(&p, &l).unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(resultant(&l, &p).unwrap(), BigRational::from_integer((-2).into()));
    }

    #[test]
    fn constant_argument() {
        assert_eq!(resultant(&q(&[3, 1, 4]), &q(&[1])).unwrap(), BigRational::from_integer(1.into()));
        assert_eq!(resultant(&q(&[3, 1, 4]), &q(&[2])).unwrap(), BigRational::from_integer(4.into()));
    }

    #[test]
    fn zero_input_rejected() {
        assert_eq!(resultant(&q(&[]), &q(&[1, 1])), Err(Error::ZeroResultant));
    }

    #[test]
    fn integer_wrapper() {
        let r = resultant_int(&IntPoly::from_ints(&[-1, 0, 0, 1]), &IntPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(r, BigInt::from(2));
    }
}
