use crate::arith::factor::field_of;
use crate::arith::{resultant, FieldElement, UniPoly};
use crate::error::{Error, Result};

/// `P^(ℓ)(t) = ∏ (t - a^ℓ)^{n_a}` over the roots `a` of the monic `P`.
///
/// Computed without factoring: for monic `P` the resultant
/// `Res_x(P(x), t - x^ℓ)` equals `∏ (t - a^ℓ)`, a polynomial of degree
/// `deg P` in `t`, recovered by interpolation at `t = 0, 1, ..., deg P`.
/// Negative `ℓ` goes through the reciprocal polynomial, whose roots are `1/a`.
pub fn power_transform(p: &UniPoly, ell: i64) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::Invalid("power transform of the zero polynomial".into()));
    }
    let p = p.monic();
    if p.coeff(0).is_zero() {
        return Err(Error::Invalid("P(0) = 0: t is a unit in Λ and cannot be a root".into()));
    }
    let d = p.deg();
    if ell == 0 {
        return Ok(UniPoly::linear(FieldElement::int(1)).pow(d as u32));
    }
    if ell < 0 {
        return power_transform(&reciprocal(&p), -ell);
    }
    if ell == 1 || d == 0 {
        return Ok(p);
    }
    let field = field_of(&p);
    let ell = usize::try_from(ell).map_err(|_| Error::Invalid("exponent too large".into()))?;
    let mut points = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let tk = FieldElement::int(k as i64).lift_to(&field);
        // t_k - x^ℓ
        let mut c = vec![FieldElement::int(0).lift_to(&field); ell + 1];
        c[0] = tk.clone();
        c[ell] = FieldElement::int(-1).lift_to(&field);
        let q = UniPoly::new(c);
        points.push((tk, resultant(&p, &q)?));
    }
    Ok(interpolate(&points))
}

/// Monic polynomial whose roots are the inverses of the roots of `p`.
pub fn reciprocal(p: &UniPoly) -> UniPoly {
    let mut c = p.coeffs().to_vec();
    c.reverse();
    UniPoly::new(c).monic()
}

/// Newton interpolation through distinct nodes.
fn interpolate(points: &[(FieldElement, FieldElement)]) -> UniPoly {
    let n = points.len();
    let xs: Vec<&FieldElement> = points.iter().map(|p| &p.0).collect();
    let mut coef: Vec<FieldElement> = points.iter().map(|p| p.1.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = xs[i] - xs[i - level];
            coef[i] = &num / &den;
        }
    }
    let mut out = UniPoly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        out = &(&out * &UniPoly::linear(xs[i].clone())) + &UniPoly::constant(coef[i].clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycloField;

    fn q(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn simple_transforms() {
        assert_eq!(power_transform(&q(&[1, 1]), 2).unwrap(), q(&[-1, 1]));
        assert_eq!(power_transform(&q(&[1, 1, 1]), 3).unwrap(), q(&[1, -2, 1]));
        let p = q(&[3, 0, -1, 1]);
        assert_eq!(power_transform(&p, 1).unwrap(), p);
        assert_eq!(power_transform(&p, 0).unwrap(), q(&[-1, 1]).pow(3));
    }

    #[test]
    fn squares_of_roots() {
        // roots 2, 3 -> 4, 9
        let p = q(&[6, -5, 1]);
        assert_eq!(power_transform(&p, 2).unwrap(), q(&[36, -13, 1]));
        // inverse roots 1/2, 1/3
        let r = power_transform(&p, -1).unwrap();
        assert_eq!(r, q(&[1, -5, 6]).scale(&FieldElement::ratio(1, 6)));
    }

    #[test]
    fn cyclotomic_coefficients() {
        let k = CycloField::get(3);
        let j = FieldElement::zeta(&k);
        let p = UniPoly::linear(j.clone());
        assert_eq!(power_transform(&p, 3).unwrap(), q(&[-1, 1]));
        assert_eq!(power_transform(&p, 2).unwrap(), UniPoly::linear(j.pow(2)));
    }

    #[test]
    fn root_at_zero_rejected() {
        assert!(power_transform(&q(&[0, 1]), 2).is_err());
    }
}
