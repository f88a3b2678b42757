//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! Elements are coordinate vectors in the power basis `1, z, ..., z^(phi(N)-1)`
//! of `Q[z]/(Phi_N(z))`. Rational numbers live in `Q(zeta_1)` and are lifted
//! into whichever field the other operand belongs to, so `zero()`/`one()` need
//! no field context.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use super::cyclotomic::cyclotomic_poly;
use super::poly::{format_poly, CoeffDisplay, Poly};
use super::ring::{Field, Ring};

#[derive(Debug)]
pub struct CycloField {
    order: u32,
    /// Monic `Phi_N`, lowest degree first.
    modulus: Vec<BigRational>,
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for CycloField {}

static FIELDS: Lazy<Mutex<HashMap<u32, Arc<CycloField>>>> = Lazy::new(Default::default);

impl CycloField {
    /// Shared handle for `Q(zeta_order)`.
    pub fn get(order: u32) -> Arc<CycloField> {
        assert!(order > 0, "cyclotomic order must be positive");
        let mut cache = FIELDS.lock().expect("field cache poisoned");
        cache
            .entry(order)
            .or_insert_with(|| {
                let modulus = cyclotomic_poly(order as u64)
                    .coeffs()
                    .iter()
                    .map(|c| BigRational::from_integer(c.clone()))
                    .collect();
                Arc::new(CycloField { order, modulus })
            })
            .clone()
    }

    pub fn rationals() -> Arc<CycloField> {
        CycloField::get(1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut c: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        for i in (d..c.len()).rev() {
            let lead = std::mem::replace(&mut c[i], BigRational::zero());
            if lead.is_zero() {
                continue;
            }
            for j in 0..d {
                let m = &self.modulus[j];
                if !m.is_zero() {
                    c[i - d + j] -= &lead * m;
                }
            }
        }
        c.resize(d, BigRational::zero());
        c
    }
}

#[derive(Clone)]
pub struct FieldElement {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl FieldElement {
    /// Element with the given power-basis coordinates (any length; reduced
    /// modulo `Phi_N`).
    pub fn new(field: Arc<CycloField>, coeffs: Vec<BigRational>) -> Self {
        let coeffs = field.reduce(coeffs);
        FieldElement { field, coeffs }
    }

    pub fn from_rational(q: BigRational) -> Self {
        FieldElement {
            field: CycloField::rationals(),
            coeffs: vec![q],
        }
    }

    pub fn from_integer(n: BigInt) -> Self {
        FieldElement::from_rational(BigRational::from_integer(n))
    }

    pub fn int(n: i64) -> Self {
        FieldElement::from_integer(BigInt::from(n))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        FieldElement::from_rational(BigRational::new(p.into(), q.into()))
    }

    /// `zeta^k` in `field`; negative exponents allowed.
    pub fn zeta_pow(field: &Arc<CycloField>, k: i64) -> Self {
        let n = field.order() as i64;
        let e = k.rem_euclid(n) as usize;
        let mut c = vec![BigRational::zero(); e + 1];
        c[e] = BigRational::one();
        FieldElement::new(field.clone(), c)
    }

    pub fn zeta(field: &Arc<CycloField>) -> Self {
        FieldElement::zeta_pow(field, 1)
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// Re-express in `target`, which must contain this element's field
    /// (`Q` embeds everywhere; otherwise the orders must agree).
    pub fn lift_to(&self, target: &Arc<CycloField>) -> Self {
        if self.field.order == target.order {
            return self.clone();
        }
        match self.as_rational() {
            Some(q) if self.field.degree() == 1 => {
                let mut c = vec![BigRational::zero(); target.degree()];
                c[0] = q;
                FieldElement {
                    field: target.clone(),
                    coeffs: c,
                }
            }
            _ => panic!(
                "field mismatch: Q(zeta_{}) vs Q(zeta_{})",
                self.field.order, target.order
            ),
        }
    }

    fn common_field(&self, other: &Self) -> Arc<CycloField> {
        if self.field.order == other.field.order || other.field.degree() == 1 {
            self.field.clone()
        } else if self.field.degree() == 1 {
            other.field.clone()
        } else {
            panic!(
                "field mismatch: Q(zeta_{}) vs Q(zeta_{})",
                self.field.order, other.field.order
            )
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = FieldElement::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Lexicographic order on coordinates; used only to make output canonical.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        let f = self.common_field(other);
        let a = self.lift_to(&f);
        let b = other.lift_to(&f);
        a.coeffs.cmp(&b.coeffs)
    }

    /// Galois conjugate `zeta -> zeta^k` for `gcd(k, N) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let mut acc = FieldElement::zero().lift_to(&self.field);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = FieldElement::zeta_pow(&self.field, k * i as i64).scale_rational(c);
            acc = &acc + &term;
        }
        acc
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }
}

impl Field for FieldElement {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            let mut c = vec![BigRational::zero(); self.field.degree()];
            c[0] = q.recip();
            return Some(FieldElement {
                field: self.field.clone(),
                coeffs: c,
            });
        }
        // Invert a(z) modulo Phi_N(z) by the extended Euclidean algorithm.
        let a = Poly::new(self.coeffs.clone());
        let m = Poly::new(self.field.modulus.clone());
        let (g, s, _) = a.ext_gcd(&m);
        debug_assert!(g.is_one(), "Phi_N is irreducible");
        Some(FieldElement::new(self.field.clone(), s.into_coeffs()))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        if self.field.order == other.field.order {
            return self.coeffs == other.coeffs;
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for FieldElement {}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        let f = self.common_field(rhs);
        let (a, b) = (self.lift_to(&f), rhs.lift_to(&f));
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        FieldElement { field: f, coeffs }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        let f = self.common_field(rhs);
        let (a, b) = (self.lift_to(&f), rhs.lift_to(&f));
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        FieldElement { field: f, coeffs }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        if let Some(q) = rhs.as_rational() {
            let f = self.common_field(rhs);
            return self.lift_to(&f).scale_rational(&q);
        }
        if let Some(q) = self.as_rational() {
            let f = self.common_field(rhs);
            return rhs.lift_to(&f).scale_rational(&q);
        }
        let f = self.common_field(rhs);
        let d = f.degree();
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        FieldElement::new(f, prod)
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * &rhs.inv().expect("division by zero field element")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement::from_rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
}

impl One for FieldElement {
    fn one() -> Self {
        FieldElement::from_rational(BigRational::one())
    }
}

impl Ring for FieldElement {
    fn from_int(n: i64) -> Self {
        FieldElement::int(n)
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::int(n)
    }
}

impl fmt::Display for FieldElement {
    /// Power-basis rendering in the symbol `z`, e.g. `-z-1`, `1/2*z^2+3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = Poly::new(self.coeffs.clone());
        f.write_str(&format_poly(&p, "z"))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in Q(zeta_{})", self, self.field.order)
    }
}

impl CoeffDisplay for FieldElement {
    fn as_signed_text(&self) -> Option<(bool, String)> {
        self.as_rational().map(|q| {
            let neg = q.is_negative();
            (neg, q.abs().to_string())
        })
    }
    fn full_text(&self) -> String {
        self.to_string()
    }
    fn is_one_coeff(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Arc<CycloField> {
        CycloField::get(3)
    }

    #[test]
    fn cube_root_relations() {
        let j = FieldElement::zeta(&k3());
        let j2 = j.pow(2);
        assert_eq!(&(&FieldElement::one() + &j) + &j2, FieldElement::zero());
        assert_eq!(j.pow(3), FieldElement::one());
        assert_eq!(j.pow(-1), j2);
        assert_eq!(j2.to_string(), "-z-1");
    }

    #[test]
    fn inverse_in_q_zeta_5() {
        let f = CycloField::get(5);
        let a = &FieldElement::zeta(&f) + &FieldElement::int(2);
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, FieldElement::one());
    }

    #[test]
    fn rationals_lift_into_any_field() {
        let j = FieldElement::zeta(&k3());
        let half = FieldElement::ratio(1, 2);
        let s = &j + &half;
        assert_eq!(s.order(), 3);
        assert_eq!(&s - &j, half);
    }

    #[test]
    fn galois_conjugation() {
        let j = FieldElement::zeta(&k3());
        assert_eq!(j.galois(2), j.pow(2));
        let f = CycloField::get(12);
        let z = FieldElement::zeta(&f);
        assert_eq!(z.galois(5), z.pow(5));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let a = FieldElement::zeta(&CycloField::get(3));
        let b = FieldElement::zeta(&CycloField::get(5));
        let _ = &a + &b;
    }
}
