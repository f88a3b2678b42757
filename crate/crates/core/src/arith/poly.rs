//! Dense univariate polynomials.
//!
//! Coefficients are stored lowest degree first and trailing zeros are always
//! stripped, so the zero polynomial has an empty coefficient vector and
//! structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::FieldElement;
use super::ring::{Field, Ring};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Polynomial in `t` over a cyclotomic field.
pub type UniPoly = Poly<FieldElement>;
/// Polynomial in `t` over the integers.
pub type IntPoly = Poly<BigInt>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Poly::monomial(R::one(), 1)
    }

    /// `t - a`
    pub fn linear(a: R) -> Self {
        Poly::new(vec![-a, R::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| R::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for callers that have
    /// already excluded zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * R::from_int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Substitute `t -> t^k`.
    pub fn inflate(&self, k: usize) -> Self {
        assert!(k > 0);
        let mut coeffs = vec![R::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Poly::new(coeffs)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Exact division by a monic divisor; `None` if a remainder is left.
    pub fn div_exact_monic(&self, d: &Self) -> Option<Self> {
        assert!(d.leading().is_one(), "divisor must be monic");
        let (q, r) = self.div_rem_monic(d);
        r.is_zero().then_some(q)
    }

    pub fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        assert!(d.leading().is_one(), "divisor must be monic");
        let dd = d.deg();
        if self.coeffs.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * dc.clone();
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }
}

impl<F: Field> Poly<F> {
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let lc_inv = d.leading().inv().expect("nonzero leading coefficient");
        let dm = d.scale(&lc_inv);
        let (q, r) = self.div_rem_monic(&dm);
        (q.scale(&lc_inv), r)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading().inv() {
            Some(inv) if !self.is_zero() => self.scale(&inv),
            _ => self.clone(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Quotient `other / self` when the division is exact.
    pub fn exact_quotient_of(&self, other: &Self) -> Option<Self> {
        let (q, r) = other.div_rem(self);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, u)` with `s*self + u*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut u0, mut u1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let u = &u0 - &(&q * &u1);
            u0 = std::mem::replace(&mut u1, u);
        }
        match r0.leading().inv() {
            Some(inv) if !r0.is_zero() => (r0.scale(&inv), s0.scale(&inv), u0.scale(&inv)),
            _ => (r0, s0, u0),
        }
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Poly::one().rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m);
            }
            base = (&base * &base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Yun's squarefree decomposition of a monic polynomial: pairs
    /// `(s_i, i)` with `self = prod s_i^i`, each `s_i` squarefree and pairwise
    /// coprime. Characteristic zero only.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let f = self.monic();
        if f.is_constant() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }
}

impl Poly<BigRational> {
    pub fn from_int_poly(p: &IntPoly) -> Self {
        p.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn from_int(n: i64) -> Self {
        Poly::constant(R::from_int(n))
    }
}

/// Coefficient formatting used by the polynomial printer.
pub trait CoeffDisplay {
    /// `Some(negative, magnitude_text)` when the coefficient is a plain
    /// rational; `None` for anything that needs parentheses.
    fn as_signed_text(&self) -> Option<(bool, String)>;
    fn full_text(&self) -> String;
    fn is_one_coeff(&self) -> bool;
}

impl CoeffDisplay for BigInt {
    fn as_signed_text(&self) -> Option<(bool, String)> {
        Some((self.sign() == num_bigint::Sign::Minus, self.magnitude().to_string()))
    }
    fn full_text(&self) -> String {
        self.to_string()
    }
    fn is_one_coeff(&self) -> bool {
        self.is_one()
    }
}

impl CoeffDisplay for BigRational {
    fn as_signed_text(&self) -> Option<(bool, String)> {
        let neg = self < &BigRational::zero();
        let mag = if neg { -self.clone() } else { self.clone() };
        Some((neg, mag.to_string()))
    }
    fn full_text(&self) -> String {
        self.to_string()
    }
    fn is_one_coeff(&self) -> bool {
        self.is_one()
    }
}

/// Renders `p` in the variable `var`, highest degree first, without spaces:
/// `t^2-2t+1`, `(z+1)*t-z`. The output parses back under the entry grammar.
pub fn format_poly<R: Ring + CoeffDisplay>(p: &Poly<R>, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let (neg, body) = match c.as_signed_text() {
            Some((neg, mag)) => {
                let body = if k > 0 && mag == "1" {
                    mono.clone()
                } else if k > 0 && !mag.contains('/') {
                    format!("{mag}{mono}")
                } else if k > 0 {
                    format!("{mag}*{mono}")
                } else {
                    mag
                };
                (neg, body)
            }
            None if k > 0 => (false, format!("({})*{mono}", c.full_text())),
            None => {
                let text = c.full_text();
                match text.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, text),
                }
            }
        };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self, "t"))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self, "t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Poly<BigRational> {
        Poly::from_ints(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        let p = q(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(q(&[0, 0]).is_zero());
    }

    #[test]
    fn division_with_remainder() {
        let (qq, r) = q(&[-1, 0, 0, 1]).div_rem(&q(&[-1, 1]));
        assert_eq!(qq, q(&[1, 1, 1]));
        assert!(r.is_zero());
        let (_, r) = q(&[1, 0, 1]).div_rem(&q(&[-1, 1]));
        assert_eq!(r, q(&[2]));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(q(&[-1, 0, 1]).gcd(&q(&[-1, 1])), q(&[-1, 1]));
        let a = q(&[-1, 1]).pow(2);
        let b = q(&[-1, 1]).pow(3);
        assert_eq!(a.gcd(&b), a);
        assert_eq!(q(&[1, 1, 1]).gcd(&q(&[-1, 0, 0, 1])), q(&[1, 1, 1]));
        assert!(Poly::<BigRational>::zero().gcd(&Poly::zero()).is_zero());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = q(&[2, 0, 1]);
        let b = q(&[1, 3, 0, 1]);
        let (g, s, u) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&u * &b), g);
        assert!(g.is_one());
    }

    #[test]
    fn squarefree_parts() {
        // (t-1)^2 (t+1)
        let p = &q(&[-1, 1]).pow(2) * &q(&[1, 1]);
        let sf = p.squarefree_decomposition();
        assert_eq!(sf, vec![(q(&[1, 1]), 1), (q(&[-1, 1]), 2)]);
    }

    #[test]
    fn printing() {
        assert_eq!(format_poly(&q(&[1, -1, 1]), "t"), "t^2-t+1");
        assert_eq!(format_poly(&q(&[-1, 1]), "t"), "t-1");
        assert_eq!(format_poly(&Poly::<BigRational>::zero(), "t"), "0");
        assert_eq!(format_poly(&q(&[0, -2]), "t"), "-2t");
    }
}
