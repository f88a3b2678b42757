//! Entry grammar for matrix entries and polynomials.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := unary ('*'? unary)*          implicit product: "2z", "3(t+1)"
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? digits)?
//! atom   := digits ('/' digits)? | 'z' | 't' | '(' expr ')'
//! ```
//!
//! `z` is the generator `zeta_N` of the working field; `t` is the polynomial
//! variable and only accepted by [`parse_poly`]. Whitespace is ignored.
//! Negative exponents are allowed on field elements only.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::{CycloField, FieldElement};
use super::poly::UniPoly;
use super::ring::Field;
use crate::error::{Error, Result};

/// Parses a field element of `field` (no `t` allowed).
pub fn parse_element(src: &str, field: &Arc<CycloField>) -> Result<FieldElement> {
    let p = Parser::new(src, field, false).run()?;
    Ok(p.coeff(0).lift_to(field))
}

/// Parses a polynomial in `t` with coefficients in `field`.
pub fn parse_poly(src: &str, field: &Arc<CycloField>) -> Result<UniPoly> {
    let p = Parser::new(src, field, true).run()?;
    Ok(p.map(|c| c.lift_to(field)))
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    field: &'a Arc<CycloField>,
    allow_t: bool,
    len: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &str, field: &'a Arc<CycloField>, allow_t: bool) -> Self {
        let chars: Vec<(usize, char)> = src
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Parser {
            chars,
            pos: 0,
            field,
            allow_t,
            len: src.chars().count(),
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        let column = self
            .chars
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or(self.len + 1);
        Err(Error::Parse {
            column,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn run(mut self) -> Result<UniPoly> {
        if self.chars.is_empty() {
            return self.err("empty expression");
        }
        let v = self.expr()?;
        if self.peek().is_some() {
            return self.err(format!("unexpected '{}'", self.peek().unwrap()));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<UniPoly> {
        let mut acc = match self.peek() {
            Some('+') => {
                self.bump();
                self.term()?
            }
            Some('-') => {
                self.bump();
                -self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.bump();
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn starts_atom(c: char) -> bool {
        c.is_ascii_digit() || c == 'z' || c == 't' || c == '('
    }

    fn term(&mut self) -> Result<UniPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                Some(c) if Self::starts_atom(c) => {
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<UniPoly> {
        if self.peek() == Some('-') {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<UniPoly> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let e = self.digits()?;
        let e: i64 = match e.try_into() {
            Ok(e) if e <= 1_000_000 => e,
            _ => return self.err("exponent too large"),
        };
        if negative {
            if !base.is_constant() {
                return self.err("negative power of a polynomial in t");
            }
            let c = base.coeff(0);
            if c.inv().is_none() {
                return self.err("negative power of zero");
            }
            return Ok(UniPoly::constant(c.pow(-e)));
        }
        if base.is_constant() {
            return Ok(UniPoly::constant(base.coeff(0).pow(e)));
        }
        Ok(base.pow(e as u32))
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<UniPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                if self.peek() == Some('/') {
                    self.bump();
                    let den = self.digits()?;
                    if den == BigInt::from(0) {
                        self.pos -= 1;
                        return self.err("zero denominator");
                    }
                    let q = BigRational::new(num, den);
                    return Ok(UniPoly::constant(FieldElement::from_rational(q)));
                }
                Ok(UniPoly::constant(FieldElement::from_integer(num)))
            }
            Some('z') => {
                self.bump();
                Ok(UniPoly::constant(FieldElement::zeta(self.field)))
            }
            Some('t') => {
                if !self.allow_t {
                    return self.err("'t' is not allowed in a field element");
                }
                self.bump();
                Ok(UniPoly::t())
            }
            Some('(') => {
                self.bump();
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.bump();
                Ok(v)
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_and_signs() {
        let q = CycloField::rationals();
        assert_eq!(parse_element("-1/2", &q).unwrap(), FieldElement::ratio(-1, 2));
        assert_eq!(parse_element(" 3 - 5 ", &q).unwrap(), FieldElement::int(-2));
        assert_eq!(parse_element("2*3/4", &q).unwrap(), FieldElement::ratio(3, 2));
    }

    #[test]
    fn zeta_powers() {
        let k = CycloField::get(3);
        let j = FieldElement::zeta(&k);
        assert_eq!(parse_element("z^2", &k).unwrap(), j.pow(2));
        assert_eq!(parse_element("z^-1", &k).unwrap(), j.pow(2));
        assert_eq!(parse_element("z^2+z+1", &k).unwrap(), FieldElement::int(0));
        assert_eq!(parse_element("2z", &k).unwrap(), &j + &j);
    }

    #[test]
    fn polynomials() {
        let q = CycloField::rationals();
        let p = parse_poly("t^2+t+1", &q).unwrap();
        assert_eq!(p, UniPoly::from_ints(&[1, 1, 1]));
        let p = parse_poly("(t-1)^2*(t+1)", &q).unwrap();
        assert_eq!(p, UniPoly::from_ints(&[1, -1, -1, 1]));
    }

    #[test]
    fn printed_forms_reparse() {
        let k = CycloField::get(3);
        let j = FieldElement::zeta(&k);
        let p = &UniPoly::linear(j.clone()) * &UniPoly::linear(j.pow(2));
        let txt = p.to_string();
        assert_eq!(parse_poly(&txt, &k).unwrap(), p);
        let e = &j.scale_rational(&BigRational::new(1.into(), 3.into())) - &FieldElement::int(4);
        assert_eq!(parse_element(&e.to_string(), &k).unwrap(), e);
    }

    #[test]
    fn errors_carry_columns() {
        let q = CycloField::rationals();
        match parse_element("1 + t", &q) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        match parse_element("1/0", &q) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("t^-1", &q).is_err());
        assert!(parse_poly("", &q).is_err());
        assert!(parse_poly("(t+1", &q).is_err());
    }
}
