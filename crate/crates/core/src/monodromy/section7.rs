//! The two-generator representation on `H_3` of the generic fiber of
//! `h(x, y, u, v) = x + x^2y^2 + x^2y^3 + u + u^2v`, with unknown parameter `a`.

use std::sync::Arc;

use crate::arith::{CycloField, FieldElement};
use crate::error::{Error, Result};
use crate::linalg::FieldMatrix;

use super::rep::{int_in, MonodromyRep};

/// Parameters of `m_1 = [[1,a,b,c],[0,1,0,0],[0,0,1,0],[0,0,0,1]]` and
/// `m_2 = [[1,0,0,0],[α,1,0,0],[β,0,j,0],[γ,0,0,j^2]]` over `Q(j)`, `j^3 = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Section7Family {
    pub a: FieldElement,
    pub alpha: FieldElement,
    pub beta: FieldElement,
    pub gamma: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
}

pub const LABEL_B1: &str = "b1";
pub const LABEL_ZERO: &str = "0";

pub fn cube_roots() -> Arc<CycloField> {
    CycloField::get(3)
}

impl Section7Family {
    /// `b = c = 1` and `β, γ` solving `β + γ = -1`, `βj + γj^2 = 2`.
    /// Case 1 has `α = 1` and needs `a = 0`; case 2 has `α = 0`.
    pub fn new(a: FieldElement, case: u8) -> Result<Self> {
        let k = cube_roots();
        let a = a.lift_to(&k);
        let alpha = match case {
            1 => {
                if !a.is_zero() {
                    return Err(Error::Invalid("case 1 has α = 1, so a·α = 0 forces a = 0".into()));
                }
                int_in(&k, 1)
            }
            2 => int_in(&k, 0),
            _ => return Err(Error::Invalid(format!("unknown case {case}"))),
        };
        let (beta, gamma) = solve_beta_gamma();
        Ok(Section7Family {
            a,
            alpha,
            beta,
            gamma,
            b: int_in(&k, 1),
            c: int_in(&k, 1),
        })
    }

    pub fn m1(&self) -> FieldMatrix {
        let k = cube_roots();
        let (o, z) = (int_in(&k, 1), int_in(&k, 0));
        FieldMatrix::new(
            4,
            4,
            vec![
                o.clone(), self.a.clone(), self.b.clone(), self.c.clone(),
                z.clone(), o.clone(), z.clone(), z.clone(),
                z.clone(), z.clone(), o.clone(), z.clone(),
                z.clone(), z.clone(), z.clone(), o,
            ],
        )
    }

    pub fn m2(&self) -> FieldMatrix {
        let k = cube_roots();
        let (o, z) = (int_in(&k, 1), int_in(&k, 0));
        let j = FieldElement::zeta(&k);
        FieldMatrix::new(
            4,
            4,
            vec![
                o.clone(), z.clone(), z.clone(), z.clone(),
                self.alpha.clone(), o, z.clone(), z.clone(),
                self.beta.clone(), z.clone(), j.clone(), z.clone(),
                self.gamma.clone(), z.clone(), z, j.pow(2),
            ],
        )
    }

    /// Generators `(b1, 0)` in this order, distinguished value `0`, `n = 3`, h-good.
    pub fn rep(&self) -> Result<MonodromyRep> {
        Ok(MonodromyRep::new(
            vec![self.m1(), self.m2()],
            vec![LABEL_B1.into(), LABEL_ZERO.into()],
            1,
        )?
        .with_n(3)
        .with_h_good(true))
    }
}

/// `β = j^2`, `γ = j`: the unique solution of the linear system, found by
/// Cramer's rule.
fn solve_beta_gamma() -> (FieldElement, FieldElement) {
    let k = cube_roots();
    let j = FieldElement::zeta(&k);
    let j2 = j.pow(2);
    let (r1, r2) = (int_in(&k, -1), int_in(&k, 2));
    let d = &j2 - &j;
    let beta = &(&(&r1 * &j2) - &r2) / &d;
    let gamma = &(&r2 - &(&r1 * &j)) / &d;
    (beta, gamma)
}

/// `section7_rep(a, case)`.
pub fn section7_rep(a: FieldElement, case: u8) -> Result<MonodromyRep> {
    Section7Family::new(a, case)?.rep()
}

/// Jordan matrix `J_2(-1) ⊕ 1 ⊕ 1` of the monodromy at infinity.
pub fn infinity_jordan() -> FieldMatrix {
    FieldMatrix::from_i64(4, 4, &[-1, 1, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1])
}

/// Jordan matrix `J_2(1) ⊕ 1 ⊕ 1` of `m_1`.
pub fn m1_jordan() -> FieldMatrix {
    FieldMatrix::from_i64(4, 4, &[1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1])
}

/// `diag(1, 1, j, j^2)`, the Jordan form of `m_2`.
pub fn m2_jordan() -> FieldMatrix {
    let k = cube_roots();
    let j = FieldElement::zeta(&k);
    FieldMatrix::diagonal(vec![int_in(&k, 1), int_in(&k, 1), j.clone(), j.pow(2)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::{conjugacy_check, monodromy_at_infinity};

    #[test]
    fn beta_gamma_solve_the_system() {
        let (beta, gamma) = solve_beta_gamma();
        let k = cube_roots();
        let j = FieldElement::zeta(&k);
        assert_eq!(&beta + &gamma, FieldElement::int(-1));
        assert_eq!(&(&beta * &j) + &(&gamma * &j.pow(2)), FieldElement::int(2));
        assert_eq!(beta, j.pow(2));
        assert_eq!(gamma, j);
    }

    #[test]
    fn product_is_conjugate_to_jordan_form_at_infinity() {
        let rep = section7_rep(FieldElement::int(0), 2).unwrap();
        assert!(conjugacy_check(&monodromy_at_infinity(&rep), &infinity_jordan()).unwrap());
    }

    #[test]
    fn nonzero_a_or_alpha_merges_unipotent_block() {
        // Oracle: the 3x3 minors of m1 m2 - I include 3a and 3α, so rank(m1 m2 - I) = 2
        // needs a = α = 0.
        let rep = section7_rep(FieldElement::int(5), 2).unwrap();
        assert!(!conjugacy_check(&monodromy_at_infinity(&rep), &infinity_jordan()).unwrap());
        let rep = section7_rep(FieldElement::int(0), 1).unwrap();
        assert!(!conjugacy_check(&monodromy_at_infinity(&rep), &infinity_jordan()).unwrap());
        let t = monodromy_at_infinity(&section7_rep(FieldElement::int(5), 2).unwrap());
        let n = &t - &FieldMatrix::identity(4);
        assert_eq!(crate::linalg::rank(&n), 3);
    }

    #[test]
    fn vanishing_b_or_c_breaks_conjugacy() {
        let mut fam = Section7Family::new(FieldElement::int(0), 2).unwrap();
        fam.b = FieldElement::int(0);
        let t = &fam.m1() * &fam.m2();
        assert!(!conjugacy_check(&t, &infinity_jordan()).unwrap());
        let mut fam = Section7Family::new(FieldElement::int(0), 2).unwrap();
        fam.c = FieldElement::int(0);
        let t = &fam.m1() * &fam.m2();
        assert!(!conjugacy_check(&t, &infinity_jordan()).unwrap());
    }

    #[test]
    fn case_one_needs_a_zero() {
        assert!(section7_rep(FieldElement::int(1), 1).is_err());
        assert!(section7_rep(FieldElement::int(0), 3).is_err());
    }

    #[test]
    fn generators_match_jordan_forms() {
        let fam = Section7Family::new(FieldElement::int(0), 2).unwrap();
        assert!(conjugacy_check(&fam.m1(), &m1_jordan()).unwrap());
        assert!(conjugacy_check(&fam.m2(), &m2_jordan()).unwrap());
    }
}
