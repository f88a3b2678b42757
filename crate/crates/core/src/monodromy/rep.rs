use std::collections::HashSet;
use std::sync::Arc;

use crate::arith::{CycloField, FieldElement};
use crate::error::{Error, Result};
use crate::linalg::{inverse, FieldMatrix, IntMatrix, Matrix, Mode};
use crate::module::{common_field, module_from_automorphism};

use super::word::FreeWord;

/// Representation `ρ: G -> Aut(ℋ)` of the free group on `g` generators,
/// `ρ(γ_i) = m_i`, together with the fibration metadata the algorithms use.
#[derive(Clone, Debug, PartialEq)]
pub struct MonodromyRep {
    field: Arc<CycloField>,
    mode: Mode,
    matrices: Vec<FieldMatrix>,
    inverses: Vec<FieldMatrix>,
    labels: Vec<String>,
    distinguished: usize,
    /// Fiber dimension `n`.
    pub n: usize,
    pub h_good: bool,
    pub b_n_f: Option<usize>,
    pub euler_mx: Option<i64>,
}

impl MonodromyRep {
    /// Field-mode representation. The working field is the largest field
    /// among the entries; every matrix must be square of one size and invertible.
    pub fn new(matrices: Vec<FieldMatrix>, labels: Vec<String>, distinguished: usize) -> Result<Self> {
        if matrices.is_empty() {
            return Err(Error::Invalid("at least one generator is required".into()));
        }
        if labels.len() != matrices.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} generators",
                labels.len(),
                matrices.len()
            )));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::Invalid(format!("duplicate label '{dup}'")));
        }
        if distinguished >= matrices.len() {
            return Err(Error::Invalid(format!("distinguished index {distinguished} out of range")));
        }
        let m = matrices[0].rows();
        if matrices.iter().any(|a| a.rows() != m || a.cols() != m) {
            return Err(Error::DimensionMismatch("all generators must be square of the same size".into()));
        }
        let field = matrices
            .iter()
            .map(|a| common_field(a).0)
            .max_by_key(|f| f.degree())
            .expect("nonempty");
        for a in &matrices {
            let f = common_field(a).0;
            if f.degree() > 1 && f.order() != field.order() {
                return Err(Error::FieldMismatch(f.order(), field.order()));
            }
        }
        let matrices: Vec<FieldMatrix> = matrices.iter().map(|a| a.lift_to(&field)).collect();
        let inverses = matrices.iter().map(inverse).collect::<Result<Vec<_>>>()?;
        Ok(MonodromyRep {
            field,
            mode: Mode::Field,
            matrices,
            inverses,
            labels,
            distinguished,
            n: 1,
            h_good: false,
            b_n_f: None,
            euler_mx: None,
        })
    }

    /// Integer-mode representation: integral matrices with determinant `±1`.
    pub fn new_integral(matrices: Vec<IntMatrix>, labels: Vec<String>, distinguished: usize) -> Result<Self> {
        let mut rep = MonodromyRep::new(matrices.iter().map(IntMatrix::to_field).collect(), labels, distinguished)?;
        if rep.inverses.iter().any(|inv| inv.to_integer().is_none()) {
            return Err(Error::NotAutomorphism);
        }
        rep.mode = Mode::Integer;
        Ok(rep)
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub fn with_h_good(mut self, h_good: bool) -> Self {
        self.h_good = h_good;
        self
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn g(&self) -> usize {
        self.matrices.len()
    }

    pub fn fiber_rank(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn matrices(&self) -> &[FieldMatrix] {
        &self.matrices
    }

    pub fn inverses(&self) -> &[FieldMatrix] {
        &self.inverses
    }

    /// Generator matrices over `Z`, available in integer mode.
    pub fn integer_matrices(&self) -> Option<Vec<IntMatrix>> {
        self.matrices.iter().map(FieldMatrix::to_integer).collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Same representation with another distinguished value.
    pub fn with_distinguished(&self, index: usize) -> Result<Self> {
        if index >= self.g() {
            return Err(Error::Invalid(format!("distinguished index {index} out of range")));
        }
        let mut rep = self.clone();
        rep.distinguished = index;
        Ok(rep)
    }

    /// Conjugates every generator by `P`: `m_i -> P m_i P^{-1}`.
    pub fn conjugate(&self, p: &FieldMatrix) -> Result<Self> {
        let pinv = inverse(p)?;
        let mut rep = self.clone();
        rep.matrices = self.matrices.iter().map(|m| &(p * m) * &pinv).collect();
        rep.inverses = self.inverses.iter().map(|m| &(p * m) * &pinv).collect();
        if rep.mode == Mode::Integer && rep.matrices.iter().any(|m| m.to_integer().is_none()) {
            return Err(Error::Invalid("conjugation leaves the integers".into()));
        }
        Ok(rep)
    }
}

/// `ρ(w)`: ordered product of `m_i^{±1}`; the empty word gives the identity.
pub fn evaluate_word(rep: &MonodromyRep, w: &FreeWord) -> Result<FieldMatrix> {
    if let Some(i) = w.max_index().filter(|&i| i >= rep.g()) {
        return Err(Error::Invalid(format!("generator index {i} out of range")));
    }
    let mut acc = Matrix::identity(rep.fiber_rank());
    for &(i, e) in w.letters() {
        let m = if e > 0 { &rep.matrices[i] } else { &rep.inverses[i] };
        acc = &acc * m;
    }
    Ok(acc)
}

/// Winding number `p_0(w)` around the distinguished value.
pub fn winding(rep: &MonodromyRep, w: &FreeWord) -> i64 {
    w.letters()
        .iter()
        .filter(|&&(i, _)| i == rep.distinguished)
        .map(|&(_, e)| e as i64)
        .sum()
}

/// Similarity over the field: equal invariant factors of `tI - A` and `tI - B`.
pub fn conjugacy_check(a: &FieldMatrix, b: &FieldMatrix) -> Result<bool> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let ma = module_from_automorphism(a)?;
    let mb = module_from_automorphism(b)?;
    Ok(ma.invariant_factors() == mb.invariant_factors())
}

/// `m_1 m_2 ... m_g`.
pub fn monodromy_at_infinity(rep: &MonodromyRep) -> FieldMatrix {
    evaluate_word(rep, &FreeWord::big_loop(rep.g())).expect("indices in range")
}

/// Replaces every `m_i` by `m_i ⊗ I_k`, shifting the fiber dimension by `n_shift`.
pub fn tensor_identity_lift(rep: &MonodromyRep, k: usize, n_shift: usize) -> Result<MonodromyRep> {
    if k == 0 {
        return Err(Error::Invalid("identity factor must have rank at least 1".into()));
    }
    let mut out = rep.clone();
    out.matrices = rep.matrices.iter().map(|m| m.kron_identity(k)).collect();
    out.inverses = rep.inverses.iter().map(|m| m.kron_identity(k)).collect();
    out.n = rep.n + n_shift;
    if let Some(b) = rep.b_n_f {
        out.b_n_f = Some(b * k);
    }
    Ok(out)
}

/// Element of the rep's field from an integer.
pub(crate) fn int_in(field: &Arc<CycloField>, n: i64) -> FieldElement {
    FieldElement::int(n).lift_to(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep2() -> MonodromyRep {
        let a = IntMatrix::from_i64(2, 2, &[1, 1, 0, 1]);
        let b = IntMatrix::from_i64(2, 2, &[1, 0, -1, 1]);
        MonodromyRep::new_integral(vec![a, b], vec!["p".into(), "q".into()], 1).unwrap()
    }

    #[test]
    fn words_evaluate_as_products() {
        let r = rep2();
        assert!(evaluate_word(&r, &FreeWord::empty()).unwrap().is_identity());
        let w = FreeWord::new(vec![(0, 1), (0, -1)]);
        assert!(evaluate_word(&r, &w).unwrap().is_identity());
        let m = evaluate_word(&r, &FreeWord::big_loop(2)).unwrap();
        assert_eq!(m, &r.matrices()[0] * &r.matrices()[1]);
        assert_eq!(monodromy_at_infinity(&r), m);
    }

    #[test]
    fn winding_counts_distinguished_letters() {
        let r = rep2();
        assert_eq!(winding(&r, &FreeWord::generator(1)), 1);
        assert_eq!(winding(&r, &FreeWord::big_loop(2)), 1);
        assert_eq!(winding(&r, &FreeWord::power(0, 5)), 0);
        let c = FreeWord::commutator(&FreeWord::generator(1), &FreeWord::big_loop(2));
        assert_eq!(winding(&r, &c), 0);
    }

    #[test]
    fn validation() {
        let a = IntMatrix::from_i64(1, 1, &[2]);
        assert_eq!(
            MonodromyRep::new_integral(vec![a], vec!["x".into()], 0),
            Err(Error::NotAutomorphism)
        );
        let i = FieldMatrix::identity(2);
        assert!(MonodromyRep::new(vec![i.clone(), i.clone()], vec!["x".into(), "x".into()], 0).is_err());
        assert!(MonodromyRep::new(vec![i], vec!["x".into()], 1).is_err());
    }

    #[test]
    fn conjugacy_basic() {
        let a = FieldMatrix::from_i64(2, 2, &[1, 1, 0, 1]);
        assert!(conjugacy_check(&a, &a).unwrap());
        assert!(!conjugacy_check(&a, &FieldMatrix::identity(2)).unwrap());
        assert!(conjugacy_check(&a, &FieldMatrix::identity(3)).is_err());
    }

    #[test]
    fn identity_lift_squares_charpolys() {
        let r = rep2().with_n(1);
        assert_eq!(tensor_identity_lift(&r, 1, 0).unwrap(), r);
        let l = tensor_identity_lift(&r, 2, 2).unwrap();
        assert_eq!(l.fiber_rank(), 4);
        assert_eq!(l.n, 3);
        let cp = crate::linalg::charpoly(&r.matrices()[0]);
        assert_eq!(crate::linalg::charpoly(&l.matrices()[0]), cp.pow(2));
    }
}
