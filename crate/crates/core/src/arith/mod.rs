//! Exact scalars and univariate polynomials.

pub mod cyclotomic;
pub mod factor;
pub mod field;
pub mod parse;
pub mod poly;
pub mod resultant;
pub mod ring;

pub use cyclotomic::{cyclotomic_poly, euler_phi, is_prime};
pub use factor::{factorize, FactorizationReport, DEFAULT_CYCLOTOMIC_BOUND};
pub use field::{CycloField, FieldElement};
pub use parse::{parse_element, parse_poly};
pub use poly::{IntPoly, Poly, UniPoly};
pub use resultant::{resultant, resultant_int};
pub use ring::{Field, Ring};

/// Monic gcd of two polynomials over a common field.
pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> UniPoly {
    p.gcd(q)
}
