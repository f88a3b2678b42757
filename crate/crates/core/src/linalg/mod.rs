//! Exact matrix algebra over fields, `Z` and `K[t]`.

pub mod abelian;
pub mod echelon;
pub mod hermite;
pub mod matrix;
pub mod saturate;
pub mod smith;

pub use abelian::{cokernel_z, AbelianGroup};
pub use echelon::{charpoly, column_space, det, inverse, kernel_basis, rank, rref, solve};
pub use hermite::{hermite_rows, lattice_contains};
pub use matrix::{FieldMatrix, IntMatrix, Matrix};
pub use saturate::{saturate_lattice, saturate_subgroup, saturate_subspace, unimodular_inverse, Mode, Subspace};
pub use smith::{
    characteristic_matrix, smith_diagonal, smith_normal_form_poly, smith_normal_form_z,
    smith_with_transforms, Euclidean, Smith,
};
