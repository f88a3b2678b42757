//! Exact computation of Alexander-module invariants of hypersurface
//! complements from the monodromy representation of a polynomial fibration.
//!
//! Everything is exact: rationals are arbitrary precision and eigenvalues
//! live in cyclotomic fields `Q(zeta_N)`.

pub mod arith;
pub mod coinvariants;
pub mod error;
pub mod linalg;
pub mod module;
pub mod monodromy;
pub mod topo;

pub use arith::{CycloField, FieldElement, IntPoly, UniPoly, DEFAULT_CYCLOTOMIC_BOUND};
pub use coinvariants::{Coinvariants, LocalModuleResult, MultiActionModule, PresentedModule};
pub use error::{Error, Result};
pub use linalg::{AbelianGroup, FieldMatrix, IntMatrix, Mode};
pub use module::{LaurentModule, ZLaurentModule};
pub use monodromy::{FreeWord, MonodromyRep};
