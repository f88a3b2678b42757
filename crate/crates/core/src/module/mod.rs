//! Modules over `K[t, 1/t]` and over `Z[t, 1/t]`.

pub mod laurent;
pub mod transform;
pub mod zmodule;

pub use laurent::{
    alexander_polynomial, common_field, count_a_summands, dominance_check, local_system_dims,
    module_from_automorphism, p_torsion_sequence, roots_of_unity_audit, LaurentModule, TorsionSequence,
};
pub use transform::{power_transform, reciprocal};
pub use zmodule::{cover_homology, torsion_order_at_one, OrderAtOne, ZLaurentModule};
