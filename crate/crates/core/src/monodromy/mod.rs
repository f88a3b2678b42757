//! Monodromy representations of free groups.

pub mod rep;
pub mod section7;
pub mod word;

pub use rep::{conjugacy_check, evaluate_word, monodromy_at_infinity, tensor_identity_lift, winding, MonodromyRep};
pub use section7::{infinity_jordan, m1_jordan, m2_jordan, section7_rep, Section7Family};
pub use word::FreeWord;
