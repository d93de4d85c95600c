//! Torus eigenvalues, trace identities and the adjoint conjugacy scan.

pub mod conjecture;
pub mod cyclotomic;
pub mod family;
pub mod laurent;
pub mod lemmas;
pub mod scalar;
pub mod symfun;

pub use conjecture::{conjecture_scan, conjugate_up_to_constant, weyl_conjugate_up_to_center, ScanReport};
pub use family::family_section_eval;
pub use laurent::LaurentSeriesZ;
pub use scalar::{center_elements, eigenvalue_multiset, ExactScalar, TorusElement};
