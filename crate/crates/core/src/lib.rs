//! Exact combinatorics of root systems, Weyl groups, weight systems and the
//! stable pieces of wonderful compactifications.

pub mod cli;
pub mod diagorbits;
pub mod dot;
pub mod error;
pub mod linalg;
pub mod nodeset;
pub mod pieces;
pub mod report;
pub mod reps;
pub mod rootsys;
pub mod torus;
pub mod traces;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use nodeset::NodeSet;
pub use rootsys::RootSystem;
pub use weyl::{Weyl, WeylElement};
