//! Exact combinatorics of ideals in affine Borel subalgebras.

pub mod cli;
pub mod dyck;
pub mod error;
pub mod ideals;
pub mod matrices;
pub mod rootsys;
pub mod supports;
pub mod truncation;
pub mod verify;

pub use dyck::DyckPath;
pub use error::{Error, Result};
pub use matrices::ExactMatrix;
