//! Homological invariants of incidence algebras of finite posets, in exact
//! arithmetic.

pub mod error;
pub mod homology;
pub mod lattice;
pub mod linalg;
pub mod module;
pub mod poset;
pub mod verify;

pub use error::{Error, Result};
