//! Minimal resolutions, Ext against the regular module, and the homological
//! invariants built from them.

mod complex;
mod ext;
mod profile;
mod resolution;

use std::fmt;

use serde::{Serialize, Serializer};

pub use complex::ProjComplex;
pub use ext::{cograde, ext_dim_vector, ext_module, grade, tau, transpose};
pub use profile::{profile, profile_over, BassEntry, GradeBijection, HomProfile};
pub use resolution::{
    bass_numbers, idim, min_inj_coresolution, minimal_proj_resolution, pdim, syzygy, InjCoresolution, Resolution,
};

/// A dimension-like count that may be infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dim {
    Finite(usize),
    Infinite,
}

impl Dim {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Finite(d) => Some(d),
            Dim::Infinite => None,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(d) => write!(f, "{d}"),
            Dim::Infinite => write!(f, "infinite"),
        }
    }
}

/// Finite values as numbers, infinity as the string `"infinite"`.
impl Serialize for Dim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dim::Finite(d) => s.serialize_u64(*d as u64),
            Dim::Infinite => s.serialize_str("infinite"),
        }
    }
}
