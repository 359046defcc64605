//! Closed-form constructions for lattices and a checklist comparing them,
//! and the structural theorems they support, against the homology engine.

mod catalog;
mod checks;
pub mod fixtures;
mod koszul;
mod report;

pub use catalog::{adjoin_bounds, lattice_catalog, lattices_of_size, MAX_CATALOG_SIZE};
pub use checks::{classify_lattices, sweep, verify, verify_fixture, VerifyOptions};
pub use fixtures::{all_fixtures, fixture_by_name, Expectation, Expected, Fixture};
pub use koszul::{
    bass_formula, bass_formula_regular, closed_form_resolution_injective, closed_form_resolution_simple,
    is_resolution_of, koszul_cokernel_dims, koszul_complex, koszul_complex_at, MAX_KOSZUL_ANTICHAIN,
};
pub use report::{Check, Status, SweepCount, VerificationReport};
