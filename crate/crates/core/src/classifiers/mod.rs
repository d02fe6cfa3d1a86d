//! Closed-form classifiers for three families of ideals, together with
//! strongly stable ideals sharing their graded Betti numbers.

pub mod determinantal;
pub mod gorenstein;
pub mod symmetric;

pub use determinantal::{
    classify_determinantal, determinantal_companion, eagon_northcott_table, minor_degeneracy_checks, test_cwl_determinantal,
    DegeneracyReport, DeterminantalInput,
};
pub use gorenstein::{classify_gorenstein, gorenstein_companion};
pub use symmetric::{
    classify_symmetric, compute_tr, jozefiak_betti, jozefiak_table, symmetric_companion, test_cwl_symmetric,
    CompanionCheck, SymmetricCompanion, SymmetricInput,
};

use crate::error::{Error, Result};
use crate::groebner::GradedIdeal;

fn check_height(ideal: &GradedIdeal, expected: usize) -> Result<()> {
    let found = ideal.height();
    if found != expected {
        return Err(Error::HeightMismatch { expected, found });
    }
    Ok(())
}
