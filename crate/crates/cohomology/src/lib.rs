//! Cohomology ring presentations and their graded dimensions over ℚ.

mod error;
mod linalg;
mod rings;

pub use error::{CohomologyError, Result};
pub use rings::{
    b_to_c, graded_dims, ideal_consistency_witness, ring_us, ring_x, verify_ideal_consistency,
    GradedDims, GradedRingPresentation, IdealWitness, RelationFamily,
};
