//! Critical submanifolds of `f = ½‖Φ‖²` on moduli of rank-2 parabolic Higgs
//! bundles with fixed determinant.

mod critical;
mod error;
mod weights;

pub use critical::{
    critical_submanifolds, morse_index_phb, restrict_to_trivial, vanishing_walls, zero_index_components,
    CriticalKind, CriticalSubmanifold,
};
pub use error::{PhbError, Result};
pub use weights::ParabolicWeights;
