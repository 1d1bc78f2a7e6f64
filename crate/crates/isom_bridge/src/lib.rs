//! Hyperpolygons versus parabolic Higgs bundles on the sphere: moment maps,
//! stability, residues and the explicit correspondence in both directions.

mod bridge;
mod error;
mod point;
mod sample;
mod scalar;
mod stability;
mod verify;

pub use bridge::{from_phb, phb_stable, to_phb, to_phb_unchecked};
pub use error::{IsomError, Result};
pub use point::{
    line_distance, normalize_spinor, HyperpolygonPoint, PhbPoint, ResidueInvariants,
    ResidueMatrix,
};
pub use sample::{
    edge_vector, lift_polygon, lift_vector, random_closed_polygon, sample_core_point, sample_polygon_point,
};
pub use scalar::{magnitude, to_exact, Cx, Field};
pub use stability::{
    alpha_stable, moment_residuals, straight_sets, MomentResiduals, StabilityReport,
    StabilityWitness, DEFAULT_TOL,
};

pub use verify::{verify_phb, verify_point, PhbVerification, PointVerification};

pub type FloatPoint = HyperpolygonPoint<f64>;
pub type ExactPoint = HyperpolygonPoint<hypoly_combinatorics::Rational>;
pub type FloatPhbPoint = PhbPoint<f64>;
pub type ExactPhbPoint = PhbPoint<hypoly_combinatorics::Rational>;
