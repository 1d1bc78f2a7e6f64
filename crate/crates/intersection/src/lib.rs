//! Intersection numbers `∫_{U_S} c₁^{k₁} ⋯ c_n^{k_n}` on core components.
//!
//! [`integrate`] folds a monomial to canonical form and applies the closed
//! formulas; [`integrate_recursive`] reaches the same numbers by merging
//! weights and serves as a cross-check.

mod canonical;
mod closed;
mod error;
mod monomial;
mod pairing;
mod poly;
mod recursive;
mod triangular;

pub use canonical::{canonicalize, CanonicalIntegrand};
pub use closed::{family_a, family_atilde, integral_closed, integrate, AFamily, AVariant};
pub use error::{IntersectionError, Result};
pub use monomial::Monomial;
pub use pairing::{linear_form, pairing_matrix, Integrator};
pub use poly::Poly;
pub use recursive::integrate_recursive;
pub use triangular::{polygon_c1_power, triangular_sets, TriangularFamily};
