//! Morse data of hyperpolygon spaces: fixed components of the circle action,
//! core components, how cores meet, and Poincaré polynomials.

mod components;
mod error;
mod poincare;

pub use components::{
    core_components, core_intersection, fixed_components, CoreComponent, CoreIntersectionClass,
    FixedComponent, FixedKind,
};
pub use error::{CoreGeometryError, Result};
pub use poincare::{derived_polygon_poincare, fixed_point_sum, poincare_x, PoincarePolynomial};
