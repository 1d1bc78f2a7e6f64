use std::fmt::Debug;
use std::ops::Neg;

use hypoly_combinatorics::Rational;
use num_complex::Complex;
use num_traits::{Num, ToPrimitive};

/// A field the bridge computations run over: `f64` for sampling, `Rational` for exact checks.
pub trait Field: Clone + Debug + PartialEq + Num + Neg<Output = Self> + ToPrimitive {
    fn from_rational(r: &Rational) -> Self;

    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl Field for f64 {
    fn from_rational(r: &Rational) -> f64 {
        r.to_f64().unwrap_or(f64::NAN)
    }
}

impl Field for Rational {
    fn from_rational(r: &Rational) -> Rational {
        r.clone()
    }
}

pub type Cx<T> = Complex<T>;

/// `|z|` as a double.
pub fn magnitude<T: Field>(z: &Cx<T>) -> f64 {
    z.norm_sqr().to_f64().unwrap_or(f64::INFINITY).sqrt()
}

pub fn to_exact(z: &Cx<f64>) -> Cx<Rational> {
    let conv = |x: f64| Rational::from_float(x).expect("finite coordinate");
    Cx::new(conv(z.re), conv(z.im))
}
