use std::collections::HashMap;

use hypoly_combinatorics::{IndexSet, Rational, Scalar};
use num_traits::{One, ToPrimitive, Zero};

use crate::canonical::validate;
use crate::closed::integrate;
use crate::error::{IntersectionError, Result};
use crate::monomial::Monomial;
use crate::poly::Poly;

/// Integrates polynomials over a fixed `U_S`, caching monomial values.
pub struct Integrator<T> {
    alpha: Vec<T>,
    s: IndexSet,
    cache: HashMap<Vec<u32>, i64>,
}

impl<T: Scalar + One> Integrator<T> {
    pub fn new(alpha: &[T], s: IndexSet) -> Result<Self> {
        let n = alpha.len();
        let probe = Monomial::product(n, &vec![1; n - 3]);
        validate(alpha, s, &probe)?;
        Ok(Integrator { alpha: alpha.to_vec(), s, cache: HashMap::new() })
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn monomial(&mut self, m: &Monomial) -> Result<i64> {
        if let Some(v) = self.cache.get(&m.exponents) {
            return Ok(*v);
        }
        let v = integrate(&self.alpha, self.s, m)?;
        self.cache.insert(m.exponents.clone(), v);
        Ok(v)
    }

    /// `∫_{U_S} p` for `p` homogeneous of top degree (zero is allowed).
    pub fn poly(&mut self, p: &Poly) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in p.raw_terms() {
            let v = self.monomial(&Monomial::new(e.clone()))?;
            acc += c * Rational::from_integer(v.into());
        }
        Ok(acc)
    }
}

/// Matrix `(∫_{U_S} b_i b_j)` for classes `b_i` of complementary degree.
pub fn pairing_matrix<T: Scalar + One>(alpha: &[T], s: IndexSet, basis: &[Poly]) -> Result<Vec<Vec<i64>>> {
    let mut integrator = Integrator::new(alpha, s)?;
    let top = integrator.n() as u32 - 3;
    let mut out = vec![vec![0i64; basis.len()]; basis.len()];
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            let prod = bi * bj;
            if let Some(found) = prod.homogeneous_degree() {
                if found != top {
                    return Err(IntersectionError::DegreeMismatch { expected: top, found });
                }
            } else if !prod.is_zero() {
                return Err(IntersectionError::BadShape(format!(
                    "product of basis elements {i} and {j} is not homogeneous"
                )));
            }
            let v = integrator.poly(&prod)?;
            if !v.is_integer() {
                return Err(IntersectionError::NonIntegerPairing { row: i, col: j, value: v.to_string() });
            }
            out[i][j] = v.to_integer().to_i64().expect("pairing fits in i64");
        }
    }
    Ok(out)
}

/// `(c_{i₁} + … )·coeff` helper for building bases.
pub fn linear_form(n: usize, coeff: &Rational, indices: &[usize]) -> Poly {
    indices.iter().fold(Poly::zero(n), |acc, &i| &acc + &Poly::var(n, i)).scale(coeff)
}

