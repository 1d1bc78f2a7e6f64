use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use hypoly_cohomology::{graded_dims, ring_x};
use hypoly_combinatorics::{polygon_nonempty, short_sets, Scalar};
use serde::Serialize;

use crate::error::{CoreGeometryError, Result};

/// `coefficients[d]` is the coefficient of `t^{2d}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincarePolynomial {
    pub coefficients: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn zero() -> Self {
        PoincarePolynomial { coefficients: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }

    pub fn top(&self) -> u64 {
        self.coefficients.last().copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }
}

fn cache() -> &'static Mutex<HashMap<usize, Vec<u64>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<u64>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Graded dimensions of the total-space ring; depends on `n` only.
pub fn poincare_x(n: usize) -> Result<PoincarePolynomial> {
    if n < 4 {
        return Err(CoreGeometryError::TooSmall(n));
    }
    if let Some(c) = cache().lock().expect("cache lock").get(&n) {
        return Ok(PoincarePolynomial { coefficients: c.clone() });
    }
    let dims = graded_dims(&ring_x(n)?).dims;
    let coefficients: Vec<u64> = dims.into_iter().map(|d| d as u64).collect();
    cache().lock().expect("cache lock").insert(n, coefficients.clone());
    Ok(PoincarePolynomial { coefficients })
}

/// `Σ_{S∈𝒮′} t^{2(n−1−|S|)} (1 + t² + … + t^{2(|S|−2)})`.
pub fn fixed_point_sum<T: Scalar>(alpha: &[T]) -> Result<PoincarePolynomial> {
    let n = alpha.len();
    if n < 4 {
        return Err(CoreGeometryError::TooSmall(n));
    }
    let mut coefficients = vec![0u64; n - 2];
    for s in short_sets(alpha, 2)? {
        let shift = n - 1 - s.len();
        for k in 0..=s.len() - 2 {
            coefficients[shift + k] += 1;
        }
    }
    Ok(PoincarePolynomial { coefficients })
}

/// `P_X − Σ_{S∈𝒮′} …`, which must be the Poincaré polynomial of `M(α)`.
pub fn derived_polygon_poincare<T: Scalar>(alpha: &[T]) -> Result<PoincarePolynomial> {
    let n = alpha.len();
    let px = poincare_x(n)?;
    let fixed = fixed_point_sum(alpha)?;
    let diff: Vec<i64> = (0..n - 2)
        .map(|d| px.coefficients.get(d).copied().unwrap_or(0) as i64 - fixed.coefficients[d] as i64)
        .collect();
    if diff.iter().any(|&c| c < 0) {
        return Err(CoreGeometryError::MorseInconsistency(format!("negative coefficients {diff:?}")));
    }
    let out = PoincarePolynomial { coefficients: diff.iter().map(|&c| c as u64).collect() };
    if polygon_nonempty(alpha)? {
        if !out.is_palindromic() || out.coefficients.first() != Some(&1) {
            return Err(CoreGeometryError::MorseInconsistency(format!(
                "polygon space polynomial {diff:?} is not palindromic with constant term 1"
            )));
        }
        Ok(out)
    } else if out.is_zero() {
        Ok(PoincarePolynomial::zero())
    } else {
        Err(CoreGeometryError::MorseInconsistency(format!(
            "polygon space is empty but the difference is {diff:?}"
        )))
    }
}
