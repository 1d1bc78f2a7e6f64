use hypoly_combinatorics::{ensure_generic, IndexSet, Scalar};
use serde::Serialize;

use crate::error::{IntersectionError, Result};

/// `ℓ_J = Σ_{i∈J} α_i − Σ_{i∈I∖J} α_i` with `I = {lo, …, hi}` (1-based).
pub(crate) fn ell<U: Scalar>(a: &[U], j: IndexSet, lo: usize, hi: usize) -> U {
    (lo..=hi).fold(U::zero(), |acc, i| {
        if j.contains(i) {
            acc + a[i - 1].clone()
        } else {
            acc - a[i - 1].clone()
        }
    })
}

pub(crate) fn range_set(n: usize, lo: usize, hi: usize) -> IndexSet {
    IndexSet::from_members(n, lo..=hi).expect("range inside 1..=n")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangularFamily {
    pub m: usize,
    pub sets: Vec<IndexSet>,
}

/// Sets `J ⊆ {3, …, m}` with `ℓ_J > 0` whose `ℓ_J` closes a triangle with `α₁, α₂`.
pub fn triangular_sets<U: Scalar>(a: &[U]) -> Result<TriangularFamily> {
    let m = a.len();
    if m < 3 {
        return Err(IntersectionError::BadShape(format!("triangular sets need m ≥ 3, got {m}")));
    }
    let (a1, a2) = (&a[0], &a[1]);
    let sets = range_set(m, 3, m)
        .subsets()
        .filter(|&j| {
            let l = ell(a, j, 3, m);
            l.is_positive()
                && *a1 <= a2.clone() + l.clone()
                && *a2 <= a1.clone() + l.clone()
                && l <= a1.clone() + a2.clone()
        })
        .collect();
    Ok(TriangularFamily { m, sets })
}

pub(crate) fn parity_sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub(crate) fn signed_triangular_count<U: Scalar>(a: &[U]) -> Result<i64> {
    let fam = triangular_sets(a)?;
    let m = fam.m;
    Ok(fam
        .sets
        .iter()
        .map(|j| parity_sign(m + j.len() + if j.contains(m) { 0 } else { m - 1 }))
        .sum())
}

/// `∫_{M(α̃)} c̃₁^{m−3}` as a signed count of triangular sets.
pub fn polygon_c1_power<U: Scalar>(a: &[U]) -> Result<i64> {
    ensure_generic(a)?;
    signed_triangular_count(a)
}
