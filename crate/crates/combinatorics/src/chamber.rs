use serde::Serialize;

use crate::error::CombinatoricsError;
use crate::index_set::IndexSet;
use crate::scalar::Scalar;

/// `ε_S(α) = Σ_{i∈S} α_i − Σ_{i∉S} α_i`.
pub fn epsilon_s<T: Scalar>(alpha: &[T], s: IndexSet) -> T {
    assert_eq!(alpha.len(), s.n(), "index set and weights disagree on n");
    alpha.iter().enumerate().fold(T::zero(), |acc, (k, a)| {
        if s.contains(k + 1) {
            acc + a.clone()
        } else {
            acc - a.clone()
        }
    })
}

pub fn is_short<T: Scalar>(alpha: &[T], s: IndexSet) -> bool {
    epsilon_s(alpha, s).is_negative()
}

/// Some canonical `S` with `ε_S(α) = 0`, if one exists.
pub fn nongeneric_witness<T: Scalar>(alpha: &[T]) -> Option<IndexSet> {
    let n = alpha.len();
    IndexSet::all(n)
        .filter(|s| s.contains(1))
        .find(|&s| epsilon_s(alpha, s).is_zero())
}

pub fn is_generic<T: Scalar>(alpha: &[T]) -> bool {
    nongeneric_witness(alpha).is_none()
}

pub fn ensure_generic<T: Scalar>(alpha: &[T]) -> Result<(), CombinatoricsError> {
    match nongeneric_witness(alpha) {
        Some(witness) => Err(CombinatoricsError::NonGenericWeights { witness }),
        None => Ok(()),
    }
}

/// Short sets of cardinality at least `min_card`, ascending by bitmask.
pub fn short_sets<T: Scalar>(
    alpha: &[T],
    min_card: usize,
) -> Result<Vec<IndexSet>, CombinatoricsError> {
    ensure_generic(alpha)?;
    Ok(IndexSet::all(alpha.len())
        .filter(|s| s.len() >= min_card && is_short(alpha, *s))
        .collect())
}

/// Inclusion-maximal short sets of cardinality at least 2.
pub fn maximal_short_sets<T: Scalar>(alpha: &[T]) -> Result<Vec<IndexSet>, CombinatoricsError> {
    let shorts = short_sets(alpha, 2)?;
    Ok(shorts
        .iter()
        .copied()
        .filter(|s| s.complement().members().all(|j| !is_short(alpha, s.with(j))))
        .collect())
}

pub fn is_maximal_short<T: Scalar>(alpha: &[T], s: IndexSet) -> bool {
    is_short(alpha, s) && s.complement().members().all(|j| !is_short(alpha, s.with(j)))
}

/// Whether `α_i < Σ_{j≠i} α_j` for every `i`.
pub fn polygon_nonempty<T: Scalar>(alpha: &[T]) -> Result<bool, CombinatoricsError> {
    ensure_generic(alpha)?;
    let n = alpha.len();
    Ok((1..=n).all(|i| !is_short(alpha, IndexSet::full(n).without(i))))
}

/// Sign of `ε_S` on every proper canonical subset (the member of `{S, Sᶜ}` holding 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberSignature {
    pub n: usize,
    pub signs: Vec<(IndexSet, i8)>,
}

impl ChamberSignature {
    pub fn sign(&self, s: IndexSet) -> Option<i8> {
        let c = s.canonical();
        self.signs.iter().find(|(t, _)| *t == c).map(|(_, v)| *v)
    }

    /// Canonical subsets on which the two signatures disagree.
    pub fn differing(&self, other: &ChamberSignature) -> Vec<IndexSet> {
        assert_eq!(self.n, other.n);
        self.signs
            .iter()
            .zip(&other.signs)
            .filter(|(a, b)| a.1 != b.1)
            .map(|(a, _)| a.0)
            .collect()
    }
}

pub fn chamber_signature<T: Scalar>(alpha: &[T]) -> Result<ChamberSignature, CombinatoricsError> {
    ensure_generic(alpha)?;
    let n = alpha.len();
    let full = IndexSet::full(n);
    let signs = IndexSet::all(n)
        .filter(|s| s.contains(1) && *s != full)
        .map(|s| (s, epsilon_s(alpha, s).signum_i8()))
        .collect();
    Ok(ChamberSignature { n, signs })
}

/// A wall `W_S = {ε_S = 0}` keyed by its canonical representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Wall {
    pub n: usize,
    pub discrete_data: IndexSet,
}

impl Wall {
    pub fn new(s: IndexSet) -> Result<Self, CombinatoricsError> {
        if s.is_empty() || s == IndexSet::full(s.n()) {
            return Err(CombinatoricsError::InvalidWeights(format!(
                "{s} does not define a wall"
            )));
        }
        Ok(Wall { n: s.n(), discrete_data: s.canonical() })
    }
}
