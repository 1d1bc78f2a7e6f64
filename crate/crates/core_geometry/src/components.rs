use hypoly_combinatorics::{is_maximal_short, is_short, polygon_nonempty, short_sets, IndexSet, Scalar};
use serde::Serialize;

use crate::error::{CoreGeometryError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FixedKind {
    PolygonSpace,
    #[serde(rename = "XS")]
    Xs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedComponent {
    pub kind: FixedKind,
    pub set: Option<IndexSet>,
    /// `|S| − 2` for `X_S ≅ ℂP^{|S|−2}`; absent for the polygon space.
    pub projective_dim: Option<usize>,
    pub morse_index: usize,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreComponent {
    pub set: IndexSet,
    pub complex_dim: usize,
    pub is_projective_space: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "variant")]
pub enum CoreIntersectionClass {
    /// `S ∩ T = ∅`.
    PolygonIntersection,
    /// `S ∩ T ≠ ∅` and `S ∪ T` long.
    Empty,
    /// `S ∩ T ≠ ∅` and `S ∪ T` short.
    InsideUnion { union: IndexSet },
    /// One set strictly contains the other; `U_S ∩ X_T ≅ ℂP^{|smaller|−2}`.
    FlagIntersection { smaller: IndexSet, larger: IndexSet, fixed_locus_projective_dim: usize },
}

/// `M(α)` (when nonempty) followed by `X_S` for every short `S` with `|S| ≥ 2`.
pub fn fixed_components<T: Scalar>(alpha: &[T]) -> Result<Vec<FixedComponent>> {
    let n = alpha.len();
    let mut out = Vec::new();
    if polygon_nonempty(alpha)? {
        out.push(FixedComponent {
            kind: FixedKind::PolygonSpace,
            set: None,
            projective_dim: None,
            morse_index: 0,
            description: "polygon space M(α)".into(),
        });
    }
    for s in short_sets(alpha, 2)? {
        let dim = s.len() - 2;
        out.push(FixedComponent {
            kind: FixedKind::Xs,
            set: Some(s),
            projective_dim: Some(dim),
            morse_index: 2 * (n - 1 - s.len()),
            description: format!("CP^{dim}"),
        });
    }
    Ok(out)
}

pub fn core_components<T: Scalar>(alpha: &[T]) -> Result<Vec<CoreComponent>> {
    let n = alpha.len();
    Ok(short_sets(alpha, 2)?
        .into_iter()
        .map(|s| CoreComponent {
            set: s,
            complex_dim: n - 3,
            is_projective_space: is_maximal_short(alpha, s),
        })
        .collect())
}

fn check_core<T: Scalar>(alpha: &[T], s: IndexSet) -> Result<()> {
    if s.n() != alpha.len() || s.len() < 2 || !is_short(alpha, s) {
        return Err(CoreGeometryError::SetNotShort { set: s });
    }
    Ok(())
}

pub fn core_intersection<T: Scalar>(alpha: &[T], s: IndexSet, t: IndexSet) -> Result<CoreIntersectionClass> {
    hypoly_combinatorics::ensure_generic(alpha)?;
    check_core(alpha, s)?;
    check_core(alpha, t)?;
    if s == t {
        return Err(CoreGeometryError::SameSet { set: s });
    }
    if s.is_proper_subset_of(&t) || t.is_proper_subset_of(&s) {
        let (smaller, larger) = if s.len() < t.len() { (s, t) } else { (t, s) };
        return Ok(CoreIntersectionClass::FlagIntersection {
            smaller,
            larger,
            fixed_locus_projective_dim: smaller.len() - 2,
        });
    }
    if s.is_disjoint(&t) {
        return Ok(CoreIntersectionClass::PolygonIntersection);
    }
    let union = s.union(&t);
    Ok(if is_short(alpha, union) {
        CoreIntersectionClass::InsideUnion { union }
    } else {
        CoreIntersectionClass::Empty
    })
}
