//! Crossing a single wall `W_S` between adjacent chambers.

use hypoly_combinatorics::{
    chamber_signature, is_short, polygon_nonempty, short_sets, CombinatoricsError, IndexSet, Scalar, Wall,
};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WallCrossError {
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error("both weight vectors lie in the same chamber")]
    SameChamber,
    #[error("chambers are not adjacent: {} walls separate them", .walls.len())]
    NotAdjacent { walls: Vec<IndexSet> },
    #[error("weight vectors have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, WallCrossError>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentChange {
    /// `B = S`: `U_S` is replaced by `U_{Sᶜ}`.
    Replaced,
    /// `B` meets `S` without lying inside it.
    Unchanged,
    /// `B ⊊ S`: blow up along `U_B⁻ ∩ U_S⁻`, then down.
    #[serde(rename = "BlowUpDown_insideS")]
    BlowUpDownInsideS,
    /// `B ⊆ Sᶜ`: blow up along `M_B⁻ ∩ M_S⁻`, then down.
    #[serde(rename = "BlowUpDown_inSc")]
    BlowUpDownInSc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentEntry {
    pub set: IndexSet,
    pub change: ComponentChange,
    pub center: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PolygonChange {
    /// Blow up `M(α⁻)` along `M_S(α⁻) ≅ ℂP^{|Sᶜ|−2}`, blow down to `M_{Sᶜ}(α⁺) ≅ ℂP^{|S|−2}`.
    Flip { blow_up_center_dim: usize, blow_down_center_dim: usize },
    /// Vanishing wall; the polygon space exists only on the plus side.
    Appears,
    /// Vanishing wall; the polygon space exists only on the minus side.
    Vanishes,
    BothEmpty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallCrossReport {
    pub wall: Wall,
    /// The member of `{S, Sᶜ}` that is short on the minus side.
    pub s_minus_short: IndexSet,
    /// `U_S`, present when `|S| ≥ 2`.
    pub removed: Option<IndexSet>,
    /// `U_{Sᶜ}`, present when `|Sᶜ| ≥ 2`.
    pub added: Option<IndexSet>,
    pub component_changes: Vec<ComponentEntry>,
    pub polygon_change: PolygonChange,
    pub short_minus: Vec<IndexSet>,
    pub short_plus: Vec<IndexSet>,
}

/// The unique wall whose sign differs between the two chambers.
pub fn identify_wall<T: Scalar>(alpha_minus: &[T], alpha_plus: &[T]) -> Result<Wall> {
    if alpha_minus.len() != alpha_plus.len() {
        return Err(WallCrossError::LengthMismatch(alpha_minus.len(), alpha_plus.len()));
    }
    let a = chamber_signature(alpha_minus)?;
    let b = chamber_signature(alpha_plus)?;
    let walls = a.differing(&b);
    match walls.as_slice() {
        [] => Err(WallCrossError::SameChamber),
        [s] => Ok(Wall::new(*s)?),
        _ => Err(WallCrossError::NotAdjacent { walls }),
    }
}

pub fn classify(b: IndexSet, s: IndexSet) -> ComponentChange {
    if b == s {
        ComponentChange::Replaced
    } else if b.is_proper_subset_of(&s) {
        ComponentChange::BlowUpDownInsideS
    } else if b.is_subset_of(&s.complement()) {
        ComponentChange::BlowUpDownInSc
    } else {
        ComponentChange::Unchanged
    }
}

pub fn crossing_report<T: Scalar>(alpha_minus: &[T], alpha_plus: &[T]) -> Result<WallCrossReport> {
    let wall = identify_wall(alpha_minus, alpha_plus)?;
    let w = wall.discrete_data;
    let s = if is_short(alpha_minus, w) { w } else { w.complement() };
    let sc = s.complement();
    let short_minus = short_sets(alpha_minus, 2)?;
    let short_plus = short_sets(alpha_plus, 2)?;
    let component_changes = short_minus
        .iter()
        .map(|&b| {
            let change = classify(b, s);
            let center = match change {
                ComponentChange::BlowUpDownInsideS => Some(format!("U_{b}⁻ ∩ U_{s}⁻")),
                ComponentChange::BlowUpDownInSc => Some(format!("M_{b}⁻ ∩ M_{s}⁻")),
                _ => None,
            };
            ComponentEntry { set: b, change, center }
        })
        .collect();
    let polygon_change = match (polygon_nonempty(alpha_minus)?, polygon_nonempty(alpha_plus)?) {
        (true, true) => PolygonChange::Flip {
            blow_up_center_dim: sc.len().saturating_sub(2),
            blow_down_center_dim: s.len().saturating_sub(2),
        },
        (false, true) => PolygonChange::Appears,
        (true, false) => PolygonChange::Vanishes,
        (false, false) => PolygonChange::BothEmpty,
    };
    Ok(WallCrossReport {
        wall,
        s_minus_short: s,
        removed: (s.len() >= 2).then_some(s),
        added: (sc.len() >= 2).then_some(sc),
        component_changes,
        polygon_change,
        short_minus,
        short_plus,
    })
}
