use hypoly_combinatorics::{epsilon_s, IndexSet, Rational};
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{PhbError, Result};
use crate::weights::ParabolicWeights;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalKind {
    /// `Φ = 0`: stable parabolic bundles, the minimum of `f`.
    ParabolicBundles,
    /// `E = E₀ ⊕ E₁` labeled by `(d₀, S)`.
    Split,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalSubmanifold {
    pub kind: CriticalKind,
    pub d0: Option<i64>,
    pub set: Option<IndexSet>,
    pub g: u32,
    pub d: i64,
    pub m: Option<i64>,
    pub morse_index: i64,
    pub description: String,
}

/// `2(g − 1 + n) + 4d₀ − 2d − 2|S|`.
pub fn morse_index_phb(g: u32, d: i64, d0: i64, s_len: usize, n: usize) -> i64 {
    2 * (g as i64 - 1 + n as i64) + 4 * d0 - 2 * d - 2 * s_len as i64
}

fn floor_half(x: &Rational) -> i64 {
    (x / Rational::from_integer(2.into())).floor().to_integer().to_i64().expect("small degree")
}

fn description(g: u32, m: i64) -> String {
    if g == 0 {
        format!("CP^{m}")
    } else {
        format!("2^{}-cover of S^{m}(Σ)", 2 * g)
    }
}

fn split_pairs(g: u32, d: i64, beta: &ParabolicWeights) -> Result<Vec<CriticalSubmanifold>> {
    let alpha = beta.alpha();
    let n = alpha.n();
    let mut out = Vec::new();
    for s in IndexSet::all(n) {
        let lower = epsilon_s(&alpha, s) + Rational::from_integer(d.into());
        if lower.is_integer() && lower.to_integer().is_even() {
            let d0 = floor_half(&lower);
            return Err(PhbError::NonGenericWeights { set: s, d0 });
        }
        let upper = d + 2 * (g as i64 - 1) + s.len() as i64;
        let first = floor_half(&lower) + 1;
        let last = Integer::div_floor(&upper, &2);
        for d0 in first..=last {
            let m = d - 2 * d0 + 2 * (g as i64 - 1) + s.len() as i64;
            out.push(CriticalSubmanifold {
                kind: CriticalKind::Split,
                d0: Some(d0),
                set: Some(s),
                g,
                d,
                m: Some(m),
                morse_index: morse_index_phb(g, d, d0, s.len(), n),
                description: description(g, m),
            });
        }
    }
    Ok(out)
}

/// All critical submanifolds: the `Φ = 0` minimum when nonempty, then every
/// `(d₀, S)` with `ε_S(α) + d < 2d₀ ≤ d + 2(g−1) + |S|`.
///
/// The minimum is present for `g ≥ 1`; for `g = 0` it is present exactly when
/// no split component has index zero.
pub fn critical_submanifolds(g: u32, d: i64, beta: &ParabolicWeights) -> Result<Vec<CriticalSubmanifold>> {
    let pairs = split_pairs(g, d, beta)?;
    let zero = pairs.iter().filter(|c| c.morse_index == 0).count();
    let mut out = Vec::with_capacity(pairs.len() + 1);
    if g >= 1 || zero == 0 {
        let description = if g == 0 && d == 0 {
            "polygon space M(α)".to_string()
        } else {
            "moduli of stable parabolic bundles".to_string()
        };
        out.push(CriticalSubmanifold {
            kind: CriticalKind::ParabolicBundles,
            d0: None,
            set: None,
            g,
            d,
            m: None,
            morse_index: 0,
            description,
        });
    }
    out.extend(pairs);
    Ok(out)
}

/// Split components of index zero; at most one for `g = 0` and none for `g ≥ 1`.
pub fn zero_index_components(g: u32, d: i64, beta: &ParabolicWeights) -> Result<Vec<CriticalSubmanifold>> {
    let zero: Vec<_> = split_pairs(g, d, beta)?.into_iter().filter(|c| c.morse_index == 0).collect();
    let bound = if g == 0 { 1 } else { 0 };
    if zero.len() > bound {
        return Err(PhbError::InvariantViolation(format!(
            "{} zero-index split components in genus {g}",
            zero.len()
        )));
    }
    Ok(zero)
}

/// Components that survive on holomorphically trivial bundles (`d = d₀ = 0`).
pub fn restrict_to_trivial(components: Vec<CriticalSubmanifold>) -> Vec<CriticalSubmanifold> {
    components
        .into_iter()
        .filter(|c| c.d == 0 && c.d0.is_none_or(|d0| d0 == 0))
        .collect()
}

/// Genus-0 vanishing walls `(d₀, S)` with `2d₀ = d + 1 − n + |S|`.
pub fn vanishing_walls(g: u32, d: i64, n: usize) -> Result<Vec<(i64, IndexSet)>> {
    if g != 0 {
        return Err(PhbError::UnsupportedGenus(g));
    }
    Ok(IndexSet::all(n)
        .filter_map(|s| {
            let twice = d + 1 - n as i64 + s.len() as i64;
            twice.is_even().then_some((twice / 2, s))
        })
        .collect())
}
