use hypoly_combinatorics::{epsilon_s, IndexSet, Rational, WeightVector};
use num_traits::Signed;
use serde::Serialize;

use crate::error::{IsomError, Result};
use crate::point::{line_distance, HyperpolygonPoint};
use crate::scalar::{magnitude, Cx, Field};

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentResiduals {
    pub real: f64,
    pub complex: f64,
}

impl MomentResiduals {
    pub fn max(&self) -> f64 {
        self.real.max(self.complex)
    }
}

/// Max-norm violation of the real and complex moment map equations at level `(0, α)`.
pub fn moment_residuals<T: Field>(
    pt: &HyperpolygonPoint<T>,
    alpha: &WeightVector,
) -> Result<MomentResiduals> {
    if pt.n() != alpha.n() {
        return Err(IsomError::LengthMismatch {
            expected: alpha.n(),
            found: pt.n(),
        });
    }
    let zero = || Cx::new(T::zero(), T::zero());
    let re = |x: T| Cx::new(x, T::zero());
    let two = re(T::two());
    let mut complex = 0.0f64;
    let mut real = 0.0f64;
    let (mut s_diag, mut s_ad, mut s_bc) = (zero(), zero(), zero());
    let (mut r_diag, mut r_off) = (zero(), zero());
    for i in 0..pt.n() {
        let [a, b] = pt.p()[i].clone();
        let [c, d] = pt.q()[i].clone();
        complex = complex.max(magnitude(&(a.clone() * c.clone() + b.clone() * d.clone())));
        s_diag = s_diag + a.clone() * c.clone() - b.clone() * d.clone();
        s_ad = s_ad + a.clone() * d.clone();
        s_bc = s_bc + b.clone() * c.clone();
        let (na, nb) = (re(a.norm_sqr()), re(b.norm_sqr()));
        let (nc, nd) = (re(c.norm_sqr()), re(d.norm_sqr()));
        let level = re(T::from_rational(alpha.alpha(i + 1))) * two.clone();
        let r1 = nc.clone() + nd.clone() - na.clone() - nb.clone() - level;
        real = real.max(magnitude(&r1));
        r_diag = r_diag + nc - nd - na + nb;
        r_off = r_off + c * d.conj() - a.conj() * b;
    }
    for z in [&s_diag, &s_ad, &s_bc] {
        complex = complex.max(magnitude(z));
    }
    for z in [&r_diag, &r_off] {
        real = real.max(magnitude(z));
    }
    Ok(MomentResiduals { real, complex })
}

/// Partition of `{1..n}` into classes of proportional `q_i`.
pub fn straight_sets<T: Field>(pt: &HyperpolygonPoint<T>, tol: f64) -> Result<Vec<IndexSet>> {
    let n = pt.n();
    for i in 0..n {
        if pt.q_norm(i) <= tol || pt.q()[i].iter().all(num_traits::Zero::is_zero) {
            return Err(IsomError::ZeroQ { index: i + 1 });
        }
    }
    let mut reps: Vec<usize> = Vec::new();
    let mut classes: Vec<IndexSet> = Vec::new();
    for i in 0..n {
        let slot = reps
            .iter()
            .position(|&r| line_distance(&pt.q()[r], &pt.q()[i]) <= tol);
        match slot {
            Some(k) => classes[k] = classes[k].with(i + 1),
            None => {
                reps.push(i);
                classes.push(IndexSet::empty(n).with(i + 1));
            }
        }
    }
    classes.sort();
    Ok(classes)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityWitness {
    pub set: IndexSet,
    /// `ε_S(α)` as an exact rational string; absent for a vanishing `q_i`.
    pub epsilon: Option<String>,
    pub satisfied: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityReport {
    pub stable: bool,
    pub witnesses: Vec<StabilityWitness>,
    pub tolerance: f64,
}

impl StabilityReport {
    pub(crate) fn from_witnesses(witnesses: Vec<StabilityWitness>, tolerance: f64) -> Self {
        Self {
            stable: witnesses.iter().all(|w| w.satisfied),
            witnesses,
            tolerance,
        }
    }

    pub fn violations(&self) -> impl Iterator<Item = &StabilityWitness> {
        self.witnesses.iter().filter(|w| !w.satisfied)
    }
}

pub(crate) fn shortness_witness(alpha: &WeightVector, set: IndexSet, note: String) -> StabilityWitness {
    let eps: Rational = epsilon_s(alpha.entries(), set);
    StabilityWitness {
        set,
        satisfied: eps.is_negative(),
        epsilon: Some(eps.to_string()),
        note,
    }
}

/// Stability test: every `q_i ≠ 0`, and every maximal straight class `S`
/// with `p_j ≈ 0` off `S` is short.
pub fn alpha_stable<T: Field>(
    pt: &HyperpolygonPoint<T>,
    alpha: &WeightVector,
    tol: f64,
) -> Result<StabilityReport> {
    let n = pt.n();
    if n != alpha.n() {
        return Err(IsomError::LengthMismatch {
            expected: alpha.n(),
            found: n,
        });
    }
    let zero_q: Vec<StabilityWitness> = (0..n)
        .filter(|&i| pt.q_norm(i) <= tol)
        .map(|i| StabilityWitness {
            set: IndexSet::empty(n).with(i + 1),
            epsilon: None,
            satisfied: false,
            note: format!("q_{} vanishes", i + 1),
        })
        .collect();
    if !zero_q.is_empty() {
        return Ok(StabilityReport::from_witnesses(zero_q, tol));
    }
    let mut witnesses = Vec::new();
    for class in straight_sets(pt, tol)? {
        let p_vanishes_off = class.complement().members().all(|j| pt.p_norm(j - 1) <= tol);
        if p_vanishes_off {
            witnesses.push(shortness_witness(
                alpha,
                class,
                "straight set with p = 0 off it".to_string(),
            ));
        }
    }
    Ok(StabilityReport::from_witnesses(witnesses, tol))
}
