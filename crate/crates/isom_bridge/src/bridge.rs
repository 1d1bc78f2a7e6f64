use hypoly_combinatorics::{chamber_signature, IndexSet, WeightVector};
use hypoly_phb_moduli::ParabolicWeights;
use num_traits::Zero;

use crate::error::{IsomError, Result};
use crate::point::{line_distance, HyperpolygonPoint, PhbPoint, ResidueMatrix};
use crate::scalar::{magnitude, Cx, Field};
use crate::stability::{
    alpha_stable, moment_residuals, shortness_witness, StabilityReport, StabilityWitness,
};

/// Flags `[q_i]` and residues `(q_i p_i)_0` without any validity checks.
pub fn to_phb_unchecked<T: Field>(
    pt: &HyperpolygonPoint<T>,
    weights: &ParabolicWeights,
) -> Result<PhbPoint<T>> {
    let residues = pt
        .p()
        .iter()
        .zip(pt.q())
        .map(|(p, q)| ResidueMatrix::from_pair(p, q))
        .collect();
    PhbPoint::new(pt.q().to_vec(), residues, weights.clone())
}

/// The parabolic Higgs bundle of a stable point on the level set of `α`.
///
/// `weights` must lie in the chamber of `α`.
pub fn to_phb<T: Field>(
    pt: &HyperpolygonPoint<T>,
    alpha: &WeightVector,
    weights: &ParabolicWeights,
    tol: f64,
) -> Result<PhbPoint<T>> {
    if chamber_signature(alpha.entries())? != chamber_signature(weights.alpha().entries())? {
        return Err(IsomError::WeightMismatch);
    }
    let res = moment_residuals(pt, alpha)?;
    if res.max() > tol {
        return Err(IsomError::MomentViolation {
            real: res.real,
            complex: res.complex,
        });
    }
    let report = alpha_stable(pt, alpha, tol)?;
    if !report.stable {
        let sets: Vec<String> = report.violations().map(|w| w.set.to_string()).collect();
        return Err(IsomError::UnstablePoint(sets.join(", ")));
    }
    to_phb_unchecked(pt, weights)
}

/// Recovers `(p, q)` from flags and residues, with `q_i` the normalized flag generator.
pub fn from_phb<T: Field>(phb: &PhbPoint<T>, tol: f64) -> Result<HyperpolygonPoint<T>> {
    let mut p = Vec::with_capacity(phb.n());
    let mut q = Vec::with_capacity(phb.n());
    for (i, (flag, r)) in phb.flags.iter().zip(&phb.residues).enumerate() {
        let index = i + 1;
        let bad = |reason: &str| IsomError::MalformedResidue {
            index,
            reason: reason.to_string(),
        };
        let scale = r.max_abs().max(1.0);
        if magnitude(&r.trace()) > tol * scale {
            return Err(bad("nonzero trace"));
        }
        if magnitude(&r.det()) > tol * scale * scale {
            return Err(bad("not nilpotent"));
        }
        let image = r.apply(flag);
        if magnitude(&image[0]).max(magnitude(&image[1])) > tol * scale {
            return Err(bad("flag not preserved"));
        }
        let [c, d] = flag.clone();
        let [[r11, r12], [r21, _]] = r.m.clone();
        let two = Cx::new(T::two(), T::zero());
        let (a, b) = if c.is_zero() {
            (r21 / d.clone(), -(two * r11) / d)
        } else if d.is_zero() {
            ((two * r11) / c.clone(), r12 / c)
        } else {
            (r21 / d, r12 / c)
        };
        p.push([a, b]);
        q.push(flag.clone());
    }
    HyperpolygonPoint::new(p, q)
}

/// Parabolic stability over trivial line subbundles invariant under the Higgs field.
pub fn phb_stable<T: Field>(phb: &PhbPoint<T>, tol: f64) -> Result<StabilityReport> {
    let n = phb.n();
    let alpha = phb.weights.alpha();
    let nonzero: Vec<usize> = (0..n).filter(|&i| phb.residues[i].max_abs() > tol).collect();
    let mut candidates: Vec<[Cx<T>; 2]> = Vec::new();
    let mut generic_line = false;
    if nonzero.is_empty() {
        for f in &phb.flags {
            if candidates.iter().all(|c| line_distance(c, f) > tol) {
                candidates.push(f.clone());
            }
        }
        generic_line = true;
    } else {
        let line = phb.flags[nonzero[0]].clone();
        let invariant = nonzero
            .iter()
            .all(|&j| line_distance(&phb.flags[j], &line) <= tol);
        if invariant {
            candidates.push(line);
        }
    }
    let mut witnesses: Vec<StabilityWitness> = candidates
        .iter()
        .map(|line| {
            let set = IndexSet::from_members(
                n,
                (0..n)
                    .filter(|&i| line_distance(&phb.flags[i], line) <= tol)
                    .map(|i| i + 1),
            )
            .expect("indices in range");
            shortness_witness(&alpha, set, "invariant flag line".to_string())
        })
        .collect();
    if generic_line {
        witnesses.push(shortness_witness(
            &alpha,
            IndexSet::empty(n),
            "generic line".to_string(),
        ));
    }
    Ok(StabilityReport::from_witnesses(witnesses, tol))
}
