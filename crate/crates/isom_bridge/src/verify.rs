use hypoly_combinatorics::WeightVector;
use hypoly_phb_moduli::ParabolicWeights;
use serde::Serialize;

use crate::bridge::{from_phb, phb_stable, to_phb, to_phb_unchecked};
use crate::error::Result;
use crate::point::{HyperpolygonPoint, PhbPoint, ResidueInvariants};
use crate::scalar::{magnitude, Cx};
use crate::stability::{alpha_stable, moment_residuals, MomentResiduals, StabilityReport};

/// Every check of the correspondence run on one hyperpolygon point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointVerification {
    pub moment_residuals: MomentResiduals,
    pub alpha_stable: StabilityReport,
    pub phb_stable: Option<StabilityReport>,
    pub residue_invariants: Option<ResidueInvariants>,
    /// Largest coordinate gap between `from_phb(to_phb(pt))` and the normalized point.
    pub round_trip_deviation: Option<f64>,
    /// The same round trip in exact rational arithmetic on the binary value of `pt`.
    pub exact_round_trip: Option<bool>,
    pub stability_agrees: Option<bool>,
    pub valid: bool,
}

/// Every check run on a parabolic Higgs bundle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhbVerification {
    pub residue_invariants: ResidueInvariants,
    pub phb_stable: StabilityReport,
    /// Complex moment map residual of `from_phb(phb)`.
    pub recovered_complex_residual: Option<f64>,
    pub alpha_stable: Option<StabilityReport>,
    pub round_trip_deviation: Option<f64>,
    pub stability_agrees: Option<bool>,
    pub valid: bool,
}

fn max_gap(x: &[[Cx<f64>; 2]], y: &[[Cx<f64>; 2]]) -> f64 {
    x.iter()
        .flatten()
        .zip(y.iter().flatten())
        .map(|(u, v)| (u - v).norm())
        .fold(0.0, f64::max)
}

fn point_gap(x: &HyperpolygonPoint<f64>, y: &HyperpolygonPoint<f64>) -> f64 {
    max_gap(x.p(), y.p()).max(max_gap(x.q(), y.q()))
}

pub fn verify_point(
    pt: &HyperpolygonPoint<f64>,
    alpha: &WeightVector,
    beta: &ParabolicWeights,
    tol: f64,
) -> Result<PointVerification> {
    let residuals = moment_residuals(pt, alpha)?;
    let a_report = alpha_stable(pt, alpha, tol)?;
    let mut out = PointVerification {
        moment_residuals: residuals,
        alpha_stable: a_report.clone(),
        phb_stable: None,
        residue_invariants: None,
        round_trip_deviation: None,
        exact_round_trip: None,
        stability_agrees: None,
        valid: false,
    };
    if residuals.max() > tol || !a_report.stable {
        let phb = to_phb_unchecked(pt, beta)?;
        let b_report = phb_stable(&phb, tol)?;
        out.stability_agrees = Some(b_report.stable == a_report.stable);
        out.phb_stable = Some(b_report);
        return Ok(out);
    }
    let phb = to_phb(pt, alpha, beta, tol)?;
    let invariants = phb.residue_invariants();
    let b_report = phb_stable(&phb, tol)?;
    let back = from_phb(&phb, tol)?;
    let deviation = point_gap(&back, &pt.normalize_gauge()?);

    let exact = pt.to_exact();
    let exact_phb = to_phb(&exact, alpha, beta, tol)?;
    let exact_ok = from_phb(&exact_phb, tol)? == exact.normalize_gauge()?;

    let agrees = b_report.stable == a_report.stable;
    out.valid = invariants.max() <= tol && deviation <= tol && exact_ok && agrees;
    out.residue_invariants = Some(invariants);
    out.phb_stable = Some(b_report);
    out.round_trip_deviation = Some(deviation);
    out.exact_round_trip = Some(exact_ok);
    out.stability_agrees = Some(agrees);
    Ok(out)
}

pub fn verify_phb(phb: &PhbPoint<f64>, tol: f64) -> Result<PhbVerification> {
    let invariants = phb.residue_invariants();
    let b_report = phb_stable(phb, tol)?;
    let mut out = PhbVerification {
        residue_invariants: invariants,
        phb_stable: b_report.clone(),
        recovered_complex_residual: None,
        alpha_stable: None,
        round_trip_deviation: None,
        stability_agrees: None,
        valid: false,
    };
    if invariants.max() > tol {
        return Ok(out);
    }
    let pt = from_phb(phb, tol)?;
    let alpha = phb.weights.alpha();
    let complex = moment_residuals(&pt, &alpha)?.complex;
    let a_report = alpha_stable(&pt, &alpha, tol)?;
    let again = to_phb_unchecked(&pt, &phb.weights)?;
    let mut deviation = max_gap(&again.flags, &phb.flags);
    for (x, y) in again.residues.iter().zip(&phb.residues) {
        for r in 0..2 {
            for c in 0..2 {
                deviation = deviation.max(magnitude(&(x.m[r][c] - y.m[r][c])));
            }
        }
    }
    let agrees = a_report.stable == b_report.stable;
    out.valid = complex <= tol && deviation <= tol && agrees;
    out.recovered_complex_residual = Some(complex);
    out.alpha_stable = Some(a_report);
    out.round_trip_deviation = Some(deviation);
    out.stability_agrees = Some(agrees);
    Ok(out)
}
