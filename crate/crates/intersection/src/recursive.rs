use hypoly_combinatorics::{is_short, IndexSet, Perturbed, Scalar};
use num_traits::One;

use crate::canonical::{canonicalize_unchecked, validate};
use crate::closed::integral_closed;
use crate::error::{IntersectionError, Result};
use crate::monomial::Monomial;
use crate::triangular::parity_sign;

/// `∫_{U_S} m` by repeatedly merging the last two weights.
///
/// Independent of the type II closed formulas; pure pivot powers are
/// evaluated by the type I formulas.
pub fn integrate_recursive<T: Scalar + One>(alpha: &[T], s: IndexSet, m: &Monomial) -> Result<i64> {
    validate(alpha, s, m)?;
    let lifted: Vec<Perturbed<T>> = alpha.iter().cloned().map(Perturbed::constant).collect();
    step(lifted, s, m.clone())
}

fn step<T: Scalar + One>(a: Vec<Perturbed<T>>, s: IndexSet, m: Monomial) -> Result<i64> {
    if !is_short(&a, s) {
        return Ok(0);
    }
    let (mut ap, s0, integrand) = canonicalize_unchecked(&a, s, &m);
    if integrand.tail.is_empty() {
        return integral_closed(&ap, s0, &integrand);
    }
    let n = ap.len();
    let k = integrand.exponents();
    if s0.contains(n - 1) || k[n - 1] == 0 {
        return Err(IntersectionError::RecursionShape(format!(
            "last two positions must lie outside S with k_n ≥ 1 (S = {s0}, k = {k:?})"
        )));
    }
    if ap[n - 2] == ap[n - 1] {
        let level = ap.iter().map(Perturbed::depth).max().unwrap_or(0) + 1;
        let bumped = ap[n - 1].clone() + Perturbed::infinitesimal(level);
        ap[n - 1] = bumped;
    }
    let diff = ap[n - 2].clone() - ap[n - 1].clone();
    let sg = diff.signum_i8() as i64;
    let mut plus = ap[..n - 2].to_vec();
    plus.push(ap[n - 2].clone() + ap[n - 1].clone());
    let mut minus = ap[..n - 2].to_vec();
    minus.push(diff.abs_value());
    let mut reduced = k[..n - 2].to_vec();
    reduced.push(k[n - 2] + k[n - 1] - 1);
    let reduced = Monomial::new(reduced);
    let s_small = IndexSet::initial(n - 1, s0.len());
    let factor = parity_sign(k[n - 1] as usize - 1) * sg.pow(k[n - 2] + k[n - 1]);
    let value = step(plus, s_small, reduced.clone())? + factor * step(minus, s_small, reduced)?;
    Ok(i64::from(integrand.sign) * value)
}
