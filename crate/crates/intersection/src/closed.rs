use hypoly_combinatorics::{epsilon_s, sum, IndexSet, Perturbed, Scalar};
use num_traits::One;
use serde::Serialize;

use crate::canonical::{canonicalize, CanonicalIntegrand};
use crate::error::{IntersectionError, Result};
use crate::monomial::Monomial;
use crate::triangular::{ell, parity_sign, range_set, signed_triangular_count, triangular_sets};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AVariant {
    A,
    Atilde,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AFamily {
    pub variant: AVariant,
    pub n: usize,
    pub l: usize,
    pub sets: Vec<IndexSet>,
}

fn initial_len(s: IndexSet) -> Result<usize> {
    if s != IndexSet::initial(s.n(), s.len()) {
        return Err(IntersectionError::BadShape(format!("{s} is not of the form {{1..k}}")));
    }
    Ok(s.len())
}

fn strictly_positive<U: Scalar>(x: &U, what: impl FnOnce() -> String) -> Result<bool> {
    if x.is_zero() {
        return Err(IntersectionError::Degenerate(what()));
    }
    Ok(x.is_positive())
}

fn sigma_s<U: Scalar>(a: &[U], s_len: usize) -> U {
    sum(a[..s_len].iter().cloned())
}

/// `J ⊆ {n−l−1, …, n}` with `ℓ_J > 0` and `Σ_S α < ℓ_J + α_{|S|+1} + … + α_{n−l−2}`.
pub fn family_a<U: Scalar>(a: &[U], s: IndexSet, l: usize) -> Result<AFamily> {
    let n = a.len();
    let s_len = initial_len(s)?;
    if s_len + l + 2 > n {
        return Err(IntersectionError::BadShape(format!(
            "family A needs |S| ≤ n−l−2 (|S| = {s_len}, n = {n}, l = {l})"
        )));
    }
    let lo = n - l - 1;
    let sig = sigma_s(a, s_len);
    let mid = sum(a[s_len..lo - 1].iter().cloned());
    let mut sets = Vec::new();
    for j in range_set(n, lo, n).subsets() {
        let lj = ell(a, j, lo, n);
        if !strictly_positive(&lj, || format!("ℓ_{j} = 0"))? {
            continue;
        }
        let gap = lj + mid.clone() - sig.clone();
        if strictly_positive(&gap, || format!("threshold equality at {j}"))? {
            sets.push(j);
        }
    }
    Ok(AFamily { variant: AVariant::A, n, l, sets })
}

/// `J ⊆ {n−l, …, n}` with `ℓ_J > Σ_S α`.
pub fn family_atilde<U: Scalar>(a: &[U], s: IndexSet, l: usize) -> Result<AFamily> {
    let n = a.len();
    let s_len = initial_len(s)?;
    if s_len + l + 1 != n {
        return Err(IntersectionError::BadShape(format!(
            "family Ã needs |S| = n−l−1 (|S| = {s_len}, n = {n}, l = {l})"
        )));
    }
    let lo = n - l;
    let sig = sigma_s(a, s_len);
    let mut sets = Vec::new();
    for j in range_set(n, lo, n).subsets() {
        let gap = ell(a, j, lo, n) - sig.clone();
        if strictly_positive(&gap, || format!("ℓ_{j} equals Σ_S"))? {
            sets.push(j);
        }
    }
    Ok(AFamily { variant: AVariant::Atilde, n, l, sets })
}

fn type_one<U: Scalar>(a: &[U], s_len: usize) -> Result<i64> {
    let n = a.len();
    let top = parity_sign(n - 1);
    if s_len == n - 1 {
        return Ok(top);
    }
    let s = IndexSet::initial(n, s_len);
    if s_len == n - 2 {
        let mut maximal = true;
        for j in s.complement().members() {
            let e = epsilon_s(a, s.with(j));
            if e.is_zero() {
                return Err(IntersectionError::Degenerate(format!("ε vanishes on {}", s.with(j))));
            }
            maximal &= e.is_positive();
        }
        return Ok(if maximal { top } else { 0 });
    }
    let mut tilde = Vec::with_capacity(n - s_len + 1);
    tilde.push(a[n - 1].clone());
    tilde.extend(a[s_len..n - 1].iter().cloned());
    tilde.push(sigma_s(a, s_len));
    Ok(parity_sign(s_len - 1) * signed_triangular_count(&tilde)?)
}

fn type_two<U: Scalar>(a: &[U], s_len: usize, l: usize) -> Result<i64> {
    let n = a.len();
    let s = IndexSet::initial(n, s_len);
    if s_len + l + 1 == n {
        let count = family_atilde(a, s, l)?.sets.len() as i64;
        return Ok(parity_sign(n - l) * count);
    }
    let lo = n - l - 1;
    let fam = family_a(a, s, l)?;
    let lead = |j: &IndexSet| usize::from(j.contains(lo));
    if s_len + l + 2 == n {
        return Ok(fam.sets.iter().map(|j| parity_sign(lead(j) + s_len + 1)).sum());
    }
    let m = n - l - s_len;
    let sig = sigma_s(a, s_len);
    let mut total = 0;
    for j in &fam.sets {
        let mut tilde = Vec::with_capacity(m);
        tilde.push(ell(a, *j, lo, n));
        tilde.extend(a[s_len..lo - 1].iter().cloned());
        tilde.push(sig.clone());
        for jp in triangular_sets(&tilde)?.sets {
            let e = lead(j) + usize::from(jp.contains(m)) * (m + 1) + jp.len() + s_len + 1;
            total += parity_sign(e);
        }
    }
    Ok(total)
}

/// Closed-form integral of a canonical integrand over `U_S`, `S = {1, …, |S|}`.
///
/// Strict comparisons that land on equality are reported as
/// [`IntersectionError::Degenerate`]; perturb the weights first.
pub fn integral_closed<U: Scalar>(a: &[U], s: IndexSet, integrand: &CanonicalIntegrand) -> Result<i64> {
    let n = a.len();
    let s_len = initial_len(s)?;
    if s_len != integrand.s_len || integrand.n() != n {
        return Err(IntersectionError::BadShape("integrand does not match S".into()));
    }
    let found = integrand.pivot_power + integrand.tail_len() as u32;
    if found as usize + 3 != n {
        return Err(IntersectionError::DegreeMismatch { expected: n as u32 - 3, found });
    }
    let eps = epsilon_s(a, s);
    if !eps.is_negative() || s_len < 2 {
        return Err(IntersectionError::SetNotShort { set: s });
    }
    let value = match integrand.l() {
        None => type_one(a, s_len)?,
        Some(l) => {
            if integrand.pivot_power as usize + l + 4 != n {
                return Err(IntersectionError::BadShape("k ≠ n−l−4".into()));
            }
            type_two(a, s_len, l)?
        }
    };
    Ok(i64::from(integrand.sign) * value)
}

/// `∫_{U_S} m` by canonicalization and the closed formulas.
///
/// The last relabeled coordinate receives `+ε₁`, which keeps the chamber and
/// breaks every tie the formulas can meet.
pub fn integrate<T: Scalar + One>(alpha: &[T], s: IndexSet, m: &Monomial) -> Result<i64> {
    let (permuted, s0, integrand) = canonicalize(alpha, s, m)?;
    let mut lifted: Vec<Perturbed<T>> = permuted.into_iter().map(Perturbed::constant).collect();
    let last = lifted.pop().expect("n ≥ 3");
    lifted.push(last + Perturbed::infinitesimal(1));
    integral_closed(&lifted, s0, &integrand)
}
