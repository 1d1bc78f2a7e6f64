use hypoly_combinatorics::{ensure_generic, is_short, CombinatoricsError, IndexSet, Scalar};
use serde::Serialize;

use crate::error::{IntersectionError, Result};
use crate::monomial::Monomial;

/// A monomial reduced to `c₁^K ∏_{t∈T} c_t` over `U_S`, after relabeling by `sigma`.
///
/// `sigma[k]` is the original index sitting at position `k + 1`; `S` occupies
/// positions `1..=s_len` and the tail the last `|T|` positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalIntegrand {
    pub s_len: usize,
    pub pivot_power: u32,
    /// Tail in original labels.
    pub tail: IndexSet,
    pub sign: i8,
    pub sigma: Vec<usize>,
}

impl CanonicalIntegrand {
    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn tail_len(&self) -> usize {
        self.tail.len()
    }

    /// `l` with `|T| = l + 1`, or `None` for a pure pivot power.
    pub fn l(&self) -> Option<usize> {
        self.tail_len().checked_sub(1)
    }

    /// Exponents in the relabeled coordinates.
    pub fn exponents(&self) -> Vec<u32> {
        let n = self.n();
        let mut e = vec![0; n];
        e[0] = self.pivot_power;
        for slot in e.iter_mut().skip(n - self.tail_len()) {
            *slot = 1;
        }
        e
    }
}

pub(crate) fn validate<T: Scalar>(alpha: &[T], s: IndexSet, m: &Monomial) -> Result<()> {
    let n = alpha.len();
    for found in [s.n(), m.n()] {
        if found != n {
            return Err(CombinatoricsError::LengthMismatch { expected: n, found }.into());
        }
    }
    ensure_generic(alpha)?;
    if s.len() < 2 || !is_short(alpha, s) {
        return Err(IntersectionError::SetNotShort { set: s });
    }
    let expected = n as u32 - 3;
    if m.degree() != expected {
        return Err(IntersectionError::DegreeMismatch { expected, found: m.degree() });
    }
    Ok(())
}

/// Folds a monomial on `U_S` to canonical form and relabels so `S = {1, …, |S|}`.
pub fn canonicalize<T: Scalar>(
    alpha: &[T],
    s: IndexSet,
    m: &Monomial,
) -> Result<(Vec<T>, IndexSet, CanonicalIntegrand)> {
    validate(alpha, s, m)?;
    Ok(canonicalize_unchecked(alpha, s, m))
}

pub(crate) fn canonicalize_unchecked<T: Scalar>(
    alpha: &[T],
    s: IndexSet,
    m: &Monomial,
) -> (Vec<T>, IndexSet, CanonicalIntegrand) {
    let n = alpha.len();
    let mut k: u32 = s.members().map(|i| m.exponent(i)).sum();
    let mut tail = IndexSet::empty(n);
    for j in s.complement().members() {
        let kj = m.exponent(j);
        k += 2 * (kj / 2);
        if kj % 2 == 1 {
            tail = tail.with(j);
        }
    }
    let mut sign = 1i8;
    if s.len() == n - 1 && !tail.is_empty() {
        k += tail.len() as u32;
        sign = -1;
        tail = IndexSet::empty(n);
    }
    let rest = s.complement().difference(&tail);
    let sigma: Vec<usize> = s.members().chain(rest.members()).chain(tail.members()).collect();
    let permuted = sigma.iter().map(|&i| alpha[i - 1].clone()).collect();
    let integrand = CanonicalIntegrand { s_len: s.len(), pivot_power: k, tail, sign, sigma };
    (permuted, IndexSet::initial(n, s.len()), integrand)
}
