use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::CombinatoricsError;

/// Largest ambient size an [`IndexSet`] can represent.
pub const MAX_N: usize = 63;

/// A subset of `{1, …, n}` stored as a bitmask, index 1 at the lowest bit.
///
/// Ordering is by bitmask, which is the ordering used for every emitted list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    bits: u64,
    n: u8,
}

impl IndexSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_N, "ambient size {n} exceeds {MAX_N}");
        IndexSet { bits: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_N, "ambient size {n} exceeds {MAX_N}");
        IndexSet { bits: (1u64 << n) - 1, n: n as u8 }
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self, CombinatoricsError> {
        if n > MAX_N {
            return Err(CombinatoricsError::TooLarge { n, max: MAX_N });
        }
        if bits >> n != 0 {
            let index = 64 - bits.leading_zeros() as usize;
            return Err(CombinatoricsError::IndexOutOfRange { index, n });
        }
        Ok(IndexSet { bits, n: n as u8 })
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(
        n: usize,
        members: I,
    ) -> Result<Self, CombinatoricsError> {
        let mut s = IndexSet::empty(n.min(MAX_N));
        if n > MAX_N {
            return Err(CombinatoricsError::TooLarge { n, max: MAX_N });
        }
        for i in members {
            if i == 0 || i > n {
                return Err(CombinatoricsError::IndexOutOfRange { index: i, n });
            }
            s.bits |= 1 << (i - 1);
        }
        Ok(s)
    }

    /// `{1, …, k}` inside `{1, …, n}`.
    pub fn initial(n: usize, k: usize) -> Self {
        assert!(k <= n);
        IndexSet::from_bits(n, (1u64 << k) - 1).expect("k ≤ n")
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n() && self.bits >> (i - 1) & 1 == 1
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n()).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members().collect()
    }

    pub fn min_index(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize + 1)
    }

    pub fn with(&self, i: usize) -> Self {
        assert!(i >= 1 && i <= self.n());
        IndexSet { bits: self.bits | 1 << (i - 1), n: self.n }
    }

    pub fn without(&self, i: usize) -> Self {
        assert!(i >= 1 && i <= self.n());
        IndexSet { bits: self.bits & !(1 << (i - 1)), n: self.n }
    }

    pub fn complement(&self) -> Self {
        IndexSet { bits: !self.bits & IndexSet::full(self.n()).bits, n: self.n }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_ambient(other);
        IndexSet { bits: self.bits | other.bits, n: self.n }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_ambient(other);
        IndexSet { bits: self.bits & other.bits, n: self.n }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_ambient(other);
        IndexSet { bits: self.bits & !other.bits, n: self.n }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset_of(&self, other: &Self) -> bool {
        self.is_subset_of(other) && self.bits != other.bits
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits & other.bits == 0
    }

    /// Whichever of `{self, selfᶜ}` contains index 1.
    pub fn canonical(&self) -> Self {
        if self.contains(1) {
            *self
        } else {
            self.complement()
        }
    }

    /// Every subset of `{1, …, n}` in ascending bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = IndexSet> {
        assert!(n < 64, "cannot enumerate 2^{n} subsets");
        (0..1u64 << n).map(move |bits| IndexSet { bits, n: n as u8 })
    }

    /// Every subset of `self` in ascending bitmask order.
    pub fn subsets(&self) -> impl Iterator<Item = IndexSet> {
        let (mask, n) = (self.bits, self.n);
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some((cur | !mask).wrapping_add(1) & mask) };
            Some(IndexSet { bits: cur, n })
        })
    }

    /// Relabels through `sigma`, where `sigma[k]` is the old index at new position `k + 1`.
    pub fn relabel_to_new(&self, sigma: &[usize]) -> Self {
        assert_eq!(sigma.len(), self.n());
        let mut out = IndexSet::empty(self.n());
        for (pos, &old) in sigma.iter().enumerate() {
            if self.contains(old) {
                out = out.with(pos + 1);
            }
        }
        out
    }

    fn check_ambient(&self, other: &Self) {
        assert_eq!(self.n, other.n, "index sets over different ambient sizes");
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.members().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.members())
    }
}
