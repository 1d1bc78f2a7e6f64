use std::collections::{BTreeMap, HashMap};

use hypoly_combinatorics::Rational;
use num_traits::{One, Zero};

/// Row echelon form built one sparse row at a time over ℚ.
#[derive(Default)]
pub(crate) struct Echelon {
    pivots: HashMap<usize, Vec<(usize, Rational)>>,
}

impl Echelon {
    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts `row` and reports whether it raised the rank.
    pub(crate) fn insert(&mut self, mut row: BTreeMap<usize, Rational>) -> bool {
        let mut cursor = 0;
        loop {
            let hit = row
                .range(cursor..)
                .find(|(c, _)| self.pivots.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            let Some((col, factor)) = hit else { break };
            for (pc, pv) in &self.pivots[&col] {
                let entry = row.entry(*pc).or_insert_with(Rational::zero);
                *entry -= &factor * pv;
                if entry.is_zero() {
                    row.remove(pc);
                }
            }
            cursor = col + 1;
        }
        let Some((&lead, lead_val)) = row.iter().next() else { return false };
        let inv = Rational::one() / lead_val;
        let normalized = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivots.insert(lead, normalized);
        true
    }
}
