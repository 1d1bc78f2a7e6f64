use hypoly_combinatorics::*;
use proptest::prelude::*;

fn w(xs: &[i64]) -> WeightVector {
    WeightVector::from_integers(xs).unwrap()
}

fn sets(n: usize, lists: &[&[usize]]) -> Vec<IndexSet> {
    lists.iter().map(|l| IndexSet::from_members(n, l.iter().copied()).unwrap()).collect()
}

/// Brute-force short sets over integers, sorted by bitmask.
fn oracle_short(xs: &[i64], min_card: usize) -> Vec<u64> {
    let n = xs.len();
    (0u64..1 << n)
        .filter(|&bits| {
            let eps: i64 = (0..n).map(|i| if bits >> i & 1 == 1 { xs[i] } else { -xs[i] }).sum();
            eps < 0 && bits.count_ones() as usize >= min_card
        })
        .collect()
}

#[test]
fn epsilon_examples() {
    let a = w(&[2, 1, 5, 1, 2]);
    let s = IndexSet::from_members(5, [1, 2, 5]).unwrap();
    assert_eq!(epsilon_s(a.entries(), s), rational(-1, 1));
    assert_eq!(epsilon_s(a.entries(), IndexSet::empty(5)), rational(-11, 1));
}

#[test]
fn genericity_examples() {
    assert!(is_generic(w(&[1, 1, 3, 3, 3]).entries()));
    assert!(is_generic(w(&[10, 1, 1, 2, 3]).entries()));
    let flat = w(&[1, 1, 1, 1]);
    assert!(!is_generic(flat.entries()));
    assert!(matches!(
        short_sets(flat.entries(), 2),
        Err(CombinatoricsError::NonGenericWeights { .. })
    ));
    assert!(chamber_signature(flat.entries()).is_err());
}

#[test]
fn short_sets_of_the_five_gon() {
    let expected = sets(
        5,
        &[&[1, 2], &[1, 4], &[2, 4], &[1, 2, 4], &[1, 5], &[2, 5], &[1, 2, 5], &[4, 5], &[1, 4, 5], &[2, 4, 5]],
    );
    assert_eq!(short_sets(w(&[2, 1, 5, 1, 2]).entries(), 2).unwrap(), expected);
}

#[test]
fn short_sets_of_the_symmetric_example() {
    let got = short_sets(w(&[1, 1, 3, 3, 3]).entries(), 2).unwrap();
    let pairs = got.iter().filter(|s| s.len() == 2).count();
    let triples: Vec<_> = got.iter().filter(|s| s.len() == 3).copied().collect();
    assert_eq!((got.len(), pairs), (10, 7));
    assert_eq!(triples, sets(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]));
    assert_eq!(maximal_short_sets(w(&[1, 1, 3, 3, 3]).entries()).unwrap(), triples);
}

#[test]
fn maximal_short_sets_examples() {
    let big = maximal_short_sets(w(&[10, 1, 1, 2, 3]).entries()).unwrap();
    assert!(big.contains(&IndexSet::from_members(5, [2, 3, 4, 5]).unwrap()));
    let null = maximal_short_sets(w(&[10, 1, 1, 2]).entries()).unwrap();
    assert_eq!(null, sets(4, &[&[2, 3, 4]]));
}

#[test]
fn polygon_space_examples() {
    assert!(!polygon_nonempty(w(&[10, 1, 1, 2, 3]).entries()).unwrap());
    assert!(polygon_nonempty(w(&[1, 1, 3, 3, 3]).entries()).unwrap());
    assert!(!polygon_nonempty(w(&[1, 1, 1, 100]).entries()).unwrap());
}

#[test]
fn signatures_across_one_wall() {
    let a = WeightVector::parse(&["2", "1", "5", "1", "2"]).unwrap();
    let same = WeightVector::parse(&["21/10", "1", "5", "1", "2"]).unwrap();
    let over = WeightVector::parse(&["3", "3/2", "5", "1", "2"]).unwrap();
    let sa = chamber_signature(a.entries()).unwrap();
    assert_eq!(sa, chamber_signature(same.entries()).unwrap());
    let diff = sa.differing(&chamber_signature(over.entries()).unwrap());
    assert_eq!(diff, sets(5, &[&[1, 2, 5]]));
    assert_eq!(sa.signs.len(), 15);
    assert!(sa.signs.iter().all(|(s, _)| s.contains(1)));
}

#[test]
fn walls_are_canonical() {
    let s = IndexSet::from_members(5, [3, 4]).unwrap();
    assert_eq!(Wall::new(s).unwrap().discrete_data, s.complement());
    assert!(Wall::new(IndexSet::empty(5)).is_err());
    assert!(Wall::new(IndexSet::full(5)).is_err());
}

#[test]
fn weight_parsing() {
    let a = WeightVector::parse(&["3", "3/2", "6/4"]).unwrap();
    assert_eq!(a.to_strings(), vec!["3", "3/2", "3/2"]);
    assert!(matches!(WeightVector::parse(&["1.5", "1", "1"]), Err(CombinatoricsError::ParseWeight(_))));
    assert!(matches!(WeightVector::parse(&["1e3", "1", "1"]), Err(CombinatoricsError::ParseWeight(_))));
    assert!(matches!(WeightVector::parse(&["0", "1", "1"]), Err(CombinatoricsError::InvalidWeights(_))));
    assert!(WeightVector::parse(&["1", "1"]).is_err());
}

#[test]
fn perturbed_weights_order_lexicographically() {
    let one = PerturbedWeight::constant(rational(1, 1));
    let e1 = PerturbedWeight::infinitesimal(1);
    let e2 = PerturbedWeight::infinitesimal(2);
    assert!(one.clone() + e1.clone() > one.clone());
    assert!(e1.clone() > e2.clone() + e2.clone() + e2.clone());
    assert!(one.clone() - e1.clone() + e2.clone() < one.clone());
    assert_eq!(PerturbedWeight::constant(rational(2, 1)), PerturbedWeight::from(rational(4, 2)));
    assert_eq!((one + e1).to_string(), "1+1ε1");
}

#[test]
fn perturbation_breaks_ties() {
    let flat = w(&[1, 1, 1, 1]);
    let p = flat.perturb(4, 1);
    assert!(is_generic(p.entries()));
    assert_eq!(short_sets(p.entries(), 2).unwrap().len(), 3);
}

#[test]
fn n_four_has_three_short_pairs() {
    for xs in [[1, 2, 2, 2], [10, 1, 1, 2], [3, 4, 5, 7], [1, 1, 1, 2]] {
        let a = w(&xs);
        if !is_generic(a.entries()) {
            continue;
        }
        let s = short_sets(a.entries(), 2).unwrap();
        assert_eq!(s.iter().filter(|x| x.len() == 2).count(), 3);
        assert!(s.iter().filter(|x| x.len() == 3).count() <= 1);
    }
}

fn generic_weights(n: std::ops::Range<usize>) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1i64..40, n).prop_filter("generic", |xs| {
        is_generic(WeightVector::from_integers(xs).unwrap().entries())
    })
}

proptest! {
    #[test]
    fn epsilon_is_antisymmetric(xs in prop::collection::vec(1i64..50, 3..9), bits in any::<u64>()) {
        let a = w(&xs);
        let s = IndexSet::from_bits(xs.len(), bits & ((1 << xs.len()) - 1)).unwrap();
        let total = epsilon_s(a.entries(), s) + epsilon_s(a.entries(), s.complement());
        prop_assert_eq!(total, rational(0, 1));
    }

    #[test]
    fn matches_brute_force(xs in generic_weights(3..9), k in 0usize..4) {
        let got: Vec<u64> = short_sets(w(&xs).entries(), k).unwrap().iter().map(IndexSet::bits).collect();
        prop_assert_eq!(got, oracle_short(&xs, k));
    }

    #[test]
    fn exactly_one_of_set_and_complement_is_short(xs in generic_weights(3..9)) {
        let a = w(&xs);
        for s in IndexSet::all(xs.len()) {
            prop_assert!(is_short(a.entries(), s) != is_short(a.entries(), s.complement()));
        }
        prop_assert!(is_short(a.entries(), IndexSet::empty(xs.len())));
        prop_assert!(!is_short(a.entries(), IndexSet::full(xs.len())));
    }

    #[test]
    fn short_sets_are_closed_under_subsets(xs in generic_weights(3..8)) {
        let a = w(&xs);
        for s in short_sets(a.entries(), 0).unwrap() {
            for t in s.subsets() {
                prop_assert!(is_short(a.entries(), t));
            }
        }
    }

    #[test]
    fn scaling_keeps_the_chamber(xs in generic_weights(3..8), p in 1i64..20, q in 1i64..20) {
        let a = w(&xs);
        let b = a.scaled(&rational(p, q)).unwrap();
        prop_assert_eq!(chamber_signature(a.entries()).unwrap(), chamber_signature(b.entries()).unwrap());
    }

    #[test]
    fn permutation_equivariance(xs in generic_weights(3..8), seed in any::<u64>()) {
        let n = xs.len();
        let mut sigma: Vec<usize> = (1..=n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            sigma.swap(i, (state >> 33) as usize % (i + 1));
        }
        let a = w(&xs);
        let b = a.permuted(&sigma);
        let mut mapped: Vec<IndexSet> = short_sets(a.entries(), 0)
            .unwrap()
            .iter()
            .map(|s| s.relabel_to_new(&sigma))
            .collect();
        mapped.sort();
        prop_assert_eq!(short_sets(b.entries(), 0).unwrap(), mapped);
    }

    #[test]
    fn genericity_matches_signature(xs in prop::collection::vec(1i64..6, 3..7)) {
        let a = w(&xs);
        prop_assert_eq!(is_generic(a.entries()), chamber_signature(a.entries()).is_ok());
    }

    #[test]
    fn index_set_algebra(n in 1usize..20, x in any::<u64>(), y in any::<u64>()) {
        let mask = (1u64 << n) - 1;
        let s = IndexSet::from_bits(n, x & mask).unwrap();
        let t = IndexSet::from_bits(n, y & mask).unwrap();
        prop_assert_eq!(s.complement().complement(), s);
        prop_assert_eq!(s.union(&t).complement(), s.complement().intersection(&t.complement()));
        prop_assert!(s.difference(&t).is_disjoint(&t));
        prop_assert_eq!(s.subsets().count(), 1usize << s.len());
        prop_assert_eq!(IndexSet::from_members(n, s.members()).unwrap(), s);
        prop_assert!(s.canonical().contains(1));
    }
}
