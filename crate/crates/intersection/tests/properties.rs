use hypoly_combinatorics::{
    chamber_signature, is_generic, rational, short_sets, IndexSet, Rational, WeightVector,
};
use hypoly_intersection::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn w(xs: &[i64]) -> WeightVector {
    WeightVector::from_integers(xs).unwrap()
}

fn set(n: usize, m: &[usize]) -> IndexSet {
    IndexSet::from_members(n, m.iter().copied()).unwrap()
}

fn random_generic(rng: &mut ChaCha8Rng, n: usize, max: i64) -> WeightVector {
    loop {
        let xs: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=max)).collect();
        let a = w(&xs);
        if is_generic(a.entries()) {
            return a;
        }
    }
}

fn all_integrals(a: &[Rational], s: IndexSet) -> Vec<i64> {
    let n = a.len();
    Monomial::all_of_degree(n, n as u32 - 3)
        .iter()
        .map(|m| integrate(a, s, m).unwrap())
        .collect()
}

#[test]
fn errors_are_reported() {
    let a = w(&[1, 1, 3, 3, 3]);
    assert!(matches!(
        integrate(&a, set(5, &[1, 2]), &Monomial::product(5, &[1])),
        Err(IntersectionError::DegreeMismatch { expected: 2, found: 1 })
    ));
    assert!(matches!(
        integrate(&a, set(5, &[3, 4]), &Monomial::product(5, &[1, 1])),
        Err(IntersectionError::SetNotShort { .. })
    ));
    assert!(matches!(
        integrate(&a, set(5, &[1]), &Monomial::product(5, &[1, 1])),
        Err(IntersectionError::SetNotShort { .. })
    ));
    assert!(matches!(
        integrate(&w(&[1, 1, 1, 1]), set(4, &[1, 2]), &Monomial::product(4, &[1])),
        Err(IntersectionError::Combinatorics(_))
    ));
}

#[test]
fn triangular_examples() {
    assert!(triangular_sets(&w(&[1, 1, 100])).unwrap().sets.is_empty());
    assert_eq!(triangular_sets(&w(&[1, 1, 1])).unwrap().sets, vec![set(3, &[3])]);
    assert_eq!(polygon_c1_power(&w(&[1, 1, 100])).unwrap(), 0);
}

#[test]
fn atilde_shrinks_as_s_grows() {
    let a: Vec<Rational> = w(&[1, 2, 3, 4, 5, 9]).into_entries();
    let small = family_atilde(&a, set(6, &[1, 2, 3]), 2).unwrap();
    let mut big_a = a.clone();
    big_a[0] = rational(20, 1);
    let big = family_atilde(&big_a, set(6, &[1, 2, 3]), 2).unwrap();
    assert!(big.sets.iter().all(|j| small.sets.contains(j)));
    assert!(big.sets.is_empty());
}

#[test]
fn single_class_pairing_matches_integrate() {
    let a = w(&[1, 1, 3, 3, 3]);
    let s = set(5, &[1, 2]);
    let c1 = linear_form(5, &rational(1, 1), &[1]);
    let m = pairing_matrix(&a, s, &[c1]).unwrap();
    assert_eq!(m, vec![vec![integrate(&a, s, &Monomial::product(5, &[1, 1])).unwrap()]]);
}

#[test]
fn permuted_basis_permutes_matrix() {
    let a = w(&[1, 1, 3, 3, 3]);
    let s = set(5, &[1, 2]);
    let half = rational(1, 2);
    let basis = vec![
        linear_form(5, &half, &[1, 3, 4, 5]),
        linear_form(5, &-half.clone(), &[1, 3]),
        linear_form(5, &-half.clone(), &[1, 4]),
        linear_form(5, &-half.clone(), &[1, 5]),
    ];
    let m = pairing_matrix(&a, s, &basis).unwrap();
    let order = [2, 0, 3, 1];
    let permuted: Vec<Poly> = order.iter().map(|&i| basis[i].clone()).collect();
    let p = pairing_matrix(&a, s, &permuted).unwrap();
    for r in 0..4 {
        for c in 0..4 {
            assert_eq!(p[r][c], m[order[r]][order[c]]);
        }
    }
}

#[test]
fn non_integral_pairing_is_rejected() {
    let a = w(&[1, 1, 3, 3, 3]);
    let third = linear_form(5, &rational(1, 3), &[1]);
    assert!(matches!(
        pairing_matrix(&a, set(5, &[1, 2]), &[third]),
        Err(IntersectionError::NonIntegerPairing { .. })
    ));
}

#[test]
fn recursion_agrees_on_every_monomial() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [5, 6] {
        for _ in 0..6 {
            let a = random_generic(&mut rng, n, 12);
            for s in short_sets(a.entries(), 2).unwrap() {
                for m in Monomial::all_of_degree(n, n as u32 - 3) {
                    assert_eq!(
                        integrate(&a, s, &m).unwrap(),
                        integrate_recursive(&a, s, &m).unwrap(),
                        "α = {:?}, S = {s}, m = {:?}",
                        a.to_strings(),
                        m.exponents
                    );
                }
            }
        }
    }
}

#[test]
fn chamber_constancy() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in [5, 6] {
        for _ in 0..4 {
            let a = random_generic(&mut rng, n, 9);
            let sig = chamber_signature(a.entries()).unwrap();
            let mut others = Vec::new();
            while others.len() < 3 {
                let xs: Vec<i64> = a.iter().map(|x| {
                    let base: i64 = (x * Rational::from_integer(100.into())).to_integer().try_into().unwrap();
                    base + rng.gen_range(-40..=40)
                }).collect();
                let b = w(&xs);
                if is_generic(b.entries()) && chamber_signature(b.entries()).unwrap() == sig {
                    others.push(b);
                }
            }
            for s in short_sets(a.entries(), 2).unwrap() {
                let base = all_integrals(a.entries(), s);
                for b in &others {
                    assert_eq!(all_integrals(b.entries(), s), base);
                }
            }
        }
    }
}

#[test]
fn folding_claims_hold_before_canonicalization() {
    let a = w(&[1, 2, 4, 5, 7, 2]);
    for s in short_sets(a.entries(), 2).unwrap() {
        let p = s.min_index().unwrap();
        let q = s.members().nth(1).unwrap();
        let j = s.complement().min_index().unwrap();
        let rest: Vec<usize> = s.complement().members().filter(|&k| k != j).take(1).collect();
        let base = |f: &[usize]| integrate(&a, s, &Monomial::product(6, f)).unwrap();
        let mut pp = vec![p, p];
        pp.extend(&rest);
        let mut pq = vec![p, q];
        pq.extend(&rest);
        let mut jj = vec![j, j];
        jj.extend(&rest);
        assert_eq!(base(&pp), base(&pq));
        assert_eq!(base(&pp), base(&jj));
        if s.len() == 5 {
            let mut pj = vec![p, j];
            pj.extend(&rest);
            assert_eq!(base(&pj), -base(&pp));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scaling_invariance(xs in prop::collection::vec(1i64..15, 5..7), p in 1i64..9, q in 1i64..9) {
        let a = w(&xs);
        prop_assume!(is_generic(a.entries()));
        let b = a.scaled(&rational(p, q)).unwrap();
        for s in short_sets(a.entries(), 2).unwrap() {
            prop_assert_eq!(all_integrals(a.entries(), s), all_integrals(b.entries(), s));
        }
    }

    #[test]
    fn permutation_equivariance(xs in prop::collection::vec(1i64..15, 5..7), seed in any::<u64>()) {
        let a = w(&xs);
        prop_assume!(is_generic(a.entries()));
        let n = xs.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sigma: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            sigma.swap(i, rng.gen_range(0..=i));
        }
        let b = a.permuted(&sigma);
        for s in short_sets(a.entries(), 2).unwrap() {
            let t = s.relabel_to_new(&sigma);
            for m in Monomial::all_of_degree(n, n as u32 - 3) {
                let moved = Monomial::new(sigma.iter().map(|&old| m.exponent(old)).collect());
                prop_assert_eq!(integrate(&a, s, &m).unwrap(), integrate(&b, t, &moved).unwrap());
            }
        }
    }
}
