use hypoly_cohomology::*;
use hypoly_combinatorics::{
    is_generic, is_maximal_short, polygon_nonempty, short_sets, IndexSet, Rational, WeightVector,
};
use hypoly_intersection::{linear_form, pairing_matrix, Monomial, Poly};
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const P: u64 = 1_000_000_007;

fn w(xs: &[i64]) -> WeightVector {
    WeightVector::from_integers(xs).unwrap()
}

fn set(n: usize, m: &[usize]) -> IndexSet {
    IndexSet::from_members(n, m.iter().copied()).unwrap()
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn to_mod(q: &Rational) -> u64 {
    let m = |x: &hypoly_combinatorics::BigInt| -> u64 {
        let r = x % hypoly_combinatorics::BigInt::from(P);
        let r = if r < 0.into() { r + P } else { r };
        r.to_u64().unwrap()
    };
    m(q.numer()) * pow_mod(m(q.denom()), P - 2) % P
}

/// Dense Gaussian elimination mod a large prime.
fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], P - 2);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % P;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] + P - f * rows[rank][k] % P) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Graded dimensions by dense rank over `F_p`, independent of the library's echelon form.
fn oracle_dims(pres: &GradedRingPresentation) -> Vec<usize> {
    let n = pres.num_generators;
    (0..=pres.top_degree as u32)
        .map(|d| {
            let basis = Monomial::all_of_degree(n, d);
            let index: std::collections::HashMap<Vec<u32>, usize> =
                basis.iter().enumerate().map(|(i, m)| (m.exponents.clone(), i)).collect();
            let mut rows = Vec::new();
            for g in pres.relations() {
                let Some(e) = g.homogeneous_degree() else { continue };
                if e > d {
                    continue;
                }
                for mu in Monomial::all_of_degree(n, d - e) {
                    let prod = g * &Poly::monomial(n, mu.exponents.clone(), Rational::one());
                    let mut row = vec![0u64; basis.len()];
                    for (exps, coeff) in prod.raw_terms() {
                        row[index[exps]] = to_mod(coeff);
                    }
                    rows.push(row);
                }
            }
            basis.len() - rank_mod_p(rows)
        })
        .collect()
}

fn random_generic(rng: &mut ChaCha8Rng, n: usize) -> WeightVector {
    loop {
        let xs: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=15)).collect();
        if is_generic(w(&xs).entries()) {
            return w(&xs);
        }
    }
}

#[test]
fn ring_x_counts_and_dims() {
    let x4 = ring_x(4).unwrap();
    assert_eq!(x4.family("difference_of_squares").unwrap().relations.len(), 6);
    assert_eq!(x4.family("degree_n_minus_2").unwrap().relations.len(), 10);
    assert_eq!(graded_dims(&x4).dims, vec![1, 4]);
    assert_eq!(oracle_dims(&x4), vec![1, 4]);
    let x5 = ring_x(5).unwrap();
    assert_eq!(x5.num_relations(), 10 + 35);
    assert_eq!(graded_dims(&x5).dims, vec![1, 5, 11]);
    assert_eq!(oracle_dims(&x5), vec![1, 5, 11]);
    assert!(matches!(ring_x(3), Err(CohomologyError::TooSmall(3))));
}

#[test]
fn ring_x_matches_oracle_up_to_seven() {
    for n in 6..=7 {
        let pres = ring_x(n).unwrap();
        assert_eq!(graded_dims(&pres).dims, oracle_dims(&pres));
    }
}

#[test]
fn ring_x_top_dimension_counts_fixed_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 4..=7 {
        let top = graded_dims(&ring_x(n).unwrap()).top();
        for _ in 0..10 {
            let a = random_generic(&mut rng, n);
            let count = short_sets(a.entries(), 2).unwrap().len()
                + usize::from(polygon_nonempty(a.entries()).unwrap());
            assert_eq!(top, count);
        }
    }
}

#[test]
fn ring_us_examples() {
    let a = w(&[1, 1, 3, 3, 3]);
    let small = ring_us(a.entries(), set(5, &[1, 2])).unwrap();
    assert_eq!(graded_dims(&small).dims, vec![1, 4, 1]);
    assert_eq!(oracle_dims(&small), vec![1, 4, 1]);
    assert_eq!(small.family("identify_s").unwrap().relations.len(), 1);
    let big = ring_us(a.entries(), set(5, &[1, 2, 3])).unwrap();
    assert_eq!(graded_dims(&big).dims, vec![1, 1, 1]);
    assert!(verify_ideal_consistency(a.entries(), set(5, &[1, 2])).unwrap());
    assert!(verify_ideal_consistency(a.entries(), set(5, &[1, 2, 3])).unwrap());
    assert!(matches!(
        ring_us(a.entries(), set(5, &[3, 4])),
        Err(CohomologyError::SetNotShort { .. })
    ));
}

#[test]
fn ring_us_is_poincare_dual() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in 5..=7 {
        for _ in 0..4 {
            let a = random_generic(&mut rng, n);
            for s in short_sets(a.entries(), 2).unwrap() {
                let pres = ring_us(a.entries(), s).unwrap();
                assert_eq!(pres.family("identify_s").unwrap().relations.len(), s.len() - 1);
                let dims = graded_dims(&pres);
                assert!(dims.is_palindromic(), "{:?} {s} {:?}", a.to_strings(), dims.dims);
                assert_eq!(dims.top(), 1);
                assert_eq!(dims.dims[0], 1);
                if is_maximal_short(a.entries(), s) {
                    assert!(dims.dims.iter().all(|&d| d == 1));
                }
                if n <= 6 {
                    assert_eq!(dims.dims, oracle_dims(&pres));
                }
            }
        }
    }
}

#[test]
fn middle_pairing_has_full_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let a = random_generic(&mut rng, 5);
        for s in short_sets(a.entries(), 2).unwrap() {
            let basis: Vec<Poly> = (1..=5).map(|i| linear_form(5, &Rational::one(), &[i])).collect();
            let m = pairing_matrix(a.entries(), s, &basis).unwrap();
            let rows = m
                .iter()
                .map(|r| r.iter().map(|&x| to_mod(&Rational::from_integer(x.into()))).collect())
                .collect();
            let dims = graded_dims(&ring_us(a.entries(), s).unwrap());
            assert_eq!(rank_mod_p(rows), dims.dims[1]);
        }
    }
}

#[test]
fn relabeling_generators_keeps_dims() {
    let pres = ring_x(5).unwrap();
    let sigma = [3usize, 1, 4, 0, 2];
    let vars: Vec<Poly> = sigma.iter().map(|&i| Poly::var(5, i + 1)).collect();
    let mut moved = pres.clone();
    for fam in &mut moved.families {
        fam.relations = fam.relations.iter().map(|g| g.substitute(&vars)).collect();
    }
    assert_eq!(graded_dims(&moved).dims, graded_dims(&pres).dims);
}

#[test]
fn ideal_consistency_on_random_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in [5, 6] {
        for _ in 0..3 {
            let a = random_generic(&mut rng, n);
            for s in short_sets(a.entries(), 2).unwrap() {
                assert_eq!(ideal_consistency_witness(a.entries(), s).unwrap(), None);
            }
        }
    }
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(16))]

    #[test]
    fn ring_us_dims_are_relabeling_invariant(
        xs in proptest::collection::vec(1i64..12, 5..7),
        pick in 0usize..64,
        seed in 0u64..1000,
    ) {
        let a = w(&xs);
        proptest::prop_assume!(is_generic(a.entries()));
        let shorts = short_sets(a.entries(), 2).unwrap();
        let s = shorts[pick % shorts.len()];
        let n = xs.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sigma: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            sigma.swap(i, rng.gen_range(0..=i));
        }
        let b = a.permuted(&sigma);
        let t = s.relabel_to_new(&sigma);
        let x = graded_dims(&ring_us(a.entries(), s).unwrap());
        let y = graded_dims(&ring_us(b.entries(), t).unwrap());
        proptest::prop_assert_eq!(x, y);
    }
}
