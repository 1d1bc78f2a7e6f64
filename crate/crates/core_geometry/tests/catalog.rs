use hypoly_combinatorics::{is_generic, polygon_nonempty, short_sets, IndexSet, WeightVector};
use hypoly_core_geometry::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn w(xs: &[i64]) -> WeightVector {
    WeightVector::from_integers(xs).unwrap()
}

fn set(n: usize, m: &[usize]) -> IndexSet {
    IndexSet::from_members(n, m.iter().copied()).unwrap()
}

#[test]
fn four_gon_in_the_polygon_chamber() {
    let a = w(&[1, 2, 2, 2]);
    let fixed = fixed_components(a.entries()).unwrap();
    assert_eq!(fixed.len(), 4);
    assert_eq!(fixed[0].kind, FixedKind::PolygonSpace);
    assert_eq!(fixed[0].morse_index, 0);
    assert!(fixed[1..].iter().all(|f| f.kind == FixedKind::Xs && f.morse_index == 2 && f.projective_dim == Some(0)));
    let core = core_components(a.entries()).unwrap();
    assert_eq!(core.len(), 3);
    assert!(core.iter().all(|c| c.is_projective_space && c.complex_dim == 1));
    assert_eq!(derived_polygon_poincare(a.entries()).unwrap().coefficients, vec![1, 1]);
}

#[test]
fn four_gon_in_the_null_chamber() {
    let a = w(&[10, 1, 1, 2]);
    let fixed = fixed_components(a.entries()).unwrap();
    assert!(fixed.iter().all(|f| f.kind == FixedKind::Xs));
    let minimum: Vec<_> = fixed.iter().filter(|f| f.morse_index == 0).collect();
    assert_eq!(minimum.len(), 1);
    assert_eq!(minimum[0].set, Some(set(4, &[2, 3, 4])));
    assert_eq!(minimum[0].projective_dim, Some(1));
    assert_eq!(fixed.iter().filter(|f| f.morse_index == 2).count(), 3);
    assert_eq!(fixed_point_sum(a.entries()).unwrap(), poincare_x(4).unwrap());
    assert!(derived_polygon_poincare(a.entries()).unwrap().is_zero());
    assert_eq!(core_components(a.entries()).unwrap().len(), 4);
}

#[test]
fn five_gon_catalog() {
    let a = w(&[1, 1, 3, 3, 3]);
    let fixed = fixed_components(a.entries()).unwrap();
    let pt = fixed.iter().find(|f| f.set == Some(set(5, &[1, 2]))).unwrap();
    assert_eq!((pt.projective_dim, pt.morse_index), (Some(0), 4));
    let core = core_components(a.entries()).unwrap();
    assert_eq!(core.len(), 10);
    let projective: Vec<_> = core.iter().filter(|c| c.is_projective_space).map(|c| c.set).collect();
    assert_eq!(projective, vec![set(5, &[1, 2, 3]), set(5, &[1, 2, 4]), set(5, &[1, 2, 5])]);
    assert_eq!(derived_polygon_poincare(a.entries()).unwrap().coefficients, vec![1, 2, 1]);
}

#[test]
fn empty_polygon_space_still_has_cores() {
    let a = w(&[10, 1, 1, 2, 3]);
    assert!(core_components(a.entries()).unwrap().iter().any(|c| c.set == set(5, &[4, 5])));
}

#[test]
fn intersection_classes() {
    let a = w(&[1, 1, 3, 3, 3]);
    let c = |s: &[usize], t: &[usize]| core_intersection(a.entries(), set(5, s), set(5, t)).unwrap();
    assert_eq!(c(&[1, 3], &[1, 4]), CoreIntersectionClass::Empty);
    assert_eq!(c(&[1, 3], &[2, 3]), CoreIntersectionClass::InsideUnion { union: set(5, &[1, 2, 3]) });
    assert_eq!(
        c(&[1, 2], &[1, 2, 4]),
        CoreIntersectionClass::FlagIntersection {
            smaller: set(5, &[1, 2]),
            larger: set(5, &[1, 2, 4]),
            fixed_locus_projective_dim: 0
        }
    );
    assert_eq!(c(&[1, 3], &[2, 4]), CoreIntersectionClass::PolygonIntersection);
    assert!(matches!(
        core_intersection(a.entries(), set(5, &[3, 4]), set(5, &[1, 2])),
        Err(CoreGeometryError::SetNotShort { .. })
    ));
    assert!(matches!(
        core_intersection(a.entries(), set(5, &[1, 2]), set(5, &[1, 2])),
        Err(CoreGeometryError::SameSet { .. })
    ));
}

#[test]
fn poincare_of_the_total_space() {
    assert_eq!(poincare_x(4).unwrap().coefficients, vec![1, 4]);
    assert_eq!(poincare_x(5).unwrap().coefficients, vec![1, 5, 11]);
    for n in 4..=8 {
        assert_eq!(poincare_x(n).unwrap().coefficients[0], 1);
    }
}

#[test]
fn morse_decomposition_is_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in 4..=8 {
        let px = poincare_x(n).unwrap();
        for _ in 0..25 {
            let xs: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=30)).collect();
            let a = w(&xs);
            if !is_generic(a.entries()) {
                continue;
            }
            let count = short_sets(a.entries(), 2).unwrap().len() + usize::from(polygon_nonempty(a.entries()).unwrap());
            assert_eq!(px.top() as usize, count);
            let poly = derived_polygon_poincare(a.entries()).unwrap();
            assert!(poly.is_palindromic());
            assert_eq!(poly.is_zero(), !polygon_nonempty(a.entries()).unwrap());
            let fixed = fixed_components(a.entries()).unwrap();
            assert_eq!(fixed.iter().filter(|f| f.morse_index == 0).count(), 1);
            assert!(fixed.iter().all(|f| f.morse_index % 2 == 0 && f.morse_index <= 2 * (n - 3)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn intersection_is_symmetric(xs in prop::collection::vec(1i64..20, 5..8), i in 0usize..100, j in 0usize..100) {
        let a = w(&xs);
        prop_assume!(is_generic(a.entries()));
        let shorts = short_sets(a.entries(), 2).unwrap();
        let (s, t) = (shorts[i % shorts.len()], shorts[j % shorts.len()]);
        prop_assume!(s != t);
        prop_assert_eq!(
            core_intersection(a.entries(), s, t).unwrap(),
            core_intersection(a.entries(), t, s).unwrap()
        );
    }
}
