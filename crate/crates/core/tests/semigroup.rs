mod common;

use horo_core::lattice::AffineLattice;
use horo_core::rational;
use horo_core::semigroup::{analogous, completion_set, saturation_check, saturation_report, sumset, FiniteSet};
use proptest::prelude::*;

fn set(dim: usize) -> impl Strategy<Value = FiniteSet> {
    prop::collection::vec(prop::collection::vec(0i64..=4, dim), 1..=5).prop_map(|p| FiniteSet::new(p).unwrap())
}

fn set_in(points: &[&[i64]]) -> FiniteSet {
    FiniteSet::new(points.iter().map(|p| p.to_vec())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hull_is_a_homomorphism(a in set(2), b in set(2)) {
        let lhs = sumset(&a, &b).unwrap().hull();
        prop_assert_eq!(lhs, a.hull().minkowski_sum(&b.hull()).unwrap());
    }

    #[test]
    fn hull_is_a_homomorphism_in_space(a in set(3), b in set(3)) {
        prop_assert_eq!(sumset(&a, &b).unwrap().hull(), a.hull().minkowski_sum(&b.hull()).unwrap());
    }

    #[test]
    fn analogy_respects_addition(a in set(2), c in set(2)) {
        let b = completion_set(&a);
        prop_assert!(analogous(&a, &b));
        prop_assert!(analogous(&sumset(&a, &c).unwrap(), &sumset(&b, &c).unwrap()));
    }

    #[test]
    fn completion_is_idempotent_and_extensive(a in set(3)) {
        let c = completion_set(&a);
        prop_assert!(a.points().is_subset(c.points()));
        prop_assert_eq!(completion_set(&c), c);
    }

    #[test]
    fn saturation_holds(a in set(1)) {
        prop_assert!(saturation_check(&a, 1).unwrap());
    }

    #[test]
    fn saturation_holds_in_the_plane(a in set(2)) {
        prop_assert!(saturation_check(&a, 2).unwrap());
    }
}

#[test]
fn sumset_examples() {
    assert_eq!(
        sumset(&set_in(&[&[0], &[2]]), &set_in(&[&[0], &[1], &[2]])).unwrap(),
        set_in(&[&[0], &[1], &[2], &[3], &[4]])
    );
    let a = set_in(&[&[3, 1], &[0, 2]]);
    assert_eq!(sumset(&a, &set_in(&[&[0, 0]])).unwrap(), a);
    let collinear = sumset(&set_in(&[&[0, 0], &[1, 2]]), &set_in(&[&[0, 0], &[1, 2], &[2, 4]])).unwrap();
    assert_eq!(collinear, set_in(&[&[0, 0], &[1, 2], &[2, 4], &[3, 6]]));
}

#[test]
fn completion_examples() {
    assert_eq!(completion_set(&set_in(&[&[0], &[3]])).len(), 4);
    assert_eq!(completion_set(&set_in(&[&[0, 0], &[1, 2]])).len(), 2);
    let tri = set_in(&[&[0, 0], &[0, 1], &[1, 1]]);
    assert_eq!(completion_set(&tri), tri);
    assert!(analogous(&set_in(&[&[0], &[2]]), &set_in(&[&[0], &[1], &[2]])));
    assert!(!analogous(&set_in(&[&[0], &[2]]), &set_in(&[&[0], &[3]])));
}

#[test]
fn completion_in_a_coset() {
    let odd = AffineLattice::new(rational::ints(&[1]), vec![vec![2]]).unwrap();
    let a = FiniteSet::in_lattice([vec![1], vec![7]], odd).unwrap();
    assert_eq!(completion_set(&a).len(), 4);
}

#[test]
fn saturation_examples() {
    assert!(saturation_check(&set_in(&[&[0], &[2]]), 1).unwrap());
    assert!(saturation_check(&set_in(&[&[0, 0], &[1, 2]]), 2).unwrap());
    for n in 0..4 {
        assert!(saturation_check(&FiniteSet::new([vec![0; n.max(1)]]).unwrap(), n).unwrap());
    }
}

#[test]
fn sumset_reading_can_differ() {
    // A non-normal lattice tetrahedron: its 2-fold sumset misses lattice points of its double.
    let reeve = set_in(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]);
    let r = saturation_report(&reeve, 3).unwrap();
    assert!(r.dilation_reading);
    assert!(r.readings_differ);
}

#[test]
fn json_shape() {
    let a = set_in(&[&[1, 0], &[0, 1]]);
    let text = serde_json::to_string(&a).unwrap();
    assert!(text.starts_with(r#"{"points":[[0,1],[1,0]]"#));
    let back: FiniteSet = serde_json::from_str(&text).unwrap();
    assert_eq!(back, a);
    let plain: FiniteSet = serde_json::from_str(r#"{"points":[[2],[0]]}"#).unwrap();
    assert_eq!(plain, set_in(&[&[0], &[2]]));
}
