mod common;

use common::*;
use horo_core::lattice::AffineLattice;
use horo_core::polarization::{integrate, mixed_integral, mixed_volume, mixed_volume_parallel, BodySystem};
use horo_core::{Polynomial, Polytope};
use proptest::prelude::*;

fn planar_points() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-2i64..=2, -2i64..=2), 1..=5)
}

fn body(pts: &[(i64, i64)]) -> Polytope {
    Polytope::from_lattice_points(&pts.iter().map(|&(x, y)| vec![x, y]).collect::<Vec<_>>()).unwrap()
}

fn mv(a: &Polytope, b: &Polytope) -> horo_core::Rational {
    mixed_volume(&BodySystem::standard(vec![a.clone(), b.clone()]).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planar_mixed_volume_matches_shoelace_oracle(a in planar_points(), b in planar_points()) {
        // 2! V(P, Q) = area(P + Q) - area(P) - area(Q)
        prop_assert_eq!(mv(&body(&a), &body(&b)) * rat(2), bk_count(&a, &b));
    }

    #[test]
    fn mixed_volume_is_symmetric_and_additive(a in planar_points(), b in planar_points(), c in planar_points()) {
        let (p, q, r) = (body(&a), body(&b), body(&c));
        prop_assert_eq!(mv(&p, &q), mv(&q, &p));
        prop_assert_eq!(mv(&p.minkowski_sum(&q).unwrap(), &r), mv(&p, &r) + mv(&q, &r));
    }

    #[test]
    fn mixed_integral_diagonal_is_the_integral(a in planar_points()) {
        let p = body(&a);
        let f = Polynomial::var(2, 0).add(&Polynomial::var(2, 1).scale(&rat(3)));
        let sys = BodySystem::standard(vec![p.clone(); 3]).unwrap();
        let expect = if p.dim() == 2 { integrate(&f, &p, &AffineLattice::standard(2)).unwrap() } else { rat(0) };
        prop_assert_eq!(mixed_integral(&f, &sys).unwrap(), expect);
    }

    #[test]
    fn workers_do_not_change_results(pts in prop::collection::vec(prop::collection::vec(0i64..=2, 3), 1..=4), workers in 1usize..=6) {
        let p = Polytope::from_lattice_points(&pts).unwrap();
        let cube = Polytope::from_lattice_points(&[vec![0, 0, 0], vec![1, 1, 1], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let sys = BodySystem::standard(vec![p, cube.clone(), cube]).unwrap();
        prop_assert_eq!(mixed_volume_parallel(&sys, workers).unwrap(), mixed_volume(&sys).unwrap());
    }
}

#[test]
fn classic_values() {
    let square = body(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
    let simplex = body(&[(0, 0), (1, 0), (0, 1)]);
    assert_eq!(mv(&square, &square), rat(1));
    assert_eq!(mv(&simplex, &simplex), horo_core::rational::frac(1, 2));
    assert_eq!(mv(&square, &simplex), rat(1));
    let seg_x = body(&[(0, 0), (3, 0)]);
    let seg_y = body(&[(0, 0), (0, 2)]);
    assert_eq!(mv(&seg_x, &seg_y), rat(3));
    assert_eq!(mv(&seg_x, &seg_x), rat(0));
}

#[test]
fn bodies_in_a_subspace() {
    // segments parallel to (1,1) in the plane, measured in the lattice Z(1,1)
    let diag = AffineLattice::linear(2, vec![vec![1, 1]]).unwrap();
    let seg = Polytope::from_lattice_points(&[vec![0, 0], vec![2, 2]]).unwrap();
    let moved = Polytope::from_lattice_points(&[vec![1, 0], vec![2, 1]]).unwrap();
    let sys = BodySystem::new(vec![seg.clone()], diag.clone()).unwrap();
    assert_eq!(mixed_volume(&sys).unwrap(), rat(2));
    let sys = BodySystem::new(vec![moved], diag.clone()).unwrap();
    assert_eq!(mixed_volume(&sys).unwrap(), rat(1));
    let off = Polytope::from_lattice_points(&[vec![0, 0], vec![1, 0]]).unwrap();
    assert!(BodySystem::new(vec![off], diag).is_err());
}
