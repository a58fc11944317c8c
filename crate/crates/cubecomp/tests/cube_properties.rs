//! Property suite for cubes: the invariant identity, equivariance, class
//! invariance, the triple law, the desk-scale orbit count, and orbit
//! search.

mod common;

use common::*;
use cubecomp::bqf;
use cubecomp::cube::{self, Cube, CubeTriple, OrbitReduction};
use cubecomp::oracle;
use rand::Rng;
use std::collections::HashSet;

#[test]
fn slice_discriminants_agree_on_random_cubes() {
    let mut rng = rng(201);
    for _ in 0..10_000 {
        let a = random_cube(&mut rng, -50, 50);
        let d1 = a.qform(1).unwrap().discriminant();
        let d2 = a.qform(2).unwrap().discriminant();
        let d3 = a.qform(3).unwrap().discriminant();
        assert!(d1 == d2 && d2 == d3, "cube {a:?}");
        assert_eq!(a.invariant(), d1);
    }
}

#[test]
fn closed_formulas_match_evaluation_oracle() {
    let mut rng = rng(202);
    for _ in 0..10_000 {
        let a = random_cube(&mut rng, -50, 50);
        for i in 1..=3u8 {
            let (m, n) = a.slice(i).unwrap();
            assert_eq!(a.qform(i).unwrap(), oracle::qform_from_slices(&m, &n));
        }
    }
}

#[test]
fn invariant_is_equivariant_with_character() {
    let mut rng = rng(203);
    for _ in 0..10_000 {
        let a = random_cube(&mut rng, -20, 20);
        let t = CubeTriple {
            g1: random_invertible(&mut rng, 3),
            g2: random_invertible(&mut rng, 3),
            g3: random_invertible(&mut rng, 3),
        };
        assert_eq!(
            a.act(&t).invariant(),
            cube::character(&t) * a.invariant(),
            "cube {a:?}, triple {t:?}"
        );
    }
}

#[test]
fn slice_classes_are_orbit_invariants() {
    let mut rng = rng(204);
    let ds = [-23i64, -47, -71];
    for _ in 0..60 {
        let d = ds[rng.gen_range(0..ds.len())];
        let f1 = random_form_of_disc(&mut rng, d, 3);
        let f2 = random_form_of_disc(&mut rng, d, 3);
        let a = cube::cube_from_pair(&f1, &f2).unwrap();
        let t = random_sl2_triple(&mut rng, 4);
        let b = a.act(&t);
        for i in 1..=3u8 {
            assert_eq!(
                bqf::reduce(&a.qform(i).unwrap()).unwrap().0,
                bqf::reduce(&b.qform(i).unwrap()).unwrap().0,
                "slice {i}"
            );
        }
    }
}

#[test]
fn triple_law_holds_for_constructions_and_translates() {
    let mut rng = rng(205);
    for d in [-3i64, -4, -7, -8, -11, -15, -20, -23, -47] {
        let group = bqf::class_group(&int(d)).unwrap();
        for f1 in &group.reps {
            for f2 in &group.reps {
                let a = cube::cube_from_pair(f1, f2).unwrap();
                assert!(cube::triple_law_check(&a).unwrap(), "d={d}");
                for _ in 0..3 {
                    let b = a.act(&random_sl2_triple(&mut rng, 3));
                    assert!(cube::triple_law_check(&b).unwrap(), "d={d} translate");
                }
            }
        }
    }
}

#[test]
fn pair_construction_hits_h_squared_distinct_class_pairs() {
    for d in [-3i64, -4, -7, -8, -11] {
        let group = bqf::class_group(&int(d)).unwrap();
        let h = group.h();
        let mut pairs = HashSet::new();
        for f1 in &group.reps {
            for f2 in &group.reps {
                let a = cube::cube_from_pair(f1, f2).unwrap();
                let key = (
                    bqf::reduce(&a.qform(2).unwrap()).unwrap().0,
                    bqf::reduce(&a.qform(3).unwrap()).unwrap().0,
                );
                pairs.insert(key);
            }
        }
        assert_eq!(pairs.len(), h * h, "d = {d}");
    }
}

#[test]
fn orbit_reduce_identifies_small_translates() {
    // Full closure is only feasible at small bounds: the bounded component
    // grows like bound^4 (bound 30 already needs minutes and gigabytes).
    // Bound 6 closes in well under a second and identifies translates.
    let mut rng = rng(206);
    let base = cube::cube_from_pair(
        &bqf::s_of_d(&int(-4)).unwrap(),
        &bqf::s_of_d(&int(-4)).unwrap(),
    )
    .unwrap();
    let r0 = base.orbit_reduce(6);
    let OrbitReduction::Minimal(m0) = r0 else {
        panic!("component of the base cube at bound 6 must close");
    };
    assert_eq!(m0.invariant(), base.invariant());
    for _ in 0..5 {
        let t = random_sl2_triple(&mut rng, 2);
        let moved = base.act(&t);
        match moved.orbit_reduce(6) {
            OrbitReduction::Minimal(m) => assert_eq!(m, m0, "translate {t:?}"),
            OrbitReduction::Inconclusive { .. } => {
                panic!("translate at bound 6 must close")
            }
        }
    }
}

#[test]
fn orbit_reduce_deterministic() {
    let base = cube::cube_from_pair(
        &bqf::Bqf::from_i64(2, 1, 3),
        &bqf::Bqf::from_i64(2, -1, 3),
    )
    .unwrap();
    assert_eq!(base.orbit_reduce(5), base.orbit_reduce(5));
}

#[test]
fn zero_cube_is_an_orbit_fixed_point() {
    assert_eq!(
        Cube::zero().orbit_reduce(50),
        OrbitReduction::Minimal(Cube::zero())
    );
}
