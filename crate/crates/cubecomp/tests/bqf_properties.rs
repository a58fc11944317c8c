//! Property suite for reduction, composition and class groups.

mod common;

use common::*;
use cubecomp::bqf::{self, Bqf};
use cubecomp::oracle;
use cubecomp::Rational;
use rand::Rng;

#[test]
fn reduction_is_idempotent_and_transform_is_exact() {
    let mut rng = rng(101);
    let mut trials = 0;
    while trials < 500 {
        let a = rng.gen_range(1..=40i64);
        let b = rng.gen_range(-80..=80i64);
        let c = rng.gen_range(1..=40i64);
        let f = Bqf::from_i64(a, b, c);
        if !f.is_positive_definite() {
            continue;
        }
        trials += 1;
        let (r, m) = bqf::reduce(&f).unwrap();
        assert!(r.is_reduced());
        assert_eq!(f.apply(&m), r, "transform must reproduce the reduced form");
        assert_eq!(m.det(), int(1));
        let (r2, m2) = bqf::reduce(&r).unwrap();
        assert_eq!(r2, r);
        assert_eq!(m2, cubecomp::IMat2::identity());
    }
}

#[test]
fn random_translates_reduce_to_the_same_form() {
    let mut rng = rng(102);
    let ds = [-3i64, -4, -15, -23, -47, -71, -84];
    for _ in 0..200 {
        let d = ds[rng.gen_range(0..ds.len())];
        let f = random_form_of_disc(&mut rng, d, 6);
        let translated = f.apply(&random_sl2(&mut rng, 8));
        assert_eq!(
            bqf::reduce(&f).unwrap().0,
            bqf::reduce(&translated).unwrap().0
        );
    }
}

#[test]
fn composition_is_well_defined_on_classes() {
    let mut rng = rng(103);
    let ds = [-23i64, -47, -71, -84, -95];
    for _ in 0..100 {
        let d = ds[rng.gen_range(0..ds.len())];
        let f1 = random_form_of_disc(&mut rng, d, 5);
        let f2 = random_form_of_disc(&mut rng, d, 5);
        let base = bqf::compose(&f1, &f2).unwrap();
        let g1 = f1.apply(&random_sl2(&mut rng, 7));
        let g2 = f2.apply(&random_sl2(&mut rng, 7));
        assert_eq!(bqf::compose(&g1, &g2).unwrap(), base);
    }
}

#[test]
fn composition_matches_ideal_multiplication() {
    let mut rng = rng(104);
    for d in [-23i64, -47, -71, -84, -95, -119, -120, -231, -479] {
        let group = bqf::class_group(&int(d)).unwrap();
        for _ in 0..20 {
            let i = rng.gen_range(0..group.h());
            let j = rng.gen_range(0..group.h());
            let f1 = &group.reps[i];
            let f2 = &group.reps[j];
            assert_eq!(
                bqf::compose(f1, f2).unwrap(),
                oracle::compose_via_ideals(f1, f2).unwrap(),
                "d={d} i={i} j={j}"
            );
        }
    }
}

#[test]
fn class_groups_satisfy_group_axioms_in_range() {
    // Form class groups exist for non-fundamental discriminants too; the
    // full |d| <= 4000 run is in verify/acceptance, this is a broad slice.
    for d in discriminants(600) {
        let group = bqf::class_group(&int(d)).unwrap();
        assert!(group.is_abelian_group(), "d = {d}");
        assert_eq!(group.reps[0], bqf::s_of_d(&int(d)).unwrap());
    }
}

#[test]
fn class_numbers_match_bfs_oracle_small() {
    // Includes non-maximal orders such as d = -12, -16, -27.
    for d in discriminants(150) {
        let h = bqf::class_group(&int(d)).unwrap().h();
        assert_eq!(h, oracle::class_count_bfs(&int(d)), "d = {d}");
    }
}

#[test]
fn heegner_points_count_matches_class_number() {
    let half = Rational::new(int(1), int(2));
    let one = Rational::new(int(1), int(1));
    for d in fundamental_discriminants(500) {
        let pts = bqf::heegner_points(&int(d)).unwrap();
        let group = bqf::class_group(&int(d)).unwrap();
        assert_eq!(pts.len(), group.h(), "d = {d}");
        for p in &pts {
            assert!(p.im_sq > Rational::new(int(0), int(1)));
            assert!(p.form.is_reduced());
            // Reduced source forms put the point in the standard
            // fundamental domain: |re| <= 1/2 and |z|^2 = c/a >= 1.
            let abs_re = if p.re < Rational::new(int(0), int(1)) {
                -p.re.clone()
            } else {
                p.re.clone()
            };
            assert!(abs_re <= half, "d = {d}");
            assert!(&p.re * &p.re + &p.im_sq >= one, "d = {d}");
        }
    }
}

#[test]
fn torus_determinant_identity_random() {
    let mut rng = rng(105);
    let ds = [-3i64, -4, -7, -8, -20, -23];
    for _ in 0..300 {
        let d = ds[rng.gen_range(0..ds.len())];
        let x = Rational::new(int(rng.gen_range(-20..=20)), int(rng.gen_range(1..=9)));
        let y = Rational::new(int(rng.gen_range(-20..=20)), int(rng.gen_range(1..=9)));
        if x == Rational::new(int(0), int(1)) && y == Rational::new(int(0), int(1)) {
            continue;
        }
        let t = bqf::torus_element(&int(d), &x, &y).unwrap();
        let expected = &x * &x - &y * &y * Rational::new(int(d), int(4));
        assert_eq!(t.det(), expected);
    }
}
