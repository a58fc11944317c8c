//! Property suite for local square-root counting.

mod common;

use common::*;
use cubecomp::arith;
use cubecomp::localcount::{self, sqrt_count_mod, sqrt_count_mod_fast, sqrt_count_mod_scan};

fn odd_primes_below(limit: i64) -> Vec<i64> {
    (3..limit).filter(|&p| arith::is_prime(&int(p))).collect()
}

#[test]
fn hensel_lifting_preserves_counts() {
    // For odd p not dividing d, roots mod p^k are in bijection with roots
    // mod p.
    for d in fundamental_discriminants(200) {
        for p in odd_primes_below(50) {
            if d % p == 0 {
                continue;
            }
            let base = sqrt_count_mod(&int(d), &int(p)).unwrap();
            for k in 1..=4u32 {
                let m = int(p.pow(k));
                assert_eq!(
                    sqrt_count_mod(&int(d), &m).unwrap(),
                    base,
                    "d={d} p={p} k={k}"
                );
            }
        }
    }
}

#[test]
fn counts_follow_the_character() {
    for d in fundamental_discriminants(200) {
        for p in odd_primes_below(50) {
            if d % p == 0 {
                continue;
            }
            let chi = arith::kronecker(&int(d), &int(p)).unwrap();
            assert_eq!(
                sqrt_count_mod(&int(d), &int(p)).unwrap(),
                int(1 + i64::from(chi)),
                "d={d} p={p}"
            );
        }
    }
}

#[test]
fn counts_factor_through_crt() {
    for d in fundamental_discriminants(120) {
        for p in odd_primes_below(30) {
            for k in 1..=2u32 {
                let pk = int(p.pow(k));
                let lhs = sqrt_count_mod(&int(d), &(int(4) * &pk)).unwrap();
                let rhs = sqrt_count_mod(&int(d), &int(4)).unwrap()
                    * sqrt_count_mod(&int(d), &pk).unwrap();
                assert_eq!(lhs, rhs, "d={d} p={p} k={k}");
            }
        }
    }
}

#[test]
fn fast_path_agrees_with_scan() {
    for d in -60i64..=60 {
        for m in 1i64..=400 {
            assert_eq!(
                sqrt_count_mod_fast(&int(d), &int(m)).unwrap(),
                sqrt_count_mod_scan(&int(d), &int(m)).unwrap(),
                "d={d} m={m}"
            );
        }
    }
    // A few larger mixed moduli.
    for (d, m) in [(-23i64, 4 * 27 * 25i64), (-84, 4096), (-47, 9 * 49 * 4), (17, 3600)] {
        assert_eq!(
            sqrt_count_mod_fast(&int(d), &int(m)).unwrap(),
            sqrt_count_mod_scan(&int(d), &int(m)).unwrap(),
            "d={d} m={m}"
        );
    }
}

#[test]
fn local_orbit_counts_compose_scan_results() {
    for d in [-23i64, -4, -3, -84] {
        for p in [3i64, 5, 7, 11] {
            for k in 0..=2u32 {
                let expected =
                    sqrt_count_mod_scan(&int(d), &int(4 * p.pow(k))).unwrap();
                assert_eq!(
                    localcount::local_orbit_count(&int(d), &int(p), k).unwrap(),
                    expected
                );
            }
        }
    }
}

#[test]
fn euler_factors_multiply_against_kronecker() {
    for d in fundamental_discriminants(60) {
        for p in odd_primes_below(30) {
            let factor = localcount::euler_factor_chi(&int(d), &int(p)).unwrap();
            let chi = arith::kronecker(&int(d), &int(p)).unwrap();
            // (1 - chi/p) * factor = 1.
            let one = cubecomp::Rational::new(int(1), int(1));
            let term = &one - cubecomp::Rational::new(int(i64::from(chi)), int(p));
            assert_eq!(term * factor, one);
        }
    }
}
