//! Shared helpers for the property suites.
#![allow(dead_code)] // each test binary uses its own subset

use cubecomp::arith::{IMat2, Int};
use cubecomp::bqf::{self, Bqf};
use cubecomp::cube::{Cube, CubeTriple};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(x: i64) -> Int {
    Int::from(x)
}

pub fn random_cube(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Cube {
    Cube::from_i64(std::array::from_fn(|_| rng.gen_range(lo..=hi)))
}

/// A word of length `len` in T, T^{-1}, S: always determinant 1.
pub fn random_sl2(rng: &mut ChaCha8Rng, len: usize) -> IMat2 {
    let t = IMat2::from_i64([[1, 1], [0, 1]]);
    let ti = IMat2::from_i64([[1, -1], [0, 1]]);
    let s = IMat2::from_i64([[0, -1], [1, 0]]);
    let mut m = IMat2::identity();
    for _ in 0..len {
        let g = match rng.gen_range(0..3) {
            0 => &t,
            1 => &ti,
            _ => &s,
        };
        m = m.mul(g);
    }
    m
}

pub fn random_sl2_triple(rng: &mut ChaCha8Rng, len: usize) -> CubeTriple {
    CubeTriple {
        g1: random_sl2(rng, len),
        g2: random_sl2(rng, len),
        g3: random_sl2(rng, len),
    }
}

/// A random invertible integer 2×2 with entries in a small window.
pub fn random_invertible(rng: &mut ChaCha8Rng, bound: i64) -> IMat2 {
    loop {
        let m = IMat2::from_i64(std::array::from_fn(|_| {
            std::array::from_fn(|_| rng.gen_range(-bound..=bound))
        }));
        if m.det() != int(0) {
            return m;
        }
    }
}

/// A not-necessarily-reduced representative of a random class of
/// discriminant `d`.
pub fn random_form_of_disc(rng: &mut ChaCha8Rng, d: i64, word: usize) -> Bqf {
    let group = bqf::class_group(&int(d)).unwrap();
    let rep = group.reps[rng.gen_range(0..group.h())].clone();
    rep.apply(&random_sl2(rng, word))
}

/// Fundamental discriminants `d < 0` with `|d| <= limit`.
pub fn fundamental_discriminants(limit: i64) -> Vec<i64> {
    (1..=limit)
        .map(|n| -n)
        .filter(|d| bqf::is_fundamental(&int(*d)))
        .collect()
}

/// All negative discriminants (0 or 1 mod 4) with `|d| <= limit`,
/// fundamental or not.
pub fn discriminants(limit: i64) -> Vec<i64> {
    (1..=limit)
        .map(|n| -n)
        .filter(|d| d.rem_euclid(4) == 0 || d.rem_euclid(4) == 1)
        .collect()
}
