//! Property suite tying the counting series to the class groups.

mod common;

use common::*;
use cubecomp::bqf;
use cubecomp::zeta::{self, CoeffTable};
use cubecomp::Rational;

#[test]
fn coefficients_dominate_the_primitive_class_count() {
    // c(n) ≥ (2/w)·h(−n) for fundamental −n, with equality when no
    // imprimitive forms exist (always, for fundamental discriminants).
    let table = CoeffTable::build(4000);
    for d in fundamental_discriminants(4000) {
        let n = (-d) as u64;
        let h = bqf::class_group(&int(d)).unwrap().h();
        let w = bqf::unit_count(&int(d));
        let weighted = Rational::new(int(2 * h as i64), int(i64::from(w)));
        let c = table.coeff(n);
        assert!(c >= weighted, "d = {d}");
        assert_eq!(c, weighted, "fundamental discriminants have no imprimitive forms (d = {d})");
    }
}

#[test]
fn nonzero_coefficients_sit_on_discriminants() {
    let table = CoeffTable::build(500);
    for n in 1..=500u64 {
        let c = table.coeff(n);
        let rem = n % 4;
        // -n ≡ 0, 1 (mod 4) means n ≡ 0, 3 (mod 4).
        if !(rem == 0 || rem == 3) {
            assert_eq!(c, Rational::new(int(0), int(1)), "n = {n}");
        }
        assert!(c >= Rational::new(int(0), int(1)));
    }
}

#[test]
fn sieve_agrees_with_per_n_enumeration() {
    let table = CoeffTable::build(500);
    for n in 1..=500 {
        assert_eq!(table.coeff(n), zeta::coeff(n), "n = {n}");
    }
}

#[test]
fn growth_exponent_in_band_at_scale() {
    let table = CoeffTable::build(100_000);
    let e = table.growth_exponent().unwrap();
    assert!((1.45..=1.55).contains(&e), "exponent {e}");
}
