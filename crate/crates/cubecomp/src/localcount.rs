//! Counting square roots of a discriminant modulo `4·p^k`.
//!
//! The count of `x mod m` with `x² ≡ d (mod m)` is what the local orbit
//! count reduces to. Two routes are kept side by side: an exhaustive scan
//! (guarded at 10^8) and a CRT + Hensel fast path; the two agree everywhere
//! the scan is feasible and the tests say so.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, Int, Rational};
use crate::{Error, Result};

/// Moduli up to this bound may be scanned exhaustively.
pub const SCAN_GUARD: u64 = 100_000_000;

/// Moduli up to this size use the scan in [`sqrt_count_mod`]; larger ones
/// take the CRT + Hensel path.
const DISPATCH: u64 = 1 << 16;

/// `#{x in [0, m) : x² ≡ d (mod m)}`.
pub fn sqrt_count_mod(d: &Int, m: &Int) -> Result<Int> {
    if !m.is_positive() {
        return Err(Error::OutOfRange(format!("modulus {m} must be positive")));
    }
    match u64::try_from(m) {
        Ok(small) if small <= DISPATCH => sqrt_count_mod_scan(d, m),
        _ => sqrt_count_mod_fast(d, m),
    }
}

/// Exhaustive scan; rejects moduli above [`SCAN_GUARD`].
pub fn sqrt_count_mod_scan(d: &Int, m: &Int) -> Result<Int> {
    if !m.is_positive() {
        return Err(Error::OutOfRange(format!("modulus {m} must be positive")));
    }
    let m_u = u64::try_from(m)
        .ok()
        .filter(|&v| v <= SCAN_GUARD)
        .ok_or_else(|| Error::OutOfRange(format!("modulus {m} exceeds the scan guard")))?;
    let target = u64::try_from(&d.mod_floor(m)).expect("residue fits");
    let mut count = 0u64;
    for x in 0..m_u {
        if (x as u128 * x as u128) % m_u as u128 == target as u128 {
            count += 1;
        }
    }
    Ok(Int::from(count))
}

/// CRT + Hensel path: factor the modulus, count per prime power, multiply.
pub fn sqrt_count_mod_fast(d: &Int, m: &Int) -> Result<Int> {
    if !m.is_positive() {
        return Err(Error::OutOfRange(format!("modulus {m} must be positive")));
    }
    let mut count = Int::one();
    for (p, e) in factorize(m) {
        count *= count_mod_prime_power(d, &p, e);
        if count.is_zero() {
            return Ok(count);
        }
    }
    Ok(count)
}

fn factorize(m: &Int) -> Vec<(Int, u64)> {
    let mut out = Vec::new();
    let mut m = m.clone();
    let mut p = Int::from(2);
    while &p * &p <= m {
        if m.is_multiple_of(&p) {
            let mut e = 0u64;
            while m.is_multiple_of(&p) {
                m /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if m > Int::one() {
        out.push((m, 1));
    }
    out
}

/// Solutions of `x² ≡ d (mod p^e)` counted by the valuation of `d`.
///
/// Writing `d = p^v·u` with `v < e` and `p ∤ u`, an odd `v` kills all
/// solutions; an even `v` contributes `p^{v/2}` times the unit-level count
/// (2 at odd `p` when `u` is a residue, and 1/2/4 at `p = 2` depending on
/// `e − v`). When `p^e | d` the count is `p^{⌊e/2⌋}`.
fn count_mod_prime_power(d: &Int, p: &Int, e: u64) -> Int {
    debug_assert!(arith::is_prime(p), "modulus factor {p} must be prime");
    let pe = p.pow(u32::try_from(e).expect("exponent fits"));
    let residue = d.mod_floor(&pe);
    if residue.is_zero() {
        return p.pow(u32::try_from(e / 2).unwrap());
    }
    let mut v = 0u64;
    let mut u = residue;
    while u.is_multiple_of(p) {
        u /= p;
        v += 1;
    }
    if v % 2 == 1 {
        return Int::zero();
    }
    let scale = p.pow(u32::try_from(v / 2).unwrap());
    let remaining = e - v;
    let unit_solutions = if *p == Int::from(2) {
        match remaining {
            1 => Int::one(),
            2 => {
                if u.mod_floor(&Int::from(4)).is_one() {
                    Int::from(2)
                } else {
                    Int::zero()
                }
            }
            _ => {
                if u.mod_floor(&Int::from(8)).is_one() {
                    Int::from(4)
                } else {
                    Int::zero()
                }
            }
        }
    } else {
        match arith::kronecker_raw(&u, p) {
            1 => Int::from(2),
            -1 => Int::zero(),
            _ => unreachable!("u is a unit mod p"),
        }
    };
    scale * unit_solutions
}

/// Number of local orbits with the unit constraints at level `k`:
/// the square-root count modulo `4·p^k`.
pub fn local_orbit_count(d: &Int, p: &Int, k: u32) -> Result<Int> {
    if !arith::is_prime(p) {
        return Err(Error::OutOfRange(format!("{p} is not prime")));
    }
    sqrt_count_mod(d, &(Int::from(4) * p.pow(k)))
}

/// Exact Euler factor `(1 − (d|p)/p)⁻¹` of the quadratic character at `p`.
pub fn euler_factor_chi(d: &Int, p: &Int) -> Result<Rational> {
    let chi = arith::kronecker(d, p)?;
    let one = Rational::one();
    Ok(one.clone() / (one - Rational::new(Int::from(chi), p.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(x: i64) -> Int {
        Int::from(x)
    }

    #[test]
    fn sqrt_count_examples() {
        assert_eq!(sqrt_count_mod(&int(-3), &int(4)).unwrap(), int(2));
        assert_eq!(sqrt_count_mod(&int(-4), &int(12)).unwrap(), int(0));
        assert_eq!(sqrt_count_mod(&int(-23), &int(12)).unwrap(), int(4));
        assert!(sqrt_count_mod(&int(5), &int(0)).is_err());
    }

    #[test]
    fn scan_guard_enforced() {
        assert!(sqrt_count_mod_scan(&int(1), &int(200_000_000)).is_err());
    }

    #[test]
    fn fast_matches_scan_small() {
        for d in -30i64..=30 {
            for m in 1i64..=120 {
                assert_eq!(
                    sqrt_count_mod_fast(&int(d), &int(m)).unwrap(),
                    sqrt_count_mod_scan(&int(d), &int(m)).unwrap(),
                    "d={d} m={m}"
                );
            }
        }
    }

    #[test]
    fn fast_matches_scan_prime_powers() {
        for d in [-23i64, -20, -4, -3, 9, 18, 48] {
            for (p, emax) in [(2i64, 10u32), (3, 6), (5, 4), (7, 4)] {
                for e in 1..=emax {
                    let m = int(p.pow(e));
                    assert_eq!(
                        sqrt_count_mod_fast(&int(d), &m).unwrap(),
                        sqrt_count_mod_scan(&int(d), &m).unwrap(),
                        "d={d} p={p} e={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn local_orbit_count_examples() {
        assert_eq!(local_orbit_count(&int(-23), &int(3), 1).unwrap(), int(4));
        assert_eq!(local_orbit_count(&int(-4), &int(3), 1).unwrap(), int(0));
        for d in [-3i64, -4, -23] {
            assert_eq!(
                local_orbit_count(&int(d), &int(7), 0).unwrap(),
                sqrt_count_mod(&int(d), &int(4)).unwrap()
            );
        }
        assert!(local_orbit_count(&int(-4), &int(6), 1).is_err());
    }

    #[test]
    fn euler_factor_examples() {
        assert_eq!(
            euler_factor_chi(&int(-4), &int(3)).unwrap(),
            Rational::new(int(3), int(4))
        );
        assert_eq!(
            euler_factor_chi(&int(-3), &int(3)).unwrap(),
            Rational::one()
        );
        assert_eq!(
            euler_factor_chi(&int(-23), &int(2)).unwrap(),
            Rational::from_integer(int(2))
        );
    }
}
