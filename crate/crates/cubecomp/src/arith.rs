//! Exact scalar and small dense matrix arithmetic.
//!
//! Everything is arbitrary precision: entries of group elements grow quickly
//! under composition and orbit moves, so no fixed-width type appears in the
//! core. Matrices are plain row-major arrays with by-value ring operations;
//! at dimensions 2 and 4 nothing fancier pays off.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (the representation is canonical).
pub type Rational = BigRational;

/// Minimal ring bound for the generic matrix types.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// 2×2 matrix over a ring, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2<T> {
    pub e: [[T; 2]; 2],
}

/// 4×4 matrix over a ring, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat4<T> {
    pub e: [[T; 4]; 4],
}

pub type IMat2 = Mat2<Int>;
pub type IMat4 = Mat4<Int>;
pub type QMat2 = Mat2<Rational>;
pub type QMat4 = Mat4<Rational>;

impl<T: Ring> Mat2<T> {
    pub fn from_rows(e: [[T; 2]; 2]) -> Self {
        Mat2 { e }
    }

    pub fn zero() -> Self {
        Mat2 {
            e: [[T::zero(), T::zero()], [T::zero(), T::zero()]],
        }
    }

    pub fn identity() -> Self {
        Mat2 {
            e: [[T::one(), T::zero()], [T::zero(), T::one()]],
        }
    }

    pub fn det(&self) -> T {
        self.e[0][0].clone() * self.e[1][1].clone() - self.e[0][1].clone() * self.e[1][0].clone()
    }

    pub fn transpose(&self) -> Self {
        Mat2 {
            e: [
                [self.e[0][0].clone(), self.e[1][0].clone()],
                [self.e[0][1].clone(), self.e[1][1].clone()],
            ],
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = T::zero();
                for k in 0..2 {
                    acc = acc + self.e[i][k].clone() * rhs.e[k][j].clone();
                }
                out.e[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = out.e[i][j].clone() + rhs.e[i][j].clone();
            }
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = self.clone();
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = s.clone() * out.e[i][j].clone();
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = -out.e[i][j].clone();
            }
        }
        out
    }
}

impl<T: Ring> Mat4<T> {
    pub fn from_rows(e: [[T; 4]; 4]) -> Self {
        Mat4 { e }
    }

    pub fn zero() -> Self {
        Mat4 {
            e: std::array::from_fn(|_| std::array::from_fn(|_| T::zero())),
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.e[i][i] = T::one();
        }
        m
    }

    /// Exact determinant by cofactor expansion along the first row.
    pub fn det(&self) -> T {
        let minor3 = |r: [usize; 3], c: [usize; 3]| -> T {
            let m = |i: usize, j: usize| self.e[r[i]][c[j]].clone();
            m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
        };
        let rows = [1, 2, 3];
        let cols = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];
        let mut acc = T::zero();
        let mut sign = T::one();
        for (j, col) in cols.iter().enumerate() {
            acc = acc + sign.clone() * self.e[0][j].clone() * minor3(rows, *col);
            sign = -sign;
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.e[i][j] = self.e[j][i].clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = T::zero();
                for k in 0..4 {
                    acc = acc + self.e[i][k].clone() * rhs.e[k][j].clone();
                }
                out.e[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                out.e[i][j] = out.e[i][j].clone() + rhs.e[i][j].clone();
            }
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = self.clone();
        for i in 0..4 {
            for j in 0..4 {
                out.e[i][j] = s.clone() * out.e[i][j].clone();
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-T::one()))
    }
}

impl IMat2 {
    pub fn to_rational(&self) -> QMat2 {
        QMat2::from_rows(std::array::from_fn(|i| {
            std::array::from_fn(|j| Rational::from_integer(self.e[i][j].clone()))
        }))
    }

    pub fn from_i64(e: [[i64; 2]; 2]) -> Self {
        IMat2::from_rows(std::array::from_fn(|i| {
            std::array::from_fn(|j| Int::from(e[i][j]))
        }))
    }
}

impl IMat4 {
    pub fn to_rational(&self) -> QMat4 {
        QMat4::from_rows(std::array::from_fn(|i| {
            std::array::from_fn(|j| Rational::from_integer(self.e[i][j].clone()))
        }))
    }

    pub fn from_i64(e: [[i64; 4]; 4]) -> Self {
        IMat4::from_rows(std::array::from_fn(|i| {
            std::array::from_fn(|j| Int::from(e[i][j]))
        }))
    }
}

/// Kronecker symbol `(d|n)`, defined for all `n` (including zero and
/// negatives) by the standard completion of the Jacobi symbol.
///
/// The top argument is restricted to discriminants, `d ≡ 0, 1 (mod 4)`;
/// anything else is rejected. The symbol is completely multiplicative in
/// `n`, and for odd primes `p ∤ d` it is `+1` exactly when `d` is a square
/// mod `p`.
pub fn kronecker(d: &Int, n: &Int) -> Result<i32> {
    let r = d.mod_floor(&Int::from(4));
    if !r.is_zero() && !r.is_one() {
        return Err(Error::NotADiscriminant(d.clone()));
    }
    Ok(kronecker_raw(d, n))
}

/// Kronecker symbol without the discriminant domain check.
pub(crate) fn kronecker_raw(a: &Int, n: &Int) -> i32 {
    if n.is_zero() {
        return if a.abs().is_one() { 1 } else { 0 };
    }
    let mut acc = 1i32;
    let mut n = n.clone();
    if n.is_negative() {
        n = -n;
        if a.is_negative() {
            acc = -acc;
        }
    }
    let two = Int::from(2);
    while n.is_even() {
        n /= &two;
        if a.is_even() {
            return 0;
        }
        let r = a.mod_floor(&Int::from(8));
        if r == Int::from(3) || r == Int::from(5) {
            acc = -acc;
        }
    }
    // Jacobi symbol on the remaining odd positive part.
    let mut a = a.mod_floor(&n);
    let four = Int::from(4);
    let eight = Int::from(8);
    while !a.is_zero() {
        while a.is_even() {
            a /= &two;
            let r = n.mod_floor(&eight);
            if r == Int::from(3) || r == Int::from(5) {
                acc = -acc;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == Int::from(3) && n.mod_floor(&four) == Int::from(3) {
            acc = -acc;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        acc
    } else {
        0
    }
}

/// Largest `k` with `p^k | n`. Errors on `n = 0` (infinite valuation).
///
/// `p` must be a prime `>= 2`; this is the caller's contract and only the
/// trivial `p < 2` case is rejected.
pub fn padic_valuation(n: &Int, p: &Int) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    if *p < Int::from(2) {
        return Err(Error::OutOfRange(format!("{p} is not a prime")));
    }
    let mut k = 0u64;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Ok(k);
        }
        m = q;
        k += 1;
    }
}

/// Deterministic Miller-Rabin over the first twelve prime bases; exact for
/// every input below 3.3·10^24, a strong probable-prime test beyond.
pub fn is_prime(n: &Int) -> bool {
    if *n < Int::from(2) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = Int::from(p);
        if *n == p {
            return true;
        }
        if n.is_multiple_of(&p) {
            return false;
        }
    }
    let one = Int::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = Int::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&Int::from(2), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
