//! Class-number counting series.
//!
//! The coefficient at `n` sums `2/w` over the reduced positive definite
//! forms of discriminant `−n`, imprimitive forms included, where `w` is the
//! unit count of the form's primitive discriminant — the classical Hurwitz
//! weighting (`H(3) = 1/3`, `H(4) = 1/2`, `H(23) = 3`). All weights are
//! multiples of 1/6, so the table stores integer sixths.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{Int, Rational};
use crate::bqf;
use crate::{Error, Result};

/// How classes are weighted when building a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Convention {
    /// Weigh each class by `2/w` (the default) or by `1/w`.
    pub two_over_w: bool,
    /// Count imprimitive forms (the default) or primitive only.
    pub include_imprimitive: bool,
}

impl Default for Convention {
    fn default() -> Self {
        Convention {
            two_over_w: true,
            include_imprimitive: true,
        }
    }
}

/// Coefficients `c(1..=n_max)`, stored in units of 1/6.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    n_max: u64,
    sixths: Vec<u64>,
    convention: Convention,
}

/// Weight of one reduced form `(a, b, c)` of discriminant `-n`, in sixths:
/// 6 generically, 3 when the primitive part has discriminant −4, 2 at −3.
fn weight_sixths(a: i64, b: i64, c: i64, n: i64, convention: Convention) -> u64 {
    let g = a.gcd(&b).gcd(&c);
    if g != 1 && !convention.include_imprimitive {
        return 0;
    }
    let d0 = -n / (g * g);
    let w = match d0 {
        -3 => 6,
        -4 => 4,
        _ => 2,
    };
    let numerator = if convention.two_over_w { 12 } else { 6 };
    numerator / w
}

impl CoeffTable {
    /// Sieve all coefficients up to `n_max` with the default convention.
    pub fn build(n_max: u64) -> Self {
        Self::build_with(n_max, Convention::default())
    }

    /// Single sieve over reduced triples `(a, b, c)` with `b² − 4ac = −n`.
    pub fn build_with(n_max: u64, convention: Convention) -> Self {
        let n_i = n_max as i64;
        let mut sixths = vec![0u64; n_max as usize + 1];
        let mut a = 1i64;
        // Reduced forms satisfy 3a² ≤ n, −a < b ≤ a, c ≥ a; the only tie
        // rule left to enforce in those ranges is b ≥ 0 when a = c.
        while 3 * a * a <= n_i {
            for b in (1 - a)..=a {
                let mut c = a;
                loop {
                    let n = 4 * a * c - b * b;
                    if n > n_i {
                        break;
                    }
                    if !(b < 0 && a == c) {
                        sixths[n as usize] += weight_sixths(a, b, c, n, convention);
                    }
                    c += 1;
                }
            }
            a += 1;
        }
        CoeffTable {
            n_max,
            sixths,
            convention,
        }
    }

    /// Table with every coefficient forced to zero (for series plumbing
    /// tests).
    pub fn zeroed(n_max: u64) -> Self {
        CoeffTable {
            n_max,
            sixths: vec![0; n_max as usize + 1],
            convention: Convention::default(),
        }
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn coeff(&self, n: u64) -> Rational {
        assert!(n >= 1 && n <= self.n_max, "n out of table range");
        Rational::new(Int::from(self.sixths[n as usize]), Int::from(6))
    }

    /// `Σ_{n≤limit} c(n)`, exact.
    pub fn partial_sum(&self, limit: u64) -> Rational {
        assert!(limit <= self.n_max);
        let total: u128 = self.sixths[1..=limit as usize]
            .iter()
            .map(|&s| s as u128)
            .sum();
        Rational::new(Int::from(total), Int::from(6))
    }

    /// Least-squares slope of `log S(x)` against `log x` over a geometric
    /// grid in `[n_max/10, n_max]`.
    pub fn growth_exponent(&self) -> Result<f64> {
        if self.n_max < 100 {
            return Err(Error::OutOfRange(
                "growth exponent needs a table of size at least 100".into(),
            ));
        }
        let lo = (self.n_max / 10).max(1);
        let hi = self.n_max;
        let points = 16usize;
        let mut prefix = vec![0f64; self.n_max as usize + 1];
        let mut acc = 0u128;
        for (n, sixth) in self.sixths.iter().enumerate().skip(1) {
            acc += *sixth as u128;
            prefix[n] = acc as f64 / 6.0;
        }
        let ratio = (hi as f64 / lo as f64).powf(1.0 / (points as f64 - 1.0));
        let mut xs = Vec::with_capacity(points);
        let mut ys = Vec::with_capacity(points);
        for i in 0..points {
            let x = (lo as f64 * ratio.powi(i as i32)).round() as usize;
            let x = x.clamp(1, self.n_max as usize);
            let s = prefix[x];
            if s > 0.0 {
                xs.push((x as f64).ln());
                ys.push(s.ln());
            }
        }
        let n = xs.len() as f64;
        let mx = xs.iter().sum::<f64>() / n;
        let my = ys.iter().sum::<f64>() / n;
        let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        Ok(num / den)
    }

    /// Truncated Dirichlet value `Σ_{n≤n_max} c(n)·n^{−s}` with a tail bound
    /// `C·N^{3/2−s}/(s − 3/2)` from the table's own maximum of `c(n)/√n`.
    pub fn dirichlet_value(&self, s: f64) -> Result<DirichletValue> {
        if s <= 1.5 {
            return Err(Error::OutOfRange(format!(
                "s = {s} is not to the right of the abscissa 3/2"
            )));
        }
        let mut value = 0.0f64;
        let mut max_ratio = 0.0f64;
        for n in 1..=self.n_max as usize {
            if self.sixths[n] == 0 {
                continue;
            }
            let c = self.sixths[n] as f64 / 6.0;
            value += c * (n as f64).powf(-s);
            max_ratio = max_ratio.max(c / (n as f64).sqrt());
        }
        let n = self.n_max as f64;
        let tail_bound = max_ratio * n.powf(1.5 - s) / (s - 1.5);
        Ok(DirichletValue { value, tail_bound })
    }
}

/// Truncated series value with its stated tail bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DirichletValue {
    pub value: f64,
    pub tail_bound: f64,
}

/// Single-`n` coefficient by direct enumeration of reduced forms of
/// discriminant `−n`; the independent check against the sieve.
pub fn coeff(n: u64) -> Rational {
    coeff_with(n, Convention::default())
}

pub fn coeff_with(n: u64, convention: Convention) -> Rational {
    assert!(n >= 1);
    let d = -Int::from(n);
    let four = Int::from(4);
    let r = d.mod_floor(&four);
    if !r.is_zero() && !r.is_one() {
        return Rational::zero();
    }
    let mut sixths = 0u64;
    for f in bqf::reduced_forms_all(&d) {
        let a = i64::try_from(&f.a).expect("desk scale");
        let b = i64::try_from(&f.b).expect("desk scale");
        let c = i64::try_from(&f.c).expect("desk scale");
        sixths += weight_sixths(a, b, c, n as i64, convention);
    }
    Rational::new(Int::from(sixths), Int::from(6))
}
