//! Integral binary quadratic forms of negative discriminant.
//!
//! A form `(a, b, c)` stands for `a·u² + b·uv + c·v²` with discriminant
//! `b² − 4ac`. `SL2(Z)` acts on the right by substitution; every positive
//! definite form is equivalent to exactly one reduced form
//! (`|b| ≤ a ≤ c`, with `b ≥ 0` on the boundary), and Gauss composition
//! turns the primitive reduced forms of a fixed discriminant into a finite
//! abelian group.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{IMat2, Int, QMat2, Rational};
use crate::{Error, Result};

/// Binary quadratic form `a·u² + b·uv + c·v²`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bqf {
    pub a: Int,
    pub b: Int,
    pub c: Int,
}

impl Bqf {
    pub fn new(a: Int, b: Int, c: Int) -> Self {
        Bqf { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        Bqf::new(Int::from(a), Int::from(b), Int::from(c))
    }

    /// `b² − 4ac`.
    pub fn discriminant(&self) -> Int {
        &self.b * &self.b - Int::from(4) * &self.a * &self.c
    }

    /// Value `f(u, v)`.
    pub fn eval(&self, u: &Int, v: &Int) -> Int {
        &self.a * u * u + &self.b * u * v + &self.c * v * v
    }

    /// gcd of the three coefficients (0 for the zero form).
    pub fn content(&self) -> Int {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Positive definite means negative discriminant and `a > 0`.
    pub fn is_positive_definite(&self) -> bool {
        self.discriminant().is_negative() && self.a.is_positive()
    }

    /// Reduced: `|b| ≤ a ≤ c`, and `b ≥ 0` whenever `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        if !self.is_positive_definite() {
            return false;
        }
        let ab = self.b.abs();
        if ab > self.a || self.a > self.c {
            return false;
        }
        if (ab == self.a || self.a == self.c) && self.b.is_negative() {
            return false;
        }
        true
    }

    /// Right action of a 2×2 integer matrix by substitution:
    /// `(f·M)(u, v) = f(m00·u + m01·v, m10·u + m11·v)`.
    ///
    /// For `M, N` this satisfies `(f·M)·N = f·(M·N)`.
    pub fn apply(&self, m: &IMat2) -> Bqf {
        let [p, q] = [&m.e[0][0], &m.e[0][1]];
        let [r, s] = [&m.e[1][0], &m.e[1][1]];
        let a = self.eval(p, r);
        let c = self.eval(q, s);
        let b = Int::from(2) * (&self.a * p * q + &self.c * r * s) + &self.b * (p * s + q * r);
        Bqf::new(a, b, c)
    }

    /// The form with the inverse class, `(a, −b, c)`.
    pub fn inverse(&self) -> Bqf {
        Bqf::new(self.a.clone(), -self.b.clone(), self.c.clone())
    }
}

/// True for fundamental discriminants: `d ≡ 1 (mod 4)` squarefree, or
/// `d = 4m` with `m ≡ 2, 3 (mod 4)` squarefree. Works for either sign.
pub fn is_fundamental(d: &Int) -> bool {
    if d.is_zero() || d.is_one() {
        return d.is_one();
    }
    let four = Int::from(4);
    let r = d.mod_floor(&four);
    if r.is_one() {
        return is_squarefree(d);
    }
    if r.is_zero() {
        let m = d / &four;
        let rm = m.mod_floor(&four);
        return (rm == Int::from(2) || rm == Int::from(3)) && is_squarefree(&m);
    }
    false
}

fn is_squarefree(n: &Int) -> bool {
    let mut m = n.abs();
    if m.is_zero() {
        return false;
    }
    let mut p = Int::from(2);
    while &p * &p <= m {
        if m.is_multiple_of(&p) {
            m /= &p;
            if m.is_multiple_of(&p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// The principal form of discriminant `d < 0`:
/// `(1, 0, −d/4)` for `d ≡ 0 (mod 4)` and `(1, 1, (1−d)/4)` for
/// `d ≡ 1 (mod 4)`.
pub fn s_of_d(d: &Int) -> Result<Bqf> {
    if !d.is_negative() {
        return Err(Error::NotADiscriminant(d.clone()));
    }
    let four = Int::from(4);
    let r = d.mod_floor(&four);
    if r.is_zero() {
        Ok(Bqf::new(Int::one(), Int::zero(), -d / four))
    } else if r.is_one() {
        Ok(Bqf::new(Int::one(), Int::one(), (Int::one() - d) / four))
    } else {
        Err(Error::NotADiscriminant(d.clone()))
    }
}

/// Number of units in the quadratic order of discriminant `d < 0`:
/// 4 at `d = −4`, 6 at `d = −3`, 2 otherwise.
pub fn unit_count(d: &Int) -> u32 {
    if *d == Int::from(-4) {
        4
    } else if *d == Int::from(-3) {
        6
    } else {
        2
    }
}

/// Reduce a positive definite form, returning the unique reduced
/// representative together with the `SL2(Z)` transform that achieves it:
/// `f.apply(&m) == reduced`.
pub fn reduce(f: &Bqf) -> Result<(Bqf, IMat2)> {
    if !f.is_positive_definite() {
        return Err(Error::NotPositiveDefinite(
            f.a.clone(),
            f.b.clone(),
            f.c.clone(),
        ));
    }
    let mut g = f.clone();
    let mut m = IMat2::identity();
    let two = Int::from(2);
    loop {
        // Translate b into (−a, a].
        if g.b <= -&g.a || g.b > g.a {
            let k = (&g.a - &g.b).div_floor(&(&two * &g.a));
            let t = IMat2::from_rows([
                [Int::one(), k.clone()],
                [Int::zero(), Int::one()],
            ]);
            g = g.apply(&t);
            m = m.mul(&t);
        }
        if g.a > g.c || (g.a == g.c && g.b.is_negative()) {
            // Swap a and c, flipping the sign of b.
            let s = IMat2::from_rows([
                [Int::zero(), -Int::one()],
                [Int::one(), Int::zero()],
            ]);
            g = g.apply(&s);
            m = m.mul(&s);
        } else {
            break;
        }
    }
    debug_assert!(g.is_reduced());
    debug_assert_eq!(f.apply(&m), g);
    Ok((g, m))
}

/// Extend a primitive column `(u, v)` to an `SL2(Z)` matrix with that first
/// column.
fn extend_to_sl2(u: &Int, v: &Int) -> IMat2 {
    let e = u.extended_gcd(v);
    debug_assert!(e.gcd.is_one());
    // u*x + v*y = 1  =>  det (u, -y; v, x) = 1.
    IMat2::from_rows([[u.clone(), -e.y.clone()], [v.clone(), e.x.clone()]])
}

/// Find a primitive vector `(u, v)` with `gcd(f(u, v), n) = 1`.
///
/// A small deterministic scan covers practice; the CRT construction makes
/// the search complete for any primitive form.
fn coprime_value_vector(f: &Bqf, n: &Int) -> (Int, Int) {
    debug_assert!(f.is_primitive());
    let n = n.abs();
    if n.is_one() {
        return (Int::one(), Int::zero());
    }
    for h in 1i64..=24 {
        for (u, v) in vectors_of_height(h) {
            let (u, v) = (Int::from(u), Int::from(v));
            if u.gcd(&v).is_one() && f.eval(&u, &v).gcd(&n).is_one() {
                return (u, v);
            }
        }
    }
    coprime_value_vector_crt(f, &n)
}

/// Constructive route: CRT over the primes of `n`. For each prime one of
/// (1,0), (0,1), (1,1) has value prime to `p`, otherwise `p` would divide
/// all three coefficients; combine the picks and then repair primitivity
/// of (u, v) without disturbing the residues.
fn coprime_value_vector_crt(f: &Bqf, n: &Int) -> (Int, Int) {
    let mut u = Int::zero();
    let mut v = Int::zero();
    let mut modulus = Int::one();
    let mut m = n.abs();
    let mut p = Int::from(2);
    while &p * &p <= m {
        if m.is_multiple_of(&p) {
            while m.is_multiple_of(&p) {
                m /= &p;
            }
            let (up, vp) = pick_unit_vector(f, &p);
            crt_merge(&mut u, &mut v, &mut modulus, &up, &vp, &p);
        }
        p += 1;
    }
    if m > Int::one() {
        let (up, vp) = pick_unit_vector(f, &m);
        crt_merge(&mut u, &mut v, &mut modulus, &up, &vp, &m);
    }
    if u.is_zero() {
        u = modulus.clone();
    }
    let mut k = Int::zero();
    loop {
        let cand = &v + &k * &modulus;
        if u.gcd(&cand).is_one() {
            v = cand;
            break;
        }
        k += 1;
    }
    assert!(f.eval(&u, &v).gcd(n).is_one());
    (u, v)
}

fn vectors_of_height(h: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for u in -h..=h {
        for v in -h..=h {
            if u.abs().max(v.abs()) == h {
                out.push((u, v));
            }
        }
    }
    out
}

fn pick_unit_vector(f: &Bqf, p: &Int) -> (Int, Int) {
    for (u, v) in [(1i64, 0i64), (0, 1), (1, 1)] {
        let (u, v) = (Int::from(u), Int::from(v));
        if !f.eval(&u, &v).is_multiple_of(p) {
            return (u, v);
        }
    }
    unreachable!("a primitive form cannot vanish mod p at all three probes");
}

fn crt_merge(u: &mut Int, v: &mut Int, modulus: &mut Int, up: &Int, vp: &Int, p: &Int) {
    let e = modulus.extended_gcd(p);
    debug_assert!(e.gcd.is_one());
    let new_mod = &*modulus * p;
    // x ≡ u (mod modulus), x ≡ up (mod p).
    let lift = |x0: &Int, xp: &Int| -> Int {
        let t = ((xp - x0) * &e.x).mod_floor(p);
        (x0 + &t * &*modulus).mod_floor(&new_mod)
    };
    *u = lift(u, up);
    *v = lift(v, vp);
    *modulus = new_mod;
}

/// Gauss composition of two primitive positive definite forms of the same
/// discriminant, returned reduced. The principal form acts as the identity.
///
/// Dirichlet's method: move `f2` to a representative whose leading
/// coefficient is prime to `a1`, solve `B ≡ b1 (mod 2a1)`,
/// `B ≡ b2 (mod 2a2)`, and read off `(a1·a2, B, (B² − D)/(4·a1·a2))`.
pub fn compose(f1: &Bqf, f2: &Bqf) -> Result<Bqf> {
    let d = f1.discriminant();
    if f2.discriminant() != d {
        return Err(Error::DiscriminantMismatch(d, f2.discriminant()));
    }
    for f in [f1, f2] {
        if !f.is_primitive() {
            return Err(Error::Imprimitive(f.a.clone(), f.b.clone(), f.c.clone()));
        }
        if !f.is_positive_definite() {
            return Err(Error::NotPositiveDefinite(
                f.a.clone(),
                f.b.clone(),
                f.c.clone(),
            ));
        }
    }
    let (a1, a2, bb) = united_pair(f1, f2);
    let a3 = &a1 * &a2;
    let num = &bb * &bb - &d;
    let den = Int::from(4) * &a3;
    debug_assert!(num.is_multiple_of(&den));
    let c3 = num / den;
    Ok(reduce(&Bqf::new(a3, bb, c3))?.0)
}

/// Bring two primitive positive definite forms of equal discriminant into
/// united position: returns `(a1, a2, B)` with `gcd(a1, a2) = 1`, where
/// `(a1, B, ·)` is a translate of `f1` and `(a2, B, ·)` is equivalent to
/// `f2`, sharing the middle coefficient `B`.
pub(crate) fn united_pair(f1: &Bqf, f2: &Bqf) -> (Int, Int, Int) {
    let a1 = f1.a.clone();
    let b1 = f1.b.clone();
    let (u, v) = coprime_value_vector(f2, &a1);
    let g2 = f2.apply(&extend_to_sl2(&u, &v));
    let a2 = g2.a.clone();
    let b2 = g2.b.clone();
    debug_assert!(a1.gcd(&a2).is_one());
    debug_assert!(a2.is_positive());
    // b1 and b2 share the parity of D, so (b2 - b1)/2 is an integer.
    let e = a1.extended_gcd(&a2);
    let inv_a1 = e.x.mod_floor(&a2);
    let t = ((&b2 - &b1) / Int::from(2) * inv_a1).mod_floor(&a2);
    let bb = &b1 + Int::from(2) * &a1 * t;
    (a1, a2, bb)
}

/// The class group of discriminant `d`: reduced primitive forms plus the
/// full composition table. `reps[0]` is the principal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroup {
    pub d: Int,
    pub reps: Vec<Bqf>,
    pub table: Vec<Vec<usize>>,
}

impl ClassGroup {
    pub fn h(&self) -> usize {
        self.reps.len()
    }

    /// Index of the class of an arbitrary primitive positive definite form
    /// of this discriminant.
    pub fn class_index(&self, f: &Bqf) -> Result<usize> {
        if f.discriminant() != self.d {
            return Err(Error::DiscriminantMismatch(self.d.clone(), f.discriminant()));
        }
        let (r, _) = reduce(f)?;
        self.reps
            .iter()
            .position(|g| *g == r)
            .ok_or_else(|| Error::Imprimitive(f.a.clone(), f.b.clone(), f.c.clone()))
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.table[i]
            .iter()
            .position(|&k| k == 0)
            .expect("every class has an inverse")
    }

    /// Check all abelian group axioms on the table: identity at index 0,
    /// inverses, commutativity, associativity.
    pub fn is_abelian_group(&self) -> bool {
        let h = self.h();
        for i in 0..h {
            if self.table[0][i] != i || self.table[i][0] != i {
                return false;
            }
            if !self.table[i].contains(&0) {
                return false;
            }
            for j in 0..h {
                if self.table[i][j] != self.table[j][i] || self.table[i][j] >= h {
                    return false;
                }
            }
        }
        for i in 0..h {
            for j in 0..h {
                for k in 0..h {
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Enumerate all reduced positive definite forms of discriminant `d < 0`,
/// primitive and imprimitive alike, ordered by `(a, |b|, sign, c)` with
/// positive `b` before negative.
pub fn reduced_forms_all(d: &Int) -> Vec<Bqf> {
    debug_assert!(d.is_negative());
    let mut out = Vec::new();
    let four = Int::from(4);
    let dd = -d;
    let mut a = Int::one();
    // |b| ≤ a ≤ c forces 3a² ≤ |d|.
    while Int::from(3) * &a * &a <= dd {
        let mut b = Int::one() - &a;
        // b runs over (-a, a] with b ≡ d (mod 2); the b = -a case is never
        // reduced and the b = a boundary keeps b ≥ 0.
        while b <= a {
            if (&b - d).is_even() {
                let num = &b * &b - d;
                let den = &four * &a;
                if num.is_multiple_of(&den) {
                    let c = num / den;
                    if c >= a {
                        let f = Bqf::new(a.clone(), b.clone(), c);
                        if f.is_reduced() {
                            out.push(f);
                        }
                    }
                }
            }
            b += 1;
        }
        a += 1;
    }
    out.sort_by(|x, y| {
        (x.a.clone(), x.b.abs(), x.b.is_negative(), x.c.clone()).cmp(&(
            y.a.clone(),
            y.b.abs(),
            y.b.is_negative(),
            y.c.clone(),
        ))
    });
    out
}

/// Build the class group of a negative discriminant: enumerate the reduced
/// primitive forms and close them under composition.
pub fn class_group(d: &Int) -> Result<ClassGroup> {
    let principal = s_of_d(d)?;
    let reps: Vec<Bqf> = reduced_forms_all(d)
        .into_iter()
        .filter(Bqf::is_primitive)
        .collect();
    assert_eq!(reps[0], principal, "principal form sorts first");
    let index: std::collections::HashMap<&Bqf, usize> =
        reps.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let h = reps.len();
    let mut table = vec![vec![0usize; h]; h];
    for i in 0..h {
        for j in i..h {
            let fij = compose(&reps[i], &reps[j])?;
            let k = *index
                .get(&fij)
                .expect("composition of reduced classes is a reduced class");
            table[i][j] = k;
            table[j][i] = k;
        }
    }
    Ok(ClassGroup {
        d: d.clone(),
        reps,
        table,
    })
}

/// A Heegner point `z = (−b + √d)/(2a)` recorded exactly: the rational real
/// part, the square of the imaginary part, and the source form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeegnerPoint {
    pub re: Rational,
    pub im_sq: Rational,
    pub form: Bqf,
}

/// One Heegner point per class of a fundamental discriminant `d < 0`.
pub fn heegner_points(d: &Int) -> Result<Vec<HeegnerPoint>> {
    if !d.is_negative() {
        return Err(Error::NotADiscriminant(d.clone()));
    }
    if !is_fundamental(d) {
        return Err(Error::NotFundamental(d.clone()));
    }
    let group = class_group(d)?;
    Ok(group
        .reps
        .into_iter()
        .map(|f| {
            let two_a = Int::from(2) * &f.a;
            let re = Rational::new(-f.b.clone(), two_a.clone());
            let im_sq = Rational::new(-d.clone(), &two_a * &two_a);
            HeegnerPoint { re, im_sq, form: f }
        })
        .collect())
}

/// The torus element `x·I + y·(b/2, c; −a, −b/2)` built from the principal
/// form of `d`; its determinant is `x² − y²·d/4`.
pub fn torus_element(d: &Int, x: &Rational, y: &Rational) -> Result<QMat2> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let f = s_of_d(d)?;
    let half_b = Rational::new(f.b.clone(), Int::from(2));
    let gen = QMat2::from_rows([
        [half_b.clone(), Rational::from_integer(f.c.clone())],
        [Rational::from_integer(-f.a.clone()), -half_b],
    ]);
    Ok(QMat2::identity().scale(x).add(&gen.scale(y)))
}
