//! Pairs of quaternary alternating 2-forms.
//!
//! An alternating 4×4 matrix is stored by its upper triangle
//! `(r, a, b, c, d, l)`:
//!
//! ```text
//! (  0  r  a  b )
//! ( -r  0  c  d )
//! ( -a -c  0  l )
//! ( -b -d -l  0 )
//! ```
//!
//! with Pfaffian `ad − bc − rl`, normalized so `Pfaff(0 I; −I 0) = 1`.
//! A pair `F = (M, N)` carries the form `Q_F(u, v) = −Pfaff(M·u − N·v)`.
//! Fusing a 2×2×2 cube embeds both of its first-slicing matrices into the
//! off-diagonal blocks, and `Q_{fuse(A)} = Q_A^1`.
//!
//! `SL2 × SL4` acts by `(M, N)·(g1, g2) = (s·ᵗg2Mg2 + u·ᵗg2Ng2,
//! t·ᵗg2Mg2 + v·ᵗg2Ng2)` for `g1 = (s t; u v)`. On the subspace `W` of
//! pairs with `r1 = 0`, the parabolic subgroup of block upper-triangular
//! second factors has three relative invariants: `disc(Q_F)`, `P0 = r2`,
//! and `P1 = −Pfaff(M)`.

use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Mat2, Mat4, QMat2, QMat4, Rational, Ring};
use crate::bqf::Bqf;
use crate::cube::Cube;
use crate::{Error, Result};

/// Alternating 4×4 matrix, stored as its upper triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alt4<T> {
    pub r: T,
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
    pub l: T,
}

pub type IAlt4 = Alt4<Int>;
pub type QAlt4 = Alt4<Rational>;

impl<T: Ring> Alt4<T> {
    pub fn new(r: T, a: T, b: T, c: T, d: T, l: T) -> Self {
        Alt4 { r, a, b, c, d, l }
    }

    pub fn zero() -> Self {
        Alt4::new(T::zero(), T::zero(), T::zero(), T::zero(), T::zero(), T::zero())
    }

    /// `ad − bc − rl`; squares to the determinant of the full matrix.
    pub fn pfaffian(&self) -> T {
        self.a.clone() * self.d.clone()
            - self.b.clone() * self.c.clone()
            - self.r.clone() * self.l.clone()
    }

    pub fn to_mat4(&self) -> Mat4<T> {
        let z = T::zero;
        Mat4::from_rows([
            [z(), self.r.clone(), self.a.clone(), self.b.clone()],
            [-self.r.clone(), z(), self.c.clone(), self.d.clone()],
            [-self.a.clone(), -self.c.clone(), z(), self.l.clone()],
            [-self.b.clone(), -self.d.clone(), -self.l.clone(), z()],
        ])
    }

    /// Read an alternating matrix back off a congruence result.
    pub fn try_from_mat4(m: &Mat4<T>) -> Result<Self> {
        for i in 0..4 {
            for j in 0..4 {
                if m.e[i][j] != -m.e[j][i].clone() {
                    return Err(Error::NotAlternating);
                }
            }
        }
        Ok(Alt4::new(
            m.e[0][1].clone(),
            m.e[0][2].clone(),
            m.e[0][3].clone(),
            m.e[1][2].clone(),
            m.e[1][3].clone(),
            m.e[2][3].clone(),
        ))
    }

    fn add(&self, rhs: &Self) -> Self {
        Alt4::new(
            self.r.clone() + rhs.r.clone(),
            self.a.clone() + rhs.a.clone(),
            self.b.clone() + rhs.b.clone(),
            self.c.clone() + rhs.c.clone(),
            self.d.clone() + rhs.d.clone(),
            self.l.clone() + rhs.l.clone(),
        )
    }

    fn scale(&self, s: &T) -> Self {
        Alt4::new(
            s.clone() * self.r.clone(),
            s.clone() * self.a.clone(),
            s.clone() * self.b.clone(),
            s.clone() * self.c.clone(),
            s.clone() * self.d.clone(),
            s.clone() * self.l.clone(),
        )
    }

    /// Congruence `ᵗg X g`; alternating in, alternating out.
    fn congruence(&self, g: &Mat4<T>) -> Self {
        let m = g.transpose().mul(&self.to_mat4()).mul(g);
        Alt4::try_from_mat4(&m).expect("congruence preserves antisymmetry")
    }
}

impl IAlt4 {
    pub fn from_i64(r: i64, a: i64, b: i64, c: i64, d: i64, l: i64) -> Self {
        Alt4::new(
            Int::from(r),
            Int::from(a),
            Int::from(b),
            Int::from(c),
            Int::from(d),
            Int::from(l),
        )
    }

    pub fn to_rational(&self) -> QAlt4 {
        let q = |x: &Int| Rational::from_integer(x.clone());
        Alt4::new(q(&self.r), q(&self.a), q(&self.b), q(&self.c), q(&self.d), q(&self.l))
    }
}

/// A pair of alternating forms `(M, N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltPair<T> {
    pub first: Alt4<T>,
    pub second: Alt4<T>,
}

pub type IAltPair = AltPair<Int>;
pub type QAltPair = AltPair<Rational>;

impl<T: Ring> AltPair<T> {
    pub fn new(first: Alt4<T>, second: Alt4<T>) -> Self {
        AltPair { first, second }
    }

    pub fn zero() -> Self {
        AltPair::new(Alt4::zero(), Alt4::zero())
    }

    /// Coefficients `(qa, qb, qc)` of `Q_F(u, v) = −Pfaff(M·u − N·v)`:
    /// `qa = −Pfaff(M)`, `qc = −Pfaff(N)`, and the cross term from the
    /// polarization of the Pfaffian.
    pub fn qform_coeffs(&self) -> (T, T, T) {
        let m = &self.first;
        let n = &self.second;
        let qa = -m.pfaffian();
        let qc = -n.pfaffian();
        let qb = m.a.clone() * n.d.clone() + m.d.clone() * n.a.clone()
            - m.b.clone() * n.c.clone()
            - m.c.clone() * n.b.clone()
            - m.r.clone() * n.l.clone()
            - n.r.clone() * m.l.clone();
        (qa, qb, qc)
    }

    /// `(disc(Q_F), P0, P1) = (disc, r2, −Pfaff(M))`.
    pub fn invariants_h(&self) -> (T, T, T) {
        let (qa, qb, qc) = self.qform_coeffs();
        let four = T::one() + T::one() + T::one() + T::one();
        let disc = qb.clone() * qb - four * qa.clone() * qc;
        (disc, self.second.r.clone(), -self.first.pfaffian())
    }

    /// Membership in `W`: vanishing `r1`.
    pub fn in_w(&self) -> bool {
        self.first.r.is_zero()
    }

    /// Membership in `W0`: vanishing `r1` and vanishing `a` slot of `M`.
    pub fn in_w0(&self) -> bool {
        self.in_w() && self.first.a.is_zero()
    }

    /// Action of `(g1, g2)`; `g1` mixes the pair, `g2` acts by congruence.
    pub fn act(&self, g1: &Mat2<T>, g2: &Mat4<T>) -> Self {
        let m = self.first.congruence(g2);
        let n = self.second.congruence(g2);
        let (s, t) = (&g1.e[0][0], &g1.e[0][1]);
        let (u, v) = (&g1.e[1][0], &g1.e[1][1]);
        AltPair::new(m.scale(s).add(&n.scale(u)), m.scale(t).add(&n.scale(v)))
    }
}

impl IAltPair {
    pub fn qform_pair(&self) -> Bqf {
        let (qa, qb, qc) = self.qform_coeffs();
        Bqf::new(qa, qb, qc)
    }

    pub fn to_rational(&self) -> QAltPair {
        AltPair::new(self.first.to_rational(), self.second.to_rational())
    }
}

/// Skew-symmetrization of a cube: each slicing-1 matrix lands in the
/// off-diagonal block of an alternating 4×4 matrix.
pub fn fuse(cube: &Cube) -> IAltPair {
    AltPair::new(
        Alt4::new(
            Int::zero(),
            cube.a.clone(),
            cube.b.clone(),
            cube.c.clone(),
            cube.d.clone(),
            Int::zero(),
        ),
        Alt4::new(
            Int::zero(),
            cube.e.clone(),
            cube.f.clone(),
            cube.g.clone(),
            cube.h.clone(),
            Int::zero(),
        ),
    )
}

/// Embedding of cubes into `W`: fuse, then set the `r2` slot to 1.
pub fn embed_vd(cube: &Cube) -> IAltPair {
    let mut pair = fuse(cube);
    pair.second.r = Int::one();
    pair
}

/// The canonical orbit representative `w` of discriminant `d < 0` on `W0`.
///
/// `M_w` carries `(b, c) = (1, −1)` (plus `d = −1` in the odd case) and
/// `N_w` carries `r2 = 1` with the principal-form data; in both cases
/// `r1(w) = 0` and `disc(Q_w) = d` exactly.
pub fn canonical_w(d: &Int) -> Result<IAltPair> {
    use num_integer::Integer;
    if !d.is_negative() {
        return Err(Error::NotADiscriminant(d.clone()));
    }
    let four = Int::from(4);
    let r = d.mod_floor(&four);
    let pair = if r.is_zero() {
        AltPair::new(
            Alt4::new(
                Int::zero(),
                Int::zero(),
                Int::one(),
                -Int::one(),
                Int::zero(),
                Int::zero(),
            ),
            Alt4::new(
                Int::one(),
                Int::one(),
                Int::zero(),
                Int::zero(),
                -d / &four,
                Int::zero(),
            ),
        )
    } else if r.is_one() {
        AltPair::new(
            Alt4::new(
                Int::zero(),
                Int::zero(),
                Int::one(),
                -Int::one(),
                -Int::one(),
                Int::zero(),
            ),
            Alt4::new(
                Int::one(),
                Int::one(),
                Int::one(),
                -Int::one(),
                -(d + Int::from(3)) / &four,
                Int::zero(),
            ),
        )
    } else {
        return Err(Error::NotADiscriminant(d.clone()));
    };
    debug_assert!(pair.in_w0());
    debug_assert_eq!(pair.qform_pair().discriminant(), *d);
    Ok(pair)
}

/// Element of the parabolic subgroups acting on `W`: a 2×2 first factor
/// and a 4×4 second factor, rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HElement {
    pub g1: QMat2,
    pub p: QMat4,
}

impl HElement {
    /// Upper-triangular `g1` and block upper-triangular `p` (2×2 blocks):
    /// the shape that preserves the subspace `W`.
    pub fn stabilizes_w(&self) -> bool {
        self.g1.e[1][0].is_zero()
            && self.p.e[2][0].is_zero()
            && self.p.e[2][1].is_zero()
            && self.p.e[3][0].is_zero()
            && self.p.e[3][1].is_zero()
    }

    /// Fully upper-triangular `p` on top of [`HElement::stabilizes_w`].
    pub fn is_b_shape(&self) -> bool {
        self.stabilizes_w() && self.p.e[1][0].is_zero() && self.p.e[3][2].is_zero()
    }

    pub fn det_product(&self) -> Rational {
        self.g1.det() * self.p.det()
    }

    pub fn act_on(&self, pair: &IAltPair) -> QAltPair {
        pair.to_rational().act(&self.g1, &self.p)
    }
}

/// The characters `(χ0, χ1)` of a `W`-stabilizing block element, obtained
/// by probing: act on generic elements of `W` and divide the invariants.
///
/// In closed form `χ0 = v·det(A)` and `χ1 = s²·det(p)`, where `g1 =
/// (s t; 0 v)` and `A` is the upper-left block of `p`; the probe result is
/// asserted against a second probe rather than trusted from one sample.
pub fn character_h(g: &HElement) -> Result<(Rational, Rational)> {
    if !g.stabilizes_w() {
        return Err(Error::BlockShape);
    }
    let probes = [
        AltPair::new(
            Alt4::from_i64(0, 1, 0, 0, 1, 5),
            Alt4::from_i64(1, 0, 0, 0, 0, 0),
        ),
        AltPair::new(
            Alt4::from_i64(0, 2, 1, 1, 3, -2),
            Alt4::from_i64(3, 1, -1, 0, 2, 4),
        ),
    ];
    let mut chi0: Option<Rational> = None;
    let mut chi1: Option<Rational> = None;
    for probe in &probes {
        debug_assert!(probe.in_w());
        let (_, p0, p1) = probe.to_rational().invariants_h();
        let (_, p0g, p1g) = g.act_on(probe).invariants_h();
        let c0 = p0g / p0;
        let c1 = p1g / p1;
        match (&chi0, &chi1) {
            (None, None) => {
                chi0 = Some(c0);
                chi1 = Some(c1);
            }
            (Some(e0), Some(e1)) => {
                assert_eq!(*e0, c0, "χ0 must not depend on the probe");
                assert_eq!(*e1, c1, "χ1 must not depend on the probe");
            }
            _ => unreachable!(),
        }
    }
    Ok((chi0.unwrap(), chi1.unwrap()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A stabilizer of `canonical_w(d)` inside the triangular subgroup, indexed
/// by `a3 ≠ 0`, `b3`, and an overall sign on the second factor.
///
/// The family is closed under composition with the affine parameter law
/// `(a3, b3)·(a3', b3') = (a3·a3', a3·b3' + b3)`, and acting on `w`
/// returns `w` exactly (checked on construction).
pub fn stabilizer_element(
    d: &Int,
    a3: &Rational,
    b3: &Rational,
    sign: Sign,
) -> Result<HElement> {
    use num_integer::Integer;
    if a3.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let w = canonical_w(d)?;
    let four = Int::from(4);
    let rem = d.mod_floor(&four);
    let one = Rational::one;
    let zero = Rational::zero;
    let alpha = a3.clone();
    let beta = b3.clone();
    let inv_alpha = one() / alpha.clone();
    let g1 = QMat2::from_rows([
        [inv_alpha.clone(), zero()],
        [zero(), inv_alpha.clone()],
    ]);
    let p = if rem.is_zero() {
        // n = -d/4 is the principal-form constant term.
        let n = Rational::from_integer(-d / &four);
        QMat4::from_rows([
            [
                alpha.clone(),
                beta.clone(),
                beta.clone(),
                n * (one() - alpha.clone()),
            ],
            [zero(), one(), one() - alpha.clone(), -beta.clone()],
            [zero(), zero(), alpha.clone(), beta.clone()],
            [zero(), zero(), zero(), one()],
        ])
    } else {
        // m = (d+3)/4.
        let m = Rational::from_integer((d + Int::from(3)) / &four);
        let shifted = beta.clone() + one() - alpha.clone();
        QMat4::from_rows([
            [
                alpha.clone(),
                shifted.clone(),
                shifted,
                (one() - alpha.clone()) * (one() - m),
            ],
            [zero(), one(), one() - alpha.clone(), -beta.clone()],
            [zero(), zero(), alpha.clone(), beta.clone()],
            [zero(), zero(), zero(), one()],
        ])
    };
    let p = match sign {
        Sign::Plus => p,
        Sign::Minus => p.neg(),
    };
    let elem = HElement { g1, p };
    assert_eq!(
        elem.act_on(&w),
        w.to_rational(),
        "stabilizer element must fix the canonical representative"
    );
    Ok(elem)
}
