//! 2×2×2 integer cubes and their three quadratic forms.
//!
//! A cube `(a, …, h)` is sliced three ways into pairs of 2×2 matrices:
//!
//! ```text
//! M1 = (a b; c d)   N1 = (e f; g h)
//! M2 = (a e; c g)   N2 = (b f; d h)
//! M3 = (a e; b f)   N3 = (c g; d h)
//! ```
//!
//! Each pair carries the form `Q_i(u, v) = −det(M_i·u − N_i·v)`; the three
//! discriminants agree and give the one relative invariant `P` of the
//! `GL2³` action, with character `det(g1)²·det(g2)²·det(g3)²`. Over a
//! negative invariant the classes of the three forms multiply to the
//! principal class, and cubes with prescribed `(class Q2, class Q3)` can be
//! built from any pair of primitive forms of the same discriminant.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{HashSet, VecDeque};

use crate::arith::{IMat2, Int};
use crate::bqf::{self, Bqf};
use crate::{Error, Result};

/// A 2×2×2 integer cube with entries in the slicing layout above.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cube {
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub d: Int,
    pub e: Int,
    pub f: Int,
    pub g: Int,
    pub h: Int,
}

/// A triple of 2×2 integer matrices acting on a cube, one per slicing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeTriple {
    pub g1: IMat2,
    pub g2: IMat2,
    pub g3: IMat2,
}

impl CubeTriple {
    pub fn identity() -> Self {
        CubeTriple {
            g1: IMat2::identity(),
            g2: IMat2::identity(),
            g3: IMat2::identity(),
        }
    }
}

/// Index pairs of the three slicings: `(M-indices, N-indices)` into the
/// entry array `[a, b, c, d, e, f, g, h]`.
const SLICES: [([usize; 4], [usize; 4]); 3] = [
    ([0, 1, 2, 3], [4, 5, 6, 7]),
    ([0, 4, 2, 6], [1, 5, 3, 7]),
    ([0, 4, 1, 5], [2, 6, 3, 7]),
];

impl Cube {
    #[allow(clippy::too_many_arguments)]
    pub fn new(a: Int, b: Int, c: Int, d: Int, e: Int, f: Int, g: Int, h: Int) -> Self {
        Cube { a, b, c, d, e, f, g, h }
    }

    pub fn from_i64(v: [i64; 8]) -> Self {
        let e: Vec<Int> = v.iter().map(|&x| Int::from(x)).collect();
        Cube::from_entries(e.try_into().unwrap())
    }

    pub fn zero() -> Self {
        Cube::from_i64([0; 8])
    }

    pub fn entries(&self) -> [&Int; 8] {
        [
            &self.a, &self.b, &self.c, &self.d, &self.e, &self.f, &self.g, &self.h,
        ]
    }

    pub fn from_entries(v: [Int; 8]) -> Self {
        let [a, b, c, d, e, f, g, h] = v;
        Cube { a, b, c, d, e, f, g, h }
    }

    /// The pair `(M_i, N_i)` of the `i`-th slicing, `i` in 1..=3.
    pub fn slice(&self, i: u8) -> Result<(IMat2, IMat2)> {
        if !(1..=3).contains(&i) {
            return Err(Error::SliceIndex(i));
        }
        let (mi, ni) = SLICES[(i - 1) as usize];
        let ent = self.entries();
        let pick = |idx: [usize; 4]| {
            IMat2::from_rows([
                [ent[idx[0]].clone(), ent[idx[1]].clone()],
                [ent[idx[2]].clone(), ent[idx[3]].clone()],
            ])
        };
        Ok((pick(mi), pick(ni)))
    }

    /// The form `Q_i(u, v) = −det(M_i·u − N_i·v)` by its closed coefficient
    /// formulas.
    pub fn qform(&self, i: u8) -> Result<Bqf> {
        let Cube { a, b, c, d, e, f, g, h } = self;
        let (qa, qb, qc) = match i {
            1 => (
                b * c - a * d,
                a * h - b * g - c * f + d * e,
                f * g - e * h,
            ),
            2 => (
                c * e - a * g,
                a * h + b * g - c * f - d * e,
                d * f - b * h,
            ),
            3 => (
                b * e - a * f,
                a * h - b * g + c * f - d * e,
                d * g - c * h,
            ),
            _ => return Err(Error::SliceIndex(i)),
        };
        Ok(Bqf::new(qa, qb, qc))
    }

    /// The relative invariant `P`: the common discriminant of the three
    /// slice forms (their agreement is asserted).
    pub fn invariant(&self) -> Int {
        let d1 = self.qform(1).unwrap().discriminant();
        let d2 = self.qform(2).unwrap().discriminant();
        let d3 = self.qform(3).unwrap().discriminant();
        assert!(d1 == d2 && d2 == d3, "slice discriminants must agree");
        d1
    }

    /// Act on slicing `axis` (0-based) by `g = (s t; u v)`:
    /// `(M, N) ↦ (s·M + u·N, t·M + v·N)`.
    fn act_axis(&self, axis: usize, g: &IMat2) -> Cube {
        let (mi, ni) = SLICES[axis];
        let ent = self.entries();
        let (s, t) = (&g.e[0][0], &g.e[0][1]);
        let (u, v) = (&g.e[1][0], &g.e[1][1]);
        let mut out: [Int; 8] = std::array::from_fn(|_| Int::zero());
        for k in 0..4 {
            out[mi[k]] = s * ent[mi[k]] + u * ent[ni[k]];
            out[ni[k]] = t * ent[mi[k]] + v * ent[ni[k]];
        }
        Cube::from_entries(out)
    }

    /// Full action of a triple; the three per-slicing actions commute.
    pub fn act(&self, t: &CubeTriple) -> Cube {
        self.act_axis(0, &t.g1).act_axis(1, &t.g2).act_axis(2, &t.g3)
    }
}

/// Character of the action: `det(g1)²·det(g2)²·det(g3)²`, so that
/// `P(A·t) = character(t)·P(A)`.
pub fn character(t: &CubeTriple) -> Int {
    let d1 = t.g1.det();
    let d2 = t.g2.det();
    let d3 = t.g3.det();
    (&d1 * &d1) * (&d2 * &d2) * (&d3 * &d3)
}

/// Triple composition law: the classes of `Q1`, `Q2`, `Q3` multiply to the
/// principal class of disc `P`.
///
/// Requires a projective cube with negative invariant whose slice forms are
/// all positive definite; negative definite slices fall outside the
/// positive definite class group and are rejected.
pub fn triple_law_check(cube: &Cube) -> Result<bool> {
    let p = cube.invariant();
    if !p.is_negative() {
        return Err(Error::NonNegativeInvariant(p));
    }
    let qs = [cube.qform(1)?, cube.qform(2)?, cube.qform(3)?];
    for q in &qs {
        if !q.is_primitive() {
            return Err(Error::Imprimitive(q.a.clone(), q.b.clone(), q.c.clone()));
        }
        if !q.is_positive_definite() {
            return Err(Error::NotPositiveDefinite(
                q.a.clone(),
                q.b.clone(),
                q.c.clone(),
            ));
        }
    }
    let prod = bqf::compose(&qs[0], &bqf::compose(&qs[1], &qs[2])?)?;
    Ok(prod == bqf::s_of_d(&p)?)
}

/// Build a cube whose slice-2 and slice-3 forms lie in the classes of `f1`
/// and `f2`, with slice-1 in the inverse of their composition and invariant
/// equal to the common discriminant.
///
/// Construction: put `f1`, `f2` into united shape `(a1, B, a2·C)`,
/// `(a2, B, a1·C)` with `gcd(a1, a2) = 1` and a shared middle coefficient,
/// then lay the six numbers into a cube. The advertised properties are
/// re-checked from the finished cube rather than trusted.
pub fn cube_from_pair(f1: &Bqf, f2: &Bqf) -> Result<Cube> {
    let d = f1.discriminant();
    if f2.discriminant() != d {
        return Err(Error::DiscriminantMismatch(d, f2.discriminant()));
    }
    if !d.is_negative() {
        return Err(Error::NotADiscriminant(d));
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
    let (r1, _) = bqf::reduce(f1)?;
    let (a1, a2, bb) = bqf::united_pair(&r1, f2);
    let num = &bb * &bb - &d;
    let den = Int::from(4) * &a1 * &a2;
    assert!(num.is_multiple_of(&den));
    let cc = num / den;
    let cube = Cube::new(
        Int::zero(),
        a2.clone(),
        a1.clone(),
        -bb.clone(),
        Int::one(),
        Int::zero(),
        Int::zero(),
        -cc,
    );
    // Postconditions, computed from the cube itself.
    assert_eq!(cube.invariant(), d);
    assert_eq!(bqf::reduce(&cube.qform(2)?)?.0, bqf::reduce(f1)?.0);
    assert_eq!(bqf::reduce(&cube.qform(3)?)?.0, bqf::reduce(f2)?.0);
    let composite = bqf::compose(f1, f2)?;
    assert_eq!(
        bqf::reduce(&cube.qform(1)?)?.0,
        bqf::reduce(&composite.inverse())?.0
    );
    Ok(cube)
}

/// Result of a bounded orbit search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitReduction {
    /// The search closed: this is the lexicographically minimal cube
    /// reachable without any intermediate entry exceeding the bound.
    Minimal(Cube),
    /// The state budget ran out first. `best` is the smallest cube seen; it
    /// is not claimed to be canonical.
    Inconclusive { best: Cube, visited: usize },
}

pub const DEFAULT_ORBIT_BUDGET: usize = 4_000_000;

/// Elementary `SL2` moves applied in each of the three slicings:
/// column additions `T^{±1}` and the swap `S^{±1}`.
fn generator_moves() -> Vec<(usize, IMat2)> {
    let t = IMat2::from_i64([[1, 1], [0, 1]]);
    let ti = IMat2::from_i64([[1, -1], [0, 1]]);
    let s = IMat2::from_i64([[0, -1], [1, 0]]);
    let si = IMat2::from_i64([[0, 1], [-1, 0]]);
    let mut moves = Vec::new();
    for axis in 0..3 {
        for g in [&t, &ti, &s, &si] {
            moves.push((axis, g.clone()));
        }
    }
    moves
}

impl Cube {
    /// Breadth-first search over generator moves, keeping every
    /// intermediate entry within `bound` in absolute value, with the
    /// default state budget.
    pub fn orbit_reduce(&self, bound: u32) -> OrbitReduction {
        self.orbit_reduce_with_budget(bound, DEFAULT_ORBIT_BUDGET)
    }

    /// As [`Cube::orbit_reduce`] with an explicit budget on visited states.
    ///
    /// The start cube itself may exceed the bound; only cubes reached by
    /// moves are constrained. The result is deterministic, and `Minimal` is
    /// returned only when the bounded component was explored completely.
    pub fn orbit_reduce_with_budget(&self, bound: u32, budget: usize) -> OrbitReduction {
        let bound = i64::from(bound);
        let moves = generator_moves();
        let moves_i64: Vec<(usize, [i64; 4])> = moves
            .iter()
            .map(|(axis, g)| {
                (
                    *axis,
                    [
                        i64::try_from(&g.e[0][0]).unwrap(),
                        i64::try_from(&g.e[0][1]).unwrap(),
                        i64::try_from(&g.e[1][0]).unwrap(),
                        i64::try_from(&g.e[1][1]).unwrap(),
                    ],
                )
            })
            .collect();

        let mut best = self.clone();
        let mut visited: HashSet<[i64; 8]> = HashSet::new();
        let mut queue: VecDeque<[i64; 8]> = VecDeque::new();

        let start_small: Option<[i64; 8]> = {
            let vals: Vec<Option<i64>> = self
                .entries()
                .iter()
                .map(|x| i64::try_from(*x).ok())
                .collect();
            if vals.iter().all(|v| v.is_some()) {
                Some(std::array::from_fn(|i| vals[i].unwrap()))
            } else {
                None
            }
        };

        let in_bound = |st: &[i64; 8]| st.iter().all(|x| x.abs() <= bound);
        let apply_move = |st: &[i64; 8], axis: usize, g: &[i64; 4]| -> [i64; 8] {
            let (mi, ni) = SLICES[axis];
            let mut out = [0i64; 8];
            for k in 0..4 {
                out[mi[k]] = g[0] * st[mi[k]] + g[2] * st[ni[k]];
                out[ni[k]] = g[1] * st[mi[k]] + g[3] * st[ni[k]];
            }
            out
        };
        let to_cube = |st: &[i64; 8]| Cube::from_i64(*st);

        // Seed the search. An out-of-bound start contributes the in-bound
        // cubes one move away.
        match start_small {
            Some(st) if in_bound(&st) => {
                visited.insert(st);
                queue.push_back(st);
            }
            _ => {
                for (axis, g) in &moves {
                    let moved = self.act_axis(*axis, g);
                    let vals: Vec<Option<i64>> = moved
                        .entries()
                        .iter()
                        .map(|x| i64::try_from(*x).ok())
                        .collect();
                    if vals.iter().all(|v| v.is_some()) {
                        let st: [i64; 8] = std::array::from_fn(|i| vals[i].unwrap());
                        if in_bound(&st) && visited.insert(st) {
                            queue.push_back(st);
                        }
                    }
                }
            }
        }
        for st in &visited {
            let c = to_cube(st);
            if cube_key(&c) < cube_key(&best) {
                best = c;
            }
        }

        while let Some(st) = queue.pop_front() {
            for (axis, g) in &moves_i64 {
                let next = apply_move(&st, *axis, g);
                if !in_bound(&next) || visited.contains(&next) {
                    continue;
                }
                if visited.len() >= budget {
                    return OrbitReduction::Inconclusive {
                        best,
                        visited: visited.len(),
                    };
                }
                let c = to_cube(&next);
                if cube_key(&c) < cube_key(&best) {
                    best = c;
                }
                visited.insert(next);
                queue.push_back(next);
            }
        }
        OrbitReduction::Minimal(best)
    }
}

fn cube_key(c: &Cube) -> [Int; 8] {
    let e = c.entries();
    std::array::from_fn(|i| e[i].clone())
}
