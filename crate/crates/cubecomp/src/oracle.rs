//! Independent brute-force reference computations.
//!
//! Each function here recomputes something the main modules produce, by a
//! different route: composition through ideal lattices instead of the
//! congruence method, class counts through bounded orbit closure instead of
//! reduction theory, slice forms through point evaluation instead of closed
//! coefficient formulas. The test suites and `verify all` compare the two
//! routes; nothing in this module calls the code path it checks.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{HashMap, HashSet, VecDeque};

use crate::arith::{IMat2, Int};
use crate::bqf::{self, Bqf};
use crate::Result;

/// Recover `Q(u, v) = −det(M·u − N·v)` from three point evaluations
/// instead of the closed coefficient formulas.
pub fn qform_from_slices(m: &IMat2, n: &IMat2) -> Bqf {
    // Q(1,0) = −det M, Q(0,1) = −det N, Q(1,1) = −det(M − N).
    let qa = -m.det();
    let qc = -n.det();
    let m_minus_n = m.add(&n.neg());
    let q11 = -m_minus_n.det();
    let qb = q11 - &qa - &qc;
    Bqf::new(qa, qb, qc)
}

/// Elements `(p + q·√D)/2` of the quadratic order, as coordinate pairs.
fn mul_elem(x: &(Int, Int), y: &(Int, Int), d: &Int) -> (Int, Int) {
    let p = (&x.0 * &y.0 + &x.1 * &y.1 * d) / Int::from(2);
    let q = (&x.0 * &y.1 + &x.1 * &y.0) / Int::from(2);
    (p, q)
}

/// Compose two primitive positive definite forms by multiplying the ideal
/// lattices `[a, (b + √D)/2]` and reading the norm form off a Hermite basis
/// of the product.
pub fn compose_via_ideals(f1: &Bqf, f2: &Bqf) -> Result<Bqf> {
    let d = f1.discriminant();
    assert_eq!(d, f2.discriminant());
    let gens1 = [
        (Int::from(2) * &f1.a, Int::zero()),
        (f1.b.clone(), Int::one()),
    ];
    let gens2 = [
        (Int::from(2) * &f2.a, Int::zero()),
        (f2.b.clone(), Int::one()),
    ];
    let mut products = Vec::new();
    for x in &gens1 {
        for y in &gens2 {
            products.push(mul_elem(x, y, &d));
        }
    }
    // Hermite basis of the rank-2 lattice: (a11, 0), (a12, a22).
    let mut carrier: Option<(Int, Int)> = None;
    let mut zeros: Vec<Int> = Vec::new();
    for (p, q) in products {
        if q.is_zero() {
            zeros.push(p);
            continue;
        }
        match carrier.take() {
            None => carrier = Some((p, q)),
            Some((cp, cq)) => {
                let e = cq.extended_gcd(&q);
                // g = x·cq + y·q; (e.x, e.y) combine the carriers, and the
                // complementary combination has zero q-part.
                let g = e.gcd;
                let new = (&e.x * &cp + &e.y * &p, g.clone());
                let k1 = &cq / &g;
                let k2 = &q / &g;
                zeros.push(&k2 * &cp - &k1 * &p);
                carrier = Some(new);
            }
        }
    }
    let (mut a12, a22) = carrier.expect("ideal lattice has full rank");
    let a22 = a22.abs();
    let mut a11 = Int::zero();
    for z in zeros {
        a11 = a11.gcd(&z);
    }
    assert!(a11.is_positive());
    a12 = a12.mod_floor(&a11);
    // Norm form of the lattice spanned by a11/2 and (a12 + a22·√D)/2,
    // divided by the lattice norm a11·a22/2.
    let a = &a11 / (Int::from(2) * &a22);
    assert_eq!(&a * Int::from(2) * &a22, a11, "norm form stays integral");
    let b = &a12 / &a22;
    assert_eq!(&b * &a22, a12, "norm form stays integral");
    let c = (&b * &b - &d) / (Int::from(4) * &a);
    Ok(bqf::reduce(&Bqf::new(a, b, c))?.0)
}

/// Count `SL2(Z)` classes of primitive positive definite forms of
/// discriminant `d < 0` by closing small forms under generator moves at
/// bounded height, with no appeal to reduction theory.
///
/// Every class contains a form with all coefficients at most
/// `h0 = |d|/4 + 2`; moves are allowed to roam up to `4·h0` before being
/// cut off. The count is the number of connected components that touch the
/// small box.
pub fn class_count_bfs(d: &Int) -> usize {
    let dd = i64::try_from(&-d.clone()).expect("oracle runs at desk scale");
    let h0 = dd / 4 + 2;
    let h1 = 4 * h0;
    let in_box = |f: &(i64, i64, i64), h: i64| {
        f.0 >= 1 && f.0 <= h && f.1.abs() <= h && f.2 >= 1 && f.2 <= h
    };
    let primitive = |f: &(i64, i64, i64)| f.0.gcd(&f.1).gcd(&f.2) == 1;

    // All primitive forms of discriminant d in the small box.
    let mut seeds = Vec::new();
    for a in 1..=h0 {
        for b in -h0..=h0 {
            let num = b * b + dd;
            if num <= 0 || num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            let f = (a, b, c);
            if in_box(&f, h0) && primitive(&f) {
                seeds.push(f);
            }
        }
    }

    let moves = |f: (i64, i64, i64)| {
        let (a, b, c) = f;
        [
            (a, b + 2 * a, a + b + c),  // T
            (a, b - 2 * a, a - b + c),  // T^{-1}
            (c, -b, a),                 // S
        ]
    };

    let mut component: HashMap<(i64, i64, i64), usize> = HashMap::new();
    let mut count = 0usize;
    for seed in seeds {
        if component.contains_key(&seed) {
            continue;
        }
        count += 1;
        let mut queue = VecDeque::new();
        component.insert(seed, count);
        queue.push_back(seed);
        while let Some(f) = queue.pop_front() {
            for g in moves(f) {
                if in_box(&g, h1) && !component.contains_key(&g) {
                    component.insert(g, count);
                    queue.push_back(g);
                }
            }
        }
    }
    count
}

/// Distinct reduced forms reachable from `f` by words in the generators of
/// length at most `depth` — a slow independent check that reduction lands
/// in the same class.
pub fn equivalent_forms_by_words(f: &Bqf, depth: usize) -> HashSet<Bqf> {
    let t = IMat2::from_i64([[1, 1], [0, 1]]);
    let ti = IMat2::from_i64([[1, -1], [0, 1]]);
    let s = IMat2::from_i64([[0, -1], [1, 0]]);
    let mut seen: HashSet<Bqf> = HashSet::new();
    let mut frontier = vec![f.clone()];
    seen.insert(f.clone());
    for _ in 0..depth {
        let mut next = Vec::new();
        for g in frontier {
            for m in [&t, &ti, &s] {
                let h = g.apply(m);
                if seen.insert(h.clone()) {
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    seen
}
