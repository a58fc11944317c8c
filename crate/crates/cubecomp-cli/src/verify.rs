//! The `verify all` property suite.
//!
//! Every module's stated invariants, run with fixed seeds so that two
//! invocations produce identical reports. Each check returns one line;
//! the command exits nonzero if any line fails.

use cubecomp::altpair::{self, Alt4, AltPair, HElement, Sign};
use cubecomp::arith::{self, IMat2, IMat4, Int, QMat2, QMat4};
use cubecomp::bqf::{self, Bqf};
use cubecomp::cube::{self, Cube, CubeTriple};
use cubecomp::localcount::{self, sqrt_count_mod, sqrt_count_mod_fast, sqrt_count_mod_scan};
use cubecomp::oracle;
use cubecomp::zeta::{self, CoeffTable};
use cubecomp::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> CheckResult {
    CheckResult { name, pass, detail }
}

fn int(x: i64) -> Int {
    Int::from(x)
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(int(n), int(d))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_cube(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Cube {
    Cube::from_i64(std::array::from_fn(|_| rng.gen_range(lo..=hi)))
}

fn random_sl2(rng: &mut ChaCha8Rng, len: usize) -> IMat2 {
    let t = IMat2::from_i64([[1, 1], [0, 1]]);
    let ti = IMat2::from_i64([[1, -1], [0, 1]]);
    let s = IMat2::from_i64([[0, -1], [1, 0]]);
    let mut m = IMat2::identity();
    for _ in 0..len {
        m = m.mul(match rng.gen_range(0..3) {
            0 => &t,
            1 => &ti,
            _ => &s,
        });
    }
    m
}

fn random_invertible(rng: &mut ChaCha8Rng, bound: i64) -> IMat2 {
    loop {
        let m = IMat2::from_i64(std::array::from_fn(|_| {
            std::array::from_fn(|_| rng.gen_range(-bound..=bound))
        }));
        if m.det() != int(0) {
            return m;
        }
    }
}

fn fundamental_discriminants(limit: i64) -> Vec<i64> {
    (1..=limit)
        .map(|n| -n)
        .filter(|d| bqf::is_fundamental(&int(*d)))
        .collect()
}

fn discriminants(limit: i64) -> Vec<i64> {
    (1..=limit)
        .map(|n| -n)
        .filter(|d| d.rem_euclid(4) == 0 || d.rem_euclid(4) == 1)
        .collect()
}

fn arith_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    {
        let mut r = rng(1);
        let mut failures = 0usize;
        for _ in 0..1000 {
            let a = IMat2::from_i64(std::array::from_fn(|_| {
                std::array::from_fn(|_| r.gen_range(-30..=30))
            }));
            let b = IMat2::from_i64(std::array::from_fn(|_| {
                std::array::from_fn(|_| r.gen_range(-30..=30))
            }));
            if a.mul(&b).det() != a.det() * b.det() {
                failures += 1;
            }
            let a4 = IMat4::from_i64(std::array::from_fn(|_| {
                std::array::from_fn(|_| r.gen_range(-9..=9))
            }));
            let b4 = IMat4::from_i64(std::array::from_fn(|_| {
                std::array::from_fn(|_| r.gen_range(-9..=9))
            }));
            if a4.mul(&b4).det() != a4.det() * b4.det() {
                failures += 1;
            }
        }
        out.push(check(
            "arith.det_multiplicative",
            failures == 0,
            format!("1000 trials each in dims 2 and 4, {failures} failures"),
        ));
    }
    {
        let mut r = rng(2);
        let ds = [-3i64, -4, -7, -8, -20, -23, -47];
        let mut failures = 0usize;
        for _ in 0..2000 {
            let d = int(ds[r.gen_range(0..ds.len())]);
            let m = int(r.gen_range(-400..=400i64));
            let n = int(r.gen_range(-400..=400i64));
            let lhs = arith::kronecker(&d, &(&m * &n)).unwrap();
            let rhs = arith::kronecker(&d, &m).unwrap() * arith::kronecker(&d, &n).unwrap();
            if lhs != rhs {
                failures += 1;
            }
        }
        out.push(check(
            "arith.kronecker_multiplicative",
            failures == 0,
            format!("2000 random pairs, {failures} failures"),
        ));
    }
    {
        let mut failures = 0usize;
        let mut trials = 0usize;
        for d in [-3i64, -4, -7, -11, -20, -23, -47, -84] {
            for p in (3i64..50).filter(|&p| arith::is_prime(&int(p))) {
                if d % p == 0 {
                    continue;
                }
                trials += 1;
                let solvable = (0..p).any(|x| (x * x - d).rem_euclid(p) == 0);
                let chi = arith::kronecker(&int(d), &int(p)).unwrap();
                if (chi == 1) != solvable {
                    failures += 1;
                }
            }
        }
        out.push(check(
            "arith.kronecker_residue_law",
            failures == 0,
            format!("{trials} (d, p) pairs, {failures} failures"),
        ));
    }
    out
}

fn bqf_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    {
        let mut r = rng(3);
        let mut failures = 0usize;
        let mut trials = 0usize;
        while trials < 500 {
            let f = Bqf::from_i64(
                r.gen_range(1..=40),
                r.gen_range(-80..=80),
                r.gen_range(1..=40),
            );
            if !f.is_positive_definite() {
                continue;
            }
            trials += 1;
            let (g, m) = bqf::reduce(&f).unwrap();
            if !g.is_reduced() || f.apply(&m) != g || bqf::reduce(&g).unwrap().0 != g {
                failures += 1;
            }
        }
        out.push(check(
            "bqf.reduction_idempotent_transform",
            failures == 0,
            format!("500 random forms, {failures} failures"),
        ));
    }
    {
        let mut r = rng(4);
        let ds = [-23i64, -47, -71, -84, -95];
        let mut failures = 0usize;
        for _ in 0..100 {
            let d = ds[r.gen_range(0..ds.len())];
            let group = bqf::class_group(&int(d)).unwrap();
            let f1 = group.reps[r.gen_range(0..group.h())].apply(&random_sl2(&mut r, 5));
            let f2 = group.reps[r.gen_range(0..group.h())].apply(&random_sl2(&mut r, 5));
            let base = bqf::compose(&f1, &f2).unwrap();
            let g1 = f1.apply(&random_sl2(&mut r, 7));
            let g2 = f2.apply(&random_sl2(&mut r, 7));
            if bqf::compose(&g1, &g2).unwrap() != base {
                failures += 1;
            }
        }
        out.push(check(
            "bqf.composition_well_defined",
            failures == 0,
            format!("100 random translate pairs, {failures} failures"),
        ));
    }
    {
        let mut r = rng(5);
        let mut failures = 0usize;
        let mut trials = 0usize;
        for d in [-23i64, -47, -71, -84, -95, -119, -231, -479] {
            let group = bqf::class_group(&int(d)).unwrap();
            for _ in 0..15 {
                trials += 1;
                let f1 = &group.reps[r.gen_range(0..group.h())];
                let f2 = &group.reps[r.gen_range(0..group.h())];
                if bqf::compose(f1, f2).unwrap() != oracle::compose_via_ideals(f1, f2).unwrap()
                {
                    failures += 1;
                }
            }
        }
        out.push(check(
            "bqf.composition_ideal_oracle",
            failures == 0,
            format!("{trials} class pairs, {failures} failures"),
        ));
    }
    {
        let ds = discriminants(4000);
        let bad: Vec<i64> = ds
            .par_iter()
            .filter(|&&d| {
                let group = bqf::class_group(&int(d)).unwrap();
                let fundamental_ok = !bqf::is_fundamental(&int(d))
                    || bqf::heegner_points(&int(d)).unwrap().len() == group.h();
                !(group.is_abelian_group()
                    && group.reps[0] == bqf::s_of_d(&int(d)).unwrap()
                    && fundamental_ok)
            })
            .copied()
            .collect();
        out.push(check(
            "bqf.group_axioms_and_heegner_count",
            bad.is_empty(),
            format!(
                "{} discriminants to -4000 (fundamental and not), {} failures",
                ds.len(),
                bad.len()
            ),
        ));
    }
    {
        let ds = fundamental_discriminants(400);
        let bad: Vec<i64> = ds
            .par_iter()
            .filter(|&&d| {
                bqf::class_group(&int(d)).unwrap().h() != oracle::class_count_bfs(&int(d))
            })
            .copied()
            .collect();
        out.push(check(
            "bqf.class_number_bfs_oracle",
            bad.is_empty(),
            format!(
                "{} fundamental discriminants to -400, {} failures",
                ds.len(),
                bad.len()
            ),
        ));
    }
    {
        let mut r = rng(6);
        let ds = [-3i64, -4, -7, -8, -20, -23];
        let mut failures = 0usize;
        for _ in 0..300 {
            let d = ds[r.gen_range(0..ds.len())];
            let x = rat(r.gen_range(-20..=20), r.gen_range(1..=9));
            let y = rat(r.gen_range(-20..=20), r.gen_range(1..=9));
            if x == rat(0, 1) && y == rat(0, 1) {
                continue;
            }
            let t = bqf::torus_element(&int(d), &x, &y).unwrap();
            if t.det() != &x * &x - &y * &y * rat(d, 4) {
                failures += 1;
            }
        }
        out.push(check(
            "bqf.torus_determinant",
            failures == 0,
            format!("300 random rational points, {failures} failures"),
        ));
    }
    out
}

fn cube_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    {
        let mut r = rng(7);
        let mut disc_failures = 0usize;
        let mut oracle_failures = 0usize;
        for _ in 0..10_000 {
            let a = random_cube(&mut r, -50, 50);
            let d1 = a.qform(1).unwrap().discriminant();
            if a.qform(2).unwrap().discriminant() != d1
                || a.qform(3).unwrap().discriminant() != d1
            {
                disc_failures += 1;
            }
            for i in 1..=3u8 {
                let (m, n) = a.slice(i).unwrap();
                if a.qform(i).unwrap() != oracle::qform_from_slices(&m, &n) {
                    oracle_failures += 1;
                }
            }
        }
        out.push(check(
            "cube.disc_agreement",
            disc_failures == 0,
            format!("10000 random cubes, {disc_failures} failures"),
        ));
        out.push(check(
            "cube.qform_evaluation_oracle",
            oracle_failures == 0,
            format!("10000 random cubes x 3 slices, {oracle_failures} failures"),
        ));
    }
    {
        let mut r = rng(8);
        let mut failures = 0usize;
        for _ in 0..10_000 {
            let a = random_cube(&mut r, -20, 20);
            let t = CubeTriple {
                g1: random_invertible(&mut r, 3),
                g2: random_invertible(&mut r, 3),
                g3: random_invertible(&mut r, 3),
            };
            if a.act(&t).invariant() != cube::character(&t) * a.invariant() {
                failures += 1;
            }
        }
        out.push(check(
            "cube.equivariance",
            failures == 0,
            format!("10000 random (cube, triple) pairs, {failures} failures"),
        ));
    }
    {
        let mut r = rng(9);
        let ds = [-23i64, -47, -71];
        let mut failures = 0usize;
        for _ in 0..50 {
            let d = ds[r.gen_range(0..ds.len())];
            let group = bqf::class_group(&int(d)).unwrap();
            let f1 = &group.reps[r.gen_range(0..group.h())];
            let f2 = &group.reps[r.gen_range(0..group.h())];
            let a = cube::cube_from_pair(f1, f2).unwrap();
            let t = CubeTriple {
                g1: random_sl2(&mut r, 4),
                g2: random_sl2(&mut r, 4),
                g3: random_sl2(&mut r, 4),
            };
            let b = a.act(&t);
            for i in 1..=3u8 {
                if bqf::reduce(&a.qform(i).unwrap()).unwrap().0
                    != bqf::reduce(&b.qform(i).unwrap()).unwrap().0
                {
                    failures += 1;
                }
            }
        }
        out.push(check(
            "cube.class_invariance",
            failures == 0,
            format!("50 random translates x 3 slices, {failures} failures"),
        ));
    }
    {
        let mut r = rng(10);
        let mut failures = 0usize;
        let mut cubes = 0usize;
        for d in [-3i64, -4, -7, -8, -11, -15, -20, -23, -47] {
            let group = bqf::class_group(&int(d)).unwrap();
            for f1 in &group.reps {
                for f2 in &group.reps {
                    let a = cube::cube_from_pair(f1, f2).unwrap();
                    cubes += 1;
                    if !cube::triple_law_check(&a).unwrap() {
                        failures += 1;
                    }
                    for _ in 0..10 {
                        let t = CubeTriple {
                            g1: random_sl2(&mut r, 3),
                            g2: random_sl2(&mut r, 3),
                            g3: random_sl2(&mut r, 3),
                        };
                        if !cube::triple_law_check(&a.act(&t)).unwrap() {
                            failures += 1;
                        }
                    }
                }
            }
        }
        out.push(check(
            "cube.triple_law",
            failures == 0,
            format!("{cubes} constructed cubes x 11 checks, {failures} failures"),
        ));
    }
    {
        let mut failures = 0usize;
        for d in [-3i64, -4, -7, -8, -11] {
            let group = bqf::class_group(&int(d)).unwrap();
            let mut pairs = std::collections::HashSet::new();
            for f1 in &group.reps {
                for f2 in &group.reps {
                    let a = cube::cube_from_pair(f1, f2).unwrap();
                    pairs.insert((
                        bqf::reduce(&a.qform(2).unwrap()).unwrap().0,
                        bqf::reduce(&a.qform(3).unwrap()).unwrap().0,
                    ));
                }
            }
            if pairs.len() != group.h() * group.h() {
                failures += 1;
            }
        }
        out.push(check(
            "cube.heegner_pair_count",
            failures == 0,
            format!("5 discriminants, {failures} failures"),
        ));
    }
    out
}

fn altpair_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let random_alt4 = |r: &mut ChaCha8Rng, bound: i64| {
        Alt4::from_i64(
            r.gen_range(-bound..=bound),
            r.gen_range(-bound..=bound),
            r.gen_range(-bound..=bound),
            r.gen_range(-bound..=bound),
            r.gen_range(-bound..=bound),
            r.gen_range(-bound..=bound),
        )
    };
    {
        let mut r = rng(11);
        let mut pf_failures = 0usize;
        let mut fuse_failures = 0usize;
        for _ in 0..10_000 {
            let m = random_alt4(&mut r, 60);
            let pf = m.pfaffian();
            if &pf * &pf != m.to_mat4().det() {
                pf_failures += 1;
            }
            let a = random_cube(&mut r, -50, 50);
            if altpair::fuse(&a).qform_pair() != a.qform(1).unwrap() {
                fuse_failures += 1;
            }
        }
        out.push(check(
            "altpair.pfaffian_squares_to_det",
            pf_failures == 0,
            format!("10000 random alternating matrices, {pf_failures} failures"),
        ));
        out.push(check(
            "altpair.fusion_compatibility",
            fuse_failures == 0,
            format!("10000 random cubes, {fuse_failures} failures"),
        ));
    }
    {
        let mut r = rng(12);
        let mut failures = 0usize;
        for _ in 0..300 {
            let f = AltPair::new(random_alt4(&mut r, 8), random_alt4(&mut r, 8));
            let g1 = random_sl2(&mut r, 5);
            let mut g2 = IMat4::identity();
            for _ in 0..6 {
                let i = r.gen_range(0..4);
                let mut j = r.gen_range(0..4);
                while j == i {
                    j = r.gen_range(0..4);
                }
                let mut e = IMat4::identity();
                e.e[i][j] = int(r.gen_range(-2..=2));
                g2 = g2.mul(&e);
            }
            let moved = f.act(&g1, &g2);
            if moved.qform_pair().discriminant() != f.qform_pair().discriminant() {
                failures += 1;
            }
        }
        out.push(check(
            "altpair.disc_invariance",
            failures == 0,
            format!("300 random det-1 pairs, {failures} failures"),
        ));
    }
    {
        let mut r = rng(13);
        let mut failures = 0usize;
        let mut trials = 0usize;
        for _ in 0..200 {
            let g1 = QMat2::from_rows([
                [
                    rat(r.gen_range(-9..=9), r.gen_range(1..=6)),
                    rat(r.gen_range(-9..=9), r.gen_range(1..=6)),
                ],
                [rat(0, 1), rat(r.gen_range(-9..=9), r.gen_range(1..=6))],
            ]);
            let mut p = QMat4::from_rows(std::array::from_fn(|_| {
                std::array::from_fn(|_| rat(r.gen_range(-9..=9), r.gen_range(1..=6)))
            }));
            for i in 2..4 {
                for j in 0..2 {
                    p.e[i][j] = rat(0, 1);
                }
            }
            let g = HElement { g1, p };
            let (chi0, chi1) = match altpair::character_h(&g) {
                Ok(v) => v,
                Err(_) => continue,
            };
            trials += 1;
            let f = AltPair::new(
                {
                    let mut m = random_alt4(&mut r, 9);
                    m.r = int(0);
                    m
                },
                random_alt4(&mut r, 9),
            );
            let (_, p0, p1) = f.to_rational().invariants_h();
            let (_, p0g, p1g) = g.act_on(&f).invariants_h();
            if p0g != chi0 * p0 || p1g != chi1 * p1 {
                failures += 1;
            }
        }
        out.push(check(
            "altpair.character_consistency",
            failures == 0 && trials > 100,
            format!("{trials} random block elements, {failures} failures"),
        ));
    }
    {
        let mut r = rng(14);
        let mut failures = 0usize;
        let mut closure_failures = 0usize;
        for d in [-3i64, -4, -7, -8, -15, -20, -23, -47] {
            let d = int(d);
            let w = altpair::canonical_w(&d).unwrap();
            for _ in 0..100 {
                let a3 = rat(
                    if r.gen_bool(0.5) { 1 } else { -1 } * r.gen_range(1..=12),
                    r.gen_range(1..=8),
                );
                let b3 = rat(r.gen_range(-12..=12), r.gen_range(1..=8));
                let sign = if r.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
                let e = altpair::stabilizer_element(&d, &a3, &b3, sign).unwrap();
                if e.act_on(&w) != w.to_rational() {
                    failures += 1;
                }
            }
            for _ in 0..10 {
                let a = rat(r.gen_range(1..=9), r.gen_range(1..=6));
                let b = rat(r.gen_range(-9..=9), r.gen_range(1..=6));
                let a2 = rat(r.gen_range(1..=9), r.gen_range(1..=6));
                let b2 = rat(r.gen_range(-9..=9), r.gen_range(1..=6));
                let e1 = altpair::stabilizer_element(&d, &a, &b, Sign::Plus).unwrap();
                let e2 = altpair::stabilizer_element(&d, &a2, &b2, Sign::Minus).unwrap();
                let product = HElement {
                    g1: e1.g1.mul(&e2.g1),
                    p: e1.p.mul(&e2.p),
                };
                let expected = altpair::stabilizer_element(
                    &d,
                    &(&a * &a2),
                    &(&a * &b2 + &b),
                    Sign::Minus,
                )
                .unwrap();
                if product != expected {
                    closure_failures += 1;
                }
            }
        }
        out.push(check(
            "altpair.stabilizer_fixes_w",
            failures == 0,
            format!("8 discriminants x 100 random parameters, {failures} failures"),
        ));
        out.push(check(
            "altpair.stabilizer_closed_under_product",
            closure_failures == 0,
            format!("8 discriminants x 10 products, {closure_failures} failures"),
        ));
    }
    {
        let mut failures = 0usize;
        let mut found_total = 0usize;
        for d in [-3i64, -4, -7] {
            let group = bqf::class_group(&int(d)).unwrap();
            let mut fused = std::collections::HashSet::new();
            for f1 in &group.reps {
                for f2 in &group.reps {
                    let c = cube::cube_from_pair(f1, f2).unwrap();
                    fused.insert(bqf::reduce(&altpair::fuse(&c).qform_pair()).unwrap().0);
                }
            }
            let range: Vec<i64> = (-2..=2).collect();
            for &b in &range {
                for &c in &range {
                    for &dd in &range {
                        for &l1 in &range {
                            for &r2 in &range {
                                for &e in &range {
                                    for &f in &range {
                                        for &g in &range {
                                            for &h in &range {
                                                for &l2 in &range {
                                                    let qa = b * c;
                                                    let qc = -(e * h - f * g - r2 * l2);
                                                    let qb =
                                                        dd * e - b * g - c * f - r2 * l1;
                                                    if qb * qb - 4 * qa * qc != d || qa <= 0
                                                    {
                                                        continue;
                                                    }
                                                    found_total += 1;
                                                    let q = Bqf::from_i64(qa, qb, qc);
                                                    if !fused.contains(
                                                        &bqf::reduce(&q).unwrap().0,
                                                    ) {
                                                        failures += 1;
                                                    }
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out.push(check(
            "altpair.fusion_class_surjectivity",
            failures == 0 && found_total > 0,
            format!("{found_total} small W0 elements, {failures} unmatched"),
        ));
    }
    out
}

fn localcount_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let odd_primes: Vec<i64> = (3..50).filter(|&p| arith::is_prime(&int(p))).collect();
    {
        let mut hensel_failures = 0usize;
        let mut character_failures = 0usize;
        for d in fundamental_discriminants(200) {
            for &p in &odd_primes {
                if d % p == 0 {
                    continue;
                }
                let base = sqrt_count_mod(&int(d), &int(p)).unwrap();
                let chi = arith::kronecker(&int(d), &int(p)).unwrap();
                if base != int(1 + i64::from(chi)) {
                    character_failures += 1;
                }
                for k in 1..=4u32 {
                    if sqrt_count_mod(&int(d), &int(p.pow(k))).unwrap() != base {
                        hensel_failures += 1;
                    }
                }
            }
        }
        out.push(check(
            "localcount.hensel_consistency",
            hensel_failures == 0,
            format!("p < 50, k <= 4, |d| <= 200, {hensel_failures} failures"),
        ));
        out.push(check(
            "localcount.character_law",
            character_failures == 0,
            format!("p < 50, |d| <= 200, {character_failures} failures"),
        ));
    }
    {
        let mut failures = 0usize;
        for d in fundamental_discriminants(120) {
            for &p in &odd_primes[..6] {
                for k in 1..=2u32 {
                    let pk = int(p.pow(k));
                    let lhs = sqrt_count_mod(&int(d), &(int(4) * &pk)).unwrap();
                    let rhs = sqrt_count_mod(&int(d), &int(4)).unwrap()
                        * sqrt_count_mod(&int(d), &pk).unwrap();
                    if lhs != rhs {
                        failures += 1;
                    }
                }
            }
        }
        out.push(check(
            "localcount.crt_factorization",
            failures == 0,
            format!("|d| <= 120, small prime powers, {failures} failures"),
        ));
    }
    {
        let mut failures = 0usize;
        let mut trials = 0usize;
        for d in -40i64..=40 {
            for m in 1i64..=300 {
                trials += 1;
                if sqrt_count_mod_fast(&int(d), &int(m)).unwrap()
                    != sqrt_count_mod_scan(&int(d), &int(m)).unwrap()
                {
                    failures += 1;
                }
            }
        }
        out.push(check(
            "localcount.scan_fast_agreement",
            failures == 0,
            format!("{trials} (d, m) pairs, {failures} failures"),
        ));
    }
    {
        let mut failures = 0usize;
        for d in [-4i64, -3, -23] {
            for p in [2i64, 3, 5, 7] {
                let f = localcount::euler_factor_chi(&int(d), &int(p)).unwrap();
                let chi = arith::kronecker(&int(d), &int(p)).unwrap();
                if (rat(1, 1) - rat(chi.into(), p)) * f != rat(1, 1) {
                    failures += 1;
                }
            }
        }
        out.push(check(
            "localcount.euler_factor_inverse",
            failures == 0,
            format!("12 (d, p) pairs, {failures} failures"),
        ));
    }
    out
}

fn zeta_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let table = CoeffTable::build(4000);
    {
        let mut failures = 0usize;
        for n in 1..=500u64 {
            if table.coeff(n) != zeta::coeff(n) {
                failures += 1;
            }
        }
        out.push(check(
            "zeta.sieve_vs_single",
            failures == 0,
            format!("n <= 500, {failures} failures"),
        ));
    }
    {
        let mut failures = 0usize;
        for d in discriminants(4000) {
            let n = (-d) as u64;
            let h = bqf::class_group(&int(d)).unwrap().h() as i64;
            let w = i64::from(bqf::unit_count(&int(d)));
            let weighted = rat(2 * h, w);
            let c = table.coeff(n);
            // Primitive classes contribute exactly 2h/w; imprimitive
            // classes only exist at non-fundamental discriminants.
            let ok = if bqf::is_fundamental(&int(d)) {
                c == weighted
            } else {
                c >= weighted
            };
            if !ok {
                failures += 1;
            }
        }
        out.push(check(
            "zeta.fundamental_class_relation",
            failures == 0,
            format!("all discriminant n <= 4000, {failures} failures"),
        ));
    }
    {
        let mut prev = rat(0, 1);
        let mut monotone = true;
        for n in 1..=2000 {
            let s = table.partial_sum(n);
            if s < prev {
                monotone = false;
            }
            prev = s;
        }
        out.push(check(
            "zeta.partial_sums_monotone",
            monotone,
            "n <= 2000".to_string(),
        ));
    }
    {
        let small = CoeffTable::build(2000);
        let large = CoeffTable::build(8000);
        let mut failures = 0usize;
        for s in [1.6, 1.75, 2.0, 2.5, 3.0, 4.0] {
            let a = small.dirichlet_value(s).unwrap();
            let b = large.dirichlet_value(s).unwrap();
            if (a.value - b.value).abs() > a.tail_bound {
                failures += 1;
            }
        }
        out.push(check(
            "zeta.tail_bound_soundness",
            failures == 0,
            format!("6 grid values of s, {failures} failures"),
        ));
    }
    out
}

/// Run every module suite; results are sorted by name.
pub fn run_all() -> Vec<CheckResult> {
    let mut results = Vec::new();
    results.extend(arith_checks());
    results.extend(bqf_checks());
    results.extend(cube_checks());
    results.extend(altpair_checks());
    results.extend(localcount_checks());
    results.extend(zeta_checks());
    results.sort_by_key(|c| c.name);
    results
}
