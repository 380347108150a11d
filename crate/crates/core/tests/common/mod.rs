//! Test-side oracles and instance generators. Nothing here calls into the
//! library's geometry, so agreement with it is meaningful.
#![allow(dead_code)]

use horo_core::rational::{self, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

/// Integral GT patterns over `row`, counted by walking the rows directly.
pub fn count_patterns(row: &[i64]) -> u64 {
    if row.len() <= 1 {
        return 1;
    }
    let mut next = vec![0i64; row.len() - 1];
    count_rows(row, &mut next, 0)
}

fn count_rows(row: &[i64], next: &mut Vec<i64>, c: usize) -> u64 {
    if c == next.len() {
        return count_patterns(&next.clone());
    }
    let mut total = 0;
    for v in row[c + 1]..=row[c] {
        next[c] = v;
        total += count_rows(row, next, c + 1);
    }
    total
}

/// `dim V_λ` for `GL(n)` by the hook-content formula, after shifting `λ`
/// to a partition.
pub fn hook_content_dim(lambda: &[i64]) -> BigInt {
    let n = lambda.len() as i64;
    let shift = *lambda.last().unwrap();
    let mu: Vec<i64> = lambda.iter().map(|x| x - shift).collect();
    let conj = |j: i64| mu.iter().filter(|&&m| m > j).count() as i64;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &len) in mu.iter().enumerate() {
        let i = i as i64;
        for j in 0..len {
            num *= BigInt::from(n + j - i);
            den *= BigInt::from((len - j - 1) + (conj(j) - i - 1) + 1);
        }
    }
    num / den
}

/// Forward differences of `values` at 0.
pub fn forward_differences(values: &[BigInt]) -> Vec<BigInt> {
    let mut cur = values.to_vec();
    let mut out = Vec::new();
    while !cur.is_empty() {
        out.push(cur[0].clone());
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

/// Normalized volume of the GC polytope of an integral `λ` of span dimension
/// `dim`, read off as the leading Ehrhart coefficient of brute-force counts.
pub fn gc_volume_by_counting(lambda: &[i64], dim: usize) -> Rational {
    let counts: Vec<BigInt> = (0..=dim as i64)
        .map(|k| BigInt::from(count_patterns(&lambda.iter().map(|x| k * x).collect::<Vec<_>>())))
        .collect();
    let d = forward_differences(&counts);
    Rational::new(d[dim].clone(), rational::factorial_int(dim))
}

/// Convex hull of integer points in the plane, counter-clockwise.
pub fn planar_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut p = points.to_vec();
    p.sort();
    p.dedup();
    if p.len() <= 2 {
        return p;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &q in &p {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], q) <= 0 {
            lower.pop();
        }
        lower.push(q);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &q in p.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], q) <= 0 {
            upper.pop();
        }
        upper.push(q);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Twice the area of the hull (an integer).
pub fn twice_area(points: &[(i64, i64)]) -> i64 {
    let h = planar_hull(points);
    if h.len() < 3 {
        return 0;
    }
    let mut s = 0;
    for i in 0..h.len() {
        let (a, b) = (h[i], h[(i + 1) % h.len()]);
        s += a.0 * b.1 - a.1 * b.0;
    }
    s.abs()
}

pub fn planar_sumset(a: &[(i64, i64)], b: &[(i64, i64)]) -> Vec<(i64, i64)> {
    a.iter().flat_map(|p| b.iter().map(move |q| (p.0 + q.0, p.1 + q.1))).collect()
}

/// Bernstein–Kushnirenko count `2! V(P, Q) = area(P+Q) - area(P) - area(Q)`.
pub fn bk_count(a: &[(i64, i64)], b: &[(i64, i64)]) -> Rational {
    let twice = twice_area(&planar_sumset(a, b)) - twice_area(a) - twice_area(b);
    rational::frac(twice, 2)
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    rational::ints(v)
}

pub fn rat(n: i64) -> Rational {
    rational::int(n)
}

pub fn is_zero(x: &Rational) -> bool {
    x.is_zero()
}

/// A non-increasing integer vector of length `n` with entries in `[lo, hi]`.
pub fn random_dominant<R: Rng>(rng: &mut R, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// All non-increasing vectors of length `n` with entries in `[0, hi]`.
pub fn all_dominant(n: usize, hi: i64) -> Vec<Vec<i64>> {
    fn rec(n: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..=cap {
            cur.push(v);
            rec(n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, hi, &mut Vec::new(), &mut out);
    out
}

use horo_core::lattice::AffineLattice;
use horo_core::{ChamberFace, GroupDescriptor, HorosphericalSpace, SupportSet};

/// A horospherical space plus size limits for random supports on it.
pub struct Scenario {
    pub name: &'static str,
    pub space: HorosphericalSpace,
    pub max_coord: i64,
    pub max_points: usize,
}

fn scenario(
    name: &'static str,
    gl: &[usize],
    torus: usize,
    blocks: &[&[usize]],
    lambda_h: Option<&[&[i64]]>,
    max_coord: i64,
    max_points: usize,
) -> Scenario {
    let group = GroupDescriptor::new(gl.to_vec(), torus).unwrap();
    let face = ChamberFace::new(&group, blocks.iter().map(|b| b.to_vec()).collect()).unwrap();
    let space = match lambda_h {
        None => HorosphericalSpace::quotient(group, face).unwrap(),
        Some(basis) => {
            let l = AffineLattice::linear(group.rank(), basis.iter().map(|b| b.to_vec()).collect()).unwrap();
            HorosphericalSpace::general(group, face, l).unwrap()
        }
    };
    Scenario { name, space, max_coord, max_points }
}

/// GL(2) and GL(3) spaces over assorted faces and lattices, including
/// index-2 sublattices.
pub fn scenarios() -> Vec<Scenario> {
    vec![
        scenario("GL2 quotient", &[2], 0, &[&[1, 1]], None, 3, 3),
        scenario("GL2 Λ=Z(1,1)", &[2], 0, &[&[1, 1]], Some(&[&[1, 1]]), 3, 3),
        scenario("GL2 Λ=Z(1,0)", &[2], 0, &[&[1, 1]], Some(&[&[1, 0]]), 3, 3),
        scenario("GL2 Λ=2Z⊕Z", &[2], 0, &[&[1, 1]], Some(&[&[2, 0], &[0, 1]]), 3, 3),
        scenario("GL2 Λ=Z(2,2)", &[2], 0, &[&[1, 1]], Some(&[&[2, 2]]), 3, 3),
        scenario("GL2 flag", &[2], 0, &[&[1, 1]], Some(&[]), 3, 1),
        scenario("GL2xT1 quotient", &[2], 1, &[&[1, 1]], None, 2, 2),
        scenario("GL3 {1}{2,3} quotient", &[3], 0, &[&[1, 2]], None, 2, 3),
        scenario("GL3 Bezout", &[3], 0, &[&[1, 2]], Some(&[&[1, 0, 0]]), 3, 3),
        scenario("GL3 Bezout index 2", &[3], 0, &[&[1, 2]], Some(&[&[2, 0, 0]]), 4, 3),
        scenario("GL3 {1,2}{3} quotient", &[3], 0, &[&[2, 1]], None, 2, 3),
        scenario("GL3 {1,2}{3} index 2", &[3], 0, &[&[2, 1]], Some(&[&[1, 1, 0], &[0, 0, 2]]), 2, 3),
        scenario("GL3 full quotient", &[3], 0, &[&[1, 1, 1]], None, 2, 2),
        scenario("GL3 full Λ=Z(1,1,1)", &[3], 0, &[&[1, 1, 1]], Some(&[&[1, 1, 1]]), 2, 2),
        scenario("GL3 full Λ rank 2", &[3], 0, &[&[1, 1, 1]], Some(&[&[1, 0, 0], &[1, 1, 0]]), 2, 2),
        scenario("GL3 flag", &[3], 0, &[&[1, 1, 1]], Some(&[]), 2, 1),
    ]
}

/// Random support in one coset of `Λ(H)`, given in block coordinates first.
pub fn random_support<R: Rng>(rng: &mut R, sc: &Scenario) -> SupportSet {
    let space = &sc.space;
    let (group, face) = (space.group(), space.face());
    loop {
        let mut offset = Vec::new();
        for sizes in face.blocks() {
            let mut seg: Vec<i64> = (0..sizes.len()).map(|_| rng.gen_range(0..=sc.max_coord)).collect();
            seg.sort_unstable_by(|a, b| b.cmp(a));
            offset.extend(seg);
        }
        offset.extend((0..group.torus_rank()).map(|_| rng.gen_range(0..=sc.max_coord)));

        let target = rng.gen_range(1..=sc.max_points);
        let dirs = space.directions().basis();
        let mut points = vec![offset.clone()];
        for _ in 0..20 {
            if points.len() >= target || dirs.is_empty() {
                break;
            }
            let mut p = offset.clone();
            for h in dirs {
                let c = rng.gen_range(-1..=1i64);
                for (x, y) in p.iter_mut().zip(h) {
                    *x += c * y;
                }
            }
            let in_range = p.iter().all(|x| (-sc.max_coord..=2 * sc.max_coord).contains(x));
            if in_range && face.is_dominant_block(&p) && !points.contains(&p) {
                points.push(p);
            }
        }
        let weights: Vec<Vec<i64>> = points.iter().map(|b| face.embed(group, b)).collect();
        if let Ok(s) = space.support(weights) {
            return s;
        }
    }
}

/// `m` random supports; about a third of the time all equal (a diagonal).
pub fn random_system<R: Rng>(rng: &mut R, sc: &Scenario) -> Vec<SupportSet> {
    let m = sc.space.m();
    if rng.gen_bool(1.0 / 3.0) {
        let a = random_support(rng, sc);
        vec![a; m]
    } else {
        (0..m).map(|_| random_support(rng, sc)).collect()
    }
}
