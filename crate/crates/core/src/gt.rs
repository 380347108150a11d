//! Gelfand–Tsetlin polytopes and Newton lifts over chamber faces.
//!
//! A pattern for `GL(n)` has entries `x_{r,c}` for `1 <= c <= r <= n-1`.
//! Row `n` is the weight itself and rows interlace:
//! `x_{r+1,c} >= x_{r,c} >= x_{r+1,c+1}`. Coordinates are stored row by
//! row from row `n-1` down to row `1`, left to right; for several `GL`
//! factors the patterns are concatenated in factor order.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{check_dim, domain, Result};
use crate::lattice::{AffineLattice, LatticeVector};
use crate::polarization::MinkowskiAdd;
use crate::polytope::Polytope;
use crate::rational::{self, Rational};
use crate::weyl::{ChamberFace, GroupDescriptor};

/// Number of pattern entries for `GL(n)`.
pub fn pattern_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `x_{r,c}` (1-based) in the coordinate vector.
pub fn pattern_index(n: usize, r: usize, c: usize) -> usize {
    debug_assert!(1 <= c && c <= r && r < n);
    pattern_len(n) - r * (r + 1) / 2 + (c - 1)
}

/// The weight coordinates `(c, c + n - r)` (0-based) bounding `x_{r,c}`.
pub fn bounding_pair(n: usize, r: usize, c: usize) -> (usize, usize) {
    (c - 1, c - 1 + n - r)
}

fn row<'a, T>(n: usize, lambda: &'a [T], x: &'a [T], r: usize) -> &'a [T] {
    if r == n {
        lambda
    } else {
        let s = pattern_index(n, r, 1);
        &x[s..s + r]
    }
}

/// Interlacing test for a pattern over `lambda`.
pub fn interlaces<T: PartialOrd>(lambda: &[T], x: &[T]) -> bool {
    let n = lambda.len();
    if x.len() != pattern_len(n) {
        return false;
    }
    (1..n).all(|r| {
        let above = row(n, lambda, x, r + 1);
        let cur = row(n, lambda, x, r);
        (0..r).all(|c| above[c] >= cur[c] && cur[c] >= above[c + 1])
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTPolytope {
    pub polytope: Polytope,
    pub weight: Vec<Rational>,
}

impl GTPolytope {
    pub fn contains(&self, x: &[Rational]) -> bool {
        interlaces(&self.weight, x)
    }
}

pub fn gt_polytope(n: usize, lambda: &[Rational]) -> Result<GTPolytope> {
    check_dim(n, lambda.len())?;
    if !lambda.windows(2).all(|w| w[0] >= w[1]) {
        return domain(format!("weight {} is not dominant", show(lambda)));
    }
    let polytope = Polytope::hull(&gc_vertices(lambda))?;
    Ok(GTPolytope { polytope, weight: lambda.to_vec() })
}

pub fn gt_polytope_int(n: usize, lambda: &[i64]) -> Result<GTPolytope> {
    gt_polytope(n, &rational::ints(lambda))
}

/// Number of integral patterns, counted as lattice points of the polytope.
pub fn gt_lattice_count(n: usize, lambda: &[i64]) -> Result<BigInt> {
    let p = gt_polytope_int(n, lambda)?;
    if p.polytope.ambient_dim() == 0 {
        return Ok(BigInt::from(1));
    }
    Ok(BigInt::from(p.polytope.integer_points()?.len()))
}

fn show(v: &[Rational]) -> String {
    format!("({})", v.iter().map(rational::format).collect::<Vec<_>>().join(","))
}

/// Vertices of the GC polytope. Every vertex takes its entries among the
/// weight's values, and a pattern is a vertex exactly when each entry is tied
/// to row `n` by a chain of equalities between interlacing neighbours.
pub fn gc_vertices(lambda: &[Rational]) -> Vec<Vec<Rational>> {
    let n = lambda.len();
    let len = pattern_len(n);
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut values: Vec<Rational> = lambda.to_vec();
    values.dedup();
    let mut out = Vec::new();
    let mut x = vec![Rational::zero(); len];
    fill(n, lambda, &values, n - 1, 1, &mut x, &mut out);
    out
}

fn fill(
    n: usize,
    lambda: &[Rational],
    values: &[Rational],
    r: usize,
    c: usize,
    x: &mut Vec<Rational>,
    out: &mut Vec<Vec<Rational>>,
) {
    if r == 0 {
        if is_vertex(n, lambda, x) {
            out.push(x.clone());
        }
        return;
    }
    let (hi, lo) = {
        let above = row(n, lambda, x, r + 1);
        (above[c - 1].clone(), above[c].clone())
    };
    for v in values.iter().filter(|v| **v <= hi && **v >= lo) {
        x[pattern_index(n, r, c)] = v.clone();
        if c == r {
            fill(n, lambda, values, r - 1, 1, x, out);
        } else {
            fill(n, lambda, values, r, c + 1, x, out);
        }
    }
}

fn is_vertex(n: usize, lambda: &[Rational], x: &[Rational]) -> bool {
    // nodes: 0..n are row n, n + i is pattern entry i
    let len = x.len();
    let mut parent: Vec<usize> = (0..n + len).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    let node = |r: usize, c: usize| if r == n { c - 1 } else { n + pattern_index(n, r, c) };
    let value = |r: usize, c: usize| if r == n { &lambda[c - 1] } else { &x[pattern_index(n, r, c)] };
    for r in 1..n {
        for c in 1..=r {
            for up in [c, c + 1] {
                if value(r, c) == value(r + 1, up) {
                    let (a, b) = (find(&mut parent, node(r, c)), find(&mut parent, node(r + 1, up)));
                    parent[a] = b;
                }
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    (n..n + len).all(|i| {
        let root = find(&mut parent, i);
        roots.contains(&root)
    })
}

/// Pattern entries (over all factors) that are constant on the face: `x_{r,c}`
/// is pinned to its block value when both bounding coordinates share a block.
pub fn forced_entries(group: &GroupDescriptor, face: &ChamberFace) -> Vec<Option<usize>> {
    let block_of = face.block_of(group);
    let mut out = Vec::with_capacity(group.positive_roots());
    for (&start, &n) in group.factor_starts().iter().zip(group.gl_factors()) {
        for r in (1..n).rev() {
            for c in 1..=r {
                let (i, j) = bounding_pair(n, r, c);
                let (bi, bj) = (block_of[start + i], block_of[start + j]);
                out.push((bi == bj).then_some(bi));
            }
        }
    }
    out
}

/// Ambient dimension of Newton lifts: block coordinates plus pattern entries.
pub fn lift_dim(group: &GroupDescriptor, face: &ChamberFace) -> usize {
    face.dim(group) + group.positive_roots()
}

/// The lift of `delta` (a polytope in block coordinates of `face`): all
/// `(λ, x)` with `λ ∈ Δ` and `x` a pattern over `λ` for each `GL` factor.
pub fn newton_lift(group: &GroupDescriptor, face: &ChamberFace, delta: &Polytope) -> Result<Polytope> {
    check_dim(face.dim(group), delta.ambient_dim())?;
    if !delta.vertices().iter().all(|v| face.is_dominant_block(v)) {
        return domain("polytope is not contained in the chamber face");
    }
    let starts = group.factor_starts();
    let mut points = Vec::new();
    for v in delta.vertices() {
        let full = face.embed(group, v);
        let mut fibres: Vec<Vec<Rational>> = vec![v.clone()];
        for (&s, &n) in starts.iter().zip(group.gl_factors()) {
            let verts = gc_vertices(&full[s..s + n]);
            fibres = fibres
                .iter()
                .flat_map(|head| {
                    verts.iter().map(move |tail| {
                        let mut p = head.clone();
                        p.extend(tail.iter().cloned());
                        p
                    })
                })
                .collect();
        }
        points.extend(fibres);
    }
    Polytope::hull(&points)
}

/// Direction lattice for lifts of polytopes parallel to `directions` (given in
/// block coordinates): each direction carried along the pinned pattern
/// entries, plus a unit vector for every free pattern entry.
pub fn lift_lattice(group: &GroupDescriptor, face: &ChamberFace, directions: &AffineLattice) -> Result<AffineLattice> {
    let base = face.dim(group);
    check_dim(base, directions.ambient_dim())?;
    let forced = forced_entries(group, face);
    let mut basis: Vec<LatticeVector> = directions
        .basis()
        .iter()
        .map(|h| {
            let mut v = h.clone();
            v.extend(forced.iter().map(|f| f.map_or(0, |b| h[b])));
            v
        })
        .collect();
    for (i, f) in forced.iter().enumerate() {
        if f.is_none() {
            let mut v = vec![0; base + forced.len()];
            v[base + i] = 1;
            basis.push(v);
        }
    }
    AffineLattice::linear(base + forced.len(), basis)
}

/// A polytope in block coordinates together with its Newton lift. Sums are
/// formed on the base and lifted again, which agrees with the Minkowski sum
/// of the lifts because the fibres depend linearly on the weight.
#[derive(Debug, Clone)]
pub struct NewtonLift {
    group: GroupDescriptor,
    face: ChamberFace,
    base: Polytope,
    lift: Polytope,
}

impl PartialEq for NewtonLift {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.face == other.face && self.group == other.group
    }
}

impl NewtonLift {
    pub fn new(group: &GroupDescriptor, face: &ChamberFace, base: Polytope) -> Result<Self> {
        let lift = newton_lift(group, face, &base)?;
        Ok(Self { group: group.clone(), face: face.clone(), base, lift })
    }

    pub fn base(&self) -> &Polytope {
        &self.base
    }

    pub fn lift(&self) -> &Polytope {
        &self.lift
    }
}

impl MinkowskiAdd for NewtonLift {
    fn minkowski_add(&self, other: &Self) -> Result<Self> {
        Self::new(&self.group, &self.face, self.base.minkowski_sum(&other.base)?)
    }

    fn multiple(&self, k: usize) -> Result<Self> {
        Self::new(&self.group, &self.face, self.base.dilate(&rational::int(k as i64))?)
    }
}
