//! Rational convex polytopes.
//!
//! A [`Polytope`] is stored by its extreme points (sorted lexicographically),
//! an echelon basis of its affine span, facet inequalities valid inside that
//! span, and a fan triangulation over its lexicographically smallest vertex.
//! Lower-dimensional polytopes are ordinary values; every measure is taken
//! relative to the affine span.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, domain, Error, Result};
use crate::lattice::{AffineLattice, LatticeVector, Measure};
use crate::linalg;
use crate::rational::{self, Rational};

/// Inequality `normal · x <= offset`, valid for points of the polytope's affine span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Facet {
    pub fn slack(&self, x: &[Rational]) -> Rational {
        &self.offset - linalg::dot(&self.normal, x)
    }
}

#[derive(Debug, Clone)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<Vec<Rational>>,
    span_basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    facets: Vec<Facet>,
    simplices: Vec<Vec<usize>>,
    pivot_volume: Rational,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl Polytope {
    /// Convex hull of a finite nonempty point set.
    pub fn hull(points: &[Vec<Rational>]) -> Result<Self> {
        let Some(first) = points.first() else {
            return domain("convex hull of an empty point set");
        };
        let n = first.len();
        for p in points {
            check_dim(n, p.len())?;
        }
        let pts: Vec<Vec<Rational>> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let v0 = pts[0].clone();
        let diffs: Vec<Vec<Rational>> = pts[1..].iter().map(|p| linalg::sub(p, &v0)).collect();
        let (span_basis, pivots) = linalg::rref(&diffs);
        let k = pivots.len();
        if k == 0 {
            return Ok(Self::point(v0));
        }

        let scale = rational::common_denominator(pts.iter().flat_map(|p| pivots.iter().map(move |&c| &p[c])));
        let scale_q = Rational::from_integer(scale.clone());
        let proj: Vec<Vec<BigInt>> =
            pts.iter().map(|p| pivots.iter().map(|&c| ((&p[c] - &v0[c]) * &scale_q).to_integer()).collect()).collect();

        let (extreme, boundary) = hull_boundary(&proj, k);
        let planes: BTreeSet<(Vec<BigInt>, BigInt)> =
            boundary.iter().map(|f| (f.normal.clone(), f.offset.clone())).collect();

        let remap: HashMap<usize, usize> = extreme.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let vertices: Vec<Vec<Rational>> = extreme.iter().map(|&i| pts[i].clone()).collect();
        debug_assert_eq!(extreme[0], 0);

        let mut simplices = Vec::new();
        let mut raw = BigInt::zero();
        for f in &boundary {
            if f.offset.is_zero() {
                continue;
            }
            let rows: Vec<Vec<BigInt>> = f.verts.iter().map(|&v| proj[v].clone()).collect();
            raw += linalg::det_int(&rows).abs();
            let mut s = vec![0];
            s.extend(f.verts.iter().map(|v| remap[v]));
            simplices.push(s);
        }
        simplices.sort();
        let denom = scale.pow(k as u32) * rational::factorial_int(k);
        let pivot_volume = Rational::new(raw, denom);

        let facets = planes
            .into_iter()
            .map(|(a, b)| {
                let mut normal = vec![Rational::zero(); n];
                for (j, &c) in pivots.iter().enumerate() {
                    normal[c] = Rational::from_integer(a[j].clone());
                }
                let offset = Rational::new(b, scale.clone()) + linalg::dot(&normal, &v0);
                Facet { normal, offset }
            })
            .collect();

        Ok(Self { ambient_dim: n, vertices, span_basis, pivots, facets, simplices, pivot_volume })
    }

    /// The 0-dimensional polytope `{x}`.
    pub fn point(x: Vec<Rational>) -> Self {
        Self {
            ambient_dim: x.len(),
            vertices: vec![x],
            span_basis: Vec::new(),
            pivots: Vec::new(),
            facets: Vec::new(),
            simplices: vec![vec![0]],
            pivot_volume: Rational::one(),
        }
    }

    pub fn from_lattice_points(points: &[LatticeVector]) -> Result<Self> {
        let pts: Vec<Vec<Rational>> = points.iter().map(|p| rational::ints(p)).collect();
        Self::hull(&pts)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the affine span.
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    /// Echelon basis of the direction space of the affine span.
    pub fn span_basis(&self) -> &[Vec<Rational>] {
        &self.span_basis
    }

    pub fn span_pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Fan triangulation over vertex 0; each entry lists `dim + 1` vertex indices.
    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    /// Whether `v` is a direction of the affine span.
    pub fn span_contains_direction(&self, v: &[Rational]) -> bool {
        self.span_residual(v).iter().all(Zero::is_zero)
    }

    fn span_residual(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (row, &p) in self.span_basis.iter().zip(&self.pivots) {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (ri, wi) in r.iter_mut().zip(row) {
                *ri -= &f * wi;
            }
        }
        r
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        if x.len() != self.ambient_dim {
            return false;
        }
        let rel = linalg::sub(x, &self.vertices[0]);
        self.span_contains_direction(&rel) && self.facets.iter().all(|f| !f.slack(x).is_negative())
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(linalg::add(a, b));
            }
        }
        Polytope::hull(&pts)
    }

    pub fn dilate(&self, k: &Rational) -> Result<Polytope> {
        if k.is_negative() {
            return domain(format!("negative dilation factor {k}"));
        }
        if k.is_zero() {
            return Ok(Polytope::point(vec![Rational::zero(); self.ambient_dim]));
        }
        let facets = self.facets.iter().map(|f| Facet { normal: f.normal.clone(), offset: &f.offset * k }).collect();
        Ok(Polytope {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.iter().map(|v| linalg::scale(v, k)).collect(),
            span_basis: self.span_basis.clone(),
            pivots: self.pivots.clone(),
            facets,
            simplices: self.simplices.clone(),
            pivot_volume: &self.pivot_volume * num_traits::pow(k.clone(), self.dim()),
        })
    }

    pub fn translate(&self, t: &[Rational]) -> Result<Polytope> {
        check_dim(self.ambient_dim, t.len())?;
        let facets = self
            .facets
            .iter()
            .map(|f| Facet { normal: f.normal.clone(), offset: &f.offset + linalg::dot(&f.normal, t) })
            .collect();
        Ok(Polytope { vertices: self.vertices.iter().map(|v| linalg::add(v, t)).collect(), facets, ..self.clone() })
    }

    /// Volume inside the affine span, normalized so that a fundamental cell of
    /// `lattice ∩ span` has volume one. A point has volume one.
    pub fn volume(&self, lattice: &AffineLattice) -> Result<Rational> {
        check_dim(self.ambient_dim, lattice.ambient_dim())?;
        Ok(self.volume_with(&self.span_measure(lattice)?))
    }

    /// Measure on the span direction normalized by `lattice ∩ span`.
    pub fn span_measure(&self, lattice: &AffineLattice) -> Result<Measure> {
        let dirs = lattice.directions_within(&self.span_basis, &self.pivots);
        if dirs.len() < self.dim() {
            return domain("polytope span is not contained in the lattice's direction space");
        }
        Measure::new(dirs.iter().map(|d| rational::ints(d)).collect())
    }

    /// Volume with respect to `measure`, whose subspace must equal the span
    /// direction when dimensions agree. Lower-dimensional polytopes have measure zero.
    pub fn volume_with(&self, measure: &Measure) -> Rational {
        if self.dim() < measure.dim() {
            return Rational::zero();
        }
        if self.dim() == 0 {
            return Rational::one();
        }
        &self.pivot_volume / measure.cell_in_coordinates(&self.pivots)
    }

    /// All points of `lattice` inside the polytope, lexicographically sorted.
    pub fn lattice_points(&self, lattice: &AffineLattice) -> Result<Vec<Vec<Rational>>> {
        check_dim(self.ambient_dim, lattice.ambient_dim())?;
        let l = lattice.rank();
        if l == 0 {
            let o = lattice.offset().to_vec();
            return Ok(if self.contains(&o) { vec![o] } else { Vec::new() });
        }
        let basis = lattice.basis_rational();
        let (_, piv) = linalg::rref(&basis);
        // x_piv - o_piv = M c with M[i][j] = b_j[piv_i]
        let m: Vec<Vec<Rational>> = piv.iter().map(|&p| basis.iter().map(|b| b[p].clone()).collect()).collect();
        let minv = invert(&m).ok_or_else(|| Error::Internal("singular lattice pivot block".into()))?;
        let lo: Vec<Rational> =
            piv.iter().map(|&p| self.vertices.iter().map(|v| &v[p] - &lattice.offset()[p]).min().unwrap()).collect();
        let hi: Vec<Rational> =
            piv.iter().map(|&p| self.vertices.iter().map(|v| &v[p] - &lattice.offset()[p]).max().unwrap()).collect();
        let mut ranges = Vec::with_capacity(l);
        for row in &minv {
            let mut a = Rational::zero();
            let mut b = Rational::zero();
            for (i, w) in row.iter().enumerate() {
                let (x, y) = (w * &lo[i], w * &hi[i]);
                if x <= y {
                    a += x;
                    b += y;
                } else {
                    a += y;
                    b += x;
                }
            }
            ranges.push((rational::ceil(&a), rational::floor(&b)));
        }
        if ranges.iter().any(|(a, b)| a > b) {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut c: Vec<BigInt> = ranges.iter().map(|(a, _)| a.clone()).collect();
        loop {
            let x = lattice.point(&c);
            if self.contains(&x) {
                out.push(x);
            }
            let mut i = 0;
            loop {
                if i == l {
                    out.sort();
                    return Ok(out);
                }
                if c[i] < ranges[i].1 {
                    c[i] += 1;
                    break;
                }
                c[i] = ranges[i].0.clone();
                i += 1;
            }
        }
    }

    /// Integer points of the polytope in the standard lattice.
    pub fn integer_points(&self) -> Result<Vec<LatticeVector>> {
        let pts = self.lattice_points(&AffineLattice::standard(self.ambient_dim))?;
        pts.iter()
            .map(|p| crate::lattice::to_lattice(p).ok_or_else(|| Error::Internal("non-integral lattice point".into())))
            .collect()
    }
}

fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let (red, piv) = linalg::rref(&aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

struct BoundaryFacet {
    verts: Vec<usize>,
    normal: Vec<BigInt>,
    offset: BigInt,
}

/// Extreme points of `pts` (full-dimensional in Z^k), sorted, together with a
/// triangulation of the boundary of their hull with outward primitive normals.
///
/// Only points certified as vertices are ever placed: the lexicographically
/// largest maximizer of a linear functional is always a vertex. Starting from
/// a simplex of such points, every facet plane with points beyond it
/// contributes its furthest point, until no input point is outside.
fn hull_boundary(pts: &[Vec<BigInt>], k: usize) -> (Vec<usize>, Vec<BoundaryFacet>) {
    let argmax = |a: &[BigInt]| -> (usize, BigInt) {
        let mut best = (0, linalg::dot_int(a, &pts[0]));
        for (i, p) in pts.iter().enumerate().skip(1) {
            let v = linalg::dot_int(a, p);
            if v > best.1 || (v == best.1 && *p > pts[best.0]) {
                best = (i, v);
            }
        }
        best
    };

    // index 0 is the origin and the lexicographic minimum, hence a vertex
    let mut simplex = vec![0];
    while simplex.len() <= k {
        let rows: Vec<Vec<BigInt>> = simplex[1..].iter().map(|&i| pts[i].clone()).collect();
        let next = linalg::integer_kernel(&rows, k).into_iter().find_map(|a| {
            let neg: Vec<BigInt> = a.iter().map(|x| -x).collect();
            [a, neg].into_iter().map(|d| argmax(&d)).find(|(_, v)| !v.is_zero()).map(|(i, _)| i)
        });
        simplex.push(next.expect("point set is not full-dimensional"));
    }

    let mut vertices: BTreeSet<usize> = simplex.iter().copied().collect();
    let mut placing = Placing::new(pts, &simplex);
    let mut checked: HashSet<(Vec<BigInt>, BigInt)> = HashSet::new();
    loop {
        let fresh: BTreeSet<(Vec<BigInt>, BigInt)> = placing
            .alive()
            .map(|f| (f.normal.clone(), f.offset.clone()))
            .filter(|plane| !checked.contains(plane))
            .collect();
        if fresh.is_empty() {
            break;
        }
        let mut beyond = BTreeSet::new();
        for (a, b) in fresh {
            let (i, v) = argmax(&a);
            if v > b {
                beyond.insert(i);
            }
            checked.insert((a, b));
        }
        for i in beyond {
            if vertices.insert(i) {
                placing.insert(i);
            }
        }
    }
    (vertices.into_iter().collect(), placing.facets.into_iter().flatten().collect())
}

/// Beneath-beyond state: a triangulated boundary of the hull of the points
/// placed so far, with the ridge-to-facet incidence.
struct Placing<'a> {
    pts: &'a [Vec<BigInt>],
    interior: Vec<BigInt>,
    weight: BigInt,
    facets: Vec<Option<BoundaryFacet>>,
    ridges: HashMap<Vec<usize>, Vec<usize>>,
}

impl<'a> Placing<'a> {
    /// Starts from `k + 1` affinely independent points.
    fn new(pts: &'a [Vec<BigInt>], simplex: &[usize]) -> Self {
        let k = simplex.len() - 1;
        let mut interior = vec![BigInt::zero(); k];
        for &i in simplex {
            for (a, b) in interior.iter_mut().zip(&pts[i]) {
                *a += b;
            }
        }
        let mut placing =
            Self { pts, interior, weight: BigInt::from(k + 1), facets: Vec::new(), ridges: HashMap::new() };
        for skip in 0..simplex.len() {
            let mut verts: Vec<usize> =
                simplex.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
            verts.sort_unstable();
            placing.add_facet(verts);
        }
        placing
    }

    fn alive(&self) -> impl Iterator<Item = &BoundaryFacet> {
        self.facets.iter().flatten()
    }

    fn add_facet(&mut self, verts: Vec<usize>) {
        let (normal, offset) = hyperplane(self.pts, &verts, &self.interior, &self.weight);
        let id = self.facets.len();
        for r in ridges_of(&verts) {
            self.ridges.entry(r).or_default().push(id);
        }
        self.facets.push(Some(BoundaryFacet { verts, normal, offset }));
    }

    /// Places point `p`; points beneath or on every facet are ignored.
    fn insert(&mut self, p: usize) {
        let point = &self.pts[p];
        let visible: BTreeSet<usize> = self
            .facets
            .iter()
            .enumerate()
            .filter_map(|(id, f)| f.as_ref().filter(|f| linalg::dot_int(&f.normal, point) > f.offset).map(|_| id))
            .collect();
        let mut horizon = Vec::new();
        for &id in &visible {
            for r in ridges_of(&self.facets[id].as_ref().unwrap().verts) {
                let across = self.ridges[&r].iter().copied().find(|&o| o != id);
                if across.is_some_and(|o| !visible.contains(&o)) {
                    horizon.push(r);
                }
            }
        }
        for &id in &visible {
            let f = self.facets[id].take().unwrap();
            for r in ridges_of(&f.verts) {
                if let Some(owners) = self.ridges.get_mut(&r) {
                    owners.retain(|&o| o != id);
                    if owners.is_empty() {
                        self.ridges.remove(&r);
                    }
                }
            }
        }
        for mut r in horizon {
            r.push(p);
            r.sort_unstable();
            self.add_facet(r);
        }
    }
}

fn ridges_of(verts: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..verts.len()).map(move |skip| verts.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect())
}

/// Outward primitive hyperplane through `k` points of Z^k.
fn hyperplane(pts: &[Vec<BigInt>], verts: &[usize], interior: &[BigInt], weight: &BigInt) -> (Vec<BigInt>, BigInt) {
    let k = interior.len();
    let base = &pts[verts[0]];
    let rows: Vec<Vec<BigInt>> =
        verts[1..].iter().map(|&v| pts[v].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    let mut normal: Vec<BigInt> = (0..k)
        .map(|j| {
            let minor: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let d = linalg::det_int(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    linalg::primitive(&mut normal);
    let mut offset = linalg::dot_int(&normal, base);
    if linalg::dot_int(&normal, interior) > &offset * weight {
        normal.iter_mut().for_each(|x| *x = -&*x);
        offset = -offset;
    }
    (normal, offset)
}

#[derive(Serialize, Deserialize)]
struct PolytopeWire {
    #[serde(with = "rational::serde_matrix")]
    vertices: Vec<Vec<Rational>>,
}

impl Serialize for Polytope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeWire { vertices: self.vertices.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polytope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = PolytopeWire::deserialize(d)?;
        Polytope::hull(&w.vertices).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, ints};

    fn poly(points: &[&[i64]]) -> Polytope {
        Polytope::hull(&points.iter().map(|p| ints(p)).collect::<Vec<_>>()).unwrap()
    }

    fn z(n: usize) -> AffineLattice {
        AffineLattice::standard(n)
    }

    #[test]
    fn empty_hull_is_domain_error() {
        assert!(matches!(Polytope::hull(&[]), Err(Error::Domain(_))));
    }

    #[test]
    fn triangle_hull() {
        let t = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(t.vertices(), &[ints(&[0, 0]), ints(&[0, 1]), ints(&[1, 0])]);
        assert_eq!(t.facets().len(), 3);
        assert_eq!(t.volume(&z(2)).unwrap(), frac(1, 2));
    }

    #[test]
    fn segment_drops_interior_point() {
        let s = poly(&[&[0], &[1], &[2]]);
        assert_eq!(s.vertices(), &[ints(&[0]), ints(&[2])]);
        assert_eq!(s.volume(&z(1)).unwrap(), int(2));
    }

    #[test]
    fn collinear_point_is_dropped() {
        // (1,1) lies on the edge from (0,0) to (2,2).
        let t = poly(&[&[0, 0], &[1, 1], &[2, 2], &[1, 0]]);
        assert_eq!(t.vertices(), &[ints(&[0, 0]), ints(&[1, 0]), ints(&[2, 2])]);
    }

    #[test]
    fn cube_volume_and_facets() {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for zc in 0..2 {
                    pts.push(ints(&[x, y, zc]));
                }
            }
        }
        pts.push(ints(&[0, 0, 0]));
        pts.push(frac_vec(&[(1, 2), (1, 2), (1, 2)]));
        let c = Polytope::hull(&pts).unwrap();
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.facets().len(), 6);
        assert_eq!(c.volume(&z(3)).unwrap(), int(1));
    }

    fn frac_vec(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(a, b)| frac(a, b)).collect()
    }

    #[test]
    fn slanted_segment_lattice_length() {
        let s = poly(&[&[0, 0], &[2, 4]]);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.volume(&z(2)).unwrap(), int(2));
    }

    #[test]
    fn point_has_unit_volume() {
        let p = poly(&[&[3, -1]]);
        assert_eq!(p.dim(), 0);
        assert_eq!(p.volume(&z(2)).unwrap(), int(1));
    }

    #[test]
    fn span_outside_lattice_directions() {
        let s = poly(&[&[0, 0], &[1, 1]]);
        let horizontal = AffineLattice::linear(2, vec![vec![1, 0]]).unwrap();
        assert!(matches!(s.volume(&horizontal), Err(Error::Domain(_))));
    }

    #[test]
    fn square_plus_simplex_is_pentagon() {
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let s = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let sum = sq.minkowski_sum(&s).unwrap();
        assert_eq!(sum, poly(&[&[0, 0], &[2, 0], &[2, 1], &[1, 2], &[0, 2]]));
        assert_eq!(sum.volume(&z(2)).unwrap(), frac(7, 2));
    }

    #[test]
    fn dilation() {
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(sq.dilate(&int(2)).unwrap(), poly(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]));
        assert_eq!(sq.dilate(&int(1)).unwrap(), sq);
        assert_eq!(sq.dilate(&int(0)).unwrap(), poly(&[&[0, 0]]));
        assert!(sq.dilate(&int(-1)).is_err());
        let seg = poly(&[&[1], &[3]]);
        assert_eq!(seg.dilate(&frac(1, 2)).unwrap().vertices(), &[vec![frac(1, 2)], vec![frac(3, 2)]]);
    }

    #[test]
    fn lattice_points_basic() {
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(sq.integer_points().unwrap().len(), 4);
        let seg = poly(&[&[0], &[3]]);
        assert_eq!(seg.integer_points().unwrap(), vec![vec![0], vec![1], vec![2], vec![3]]);
        let even = AffineLattice::linear(1, vec![vec![2]]).unwrap();
        assert_eq!(seg.lattice_points(&even).unwrap(), vec![ints(&[0]), ints(&[2])]);
    }

    #[test]
    fn every_vertex_is_tight_on_dim_facets() {
        let p = poly(&[&[0, 0, 0], &[2, 0, 0], &[0, 3, 0], &[0, 0, 1], &[1, 1, 1]]);
        for v in p.vertices() {
            let tight = p.facets().iter().filter(|f| f.slack(v).is_zero()).count();
            assert!(tight >= p.dim());
            assert!(p.facets().iter().all(|f| !f.slack(v).is_negative()));
        }
    }

    #[test]
    fn json_round_trip() {
        let t = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(text, r#"{"vertices":[["0","0"],["0","1"],["1","0"]]}"#);
        let back: Polytope = serde_json::from_str(&text).unwrap();
        assert_eq!(back, t);
    }
}
