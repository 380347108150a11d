//! Intersection indices on horospherical spaces `G/H`, `P' ⊆ H ⊆ P`.
//!
//! A space is described by a chamber face `σ` (which fixes `P`) and the
//! lattice `Λ(H) ⊆ Λ_σ`. Supports are finite sets of dominant weights on `σ`;
//! all geometry happens in block coordinates of `σ`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, domain, Error, Result};
use crate::gt::{self, NewtonLift};
use crate::lattice::{to_rational, AffineLattice, LatticeVector, Measure};
use crate::polarization::{self, BodySystem, HomogeneousFunctional};
use crate::polynomial::Polynomial;
use crate::polytope::Polytope;
use crate::rational::{self, Rational};
use crate::semigroup::FiniteSet;
use crate::weyl::{self, ChamberFace, GroupDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// `H = P'`: invariant subspaces of `C[G/P']`, supports anywhere in `Λ_σ`.
    #[default]
    QuotientByCommutator,
    /// Invariant linear systems on `G/H`: each support lies in a coset of `Λ(H)`.
    General,
}

#[derive(Debug, Clone)]
pub struct HorosphericalSpace {
    group: GroupDescriptor,
    face: ChamberFace,
    lambda_h: AffineLattice,
    mode: Mode,
    directions: AffineLattice,
    restricted: Polynomial,
    phi: Polynomial,
    p: usize,
    m: usize,
}

impl HorosphericalSpace {
    /// `lambda_h` is given in weight coordinates. In quotient mode it may be
    /// omitted and must otherwise equal `Λ_σ`.
    pub fn new(group: GroupDescriptor, face: ChamberFace, lambda_h: Option<AffineLattice>, mode: Mode) -> Result<Self> {
        face.validate(&group)?;
        let face_lattice = face.lattice(&group);
        let lambda_h = match (mode, lambda_h) {
            (Mode::QuotientByCommutator, None) => face_lattice.clone(),
            (Mode::QuotientByCommutator, Some(l)) => {
                check_dim(group.rank(), l.ambient_dim())?;
                if !l.is_linear() || !l.same_directions(&face_lattice) {
                    return domain("in quotient mode Λ(H) must equal the face lattice");
                }
                l
            }
            (Mode::General, Some(l)) => l,
            (Mode::General, None) => return domain("general mode needs lambda_H"),
        };
        let (p, m) = weyl::space_dims(&group, &face, &lambda_h)?;
        let basis = lambda_h
            .basis()
            .iter()
            .map(|h| {
                face.block_coords(&group, h).ok_or_else(|| Error::Internal("Λ(H) vector is not block-constant".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let directions = AffineLattice::linear(face.dim(&group), basis)?;
        let (restricted, phi) = weyl::restricted_weyl(&group, &face);
        Ok(Self { group, face, lambda_h, mode, directions, restricted, phi, p, m })
    }

    pub fn quotient(group: GroupDescriptor, face: ChamberFace) -> Result<Self> {
        Self::new(group, face, None, Mode::QuotientByCommutator)
    }

    pub fn general(group: GroupDescriptor, face: ChamberFace, lambda_h: AffineLattice) -> Result<Self> {
        Self::new(group, face, Some(lambda_h), Mode::General)
    }

    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    pub fn face(&self) -> &ChamberFace {
        &self.face
    }

    pub fn lambda_h(&self) -> &AffineLattice {
        &self.lambda_h
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// `Λ(H)` in block coordinates.
    pub fn directions(&self) -> &AffineLattice {
        &self.directions
    }

    /// `F_σ` in block coordinates.
    pub fn restricted_weyl(&self) -> &Polynomial {
        &self.restricted
    }

    pub fn phi(&self) -> &Polynomial {
        &self.phi
    }

    pub fn phi_degree(&self) -> usize {
        self.p - self.face.dim(&self.group)
    }

    /// `dim G/P'`.
    pub fn p(&self) -> usize {
        self.p
    }

    /// `dim G/H`; also the number of supports an index takes.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn support(&self, weights: impl IntoIterator<Item = LatticeVector>) -> Result<SupportSet> {
        let weights: BTreeSet<LatticeVector> = weights.into_iter().collect();
        let mut block = Vec::with_capacity(weights.len());
        for w in &weights {
            check_dim(self.group.rank(), w.len())?;
            if !self.group.is_dominant(w) {
                return domain(format!("weight {w:?} is not dominant"));
            }
            block.push(
                self.face
                    .block_coords(&self.group, w)
                    .ok_or_else(|| Error::Domain(format!("weight {w:?} is not constant on the blocks of the face")))?,
            );
        }
        let Some(first) = block.first() else {
            return domain("supports must be nonempty");
        };
        let lattice = self.directions.with_offset(to_rational(first))?;
        let block = FiniteSet::in_lattice(block, lattice)
            .map_err(|_| Error::Domain("support does not lie in a single coset of Λ(H)".into()))?;
        Ok(SupportSet { weights, block })
    }

    fn wrap_block(&self, block: FiniteSet) -> SupportSet {
        let weights = block.points().iter().map(|b| self.face.embed(&self.group, b)).collect();
        SupportSet { weights, block }
    }

    fn check_member(&self, a: &SupportSet) -> Result<()> {
        check_dim(self.face.dim(&self.group), a.block.ambient_dim())?;
        if !a.block.lattice().same_directions(&self.directions) {
            return domain("support belongs to a different space");
        }
        Ok(())
    }

    pub fn product_support(&self, a: &SupportSet, b: &SupportSet) -> Result<SupportSet> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(self.wrap_block(a.block.sumset(&b.block)?))
    }

    pub fn completion_support(&self, a: &SupportSet) -> Result<SupportSet> {
        self.check_member(a)?;
        Ok(self.wrap_block(a.block.completion()))
    }

    fn check_count(&self, supports: &[SupportSet]) -> Result<()> {
        if supports.len() != self.m {
            return domain(format!("this space has dimension {} but {} supports were given", self.m, supports.len()));
        }
        supports.iter().try_for_each(|a| self.check_member(a))
    }

    /// `m!` times the mixed integral of `φ_σ` over the moment polytopes.
    pub fn index_via_integral(&self, supports: &[SupportSet], workers: usize) -> Result<Rational> {
        self.check_count(supports)?;
        if self.m == 0 {
            return Ok(Rational::one());
        }
        let bodies = supports.iter().map(SupportSet::block_polytope).collect();
        let system = BodySystem::new(bodies, self.directions.clone())?;
        let b = polarization::mixed_integral_parallel(&self.phi, &system, workers)?;
        Ok(b * rational::factorial(self.m))
    }

    /// `m!` times the mixed volume of the Newton lifts of the moment polytopes.
    pub fn index_via_lift(&self, supports: &[SupportSet], workers: usize) -> Result<Rational> {
        self.check_count(supports)?;
        if self.m == 0 {
            return Ok(Rational::one());
        }
        let lifts = supports
            .iter()
            .map(|a| NewtonLift::new(&self.group, &self.face, a.block_polytope()))
            .collect::<Result<Vec<_>>>()?;
        let measure = self.lift_measure()?;
        let b = polarization::polarize_parallel(&LiftVolume { measure: &measure }, &lifts, workers)?;
        Ok(b * rational::factorial(self.m))
    }

    /// Measure on the direction space of lifts, normalized by the lifted `Λ(H)`.
    pub fn lift_measure(&self) -> Result<Measure> {
        Measure::from_lattice(&gt::lift_lattice(&self.group, &self.face, &self.directions)?)
    }

    /// Dimension of the completion of the `k`-th power of the support:
    /// `Σ dim V_λ` over the points of `k·Δ` in the `k`-th coset.
    pub fn hilbert_function(&self, a: &SupportSet, k: usize) -> Result<BigInt> {
        self.check_member(a)?;
        let pts = a.block.dilated_completion(k)?;
        pts.points().iter().map(|b| weyl::dim_irrep(&self.group, &self.face.embed(&self.group, b))).sum()
    }

    /// The Hilbert function as a polynomial in `k`, by interpolation at
    /// `k = 0, …, m + deg φ_σ + 1`; its degree is checked to be at most `m`.
    pub fn hilbert_polynomial(&self, a: &SupportSet) -> Result<Polynomial> {
        let diffs = self.hilbert_differences(a)?;
        let k = Polynomial::var(1, 0);
        let mut binom = Polynomial::one(1);
        let mut out = Polynomial::zero(1);
        for (j, d) in diffs.iter().enumerate() {
            out = out.add(&binom.scale(&rational::from_bigint(d.clone())));
            // C(k, j+1) = C(k, j) (k - j) / (j + 1)
            let step =
                k.add(&Polynomial::constant(1, rational::int(-(j as i64)))).scale(&rational::frac(1, j as i64 + 1));
            binom = binom.mul(&step);
        }
        Ok(out)
    }

    /// `m!` times the coefficient of `k^m` in the Hilbert polynomial.
    pub fn self_index_via_hilbert(&self, a: &SupportSet) -> Result<Rational> {
        let diffs = self.hilbert_differences(a)?;
        Ok(rational::from_bigint(diffs.get(self.m).cloned().unwrap_or_default()))
    }

    /// Forward differences `Δ^j H(0)` for `j <= m`.
    fn hilbert_differences(&self, a: &SupportSet) -> Result<Vec<BigInt>> {
        let nodes = self.m + self.phi_degree() + 2;
        let mut values = (0..nodes).map(|k| self.hilbert_function(a, k)).collect::<Result<Vec<_>>>()?;
        let mut diffs = Vec::with_capacity(nodes);
        while !values.is_empty() {
            diffs.push(values[0].clone());
            values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        if diffs[self.m + 1..].iter().any(|d| !d.is_zero()) {
            return Err(Error::Internal(format!("Hilbert function has degree above {}", self.m)));
        }
        diffs.truncate(self.m + 1);
        Ok(diffs)
    }

    /// All available routes; they must agree on a nonnegative integer.
    pub fn compute_index(&self, supports: &[SupportSet], workers: usize) -> Result<IndexReport> {
        let integral = self.index_via_integral(supports, workers)?;
        let lift = self.index_via_lift(supports, workers)?;
        let hilbert = match supports.split_first() {
            Some((a, rest)) if rest.iter().all(|b| b.block_polytope() == a.block_polytope()) => {
                Some(self.self_index_via_hilbert(a)?)
            }
            _ => None,
        };
        if integral != lift {
            return Err(Error::RouteDisagreement(format!(
                "integral route gives {}, lift route gives {}",
                rational::format(&integral),
                rational::format(&lift)
            )));
        }
        if let Some(h) = &hilbert {
            if *h != integral {
                return Err(Error::RouteDisagreement(format!(
                    "integral route gives {}, Hilbert route gives {}",
                    rational::format(&integral),
                    rational::format(h)
                )));
            }
        }
        let index = match rational::as_integer(&integral) {
            Some(i) if !i.is_negative() => i,
            _ => return Err(Error::NonIntegral(integral)),
        };
        Ok(IndexReport { index, integral, lift, hilbert })
    }
}

/// Lattice-normalized volume of Newton lifts.
struct LiftVolume<'a> {
    measure: &'a Measure,
}

impl HomogeneousFunctional<NewtonLift> for LiftVolume<'_> {
    fn degree(&self) -> usize {
        self.measure.dim()
    }

    fn evaluate(&self, body: &NewtonLift) -> Result<Rational> {
        Ok(body.lift().volume_with(self.measure))
    }
}

/// A support: dominant weights on the face, in one coset of `Λ(H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    weights: BTreeSet<LatticeVector>,
    block: FiniteSet,
}

impl SupportSet {
    /// Weights in full coordinates.
    pub fn weights(&self) -> &BTreeSet<LatticeVector> {
        &self.weights
    }

    /// Weights in block coordinates of the face.
    pub fn block(&self) -> &FiniteSet {
        &self.block
    }

    /// Convex hull of the weights in full coordinates.
    pub fn moment_polytope(&self) -> Polytope {
        let pts: Vec<Vec<Rational>> = self.weights.iter().map(|w| to_rational(w)).collect();
        Polytope::hull(&pts).expect("weights share a dimension")
    }

    /// The moment polytope in block coordinates.
    pub fn block_polytope(&self) -> Polytope {
        self.block.hull()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub index: BigInt,
    pub integral: Rational,
    pub lift: Rational,
    pub hilbert: Option<Rational>,
}

#[derive(Serialize, Deserialize)]
struct ReportWire {
    index: String,
    routes: RoutesWire,
}

#[derive(Serialize, Deserialize)]
struct RoutesWire {
    #[serde(with = "rational::serde_rational")]
    integral: Rational,
    #[serde(with = "rational::serde_rational")]
    lift: Rational,
    #[serde(with = "opt_rational")]
    hilbert: Option<Rational>,
}

mod opt_rational {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v {
            Some(r) => s.serialize_str(&rational::format(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
        #[derive(Deserialize)]
        struct W(#[serde(deserialize_with = "rational::deserialize_rational")] Rational);
        Ok(Option::<W>::deserialize(d)?.map(|w| w.0))
    }
}

impl Serialize for IndexReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ReportWire {
            index: self.index.to_string(),
            routes: RoutesWire {
                integral: self.integral.clone(),
                lift: self.lift.clone(),
                hilbert: self.hilbert.clone(),
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IndexReport {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = ReportWire::deserialize(d)?;
        let index = w.index.parse::<BigInt>().map_err(D::Error::custom)?;
        Ok(Self { index, integral: w.routes.integral, lift: w.routes.lift, hilbert: w.routes.hilbert })
    }
}

/// An index problem as read from JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Problem {
    pub group: GroupDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face: Option<ChamberFace>,
    #[serde(default, rename = "lambda_H", skip_serializing_if = "Option::is_none")]
    pub lambda_h: Option<AffineLattice>,
    #[serde(default)]
    pub mode: Mode,
    pub supports: Vec<Vec<LatticeVector>>,
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The space; a missing face means the whole chamber.
    pub fn space(&self) -> Result<HorosphericalSpace> {
        let face = self.face.clone().unwrap_or_else(|| ChamberFace::full(&self.group));
        HorosphericalSpace::new(self.group.clone(), face, self.lambda_h.clone(), self.mode)
    }

    pub fn support_sets(&self, space: &HorosphericalSpace) -> Result<Vec<SupportSet>> {
        self.supports.iter().map(|s| space.support(s.iter().cloned())).collect()
    }

    pub fn solve(&self, workers: usize) -> Result<IndexReport> {
        let space = self.space()?;
        space.compute_index(&self.support_sets(&space)?, workers)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn bezout() -> HorosphericalSpace {
        let g = GroupDescriptor::gl(3);
        let face = ChamberFace::new(&g, vec![vec![1, 2]]).unwrap();
        HorosphericalSpace::general(g, face, AffineLattice::linear(3, vec![vec![1, 0, 0]]).unwrap()).unwrap()
    }

    fn ray(space: &HorosphericalSpace, ks: impl IntoIterator<Item = i64>) -> SupportSet {
        space.support(ks.into_iter().map(|k| vec![k, 0, 0])).unwrap()
    }

    fn triangle(space: &HorosphericalSpace) -> SupportSet {
        space.support([vec![0, 0], vec![1, 0], vec![1, 1]]).unwrap()
    }

    #[test]
    fn bezout_products() {
        let s = bezout();
        assert_eq!(s.m(), 3);
        let sup = [ray(&s, 0..=1), ray(&s, 0..=2), ray(&s, 0..=3)];
        let r = s.compute_index(&sup, 1).unwrap();
        assert_eq!(r.index, BigInt::from(6));
        assert_eq!(r.hilbert, None);
        let points = [ray(&s, [1]), ray(&s, [2]), ray(&s, [3])];
        assert_eq!(s.index_via_integral(&points, 1).unwrap(), int(0));
        assert_eq!(s.index_via_lift(&points, 1).unwrap(), int(0));
    }

    #[test]
    fn bezout_hilbert_diagonal() {
        let s = bezout();
        for d in 1..=2 {
            let a = ray(&s, 0..=d);
            assert_eq!(s.self_index_via_hilbert(&a).unwrap(), int(d * d * d));
        }
    }

    #[test]
    fn gl2_triangle() {
        let g = GroupDescriptor::gl(2);
        let s = HorosphericalSpace::quotient(g.clone(), ChamberFace::full(&g)).unwrap();
        assert_eq!(s.p(), 3);
        let a = triangle(&s);
        assert_eq!(s.hilbert_function(&a, 1).unwrap(), BigInt::from(4));
        assert_eq!(s.hilbert_function(&a, 2).unwrap(), BigInt::from(10));
        let h = s.hilbert_polynomial(&a).unwrap();
        assert_eq!(h.top_component().evaluate(&[int(1)]).unwrap(), frac(1, 6));
        let r = s.compute_index(&[a.clone(), a.clone(), a], 1).unwrap();
        assert_eq!(r.index, BigInt::from(1));
        assert_eq!(r.hilbert, Some(int(1)));
    }

    #[test]
    fn point_support_has_zero_self_index() {
        let g = GroupDescriptor::gl(2);
        let s = HorosphericalSpace::quotient(g.clone(), ChamberFace::full(&g)).unwrap();
        let a = s.support([vec![2, 1]]).unwrap();
        assert_eq!(s.hilbert_function(&a, 3).unwrap(), weyl::dim_irrep(&g, &[6, 3]).unwrap());
        assert_eq!(s.self_index_via_hilbert(&a).unwrap(), int(0));
    }

    #[test]
    fn torus_bernstein_kushnirenko() {
        let t = GroupDescriptor::torus(2);
        let s = HorosphericalSpace::quotient(t.clone(), ChamberFace::full(&t)).unwrap();
        let simplex = s.support([vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(s.compute_index(&[simplex.clone(), simplex], 1).unwrap().index, BigInt::from(1));
    }

    #[test]
    fn flag_degrees() {
        let g2 = GroupDescriptor::gl(2);
        let flag2 =
            HorosphericalSpace::general(g2.clone(), ChamberFace::full(&g2), AffineLattice::linear(2, vec![]).unwrap())
                .unwrap();
        assert_eq!(flag2.m(), 1);
        for k in 1..=3 {
            let a = flag2.support([vec![k, 0]]).unwrap();
            assert_eq!(flag2.compute_index(&[a], 1).unwrap().index, BigInt::from(k));
        }
        let g3 = GroupDescriptor::gl(3);
        let flag3 =
            HorosphericalSpace::general(g3.clone(), ChamberFace::full(&g3), AffineLattice::linear(3, vec![]).unwrap())
                .unwrap();
        let rho = flag3.support([vec![2, 1, 0]]).unwrap();
        let r = flag3.compute_index(&[rho.clone(), rho.clone(), rho], 1).unwrap();
        assert_eq!(r.index, BigInt::from(6));
        assert_eq!(r.hilbert, Some(int(6)));
    }

    #[test]
    fn completion_in_cosets() {
        let g = GroupDescriptor::gl(1);
        let face = ChamberFace::full(&g);
        let q = HorosphericalSpace::quotient(g.clone(), face.clone()).unwrap();
        let a = q.support([vec![0], vec![3]]).unwrap();
        assert_eq!(q.completion_support(&a).unwrap().weights().len(), 4);

        let even = HorosphericalSpace::general(g, face, AffineLattice::linear(1, vec![vec![2]]).unwrap()).unwrap();
        let b = even.support([vec![0], vec![4]]).unwrap();
        let cb: Vec<_> = even.completion_support(&b).unwrap().weights().iter().cloned().collect();
        assert_eq!(cb, vec![vec![0], vec![2], vec![4]]);
        let c = even.support([vec![1], vec![3]]).unwrap();
        assert_eq!(even.completion_support(&c).unwrap(), c);
        assert!(even.support([vec![0], vec![1]]).is_err());
    }

    #[test]
    fn invalid_supports() {
        let s = bezout();
        assert!(s.support([vec![1, 1, 0]]).is_err());
        assert!(s.support([vec![0, 0, 1]]).is_err());
        assert!(s.support(Vec::<LatticeVector>::new()).is_err());
        let a = ray(&s, 0..=1);
        assert!(s.index_via_integral(&[a.clone(), a], 1).is_err());
    }

    #[test]
    fn products_and_moment_polytopes() {
        let s = bezout();
        let p = s.product_support(&ray(&s, 0..=1), &ray(&s, 0..=2)).unwrap();
        assert_eq!(p, ray(&s, 0..=3));
        assert_eq!(ray(&s, 0..=2).moment_polytope().vertices().len(), 2);
        let g = GroupDescriptor::gl(2);
        let q = HorosphericalSpace::quotient(g.clone(), ChamberFace::full(&g)).unwrap();
        let one = q.product_support(&q.support([vec![0, 0]]).unwrap(), &q.support([vec![1, 1]]).unwrap()).unwrap();
        assert_eq!(one, q.support([vec![1, 1]]).unwrap());
    }

    #[test]
    fn problem_json() {
        let text = r#"{"group":{"gl":[3]},"face":{"blocks":[[1,2]]},"lambda_H":{"basis":[[1,0,0]]},
            "mode":"general","supports":[[[0,0,0],[1,0,0]],[[0,0,0],[2,0,0]],[[0,0,0],[3,0,0]]]}"#;
        let report = Problem::from_json(text).unwrap().solve(2).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(json, r#"{"index":"6","routes":{"integral":"6","lift":"6","hilbert":null}}"#);
        let back: IndexReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert!(matches!(Problem::from_json("{"), Err(Error::Parse(_))));
    }
}
