//! The additive semigroup of finite lattice sets and its image in polytopes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, domain, Result};
use crate::lattice::{to_lattice, to_rational, AffineLattice, LatticeVector};
use crate::linalg;
use crate::polytope::Polytope;
use crate::rational::{self, Rational};

/// A nonempty finite subset of an affine lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSet {
    points: BTreeSet<LatticeVector>,
    lattice: AffineLattice,
}

impl FiniteSet {
    /// A finite subset of `Z^n`.
    pub fn new(points: impl IntoIterator<Item = LatticeVector>) -> Result<Self> {
        let points: BTreeSet<LatticeVector> = points.into_iter().collect();
        let Some(first) = points.first() else {
            return domain("finite sets must be nonempty");
        };
        let lattice = AffineLattice::standard(first.len());
        Self::in_lattice(points, lattice)
    }

    /// A finite subset of the given affine lattice.
    pub fn in_lattice(points: impl IntoIterator<Item = LatticeVector>, lattice: AffineLattice) -> Result<Self> {
        let points: BTreeSet<LatticeVector> = points.into_iter().collect();
        if points.is_empty() {
            return domain("finite sets must be nonempty");
        }
        for p in &points {
            check_dim(lattice.ambient_dim(), p.len())?;
            if !lattice.contains(&to_rational(p)) {
                return domain(format!("point {p:?} is not in the set's lattice"));
            }
        }
        Ok(Self { points, lattice })
    }

    pub fn points(&self) -> &BTreeSet<LatticeVector> {
        &self.points
    }

    pub fn lattice(&self) -> &AffineLattice {
        &self.lattice
    }

    pub fn ambient_dim(&self) -> usize {
        self.lattice.ambient_dim()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn hull(&self) -> Polytope {
        let pts: Vec<Vec<Rational>> = self.points.iter().map(|p| to_rational(p)).collect();
        Polytope::hull(&pts).expect("nonempty set has a hull")
    }

    /// `A + B = {a + b}`; lattices must share directions, offsets add.
    pub fn sumset(&self, other: &FiniteSet) -> Result<FiniteSet> {
        if !self.lattice.same_directions(&other.lattice) {
            return domain("sumset of sets in different lattices");
        }
        let mut points = BTreeSet::new();
        for a in &self.points {
            for b in &other.points {
                points.insert(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        let lattice = self.lattice.with_offset(linalg::add(self.lattice.offset(), other.lattice.offset()))?;
        Ok(FiniteSet { points, lattice })
    }

    /// `k`-fold sumset `A + … + A`, `k >= 1`.
    pub fn iterated_sumset(&self, k: usize) -> Result<FiniteSet> {
        let mut acc = self.clone();
        for _ in 1..k.max(1) {
            acc = acc.sumset(self)?;
        }
        Ok(acc)
    }

    /// All lattice points of the convex hull.
    pub fn completion(&self) -> FiniteSet {
        let pts = lattice_points_of(&self.hull(), &self.lattice);
        FiniteSet { points: pts, lattice: self.lattice.clone() }
    }

    /// `A ~ B` iff their convex hulls coincide.
    pub fn analogous(&self, other: &FiniteSet) -> bool {
        self.lattice.same_directions(&other.lattice) && self.hull() == other.hull()
    }

    /// Lattice points of `k · hull(A)` in the `k`-scaled affine lattice.
    pub fn dilated_completion(&self, k: usize) -> Result<FiniteSet> {
        let kq = rational::int(k as i64);
        let lattice = self.lattice.with_offset(linalg::scale(self.lattice.offset(), &kq))?;
        let pts = lattice_points_of(&self.hull().dilate(&kq)?, &lattice);
        Ok(FiniteSet { points: pts, lattice })
    }
}

fn lattice_points_of(p: &Polytope, lattice: &AffineLattice) -> BTreeSet<LatticeVector> {
    p.lattice_points(lattice)
        .expect("matching dimensions")
        .iter()
        .map(|x| to_lattice(x).expect("lattice points are integral"))
        .collect()
}

pub fn sumset(a: &FiniteSet, b: &FiniteSet) -> Result<FiniteSet> {
    a.sumset(b)
}

pub fn completion_set(a: &FiniteSet) -> FiniteSet {
    a.completion()
}

pub fn analogous(a: &FiniteSet, b: &FiniteSet) -> bool {
    a.analogous(b)
}

/// Outcome of checking `A + nΔ(A)_Z = (n+1)Δ(A)_Z = Δ(A)_Z + nΔ(A)_Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub n: usize,
    /// Both equalities hold with `kΔ(A)_Z` read as the lattice points of `k·Δ(A)`.
    pub dilation_reading: bool,
    /// Both equalities hold with `kΔ(A)_Z` read as the `k`-fold sumset of `Δ(A)_Z`.
    pub sumset_reading: bool,
    /// The two readings of `nΔ(A)_Z` give different sets.
    pub readings_differ: bool,
}

/// Checks the saturation identity under the dilation reading.
pub fn saturation_check(a: &FiniteSet, n: usize) -> Result<bool> {
    Ok(saturation_report(a, n)?.dilation_reading)
}

/// Evaluates the saturation identity under both readings of `nΔ(A)_Z`.
pub fn saturation_report(a: &FiniteSet, n: usize) -> Result<SaturationReport> {
    let base = a.completion();
    let dil_n = a.dilated_completion(n)?;
    let dil_n1 = a.dilated_completion(n + 1)?;
    let dilation_reading = a.sumset(&dil_n)?.points == dil_n1.points && base.sumset(&dil_n)?.points == dil_n1.points;

    let (sum_n, sum_n1) =
        if n == 0 { (None, base.clone()) } else { (Some(base.iterated_sumset(n)?), base.iterated_sumset(n + 1)?) };
    let with = |s: &FiniteSet| -> Result<BTreeSet<LatticeVector>> {
        Ok(match &sum_n {
            Some(t) => s.sumset(t)?.points,
            None => s.points.clone(),
        })
    };
    let sumset_reading = with(a)? == sum_n1.points && with(&base)? == sum_n1.points;
    let readings_differ = match &sum_n {
        Some(t) => t.points != dil_n.points,
        None => dil_n.points.len() != 1,
    };
    Ok(SaturationReport { n, dilation_reading, sumset_reading, readings_differ })
}

#[derive(Serialize, Deserialize)]
pub(crate) struct FiniteSetWire {
    pub points: Vec<LatticeVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<AffineLattice>,
}

impl Serialize for FiniteSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let standard = AffineLattice::standard(self.ambient_dim());
        FiniteSetWire {
            points: self.points.iter().cloned().collect(),
            lattice: (self.lattice != standard).then(|| self.lattice.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = FiniteSetWire::deserialize(d)?;
        match w.lattice {
            Some(l) => FiniteSet::in_lattice(w.points, l),
            None => FiniteSet::new(w.points),
        }
        .map_err(D::Error::custom)
    }
}
