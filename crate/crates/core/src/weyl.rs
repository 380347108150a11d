//! Root data for products of `GL(n)` factors and a torus.
//!
//! Weights are flat integer vectors: the coordinates of each `GL(n_i)` factor
//! in declaration order, followed by the torus coordinates. A weight is
//! dominant when every `GL` block is non-increasing.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, domain, Error, Result};
use crate::lattice::{AffineLattice, LatticeVector};
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupWire", into = "GroupWire")]
pub struct GroupDescriptor {
    gl: Vec<usize>,
    torus: usize,
}

#[derive(Serialize, Deserialize)]
struct GroupWire {
    #[serde(default)]
    gl: Vec<usize>,
    #[serde(default)]
    torus: usize,
}

impl TryFrom<GroupWire> for GroupDescriptor {
    type Error = Error;
    fn try_from(w: GroupWire) -> Result<Self> {
        GroupDescriptor::new(w.gl, w.torus)
    }
}

impl From<GroupDescriptor> for GroupWire {
    fn from(g: GroupDescriptor) -> Self {
        GroupWire { gl: g.gl, torus: g.torus }
    }
}

impl GroupDescriptor {
    pub fn new(gl: Vec<usize>, torus: usize) -> Result<Self> {
        if gl.contains(&0) {
            return domain("GL factors must have size at least 1");
        }
        Ok(Self { gl, torus })
    }

    pub fn gl(n: usize) -> Self {
        Self::new(vec![n], 0).expect("n >= 1")
    }

    pub fn torus(rank: usize) -> Self {
        Self { gl: Vec::new(), torus: rank }
    }

    pub fn gl_factors(&self) -> &[usize] {
        &self.gl
    }

    pub fn torus_rank(&self) -> usize {
        self.torus
    }

    /// `d = Σ n_i² + t`.
    pub fn dim(&self) -> usize {
        self.gl.iter().map(|n| n * n).sum::<usize>() + self.torus
    }

    /// `r = Σ n_i + t`, the length of a weight vector.
    pub fn rank(&self) -> usize {
        self.gl.iter().sum::<usize>() + self.torus
    }

    /// `(d - r) / 2`.
    pub fn positive_roots(&self) -> usize {
        self.gl.iter().map(|n| n * (n - 1) / 2).sum()
    }

    /// Index of the first coordinate of each `GL` factor.
    pub fn factor_starts(&self) -> Vec<usize> {
        self.gl
            .iter()
            .scan(0, |acc, &n| {
                let s = *acc;
                *acc += n;
                Some(s)
            })
            .collect()
    }

    pub fn is_dominant<T: PartialOrd>(&self, weight: &[T]) -> bool {
        weight.len() == self.rank()
            && self
                .factor_starts()
                .iter()
                .zip(&self.gl)
                .all(|(&s, &n)| weight[s..s + n].windows(2).all(|w| w[0] >= w[1]))
    }

    /// Positive roots as coordinate pairs `(i, j)`, `i < j`, with the
    /// within-factor distance `j - i`.
    pub fn root_pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (&s, &n) in self.factor_starts().iter().zip(&self.gl) {
            for a in 0..n {
                for b in a + 1..n {
                    out.push((s + a, s + b, b - a));
                }
            }
        }
        out
    }
}

/// A face of the dominant chamber: weights constant on consecutive blocks of
/// each `GL` factor; torus coordinates are unconstrained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberFace {
    blocks: Vec<Vec<usize>>,
}

impl ChamberFace {
    pub fn new(group: &GroupDescriptor, blocks: Vec<Vec<usize>>) -> Result<Self> {
        check_dim(group.gl.len(), blocks.len())?;
        for (sizes, &n) in blocks.iter().zip(&group.gl) {
            if sizes.contains(&0) || sizes.iter().sum::<usize>() != n {
                return domain(format!("block sizes {sizes:?} do not partition {n}"));
            }
        }
        Ok(Self { blocks })
    }

    /// The whole chamber (all blocks of size one).
    pub fn full(group: &GroupDescriptor) -> Self {
        Self { blocks: group.gl.iter().map(|&n| vec![1; n]).collect() }
    }

    pub fn validate(&self, group: &GroupDescriptor) -> Result<()> {
        Self::new(group, self.blocks.clone()).map(|_| ())
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// `dim σ` = number of blocks plus the torus rank.
    pub fn dim(&self, group: &GroupDescriptor) -> usize {
        self.block_count() + group.torus
    }

    /// Block coordinate index of every weight coordinate.
    pub fn block_of(&self, group: &GroupDescriptor) -> Vec<usize> {
        let mut out = Vec::with_capacity(group.rank());
        let mut b = 0;
        for sizes in &self.blocks {
            for &s in sizes {
                out.extend(std::iter::repeat_n(b, s));
                b += 1;
            }
        }
        out.extend(b..b + group.torus);
        out
    }

    /// Block coordinates → weight coordinates.
    pub fn embed<T: Clone>(&self, group: &GroupDescriptor, block: &[T]) -> Vec<T> {
        self.block_of(group).iter().map(|&b| block[b].clone()).collect()
    }

    /// Weight coordinates → block coordinates, when the weight is constant on blocks.
    pub fn block_coords<T: Clone + PartialEq>(&self, group: &GroupDescriptor, weight: &[T]) -> Option<Vec<T>> {
        if weight.len() != group.rank() {
            return None;
        }
        let map = self.block_of(group);
        let mut out: Vec<Option<T>> = vec![None; self.dim(group)];
        for (x, &b) in weight.iter().zip(&map) {
            match &out[b] {
                None => out[b] = Some(x.clone()),
                Some(y) if y == x => {}
                Some(_) => return None,
            }
        }
        out.into_iter().collect()
    }

    /// Dominance of a block-coordinate vector.
    pub fn is_dominant_block<T: PartialOrd>(&self, block: &[T]) -> bool {
        let mut b = 0;
        for sizes in &self.blocks {
            let q = sizes.len();
            if !block[b..b + q].windows(2).all(|w| w[0] >= w[1]) {
                return false;
            }
            b += q;
        }
        true
    }

    /// Strictly decreasing block values in every factor.
    pub fn in_relative_interior_block<T: PartialOrd>(&self, block: &[T]) -> bool {
        let mut b = 0;
        for sizes in &self.blocks {
            let q = sizes.len();
            if !block[b..b + q].windows(2).all(|w| w[0] > w[1]) {
                return false;
            }
            b += q;
        }
        true
    }

    pub fn contains(&self, group: &GroupDescriptor, weight: &[i64]) -> bool {
        group.is_dominant(weight) && self.block_coords(group, weight).is_some()
    }

    /// `Λ_σ` in weight coordinates, with the block indicator basis.
    pub fn lattice(&self, group: &GroupDescriptor) -> AffineLattice {
        let d = self.dim(group);
        let map = self.block_of(group);
        let basis: Vec<LatticeVector> = (0..d).map(|b| map.iter().map(|&x| i64::from(x == b)).collect()).collect();
        AffineLattice::linear(group.rank(), basis).expect("block indicators are independent")
    }

    /// Positive roots whose two coordinates fall in different blocks.
    pub fn crossing_pairs(&self, group: &GroupDescriptor) -> Vec<(usize, usize, usize)> {
        let map = self.block_of(group);
        group.root_pairs().into_iter().filter(|&(i, j, _)| map[i] != map[j]).collect()
    }
}

/// `F(λ) = ∏_{i<j} (λ_i - λ_j + j - i) / (j - i)` over each `GL` factor.
pub fn weyl_polynomial(group: &GroupDescriptor) -> Polynomial {
    let r = group.rank();
    group.root_pairs().into_iter().fold(Polynomial::one(r), |acc, (i, j, gap)| acc.mul(&root_factor(r, i, j, gap)))
}

fn root_factor(r: usize, i: usize, j: usize, gap: usize) -> Polynomial {
    let inv = rational::frac(1, gap as i64);
    let mut coeffs = vec![Rational::zero(); r];
    coeffs[i] = inv.clone();
    coeffs[j] = -inv;
    Polynomial::affine(&coeffs, Rational::one())
}

/// `dim V_λ` by the Weyl dimension formula.
pub fn dim_irrep(group: &GroupDescriptor, weight: &[i64]) -> Result<BigInt> {
    check_dim(group.rank(), weight.len())?;
    if !group.is_dominant(weight) {
        return domain(format!("weight {weight:?} is not dominant"));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j, gap) in group.root_pairs() {
        num *= BigInt::from(weight[i] - weight[j] + gap as i64);
        den *= BigInt::from(gap);
    }
    Ok(num / den)
}

/// `(F_σ, φ_σ)` in block coordinates: the restriction of the Weyl polynomial
/// to the span of the face and its top homogeneous component.
pub fn restricted_weyl(group: &GroupDescriptor, face: &ChamberFace) -> (Polynomial, Polynomial) {
    let d = face.dim(group);
    let subs: Vec<Polynomial> = face.block_of(group).iter().map(|&b| Polynomial::var(d, b)).collect();
    let restricted = weyl_polynomial(group).compose(&subs).expect("arity matches rank");
    let top = restricted.top_component();
    (restricted, top)
}

/// `(p, m)`: dimensions of `G/P'` and `G/H` for `Λ(H) ⊆ Λ_σ` given in weight coordinates.
pub fn space_dims(group: &GroupDescriptor, face: &ChamberFace, lambda_h: &AffineLattice) -> Result<(usize, usize)> {
    check_dim(group.rank(), lambda_h.ambient_dim())?;
    if !lambda_h.is_linear() {
        return domain("Λ(H) must be a linear sublattice");
    }
    if !face.lattice(group).contains_directions_of(lambda_h) {
        return domain("Λ(H) is not contained in the face lattice");
    }
    let roots = face.crossing_pairs(group).len();
    Ok((roots + face.dim(group), roots + lambda_h.rank()))
}
