//! Integer vectors and affine sublattices of Z^n.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::linalg;
use crate::rational::{self, int, Rational};

/// An element of Z^n.
pub type LatticeVector = Vec<i64>;

pub fn to_rational(v: &[i64]) -> Vec<Rational> {
    rational::ints(v)
}

/// Rounds back a rational vector known to be integral.
pub fn to_lattice(v: &[Rational]) -> Option<LatticeVector> {
    v.iter().map(|x| x.is_integer().then(|| x.to_integer()).and_then(|i| i64::try_from(i).ok())).collect()
}

/// The affine lattice `offset + Z·basis` inside Q^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLattice {
    offset: Vec<Rational>,
    basis: Vec<LatticeVector>,
    ambient_dim: usize,
}

impl AffineLattice {
    pub fn new(offset: Vec<Rational>, basis: Vec<LatticeVector>) -> Result<Self> {
        let ambient_dim = offset.len();
        for b in &basis {
            crate::error::check_dim(ambient_dim, b.len())?;
        }
        let rows: Vec<Vec<Rational>> = basis.iter().map(|b| to_rational(b)).collect();
        if linalg::rank(&rows) != basis.len() {
            return domain("lattice basis vectors are linearly dependent");
        }
        Ok(Self { offset, basis, ambient_dim })
    }

    /// Linear sublattice spanned by `basis` in dimension `dim`.
    pub fn linear(dim: usize, basis: Vec<LatticeVector>) -> Result<Self> {
        Self::new(vec![Rational::zero(); dim], basis)
    }

    /// The standard lattice Z^n.
    pub fn standard(dim: usize) -> Self {
        let basis = (0..dim).map(|i| (0..dim).map(|j| i64::from(i == j)).collect()).collect();
        Self { offset: vec![Rational::zero(); dim], basis, ambient_dim: dim }
    }

    pub fn offset(&self) -> &[Rational] {
        &self.offset
    }

    pub fn basis(&self) -> &[LatticeVector] {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn with_offset(&self, offset: Vec<Rational>) -> Result<Self> {
        crate::error::check_dim(self.ambient_dim, offset.len())?;
        Ok(Self { offset, ..self.clone() })
    }

    pub fn is_linear(&self) -> bool {
        self.offset.iter().all(Zero::is_zero)
    }

    pub fn basis_rational(&self) -> Vec<Vec<Rational>> {
        self.basis.iter().map(|b| to_rational(b)).collect()
    }

    /// Integer coordinates of `x - offset` in the basis, if `x` is a lattice point.
    pub fn coordinates(&self, x: &[Rational]) -> Option<Vec<BigInt>> {
        if x.len() != self.ambient_dim {
            return None;
        }
        let rel = linalg::sub(x, &self.offset);
        let c = linalg::solve_in_basis(&self.basis_rational(), &rel)?;
        c.into_iter().map(|v| v.is_integer().then(|| v.to_integer())).collect()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.coordinates(x).is_some()
    }

    pub fn point(&self, coords: &[BigInt]) -> Vec<Rational> {
        let mut x = self.offset.clone();
        for (c, b) in coords.iter().zip(&self.basis) {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += Rational::from_integer(c * BigInt::from(*bi));
            }
        }
        x
    }

    /// Whether every direction of `other` is a direction of `self`.
    pub fn contains_directions_of(&self, other: &AffineLattice) -> bool {
        other.basis.iter().all(|b| {
            linalg::solve_in_basis(&self.basis_rational(), &to_rational(b))
                .is_some_and(|c| c.iter().all(|x| x.is_integer()))
        })
    }

    pub fn same_directions(&self, other: &AffineLattice) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.rank() == other.rank()
            && self.contains_directions_of(other)
            && other.contains_directions_of(self)
    }

    /// Whether the rational span of the directions contains the vector `v`.
    pub fn spans(&self, v: &[Rational]) -> bool {
        linalg::solve_in_basis(&self.basis_rational(), v).is_some()
    }

    /// Basis of `directions ∩ W` where `W` is the row span of `subspace` (rows in RREF).
    pub fn directions_within(&self, subspace_rref: &[Vec<Rational>], pivots: &[usize]) -> Vec<LatticeVector> {
        // Residual of x against W: x - sum_i x[piv_i] * row_i. It vanishes iff x ∈ W.
        let residual = |x: &[Rational]| -> Vec<Rational> {
            let mut r = x.to_vec();
            for (row, &p) in subspace_rref.iter().zip(pivots) {
                let f = x[p].clone();
                for (ri, wi) in r.iter_mut().zip(row) {
                    *ri -= &f * wi;
                }
            }
            r
        };
        let cols: Vec<Vec<Rational>> = self.basis.iter().map(|b| residual(&to_rational(b))).collect();
        let n = self.ambient_dim;
        let l = self.basis.len();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let row: Vec<Rational> = cols.iter().map(|col| col[i].clone()).collect();
            let den = rational::common_denominator(&row);
            m.push(row.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect());
        }
        linalg::integer_kernel(&m, l)
            .into_iter()
            .map(|c| {
                (0..n)
                    .map(|i| {
                        let s: BigInt = c.iter().zip(&self.basis).map(|(cj, b)| cj * BigInt::from(b[i])).sum();
                        i64::try_from(s).expect("lattice coordinate overflow")
                    })
                    .collect()
            })
            .collect()
    }
}

/// Lebesgue measure on a rational subspace, normalized so a fundamental cell
/// of a chosen lattice in it has volume one.
#[derive(Debug, Clone)]
pub struct Measure {
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    cell: Rational,
}

impl Measure {
    /// Measure normalized by the lattice spanned by `basis` (independent vectors).
    pub fn new(basis: Vec<Vec<Rational>>) -> Result<Self> {
        let (_, pivots) = linalg::rref(&basis);
        if pivots.len() != basis.len() {
            return Err(Error::Domain("measure basis is degenerate".into()));
        }
        let sq: Vec<Vec<Rational>> = basis.iter().map(|b| pivots.iter().map(|&p| b[p].clone()).collect()).collect();
        let cell = linalg::det(&sq).abs();
        Ok(Self { basis, pivots, cell })
    }

    pub fn from_lattice(lattice: &AffineLattice) -> Result<Self> {
        Self::new(lattice.basis_rational())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// `|det|` of the parallelepiped spanned by `edges` (vectors in the subspace),
    /// in units of the fundamental cell.
    pub fn parallelepiped(&self, edges: &[Vec<Rational>]) -> Rational {
        if edges.is_empty() {
            return int(1);
        }
        let sq: Vec<Vec<Rational>> =
            edges.iter().map(|e| self.pivots.iter().map(|&p| e[p].clone()).collect()).collect();
        linalg::det(&sq).abs() / &self.cell
    }

    /// Cell volume measured in the coordinate projection onto `pivots`.
    pub fn cell_in_coordinates(&self, pivots: &[usize]) -> Rational {
        let sq: Vec<Vec<Rational>> =
            self.basis.iter().map(|b| pivots.iter().map(|&p| b[p].clone()).collect()).collect();
        linalg::det(&sq).abs()
    }

    /// Whether `v` lies in the subspace.
    pub fn spans(&self, v: &[Rational]) -> bool {
        linalg::solve_in_basis(&self.basis, v).is_some()
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct LatticeWire {
    #[serde(default, with = "rational::serde_vec", skip_serializing_if = "Vec::is_empty")]
    offset: Vec<Rational>,
    #[serde(default)]
    basis: Vec<LatticeVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
}

impl Serialize for AffineLattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LatticeWire { offset: self.offset.clone(), basis: self.basis.clone(), dim: Some(self.ambient_dim) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffineLattice {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = LatticeWire::deserialize(d)?;
        let dim = w
            .dim
            .or_else(|| (!w.offset.is_empty()).then_some(w.offset.len()))
            .or_else(|| w.basis.first().map(Vec::len))
            .ok_or_else(|| D::Error::custom("lattice needs an offset, a basis vector, or \"dim\""))?;
        let offset = if w.offset.is_empty() { vec![Rational::zero(); dim] } else { w.offset };
        AffineLattice::new(offset, w.basis).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, ints};

    #[test]
    fn membership_in_coset() {
        let l = AffineLattice::new(ints(&[1, 0]), vec![vec![2, 0], vec![0, 1]]).unwrap();
        assert!(l.contains(&ints(&[3, 5])));
        assert!(!l.contains(&ints(&[2, 5])));
        assert!(!l.contains(&[frac(1, 2), int(0)]));
    }

    #[test]
    fn dependent_basis_rejected() {
        assert!(AffineLattice::linear(2, vec![vec![1, 2], vec![2, 4]]).is_err());
    }

    #[test]
    fn directions_within_line() {
        // Z^2 ∩ span{(1,2)} = Z·(1,2).
        let z2 = AffineLattice::standard(2);
        let (rows, piv) = linalg::rref(&[ints(&[2, 4])]);
        let d = z2.directions_within(&rows, &piv);
        assert_eq!(d.len(), 1);
        assert!(d[0] == vec![1, 2] || d[0] == vec![-1, -2]);
    }

    #[test]
    fn measure_normalization() {
        let m = Measure::new(vec![ints(&[1, 2])]).unwrap();
        assert_eq!(m.parallelepiped(&[ints(&[2, 4])]), int(2));
        let sub = Measure::new(vec![ints(&[2, 0]), ints(&[0, 1])]).unwrap();
        assert_eq!(sub.parallelepiped(&[ints(&[1, 0]), ints(&[0, 1])]), frac(1, 2));
    }

    #[test]
    fn json_shape() {
        let l: AffineLattice = serde_json::from_str(r#"{"offset": ["1/2", 0], "basis": [[1, 1]]}"#).unwrap();
        assert_eq!(l.offset(), &[frac(1, 2), int(0)]);
        assert_eq!(l.rank(), 1);
        let back: AffineLattice = serde_json::from_str(&serde_json::to_string(&l).unwrap()).unwrap();
        assert_eq!(back, l);
    }
}
