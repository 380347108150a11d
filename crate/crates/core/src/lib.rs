//! Exact convex geometry and intersection indices of horospherical spaces.

pub mod error;
pub mod gt;
pub mod horospherical;
pub mod lattice;
pub mod linalg;
pub mod polarization;
pub mod polynomial;
pub mod polytope;
pub mod rational;
pub mod semigroup;
pub mod weyl;

pub use error::{Error, Result};
pub use horospherical::{HorosphericalSpace, IndexReport, Mode, Problem, SupportSet};
pub use lattice::{AffineLattice, LatticeVector, Measure};
pub use polynomial::Polynomial;
pub use polytope::Polytope;
pub use rational::Rational;
pub use weyl::{ChamberFace, GroupDescriptor};
