//! Polarization of homogeneous functionals on convex bodies.
//!
//! The symmetric multilinear form `B` of a degree-`N` homogeneous functional
//! `P` is evaluated by inclusion–exclusion over nonempty subsets:
//!
//! `B(Δ_1, …, Δ_N) = (1/N!) Σ_{∅≠S⊆[N]} (-1)^{N-|S|} P(Σ_{i∈S} Δ_i)`.
//!
//! Equal bodies are grouped first, so a subset is identified by how many
//! copies of each distinct body it takes.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_dim, domain, Error, Result};
use crate::lattice::{AffineLattice, Measure};
use crate::polynomial::Polynomial;
use crate::polytope::Polytope;
use crate::rational::{self, Rational};

/// Bodies closed under Minkowski addition.
pub trait MinkowskiAdd: Clone + PartialEq + Sized {
    fn minkowski_add(&self, other: &Self) -> Result<Self>;

    /// `k`-fold sum of `self` with itself, `k >= 1`.
    fn multiple(&self, k: usize) -> Result<Self> {
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.minkowski_add(self)?;
        }
        Ok(acc)
    }
}

impl MinkowskiAdd for Polytope {
    fn minkowski_add(&self, other: &Self) -> Result<Self> {
        self.minkowski_sum(other)
    }

    fn multiple(&self, k: usize) -> Result<Self> {
        self.dilate(&rational::int(k as i64))
    }
}

pub trait HomogeneousFunctional<B>: Sync {
    fn degree(&self) -> usize;
    fn evaluate(&self, body: &B) -> Result<Rational>;
}

impl<B, T: HomogeneousFunctional<B>> HomogeneousFunctional<B> for &T {
    fn degree(&self) -> usize {
        (**self).degree()
    }
    fn evaluate(&self, body: &B) -> Result<Rational> {
        (**self).evaluate(body)
    }
}

/// Value of the polarization of `functional` at `bodies`.
pub fn polarize<B, F>(functional: &F, bodies: &[B]) -> Result<Rational>
where
    B: MinkowskiAdd + Send + Sync,
    F: HomogeneousFunctional<B>,
{
    polarize_parallel(functional, bodies, 1)
}

/// [`polarize`] with subset evaluations spread over `workers` threads.
/// The result does not depend on `workers`.
pub fn polarize_parallel<B, F>(functional: &F, bodies: &[B], workers: usize) -> Result<Rational>
where
    B: MinkowskiAdd + Send + Sync,
    F: HomogeneousFunctional<B>,
{
    let n = bodies.len();
    if n == 0 {
        return domain("polarization needs at least one body");
    }
    if functional.degree() != n {
        return domain(format!("functional has degree {} but {} bodies were given", functional.degree(), n));
    }

    let mut classes: Vec<(B, usize)> = Vec::new();
    for b in bodies {
        match classes.iter_mut().find(|(c, _)| c == b) {
            Some((_, m)) => *m += 1,
            None => classes.push((b.clone(), 1)),
        }
    }

    let mut tasks: Vec<Vec<usize>> = Vec::new();
    let mut counts = vec![0usize; classes.len()];
    loop {
        let mut i = 0;
        loop {
            if i == classes.len() {
                break;
            }
            if counts[i] < classes[i].1 {
                counts[i] += 1;
                break;
            }
            counts[i] = 0;
            i += 1;
        }
        if i == classes.len() {
            break;
        }
        tasks.push(counts.clone());
    }

    let term = |c: &Vec<usize>| -> Result<Rational> {
        let mut body: Option<B> = None;
        let mut weight = BigInt::one();
        for ((b, m), &k) in classes.iter().zip(c) {
            weight *= rational::binomial(*m, k);
            if k == 0 {
                continue;
            }
            let part = b.multiple(k)?;
            body = Some(match body {
                None => part,
                Some(acc) => acc.minkowski_add(&part)?,
            });
        }
        let size: usize = c.iter().sum();
        let value = functional.evaluate(body.as_ref().expect("nonempty subset"))?;
        let signed = if (n - size).is_multiple_of(2) { weight } else { -weight };
        Ok(value * Rational::from_integer(signed))
    };

    let workers = workers.max(1).min(tasks.len());
    let values: Vec<Result<Rational>> = if workers <= 1 {
        tasks.iter().map(term).collect()
    } else {
        let chunk = tasks.len().div_ceil(workers);
        std::thread::scope(|s| {
            let handles: Vec<_> = tasks
                .chunks(chunk)
                .map(|part| {
                    let term = &term;
                    s.spawn(move || part.iter().map(term).collect::<Vec<_>>())
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("polarization worker panicked")).collect()
        })
    };
    let mut total = Rational::zero();
    for v in values {
        total += v?;
    }
    Ok(total / rational::factorial(n))
}

/// Exact integral of `f` over `p`, with the measure on the affine span
/// normalized by `lattice ∩ span`.
pub fn integrate(f: &Polynomial, p: &Polytope, lattice: &AffineLattice) -> Result<Rational> {
    check_dim(p.ambient_dim(), lattice.ambient_dim())?;
    check_dim(p.ambient_dim(), f.num_vars())?;
    integrate_with(f, p, &p.span_measure(lattice)?)
}

/// Integral of `f` over `p` against `measure`; zero when `p` is lower-dimensional.
pub fn integrate_with(f: &Polynomial, p: &Polytope, measure: &Measure) -> Result<Rational> {
    check_dim(p.ambient_dim(), f.num_vars())?;
    let k = p.dim();
    if k < measure.dim() {
        return Ok(Rational::zero());
    }
    let verts = p.vertices();
    if k == 0 {
        return f.evaluate(&verts[0]);
    }
    let mut total = Rational::zero();
    for s in p.simplices() {
        let v0 = &verts[s[0]];
        let edges: Vec<Vec<Rational>> = s[1..].iter().map(|&i| crate::linalg::sub(&verts[i], v0)).collect();
        let jac = measure.parallelepiped(&edges);
        // x_j = v0_j + Σ_i t_i e_ij
        let subs: Vec<Polynomial> = (0..p.ambient_dim())
            .map(|j| {
                let coeffs: Vec<Rational> = edges.iter().map(|e| e[j].clone()).collect();
                Polynomial::affine(&coeffs, v0[j].clone())
            })
            .collect();
        let g = f.compose(&subs)?;
        total += jac * standard_simplex_integral(&g, k);
    }
    Ok(total)
}

/// `∫ g` over `{t >= 0, Σ t <= 1}` in `k` variables, via `∏ a_i! / (k + Σ a_i)!`.
fn standard_simplex_integral(g: &Polynomial, k: usize) -> Rational {
    g.terms()
        .map(|(e, c)| {
            let num = e.iter().fold(BigInt::one(), |acc, &a| acc * rational::factorial_int(a as usize));
            let deg: usize = e.iter().map(|&a| a as usize).sum();
            c * Rational::new(num, rational::factorial_int(k + deg))
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// Volume against a fixed subspace measure (zero for lower-dimensional bodies).
pub struct RelativeVolume<'a> {
    pub measure: &'a Measure,
}

impl HomogeneousFunctional<Polytope> for RelativeVolume<'_> {
    fn degree(&self) -> usize {
        self.measure.dim()
    }

    fn evaluate(&self, body: &Polytope) -> Result<Rational> {
        Ok(body.volume_with(self.measure))
    }
}

/// `Δ ↦ ∫_Δ F` against a fixed subspace measure, for homogeneous `F`.
pub struct RelativeIntegral<'a> {
    pub polynomial: &'a Polynomial,
    pub measure: &'a Measure,
    pub poly_degree: usize,
}

impl HomogeneousFunctional<Polytope> for RelativeIntegral<'_> {
    fn degree(&self) -> usize {
        self.measure.dim() + self.poly_degree
    }

    fn evaluate(&self, body: &Polytope) -> Result<Rational> {
        integrate_with(self.polynomial, body, self.measure)
    }
}

/// Convex bodies all parallel to a common subspace `Π`, together with the
/// lattice in `Π` that normalizes its measure.
#[derive(Debug, Clone)]
pub struct BodySystem {
    bodies: Vec<Polytope>,
    direction_space: AffineLattice,
    measure: Measure,
}

impl BodySystem {
    pub fn new(bodies: Vec<Polytope>, direction_space: AffineLattice) -> Result<Self> {
        let measure = Measure::from_lattice(&direction_space)?;
        for b in &bodies {
            check_dim(direction_space.ambient_dim(), b.ambient_dim())?;
            if b.span_basis().iter().any(|v| !measure.spans(v)) {
                return domain("body is not parallel to the direction space");
            }
        }
        Ok(Self { bodies, direction_space, measure })
    }

    /// Bodies in `R^n` with the standard lattice.
    pub fn standard(bodies: Vec<Polytope>) -> Result<Self> {
        let n = bodies.first().map(Polytope::ambient_dim).ok_or_else(|| Error::Domain("no bodies".into()))?;
        Self::new(bodies, AffineLattice::standard(n))
    }

    pub fn bodies(&self) -> &[Polytope] {
        &self.bodies
    }

    pub fn direction_space(&self) -> &AffineLattice {
        &self.direction_space
    }

    pub fn measure(&self) -> &Measure {
        &self.measure
    }

    pub fn dim(&self) -> usize {
        self.measure.dim()
    }
}

pub fn mixed_volume(system: &BodySystem) -> Result<Rational> {
    mixed_volume_parallel(system, 1)
}

pub fn mixed_volume_parallel(system: &BodySystem, workers: usize) -> Result<Rational> {
    if system.bodies.len() != system.dim() {
        return domain(format!(
            "mixed volume in dimension {} needs {} bodies, got {}",
            system.dim(),
            system.dim(),
            system.bodies.len()
        ));
    }
    if system.dim() == 0 {
        return domain("mixed volume needs a positive-dimensional direction space");
    }
    polarize_parallel(&RelativeVolume { measure: &system.measure }, &system.bodies, workers)
}

pub fn mixed_integral(f: &Polynomial, system: &BodySystem) -> Result<Rational> {
    mixed_integral_parallel(f, system, 1)
}

pub fn mixed_integral_parallel(f: &Polynomial, system: &BodySystem, workers: usize) -> Result<Rational> {
    check_dim(system.direction_space.ambient_dim(), f.num_vars())?;
    let deg = match f.homogeneous_degree() {
        Some(d) => d as usize,
        None if f.is_zero() => {
            return if system.bodies.len() >= system.dim() && !system.bodies.is_empty() {
                Ok(Rational::zero())
            } else {
                domain("too few bodies for a mixed integral")
            };
        }
        None => return domain("mixed integral needs a homogeneous polynomial"),
    };
    let expected = system.dim() + deg;
    if system.bodies.len() != expected {
        return domain(format!(
            "mixed integral of a degree-{deg} polynomial in dimension {} needs {expected} bodies, got {}",
            system.dim(),
            system.bodies.len()
        ));
    }
    let functional = RelativeIntegral { polynomial: f, measure: &system.measure, poly_degree: deg };
    polarize_parallel(&functional, &system.bodies, workers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, ints};

    fn poly(points: &[&[i64]]) -> Polytope {
        Polytope::hull(&points.iter().map(|p| ints(p)).collect::<Vec<_>>()).unwrap()
    }

    fn square() -> Polytope {
        poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    fn simplex() -> Polytope {
        poly(&[&[0, 0], &[1, 0], &[0, 1]])
    }

    #[test]
    fn integrate_constant_and_linear() {
        let z2 = AffineLattice::standard(2);
        assert_eq!(integrate(&Polynomial::one(2), &square(), &z2).unwrap(), int(1));
        assert_eq!(integrate(&Polynomial::var(2, 0), &square(), &z2).unwrap(), frac(1, 2));
    }

    #[test]
    fn integrate_difference_over_triangle() {
        // region {0 <= x2 <= x1 <= 1} in coordinates (x1, x2); iterated integral gives 1/6
        let t = poly(&[&[0, 0], &[1, 0], &[1, 1]]);
        let f = Polynomial::affine(&ints(&[1, -1]), int(0));
        assert_eq!(integrate(&f, &t, &AffineLattice::standard(2)).unwrap(), frac(1, 6));
    }

    #[test]
    fn integrate_over_point_evaluates() {
        let p = poly(&[&[2, 1]]);
        let f = Polynomial::affine(&ints(&[1, -1]), int(0));
        assert_eq!(integrate(&f, &p, &AffineLattice::standard(2)).unwrap(), int(1));
    }

    #[test]
    fn mixed_volumes_of_square_and_simplex() {
        let v = |a: Polytope, b: Polytope| mixed_volume(&BodySystem::standard(vec![a, b]).unwrap()).unwrap();
        assert_eq!(v(square(), square()), int(1));
        assert_eq!(v(simplex(), simplex()), frac(1, 2));
        assert_eq!(v(square(), simplex()), int(1));
        let d = |k: i64| simplex().dilate(&int(k)).unwrap();
        assert_eq!(v(d(2), d(3)), int(3));
    }

    #[test]
    fn wrong_body_count() {
        let sys = BodySystem::standard(vec![square()]).unwrap();
        assert!(matches!(mixed_volume(&sys), Err(Error::Domain(_))));
        let f = Polynomial::var(2, 0);
        let sys = BodySystem::standard(vec![square(), square()]).unwrap();
        assert!(matches!(mixed_integral(&f, &sys), Err(Error::Domain(_))));
    }

    #[test]
    fn non_homogeneous_rejected() {
        let f = Polynomial::affine(&ints(&[1, 0]), int(1));
        let sys = BodySystem::standard(vec![square(), square(), square()]).unwrap();
        assert!(matches!(mixed_integral(&f, &sys), Err(Error::Domain(_))));
    }

    #[test]
    fn one_dimensional_cubic_mixed_integral() {
        // F(k) = k^2/2 on R^1; IF([0,d]) = d^3/6, so the trilinear form is d1 d2 d3 / 6.
        let f = Polynomial::var(1, 0).pow(2).scale(&frac(1, 2));
        let seg = |d: i64| poly(&[&[0], &[d]]);
        let sys = BodySystem::standard(vec![seg(1), seg(2), seg(3)]).unwrap();
        assert_eq!(mixed_integral(&f, &sys).unwrap(), int(1));
    }

    #[test]
    fn body_outside_direction_space() {
        let horizontal = AffineLattice::linear(2, vec![vec![1, 0]]).unwrap();
        assert!(BodySystem::new(vec![square()], horizontal.clone()).is_err());
        let seg = poly(&[&[0, 5], &[3, 5]]);
        let sys = BodySystem::new(vec![seg], horizontal).unwrap();
        assert_eq!(mixed_volume(&sys).unwrap(), int(3));
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let bodies = vec![square(), simplex(), simplex().dilate(&int(2)).unwrap()];
        let f = Polynomial::var(2, 0);
        let sys = BodySystem::standard(bodies).unwrap();
        let serial = mixed_integral(&f, &sys).unwrap();
        for w in 2..5 {
            assert_eq!(mixed_integral_parallel(&f, &sys, w).unwrap(), serial);
        }
    }
}
