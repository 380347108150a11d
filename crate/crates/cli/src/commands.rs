use std::path::Path;

use horo_core::gt::{gt_lattice_count, gt_polytope_int, lift_dim, newton_lift};
use horo_core::polarization::{mixed_integral_parallel, mixed_volume_parallel, BodySystem};
use horo_core::weyl::{dim_irrep, restricted_weyl, weyl_polynomial};
use horo_core::{
    AffineLattice, ChamberFace, Error, GroupDescriptor, HorosphericalSpace, LatticeVector, Mode, Polynomial, Polytope,
    Problem, Rational,
};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::Failure;

/// Reads and decodes a JSON input file; decoding errors carry line and column.
pub fn read<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let fail = |msg: String| Failure { error: Error::Parse(msg), path: Some(path.to_owned()) };
    let text = std::fs::read_to_string(path).map_err(|e| fail(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| fail(format!("{}: {e}", path.display())))
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("core types serialize")
}

fn rat(value: &Rational) -> Value {
    Value::String(value.to_string())
}

pub fn index(problem: &Problem, workers: usize) -> Result<Value, Failure> {
    Ok(to_json(&problem.solve(workers)?))
}

fn polytope_summary(p: &Polytope) -> Value {
    json!({
        "dim": p.dim(),
        "vertices": to_json(p)["vertices"],
        "facets": p.facets().len(),
    })
}

pub fn moment(problem: &Problem) -> Result<Value, Failure> {
    let space = problem.space()?;
    let polys: Vec<Value> =
        problem.support_sets(&space)?.iter().map(|a| polytope_summary(&a.moment_polytope())).collect();
    Ok(json!({ "moment_polytopes": polys }))
}

pub fn newton(problem: &Problem) -> Result<Value, Failure> {
    let space = problem.space()?;
    let (g, face) = (space.group(), space.face());
    let mut lifts = Vec::new();
    for a in problem.support_sets(&space)? {
        lifts.push(polytope_summary(&newton_lift(g, face, &a.block_polytope())?));
    }
    Ok(json!({ "lift_dim": lift_dim(g, face), "lifts": lifts }))
}

pub fn completion(problem: &Problem) -> Result<Value, Failure> {
    let space = problem.space()?;
    let mut out = problem.clone();
    out.supports = problem
        .support_sets(&space)?
        .iter()
        .map(|a| space.completion_support(a).map(|c| c.weights().iter().cloned().collect()))
        .collect::<Result<_, _>>()?;
    Ok(to_json(&out))
}

#[derive(Deserialize)]
pub struct WeylInput {
    group: GroupDescriptor,
    #[serde(default)]
    face: Option<ChamberFace>,
    #[serde(default, rename = "lambda_H")]
    lambda_h: Option<AffineLattice>,
    #[serde(default)]
    mode: Mode,
    #[serde(default)]
    weight: Option<LatticeVector>,
}

pub fn weyl(input: &WeylInput) -> Result<Value, Failure> {
    let face = input.face.clone().unwrap_or_else(|| ChamberFace::full(&input.group));
    let space = HorosphericalSpace::new(input.group.clone(), face, input.lambda_h.clone(), input.mode)?;
    let (f_sigma, phi) = restricted_weyl(space.group(), space.face());
    let mut out = json!({
        "weyl_polynomial": to_json(&weyl_polynomial(space.group())),
        "restricted_weyl": to_json(&f_sigma),
        "phi": to_json(&phi),
        "p": space.p(),
        "m": space.m(),
    });
    if let Some(w) = &input.weight {
        out["dim_irrep"] = Value::String(dim_irrep(space.group(), w)?.to_string());
    }
    Ok(out)
}

pub fn gc(n: usize, weight: &[i64], count_only: bool) -> Result<Value, Failure> {
    let count = gt_lattice_count(n, weight)?;
    if count_only {
        return Ok(u64::try_from(&count).map(Value::from).unwrap_or_else(|_| Value::String(count.to_string())));
    }
    let p = gt_polytope_int(n, weight)?;
    let mut out = polytope_summary(&p.polytope);
    out["n"] = n.into();
    out["weight"] = to_json(&weight);
    out["lattice_points"] = Value::String(count.to_string());
    out["dim_irrep"] = Value::String(dim_irrep(&GroupDescriptor::gl(n), weight)?.to_string());
    Ok(out)
}

#[derive(Deserialize)]
pub struct BodiesInput {
    bodies: Vec<Polytope>,
    /// Direction lattice; defaults to the standard lattice of the ambient space.
    #[serde(default)]
    lattice: Option<AffineLattice>,
}

impl BodiesInput {
    fn system(&self) -> Result<BodySystem, Error> {
        match &self.lattice {
            Some(l) => BodySystem::new(self.bodies.clone(), l.clone()),
            None => BodySystem::standard(self.bodies.clone()),
        }
    }
}

pub fn mixed_volume(input: &BodiesInput, workers: usize) -> Result<Value, Failure> {
    Ok(rat(&mixed_volume_parallel(&input.system()?, workers)?))
}

#[derive(Deserialize)]
pub struct IntegralInput {
    polynomial: Polynomial,
    #[serde(flatten)]
    bodies: BodiesInput,
}

pub fn mixed_integral(input: &IntegralInput, workers: usize) -> Result<Value, Failure> {
    Ok(rat(&mixed_integral_parallel(&input.polynomial, &input.bodies.system()?, workers)?))
}

pub fn hilbert(problem: &Problem, support: usize, upto: Option<usize>) -> Result<Value, Failure> {
    let space = problem.space()?;
    let sets = problem.support_sets(&space)?;
    let a = sets
        .get(support)
        .ok_or_else(|| Error::Domain(format!("support {support} requested, problem has {}", sets.len())))?;
    let upto = upto.unwrap_or(space.m() + space.phi_degree() + 1);
    let values = (0..=upto)
        .map(|k| space.hilbert_function(a, k).map(|v| Value::String(v.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(json!({
        "support": support,
        "values": values,
        "polynomial": to_json(&space.hilbert_polynomial(a)?),
        "self_index": rat(&space.self_index_via_hilbert(a)?),
    }))
}
