//! Browser bindings. Every export takes and returns strings so the page
//! needs no generated TypeScript types; errors surface as JS exceptions.

use horo_core::gt::{gt_lattice_count, gt_polytope_int};
use horo_core::weyl::dim_irrep;
use horo_core::{ChamberFace, GroupDescriptor, HorosphericalSpace, LatticeVector, Polytope, Problem};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Parses `"1,0; 0,1"` style point lists: points split on `;` or newlines, coordinates on `,` or spaces.
pub fn parse_points(text: &str) -> Result<Vec<LatticeVector>, String> {
    let mut points = Vec::new();
    for chunk in text.split([';', '\n']).map(str::trim).filter(|c| !c.is_empty()) {
        let coords = chunk
            .split([',', ' '])
            .filter(|c| !c.is_empty())
            .map(|c| c.parse::<i64>().map_err(|_| format!("bad coordinate {c:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        points.push(coords);
    }
    if points.is_empty() {
        return Err("no points given".into());
    }
    Ok(points)
}

fn vertices(p: &Polytope) -> Value {
    serde_json::to_value(p).expect("polytopes serialize")["vertices"].take()
}

/// Vertices, lattice point count and Weyl dimension of a GC polytope.
pub fn gc_summary_json(weight: &str) -> Result<String, String> {
    let w: Vec<i64> = parse_points(weight)?.concat();
    let n = w.len();
    let gc = gt_polytope_int(n, &w).map_err(|e| e.to_string())?;
    let count = gt_lattice_count(n, &w).map_err(|e| e.to_string())?;
    let dim = dim_irrep(&GroupDescriptor::gl(n), &w).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": n,
        "dim": gc.polytope.dim(),
        "vertices": vertices(&gc.polytope),
        "lattice_points": count.to_string(),
        "dim_irrep": dim.to_string(),
    })
    .to_string())
}

/// Number of common roots in the 2-torus of two generic Laurent polynomials with the given supports.
pub fn torus_index_json(first: &str, second: &str) -> Result<String, String> {
    let g = GroupDescriptor::torus(2);
    let space = HorosphericalSpace::quotient(g.clone(), ChamberFace::full(&g)).map_err(|e| e.to_string())?;
    let supports = [first, second]
        .iter()
        .map(|t| {
            let pts = parse_points(t)?;
            if pts.iter().any(|p| p.len() != 2) {
                return Err("torus supports need two coordinates per point".to_string());
            }
            space.support(pts).map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<_>, _>>()?;
    let report = space.compute_index(&supports, 1).map_err(|e| e.to_string())?;
    let hulls: Vec<Value> = supports.iter().map(|a| vertices(&a.moment_polytope())).collect();
    Ok(json!({ "index": report.index.to_string(), "report": report, "hulls": hulls }).to_string())
}

/// The full index report of a JSON problem, as the `horo index` command prints it.
pub fn solve_problem_json(problem: &str) -> Result<String, String> {
    let p = Problem::from_json(problem).map_err(|e| e.to_string())?;
    let report = p.solve(1).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string_pretty(&report).expect("reports serialize"))
}

#[wasm_bindgen]
pub fn gc_summary(weight: &str) -> Result<String, JsError> {
    gc_summary_json(weight).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn torus_index(first: &str, second: &str) -> Result<String, JsError> {
    torus_index_json(first, second).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn solve_problem(problem: &str) -> Result<String, JsError> {
    solve_problem_json(problem).map_err(|e| JsError::new(&e))
}
