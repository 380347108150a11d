use horo_core::gt::gt_lattice_count;
use horo_core::horospherical::SupportSet;
use horo_core::semigroup::{saturation_check, FiniteSet};
use horo_core::weyl::dim_irrep;
use horo_core::{AffineLattice, ChamberFace, Error, GroupDescriptor, HorosphericalSpace, LatticeVector, Problem};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::commands::{self, BodiesInput, IntegralInput};
use crate::Failure;

const SAMPLES: &[(&str, &str, u64)] = &[
    ("bezout_gl3_123.json", include_str!("../samples/bezout_gl3_123.json"), 6),
    ("gl2_triangle.json", include_str!("../samples/gl2_triangle.json"), 1),
    ("torus_2d.json", include_str!("../samples/torus_2d.json"), 2),
];

struct Check {
    name: &'static str,
    cases: usize,
    failures: Vec<Value>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { name, cases: 0, failures: Vec::new() }
    }

    fn record(&mut self, case: String, outcome: Result<bool, Error>) {
        self.cases += 1;
        let failure = match outcome {
            Ok(true) => return,
            Ok(false) => json!({ "case": case, "kind": "mismatch" }),
            Err(e) => {
                let kind = if matches!(e, Error::RouteDisagreement(_)) { "route_disagreement" } else { "error" };
                json!({ "case": case, "kind": kind, "message": e.to_string() })
            }
        };
        self.failures.push(failure);
    }

    fn report(&self) -> Value {
        json!({ "name": self.name, "cases": self.cases, "passed": self.failures.is_empty(), "failures": self.failures })
    }
}

/// Exit status for a failed battery: 4 if any route disagreed, 3 otherwise.
pub fn exit_code(report: &Value) -> u8 {
    let disagreement = report["checks"]
        .as_array()
        .into_iter()
        .flatten()
        .flat_map(|c| c["failures"].as_array().into_iter().flatten())
        .any(|f| f["kind"] == "route_disagreement");
    if disagreement {
        4
    } else {
        3
    }
}

fn spaces() -> Vec<(&'static str, HorosphericalSpace)> {
    let gl2 = GroupDescriptor::gl(2);
    let gl2t = GroupDescriptor::new(vec![2], 1).expect("valid group");
    let gl3 = GroupDescriptor::gl(3);
    let t2 = GroupDescriptor::torus(2);
    let face = |g: &GroupDescriptor, b: Vec<usize>| ChamberFace::new(g, vec![b]).expect("valid face");
    vec![
        ("GL2/U", HorosphericalSpace::quotient(gl2.clone(), ChamberFace::full(&gl2)).unwrap()),
        ("GL2xT1/U", HorosphericalSpace::quotient(gl2t.clone(), ChamberFace::full(&gl2t)).unwrap()),
        ("GL3/P'(2,1)", HorosphericalSpace::quotient(gl3.clone(), face(&gl3, vec![2, 1])).unwrap()),
        ("T2", HorosphericalSpace::quotient(t2.clone(), ChamberFace::full(&t2)).unwrap()),
    ]
}

/// Random dominant weights on the face of a quotient-mode space.
fn random_support(rng: &mut ChaCha8Rng, space: &HorosphericalSpace) -> SupportSet {
    let (g, face) = (space.group(), space.face());
    let count = rng.gen_range(1..=3);
    let weights: Vec<LatticeVector> = (0..count)
        .map(|_| {
            let mut block = Vec::new();
            for blocks in face.blocks() {
                let mut vals: Vec<i64> = (0..blocks.len()).map(|_| rng.gen_range(0..=2)).collect();
                vals.sort_by(|a, b| b.cmp(a));
                block.extend(vals);
            }
            block.extend((0..g.torus_rank()).map(|_| rng.gen_range(0..=2)));
            face.embed(g, &block)
        })
        .collect();
    space.support(weights).expect("generated weights are dominant and on the face")
}

fn random_system(rng: &mut ChaCha8Rng, space: &HorosphericalSpace) -> Vec<SupportSet> {
    (0..space.m()).map(|_| random_support(rng, space)).collect()
}

fn samples(workers: usize) -> Check {
    let mut check = Check::new("bundled_samples");
    for (name, text, expected) in SAMPLES {
        let outcome =
            Problem::from_json(text).and_then(|p| p.solve(workers)).map(|r| r.index == BigInt::from(*expected));
        check.record(name.to_string(), outcome);
    }
    let bodies: BodiesInput = serde_json::from_str(include_str!("../samples/twosimplices.json")).expect("bundled");
    let outcome = commands::mixed_volume(&bodies, workers).map(|v| v == "1/2").map_err(|f| f.error);
    check.record("twosimplices.json".into(), outcome);
    let integral: IntegralInput =
        serde_json::from_str(include_str!("../samples/weighted_square.json")).expect("bundled");
    let outcome = commands::mixed_integral(&integral, workers).map(|v| v == "1").map_err(|f| f.error);
    check.record("weighted_square.json".into(), outcome);
    check
}

fn route_checks(rng: &mut ChaCha8Rng, cases: usize, workers: usize) -> Vec<Check> {
    let mut agree = Check::new("route_agreement");
    let mut diag = Check::new("hilbert_on_diagonals");
    let mut sym = Check::new("symmetry");
    let mut lin = Check::new("multilinearity");
    let mut par = Check::new("parallel_invariance");
    let other_workers = if workers == 1 { 3 } else { 1 };
    for (name, space) in spaces() {
        for i in 0..cases {
            let case = format!("{name} #{i}");
            let sup = random_system(rng, &space);
            let report = space.compute_index(&sup, workers);
            agree.record(case.clone(), report.as_ref().map(|_| true).map_err(Clone::clone));

            let a = random_support(rng, &space);
            let diagonal = vec![a; space.m()];
            diag.record(case.clone(), space.compute_index(&diagonal, workers).map(|r| r.hilbert.is_some()));

            let mut shuffled = sup.clone();
            shuffled.shuffle(rng);
            let outcome = space
                .index_via_integral(&sup, workers)
                .and_then(|x| Ok(x == space.index_via_integral(&shuffled, workers)?));
            sym.record(case.clone(), outcome);

            let extra = random_support(rng, &space);
            let outcome = (|| {
                let mut prod = sup.clone();
                prod[0] = space.product_support(&sup[0], &extra)?;
                let mut alt = sup.clone();
                alt[0] = extra.clone();
                let lhs = space.index_via_lift(&prod, workers)?;
                Ok(lhs == space.index_via_lift(&sup, workers)? + space.index_via_lift(&alt, workers)?)
            })();
            lin.record(case.clone(), outcome);

            if let Ok(r) = &report {
                par.record(case, space.compute_index(&sup, other_workers).map(|s| &s == r));
            }
        }
    }
    vec![agree, diag, sym, lin, par]
}

fn bezout(rng: &mut ChaCha8Rng, cases: usize, workers: usize) -> Check {
    let mut check = Check::new("bezout");
    let g = GroupDescriptor::gl(3);
    let face = ChamberFace::new(&g, vec![vec![1, 2]]).expect("valid face");
    let ray = AffineLattice::linear(3, vec![vec![1, 0, 0]]).expect("valid lattice");
    let space = HorosphericalSpace::general(g, face, ray).expect("valid space");
    for _ in 0..cases {
        let degrees: Vec<i64> = (0..3).map(|_| rng.gen_range(1..=3)).collect();
        let outcome = (|| {
            let sup = degrees
                .iter()
                .map(|&d| space.support((0..=d).map(|k| vec![k, 0, 0])))
                .collect::<Result<Vec<_>, _>>()?;
            let expected: i64 = degrees.iter().product();
            Ok(space.compute_index(&sup, workers)?.index == BigInt::from(expected))
        })();
        check.record(format!("degrees {degrees:?}"), outcome);
    }
    check
}

fn gc_counts(rng: &mut ChaCha8Rng, cases: usize) -> Check {
    let mut check = Check::new("gc_counts_match_weyl_dimension");
    for _ in 0..cases {
        let n = rng.gen_range(1..=4);
        let mut w: Vec<i64> = (0..n).map(|_| rng.gen_range(-1..=3)).collect();
        w.sort_by(|a, b| b.cmp(a));
        let outcome = (|| Ok(gt_lattice_count(n, &w)? == dim_irrep(&GroupDescriptor::gl(n), &w)?))();
        check.record(format!("weight {w:?}"), outcome);
    }
    check
}

fn saturation(rng: &mut ChaCha8Rng, cases: usize) -> Check {
    let mut check = Check::new("saturation");
    for _ in 0..cases {
        let dim = rng.gen_range(1..=2);
        let count = rng.gen_range(1..=4);
        let pts: Vec<LatticeVector> = (0..count).map(|_| (0..dim).map(|_| rng.gen_range(0..=3)).collect()).collect();
        let outcome = FiniteSet::new(pts.clone()).and_then(|a| saturation_check(&a, dim));
        check.record(format!("A = {pts:?}"), outcome);
    }
    check
}

pub fn run(cases: usize, seed: u64, workers: usize) -> Result<Value, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = vec![samples(workers)];
    checks.extend(route_checks(&mut rng, cases, workers));
    checks.push(bezout(&mut rng, cases, workers));
    checks.push(gc_counts(&mut rng, cases));
    checks.push(saturation(&mut rng, cases));
    let ok = checks.iter().all(|c| c.failures.is_empty());
    Ok(json!({ "ok": ok, "checks": checks.iter().map(Check::report).collect::<Vec<_>>() }))
}
