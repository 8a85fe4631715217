//! JSON envelopes for command output, with versions and oracle cross-checks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lie::{Family, Parabolic};
use crate::oracle::model::random_invertible;
use crate::oracle::nilradical::trial_seeds;
use crate::oracle::{
    classical_model, generic_fiber_count, generic_jordan_type, generic_jordan_type_of, Caps, MatrixModel,
};
use crate::orbits::{orbit_dimension, OrbitLabel};
use crate::resolutions::{contact_resolution_exists, table_version, Polarization, ResolutionReport};

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const SCHEMA_ID: &str = "orbitres-report/1";

/// One oracle evaluation next to the closed-form value it checks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossCheck {
    pub oracle_name: String,
    pub inputs: Value,
    pub seeds: Vec<u64>,
    pub value: Value,
    pub formula_value: Value,
    pub agrees_with_formula: bool,
}

impl CrossCheck {
    fn new(name: &str, inputs: Value, seeds: Vec<u64>, value: Value, formula: Value) -> Self {
        Self {
            oracle_name: name.to_string(),
            agrees_with_formula: value == formula,
            inputs,
            seeds,
            value,
            formula_value: formula,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema: &'static str,
    pub artifact_version: &'static str,
    pub table_version: &'static str,
    pub command: String,
    pub input: String,
    pub seed: Option<u64>,
    pub result: T,
    pub cross_checks: Vec<CrossCheck>,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, input: &str, seed: Option<u64>, result: T) -> Self {
        Self {
            schema: SCHEMA_ID,
            artifact_version: ARTIFACT_VERSION,
            table_version: table_version(),
            command: command.to_string(),
            input: input.to_string(),
            seed,
            result,
            cross_checks: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Structured error object for failed requests.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorReport {
    pub schema: &'static str,
    pub artifact_version: &'static str,
    pub error: ErrorBody,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}

impl ErrorReport {
    pub fn new(e: &Error) -> Self {
        Self {
            schema: SCHEMA_ID,
            artifact_version: ARTIFACT_VERSION,
            error: ErrorBody {
                kind: e.kind(),
                message: e.to_string(),
            },
        }
    }
}

/// A matrix model for the orbit, if one exists within the caps.
fn model_for(o: &OrbitLabel, caps: &Caps) -> Option<MatrixModel> {
    let t = o.simple_type();
    if !t.family().is_classical() {
        return None;
    }
    classical_model(o, caps).ok()
}

/// Oracle cross-checks for one orbit: ad-rank, KKS rank, the contact check
/// on random conjugates, and Richardson/fiber checks on its polarizations.
pub fn orbit_cross_checks(o: &OrbitLabel, report: &ResolutionReport, seed: u64, caps: &Caps) -> Vec<CrossCheck> {
    let mut out = Vec::new();
    let dim = orbit_dimension(o);
    let input = json!({ "orbit": o.to_string() });
    if let Some(m) = model_for(o, caps) {
        out.push(CrossCheck::new("addim", input.clone(), vec![], json!(m.addim()), json!(dim)));
        out.push(CrossCheck::new("kks_rank", input.clone(), vec![], json!(m.kks_rank()), json!(dim)));
        let seeds = trial_seeds(seed);
        let nondegenerate: Vec<bool> = seeds
            .iter()
            .map(|&s| {
                let mut rng = ChaCha8Rng::seed_from_u64(s);
                let g = random_invertible(m.n, &mut rng);
                m.conjugate(&g).contact_check().map(|r| r.is_nondegenerate()).unwrap_or(false)
            })
            .collect();
        out.push(CrossCheck::new(
            "contact_check",
            input,
            seeds,
            json!(nondegenerate),
            json!(vec![true; nondegenerate.len()]),
        ));
    }
    for p in report.polarizations.iter().chain(&report.other_richardson_parabolics) {
        out.extend(polarization_checks(p, seed, caps));
    }
    out
}

fn polarization_checks(p: &Polarization, seed: u64, caps: &Caps) -> Vec<CrossCheck> {
    let mut out = Vec::new();
    let t = p.parabolic.simple_type();
    let target = p.richardson_orbit.partition().map(ToString::to_string);
    let input = json!({ "parabolic": p.parabolic.to_string() });
    let generic = match (&p.composition, t.family()) {
        (Some(c), Family::A) => generic_jordan_type(c, seed, caps).ok(),
        (_, f) if f.is_classical() => generic_jordan_type_of(&p.parabolic, seed, caps).ok(),
        _ => None,
    };
    if let (Some(g), Some(target)) = (generic, target) {
        out.push(CrossCheck::new(
            "generic_jordan_type",
            input.clone(),
            g.seeds.clone(),
            json!(g.jordan_type.to_string()),
            json!(target),
        ));
    }
    if let (Some(c), Some(1)) = (&p.composition, p.springer_degree) {
        if let Ok(f) = generic_fiber_count(c, seed, caps) {
            out.push(CrossCheck::new("generic_fiber_count", input, vec![seed], json!(f.count), json!(1)));
        }
    }
    out
}

/// `classify`: resolution report plus cross-checks.
pub fn classify(o: &OrbitLabel, seed: u64, caps: &Caps) -> Result<Envelope<ResolutionReport>> {
    let report = contact_resolution_exists(o)?;
    let checks = orbit_cross_checks(o, &report, seed, caps);
    let mut env = Envelope::new("classify", &o.to_string(), Some(seed), report);
    env.cross_checks = checks;
    Ok(env)
}

/// Facts about `G/P` used by the `twistor` command.
#[derive(Debug, Clone, Serialize)]
pub struct TwistorReport {
    pub parabolic: Parabolic,
    pub flag_dimension: usize,
    pub betti_numbers: Vec<u64>,
    pub fano_index: Option<i64>,
    pub is_projective_space: bool,
    pub is_twistor_space: bool,
}

pub fn twistor(p: &Parabolic) -> Result<TwistorReport> {
    let poly = p.poincare_polynomial()?;
    let is_projective_space = p.is_projective_space()?;
    Ok(TwistorReport {
        parabolic: p.clone(),
        flag_dimension: p.flag_dimension()?,
        betti_numbers: poly.coefficients().to_vec(),
        fano_index: p.fano_index(),
        is_projective_space,
        is_twistor_space: is_projective_space,
    })
}
