//! Verification suites: closed-form values against the matrix oracles.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cones::{ample_cone, cone_from_generators, dual_cone, RationalCone};
use crate::error::{Error, Result};
use crate::lie::{Parabolic, SimpleType};
use crate::linalg::{q, Q};
use crate::oracle::model::random_invertible;
use crate::oracle::nilradical::trial_seeds;
use crate::oracle::{classical_model, generic_fiber_count, generic_jordan_type, generic_jordan_type_of, Caps, MatrixModel};
use crate::orbits::{compositions, orbit_dimension, OrbitLabel, Partition};
use crate::cones::movable_chambers;
use crate::resolutions::{richardson_partition, type_a_richardson};

pub const SUITES: [&str; 7] = ["ad-rank", "kks", "contact", "richardson", "fibers", "chambers", "cones"];

/// Default size bound per suite.
pub fn default_max_n(suite: &str) -> Result<usize> {
    Ok(match suite {
        "ad-rank" | "richardson" => 6,
        "kks" | "contact" => 5,
        "fibers" | "cones" => 4,
        "chambers" => 7,
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyRow {
    pub case: String,
    pub formula: Value,
    pub oracle: Value,
    pub seeds: Vec<u64>,
    pub agrees: bool,
}

impl VerifyRow {
    fn new(case: String, formula: Value, oracle: Value, seeds: Vec<u64>) -> Self {
        Self {
            agrees: formula == oracle,
            case,
            formula,
            oracle,
            seeds,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max_n: usize,
    pub seed: u64,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub all_pass: bool,
    pub rows: Vec<VerifyRow>,
}

pub fn run_suite(suite: &str, max_n: Option<usize>, seed: u64, caps: &Caps) -> Result<SuiteReport> {
    let max_n = match max_n {
        Some(n) => n,
        None => default_max_n(suite)?,
    };
    let cap = match suite {
        "fibers" => caps.fiber_max_n,
        "cones" => 4,
        "chambers" => usize::MAX,
        _ => caps.ad_rank_max_n,
    };
    if max_n > cap {
        return Err(Error::SizeCap { size: max_n, cap });
    }
    let mut rows = match suite {
        "ad-rank" => ad_rank(max_n, seed, caps)?,
        "kks" => kks(max_n, caps)?,
        "contact" => contact(max_n, seed, caps)?,
        "richardson" => richardson(max_n, seed, caps)?,
        "fibers" => fibers(max_n, seed, caps)?,
        "chambers" => chambers(max_n)?,
        "cones" => cones(max_n, seed)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    rows.sort_by(|a, b| a.case.cmp(&b.case));
    let passed = rows.iter().filter(|r| r.agrees).count();
    Ok(SuiteReport {
        suite: suite.to_string(),
        max_n,
        seed,
        cases: rows.len(),
        passed,
        failed: rows.len() - passed,
        all_pass: passed == rows.len(),
        rows,
    })
}

/// Type A orbits with `2 ≤ n ≤ max_n`, plus the B/C/D orbits whose natural
/// representation fits.
fn orbits_up_to(max_n: usize, include_zero: bool) -> Vec<OrbitLabel> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for p in Partition::all(n as u32) {
            out.push(OrbitLabel::type_a(p.parts().to_vec()).expect("valid"));
        }
    }
    for t in classical_types_up_to(max_n) {
        out.extend(OrbitLabel::all_of_type(t));
    }
    if !include_zero {
        out.retain(|o| orbit_dimension(o) > 0);
    }
    out
}

fn classical_types_up_to(max_n: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for name in ["B2", "B3", "C2", "C3", "C4", "D4"] {
        let t: SimpleType = name.parse().expect("valid type");
        if t.natural_dimension().is_some_and(|n| n <= max_n) {
            out.push(t);
        }
    }
    out
}

fn conjugates(m: &MatrixModel, seed: u64) -> Vec<(u64, MatrixModel)> {
    trial_seeds(seed)
        .into_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            (s, m.conjugate(&random_invertible(m.n, &mut rng)))
        })
        .collect()
}

fn ad_rank(max_n: usize, seed: u64, caps: &Caps) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for o in orbits_up_to(max_n, true) {
        let m = classical_model(&o, caps)?;
        let mut values = vec![m.addim()];
        values.extend(conjugates(&m, seed).iter().map(|(_, c)| c.addim()));
        let dim = orbit_dimension(&o) as usize;
        rows.push(VerifyRow::new(o.to_string(), json!(vec![dim; values.len()]), json!(values), trial_seeds(seed)));
    }
    Ok(rows)
}

fn kks(max_n: usize, caps: &Caps) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for o in orbits_up_to(max_n, true) {
        let m = classical_model(&o, caps)?;
        rows.push(VerifyRow::new(o.to_string(), json!(orbit_dimension(&o)), json!(m.kks_rank()), vec![]));
    }
    Ok(rows)
}

fn contact(max_n: usize, seed: u64, caps: &Caps) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for o in orbits_up_to(max_n, false) {
        let m = classical_model(&o, caps)?;
        let dim = orbit_dimension(&o) as usize;
        for (s, c) in conjugates(&m, seed) {
            let r = c.contact_check()?;
            let expected = json!({
                "dim_orbit": dim,
                "theta_kernel_dim": dim - 1,
                "omega_rank_on_kernel": dim - 2,
                "radical_is_euler_line": true,
                "theta_well_defined": true,
            });
            let got = json!({
                "dim_orbit": r.dim_orbit,
                "theta_kernel_dim": r.theta_kernel_dim,
                "omega_rank_on_kernel": r.omega_rank_on_kernel,
                "radical_is_euler_line": r.radical_is_euler_line,
                "theta_well_defined": r.theta_well_defined,
            });
            rows.push(VerifyRow::new(format!("{o} @ seed {s}"), expected, got, vec![s]));
        }
    }
    Ok(rows)
}

fn richardson(max_n: usize, seed: u64, caps: &Caps) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for n in 2..=max_n {
        for c in compositions(n) {
            let g = generic_jordan_type(&c, seed, caps)?;
            let oracle = json!({ "jordan_type": g.jordan_type.to_string(), "seeds_agree": g.seeds_agree });
            let formula = json!({ "jordan_type": type_a_richardson(&c).to_string(), "seeds_agree": true });
            let label = c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            rows.push(VerifyRow::new(format!("A{}:({label})", n - 1), formula, oracle, g.seeds));
        }
    }
    for t in classical_types_up_to(max_n) {
        for p in Parabolic::all_proper(t) {
            let recipe = richardson_partition(&p)?;
            let g = generic_jordan_type_of(&p, seed, caps)?;
            let formula = json!({
                "jordan_type": recipe.partition().expect("classical").to_string(),
                "seeds_agree": true,
                "dim": 2 * p.flag_dimension()? as u64,
            });
            let oracle = json!({
                "jordan_type": g.jordan_type.to_string(),
                "seeds_agree": g.seeds_agree,
                "dim": orbit_dimension(&recipe),
            });
            rows.push(VerifyRow::new(p.to_string(), formula, oracle, g.seeds));
        }
    }
    Ok(rows)
}

fn fibers(max_n: usize, seed: u64, caps: &Caps) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        for c in compositions(n) {
            let f = generic_fiber_count(&c, seed, caps)?;
            let label = c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            rows.push(VerifyRow::new(format!("({label})"), json!(1), json!(f.count), vec![seed]));
        }
    }
    Ok(rows)
}

/// `k! / ∏ m_j!` for the parts of `p`.
pub fn multinomial(p: &Partition) -> u64 {
    let fact = |k: u64| (1..=k).product::<u64>();
    let denom: u64 = p.multiplicities().values().map(|&m| fact(u64::from(m))).product();
    fact(p.len() as u64) / denom
}

fn chambers(max_n: usize) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for n in 2..=max_n {
        for p in Partition::all(n as u32) {
            if p.is_all_ones() {
                continue;
            }
            let o = OrbitLabel::type_a(p.parts().to_vec())?;
            let cc = movable_chambers(&o)?;
            let dual = p.dual();
            let degree_rule = (0..cc.chambers.len()).all(|i| {
                let c = cc.chambers[i].composition.as_ref().expect("type A");
                let unequal = c.windows(2).filter(|w| w[0] != w[1]).count();
                cc.degree(i) == unequal
            });
            let walls_ok = cc.walls.iter().all(|w| w.crossing.swapped.0 != w.crossing.swapped.1);
            let formula = json!({
                "chambers": multinomial(&dual),
                "connected": true,
                "degree_rule": true,
                "walls_swap_distinct": true,
            });
            let oracle = json!({
                "chambers": cc.chambers.len(),
                "connected": cc.connected,
                "degree_rule": degree_rule,
                "walls_swap_distinct": walls_ok,
            });
            rows.push(VerifyRow::new(o.to_string(), formula, oracle, vec![]));
        }
    }
    Ok(rows)
}

/// Number of random cones in the `cones` suite.
pub const RANDOM_CONES: usize = 120;

/// Random cones of ambient dimension `1..=max_dim`, seeded.
pub fn random_cones(max_dim: usize, seed: u64, count: usize) -> Result<Vec<(Vec<Vec<Q>>, RationalCone)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let dim = rng.gen_range(1..=max_dim);
        let k = rng.gen_range(1..=dim + 3);
        let gens: Vec<Vec<Q>> = (0..k)
            .map(|_| (0..dim).map(|_| q(rng.gen_range(-3..=3))).collect())
            .collect();
        let cone = cone_from_generators(dim, &gens)?;
        out.push((gens, cone));
    }
    Ok(out)
}

fn to_q(v: &[num_bigint::BigInt]) -> Vec<Q> {
    v.iter().map(|x| Q::from_integer(x.clone())).collect()
}

fn cones(max_dim: usize, seed: u64) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    let expected = json!({ "round_trip": true, "facet_round_trip": true, "double_dual": true, "contains_generators": true });
    for (i, (gens, c)) in random_cones(max_dim, seed, RANDOM_CONES)?.into_iter().enumerate() {
        let dim = c.ambient_dim();
        let regen: Vec<Vec<Q>> = c.generators().iter().map(|g| to_q(g)).collect();
        let round_trip = cone_from_generators(dim, &regen)? == c;
        let f = c.facets();
        let normals: Vec<Vec<Q>> = f.normals.iter().map(|v| to_q(v)).collect();
        let eqs: Vec<Vec<Q>> = f.equations.iter().map(|v| to_q(v)).collect();
        let facet_round_trip = RationalCone::from_inequalities(dim, &normals, &eqs)? == c;
        let double_dual = dual_cone(&dual_cone(&c)) == c;
        let contains_generators = gens.iter().all(|g| c.contains(g));
        let got = json!({
            "round_trip": round_trip,
            "facet_round_trip": facet_round_trip,
            "double_dual": double_dual,
            "contains_generators": contains_generators,
        });
        rows.push(VerifyRow::new(format!("random cone {i:03} (dim {dim})"), expected.clone(), got, vec![seed]));
    }
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"] {
        for p in Parabolic::all_proper(t.parse().expect("valid type")) {
            let c = ample_cone(&p)?;
            let formula = json!({ "rays": p.marked().len(), "simplicial": true });
            let oracle = json!({ "rays": c.rays().len(), "simplicial": c.is_simplicial() });
            rows.push(VerifyRow::new(format!("ample {p}"), formula, oracle, vec![]));
        }
    }
    Ok(rows)
}

/// Distinct orderings counted by brute force over all index permutations.
pub fn brute_force_orderings(parts: &[u32]) -> usize {
    fn rec(rest: &mut Vec<u32>, cur: &mut Vec<u32>, seen: &mut BTreeSet<Vec<u32>>) {
        if rest.is_empty() {
            seen.insert(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            rec(rest, cur, seen);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut seen = BTreeSet::new();
    rec(&mut parts.to_vec(), &mut Vec::new(), &mut seen);
    seen.len()
}
