//! Acceptance run: one line per criterion, exit status 1 if any fails.
//!
//! Run with `cargo test -p orbitres-core --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbitres::cones::{ample_cone, cone_from_generators, dual_cone, movable_chambers, RationalCone};
use orbitres::lie::{Parabolic, SimpleType};
use orbitres::linalg::{dot, primitive_integer, q, q_frac, QMatrix, Q};
use orbitres::oracle::model::random_invertible;
use orbitres::oracle::{generic_fiber_count, generic_jordan_type, jordan_nilpotent, Caps};
use orbitres::orbits::{compositions, is_minimal_orbit, orbit_dimension, OrbitLabel, Partition};
use orbitres::report::classify;
use orbitres::resolutions::{canonical_degree_on_curve, contact_resolution_exists, Verdict};
use orbitres::verify::{multinomial, random_cones, run_suite};

const SEED: u64 = 7;

type Criterion = (&'static str, fn() -> (bool, String));

struct Line {
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn timed(f: impl FnOnce() -> (bool, String)) -> Line {
    let start = Instant::now();
    let (pass, detail) = f();
    Line { pass, detail, elapsed: start.elapsed() }
}

fn ty(s: &str) -> SimpleType {
    s.parse().expect("valid type")
}

fn first_failures(fails: &[String]) -> String {
    if fails.is_empty() {
        String::new()
    } else {
        format!("; failures: {}", fails.iter().take(5).cloned().collect::<Vec<_>>().join(", "))
    }
}

/// Closed-form orbit dimension against `rank(ad e)` on the Jordan model.
fn dimension_concordance() -> (bool, String) {
    let caps = Caps::default();
    let mut checked = 0;
    let mut fails = Vec::new();
    for n in 2..=6u32 {
        for p in Partition::all(n) {
            let o = OrbitLabel::type_a(p.parts().to_vec()).unwrap();
            let formula = orbit_dimension(&o);
            let oracle = jordan_nilpotent(&p, &caps).unwrap().addim() as u64;
            checked += 1;
            if formula != oracle {
                fails.push(format!("{o}: {formula} vs {oracle}"));
            }
        }
    }
    let spot: Vec<String> = ["A5:3,2,1", "A5:6", "A4:2,2,1", "A3:2,1,1"]
        .iter()
        .map(|s| format!("{s}→{}", orbit_dimension(&OrbitLabel::parse(s).unwrap())))
        .collect();
    (
        fails.is_empty(),
        format!("{checked} partitions of n=2..6, {} mismatches; {}{}", fails.len(), spot.join(" "), first_failures(&fails)),
    )
}

fn richardson_law() -> (bool, String) {
    let caps = Caps::default();
    let mut checked = 0;
    let mut fails = Vec::new();
    for n in 1..=6 {
        for c in compositions(n) {
            let g = generic_jordan_type(&c, SEED, &caps).unwrap();
            let mut sorted: Vec<u32> = c.iter().map(|&x| x as u32).collect();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let expected = Partition::new(sorted).dual();
            checked += 1;
            if g.jordan_type != expected || !g.seeds_agree {
                fails.push(format!("{c:?}: {} (seeds agree {})", g.jordan_type, g.seeds_agree));
            }
        }
    }
    (
        fails.is_empty(),
        format!("{checked} compositions of n≤6, seeds {SEED},{},{}; {} failures{}", SEED + 1, SEED + 2, fails.len(), first_failures(&fails)),
    )
}

fn contact_nondegeneracy() -> (bool, String) {
    let caps = Caps::default();
    let mut checked = 0;
    let mut fails = Vec::new();
    for n in 2..=5u32 {
        for p in Partition::all(n) {
            if p.is_all_ones() {
                continue;
            }
            let base = jordan_nilpotent(&p, &caps).unwrap();
            let dim = orbit_dimension(&OrbitLabel::type_a(p.parts().to_vec()).unwrap()) as usize;
            for k in 0..3 {
                let mut rng = ChaCha8Rng::seed_from_u64(SEED + k);
                let g = random_invertible(n as usize, &mut rng);
                let t = q_frac(rng.gen_range(1..=9), rng.gen_range(1..=9));
                let m = base.conjugate(&g).scaled(&t);
                let r = m.contact_check().unwrap();
                let ok = m.kks_rank() == dim
                    && r.dim_orbit == dim
                    && r.theta_kernel_dim == dim - 1
                    && r.omega_rank_on_kernel == dim - 2
                    && r.radical_dim == 1
                    && r.radical_is_euler_line
                    && r.theta_well_defined;
                checked += 1;
                if !ok {
                    fails.push(format!("{p} conjugate {k}"));
                }
            }
        }
    }
    (
        fails.is_empty(),
        format!("{checked} conjugates (3 per nonzero orbit of n≤5); {} failures{}", fails.len(), first_failures(&fails)),
    )
}

fn trichotomy() -> (bool, String) {
    let mut fails = Vec::new();
    let mut minimal = 0;
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2"] {
        let mins: Vec<OrbitLabel> = OrbitLabel::all_of_type(ty(t))
            .into_iter()
            .filter(|o| is_minimal_orbit(o).unwrap_or(false))
            .collect();
        if mins.len() != 1 {
            fails.push(format!("{t}: {} minimal orbits", mins.len()));
        }
        for o in mins {
            minimal += 1;
            if contact_resolution_exists(&o).unwrap().verdict != Verdict::SmoothAlready {
                fails.push(o.to_string());
            }
        }
    }
    let g2 = OrbitLabel::parse("G2:dim8").unwrap();
    if contact_resolution_exists(&g2).unwrap().verdict != Verdict::SmoothAlready {
        fails.push(g2.to_string());
    }
    let mut non_minimal = 0;
    let mut unknown_a = 0;
    for n in 2..=7u32 {
        for p in Partition::all(n) {
            if p.is_all_ones() {
                continue;
            }
            let o = OrbitLabel::type_a(p.parts().to_vec()).unwrap();
            let r = contact_resolution_exists(&o).unwrap();
            if r.verdict == Verdict::Unknown {
                unknown_a += 1;
            }
            if is_minimal_orbit(&o).unwrap() {
                continue;
            }
            non_minimal += 1;
            if r.verdict != Verdict::ContactResolutionsExist || r.polarizations.is_empty() {
                fails.push(o.to_string());
            }
        }
    }
    if unknown_a > 0 {
        fails.push(format!("{unknown_a} Unknown in type A"));
    }
    (
        fails.is_empty(),
        format!(
            "{} minimal orbits + G2:dim8 SmoothAlready, {non_minimal} non-minimal sl_n (n≤7) with resolutions, {unknown_a} Unknown in type A{}",
            minimal,
            first_failures(&fails)
        ),
    )
}

fn chamber_counts() -> (bool, String) {
    let mut fails = Vec::new();
    let mut checked = 0;
    for n in 2..=7u32 {
        for p in Partition::all(n) {
            if p.is_all_ones() {
                continue;
            }
            let o = OrbitLabel::type_a(p.parts().to_vec()).unwrap();
            let cc = movable_chambers(&o).unwrap();
            let expected = multinomial(&p.dual()) as usize;
            let degree_rule = (0..cc.chambers.len()).all(|i| {
                let c = cc.chambers[i].composition.as_ref().unwrap();
                cc.degree(i) == c.windows(2).filter(|w| w[0] != w[1]).count()
            });
            checked += 1;
            if cc.chambers.len() != expected || !cc.connected || !degree_rule {
                fails.push(format!("{o}: {} chambers", cc.chambers.len()));
            }
        }
    }
    let mut spot = Vec::new();
    for (s, want) in [("A3:2,1,1", 2), ("A3:2,2", 1), ("A5:3,2,1", 6)] {
        let got = movable_chambers(&OrbitLabel::parse(s).unwrap()).unwrap().chambers.len();
        spot.push(format!("[{}]→{got}", &s[3..]));
        if got != want {
            fails.push(format!("{s}: {got} ≠ {want}"));
        }
    }
    (
        fails.is_empty(),
        format!("{checked} orbits of n≤7 connected with degree rule; {}{}", spot.join(" "), first_failures(&fails)),
    )
}

fn springer_degree_one() -> (bool, String) {
    let caps = Caps::default();
    let mut fails = Vec::new();
    let mut checked = 0;
    for n in 1..=4 {
        for c in compositions(n) {
            let f = generic_fiber_count(&c, SEED, &caps).unwrap();
            checked += 1;
            if f.count != 1 {
                fails.push(format!("{c:?}: {}", f.count));
            }
        }
    }
    (fails.is_empty(), format!("{checked} compositions of n≤4 with fiber count 1{}", first_failures(&fails)))
}

fn to_q(v: &[BigInt]) -> Vec<Q> {
    v.iter().map(|x| Q::from_integer(x.clone())).collect()
}

/// Facet normals of a full-dimensional pointed cone by brute force over
/// every hyperplane spanned by `d − 1` rays.
fn brute_force_facets(c: &RationalCone) -> BTreeSet<Vec<BigInt>> {
    let d = c.ambient_dim();
    let rays: Vec<Vec<Q>> = c.rays().iter().map(|r| to_q(r)).collect();
    let mut out = BTreeSet::new();
    let mut idx: Vec<usize> = (0..d - 1).collect();
    if d == 1 {
        out.insert(vec![BigInt::from(1) * if rays[0][0].is_positive() { 1 } else { -1 }]);
        return out;
    }
    loop {
        let rows: Vec<Vec<Q>> = idx.iter().map(|&i| rays[i].clone()).collect();
        let null = QMatrix::from_rows(&rows).nullspace();
        if null.len() == 1 {
            let mut nrm = null[0].clone();
            let signs: Vec<Q> = rays.iter().map(|r| dot(&nrm, r)).collect();
            if signs.iter().all(|s| !s.is_positive()) {
                nrm = nrm.iter().map(|x| -x).collect();
            }
            if rays.iter().all(|r| !dot(&nrm, r).is_negative()) {
                out.insert(primitive_integer(&nrm));
            }
        }
        // Next (d−1)-subset in lexicographic order.
        let k = idx.len();
        let mut i = k;
        while i > 0 && idx[i - 1] == rays.len() - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

fn cone_soundness() -> (bool, String) {
    let cones = random_cones(4, SEED, 120).unwrap();
    let mut fails = Vec::new();
    let mut brute = 0;
    for (i, (gens, c)) in cones.iter().enumerate() {
        let dim = c.ambient_dim();
        let regen: Vec<Vec<Q>> = c.generators().iter().map(|g| to_q(g)).collect();
        let round_trip = cone_from_generators(dim, &regen).unwrap() == *c;
        let involution = dual_cone(&dual_cone(c)) == *c;
        let contains = gens.iter().all(|g| c.contains(g));
        if !(round_trip && involution && contains) {
            fails.push(format!("cone {i}"));
        }
        if c.is_pointed() && c.dim() == dim && !c.rays().is_empty() {
            brute += 1;
            let ours: BTreeSet<Vec<BigInt>> = c.facets().normals.iter().cloned().collect();
            if ours != brute_force_facets(c) {
                fails.push(format!("cone {i} facets"));
            }
        }
    }
    let mut ample = 0;
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"] {
        for p in Parabolic::all_proper(ty(t)) {
            let c = ample_cone(&p).unwrap();
            ample += 1;
            if !c.is_simplicial() || c.rays().len() != p.marked().len() {
                fails.push(format!("ample {p}"));
            }
        }
    }
    (
        fails.is_empty(),
        format!(
            "{} random cones (dim≤4, seed {SEED}), {brute} facet sets checked by brute force, {ample} ample cones simplicial with |I| rays{}",
            cones.len(),
            first_failures(&fails)
        ),
    )
}

fn k_degree() -> (bool, String) {
    // (n, L-degree, K-degree); degree 0 rows are contracted curves.
    const TABLE: [(u64, i64, i64); 20] = [
        (1, 0, 0),
        (1, 1, -2),
        (1, 3, -6),
        (2, 0, 0),
        (2, 1, -3),
        (2, 2, -6),
        (3, 0, 0),
        (3, 1, -4),
        (3, 5, -20),
        (4, 0, 0),
        (4, 1, -5),
        (4, 7, -35),
        (5, 0, 0),
        (5, 2, -12),
        (7, 0, 0),
        (7, 3, -24),
        (10, 1, -11),
        (10, 0, 0),
        (15, 4, -64),
        (28, 2, -58),
    ];
    let mut fails = Vec::new();
    let mut zeros = 0;
    for &(n, d, k) in &TABLE {
        let got = canonical_degree_on_curve(n, &q(d));
        if d == 0 {
            zeros += 1;
        }
        if got != q(k) || (d == 0 && !got.is_zero()) {
            fails.push(format!("({n},{d}) → {got}"));
        }
    }
    (
        fails.is_empty(),
        format!("{} (n, d) pairs, {zeros} contracted; e.g. (3,5)→-20 (28,2)→-58{}", TABLE.len(), first_failures(&fails)),
    )
}

fn determinism() -> (bool, String) {
    let caps = Caps::default();
    let mut fails = Vec::new();
    let mut runs = 0;
    for s in ["A3:2,1,1", "A4:3,1,1", "A5:3,2,1", "C2:2,2", "G2:dim8"] {
        let o = OrbitLabel::parse(s).unwrap();
        let a = classify(&o, SEED, &caps).unwrap().to_json();
        let b = classify(&o, SEED, &caps).unwrap().to_json();
        runs += 1;
        if a != b {
            fails.push(s.to_string());
        }
    }
    for suite in ["richardson", "fibers", "cones", "chambers"] {
        let run = || serde_json::to_string_pretty(&run_suite(suite, Some(4), SEED, &caps).unwrap()).unwrap();
        runs += 1;
        if run() != run() {
            fails.push(suite.to_string());
        }
    }
    (fails.is_empty(), format!("{runs} repeated classify/verify runs byte-identical{}", first_failures(&fails)))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("dimension concordance", dimension_concordance),
        ("Richardson law", richardson_law),
        ("contact nondegeneracy", contact_nondegeneracy),
        ("trichotomy", trichotomy),
        ("chamber counts", chamber_counts),
        ("Springer degree 1", springer_degree_one),
        ("cone engine", cone_soundness),
        ("K-degree", k_degree),
        ("determinism", determinism),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let line = timed(f);
        all &= line.pass;
        println!(
            "criterion {} {:<22} {}  {}  [{:.2}s]",
            i + 1,
            name,
            if line.pass { "PASS" } else { "FAIL" },
            line.detail,
            line.elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {}", if all { "all criteria pass" } else { "FAILED" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
