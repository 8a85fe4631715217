//! Command-line front end: argument model, dispatch and text rendering.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use orbitres::cones::{movable_chambers, ChamberComplex};
use orbitres::lie::Parabolic;
use orbitres::oracle::Caps;
use orbitres::orbits::{OrbitLabel, OrbitRecord};
use orbitres::report::{classify, twistor, Envelope, ErrorReport, TwistorReport};
use orbitres::resolutions::{polarizations, Polarization, ResolutionReport};
use orbitres::verify::{run_suite, SuiteReport};
use orbitres::Error;

#[derive(Debug, Parser)]
#[command(name = "orbitres", version, about = "Contact resolutions of projectivised nilpotent orbit closures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the randomised oracles.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Matrix size cap for ad-rank style oracles.
    #[arg(long, global = true)]
    pub ad_cap: Option<usize>,
    /// Matrix size cap for the Springer fiber oracle.
    #[arg(long, global = true)]
    pub fiber_cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether P(O) has a contact resolution and list them.
    Classify { orbit: String },
    /// Orbit dimension and metadata.
    Dim { orbit: String },
    /// Parabolics whose Springer map onto the orbit closure is birational.
    Polarizations { orbit: String },
    /// Chamber complex of the movable cone.
    Chambers { orbit: String },
    /// Is P(T*(G/P)) a twistor space, i.e. G/P a projective space?
    Twistor { parabolic: String },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

/// Result of a run: exit status and the text for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl GlobalOpts {
    fn caps(&self) -> Caps {
        let d = Caps::default();
        Caps {
            ad_rank_max_n: self.ad_cap.unwrap_or(d.ad_rank_max_n),
            fiber_max_n: self.fiber_cap.unwrap_or(d.fiber_max_n),
        }
    }
}

fn emit<T: Serialize>(json: bool, env: Envelope<T>, text: impl FnOnce(&Envelope<T>) -> String) -> String {
    if json {
        env.to_json() + "\n"
    } else {
        text(&env)
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => {
            let report = ErrorReport::new(&e);
            let (stdout, stderr) = if cli.opts.json {
                (
                    serde_json::to_string_pretty(&report).expect("errors serialize") + "\n",
                    String::new(),
                )
            } else {
                (String::new(), format!("error [{}]: {e}\n", e.kind()))
            };
            Outcome { code: 1, stdout, stderr }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(i32, String), Error> {
    let o = &cli.opts;
    let caps = o.caps();
    let out = match &cli.command {
        Command::Classify { orbit } => {
            let label = OrbitLabel::parse(orbit)?;
            emit(o.json, classify(&label, o.seed, &caps)?, render_classify)
        }
        Command::Dim { orbit } => {
            let label = OrbitLabel::parse(orbit)?;
            let env = Envelope::new("dim", &label.to_string(), None, OrbitRecord::new(&label));
            emit(o.json, env, |e| render_record(&e.result))
        }
        Command::Polarizations { orbit } => {
            let label = OrbitLabel::parse(orbit)?;
            let env = Envelope::new("polarizations", &label.to_string(), None, polarizations(&label)?);
            emit(o.json, env, |e| render_polarizations(&e.result))
        }
        Command::Chambers { orbit } => {
            let label = OrbitLabel::parse(orbit)?;
            let env = Envelope::new("chambers", &label.to_string(), None, movable_chambers(&label)?);
            emit(o.json, env, |e| render_chambers(&e.result))
        }
        Command::Twistor { parabolic } => {
            let p = Parabolic::parse(parabolic)?;
            let env = Envelope::new("twistor", &p.to_string(), None, twistor(&p)?);
            emit(o.json, env, |e| render_twistor(&e.result))
        }
        Command::Verify { suite, max_n } => {
            let report = run_suite(suite, *max_n, o.seed, &caps)?;
            let code = if report.all_pass { 0 } else { 1 };
            let env = Envelope::new("verify", suite, Some(o.seed), report);
            return Ok((code, emit(o.json, env, |e| render_suite(&e.result))));
        }
    };
    Ok((0, out))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_bool(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

pub fn render_record(r: &OrbitRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "orbit            {}", r.label);
    let _ = writeln!(s, "dimension        {}", r.dim_orbit);
    if !r.is_zero {
        let _ = writeln!(s, "contact n        {}", r.contact_n);
    }
    if let Some(d) = &r.dual_partition {
        let _ = writeln!(s, "dual partition   {d}");
    }
    let _ = writeln!(s, "minimal          {}", yes_no(r.is_minimal));
    let _ = writeln!(s, "P(O~) smooth     {}", yes_no(r.proj_normalization_smooth));
    s
}

fn polarization_line(p: &Polarization) -> String {
    let comp = p
        .composition
        .as_ref()
        .map(|c| format!("  composition {}", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .unwrap_or_default();
    let degree = p.springer_degree.map_or("unknown".to_string(), |d| d.to_string());
    format!(
        "  {}{comp}  dim G/P {}  degree {degree}  twistor {}",
        p.parabolic,
        p.flag_dimension,
        yes_no(p.is_twistor)
    )
}

pub fn render_polarizations(list: &[Polarization]) -> String {
    let mut s = format!("polarizations    {}\n", list.len());
    for p in list {
        s += &polarization_line(p);
        s.push('\n');
    }
    s
}

pub fn render_chambers(c: &ChamberComplex) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "orbit            {}", c.orbit);
    let _ = writeln!(s, "chambers         {}", c.chambers.len());
    for ch in &c.chambers {
        let _ = writeln!(s, "  {}  ample rays {}", ch.label, ch.ample_cone.rays().len());
    }
    let _ = writeln!(s, "walls            {}", c.walls.len());
    for w in &c.walls {
        let _ = writeln!(
            s,
            "  {} | {}  swap {}<->{} at {}",
            w.chamber_a, w.chamber_b, w.crossing.swapped.0, w.crossing.swapped.1, w.crossing.position
        );
    }
    let _ = writeln!(s, "connected        {}", yes_no(c.connected));
    s
}

fn render_classify(env: &Envelope<ResolutionReport>) -> String {
    let r = &env.result;
    let mut s = render_record(&r.orbit);
    let _ = writeln!(s, "verdict          {}", r.verdict);
    let _ = writeln!(s, "reason           {}", r.reason);
    let _ = writeln!(
        s,
        "affine closure has a symplectic resolution: {}",
        opt_bool(r.affine_closure_admits_symplectic_resolution)
    );
    let _ = writeln!(s, "canonical bundle exponent {}", r.canonical_bundle_exponent);
    s += &render_polarizations(&r.polarizations);
    if !r.other_richardson_parabolics.is_empty() {
        let _ = writeln!(s, "other Richardson parabolics {}", r.other_richardson_parabolics.len());
        for p in &r.other_richardson_parabolics {
            s += &polarization_line(p);
            s.push('\n');
        }
    }
    if let Some(c) = &r.chamber_complex {
        let _ = writeln!(
            s,
            "chambers         {} (walls {}, connected {})",
            c.chambers.len(),
            c.walls.len(),
            yes_no(c.connected)
        );
    }
    for a in &r.annotations {
        let _ = writeln!(s, "note: {a}");
    }
    let agree = env.cross_checks.iter().filter(|c| c.agrees_with_formula).count();
    let _ = writeln!(s, "cross-checks     {agree}/{} agree", env.cross_checks.len());
    for c in &env.cross_checks {
        let _ = writeln!(
            s,
            "  {:<20} {}  oracle {}  formula {}  {}",
            c.oracle_name,
            c.inputs,
            c.value,
            c.formula_value,
            if c.agrees_with_formula { "ok" } else { "MISMATCH" }
        );
    }
    let _ = writeln!(s, "versions         orbitres {}, table {}", env.artifact_version, env.table_version);
    s
}

pub fn render_twistor(t: &TwistorReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "parabolic        {}", t.parabolic);
    let _ = writeln!(s, "dim G/P          {}", t.flag_dimension);
    let betti: Vec<String> = t.betti_numbers.iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "betti numbers    {}", betti.join(" "));
    if let Some(i) = t.fano_index {
        let _ = writeln!(s, "fano index       {i}");
    }
    let _ = writeln!(s, "projective space {}", yes_no(t.is_projective_space));
    let _ = writeln!(s, "twistor space    {}", yes_no(t.is_twistor_space));
    s
}

pub fn render_suite(r: &SuiteReport) -> String {
    let mut s = String::new();
    for row in &r.rows {
        let _ = writeln!(
            s,
            "{}  {}  formula {}  oracle {}",
            if row.agrees { "pass" } else { "FAIL" },
            row.case,
            row.formula,
            row.oracle
        );
    }
    let _ = writeln!(
        s,
        "suite {} (max n {}, seed {}): {}/{} passed",
        r.suite, r.max_n, r.seed, r.passed, r.cases
    );
    s
}
