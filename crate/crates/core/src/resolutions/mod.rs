//! Existence and enumeration of contact resolutions `P(T*(G/P)) → P(O̅)`.
//!
//! A contact resolution of a singular `P(O̅)` comes from a parabolic whose
//! Springer map onto `O̅` is birational (a polarization); the two smooth
//! cases need no resolution at all.

mod richardson;

use std::fmt;

use serde::Serialize;

use crate::cones::{movable_chambers, ChamberComplex};
use crate::error::{Error, Result};
use crate::lie::{Family, Parabolic, RootSystem};
use crate::linalg::Q;
use crate::orbits::{ExceptionalTable, OrbitLabel, OrbitRecord};

pub use richardson::{collapse, induce_from_zero, richardson_partition, type_a_richardson};

/// Largest rank for which all parabolics of a B/C/D type are scanned.
pub const CLASSICAL_SCAN_RANK_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    SmoothAlready,
    ContactResolutionsExist,
    NoContactResolution,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Reason {
    Minimal,
    G2dim8,
    SymplecticResolution,
    ClassificationTable,
    /// No parabolic has this orbit as its Richardson orbit, so no Springer
    /// map lands on it.
    NotRichardson,
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A parabolic together with what is known about its Springer map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Polarization {
    pub parabolic: Parabolic,
    /// Block composition (type A only).
    pub composition: Option<Vec<usize>>,
    pub richardson_orbit: OrbitLabel,
    pub flag_dimension: usize,
    pub springer_degree: Option<u32>,
    pub is_birational: Option<bool>,
    /// `G/P ≅ Pⁿ`, i.e. `P(T*(G/P))` is a twistor space.
    pub is_twistor: bool,
}

impl Polarization {
    fn new(parabolic: Parabolic, orbit: &OrbitLabel, degree: Option<u32>) -> Result<Self> {
        Ok(Self {
            composition: parabolic.composition(),
            flag_dimension: parabolic.flag_dimension()?,
            is_twistor: parabolic.is_projective_space()?,
            parabolic,
            richardson_orbit: orbit.clone(),
            springer_degree: degree,
            is_birational: degree.map(|d| d == 1),
        })
    }

    fn sort_key(&self) -> (Vec<usize>, Vec<usize>) {
        (
            self.composition.clone().unwrap_or_default(),
            self.parabolic.marked().iter().copied().collect(),
        )
    }
}

fn sorted(mut v: Vec<Polarization>) -> Vec<Polarization> {
    v.sort_by_key(Polarization::sort_key);
    v
}

/// What the library can say about the parabolics over one orbit.
struct Enumerated {
    /// Polarizations of degree 1.
    birational: Vec<Polarization>,
    /// Richardson parabolics whose Springer degree is unknown or > 1.
    others: Vec<Polarization>,
    is_richardson: Option<bool>,
    /// Exceptional table verdict, when present.
    table_admits: Option<bool>,
}

impl Enumerated {
    fn complete(&self) -> bool {
        self.others.iter().all(|p| p.is_birational == Some(false))
    }
}

fn enumerate(o: &OrbitLabel) -> Result<Enumerated> {
    let t = o.simple_type();
    if crate::orbits::is_zero_orbit(o) {
        return Err(Error::ZeroOrbit);
    }
    match t.family() {
        Family::A => {
            let dual = o.partition().expect("classical").dual();
            let rs = RootSystem::shared(t);
            let mut birational = Vec::new();
            for c in dual.distinct_orderings() {
                let marks: Vec<usize> = c[..c.len() - 1]
                    .iter()
                    .scan(0, |acc, &x| {
                        *acc += x as usize;
                        Some(*acc)
                    })
                    .collect();
                birational.push(Polarization::new(Parabolic::new(rs.clone(), marks)?, o, Some(1))?);
            }
            Ok(Enumerated {
                birational: sorted(birational),
                others: Vec::new(),
                is_richardson: Some(true),
                table_admits: None,
            })
        }
        Family::B | Family::C | Family::D => {
            if t.rank() > CLASSICAL_SCAN_RANK_CAP {
                return Err(Error::UnknownClassification(format!(
                    "{t} exceeds the parabolic scan cap (rank {CLASSICAL_SCAN_RANK_CAP})"
                )));
            }
            let mut birational = Vec::new();
            let mut others = Vec::new();
            for p in Parabolic::all_proper(t) {
                if richardson_partition(&p)? != *o {
                    continue;
                }
                // The Springer resolution T*(G/B) → N is birational.
                if p.marked().len() == t.rank() {
                    birational.push(Polarization::new(p, o, Some(1))?);
                } else {
                    others.push(Polarization::new(p, o, None)?);
                }
            }
            let is_richardson = Some(!(birational.is_empty() && others.is_empty()));
            Ok(Enumerated {
                birational: sorted(birational),
                others: sorted(others),
                is_richardson,
                table_admits: None,
            })
        }
        _ => {
            let entry = o.exceptional_entry().expect("validated key");
            let mut birational = Vec::new();
            let mut others = Vec::new();
            for tp in &entry.polarizations {
                let p = Parabolic::new(RootSystem::shared(t), tp.marked.iter().copied())?;
                let pol = Polarization::new(p, o, tp.degree)?;
                if tp.degree == Some(1) {
                    birational.push(pol);
                } else {
                    others.push(pol);
                }
            }
            Ok(Enumerated {
                birational: sorted(birational),
                others: sorted(others),
                is_richardson: entry.is_richardson,
                table_admits: entry.admits_symplectic_resolution,
            })
        }
    }
}

/// Parabolics whose Springer map onto `O̅` is birational, sorted by
/// composition (type A) or marked set.
pub fn polarizations(o: &OrbitLabel) -> Result<Vec<Polarization>> {
    let e = enumerate(o)?;
    let settled = match o.simple_type().family() {
        Family::A => true,
        Family::B | Family::C | Family::D => e.complete(),
        _ => e.table_admits.is_some() || e.is_richardson == Some(false),
    };
    if settled {
        Ok(e.birational)
    } else {
        Err(Error::UnknownClassification(format!(
            "Springer-map degrees over {o} are not known"
        )))
    }
}

/// Every parabolic (up to conjugacy) whose Richardson orbit is `o`,
/// birational or not.
pub fn richardson_parabolics(o: &OrbitLabel) -> Result<Vec<Polarization>> {
    let e = enumerate(o)?;
    Ok(sorted(e.birational.into_iter().chain(e.others).collect()))
}

/// The parabolics `Q ∼ P`: those giving symplectic resolutions of the same
/// orbit closure as `P`.
pub fn equivalent_parabolics(p: &Parabolic) -> Result<Vec<Parabolic>> {
    let o = richardson_partition(p).map_err(|e| match e {
        Error::UnsupportedType(m) => Error::UnknownClassification(m),
        other => other,
    })?;
    match polarizations(&o) {
        Ok(list) if list.iter().any(|q| q.parabolic == *p) => {
            Ok(list.into_iter().map(|q| q.parabolic).collect())
        }
        Ok(_) => Err(Error::NotAPolarization(p.to_string())),
        Err(e) => {
            let known_bad = enumerate(&o)?
                .others
                .iter()
                .any(|q| q.parabolic == *p && q.is_birational == Some(false));
            if known_bad {
                Err(Error::NotAPolarization(p.to_string()))
            } else {
                Err(e)
            }
        }
    }
}

/// `P(T*(G/P))` is a twistor space exactly when `G/P ≅ Pⁿ`.
pub fn is_twistor_space(p: &Parabolic) -> Result<bool> {
    p.is_projective_space()
}

/// `K_X · C = −(n+1) · (L · π̄_*[C])`. Curves contracted by the resolution
/// have `L`-degree 0.
pub fn canonical_degree_on_curve(n_contact: u64, l_degree: &Q) -> Q {
    -(Q::from_integer((n_contact + 1).into()) * l_degree)
}

#[derive(Debug, Clone, Serialize)]
pub struct ResolutionReport {
    pub orbit: OrbitRecord,
    pub verdict: Verdict,
    pub reason: Reason,
    /// Birational polarizations: the equivalence class indexing the chambers.
    pub polarizations: Vec<Polarization>,
    /// Richardson parabolics that are not known to be birational.
    pub other_richardson_parabolics: Vec<Polarization>,
    pub chamber_complex: Option<ChamberComplex>,
    /// Crepant, minimal-model and contact resolutions are one notion here.
    pub crepant_equals_contact_equals_minimal: bool,
    /// `K_X ≅ L̃^{−e}` with `e = dim O / 2`.
    pub canonical_bundle_exponent: u64,
    /// Does the affine closure `O̅` admit a symplectic resolution?
    pub affine_closure_admits_symplectic_resolution: Option<bool>,
    pub annotations: Vec<String>,
}

impl ResolutionReport {
    /// `verdict` and `reason`/`polarizations` tell the same story.
    pub fn is_coherent(&self) -> bool {
        let exists = matches!(
            self.verdict,
            Verdict::ContactResolutionsExist | Verdict::SmoothAlready
        );
        let justified =
            !self.polarizations.is_empty() || matches!(self.reason, Reason::Minimal | Reason::G2dim8);
        exists == justified
            && (self.verdict == Verdict::SmoothAlready) == self.orbit.proj_normalization_smooth
            && self.canonical_bundle_exponent * 2 == self.orbit.dim_orbit
    }
}

const NOTE_MINIMAL_NON_A: &str = "minimal orbit outside type A: the affine closure has no symplectic \
resolution, although the projectivised normalization is already smooth";
const NOTE_G2_DIM8: &str = "the normalization of P(O) is isomorphic to the projectivised minimal \
orbit closure of so_7 (recorded as annotation only)";

/// Decide whether `P(O̅)` admits a contact resolution and assemble the report.
pub fn contact_resolution_exists(o: &OrbitLabel) -> Result<ResolutionReport> {
    let record = OrbitRecord::new(o);
    if record.is_zero {
        return Err(Error::ZeroOrbit);
    }
    let t = o.simple_type();
    let family = t.family();
    let enumerated = enumerate(o);
    let pols = polarizations(o);
    let mut annotations = Vec::new();

    let (verdict, reason) = if record.proj_normalization_smooth {
        if record.is_minimal {
            (Verdict::SmoothAlready, Reason::Minimal)
        } else {
            (Verdict::SmoothAlready, Reason::G2dim8)
        }
    } else if family == Family::A {
        (Verdict::ContactResolutionsExist, Reason::SymplecticResolution)
    } else {
        match &enumerated {
            Err(Error::UnknownClassification(_)) => (Verdict::Unknown, Reason::Indeterminate),
            Err(e) => return Err(e.clone()),
            Ok(e) if family.is_classical() => {
                if !e.birational.is_empty() {
                    (Verdict::ContactResolutionsExist, Reason::SymplecticResolution)
                } else if e.is_richardson == Some(false) {
                    (Verdict::NoContactResolution, Reason::NotRichardson)
                } else if e.complete() {
                    (Verdict::NoContactResolution, Reason::SymplecticResolution)
                } else {
                    (Verdict::Unknown, Reason::Indeterminate)
                }
            }
            Ok(e) => match (e.table_admits, e.is_richardson) {
                (Some(true), _) if !e.birational.is_empty() => {
                    (Verdict::ContactResolutionsExist, Reason::ClassificationTable)
                }
                (Some(false), _) | (_, Some(false)) => {
                    (Verdict::NoContactResolution, Reason::ClassificationTable)
                }
                _ => (Verdict::Unknown, Reason::Indeterminate),
            },
        }
    };

    let minimal_non_a = record.is_minimal && family != Family::A;
    if minimal_non_a {
        annotations.push(NOTE_MINIMAL_NON_A.to_string());
    }
    if reason == Reason::G2dim8 {
        annotations.push(NOTE_G2_DIM8.to_string());
    }

    let polarizations = pols.clone().unwrap_or_default();
    let other_richardson_parabolics = enumerated.map(|e| e.others).unwrap_or_default();
    if verdict == Verdict::Unknown && !other_richardson_parabolics.is_empty() {
        annotations.push(format!(
            "Richardson for {} parabolic(s); their Springer-map degrees are not determined",
            other_richardson_parabolics.len()
        ));
    }

    let affine = if family == Family::A {
        Some(true)
    } else if minimal_non_a {
        Some(false)
    } else {
        match verdict {
            Verdict::ContactResolutionsExist => Some(true),
            Verdict::NoContactResolution => Some(false),
            _ => o.exceptional_entry().and_then(|e| e.admits_symplectic_resolution),
        }
    };

    let chamber_complex = if polarizations.is_empty() {
        None
    } else {
        Some(movable_chambers(o)?)
    };

    let report = ResolutionReport {
        canonical_bundle_exponent: record.dim_orbit / 2,
        orbit: record,
        verdict,
        reason,
        polarizations,
        other_richardson_parabolics,
        chamber_complex,
        crepant_equals_contact_equals_minimal: true,
        affine_closure_admits_symplectic_resolution: affine,
        annotations,
    };
    debug_assert!(report.is_coherent(), "{o}");
    Ok(report)
}

/// Version of the curated exceptional table compiled into the crate.
pub fn table_version() -> &'static str {
    &ExceptionalTable::shipped().version
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn o(s: &str) -> OrbitLabel {
        OrbitLabel::parse(s).unwrap()
    }

    fn comps(list: &[Polarization]) -> Vec<Vec<usize>> {
        list.iter().map(|p| p.composition.clone().unwrap()).collect()
    }

    #[test]
    fn polarization_examples() {
        assert_eq!(comps(&polarizations(&o("A3:2,1,1")).unwrap()), vec![vec![1, 3], vec![3, 1]]);
        assert_eq!(comps(&polarizations(&o("A3:2,2")).unwrap()), vec![vec![2, 2]]);
        assert_eq!(polarizations(&o("A5:3,2,1")).unwrap().len(), 6);
        assert!(matches!(polarizations(&o("G2:dim10")), Err(Error::UnknownClassification(_))));
        assert!(matches!(polarizations(&o("A3:1,1,1,1")), Err(Error::ZeroOrbit)));
    }

    #[test]
    fn verdict_examples() {
        let r = contact_resolution_exists(&o("A2:2,1")).unwrap();
        assert_eq!((r.verdict, r.reason), (Verdict::SmoothAlready, Reason::Minimal));
        let r = contact_resolution_exists(&o("A3:2,2")).unwrap();
        assert_eq!(r.verdict, Verdict::ContactResolutionsExist);
        assert_eq!(r.polarizations[0].parabolic.to_string(), "A3:{2}");
        let r = contact_resolution_exists(&o("G2:dim8")).unwrap();
        assert_eq!((r.verdict, r.reason), (Verdict::SmoothAlready, Reason::G2dim8));
        assert_eq!(r.annotations.len(), 1);
        let r = contact_resolution_exists(&o("B3:2,2,1,1,1")).unwrap();
        assert_eq!((r.verdict, r.reason), (Verdict::SmoothAlready, Reason::Minimal));
        assert_eq!(r.affine_closure_admits_symplectic_resolution, Some(false));
        let r = contact_resolution_exists(&o("C2:4")).unwrap();
        assert_eq!(r.verdict, Verdict::ContactResolutionsExist);
        let r = contact_resolution_exists(&o("C2:2,2")).unwrap();
        assert_eq!(r.verdict, Verdict::Unknown);
        assert_eq!(r.other_richardson_parabolics.len(), 2);
        let r = contact_resolution_exists(&o("G2:dim12")).unwrap();
        assert_eq!((r.verdict, r.reason), (Verdict::ContactResolutionsExist, Reason::ClassificationTable));
        assert!(matches!(contact_resolution_exists(&o("A3:1,1,1,1")), Err(Error::ZeroOrbit)));
    }

    #[test]
    fn equivalence_examples() {
        let class = |c: &[usize]| {
            let mut v: Vec<Vec<usize>> = equivalent_parabolics(&Parabolic::from_composition(c).unwrap())
                .unwrap()
                .iter()
                .map(|p| p.composition().unwrap())
                .collect();
            v.sort();
            v
        };
        assert_eq!(class(&[3, 1]), vec![vec![1, 3], vec![3, 1]]);
        assert_eq!(class(&[2, 2]), vec![vec![2, 2]]);
        assert_eq!(class(&[1, 2, 3]).len(), 6);
    }

    #[test]
    fn twistor_and_canonical_degree() {
        let p = |s: &str| Parabolic::parse(s).unwrap();
        assert!(is_twistor_space(&p("A3:{1}")).unwrap());
        assert!(!is_twistor_space(&p("A3:{2}")).unwrap());
        assert!(!is_twistor_space(&p("A3:{1,2}")).unwrap());
        assert_eq!(canonical_degree_on_curve(2, &q(1)), q(-3));
        assert_eq!(canonical_degree_on_curve(5, &q(0)), q(0));
        assert_eq!(canonical_degree_on_curve(3, &q(2)), q(-8));
    }
}
