//! Nilpotent orbit labels, validity rules per classical type, dimensions and
//! the smooth-projectivisation cases.

mod partition;
mod table;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lie::{Family, SimpleType};

pub use partition::{compositions, next_permutation, Partition};
pub use table::{ExceptionalTable, TableEntry, TablePolarization};

/// Disambiguation for the two orbits sharing a very even partition in type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VeryEvenTag {
    I,
    II,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitKind {
    Partition {
        partition: Partition,
        very_even: Option<VeryEvenTag>,
    },
    Exceptional(String),
}

/// Raw, unvalidated orbit input.
#[derive(Debug, Clone)]
pub enum RawOrbit {
    Parts(Vec<u32>, Option<VeryEvenTag>),
    Key(String),
}

/// A validated nilpotent orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitLabel {
    simple_type: SimpleType,
    kind: OrbitKind,
}

impl OrbitLabel {
    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn kind(&self) -> &OrbitKind {
        &self.kind
    }

    pub fn partition(&self) -> Option<&Partition> {
        match &self.kind {
            OrbitKind::Partition { partition, .. } => Some(partition),
            OrbitKind::Exceptional(_) => None,
        }
    }

    pub fn exceptional_entry(&self) -> Option<&'static TableEntry> {
        match &self.kind {
            OrbitKind::Exceptional(key) => ExceptionalTable::shipped().lookup(self.simple_type, key),
            OrbitKind::Partition { .. } => None,
        }
    }

    /// Parse `"A3:2,1,1"`, `"D4:2,2,2,2:II"` or `"G2:dim8"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (ty, rest) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| bad("expected TYPE:part,part,... or TYPE:key"))?;
        let t: SimpleType = ty.parse()?;
        let rest = rest.trim();
        if rest.is_empty() {
            return Err(bad("missing orbit label"));
        }
        let raw = if t.family().is_classical() {
            let (parts, tag) = match rest.split_once(':') {
                Some((p, "I")) => (p, Some(VeryEvenTag::I)),
                Some((p, "II")) => (p, Some(VeryEvenTag::II)),
                Some(_) => return Err(bad("very even tag must be I or II")),
                None => (rest, None),
            };
            let parts = parts
                .split(',')
                .map(|p| p.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad("partition parts must be positive integers"))?;
            RawOrbit::Parts(parts, tag)
        } else {
            RawOrbit::Key(rest.to_string())
        };
        validate_orbit(t, raw)
    }

    /// All orbits of a classical type (both tags for very even partitions),
    /// or all tabulated orbits of an exceptional type.
    pub fn all_of_type(t: SimpleType) -> Vec<OrbitLabel> {
        match natural_size(t) {
            Some(n) => {
                let mut out = Vec::new();
                for p in Partition::all(n) {
                    let tags: &[Option<VeryEvenTag>] = if is_very_even(t, &p) {
                        &[Some(VeryEvenTag::I), Some(VeryEvenTag::II)]
                    } else {
                        &[None]
                    };
                    for &tag in tags {
                        if let Ok(o) = validate_orbit(t, RawOrbit::Parts(p.parts().to_vec(), tag)) {
                            out.push(o);
                        }
                    }
                }
                out
            }
            None => ExceptionalTable::shipped()
                .entries_for(t)
                .map(|e| OrbitLabel {
                    simple_type: t,
                    kind: OrbitKind::Exceptional(e.key.clone()),
                })
                .collect(),
        }
    }

    /// Type A constructor from a partition of `n ≥ 2`.
    pub fn type_a(parts: Vec<u32>) -> Result<Self> {
        let p = Partition::new(parts.clone());
        let n = p.total() as usize;
        let t = SimpleType::new(Family::A, n.saturating_sub(1))?;
        validate_orbit(t, RawOrbit::Parts(parts, None))
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OrbitKind::Partition {
                partition,
                very_even,
            } => {
                write!(f, "{}:{}", self.simple_type, partition)?;
                match very_even {
                    Some(VeryEvenTag::I) => write!(f, ":I"),
                    Some(VeryEvenTag::II) => write!(f, ":II"),
                    None => Ok(()),
                }
            }
            OrbitKind::Exceptional(key) => write!(f, "{}:{}", self.simple_type, key),
        }
    }
}

impl Serialize for OrbitLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn natural_size(t: SimpleType) -> Option<u32> {
    t.natural_dimension().map(|n| n as u32)
}

fn is_very_even(t: SimpleType, p: &Partition) -> bool {
    t.family() == Family::D
        && p.multiplicities()
            .iter()
            .all(|(&part, &mult)| part % 2 == 0 && mult % 2 == 0)
}

pub fn validate_orbit(t: SimpleType, raw: RawOrbit) -> Result<OrbitLabel> {
    match raw {
        RawOrbit::Key(key) => {
            if t.family().is_classical() {
                return Err(Error::Parse {
                    input: key,
                    reason: format!("{t} orbits are labelled by partitions"),
                });
            }
            let entry = ExceptionalTable::shipped()
                .lookup(t, &key)
                .ok_or_else(|| Error::UnknownExceptionalKey {
                    ty: t.to_string(),
                    key: key.clone(),
                })?;
            Ok(OrbitLabel {
                simple_type: t,
                kind: OrbitKind::Exceptional(entry.key.clone()),
            })
        }
        RawOrbit::Parts(parts, tag) => {
            let Some(n) = natural_size(t) else {
                return Err(Error::Parse {
                    input: format!("{parts:?}"),
                    reason: format!("{t} orbits are labelled by table keys"),
                });
            };
            let invalid = |reason: String| Error::InvalidPartition {
                parts: parts.clone(),
                reason,
            };
            if parts.contains(&0) {
                return Err(invalid("parts must be positive".into()));
            }
            let p = Partition::new(parts.clone());
            if p.total() != n {
                return Err(invalid(format!("parts sum to {}, expected {n}", p.total())));
            }
            let mult = p.multiplicities();
            let rule = match t.family() {
                Family::B | Family::D => Some((0, "even")),
                Family::C => Some((1, "odd")),
                _ => None,
            };
            if let Some((parity, word)) = rule {
                if let Some((&part, &m)) = mult.iter().find(|(&part, &m)| part % 2 == parity && m % 2 == 1) {
                    return Err(invalid(format!(
                        "{word} part {part} has odd multiplicity {m}"
                    )));
                }
            }
            let very_even = if is_very_even(t, &p) {
                Some(tag.unwrap_or(VeryEvenTag::I))
            } else if tag.is_some() {
                return Err(invalid("only very even partitions in type D take a tag".into()));
            } else {
                None
            };
            Ok(OrbitLabel {
                simple_type: t,
                kind: OrbitKind::Partition {
                    partition: p,
                    very_even,
                },
            })
        }
    }
}

pub fn orbit_dimension(o: &OrbitLabel) -> u64 {
    let t = o.simple_type();
    match o.kind() {
        OrbitKind::Exceptional(_) => u64::from(
            o.exceptional_entry()
                .expect("validated key is in the table")
                .dimension,
        ),
        OrbitKind::Partition { partition, .. } => {
            let dual_sq = partition.dual().sum_of_squares();
            let odd = partition.count_odd();
            let r = t.rank() as u64;
            let twice = match t.family() {
                Family::A => {
                    let n = r + 1;
                    return n * n - dual_sq;
                }
                // 2·dim: so_{2r+1}, sp_{2r}, so_{2r}.
                Family::B => 2 * (2 * r * r + r) + odd - dual_sq,
                Family::C => 2 * (2 * r * r + r) - dual_sq - odd,
                Family::D => 2 * (2 * r * r - r) + odd - dual_sq,
                _ => unreachable!("partitions only label classical orbits"),
            };
            debug_assert_eq!(twice % 2, 0);
            twice / 2
        }
    }
}

pub fn dual_partition(p: &Partition) -> Partition {
    p.dual()
}

pub fn is_zero_orbit(o: &OrbitLabel) -> bool {
    orbit_dimension(o) == 0
}

pub fn is_minimal_orbit(o: &OrbitLabel) -> Result<bool> {
    let dim = orbit_dimension(o);
    if dim == 0 {
        return Err(Error::ZeroOrbit);
    }
    Ok(dim == o.simple_type().minimal_orbit_dimension() as u64)
}

/// `P(Õ)` is smooth exactly for the minimal orbit and for the 8-dimensional
/// orbit of G2.
pub fn projective_normalization_smooth(o: &OrbitLabel) -> Result<bool> {
    let minimal = is_minimal_orbit(o)?;
    let g2_dim8 = o.simple_type().family() == Family::G && orbit_dimension(o) == 8;
    Ok(minimal || g2_dim8)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SingularityFlags {
    pub projectively_normal: bool,
    pub rational_gorenstein: bool,
}

impl SingularityFlags {
    /// Both hold for every projectivised normalized orbit closure.
    pub const ALWAYS: SingularityFlags = SingularityFlags {
        projectively_normal: true,
        rational_gorenstein: true,
    };
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitRecord {
    pub label: OrbitLabel,
    pub simple_type: SimpleType,
    pub partition: Option<Partition>,
    pub dual_partition: Option<Partition>,
    pub dim_orbit: u64,
    pub is_minimal: bool,
    pub is_zero: bool,
    /// `(dim O − 2)/2`; `-1` for the zero orbit.
    pub contact_n: i64,
    pub proj_normalization_smooth: bool,
    pub singularity_flags: SingularityFlags,
}

impl OrbitRecord {
    pub fn new(label: &OrbitLabel) -> Self {
        let dim = orbit_dimension(label);
        let is_zero = dim == 0;
        Self {
            label: label.clone(),
            simple_type: label.simple_type(),
            partition: label.partition().cloned(),
            dual_partition: label.partition().map(Partition::dual),
            dim_orbit: dim,
            is_minimal: !is_zero && is_minimal_orbit(label).unwrap_or(false),
            is_zero,
            contact_n: (dim as i64 - 2) / 2,
            proj_normalization_smooth: !is_zero
                && projective_normalization_smooth(label).unwrap_or(false),
            singularity_flags: SingularityFlags::ALWAYS,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> OrbitLabel {
        OrbitLabel::parse(s).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(OrbitLabel::parse("A3:2,1,1").is_ok());
        assert!(matches!(
            OrbitLabel::parse("C2:3,1"),
            Err(Error::InvalidPartition { .. })
        ));
        assert_eq!(o("G2:dim8").to_string(), "G2:dim8");
        assert_eq!(o("G2:A1~").to_string(), "G2:dim8");
        assert!(matches!(
            OrbitLabel::parse("G2:dim9"),
            Err(Error::UnknownExceptionalKey { .. })
        ));
        assert!(matches!(
            OrbitLabel::parse("A3:2,1"),
            Err(Error::InvalidPartition { .. })
        ));
        assert!(OrbitLabel::parse("B2:3,2").is_err());
        assert!(OrbitLabel::parse("B2:2,2,1").is_ok());
        assert_eq!(o("A3:1,2,1").to_string(), "A3:2,1,1");
    }

    #[test]
    fn very_even_tags() {
        assert_eq!(o("D4:2,2,2,2").to_string(), "D4:2,2,2,2:I");
        assert_eq!(o("D4:4,4:II").to_string(), "D4:4,4:II");
        assert!(OrbitLabel::parse("D4:3,3,1,1:II").is_err());
        assert_eq!(orbit_dimension(&o("D4:2,2,2,2:I")), orbit_dimension(&o("D4:2,2,2,2:II")));
        let d4 = OrbitLabel::all_of_type("D4".parse().unwrap());
        assert_eq!(d4.len(), 12);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(orbit_dimension(&o("A3:2,1,1")), 6);
        assert_eq!(orbit_dimension(&o("A3:2,2")), 8);
        assert_eq!(orbit_dimension(&o("G2:dim8")), 8);
        assert_eq!(orbit_dimension(&o("B2:3,1,1")), 6);
        assert_eq!(orbit_dimension(&o("C2:2,1,1")), 4);
        assert_eq!(orbit_dimension(&o("C3:6")), 18);
    }

    #[test]
    fn minimal_examples() {
        assert!(is_minimal_orbit(&o("A2:2,1")).unwrap());
        assert!(!is_minimal_orbit(&o("A3:2,2")).unwrap());
        assert!(is_minimal_orbit(&o("G2:dim6")).unwrap());
        assert_eq!(is_minimal_orbit(&o("A3:1,1,1,1")), Err(Error::ZeroOrbit));
    }

    #[test]
    fn record_fields() {
        let r = OrbitRecord::new(&o("A3:2,2"));
        assert_eq!(r.dim_orbit, 8);
        assert_eq!(r.contact_n, 3);
        assert!(!r.proj_normalization_smooth);
        let g = OrbitRecord::new(&o("G2:dim8"));
        assert!(g.proj_normalization_smooth);
        assert!(!g.is_minimal);
    }
}
