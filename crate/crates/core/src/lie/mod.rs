//! Root data for simple types A–G, parabolic marked diagrams and the
//! curve/divisor lattices of their flag varieties.
//!
//! Simple roots use Bourbaki numbering throughout, and the Cartan matrix
//! follows the Bourbaki convention `n_ij = ⟨α_i, α_j∨⟩` (so G2 is
//! `[[2, -1], [-3, 2]]` with α1 short).

mod parabolic;
mod poincare;
mod root_system;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use parabolic::{CurveDivisorLattice, Parabolic, ProjectiveSpaceCriterion};
pub use poincare::{Poincare, ENUMERATION_RANK_CAP};
pub use root_system::RootSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A simple type `X_n` with its rank bounds enforced at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    pub fn dim_algebra(self) -> usize {
        2 * self.positive_root_count() + self.rank
    }

    pub fn dual_coxeter_number(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n + 1,
            Family::B => 2 * n - 1,
            Family::C => n + 1,
            Family::D => 2 * n - 2,
            Family::E => match n {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Family::F => 9,
            Family::G => 4,
        }
    }

    /// Dimension of the minimal nonzero nilpotent orbit, `2h∨ − 2`.
    pub fn minimal_orbit_dimension(self) -> usize {
        2 * self.dual_coxeter_number() - 2
    }

    /// Size of the natural matrix representation for classical types.
    pub fn natural_dimension(self) -> Option<usize> {
        let n = self.rank;
        match self.family {
            Family::A => Some(n + 1),
            Family::B => Some(2 * n + 1),
            Family::C | Family::D => Some(2 * n),
            _ => None,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| bad("empty type"))?;
        let family = Family::from_letter(letter).ok_or_else(|| bad("unknown family letter"))?;
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| bad("rank must be a positive integer"))?;
        SimpleType::new(family, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_bounds() {
        assert!(SimpleType::new(Family::A, 1).is_ok());
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::C, 1).is_err());
        assert!(SimpleType::new(Family::D, 2).is_err());
        assert!(SimpleType::new(Family::D, 3).is_ok());
        assert!(SimpleType::new(Family::E, 5).is_err());
        assert!(SimpleType::new(Family::E, 9).is_err());
        assert!(SimpleType::new(Family::F, 4).is_ok());
        assert!(SimpleType::new(Family::G, 3).is_err());
        assert_eq!(
            SimpleType::new(Family::G, 3),
            Err(Error::InvalidRank {
                family: Family::G,
                rank: 3
            })
        );
    }

    #[test]
    fn parse_and_display() {
        let t: SimpleType = "E7".parse().unwrap();
        assert_eq!(t.to_string(), "E7");
        assert!("X3".parse::<SimpleType>().is_err());
        assert!("A".parse::<SimpleType>().is_err());
        assert!("B1".parse::<SimpleType>().is_err());
    }

    #[test]
    fn minimal_orbit_dims() {
        let g2: SimpleType = "G2".parse().unwrap();
        assert_eq!(g2.minimal_orbit_dimension(), 6);
        let a2: SimpleType = "A2".parse().unwrap();
        assert_eq!(a2.minimal_orbit_dimension(), 4);
    }
}
