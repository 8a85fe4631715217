use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{q, QMatrix, Q};

use super::{poincare, Family, Poincare, RootSystem, SimpleType};

/// Criterion used to decide `G/P ≅ Pⁿ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum ProjectiveSpaceCriterion {
    /// Every Betti number equals one. Necessary, not sufficient: odd quadrics
    /// (`B_n`, `{1}`) and both `G2/P` pass it.
    BettiAllOnes,
    /// All-ones Betti numbers together with Fano index `dim + 1`
    /// (Kobayashi–Ochiai characterisation of projective space).
    #[default]
    BettiAllOnesAndFanoIndex,
}

/// A marked Dynkin diagram: the conjugacy class of parabolics whose Levi
/// factor has the unmarked simple roots.
#[derive(Clone)]
pub struct Parabolic {
    root_system: Arc<RootSystem>,
    marked: BTreeSet<usize>,
}

impl PartialEq for Parabolic {
    fn eq(&self, other: &Self) -> bool {
        self.simple_type() == other.simple_type() && self.marked == other.marked
    }
}

impl Eq for Parabolic {}

impl PartialOrd for Parabolic {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Parabolic {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.simple_type()
            .cmp(&other.simple_type())
            .then_with(|| self.marked.cmp(&other.marked))
    }
}

impl fmt::Debug for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Parabolic({self})")
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks: Vec<String> = self.marked.iter().map(ToString::to_string).collect();
        write!(f, "{}:{{{}}}", self.simple_type(), marks.join(","))
    }
}

impl Serialize for Parabolic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Parabolic {
    pub fn new(root_system: Arc<RootSystem>, marked: impl IntoIterator<Item = usize>) -> Result<Self> {
        let rank = root_system.rank();
        let marked: BTreeSet<usize> = marked.into_iter().collect();
        if let Some(&bad) = marked.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::MarkOutOfRange { index: bad, rank });
        }
        Ok(Self {
            root_system,
            marked,
        })
    }

    pub fn of_type(t: SimpleType, marked: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(RootSystem::shared(t), marked)
    }

    /// Parse `"A3:{1,3}"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (ty, rest) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| bad("expected TYPE:{i,j,...}"))?;
        let t: SimpleType = ty.parse()?;
        let inner = rest
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| bad("marked roots must be wrapped in braces"))?;
        let mut marks = Vec::new();
        for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            marks.push(tok.parse::<usize>().map_err(|_| bad("marked root must be an integer"))?);
        }
        Self::of_type(t, marks)
    }

    /// Type A only: the parabolic whose Levi blocks have sizes `c`
    /// (`Σc = rank + 1`).
    pub fn from_composition(c: &[usize]) -> Result<Self> {
        if c.is_empty() || c.contains(&0) {
            return Err(Error::Parse {
                input: format!("{c:?}"),
                reason: "composition parts must be positive".into(),
            });
        }
        let n: usize = c.iter().sum();
        if n < 2 {
            return Err(Error::InvalidRank {
                family: Family::A,
                rank: 0,
            });
        }
        let t = SimpleType::new(Family::A, n - 1)?;
        let marks = c[..c.len() - 1].iter().scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        });
        Self::of_type(t, marks)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.root_system
    }

    pub fn simple_type(&self) -> SimpleType {
        self.root_system.simple_type()
    }

    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    fn marked_vec(&self) -> Vec<usize> {
        self.marked.iter().copied().collect()
    }

    fn require_marking(&self) -> Result<()> {
        if self.marked.is_empty() {
            Err(Error::EmptyMarking)
        } else {
            Ok(())
        }
    }

    /// Block composition for type A; `None` otherwise.
    pub fn composition(&self) -> Option<Vec<usize>> {
        if self.simple_type().family() != Family::A {
            return None;
        }
        let n = self.simple_type().rank() + 1;
        let mut c = Vec::with_capacity(self.marked.len() + 1);
        let mut prev = 0;
        for &m in &self.marked {
            c.push(m - prev);
            prev = m;
        }
        c.push(n - prev);
        Some(c)
    }

    /// Positive roots with a nonzero coefficient on some marked root: the
    /// roots of the nilradical.
    pub fn nilradical_roots(&self) -> Vec<&[i64]> {
        self.root_system
            .positive_roots()
            .iter()
            .filter(|r| self.marked.iter().any(|&m| r[m - 1] != 0))
            .map(Vec::as_slice)
            .collect()
    }

    /// `dim G/P`, which equals `dim n`.
    pub fn flag_dimension(&self) -> Result<usize> {
        self.require_marking()?;
        Ok(self.nilradical_roots().len())
    }

    pub fn curve_divisor_lattice(&self) -> Result<CurveDivisorLattice> {
        self.require_marking()?;
        let marks = self.marked_vec();
        let rs = &self.root_system;
        let w = rs.fundamental_weights();
        let cartan = rs.cartan_matrix();
        let k = marks.len();
        let mut pairing = QMatrix::zeros(k, k);
        for (a, &beta) in marks.iter().enumerate() {
            for (b, &gamma) in marks.iter().enumerate() {
                // ⟨ϖ_β, α_γ∨⟩ with ϖ_β in simple-root coordinates.
                let v: Q = (0..rs.rank())
                    .map(|j| &w[(beta - 1, j)] * q(cartan[j][gamma - 1]))
                    .sum();
                pairing[(a, b)] = v;
            }
        }
        Ok(CurveDivisorLattice {
            parabolic: self.clone(),
            curve_basis: marks.iter().map(|m| format!("C_a{m}")).collect(),
            divisor_basis: marks.iter().map(|m| format!("w_{m}")).collect(),
            pairing,
        })
    }

    /// Poincaré polynomial of `G/P`: enumerated for small ranks, otherwise
    /// from root heights.
    pub fn poincare_polynomial(&self) -> Result<Poincare> {
        self.require_marking()?;
        let marks = self.marked_vec();
        Ok(poincare::by_enumeration(&self.root_system, &marks)
            .unwrap_or_else(|| poincare::by_heights(&self.root_system, &marks)))
    }

    pub fn poincare_by_heights(&self) -> Poincare {
        poincare::by_heights(&self.root_system, &self.marked_vec())
    }

    pub fn poincare_by_enumeration(&self) -> Option<Poincare> {
        poincare::by_enumeration(&self.root_system, &self.marked_vec())
    }

    /// Coefficients of `c_1(G/P) = Σ_{α ∈ n} α` on the ϖ_α, α ∈ I.
    pub fn anticanonical_weights(&self) -> Vec<i64> {
        let rs = &self.root_system;
        let nil = self.nilradical_roots();
        self.marked
            .iter()
            .map(|&m| nil.iter().map(|r| rs.coroot_pairing(r, m - 1)).sum())
            .collect()
    }

    /// Fano index for a maximal parabolic; `None` when `b_2 > 1`.
    pub fn fano_index(&self) -> Option<i64> {
        match self.anticanonical_weights().as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    pub fn is_projective_space(&self) -> Result<bool> {
        self.is_projective_space_with(ProjectiveSpaceCriterion::default())
    }

    pub fn is_projective_space_with(&self, criterion: ProjectiveSpaceCriterion) -> Result<bool> {
        let poly = self.poincare_polynomial()?;
        let betti = poly.is_all_ones();
        Ok(match criterion {
            ProjectiveSpaceCriterion::BettiAllOnes => betti,
            ProjectiveSpaceCriterion::BettiAllOnesAndFanoIndex => {
                betti && self.fano_index() == Some(poly.degree() as i64 + 1)
            }
        })
    }

    /// All parabolics of a type with nonempty marking, in lexicographic order
    /// of their marked sets.
    pub fn all_proper(t: SimpleType) -> Vec<Parabolic> {
        let rs = RootSystem::shared(t);
        let n = t.rank();
        let mut out: Vec<Parabolic> = (1u32..(1 << n))
            .map(|mask| {
                let marks = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0);
                Parabolic::new(rs.clone(), marks).expect("marks in range")
            })
            .collect();
        out.sort();
        out
    }
}

/// `N_1`/`N^1` of the relative setting: Schubert curves `C_α` and fundamental
/// weights `ϖ_α` for `α ∈ I`, with their intersection pairing. One object
/// serves the affine, punctured and projectivised resolutions alike.
#[derive(Debug, Clone)]
pub struct CurveDivisorLattice {
    pub parabolic: Parabolic,
    pub curve_basis: Vec<String>,
    pub divisor_basis: Vec<String>,
    pub pairing: QMatrix,
}

impl CurveDivisorLattice {
    pub fn rank(&self) -> usize {
        self.curve_basis.len()
    }

    pub fn pairing_is_identity(&self) -> bool {
        self.pairing == QMatrix::identity(self.rank())
    }

    /// Pairs divisor coordinates `d` with curve coordinates `c`.
    pub fn pair(&self, d: &[Q], c: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (i, di) in d.iter().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                acc += di * &self.pairing[(i, j)] * cj;
            }
        }
        acc
    }
}
