//! Rational polyhedral cones with exact arithmetic.
//!
//! Conversion between generators and inequalities is the double description
//! method: lineality directions are split off first, then inequalities are
//! intersected one at a time with the Motzkin update, combining only pairs of
//! adjacent rays (algebraic adjacency test on the active constraints).

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{dot, primitive_integer, rank_of, QMatrix, Q};

/// Largest ambient dimension the cone engine accepts.
pub const CONE_DIMENSION_CAP: usize = 8;

/// Facet description `{y : n·y ≥ 0 for n in normals, e·y = 0 for e in equations}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facets {
    pub normals: Vec<Vec<BigInt>>,
    pub equations: Vec<Vec<BigInt>>,
}

/// A closed convex polyhedral cone `cone(rays) + span(lineality)` in canonical
/// form: the lineality basis is in reduced echelon form with primitive
/// integer rows, and the rays are primitive, orthogonal to the lineality
/// space, extreme, and sorted.
#[derive(Debug, Clone)]
pub struct RationalCone {
    ambient_dim: usize,
    rays: Vec<Vec<BigInt>>,
    lineality: Vec<Vec<BigInt>>,
    facets: OnceLock<Facets>,
}

impl PartialEq for RationalCone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.rays == other.rays
            && self.lineality == other.lineality
    }
}

impl Eq for RationalCone {}

fn to_q(v: &[BigInt]) -> Vec<Q> {
    v.iter().map(|x| Q::from_integer(x.clone())).collect()
}

fn check_dim(dim: usize) -> Result<()> {
    if dim > CONE_DIMENSION_CAP {
        Err(Error::ConeDimensionCap(dim))
    } else {
        Ok(())
    }
}

impl RationalCone {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<BigInt>] {
        &self.lineality
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        let all: Vec<Vec<Q>> = self.rays.iter().chain(&self.lineality).map(|v| to_q(v)).collect();
        rank_of(&all, self.ambient_dim)
    }

    /// Pointed, full-dimensional and with exactly `ambient_dim` rays.
    pub fn is_simplicial(&self) -> bool {
        self.is_pointed() && self.rays.len() == self.dim()
    }

    /// Generators as a flat list: rays, then `±` each lineality vector.
    pub fn generators(&self) -> Vec<Vec<BigInt>> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(l.iter().map(|x| -x).collect());
        }
        g
    }

    /// Inequality description, computed on first use.
    pub fn facets(&self) -> &Facets {
        self.facets.get_or_init(|| {
            let rays: Vec<Vec<Q>> = self.rays.iter().map(|v| to_q(v)).collect();
            let lin: Vec<Vec<Q>> = self.lineality.iter().map(|v| to_q(v)).collect();
            let (r, l) = h_to_v(self.ambient_dim, &rays, &lin);
            let (normals, equations) = canonicalize(self.ambient_dim, r, l);
            Facets { normals, equations }
        })
    }

    /// Does the cone contain `x`?
    pub fn contains(&self, x: &[Q]) -> bool {
        let f = self.facets();
        f.normals.iter().all(|n| !dot(&to_q(n), x).is_negative())
            && f.equations.iter().all(|e| dot(&to_q(e), x).is_zero())
    }

    /// The cone `{y : n·y ≥ 0, e·y = 0}`.
    pub fn from_inequalities(dim: usize, normals: &[Vec<Q>], equations: &[Vec<Q>]) -> Result<Self> {
        check_dim(dim)?;
        for v in normals.iter().chain(equations) {
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
            }
        }
        let (r, l) = h_to_v(dim, normals, equations);
        let (rays, lineality) = canonicalize(dim, r, l);
        Ok(Self {
            ambient_dim: dim,
            rays,
            lineality,
            facets: OnceLock::new(),
        })
    }
}

/// The cone generated by `gens`, in canonical form.
pub fn cone_from_generators(dim: usize, gens: &[Vec<Q>]) -> Result<RationalCone> {
    check_dim(dim)?;
    for g in gens {
        if g.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: g.len() });
        }
    }
    let gens: Vec<Vec<Q>> = gens.iter().filter(|g| g.iter().any(|x| !x.is_zero())).cloned().collect();
    // Two passes: generators → inequalities → extreme rays.
    let (dual_rays, dual_lin) = h_to_v(dim, &gens, &[]);
    RationalCone::from_inequalities(dim, &dual_rays, &dual_lin)
}

/// Integer convenience wrapper around [`cone_from_generators`].
pub fn cone_from_int_generators(dim: usize, gens: &[Vec<i64>]) -> Result<RationalCone> {
    let q: Vec<Vec<Q>> = gens
        .iter()
        .map(|g| g.iter().map(|&x| crate::linalg::q(x)).collect())
        .collect();
    cone_from_generators(dim, &q)
}

/// `{y : ⟨y, x⟩ ≥ 0 for all x ∈ c}`.
pub fn dual_cone(c: &RationalCone) -> RationalCone {
    let f = c.facets();
    let dual = RationalCone {
        ambient_dim: c.ambient_dim,
        rays: f.normals.clone(),
        lineality: f.equations.clone(),
        facets: OnceLock::new(),
    };
    let _ = dual.facets.set(Facets {
        normals: c.rays.clone(),
        equations: c.lineality.clone(),
    });
    dual
}

/// Extreme rays and a lineality basis of `{y : a·y ≥ 0 (a ∈ ineqs), b·y = 0 (b ∈ eqs)}`.
pub(crate) fn h_to_v(dim: usize, ineqs: &[Vec<Q>], eqs: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<Vec<Q>>) {
    let id = QMatrix::identity(dim);
    let mut lin: Vec<Vec<Q>> = (0..dim).map(|i| id.row(i).to_vec()).collect();
    let mut rays: Vec<Vec<Q>> = Vec::new();
    let mut processed: Vec<Vec<Q>> = Vec::new();

    let neg = |v: &[Q]| v.iter().map(|x| -x).collect::<Vec<Q>>();
    let constraints = eqs
        .iter()
        .flat_map(|b| [b.clone(), neg(b)])
        .chain(ineqs.iter().cloned())
        .filter(|a| a.iter().any(|x| !x.is_zero()));

    for a in constraints {
        if let Some(k) = lin.iter().position(|l| !dot(&a, l).is_zero()) {
            let mut l = lin.remove(k);
            if dot(&a, &l).is_negative() {
                l = neg(&l);
            }
            let al = dot(&a, &l);
            let shift = |v: &mut Vec<Q>| {
                let s = dot(&a, v) / &al;
                if !s.is_zero() {
                    for (x, y) in v.iter_mut().zip(&l) {
                        *x -= &s * y;
                    }
                }
            };
            lin.iter_mut().for_each(shift);
            rays.iter_mut().for_each(shift);
            rays.push(l);
        } else {
            let (mut pos, mut zero, mut negs) = (Vec::new(), Vec::new(), Vec::new());
            for r in rays.drain(..) {
                let v = dot(&a, &r);
                if v.is_positive() {
                    pos.push((v, r));
                } else if v.is_negative() {
                    negs.push((v, r));
                } else {
                    zero.push(r);
                }
            }
            let free = dim - lin.len();
            let mut next: Vec<Vec<Q>> = pos.iter().map(|(_, r)| r.clone()).collect();
            next.append(&mut zero);
            for (vp, p) in &pos {
                for (vn, n) in &negs {
                    if adjacent(&processed, p, n, dim, free) {
                        // (a·p) n − (a·n) p lies on the hyperplane a = 0.
                        let combo: Vec<Q> = n.iter().zip(p).map(|(x, y)| vp * x - vn * y).collect();
                        next.push(combo);
                    }
                }
            }
            rays = next;
        }
        processed.push(a);
        rays = reduce_rays(dim, rays, &lin);
    }
    (rays, lin)
}

fn adjacent(constraints: &[Vec<Q>], p: &[Q], n: &[Q], dim: usize, free: usize) -> bool {
    if free < 2 {
        return false;
    }
    let active: Vec<Vec<Q>> = constraints
        .iter()
        .filter(|c| dot(c, p).is_zero() && dot(c, n).is_zero())
        .cloned()
        .collect();
    rank_of(&active, dim) == free - 2
}

/// Project rays onto the orthogonal complement of `lin`, normalize and dedupe.
fn reduce_rays(dim: usize, rays: Vec<Vec<Q>>, lin: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<BigInt>> = rays
        .into_iter()
        .map(|r| project_out(dim, &r, lin))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| primitive_integer(&r))
        .collect();
    out.sort();
    out.dedup();
    out.iter().map(|v| to_q(v)).collect()
}

fn project_out(dim: usize, r: &[Q], lin: &[Vec<Q>]) -> Vec<Q> {
    if lin.is_empty() {
        return r.to_vec();
    }
    let l = QMatrix::from_rows(lin);
    let gram = l.matmul(&l.transpose());
    let coeffs = gram
        .inverse()
        .expect("lineality basis is independent")
        .mul_vec(&l.mul_vec(r));
    let mut out = r.to_vec();
    for (c, row) in coeffs.iter().zip(lin) {
        for j in 0..dim {
            out[j] -= c * &row[j];
        }
    }
    out
}

fn canonicalize(dim: usize, rays: Vec<Vec<Q>>, lin: Vec<Vec<Q>>) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let lineality: Vec<Vec<BigInt>> = if lin.is_empty() {
        Vec::new()
    } else {
        let (r, pivots) = QMatrix::from_rows(&lin).rref();
        (0..pivots.len()).map(|i| primitive_integer(r.row(i))).collect()
    };
    let lin_q: Vec<Vec<Q>> = lineality.iter().map(|v| to_q(v)).collect();
    let rays = reduce_rays(dim, rays, &lin_q)
        .iter()
        .map(|r| primitive_integer(r))
        .collect();
    (rays, lineality)
}

fn int_value(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

pub(crate) fn int_vectors(vs: &[Vec<BigInt>]) -> Vec<Vec<serde_json::Value>> {
    vs.iter().map(|v| v.iter().map(int_value).collect()).collect()
}

impl Serialize for RationalCone {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RationalCone", 4)?;
        st.serialize_field("ambient_dim", &self.ambient_dim)?;
        st.serialize_field("rays", &int_vectors(&self.rays))?;
        st.serialize_field("lineality", &int_vectors(&self.lineality))?;
        st.serialize_field("simplicial", &self.is_simplicial())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
        v.iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect()
    }

    #[test]
    fn generator_examples() {
        let c = cone_from_int_generators(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(ints(c.rays()), vec![vec![0, 1], vec![1, 0]]);
        let c = cone_from_int_generators(2, &[vec![2, 0]]).unwrap();
        assert_eq!(ints(c.rays()), vec![vec![1, 0]]);
        let c = cone_from_int_generators(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(c.rays().len(), 3);
        assert!(c.is_simplicial());
    }

    #[test]
    fn dual_examples() {
        let quadrant = cone_from_int_generators(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(dual_cone(&quadrant), quadrant);
        let ray = cone_from_int_generators(2, &[vec![1, 0]]).unwrap();
        let half = dual_cone(&ray);
        assert_eq!(ints(half.rays()), vec![vec![1, 0]]);
        assert_eq!(ints(half.lineality()), vec![vec![0, 1]]);
        assert_eq!(dual_cone(&half), ray);
    }

    #[test]
    fn degenerate_cones() {
        let zero = cone_from_generators(3, &[]).unwrap();
        assert!(zero.rays().is_empty() && zero.lineality().is_empty());
        assert_eq!(dual_cone(&zero).lineality().len(), 3);
        let line = cone_from_int_generators(2, &[vec![1, 1], vec![-1, -1]]).unwrap();
        assert_eq!(ints(line.lineality()), vec![vec![1, 1]]);
        assert!(line.rays().is_empty());
    }

    #[test]
    fn square_pyramid() {
        let c = cone_from_int_generators(
            3,
            &[vec![1, 1, 1], vec![1, -1, 1], vec![-1, 1, 1], vec![-1, -1, 1], vec![0, 0, 1]],
        )
        .unwrap();
        assert_eq!(c.rays().len(), 4);
        assert_eq!(c.facets().normals.len(), 4);
        assert!(!c.is_simplicial());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            cone_from_int_generators(2, &[vec![1, 0, 0]]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(cone_from_generators(9, &[]), Err(Error::ConeDimensionCap(9))));
    }
}
