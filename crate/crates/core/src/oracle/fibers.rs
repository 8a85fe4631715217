//! Point counts of Springer fibers for type A partial flags.
//!
//! For `e` in the nilradical of the parabolic with composition `c`, the fiber
//! of `T*(G/P) → g` over `e` is the set of flags `V_1 ⊂ … ⊂ V_{k−1}` with
//! `dim V_i = c_1 + … + c_i` and `e V_i ⊆ V_{i−1}`. Lower and upper bounds for
//! each `V_i` are propagated to a fixpoint; the count is exact when every
//! bound pins its subspace.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::Parabolic;
use crate::linalg::{QMatrix, Q};
use crate::orbits::Partition;

use super::model::jordan_type;
use super::nilradical::{nilradical_basis, random_element};
use super::Caps;

/// A subspace of `Qⁿ`, stored as the nonzero rows of its reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    n: usize,
    rows: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn span(n: usize, vectors: &[Vec<Q>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(n);
        }
        let (r, pivots) = QMatrix::from_rows(vectors).rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self { n, rows }
    }

    pub fn zero(n: usize) -> Self {
        Self { n, rows: Vec::new() }
    }

    pub fn whole(n: usize) -> Self {
        let id = QMatrix::identity(n);
        Self::span(n, &(0..n).map(|i| id.row(i).to_vec()).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Vectors orthogonal to `self` under the standard dot product.
    pub fn annihilator(&self) -> Self {
        if self.rows.is_empty() {
            return Self::whole(self.n);
        }
        Self::span(self.n, &QMatrix::from_rows(&self.rows).nullspace())
    }

    pub fn sum(&self, other: &Self) -> Self {
        let all: Vec<Vec<Q>> = self.rows.iter().chain(&other.rows).cloned().collect();
        Self::span(self.n, &all)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.sum(other).dim() == self.dim()
    }

    pub fn image(&self, m: &QMatrix) -> Self {
        let v: Vec<Vec<Q>> = self.rows.iter().map(|r| m.mul_vec(r)).collect();
        Self::span(self.n, &v)
    }

    /// `{v : m v ∈ self}`.
    pub fn preimage(&self, m: &QMatrix) -> Self {
        let ann = self.annihilator();
        if ann.rows.is_empty() {
            return Self::whole(self.n);
        }
        let conditions = QMatrix::from_rows(&ann.rows).matmul(m);
        Self::span(self.n, &conditions.nullspace())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberOutcome {
    /// Every step of the flag is forced: the fiber is a single point.
    Point,
    /// The bounds are contradictory: the fiber is empty.
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberCount {
    pub composition: Vec<usize>,
    pub seed: u64,
    pub jordan_type: Partition,
    pub count: u32,
}

/// Propagate flag bounds for `e` and dimensions `dims` (`dims[0] = 0`,
/// `dims[k] = n`).
pub fn flag_fiber(e: &QMatrix, dims: &[usize]) -> Result<FiberOutcome> {
    let n = e.rows();
    let k = dims.len() - 1;
    let mut lo: Vec<Subspace> = (0..=k).map(|i| Subspace::whole(n).image(&e.pow((k - i) as u32))).collect();
    let mut hi: Vec<Subspace> = (0..=k)
        .map(|i| Subspace::zero(n).preimage(&e.pow(i as u32)))
        .collect();
    lo[0] = Subspace::zero(n);
    hi[0] = Subspace::zero(n);
    lo[k] = Subspace::whole(n);
    hi[k] = Subspace::whole(n);
    loop {
        let before: Vec<(usize, usize)> = (0..=k).map(|i| (lo[i].dim(), hi[i].dim())).collect();
        for i in 1..k {
            lo[i] = lo[i].sum(&lo[i - 1]).sum(&lo[i + 1].image(e));
            hi[i] = hi[i].intersect(&hi[i + 1]).intersect(&hi[i - 1].preimage(e));
            if !hi[i].contains(&lo[i]) || lo[i].dim() > dims[i] || hi[i].dim() < dims[i] {
                return Ok(FiberOutcome::Empty);
            }
            if lo[i].dim() == dims[i] {
                hi[i] = lo[i].clone();
            } else if hi[i].dim() == dims[i] {
                lo[i] = hi[i].clone();
            }
        }
        let after: Vec<(usize, usize)> = (0..=k).map(|i| (lo[i].dim(), hi[i].dim())).collect();
        if after == before {
            break;
        }
    }
    if (1..k).all(|i| lo[i].dim() == dims[i]) {
        Ok(FiberOutcome::Point)
    } else {
        Err(Error::NonFiniteFiber)
    }
}

/// Fiber size of the Springer map of the type A parabolic with composition
/// `c`, over a random element of its nilradical.
pub fn generic_fiber_count(c: &[usize], seed: u64, caps: &Caps) -> Result<FiberCount> {
    let n: usize = c.iter().sum();
    if n > caps.fiber_max_n {
        return Err(Error::SizeCap {
            size: n,
            cap: caps.fiber_max_n,
        });
    }
    let (e, jt) = if c.len() == 1 {
        (QMatrix::zeros(n, n), Partition::new(vec![1; n]))
    } else {
        let basis = nilradical_basis(&Parabolic::from_composition(c)?)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_element(&basis, &mut rng);
        let jt = jordan_type(&e);
        (e, jt)
    };
    let mut dims = vec![0];
    for &ci in c {
        dims.push(dims.last().unwrap() + ci);
    }
    let count = match flag_fiber(&e, &dims)? {
        FiberOutcome::Point => 1,
        FiberOutcome::Empty => 0,
    };
    Ok(FiberCount {
        composition: c.to_vec(),
        seed,
        jordan_type: jt,
        count,
    })
}
