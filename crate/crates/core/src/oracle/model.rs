use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{is_multiple_of, q, QMatrix, Q};
use crate::orbits::Partition;

use super::Caps;

/// A nilpotent element `e` of a matrix Lie algebra `g ⊆ gl_n`, with an
/// ordered basis of `g`.
#[derive(Debug, Clone)]
pub struct MatrixModel {
    pub n: usize,
    pub e: QMatrix,
    pub algebra: String,
    pub basis_g: Vec<QMatrix>,
}

/// Outcome of the linearised contact-form check at `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContactCheckResult {
    pub dim_orbit: usize,
    pub theta_kernel_dim: usize,
    pub omega_rank_on_kernel: usize,
    pub radical_dim: usize,
    pub radical_is_euler_line: bool,
    /// `κ(e, z) = 0` for every `z` centralising `e`, so `[e, x] ↦ κ(e, x)`
    /// is a well-defined functional on the tangent space.
    pub theta_well_defined: bool,
}

impl ContactCheckResult {
    pub fn is_nondegenerate(&self) -> bool {
        self.theta_well_defined
            && self.theta_kernel_dim + 1 == self.dim_orbit
            && self.omega_rank_on_kernel + 2 == self.dim_orbit
            && self.radical_is_euler_line
    }
}

/// Ordered basis of the trace-zero `n × n` matrices: `E_ij` (i ≠ j) in
/// row-major order, then `E_ii − E_{i+1,i+1}`.
pub fn sl_basis(n: usize) -> Vec<QMatrix> {
    let mut basis = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = QMatrix::zeros(n, n);
                m[(i, j)] = Q::one();
                basis.push(m);
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        let mut m = QMatrix::zeros(n, n);
        m[(i, i)] = Q::one();
        m[(i + 1, i + 1)] = -Q::one();
        basis.push(m);
    }
    basis
}

/// Block Jordan nilpotent of type `λ` (ones on the superdiagonal of each block).
pub fn jordan_matrix(lambda: &Partition) -> QMatrix {
    let n = lambda.total() as usize;
    let mut e = QMatrix::zeros(n, n);
    let mut offset = 0;
    for &part in lambda.parts() {
        let d = part as usize;
        for i in 0..d.saturating_sub(1) {
            e[(offset + i, offset + i + 1)] = Q::one();
        }
        offset += d;
    }
    e
}

pub fn jordan_nilpotent(lambda: &Partition, caps: &Caps) -> Result<MatrixModel> {
    let n = lambda.total() as usize;
    if n > caps.ad_rank_max_n {
        return Err(Error::SizeCap {
            size: n,
            cap: caps.ad_rank_max_n,
        });
    }
    Ok(MatrixModel::sl(jordan_matrix(lambda)))
}

/// Ranks of `x^0, x^1, …` until they hit zero; the Jordan type of a
/// nilpotent is read off from successive differences.
pub fn jordan_type(x: &QMatrix) -> Partition {
    let n = x.rows();
    let mut ranks = vec![n];
    let mut power = QMatrix::identity(n);
    while *ranks.last().unwrap() > 0 {
        power = power.matmul(x);
        let r = power.rank();
        assert!(
            r < *ranks.last().unwrap() || r == 0,
            "jordan_type called on a non-nilpotent matrix"
        );
        ranks.push(r);
    }
    // #blocks of size ≥ k is r_{k−1} − r_k, i.e. the dual partition.
    let dual: Vec<u32> = ranks.windows(2).map(|w| (w[0] - w[1]) as u32).collect();
    Partition::new(dual).dual()
}

/// Random `L·D·U` with unit triangular `L`, `U` and diagonal `D = ±1`, so
/// the inverse is integral too and conjugates keep integer entries.
pub fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> QMatrix {
    let mut l = QMatrix::identity(n);
    let mut u = QMatrix::identity(n);
    let mut d = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..i {
            l[(i, j)] = q(rng.gen_range(-1..=1));
            u[(j, i)] = q(rng.gen_range(-1..=1));
        }
        d[(i, i)] = q(if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    l.matmul(&d).matmul(&u)
}

impl MatrixModel {
    pub fn sl(e: QMatrix) -> Self {
        let n = e.rows();
        Self {
            n,
            e,
            algebra: format!("sl_{n}"),
            basis_g: sl_basis(n),
        }
    }

    pub fn dim_g(&self) -> usize {
        self.basis_g.len()
    }

    /// Conjugate `e` and the basis by `g`: `x ↦ g x g⁻¹`.
    pub fn conjugate(&self, g: &QMatrix) -> Self {
        let inv = g.inverse().expect("conjugating matrix is invertible");
        let conj = |x: &QMatrix| g.matmul(x).matmul(&inv);
        Self {
            n: self.n,
            e: conj(&self.e),
            algebra: self.algebra.clone(),
            basis_g: self.basis_g.iter().map(conj).collect(),
        }
    }

    pub fn scaled(&self, t: &Q) -> Self {
        Self {
            e: self.e.scale(t),
            ..self.clone()
        }
    }

    /// Is `e` nilpotent (`e^n = 0`)?
    pub fn is_nilpotent(&self) -> bool {
        self.e.pow(self.n as u32).is_zero()
    }

    /// Trace form `κ(x, y) = tr(xy)`.
    pub fn kappa(x: &QMatrix, y: &QMatrix) -> Q {
        let n = x.rows();
        let mut acc = Q::zero();
        for i in 0..n {
            for k in 0..n {
                let a = &x[(i, k)];
                if !a.is_zero() {
                    let b = &y[(k, i)];
                    if !b.is_zero() {
                        acc += a * b;
                    }
                }
            }
        }
        acc
    }

    fn ad_columns(&self) -> Vec<Vec<Q>> {
        self.basis_g
            .iter()
            .map(|b| self.e.commutator(b).flatten())
            .collect()
    }

    fn ad_matrix(&self) -> QMatrix {
        QMatrix::from_columns(self.n * self.n, &self.ad_columns())
    }

    /// `rank(ad_e)` on `g`, i.e. `dim [e, g] = dim O`.
    pub fn addim(&self) -> usize {
        self.ad_matrix().rank()
    }

    /// Rank of the skew form `(x, y) ↦ κ(e, [x, y])` on `g`.
    pub fn kks_rank(&self) -> usize {
        let m = self.dim_g();
        let mut form = QMatrix::zeros(m, m);
        for i in 0..m {
            for j in i + 1..m {
                let v = Self::kappa(&self.e, &self.basis_g[i].commutator(&self.basis_g[j]));
                form[(j, i)] = -v.clone();
                form[(i, j)] = v;
            }
        }
        form.rank()
    }

    pub fn contact_check(&self) -> Result<ContactCheckResult> {
        if self.e.is_zero() {
            return Err(Error::ZeroElement);
        }
        let ad = self.ad_matrix();
        let (_, pivots) = ad.rref();
        let reps: Vec<&QMatrix> = pivots.iter().map(|&k| &self.basis_g[k]).collect();
        let d = reps.len();

        // Well-definedness: κ(e, ·) vanishes on the centraliser.
        let theta_well_defined = ad.nullspace().iter().all(|z| {
            let centralising = combine(&self.basis_g, z);
            Self::kappa(&self.e, &centralising).is_zero()
        });

        let theta: Vec<Q> = reps.iter().map(|x| Self::kappa(&self.e, x)).collect();
        let kernel = QMatrix::from_rows(&[theta]).nullspace();
        let kdim = kernel.len();

        let mut omega = QMatrix::zeros(d, d);
        for i in 0..d {
            for j in i + 1..d {
                let v = Self::kappa(&self.e, &reps[i].commutator(reps[j]));
                omega[(j, i)] = -v.clone();
                omega[(i, j)] = v;
            }
        }
        let k = QMatrix::from_columns(d, &kernel);
        let restricted = k.transpose().matmul(&omega).matmul(&k);
        let rank = restricted.rank();

        let radical = restricted.nullspace();
        let e_flat = self.e.flatten();
        let radical_is_euler_line = radical.len() == 1 && {
            let coeffs = k.mul_vec(&radical[0]);
            let x = combine_refs(&reps, &coeffs);
            let tangent = self.e.commutator(&x).flatten();
            is_multiple_of(&tangent, &e_flat)
        };

        Ok(ContactCheckResult {
            dim_orbit: d,
            theta_kernel_dim: kdim,
            omega_rank_on_kernel: rank,
            radical_dim: radical.len(),
            radical_is_euler_line,
            theta_well_defined,
        })
    }
}

fn combine(basis: &[QMatrix], coeffs: &[Q]) -> QMatrix {
    let refs: Vec<&QMatrix> = basis.iter().collect();
    combine_refs(&refs, coeffs)
}

fn combine_refs(basis: &[&QMatrix], coeffs: &[Q]) -> QMatrix {
    let n = basis[0].rows();
    let mut acc = QMatrix::zeros(n, n);
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(parts: &[u32]) -> MatrixModel {
        jordan_nilpotent(&Partition::new(parts.to_vec()), &Caps::default()).unwrap()
    }

    #[test]
    fn jordan_examples() {
        let m = model(&[2]);
        assert_eq!(m.e, QMatrix::from_i64(&[&[0, 1], &[0, 0]]));
        let m = model(&[2, 1]);
        assert_eq!(m.e, QMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]));
        let m = model(&[4]);
        assert_eq!(m.e.pow(3).rank(), 1);
        assert!(m.is_nilpotent());
        assert!(jordan_nilpotent(&Partition::new(vec![9]), &Caps::default()).is_err());
    }

    #[test]
    fn basis_is_trace_zero_and_spanning() {
        for n in 2..=4 {
            let b = sl_basis(n);
            assert_eq!(b.len(), n * n - 1);
            assert!(b.iter().all(|m| m.trace().is_zero()));
            let flat: Vec<Vec<Q>> = b.iter().map(QMatrix::flatten).collect();
            assert_eq!(crate::linalg::rank_of(&flat, n * n), n * n - 1);
        }
    }

    #[test]
    fn addim_examples() {
        assert_eq!(model(&[2]).addim(), 2);
        assert_eq!(model(&[2, 1, 1]).addim(), 6);
        assert_eq!(model(&[2, 2]).addim(), 8);
    }

    #[test]
    fn kks_examples() {
        assert_eq!(model(&[2]).kks_rank(), 2);
        assert_eq!(model(&[2, 1]).kks_rank(), 4);
        assert_eq!(model(&[2, 2]).kks_rank(), 8);
    }

    #[test]
    fn contact_examples() {
        let r = model(&[2]).contact_check().unwrap();
        assert_eq!((r.dim_orbit, r.theta_kernel_dim, r.omega_rank_on_kernel), (2, 1, 0));
        assert!(r.radical_is_euler_line && r.is_nondegenerate());

        let r = model(&[3]).contact_check().unwrap();
        assert_eq!((r.dim_orbit, r.theta_kernel_dim, r.omega_rank_on_kernel), (6, 5, 4));
        assert!(r.is_nondegenerate());

        let r = model(&[2, 1]).contact_check().unwrap();
        assert_eq!((r.dim_orbit, r.theta_kernel_dim, r.omega_rank_on_kernel), (4, 3, 2));
        assert!(r.is_nondegenerate());

        assert_eq!(model(&[1, 1]).contact_check(), Err(Error::ZeroElement));
    }

    #[test]
    fn jordan_type_reads_back() {
        for parts in [vec![3, 1], vec![2, 2], vec![4], vec![1, 1, 1]] {
            let p = Partition::new(parts);
            assert_eq!(jordan_type(&jordan_matrix(&p)), p);
        }
    }
}
