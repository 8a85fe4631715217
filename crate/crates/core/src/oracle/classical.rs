//! Matrix models of nilpotent orbits in `so_N` and `sp_N`.
//!
//! The invariant form is assembled block by block from the Jordan type:
//! a single chain `v_0 → … → v_{d−1}` carries `(v_i, v_j) = (−1)^i δ_{i+j,d−1}`,
//! which is symmetric for odd `d` and skew for even `d`; parts of the other
//! parity come in pairs of chains paired against each other.

use num_traits::One;

use crate::error::{Error, Result};
use crate::lie::Family;
use crate::linalg::{q, QMatrix, Q};
use crate::orbits::{OrbitLabel, Partition};

use super::{Caps, MatrixModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FormKind {
    Symmetric,
    Skew,
}

/// Matrix model for a classical orbit of type B, C or D (type A falls back to
/// the `sl_n` Jordan model).
pub fn classical_model(o: &OrbitLabel, caps: &Caps) -> Result<MatrixModel> {
    let t = o.simple_type();
    let partition = o
        .partition()
        .ok_or_else(|| Error::UnsupportedType(format!("{t} has no matrix model")))?;
    let n = partition.total() as usize;
    if n > caps.ad_rank_max_n {
        return Err(Error::SizeCap {
            size: n,
            cap: caps.ad_rank_max_n,
        });
    }
    let kind = match t.family() {
        Family::A => return Ok(MatrixModel::sl(super::model::jordan_matrix(partition))),
        Family::B | Family::D => FormKind::Symmetric,
        Family::C => FormKind::Skew,
        _ => unreachable!("partitions label classical orbits only"),
    };
    let (form, e) = form_and_nilpotent(partition, kind);
    debug_assert!(preserves(&e, &form));
    let algebra = match kind {
        FormKind::Symmetric => format!("so_{n}"),
        FormKind::Skew => format!("sp_{n}"),
    };
    Ok(MatrixModel {
        n,
        e,
        algebra,
        basis_g: form_algebra_basis(&form, kind),
    })
}

/// Does `x` preserve the form, i.e. `xᵀJ + Jx = 0`?
pub fn preserves(x: &QMatrix, form: &QMatrix) -> bool {
    x.transpose().matmul(form).add(&form.matmul(x)).is_zero()
}

fn form_and_nilpotent(p: &Partition, kind: FormKind) -> (QMatrix, QMatrix) {
    let n = p.total() as usize;
    let mut form = QMatrix::zeros(n, n);
    let mut e = QMatrix::zeros(n, n);
    let sign = |i: usize| if i.is_multiple_of(2) { Q::one() } else { -Q::one() };
    let chain = |e: &mut QMatrix, off: usize, d: usize| {
        for i in 0..d - 1 {
            e[(off + i + 1, off + i)] = Q::one();
        }
    };
    let single_parity = match kind {
        FormKind::Symmetric => 1,
        FormKind::Skew => 0,
    };
    let eps = match kind {
        FormKind::Symmetric => Q::one(),
        FormKind::Skew => -Q::one(),
    };
    let mut off = 0;
    for (&d, &m) in p.multiplicities().iter().rev() {
        let d = d as usize;
        if d % 2 == single_parity {
            for _ in 0..m {
                chain(&mut e, off, d);
                for i in 0..d {
                    form[(off + i, off + d - 1 - i)] = sign(i);
                }
                off += d;
            }
        } else {
            for _ in 0..m / 2 {
                let (u, w) = (off, off + d);
                chain(&mut e, u, d);
                chain(&mut e, w, d);
                for i in 0..d {
                    let j = d - 1 - i;
                    form[(u + i, w + j)] = sign(i);
                    form[(w + j, u + i)] = &eps * sign(i);
                }
                off += 2 * d;
            }
        }
    }
    (form, e)
}

/// Basis `J⁻¹S` of `{x : xᵀJ + Jx = 0}`, with `S` running over skew (for a
/// symmetric form) or symmetric (for a skew form) elementary matrices.
fn form_algebra_basis(form: &QMatrix, kind: FormKind) -> Vec<QMatrix> {
    let n = form.rows();
    let inv = form.inverse().expect("invariant form is nondegenerate");
    let mut basis = Vec::new();
    for i in 0..n {
        let start = match kind {
            FormKind::Symmetric => i + 1,
            FormKind::Skew => i,
        };
        for j in start..n {
            let mut s = QMatrix::zeros(n, n);
            s[(i, j)] = q(1);
            if i != j {
                s[(j, i)] = match kind {
                    FormKind::Symmetric => q(-1),
                    FormKind::Skew => q(1),
                };
            }
            basis.push(inv.matmul(&s));
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::model::jordan_type;

    #[test]
    fn models_are_consistent() {
        for s in ["B2:2,2,1", "B3:3,1,1,1,1", "C2:2,2", "C3:3,3", "C3:4,1,1", "D4:2,2,2,2", "D4:3,3,1,1"] {
            let o = OrbitLabel::parse(s).unwrap();
            let m = classical_model(&o, &Caps::default()).unwrap();
            let t = o.simple_type();
            assert_eq!(m.dim_g(), t.dim_algebra(), "{s}");
            assert_eq!(&jordan_type(&m.e), o.partition().unwrap(), "{s}");
            let flat: Vec<Vec<Q>> = m.basis_g.iter().map(QMatrix::flatten).collect();
            assert_eq!(crate::linalg::rank_of(&flat, m.n * m.n), t.dim_algebra(), "{s}");
        }
    }
}
