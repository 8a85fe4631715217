//! Poincaré polynomials of `W/W_L`, i.e. of the flag variety `G/P`.
//!
//! Two independent routes: enumerating the Weyl orbit of `Σ_{i∈I} ϖ_i` by
//! length (small ranks), and the root-height product
//! `∏_{α ∈ Φ⁺ \ Φ⁺_L} [ht α + 1]_q / [ht α]_q`.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::RootSystem;

/// Ranks at or below this materialize the coset space explicitly.
pub const ENUMERATION_RANK_CAP: usize = 6;

/// Coefficients `b_0, b_1, …` of `Σ_k b_k q^k` (one coefficient per complex
/// dimension, so `b_k = dim H^{2k}(G/P)`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Poincare(pub Vec<u64>);

impl Poincare {
    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Value at `q = 1`, the number of Schubert cells `|W/W_L|`.
    pub fn at_one(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&c| c == 1)
    }
}

pub(super) fn by_heights(rs: &RootSystem, marked: &[usize]) -> Poincare {
    let mut num: BTreeMap<i64, i64> = BTreeMap::new();
    for root in rs.positive_roots() {
        if marked.iter().any(|&m| root[m - 1] != 0) {
            let h = RootSystem::height(root);
            *num.entry(h + 1).or_default() += 1;
            *num.entry(h).or_default() -= 1;
        }
    }
    let mut poly = vec![BigInt::from(1)];
    for (&m, &mult) in &num {
        if mult > 0 {
            for _ in 0..mult {
                poly = mul_q_integer(&poly, m as usize);
            }
        }
    }
    for (&m, &mult) in &num {
        if mult < 0 {
            for _ in 0..(-mult) {
                poly = div_q_integer(&poly, m as usize);
            }
        }
    }
    Poincare(
        poly.iter()
            .map(|c| c.to_u64().expect("Poincaré coefficient fits in u64"))
            .collect(),
    )
}

/// Lengths of minimal coset representatives, read off as BFS depth in the
/// Weyl orbit of `λ = Σ_{i∈I} ϖ_i` (whose stabilizer is `W_L`).
pub(super) fn by_enumeration(rs: &RootSystem, marked: &[usize]) -> Option<Poincare> {
    if rs.rank() > ENUMERATION_RANK_CAP {
        return None;
    }
    let n = rs.rank();
    // Weights in fundamental-weight coordinates; α_i = Σ_j n_ij ϖ_j.
    let cartan = rs.cartan_matrix();
    let mut start = vec![0i64; n];
    for &m in marked {
        start[m - 1] = 1;
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(start.clone());
    let mut layer = vec![start];
    let mut counts = Vec::new();
    while !layer.is_empty() {
        counts.push(layer.len() as u64);
        let mut next = Vec::new();
        for mu in &layer {
            for i in 0..n {
                let a = mu[i];
                if a <= 0 {
                    continue;
                }
                let image: Vec<i64> = (0..n).map(|j| mu[j] - a * cartan[i][j]).collect();
                if seen.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        layer = next;
    }
    Some(Poincare(counts))
}

/// Multiply by `[m]_q = 1 + q + … + q^{m−1}`.
fn mul_q_integer(p: &[BigInt], m: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + m - 1];
    for (i, c) in p.iter().enumerate() {
        for k in 0..m {
            out[i + k] += c;
        }
    }
    out
}

/// Exact division by `[m]_q`, via `(1 − q)/(1 − q^m)`.
fn div_q_integer(p: &[BigInt], m: usize) -> Vec<BigInt> {
    // p · (1 − q)
    let mut t = vec![BigInt::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        t[i] += c;
        t[i + 1] -= c;
    }
    // divide by (1 − q^m): out_k = t_k + out_{k−m}
    let deg = t.len() - m;
    let mut out = vec![BigInt::zero(); deg];
    for k in 0..deg {
        let prev = if k >= m { out[k - m].clone() } else { BigInt::zero() };
        out[k] = &t[k] + prev;
    }
    debug_assert!((deg..t.len()).all(|k| {
        let prev = if k >= m { out[k - m].clone() } else { BigInt::zero() };
        (&t[k] + prev).is_zero()
    }));
    out
}
