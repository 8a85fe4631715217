//! Nilradicals of standard parabolics as spaces of block strictly upper
//! triangular matrices, and the generic-Jordan-type oracle built on them.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{Family, Parabolic};
use crate::linalg::{q, QMatrix, Q};
use crate::orbits::Partition;

use super::model::jordan_type;
use super::Caps;

/// Block sizes of the flag stabilised by a standard parabolic in the natural
/// representation. For B/C/D the sizes are palindromic around the middle
/// orthogonal/symplectic block.
pub fn block_sizes(p: &Parabolic) -> Result<Vec<usize>> {
    let t = p.simple_type();
    let n = t.rank();
    if p.marked().is_empty() {
        return Err(Error::EmptyMarking);
    }
    if t.family() == Family::A {
        return Ok(p.composition().expect("type A"));
    }
    let mut marks: Vec<usize> = p.marked().iter().copied().collect();
    let mut middle_override = None;
    if t.family() == Family::D {
        let has = |m: usize, marks: &[usize]| marks.contains(&m);
        let low: Vec<usize> = marks.iter().copied().filter(|&m| m <= n - 2).collect();
        match (has(n - 1, &marks), has(n, &marks)) {
            (true, true) => {
                marks = low;
                marks.push(n - 1);
                middle_override = Some(2);
            }
            (true, false) | (false, true) => {
                // The two spinor nodes are exchanged by the diagram automorphism;
                // both give the Lagrangian flag up to an outer automorphism.
                marks = low;
                marks.push(n);
                middle_override = Some(0);
            }
            (false, false) => {}
        }
    }
    let natural = t.natural_dimension().ok_or_else(|| {
        Error::UnsupportedType(format!("{t} has no natural matrix representation"))
    })?;
    let mut gl = Vec::new();
    let mut prev = 0;
    for &m in &marks {
        gl.push(m - prev);
        prev = m;
    }
    let middle = middle_override.unwrap_or(natural - 2 * prev);
    let mut blocks = gl.clone();
    if middle > 0 {
        blocks.push(middle);
    }
    blocks.extend(gl.iter().rev());
    Ok(blocks)
}

fn block_index(blocks: &[usize]) -> Vec<usize> {
    blocks
        .iter()
        .enumerate()
        .flat_map(|(b, &s)| std::iter::repeat_n(b, s))
        .collect()
}

/// Antidiagonal invariant form: symmetric for B/D, skew for C.
fn antidiagonal_form(family: Family, n: usize) -> QMatrix {
    let mut j = QMatrix::zeros(n, n);
    for i in 0..n {
        j[(i, n - 1 - i)] = if family == Family::C && i >= n / 2 {
            -Q::one()
        } else {
            Q::one()
        };
    }
    j
}

/// Basis of the nilradical of `p` inside the natural representation.
pub fn nilradical_basis(p: &Parabolic) -> Result<Vec<QMatrix>> {
    let blocks = block_sizes(p)?;
    let idx = block_index(&blocks);
    let n = idx.len();
    let family = p.simple_type().family();
    let mut basis = Vec::new();
    if family == Family::A {
        for i in 0..n {
            for j in 0..n {
                if idx[i] < idx[j] {
                    let mut m = QMatrix::zeros(n, n);
                    m[(i, j)] = Q::one();
                    basis.push(m);
                }
            }
        }
        return Ok(basis);
    }
    let form = antidiagonal_form(family, n);
    let inv = form.inverse().expect("antidiagonal form is invertible");
    let skew_s = matches!(family, Family::B | Family::D);
    for a in 0..n {
        let start = if skew_s { a + 1 } else { a };
        for b in start..n {
            let mut s = QMatrix::zeros(n, n);
            s[(a, b)] = q(1);
            if a != b {
                s[(b, a)] = if skew_s { q(-1) } else { q(1) };
            }
            let x = inv.matmul(&s);
            let upper = (0..n).all(|i| {
                (0..n).all(|j| x[(i, j)].is_zero() || idx[i] < idx[j])
            });
            if upper {
                basis.push(x);
            }
        }
    }
    Ok(basis)
}

/// Bound on the absolute value of random coefficients.
pub const COEFFICIENT_BOUND: i64 = 99;

/// Random integer combination of a basis with nonzero coefficients in
/// `±1..=COEFFICIENT_BOUND`.
pub fn random_element(basis: &[QMatrix], rng: &mut ChaCha8Rng) -> QMatrix {
    let n = basis.first().map_or(0, QMatrix::rows);
    let mut acc = QMatrix::zeros(n, n);
    for b in basis {
        let mut c: i64 = rng.gen_range(1..=COEFFICIENT_BOUND);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        acc = acc.add(&b.scale(&q(c)));
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericJordan {
    pub parabolic: String,
    pub seeds: Vec<u64>,
    pub observed: Vec<Partition>,
    /// Dominance-maximal type among the observations.
    pub jordan_type: Partition,
    pub seeds_agree: bool,
}

pub const GENERIC_TRIALS: u64 = 3;

/// Seeds used for the three independent genericity trials.
pub fn trial_seeds(seed: u64) -> Vec<u64> {
    (0..GENERIC_TRIALS).map(|k| seed.wrapping_add(k)).collect()
}

/// Jordan type of a generic element of the nilradical of `p`, sampled with
/// three seeds.
pub fn generic_jordan_type_of(p: &Parabolic, seed: u64, caps: &Caps) -> Result<GenericJordan> {
    let basis = nilradical_basis(p)?;
    let n = block_sizes(p)?.iter().sum::<usize>();
    if n > caps.ad_rank_max_n {
        return Err(Error::SizeCap {
            size: n,
            cap: caps.ad_rank_max_n,
        });
    }
    let seeds = trial_seeds(seed);
    let observed: Vec<Partition> = seeds
        .iter()
        .map(|&s| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            jordan_type(&random_element(&basis, &mut rng))
        })
        .collect();
    let mut best = observed[0].clone();
    for o in &observed[1..] {
        if o.dominance_cmp(&best) == Some(Ordering::Greater) {
            best = o.clone();
        }
    }
    let seeds_agree = observed.iter().all(|o| *o == observed[0]);
    Ok(GenericJordan {
        parabolic: p.to_string(),
        seeds,
        observed,
        jordan_type: best,
        seeds_agree,
    })
}

/// Type A entry point: the parabolic with block composition `c`.
pub fn generic_jordan_type(c: &[usize], seed: u64, caps: &Caps) -> Result<GenericJordan> {
    let n: usize = c.iter().sum();
    if n > caps.ad_rank_max_n {
        return Err(Error::SizeCap {
            size: n,
            cap: caps.ad_rank_max_n,
        });
    }
    if c.len() == 1 {
        // The nilradical of the whole group is zero.
        let zero = Partition::new(vec![1; n]);
        return Ok(GenericJordan {
            parabolic: format!("gl_{n}"),
            seeds: trial_seeds(seed),
            observed: vec![zero.clone(); GENERIC_TRIALS as usize],
            jordan_type: zero,
            seeds_agree: true,
        });
    }
    generic_jordan_type_of(&Parabolic::from_composition(c)?, seed, caps)
}
