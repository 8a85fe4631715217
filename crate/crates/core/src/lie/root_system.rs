use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use crate::linalg::{q, QMatrix};

use super::{Family, SimpleType};

/// Cartan matrix, positive roots and fundamental weights of a simple type.
///
/// Roots and weights are written in simple-root coordinates. Positive roots
/// are sorted by height, then reverse-lexicographically (so α1 precedes α2).
#[derive(Debug, Clone)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    fundamental_weights: QMatrix,
}

impl RootSystem {
    /// Process-wide shared instance; root systems are immutable once built.
    pub fn shared(t: SimpleType) -> Arc<RootSystem> {
        static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<RootSystem>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(rs) = cache.lock().expect("root system cache").get(&t) {
            return rs.clone();
        }
        let rs = Arc::new(RootSystem::new(t));
        cache
            .lock()
            .expect("root system cache")
            .entry(t)
            .or_insert(rs)
            .clone()
    }

    pub fn new(t: SimpleType) -> Self {
        let gram = scaled_gram(t);
        let n = t.rank();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let positive_roots = close_under_reflections(&cartan);
        let cm = QMatrix::from_rows(
            &cartan
                .iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect::<Vec<_>>(),
        );
        // ϖ_i = Σ_j c_ij α_j with Σ_j c_ij n_jk = δ_ik, i.e. C = N⁻¹.
        let fundamental_weights = cm.inverse().expect("Cartan matrix is invertible");
        Self {
            simple_type: t,
            cartan,
            positive_roots,
            fundamental_weights,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Row `i` is ϖ_{i+1} in simple-root coordinates.
    pub fn fundamental_weights(&self) -> &QMatrix {
        &self.fundamental_weights
    }

    /// `⟨β, α_i∨⟩` for β in simple-root coordinates (0-based `i`).
    pub fn coroot_pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter()
            .zip(&self.cartan)
            .map(|(b, row)| b * row[i])
            .sum()
    }

    pub fn height(beta: &[i64]) -> i64 {
        beta.iter().sum()
    }
}

/// Symmetric Gram matrix of the simple roots, scaled to integers.
fn scaled_gram(t: SimpleType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut g = vec![vec![0i64; n]; n];
    let edge = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    match t.family() {
        Family::A => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..n {
                edge(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            // α_n short.
            for i in 1..n {
                g[i - 1][i - 1] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 1..n {
                edge(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            // α_n long.
            for i in 1..n {
                g[i - 1][i - 1] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 1..n - 1 {
                edge(&mut g, i, i + 1, -1);
            }
            edge(&mut g, n - 1, n, -2);
        }
        Family::D => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..n - 1 {
                edge(&mut g, i, i + 1, -1);
            }
            edge(&mut g, n - 2, n, -1);
        }
        Family::E => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            edge(&mut g, 1, 3, -1);
            edge(&mut g, 2, 4, -1);
            for i in 3..n {
                edge(&mut g, i, i + 1, -1);
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            edge(&mut g, 1, 2, -2);
            edge(&mut g, 2, 3, -2);
            edge(&mut g, 3, 4, -1);
        }
        Family::G => {
            // α1 short.
            g[0][0] = 2;
            g[1][1] = 6;
            edge(&mut g, 1, 2, -3);
        }
    }
    g
}

/// All positive roots, generated from the simple roots by simple reflections
/// `s_i(β) = β − ⟨β, α_i∨⟩ α_i`.
fn close_under_reflections(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let pairing = |beta: &[i64], i: usize| -> i64 {
        beta.iter().zip(cartan).map(|(b, row)| b * row[i]).sum()
    };
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let c = pairing(&beta, i);
            if c == 0 {
                continue;
            }
            let mut image = beta.clone();
            image[i] -= c;
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut positive: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|r| r.iter().all(|&x| x >= 0))
        .collect();
    positive.sort_by(|a, b| {
        RootSystem::height(a)
            .cmp(&RootSystem::height(b))
            .then_with(|| b.cmp(a))
    });
    positive
}
