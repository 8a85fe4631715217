use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

/// A partition stored as weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts into weakly decreasing order. Zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn dual(&self) -> Partition {
        let Some(&first) = self.0.first() else {
            return Partition(Vec::new());
        };
        Partition(
            (1..=first)
                .map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32)
                .collect(),
        )
    }

    /// Part → multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p) * u64::from(p)).sum()
    }

    pub fn count_odd(&self) -> u64 {
        self.0.iter().filter(|&&p| p % 2 == 1).count() as u64
    }

    /// Dominance order; `None` when incomparable or of different totals.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        if self.total() != other.total() {
            return None;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        let (mut ge, mut le) = (true, true);
        for i in 0..len {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            ge &= a >= b;
            le &= a <= b;
        }
        match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    /// Every distinct ordering of the parts, in lexicographic order.
    pub fn distinct_orderings(&self) -> Vec<Vec<u32>> {
        let mut items = self.0.clone();
        items.sort_unstable();
        let mut out = vec![items.clone()];
        while next_permutation(&mut items) {
            out.push(items.clone());
        }
        out
    }

    /// All partitions of `n`, reverse-lexicographic (largest first).
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(remaining)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// All compositions (ordered partitions) of `n`, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=remaining {
            cur.push(p);
            rec(remaining - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Lexicographic successor in place; `false` once the last ordering is reached.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_examples() {
        assert_eq!(Partition::new(vec![2, 1, 1]).dual().parts(), &[3, 1]);
        assert_eq!(Partition::new(vec![5]).dual().parts(), &[1, 1, 1, 1, 1]);
        assert_eq!(Partition::new(vec![3, 2, 1]).dual().parts(), &[3, 2, 1]);
    }

    #[test]
    fn canonical_order() {
        assert_eq!(Partition::new(vec![1, 2, 1]).parts(), &[2, 1, 1]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(compositions(6).len(), 32);
    }

    #[test]
    fn orderings() {
        let o = Partition::new(vec![3, 1]).distinct_orderings();
        assert_eq!(o, vec![vec![1, 3], vec![3, 1]]);
        assert_eq!(Partition::new(vec![2, 2]).distinct_orderings().len(), 1);
        assert_eq!(Partition::new(vec![3, 2, 1]).distinct_orderings().len(), 6);
    }

    #[test]
    fn dominance() {
        let a = Partition::new(vec![3, 1]);
        let b = Partition::new(vec![2, 2]);
        assert_eq!(a.dominance_cmp(&b), Some(Ordering::Greater));
        let c = Partition::new(vec![3, 1, 1, 1]);
        let d = Partition::new(vec![2, 2, 2]);
        assert_eq!(c.dominance_cmp(&d), None);
    }
}
