//! Richardson orbits of parabolics.
//!
//! Type A: the orbit of the parabolic with block composition `c` has the
//! transpose of `c` (sorted) as its partition. Types B/C/D: induce the zero
//! orbit of the Levi one `GL` block at a time (add 2 to the first `p` parts,
//! then collapse to the nearest valid partition). Exceptional types: the
//! curated table, plus the Borel, whose Richardson orbit is the regular one.

use crate::error::{Error, Result};
use crate::lie::{Family, Parabolic};
use crate::oracle::nilradical::block_sizes;
use crate::orbits::{validate_orbit, ExceptionalTable, OrbitLabel, Partition, RawOrbit, VeryEvenTag};

/// Richardson orbit of the type A parabolic with block composition `c`.
pub fn type_a_richardson(c: &[usize]) -> Partition {
    let mut sorted: Vec<u32> = c.iter().map(|&x| x as u32).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(sorted).dual()
}

/// Parity whose parts must come with even multiplicity: even for the
/// orthogonal families, odd for the symplectic one.
fn restricted_parity(family: Family) -> u32 {
    match family {
        Family::C => 1,
        _ => 0,
    }
}

/// Largest partition of the given family dominated by `parts`.
pub fn collapse(parts: &[u32], family: Family) -> Partition {
    let parity = restricted_parity(family);
    let mut p: Vec<u32> = Partition::new(parts.to_vec()).parts().to_vec();
    loop {
        let bad = p
            .iter()
            .copied()
            .filter(|&x| x % 2 == parity && p.iter().filter(|&&y| y == x).count() % 2 == 1)
            .max();
        let Some(q) = bad else {
            return Partition::new(p);
        };
        let last = p.iter().rposition(|&x| x == q).expect("q occurs");
        p[last] -= 1;
        match p[last + 1..].iter().position(|&x| x + 1 < q) {
            Some(off) => p[last + 1 + off] += 1,
            None => p.push(1),
        }
        p.retain(|&x| x > 0);
    }
}

/// Induce the zero orbit of the Levi `gl_{c_1} × … × gl_{c_k} × g'` where `g'`
/// has natural dimension `middle`.
pub fn induce_from_zero(family: Family, gl_blocks: &[usize], middle: usize) -> Partition {
    let mut parts = vec![1u32; middle];
    for &b in gl_blocks.iter().rev() {
        if parts.len() < b {
            parts.resize(b, 0);
        }
        for x in parts.iter_mut().take(b) {
            *x += 2;
        }
        parts = collapse(&parts, family).parts().to_vec();
    }
    Partition::new(parts)
}

/// Richardson orbit of a parabolic.
pub fn richardson_partition(p: &Parabolic) -> Result<OrbitLabel> {
    let t = p.simple_type();
    if p.marked().is_empty() {
        return Err(Error::EmptyMarking);
    }
    match t.family() {
        Family::A => {
            let c = p.composition().expect("type A");
            OrbitLabel::type_a(type_a_richardson(&c).parts().to_vec())
        }
        Family::B | Family::C | Family::D => {
            let blocks = block_sizes(p)?;
            let natural = t.natural_dimension().expect("classical");
            let half = blocks.len() / 2;
            let gl = &blocks[..half];
            let middle = natural - 2 * gl.iter().sum::<usize>();
            let partition = induce_from_zero(t.family(), gl, middle);
            let very_even = partition.parts().iter().all(|x| x % 2 == 0)
                && partition.multiplicities().values().all(|m| m % 2 == 0);
            let tag = if t.family() == Family::D && very_even {
                // Tag I for the Lagrangian family of the last node, II for the other.
                let n = t.rank();
                Some(if p.marked().contains(&n) {
                    VeryEvenTag::I
                } else {
                    VeryEvenTag::II
                })
            } else {
                None
            };
            validate_orbit(t, RawOrbit::Parts(partition.parts().to_vec(), tag))
        }
        _ => {
            let table = ExceptionalTable::shipped();
            let marks: Vec<usize> = p.marked().iter().copied().collect();
            let full = marks.len() == t.rank();
            let hit = table.entries_for(t).find(|e| {
                (full && u64::from(e.dimension) == 2 * t.positive_root_count() as u64)
                    || e.polarizations.iter().any(|q| q.marked == marks)
            });
            match hit {
                Some(e) => validate_orbit(t, RawOrbit::Key(e.key.clone())),
                None => Err(Error::UnsupportedType(format!(
                    "no Richardson data for {p} in table {}",
                    table.version
                ))),
            }
        }
    }
}
