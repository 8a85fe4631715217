use petgraph::graphmap::UnGraphMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::Parabolic;
use crate::orbits::OrbitLabel;
use crate::resolutions::polarizations;

use super::{ample_cone, RationalCone};

#[derive(Debug, Clone, Serialize)]
pub struct Chamber {
    pub label: String,
    pub parabolic: Parabolic,
    pub composition: Option<Vec<usize>>,
    /// In this parabolic's own `ϖ` basis.
    pub ample_cone: RationalCone,
}

/// Swap of the blocks at `position` and `position + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WallCrossing {
    pub position: usize,
    pub swapped: (usize, usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct Wall {
    pub chamber_a: String,
    pub chamber_b: String,
    pub crossing: WallCrossing,
}

/// Chambers of the movable cone (one ample cone per equivalent parabolic)
/// and the walls between them. Only the combinatorial gluing is recorded;
/// there is no common linear embedding of the chambers.
#[derive(Debug, Clone, Serialize)]
pub struct ChamberComplex {
    pub orbit: OrbitLabel,
    pub chambers: Vec<Chamber>,
    pub walls: Vec<Wall>,
    pub connected: bool,
    pub linear_gluing_implemented: bool,
}

impl ChamberComplex {
    /// Number of walls touching chamber `i`.
    pub fn degree(&self, i: usize) -> usize {
        let label = &self.chambers[i].label;
        self.walls
            .iter()
            .filter(|w| &w.chamber_a == label || &w.chamber_b == label)
            .count()
    }
}

fn adjacent_transposition(a: &[usize], b: &[usize]) -> Option<WallCrossing> {
    if a.len() != b.len() {
        return None;
    }
    let diff: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    match diff[..] {
        [i, j] if j == i + 1 && a[i] == b[j] && a[j] == b[i] => Some(WallCrossing {
            position: i + 1,
            swapped: (a[i], a[j]),
        }),
        _ => None,
    }
}

pub fn movable_chambers(o: &OrbitLabel) -> Result<ChamberComplex> {
    let pols = polarizations(o)?;
    if pols.is_empty() {
        return Err(Error::NoPolarization(o.to_string()));
    }
    let mut chambers = Vec::with_capacity(pols.len());
    for p in pols {
        chambers.push(Chamber {
            label: p
                .composition
                .as_ref()
                .map(|c| c.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
                .unwrap_or_else(|| p.parabolic.to_string()),
            ample_cone: ample_cone(&p.parabolic)?,
            composition: p.composition,
            parabolic: p.parabolic,
        });
    }
    let mut walls = Vec::new();
    let mut graph = UnGraphMap::<usize, ()>::new();
    for i in 0..chambers.len() {
        graph.add_node(i);
        for j in i + 1..chambers.len() {
            let (Some(a), Some(b)) = (&chambers[i].composition, &chambers[j].composition) else {
                continue;
            };
            if let Some(crossing) = adjacent_transposition(a, b) {
                graph.add_edge(i, j, ());
                walls.push(Wall {
                    chamber_a: chambers[i].label.clone(),
                    chamber_b: chambers[j].label.clone(),
                    crossing,
                });
            }
        }
    }
    let connected = petgraph::algo::connected_components(&graph) == 1;
    Ok(ChamberComplex {
        orbit: o.clone(),
        chambers,
        walls,
        connected,
        linear_gluing_implemented: false,
    })
}
