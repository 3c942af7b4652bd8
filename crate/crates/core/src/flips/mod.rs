//! Edge flips, flip graphs and flip paths.

mod cylinder;
mod graph;
mod torus;

use serde::Serialize;

use crate::edges::{edge, Edge, EdgeSet};
use crate::error::{Error, Result};
use crate::kernel::segments_properly_cross;
use crate::polygon::{triangles_of, EuclideanPolygon};

pub use cylinder::{ear_fixing_stalls, flip_path_cylinder};
pub use graph::{Components, Connectivity, FlipGraph, GraphMetrics};
pub use torus::{
    extreme_earable_vertex, flip_path_flat_torus, flip_path_flat_torus_traced, flip_to_extreme_ear, TorusTrace,
};

/// Exchange of one diagonal of a quadrilateral for the other.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FlipMove {
    pub removed: Edge,
    pub inserted: Edge,
    /// Quadrilateral corners; `removed` joins entries 0 and 2, `inserted` joins 1 and 3.
    pub quad: [usize; 4],
}

impl FlipMove {
    pub fn new(removed: Edge, inserted: Edge) -> FlipMove {
        let removed = edge(removed.0, removed.1);
        let inserted = edge(inserted.0, inserted.1);
        FlipMove {
            removed,
            inserted,
            quad: [removed.0, inserted.0, removed.1, inserted.1],
        }
    }

    pub fn inverse(&self) -> FlipMove {
        FlipMove::new(self.inserted, self.removed)
    }
}

/// Anything whose triangulations are keyed by edge sets and can be flipped.
pub trait FlipDomain {
    /// All legal moves out of the triangulation with this key.
    fn legal_flips(&self, key: &EdgeSet) -> Result<Vec<FlipMove>>;

    /// Applies a move after checking that it is legal.
    fn apply_flip(&self, key: &EdgeSet, m: &FlipMove) -> Result<EdgeSet> {
        let legal = self.legal_flips(key)?;
        if !legal.iter().any(|l| l.removed == m.removed && l.inserted == m.inserted) {
            return Err(Error::IllegalFlip(m.removed));
        }
        Ok(key.exchanged(m.removed, m.inserted))
    }

    /// Replays a walk move by move and checks that it ends at `end`.
    fn validate_walk(&self, start: &EdgeSet, moves: &[FlipMove], end: &EdgeSet) -> Result<()> {
        let mut cur = start.clone();
        for m in moves {
            cur = self.apply_flip(&cur, m)?;
        }
        if &cur != end {
            return Err(Error::Construction(format!("walk ends at {cur:?}, expected {end:?}")));
        }
        Ok(())
    }
}

/// Legal moves for diagonal sets restricted to the sub-polygon `cycle`.
pub(crate) fn polygon_moves(poly: &EuclideanPolygon, cycle: &[usize], diagonals: &EdgeSet) -> Vec<FlipMove> {
    let triangles = triangles_of(cycle, diagonals);
    let mut out = vec![];
    for (i, j) in diagonals.iter() {
        let apexes: Vec<usize> = triangles
            .iter()
            .filter(|t| t.contains(&i) && t.contains(&j))
            .map(|t| *t.iter().find(|&&x| x != i && x != j).expect("three corners"))
            .collect();
        let [k, l] = apexes[..] else { continue };
        if !poly.chord_ok(k, l) || poly.are_adjacent(k, l) {
            continue;
        }
        if segments_properly_cross((poly.vertex(i), poly.vertex(j)), (poly.vertex(k), poly.vertex(l))) {
            out.push(FlipMove::new((i, j), (k, l)));
        }
    }
    out
}

impl FlipDomain for EuclideanPolygon {
    fn legal_flips(&self, key: &EdgeSet) -> Result<Vec<FlipMove>> {
        let cycle: Vec<usize> = (0..self.len()).collect();
        Ok(polygon_moves(self, &cycle, key))
    }
}

/// Reverses a walk: the moves in opposite order, each inverted.
pub fn reverse_walk(moves: &[FlipMove]) -> Vec<FlipMove> {
    moves.iter().rev().map(FlipMove::inverse).collect()
}

#[cfg(test)]
mod tests;
