//! Maximal non-crossing segment sets by Bron-Kerbosch on the compatibility graph.

use super::embed::{Embedding, FaceKind};
use super::{PointSetTriangulation, SurfacePointSet};
use crate::edges::EdgeSet;
use crate::error::{Error, Result};

/// Largest point set accepted by exhaustive enumeration.
pub const DEFAULT_POINT_SET_BOUND: usize = 12;

struct Search<'a> {
    compatible: Vec<u128>,
    found: &'a mut Vec<u128>,
}

impl Search<'_> {
    fn expand(&mut self, chosen: u128, mut open: u128, mut closed: u128) {
        if open == 0 && closed == 0 {
            self.found.push(chosen);
            return;
        }
        let pivot = bits(open | closed)
            .max_by_key(|&u| (open & self.compatible[u]).count_ones())
            .expect("open or closed is nonempty");
        for v in bits(open & !self.compatible[pivot]) {
            let bit = 1u128 << v;
            let c = self.compatible[v];
            self.expand(chosen | bit, open & c, closed & c);
            open &= !bit;
            closed |= bit;
        }
    }
}

fn bits(mask: u128) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&k| mask >> k & 1 == 1)
}

/// Every maximal compatible subset of the candidate segments, as bit masks.
pub(crate) fn maximal_sets(set: &SurfacePointSet) -> Vec<u128> {
    let m = set.candidate_segments().len();
    let all = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
    let compatible = (0..m).map(|k| all & !set.conflict_mask(k) & !(1u128 << k)).collect();
    let mut found = vec![];
    Search {
        compatible,
        found: &mut found,
    }
    .expand(0, all, 0);
    found
}

pub(crate) fn enumerate(set: &SurfacePointSet, bound: usize) -> Result<Vec<PointSetTriangulation>> {
    if set.len() > bound {
        return Err(Error::SizeBound { size: set.len(), bound });
    }
    let mut out = vec![];
    for mask in maximal_sets(set) {
        let edges: EdgeSet = bits(mask).map(|k| set.candidate_segments()[k]).collect();
        let faces = Embedding::new(set, &edges)?.faces()?;
        if faces.iter().all(|f| f.kind != FaceKind::Bounded || f.walk.len() == 3) {
            out.push(PointSetTriangulation { edges, faces });
        }
    }
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    Ok(out)
}
