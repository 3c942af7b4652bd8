//! Rotation systems and face walks of segment graphs on a surface.
//!
//! Every edge contributes two darts. The darts at a point are sorted by the
//! angle of their developed direction in the point's canonical frame. A face
//! walk keeps the face on its left; after an orientation-reversing step the
//! rotation at the next point is read backwards. States are (dart, parity)
//! pairs, and a walk and its mirror image describe the same face.

use serde::Serialize;

use num::Zero;

use super::SurfacePointSet;
use crate::edges::EdgeSet;
use crate::error::Result;
use crate::kernel::{angle_cmp, signed_area2, GroupElement, Pt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceKind {
    /// Closes up in the development and lies to the left of its walk.
    Bounded,
    /// Closes up in the development but is the outside of its walk.
    Unbounded,
    /// Returns to a different lift of its start: wraps around the surface.
    Essential,
}

/// One boundary walk of a face.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Face {
    /// Point indices in walk order.
    pub walk: Vec<usize>,
    /// Developed positions of the walk, starting from the first point's representative.
    #[serde(skip)]
    pub world: Vec<Pt>,
    /// Element carrying the start of the walk to where the walk ends.
    #[serde(skip)]
    pub holonomy: GroupElement,
    pub kind: FaceKind,
}

#[derive(Clone, Debug)]
struct Dart {
    from: usize,
    to: usize,
    element: GroupElement,
    vector: Pt,
}

pub(crate) struct Embedding<'a> {
    set: &'a SurfacePointSet,
    darts: Vec<Dart>,
    rotation: Vec<Vec<usize>>,
    slot: Vec<usize>,
}

impl<'a> Embedding<'a> {
    /// Edges must be segments of `set`.
    pub(crate) fn new(set: &'a SurfacePointSet, edges: &EdgeSet) -> Result<Self> {
        let group = set.group();
        let mut darts = Vec::with_capacity(2 * edges.len());
        for (i, j) in edges.iter() {
            let s = set.segment(i, j).expect("edge is a segment");
            let back = group.inverse(s.element);
            let back_start = group.element_motion(back)?.apply(set.point(i));
            darts.push(Dart {
                from: i,
                to: j,
                element: s.element,
                vector: &s.end - &s.start,
            });
            darts.push(Dart {
                from: j,
                to: i,
                element: back,
                vector: &back_start - set.point(j),
            });
        }
        let mut rotation = vec![vec![]; set.len()];
        for (d, dart) in darts.iter().enumerate() {
            rotation[dart.from].push(d);
        }
        let mut slot = vec![0; darts.len()];
        for list in rotation.iter_mut() {
            list.sort_by(|&a, &b| angle_cmp(&darts[a].vector, &darts[b].vector));
            for (k, &d) in list.iter().enumerate() {
                slot[d] = k;
            }
        }
        Ok(Embedding {
            set,
            darts,
            rotation,
            slot,
        })
    }

    /// Dart from `i` to `j`, if that edge is present.
    pub(crate) fn dart(&self, i: usize, j: usize) -> Option<usize> {
        self.rotation[i].iter().copied().find(|&d| self.darts[d].to == j)
    }

    pub(crate) fn element(&self, d: usize) -> GroupElement {
        self.darts[d].element
    }

    pub(crate) fn target(&self, d: usize) -> usize {
        self.darts[d].to
    }

    /// Developed direction of `d` in its start point's canonical frame.
    pub(crate) fn vector(&self, d: usize) -> &Pt {
        &self.darts[d].vector
    }

    /// Darts leaving `v`, counterclockwise in `v`'s canonical frame.
    pub(crate) fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    fn flips(&self, e: GroupElement) -> bool {
        self.set.group().parity(e)
    }

    /// Next state of a face walk.
    fn step(&self, d: usize, reversed: bool) -> (usize, bool) {
        let dart = &self.darts[d];
        let reversed = reversed ^ self.flips(dart.element);
        let list = &self.rotation[dart.to];
        let k = self.slot[d ^ 1];
        let deg = list.len();
        let next = if reversed {
            list[(k + 1) % deg]
        } else {
            list[(k + deg - 1) % deg]
        };
        (next, reversed)
    }

    /// Walk the face on the left of dart `d`, starting in `d`'s canonical frame.
    pub(crate) fn trace(&self, d0: usize) -> Result<Face> {
        let group = self.set.group();
        let (mut d, mut reversed, mut frame) = (d0, false, GroupElement::IDENTITY);
        let mut walk = vec![];
        let mut world = vec![];
        loop {
            let from = self.darts[d].from;
            walk.push(from);
            world.push(group.element_motion(frame)?.apply(self.set.point(from)));
            frame = group.compose(frame, self.darts[d].element);
            (d, reversed) = self.step(d, reversed);
            if d == d0 && !reversed {
                break;
            }
        }
        let kind = if !frame.is_identity() {
            FaceKind::Essential
        } else if signed_area2(&world) > Zero::zero() {
            FaceKind::Bounded
        } else {
            FaceKind::Unbounded
        };
        Ok(Face {
            walk,
            world,
            holonomy: frame,
            kind,
        })
    }

    /// One walk per face, each started from its least unreversed state.
    pub(crate) fn faces(&self) -> Result<Vec<Face>> {
        let states = 2 * self.darts.len();
        let index = |d: usize, r: bool| 2 * d + r as usize;
        let mut cycle_of = vec![usize::MAX; states];
        let mut cycles: Vec<Vec<usize>> = vec![];
        for start in 0..states {
            if cycle_of[start] != usize::MAX {
                continue;
            }
            let id = cycles.len();
            let mut members = vec![];
            let (mut d, mut r) = (start / 2, start % 2 == 1);
            loop {
                let s = index(d, r);
                if cycle_of[s] != usize::MAX {
                    break;
                }
                cycle_of[s] = id;
                members.push(s);
                (d, r) = self.step(d, r);
            }
            cycles.push(members);
        }
        // The mirror of state (d, r) is the reverse dart with the other parity.
        let mirror = |s: usize| index((s / 2) ^ 1, s.is_multiple_of(2));
        let mut out = vec![];
        for (id, members) in cycles.iter().enumerate() {
            // Unreversed states first, so the kept walk always has one to start from.
            let key = |s: usize| (s % 2, s / 2);
            let least = members
                .iter()
                .flat_map(|&s| [s, mirror(s)])
                .min_by_key(|&s| key(s))
                .expect("nonempty cycle");
            if cycle_of[least] != id {
                continue;
            }
            let start = members
                .iter()
                .copied()
                .filter(|s| s % 2 == 0)
                .min()
                .expect("an unreversed state");
            out.push(self.trace(start / 2)?);
        }
        Ok(out)
    }
}
