//! Point sets on surfaces: segments, Euclidean position, triangulations as
//! maximal non-crossing segment sets, traced faces and cylinder boundaries.

mod boundary;
mod embed;
mod enumerate;

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::edges::{edge, Edge, EdgeSet};
use crate::error::{Error, Result};
use crate::kernel::{
    on_segment, orient, segments_interfere, GroupElement, Pt, Scalar, SurfaceGroup, SurfaceKind, SurfacePoint,
};

pub use boundary::{
    boundary_chains, boundary_class_partition, flip_path_same_boundary, flip_path_same_boundary_traced, BoundaryChains,
    ChannelTrace,
};
pub use embed::{Face, FaceKind};
pub use enumerate::DEFAULT_POINT_SET_BOUND;

/// The segment joining two points of a set, realized from the first point's representative.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSegment {
    pub i: usize,
    pub j: usize,
    pub start: Pt,
    pub end: Pt,
    pub element: GroupElement,
    /// Some lift passes through a third point of the set.
    pub blocked: bool,
}

/// Distinct points of a surface.
#[derive(Clone, Debug)]
pub struct SurfacePointSet {
    group: SurfaceGroup,
    points: Vec<SurfacePoint>,
    general_position: bool,
    segments: BTreeMap<Edge, PointSegment>,
    /// `conflicts[a]` has bit `b` set when candidate segments `a` and `b` meet badly.
    candidates: Vec<Edge>,
    conflicts: Vec<u128>,
}

/// A triangulation of a point set: its edge key and traced faces.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSetTriangulation {
    pub edges: EdgeSet,
    pub faces: Vec<Face>,
}

impl PointSetTriangulation {
    pub fn bounded_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.kind == FaceKind::Bounded)
    }

    /// Vertices minus edges plus bounded faces.
    pub fn euler_characteristic(&self, points: usize) -> i64 {
        points as i64 - self.edges.len() as i64 + self.bounded_faces().count() as i64
    }
}

impl SurfacePointSet {
    pub fn new(group: SurfaceGroup, points: Vec<Pt>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::Degenerate("a point set needs at least 3 points".into()));
        }
        let points: Vec<SurfacePoint> = points.iter().map(|p| group.canonicalize(p)).collect::<Result<_>>()?;
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::RepeatedVertex(i, j));
                }
            }
        }
        let mut set = SurfacePointSet {
            group,
            points,
            general_position: true,
            segments: BTreeMap::new(),
            candidates: vec![],
            conflicts: vec![],
        };
        set.compute_segments()?;
        set.general_position = set.check_general_position()?;
        Ok(set)
    }

    fn compute_segments(&mut self) -> Result<()> {
        let n = self.points.len();
        for i in 0..n {
            for j in i + 1..n {
                if let Some(s) = self.group.segment_between(&self.points[i], &self.points[j])? {
                    let blocked = self.passes_through_point(&s.start, &s.end)?;
                    let seg = PointSegment {
                        i,
                        j,
                        start: s.start,
                        end: s.end,
                        element: s.element,
                        blocked,
                    };
                    self.segments.insert((i, j), seg);
                }
            }
        }
        self.candidates = self
            .segments
            .values()
            .filter(|s| !s.blocked)
            .map(|s| (s.i, s.j))
            .collect();
        let m = self.candidates.len();
        if m > 128 {
            return Err(Error::SizeBound { size: m, bound: 128 });
        }
        self.conflicts = vec![0; m];
        for a in 0..m {
            for b in a + 1..m {
                if self.segments_conflict(self.candidates[a], self.candidates[b])? {
                    self.conflicts[a] |= 1 << b;
                    self.conflicts[b] |= 1 << a;
                }
            }
        }
        Ok(())
    }

    fn passes_through_point(&self, start: &Pt, end: &Pt) -> Result<bool> {
        let mid = start.midpoint(end);
        let r2 = start.dist2(end);
        for p in &self.points {
            for (_, q) in self.group.lifts_within(p, &mid, &r2)? {
                if &q != start && &q != end && on_segment(start, end, &q) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    fn segments_conflict(&self, e1: Edge, e2: Edge) -> Result<bool> {
        let s1 = &self.segments[&e1];
        let s2 = &self.segments[&e2];
        for (_, a, b) in self
            .group
            .nearby_lifts_of_segment((&s1.start, &s1.end), (&s2.start, &s2.end))?
        {
            if segments_interfere((&s1.start, &s1.end), (&a, &b)) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn check_general_position(&self) -> Result<bool> {
        let n = self.points.len();
        for i in 0..n {
            let p = self.points[i].rep();
            let lifts: Vec<Pt> = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    self.group
                        .nearest_lifts(p, self.points[j].rep())
                        .map(|d| d.nearest_lift)
                })
                .collect::<Result<_>>()?;
            for a in 0..lifts.len() {
                for b in a + 1..lifts.len() {
                    if orient(p, &lifts[a], &lifts[b]) == 0 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn group(&self) -> &SurfaceGroup {
        &self.group
    }

    pub fn kind(&self) -> SurfaceKind {
        self.group.kind()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[SurfacePoint] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Pt {
        self.points[i].rep()
    }

    /// No three points have collinear nearest lifts.
    pub fn in_general_position(&self) -> bool {
        self.general_position
    }

    /// Pairs joined by a segment (unique shortest geodesic).
    pub fn admissible_point_segments(&self) -> Vec<Edge> {
        self.segments.keys().copied().collect()
    }

    pub fn segment(&self, i: usize, j: usize) -> Option<&PointSegment> {
        self.segments.get(&edge(i, j))
    }

    /// Segments usable as triangulation edges: admissible and through no third point.
    pub fn candidate_segments(&self) -> &[Edge] {
        &self.candidates
    }

    pub(crate) fn candidate_index(&self, e: Edge) -> Option<usize> {
        self.candidates.binary_search(&e).ok()
    }

    pub(crate) fn conflict_mask(&self, k: usize) -> u128 {
        self.conflicts[k]
    }

    /// Whether all points fit in half a turn (cylinder) or in an open quadrant (flat torus).
    pub fn is_euclidean_position(&self) -> Result<bool> {
        let coords: Vec<(Scalar, Scalar)> = self.points.iter().map(|p| self.group.coords(p.rep())).collect();
        match self.kind() {
            SurfaceKind::Cylinder => Ok(fits_half_circle(coords.iter().map(|c| c.0.clone()).collect())),
            SurfaceKind::Torus if self.group.is_flat_torus() => {
                Ok(fits_half_circle(coords.iter().map(|c| c.0.clone()).collect())
                    && fits_half_circle(coords.iter().map(|c| c.1.clone()).collect()))
            }
            other => Err(Error::UnsupportedKind(format!(
                "Euclidean position needs a cylinder or flat torus, got {other}"
            ))),
        }
    }

    /// Checks a candidate key and traces its faces.
    pub fn triangulation_from(&self, edges: &EdgeSet) -> Result<PointSetTriangulation> {
        let mut mask = 0u128;
        for (i, j) in edges.iter() {
            let k = self
                .candidate_index((i, j))
                .ok_or_else(|| Error::InvalidTriangulation(format!("{i}-{j} is not a usable segment")))?;
            if self.conflicts[k] & mask != 0 {
                let other = (0..self.candidates.len()).find(|&o| mask >> o & 1 == 1 && self.conflicts[k] >> o & 1 == 1);
                return Err(Error::CrossingEdges(
                    self.candidates[other.expect("conflict bit")],
                    (i, j),
                ));
            }
            mask |= 1 << k;
        }
        let free = (0..self.candidates.len()).find(|&k| mask >> k & 1 == 0 && self.conflicts[k] & mask == 0);
        if let Some(k) = free {
            let (i, j) = self.candidates[k];
            return Err(Error::InvalidTriangulation(format!(
                "not maximal: {i}-{j} can be added"
            )));
        }
        let faces = embed::Embedding::new(self, edges)?.faces()?;
        if let Some(f) = faces.iter().find(|f| f.kind == FaceKind::Bounded && f.walk.len() != 3) {
            return Err(Error::InvalidTriangulation(format!(
                "bounded face {:?} is not a triangle",
                f.walk
            )));
        }
        Ok(PointSetTriangulation {
            edges: edges.clone(),
            faces,
        })
    }

    /// All triangulations, sorted by key.
    pub fn enumerate_triangulations(&self) -> Result<Vec<PointSetTriangulation>> {
        self.enumerate_triangulations_bounded(DEFAULT_POINT_SET_BOUND)
    }

    pub fn enumerate_triangulations_bounded(&self, bound: usize) -> Result<Vec<PointSetTriangulation>> {
        enumerate::enumerate(self, bound)
    }

    /// Every maximal set of pairwise compatible candidate segments, triangular faces or not.
    pub fn maximal_segment_sets(&self) -> Vec<EdgeSet> {
        let mut out: Vec<EdgeSet> = enumerate::maximal_sets(self)
            .into_iter()
            .map(|mask| {
                (0..self.candidates.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| self.candidates[k])
                    .collect()
            })
            .collect();
        out.sort();
        out
    }

    /// Faces of an arbitrary non-crossing set of segments.
    pub fn trace_faces(&self, edges: &EdgeSet) -> Result<Vec<Face>> {
        for (i, j) in edges.iter() {
            if self.segment(i, j).is_none() {
                return Err(Error::InvalidTriangulation(format!("{i}-{j} is not a segment")));
            }
        }
        let list: Vec<Edge> = edges.iter().collect();
        for a in 0..list.len() {
            for b in a + 1..list.len() {
                let known = self.candidate_index(list[a]).zip(self.candidate_index(list[b]));
                let conflict = match known {
                    Some((ka, kb)) => self.conflicts[ka] >> kb & 1 == 1,
                    None => self.segments_conflict(list[a], list[b])?,
                };
                if conflict {
                    return Err(Error::CrossingEdges(list[a], list[b]));
                }
            }
        }
        embed::Embedding::new(self, edges)?.faces()
    }
}

/// Values in `[0, 1)` read on a circle of length one; true when some open half-circle holds them all.
fn fits_half_circle(mut values: Vec<Scalar>) -> bool {
    values.sort();
    let n = values.len();
    let one = Scalar::one();
    let mut widest_gap = Scalar::zero();
    for k in 0..n {
        let gap = if k + 1 < n {
            &values[k + 1] - &values[k]
        } else {
            &values[0] + &one - &values[n - 1]
        };
        if gap > widest_gap {
            widest_gap = gap;
        }
    }
    one - widest_gap < Scalar::new(1.into(), 2.into())
}
