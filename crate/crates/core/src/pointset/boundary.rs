//! Essential boundary chains on the cylinder, boundary classes, and flip
//! walks between triangulations sharing their boundary.
//!
//! A walk is built one target edge at a time. The triangles crossed by the
//! target edge form a channel polygon; inside it the target edge is reached
//! through the polygon flip path, and edges already matching the target are
//! never crossed again.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::embed::{Embedding, FaceKind};
use super::{PointSetTriangulation, SurfacePointSet};
use crate::edges::{edge, EdgeSet};
use crate::error::{Error, Result};
use crate::flips::{flip_path_cylinder, FlipDomain, FlipMove};
use crate::kernel::{angle_cmp, orient, segments_properly_cross, GroupElement, Pt, SurfaceKind};
use crate::polygon::{triangulate_on, EuclideanPolygon};

/// The two essential walks bounding a cylinder triangulation, both read in the
/// direction of the generator and rotated to their least form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BoundaryChains {
    pub upper: Vec<usize>,
    pub lower: Vec<usize>,
}

fn least_rotation(walk: &[usize]) -> Vec<usize> {
    (0..walk.len())
        .map(|k| walk[k..].iter().chain(walk[..k].iter()).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

fn require_cylinder(set: &SurfacePointSet) -> Result<()> {
    if set.kind() == SurfaceKind::Cylinder {
        Ok(())
    } else {
        Err(Error::UnsupportedKind(format!("needs a cylinder, got {}", set.kind())))
    }
}

/// Upper and lower essential chains; `EuclideanPosition` when the set has none.
pub fn boundary_chains(set: &SurfacePointSet, t: &PointSetTriangulation) -> Result<BoundaryChains> {
    require_cylinder(set)?;
    if set.is_euclidean_position()? {
        return Err(Error::EuclideanPosition);
    }
    let essential: Vec<_> = t.faces.iter().filter(|f| f.kind == FaceKind::Essential).collect();
    let upper: Vec<_> = essential
        .iter()
        .filter(|f| f.holonomy == GroupElement::new(1, 0))
        .collect();
    let lower: Vec<_> = essential
        .iter()
        .filter(|f| f.holonomy == GroupElement::new(-1, 0))
        .collect();
    if essential.len() != 2 || upper.len() != 1 || lower.len() != 1 {
        return Err(Error::Construction(format!(
            "expected two essential walks, found {}",
            essential.len()
        )));
    }
    let mut down = lower[0].walk.clone();
    down.reverse();
    Ok(BoundaryChains {
        upper: least_rotation(&upper[0].walk),
        lower: least_rotation(&down),
    })
}

/// Groups triangulation indices by boundary chains, in order of first appearance.
pub fn boundary_class_partition(set: &SurfacePointSet, ts: &[PointSetTriangulation]) -> Result<Vec<Vec<usize>>> {
    require_cylinder(set)?;
    let mut classes: Vec<(Option<BoundaryChains>, Vec<usize>)> = vec![];
    for (k, t) in ts.iter().enumerate() {
        let key = match boundary_chains(set, t) {
            Ok(c) => Some(c),
            Err(Error::EuclideanPosition) => None,
            Err(e) => return Err(e),
        };
        match classes.iter_mut().find(|(c, _)| c == &key) {
            Some((_, members)) => members.push(k),
            None => classes.push((key, vec![k])),
        }
    }
    Ok(classes.into_iter().map(|(_, m)| m).collect())
}

fn check_key(set: &SurfacePointSet, key: &EdgeSet) -> Result<()> {
    for (i, j) in key.iter() {
        if set.segment(i, j).is_none() {
            return Err(Error::InvalidTriangulation(format!("{i}-{j} is not a segment")));
        }
    }
    Ok(())
}

/// The flip of edge `i`-`j`, if both sides are triangles and the other diagonal is a segment crossing it.
fn flip_at(set: &SurfacePointSet, emb: &Embedding<'_>, key: &EdgeSet, i: usize, j: usize) -> Result<Option<FlipMove>> {
    let d = emb.dart(i, j).expect("edge present");
    let left = emb.trace(d)?;
    let right = emb.trace(d ^ 1)?;
    let triangle = |f: &super::Face| f.kind == FaceKind::Bounded && f.walk.len() == 3;
    if !triangle(&left) || !triangle(&right) {
        return Ok(None);
    }
    let (k, l) = (left.walk[2], right.walk[2]);
    if k == l || key.contains(k, l) || set.candidate_index(edge(k, l)).is_none() {
        return Ok(None);
    }
    let to_left_frame = set.group().element_motion(emb.element(d))?;
    let (a, b, apex) = (&left.world[0], &left.world[1], &left.world[2]);
    let other = to_left_frame.apply(&right.world[2]);
    let legal = segments_properly_cross((a, b), (apex, &other)) && set.group().realizes_segment(apex, &other)?;
    Ok(legal.then(|| FlipMove::new((i, j), (k, l))))
}

impl FlipDomain for SurfacePointSet {
    fn legal_flips(&self, key: &EdgeSet) -> Result<Vec<FlipMove>> {
        check_key(self, key)?;
        let emb = Embedding::new(self, key)?;
        let mut out = vec![];
        for (i, j) in key.iter() {
            out.extend(flip_at(self, &emb, key, i, j)?);
        }
        Ok(out)
    }

    fn apply_flip(&self, key: &EdgeSet, m: &FlipMove) -> Result<EdgeSet> {
        check_key(self, key)?;
        let (i, j) = m.removed;
        if !key.contains(i, j) {
            return Err(Error::IllegalFlip(m.removed));
        }
        let emb = Embedding::new(self, key)?;
        match flip_at(self, &emb, key, i, j)? {
            Some(legal) if legal.inserted == m.inserted => Ok(key.exchanged(m.removed, m.inserted)),
            _ => Err(Error::IllegalFlip(m.removed)),
        }
    }
}

/// How a same-boundary walk was assembled.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChannelTrace {
    /// Target edges inserted through their channel polygon.
    pub channels: usize,
    /// Remaining distance covered by breadth-first search.
    pub searched: usize,
}

#[derive(Clone, Debug)]
struct Corner {
    label: usize,
    frame: GroupElement,
    pos: Pt,
}

fn corner(set: &SurfacePointSet, emb: &Embedding<'_>, frame: GroupElement, d: usize) -> Result<Corner> {
    let group = set.group();
    let frame = group.compose(frame, emb.element(d));
    let label = emb.target(d);
    let pos = group.element_motion(frame)?.apply(set.point(label));
    Ok(Corner { label, frame, pos })
}

/// Flips inside the channel of `target` that make it an edge.
fn channel_moves(set: &SurfacePointSet, current: &EdgeSet, target: (usize, usize)) -> Result<Vec<FlipMove>> {
    let fail = |why: &str| Error::Construction(format!("channel of {target:?}: {why}"));
    let seg = set.segment(target.0, target.1).ok_or_else(|| fail("not a segment"))?;
    let (a, b) = (seg.start.clone(), seg.end.clone());
    let emb = Embedding::new(set, current)?;
    let around = emb.rotation(target.0);
    if around.is_empty() {
        return Err(fail("isolated endpoint"));
    }
    let w = &b - &a;
    if around.iter().any(|&d| angle_cmp(emb.vector(d), &w).is_eq()) {
        return Err(fail("overlaps an edge"));
    }
    let k = around
        .iter()
        .position(|&d| angle_cmp(emb.vector(d), &w).is_gt())
        .unwrap_or(0);
    let deg = around.len();
    let mut left = corner(set, &emb, GroupElement::IDENTITY, around[k])?;
    let mut right = corner(set, &emb, GroupElement::IDENTITY, around[(k + deg - 1) % deg])?;
    if orient(&a, &b, &left.pos) <= 0 || orient(&a, &b, &right.pos) >= 0 {
        return Err(fail("no triangle at the start"));
    }
    let mut left_chain = vec![left.clone()];
    let mut right_chain = vec![right.clone()];
    let mut crossed = vec![(right.label, left.label)];
    let limit = 4 * current.len() + 4;
    loop {
        if crossed.len() > limit {
            return Err(fail("does not terminate"));
        }
        let group = set.group();
        let motion = group.element_motion(left.frame)?;
        let ring = emb.rotation(left.label);
        let mut to_right = None;
        for (slot, &d) in ring.iter().enumerate() {
            if motion.apply(&(set.point(left.label) + emb.vector(d))) == right.pos {
                to_right = Some(slot);
            }
        }
        let slot = to_right.ok_or_else(|| fail("crossed edge missing"))?;
        let n = ring.len();
        let next = if group.parity(left.frame) {
            ring[(slot + n - 1) % n]
        } else {
            ring[(slot + 1) % n]
        };
        let apex = corner(set, &emb, left.frame, next)?;
        if apex.pos == b {
            if apex.label != target.1 {
                return Err(fail("reached the wrong endpoint"));
            }
            break;
        }
        match orient(&a, &b, &apex.pos) {
            1 => {
                crossed.push((right.label, apex.label));
                left = apex;
                left_chain.push(left.clone());
            }
            -1 => {
                crossed.push((apex.label, left.label));
                right = apex;
                right_chain.push(right.clone());
            }
            _ => return Err(fail("passes through a point")),
        }
    }
    let mut labels = vec![target.0];
    let mut positions = vec![a.clone()];
    for c in right_chain.iter().chain([&Corner {
        label: target.1,
        frame: GroupElement::IDENTITY,
        pos: b.clone(),
    }]) {
        if positions.last() != Some(&c.pos) {
            labels.push(c.label);
            positions.push(c.pos.clone());
        }
    }
    let top = positions.len() - 1;
    for c in left_chain.iter().rev() {
        if positions.last() != Some(&c.pos) {
            labels.push(c.label);
            positions.push(c.pos.clone());
        }
    }
    let poly = EuclideanPolygon::validate(set.group().clone(), positions.clone())?;
    if poly.vertices() != positions.as_slice() {
        return Err(fail("channel is not counterclockwise"));
    }
    let local: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let start: EdgeSet = crossed.iter().map(|&(x, y)| (local[&x], local[&y])).collect();
    let m = labels.len();
    let first: Vec<usize> = (0..=top).collect();
    let second: Vec<usize> = (top..m).chain([0]).collect();
    let mut goal = triangulate_on(&poly, &first)?.union(&triangulate_on(&poly, &second)?);
    goal.insert(0, top);
    let from = poly.validate_triangulation(&start)?;
    let to = poly.validate_triangulation(&goal)?;
    let moves = flip_path_cylinder(&poly, &from, &to)?;
    Ok(moves
        .iter()
        .map(|mv| {
            FlipMove::new(
                (labels[mv.removed.0], labels[mv.removed.1]),
                (labels[mv.inserted.0], labels[mv.inserted.1]),
            )
        })
        .collect())
}

/// Breadth-first walk through the flip graph of a point set.
fn search(set: &SurfacePointSet, from: &EdgeSet, to: &EdgeSet) -> Result<Option<Vec<FlipMove>>> {
    let mut prev: HashMap<EdgeSet, Option<(EdgeSet, FlipMove)>> = HashMap::from([(from.clone(), None)]);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == to {
            let mut moves = vec![];
            let mut at = cur;
            while let Some(Some((back, mv))) = prev.get(&at) {
                moves.push(mv.clone());
                at = back.clone();
            }
            moves.reverse();
            return Ok(Some(moves));
        }
        for mv in set.legal_flips(&cur)? {
            let next = cur.exchanged(mv.removed, mv.inserted);
            if !prev.contains_key(&next) {
                prev.insert(next.clone(), Some((cur.clone(), mv)));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// Flip walk between cylinder triangulations with equal boundary chains, with its assembly record.
pub fn flip_path_same_boundary_traced(
    set: &SurfacePointSet,
    t1: &PointSetTriangulation,
    t2: &PointSetTriangulation,
) -> Result<(Vec<FlipMove>, ChannelTrace)> {
    require_cylinder(set)?;
    let t1 = set.triangulation_from(&t1.edges)?;
    let t2 = set.triangulation_from(&t2.edges)?;
    match (boundary_chains(set, &t1), boundary_chains(set, &t2)) {
        (Ok(c1), Ok(c2)) if c1 != c2 => return Err(Error::DifferentBoundaries),
        (Ok(_), Ok(_)) | (Err(Error::EuclideanPosition), Err(Error::EuclideanPosition)) => {}
        (Err(e), _) | (_, Err(e)) => return Err(e),
    }
    let mut trace = ChannelTrace::default();
    let mut moves = vec![];
    let mut current = t1.edges.clone();
    for e in t2.edges.iter() {
        if current.contains(e.0, e.1) {
            continue;
        }
        let attempt = channel_moves(set, &current, e).and_then(|walk| {
            let mut cur = current.clone();
            for mv in &walk {
                cur = set.apply_flip(&cur, mv)?;
            }
            Ok((walk, cur))
        });
        match attempt {
            Ok((walk, cur)) if cur.contains(e.0, e.1) => {
                moves.extend(walk);
                current = cur;
                trace.channels += 1;
            }
            _ => break,
        }
    }
    if current != t2.edges {
        let rest = search(set, &current, &t2.edges)?.ok_or(Error::Disconnected)?;
        moves.extend(rest);
        trace.searched += 1;
    }
    set.validate_walk(&t1.edges, &moves, &t2.edges)?;
    Ok((moves, trace))
}

/// Flip walk between cylinder triangulations with equal boundary chains.
pub fn flip_path_same_boundary(
    set: &SurfacePointSet,
    t1: &PointSetTriangulation,
    t2: &PointSetTriangulation,
) -> Result<Vec<FlipMove>> {
    flip_path_same_boundary_traced(set, t1, t2).map(|(moves, _)| moves)
}
