//! Flip walks on the flat torus through ears at extreme vertices.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::cylinder::{any_fill, ear_chord, ears, path_on, restrict, without};
use super::{polygon_moves, reverse_walk, FlipDomain, FlipMove};
use crate::edges::EdgeSet;
use crate::error::{Error, Result};
use crate::polygon::{first_on, EuclideanPolygon, Triangulation};

fn require_flat(poly: &EuclideanPolygon) -> Result<()> {
    if poly.group().is_flat_torus() {
        Ok(())
    } else {
        Err(Error::UnsupportedKind(format!(
            "needs a flat torus, got {}",
            poly.kind()
        )))
    }
}

/// Ear induction: an extreme vertex (position in `cycle`) and a triangulation with an ear there.
fn extreme_ear_on(poly: &EuclideanPolygon, cycle: &[usize], d: &EdgeSet) -> Result<(usize, EdgeSet)> {
    let m = cycle.len();
    let labels = poly.extreme_on(cycle);
    if m == 4 {
        let mut options = vec![d.clone()];
        for (a, b) in [(0, 2), (1, 3)] {
            if poly.chord_ok(cycle[a], cycle[b]) {
                options.push([(cycle[a], cycle[b])].into_iter().collect());
            }
        }
        for option in options {
            if let Some(x) = ears(cycle, &option).into_iter().find(|&x| labels[x].any()) {
                return Ok((x, option));
            }
        }
        return Err(Error::Construction(
            "quadrilateral has no ear at an extreme vertex".into(),
        ));
    }
    for v in ears(cycle, d) {
        let reduced = without(cycle, v);
        let Ok((u, sub)) = extreme_ear_on(poly, &reduced, &restrict(d, &reduced)) else {
            continue;
        };
        let (a, b) = ear_chord(cycle, v);
        let mut full = sub.clone();
        full.insert(a, b);
        let u_pos = cycle.iter().position(|&c| c == reduced[u]).expect("kept");
        let neighbour = u_pos == (v + 1) % m || u_pos == (v + m - 1) % m;
        if !neighbour {
            if labels[u_pos].any() {
                return Ok((u_pos, full));
            }
            continue;
        }
        if labels[v].any() {
            return Ok((v, full));
        }
        // The ear at u in the smaller polygon leans on the chord ab; flipping it
        // towards v's tip turns u back into an ear.
        if !labels[u_pos].any() {
            continue;
        }
        let flipped = polygon_moves(poly, cycle, &full)
            .into_iter()
            .find(|mv| mv.removed == (a, b))
            .map(|mv| full.exchanged(mv.removed, mv.inserted));
        if let Some(f) = flipped {
            let (c, e) = ear_chord(cycle, u_pos);
            if f.contains(c, e) {
                return Ok((u_pos, f));
            }
        }
    }
    Err(Error::Construction("ear induction found no extreme ear".into()))
}

/// Exact search: an extreme vertex whose ear chord is admissible and whose removal leaves a triangulable polygon.
fn direct_extreme_ear(poly: &EuclideanPolygon, cycle: &[usize]) -> Option<(usize, EdgeSet)> {
    let labels = poly.extreme_on(cycle);
    (0..cycle.len()).filter(|&u| labels[u].any()).find_map(|u| {
        let (a, b) = ear_chord(cycle, u);
        if !poly.chord_ok(a, b) {
            return None;
        }
        let mut rest = first_on(poly, &without(cycle, u))?;
        rest.insert(a, b);
        Some((u, rest))
    })
}

/// An extreme vertex and a triangulation having an ear at it.
pub fn extreme_earable_vertex(poly: &EuclideanPolygon) -> Result<(usize, Triangulation)> {
    require_flat(poly)?;
    if poly.len() < 4 {
        return Err(Error::Degenerate("ears need at least 4 vertices".into()));
    }
    let cycle: Vec<usize> = (0..poly.len()).collect();
    let start = first_on(poly, &cycle).ok_or(Error::NotTriangulable)?;
    let (u, d) = match extreme_ear_on(poly, &cycle, &start) {
        Ok(found) => found,
        Err(_) => direct_extreme_ear(poly, &cycle)
            .ok_or_else(|| Error::Construction("no extreme vertex carries an ear".into()))?,
    };
    let t = poly.validate_triangulation(&d)?;
    let (a, b) = ear_chord(&cycle, u);
    if !poly.extreme_vertices()[u].any() || !t.diagonals.contains(a, b) {
        return Err(Error::Construction(format!("vertex {u} is not an extreme ear")));
    }
    Ok((u, t))
}

/// Walk inside the star of `cycle[x]` to a triangulation with an ear there.
fn to_ear_on(poly: &EuclideanPolygon, cycle: &[usize], d: &EdgeSet, x: usize) -> Result<(Vec<FlipMove>, EdgeSet)> {
    let m = cycle.len();
    let (a, b) = ear_chord(cycle, x);
    if d.contains(a, b) || m <= 3 {
        return Ok((vec![], d.clone()));
    }
    let u = cycle[x];
    let star: Vec<usize> = (0..m)
        .map(|k| cycle[(x + k) % m])
        .filter(|&w| w == u || w == a || w == b || d.contains(u, w))
        .collect();
    let inside = restrict(d, &star);
    let mut target =
        first_on(poly, &star[1..]).ok_or_else(|| Error::Construction("star minus tip has no triangulation".into()))?;
    target.insert(a, b);
    let moves = path_on(poly, &star, &inside, &target, &any_fill)?;
    let mut out = d.clone();
    for e in inside.iter() {
        out.remove(e.0, e.1);
    }
    Ok((moves, out.union(&target)))
}

/// Flip walk from `t` to a triangulation with an ear at the extreme earable vertex `u`.
pub fn flip_to_extreme_ear(poly: &EuclideanPolygon, t: &Triangulation, u: usize) -> Result<Vec<FlipMove>> {
    require_flat(poly)?;
    poly.validate_triangulation(&t.diagonals)?;
    let earable = poly.earable_vertices()?;
    if u >= poly.len() || !earable.contains(&u) || !poly.extreme_vertices()[u].any() {
        return Err(Error::NotExtremeEarable(u));
    }
    let cycle: Vec<usize> = (0..poly.len()).collect();
    let (moves, end) = to_ear_on(poly, &cycle, &t.diagonals, u)?;
    poly.validate_walk(&t.diagonals, &moves, &end)?;
    Ok(moves)
}

/// How a flat-torus walk was assembled, one count per removed pivot vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TorusTrace {
    /// Pivots found by the ear induction at an extreme vertex.
    pub extreme_pivots: usize,
    /// Pivots at a non-extreme earable vertex, used when the induction stalls.
    pub other_pivots: usize,
    /// Sub-polygons finished by breadth-first search over their own flips.
    pub searched: usize,
}

/// Breadth-first search restricted to flips inside `cycle`.
fn search_on(poly: &EuclideanPolygon, cycle: &[usize], d1: &EdgeSet, d2: &EdgeSet) -> Option<Vec<FlipMove>> {
    let mut prev: HashMap<EdgeSet, Option<(EdgeSet, FlipMove)>> = HashMap::from([(d1.clone(), None)]);
    let mut queue = VecDeque::from([d1.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == d2 {
            let mut moves = vec![];
            let mut at = cur;
            while let Some(Some((from, mv))) = prev.get(&at) {
                moves.push(mv.clone());
                at = from.clone();
            }
            moves.reverse();
            return Some(moves);
        }
        for mv in polygon_moves(poly, cycle, &cur) {
            let next = cur.exchanged(mv.removed, mv.inserted);
            if !prev.contains_key(&next) {
                prev.insert(next.clone(), Some((cur.clone(), mv)));
                queue.push_back(next);
            }
        }
    }
    None
}

fn pivot_at(
    poly: &EuclideanPolygon,
    cycle: &[usize],
    d1: &EdgeSet,
    d2: &EdgeSet,
    x: usize,
    trace: &mut TorusTrace,
) -> Result<Vec<FlipMove>> {
    let (p1, e1) = to_ear_on(poly, cycle, d1, x)?;
    let (p2, e2) = to_ear_on(poly, cycle, d2, x)?;
    let reduced = without(cycle, x);
    let mid = torus_path_on(
        poly,
        &reduced,
        &restrict(&e1, &reduced),
        &restrict(&e2, &reduced),
        trace,
    )?;
    let mut out = p1;
    out.extend(mid);
    out.extend(reverse_walk(&p2));
    Ok(out)
}

fn torus_path_on(
    poly: &EuclideanPolygon,
    cycle: &[usize],
    d1: &EdgeSet,
    d2: &EdgeSet,
    trace: &mut TorusTrace,
) -> Result<Vec<FlipMove>> {
    if d1 == d2 || cycle.len() <= 3 {
        return Ok(vec![]);
    }
    if let Ok((x, _)) = extreme_ear_on(poly, cycle, d1) {
        let mut attempt = trace.clone();
        if let Ok(moves) = pivot_at(poly, cycle, d1, d2, x, &mut attempt) {
            *trace = attempt;
            trace.extreme_pivots += 1;
            return Ok(moves);
        }
    }
    let labels = poly.extreme_on(cycle);
    let mut order: Vec<usize> = (0..cycle.len())
        .filter(|&x| {
            let (a, b) = ear_chord(cycle, x);
            poly.chord_ok(a, b)
        })
        .collect();
    order.sort_by_key(|&x| !labels[x].any());
    for x in order {
        let mut attempt = trace.clone();
        if let Ok(moves) = pivot_at(poly, cycle, d1, d2, x, &mut attempt) {
            *trace = attempt;
            if labels[x].any() {
                trace.extreme_pivots += 1;
            } else {
                trace.other_pivots += 1;
            }
            return Ok(moves);
        }
    }
    let moves = search_on(poly, cycle, d1, d2).ok_or(Error::Disconnected)?;
    trace.searched += 1;
    Ok(moves)
}

/// Flip walk between two flat-torus triangulations plus a record of how it was built.
pub fn flip_path_flat_torus_traced(
    poly: &EuclideanPolygon,
    t1: &Triangulation,
    t2: &Triangulation,
) -> Result<(Vec<FlipMove>, TorusTrace)> {
    require_flat(poly)?;
    poly.validate_triangulation(&t1.diagonals)?;
    poly.validate_triangulation(&t2.diagonals)?;
    let cycle: Vec<usize> = (0..poly.len()).collect();
    let mut trace = TorusTrace::default();
    let moves = torus_path_on(poly, &cycle, &t1.diagonals, &t2.diagonals, &mut trace)?;
    poly.validate_walk(&t1.diagonals, &moves, &t2.diagonals)?;
    Ok((moves, trace))
}

/// Constructive flip walk between two triangulations of a flat-torus polygon.
pub fn flip_path_flat_torus(poly: &EuclideanPolygon, t1: &Triangulation, t2: &Triangulation) -> Result<Vec<FlipMove>> {
    flip_path_flat_torus_traced(poly, t1, t2).map(|(moves, _)| moves)
}
