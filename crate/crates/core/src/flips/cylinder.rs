//! Ear induction for plane and cylinder polygons.
//!
//! Two triangulations sharing a diagonal are handled independently on both
//! sides. Otherwise pick non-adjacent ears `v1` of the first and `v2` of the
//! second, build a triangulation containing both ears, and route both inputs
//! to it through the shared-diagonal case.

use super::{reverse_walk, FlipDomain, FlipMove};
use crate::edges::{edge, EdgeSet};
use crate::error::{Error, Result};
use crate::kernel::SurfaceKind;
use crate::polygon::{count_on, first_on, EuclideanPolygon, Triangulation};

/// Fills a sub-polygon with some triangulation.
pub(crate) type Filler<'a> = &'a dyn Fn(&EuclideanPolygon, &[usize]) -> Result<EdgeSet>;

pub(crate) fn restrict(d: &EdgeSet, cycle: &[usize]) -> EdgeSet {
    let m = cycle.len();
    let pos = |v: usize| cycle.iter().position(|&c| c == v);
    d.iter()
        .filter(|&(a, b)| match (pos(a), pos(b)) {
            (Some(x), Some(y)) => {
                let (x, y) = (x.min(y), x.max(y));
                y != x + 1 && !(x == 0 && y == m - 1)
            }
            _ => false,
        })
        .collect()
}

/// The two sub-cycles on either side of the chord between positions `x < y`.
pub(crate) fn split(cycle: &[usize], x: usize, y: usize) -> (Vec<usize>, Vec<usize>) {
    let first = cycle[x..=y].to_vec();
    let second = cycle[y..].iter().chain(cycle[..=x].iter()).copied().collect();
    (first, second)
}

pub(crate) fn ear_chord(cycle: &[usize], x: usize) -> (usize, usize) {
    let m = cycle.len();
    edge(cycle[(x + m - 1) % m], cycle[(x + 1) % m])
}

pub(crate) fn ears(cycle: &[usize], d: &EdgeSet) -> Vec<usize> {
    (0..cycle.len())
        .filter(|&x| {
            let (a, b) = ear_chord(cycle, x);
            d.contains(a, b)
        })
        .collect()
}

pub(crate) fn without(cycle: &[usize], x: usize) -> Vec<usize> {
    cycle
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != x)
        .map(|(_, &v)| v)
        .collect()
}

/// Flip walk between two triangulations of the sub-polygon `cycle`.
pub(crate) fn path_on(
    poly: &EuclideanPolygon,
    cycle: &[usize],
    d1: &EdgeSet,
    d2: &EdgeSet,
    fill: Filler<'_>,
) -> Result<Vec<FlipMove>> {
    let m = cycle.len();
    if d1 == d2 || m <= 3 {
        return Ok(vec![]);
    }
    if m == 4 {
        let (e, f) = (d1.as_slice()[0], d2.as_slice()[0]);
        return Ok(vec![FlipMove::new(e, f)]);
    }
    if let Some((a, b)) = d1.iter().find(|&(a, b)| d2.contains(a, b)) {
        let x = cycle.iter().position(|&c| c == a).expect("on cycle");
        let y = cycle.iter().position(|&c| c == b).expect("on cycle");
        let (first, second) = split(cycle, x.min(y), x.max(y));
        let mut out = path_on(poly, &first, &restrict(d1, &first), &restrict(d2, &first), fill)?;
        out.extend(path_on(
            poly,
            &second,
            &restrict(d1, &second),
            &restrict(d2, &second),
            fill,
        )?);
        return Ok(out);
    }
    let e1 = ears(cycle, d1);
    let e2 = ears(cycle, d2);
    let adjacent = |x: usize, y: usize| x == y || (x + 1) % m == y || (y + 1) % m == x;
    let (v1, v2) = e1
        .iter()
        .flat_map(|&x| e2.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| !adjacent(x, y))
        .ok_or_else(|| Error::Construction("no pair of non-overlapping ears".into()))?;
    // Target: ear at v2 (from the second input), ear at v1, anything in between.
    let reduced = without(cycle, v2);
    let v1_in_reduced = reduced.iter().position(|&c| c == cycle[v1]).expect("kept");
    let core = without(&reduced, v1_in_reduced);
    let mut target = fill(poly, &core)?;
    let (a1, b1) = ear_chord(cycle, v1);
    let (a2, b2) = ear_chord(cycle, v2);
    target.insert(a1, b1);
    target.insert(a2, b2);
    let forward = path_on(poly, cycle, d1, &target, fill)?;
    let backward = path_on(poly, cycle, d2, &target, fill)?;
    let mut out = forward;
    out.extend(reverse_walk(&backward));
    Ok(out)
}

/// Whether the ear induction is stuck at the top level: the two triangulations
/// share no diagonal, and no ear of the first together with a non-adjacent ear
/// of the second lies in a common triangulation.
pub fn ear_fixing_stalls(poly: &EuclideanPolygon, t1: &Triangulation, t2: &Triangulation) -> bool {
    let (d1, d2) = (&t1.diagonals, &t2.diagonals);
    let cycle: Vec<usize> = (0..poly.len()).collect();
    let m = cycle.len();
    if d1 == d2 || m <= 4 || d1.iter().any(|(a, b)| d2.contains(a, b)) {
        return false;
    }
    let adjacent = |x: usize, y: usize| x == y || (x + 1) % m == y || (y + 1) % m == x;
    let e2 = ears(&cycle, d2);
    !ears(&cycle, d1).into_iter().any(|v1| {
        e2.iter().any(|&v2| {
            if adjacent(v1, v2) {
                return false;
            }
            let reduced = without(&cycle, v2);
            let k = reduced.iter().position(|&c| c == v1).expect("kept");
            count_on(poly, &without(&reduced, k)) > 0
        })
    })
}

fn recursive_fill(poly: &EuclideanPolygon, cycle: &[usize]) -> Result<EdgeSet> {
    match poly.kind() {
        SurfaceKind::Plane | SurfaceKind::Cylinder => crate::polygon::triangulate_on(poly, cycle),
        _ => first_on(poly, cycle).ok_or(Error::NotTriangulable),
    }
}

pub(crate) fn any_fill(poly: &EuclideanPolygon, cycle: &[usize]) -> Result<EdgeSet> {
    recursive_fill(poly, cycle)
}

/// Constructive flip walk between two triangulations of a plane or cylinder polygon.
pub fn flip_path_cylinder(poly: &EuclideanPolygon, t1: &Triangulation, t2: &Triangulation) -> Result<Vec<FlipMove>> {
    if !matches!(poly.kind(), SurfaceKind::Plane | SurfaceKind::Cylinder) {
        return Err(Error::UnsupportedKind(format!(
            "cylinder flip path needs a plane or cylinder, got {}",
            poly.kind()
        )));
    }
    poly.validate_triangulation(&t1.diagonals)?;
    poly.validate_triangulation(&t2.diagonals)?;
    let cycle: Vec<usize> = (0..poly.len()).collect();
    let moves = path_on(poly, &cycle, &t1.diagonals, &t2.diagonals, &recursive_fill)?;
    poly.validate_walk(&t1.diagonals, &moves, &t2.diagonals)?;
    Ok(moves)
}
