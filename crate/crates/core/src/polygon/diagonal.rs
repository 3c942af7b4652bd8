//! Constructive diagonal search for plane and cylinder polygons.
//!
//! Start at the lowest vertex `v` (lowest with respect to the direction
//! orthogonal to the cylinder generator) with neighbours `a` and `b`:
//! take `ab` if admissible; otherwise sweep a line parallel to `ab` from `v`
//! and stop at the first vertex; if the triangle `avb` is empty, shoot the
//! upward ray from `v` and rotate it to the first vertex it meets.

use std::cmp::Ordering;

use num::{Signed, Zero};

use super::EuclideanPolygon;
use crate::edges::{edge, EdgeSet};
use crate::error::{Error, Result};
use crate::kernel::{on_segment, orient, Pt, Scalar, SurfaceKind};

/// Height and horizontal position, both scaled by the generator length.
fn frame(poly: &EuclideanPolygon) -> Result<Pt> {
    match poly.kind() {
        SurfaceKind::Plane => Ok(Pt::ints(1, 0)),
        SurfaceKind::Cylinder => Ok(poly.group().primary_vector().clone()),
        k => Err(Error::UnsupportedKind(format!(
            "diagonal construction needs a plane or cylinder, got {k}"
        ))),
    }
}

fn in_closed_triangle(a: &Pt, b: &Pt, c: &Pt, p: &Pt) -> bool {
    let o1 = orient(a, b, p);
    let o2 = orient(b, c, p);
    let o3 = orient(c, a, p);
    (o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0)
}

/// Returns an admissible diagonal of the sub-polygon bounded by `cycle`, as base indices.
pub fn find_on(poly: &EuclideanPolygon, cycle: &[usize]) -> Result<(usize, usize)> {
    let dir = frame(poly)?;
    let m = cycle.len();
    if m < 4 {
        return Err(Error::Degenerate(format!(
            "a diagonal needs at least 4 vertices, got {m}"
        )));
    }
    let pts: Vec<&Pt> = cycle.iter().map(|&i| poly.vertex(i)).collect();
    let height = |p: &Pt| dir.cross(p);
    let across = |p: &Pt| dir.dot(p);
    let key = |x: usize| (height(pts[x]), across(pts[x]));
    let v = (0..m).min_by(|&x, &y| key(x).cmp(&key(y))).expect("nonempty");
    let (a, b) = ((v + m - 1) % m, (v + 1) % m);

    if poly.chord_ok(cycle[a], cycle[b]) {
        return Ok(edge(cycle[a], cycle[b]));
    }

    let inside: Vec<usize> = (0..m)
        .filter(|&x| x != a && x != b && x != v && in_closed_triangle(pts[a], pts[v], pts[b], pts[x]))
        .collect();
    if !inside.is_empty() {
        let ab = pts[b] - pts[a];
        let depth = |x: usize| ab.cross(&(pts[x] - pts[a])).abs();
        let best = inside
            .iter()
            .copied()
            .max_by(|&x, &y| depth(x).cmp(&depth(y)).then(cycle[y].cmp(&cycle[x])))
            .expect("nonempty");
        return checked(poly, cycle, v, best);
    }

    // Upward ray from v: first boundary point hit.
    let up = dir.perp();
    let origin = pts[v];
    let mut hit: Option<(Scalar, usize, Option<Scalar>)> = None;
    for e in 0..m {
        let f = (e + 1) % m;
        if e == v || f == v {
            continue;
        }
        let (p, q) = (pts[e], pts[f]);
        let pq = q - p;
        let denom = up.cross(&pq);
        let rel = p - origin;
        let candidates: Vec<(Scalar, Option<Scalar>)> = if denom.is_zero() {
            if !rel.cross(&up).is_zero() {
                continue;
            }
            // Collinear with the ray: the nearer endpoint is met first.
            [p, q]
                .iter()
                .map(|w| ((*w - origin).dot(&up) / up.norm2(), None))
                .collect()
        } else {
            let t = rel.cross(&pq) / &denom;
            let u = rel.cross(&up) / &denom;
            if u.is_negative() || u > Scalar::from_integer(1.into()) {
                continue;
            }
            vec![(t, Some(u))]
        };
        for (t, u) in candidates {
            if !t.is_positive() {
                continue;
            }
            if hit.as_ref().is_none_or(|(best, _, _)| t < *best) {
                hit = Some((t, e, u));
            }
        }
    }
    let (t, e, u) = hit.ok_or_else(|| Error::Construction("upward ray left the polygon".into()))?;
    let f = (e + 1) % m;
    match u {
        Some(u) if u.is_zero() => return checked(poly, cycle, v, e),
        Some(u) if u == Scalar::from_integer(1.into()) => return checked(poly, cycle, v, f),
        None => {
            let x = if (pts[e] - origin).dot(&up) <= (pts[f] - origin).dot(&up) {
                e
            } else {
                f
            };
            return checked(poly, cycle, v, x);
        }
        _ => {}
    }
    let cross_point = origin + &up.scale(&t);
    let mut found: Vec<usize> = vec![];
    for end in [e, f] {
        let side = orient(origin, &cross_point, pts[end]);
        let mut best: Option<usize> = None;
        for w in 0..m {
            if w == v || !in_closed_triangle(origin, &cross_point, pts[end], pts[w]) {
                continue;
            }
            best = Some(match best {
                None => w,
                Some(cur) => {
                    let o = orient(origin, pts[cur], pts[w]);
                    if o == side || (o == 0 && on_segment(origin, pts[w], pts[cur])) {
                        cur
                    } else {
                        w
                    }
                }
            });
        }
        if let Some(w) = best {
            if poly.chord_ok(cycle[v], cycle[w]) && !adjacent_in(cycle, v, w) {
                found.push(w);
            }
        }
    }
    let w = found
        .into_iter()
        .min_by(|&x, &y| cycle[x].cmp(&cycle[y]))
        .ok_or_else(|| Error::Construction("ray rotation found no admissible diagonal".into()))?;
    Ok(edge(cycle[v], cycle[w]))
}

fn adjacent_in(cycle: &[usize], x: usize, y: usize) -> bool {
    let m = cycle.len();
    (x + 1) % m == y || (y + 1) % m == x || x == y
}

fn checked(poly: &EuclideanPolygon, cycle: &[usize], x: usize, y: usize) -> Result<(usize, usize)> {
    if adjacent_in(cycle, x, y) || !poly.chord_ok(cycle[x], cycle[y]) {
        return Err(Error::Construction(format!(
            "chord ({}, {}) is not admissible",
            cycle[x], cycle[y]
        )));
    }
    Ok(edge(cycle[x], cycle[y]))
}

/// Recursive splitting along constructed diagonals.
pub fn triangulate_on(poly: &EuclideanPolygon, cycle: &[usize]) -> Result<EdgeSet> {
    if cycle.len() <= 3 {
        return Ok(EdgeSet::new());
    }
    let (i, j) = find_on(poly, cycle)?;
    let x = cycle.iter().position(|&c| c == i).expect("on cycle");
    let y = cycle.iter().position(|&c| c == j).expect("on cycle");
    let (x, y) = match x.cmp(&y) {
        Ordering::Less => (x, y),
        _ => (y, x),
    };
    let first: Vec<usize> = cycle[x..=y].to_vec();
    let second: Vec<usize> = cycle[y..].iter().chain(cycle[..=x].iter()).copied().collect();
    let mut out = triangulate_on(poly, &first)?.union(&triangulate_on(poly, &second)?);
    out.insert(i, j);
    Ok(out)
}
