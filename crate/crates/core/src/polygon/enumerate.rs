//! Interval dynamic programming over boundary sub-chains.
//!
//! Every routine works on a `cycle`: a cyclic subsequence of the polygon's
//! vertex indices that bounds a sub-polygon cut out along admissible
//! diagonals. Chord admissibility inside such a sub-polygon coincides with
//! admissibility in the full polygon, so the cached matrix is reused.

use std::collections::HashSet;

use super::EuclideanPolygon;
use crate::edges::{edge, Edge, EdgeSet};

pub const DEFAULT_POLYGON_BOUND: usize = 14;

fn allowed(poly: &EuclideanPolygon, cycle: &[usize], x: usize, y: usize) -> bool {
    y == x + 1 || (x == 0 && y == cycle.len() - 1) || poly.chord_ok(cycle[x], cycle[y])
}

/// Diagonal contributed by the chord between positions `x < y` (none for cycle edges).
fn chord(cycle: &[usize], x: usize, y: usize) -> Option<Edge> {
    (y != x + 1 && !(x == 0 && y == cycle.len() - 1)).then(|| edge(cycle[x], cycle[y]))
}

/// Every triangulation of the sub-polygon, as sets of its inner diagonals.
pub fn enumerate_on(poly: &EuclideanPolygon, cycle: &[usize]) -> Vec<EdgeSet> {
    let m = cycle.len();
    if m < 3 {
        return vec![EdgeSet::new()];
    }
    let mut memo: Vec<Vec<Option<Vec<Vec<Edge>>>>> = vec![vec![None; m]; m];
    for x in 0..m - 1 {
        memo[x][x + 1] = Some(vec![vec![]]);
    }
    for len in 2..m {
        for x in 0..m - len {
            let y = x + len;
            let mut acc = vec![];
            for k in x + 1..y {
                if !allowed(poly, cycle, x, k) || !allowed(poly, cycle, k, y) {
                    continue;
                }
                let left = memo[x][k].as_ref().expect("shorter interval");
                let right = memo[k][y].as_ref().expect("shorter interval");
                if left.is_empty() || right.is_empty() {
                    continue;
                }
                for l in left {
                    for r in right {
                        let mut set = Vec::with_capacity(l.len() + r.len() + 2);
                        set.extend_from_slice(l);
                        set.extend_from_slice(r);
                        set.extend(chord(cycle, x, k));
                        set.extend(chord(cycle, k, y));
                        acc.push(set);
                    }
                }
            }
            memo[x][y] = Some(acc);
        }
    }
    let root = memo[0][m - 1].take().unwrap_or_default();
    let mut seen = HashSet::new();
    root.into_iter()
        .map(EdgeSet::from_iter)
        .filter(|s| seen.insert(s.clone()))
        .collect()
}

/// Number of triangulations of the sub-polygon.
pub fn count_on(poly: &EuclideanPolygon, cycle: &[usize]) -> u128 {
    let m = cycle.len();
    if m < 3 {
        return 1;
    }
    let mut memo = vec![vec![0u128; m]; m];
    for x in 0..m - 1 {
        memo[x][x + 1] = 1;
    }
    for len in 2..m {
        for x in 0..m - len {
            let y = x + len;
            memo[x][y] = (x + 1..y)
                .filter(|&k| allowed(poly, cycle, x, k) && allowed(poly, cycle, k, y))
                .map(|k| memo[x][k] * memo[k][y])
                .sum();
        }
    }
    memo[0][m - 1]
}

/// Some triangulation of the sub-polygon (lowest apex first), if one exists.
pub fn first_on(poly: &EuclideanPolygon, cycle: &[usize]) -> Option<EdgeSet> {
    let m = cycle.len();
    if m < 3 {
        return Some(EdgeSet::new());
    }
    let mut apex: Vec<Vec<Option<usize>>> = vec![vec![None; m]; m];
    let mut ok = vec![vec![false; m]; m];
    for x in 0..m - 1 {
        ok[x][x + 1] = true;
    }
    for len in 2..m {
        for x in 0..m - len {
            let y = x + len;
            apex[x][y] =
                (x + 1..y).find(|&k| ok[x][k] && ok[k][y] && allowed(poly, cycle, x, k) && allowed(poly, cycle, k, y));
            ok[x][y] = apex[x][y].is_some();
        }
    }
    if !ok[0][m - 1] {
        return None;
    }
    let mut out = vec![];
    let mut stack = vec![(0, m - 1)];
    while let Some((x, y)) = stack.pop() {
        if y <= x + 1 {
            continue;
        }
        let k = apex[x][y].expect("reachable interval");
        out.extend(chord(cycle, x, k));
        out.extend(chord(cycle, k, y));
        stack.push((x, k));
        stack.push((k, y));
    }
    Some(out.into_iter().collect())
}

/// Triangles of the outerplanar graph formed by the cycle and the diagonals among its vertices.
pub fn triangles_of(cycle: &[usize], diagonals: &EdgeSet) -> Vec<[usize; 3]> {
    let m = cycle.len();
    let has = |x: usize, y: usize| y == x + 1 || (x == 0 && y == m - 1) || diagonals.contains(cycle[x], cycle[y]);
    let mut out = vec![];
    for x in 0..m {
        for y in x + 1..m {
            if !has(x, y) {
                continue;
            }
            for z in y + 1..m {
                if has(y, z) && has(x, z) {
                    out.push([cycle[x], cycle[y], cycle[z]]);
                }
            }
        }
    }
    out
}
