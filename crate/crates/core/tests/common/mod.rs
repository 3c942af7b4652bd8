//! Brute-force oracles shared by the integration tests. They only use the
//! public primitives (admissibility, segments, crossing tests, face tracing),
//! never the enumerators they are checked against.

#![allow(dead_code)]

pub mod invariants;

use flipsurf::pointset::{FaceKind, SurfacePointSet};
use flipsurf::polygon::{cyclic_chords_cross, EuclideanPolygon};
use flipsurf::EdgeSet;

/// Every (n-3)-subset of admissible diagonals that is pairwise non-crossing.
pub fn polygon_count(poly: &EuclideanPolygon) -> u128 {
    let diags: Vec<(usize, usize)> = poly.admissible_diagonals().iter().map(|d| (d.i, d.j)).collect();
    let need = poly.len() - 3;
    let mut count = 0;
    let mut chosen = Vec::with_capacity(need);
    choose(&diags, 0, need, &mut chosen, &mut count);
    count
}

fn choose(diags: &[(usize, usize)], from: usize, need: usize, chosen: &mut Vec<(usize, usize)>, count: &mut u128) {
    if chosen.len() == need {
        *count += 1;
        return;
    }
    for k in from..diags.len() {
        let (a, b) = diags[k];
        if chosen.iter().all(|&(c, d)| !cyclic_chords_cross(a, b, c, d)) {
            chosen.push((a, b));
            choose(diags, k + 1, need, chosen, count);
            chosen.pop();
        }
    }
}

/// Pairs of candidate segments whose lifts properly cross.
fn crossing_table(set: &SurfacePointSet) -> Vec<Vec<bool>> {
    let cands = set.candidate_segments();
    let pts = set.points();
    let m = cands.len();
    let mut table = vec![vec![false; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let (i, j) = cands[a];
            let (k, l) = cands[b];
            let cross = set
                .group()
                .surface_segments_cross((&pts[i], &pts[j]), (&pts[k], &pts[l]))
                .expect("candidates are segments");
            table[a][b] = cross;
            table[b][a] = cross;
        }
    }
    table
}

/// Include/exclude recursion over candidate segments: maximal non-crossing sets
/// whose bounded faces are all triangles. No candidate passes through a third
/// point, so a proper crossing is the only way two candidates can meet.
pub fn point_set_keys(set: &SurfacePointSet) -> Vec<EdgeSet> {
    let cands = set.candidate_segments().to_vec();
    let table = crossing_table(set);
    let mut out = vec![];
    let mut chosen = vec![];
    grow(set, &cands, &table, 0, &mut chosen, &mut out);
    out.sort();
    out
}

fn grow(
    set: &SurfacePointSet,
    cands: &[(usize, usize)],
    table: &[Vec<bool>],
    k: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<EdgeSet>,
) {
    if k == cands.len() {
        let maximal = (0..cands.len()).all(|c| chosen.contains(&c) || chosen.iter().any(|&d| table[c][d]));
        if !maximal {
            return;
        }
        let edges: EdgeSet = chosen.iter().map(|&c| cands[c]).collect();
        let faces = set.trace_faces(&edges).expect("faces trace");
        if faces.iter().all(|f| f.kind != FaceKind::Bounded || f.walk.len() == 3) {
            out.push(edges);
        }
        return;
    }
    if chosen.iter().all(|&d| !table[k][d]) {
        chosen.push(k);
        grow(set, cands, table, k + 1, chosen, out);
        chosen.pop();
    }
    // Leaving `k` out is only useful if something chosen later can block it.
    let blockable = chosen.iter().any(|&d| table[k][d]) || (k + 1..cands.len()).any(|c| table[k][c]);
    if blockable {
        grow(set, cands, table, k + 1, chosen, out);
    }
}
