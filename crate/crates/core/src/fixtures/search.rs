//! Seeded searches that produce the derived fixtures. Each search is
//! deterministic in its seed; the catalog stores the coordinates found here
//! and the tests re-run the searches to confirm them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::random::random_flat_torus_polygon;
use crate::edges::EdgeSet;
use crate::error::Result;
use crate::flips::{ear_fixing_stalls, FlipGraph};
use crate::kernel::{Pt, Scalar, SurfaceGroup};
use crate::pointset::{boundary_class_partition, PointSetTriangulation, SurfacePointSet};
use crate::polygon::EuclideanPolygon;

/// A search result together with the seed and the attempt that produced it.
#[derive(Clone, Debug)]
pub struct Found<T> {
    pub value: T,
    pub seed: u64,
    pub attempt: u64,
}

fn grid_point(rng: &mut ChaCha8Rng, grid: i64, x: (f64, f64), y: (f64, f64)) -> Pt {
    let snap = |v: f64| Scalar::new(((v * grid as f64).round() as i64).into(), grid.into());
    Pt::new(snap(rng.gen_range(x.0..x.1)), snap(rng.gen_range(y.0..y.1)))
}

fn graph_of(set: &SurfacePointSet, ts: &[PointSetTriangulation]) -> Result<FlipGraph> {
    FlipGraph::build(set, ts.iter().map(|t| t.edges.clone()).collect())
}

/// The boundary of the hexagon on points `0..6` (in cycle order) lies in every
/// triangulation and the flip graph has exactly two components.
pub fn hexagon_is_frozen(set: &SurfacePointSet) -> Result<bool> {
    let ts = set.enumerate_triangulations()?;
    if ts.is_empty() {
        return Ok(false);
    }
    let boundary = (0..6).all(|k| ts.iter().all(|t| t.edges.contains(k, (k + 1) % 6)));
    Ok(boundary && graph_of(set, &ts)?.components().groups.len() == 2)
}

/// Adds `extra` grid points in the window to `hexagon` until the hexagon is frozen.
pub fn frozen_hexagon_points(
    group: &SurfaceGroup,
    hexagon: &[Pt],
    extra: usize,
    window: ((f64, f64), (f64, f64)),
    grid: i64,
    seed: u64,
    budget: u64,
) -> Option<Found<Vec<Pt>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=budget {
        let mut pts = hexagon.to_vec();
        pts.extend((0..extra).map(|_| grid_point(&mut rng, grid, window.0, window.1)));
        let Ok(set) = SurfacePointSet::new(group.clone(), pts.clone()) else {
            continue;
        };
        if hexagon_is_frozen(&set).unwrap_or(false) {
            return Some(Found {
                value: pts,
                seed,
                attempt,
            });
        }
    }
    None
}

/// Number of boundary classes and of flip-graph components of a cylinder set
/// not in Euclidean position.
pub fn boundary_summary(set: &SurfacePointSet) -> Result<(usize, usize)> {
    let ts = set.enumerate_triangulations()?;
    let classes = boundary_class_partition(set, &ts)?.len();
    Ok((classes, graph_of(set, &ts)?.components().groups.len()))
}

/// A cylinder point set with at least two boundary classes.
pub fn two_boundary_points(n: usize, grid: i64, seed: u64, budget: u64) -> Option<Found<Vec<Pt>>> {
    let group = SurfaceGroup::cylinder(Pt::ints(1, 0)).expect("unit cylinder");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=budget {
        let pts: Vec<Pt> = (0..n)
            .map(|_| grid_point(&mut rng, grid, (0.0, 0.999), (0.0, 1.0)))
            .collect();
        let Ok(set) = SurfacePointSet::new(group.clone(), pts.clone()) else {
            continue;
        };
        if set.is_euclidean_position() != Ok(false) || !set.in_general_position() {
            continue;
        }
        if matches!(boundary_summary(&set), Ok((c, _)) if c >= 2) {
            return Some(Found {
                value: pts,
                seed,
                attempt,
            });
        }
    }
    None
}

/// Admissible diagonals of `poly` that lie in no triangulation.
pub fn orphan_diagonals(poly: &EuclideanPolygon) -> Result<Vec<(usize, usize)>> {
    let ts = poly.enumerate_triangulations()?;
    let used = ts.iter().fold(EdgeSet::new(), |acc, t| acc.union(&t.diagonals));
    Ok(poly
        .admissible_diagonals()
        .iter()
        .map(|d| (d.i, d.j))
        .filter(|&(i, j)| !used.contains(i, j))
        .collect())
}

/// A triangulable flat-torus pentagon with an admissible diagonal in no triangulation.
pub fn orphan_diagonal_pentagon(seed: u64, budget: u64) -> Option<Found<EuclideanPolygon>> {
    (seed..seed + budget).enumerate().find_map(|(k, s)| {
        let poly = random_flat_torus_polygon(5, s);
        let ok = poly.count_triangulations() > 0 && !orphan_diagonals(&poly).ok()?.is_empty();
        ok.then_some(Found {
            value: poly,
            seed: s,
            attempt: k as u64 + 1,
        })
    })
}

/// First pair of triangulations (by index) on which the ear induction stalls.
pub fn stalled_pair(poly: &EuclideanPolygon) -> Result<Option<(usize, usize)>> {
    let ts = poly.enumerate_triangulations()?;
    for a in 0..ts.len() {
        for b in a + 1..ts.len() {
            if ear_fixing_stalls(poly, &ts[a], &ts[b]) {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// A flat-torus polygon with `n` vertices and a pair of triangulations on which the ear induction stalls.
pub fn stalling_polygon(n: usize, seed: u64, budget: u64) -> Option<Found<EuclideanPolygon>> {
    (seed..seed + budget).enumerate().find_map(|(k, s)| {
        let poly = random_flat_torus_polygon(n, s);
        stalled_pair(&poly).ok()??;
        Some(Found {
            value: poly,
            seed: s,
            attempt: k as u64 + 1,
        })
    })
}
