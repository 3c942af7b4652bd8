//! Seeded generators for random polygons and point sets.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernel::{Pt, Scalar, SurfaceGroup};
use crate::polygon::EuclideanPolygon;

/// Denominator of every generated coordinate.
pub const GRID: i64 = 1000;

fn snap(v: f64) -> Scalar {
    Scalar::new(((v * GRID as f64).round() as i64).into(), GRID.into())
}

/// Star-shaped polygon around `centre` with per-axis radii, snapped to the grid.
fn star(rng: &mut ChaCha8Rng, n: usize, centre: (f64, f64), radii: (f64, f64), inner: f64) -> Vec<Pt> {
    let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
    angles.sort_by(|a, b| a.total_cmp(b));
    angles
        .into_iter()
        .map(|t| {
            let r = rng.gen_range(inner..1.0);
            Pt::new(
                snap(centre.0 + radii.0 * r * t.cos()),
                snap(centre.1 + radii.1 * r * t.sin()),
            )
        })
        .collect()
}

fn draw(
    seed: u64,
    n: usize,
    group: &SurfaceGroup,
    inner: f64,
    radii: impl Fn(&mut ChaCha8Rng) -> (f64, f64),
) -> (EuclideanPolygon, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    loop {
        attempts += 1;
        let r = radii(&mut rng);
        let vs = star(&mut rng, n, (0.5, 0.5), r, inner);
        if let Ok(p) = EuclideanPolygon::validate(group.clone(), vs) {
            return (p, attempts);
        }
    }
}

/// Random polygon on the unit cylinder (generator (1,0)) spanning up to almost a full turn.
pub fn random_cylinder_polygon(n: usize, seed: u64) -> EuclideanPolygon {
    let g = SurfaceGroup::cylinder(Pt::ints(1, 0)).expect("unit cylinder");
    draw(seed, n, &g, 0.35, |rng| {
        (rng.gen_range(0.3..0.49), rng.gen_range(0.2..0.8))
    })
    .0
}

/// Random polygon on the unit flat torus; wide draws are often not triangulable.
pub fn random_flat_torus_polygon(n: usize, seed: u64) -> EuclideanPolygon {
    random_flat_torus_polygon_with(n, seed, 0.6, (0.2, 0.49))
}

/// Flat-torus star polygon with radius factors in `[inner, 1)` and per-axis radii drawn from `radii`.
pub fn random_flat_torus_polygon_with(n: usize, seed: u64, inner: f64, radii: (f64, f64)) -> EuclideanPolygon {
    let g = SurfaceGroup::torus(Pt::ints(1, 0), Pt::ints(0, 1)).expect("unit torus");
    draw(seed, n, &g, inner, |rng| {
        (rng.gen_range(radii.0..radii.1), rng.gen_range(radii.0..radii.1))
    })
    .0
}

/// Random distinct grid points in the canonical domain `[0,1) x [0, height)`.
pub fn random_points(n: usize, seed: u64, height: f64) -> Vec<Pt> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Pt> = vec![];
    while out.len() < n {
        let p = Pt::new(snap(rng.gen_range(0.0..0.999)), snap(rng.gen_range(0.0..height)));
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}
