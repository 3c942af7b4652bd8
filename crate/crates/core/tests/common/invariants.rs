//! Invariant checks shared by the property tests and the acceptance run.
//! Each returns a description of the first violation.

use flipsurf::fixtures::random::{random_cylinder_polygon, random_flat_torus_polygon, random_points};
use flipsurf::flips::{FlipDomain, FlipGraph};
use flipsurf::kernel::{GroupElement, Line, Motion, Pt, SurfaceGroup, SurfaceKind};
use flipsurf::pointset::{FaceKind, SurfacePointSet};
use flipsurf::polygon::EuclideanPolygon;

pub type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn polygon(cylinder: bool, n: usize, seed: u64) -> EuclideanPolygon {
    if cylinder {
        random_cylinder_polygon(n, seed)
    } else {
        random_flat_torus_polygon(n, seed)
    }
}

pub fn polygon_graph(p: &EuclideanPolygon) -> FlipGraph {
    let keys = p
        .enumerate_triangulations()
        .unwrap()
        .into_iter()
        .map(|t| t.diagonals)
        .collect();
    FlipGraph::build(p, keys).unwrap()
}

/// Random grid points on the plane (0), unit cylinder (1) or unit torus (2), if in general position.
pub fn point_set(kind: u8, n: usize, seed: u64) -> Option<SurfacePointSet> {
    let group = match kind {
        0 => SurfaceGroup::plane(),
        1 => SurfaceGroup::cylinder(Pt::ints(1, 0)).unwrap(),
        _ => SurfaceGroup::torus(Pt::ints(1, 0), Pt::ints(0, 1)).unwrap(),
    };
    let height = if kind == 1 { 1.0 } else { 0.999 };
    let set = SurfacePointSet::new(group, random_points(n, seed, height)).ok()?;
    set.in_general_position().then_some(set)
}

pub fn point_set_graph(s: &SurfacePointSet) -> FlipGraph {
    let keys = s
        .enumerate_triangulations()
        .unwrap()
        .into_iter()
        .map(|t| t.edges)
        .collect();
    FlipGraph::build(s, keys).unwrap()
}

/// Flipping and flipping back returns the key; every flip lands on an enumerated key.
pub fn flips_closed<D: FlipDomain>(domain: &D, graph: &FlipGraph) -> Check {
    for key in graph.nodes() {
        for m in domain.legal_flips(key).map_err(|e| e.to_string())? {
            let next = domain.apply_flip(key, &m).map_err(|e| e.to_string())?;
            ensure(graph.index_of(&next).is_some(), || {
                format!("flip {m:?} leaves the enumeration")
            })?;
            let back = domain.apply_flip(&next, &m.inverse()).map_err(|e| e.to_string())?;
            ensure(&back == key, || format!("flip {m:?} is not undone by its inverse"))?;
        }
    }
    Ok(())
}

pub fn graph_symmetric(graph: &FlipGraph) -> Check {
    for i in 0..graph.len() {
        for (j, m) in graph.neighbors(i) {
            let back = graph.neighbors(*j).iter().find(|(k, _)| *k == i);
            ensure(back.is_some_and(|(_, r)| *r == m.inverse()), || {
                format!("edge {i}-{j} has no matching reverse")
            })?;
        }
    }
    Ok(())
}

/// V - E + bounded faces is one when the triangles form a disc and an unbounded
/// face is left, zero when the edges wrap a cylinder or cover the torus.
pub fn euler_counts(s: &SurfacePointSet) -> Check {
    for t in s.enumerate_triangulations().map_err(|e| e.to_string())? {
        let unbounded = t.faces.iter().any(|f| f.kind == FaceKind::Unbounded);
        let expected = if unbounded { 1 } else { 0 };
        ensure(t.euler_characteristic(s.len()) == expected, || {
            format!("Euler count off for {}", t.edges.label())
        })?;
        ensure(s.kind() != SurfaceKind::Plane || unbounded, || {
            "planar triangulation without outer face".into()
        })?;
    }
    Ok(())
}

pub fn sample_group(which: u8) -> SurfaceGroup {
    match which % 4 {
        0 => SurfaceGroup::cylinder(Pt::from_ratios((1, 1), (1, 3))).unwrap(),
        1 => SurfaceGroup::twisted_cylinder(Line::x_axis(), Pt::ints(1, 0)).unwrap(),
        2 => SurfaceGroup::torus(Pt::ints(1, 0), Pt::from_ratios((1, 2), (1, 1))).unwrap(),
        _ => SurfaceGroup::klein_bottle(Pt::ints(0, 2), Line::x_axis(), Pt::ints(1, 0)).unwrap(),
    }
}

/// Canonical form is a fixed point and does not change along the orbit.
pub fn canonical_form(g: &SurfaceGroup, p: &Pt, k1: i64, k2: i64) -> Check {
    let c = g.canonicalize(p).map_err(|e| e.to_string())?;
    ensure(g.canonicalize(c.rep()).as_ref() == Ok(&c), || {
        format!("{p:?} canonicalizes twice differently")
    })?;
    let k2 = if matches!(g.kind(), SurfaceKind::Torus | SurfaceKind::KleinBottle) {
        k2
    } else {
        0
    };
    let moved = g
        .element_motion(GroupElement::new(k1, k2))
        .map_err(|e| e.to_string())?
        .apply(p);
    ensure(g.canonicalize(&moved).as_ref() == Ok(&c), || {
        format!("{p:?} and its image by ({k1},{k2}) differ")
    })
}

/// A translation group moved by the linear part of `m`.
fn moved_group(g: &SurfaceGroup, m: &Motion) -> SurfaceGroup {
    match g.kind() {
        SurfaceKind::Cylinder => SurfaceGroup::cylinder(m.apply_linear(g.primary_vector())).unwrap(),
        SurfaceKind::Torus => {
            SurfaceGroup::torus(m.apply_linear(g.primary_vector()), m.apply_linear(g.secondary_vector())).unwrap()
        }
        other => panic!("no conjugate for {other}"),
    }
}

fn admissible_pairs(p: &EuclideanPolygon, relabel: impl Fn(usize) -> usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = p
        .admissible_diagonals()
        .iter()
        .map(|d| {
            let (a, b) = (relabel(d.i), relabel(d.j));
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort();
    out
}

/// Moving a polygon and its group by the same rigid motion keeps admissibility and counts.
pub fn motion_equivariance(p: &EuclideanPolygon, shift: (i64, i64), reflect: bool) -> Check {
    let t = Motion::translation(Pt::from_ratios((shift.0, 7), (shift.1, 7)));
    let m = if reflect {
        t.compose(&Motion::Reflection(Line::x_axis()))
    } else {
        t
    };
    let g2 = moved_group(p.group(), &m);
    let q = EuclideanPolygon::validate(g2.clone(), p.vertices().iter().map(|v| m.apply(v)).collect())
        .map_err(|e| format!("moved polygon rejected: {e}"))?;
    let image: Vec<_> = p
        .vertices()
        .iter()
        .map(|v| g2.canonicalize(&m.apply(v)).unwrap())
        .collect();
    let label = |k: usize| image.iter().position(|s| *s == q.surface_points()[k]).unwrap();
    ensure(admissible_pairs(&q, label) == admissible_pairs(p, |k| k), || {
        "admissible diagonals differ".into()
    })?;
    ensure(q.count_triangulations() == p.count_triangulations(), || {
        "triangulation counts differ".into()
    })
}
