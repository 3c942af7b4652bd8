use super::*;
use crate::kernel::{ratio, Pt, Scalar, SurfaceGroup};
use crate::polygon::EuclideanPolygon;

fn plane(vs: &[(i64, i64)]) -> EuclideanPolygon {
    EuclideanPolygon::validate(SurfaceGroup::plane(), vs.iter().map(|&(x, y)| Pt::ints(x, y)).collect()).unwrap()
}

fn convex(n: usize) -> EuclideanPolygon {
    let mut vs: Vec<(i64, i64)> = (0..n as i64 - 1).map(|i| (i, i * i)).collect();
    vs.push((0, (n as i64) * (n as i64) * 4));
    plane(&vs)
}

fn graph_of(poly: &EuclideanPolygon) -> FlipGraph {
    let keys = poly
        .enumerate_triangulations()
        .unwrap()
        .into_iter()
        .map(|t| t.diagonals)
        .collect();
    FlipGraph::build(poly, keys).unwrap()
}

fn skew_hexagon() -> EuclideanPolygon {
    let g = SurfaceGroup::torus(Pt::ints(1, 0), Pt::from_ratios((1, 2), (1, 1))).unwrap();
    let e = ratio(1, 10);
    let third = &e / Scalar::from_integer(3.into());
    let one = Scalar::from_integer(1.into());
    let (h, q, tq) = (ratio(1, 2), ratio(1, 4), ratio(3, 4));
    let vs = vec![
        Pt::new(&h + &e, tq.clone()),
        Pt::new(&h - &third, h.clone()),
        Pt::new(&h + &e, q.clone()),
        Pt::new(&one - &e, q),
        Pt::new(&one + &third, h),
        Pt::new(&one - &e, tq),
    ];
    EuclideanPolygon::validate(g, vs).unwrap()
}

type RatioPoint = ((i64, i64), (i64, i64));

fn flat_torus_polygon(vs: &[RatioPoint]) -> EuclideanPolygon {
    let g = SurfaceGroup::torus(Pt::ints(1, 0), Pt::ints(0, 1)).unwrap();
    EuclideanPolygon::validate(g, vs.iter().map(|&(x, y)| Pt::from_ratios(x, y)).collect()).unwrap()
}

#[test]
fn quad_flip_examples() {
    let quad = plane(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
    let t: EdgeSet = [(0, 2)].into_iter().collect();
    let moves = quad.legal_flips(&t).unwrap();
    assert_eq!(moves, vec![FlipMove::new((0, 2), (1, 3))]);
    let flipped = quad.apply_flip(&t, &moves[0]).unwrap();
    assert_eq!(flipped.label(), "1,3");
    assert_eq!(quad.apply_flip(&flipped, &moves[0].inverse()).unwrap(), t);
    assert_eq!(quad.apply_flip(&flipped, &moves[0]), Err(Error::IllegalFlip((0, 2))));
}

#[test]
fn counterexample_has_no_flips() {
    let hex = skew_hexagon();
    for t in hex.enumerate_triangulations().unwrap() {
        assert!(hex.legal_flips(&t.diagonals).unwrap().is_empty());
        let attempt = FlipMove::new(t.diagonals.as_slice()[0], (1, 4));
        assert!(hex.apply_flip(&t.diagonals, &attempt).is_err());
    }
    let g = graph_of(&hex);
    let m = g.metrics();
    assert_eq!(
        m,
        GraphMetrics {
            nodes: 2,
            edges: 0,
            components: 2,
            diameters: vec![0, 0]
        }
    );
    assert_eq!(g.components().status, Connectivity::Disconnected);
    assert_eq!(g.shortest_path(&g.nodes()[0], &g.nodes()[1]).unwrap(), None);
}

#[test]
fn pentagon_is_a_five_cycle() {
    let g = graph_of(&convex(5));
    assert_eq!(
        g.metrics(),
        GraphMetrics {
            nodes: 5,
            edges: 5,
            components: 1,
            diameters: vec![2]
        }
    );
    for i in 0..5 {
        assert_eq!(g.neighbors(i).len(), 2);
    }
    let h = graph_of(&convex(6));
    assert_eq!((h.len(), h.components().status), (14, Connectivity::Connected));
}

#[test]
fn shortest_paths() {
    let quad = plane(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
    let g = graph_of(&quad);
    let (a, b) = (g.nodes()[0].clone(), g.nodes()[1].clone());
    assert_eq!(g.shortest_path(&a, &a).unwrap(), Some(vec![]));
    assert_eq!(g.shortest_path(&a, &b).unwrap().unwrap().len(), 1);
    let unknown: EdgeSet = [(5, 7)].into_iter().collect();
    assert_eq!(g.shortest_path(&unknown, &a), Err(Error::UnknownNode));
}

#[test]
fn closure_violation_detected() {
    let hexagon = convex(6);
    let mut keys: Vec<EdgeSet> = hexagon
        .enumerate_triangulations()
        .unwrap()
        .into_iter()
        .map(|t| t.diagonals)
        .collect();
    keys.pop();
    assert_eq!(FlipGraph::build(&hexagon, keys).unwrap_err(), Error::ClosureViolation);
    let empty = FlipGraph::build(&hexagon, vec![]).unwrap();
    assert_eq!(empty.components().status, Connectivity::Empty);
}

#[test]
fn exports_are_canonical() {
    let g = graph_of(&convex(5));
    let dot = g.to_dot();
    assert!(dot.starts_with("graph flips {\n  n0 [label=\"0,2-0,3\"];"));
    assert_eq!(dot.matches(" -- ").count(), 5);
    let json = g.to_json();
    assert_eq!(json["nodes"].as_array().unwrap().len(), 5);
    assert_eq!(json["components"], serde_json::json!([[0, 1, 2, 3, 4]]));
}

#[test]
fn cylinder_paths_on_convex_hexagon() {
    let hex = convex(6);
    let ts = hex.enumerate_triangulations().unwrap();
    let g = graph_of(&hex);
    for a in &ts {
        for b in &ts {
            let path = flip_path_cylinder(&hex, a, b).unwrap();
            hex.validate_walk(&a.diagonals, &path, &b.diagonals).unwrap();
            let bfs = g.shortest_path(&a.diagonals, &b.diagonals).unwrap().unwrap();
            assert!(bfs.len() <= path.len());
        }
    }
    assert!(flip_path_cylinder(&hex, &ts[0], &ts[0]).unwrap().is_empty());
    let skew = skew_hexagon();
    let st = skew.enumerate_triangulations().unwrap();
    assert!(matches!(
        flip_path_cylinder(&skew, &st[0], &st[1]),
        Err(Error::UnsupportedKind(_))
    ));
}

#[test]
fn torus_extreme_ears() {
    // Small convex hexagon well inside one quadrant: behaves like the plane.
    let hex = flat_torus_polygon(&[
        ((1, 10), (2, 10)),
        ((2, 10), (1, 10)),
        ((3, 10), (15, 100)),
        ((35, 100), (3, 10)),
        ((2, 10), (35, 100)),
        ((1, 10), (3, 10)),
    ]);
    let (u, t) = extreme_earable_vertex(&hex).unwrap();
    assert!(hex.extreme_vertices()[u].any());
    let n = hex.len();
    assert!(t.diagonals.contains((u + n - 1) % n, (u + 1) % n));
    for t in hex.enumerate_triangulations().unwrap() {
        let moves = flip_to_extreme_ear(&hex, &t, u).unwrap();
        let mut cur = t.diagonals.clone();
        for m in &moves {
            cur = hex.apply_flip(&cur, m).unwrap();
        }
        assert!(cur.contains((u + n - 1) % n, (u + 1) % n));
    }
    let ts = hex.enumerate_triangulations().unwrap();
    for a in &ts {
        for b in &ts {
            let p = flip_path_flat_torus(&hex, a, b).unwrap();
            hex.validate_walk(&a.diagonals, &p, &b.diagonals).unwrap();
        }
    }
    assert!(matches!(
        extreme_earable_vertex(&skew_hexagon()),
        Err(Error::UnsupportedKind(_))
    ));
}
