mod common;

use std::path::PathBuf;

use flipsurf::fixtures::search::{
    frozen_hexagon_points, orphan_diagonal_pentagon, orphan_diagonals, two_boundary_points,
};
use flipsurf::fixtures::{fixture, fixture_names, verify, Property, Tag};
use flipsurf::io::Scenario;
use flipsurf::kernel::Pt;
use flipsurf::pointset::SurfacePointSet;

fn corpus_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus/fixtures-v1.json")
}

fn reps(set: &SurfacePointSet) -> Vec<Pt> {
    set.points().iter().map(|p| p.rep().clone()).collect()
}

fn canonical(set: &SurfacePointSet, pts: &[Pt]) -> Vec<Pt> {
    pts.iter()
        .map(|p| set.group().canonicalize(p).unwrap().rep().clone())
        .collect()
}

#[test]
fn counts_match_brute_force() {
    let mut point_sets = 0;
    for name in fixture_names() {
        let f = fixture(&name).unwrap();
        let (oracle, enumerated) = match &f.scenario {
            Scenario::Polygon(p) => (
                common::polygon_count(p),
                p.enumerate_triangulations().unwrap().len() as u128,
            ),
            Scenario::PointSet(s) if s.candidate_segments().len() <= 32 => {
                let keys = common::point_set_keys(s);
                let mut listed: Vec<_> = s
                    .enumerate_triangulations()
                    .unwrap()
                    .into_iter()
                    .map(|t| t.edges)
                    .collect();
                listed.sort();
                assert_eq!(keys, listed, "{name}");
                point_sets += 1;
                (keys.len() as u128, listed.len() as u128)
            }
            Scenario::PointSet(_) => continue,
        };
        assert_eq!(oracle, enumerated, "{name}");
        if let Some(expected) = f.expected_triangulation_count() {
            assert_eq!(oracle, expected, "{name}");
        }
    }
    // Both frozen-hexagon sets and the two-boundary set; the skew set is too large.
    assert_eq!(point_sets, 3);
}

#[test]
fn convex_admissible_counts_are_all_pairs() {
    for n in 4..=10 {
        let f = fixture(&format!("planar-convex-{n}")).unwrap();
        let Scenario::Polygon(p) = &f.scenario else { panic!() };
        let mut pairs = 0;
        for i in 0..n {
            for j in i + 2..n {
                if (i, j) != (0, n - 1) {
                    assert!(p.is_admissible_diagonal(i, j).unwrap());
                    pairs += 1;
                }
            }
        }
        assert_eq!(pairs, n * (n - 3) / 2);
    }
}

#[test]
fn paper_expectations_hold_except_the_skew_point_set() {
    for name in fixture_names() {
        let report = verify(&fixture(&name).unwrap()).unwrap();
        let failed: Vec<_> = report
            .paper_failures()
            .iter()
            .map(|c| c.expected.property.clone())
            .collect();
        if name == "skew-torus-pointset" {
            assert_eq!(failed, vec![Property::ComponentCount(2)]);
            assert_eq!(report.triangulations, 0);
        } else {
            assert!(failed.is_empty(), "{name}: {failed:?}");
        }
        let derived_failed = report.checks.iter().any(|c| c.expected.tag == Tag::Derived && !c.pass);
        assert!(!derived_failed, "{name}");
    }
}

#[test]
fn corpus_file_matches_catalog() {
    let current: Vec<_> = fixture_names().iter().map(|n| fixture(n).unwrap().to_json()).collect();
    let text = serde_json::to_string_pretty(&current).unwrap() + "\n";
    if std::env::var_os("FLIPSURF_WRITE_CORPUS").is_some() {
        std::fs::write(corpus_path(), &text).unwrap();
    }
    let stored = std::fs::read_to_string(corpus_path()).expect("corpus file present");
    assert_eq!(stored, text, "regenerate with FLIPSURF_WRITE_CORPUS=1");
}

#[test]
fn twisted_cylinder_search_reproduces_fixture() {
    let f = fixture("twisted-cylinder-pointset").unwrap();
    let Scenario::PointSet(set) = &f.scenario else { panic!() };
    let pts = reps(set);
    let found = frozen_hexagon_points(set.group(), &pts[..6], 2, ((0.0, 0.99), (-1.5, 1.5)), 4, 1, 40).unwrap();
    assert_eq!(found.attempt, 37);
    assert_eq!(canonical(set, &found.value), pts);
}

#[test]
fn klein_bottle_search_reproduces_fixture() {
    let f = fixture("klein-bottle-pointset").unwrap();
    let Scenario::PointSet(set) = &f.scenario else { panic!() };
    let pts = reps(set);
    let found = frozen_hexagon_points(set.group(), &pts[..6], 2, ((0.0, 0.99), (-1.5, 1.5)), 4, 1, 40).unwrap();
    assert_eq!(found.attempt, 37);
    assert_eq!(canonical(set, &found.value), pts);
}

#[test]
fn two_boundary_search_reproduces_fixture() {
    let f = fixture("cylinder-two-boundary-pointset").unwrap();
    let Scenario::PointSet(set) = &f.scenario else { panic!() };
    let found = two_boundary_points(5, 20, 1, 10).unwrap();
    assert_eq!(found.attempt, 1);
    assert_eq!(canonical(set, &found.value), reps(set));
    assert_eq!(set.is_euclidean_position(), Ok(false));
}

#[test]
fn orphan_search_reproduces_fixture() {
    let f = fixture("torus-determ-pentagon").unwrap();
    let Scenario::Polygon(p) = &f.scenario else { panic!() };
    let found = orphan_diagonal_pentagon(0, 30).unwrap();
    assert_eq!((found.seed, found.attempt), (21, 22));
    assert_eq!(found.value.vertices(), p.vertices());
    assert_eq!(orphan_diagonals(p).unwrap(), vec![(1, 3)]);
}

#[test]
fn unknown_fixture_is_an_error() {
    assert!(matches!(fixture("nope"), Err(flipsurf::Error::UnknownFixture(_))));
    assert!(fixture("planar-convex-11").is_err());
}
