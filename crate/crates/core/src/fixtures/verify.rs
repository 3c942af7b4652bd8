//! Runs a fixture's expected properties through the public operations.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use super::catalog::{fixture, Expectation, Fixture, Property, Tag};
use crate::edges::{edge, EdgeSet};
use crate::error::{Error, Result};
use crate::flips::{extreme_earable_vertex, FlipGraph};
use crate::io::{point_to_json, Scenario};
use crate::pointset::boundary_class_partition;
use crate::polygon::EuclideanPolygon;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    #[serde(flatten)]
    pub expected: Expectation,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub fixture: String,
    pub surface: String,
    pub triangulations: usize,
    pub components: usize,
    pub checks: Vec<Check>,
    /// Extra computed facts that no expectation covers.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub diagnostics: BTreeMap<String, Value>,
    pub all_pass: bool,
}

impl VerifyReport {
    /// Checks tagged as coming from the article that did not hold.
    pub fn paper_failures(&self) -> Vec<&Check> {
        self.checks
            .iter()
            .filter(|c| c.expected.tag == Tag::Paper && !c.pass)
            .collect()
    }
}

struct Analysis {
    keys: Vec<EdgeSet>,
    graph: FlipGraph,
}

fn analyse(s: &Scenario) -> Result<Analysis> {
    let keys: Vec<EdgeSet> = match s {
        Scenario::Polygon(p) => p.enumerate_triangulations()?.into_iter().map(|t| t.diagonals).collect(),
        Scenario::PointSet(ps) => ps.enumerate_triangulations()?.into_iter().map(|t| t.edges).collect(),
    };
    let graph = match s {
        Scenario::Polygon(p) => FlipGraph::build(p, keys.clone())?,
        Scenario::PointSet(ps) => FlipGraph::build(ps, keys.clone())?,
    };
    Ok(Analysis { keys, graph })
}

fn needs_polygon<'a>(f: &'a Fixture, what: &str) -> Result<&'a EuclideanPolygon> {
    match &f.scenario {
        Scenario::Polygon(p) => Ok(p),
        Scenario::PointSet(_) => Err(Error::UnsupportedKind(format!("{what} needs a polygon"))),
    }
}

fn check(f: &Fixture, a: &Analysis, e: &Expectation) -> Result<(Value, bool)> {
    let components = a.graph.components().groups.len();
    Ok(match &e.property {
        Property::TriangulationCount(c) => (json!(a.keys.len()), a.keys.len() as u128 == *c),
        Property::ComponentCount(c) => (json!(components), components == *c),
        Property::GraphEdgeCount(c) => (json!(a.graph.edge_count()), a.graph.edge_count() == *c),
        Property::Diameter(d) => {
            let m = a.graph.metrics().diameters.into_iter().max().unwrap_or(0);
            (json!(m), m == *d)
        }
        Property::Connected => (json!(components), components == 1),
        Property::EmptyOrConnected => (json!(components), components <= 1),
        Property::AdmissibleDiagonalCount(c) => {
            let n = needs_polygon(f, "admissibility")?.admissible_diagonals().len();
            (json!(n), n == *c)
        }
        Property::InadmissiblePairs(pairs) => {
            let p = needs_polygon(f, "admissibility")?;
            let mut bad = vec![];
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if !p.are_adjacent(i, j) && !p.is_admissible_diagonal(i, j)? {
                        bad.push(edge(i, j));
                    }
                }
            }
            (
                json!(bad.iter().map(|&e| f.pair_name(e)).collect::<Vec<_>>()),
                &bad == pairs,
            )
        }
        Property::QuadrantObstruction => {
            let w = needs_polygon(f, "the quadrant test")?.empty_quadrant_obstruction()?;
            (json!(w.as_ref().map(point_to_json)), w.is_some())
        }
        Property::DiagonalInNoTriangulation((i, j)) => {
            let p = needs_polygon(f, "admissibility")?;
            let used = a.keys.iter().any(|k| k.contains(*i, *j));
            let admissible = p.is_admissible_diagonal(*i, *j)?;
            (json!({"admissible": admissible, "used": used}), admissible && !used)
        }
        Property::NoExtremeEar => match extreme_earable_vertex(needs_polygon(f, "extreme ears")?) {
            Ok((u, _)) => (json!(u), false),
            Err(Error::Construction(_)) | Err(Error::NotTriangulable) => (Value::Null, true),
            Err(e) => return Err(e),
        },
        Property::HexagonBoundaryFixed => {
            let fixed = !a.keys.is_empty() && a.keys.iter().all(|k| (0..6).all(|v| k.contains(v, (v + 1) % 6)));
            (json!(fixed), fixed)
        }
        Property::BoundaryClassCount(c) => {
            let n = classes(f)?.len();
            (json!(n), n == *c)
        }
        Property::ClassesAreComponents => {
            let mut by_class = classes(f)?;
            by_class.sort();
            let mut by_graph = a.graph.components().groups;
            by_graph.sort();
            (json!(by_class.len()), by_class == by_graph)
        }
    })
}

fn classes(f: &Fixture) -> Result<Vec<Vec<usize>>> {
    let Scenario::PointSet(s) = &f.scenario else {
        return Err(Error::UnsupportedKind("boundary classes need a point set".into()));
    };
    let ts = s.enumerate_triangulations()?;
    boundary_class_partition(s, &ts)
}

fn diagnostics(f: &Fixture, a: &Analysis) -> Result<BTreeMap<String, Value>> {
    let mut out = BTreeMap::new();
    let Scenario::PointSet(s) = &f.scenario else {
        return Ok(out);
    };
    out.insert("segments".into(), json!(s.admissible_point_segments().len()));
    out.insert("usable-segments".into(), json!(s.candidate_segments().len()));
    if a.keys.is_empty() {
        let maximal = s.maximal_segment_sets();
        let graph = FlipGraph::build(s, maximal.clone())?;
        out.insert("maximal-segment-sets".into(), json!(maximal.len()));
        out.insert("maximal-set-components".into(), json!(graph.components().groups.len()));
    }
    Ok(out)
}

pub fn verify(f: &Fixture) -> Result<VerifyReport> {
    let a = analyse(&f.scenario)?;
    let checks = f
        .expected
        .iter()
        .map(|e| {
            let (computed, pass) = check(f, &a, e)?;
            Ok(Check {
                expected: e.clone(),
                computed,
                pass,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        fixture: f.name.clone(),
        surface: f.scenario.group().kind().name().into(),
        triangulations: a.keys.len(),
        components: a.graph.components().groups.len(),
        all_pass: checks.iter().all(|c| c.pass),
        diagnostics: diagnostics(f, &a)?,
        checks,
    })
}

pub fn verify_fixture(name: &str) -> Result<VerifyReport> {
    verify(&fixture(name)?)
}
