//! The named fixtures. Coordinates are exact; derived entries record the
//! search that produced them.

use serde::Serialize;

use crate::edges::Edge;
use crate::error::{Error, Result};
use crate::io::Scenario;
use crate::kernel::{int, ratio, Line, Pt, Scalar, SurfaceGroup};
use crate::pointset::SurfacePointSet;
use crate::polygon::EuclideanPolygon;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    /// Stated in the source article.
    Paper,
    /// Computed by an independent brute-force oracle or a recorded search.
    Derived,
}

/// A machine-checkable property of a fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "property", content = "value", rename_all = "kebab-case")]
pub enum Property {
    TriangulationCount(u128),
    ComponentCount(usize),
    GraphEdgeCount(usize),
    /// Largest diameter over the components.
    Diameter(usize),
    Connected,
    EmptyOrConnected,
    AdmissibleDiagonalCount(usize),
    /// Exactly these pairs of non-adjacent vertices are not admissible.
    InadmissiblePairs(Vec<Edge>),
    /// An empty-quadrant witness exists.
    QuadrantObstruction,
    /// This admissible diagonal lies in no triangulation.
    DiagonalInNoTriangulation(Edge),
    /// No extreme vertex carries an ear in any triangulation.
    NoExtremeEar,
    /// The hexagon on points `0..6` is in every triangulation.
    HexagonBoundaryFixed,
    BoundaryClassCount(usize),
    /// Boundary classes coincide with flip-graph components.
    ClassesAreComponents,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    #[serde(flatten)]
    pub property: Property,
    pub tag: Tag,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    /// Vertex or point names in stored order.
    pub labels: Vec<String>,
    pub scenario: Scenario,
    pub expected: Vec<Expectation>,
    pub provenance: String,
}

impl Fixture {
    fn expected_value<T>(&self, pick: impl Fn(&Property) -> Option<T>) -> Option<T> {
        self.expected.iter().find_map(|e| pick(&e.property))
    }

    pub fn expected_triangulation_count(&self) -> Option<u128> {
        self.expected_value(|p| match p {
            Property::TriangulationCount(c) => Some(*c),
            _ => None,
        })
    }

    pub fn expected_component_count(&self) -> Option<usize> {
        self.expected_value(|p| match p {
            Property::ComponentCount(c) => Some(*c),
            Property::Connected => Some(1),
            _ => None,
        })
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// The form written by `flipsurf fixture` and stored in the corpus file.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "labels": self.labels,
            "scenario": self.scenario.to_json(),
            "expected": self.expected,
            "provenance": self.provenance,
        })
    }

    /// Pair of labels, e.g. `"ad"`.
    pub fn pair_name(&self, (i, j): Edge) -> String {
        format!("{}{}", self.labels[i], self.labels[j])
    }
}

/// Every fixture name, in catalog order.
pub fn fixture_names() -> Vec<String> {
    let mut names: Vec<String> = (4..=10).map(|n| format!("planar-convex-{n}")).collect();
    names.extend(
        [
            "skew-torus-hexagon",
            "skew-torus-pointset",
            "twisted-cylinder-hexagon",
            "klein-bottle-hexagon",
            "twisted-cylinder-pointset",
            "klein-bottle-pointset",
            "cylinder-two-boundary-pointset",
            "torus-non-triangulable-quad",
            "torus-determ-pentagon",
            "torus-no-extreme-ear-pentagon",
        ]
        .map(String::from),
    );
    names
}

pub fn fixture(name: &str) -> Result<Fixture> {
    if let Some(n) = name
        .strip_prefix("planar-convex-")
        .and_then(|n| n.parse::<usize>().ok())
    {
        if (4..=10).contains(&n) {
            return Ok(planar_convex(n));
        }
    }
    Ok(match name {
        "skew-torus-hexagon" => skew_torus_hexagon(),
        "skew-torus-pointset" => skew_torus_pointset(),
        "twisted-cylinder-hexagon" => twisted_cylinder_hexagon(),
        "klein-bottle-hexagon" => klein_bottle_hexagon(),
        "twisted-cylinder-pointset" => twisted_cylinder_pointset(),
        "klein-bottle-pointset" => klein_bottle_pointset(),
        "cylinder-two-boundary-pointset" => cylinder_two_boundary_pointset(),
        "torus-non-triangulable-quad" => torus_non_triangulable_quad(),
        "torus-determ-pentagon" => torus_determ_pentagon(),
        "torus-no-extreme-ear-pentagon" => torus_no_extreme_ear_pentagon(),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    })
}

fn paper(property: Property) -> Expectation {
    Expectation {
        property,
        tag: Tag::Paper,
    }
}

fn derived(property: Property) -> Expectation {
    Expectation {
        property,
        tag: Tag::Derived,
    }
}

fn letters(n: usize) -> Vec<String> {
    (0..n).map(|k| char::from(b'a' + k as u8).to_string()).collect()
}

/// A point as two fractions `(numerator, denominator)`.
type RatioPoint = ((i64, i64), (i64, i64));

fn pts(coords: &[RatioPoint]) -> Vec<Pt> {
    coords.iter().map(|&(x, y)| Pt::from_ratios(x, y)).collect()
}

fn polygon(group: SurfaceGroup, vs: Vec<Pt>) -> EuclideanPolygon {
    EuclideanPolygon::validate(group, vs).expect("catalog polygon is valid")
}

fn point_set(group: SurfaceGroup, ps: Vec<Pt>) -> SurfacePointSet {
    SurfacePointSet::new(group, ps).expect("catalog point set is valid")
}

/// Labels of a polygon given as `names` in input order, after validation may have reversed it.
fn stored_labels(names: &[&str], input: &[Pt], poly: &EuclideanPolygon) -> Vec<String> {
    poly.vertices()
        .iter()
        .map(|v| names[input.iter().position(|p| p == v).expect("vertex kept")].to_string())
        .collect()
}

/// Rational point on the unit circle nearest the given angle (tangent half-angle snapped to 1/1000).
fn circle_point(theta: f64) -> Pt {
    let t = ratio(((theta / 2.0).tan() * 1000.0).round() as i64, 1000);
    let one = int(1);
    let d = &one + &t * &t;
    Pt::new((&one - &t * &t) / &d, (&t + &t) / &d)
}

fn catalan(k: u32) -> u128 {
    (0..k).fold(1u128, |c, i| c * 2 * (2 * i as u128 + 1) / (i as u128 + 2))
}

fn planar_convex(n: usize) -> Fixture {
    let step = std::f64::consts::TAU / n as f64;
    let vs: Vec<Pt> = (0..n)
        .map(|k| circle_point(-std::f64::consts::PI + step * (k as f64 + 0.5)))
        .collect();
    let mut expected = vec![
        derived(Property::TriangulationCount(catalan(n as u32 - 2))),
        paper(Property::Connected),
        derived(Property::AdmissibleDiagonalCount(n * (n - 3) / 2)),
    ];
    if n == 5 {
        expected.push(derived(Property::GraphEdgeCount(5)));
        expected.push(derived(Property::Diameter(2)));
    }
    Fixture {
        name: format!("planar-convex-{n}"),
        labels: letters(n),
        scenario: Scenario::Polygon(polygon(SurfaceGroup::plane(), vs)),
        expected,
        provenance: "Convex polygon with rational vertices on the unit circle near the regular angles; \
                     counts from the Catalan numbers and an exhaustive diagonal-subset count."
            .into(),
    }
}

fn skew_group() -> SurfaceGroup {
    SurfaceGroup::torus(Pt::ints(1, 0), Pt::from_ratios((1, 2), (1, 1))).expect("skew torus")
}

/// a, b, c, d, e, f of the skew-torus hexagon with the given epsilon.
fn skew_hexagon_points(eps: &Scalar) -> Vec<Pt> {
    let (h, q, tq, one) = (ratio(1, 2), ratio(1, 4), ratio(3, 4), int(1));
    let third = eps / int(3);
    vec![
        Pt::new(&h + eps, tq.clone()),
        Pt::new(&one - eps, tq.clone()),
        Pt::new(&one + &third, h.clone()),
        Pt::new(&one - eps, q.clone()),
        Pt::new(&h + eps, q),
        Pt::new(&h - &third, h),
    ]
}

const HEX: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// Inadmissible long diagonals ad, be, cf in a polygon's stored labels.
fn long_diagonals(labels: &[String]) -> Vec<Edge> {
    let at = |s: &str| labels.iter().position(|l| l == s).expect("label");
    let mut out: Vec<Edge> = [("a", "d"), ("b", "e"), ("c", "f")]
        .iter()
        .map(|&(x, y)| crate::edges::edge(at(x), at(y)))
        .collect();
    out.sort();
    out
}

fn skew_torus_hexagon() -> Fixture {
    let input = skew_hexagon_points(&ratio(1, 10));
    let poly = polygon(skew_group(), input.clone());
    let labels = stored_labels(&HEX, &input, &poly);
    Fixture {
        expected: vec![
            paper(Property::InadmissiblePairs(long_diagonals(&labels))),
            paper(Property::AdmissibleDiagonalCount(6)),
            paper(Property::TriangulationCount(2)),
            paper(Property::ComponentCount(2)),
            paper(Property::GraphEdgeCount(0)),
            paper(Property::Diameter(0)),
        ],
        name: "skew-torus-hexagon".into(),
        labels,
        scenario: Scenario::Polygon(poly),
        provenance: "Torus generated by (1,0) and (1/2,1), epsilon 1/10. The second generator has the \
                     stated direction and fundamental-domain height 1."
            .into(),
    }
}

fn skew_torus_pointset() -> Fixture {
    let mut ps = skew_hexagon_points(&ratio(1, 10));
    ps.extend(pts(&[
        ((0, 1), (3, 4)),
        ((1, 4), (3, 5)),
        ((1, 4), (2, 5)),
        ((0, 1), (1, 4)),
    ]));
    Fixture {
        name: "skew-torus-pointset".into(),
        labels: letters(10),
        scenario: Scenario::PointSet(point_set(skew_group(), ps)),
        expected: vec![paper(Property::ComponentCount(2))],
        provenance: "Skew-torus hexagon plus g(0,3/4), h(1/4,3/5), i(1/4,2/5), j(0,1/4). Under the \
                     maximal-and-triangular definition this set has no triangulation; see the report \
                     diagnostics."
            .into(),
    }
}

fn twisted_group() -> SurfaceGroup {
    SurfaceGroup::twisted_cylinder(Line::x_axis(), Pt::ints(1, 0)).expect("twisted cylinder")
}

fn klein_group() -> SurfaceGroup {
    SurfaceGroup::klein_bottle(Pt::ints(0, 2), Line::x_axis(), Pt::ints(1, 0)).expect("Klein bottle")
}

/// a..f of the glide hexagon with epsilon 1/20; e is mirrored from a so the boundary is simple.
fn glide_hexagon_points() -> Vec<Pt> {
    pts(&[
        ((6, 20), (1, 4)),
        ((14, 20), (1, 4)),
        ((46, 60), (0, 1)),
        ((14, 20), (-1, 4)),
        ((6, 20), (-1, 4)),
        ((14, 60), (0, 1)),
    ])
}

fn glide_hexagon(name: &str, group: SurfaceGroup, tag: Tag, provenance: &str) -> Fixture {
    let input = glide_hexagon_points();
    let poly = polygon(group, input.clone());
    let labels = stored_labels(&HEX, &input, &poly);
    let e = |property| Expectation { property, tag };
    Fixture {
        expected: vec![
            e(Property::InadmissiblePairs(long_diagonals(&labels))),
            e(Property::TriangulationCount(2)),
            e(Property::ComponentCount(2)),
        ],
        name: name.into(),
        labels,
        scenario: Scenario::Polygon(poly),
        provenance: provenance.into(),
    }
}

fn twisted_cylinder_hexagon() -> Fixture {
    glide_hexagon(
        "twisted-cylinder-hexagon",
        twisted_group(),
        Tag::Paper,
        "Glide along the x-axis by 1, epsilon 1/20. Vertex e is taken at (1/4+epsilon,-1/4): the printed \
         x-coordinate 3/4+epsilon makes the boundary cross itself.",
    )
}

fn klein_bottle_hexagon() -> Fixture {
    glide_hexagon(
        "klein-bottle-hexagon",
        klein_group(),
        Tag::Derived,
        "The twisted-cylinder hexagon under the glide plus the translation (0,2); exhaustive admissibility \
         checks find the same admissible diagonals as on the twisted cylinder.",
    )
}

fn frozen_hexagon_expectations() -> Vec<Expectation> {
    vec![
        derived(Property::HexagonBoundaryFixed),
        paper(Property::ComponentCount(2)),
    ]
}

fn twisted_cylinder_pointset() -> Fixture {
    let mut ps = glide_hexagon_points();
    ps.extend(pts(FROZEN_EXTRA));
    Fixture {
        name: "twisted-cylinder-pointset".into(),
        labels: letters(ps.len()),
        scenario: Scenario::PointSet(point_set(twisted_group(), ps)),
        expected: frozen_hexagon_expectations(),
        provenance: FROZEN_PROVENANCE.into(),
    }
}

fn klein_bottle_pointset() -> Fixture {
    let mut ps = glide_hexagon_points();
    ps.extend(pts(FROZEN_EXTRA));
    Fixture {
        name: "klein-bottle-pointset".into(),
        labels: letters(ps.len()),
        scenario: Scenario::PointSet(point_set(klein_group(), ps)),
        expected: frozen_hexagon_expectations(),
        provenance: FROZEN_PROVENANCE.into(),
    }
}

fn cylinder_two_boundary_pointset() -> Fixture {
    let group = SurfaceGroup::cylinder(Pt::ints(1, 0)).expect("unit cylinder");
    let ps = pts(TWO_BOUNDARY_POINTS);
    Fixture {
        name: "cylinder-two-boundary-pointset".into(),
        labels: letters(ps.len()),
        scenario: Scenario::PointSet(point_set(group, ps)),
        expected: vec![
            derived(Property::TriangulationCount(TWO_BOUNDARY_COUNTS.0)),
            derived(Property::BoundaryClassCount(TWO_BOUNDARY_COUNTS.1)),
            paper(Property::ComponentCount(TWO_BOUNDARY_COUNTS.1)),
            paper(Property::ClassesAreComponents),
        ],
        provenance: TWO_BOUNDARY_PROVENANCE.into(),
    }
}

fn unit_torus() -> SurfaceGroup {
    SurfaceGroup::torus(Pt::ints(1, 0), Pt::ints(0, 1)).expect("unit torus")
}

fn torus_non_triangulable_quad() -> Fixture {
    let vs = pts(&[((1, 5), (1, 2)), ((1, 2), (1, 5)), ((4, 5), (1, 2)), ((1, 2), (4, 5))]);
    Fixture {
        name: "torus-non-triangulable-quad".into(),
        labels: letters(4),
        scenario: Scenario::Polygon(polygon(unit_torus(), vs)),
        expected: vec![
            paper(Property::QuadrantObstruction),
            derived(Property::TriangulationCount(0)),
            derived(Property::AdmissibleDiagonalCount(0)),
            paper(Property::EmptyOrConnected),
        ],
        provenance: "Diamond on the unit torus whose interior holds the centre (1/2,1/2) of the empty \
                     quadrant [1/4,3/4]^2. Each diagonal spans 3/5 along an axis while its endpoints are \
                     2/5 apart the other way round, so neither is admissible."
            .into(),
    }
}

fn torus_determ_pentagon() -> Fixture {
    let vs = pts(DETERM_VERTICES);
    Fixture {
        name: "torus-determ-pentagon".into(),
        labels: letters(vs.len()),
        scenario: Scenario::Polygon(polygon(unit_torus(), vs)),
        expected: vec![
            derived(Property::TriangulationCount(DETERM_COUNT)),
            derived(Property::DiagonalInNoTriangulation(DETERM_ORPHAN)),
            paper(Property::EmptyOrConnected),
        ],
        provenance: DETERM_PROVENANCE.into(),
    }
}

fn torus_no_extreme_ear_pentagon() -> Fixture {
    let vs = pts(&[
        ((479, 1000), (213, 1000)),
        ((299, 500), (27, 125)),
        ((641, 1000), (67, 200)),
        ((769, 1000), (407, 1000)),
        ((97, 125), (61, 125)),
    ]);
    Fixture {
        name: "torus-no-extreme-ear-pentagon".into(),
        labels: letters(5),
        scenario: Scenario::Polygon(polygon(unit_torus(), vs)),
        expected: vec![
            derived(Property::TriangulationCount(1)),
            derived(Property::NoExtremeEar),
            paper(Property::Connected),
        ],
        provenance: "Vertices 2,3,4,5,7 of random flat-torus polygon seed 104 (n=8). Its only \
                     triangulation has ears at non-extreme vertices only."
            .into(),
    }
}

// Search results; see `search` for the procedures and the tests that re-run them.

const FROZEN_EXTRA: &[RatioPoint] = &[((1, 1), (0, 1)), ((1, 2), (1, 1))];
const FROZEN_PROVENANCE: &str =
    "Glide hexagon plus two points from `search::frozen_hexagon_points` (seed 1, grid 1/4, \
     window [0,0.99) x [-1.5,1.5), attempt 37). The same points freeze the hexagon on the twisted cylinder and \
     on the Klein bottle: every triangulation keeps the hexagon boundary and the graph has two components.";
const TWO_BOUNDARY_POINTS: &[RatioPoint] = &[
    ((2, 5), (1, 10)),
    ((3, 5), (1, 5)),
    ((3, 10), (7, 10)),
    ((9, 20), (3, 20)),
    ((17, 20), (7, 10)),
];
const TWO_BOUNDARY_COUNTS: (u128, usize) = (3, 3);
const TWO_BOUNDARY_PROVENANCE: &str = "From `search::two_boundary_points` (n 5, grid 1/20, seed 1, attempt 1) on \
     the unit cylinder: not in Euclidean position, in general position, three boundary classes.";
const DETERM_VERTICES: &[RatioPoint] = &[
    ((157, 200), (133, 200)),
    ((177, 250), (79, 100)),
    ((36, 125), (681, 1000)),
    ((273, 1000), (291, 1000)),
    ((161, 250), (123, 500)),
];
const DETERM_COUNT: u128 = 1;
const DETERM_ORPHAN: Edge = (1, 3);
const DETERM_PROVENANCE: &str = "From `search::orphan_diagonal_pentagon` (random flat-torus pentagon seed 21, \
     the 22nd tried from seed 0). Diagonal b-d is admissible but lies in no triangulation.";
