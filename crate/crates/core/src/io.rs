//! JSON forms of surfaces, polygons, point sets and triangulation keys.
//! Scalars travel as fraction strings so nothing is lost in transit.

use serde::{Deserialize, Serialize};

use crate::edges::EdgeSet;
use crate::error::{Error, Result};
use crate::kernel::{format_scalar, parse_scalar, Line, Motion, Pt, SurfaceGroup, SurfaceKind};
use crate::pointset::SurfacePointSet;
use crate::polygon::EuclideanPolygon;

pub type PointJson = [String; 2];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisJson {
    pub point: PointJson,
    pub direction: PointJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub vector: PointJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis: Option<AxisJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceJson {
    pub kind: String,
    #[serde(default)]
    pub generators: Vec<GeneratorJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub surface: SurfaceJson,
    pub vertices: Vec<PointJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetJson {
    pub surface: SurfaceJson,
    pub points: Vec<PointJson>,
}

/// Either input kind, told apart by its `vertices` or `points` field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScenarioJson {
    Polygon(PolygonJson),
    PointSet(PointSetJson),
}

/// A parsed scenario.
#[derive(Clone, Debug)]
pub enum Scenario {
    Polygon(EuclideanPolygon),
    PointSet(SurfacePointSet),
}

impl Scenario {
    pub fn group(&self) -> &SurfaceGroup {
        match self {
            Scenario::Polygon(p) => p.group(),
            Scenario::PointSet(s) => s.group(),
        }
    }

    pub fn to_json(&self) -> ScenarioJson {
        match self {
            Scenario::Polygon(p) => ScenarioJson::Polygon(polygon_to_json(p)),
            Scenario::PointSet(s) => ScenarioJson::PointSet(point_set_to_json(s)),
        }
    }
}

pub fn point_to_json(p: &Pt) -> PointJson {
    [format_scalar(&p.x), format_scalar(&p.y)]
}

pub fn point_from_json(p: &PointJson) -> Result<Pt> {
    Ok(Pt::new(parse_scalar(&p[0])?, parse_scalar(&p[1])?))
}

fn motion_to_json(m: &Motion) -> Option<GeneratorJson> {
    match m {
        Motion::Translation(v) => Some(GeneratorJson {
            kind: "translation".into(),
            vector: point_to_json(v),
            axis: None,
        }),
        Motion::GlideReflection { axis, vector } => Some(GeneratorJson {
            kind: "glide".into(),
            vector: point_to_json(vector),
            axis: Some(AxisJson {
                point: point_to_json(&axis.point),
                direction: point_to_json(&axis.direction),
            }),
        }),
        Motion::Identity | Motion::Reflection(_) => None,
    }
}

fn motion_from_json(g: &GeneratorJson) -> Result<Motion> {
    let vector = point_from_json(&g.vector)?;
    match g.kind.as_str() {
        "translation" => Ok(Motion::translation(vector)),
        "glide" | "glide-reflection" => {
            let axis = match &g.axis {
                Some(a) => Line::new(point_from_json(&a.point)?, point_from_json(&a.direction)?)?,
                None => Line::new(Pt::zero(), vector.clone())?,
            };
            Motion::glide(axis, vector)
        }
        other => Err(Error::Malformed(format!("unknown generator type `{other}`"))),
    }
}

pub fn surface_to_json(g: &SurfaceGroup) -> SurfaceJson {
    SurfaceJson {
        kind: g.kind().name().into(),
        generators: g.generators().iter().filter_map(motion_to_json).collect(),
    }
}

pub fn surface_from_json(s: &SurfaceJson) -> Result<SurfaceGroup> {
    let kind = SurfaceKind::from_name(&s.kind)
        .ok_or_else(|| Error::Malformed(format!("unknown surface kind `{}`", s.kind)))?;
    let gens = s.generators.iter().map(motion_from_json).collect::<Result<Vec<_>>>()?;
    SurfaceGroup::from_generators(kind, gens)
}

pub fn polygon_to_json(p: &EuclideanPolygon) -> PolygonJson {
    PolygonJson {
        surface: surface_to_json(p.group()),
        vertices: p.vertices().iter().map(point_to_json).collect(),
    }
}

pub fn point_set_to_json(s: &SurfacePointSet) -> PointSetJson {
    PointSetJson {
        surface: surface_to_json(s.group()),
        points: s.points().iter().map(|p| point_to_json(p.rep())).collect(),
    }
}

impl ScenarioJson {
    pub fn build(&self) -> Result<Scenario> {
        match self {
            ScenarioJson::Polygon(p) => {
                let group = surface_from_json(&p.surface)?;
                let vs = p.vertices.iter().map(point_from_json).collect::<Result<Vec<_>>>()?;
                Ok(Scenario::Polygon(EuclideanPolygon::validate(group, vs)?))
            }
            ScenarioJson::PointSet(s) => {
                let group = surface_from_json(&s.surface)?;
                let pts = s.points.iter().map(point_from_json).collect::<Result<Vec<_>>>()?;
                Ok(Scenario::PointSet(SurfacePointSet::new(group, pts)?))
            }
        }
    }
}

/// Parses scenario JSON text. Syntax problems are `Malformed`; geometric ones keep their own error.
pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let json: ScenarioJson = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    json.build()
}

/// Edge keys as `[[i, j], ...]`.
pub fn edges_to_json(e: &EdgeSet) -> Vec<[usize; 2]> {
    e.iter().map(|(i, j)| [i, j]).collect()
}

pub fn edges_from_json(v: &[[usize; 2]]) -> EdgeSet {
    v.iter().map(|&[i, j]| (i, j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surfaces_round_trip() {
        let groups = [
            SurfaceGroup::plane(),
            SurfaceGroup::cylinder(Pt::from_ratios((1, 1), (1, 3))).unwrap(),
            SurfaceGroup::twisted_cylinder(Line::x_axis(), Pt::ints(1, 0)).unwrap(),
            SurfaceGroup::torus(Pt::ints(1, 0), Pt::from_ratios((1, 2), (1, 1))).unwrap(),
            SurfaceGroup::klein_bottle(Pt::ints(0, 2), Line::x_axis(), Pt::ints(1, 0)).unwrap(),
        ];
        for g in groups {
            let j = surface_to_json(&g);
            let back = surface_from_json(&j).unwrap();
            assert_eq!(back.kind(), g.kind());
            assert_eq!(surface_to_json(&back), j);
        }
    }

    #[test]
    fn scenario_parsing() {
        let text = r#"{"surface": {"kind": "torus", "generators": [
            {"type": "translation", "vector": ["1", "0"]},
            {"type": "translation", "vector": ["0", "1"]}]},
            "vertices": [["1/5", "1/2"], ["0.5", "0.2"], ["4/5", "1/2"], ["1/2", "4/5"]]}"#;
        let Scenario::Polygon(p) = parse_scenario(text).unwrap() else {
            panic!("expected a polygon")
        };
        assert_eq!(p.len(), 4);
        assert_eq!(point_to_json(p.vertex(1)), ["1/2".to_string(), "1/5".to_string()]);
        let pts = r#"{"surface": {"kind": "plane"}, "points": [["0", "0"], ["1", "0"], ["0", "1"]]}"#;
        assert!(matches!(parse_scenario(pts).unwrap(), Scenario::PointSet(_)));
        assert!(matches!(parse_scenario("{"), Err(Error::Malformed(_))));
        let empty = r#"{"surface": {"kind": "plane"}, "vertices": []}"#;
        assert!(matches!(parse_scenario(empty), Err(Error::Degenerate(_))));
        let odd = r#"{"surface": {"kind": "sphere"}, "points": []}"#;
        assert!(matches!(parse_scenario(odd), Err(Error::Malformed(_))));
    }
}
