//! Command-line front end. `run` is pure in its inputs so it can be tested
//! without spawning a process.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::edges::EdgeSet;
use crate::error::{Error, Result};
use crate::fixtures::{fixture, fixture_names, verify};
use crate::flips::{flip_path_cylinder, flip_path_flat_torus, FlipDomain, FlipGraph, FlipMove};
use crate::io::{edges_to_json, parse_scenario, Scenario};
use crate::kernel::SurfaceKind;
use crate::pointset::{flip_path_same_boundary, PointSetTriangulation, DEFAULT_POINT_SET_BOUND};
use crate::polygon::{Triangulation, DEFAULT_POLYGON_BOUND};
use crate::render::{render_graph_svg, render_svg};

/// Environment variable overriding the enumeration size bound.
pub const MAX_N_VAR: &str = "FLIPSURF_MAX_N";

#[derive(Parser, Debug)]
#[command(
    name = "flipsurf",
    version,
    about = "Triangulations and flip graphs on locally Euclidean surfaces"
)]
pub struct Cli {
    /// Largest polygon or point set accepted by exhaustive enumeration.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Svg,
}

/// Triangulation lists are JSON only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Shortest walk in the enumerated flip graph.
    Bfs,
    /// The surface-specific construction (plane, cylinder, flat torus, cylinder point sets).
    Constructive,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every triangulation.
    Enumerate {
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: ListFormat,
    },
    /// Export the flip graph.
    Flipgraph {
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Connected components and per-component diameters.
    Components { input: String },
    /// Flip walk between two triangulation keys (`i,j-k,l-...`).
    Path {
        input: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value = "bfs")]
        method: Method,
    },
    /// One triangulation, found without enumeration where possible.
    Triangulate { input: String },
    /// Whether a cylinder or flat-torus point set is in Euclidean position.
    EuclideanPosition { input: String },
    /// Print a catalog fixture, or check its expected properties.
    Fixture {
        name: String,
        #[arg(long)]
        verify: bool,
    },
    /// Check a triangulation key against an input, or every fixture when no input is given.
    Verify {
        input: Option<String>,
        #[arg(long)]
        key: Option<String>,
    },
    /// SVG picture of the input, optionally with a triangulation highlighted.
    Render {
        input: String,
        #[arg(long)]
        key: Option<String>,
    },
}

/// Exit code with the bytes for standard output and standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

struct Context<'a> {
    max_n: Option<usize>,
    stdin: &'a mut dyn Read,
}

impl Context<'_> {
    fn load(&mut self, input: &str) -> Result<Scenario> {
        if fixture_names().iter().any(|n| n == input) {
            return Ok(fixture(input)?.scenario);
        }
        let text = if input == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Malformed(format!("stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(input).map_err(|e| Error::Malformed(format!("{input}: {e}")))?
        };
        parse_scenario(&text)
    }

    fn keys(&self, s: &Scenario) -> Result<Vec<EdgeSet>> {
        Ok(match s {
            Scenario::Polygon(p) => p
                .enumerate_triangulations_bounded(self.max_n.unwrap_or(DEFAULT_POLYGON_BOUND))?
                .into_iter()
                .map(|t| t.diagonals)
                .collect(),
            Scenario::PointSet(ps) => ps
                .enumerate_triangulations_bounded(self.max_n.unwrap_or(DEFAULT_POINT_SET_BOUND))?
                .into_iter()
                .map(|t| t.edges)
                .collect(),
        })
    }

    fn graph(&self, s: &Scenario) -> Result<FlipGraph> {
        let keys = self.keys(s)?;
        match s {
            Scenario::Polygon(p) => FlipGraph::build(p, keys),
            Scenario::PointSet(ps) => FlipGraph::build(ps, keys),
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn moves_json(moves: &[FlipMove]) -> Value {
    json!(moves
        .iter()
        .map(|m| json!({"removed": [m.removed.0, m.removed.1], "inserted": [m.inserted.0, m.inserted.1]}))
        .collect::<Vec<_>>())
}

fn polygon_key(p: &crate::polygon::EuclideanPolygon, key: &EdgeSet) -> Result<Triangulation> {
    p.validate_triangulation(key)
}

fn point_set_key(ps: &crate::pointset::SurfacePointSet, key: &EdgeSet) -> Result<PointSetTriangulation> {
    ps.triangulation_from(key)
}

fn check_key(s: &Scenario, key: &EdgeSet) -> Result<()> {
    match s {
        Scenario::Polygon(p) => polygon_key(p, key).map(|_| ()),
        Scenario::PointSet(ps) => point_set_key(ps, key).map(|_| ()),
    }
}

fn constructive(s: &Scenario, from: &EdgeSet, to: &EdgeSet) -> Result<Vec<FlipMove>> {
    match s {
        Scenario::Polygon(p) => {
            let (t1, t2) = (polygon_key(p, from)?, polygon_key(p, to)?);
            match p.kind() {
                SurfaceKind::Plane | SurfaceKind::Cylinder => flip_path_cylinder(p, &t1, &t2),
                SurfaceKind::Torus if p.group().is_flat_torus() => flip_path_flat_torus(p, &t1, &t2),
                other => Err(Error::UnsupportedKind(format!("no constructive walk on {other}"))),
            }
        }
        Scenario::PointSet(ps) => {
            let (t1, t2) = (point_set_key(ps, from)?, point_set_key(ps, to)?);
            flip_path_same_boundary(ps, &t1, &t2)
        }
    }
}

fn execute(cmd: &Command, ctx: &mut Context<'_>) -> Result<String> {
    match cmd {
        Command::Enumerate {
            input,
            format: ListFormat::Json,
        } => {
            let s = ctx.load(input)?;
            let keys = ctx.keys(&s)?;
            Ok(pretty(&json!({
                "count": keys.len(),
                "triangulations": keys.iter().map(edges_to_json).collect::<Vec<_>>(),
            })))
        }
        Command::Flipgraph { input, format } => {
            let s = ctx.load(input)?;
            let g = ctx.graph(&s)?;
            match format {
                Format::Json => Ok(pretty(&g.to_json())),
                Format::Dot => Ok(g.to_dot()),
                Format::Svg => Ok(render_graph_svg(&g)),
            }
        }
        Command::Components { input } => {
            let s = ctx.load(input)?;
            let g = ctx.graph(&s)?;
            let c = g.components();
            let m = g.metrics();
            Ok(pretty(&json!({
                "nodes": m.nodes,
                "edges": m.edges,
                "components": m.components,
                "status": format!("{:?}", c.status).to_lowercase(),
                "diameters": m.diameters,
                "groups": c.groups,
            })))
        }
        Command::Path {
            input,
            from,
            to,
            method,
        } => {
            let s = ctx.load(input)?;
            let (a, b) = (EdgeSet::parse_label(from)?, EdgeSet::parse_label(to)?);
            check_key(&s, &a)?;
            check_key(&s, &b)?;
            let moves = match method {
                Method::Bfs => ctx.graph(&s)?.shortest_path(&a, &b)?.ok_or(Error::Disconnected)?,
                Method::Constructive => constructive(&s, &a, &b)?,
            };
            match &s {
                Scenario::Polygon(p) => p.validate_walk(&a, &moves, &b)?,
                Scenario::PointSet(ps) => ps.validate_walk(&a, &moves, &b)?,
            }
            Ok(pretty(&json!({"length": moves.len(), "moves": moves_json(&moves)})))
        }
        Command::Triangulate { input } => {
            let s = ctx.load(input)?;
            let key = match &s {
                Scenario::Polygon(p) => p.triangulate()?.diagonals,
                Scenario::PointSet(_) => ctx.keys(&s)?.into_iter().next().ok_or(Error::NotTriangulable)?,
            };
            Ok(pretty(&json!({"key": key.label(), "edges": edges_to_json(&key)})))
        }
        Command::EuclideanPosition { input } => match ctx.load(input)? {
            Scenario::PointSet(ps) => Ok(pretty(&json!({"euclidean_position": ps.is_euclidean_position()?}))),
            Scenario::Polygon(_) => Err(Error::UnsupportedKind(
                "Euclidean position is defined for point sets".into(),
            )),
        },
        Command::Fixture { name, verify: run } => {
            let f = fixture(name)?;
            if *run {
                let report = verify(&f)?;
                let text = pretty(&serde_json::to_value(&report).expect("report serializes"));
                return if report.all_pass {
                    Ok(text)
                } else {
                    Err(Error::Construction(text))
                };
            }
            Ok(pretty(&f.to_json()))
        }
        Command::Verify {
            input: Some(input),
            key: Some(key),
        } => {
            let s = ctx.load(input)?;
            check_key(&s, &EdgeSet::parse_label(key)?)?;
            Ok(pretty(&json!({"valid": true})))
        }
        Command::Verify { input, key: None } => {
            let names = match input {
                Some(n) => vec![n.clone()],
                None => fixture_names(),
            };
            let reports = names.iter().map(|n| verify(&fixture(n)?)).collect::<Result<Vec<_>>>()?;
            let text = pretty(&serde_json::to_value(&reports).expect("reports serialize"));
            if reports.iter().all(|r| r.all_pass) {
                Ok(text)
            } else {
                Err(Error::Construction(text))
            }
        }
        Command::Verify {
            input: None,
            key: Some(_),
        } => Err(Error::Malformed("--key needs an input".into())),
        Command::Render { input, key } => {
            let s = ctx.load(input)?;
            let key = key.as_deref().map(EdgeSet::parse_label).transpose()?;
            if let Some(k) = &key {
                check_key(&s, k)?;
            }
            render_svg(&s, key.as_ref())
        }
    }
}

fn env_max_n() -> std::result::Result<Option<usize>, String> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{MAX_N_VAR} must be a number, got `{v}`")),
        Err(_) => Ok(None),
    }
}

fn error_json(code: &str, message: &str) -> Vec<u8> {
    pretty(&json!({"error": code, "message": message})).into_bytes()
}

/// Runs one invocation. `args` includes the program name.
pub fn run(args: &[String], stdin: &mut dyn Read) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text.into_bytes(), vec![])
            } else {
                (vec![], error_json("usage", &text))
            };
            return Outcome {
                code: if code == 0 { 0 } else { 2 },
                stdout,
                stderr,
            };
        }
    };
    let max_n = match env_max_n() {
        Ok(env) => cli.max_n.or(env),
        Err(msg) => {
            return Outcome {
                code: 2,
                stdout: vec![],
                stderr: error_json("usage", &msg),
            }
        }
    };
    let mut ctx = Context { max_n, stdin };
    match execute(&cli.command, &mut ctx) {
        Ok(text) => Outcome {
            code: 0,
            stdout: text.into_bytes(),
            stderr: vec![],
        },
        // A failed verification still prints its report.
        Err(Error::Construction(report)) if report.starts_with('{') || report.starts_with('[') => Outcome {
            code: 1,
            stdout: report.into_bytes(),
            stderr: error_json("verification-failed", "some expected properties do not hold"),
        },
        Err(e) => Outcome {
            code: if e.is_input_error() { 2 } else { 1 },
            stdout: vec![],
            stderr: error_json(e.code(), &e.to_string()),
        },
    }
}
