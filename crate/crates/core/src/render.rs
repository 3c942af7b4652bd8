//! Static SVG pictures of a scenario in the plane: translated fundamental
//! domains, nearby orbit copies in grey, the geometry itself in black and an
//! optional triangulation highlighted.

use std::fmt::Write;

use crate::edges::EdgeSet;
use crate::error::Result;
use crate::flips::FlipGraph;
use crate::io::Scenario;
use crate::kernel::{int, ratio, GroupElement, Motion, Pt, SurfaceGroup, SurfaceKind};

const SIZE: f64 = 480.0;

struct Frame {
    min: (f64, f64),
    scale: f64,
    height: f64,
}

impl Frame {
    fn new(points: &[(f64, f64)]) -> Frame {
        let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
        for &(x, y) in points {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-9);
        let pad = span * 0.05;
        let scale = SIZE / (span + 2.0 * pad);
        let height = (hi.1 - lo.1 + 2.0 * pad) * scale;
        Frame {
            min: (lo.0 - pad, lo.1 - pad),
            scale,
            height,
        }
    }

    fn map(&self, p: (f64, f64)) -> (f64, f64) {
        (
            (p.0 - self.min.0) * self.scale,
            self.height - (p.1 - self.min.1) * self.scale,
        )
    }
}

fn elements(g: &SurfaceGroup) -> Vec<GroupElement> {
    let r: Vec<i64> = (-1..=1).collect();
    match g.kind() {
        SurfaceKind::Plane => vec![],
        SurfaceKind::Cylinder | SurfaceKind::TwistedCylinder => r
            .iter()
            .filter(|&&k| k != 0)
            .map(|&k| GroupElement::new(k, 0))
            .collect(),
        SurfaceKind::Torus | SurfaceKind::KleinBottle => r
            .iter()
            .flat_map(|&a| r.iter().map(move |&b| GroupElement::new(a, b)))
            .filter(|e| !e.is_identity())
            .collect(),
    }
}

fn f(p: &Pt) -> (f64, f64) {
    p.to_f64()
}

fn line(out: &mut String, fr: &Frame, a: (f64, f64), b: (f64, f64), class: &str) {
    let (p, q) = (fr.map(a), fr.map(b));
    let _ = writeln!(
        out,
        r#"  <line class="{class}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
        p.0, p.1, q.0, q.1
    );
}

/// Edges of one copy of the geometry: polygon boundary or, for a point set, every segment.
fn outline(s: &Scenario) -> Vec<(Pt, Pt)> {
    match s {
        Scenario::Polygon(p) => (0..p.len())
            .map(|i| (p.vertex(i).clone(), p.vertex((i + 1) % p.len()).clone()))
            .collect(),
        Scenario::PointSet(ps) => ps
            .admissible_point_segments()
            .iter()
            .filter_map(|&(i, j)| ps.segment(i, j).map(|g| (g.start.clone(), g.end.clone())))
            .collect(),
    }
}

fn highlighted(s: &Scenario, key: &EdgeSet) -> Vec<(Pt, Pt)> {
    key.iter()
        .filter_map(|(i, j)| match s {
            Scenario::Polygon(p) => Some((p.vertex(i).clone(), p.vertex(j).clone())),
            Scenario::PointSet(ps) => ps.segment(i, j).map(|g| (g.start.clone(), g.end.clone())),
        })
        .collect()
}

fn base_points(s: &Scenario) -> Vec<Pt> {
    match s {
        Scenario::Polygon(p) => p.vertices().to_vec(),
        Scenario::PointSet(ps) => (0..ps.len()).map(|i| ps.point(i).clone()).collect(),
    }
}

/// Corners of the fundamental parallelogram (or a long piece of the strip) moved by `m`.
fn cell(g: &SurfaceGroup, m: &Motion, reach: f64) -> Vec<(f64, f64)> {
    let a = g.primary_vector().clone();
    let (base, b) = match g.kind() {
        SurfaceKind::Torus | SurfaceKind::KleinBottle => (Pt::zero(), g.secondary_vector().clone()),
        _ => {
            let (x, y) = f(&a);
            let k = int((reach / (x * x + y * y).sqrt()).ceil() as i64);
            let b = a.perp().scale(&k);
            (b.scale(&ratio(-1, 2)), b)
        }
    };
    [Pt::zero(), a.clone(), &a + &b, b]
        .iter()
        .map(|c| f(&m.apply(&(&base + c))))
        .collect()
}

/// SVG document; `key` selects the triangulation edges to highlight.
pub fn render_svg(s: &Scenario, key: Option<&EdgeSet>) -> Result<String> {
    let g = s.group();
    let copies: Vec<Motion> = elements(g)
        .into_iter()
        .map(|e| g.element_motion(e))
        .collect::<Result<_>>()?;
    let base = outline(s);
    let mut extent: Vec<(f64, f64)> = base.iter().flat_map(|(a, b)| [f(a), f(b)]).collect();
    extent.extend(base_points(s).iter().map(f));
    let reach = extent.iter().map(|p| p.0.abs().max(p.1.abs())).fold(1.0, f64::max) * 2.0;
    let mut cells = vec![];
    if g.kind() != SurfaceKind::Plane {
        cells.push(cell(g, &Motion::Identity, reach));
        cells.extend(copies.iter().map(|m| cell(g, m, reach)));
    }
    let mut shown = extent.clone();
    for m in &copies {
        shown.extend(base.iter().flat_map(|(a, b)| [f(&m.apply(a)), f(&m.apply(b))]));
    }
    let fr = Frame::new(&shown);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE:.0}" height="{:.0}" viewBox="0 0 {SIZE:.0} {:.0}">"#,
        fr.height, fr.height
    );
    out.push_str("  <style>.domain{fill:none;stroke:#cde;stroke-dasharray:4 3}.copy{stroke:#bbb}.edge{stroke:#000;stroke-width:1.5}.segment{stroke:#888}.diagonal{stroke:#c22;stroke-width:1.5}.vertex{fill:#000}</style>\n");
    for c in &cells {
        let pts: Vec<String> = c
            .iter()
            .map(|&p| fr.map(p))
            .map(|(x, y)| format!("{x:.3},{y:.3}"))
            .collect();
        let _ = writeln!(out, r#"  <polygon class="domain" points="{}"/>"#, pts.join(" "));
    }
    for m in &copies {
        for (a, b) in &base {
            line(&mut out, &fr, f(&m.apply(a)), f(&m.apply(b)), "copy");
        }
    }
    let base_class = match s {
        Scenario::Polygon(_) => "edge",
        Scenario::PointSet(_) => "segment",
    };
    let marked = key.map(|k| highlighted(s, k)).unwrap_or_default();
    for (a, b) in &base {
        if matches!(s, Scenario::PointSet(_)) && key.is_some() {
            break;
        }
        line(&mut out, &fr, f(a), f(b), base_class);
    }
    for (a, b) in &marked {
        line(&mut out, &fr, f(a), f(b), "diagonal");
    }
    for p in base_points(s) {
        let (x, y) = fr.map(f(&p));
        let _ = writeln!(out, r#"  <circle class="vertex" cx="{x:.3}" cy="{y:.3}" r="3"/>"#);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// SVG of a flip graph: nodes evenly spaced on a circle, one line per flip.
pub fn render_graph_svg(g: &FlipGraph) -> String {
    let n = g.len().max(1) as f64;
    let centre = SIZE / 2.0;
    let radius = SIZE * 0.42;
    let at = |i: usize| {
        let t = std::f64::consts::TAU * i as f64 / n;
        (centre + radius * t.cos(), centre - radius * t.sin())
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE:.0}" height="{SIZE:.0}" viewBox="0 0 {SIZE:.0} {SIZE:.0}">"#
    );
    out.push_str("  <style>.flip{stroke:#555}.node{fill:#c22}</style>\n");
    for (a, b) in g.edge_list() {
        let (p, q) = (at(a), at(b));
        let _ = writeln!(
            out,
            r#"  <line class="flip" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
            p.0, p.1, q.0, q.1
        );
    }
    for (i, key) in g.nodes().iter().enumerate() {
        let (x, y) = at(i);
        let _ = writeln!(
            out,
            r#"  <circle class="node" cx="{x:.3}" cy="{y:.3}" r="4"><title>{}</title></circle>"#,
            key.label()
        );
    }
    out.push_str("</svg>\n");
    out
}
