//! Euclidean polygons on a surface, given by a developed planar boundary.

mod diagonal;
mod enumerate;
mod quadrant;

use num::Zero;

use crate::edges::{edge, Edge, EdgeSet};
use crate::error::{Error, Result};
use crate::kernel::{
    is_simple, locate_unchecked, on_segment, orient, segments_intersect, signed_area2, Location, Pt, Scalar,
    SurfaceGroup, SurfaceKind, SurfacePoint,
};

pub(crate) use diagonal::triangulate_on;
pub use enumerate::{count_on, enumerate_on, first_on, triangles_of, DEFAULT_POLYGON_BOUND};

/// A disc-like region of a surface, stored as its developed boundary (counterclockwise).
#[derive(Clone, Debug)]
pub struct EuclideanPolygon {
    group: SurfaceGroup,
    vertices: Vec<Pt>,
    surface: Vec<SurfacePoint>,
    admissible: Vec<Vec<bool>>,
}

/// An admissible diagonal with its realizing chord.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagonal {
    pub i: usize,
    pub j: usize,
    pub start: Pt,
    pub end: Pt,
    pub length2: Scalar,
}

/// Diagonal set of a triangulation together with its triangles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    pub diagonals: EdgeSet,
    pub triangles: Vec<[usize; 3]>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExtremeLabels {
    pub top: bool,
    pub bottom: bool,
    pub left: bool,
    pub right: bool,
}

impl ExtremeLabels {
    pub fn any(&self) -> bool {
        self.top || self.bottom || self.left || self.right
    }

    pub fn names(&self) -> Vec<&'static str> {
        let mut out = vec![];
        for (on, name) in [
            (self.top, "top"),
            (self.bottom, "bottom"),
            (self.left, "left"),
            (self.right, "right"),
        ] {
            if on {
                out.push(name);
            }
        }
        out
    }
}

impl EuclideanPolygon {
    /// Full validation. A clockwise boundary is reversed to counterclockwise, keeping vertex 0 first.
    pub fn validate(group: SurfaceGroup, developed: Vec<Pt>) -> Result<Self> {
        let n = developed.len();
        if n < 3 {
            return Err(Error::Degenerate(format!("polygon needs at least 3 vertices, got {n}")));
        }
        for i in 0..n {
            if orient(&developed[(i + n - 1) % n], &developed[i], &developed[(i + 1) % n]) == 0 {
                return Err(Error::Degenerate(format!(
                    "vertex {i} is collinear with its neighbours"
                )));
            }
        }
        let poly = Self::from_development(group, developed)?;
        for i in 0..n {
            let j = (i + 1) % n;
            if !poly.group.realizes_segment(&poly.vertices[i], &poly.vertices[j])? {
                return Err(Error::EdgeNotSegment(i, j));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if poly.surface[i] == poly.surface[j] {
                    return Err(Error::RepeatedVertex(i, j));
                }
            }
        }
        poly.check_no_self_overlap()?;
        Ok(poly)
    }

    /// Builds a polygon from a simple developed cycle without the surface checks.
    /// Used for sub-polygons and channels whose edges are known to be segments.
    pub fn from_development(group: SurfaceGroup, mut developed: Vec<Pt>) -> Result<Self> {
        if developed.len() < 3 || !is_simple(&developed) {
            return Err(Error::NonSimple);
        }
        if signed_area2(&developed) < Scalar::zero() {
            developed[1..].reverse();
        }
        let surface = developed
            .iter()
            .map(|p| group.canonicalize(p))
            .collect::<Result<Vec<_>>>()?;
        let mut poly = EuclideanPolygon {
            group,
            vertices: developed,
            surface,
            admissible: vec![],
        };
        poly.admissible = poly.admissibility_matrix()?;
        Ok(poly)
    }

    pub fn group(&self) -> &SurfaceGroup {
        &self.group
    }

    pub fn kind(&self) -> SurfaceKind {
        self.group.kind()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Pt] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Pt {
        &self.vertices[i]
    }

    pub fn surface_points(&self) -> &[SurfacePoint] {
        &self.surface
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        let n = self.len();
        (i + 1) % n == j || (j + 1) % n == i
    }

    /// Rejects polygons meeting one of their own translates or mirror images.
    fn check_no_self_overlap(&self) -> Result<()> {
        if self.kind() == SurfaceKind::Plane {
            return Ok(());
        }
        let p0 = &self.vertices[0];
        let reach = self
            .vertices
            .iter()
            .map(|v| v.dist2(p0))
            .max()
            .unwrap_or_else(Scalar::zero);
        let r2 = reach * Scalar::from_integer(4.into());
        for (e, _) in self.group.orbit_within(p0, p0, &r2)? {
            if e.is_identity() {
                continue;
            }
            let m = self.group.element_motion(e)?;
            let copy: Vec<Pt> = self.vertices.iter().map(|v| m.apply(v)).collect();
            if self.meets(&copy) {
                return Err(Error::SelfOverlap);
            }
        }
        Ok(())
    }

    fn meets(&self, other: &[Pt]) -> bool {
        let n = self.len();
        let m = other.len();
        for i in 0..n {
            for j in 0..m {
                if segments_intersect(
                    (&self.vertices[i], &self.vertices[(i + 1) % n]),
                    (&other[j], &other[(j + 1) % m]),
                ) {
                    return true;
                }
            }
        }
        locate_unchecked(&other[0], &self.vertices) != Location::Outside
            || locate_unchecked(&self.vertices[0], other) != Location::Outside
    }

    fn admissibility_matrix(&self) -> Result<Vec<Vec<bool>>> {
        let n = self.len();
        let mut adm = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let ok =
                    self.chord_inside(i, j) && self.group.realizes_segment(&self.vertices[i], &self.vertices[j])?;
                adm[i][j] = ok;
                adm[j][i] = ok;
            }
        }
        Ok(adm)
    }

    /// The open chord between developed vertices `i` and `j` lies in the open polygon.
    fn chord_inside(&self, i: usize, j: usize) -> bool {
        let n = self.len();
        let (a, b) = (&self.vertices[i], &self.vertices[j]);
        for k in 0..n {
            if k != i && k != j && on_segment(a, b, &self.vertices[k]) {
                return false;
            }
        }
        for k in 0..n {
            let l = (k + 1) % n;
            if k == i || k == j || l == i || l == j {
                continue;
            }
            if segments_intersect((a, b), (&self.vertices[k], &self.vertices[l])) {
                return false;
            }
        }
        locate_unchecked(&a.midpoint(b), &self.vertices) == Location::Inside
    }

    pub fn is_admissible_diagonal(&self, i: usize, j: usize) -> Result<bool> {
        let n = self.len();
        if i >= n || j >= n {
            return Err(Error::Malformed(format!("vertex index out of range: ({i}, {j})")));
        }
        if i == j || self.are_adjacent(i, j) {
            return Err(Error::AdjacentVertices(i, j));
        }
        Ok(self.admissible[i][j])
    }

    /// Admissibility lookup that treats boundary edges as allowed and equal indices as not.
    pub(crate) fn chord_ok(&self, i: usize, j: usize) -> bool {
        i != j && (self.are_adjacent(i, j) || self.admissible[i][j])
    }

    pub fn admissible_diagonals(&self) -> Vec<Diagonal> {
        let n = self.len();
        let mut out = vec![];
        for i in 0..n {
            for j in i + 1..n {
                if self.admissible[i][j] {
                    out.push(self.diagonal(i, j));
                }
            }
        }
        out
    }

    fn diagonal(&self, i: usize, j: usize) -> Diagonal {
        let (start, end) = (self.vertices[i].clone(), self.vertices[j].clone());
        let length2 = start.dist2(&end);
        Diagonal {
            i,
            j,
            start,
            end,
            length2,
        }
    }

    fn full_cycle(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }

    /// All triangulations, in canonical order of their diagonal sets.
    pub fn enumerate_triangulations(&self) -> Result<Vec<Triangulation>> {
        self.enumerate_triangulations_bounded(DEFAULT_POLYGON_BOUND)
    }

    pub fn enumerate_triangulations_bounded(&self, bound: usize) -> Result<Vec<Triangulation>> {
        if self.len() > bound {
            return Err(Error::SizeBound {
                size: self.len(),
                bound,
            });
        }
        let cycle = self.full_cycle();
        let mut sets = enumerate_on(self, &cycle);
        sets.sort();
        Ok(sets.into_iter().map(|d| self.triangulation_from(d)).collect())
    }

    pub fn count_triangulations(&self) -> u128 {
        count_on(self, &self.full_cycle())
    }

    pub fn triangulation_from(&self, diagonals: EdgeSet) -> Triangulation {
        let triangles = triangles_of(&self.full_cycle(), &diagonals);
        Triangulation { diagonals, triangles }
    }

    /// Checks count identities, admissibility, non-crossing and triangular faces.
    pub fn validate_triangulation(&self, diagonals: &EdgeSet) -> Result<Triangulation> {
        let n = self.len();
        let bad = |m: String| Err(Error::InvalidTriangulation(m));
        if n < 3 || diagonals.len() != n - 3 {
            return bad(format!(
                "expected {} diagonals, got {}",
                n.saturating_sub(3),
                diagonals.len()
            ));
        }
        for (i, j) in diagonals.iter() {
            if j >= n || !self.is_admissible_diagonal(i, j).unwrap_or(false) {
                return bad(format!("({i},{j}) is not an admissible diagonal"));
            }
        }
        let list = diagonals.as_slice();
        for (x, &(a, b)) in list.iter().enumerate() {
            for &(c, d) in &list[x + 1..] {
                if cyclic_chords_cross(a, b, c, d) {
                    return Err(Error::CrossingEdges((a, b), (c, d)));
                }
            }
        }
        let t = self.triangulation_from(diagonals.clone());
        if t.triangles.len() != n - 2 {
            return bad(format!("expected {} triangles, got {}", n - 2, t.triangles.len()));
        }
        Ok(t)
    }

    pub fn extreme_vertices(&self) -> Vec<ExtremeLabels> {
        self.extreme_on(&self.full_cycle())
    }

    /// Extreme labels of the sub-polygon bounded by `cycle`, by position.
    pub(crate) fn extreme_on(&self, cycle: &[usize]) -> Vec<ExtremeLabels> {
        let m = cycle.len();
        (0..m)
            .map(|x| {
                let prev = &self.vertices[cycle[(x + m - 1) % m]];
                let next = &self.vertices[cycle[(x + 1) % m]];
                let v = &self.vertices[cycle[x]];
                if orient(prev, v, next) <= 0 {
                    return ExtremeLabels::default();
                }
                // Neither edge may point the wrong way and at least one must point the right way.
                let beyond = |p: &Scalar, q: &Scalar, c: &Scalar| (p <= c && q <= c) && (p < c || q < c);
                let neg = |s: &Scalar| -s.clone();
                ExtremeLabels {
                    top: beyond(&prev.y, &next.y, &v.y),
                    bottom: beyond(&neg(&prev.y), &neg(&next.y), &neg(&v.y)),
                    left: beyond(&neg(&prev.x), &neg(&next.x), &neg(&v.x)),
                    right: beyond(&prev.x, &next.x, &v.x),
                }
            })
            .collect()
    }

    pub fn earable_vertices(&self) -> Result<Vec<usize>> {
        let n = self.len();
        if n < 4 {
            return Err(Error::Degenerate(format!("ears need at least 4 vertices, got {n}")));
        }
        Ok((0..n)
            .filter(|&u| self.admissible[(u + n - 1) % n][(u + 1) % n])
            .collect())
    }

    pub fn empty_quadrant_obstruction(&self) -> Result<Option<Pt>> {
        quadrant::witness(self)
    }

    pub fn find_admissible_diagonal(&self) -> Result<Diagonal> {
        let (i, j) = diagonal::find_on(self, &self.full_cycle())?;
        Ok(self.diagonal(i, j))
    }

    pub fn triangulate(&self) -> Result<Triangulation> {
        let cycle = self.full_cycle();
        let diagonals = match self.kind() {
            SurfaceKind::Plane | SurfaceKind::Cylinder => diagonal::triangulate_on(self, &cycle)?,
            _ => first_on(self, &cycle).ok_or(Error::NotTriangulable)?,
        };
        Ok(self.triangulation_from(diagonals))
    }
}

/// Two chords of a convex cycle labelled `0..n` cross iff their endpoints interleave.
pub fn cyclic_chords_cross(a: usize, b: usize, c: usize, d: usize) -> bool {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let inside = |x: usize| a < x && x < b;
    if [c, d].iter().any(|x| *x == a || *x == b) {
        return false;
    }
    inside(c) != inside(d)
}

/// Triangle given by its three edges.
pub fn triangle_edges(t: &[usize; 3]) -> [Edge; 3] {
    [edge(t[0], t[1]), edge(t[1], t[2]), edge(t[0], t[2])]
}
