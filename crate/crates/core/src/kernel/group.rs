//! The five uniformly discontinuous motion groups, their orbits, quotient
//! distance and the segment (unique shortest geodesic) decision.

use std::fmt;

use num::{Integer, Signed, ToPrimitive, Zero};

use super::motion::{times, Line, Motion};
use super::predicates::segments_properly_cross;
use super::scalar::{to_f64, Pt, Scalar};
use crate::error::{Error, Result};

/// Largest absolute exponent a group element may carry.
pub const EXPONENT_BOUND: i64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceKind {
    Plane,
    Cylinder,
    TwistedCylinder,
    Torus,
    KleinBottle,
}

impl SurfaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SurfaceKind::Plane => "plane",
            SurfaceKind::Cylinder => "cylinder",
            SurfaceKind::TwistedCylinder => "twisted-cylinder",
            SurfaceKind::Torus => "torus",
            SurfaceKind::KleinBottle => "klein-bottle",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "plane" => SurfaceKind::Plane,
            "cylinder" => SurfaceKind::Cylinder,
            "twisted-cylinder" => SurfaceKind::TwistedCylinder,
            "torus" => SurfaceKind::Torus,
            "klein-bottle" => SurfaceKind::KleinBottle,
            _ => return None,
        })
    }

    pub fn is_orientable(self) -> bool {
        !matches!(self, SurfaceKind::TwistedCylinder | SurfaceKind::KleinBottle)
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Group element in closed form.
///
/// * cylinder: `a^k1`
/// * twisted cylinder: `g^k1`
/// * torus: `a^k1 b^k2`
/// * Klein bottle: `g^k1 t^k2` (glide after translation)
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupElement {
    pub k1: i64,
    pub k2: i64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { k1: 0, k2: 0 };

    pub fn new(k1: i64, k2: i64) -> Self {
        GroupElement { k1, k2 }
    }

    pub fn is_identity(&self) -> bool {
        self.k1 == 0 && self.k2 == 0
    }
}

/// A uniformly discontinuous group of plane motions.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceGroup {
    kind: SurfaceKind,
    generators: Vec<Motion>,
    /// Translation vector (cylinder, torus first, Klein bottle) or glide vector.
    a: Pt,
    /// Second torus translation, or the Klein bottle translation.
    b: Pt,
    axis: Option<Line>,
    flat: bool,
}

impl SurfaceGroup {
    pub fn plane() -> Self {
        SurfaceGroup {
            kind: SurfaceKind::Plane,
            generators: vec![],
            a: Pt::zero(),
            b: Pt::zero(),
            axis: None,
            flat: false,
        }
    }

    pub fn cylinder(a: Pt) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::BadGroup("translation vector must be nonzero".into()));
        }
        Ok(SurfaceGroup {
            kind: SurfaceKind::Cylinder,
            generators: vec![Motion::Translation(a.clone())],
            a,
            b: Pt::zero(),
            axis: None,
            flat: false,
        })
    }

    pub fn twisted_cylinder(axis: Line, v: Pt) -> Result<Self> {
        let g = Motion::glide(axis.clone(), v.clone())?;
        Ok(SurfaceGroup {
            kind: SurfaceKind::TwistedCylinder,
            generators: vec![g],
            a: v,
            b: Pt::zero(),
            axis: Some(axis),
            flat: false,
        })
    }

    pub fn torus(a: Pt, b: Pt) -> Result<Self> {
        if a.cross(&b).is_zero() {
            return Err(Error::BadGroup("torus translations must be non-collinear".into()));
        }
        let flat = a.dot(&b).is_zero();
        Ok(SurfaceGroup {
            kind: SurfaceKind::Torus,
            generators: vec![Motion::Translation(a.clone()), Motion::Translation(b.clone())],
            a,
            b,
            axis: None,
            flat,
        })
    }

    /// Glide reflection along `axis` by `v`, together with translation `t` orthogonal to the axis.
    pub fn klein_bottle(t: Pt, axis: Line, v: Pt) -> Result<Self> {
        let g = Motion::glide(axis.clone(), v.clone())?;
        if t.is_zero() || !t.dot(&axis.direction).is_zero() {
            return Err(Error::BadGroup(
                "Klein bottle translation must be nonzero and orthogonal to the glide axis".into(),
            ));
        }
        Ok(SurfaceGroup {
            kind: SurfaceKind::KleinBottle,
            generators: vec![Motion::Translation(t.clone()), g],
            a: v,
            b: t,
            axis: Some(axis),
            flat: false,
        })
    }

    /// Builds a group from a kind and a generator list, checking the generator shape.
    pub fn from_generators(kind: SurfaceKind, gens: Vec<Motion>) -> Result<Self> {
        let bad = |m: &str| Error::BadGroup(format!("{kind}: {m}"));
        match kind {
            SurfaceKind::Plane => {
                if gens.iter().all(|g| matches!(g, Motion::Identity)) {
                    Ok(Self::plane())
                } else {
                    Err(bad("expected no generators"))
                }
            }
            SurfaceKind::Cylinder => match gens.as_slice() {
                [Motion::Translation(a)] => Self::cylinder(a.clone()),
                _ => Err(bad("expected one translation")),
            },
            SurfaceKind::TwistedCylinder => match gens.as_slice() {
                [Motion::GlideReflection { axis, vector }] => Self::twisted_cylinder(axis.clone(), vector.clone()),
                _ => Err(bad("expected one glide reflection")),
            },
            SurfaceKind::Torus => match gens.as_slice() {
                [Motion::Translation(a), Motion::Translation(b)] => Self::torus(a.clone(), b.clone()),
                _ => Err(bad("expected two translations")),
            },
            SurfaceKind::KleinBottle => match gens.as_slice() {
                [Motion::Translation(t), Motion::GlideReflection { axis, vector }]
                | [Motion::GlideReflection { axis, vector }, Motion::Translation(t)] => {
                    Self::klein_bottle(t.clone(), axis.clone(), vector.clone())
                }
                _ => Err(bad("expected one translation and one glide reflection")),
            },
        }
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn generators(&self) -> &[Motion] {
        &self.generators
    }

    /// True iff this is a torus with orthogonal generators.
    pub fn is_flat_torus(&self) -> bool {
        self.kind == SurfaceKind::Torus && self.flat
    }

    /// First displacement vector: the cylinder/torus translation `a`, or the glide vector.
    pub fn primary_vector(&self) -> &Pt {
        &self.a
    }

    /// Second torus translation or the Klein bottle translation (zero otherwise).
    pub fn secondary_vector(&self) -> &Pt {
        &self.b
    }

    pub fn axis(&self) -> Option<&Line> {
        self.axis.as_ref()
    }

    fn check(e: GroupElement) -> Result<()> {
        for k in [e.k1, e.k2] {
            if k.abs() > EXPONENT_BOUND {
                return Err(Error::ExponentOverflow(k));
            }
        }
        Ok(())
    }

    /// Whether the element reverses orientation.
    pub fn parity(&self, e: GroupElement) -> bool {
        !self.kind.is_orientable() && e.k1.is_odd()
    }

    /// Closed-form motion of a group element.
    pub fn element_motion(&self, e: GroupElement) -> Result<Motion> {
        Self::check(e)?;
        Ok(match self.kind {
            SurfaceKind::Plane => Motion::Identity,
            SurfaceKind::Cylinder => Motion::translation(times(&self.a, e.k1)),
            SurfaceKind::Torus => Motion::translation(&times(&self.a, e.k1) + &times(&self.b, e.k2)),
            SurfaceKind::TwistedCylinder => {
                let axis = self.axis.clone().expect("glide axis");
                if e.k1.is_even() {
                    Motion::translation(times(&self.a, e.k1))
                } else {
                    Motion::GlideReflection {
                        axis,
                        vector: times(&self.a, e.k1),
                    }
                }
            }
            SurfaceKind::KleinBottle => {
                let axis = self.axis.clone().expect("glide axis");
                if e.k1.is_even() {
                    Motion::translation(&times(&self.a, e.k1) + &times(&self.b, e.k2))
                } else {
                    // g^k1 (p + k2 t) = R(p - o) + o - k2 t + k1 v
                    let half = Scalar::new(e.k2.into(), 2.into());
                    let point = &axis.point - &self.b.scale(&half);
                    Motion::GlideReflection {
                        axis: Line {
                            point,
                            direction: axis.direction,
                        },
                        vector: times(&self.a, e.k1),
                    }
                }
            }
        })
    }

    /// `e` after `f`.
    pub fn compose(&self, e: GroupElement, f: GroupElement) -> GroupElement {
        match self.kind {
            SurfaceKind::Plane => GroupElement::IDENTITY,
            SurfaceKind::KleinBottle => {
                let s = if f.k1.is_odd() { -1 } else { 1 };
                GroupElement::new(e.k1 + f.k1, s * e.k2 + f.k2)
            }
            _ => GroupElement::new(e.k1 + f.k1, e.k2 + f.k2),
        }
    }

    pub fn inverse(&self, e: GroupElement) -> GroupElement {
        match self.kind {
            SurfaceKind::KleinBottle => {
                let s = if e.k1.is_odd() { -1 } else { 1 };
                GroupElement::new(-e.k1, s * -e.k2)
            }
            _ => GroupElement::new(-e.k1, -e.k2),
        }
    }

    /// Normalized coordinates `(alpha, beta)` used for fundamental domains and lift bounds.
    pub(crate) fn coords(&self, p: &Pt) -> (Scalar, Scalar) {
        match self.kind {
            SurfaceKind::Plane => (Scalar::zero(), Scalar::zero()),
            SurfaceKind::Cylinder => (p.dot(&self.a) / self.a.norm2(), p.cross(&self.a) / self.a.norm2()),
            SurfaceKind::Torus => {
                let det = self.a.cross(&self.b);
                (p.cross(&self.b) / &det, self.a.cross(p) / &det)
            }
            SurfaceKind::TwistedCylinder | SurfaceKind::KleinBottle => {
                let axis = self.axis.as_ref().expect("glide axis");
                let rel = p - &axis.point;
                let alpha = rel.dot(&self.a) / self.a.norm2();
                let beta = if self.kind == SurfaceKind::KleinBottle {
                    rel.dot(&self.b) / self.b.norm2()
                } else {
                    self.a.cross(&rel) / self.a.norm2()
                };
                (alpha, beta)
            }
        }
    }

    /// Element moving `p` into the canonical half-open fundamental domain, and the image.
    pub fn canonical_lift(&self, p: &Pt) -> Result<(GroupElement, Pt)> {
        let floor = |s: &Scalar| -> Result<i64> {
            let f = s.floor().to_integer();
            f.to_i64()
                .filter(|k| k.abs() <= EXPONENT_BOUND)
                .ok_or(Error::ExponentOverflow(i64::MAX))
        };
        let (alpha, beta) = self.coords(p);
        let e = match self.kind {
            SurfaceKind::Plane => GroupElement::IDENTITY,
            SurfaceKind::Cylinder | SurfaceKind::TwistedCylinder => GroupElement::new(-floor(&alpha)?, 0),
            SurfaceKind::Torus => GroupElement::new(-floor(&alpha)?, -floor(&beta)?),
            SurfaceKind::KleinBottle => {
                let first = GroupElement::new(-floor(&alpha)?, 0);
                let q = self.element_motion(first)?.apply(p);
                let (_, beta_q) = self.coords(&q);
                let second = GroupElement::new(0, -floor(&beta_q)?);
                self.compose(second, first)
            }
        };
        let image = self.element_motion(e)?.apply(p);
        Ok((e, image))
    }

    pub fn canonicalize(&self, p: &Pt) -> Result<SurfacePoint> {
        Ok(SurfacePoint {
            rep: self.canonical_lift(p)?.1,
        })
    }

    /// Orbit points of `p` within squared distance `r2` of `center`, with their elements.
    pub fn orbit_within(&self, p: &Pt, center: &Pt, r2: &Scalar) -> Result<Vec<(GroupElement, Pt)>> {
        if r2.is_negative() {
            return Ok(vec![]);
        }
        let radius = to_f64(r2).max(0.0).sqrt() * (1.0 + 1e-9) + 1e-9;
        let (pa, pb) = self.coords(p);
        let (ca, cb) = self.coords(center);
        let (pa, pb, ca, cb) = (to_f64(&pa), to_f64(&pb), to_f64(&ca), to_f64(&cb));
        let range = |lo: f64, hi: f64| -> Result<(i64, i64)> {
            let lo = lo.floor() - 1.0;
            let hi = hi.ceil() + 1.0;
            let bound = EXPONENT_BOUND as f64;
            if !(lo.is_finite() && hi.is_finite()) || lo < -bound || hi > bound {
                return Err(Error::ExponentOverflow(if hi.is_finite() {
                    hi as i64
                } else {
                    i64::MAX
                }));
            }
            Ok((lo as i64, hi as i64))
        };
        let mut elems = Vec::new();
        match self.kind {
            SurfaceKind::Plane => elems.push(GroupElement::IDENTITY),
            SurfaceKind::Cylinder | SurfaceKind::TwistedCylinder => {
                let ra = radius / to_f64(&self.a.norm2()).sqrt();
                let (lo, hi) = range(ca - pa - ra, ca - pa + ra)?;
                elems.extend((lo..=hi).map(|k| GroupElement::new(k, 0)));
            }
            SurfaceKind::Torus => {
                let det = to_f64(&self.a.cross(&self.b)).abs();
                let ra = radius * to_f64(&self.b.norm2()).sqrt() / det;
                let rb = radius * to_f64(&self.a.norm2()).sqrt() / det;
                let (lo1, hi1) = range(ca - pa - ra, ca - pa + ra)?;
                let (lo2, hi2) = range(cb - pb - rb, cb - pb + rb)?;
                for k1 in lo1..=hi1 {
                    for k2 in lo2..=hi2 {
                        elems.push(GroupElement::new(k1, k2));
                    }
                }
            }
            SurfaceKind::KleinBottle => {
                let ra = radius / to_f64(&self.a.norm2()).sqrt();
                let rb = radius / to_f64(&self.b.norm2()).sqrt();
                let (lo1, hi1) = range(ca - pa - ra, ca - pa + ra)?;
                for k1 in lo1..=hi1 {
                    let s = if k1.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
                    let (lo2, hi2) = range(s * cb - pb - rb, s * cb - pb + rb)?;
                    elems.extend((lo2..=hi2).map(|k2| GroupElement::new(k1, k2)));
                }
            }
        }
        let mut out = Vec::new();
        for e in elems {
            let q = self.element_motion(e)?.apply(p);
            if &q.dist2(center) <= r2 {
                out.push((e, q));
            }
        }
        Ok(out)
    }

    /// Orbit points of a surface point within squared distance `r2` of `center`.
    pub fn lifts_within(&self, p: &SurfacePoint, center: &Pt, r2: &Scalar) -> Result<Vec<(GroupElement, Pt)>> {
        self.orbit_within(&p.rep, center, r2)
    }

    /// Nearest lifts of the orbit of `target` as seen from the planar point `from`.
    pub fn nearest_lifts(&self, from: &Pt, target: &Pt) -> Result<Distance> {
        let r2 = from.dist2(target);
        let lifts = self.orbit_within(target, from, &r2)?;
        let mut best: Option<Scalar> = None;
        for (_, q) in &lifts {
            let d = q.dist2(from);
            if best.as_ref().is_none_or(|b| &d < b) {
                best = Some(d);
            }
        }
        let dist2 = best.expect("target itself is within range");
        let mut minimizers: Vec<(GroupElement, Pt)> =
            lifts.into_iter().filter(|(_, q)| q.dist2(from) == dist2).collect();
        minimizers.sort_by(|x, y| x.1.cmp(&y.1));
        let count = minimizers.len();
        let (element, nearest_lift) = minimizers.swap_remove(0);
        Ok(Distance {
            dist2,
            minimizer_count: count,
            nearest_lift,
            element,
        })
    }

    /// Quotient distance from `a` to `b`, measured from `a`'s canonical representative.
    pub fn quotient_distance(&self, a: &SurfacePoint, b: &SurfacePoint) -> Result<Distance> {
        self.nearest_lifts(&a.rep, &b.rep)
    }

    /// The segment joining `a` and `b`, or `None` when the shortest geodesic is not unique.
    pub fn segment_between(&self, a: &SurfacePoint, b: &SurfacePoint) -> Result<Option<LiftedSegment>> {
        if a == b {
            return Err(Error::Degenerate("segment endpoints coincide".into()));
        }
        let d = self.quotient_distance(a, b)?;
        Ok((d.minimizer_count == 1).then(|| LiftedSegment {
            start: a.rep.clone(),
            end: d.nearest_lift,
            length2: d.dist2,
            element: d.element,
        }))
    }

    /// The planar chord `p`-`q` is the unique shortest geodesic between the orbits.
    pub fn realizes_segment(&self, p: &Pt, q: &Pt) -> Result<bool> {
        let d = self.nearest_lifts(p, q)?;
        Ok(!d.dist2.is_zero() && d.minimizer_count == 1 && &d.nearest_lift == q)
    }

    /// Every lift of `s2` that can meet the lifted segment `s1`, with its element.
    pub fn nearby_lifts_of_segment(&self, s1: (&Pt, &Pt), s2: (&Pt, &Pt)) -> Result<Vec<(GroupElement, Pt, Pt)>> {
        let l1 = s1.0.dist2(s1.1);
        let l2 = s2.0.dist2(s2.1);
        // (|s1| + |s2|)^2 <= 2 (|s1|^2 + |s2|^2)
        let two = Scalar::from_integer(2.into());
        let r2 = (l1 + l2) * two;
        let mut out = Vec::new();
        for (e, start) in self.orbit_within(s2.0, s1.0, &r2)? {
            let end = self.element_motion(e)?.apply(s2.1);
            out.push((e, start, end));
        }
        Ok(out)
    }

    /// The segment of `e1` properly crosses some lift of the segment of `e2`.
    pub fn surface_segments_cross(
        &self,
        e1: (&SurfacePoint, &SurfacePoint),
        e2: (&SurfacePoint, &SurfacePoint),
    ) -> Result<bool> {
        let no_segment = || Error::Degenerate("pair has no segment".into());
        let s1 = self.segment_between(e1.0, e1.1)?.ok_or_else(no_segment)?;
        let s2 = self.segment_between(e2.0, e2.1)?.ok_or_else(no_segment)?;
        for (_, a, b) in self.nearby_lifts_of_segment((&s1.start, &s1.end), (&s2.start, &s2.end))? {
            if segments_properly_cross((&s1.start, &s1.end), (&a, &b)) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// A point of the quotient surface, stored by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfacePoint {
    rep: Pt,
}

impl SurfacePoint {
    pub fn rep(&self) -> &Pt {
        &self.rep
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Distance {
    pub dist2: Scalar,
    pub minimizer_count: usize,
    /// Lexicographically least minimizing lift.
    pub nearest_lift: Pt,
    pub element: GroupElement,
}

/// A segment realized in the plane: canonical lift of the source, specific lift of the target.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftedSegment {
    pub start: Pt,
    pub end: Pt,
    pub length2: Scalar,
    /// Element carrying the target's canonical representative to `end`.
    pub element: GroupElement,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::ratio;

    fn pt(x: (i64, i64), y: (i64, i64)) -> Pt {
        Pt::from_ratios(x, y)
    }

    fn unit_cylinder() -> SurfaceGroup {
        SurfaceGroup::cylinder(Pt::ints(1, 0)).unwrap()
    }

    fn unit_torus() -> SurfaceGroup {
        SurfaceGroup::torus(Pt::ints(1, 0), Pt::ints(0, 1)).unwrap()
    }

    fn unit_twisted() -> SurfaceGroup {
        SurfaceGroup::twisted_cylinder(Line::x_axis(), Pt::ints(1, 0)).unwrap()
    }

    #[test]
    fn element_motion_examples() {
        let c = unit_cylinder();
        assert_eq!(
            c.element_motion(GroupElement::new(3, 0)).unwrap(),
            Motion::Translation(Pt::ints(3, 0))
        );
        let t = unit_twisted();
        assert_eq!(
            t.element_motion(GroupElement::new(2, 0)).unwrap(),
            Motion::Translation(Pt::ints(2, 0))
        );
        assert_eq!(
            t.element_motion(GroupElement::new(-1, 0)).unwrap(),
            Motion::glide(Line::x_axis(), Pt::ints(-1, 0)).unwrap()
        );
        assert!(matches!(
            c.element_motion(GroupElement::new(EXPONENT_BOUND + 1, 0)),
            Err(Error::ExponentOverflow(_))
        ));
    }

    #[test]
    fn closed_form_matches_words() {
        let k = SurfaceGroup::klein_bottle(Pt::ints(0, 2), Line::x_axis(), Pt::ints(1, 0)).unwrap();
        let g = &k.generators()[1];
        let t = &k.generators()[0];
        let p = pt((1, 3), (2, 7));
        for k1 in -3i64..=3 {
            for k2 in -3i64..=3 {
                let mut word = Motion::Identity;
                for _ in 0..k2.abs() {
                    word = word.compose(&if k2 > 0 { t.clone() } else { t.inverse() });
                }
                let mut glide = Motion::Identity;
                for _ in 0..k1.abs() {
                    glide = glide.compose(&if k1 > 0 { g.clone() } else { g.inverse() });
                }
                let word = glide.compose(&word);
                let closed = k.element_motion(GroupElement::new(k1, k2)).unwrap();
                assert_eq!(closed.apply(&p), word.apply(&p), "k1={k1} k2={k2}");
                assert_eq!(closed.reverses_orientation(), k.parity(GroupElement::new(k1, k2)));
            }
        }
    }

    #[test]
    fn group_composition_matches_motions() {
        let groups = [
            unit_cylinder(),
            unit_twisted(),
            SurfaceGroup::torus(Pt::ints(1, 0), pt((1, 2), (1, 1))).unwrap(),
            SurfaceGroup::klein_bottle(Pt::ints(0, 2), Line::x_axis(), Pt::ints(1, 0)).unwrap(),
        ];
        let p = pt((2, 5), (-1, 3));
        for g in &groups {
            for e in [
                GroupElement::new(1, 2),
                GroupElement::new(-3, 1),
                GroupElement::new(2, -1),
            ] {
                for f in [
                    GroupElement::new(1, -1),
                    GroupElement::new(0, 3),
                    GroupElement::new(-1, 0),
                ] {
                    let (e, f) = match g.kind() {
                        SurfaceKind::Cylinder | SurfaceKind::TwistedCylinder => {
                            (GroupElement::new(e.k1, 0), GroupElement::new(f.k1, 0))
                        }
                        _ => (e, f),
                    };
                    let composed = g.element_motion(g.compose(e, f)).unwrap();
                    let direct = g.element_motion(e).unwrap().compose(&g.element_motion(f).unwrap());
                    assert_eq!(composed.apply(&p), direct.apply(&p));
                    let inv = g.element_motion(g.inverse(e)).unwrap();
                    assert_eq!(inv.apply(&g.element_motion(e).unwrap().apply(&p)), p);
                }
            }
        }
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(
            unit_cylinder().canonicalize(&pt((17, 10), (3, 1))).unwrap().rep(),
            &pt((7, 10), (3, 1))
        );
        assert_eq!(
            unit_twisted().canonicalize(&pt((3, 2), (1, 4))).unwrap().rep(),
            &pt((1, 2), (-1, 4))
        );
        assert_eq!(
            unit_torus().canonicalize(&pt((-1, 4), (5, 4))).unwrap().rep(),
            &pt((3, 4), (1, 4))
        );
    }

    #[test]
    fn lifts_examples() {
        let plane = SurfaceGroup::plane();
        let p = plane.canonicalize(&pt((1, 3), (2, 1))).unwrap();
        assert_eq!(
            plane.lifts_within(&p, p.rep(), &ratio(5, 1)).unwrap(),
            vec![(GroupElement::IDENTITY, p.rep().clone())]
        );

        let c = unit_cylinder();
        let p = c.canonicalize(&pt((1, 10), (0, 1))).unwrap();
        let lifts: Vec<Pt> = c
            .lifts_within(&p, p.rep(), &ratio(1, 1))
            .unwrap()
            .into_iter()
            .map(|x| x.1)
            .collect();
        assert_eq!(
            lifts,
            vec![pt((-9, 10), (0, 1)), pt((1, 10), (0, 1)), pt((11, 10), (0, 1))]
        );

        let t = unit_torus();
        let o = t.canonicalize(&Pt::zero()).unwrap();
        assert_eq!(t.lifts_within(&o, &Pt::zero(), &ratio(1, 2)).unwrap().len(), 1);
        let mut four: Vec<Pt> = t
            .lifts_within(&o, &Pt::zero(), &ratio(1, 1))
            .unwrap()
            .into_iter()
            .map(|x| x.1)
            .collect();
        four.sort();
        assert_eq!(
            four,
            vec![
                Pt::ints(-1, 0),
                Pt::ints(0, -1),
                Pt::ints(0, 0),
                Pt::ints(0, 1),
                Pt::ints(1, 0)
            ]
        );
    }

    #[test]
    fn distance_examples() {
        let c = unit_cylinder();
        let a = c.canonicalize(&pt((1, 10), (0, 1))).unwrap();
        let b = c.canonicalize(&pt((9, 10), (0, 1))).unwrap();
        let d = c.quotient_distance(&a, &b).unwrap();
        assert_eq!((d.dist2.clone(), d.minimizer_count), (ratio(1, 25), 1));
        assert_eq!(d.nearest_lift, pt((-1, 10), (0, 1)));
        let s = c.segment_between(&a, &b).unwrap().unwrap();
        assert_eq!(s.end, pt((-1, 10), (0, 1)));
        assert_eq!(s.length2, ratio(1, 25));

        let t = unit_torus();
        let o = t.canonicalize(&Pt::zero()).unwrap();
        let h = t.canonicalize(&pt((1, 2), (0, 1))).unwrap();
        let d = t.quotient_distance(&o, &h).unwrap();
        assert_eq!((d.dist2, d.minimizer_count), (ratio(1, 4), 2));
        assert_eq!(t.segment_between(&o, &h).unwrap(), None);
        assert_eq!(t.quotient_distance(&o, &o).unwrap().minimizer_count, 1);
        assert!(t.segment_between(&o, &o).is_err());

        let p = t.canonicalize(&pt((1, 10), (1, 10))).unwrap();
        let q = t.canonicalize(&pt((4, 10), (2, 10))).unwrap();
        let s = t.segment_between(&p, &q).unwrap().unwrap();
        assert_eq!(s.end, pt((2, 5), (1, 5)));
        assert_eq!(s.length2, ratio(1, 10));
    }

    #[test]
    fn surface_crossing_examples() {
        let t = unit_torus();
        let c = |x: (i64, i64), y: (i64, i64)| t.canonicalize(&pt(x, y)).unwrap();
        let a = (c((1, 10), (1, 10)), c((4, 10), (4, 10)));
        let b = (c((1, 10), (4, 10)), c((4, 10), (1, 10)));
        let f = (c((6, 10), (6, 10)), c((8, 10), (8, 10)));
        assert!(t.surface_segments_cross((&a.0, &a.1), (&b.0, &b.1)).unwrap());
        assert!(!t.surface_segments_cross((&a.0, &a.1), (&f.0, &f.1)).unwrap());

        let cyl = unit_cylinder();
        let c = |x: (i64, i64), y: (i64, i64)| cyl.canonicalize(&pt(x, y)).unwrap();
        let e1 = (c((1, 10), (0, 1)), c((9, 10), (0, 1)));
        let e2 = (c((0, 1), (-1, 1)), c((0, 1), (1, 1)));
        assert!(cyl.surface_segments_cross((&e1.0, &e1.1), (&e2.0, &e2.1)).unwrap());
    }
}
