//! Plane motions that occur in the five discontinuous group types.

use num::Zero;

use super::predicates::orient;
use super::scalar::{ratio, Pt, Scalar};
use crate::error::{Error, Result};

/// A line through `point` with rational `direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub point: Pt,
    pub direction: Pt,
}

impl Line {
    pub fn new(point: Pt, direction: Pt) -> Result<Self> {
        if direction.is_zero() {
            return Err(Error::BadGroup("axis direction must be nonzero".into()));
        }
        Ok(Line { point, direction })
    }

    pub fn x_axis() -> Self {
        Line {
            point: Pt::zero(),
            direction: Pt::ints(1, 0),
        }
    }

    /// Mirror image of `p` in this line.
    pub fn reflect(&self, p: &Pt) -> Pt {
        let rel = p - &self.point;
        let d = &self.direction;
        let k = rel.dot(d) / d.norm2();
        let foot = d.scale(&k);
        // rel' = 2 * foot - rel
        let two = Scalar::from_integer(2.into());
        &(&foot.scale(&two) - &rel) + &self.point
    }

    fn same_as(&self, o: &Line) -> bool {
        self.direction.cross(&o.direction).is_zero()
            && orient(&self.point, &(&self.point + &self.direction), &o.point) == 0
    }
}

/// Distance-preserving map of the plane. Rotations never appear in any generator set.
#[derive(Clone, Debug)]
pub enum Motion {
    Identity,
    Translation(Pt),
    /// Reflection in `axis` followed by translation by `vector` (parallel to the axis, nonzero).
    GlideReflection {
        axis: Line,
        vector: Pt,
    },
    /// Pure reflection; only arises from composing glides that cancel along the axis.
    Reflection(Line),
}

impl Motion {
    pub fn translation(v: Pt) -> Motion {
        if v.is_zero() {
            Motion::Identity
        } else {
            Motion::Translation(v)
        }
    }

    pub fn glide(axis: Line, vector: Pt) -> Result<Motion> {
        if vector.is_zero() {
            return Err(Error::BadGroup("glide vector must be nonzero".into()));
        }
        if !axis.direction.cross(&vector).is_zero() {
            return Err(Error::BadGroup("glide vector must be parallel to its axis".into()));
        }
        Ok(Motion::GlideReflection { axis, vector })
    }

    pub fn apply(&self, p: &Pt) -> Pt {
        match self {
            Motion::Identity => p.clone(),
            Motion::Translation(v) => p + v,
            Motion::GlideReflection { axis, vector } => &axis.reflect(p) + vector,
            Motion::Reflection(axis) => axis.reflect(p),
        }
    }

    /// Linear part applied to a vector.
    pub fn apply_linear(&self, v: &Pt) -> Pt {
        match self {
            Motion::Identity | Motion::Translation(_) => v.clone(),
            Motion::GlideReflection { axis, .. } | Motion::Reflection(axis) => {
                let through_origin = Line {
                    point: Pt::zero(),
                    direction: axis.direction.clone(),
                };
                through_origin.reflect(v)
            }
        }
    }

    pub fn reverses_orientation(&self) -> bool {
        matches!(self, Motion::GlideReflection { .. } | Motion::Reflection(_))
    }

    /// `self` after `other`: `p -> self(other(p))`.
    pub fn compose(&self, other: &Motion) -> Motion {
        let origin_img = self.apply(&other.apply(&Pt::zero()));
        if !(self.reverses_orientation() ^ other.reverses_orientation()) {
            // Linear part is the identity (two reflections in parallel axes, or none).
            // Two glides in non-parallel axes would give a rotation, which no group here produces.
            return Motion::translation(origin_img);
        }
        // Linear part is the reflection in the axis direction of whichever factor reflects.
        let dir = match (self, other) {
            (Motion::GlideReflection { axis, .. } | Motion::Reflection(axis), _) => axis.direction.clone(),
            (_, Motion::GlideReflection { axis, .. } | Motion::Reflection(axis)) => axis.direction.clone(),
            _ => unreachable!(),
        };
        Motion::from_reflection_part(dir, origin_img)
    }

    /// Classifies `p -> R_dir(p) + t` as a glide reflection or a reflection.
    fn from_reflection_part(dir: Pt, t: Pt) -> Motion {
        let k = t.dot(&dir) / dir.norm2();
        let parallel = dir.scale(&k);
        let perp = &t - &parallel;
        let axis = Line {
            point: perp.scale(&ratio(1, 2)),
            direction: dir,
        };
        if parallel.is_zero() {
            Motion::Reflection(axis)
        } else {
            Motion::GlideReflection { axis, vector: parallel }
        }
    }

    pub fn inverse(&self) -> Motion {
        match self {
            Motion::Identity => Motion::Identity,
            Motion::Translation(v) => Motion::Translation(-v),
            Motion::GlideReflection { axis, vector } => Motion::GlideReflection {
                axis: axis.clone(),
                vector: -vector,
            },
            Motion::Reflection(axis) => Motion::Reflection(axis.clone()),
        }
    }

    /// Compares by action on three affinely independent points.
    pub fn same_map(&self, other: &Motion) -> bool {
        [Pt::zero(), Pt::ints(1, 0), Pt::ints(0, 1)]
            .iter()
            .all(|p| self.apply(p) == other.apply(p))
    }
}

impl PartialEq for Motion {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Motion::GlideReflection { axis: a, vector: v }, Motion::GlideReflection { axis: b, vector: w }) => {
                v == w && a.same_as(b)
            }
            (Motion::Reflection(a), Motion::Reflection(b)) => a.same_as(b),
            _ => self.same_map(other),
        }
    }
}

/// `v` repeated `k` times (negative allowed).
pub fn times(v: &Pt, k: i64) -> Pt {
    v.scale(&Scalar::from_integer(k.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: (i64, i64), y: (i64, i64)) -> Pt {
        Pt::from_ratios(x, y)
    }

    #[test]
    fn apply_examples() {
        assert_eq!(Motion::Identity.apply(&Pt::ints(3, 4)), Pt::ints(3, 4));
        let t = Motion::translation(Pt::ints(1, 0));
        assert_eq!(t.apply(&pt((1, 10), (0, 1))), pt((11, 10), (0, 1)));
        let g = Motion::glide(Line::x_axis(), Pt::ints(1, 0)).unwrap();
        assert_eq!(g.apply(&pt((1, 4), (1, 4))), pt((5, 4), (-1, 4)));
    }

    #[test]
    fn glide_invariants() {
        assert!(Motion::glide(Line::x_axis(), Pt::ints(0, 1)).is_err());
        assert!(Motion::glide(Line::x_axis(), Pt::zero()).is_err());
    }

    #[test]
    fn composition_matches_pointwise() {
        let axis = Line::new(pt((1, 3), (1, 2)), Pt::ints(2, 1)).unwrap();
        let g = Motion::glide(axis, Pt::ints(4, 2)).unwrap();
        let t = Motion::translation(pt((-1, 2), (3, 5)));
        let samples = [Pt::ints(0, 0), pt((7, 3), (-2, 9)), Pt::ints(-5, 11)];
        for (a, b) in [(&g, &t), (&t, &g), (&g, &g), (&t, &t)] {
            let c = a.compose(b);
            for p in &samples {
                assert_eq!(c.apply(p), a.apply(&b.apply(p)));
            }
        }
        assert!(!g.compose(&g).reverses_orientation());
        for p in &samples {
            assert_eq!(g.inverse().apply(&g.apply(p)), *p);
        }
    }

    #[test]
    fn isometry() {
        let axis = Line::new(pt((1, 3), (1, 2)), Pt::ints(3, -1)).unwrap();
        let g = Motion::glide(axis, Pt::ints(-3, 1)).unwrap();
        let p = pt((2, 7), (5, 3));
        let q = pt((-9, 4), (1, 8));
        assert_eq!(g.apply(&p).dist2(&g.apply(&q)), p.dist2(&q));
    }
}
