//! Exact-arithmetic model of the locally Euclidean surfaces.

pub mod group;
pub mod motion;
pub mod predicates;
pub mod scalar;

pub use group::{Distance, GroupElement, LiftedSegment, SurfaceGroup, SurfaceKind, SurfacePoint};
pub use motion::{Line, Motion};
pub use predicates::{
    angle_cmp, is_simple, locate_unchecked, on_segment, orient, point_in_simple_polygon, segments_interfere,
    segments_intersect, segments_properly_cross, signed_area2, Location,
};
pub use scalar::{format_scalar, int, parse_scalar, ratio, Pt, Scalar};
