//! Exact planar predicates.

use std::cmp::Ordering;

use num::{Signed, Zero};

use super::scalar::{sign, Pt, Scalar};
use crate::error::{Error, Result};

/// Sign of the cross product `(q - p) x (r - p)`: +1 counterclockwise, 0 collinear, -1 clockwise.
pub fn orient(p: &Pt, q: &Pt, r: &Pt) -> i8 {
    sign(&(q - p).cross(&(r - p)))
}

/// `q` lies on the closed segment `ab`.
pub fn on_segment(a: &Pt, b: &Pt, q: &Pt) -> bool {
    orient(a, b, q) == 0
        && q.x >= a.x.clone().min(b.x.clone())
        && q.x <= a.x.clone().max(b.x.clone())
        && q.y >= a.y.clone().min(b.y.clone())
        && q.y <= a.y.clone().max(b.y.clone())
}

/// Interiors meet in exactly one point which is not a shared endpoint.
pub fn segments_properly_cross(s1: (&Pt, &Pt), s2: (&Pt, &Pt)) -> bool {
    let (a, b) = s1;
    let (c, d) = s2;
    orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0
}

/// Closed segments share any point other than a common endpoint.
pub fn segments_interfere(s1: (&Pt, &Pt), s2: (&Pt, &Pt)) -> bool {
    let (a, b) = s1;
    let (c, d) = s2;
    if (a == c && b == d) || (a == d && b == c) {
        return true;
    }
    if segments_properly_cross(s1, s2) {
        return true;
    }
    let strictly_inside = |p: &Pt, q: &Pt, r: &Pt| r != p && r != q && on_segment(p, q, r);
    strictly_inside(a, b, c) || strictly_inside(a, b, d) || strictly_inside(c, d, a) || strictly_inside(c, d, b)
}

/// Closed segments intersect at all (touching counts).
pub fn segments_intersect(s1: (&Pt, &Pt), s2: (&Pt, &Pt)) -> bool {
    let (a, b) = s1;
    let (c, d) = s2;
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(a, b, c))
        || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Twice the signed area of a closed vertex cycle.
pub fn signed_area2(cycle: &[Pt]) -> Scalar {
    let n = cycle.len();
    let mut s = Scalar::zero();
    for i in 0..n {
        s += cycle[i].cross(&cycle[(i + 1) % n]);
    }
    s
}

/// True iff the closed cycle has no repeated vertices and no two edges meet
/// except consecutive edges at their shared vertex.
pub fn is_simple(cycle: &[Pt]) -> bool {
    let n = cycle.len();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            if cycle[i] == cycle[j] {
                return false;
            }
        }
    }
    for i in 0..n {
        let a = (&cycle[i], &cycle[(i + 1) % n]);
        for j in i + 1..n {
            let b = (&cycle[j], &cycle[(j + 1) % n]);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // Consecutive edges may only share their common vertex.
                let (shared, p, q) = if j == i + 1 {
                    (&cycle[j], &cycle[i], &cycle[(j + 1) % n])
                } else {
                    (&cycle[0], &cycle[1], &cycle[n - 1])
                };
                if orient(p, shared, q) == 0 {
                    // Collinear consecutive edges are only fine if they turn straight on.
                    let back = (p - shared).dot(&(q - shared));
                    if !back.is_negative() {
                        return false;
                    }
                }
                continue;
            }
            if segments_intersect(a, b) {
                return false;
            }
        }
    }
    signed_area2(cycle) != Scalar::zero()
}

/// Classifies `p` against a simple closed polygon, exact crossing count.
pub fn point_in_simple_polygon(p: &Pt, boundary: &[Pt]) -> Result<Location> {
    if !is_simple(boundary) {
        return Err(Error::NonSimple);
    }
    Ok(locate_unchecked(p, boundary))
}

/// Same as [`point_in_simple_polygon`] without the simplicity check.
pub fn locate_unchecked(p: &Pt, boundary: &[Pt]) -> Location {
    let n = boundary.len();
    let mut inside = false;
    for i in 0..n {
        let a = &boundary[i];
        let b = &boundary[(i + 1) % n];
        if on_segment(a, b, p) {
            return Location::Boundary;
        }
        // Half-open rule on y.
        if (a.y > p.y) != (b.y > p.y) {
            // x-coordinate of the crossing compared to p.x, without division.
            let o = orient(a, b, p);
            if (b.y > a.y && o > 0) || (b.y < a.y && o < 0) {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Inside
    } else {
        Location::Outside
    }
}

/// Half-plane index used for exact angular sorting: 0 for angles in [0, pi), 1 for [pi, 2pi).
fn half(v: &Pt) -> u8 {
    if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
        0
    } else {
        1
    }
}

/// Counterclockwise angular order of nonzero vectors starting from the +x axis.
pub fn angle_cmp(a: &Pt, b: &Pt) -> Ordering {
    let ha = half(a);
    let hb = half(b);
    if ha != hb {
        return ha.cmp(&hb);
    }
    match sign(&a.cross(b)) {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Pt {
        Pt::ints(x, y)
    }

    fn unit_square() -> Vec<Pt> {
        vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)), 1);
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(2, 0)), 0);
        assert_eq!(orient(&p(0, 0), &p(0, 1), &p(1, 0)), -1);
    }

    #[test]
    fn orient_alternates() {
        let pts = [p(3, -2), p(-1, 5), p(4, 4)];
        let o = orient(&pts[0], &pts[1], &pts[2]);
        assert_eq!(orient(&pts[1], &pts[0], &pts[2]), -o);
        assert_eq!(orient(&pts[0], &pts[2], &pts[1]), -o);
        assert_eq!(orient(&pts[2], &pts[1], &pts[0]), -o);
    }

    #[test]
    fn proper_crossing_examples() {
        assert!(segments_properly_cross((&p(0, 0), &p(1, 1)), (&p(0, 1), &p(1, 0))));
        assert!(!segments_properly_cross((&p(0, 0), &p(1, 0)), (&p(0, 0), &p(0, 1))));
        assert!(!segments_properly_cross((&p(0, 0), &p(1, 0)), (&p(0, 1), &p(1, 1))));
        // collinear overlap is not a proper crossing
        assert!(!segments_properly_cross((&p(0, 0), &p(2, 0)), (&p(1, 0), &p(3, 0))));
        assert!(segments_interfere((&p(0, 0), &p(2, 0)), (&p(1, 0), &p(3, 0))));
        // T-junction
        assert!(!segments_properly_cross((&p(0, 0), &p(2, 0)), (&p(1, 0), &p(1, 1))));
        assert!(segments_interfere((&p(0, 0), &p(2, 0)), (&p(1, 0), &p(1, 1))));
        assert!(!segments_interfere((&p(0, 0), &p(2, 0)), (&p(2, 0), &p(3, 1))));
    }

    #[test]
    fn point_location_examples() {
        let sq = unit_square();
        let half = super::super::scalar::ratio(1, 2);
        let inside = Pt::new(half.clone(), half.clone());
        let edge = Pt::new(Scalar::zero(), half);
        assert_eq!(point_in_simple_polygon(&inside, &sq).unwrap(), Location::Inside);
        assert_eq!(point_in_simple_polygon(&edge, &sq).unwrap(), Location::Boundary);
        assert_eq!(point_in_simple_polygon(&p(2, 0), &sq).unwrap(), Location::Outside);
        let bowtie = vec![p(0, 0), p(1, 1), p(1, 0), p(0, 1)];
        assert_eq!(point_in_simple_polygon(&inside, &bowtie), Err(Error::NonSimple));
    }

    #[test]
    fn simplicity() {
        assert!(is_simple(&unit_square()));
        assert!(!is_simple(&[p(0, 0), p(1, 0), p(2, 0)]));
        // spike folding back on itself
        assert!(!is_simple(&[p(0, 0), p(2, 0), p(1, 0), p(1, 1)]));
    }

    #[test]
    fn angular_order() {
        let mut v = vec![p(0, -1), p(-1, 0), p(1, 1), p(1, 0), p(0, 1), p(-1, -1)];
        v.sort_by(angle_cmp);
        assert_eq!(v, vec![p(1, 0), p(1, 1), p(0, 1), p(-1, 0), p(-1, -1), p(0, -1)]);
    }
}
