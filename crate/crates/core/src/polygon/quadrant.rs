//! Empty-quadrant witness search on the flat torus.
//!
//! A quadrant is an open isothetic rectangle of half the generator lengths.
//! Quadrant emptiness only changes where a centre coordinate crosses a vertex
//! coordinate offset by a quarter period, so centres are drawn from those
//! critical values and the midpoints between them.

use std::collections::BTreeSet;

use num::{Signed, ToPrimitive};

use super::EuclideanPolygon;
use crate::error::{Error, Result};
use crate::kernel::{locate_unchecked, ratio, Location, Pt, Scalar};

fn axis_candidates(values: &[Scalar]) -> Vec<Scalar> {
    let lo = values.iter().min().cloned().expect("nonempty");
    let hi = values.iter().max().cloned().expect("nonempty");
    let quarter = ratio(1, 4);
    let mut crit = BTreeSet::new();
    let span = (&hi - &lo).ceil().to_integer().to_i64().unwrap_or(0) + 2;
    for v in values {
        for k in -span..=span {
            let shift = Scalar::from_integer(k.into());
            for c in [v + &quarter + &shift, v - &quarter + &shift] {
                if c > lo && c < hi {
                    crit.insert(c);
                }
            }
        }
    }
    let sorted: Vec<Scalar> = crit.into_iter().collect();
    let mut out: BTreeSet<Scalar> = sorted.iter().cloned().collect();
    for w in sorted.windows(2) {
        out.insert((&w[0] + &w[1]) * ratio(1, 2));
    }
    if let (Some(first), Some(last)) = (sorted.first(), sorted.last()) {
        out.insert((&lo + first) * ratio(1, 2));
        out.insert((last + &hi) * ratio(1, 2));
    }
    out.into_iter().collect()
}

pub fn witness(poly: &EuclideanPolygon) -> Result<Option<Pt>> {
    let g = poly.group();
    if !g.is_flat_torus() {
        return Err(Error::UnsupportedKind(format!(
            "empty quadrant search needs a flat torus, got {}",
            g.kind()
        )));
    }
    let (a, b) = (g.primary_vector(), g.secondary_vector());
    let coords: Vec<(Scalar, Scalar)> = poly.vertices().iter().map(|p| g.coords(p)).collect();
    let alphas: Vec<Scalar> = coords.iter().map(|c| c.0.clone()).collect();
    let betas: Vec<Scalar> = coords.iter().map(|c| c.1.clone()).collect();
    let quarter = ratio(1, 4);
    let reach = (a.norm2() + b.norm2()) * ratio(1, 16);
    for alpha in axis_candidates(&alphas) {
        for beta in axis_candidates(&betas) {
            let centre = &a.scale(&alpha) + &b.scale(&beta);
            if locate_unchecked(&centre, poly.vertices()) != Location::Inside {
                continue;
            }
            let mut empty = true;
            'vertices: for v in poly.vertices() {
                for (_, lift) in g.orbit_within(v, &centre, &reach)? {
                    let (la, lb) = g.coords(&lift);
                    if (&la - &alpha).abs() < quarter && (&lb - &beta).abs() < quarter {
                        empty = false;
                        break 'vertices;
                    }
                }
            }
            if empty {
                return Ok(Some(centre));
            }
        }
    }
    Ok(None)
}
