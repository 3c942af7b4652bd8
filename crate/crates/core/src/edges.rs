//! Canonical edge sets, the key under which triangulations are deduplicated.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Unordered vertex pair stored as `(min, max)`.
pub type Edge = (usize, usize);

pub fn edge(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Lexicographically sorted, duplicate-free list of edges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.0.binary_search(&edge(a, b)).is_ok()
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        let e = edge(a, b);
        if let Err(pos) = self.0.binary_search(&e) {
            self.0.insert(pos, e);
        }
    }

    pub fn remove(&mut self, a: usize, b: usize) -> bool {
        match self.0.binary_search(&edge(a, b)) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Copy with `removed` exchanged for `inserted`.
    pub fn exchanged(&self, removed: Edge, inserted: Edge) -> EdgeSet {
        let mut out = self.clone();
        out.remove(removed.0, removed.1);
        out.insert(inserted.0, inserted.1);
        out
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        self.iter().chain(other.iter()).collect()
    }

    /// Hyphen-joined `i,j` pairs, e.g. `0,2-0,3`.
    pub fn label(&self) -> String {
        self.0
            .iter()
            .map(|(a, b)| format!("{a},{b}"))
            .collect::<Vec<_>>()
            .join("-")
    }

    pub fn parse_label(s: &str) -> Result<EdgeSet> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(EdgeSet::new());
        }
        s.split('-')
            .map(|pair| {
                let (a, b) = pair
                    .split_once(',')
                    .ok_or_else(|| Error::Malformed(format!("bad edge `{pair}`")))?;
                let a = a
                    .trim()
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad edge `{pair}`")))?;
                let b = b
                    .trim()
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad edge `{pair}`")))?;
                Ok(edge(a, b))
            })
            .collect()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        let mut v: Vec<Edge> = iter.into_iter().map(|(a, b)| edge(a, b)).collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let s: EdgeSet = vec![(3, 1), (0, 2), (1, 3)].into_iter().collect();
        assert_eq!(s.as_slice(), &[(0, 2), (1, 3)]);
        assert_eq!(s.label(), "0,2-1,3");
        assert_eq!(EdgeSet::parse_label("1,3-2,0").unwrap(), s);
        assert!(EdgeSet::parse_label("1;3").is_err());
        assert_eq!(s.exchanged((0, 2), (1, 2)).label(), "1,2-1,3");
    }
}
