//! Flip graphs over canonical edge-set keys.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::{FlipDomain, FlipMove};
use crate::edges::EdgeSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FlipGraph {
    nodes: Vec<EdgeSet>,
    index: HashMap<EdgeSet, usize>,
    adjacency: Vec<Vec<(usize, FlipMove)>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Connectivity {
    Empty,
    Connected,
    Disconnected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Components {
    /// Component label of each node; labels are numbered by smallest member.
    pub labels: Vec<usize>,
    pub groups: Vec<Vec<usize>>,
    pub status: Connectivity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub nodes: usize,
    pub edges: usize,
    pub components: usize,
    pub diameters: Vec<usize>,
}

impl FlipGraph {
    /// Builds the graph on `nodes`, failing if some legal flip leaves the node set.
    pub fn build<D: FlipDomain + Sync>(domain: &D, nodes: Vec<EdgeSet>) -> Result<FlipGraph> {
        let mut nodes = nodes;
        nodes.sort();
        nodes.dedup();
        let index: HashMap<EdgeSet, usize> = nodes.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let adjacency = nodes
            .par_iter()
            .map(|key| -> Result<Vec<(usize, FlipMove)>> {
                let mut out = vec![];
                for m in domain.legal_flips(key)? {
                    let next = key.exchanged(m.removed, m.inserted);
                    let &j = index.get(&next).ok_or(Error::ClosureViolation)?;
                    out.push((j, m));
                }
                out.sort();
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        let g = FlipGraph {
            nodes,
            index,
            adjacency,
        };
        g.check_symmetric()?;
        Ok(g)
    }

    fn check_symmetric(&self) -> Result<()> {
        for (i, adj) in self.adjacency.iter().enumerate() {
            for (j, m) in adj {
                let back = &self.adjacency[*j];
                if !back
                    .iter()
                    .any(|(k, b)| *k == i && b.removed == m.inserted && b.inserted == m.removed)
                {
                    return Err(Error::ClosureViolation);
                }
            }
        }
        Ok(())
    }

    pub fn nodes(&self) -> &[EdgeSet] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, key: &EdgeSet) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[(usize, FlipMove)] {
        &self.adjacency[i]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn components(&self) -> Components {
        let n = self.len();
        let mut labels = vec![usize::MAX; n];
        let mut groups = vec![];
        for s in 0..n {
            if labels[s] != usize::MAX {
                continue;
            }
            let c = groups.len();
            let mut members = vec![];
            let mut queue = VecDeque::from([s]);
            labels[s] = c;
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for (v, _) in &self.adjacency[u] {
                    if labels[*v] == usize::MAX {
                        labels[*v] = c;
                        queue.push_back(*v);
                    }
                }
            }
            members.sort_unstable();
            groups.push(members);
        }
        debug_assert!(self.union_find_agrees(&labels));
        let status = match groups.len() {
            0 => Connectivity::Empty,
            1 => Connectivity::Connected,
            _ => Connectivity::Disconnected,
        };
        Components { labels, groups, status }
    }

    /// Independent union-find pass over the same adjacency.
    pub fn union_find_agrees(&self, labels: &[usize]) -> bool {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (u, adj) in self.adjacency.iter().enumerate() {
            for (v, _) in adj {
                let (a, b) = (find(&mut parent, u), find(&mut parent, *v));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).all(|u| (0..n).all(|v| (find(&mut parent, u) == find(&mut parent, v)) == (labels[u] == labels[v])))
    }

    /// A shortest flip sequence, or `None` across components.
    pub fn shortest_path(&self, from: &EdgeSet, to: &EdgeSet) -> Result<Option<Vec<FlipMove>>> {
        let s = self.index_of(from).ok_or(Error::UnknownNode)?;
        let t = self.index_of(to).ok_or(Error::UnknownNode)?;
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.len()];
        let mut seen = vec![false; self.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for (k, (v, _)) in self.adjacency[u].iter().enumerate() {
                if !seen[*v] {
                    seen[*v] = true;
                    prev[*v] = Some((u, k));
                    queue.push_back(*v);
                }
            }
        }
        if !seen[t] {
            return Ok(None);
        }
        let mut moves = vec![];
        let mut cur = t;
        while let Some((u, k)) = prev[cur] {
            moves.push(self.adjacency[u][k].1.clone());
            cur = u;
        }
        moves.reverse();
        Ok(Some(moves))
    }

    fn eccentricity(&self, s: usize) -> usize {
        let mut dist = vec![usize::MAX; self.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut far = 0;
        while let Some(u) = queue.pop_front() {
            far = far.max(dist[u]);
            for (v, _) in &self.adjacency[u] {
                if dist[*v] == usize::MAX {
                    dist[*v] = dist[u] + 1;
                    queue.push_back(*v);
                }
            }
        }
        far
    }

    pub fn metrics(&self) -> GraphMetrics {
        let comps = self.components();
        let diameters = comps
            .groups
            .iter()
            .map(|g| g.par_iter().map(|&s| self.eccentricity(s)).max().unwrap_or(0))
            .collect();
        GraphMetrics {
            nodes: self.len(),
            edges: self.edge_count(),
            components: comps.groups.len(),
            diameters,
        }
    }

    /// Undirected edges as node-index pairs `(i, j)` with `i < j`, sorted.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, adj)| adj.iter().filter(move |(j, _)| i < *j).map(move |(j, _)| (i, *j)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph flips {\n");
        for (i, k) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", k.label());
        }
        for (i, j) in self.edge_list() {
            let _ = writeln!(s, "  n{i} -- n{j};");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        let comps = self.components();
        json!({
            "nodes": self.nodes.iter().map(EdgeSet::label).collect::<Vec<_>>(),
            "edges": self.edge_list().iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
            "components": comps.groups,
        })
    }
}
