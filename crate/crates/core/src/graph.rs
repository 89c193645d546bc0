//! Simple undirected graphs on dense vertex indices `0..n`, with bit-set
//! adjacency rows and an optional per-vertex label layer.
//!
//! Structural predicates used to check the hypotheses of the b-continuity
//! results live here too: regularity, girth and bipartiteness.

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Graph {
    /// Builds a graph from unordered endpoint pairs. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![VertexSet::new(n); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adjacency[u].insert(v) {
                adjacency[v].insert(u);
                edge_count += 1;
            }
        }
        let g = Self {
            adjacency,
            edge_count,
            labels: None,
        };
        g.check_invariants();
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, []).expect("edgeless graph is always valid")
    }

    /// Complete graph on `k` vertices.
    pub fn complete(k: usize) -> Self {
        let edges = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)));
        Self::from_edges(k, edges).expect("complete graph is always valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is always valid")
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is always valid")
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::InvalidParameters(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    fn check_invariants(&self) {
        let n = self.vertex_count();
        for (v, row) in self.adjacency.iter().enumerate() {
            assert!(!row.contains(v), "self-loop at {v}");
            for u in row {
                assert!(u < n);
                assert!(self.adjacency[u].contains(v), "asymmetric edge {v}-{u}");
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v` if labels are attached, otherwise its 1-based index.
    pub fn display_label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        } else {
            Ok(())
        }
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut s = self.adjacency[v].clone();
        s.insert(v);
        Ok(s)
    }

    /// Common degree if the graph is regular.
    pub fn regularity(&self) -> Result<Option<usize>> {
        if self.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let d = self.degree(0);
        Ok((0..self.vertex_count()).all(|v| self.degree(v) == d).then_some(d))
    }

    /// Shortest cycle length by breadth-first search from every root.
    ///
    /// A non-tree edge `(u, w)` met while exploring from `root` closes a
    /// closed walk of length `dist[u] + dist[w] + 1` through the root, which
    /// contains a cycle no longer than that. Minimizing over all roots gives
    /// the exact girth since a shortest cycle is found from any of its
    /// vertices.
    pub fn girth(&self) -> Girth {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Proper 2-coloring (sides 0/1) if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for w in &self.adjacency[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = VertexSet::new(n);
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if !seen.insert(s) {
                continue;
            }
            count += 1;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for w in &self.adjacency[u] {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// A clique found greedily: from every start vertex, repeatedly add the
    /// candidate with the most neighbors among the remaining candidates.
    pub fn greedy_clique(&self) -> Vec<usize> {
        let mut best = Vec::new();
        for start in 0..self.vertex_count() {
            let mut clique = vec![start];
            let mut candidates = self.adjacency[start].clone();
            while !candidates.is_empty() {
                let score = |v: usize| {
                    let mut s = self.adjacency[v].clone();
                    s.intersect_with(&candidates);
                    s.len()
                };
                let mut next = usize::MAX;
                let mut next_score = 0;
                for v in &candidates {
                    let sc = score(v);
                    if next == usize::MAX || sc > next_score {
                        next = v;
                        next_score = sc;
                    }
                }
                clique.push(next);
                candidates.intersect_with(&self.adjacency[next]);
            }
            if clique.len() > best.len() {
                best = clique;
            }
        }
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
