//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are `0..n`. Adjacency is stored as one `u64` neighbor mask per
//! vertex, which keeps component counting and subset scans branch-light.

mod canon;
mod enumerate;
mod families;
mod graph6;

pub use canon::{canonical_form, canonical_labeling};
pub use enumerate::{generate_connected, EnumerationError, MAX_BUILTIN_ORDER};
pub use families::{Family, FamilyError};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at most {MAX_VERTICES} vertices, got {0}")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} is not in the given set")]
    NotInSet(usize),
    #[error("malformed edge list entry {0:?}, expected `u-v` with 1-indexed labels")]
    BadEdgeToken(String),
}

/// A set of vertices of an ambient graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Connected blocks of an induced subgraph, in order of their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    pub blocks: Vec<VertexSet>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-indexed vertex pairs. Duplicate and reversed pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Parses the `1-2,2-3` text form (1-indexed). The order is the largest label seen.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut pairs = Vec::new();
        for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let bad = || GraphError::BadEdgeToken(token.to_string());
            let (a, b) = token.split_once('-').ok_or_else(bad)?;
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            if a == 0 || b == 0 {
                return Err(bad());
            }
            pairs.push((a - 1, b - 1));
        }
        let n = pairs.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        Graph::from_edge_list(n, &pairs)
    }

    /// Inverse of [`Graph::parse_edge_list`]; isolated trailing vertices are not representable.
    pub fn to_edge_list_string(&self) -> String {
        self.edges()
            .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::OutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            // 2 << 63 wraps to 0, leaving an empty mask for the last vertex
            VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Maximal connected blocks of `G[within]`.
    pub fn connected_components(&self, within: VertexSet) -> ComponentPartition {
        let mut blocks = Vec::new();
        let mut left = within.0;
        while left != 0 {
            let start = left & left.wrapping_neg();
            let block = self.reach(start, within.0);
            blocks.push(VertexSet(block));
            left &= !block;
        }
        ComponentPartition { blocks }
    }

    /// Number of connected components of `G[within]`.
    pub fn component_count(&self, within: VertexSet) -> usize {
        let mut count = 0;
        let mut left = within.0;
        while left != 0 {
            let start = left & left.wrapping_neg();
            left &= !self.reach(start, within.0);
            count += 1;
        }
        count
    }

    fn reach(&self, seed: u64, within: u64) -> u64 {
        let mut seen = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & within & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_count(self.vertices()) == 1
    }

    /// `c(within - v) - c(within)`.
    ///
    /// A delta of 0 means deleting `v` raises the prime height by one, 1 keeps it
    /// equal, and 2 or more lowers it.
    pub fn is_cut_vertex_delta(&self, within: VertexSet, v: usize) -> Result<i64, GraphError> {
        if !within.contains(v) {
            return Err(GraphError::NotInSet(v));
        }
        let before = self.component_count(within) as i64;
        let after = self.component_count(within.remove(v)) as i64;
        Ok(after - before)
    }

    /// Vertices whose open neighborhood is a clique (leaves and isolated vertices included).
    pub fn simplicial_vertices(&self) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in 0..self.n {
            let nbrs = self.neighbors(v);
            if nbrs.iter().all(|u| nbrs.remove(u).is_subset(self.neighbors(u))) {
                out = out.insert(v);
            }
        }
        out
    }

    /// True iff removing `s` leaves at least two components.
    pub fn is_separating_set(&self, s: VertexSet) -> bool {
        self.component_count(self.vertices().difference(s)) >= 2
    }

    /// Induced subgraph on `within`, relabelled to `0..|within|` in increasing order.
    pub fn induced_subgraph(&self, within: VertexSet) -> Graph {
        let verts = within.to_vec();
        let mut g = Graph { n: verts.len(), adj: vec![0; verts.len()] };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1u64 << j;
                }
            }
        }
        g
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1u64 << perm[v];
            g.adj[perm[v]] |= 1u64 << perm[u];
        }
        g
    }

    /// Vertex-disjoint union; `other` is shifted to `self.order()..`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [{}])", self.n, self.to_edge_list_string())
    }
}
