//! Simple undirected graphs on at most 64 vertices, one adjacency word per vertex.
//!
//! Every instance used by the solvers and the verifier (including the 6n-vertex
//! reduction gadgets for n <= 10) fits in a single machine word per
//! neighborhood. Graphs above 64 vertices are rejected at construction; a
//! multi-word tier would replace `u64` with a slice of words in `Graph::adj`
//! and `VertexSet`, leaving the public surface unchanged.

mod io;
mod iso;
mod predicates;

pub use io::{parse_edge_list, parse_graph6, read_graphs, to_edge_list, to_graph6};
pub use iso::{are_isomorphic, are_isomorphic_with_cap, canonical_form, CanonicalForm, DEFAULT_ISO_CAP};
pub use predicates::DegreeProfile;

use std::fmt;

use thiserror::Error;

/// Largest order supported by the single-word representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("loop edge ({0}, {0}) is not allowed")]
    Loop(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("isomorphism test limited to {cap} vertices, got {n}")]
    IsoCapExceeded { n: usize, cap: usize },
}

/// A set of vertices of some host graph, stored as a bitset.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All vertices `0..n`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Complement relative to `0..n`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & low_mask(n))
    }

    /// Lexicographic comparison of the sorted vertex lists of two sets of
    /// equal size: the set holding the smallest vertex of the symmetric
    /// difference comes first.
    pub fn lex_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff.trailing_zeros();
        if self.0 >> low & 1 == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighborhood words, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mask = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row >> v & 1 == 1 {
                return Err(GraphError::Loop(v));
            }
            if row & !mask != 0 {
                let u = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::EndpointOutOfRange(v, u, n));
            }
            for u in VertexSet(row).iter() {
                if adj[u] >> v & 1 == 0 {
                    return Err(GraphError::Graph6(format!("asymmetric adjacency {v}->{u}")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Internal constructor for adjacency known to be valid.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    /// The labeled graph on `n` vertices whose edge set is the bitmask `mask`
    /// over the column-major upper triangle (0,1), (0,2), (1,2), (0,3), ...
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        assert!(n * n.saturating_sub(1) / 2 <= 64, "edge mask too narrow for n = {n}");
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph { n, adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !low_mask(u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & mask & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for u in VertexSet(self.adj[v]).iter() {
                adj[perm[v]] |= 1 << perm[u];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `keep`, renumbered in increasing vertex order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let order: Vec<usize> = keep.iter().collect();
        let mut index = [usize::MAX; 64];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v] & keep.bits())
                    .iter()
                    .fold(0u64, |acc, u| acc | 1 << index[u])
            })
            .collect();
        Graph { n: order.len(), adj }
    }

    /// Disjoint union, `other` renumbered after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Small named graphs used throughout tests and characterizations.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        Graph::from_edge_list(n, &edges).expect("valid complete graph")
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::empty(n).expect("valid edgeless graph")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("valid path")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).expect("valid cycle")
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edge_list(leaves + 1, &edges).expect("valid star")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
        Graph::from_edge_list(a + b, &edges).expect("valid complete bipartite graph")
    }

    /// `t` disjoint copies of `P2`.
    pub fn matching(t: usize) -> Graph {
        let edges: Vec<_> = (0..t).map(|i| (2 * i, 2 * i + 1)).collect();
        Graph::from_edge_list(2 * t, &edges).expect("valid matching")
    }

    /// Grid `P_rows □ P_cols`; vertex `(i, j)` is `i * cols + j`.
    pub fn grid(rows: usize, cols: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                let v = i * cols + j;
                if j + 1 < cols {
                    edges.push((v, v + 1));
                }
                if i + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::from_edge_list(rows * cols, &edges).expect("valid grid")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn edge_list_construction() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.size(), 1);
        assert!(k2.has_edge(1, 0));

        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4, path(4));

        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5, cycle(5));
        assert!((0..5).all(|v| c5.degree(v) == 2));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn bad_edges_are_rejected() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange(0, 3, 3))
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert!(matches!(Graph::empty(65), Err(GraphError::TooManyVertices(65))));
    }

    #[test]
    fn complement_examples() {
        assert!(complete(4).complement().is_edgeless());
        assert_eq!(
            matching(2).complement(),
            Graph::from_edge_list(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
        );
        assert!(are_isomorphic(&matching(2).complement(), &cycle(4)).unwrap());
        assert!(are_isomorphic(&cycle(5).complement(), &cycle(5)).unwrap());
    }

    #[test]
    fn edge_mask_order_is_column_major() {
        // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2), bit 3 = (0,3)
        let g = Graph::from_edge_mask(4, 0b1010);
        assert_eq!(g.edges(), vec![(0, 2), (0, 3)]);
    }

    #[test]
    fn vertex_set_lex_order() {
        use std::cmp::Ordering;
        let a: VertexSet = [0, 3].into_iter().collect();
        let b: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(b.lex_cmp(a), Ordering::Greater);
        assert_eq!(a.to_string(), "{0,3}");
    }

    #[test]
    fn induced_and_union() {
        let g = cycle(5);
        let h = g.induced([0, 1, 2].into_iter().collect());
        assert_eq!(h, path(3));
        let u = path(2).disjoint_union(&path(2)).unwrap();
        assert_eq!(u, matching(2));
    }
}
