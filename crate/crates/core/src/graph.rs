//! Simple undirected graphs on at most [`MAX_VERTICES`] labelled vertices.
//!
//! Adjacency is stored as one `u64` row per vertex. Graphs are values: every
//! rewriting operation returns a new graph and leaves its input untouched.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, low_mask, Bits};
use crate::error::{Error, Result};

/// One machine word per adjacency row.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, e={}, [", self.n, self.edges)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity {
            what: "vertex count",
            requested: n,
            limit: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_capacity(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
            edges: 0,
        })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_capacity(n)?;
        let all = low_mask(n);
        let adj = (0..n).map(|v| all & !bit(v)).collect();
        Ok(Graph {
            n,
            adj,
            edges: n * n.saturating_sub(1) / 2,
        })
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::domain(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Complete multipartite graph with consecutive parts of the given sizes.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
        let n: usize = sizes.iter().sum();
        check_capacity(n)?;
        let mut adj = vec![0u64; n];
        let all = low_mask(n);
        let mut start = 0;
        for &s in sizes {
            let part = low_mask(s) << start;
            for row in &mut adj[start..start + s] {
                *row = all & !part;
            }
            start += s;
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_capacity(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge {u}-{v} out of range for n={n}")));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Builds a graph from adjacency rows, validating symmetry and the absence of loops.
    pub fn from_rows(adj: Vec<u64>) -> Result<Graph> {
        let n = adj.len();
        check_capacity(n)?;
        let all = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::domain(format!("row {v} has bits beyond n={n}")));
            }
            if row & bit(v) != 0 {
                return Err(Error::domain(format!("loop at vertex {v}")));
            }
            for u in Bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(Error::domain(format!("asymmetric adjacency {v}->{u}")));
                }
            }
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Rows must already be symmetric and loop-free.
    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Graph {
        let deg: usize = adj.iter().map(|r| r.count_ones() as usize).sum();
        debug_assert!(deg.is_multiple_of(2));
        Graph {
            n: adj.len(),
            adj,
            edges: deg / 2,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Bitset of all vertices.
    #[inline]
    pub fn vertices(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Number of edges inside the vertex set `set`.
    pub fn edges_within(&self, set: u64) -> usize {
        Bits(set)
            .map(|v| (self.adj[v] & set).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Number of edges with one end in `a` and the other in `b` (disjoint sets).
    pub fn edges_between(&self, a: u64, b: u64) -> usize {
        Bits(a).map(|v| (self.adj[v] & b).count_ones() as usize).sum()
    }

    pub fn min_degree_vertex(&self) -> Option<usize> {
        (0..self.n).min_by_key(|&v| (self.degree(v), v))
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut adj = self.adj.clone();
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Ok(Graph::from_rows_unchecked(adj))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut adj = self.adj.clone();
        adj[u] &= !bit(v);
        adj[v] &= !bit(u);
        Ok(Graph::from_rows_unchecked(adj))
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n || u == v {
            Err(Error::domain(format!("invalid vertex pair {u},{v} for n={}", self.n)))
        } else {
            Ok(())
        }
    }

    /// Adds a vertex `n` adjacent to `nbrs`.
    pub fn add_vertex(&self, nbrs: u64) -> Result<Graph> {
        check_capacity(self.n + 1)?;
        if nbrs & !self.vertices() != 0 {
            return Err(Error::domain("neighbour set outside vertex range"));
        }
        let v = self.n;
        let mut adj = self.adj.clone();
        for u in Bits(nbrs) {
            adj[u] |= bit(v);
        }
        adj.push(nbrs);
        Ok(Graph::from_rows_unchecked(adj))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph::from_rows_unchecked(adj)
    }

    /// Join `self ∇ other`: disjoint union plus every cross pair. Vertices of
    /// `other` are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, true)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, false)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Result<Graph> {
        let n = self.n + other.n;
        check_capacity(n)?;
        let left = self.vertices();
        let right = other.vertices() << self.n;
        let mut adj = Vec::with_capacity(n);
        for &row in &self.adj {
            adj.push(row | if cross { right } else { 0 });
        }
        for &row in &other.adj {
            adj.push((row << self.n) | if cross { left } else { 0 });
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Induced subgraph on `order`, relabelled `0..order.len()` in the given order.
    pub fn induced_subgraph(&self, order: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        for &v in order {
            if v >= self.n {
                return Err(Error::domain(format!("vertex {v} not in graph of order {}", self.n)));
            }
            if seen & bit(v) != 0 {
                return Err(Error::domain(format!("vertex {v} listed twice")));
            }
            seen |= bit(v);
        }
        let adj = order
            .iter()
            .map(|&u| {
                order
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[u] & bit(w) != 0)
                    .fold(0u64, |acc, (j, _)| acc | bit(j))
            })
            .collect();
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Induced subgraph on a vertex bitset, in increasing vertex order.
    pub fn induced_by_set(&self, set: u64) -> Result<Graph> {
        let order: Vec<usize> = Bits(set).collect();
        self.induced_subgraph(&order)
    }

    /// `G - v`, relabelling the remaining vertices in order.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::domain(format!("vertex {v} out of range")));
        }
        self.induced_by_set(self.vertices() & !bit(v))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::domain("permutation length mismatch"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::domain("not a permutation"));
            }
            seen |= bit(p);
        }
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = Bits(self.adj[v]).fold(0, |acc, u| acc | bit(perm[u]));
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// True when every edge of `self` is an edge of `other` (same labelling).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// Connected components as vertex bitsets, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }
}

/// Ordered list of pairwise disjoint vertex classes of an `n`-vertex graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PartitionLists", try_from = "PartitionLists")]
pub struct VertexPartition {
    n: usize,
    classes: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct PartitionLists {
    n: usize,
    classes: Vec<Vec<usize>>,
}

impl From<VertexPartition> for PartitionLists {
    fn from(p: VertexPartition) -> Self {
        PartitionLists {
            n: p.n,
            classes: p.classes.iter().map(|&c| Bits(c).collect()).collect(),
        }
    }
}

impl TryFrom<PartitionLists> for VertexPartition {
    type Error = Error;

    fn try_from(l: PartitionLists) -> Result<Self> {
        VertexPartition::from_lists(l.n, &l.classes)
    }
}

impl VertexPartition {
    pub fn new(n: usize, classes: Vec<u64>) -> Result<VertexPartition> {
        check_capacity(n)?;
        let mut seen = 0u64;
        for (i, &c) in classes.iter().enumerate() {
            if c & !low_mask(n) != 0 {
                return Err(Error::domain(format!("class {i} has vertices beyond n={n}")));
            }
            if c & seen != 0 {
                return Err(Error::domain(format!("class {i} overlaps an earlier class")));
            }
            seen |= c;
        }
        Ok(VertexPartition { n, classes })
    }

    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<VertexPartition> {
        let mut classes = Vec::with_capacity(lists.len());
        for l in lists {
            let mut c = 0u64;
            for &v in l {
                if v >= n {
                    return Err(Error::domain(format!("vertex {v} out of range for n={n}")));
                }
                if c & bit(v) != 0 {
                    return Err(Error::domain(format!("vertex {v} repeated in a class")));
                }
                c |= bit(v);
            }
            classes.push(c);
        }
        VertexPartition::new(n, classes)
    }

    /// Partition from a colouring `vertex -> class`. Vertices coloured `None` are left uncovered.
    pub fn from_coloring(colors: &[Option<usize>], k: usize) -> Result<VertexPartition> {
        let mut classes = vec![0u64; k];
        for (v, c) in colors.iter().enumerate() {
            if let Some(c) = *c {
                if c >= k {
                    return Err(Error::domain(format!("colour {c} out of range {k}")));
                }
                classes[c] |= bit(v);
            }
        }
        VertexPartition::new(colors.len(), classes)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    #[inline]
    pub fn class(&self, i: usize) -> u64 {
        self.classes[i]
    }

    pub fn classes(&self) -> &[u64] {
        &self.classes
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.count_ones() as usize).collect()
    }

    pub fn union(&self) -> u64 {
        self.classes.iter().fold(0, |a, c| a | c)
    }

    /// Whether the classes cover every vertex.
    pub fn covers(&self) -> bool {
        self.union() == low_mask(self.n)
    }

    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c & bit(v) != 0)
    }

    /// Whether each class is an independent set of `g`.
    pub fn is_independent_in(&self, g: &Graph) -> bool {
        g.n() == self.n && self.classes.iter().all(|&c| g.edges_within(c) == 0)
    }
}
