//! Simple graphs, multigraphs, color schemes and colorings.
//!
//! Vertices are dense `0..n` indices. Edges are stored normalized (`u < v`)
//! and sorted, so two graphs built from the same edge set compare equal
//! regardless of insertion order.

use std::collections::BTreeMap;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Read access shared by [`Graph`] and [`Multigraph`].
///
/// A simple graph is viewed as a multigraph whose multiplicities are all 1,
/// so every conflict count and objective is multiplicity-weighted.
pub trait EdgeSet {
    fn vertex_count(&self) -> usize;

    /// Edges as `(u, v, multiplicity)` with `u < v`, in ascending order.
    fn weighted_edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_;

    /// Neighbors of `v` with the multiplicity of the connecting edge.
    fn weighted_neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u64)> + '_;

    /// Edge count with multiplicity.
    fn total_edges(&self) -> u64 {
        self.weighted_edges().map(|(_, _, t)| t).sum()
    }

    fn weighted_degree(&self, v: usize) -> u64 {
        self.weighted_neighbors(v).map(|(_, t)| t).sum()
    }
}

fn normalize(u: usize, v: usize, n: usize) -> Result<(usize, usize)> {
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    if u >= n || v >= n {
        return Err(Error::VertexOutOfRange { u, v, n });
    }
    Ok(if u < v { (u, v) } else { (v, u) })
}

/// Undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRecord", into = "GraphRecord")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRecord {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphRecord> for Graph {
    type Error = Error;

    fn try_from(record: GraphRecord) -> Result<Self> {
        Graph::new(record.vertex_count, record.edges)
    }
}

impl From<Graph> for GraphRecord {
    fn from(g: Graph) -> Self {
        GraphRecord {
            vertex_count: g.n,
            edges: g.edges,
        }
    }
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting self-loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            normalized.push(normalize(u, v, n)?);
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adjacency,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Whether no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Number of edges with exactly one endpoint in `set`.
    pub fn boundary_size(&self, set: &[usize]) -> usize {
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        self.edges.iter().filter(|&&(u, v)| inside[u] != inside[v]).count()
    }
}

impl EdgeSet for Graph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn weighted_edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.edges.iter().map(|&(u, v)| (u, v, 1))
    }

    fn weighted_neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.adjacency[v].iter().map(|&u| (u, 1))
    }

    fn total_edges(&self) -> u64 {
        self.edges.len() as u64
    }

    fn weighted_degree(&self, v: usize) -> u64 {
        self.adjacency[v].len() as u64
    }
}

/// Undirected multigraph: each vertex pair carries a positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MultigraphRecord", into = "MultigraphRecord")]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize, u64)>,
    adjacency: Vec<Vec<(usize, u64)>>,
}

#[derive(Serialize, Deserialize)]
struct MultigraphRecord {
    vertex_count: usize,
    edges: Vec<(usize, usize, u64)>,
}

impl TryFrom<MultigraphRecord> for Multigraph {
    type Error = Error;

    fn try_from(record: MultigraphRecord) -> Result<Self> {
        Multigraph::new(record.vertex_count, record.edges)
    }
}

impl From<Multigraph> for MultigraphRecord {
    fn from(g: Multigraph) -> Self {
        MultigraphRecord {
            vertex_count: g.n,
            edges: g.edges,
        }
    }
}

impl Multigraph {
    /// Builds a multigraph from `(u, v, t)` records. Each unordered pair may
    /// appear once; use [`Multigraph::from_parallel_edges`] to accumulate.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, u64)>) -> Result<Self> {
        let mut pairs = BTreeMap::new();
        for (u, v, t) in edges {
            let (a, b) = normalize(u, v, n)?;
            if t == 0 {
                return Err(Error::ZeroMultiplicity(a, b));
            }
            if pairs.insert((a, b), t).is_some() {
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Self::from_pairs(n, pairs))
    }

    /// Builds a multigraph by summing multiplicities of repeated pairs.
    pub fn from_parallel_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize, u64)>) -> Result<Self> {
        let mut pairs: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (u, v, t) in edges {
            let key = normalize(u, v, n)?;
            if t > 0 {
                *pairs.entry(key).or_default() += t;
            }
        }
        Ok(Self::from_pairs(n, pairs))
    }

    fn from_pairs(n: usize, pairs: BTreeMap<(usize, usize), u64>) -> Self {
        let edges: Vec<_> = pairs.into_iter().map(|((u, v), t)| (u, v, t)).collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v, t) in &edges {
            adjacency[u].push((v, t));
            adjacency[v].push((u, t));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Multigraph { n, edges, adjacency }
    }

    /// Distinct vertex pairs, ignoring multiplicity.
    pub fn pair_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    /// Multiplicity of the pair `{u, v}`, 0 when absent.
    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by(|&(x, y, _)| (x, y).cmp(&(a, b)))
            .map(|i| self.edges[i].2)
            .unwrap_or(0)
    }

    /// The underlying simple graph when every multiplicity is 1.
    pub fn to_simple(&self) -> Option<Graph> {
        if self.edges.iter().any(|&(_, _, t)| t != 1) {
            return None;
        }
        Some(Graph::new(self.n, self.edges.iter().map(|&(u, v, _)| (u, v))).expect("valid"))
    }
}

impl From<&Graph> for Multigraph {
    fn from(g: &Graph) -> Self {
        Multigraph::new(g.n, g.edges.iter().map(|&(u, v)| (u, v, 1))).expect("simple graph is valid")
    }
}

impl EdgeSet for Multigraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn weighted_edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.edges.iter().copied()
    }

    fn weighted_neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.adjacency[v].iter().copied()
    }
}

/// `k` colors of which the first `r` (indices `0..r`) are relaxed and the
/// remaining `k - r` (indices `r..k`) are proper.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColorScheme {
    k: usize,
    r: usize,
}

impl ColorScheme {
    pub fn new(r: usize, k: usize) -> Result<Self> {
        if k == 0 || r > k {
            return Err(Error::InvalidScheme { k, r });
        }
        Ok(ColorScheme { k, r })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_relaxed(&self, color: usize) -> bool {
        color < self.r
    }

    pub fn is_proper(&self, color: usize) -> bool {
        color >= self.r && color < self.k
    }

    pub fn relaxed_colors(&self) -> Range<usize> {
        0..self.r
    }

    pub fn proper_colors(&self) -> Range<usize> {
        self.r..self.k
    }
}

impl std::fmt::Display for ColorScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.r, self.k)
    }
}

/// Total assignment of a color index to every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Self {
        Coloring(assignment)
    }

    /// Every vertex colored `color`.
    pub fn uniform(n: usize, color: usize) -> Self {
        Coloring(vec![color; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, color: usize) {
        self.0[v] = color;
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Checks the coloring has one entry per vertex and every color is below `k`.
    pub fn validate(&self, n: usize, k: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.0.len(),
            });
        }
        match self.0.iter().position(|&c| c >= k) {
            Some(vertex) => Err(Error::ColorOutOfRange {
                vertex,
                color: self.0[vertex],
                k,
            }),
            None => Ok(()),
        }
    }

    /// Vertices carrying `color`, ascending.
    pub fn class(&self, color: usize) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] == color).collect()
    }
}

impl From<Vec<usize>> for Coloring {
    fn from(v: Vec<usize>) -> Self {
        Coloring(v)
    }
}
