use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::conflict::is_feasible;
use crate::error::{Error, Result};
use crate::graph::{ColorScheme, Coloring, Graph};

/// `G` joined to a clique `C`: every clique vertex is adjacent to every
/// vertex of `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentedGraph {
    pub graph: Graph,
    pub original_n: usize,
    pub clique_size: usize,
    /// `original_n..original_n + clique_size`.
    pub clique_vertex_ids: Range<usize>,
}

/// Clique size used by the independent-set reduction: `n^2`.
pub fn default_clique_size(n: usize) -> usize {
    n * n
}

/// Appends a clique of `q` vertices (ids `n..n+q`) and joins it to all of `G`.
///
/// The result has `|E| + q(q-1)/2 + n*q` edges.
pub fn augment_with_clique(g: &Graph, q: usize) -> Result<AugmentedGraph> {
    if q == 0 {
        return Err(Error::InvalidParameter("clique size must be at least 1".into()));
    }
    let n = g.vertex_count();
    let clique = n..n + q;
    let mut edges = g.edges().to_vec();
    for c in clique.clone() {
        edges.extend((c + 1..n + q).map(|d| (c, d)));
        edges.extend((0..n).map(|v| (v, c)));
    }
    Ok(AugmentedGraph {
        graph: Graph::new(n + q, edges)?,
        original_n: n,
        clique_size: q,
        clique_vertex_ids: clique,
    })
}

/// Reads an independent set of `G` off a feasible (1, 2) coloring of the
/// augmented graph: the proper-colored (color 1) vertices of `G`.
///
/// If no vertex of `G` carries the proper color (in particular when a clique
/// vertex holds it), falls back to `{0}`. Empty only when `G` has no vertices.
pub fn mis_from_coloring(ag: &AugmentedGraph, c: &Coloring) -> Result<Vec<usize>> {
    let scheme = ColorScheme::new(1, 2)?;
    if !is_feasible(&ag.graph, c, scheme)? {
        return Err(Error::InfeasibleColoring { k: 2, r: 1 });
    }
    if ag.original_n == 0 {
        return Ok(Vec::new());
    }
    let set: Vec<usize> = (0..ag.original_n).filter(|&v| c.color(v) == 1).collect();
    Ok(if set.is_empty() { vec![0] } else { set })
}
