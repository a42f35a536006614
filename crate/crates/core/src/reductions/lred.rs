//! Max-cut to (r, k) reduction through a weighted clique.
//!
//! `G` (n vertices, m edges) gets `k - 2` extra vertices `C`. Pairs inside `C`
//! carry multiplicity `2m`, and every `v` in `G` is joined to every vertex of
//! `C` with multiplicity `2 d(v)`. Any good coloring spends `k - 2` distinct
//! colors on `C` and cuts `G` with the remaining two.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::conflict::is_feasible;
use crate::error::{Error, Result};
use crate::graph::{ColorScheme, Coloring, EdgeSet, Graph, Multigraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LRedMultigraph {
    pub multigraph: Multigraph,
    pub original_n: usize,
    /// The `k - 2` vertices of `C`: `original_n..original_n + k - 2`.
    pub clique_vertex_ids: Range<usize>,
    pub k: usize,
}

/// Total multiplicity `m + 4m(k-2) + 2m * C(k-2, 2)`.
pub fn lred_edge_total(m: u64, k: u64) -> u64 {
    let c = k - 2;
    m + c * 4 * m + c * c.saturating_sub(1) / 2 * 2 * m
}

pub fn build_lred_multigraph(g: &Graph, k: usize) -> Result<LRedMultigraph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "the clique construction needs k >= 3 (k = 2 is max-cut itself), got {k}"
        )));
    }
    let n = g.vertex_count();
    let m = g.edge_count() as u64;
    let clique = n..n + k - 2;
    let mut edges: Vec<(usize, usize, u64)> = g.edges().iter().map(|&(u, v)| (u, v, 1)).collect();
    for c in clique.clone() {
        if m > 0 {
            edges.extend((c + 1..clique.end).map(|d| (c, d, 2 * m)));
        }
        edges.extend(
            (0..n)
                .filter(|&v| g.degree(v) > 0)
                .map(|v| (v, c, 2 * g.degree(v) as u64)),
        );
    }
    Ok(LRedMultigraph {
        multigraph: Multigraph::new(n + k - 2, edges)?,
        original_n: n,
        clique_vertex_ids: clique,
        k,
    })
}

fn check_repair_input<G: EdgeSet>(host: &G, k: usize, c: &Coloring, s: ColorScheme) -> Result<()> {
    if s.k() != k {
        return Err(Error::InvalidParameter(format!(
            "scheme has k = {} but the reduction was built for k = {k}",
            s.k()
        )));
    }
    if s.r() < 2 {
        return Err(Error::InvalidParameter(format!(
            "repair needs at least 2 relaxed colors, scheme has r = {}",
            s.r()
        )));
    }
    if !is_feasible(host, c, s)? {
        return Err(Error::InfeasibleColoring { k: s.k(), r: s.r() });
    }
    Ok(())
}

/// Normalizes a feasible coloring of the multigraph without lowering its
/// value.
///
/// When `C` carries `k - 2` distinct colors, the two remaining colors are
/// made relaxed (by exchanging a proper one with a relaxed color that sits
/// on a single `C` vertex) and every `G` vertex holding a `C` color moves to
/// whichever of the two covers more of its incident edges (ties to the lower
/// index). When two `C` vertices share a color the input is returned as is.
pub fn repair_multigraph_coloring(lm: &LRedMultigraph, c: &Coloring, s: ColorScheme) -> Result<Coloring> {
    check_repair_input(&lm.multigraph, lm.k, c, s)?;
    let k = lm.k;
    let mut on_clique = vec![false; k];
    for x in lm.clique_vertex_ids.clone() {
        if std::mem::replace(&mut on_clique[c.color(x)], true) {
            return Ok(c.clone());
        }
    }
    let mut out = c.as_slice().to_vec();
    let mut free: Vec<usize> = (0..k).filter(|&x| !on_clique[x]).collect();
    let mut donors = (0..k).filter(|&x| on_clique[x] && s.is_relaxed(x));
    for f in free.iter_mut() {
        if s.is_proper(*f) {
            let d = donors.next().expect("r >= 2 leaves a relaxed color on C");
            for x in out.iter_mut() {
                if *x == *f {
                    *x = d;
                } else if *x == d {
                    *x = *f;
                }
            }
            *f = d;
        }
    }
    free.sort_unstable();

    let g = &lm.multigraph;
    for v in 0..lm.original_n {
        if free.contains(&out[v]) {
            continue;
        }
        let covering = |color: usize| -> u64 {
            g.weighted_neighbors(v)
                .filter(|&(u, _)| out[u] != color)
                .map(|(_, t)| t)
                .sum()
        };
        out[v] = if covering(free[1]) > covering(free[0]) {
            free[1]
        } else {
            free[0]
        };
    }
    Ok(Coloring::new(out))
}

/// A construction whose first `original_n` host vertices are the vertices
/// of the source graph.
pub trait Embedding {
    fn host_vertex_count(&self) -> usize;
    fn original_n(&self) -> usize;
    /// Edges of the source graph, as host vertex pairs.
    fn original_edges(&self) -> Vec<(usize, usize)>;
}

impl Embedding for LRedMultigraph {
    fn host_vertex_count(&self) -> usize {
        self.multigraph.vertex_count()
    }

    fn original_n(&self) -> usize {
        self.original_n
    }

    fn original_edges(&self) -> Vec<(usize, usize)> {
        let n = self.original_n;
        self.multigraph
            .edges()
            .iter()
            .filter(|&&(_, v, _)| v < n)
            .map(|&(u, v, _)| (u, v))
            .collect()
    }
}

/// A cut of the source graph read off a host coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutExtraction {
    /// Sides 0 and 1 for each source vertex.
    pub coloring: Coloring,
    pub value: u64,
}

/// Restricts a repaired host coloring to the source graph.
///
/// The source vertices must use at most two colors. Colors already within
/// `{0, 1}` are kept verbatim; otherwise the smaller color becomes side 0.
pub fn extract_maxcut<E: Embedding>(host: &E, c: &Coloring) -> Result<CutExtraction> {
    if c.len() != host.host_vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: host.host_vertex_count(),
            found: c.len(),
        });
    }
    let n = host.original_n();
    let mut used: Vec<usize> = c.as_slice()[..n].to_vec();
    used.sort_unstable();
    used.dedup();
    if used.len() > 2 {
        return Err(Error::InvalidParameter(format!(
            "source vertices use {} colors; repair the coloring first",
            used.len()
        )));
    }
    let sides: Vec<usize> = if used.iter().all(|&x| x < 2) {
        c.as_slice()[..n].to_vec()
    } else {
        c.as_slice()[..n].iter().map(|&x| usize::from(x != used[0])).collect()
    };
    let value = host
        .original_edges()
        .iter()
        .filter(|&&(u, v)| sides[u] != sides[v])
        .count() as u64;
    Ok(CutExtraction {
        coloring: Coloring::new(sides),
        value,
    })
}

/// The full max-cut reduction for any `k >= 2`: the identity on `G` when
/// `k = 2`, the weighted clique construction otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LReduction {
    Identity(Graph),
    Clique(LRedMultigraph),
}

impl LReduction {
    pub fn build(g: &Graph, k: usize) -> Result<Self> {
        match k {
            0 | 1 => Err(Error::InvalidParameter(format!("reduction needs k >= 2, got {k}"))),
            2 => Ok(LReduction::Identity(g.clone())),
            _ => Ok(LReduction::Clique(build_lred_multigraph(g, k)?)),
        }
    }

    pub fn k(&self) -> usize {
        match self {
            LReduction::Identity(_) => 2,
            LReduction::Clique(lm) => lm.k,
        }
    }

    pub fn host(&self) -> Multigraph {
        match self {
            LReduction::Identity(g) => Multigraph::from(g),
            LReduction::Clique(lm) => lm.multigraph.clone(),
        }
    }

    pub fn repair(&self, c: &Coloring, s: ColorScheme) -> Result<Coloring> {
        match self {
            LReduction::Identity(g) => {
                check_repair_input(g, 2, c, s)?;
                Ok(c.clone())
            }
            LReduction::Clique(lm) => repair_multigraph_coloring(lm, c, s),
        }
    }

    pub fn extract(&self, c: &Coloring) -> Result<CutExtraction> {
        match self {
            LReduction::Identity(g) => extract_maxcut(&IdentityEmbedding(g), c),
            LReduction::Clique(lm) => extract_maxcut(lm, c),
        }
    }
}

struct IdentityEmbedding<'a>(&'a Graph);

impl Embedding for IdentityEmbedding<'_> {
    fn host_vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    fn original_n(&self) -> usize {
        self.0.vertex_count()
    }

    fn original_edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }
}
