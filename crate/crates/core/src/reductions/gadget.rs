//! Simulating parallel edges with copies of an edge gadget.
//!
//! The gadget `K` on `k + 2` vertices `w1..w(k+2)` is the complete graph
//! minus `(w1,w2)`, `(w2,w3)` and `(w3,w4)`. It is `k`-colorable without
//! conflicts, and every conflict-free `k`-coloring separates `w2` from `w3`,
//! so a copy hung between `u = w2` and `v = w3` acts like one edge `uv`.

use serde::{Deserialize, Serialize};

use crate::conflict::is_feasible;
use crate::error::{Error, Result};
use crate::graph::{ColorScheme, Coloring, EdgeSet, Graph, Multigraph};
use crate::reductions::lred::{Embedding, LRedMultigraph};

/// Gadget index pairs removed from the clique (0-based: `w(i+1)` is `i`).
const REMOVED: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 3)];

fn gadget_edges(k: usize) -> impl Iterator<Item = (usize, usize)> {
    let size = k + 2;
    (0..size)
        .flat_map(move |a| (a + 1..size).map(move |b| (a, b)))
        .filter(|e| !REMOVED.contains(e))
}

/// The gadget on `k + 2` vertices; vertex `i` stands for `w(i+1)`.
pub fn gadget_k(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("gadget needs k >= 2, got {k}")));
    }
    Graph::new(k + 2, gadget_edges(k))
}

/// One gadget copy replacing a single parallel edge between `u` and `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetCopy {
    /// Plays `w2`.
    pub u: usize,
    /// Plays `w3`.
    pub v: usize,
    /// Fresh vertices playing `w1, w4, w5, ..., w(k+2)`, in that order.
    pub internal: Vec<usize>,
}

impl GadgetCopy {
    /// Host vertex ids in gadget order `w1, w2, ..., w(k+2)`.
    pub fn roles(&self) -> Vec<usize> {
        let mut roles = vec![self.internal[0], self.u, self.v, self.internal[1]];
        roles.extend_from_slice(&self.internal[2..]);
        roles
    }

    /// Host edges of this copy.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let roles = self.roles();
        gadget_edges(self.internal.len())
            .map(|(a, b)| (roles[a], roles[b]))
            .collect()
    }

    pub fn conflicts(&self, c: &Coloring) -> usize {
        self.edges()
            .into_iter()
            .filter(|&(a, b)| c.color(a) == c.color(b))
            .count()
    }
}

/// A multigraph whose parallel edges were replaced by gadget copies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMap {
    pub expanded_graph: Graph,
    pub k: usize,
    /// Source-graph vertices: `0..original_n`. Pairs inside this range are
    /// kept as plain edges.
    pub original_n: usize,
    /// Vertices carried over from the multigraph: `0..host_n`. Gadget
    /// vertices follow, `k` per copy in copy order.
    pub host_n: usize,
    pub copies: Vec<GadgetCopy>,
}

/// Replaces every pair outside `0..original_n` of multiplicity `t` by `t`
/// gadget copies. Pairs inside `0..original_n` must have multiplicity 1 and
/// are kept as plain edges.
pub fn expand_parallel_edges(mg: &Multigraph, k: usize, original_n: usize) -> Result<GadgetMap> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("gadget needs k >= 2, got {k}")));
    }
    let host_n = mg.vertex_count();
    let mut edges = Vec::new();
    let mut copies = Vec::new();
    let mut next = host_n;
    for &(u, v, t) in mg.edges() {
        if v < original_n {
            if t != 1 {
                return Err(Error::InvalidParameter(format!(
                    "source edge ({u}, {v}) has multiplicity {t}; only multiplicity 1 is kept plain"
                )));
            }
            edges.push((u, v));
            continue;
        }
        for _ in 0..t {
            let copy = GadgetCopy {
                u,
                v,
                internal: (next..next + k).collect(),
            };
            next += k;
            edges.extend(copy.edges());
            copies.push(copy);
        }
    }
    Ok(GadgetMap {
        expanded_graph: Graph::new(next, edges)?,
        k,
        original_n,
        host_n,
        copies,
    })
}

/// Expands the clique construction into a simple graph.
pub fn expand_multigraph(lm: &LRedMultigraph) -> Result<GadgetMap> {
    expand_parallel_edges(&lm.multigraph, lm.k, lm.original_n)
}

impl Embedding for GadgetMap {
    fn host_vertex_count(&self) -> usize {
        self.expanded_graph.vertex_count()
    }

    fn original_n(&self) -> usize {
        self.original_n
    }

    fn original_edges(&self) -> Vec<(usize, usize)> {
        let n = self.original_n;
        self.expanded_graph
            .edges()
            .iter()
            .copied()
            .filter(|&(_, v)| v < n)
            .collect()
    }
}

/// Recolors gadget interiors so each copy has exactly one conflict when its
/// endpoints share a color and none otherwise.
///
/// Endpoint colors never change. With distinct endpoint colors `a, b` the
/// copy gets `w1 = a`, `w4 = b`; with a shared color `a` it gets
/// `w1 = w4 = c2`, the lowest relaxed color other than `a`, leaving a single
/// conflict on `(w1, w4)`. The other `k - 2` interior vertices take the
/// remaining colors in ascending order. Copies already at that minimum are
/// left untouched.
pub fn repair_gadget_coloring(gm: &GadgetMap, c: &Coloring, s: ColorScheme) -> Result<Coloring> {
    if s.k() != gm.k {
        return Err(Error::InvalidParameter(format!(
            "scheme has k = {} but gadgets were built for k = {}",
            s.k(),
            gm.k
        )));
    }
    if s.r() < 2 {
        return Err(Error::InvalidParameter(format!(
            "repair needs at least 2 relaxed colors, scheme has r = {}",
            s.r()
        )));
    }
    if !is_feasible(&gm.expanded_graph, c, s)? {
        return Err(Error::InfeasibleColoring { k: s.k(), r: s.r() });
    }
    let mut out = c.clone();
    for copy in &gm.copies {
        let (a, b) = (c.color(copy.u), c.color(copy.v));
        let target = usize::from(a == b);
        if copy.conflicts(&out) == target {
            continue;
        }
        let (w1, w4) = if a != b {
            (a, b)
        } else {
            let c2 = s.relaxed_colors().find(|&x| x != a).expect("r >= 2");
            (c2, c2)
        };
        let mut rest = (0..s.k()).filter(|&x| x != a && x != b && x != w1 && x != w4);
        out.set(copy.internal[0], w1);
        out.set(copy.internal[1], w4);
        for &w in &copy.internal[2..] {
            out.set(w, rest.next().expect("k - 2 colors remain"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conflict::covered_edges;
    use crate::graph::EdgeSet;
    use crate::reductions::lred::build_lred_multigraph;

    #[test]
    fn gadget_sizes() {
        let k3 = gadget_k(3).unwrap();
        assert_eq!((k3.vertex_count(), k3.edge_count()), (5, 7));
        let k2 = gadget_k(2).unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (4, 3));
        assert_eq!(k2.edges(), &[(0, 2), (0, 3), (1, 3)]);
        assert!(gadget_k(1).is_err());
    }

    #[test]
    fn k3_gadget_separates_w2_w3() {
        let g = gadget_k(3).unwrap();
        let mut proper = 0;
        for code in 0..3usize.pow(5) {
            let colors: Vec<usize> = (0..5).map(|i| code / 3usize.pow(i) % 3).collect();
            if g.edges().iter().all(|&(a, b)| colors[a] != colors[b]) {
                proper += 1;
                assert_ne!(colors[1], colors[2]);
            }
        }
        assert!(proper > 0);
    }

    #[test]
    fn expansion_counts() {
        let lm = build_lred_multigraph(&Graph::path(2), 3).unwrap();
        let gm = expand_multigraph(&lm).unwrap();
        assert_eq!(gm.copies.len(), 4);
        assert_eq!(gm.expanded_graph.vertex_count(), 3 + 4 * 3);
        assert_eq!(gm.expanded_graph.edge_count(), 1 + 4 * 7);
        assert!(gm.expanded_graph.has_edge(0, 1));

        let mg = Multigraph::new(2, [(0, 1, 2)]).unwrap();
        let gm2 = expand_parallel_edges(&mg, 2, 0).unwrap();
        assert_eq!(gm2.copies.len(), 2);
        assert_eq!(gm2.expanded_graph.vertex_count(), 6);
        assert!(!gm2.expanded_graph.has_edge(0, 1));

        let plain = Multigraph::new(2, [(0, 1, 1)]).unwrap();
        let gm3 = expand_parallel_edges(&plain, 3, 2).unwrap();
        assert!(gm3.copies.is_empty());
        assert_eq!(gm3.expanded_graph, Graph::path(2));
    }

    #[test]
    fn copy_count_matches_non_source_multiplicity() {
        let g = Graph::complete(3);
        for k in 3..=5 {
            let lm = build_lred_multigraph(&g, k).unwrap();
            let gm = expand_multigraph(&lm).unwrap();
            let non_source = lm.multigraph.total_edges() - g.edge_count() as u64;
            assert_eq!(gm.copies.len() as u64, non_source);
            assert_eq!(
                gm.expanded_graph.vertex_count(),
                lm.multigraph.vertex_count() + gm.copies.len() * k
            );
        }
    }

    #[test]
    fn repair_single_copy() {
        let mg = Multigraph::new(2, [(0, 1, 1)]).unwrap();
        let gm = expand_parallel_edges(&mg, 3, 0).unwrap();
        let s = ColorScheme::new(2, 3).unwrap();
        let copy = &gm.copies[0];

        let all_zero = Coloring::uniform(5, 0);
        let shared = repair_gadget_coloring(&gm, &all_zero, s).unwrap();
        assert_eq!(copy.conflicts(&shared), 1);
        assert_eq!(shared.color(copy.internal[0]), 1);
        assert_eq!(shared.color(copy.internal[1]), 1);

        let split = Coloring::new(vec![0, 1, 0, 0, 0]);
        let fixed = repair_gadget_coloring(&gm, &split, s).unwrap();
        assert_eq!(copy.conflicts(&fixed), 0);
        assert!(
            covered_edges(&gm.expanded_graph, &fixed, s).unwrap()
                >= covered_edges(&gm.expanded_graph, &split, s).unwrap()
        );

        assert_eq!(repair_gadget_coloring(&gm, &fixed, s).unwrap(), fixed);
    }

    #[test]
    fn expanded_multiplicity_matches() {
        let lm = build_lred_multigraph(&Graph::complete(3), 4).unwrap();
        let gm = expand_multigraph(&lm).unwrap();
        for &(u, v, t) in lm.multigraph.edges() {
            let copies = gm.copies.iter().filter(|c| (c.u, c.v) == (u, v)).count() as u64;
            if v < 3 {
                assert_eq!(copies, 0);
            } else {
                assert_eq!(copies, t);
            }
        }
        // 30 copies of a 12-edge gadget plus the triangle
        assert_eq!(gm.expanded_graph.total_edges(), 3 + 30 * 12);
    }
}
