//! Brute-force optima.
//!
//! These enumerate every candidate outright and share no search code with
//! `solvers`, so agreement between the two is evidence rather than tautology.

use crate::error::{Error, Result};
use crate::graph::{ColorScheme, EdgeSet, Graph};
use crate::solvers::ENUMERATION_LIMIT;

/// Upper bound on `2^n` for subset enumeration.
pub const SUBSET_LIMIT: f64 = 1e7;

fn guard(what: &'static str, size: f64, limit: f64) -> Result<()> {
    if size > limit {
        return Err(Error::InstanceTooLarge { what, size, limit });
    }
    Ok(())
}

/// Calls `visit(coloring, covered, feasible)` for every one of the `k^n`
/// colorings, in odometer order (vertex 0 changes fastest).
pub fn for_each_coloring<G: EdgeSet>(g: &G, s: ColorScheme, mut visit: impl FnMut(&[usize], u64, bool)) -> Result<()> {
    let n = g.vertex_count();
    let k = s.k();
    guard("k^n", (k as f64).powi(n as i32), ENUMERATION_LIMIT)?;
    let edges: Vec<(usize, usize, u64)> = g.weighted_edges().collect();
    let mut colors = vec![0usize; n];
    loop {
        let mut covered = 0;
        let mut feasible = true;
        for &(u, v, t) in &edges {
            if colors[u] != colors[v] {
                covered += t;
            } else if colors[u] >= s.r() {
                feasible = false;
            }
        }
        visit(&colors, covered, feasible);
        let mut i = 0;
        while i < n {
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
        if i == n {
            return Ok(());
        }
    }
}

/// Exact optimum, or `None` when the scheme admits no coloring.
pub fn oracle_opt<G: EdgeSet>(g: &G, s: ColorScheme) -> Result<Option<u64>> {
    let mut best = None;
    for_each_coloring(g, s, |_, covered, feasible| {
        if feasible && best.is_none_or(|b| covered > b) {
            best = Some(covered);
        }
    })?;
    Ok(best)
}

fn neighbor_masks(g: &Graph) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    guard("2^n", 2f64.powi(n as i32), SUBSET_LIMIT)?;
    Ok((0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect())
}

/// Size of a maximum independent set.
pub fn oracle_mis(g: &Graph) -> Result<usize> {
    let masks = neighbor_masks(g)?;
    let n = masks.len();
    let best = (0u64..1 << n)
        .filter(|&set| (0..n).all(|v| set & (1 << v) == 0 || masks[v] & set == 0))
        .map(|set| set.count_ones() as usize)
        .max()
        .unwrap_or(0);
    Ok(best)
}

/// Maximum number of edges crossing a bipartition.
pub fn oracle_maxcut(g: &Graph) -> Result<u64> {
    neighbor_masks(g)?;
    let n = g.vertex_count();
    let best = (0u64..1 << n)
        .map(|side| {
            g.edges()
                .iter()
                .filter(|&&(u, v)| (side >> u & 1) != (side >> v & 1))
                .count() as u64
        })
        .max()
        .unwrap_or(0);
    Ok(best)
}
