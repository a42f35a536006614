//! Conflict accounting and the objectives built on it.
//!
//! A conflict edge is a monochromatic edge; every other edge is covered.
//! `kappa[v]` counts the conflict edges incident to `v`, weighted by
//! multiplicity on multigraphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ColorScheme, Coloring, EdgeSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConflictReport {
    pub kappa: Vec<u64>,
    /// Monochromatic pairs `(u, v, multiplicity)`.
    pub conflict_edges: Vec<(usize, usize, u64)>,
    pub covered: u64,
    pub conflicts: u64,
}

impl ConflictReport {
    /// `kappa` value -> number of vertices with that value, ascending.
    pub fn kappa_histogram(&self) -> Vec<(u64, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for &k in &self.kappa {
            *counts.entry(k).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }
}

fn check_dimension<G: EdgeSet>(g: &G, c: &Coloring) -> Result<()> {
    if c.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: g.vertex_count(),
            found: c.len(),
        });
    }
    Ok(())
}

pub fn conflict_profile<G: EdgeSet>(g: &G, c: &Coloring) -> Result<ConflictReport> {
    check_dimension(g, c)?;
    let mut kappa = vec![0u64; g.vertex_count()];
    let mut conflict_edges = Vec::new();
    let (mut covered, mut conflicts) = (0, 0);
    for (u, v, t) in g.weighted_edges() {
        if c.color(u) == c.color(v) {
            kappa[u] += t;
            kappa[v] += t;
            conflicts += t;
            conflict_edges.push((u, v, t));
        } else {
            covered += t;
        }
    }
    Ok(ConflictReport {
        kappa,
        conflict_edges,
        covered,
        conflicts,
    })
}

/// Number of covered edges without any validation. Callers guarantee
/// `c.len() == g.vertex_count()`.
pub(crate) fn covered_unchecked<G: EdgeSet>(g: &G, c: &[usize]) -> u64 {
    g.weighted_edges()
        .filter(|&(u, v, _)| c[u] != c[v])
        .map(|(_, _, t)| t)
        .sum()
}

/// True iff no proper color class contains an edge.
pub fn is_feasible<G: EdgeSet>(g: &G, c: &Coloring, s: ColorScheme) -> Result<bool> {
    c.validate(g.vertex_count(), s.k())?;
    Ok(g.weighted_edges()
        .all(|(u, v, _)| c.color(u) != c.color(v) || s.is_relaxed(c.color(u))))
}

/// Objective value of a feasible coloring: `|E| - conflicts`.
pub fn covered_edges<G: EdgeSet>(g: &G, c: &Coloring, s: ColorScheme) -> Result<u64> {
    if !is_feasible(g, c, s)? {
        return Err(Error::InfeasibleColoring { k: s.k(), r: s.r() });
    }
    Ok(covered_unchecked(g, c.as_slice()))
}

/// Exponent of the generalized conflict cost; always `> 0` and finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostParams {
    p: f64,
}

impl CostParams {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() || p <= 0.0 || !p.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "cost exponent p must be finite and > 0, got {p}"
            )));
        }
        Ok(CostParams { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// `sum over v of kappa(v)^p`, with `0^p = 0`.
pub fn kappa_power_sum(kappa: &[u64], params: CostParams) -> f64 {
    kappa
        .iter()
        .filter(|&&k| k > 0)
        .fold(0.0, |acc, &k| acc + (k as f64).powf(params.p))
}

pub fn generalized_cost<G: EdgeSet>(g: &G, c: &Coloring, params: CostParams) -> Result<f64> {
    Ok(kappa_power_sum(&conflict_profile(g, c)?.kappa, params))
}

/// Largest per-vertex conflict count.
pub fn defective_cost<G: EdgeSet>(g: &G, c: &Coloring) -> Result<u64> {
    Ok(conflict_profile(g, c)?.kappa.into_iter().max().unwrap_or(0))
}

/// Number of vertices with at least one conflict.
pub fn conflicted_node_count<G: EdgeSet>(g: &G, c: &Coloring) -> Result<usize> {
    Ok(conflict_profile(g, c)?.kappa.iter().filter(|&&k| k > 0).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, Multigraph};

    fn scheme(r: usize, k: usize) -> ColorScheme {
        ColorScheme::new(r, k).unwrap()
    }

    #[test]
    fn monochromatic_triangle() {
        let k3 = Graph::complete(3);
        let c = Coloring::uniform(3, 0);
        let report = conflict_profile(&k3, &c).unwrap();
        assert_eq!(report.conflicts, 3);
        assert_eq!(report.covered, 0);
        assert_eq!(report.kappa, vec![2, 2, 2]);
        assert_eq!(report.kappa_histogram(), vec![(2, 3)]);

        let p1 = CostParams::new(1.0).unwrap();
        let p2 = CostParams::new(2.0).unwrap();
        assert_eq!(generalized_cost(&k3, &c, p1).unwrap(), 6.0);
        assert_eq!(generalized_cost(&k3, &c, p2).unwrap(), 12.0);
        assert_eq!(defective_cost(&k3, &c).unwrap(), 2);
        assert_eq!(conflicted_node_count(&k3, &c).unwrap(), 3);
    }

    #[test]
    fn proper_path() {
        let p3 = Graph::path(3);
        let c = Coloring::new(vec![0, 1, 0]);
        let report = conflict_profile(&p3, &c).unwrap();
        assert_eq!((report.conflicts, report.covered), (0, 2));
        assert_eq!(covered_edges(&p3, &c, scheme(0, 2)).unwrap(), 2);
        for p in [0.1, 1.0, 7.5] {
            assert_eq!(generalized_cost(&p3, &c, CostParams::new(p).unwrap()).unwrap(), 0.0);
        }
        assert_eq!(defective_cost(&p3, &c).unwrap(), 0);
        assert_eq!(conflicted_node_count(&p3, &c).unwrap(), 0);
    }

    #[test]
    fn multiplicity_weighted_conflicts() {
        let g = Multigraph::new(2, [(0, 1, 5)]).unwrap();
        let report = conflict_profile(&g, &Coloring::uniform(2, 0)).unwrap();
        assert_eq!(report.conflicts, 5);
        assert_eq!(report.kappa, vec![5, 5]);
    }

    #[test]
    fn star_defect() {
        let star = Graph::star(4);
        let c = Coloring::uniform(5, 0);
        assert_eq!(defective_cost(&star, &c).unwrap(), 4);
    }

    #[test]
    fn partially_conflicted_path() {
        let c = Coloring::new(vec![0, 0, 1]);
        assert_eq!(conflicted_node_count(&Graph::path(3), &c).unwrap(), 2);
    }

    #[test]
    fn feasibility() {
        let k3 = Graph::complete(3);
        for bits in 0..8usize {
            let c = Coloring::new((0..3).map(|i| (bits >> i) & 1).collect());
            assert!(is_feasible(&k3, &c, scheme(2, 2)).unwrap());
        }
        assert!(!is_feasible(&k3, &Coloring::new(vec![0, 0, 1]), scheme(0, 2)).unwrap());
        // color 1 is the proper color of (1, 2); endpoints of P3 are non-adjacent
        assert!(is_feasible(&Graph::path(3), &Coloring::new(vec![1, 0, 1]), scheme(1, 2)).unwrap());
    }

    #[test]
    fn covered_edges_contract() {
        let k3 = Graph::complete(3);
        assert_eq!(
            covered_edges(&k3, &Coloring::new(vec![0, 0, 1]), scheme(2, 2)).unwrap(),
            2
        );
        assert_eq!(
            covered_edges(&Graph::empty(4), &Coloring::uniform(4, 1), scheme(0, 2)).unwrap(),
            0
        );
        assert_eq!(
            covered_edges(&k3, &Coloring::new(vec![0, 0, 1]), scheme(0, 2)),
            Err(Error::InfeasibleColoring { k: 2, r: 0 })
        );
    }

    #[test]
    fn error_paths() {
        let k3 = Graph::complete(3);
        assert_eq!(
            conflict_profile(&k3, &Coloring::uniform(2, 0)),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        );
        assert!(matches!(
            is_feasible(&k3, &Coloring::new(vec![0, 1, 2]), scheme(0, 2)),
            Err(Error::ColorOutOfRange { vertex: 2, .. })
        ));
        assert!(CostParams::new(0.0).is_err());
        assert!(CostParams::new(-1.0).is_err());
        assert!(CostParams::new(f64::NAN).is_err());
    }
}
