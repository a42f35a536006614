use serde::{Deserialize, Serialize};

use crate::conflict::{conflict_profile, kappa_power_sum, CostParams};
use crate::error::Result;
use crate::graph::{ColorScheme, Coloring, EdgeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeRecord {
    pub k: usize,
    pub r: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaBucket {
    pub kappa: u64,
    pub vertices: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostAtP {
    pub p: f64,
    pub cost: f64,
}

/// Answer to "is there a feasible coloring covering at least `c` edges".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub c: u64,
    pub answer: bool,
}

/// JSON summary of one solve or eval run. `value + conflicts` always
/// equals the total edge count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub instance: String,
    pub method: String,
    pub scheme: SchemeRecord,
    pub vertices: usize,
    pub edges: u64,
    pub value: u64,
    pub conflicts: u64,
    pub feasible: bool,
    pub kappa_histogram: Vec<KappaBucket>,
    pub costs: Vec<CostAtP>,
    pub defective_cost: u64,
    pub conflicted_nodes: usize,
    /// Only filled when timing is requested, so reruns stay byte-identical.
    pub wall_time_ms: Option<f64>,
    pub seed: Option<u64>,
    pub decision: Option<Decision>,
}

impl RunReport {
    pub fn build<G: EdgeSet>(
        instance: &str,
        method: &str,
        g: &G,
        s: ColorScheme,
        c: &Coloring,
        ps: &[CostParams],
    ) -> Result<Self> {
        c.validate(g.vertex_count(), s.k())?;
        let profile = conflict_profile(g, c)?;
        let feasible = profile.conflict_edges.iter().all(|&(u, _, _)| s.is_relaxed(c.color(u)));
        Ok(RunReport {
            instance: instance.to_string(),
            method: method.to_string(),
            scheme: SchemeRecord { k: s.k(), r: s.r() },
            vertices: g.vertex_count(),
            edges: g.total_edges(),
            value: profile.covered,
            conflicts: profile.conflicts,
            feasible,
            kappa_histogram: profile
                .kappa_histogram()
                .into_iter()
                .map(|(kappa, vertices)| KappaBucket { kappa, vertices })
                .collect(),
            costs: ps
                .iter()
                .map(|&p| CostAtP {
                    p: p.p(),
                    cost: kappa_power_sum(&profile.kappa, p),
                })
                .collect(),
            defective_cost: profile.kappa.iter().copied().max().unwrap_or(0),
            conflicted_nodes: profile.kappa.iter().filter(|&&x| x > 0).count(),
            wall_time_ms: None,
            seed: None,
            decision: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn monochromatic_triangle() {
        let ps = [CostParams::new(1.0).unwrap(), CostParams::new(2.0).unwrap()];
        let s = ColorScheme::new(1, 2).unwrap();
        let r = RunReport::build("k3", "eval", &Graph::complete(3), s, &Coloring::uniform(3, 0), &ps).unwrap();
        assert_eq!((r.value, r.conflicts, r.feasible), (0, 3, true));
        assert_eq!(r.costs[0].cost, 6.0);
        assert_eq!(r.costs[1].cost, 12.0);
        assert_eq!(r.kappa_histogram, vec![KappaBucket { kappa: 2, vertices: 3 }]);

        let bad = RunReport::build("k3", "eval", &Graph::complete(3), s, &Coloring::uniform(3, 1), &ps).unwrap();
        assert!(!bad.feasible);
    }
}
