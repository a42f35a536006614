//! Batches of checks over sampled instances, as driven by `relaxcolor verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reductions::default_clique_size;
use crate::verify::certificate::ReductionCertificate;
use crate::verify::checks::{
    check_collapse_ratio, check_collapse_ratio_exhaustive, check_cost_limits, check_gadget, check_gadget_repair,
    check_independent_set_bound, check_lreduction_gap, check_lreduction_gap_exhaustive, check_mis_equivalence,
    check_oracle_agreement,
};
use crate::verify::random::{random_graph, RandomGraphSpec};

/// Colorings at or below this count are enumerated instead of sampled.
const EXHAUSTIVE_LIMIT: f64 = 1e5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Gadget,
    Mis,
    Collapse,
    Lreduction,
    GadgetRepair,
    Cost,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Sampled graphs have between 1 and `max_n` vertices.
    pub max_n: usize,
    /// Number of sampled graphs per suite.
    pub graphs: usize,
    /// Random colorings per sampled check.
    pub trials: usize,
    pub k_min: usize,
    pub k_max: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            max_n: 5,
            graphs: 20,
            trials: 200,
            k_min: 3,
            k_max: 4,
        }
    }
}

const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// Deterministic sample of `cfg.graphs` graphs with at most `max_n` vertices.
pub fn sample_graphs(cfg: &SuiteConfig, max_n: usize) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.graphs)
        .map(|_| {
            let spec = RandomGraphSpec {
                n: rng.gen_range(1..=max_n.max(1)),
                edge_probability: EDGE_PROBABILITIES[rng.gen_range(0..EDGE_PROBABILITIES.len())],
                seed: rng.gen(),
            };
            random_graph(spec)
        })
        .collect()
}

fn small_enough(k: usize, n: usize) -> bool {
    (k as f64).powi(n as i32) <= EXHAUSTIVE_LIMIT
}

/// Runs one suite (or all of them) and returns the certificates in a fixed
/// order. Identical configs give identical results.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<ReductionCertificate>> {
    if cfg.k_min > cfg.k_max || cfg.max_n == 0 {
        return Err(Error::InvalidParameter("need k_min <= k_max and max_n >= 1".into()));
    }
    let ks = cfg.k_min..=cfg.k_max;
    let mut out = Vec::new();
    match suite {
        Suite::All => {
            for s in [
                Suite::Gadget,
                Suite::Mis,
                Suite::Collapse,
                Suite::Lreduction,
                Suite::GadgetRepair,
                Suite::Cost,
                Suite::Oracle,
            ] {
                out.extend(run_suite(s, cfg)?);
            }
        }
        Suite::Gadget => {
            for k in ks {
                out.push(check_gadget(k)?);
            }
        }
        Suite::Mis => {
            for g in sample_graphs(cfg, cfg.max_n)? {
                out.push(check_mis_equivalence(&g, default_clique_size(g.vertex_count()))?);
                if g.vertex_count() <= 3 {
                    out.push(check_independent_set_bound(&g)?);
                }
            }
        }
        Suite::Collapse => {
            for (i, g) in sample_graphs(cfg, cfg.max_n)?.iter().enumerate() {
                for k in ks.clone().filter(|&k| k >= 2) {
                    out.push(if small_enough(k, g.vertex_count()) {
                        check_collapse_ratio_exhaustive(g, k)?
                    } else {
                        check_collapse_ratio(g, k, cfg.trials, cfg.seed.wrapping_add(i as u64))?
                    });
                }
            }
        }
        Suite::Lreduction => {
            for (i, g) in sample_graphs(cfg, cfg.max_n)?.iter().enumerate() {
                for k in ks.clone().filter(|&k| k >= 2) {
                    let host_n = g.vertex_count() + k - 2;
                    for r in 2..=k {
                        out.push(if small_enough(k, host_n) {
                            check_lreduction_gap_exhaustive(g, k, r)?
                        } else {
                            check_lreduction_gap(g, k, r, cfg.trials, cfg.seed.wrapping_add(i as u64))?
                        });
                    }
                }
            }
        }
        Suite::GadgetRepair => {
            for (i, g) in sample_graphs(cfg, cfg.max_n.min(4))?.iter().enumerate() {
                for k in ks.clone().filter(|&k| k >= 3) {
                    out.push(check_gadget_repair(
                        g,
                        k,
                        2,
                        cfg.trials,
                        cfg.seed.wrapping_add(i as u64),
                    )?);
                }
            }
        }
        Suite::Cost => {
            for (i, g) in sample_graphs(cfg, cfg.max_n)?.iter().enumerate() {
                out.push(check_cost_limits(g, cfg.trials, cfg.seed.wrapping_add(i as u64))?);
            }
        }
        Suite::Oracle => {
            for (i, g) in sample_graphs(cfg, cfg.max_n.min(7))?.iter().enumerate() {
                out.push(check_oracle_agreement(g, cfg.seed.wrapping_add(i as u64))?);
            }
        }
    }
    Ok(out)
}
