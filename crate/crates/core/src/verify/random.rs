use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ColorScheme, Coloring, EdgeSet, Graph};

/// Parameters of an Erdős–Rényi `G(n, p)` sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RandomGraphSpec {
    pub n: usize,
    pub edge_probability: f64,
    pub seed: u64,
}

/// Includes each pair `u < v`, in lexicographic order, independently with
/// the given probability. The same spec always yields the same graph.
pub fn random_graph(spec: RandomGraphSpec) -> Result<Graph> {
    let p = spec.edge_probability;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Every labelled graph on `n` vertices, indexed by its edge bitmask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "too many labelled graphs to enumerate");
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("pairs are distinct")
    })
}

/// Uniform random coloring with `k` colors, ignoring feasibility.
pub fn random_coloring(n: usize, k: usize, rng: &mut impl Rng) -> Coloring {
    Coloring::new((0..n).map(|_| rng.gen_range(0..k)).collect())
}

/// Random feasible coloring: vertices in random order, each taking a
/// uniformly chosen color among those not creating a proper-color conflict.
/// `None` only when some vertex has no admissible color (possible if `r = 0`).
pub fn random_feasible_coloring<G: EdgeSet>(g: &G, s: ColorScheme, rng: &mut impl Rng) -> Option<Coloring> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for v in order {
        let options: Vec<usize> = (0..s.k())
            .filter(|&c| s.is_relaxed(c) || g.weighted_neighbors(v).all(|(u, _)| colors[u] != Some(c)))
            .collect();
        colors[v] = Some(*options.choose(rng)?);
    }
    Some(Coloring::new(colors.into_iter().map(Option::unwrap).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conflict::is_feasible;

    #[test]
    fn extreme_probabilities() {
        let spec = |p| RandomGraphSpec {
            n: 5,
            edge_probability: p,
            seed: 3,
        };
        assert_eq!(random_graph(spec(0.0)).unwrap(), Graph::empty(5));
        assert_eq!(random_graph(spec(1.0)).unwrap(), Graph::complete(5));
        assert_eq!(random_graph(spec(0.5)).unwrap(), random_graph(spec(0.5)).unwrap());
        assert!(random_graph(spec(1.5)).is_err());
    }

    #[test]
    fn labelled_graph_counts() {
        assert_eq!(all_graphs(0).count(), 1);
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(all_graphs(4).count(), 64);
    }

    #[test]
    fn random_feasible_colorings_are_feasible() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = Graph::complete(5);
        let s = ColorScheme::new(1, 3).unwrap();
        for _ in 0..50 {
            let c = random_feasible_coloring(&g, s, &mut rng).unwrap();
            assert!(is_feasible(&g, &c, s).unwrap());
        }
    }
}
