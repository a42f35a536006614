//! Independent sets of G as (1, 2) colorings of G joined to an n^2-clique.

use relaxcolor::reductions::{augment_with_clique, default_clique_size, mis_from_coloring};
use relaxcolor::verify::{check_mis_equivalence, oracle_mis};
use relaxcolor::{solve_exact, ColorScheme, Graph};

fn main() -> relaxcolor::Result<()> {
    let g = Graph::path(3);
    let q = default_clique_size(g.vertex_count());
    let ag = augment_with_clique(&g, q)?;
    println!(
        "P3 + clique({q}): {} vertices, {} edges",
        ag.graph.vertex_count(),
        ag.graph.edge_count()
    );

    let best = solve_exact(&ag.graph, ColorScheme::new(1, 2)?)?
        .into_solution()
        .expect("r = 1 is feasible");
    let set = mis_from_coloring(&ag, &best.coloring)?;
    println!(
        "optimum covers {} edges; independent set {set:?}; alpha(G) = {}",
        best.value,
        oracle_mis(&g)?
    );

    for g in [Graph::complete(3), Graph::cycle(5), Graph::empty(3)] {
        let q = default_clique_size(g.vertex_count());
        let cert = check_mis_equivalence(&g, q)?;
        println!(
            "n = {}, m = {}: holds = {}, thresholds = {}",
            g.vertex_count(),
            g.edge_count(),
            cert.holds,
            cert.count("thresholds")
        );
    }

    // q below the edge count breaks the equivalence; the certificate says where
    let cert = check_mis_equivalence(&Graph::path(2), 1)?;
    println!(
        "single edge, q = 1: holds = {}, {}",
        cert.holds,
        cert.witness.map(|w| w.detail).unwrap_or_default()
    );
    Ok(())
}
