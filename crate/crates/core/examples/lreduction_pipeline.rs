//! Max-cut through the weighted clique construction: build, solve, repair,
//! extract, and compare gaps.

use relaxcolor::reductions::LReduction;
use relaxcolor::verify::{check_lreduction_gap_exhaustive, oracle_maxcut, oracle_opt};
use relaxcolor::{covered_edges, solve_local_search, ColorScheme, EdgeSet, Graph, Objective, SearchBudget};

fn main() -> relaxcolor::Result<()> {
    let g = Graph::cycle(5);
    let k = 4;
    let s = ColorScheme::new(2, k)?;
    let red = LReduction::build(&g, k)?;
    let host = red.host();
    println!(
        "C5, k = {k}: host has {} vertices and {} edges",
        host.vertex_count(),
        host.total_edges()
    );

    let budget = SearchBudget {
        max_iterations: 2_000,
        random_seed: 4,
        restarts: 1,
    };
    let sol = solve_local_search(&host, s, Objective::Covered, budget)?
        .into_solution()
        .expect("feasible");
    let repaired = red.repair(&sol.coloring, s)?;
    let cut = red.extract(&repaired)?;
    let opt = oracle_opt(&host, s)?.expect("feasible");
    let maxcut = oracle_maxcut(&g)?;
    println!(
        "host: opt {opt}, local {}, repaired {}",
        sol.value,
        covered_edges(&host, &repaired, s)?
    );
    println!(
        "cut:  opt {maxcut}, extracted {} with sides {:?}",
        cut.value,
        cut.coloring.as_slice()
    );

    let cert = check_lreduction_gap_exhaustive(&Graph::complete(3), 4, 2)?;
    println!(
        "triangle, k = 4, r = 2: holds = {}, distinct branch {}, repeated branch {}, beta {:?}",
        cert.holds,
        cert.count("distinct_clique_colors"),
        cert.count("repeated_clique_color"),
        cert.measured_beta
    );
    Ok(())
}
