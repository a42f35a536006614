//! Collapsing (1, k) colorings to (1, 2) and measuring the loss.

use relaxcolor::reductions::collapse_1k_to_12;
use relaxcolor::verify::{check_collapse_ratio, check_collapse_ratio_exhaustive, random_graph, RandomGraphSpec};
use relaxcolor::{covered_edges, solve_exact, ColorScheme, Graph};

fn main() -> relaxcolor::Result<()> {
    let g = Graph::cycle(6);
    let s = ColorScheme::new(1, 4)?;
    let best = solve_exact(&g, s)?.into_solution().expect("feasible");
    let collapsed = collapse_1k_to_12(&g, &best.coloring, 4)?;
    println!(
        "C6 (1,4) optimum {:?} covers {}; collapsed {:?} covers {}",
        best.coloring.as_slice(),
        best.value,
        collapsed.as_slice(),
        covered_edges(&g, &collapsed, ColorScheme::new(1, 2)?)?
    );

    for k in 2..=4 {
        let cert = check_collapse_ratio_exhaustive(&Graph::path(5), k)?;
        println!(
            "P5, k = {k}: {} colorings, worst ratio {:?}",
            cert.count("colorings"),
            cert.measured_alpha
        );
    }
    let g = random_graph(RandomGraphSpec {
        n: 12,
        edge_probability: 0.4,
        seed: 2,
    })?;
    let cert = check_collapse_ratio(&g, 5, 2000, 3)?;
    println!(
        "G(12, 0.4), k = 5: holds = {}, worst ratio {:?} (bound 4)",
        cert.holds, cert.measured_alpha
    );
    Ok(())
}
