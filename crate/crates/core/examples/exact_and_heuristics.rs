//! Every solver on one random instance, against the exact optimum.

use relaxcolor::verify::{random_graph, RandomGraphSpec};
use relaxcolor::{
    solve_exact, solve_greedy, solve_half_approx, solve_local_search, solve_r12_structural, ColorScheme, Objective,
    SearchBudget,
};

fn main() -> relaxcolor::Result<()> {
    let g = random_graph(RandomGraphSpec {
        n: 9,
        edge_probability: 0.5,
        seed: 7,
    })?;
    println!("G(9, 0.5): {} edges", g.edge_count());

    for (r, k) in [(0, 3), (1, 2), (1, 3), (2, 3)] {
        let s = ColorScheme::new(r, k)?;
        let show = |label: &str, v: Option<u64>| match v {
            Some(v) => println!("  {label:<10} {v}"),
            None => println!("  {label:<10} infeasible"),
        };
        println!("scheme {s}");
        show("exact", solve_exact(&g, s)?.value());
        show("greedy", solve_greedy(&g, s)?.value());
        let budget = SearchBudget {
            random_seed: 1,
            ..Default::default()
        };
        show("local", solve_local_search(&g, s, Objective::Covered, budget)?.value());
        if r >= 2 {
            show("half", Some(solve_half_approx(&g, s)?.value));
        }
        if (r, k) == (1, 2) {
            show("structural", Some(solve_r12_structural(&g)?.value));
        }
    }
    Ok(())
}
