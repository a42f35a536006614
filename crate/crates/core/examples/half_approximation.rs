//! The deterministic half cut against the max-cut optimum on growing graphs.

use relaxcolor::verify::{oracle_maxcut, random_graph, RandomGraphSpec};
use relaxcolor::{solve_half_approx, ColorScheme};

fn main() -> relaxcolor::Result<()> {
    let s = ColorScheme::new(2, 3)?;
    println!("{:>3} {:>5} {:>6} {:>5} {:>7}", "n", "m", "ceil/2", "half", "maxcut");
    for n in [4, 8, 12, 16, 20] {
        let g = random_graph(RandomGraphSpec {
            n,
            edge_probability: 0.5,
            seed: n as u64,
        })?;
        let m = g.edge_count() as u64;
        let half = solve_half_approx(&g, s)?;
        let opt = oracle_maxcut(&g)?;
        println!("{n:>3} {m:>5} {:>6} {:>5} {opt:>7}", m.div_ceil(2), half.value);
    }
    Ok(())
}
