//! Conflict counts and the generalized cost sum of kappa(v)^p on a small graph.

use relaxcolor::{conflict_profile, defective_cost, generalized_cost, Coloring, CostParams, Graph};

fn main() -> relaxcolor::Result<()> {
    let g = Graph::complete(4);
    let colorings = [
        ("all one color", Coloring::uniform(4, 0)),
        ("one pair merged", Coloring::new(vec![0, 0, 1, 2])),
        ("proper", Coloring::new(vec![0, 1, 2, 3])),
    ];
    for (name, c) in &colorings {
        let report = conflict_profile(&g, c)?;
        println!(
            "{name}: kappa = {:?}, conflicts = {}, covered = {}",
            report.kappa, report.conflicts, report.covered
        );
        for p in [0.5, 1.0, 2.0, 8.0] {
            let cost = generalized_cost(&g, c, CostParams::new(p)?)?;
            println!("  p = {p:>3}: cost {cost:.3}");
        }
        println!("  defective cost (max kappa): {}", defective_cost(&g, c)?);
    }
    Ok(())
}
