//! Expanding parallel edges into gadget copies and repairing colorings so
//! each copy costs exactly one conflict when its endpoints agree.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relaxcolor::reductions::{build_lred_multigraph, expand_multigraph, gadget_k, repair_gadget_coloring};
use relaxcolor::verify::{check_gadget, random_feasible_coloring};
use relaxcolor::{covered_edges, ColorScheme, Graph};

fn main() -> relaxcolor::Result<()> {
    for k in 2..=5 {
        let cert = check_gadget(k)?;
        println!(
            "gadget k = {k}: {} vertices, {} conflict-free colorings, holds = {}",
            gadget_k(k)?.vertex_count(),
            cert.count("conflict_free"),
            cert.holds
        );
    }

    let gm = expand_multigraph(&build_lred_multigraph(&Graph::path(3), 3)?)?;
    println!(
        "P3, k = 3: {} gadget copies, {} edges",
        gm.copies.len(),
        gm.expanded_graph.edge_count()
    );
    let s = ColorScheme::new(2, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..3 {
        let c = random_feasible_coloring(&gm.expanded_graph, s, &mut rng).expect("r >= 2");
        let fixed = repair_gadget_coloring(&gm, &c, s)?;
        let copy_conflicts: usize = gm.copies.iter().map(|copy| copy.conflicts(&fixed)).sum();
        println!(
            "value {} -> {}, conflicts inside copies after repair: {copy_conflicts}",
            covered_edges(&gm.expanded_graph, &c, s)?,
            covered_edges(&gm.expanded_graph, &fixed, s)?
        );
    }
    Ok(())
}
