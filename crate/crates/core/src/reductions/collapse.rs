use crate::conflict::is_feasible;
use crate::error::{Error, Result};
use crate::graph::{ColorScheme, Coloring, EdgeSet};

/// Edges (with multiplicity) having exactly one endpoint of color `color`.
fn boundary<G: EdgeSet>(g: &G, c: &Coloring, color: usize) -> u64 {
    g.weighted_edges()
        .filter(|&(u, v, _)| (c.color(u) == color) != (c.color(v) == color))
        .map(|(_, _, t)| t)
        .sum()
}

/// Turns a feasible (1, k) coloring into a feasible (1, 2) coloring.
///
/// The proper class with the largest boundary (ties to the lowest color
/// index) keeps the proper color 1; every other vertex becomes relaxed
/// color 0. The boundary of the kept class bounds the covered edges of the
/// input from below by a factor `1/(k-1)`.
pub fn collapse_1k_to_12<G: EdgeSet>(g: &G, c: &Coloring, k: usize) -> Result<Coloring> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("collapse needs k >= 2, got {k}")));
    }
    let scheme = ColorScheme::new(1, k)?;
    if !is_feasible(g, c, scheme)? {
        return Err(Error::InfeasibleColoring { k, r: 1 });
    }
    let mut kept = 1;
    let mut kept_boundary = boundary(g, c, 1);
    for color in 2..k {
        let b = boundary(g, c, color);
        if b > kept_boundary {
            kept = color;
            kept_boundary = b;
        }
    }
    Ok(Coloring::new(
        c.as_slice().iter().map(|&x| usize::from(x == kept)).collect(),
    ))
}
