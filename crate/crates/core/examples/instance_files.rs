//! Reading and writing instance and coloring files.

use relaxcolor::cli::{parse_coloring, parse_instance, serialize_coloring, serialize_instance, InstanceGraph};
use relaxcolor::{covered_edges, solve_exact};

const TEXT: &str = "\
c a 5-cycle
p edge 5 5
c scheme 3 1
e 1 2
e 2 3
e 3 4
e 4 5
e 5 1
";

fn main() -> relaxcolor::Result<()> {
    let inst = parse_instance(TEXT)?;
    let InstanceGraph::Simple(g) = &inst.graph else {
        unreachable!()
    };
    print!("{}", serialize_instance(&inst));

    let sol = solve_exact(g, inst.scheme)?.into_solution().expect("r = 1 is feasible");
    let file = serialize_coloring(&sol.coloring);
    print!("{file}");
    let back = parse_coloring(&file, g.vertex_count())?;
    println!(
        "re-read coloring covers {} edges",
        covered_edges(g, &back, inst.scheme)?
    );

    match parse_instance("p edge 3 1\nc scheme 2 2\ne 1 4\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
