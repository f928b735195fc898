//! Reads graphs in both text formats and reports their girth.
//!
//! Run with `cargo run --example parse_and_girth [FILE]`; without a file a
//! few built-in graphs are used.

use bchromatic::graph::{girth, named, parse_dimacs, parse_edge_list, Format, Graph};

fn report(name: &str, g: &Graph) {
    println!(
        "{name:<24} n={:<4} edges={:<4} girth={}",
        g.n(),
        g.edge_count(),
        girth(g)
    );
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(path) = std::env::args().nth(1) {
        let path = std::path::PathBuf::from(path);
        let g = Format::from_path(&path).parse(&std::fs::read_to_string(&path)?)?;
        report(&path.display().to_string(), &g);
        return Ok(());
    }

    // Vertex 7 is isolated; the header keeps it.
    let edge_list = "# n=8\n0 1\n1 2\n2 3\n3 0\n4 5\n5 6\n";
    report("edge list", &parse_edge_list(edge_list)?);

    let dimacs = "c the 5-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
    report("DIMACS", &parse_dimacs(dimacs)?);

    report("Petersen", &named::petersen());
    report("C9", &named::cycle(9));
    report("P5", &named::path(5));

    match parse_edge_list("0 1\n1 0\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
