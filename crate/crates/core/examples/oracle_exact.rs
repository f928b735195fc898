//! Exhaustive b-chromatic numbers for small graphs, including ones outside
//! the girth range of the construction.

use bchromatic::density::density_profile;
use bchromatic::graph::{girth, named, Graph};
use bchromatic::oracle::{exact_b_coloring_with, OracleConfig};

fn main() -> bchromatic::Result<()> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("P5", named::path(5)),
        ("C4", named::cycle(4)),
        ("C5", named::cycle(5)),
        ("C9", named::cycle(9)),
        ("K4", named::complete(4)),
        ("star K1,5", named::star(5)),
        ("Petersen", named::petersen()),
        ("encircled tree", named::encircled_tree()),
    ];
    for (name, g) in graphs {
        let m = density_profile(&g)?.m;
        let (k, coloring) = exact_b_coloring_with(&g, OracleConfig::default())?;
        println!(
            "{name:<16} girth={:<8} m={m} chi_b={k} coloring={coloring:?}",
            girth(&g).to_string()
        );
    }

    // The search refuses large inputs unless the limit is raised.
    let big = named::cycle(20);
    match exact_b_coloring_with(&big, OracleConfig::default()) {
        Err(e) => println!("C20: {e}"),
        Ok(_) => unreachable!(),
    }
    let relaxed = OracleConfig {
        limit: 20,
        ..OracleConfig::default()
    };
    println!("C20 with limit 20: chi_b={}", exact_b_coloring_with(&big, relaxed)?.0);
    Ok(())
}
