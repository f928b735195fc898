//! Builds a b-coloring with `m` colors from a good set and prints every step.
//!
//! The graph is a set of hubs joined by paths of length 2 to 4, so the link
//! vertices between anchors are non-trivial. Pass a seed as the first
//! argument to try other instances.

use bchromatic::bcolor::b_coloring_with_good_set;
use bchromatic::density::density_profile;
use bchromatic::goodset::find_good_set;
use bchromatic::graph::{generate_linked_hubs, girth};
use bchromatic::oracle::check_b_coloring;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(2);
    let g = generate_linked_hubs(4, 4, 10, 9, seed)?;
    let profile = density_profile(&g)?;
    println!(
        "n={} edges={} girth={} m={}",
        g.n(),
        g.edge_count(),
        girth(&g),
        profile.m
    );

    let Some(w) = find_good_set(&g, &profile)? else {
        println!("no good set; the b-chromatic number is m - 1 = {}", profile.m - 1);
        return Ok(());
    };
    println!("anchors {:?}", w.members());

    let construction = b_coloring_with_good_set(&g, &w)?;
    let links = &construction.links;
    println!(
        "links: {} total, {} with a link neighbor, {} with two anchors",
        links.links.len(),
        links.with_link_neighbor.len(),
        links.with_two_anchors.len()
    );
    for event in construction.trace() {
        println!("  {}", event.render(&g));
    }
    let recolored = g
        .vertices()
        .filter(|&v| construction.partial.recolor_count(v) > 0)
        .count();
    println!("vertices recolored: {recolored}");

    let report = check_b_coloring(&g, &construction.result.coloring, profile.m)?;
    println!(
        "valid={} basis={:?}",
        report.is_valid(),
        report.basis.unwrap_or_default()
    );
    Ok(())
}
