//! Runs the full pipeline on random graphs of girth at least 9 and tallies
//! how often the b-chromatic number reaches `m` and how it was obtained.

use std::collections::BTreeMap;

use bchromatic::graph::{
    extend_girth_constrained, generate_girth_constrained, generate_linked_hubs, random_labeled_tree,
};
use bchromatic::oracle::check_b_coloring;
use bchromatic::pipeline::{b_chromatic, PipelineConfig};

fn main() -> bchromatic::Result<()> {
    let samples: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(300);
    let mut tally: BTreeMap<(String, &str), usize> = BTreeMap::new();
    for seed in 0..samples {
        let g = match seed % 3 {
            0 => generate_girth_constrained(10 + (seed as usize * 7) % 150, 9, 160, seed)?,
            1 => extend_girth_constrained(&random_labeled_tree(8 + seed as usize % 60, seed), 9, 3, seed)?,
            _ => generate_linked_hubs(2 + seed as usize % 8, 6, 20, 9, seed)?,
        };
        let outcome = b_chromatic(&g, PipelineConfig::default())?;
        let m = outcome.profile.m;
        let chi = outcome.chi_b.expect("girth at least 9 always yields a value");
        assert!(chi == m || chi + 1 == m);
        if let Some(result) = &outcome.coloring {
            assert!(check_b_coloring(&g, &result.coloring, chi)?.is_valid());
        }
        let relation = if chi == m { "chi_b = m" } else { "chi_b = m - 1" };
        *tally.entry((relation.to_string(), outcome.method.tag())).or_default() += 1;
    }
    for ((relation, method), count) in tally {
        println!("{relation:<14} via {method:<18} {count}");
    }
    Ok(())
}
