//! The density parameter `m`, the dense vertices and good sets.
//!
//! `m` bounds the b-chromatic number from above. On graphs of girth at least 8
//! a good set exists exactly when `m` colors are achievable; the encircled
//! tree below is the smallest kind of counterexample.

use bchromatic::density::density_profile;
use bchromatic::goodset::{check_good_set, find_good_set};
use bchromatic::graph::{named, Graph};

fn show(name: &str, g: &Graph) -> bchromatic::Result<()> {
    let profile = density_profile(g)?;
    println!("{name}: m={} dense={:?}", profile.m, profile.dense);
    match find_good_set(g, &profile)? {
        Some(w) => println!("  good set {:?}", w.members()),
        None => {
            println!("  no good set");
            if profile.dense.len() == profile.m {
                let reason = check_good_set(g, &profile.dense, &profile).unwrap_err();
                println!("  the dense set fails with {}", reason.describe(g));
            }
        }
    }
    Ok(())
}

fn main() -> bchromatic::Result<()> {
    show("P5", &named::path(5))?;
    show("C9", &named::cycle(9))?;
    show("star of stars", &named::star_of_stars())?;
    show("encircled tree", &named::encircled_tree())?;

    // Candidate sets can be checked directly.
    let g = named::path(5);
    let profile = density_profile(&g)?;
    for candidate in [vec![1, 2, 3], vec![0, 1, 2], vec![1, 2]] {
        let verdict = match check_good_set(&g, &candidate, &profile) {
            Ok(()) => "good".to_string(),
            Err(r) => r.describe(&g),
        };
        println!("P5 candidate {candidate:?}: {verdict}");
    }
    Ok(())
}
