//! Writes a coloring file, reads it back and checks it, then shows what the
//! checker reports for a tampered copy.

use bchromatic::cli::{parse_coloring, write_coloring};
use bchromatic::graph::named;
use bchromatic::oracle::check_b_coloring;
use bchromatic::pipeline::{b_chromatic, PipelineConfig};

fn main() -> bchromatic::Result<()> {
    let g = named::cycle(9);
    let outcome = b_chromatic(&g, PipelineConfig::default())?;
    let text = write_coloring(&g, outcome.coloring.as_ref().unwrap());
    print!("{text}");

    let file = parse_coloring(&g, &text)?;
    let report = check_b_coloring(&g, &file.colors, file.k)?;
    println!("as written: valid={}", report.is_valid());

    let mut tampered = file.colors.clone();
    tampered[1] = tampered[0];
    let report = check_b_coloring(&g, &tampered, file.k)?;
    println!(
        "tampered: valid={} violations={:?}",
        report.is_valid(),
        report.violations
    );

    let report = check_b_coloring(&g, &file.colors, file.k - 1)?;
    println!(
        "k lowered: valid={} violations={:?}",
        report.is_valid(),
        report.violations
    );
    Ok(())
}
