//! Writes a corpus of random graphs with girth at least 9 as edge-list files.
//!
//! `cargo run --example generate_corpus -- DIR [COUNT]` writes COUNT files
//! (default 20) into DIR, which can then be fed to `bchrom analyze --batch`.

use bchromatic::graph::{generate_girth_constrained, generate_linked_hubs, girth, write_edge_list};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let dir = std::path::PathBuf::from(args.next().unwrap_or_else(|| "corpus".into()));
    let count: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(20);
    std::fs::create_dir_all(&dir)?;

    for seed in 0..count {
        let g = if seed % 2 == 0 {
            let n = 20 + (seed as usize * 13) % 120;
            generate_girth_constrained(n, 9, n + n / 4, seed)?
        } else {
            generate_linked_hubs(3 + seed as usize % 5, 5, 12, 9, seed)?
        };
        let path = dir.join(format!("g{seed:03}.txt"));
        std::fs::write(&path, write_edge_list(&g))?;
        println!(
            "{} n={} edges={} girth={}",
            path.display(),
            g.n(),
            g.edge_count(),
            girth(&g)
        );
    }
    Ok(())
}
