use super::partial::{PartialColoring, Step};
use super::steps::check_proper;
use crate::error::{Error, Result};
use crate::goodset::GoodSet;
use crate::graph::{mask_of, Graph};
use crate::{Color, Vertex};

/// Makes every anchor a b-vertex by handing its missing colors to its
/// uncolored neighbors, then colors the remaining uncolored anchor neighbors
/// of degree at least `m` so that greedy extension never meets one.
pub fn complete_b_vertices(g: &Graph, w: &GoodSet, mut pc: PartialColoring) -> Result<PartialColoring> {
    let m = w.len();
    let in_w = mask_of(g.n(), w.members().iter().copied());
    let open: Vec<Vertex> = g
        .vertices()
        .filter(|&u| !pc.is_colored(u) && g.count_in(u, &in_w) > 0)
        .collect();
    let is_open = mask_of(g.n(), open.iter().copied());
    for &u in &open {
        if let Some(&v) = g.neighbors(u).iter().find(|&&v| is_open[v]) {
            return Err(Error::invariant(
                "completion",
                Some(u),
                format!("uncolored anchor neighbors {u} and {v} are adjacent"),
            ));
        }
    }

    for (i, &v) in w.members().iter().enumerate() {
        let missing = pc.missing_colors(g, v, i + 1, m);
        let spare: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&u| !pc.is_colored(u)).collect();
        if spare.len() < missing.len() {
            return Err(Error::invariant(
                "completion",
                Some(v),
                format!("{} colors missing, {} uncolored neighbors", missing.len(), spare.len()),
            ));
        }
        for (u, c) in spare.into_iter().zip(missing) {
            pc.assign(u, c, Step::Completion)?;
        }
    }

    for &u in &open {
        if !pc.is_colored(u) && g.degree(u) >= m {
            let c = smallest_free_color(g, &pc, u, m)
                .ok_or_else(|| Error::invariant("completion", Some(u), "no color left"))?;
            pc.assign(u, c, Step::Completion)?;
        }
    }

    check_proper(g, &pc, "completion")?;
    for (i, &v) in w.members().iter().enumerate() {
        if !pc.missing_colors(g, v, i + 1, m).is_empty() {
            return Err(Error::invariant("completion", Some(v), "anchor is not a b-vertex"));
        }
    }
    Ok(pc)
}

fn smallest_free_color(g: &Graph, pc: &PartialColoring, u: Vertex, m: usize) -> Option<Color> {
    let seen = pc.neighbor_colors(g, u);
    (1..=m).find(|c| seen.binary_search(c).is_err())
}

/// Colors every remaining vertex, in increasing id order, with the smallest
/// color in `1..=m` absent from its colored neighbors.
///
/// Vertices of degree below `m` always find a color; an uncolored vertex of
/// degree `m` or more means an earlier stage skipped it.
pub fn greedy_extend(g: &Graph, mut pc: PartialColoring, m: usize) -> Result<(Vec<Color>, PartialColoring)> {
    if let Some(v) = pc.uncolored().find(|&v| g.degree(v) >= m) {
        return Err(Error::invariant(
            "greedy",
            Some(v),
            format!("vertex of degree {} >= {m} reached greedy extension", g.degree(v)),
        ));
    }
    let pending: Vec<Vertex> = pc.uncolored().collect();
    for v in pending {
        let c = smallest_free_color(g, &pc, v, m)
            .ok_or_else(|| Error::invariant("greedy", Some(v), "no available color"))?;
        pc.assign(v, c, Step::Greedy)?;
    }
    Ok((pc.clone().into_total()?, pc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bcolor::{classify_links, color_links};
    use crate::density::density_profile;
    use crate::graph::named;

    fn links_colored(g: &Graph, members: &[Vertex]) -> (GoodSet, PartialColoring) {
        let w = GoodSet::verified(g, &density_profile(g).unwrap(), members).unwrap();
        let pc = color_links(g, &w, &classify_links(g, &w)).unwrap();
        (w, pc)
    }

    #[test]
    fn star_of_stars_completion() {
        let g = named::star_of_stars();
        let (w, pc) = links_colored(&g, &[0, 1, 2]);
        let pc = complete_b_vertices(&g, &w, pc).unwrap();
        // 1 needs color 3 from its leaf 4, 2 needs color 2 from its leaf 5
        assert_eq!(pc.color(4), Some(3));
        assert_eq!(pc.color(5), Some(2));
        assert_eq!(pc.color(3), None);
        assert_eq!(pc.color(6), None);
    }

    #[test]
    fn path_five_completion() {
        let g = named::path(5);
        let (w, pc) = links_colored(&g, &[1, 2, 3]);
        let pc = complete_b_vertices(&g, &w, pc).unwrap();
        let colors: Vec<_> = pc.colors().iter().map(|c| c.unwrap()).collect();
        assert_eq!(colors, vec![3, 1, 2, 3, 1]);
    }

    #[test]
    fn nothing_missing_is_identity() {
        let g = named::complete(2);
        let (w, pc) = links_colored(&g, &[0, 1]);
        let done = complete_b_vertices(&g, &w, pc.clone()).unwrap();
        assert_eq!(done, pc);
    }

    #[test]
    fn adjacent_open_neighbors_are_reported() {
        // {0} on a triangle leaves the adjacent pair 1, 2 open.
        let g = named::complete(3);
        let w = GoodSet::unchecked(vec![0]);
        let mut pc = PartialColoring::new(3);
        pc.assign(0, 1, Step::Anchor).unwrap();
        assert!(matches!(
            complete_b_vertices(&g, &w, pc),
            Err(Error::InvariantViolation {
                stage: "completion",
                ..
            })
        ));
    }

    #[test]
    fn greedy_examples() {
        let g = Graph::from_edges(1, []).unwrap();
        let (total, _) = greedy_extend(&g, PartialColoring::new(1), 1).unwrap();
        assert_eq!(total, vec![1]);

        // leaf 1 hanging off vertex 0 of color 2, m = 3
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let mut pc = PartialColoring::new(2);
        pc.assign(0, 2, Step::Anchor).unwrap();
        let (total, _) = greedy_extend(&g, pc, 3).unwrap();
        assert_eq!(total, vec![2, 1]);

        let mut full = PartialColoring::new(2);
        full.assign(0, 1, Step::Anchor).unwrap();
        full.assign(1, 2, Step::Anchor).unwrap();
        let (total, after) = greedy_extend(&g, full.clone(), 2).unwrap();
        assert_eq!(total, vec![1, 2]);
        assert_eq!(after, full);
    }

    #[test]
    fn greedy_refuses_high_degree_leftovers() {
        let g = named::star(3);
        assert!(matches!(
            greedy_extend(&g, PartialColoring::new(4), 2),
            Err(Error::InvariantViolation { stage: "greedy", .. })
        ));
    }
}
