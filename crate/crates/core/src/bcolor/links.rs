use crate::goodset::GoodSet;
use crate::graph::{mask_of, Graph};
use crate::Vertex;

/// Link vertices: interiors of paths of length two or three whose ends lie in
/// the good set and whose interior avoids it.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinkStructure {
    /// All link vertices, increasing.
    pub links: Vec<Vertex>,
    /// Link vertices with a link neighbor.
    pub with_link_neighbor: Vec<Vertex>,
    /// Link vertices with at least two neighbors in the good set.
    pub with_two_anchors: Vec<Vertex>,
}

impl LinkStructure {
    pub fn masks(&self, n: usize) -> (Vec<bool>, Vec<bool>, Vec<bool>) {
        (
            mask_of(n, self.links.iter().copied()),
            mask_of(n, self.with_link_neighbor.iter().copied()),
            mask_of(n, self.with_two_anchors.iter().copied()),
        )
    }
}

pub fn classify_links(g: &Graph, w: &GoodSet) -> LinkStructure {
    let n = g.n();
    let in_w = mask_of(n, w.members().iter().copied());
    let anchors: Vec<Vec<Vertex>> = g
        .vertices()
        .map(|x| {
            if in_w[x] {
                Vec::new()
            } else {
                g.neighbors_in(x, &in_w).collect()
            }
        })
        .collect();

    let mut is_link = vec![false; n];
    for x in g.vertices().filter(|&x| !in_w[x]) {
        // v - x - v'
        if anchors[x].len() >= 2 {
            is_link[x] = true;
        }
        // v - x - y - v' with v != v'
        for &y in g.neighbors(x) {
            if in_w[y] || anchors[x].is_empty() || anchors[y].is_empty() {
                continue;
            }
            let same_single = anchors[x].len() == 1 && anchors[y].len() == 1 && anchors[x][0] == anchors[y][0];
            if !same_single {
                is_link[x] = true;
                is_link[y] = true;
            }
        }
    }

    let links: Vec<Vertex> = g.vertices().filter(|&x| is_link[x]).collect();
    let with_link_neighbor = links
        .iter()
        .copied()
        .filter(|&x| g.neighbors(x).iter().any(|&y| is_link[y]))
        .collect();
    let with_two_anchors = links.iter().copied().filter(|&x| anchors[x].len() >= 2).collect();
    LinkStructure {
        links,
        with_link_neighbor,
        with_two_anchors,
    }
}
