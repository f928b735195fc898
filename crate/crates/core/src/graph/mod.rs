//! Simple undirected graphs over dense vertex ids, plus the text formats,
//! girth computation and random generators that operate on them.

mod generate;
mod girth;
mod io;

use std::collections::BTreeSet;

pub use generate::{extend_girth_constrained, generate_girth_constrained, generate_linked_hubs, random_labeled_tree};
pub use girth::{girth, GirthValue};
pub use io::{parse_dimacs, parse_edge_list, write_edge_list, Format};

use crate::error::{Error, Result};
use crate::Vertex;

/// An immutable simple undirected graph.
///
/// Vertices are the dense ids `0..n`. Each vertex also carries the external
/// label it was read with, which is what every file format prints.
/// Adjacency lists are kept strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    labels: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `0..n` whose labels equal the vertex ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::with_labels((0..n as u64).collect(), edges)
    }

    /// Builds a graph on `0..labels.len()` where vertex `i` prints as `labels[i]`.
    ///
    /// Labels must be distinct. Self-loops and repeated edges are rejected.
    pub fn with_labels<I>(labels: Vec<u64>, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let n = labels.len();
        let distinct: BTreeSet<u64> = labels.iter().copied().collect();
        if distinct.len() != n {
            return Err(Error::InvalidArgument("vertex labels must be distinct".into()));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop {
                    line: 0,
                    label: labels[u],
                });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge {
                    line: 0,
                    u: labels[u],
                    v: labels[w[0]],
                });
            }
        }
        Ok(Graph {
            adjacency,
            labels,
            edge_count,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: Vertex) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn vertex_of_label(&self, label: u64) -> Option<Vertex> {
        self.labels.iter().position(|&l| l == label)
    }

    /// `N(u) ∩ restriction`, in increasing order.
    pub fn restricted_neighbors(&self, u: Vertex, restriction: &BTreeSet<Vertex>) -> Result<BTreeSet<Vertex>> {
        if u >= self.n() {
            return Err(Error::UnknownVertex(u));
        }
        Ok(self.adjacency[u]
            .iter()
            .copied()
            .filter(|v| restriction.contains(v))
            .collect())
    }

    /// Number of neighbors of `u` whose entry in `mask` is set.
    pub(crate) fn count_in(&self, u: Vertex, mask: &[bool]) -> usize {
        self.adjacency[u].iter().filter(|&&v| mask[v]).count()
    }

    /// Neighbors of `u` whose entry in `mask` is set, in increasing order.
    pub(crate) fn neighbors_in<'a>(&'a self, u: Vertex, mask: &'a [bool]) -> impl Iterator<Item = Vertex> + 'a {
        self.adjacency[u].iter().copied().filter(move |&v| mask[v])
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Membership mask of `set` over `0..n`.
pub(crate) fn mask_of(n: usize, set: impl IntoIterator<Item = Vertex>) -> Vec<bool> {
    let mut mask = vec![false; n];
    for v in set {
        mask[v] = true;
    }
    mask
}

/// A handful of small graphs used throughout the tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    /// Center `0` joined to `1, 2, 3`, each of which carries one pendant leaf
    /// (`4, 5, 6`). Here `m = 3` and `{0, 1, 2}` is a good set.
    pub fn star_of_stars() -> Graph {
        Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
    }

    /// The 11-vertex tree whose four dense vertices encircle vertex `0`.
    ///
    /// `0` is adjacent to `1` and `2`; `3` hangs off `1` and `4` off `2`.
    /// `1` and `2` carry one extra leaf each (`5`, `6`), `3` and `4` two each
    /// (`7, 8` and `9, 10`). So `m = 4` and `M = {1, 2, 3, 4}`.
    pub fn encircled_tree() -> Graph {
        Graph::from_edges(
            11,
            [
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 4),
                (1, 5),
                (2, 6),
                (3, 7),
                (3, 8),
                (4, 9),
                (4, 10),
            ],
        )
        .unwrap()
    }
}
