//! The degree invariant `m(G)` and the dense vertices `M(G)`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Vertex;

/// `m(G)`, the largest `k` such that at least `k` vertices have degree at
/// least `k - 1`, together with the dense vertices (degree at least `m - 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityProfile {
    pub m: usize,
    /// Increasing vertex ids.
    pub dense: Vec<Vertex>,
}

impl DensityProfile {
    pub fn is_dense(&self, g: &Graph, v: Vertex) -> bool {
        g.degree(v) + 1 >= self.m
    }

    /// Vertices of degree exactly `m - 1`: the only ones that can witness an
    /// encirclement.
    pub fn is_tight(&self, g: &Graph, v: Vertex) -> bool {
        g.degree(v) + 1 == self.m
    }
}

pub fn density_profile(g: &Graph) -> Result<DensityProfile> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    // sorted[k-1] >= k-1 holds for a prefix of k values, so the last one wins
    let m = (1..=degrees.len())
        .take_while(|&k| degrees[k - 1] + 1 >= k)
        .last()
        .unwrap_or(1);
    let dense = g.vertices().filter(|&v| g.degree(v) + 1 >= m).collect();
    Ok(DensityProfile { m, dense })
}
