//! Building a b-coloring with `m` colors from a good set.
//!
//! The anchors (good-set members) are colored first, then the link vertices
//! in four passes, then the anchors' remaining neighbors so every anchor
//! sees all other colors, and finally everything else greedily. Each stage
//! checks the properties the next one relies on and reports an
//! [`Error::InvariantViolation`](crate::Error::InvariantViolation) if one
//! fails, which cannot happen on valid inputs of girth at least 9.

mod complete;
mod links;
mod partial;
mod steps;

pub use complete::{complete_b_vertices, greedy_extend};
pub use links::{classify_links, LinkStructure};
pub use partial::{PartialColoring, Step, TraceEvent};
pub use steps::{color_links, derange_assign, CONSTRUCTION_GIRTH};

use crate::density::density_profile;
use crate::error::{Error, Result};
use crate::goodset::GoodSet;
use crate::graph::Graph;
use crate::oracle::check_b_coloring;
use crate::{Color, Vertex};

/// A b-coloring together with its number of colors and a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BResult {
    pub chi_b: usize,
    /// Color of every vertex, in `1..=chi_b`.
    pub coloring: Vec<Color>,
    /// `basis[c - 1]` is a b-vertex of color `c`.
    pub basis: Vec<Vertex>,
}

/// Everything the construction produced, for inspection and tracing.
#[derive(Clone, Debug)]
pub struct Construction {
    pub result: BResult,
    pub links: LinkStructure,
    /// Final coloring with per-vertex provenance and the assignment trace.
    pub partial: PartialColoring,
}

impl Construction {
    pub fn trace(&self) -> &[TraceEvent] {
        self.partial.trace()
    }
}

/// Builds a b-coloring with `m` colors in which the `i`-th smallest member
/// of `w` is the b-vertex of color `i`. Requires girth at least 9.
pub fn b_coloring_with_good_set(g: &Graph, w: &GoodSet) -> Result<Construction> {
    let profile = density_profile(g)?;
    if w.len() != profile.m {
        return Err(Error::InvalidArgument(format!(
            "good set has {} members but m = {}",
            w.len(),
            profile.m
        )));
    }
    let links = classify_links(g, w);
    let pc = color_links(g, w, &links)?;
    let pc = complete_b_vertices(g, w, pc)?;
    let (coloring, partial) = greedy_extend(g, pc, profile.m)?;

    let report = check_b_coloring(g, &coloring, profile.m)?;
    if !report.is_valid() {
        return Err(Error::invariant(
            "validation",
            None,
            format!("constructed coloring rejected: {:?}", report.violations),
        ));
    }
    Ok(Construction {
        result: BResult {
            chi_b: profile.m,
            coloring,
            basis: w.members().to_vec(),
        },
        links,
        partial,
    })
}
