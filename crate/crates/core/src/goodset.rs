//! Encirclement, good sets, and the search for one.
//!
//! A set `W` of dense vertices *encircles* a vertex `u` outside it when every
//! `v` in `W` is adjacent to `u` or shares with `u` a common neighbor `w` in
//! `W` whose degree is exactly `m - 1`. A *good set* has exactly `m` dense
//! vertices, encircles nothing, and dominates every outside vertex of degree
//! at least `m`.

use std::fmt;

use crate::density::DensityProfile;
use crate::error::{Error, Result};
use crate::graph::{girth, mask_of, Graph};
use crate::Vertex;

/// Good sets are only characterized on graphs of girth at least this.
pub const CHARACTERIZATION_GIRTH: usize = 8;

/// A verified good set, stored in increasing vertex order. The `i`-th member
/// (0-based) is the anchor of color `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodSet {
    members: Vec<Vertex>,
}

impl GoodSet {
    /// Checks `members` against the definition and wraps it.
    pub fn verified(g: &Graph, profile: &DensityProfile, members: &[Vertex]) -> Result<GoodSet, GoodSetRejection> {
        check_good_set(g, members, profile)?;
        let mut members = members.to_vec();
        members.sort_unstable();
        Ok(GoodSet { members })
    }

    #[cfg(test)]
    pub(crate) fn unchecked(mut members: Vec<Vertex>) -> GoodSet {
        members.sort_unstable();
        GoodSet { members }
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Why a candidate set is not a good set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoodSetRejection {
    /// The set does not consist of exactly `m` distinct vertices.
    WrongSize { expected: usize, found: usize },
    /// A member has degree below `m - 1`.
    NotDense(Vertex),
    /// The set encircles this outside vertex (smallest such id).
    Encircles(Vertex),
    /// This outside vertex has degree at least `m` and no neighbor in the set.
    UncoveredHighDegree(Vertex),
}

impl GoodSetRejection {
    /// Machine-readable form using the graph's vertex labels.
    pub fn describe(&self, g: &Graph) -> String {
        match *self {
            GoodSetRejection::WrongSize { expected, found } => {
                format!("wrong-size(expected={expected},found={found})")
            }
            GoodSetRejection::NotDense(v) => format!("not-dense({})", g.label(v)),
            GoodSetRejection::Encircles(u) => format!("encircles({})", g.label(u)),
            GoodSetRejection::UncoveredHighDegree(x) => format!("uncovered-high-degree({})", g.label(x)),
        }
    }
}

impl fmt::Display for GoodSetRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GoodSetRejection::WrongSize { expected, found } => {
                write!(f, "wrong-size(expected={expected},found={found})")
            }
            GoodSetRejection::NotDense(v) => write!(f, "not-dense({v})"),
            GoodSetRejection::Encircles(u) => write!(f, "encircles({u})"),
            GoodSetRejection::UncoveredHighDegree(x) => write!(f, "uncovered-high-degree({x})"),
        }
    }
}

impl std::error::Error for GoodSetRejection {}

/// Whether `w` encircles `u`. Any `w` is accepted, including sets smaller than
/// `m`; the empty set encircles everything.
pub fn encircles(g: &Graph, w: &[Vertex], u: Vertex, profile: &DensityProfile) -> Result<bool> {
    for &v in w.iter().chain(std::iter::once(&u)) {
        if v >= g.n() {
            return Err(Error::UnknownVertex(v));
        }
    }
    if w.contains(&u) {
        return Err(Error::InvalidArgument(format!(
            "vertex {u} belongs to the encircling set"
        )));
    }
    Ok(encircles_masked(g, &mask_of(g.n(), w.iter().copied()), w, u, profile))
}

fn encircles_masked(g: &Graph, in_w: &[bool], w: &[Vertex], u: Vertex, profile: &DensityProfile) -> bool {
    w.iter().all(|&v| {
        g.has_edge(u, v)
            || g.neighbors(v)
                .iter()
                .any(|&x| in_w[x] && profile.is_tight(g, x) && g.has_edge(x, u))
    })
}

/// Checks the good-set definition, reporting the first failing condition in
/// the order size, density, encirclement, domination.
pub fn check_good_set(g: &Graph, w: &[Vertex], profile: &DensityProfile) -> Result<(), GoodSetRejection> {
    let mut distinct = w.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != profile.m || w.len() != profile.m {
        return Err(GoodSetRejection::WrongSize {
            expected: profile.m,
            found: distinct.len(),
        });
    }
    if let Some(&v) = distinct.iter().find(|&&v| v >= g.n() || !profile.is_dense(g, v)) {
        return Err(GoodSetRejection::NotDense(v));
    }
    let in_w = mask_of(g.n(), distinct.iter().copied());
    if let Some(u) = g
        .vertices()
        .find(|&u| !in_w[u] && encircles_masked(g, &in_w, &distinct, u, profile))
    {
        return Err(GoodSetRejection::Encircles(u));
    }
    if let Some(x) = g
        .vertices()
        .find(|&x| !in_w[x] && g.degree(x) >= profile.m && g.count_in(x, &in_w) == 0)
    {
        return Err(GoodSetRejection::UncoveredHighDegree(x));
    }
    Ok(())
}

pub fn is_good_set(g: &Graph, w: &[Vertex], profile: &DensityProfile) -> bool {
    check_good_set(g, w, profile).is_ok()
}

fn require_characterization_girth(g: &Graph) -> Result<()> {
    let found = girth(g);
    if found.is_at_least(CHARACTERIZATION_GIRTH) {
        Ok(())
    } else {
        Err(Error::GirthPrecondition {
            required: CHARACTERIZATION_GIRTH,
            found: found.finite().unwrap_or(usize::MAX),
        })
    }
}

/// Decides good-set existence on graphs of girth at least 8: there is none
/// exactly when `|M| = m` and `M` encircles some vertex outside it.
pub fn has_good_set(g: &Graph, profile: &DensityProfile) -> Result<bool> {
    require_characterization_girth(g)?;
    Ok(has_good_set_unchecked(g, profile))
}

pub(crate) fn has_good_set_unchecked(g: &Graph, profile: &DensityProfile) -> bool {
    if profile.dense.len() != profile.m {
        return true;
    }
    let in_m = mask_of(g.n(), profile.dense.iter().copied());
    !g.vertices()
        .any(|u| !in_m[u] && encircles_masked(g, &in_m, &profile.dense, u, profile))
}

/// Finds a good set on a graph of girth at least 8, or `None` when the
/// characterization rules one out.
///
/// Backtracks over `m`-subsets of the dense vertices taken in order of
/// decreasing degree (ties by id). Domination is pruned as soon as an
/// excluded high-degree vertex can no longer be covered; encirclement is
/// checked when a subset is complete.
pub fn find_good_set(g: &Graph, profile: &DensityProfile) -> Result<Option<GoodSet>> {
    require_characterization_girth(g)?;
    find_good_set_unchecked(g, profile)
}

pub(crate) fn find_good_set_unchecked(g: &Graph, profile: &DensityProfile) -> Result<Option<GoodSet>> {
    if !has_good_set_unchecked(g, profile) {
        return Ok(None);
    }
    let mut search = Search::new(g, profile);
    let mut chosen = Vec::with_capacity(profile.m);
    if search.descend(0, &mut chosen) {
        let good = GoodSet::verified(g, profile, &chosen).map_err(|r| {
            Error::invariant(
                "good-set search",
                None,
                format!("search returned a set rejected as {r}"),
            )
        })?;
        Ok(Some(good))
    } else {
        Err(Error::invariant(
            "good-set search",
            None,
            "no good set found although the characterization guarantees one",
        ))
    }
}

struct Search<'a> {
    g: &'a Graph,
    profile: &'a DensityProfile,
    order: Vec<Vertex>,
    /// Vertices of degree at least `m`; there are at most `m` of them.
    high: Vec<Vertex>,
    /// Position of each high vertex in `order`.
    high_pos: Vec<usize>,
    /// Largest position in `order` among the dense neighbors of each high
    /// vertex, if any.
    high_last_cover: Vec<Option<usize>>,
    in_w: Vec<bool>,
    cover: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, profile: &'a DensityProfile) -> Self {
        let mut order = profile.dense.clone();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut pos = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let high: Vec<Vertex> = order.iter().copied().filter(|&v| g.degree(v) >= profile.m).collect();
        let high_pos = high.iter().map(|&x| pos[x]).collect();
        let high_last_cover = high
            .iter()
            .map(|&x| {
                g.neighbors(x)
                    .iter()
                    .filter_map(|&y| (pos[y] != usize::MAX).then_some(pos[y]))
                    .max()
            })
            .collect();
        Search {
            g,
            profile,
            order,
            high,
            high_pos,
            high_last_cover,
            in_w: vec![false; g.n()],
            cover: vec![0; g.n()],
        }
    }

    fn descend(&mut self, next: usize, chosen: &mut Vec<Vertex>) -> bool {
        let m = self.profile.m;
        if chosen.len() == m {
            return self.complete_is_good(chosen);
        }
        if self.order.len() - next < m - chosen.len() {
            return false;
        }
        if self.domination_dead(next) {
            return false;
        }

        let v = self.order[next];
        self.in_w[v] = true;
        for &x in self.g.neighbors(v) {
            self.cover[x] += 1;
        }
        chosen.push(v);
        if self.descend(next + 1, chosen) {
            return true;
        }
        chosen.pop();
        for &x in self.g.neighbors(v) {
            self.cover[x] -= 1;
        }
        self.in_w[v] = false;

        self.descend(next + 1, chosen)
    }

    /// Some high-degree vertex was passed over, has no chosen neighbor, and
    /// none of its dense neighbors is still available.
    fn domination_dead(&self, next: usize) -> bool {
        self.high.iter().enumerate().any(|(i, &x)| {
            !self.in_w[x]
                && self.high_pos[i] < next
                && self.cover[x] == 0
                && self.high_last_cover[i].is_none_or(|p| p < next)
        })
    }

    fn complete_is_good(&self, chosen: &[Vertex]) -> bool {
        let g = self.g;
        let covered = self.high.iter().all(|&x| self.in_w[x] || self.cover[x] > 0);
        if !covered {
            return false;
        }
        // An encircled vertex is within distance two of every member, so it
        // suffices to look around the first one.
        let first = chosen[0];
        let mut candidates: Vec<Vertex> = g
            .neighbors(first)
            .iter()
            .flat_map(|&y| std::iter::once(y).chain(g.neighbors(y).iter().copied()))
            .filter(|&u| !self.in_w[u])
            .collect();
        candidates.sort_unstable();
        candidates.dedup();
        !candidates
            .into_iter()
            .any(|u| encircles_masked(g, &self.in_w, chosen, u, self.profile))
    }
}
