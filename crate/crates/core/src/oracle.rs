//! Ground truth for small graphs: a b-coloring checker and an exhaustive
//! search for b-colorings with a given number of colors.

use serde::Serialize;

use crate::density::density_profile;
use crate::error::{Error, Result};
use crate::goodset::encircles;
use crate::graph::Graph;
use crate::{Color, Vertex};

/// Largest vertex count the exact search accepts unless configured otherwise.
pub const DEFAULT_ORACLE_LIMIT: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Refuse graphs with more vertices than this.
    pub limit: usize,
    /// Skip candidate bases of size `m` that encircle a vertex; such a set is
    /// never the basis of a b-coloring with `m` colors.
    pub prune_encirclement: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            limit: DEFAULT_ORACLE_LIMIT,
            prune_encirclement: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    MonochromaticEdge {
        u: Vertex,
        v: Vertex,
    },
    ClassWithoutBVertex {
        color: Color,
    },
    /// A color outside `1..=k`, or a color of `1..=k` nobody uses.
    ColorGap {
        color: Color,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub proper: bool,
    pub colors_used: usize,
    /// `basis[c - 1]` is the smallest b-vertex of color `c`; present only when
    /// the coloring is a b-coloring with exactly `k` colors.
    pub basis: Option<Vec<Vertex>>,
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.basis.is_some()
    }
}

/// Checks that `coloring` is a b-coloring of `g` using exactly the colors
/// `1..=k`.
pub fn check_b_coloring(g: &Graph, coloring: &[Color], k: usize) -> Result<ValidityReport> {
    if coloring.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "coloring covers {} of {} vertices",
            coloring.len(),
            g.n()
        )));
    }
    let mut violations = Vec::new();

    let mut proper = true;
    for (u, v) in g.edges() {
        if coloring[u] == coloring[v] {
            proper = false;
            violations.push(Violation::MonochromaticEdge { u, v });
        }
    }

    let mut used: Vec<Color> = coloring.to_vec();
    used.sort_unstable();
    used.dedup();
    let colors_used = used.len();
    for &c in used.iter().filter(|&&c| c == 0 || c > k) {
        violations.push(Violation::ColorGap { color: c });
    }
    for c in (1..=k).filter(|c| used.binary_search(c).is_err()) {
        violations.push(Violation::ColorGap { color: c });
    }

    let mut basis = Vec::with_capacity(k);
    let mut seen = vec![false; k + 1];
    for c in 1..=k {
        let witness = g.vertices().find(|&v| {
            if coloring[v] != c {
                return false;
            }
            seen.fill(false);
            for &u in g.neighbors(v) {
                if coloring[u] <= k {
                    seen[coloring[u]] = true;
                }
            }
            (1..=k).all(|d| d == c || seen[d])
        });
        match witness {
            Some(v) => basis.push(v),
            None => violations.push(Violation::ClassWithoutBVertex { color: c }),
        }
    }

    let basis = violations.is_empty().then_some(basis);
    Ok(ValidityReport {
        proper,
        colors_used,
        basis,
        violations,
    })
}

/// Like [`check_b_coloring`] but for a coloring that may leave vertices
/// out; any uncolored vertex is an argument error.
pub fn check_partial_b_coloring(g: &Graph, coloring: &[Option<Color>], k: usize) -> Result<ValidityReport> {
    if coloring.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "coloring covers {} of {} vertices",
            coloring.len(),
            g.n()
        )));
    }
    let total: Vec<Color> = coloring
        .iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| Error::InvalidArgument(format!("vertex {v} is uncolored"))))
        .collect::<Result<_>>()?;
    check_b_coloring(g, &total, k)
}

/// A b-coloring of `g` with exactly `k` colors, if one exists.
pub fn find_b_coloring_exact(g: &Graph, k: usize) -> Result<Option<Vec<Color>>> {
    find_b_coloring_with(g, k, OracleConfig::default())
}

pub fn find_b_coloring_with(g: &Graph, k: usize, config: OracleConfig) -> Result<Option<Vec<Color>>> {
    let n = g.n();
    if n > config.limit {
        return Err(Error::OracleLimit { n, limit: config.limit });
    }
    if n == 0 {
        return Ok((k == 0).then(Vec::new));
    }
    if k == 0 || k > n {
        return Ok(None);
    }
    let candidates: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) + 1 >= k).collect();
    if candidates.len() < k {
        return Ok(None);
    }
    let profile = density_profile(g)?;
    let prune = config.prune_encirclement && k == profile.m;

    let mut basis = Vec::with_capacity(k);
    let mut found = None;
    for_each_subset(&candidates, k, &mut basis, &mut |basis| {
        if prune {
            let encircled = g
                .vertices()
                .filter(|v| !basis.contains(v))
                .any(|u| encircles(g, basis, u, &profile).unwrap_or(false));
            if encircled {
                return false;
            }
        }
        if let Some(coloring) = Extension::new(g, basis).search() {
            found = Some(coloring);
            return true;
        }
        false
    });
    Ok(found)
}

/// Calls `visit` on every `k`-subset of `items` in lexicographic order until
/// it returns true.
fn for_each_subset<F>(items: &[Vertex], k: usize, current: &mut Vec<Vertex>, visit: &mut F) -> bool
where
    F: FnMut(&[Vertex]) -> bool,
{
    if current.len() == k {
        return visit(current);
    }
    let need = k - current.len();
    for i in 0..items.len() {
        if items.len() - i < need {
            break;
        }
        current.push(items[i]);
        if for_each_subset(&items[i + 1..], k, current, visit) {
            return true;
        }
        current.pop();
    }
    false
}

/// Backtracking extension of a fixed basis to a full b-coloring.
struct Extension<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<Color>,
    /// Index of each basis vertex in the basis, `usize::MAX` otherwise.
    basis_index: Vec<usize>,
    /// Per basis vertex: how many neighbors carry each color.
    counts: Vec<Vec<usize>>,
    /// Per basis vertex: distinct colors other than its own among neighbors.
    present: Vec<usize>,
    /// Per basis vertex: uncolored neighbors.
    open: Vec<usize>,
    order: Vec<Vertex>,
}

const NONE: Color = 0;

impl<'a> Extension<'a> {
    fn new(g: &'a Graph, basis: &[Vertex]) -> Self {
        let k = basis.len();
        let n = g.n();
        let mut colors = vec![NONE; n];
        let mut basis_index = vec![usize::MAX; n];
        for (i, &b) in basis.iter().enumerate() {
            colors[b] = i + 1;
            basis_index[b] = i;
        }
        let mut counts = vec![vec![0; k + 1]; k];
        let mut present = vec![0; k];
        let mut open = vec![0; k];
        for (i, &b) in basis.iter().enumerate() {
            for &u in g.neighbors(b) {
                match colors[u] {
                    NONE => open[i] += 1,
                    c => {
                        counts[i][c] += 1;
                        if counts[i][c] == 1 && c != i + 1 {
                            present[i] += 1;
                        }
                    }
                }
            }
        }
        // Neighbors of the basis first, then the rest in breadth-first order
        // so each vertex tends to meet colored neighbors early.
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        for &b in basis {
            placed[b] = true;
        }
        for &b in basis {
            for &u in g.neighbors(b) {
                if !placed[u] {
                    placed[u] = true;
                    order.push(u);
                }
            }
        }
        let mut head = 0;
        loop {
            while head < order.len() {
                let v = order[head];
                head += 1;
                for &u in g.neighbors(v) {
                    if !placed[u] {
                        placed[u] = true;
                        order.push(u);
                    }
                }
            }
            match (0..n).find(|&v| !placed[v]) {
                Some(v) => {
                    placed[v] = true;
                    order.push(v);
                }
                None => break,
            }
        }
        Extension {
            g,
            k,
            colors,
            basis_index,
            counts,
            present,
            open,
            order,
        }
    }

    fn feasible(&self) -> bool {
        (0..self.k).all(|i| self.k - 1 - self.present[i] <= self.open[i])
    }

    fn search(mut self) -> Option<Vec<Color>> {
        if self
            .g
            .edges()
            .any(|(u, v)| self.colors[u] != NONE && self.colors[u] == self.colors[v])
        {
            return None;
        }
        if !self.feasible() {
            return None;
        }
        if self.descend(0) {
            Some(self.colors)
        } else {
            None
        }
    }

    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.present.iter().all(|&p| p == self.k - 1);
        }
        let v = self.order[depth];
        for c in 1..=self.k {
            if self.g.neighbors(v).iter().any(|&u| self.colors[u] == c) {
                continue;
            }
            self.set(v, c);
            if self.feasible() && self.descend(depth + 1) {
                return true;
            }
            self.unset(v, c);
        }
        false
    }

    fn set(&mut self, v: Vertex, c: Color) {
        self.colors[v] = c;
        for &b in self.g.neighbors(v) {
            let i = self.basis_index[b];
            if i == usize::MAX {
                continue;
            }
            self.open[i] -= 1;
            self.counts[i][c] += 1;
            if self.counts[i][c] == 1 && c != i + 1 {
                self.present[i] += 1;
            }
        }
    }

    fn unset(&mut self, v: Vertex, c: Color) {
        self.colors[v] = NONE;
        for &b in self.g.neighbors(v) {
            let i = self.basis_index[b];
            if i == usize::MAX {
                continue;
            }
            self.open[i] += 1;
            self.counts[i][c] -= 1;
            if self.counts[i][c] == 0 && c != i + 1 {
                self.present[i] -= 1;
            }
        }
    }
}

/// The b-chromatic number, found by trying `k = m, m - 1, ...` until a
/// b-coloring exists.
pub fn exact_b_chromatic(g: &Graph) -> Result<usize> {
    exact_b_coloring_with(g, OracleConfig::default()).map(|(k, _)| k)
}

/// The b-chromatic number together with a b-coloring attaining it.
pub fn exact_b_coloring_with(g: &Graph, config: OracleConfig) -> Result<(usize, Vec<Color>)> {
    if g.n() > config.limit {
        return Err(Error::OracleLimit {
            n: g.n(),
            limit: config.limit,
        });
    }
    let m = density_profile(g)?.m;
    for k in (1..=m).rev() {
        if let Some(coloring) = find_b_coloring_with(g, k, config)? {
            return Ok((k, coloring));
        }
    }
    Err(Error::invariant(
        "oracle",
        None,
        "no b-coloring with any number of colors",
    ))
}
