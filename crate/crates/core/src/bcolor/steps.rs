//! Coloring the anchors and link vertices.
//!
//! Anchor `v_i` (the `i`-th smallest member of the good set) gets color `i`.
//! The link vertices are then colored in four passes, each run over all
//! eligible vertices before the next starts. Whenever a rule says "pick
//! some", the smallest vertex id is taken.

use std::collections::BTreeMap;

use super::links::LinkStructure;
use super::partial::{PartialColoring, Step};
use crate::error::{Error, Result};
use crate::goodset::GoodSet;
use crate::graph::{girth, mask_of, Graph};
use crate::{Color, Vertex};

/// The construction needs no cycle of length at most 8.
pub const CONSTRUCTION_GIRTH: usize = 9;

/// Assigns distinct palette colors to `targets` so that no target gets its
/// forbidden color.
///
/// Each target is `(vertex, forbidden)`. The forbidden colors are listed in
/// target order, followed by the remaining palette colors, and every target
/// takes the entry one place to its right (cyclically).
pub fn derange_assign(targets: &[(Vertex, Color)], palette: &[Color]) -> Result<BTreeMap<Vertex, Color>> {
    let invalid = |msg: String| Err(Error::InvalidArgument(msg));
    if palette.len() < 2 {
        return invalid(format!("palette needs at least two colors, got {}", palette.len()));
    }
    if targets.len() > palette.len() {
        return invalid(format!("{} targets for {} colors", targets.len(), palette.len()));
    }
    let mut sorted = palette.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return invalid("palette colors must be distinct".into());
    }
    let mut forbidden: Vec<Color> = Vec::with_capacity(targets.len());
    for &(v, f) in targets {
        if sorted.binary_search(&f).is_err() {
            return invalid(format!("forbidden color {f} of vertex {v} is not in the palette"));
        }
        if forbidden.contains(&f) {
            return invalid(format!("forbidden color {f} repeats"));
        }
        if targets.iter().filter(|t| t.0 == v).count() > 1 {
            return invalid(format!("vertex {v} listed twice"));
        }
        forbidden.push(f);
    }

    let mut sequence = forbidden;
    sequence.extend(palette.iter().copied().filter(|c| !targets.iter().any(|t| t.1 == *c)));
    let len = sequence.len();
    Ok(targets
        .iter()
        .enumerate()
        .map(|(j, &(v, _))| (v, sequence[(j + 1) % len]))
        .collect())
}

/// Colors the anchors and every link vertex, checking properness after each
/// pass and the spare-neighbor count at the end.
pub fn color_links(g: &Graph, w: &GoodSet, ls: &LinkStructure) -> Result<PartialColoring> {
    let found = girth(g);
    if !found.is_at_least(CONSTRUCTION_GIRTH) {
        return Err(Error::GirthPrecondition {
            required: CONSTRUCTION_GIRTH,
            found: found.finite().unwrap_or(usize::MAX),
        });
    }
    color_links_unchecked(g, w, ls)
}

pub(crate) fn color_links_unchecked(g: &Graph, w: &GoodSet, ls: &LinkStructure) -> Result<PartialColoring> {
    let ctx = Context::new(g, w, ls);
    let mut pc = PartialColoring::new(g.n());
    for (i, &v) in w.members().iter().enumerate() {
        pc.assign(v, i + 1, Step::Anchor)?;
    }

    ctx.step1(&mut pc)?;
    check_proper(g, &pc, "step1")?;
    ctx.step2(&mut pc)?;
    check_proper(g, &pc, "step2")?;
    ctx.step3(&mut pc)?;
    check_proper(g, &pc, "step3")?;
    ctx.step4(&mut pc)?;
    check_proper(g, &pc, "step4")?;

    if let Some(&x) = ls.links.iter().find(|&&x| !pc.is_colored(x)) {
        return Err(Error::invariant("step4", Some(x), "link vertex left uncolored"));
    }
    check_spare_neighbors(g, w, &pc)?;
    Ok(pc)
}

pub(crate) fn check_proper(g: &Graph, pc: &PartialColoring, stage: &'static str) -> Result<()> {
    match pc.monochromatic_edge(g) {
        Some((u, v)) => Err(Error::invariant(
            stage,
            Some(u),
            format!("edge {u}-{v} is monochromatic with color {}", pc.color(u).unwrap()),
        )),
        None => Ok(()),
    }
}

/// Every anchor has at least as many uncolored neighbors as colors missing
/// from its neighborhood.
pub(crate) fn check_spare_neighbors(g: &Graph, w: &GoodSet, pc: &PartialColoring) -> Result<()> {
    let m = w.len();
    for (i, &v) in w.members().iter().enumerate() {
        let missing = pc.missing_colors(g, v, i + 1, m).len();
        let spare = pc.uncolored_neighbor_count(g, v);
        if spare < missing {
            return Err(Error::invariant(
                "step4",
                Some(v),
                format!("anchor misses {missing} colors but has only {spare} uncolored neighbors"),
            ));
        }
    }
    Ok(())
}

struct Context<'a> {
    g: &'a Graph,
    w: &'a GoodSet,
    ls: &'a LinkStructure,
    anchor_color: Vec<Option<Color>>,
    in_link: Vec<bool>,
    in_l1: Vec<bool>,
}

impl<'a> Context<'a> {
    fn new(g: &'a Graph, w: &'a GoodSet, ls: &'a LinkStructure) -> Self {
        let mut anchor_color = vec![None; g.n()];
        for (i, &v) in w.members().iter().enumerate() {
            anchor_color[v] = Some(i + 1);
        }
        let (in_link, in_l1, _) = ls.masks(g.n());
        Context {
            g,
            w,
            ls,
            anchor_color,
            in_link,
            in_l1,
        }
    }

    fn anchors_of(&self, x: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&v| self.anchor_color[v].is_some())
    }

    fn color_of_anchor(&self, v: Vertex) -> Color {
        self.anchor_color[v].unwrap()
    }

    /// Each link vertex with a link neighbor `x'` takes the color of the
    /// first anchor adjacent to `x'`.
    fn step1(&self, pc: &mut PartialColoring) -> Result<()> {
        for &x in &self.ls.with_link_neighbor {
            let partner = self
                .g
                .neighbors(x)
                .iter()
                .copied()
                .find(|&y| self.in_link[y])
                .ok_or_else(|| Error::invariant("step1", Some(x), "no link neighbor"))?;
            let anchor = self
                .anchors_of(partner)
                .next()
                .ok_or_else(|| Error::invariant("step1", Some(partner), "link vertex without an anchor neighbor"))?;
            pc.assign(x, self.color_of_anchor(anchor), Step::Step1)?;
        }
        Ok(())
    }

    /// For every anchor with several two-anchor link neighbors, give the
    /// uncolored ones the colors of their other anchors, deranged.
    fn step2(&self, pc: &mut PartialColoring) -> Result<()> {
        let in_l2 = mask_of(self.g.n(), self.ls.with_two_anchors.iter().copied());
        for &v in self.w.members() {
            let members: Vec<Vertex> = self.g.neighbors_in(v, &in_l2).collect();
            if members.len() <= 1 {
                continue;
            }
            let mut palette = Vec::with_capacity(members.len());
            for &x in &members {
                let other = self
                    .anchors_of(x)
                    .find(|&u| u != v)
                    .ok_or_else(|| Error::invariant("step2", Some(x), "second anchor missing"))?;
                palette.push(self.color_of_anchor(other));
            }
            let mut distinct = palette.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != palette.len() {
                return Err(Error::invariant(
                    "step2",
                    Some(v),
                    "two neighbors share their second anchor (4-cycle)",
                ));
            }

            // Pinned members keep their colors; the rest draw from what is left.
            let available: Vec<Color> = palette
                .iter()
                .copied()
                .filter(|&c| !members.iter().any(|&x| pc.color(x) == Some(c)))
                .collect();
            let open: Vec<(Vertex, Color)> = members
                .iter()
                .zip(&palette)
                .filter(|(x, _)| !pc.is_colored(**x))
                .map(|(&x, &f)| (x, f))
                .collect();
            let (constrained, free): (Vec<_>, Vec<_>) = open.into_iter().partition(|(_, f)| available.contains(f));

            let mut chosen = BTreeMap::new();
            if !constrained.is_empty() {
                if available.len() < 2 {
                    return Err(Error::invariant(
                        "step2",
                        Some(constrained[0].0),
                        "only the forbidden color is left for this vertex",
                    ));
                }
                chosen = derange_assign(&constrained, &available)?;
            }
            let used: Vec<Color> = chosen.values().copied().collect();
            let mut leftover = available.iter().copied().filter(|c| !used.contains(c));
            for (x, _) in free {
                let c = leftover
                    .next()
                    .ok_or_else(|| Error::invariant("step2", Some(x), "palette exhausted"))?;
                chosen.insert(x, c);
            }
            for (x, c) in chosen {
                pc.assign(x, c, Step::Step2)?;
            }
        }
        Ok(())
    }

    /// An uncolored two-anchor link vertex `x` next to an anchor `v_i` that
    /// has a neighbor `y` with a link neighbor takes `y`'s color, and `y`
    /// moves to the color of another anchor of `x`.
    fn step3(&self, pc: &mut PartialColoring) -> Result<()> {
        for &x in &self.ls.with_two_anchors {
            if pc.is_colored(x) {
                continue;
            }
            let found = self.anchors_of(x).find_map(|v| {
                self.g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .find(|&y| self.in_l1[y])
                    .map(|y| (v, y))
            });
            let Some((v, y)) = found else {
                continue;
            };
            let c = pc
                .color(y)
                .ok_or_else(|| Error::invariant("step3", Some(y), "link-neighbored vertex is uncolored"))?;
            let other = self
                .anchors_of(x)
                .find(|&u| u != v)
                .ok_or_else(|| Error::invariant("step3", Some(x), "second anchor missing"))?;
            pc.assign(x, c, Step::Step3New)?;
            pc.recolor(y, self.color_of_anchor(other), Step::Step3Recolor)?;
            if pc.recolor_count(y) > 1 {
                return Err(Error::invariant("step3", Some(y), "vertex recolored twice"));
            }
        }
        Ok(())
    }

    /// Remaining two-anchor link vertices take the color of the first anchor
    /// that neither touches them nor shares a tight anchor neighbor with them.
    fn step4(&self, pc: &mut PartialColoring) -> Result<()> {
        let m = self.w.len();
        for &x in &self.ls.with_two_anchors {
            if pc.is_colored(x) {
                continue;
            }
            let target = self.w.members().iter().copied().find(|&v| {
                !self.g.has_edge(v, x)
                    && !self
                        .anchors_of(x)
                        .any(|u| self.g.degree(u) + 1 == m && self.g.has_edge(u, v))
            });
            let v = target.ok_or_else(|| Error::invariant("step4", Some(x), "vertex is encircled by the good set"))?;
            pc.assign(x, self.color_of_anchor(v), Step::Step4)?;
        }
        Ok(())
    }
}
