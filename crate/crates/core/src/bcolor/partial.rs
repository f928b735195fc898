use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{Color, Vertex};

/// Which stage of the construction assigned a color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Anchor,
    Step1,
    Step2,
    Step3New,
    Step3Recolor,
    Step4,
    Completion,
    Greedy,
}

impl Step {
    pub fn tag(self) -> &'static str {
        match self {
            Step::Anchor => "anchor",
            Step::Step1 => "step1",
            Step::Step2 => "step2",
            Step::Step3New => "step3-new",
            Step::Step3Recolor => "step3-recolor",
            Step::Step4 => "step4",
            Step::Completion => "completion",
            Step::Greedy => "greedy",
        }
    }

    /// Position in the fixed execution order; both halves of step 3 share one.
    pub fn phase(self) -> u8 {
        match self {
            Step::Anchor => 0,
            Step::Step1 => 1,
            Step::Step2 => 2,
            Step::Step3New | Step::Step3Recolor => 3,
            Step::Step4 => 4,
            Step::Completion => 5,
            Step::Greedy => 6,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One color assignment, in the order it happened.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceEvent {
    pub step: Step,
    pub vertex: Vertex,
    pub color: Color,
    pub recolored_from: Option<Color>,
}

impl TraceEvent {
    /// `step=<tag> vertex=<label> color=<c> [recolored-from=<c'>]`
    pub fn render(&self, g: &Graph) -> String {
        let mut line = format!(
            "step={} vertex={} color={}",
            self.step,
            g.label(self.vertex),
            self.color
        );
        if let Some(old) = self.recolored_from {
            line.push_str(&format!(" recolored-from={old}"));
        }
        line
    }
}

/// A coloring under construction: each vertex has at most one color, the step
/// that last set it, and how many times it was recolored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialColoring {
    colors: Vec<Option<Color>>,
    provenance: Vec<Option<Step>>,
    recolorings: Vec<u32>,
    trace: Vec<TraceEvent>,
}

impl PartialColoring {
    pub fn new(n: usize) -> Self {
        PartialColoring {
            colors: vec![None; n],
            provenance: vec![None; n],
            recolorings: vec![0; n],
            trace: Vec::new(),
        }
    }

    pub fn color(&self, v: Vertex) -> Option<Color> {
        self.colors[v]
    }

    pub fn is_colored(&self, v: Vertex) -> bool {
        self.colors[v].is_some()
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn provenance(&self, v: Vertex) -> Option<Step> {
        self.provenance[v]
    }

    pub fn recolor_count(&self, v: Vertex) -> u32 {
        self.recolorings[v]
    }

    pub fn trace(&self) -> &[TraceEvent] {
        &self.trace
    }

    pub fn uncolored(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(v, _)| v)
    }

    /// Colors a currently uncolored vertex.
    pub(crate) fn assign(&mut self, v: Vertex, color: Color, step: Step) -> Result<()> {
        if let Some(old) = self.colors[v] {
            return Err(Error::invariant(
                step.tag(),
                Some(v),
                format!("vertex already holds color {old}"),
            ));
        }
        self.colors[v] = Some(color);
        self.provenance[v] = Some(step);
        self.trace.push(TraceEvent {
            step,
            vertex: v,
            color,
            recolored_from: None,
        });
        Ok(())
    }

    /// Replaces the color of an already colored vertex.
    pub(crate) fn recolor(&mut self, v: Vertex, color: Color, step: Step) -> Result<()> {
        let Some(old) = self.colors[v] else {
            return Err(Error::invariant(step.tag(), Some(v), "recoloring an uncolored vertex"));
        };
        self.colors[v] = Some(color);
        self.provenance[v] = Some(step);
        self.recolorings[v] += 1;
        self.trace.push(TraceEvent {
            step,
            vertex: v,
            color,
            recolored_from: Some(old),
        });
        Ok(())
    }

    /// First monochromatic edge among colored vertices, if any.
    pub fn monochromatic_edge(&self, g: &Graph) -> Option<(Vertex, Vertex)> {
        g.edges()
            .find(|&(u, v)| self.colors[u].is_some() && self.colors[u] == self.colors[v])
    }

    /// Distinct colors present on the neighbors of `v`.
    pub fn neighbor_colors(&self, g: &Graph, v: Vertex) -> Vec<Color> {
        let mut seen: Vec<Color> = g.neighbors(v).iter().filter_map(|&u| self.colors[u]).collect();
        seen.sort_unstable();
        seen.dedup();
        seen
    }

    /// Colors of `1..=k` other than `own` that no neighbor of `v` carries.
    pub fn missing_colors(&self, g: &Graph, v: Vertex, own: Color, k: usize) -> Vec<Color> {
        let seen = self.neighbor_colors(g, v);
        (1..=k)
            .filter(|&c| c != own && seen.binary_search(&c).is_err())
            .collect()
    }

    pub fn uncolored_neighbor_count(&self, g: &Graph, v: Vertex) -> usize {
        g.neighbors(v).iter().filter(|&&u| self.colors[u].is_none()).count()
    }

    /// The total coloring, or an error naming the first uncolored vertex.
    pub fn into_total(self) -> Result<Vec<Color>> {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| Error::invariant("greedy", Some(v), "vertex left uncolored")))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn assign_and_recolor_are_traced() {
        let g = named::path(3);
        let mut pc = PartialColoring::new(3);
        pc.assign(0, 1, Step::Anchor).unwrap();
        pc.assign(1, 2, Step::Step1).unwrap();
        assert!(pc.assign(1, 3, Step::Step2).is_err());
        pc.recolor(1, 3, Step::Step3Recolor).unwrap();
        assert!(pc.recolor(2, 1, Step::Step3Recolor).is_err());
        assert_eq!(pc.recolor_count(1), 1);
        assert_eq!(pc.provenance(1), Some(Step::Step3Recolor));
        let lines: Vec<_> = pc.trace().iter().map(|e| e.render(&g)).collect();
        assert_eq!(
            lines,
            [
                "step=anchor vertex=0 color=1",
                "step=step1 vertex=1 color=2",
                "step=step3-recolor vertex=1 color=3 recolored-from=2",
            ]
        );
    }

    #[test]
    fn neighborhood_queries() {
        let g = named::star(3);
        let mut pc = PartialColoring::new(4);
        pc.assign(0, 1, Step::Anchor).unwrap();
        pc.assign(1, 2, Step::Completion).unwrap();
        assert_eq!(pc.neighbor_colors(&g, 0), vec![2]);
        assert_eq!(pc.missing_colors(&g, 0, 1, 4), vec![3, 4]);
        assert_eq!(pc.uncolored_neighbor_count(&g, 0), 2);
        assert_eq!(pc.monochromatic_edge(&g), None);
        pc.assign(2, 1, Step::Greedy).unwrap();
        assert_eq!(pc.monochromatic_edge(&g), Some((0, 2)));
        assert!(pc.clone().into_total().is_err());
    }
}
