use std::fmt::Write as _;

use serde::Serialize;

use crate::goodset::check_good_set;
use crate::graph::{GirthValue, Graph};
use crate::oracle::{ValidityReport, Violation};
use crate::pipeline::{Method, Outcome};
use crate::{Color, Vertex};

/// What `analyze` reports about one graph. Vertices are given by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    pub n: usize,
    pub edges: usize,
    pub girth: GirthValue,
    pub m: usize,
    pub dense_count: usize,
    pub dense: Vec<u64>,
    /// `None` below girth 8, where existence is not decided.
    pub has_good_set: Option<bool>,
    pub good_set: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate: Option<Vec<u64>>,
    /// `good`, or the reason the candidate is not a good set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate_verdict: Option<String>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub chi_b: Option<ChiB>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiB {
    pub chi_b: Option<usize>,
    pub chi_b_method: Method,
    pub chi_b_upper: usize,
}

fn labels(g: &Graph, vs: &[Vertex]) -> Vec<u64> {
    vs.iter().map(|&v| g.label(v)).collect()
}

impl AnalysisRecord {
    pub fn new(g: &Graph, outcome: &Outcome, with_chi_b: bool) -> AnalysisRecord {
        AnalysisRecord {
            file: None,
            n: g.n(),
            edges: g.edge_count(),
            girth: outcome.girth,
            m: outcome.profile.m,
            dense_count: outcome.profile.dense.len(),
            dense: labels(g, &outcome.profile.dense),
            has_good_set: outcome.has_good_set,
            good_set: outcome.good_set.as_ref().map(|w| labels(g, w.members())),
            candidate: None,
            candidate_verdict: None,
            chi_b: with_chi_b.then(|| ChiB {
                chi_b: outcome.chi_b,
                chi_b_method: outcome.method,
                chi_b_upper: outcome.upper_bound(),
            }),
        }
    }

    /// Records whether `candidate` (internal ids) is a good set.
    pub fn judge_candidate(&mut self, g: &Graph, outcome: &Outcome, candidate: &[Vertex]) {
        self.candidate = Some(labels(g, candidate));
        self.candidate_verdict = Some(match check_good_set(g, candidate, &outcome.profile) {
            Ok(()) => "good".to_string(),
            Err(rejection) => rejection.describe(g),
        });
    }

    /// `key=value` lines in field order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(file) = &self.file {
            writeln!(out, "file={file}").unwrap();
        }
        writeln!(out, "n={}", self.n).unwrap();
        writeln!(out, "edges={}", self.edges).unwrap();
        writeln!(out, "girth={}", self.girth).unwrap();
        writeln!(out, "m={}", self.m).unwrap();
        writeln!(out, "dense_count={}", self.dense_count).unwrap();
        writeln!(out, "dense={}", join(&self.dense)).unwrap();
        let has = match self.has_good_set {
            Some(b) => b.to_string(),
            None => "undecided".to_string(),
        };
        writeln!(out, "has_good_set={has}").unwrap();
        match &self.good_set {
            Some(w) => writeln!(out, "good_set={}", join(w)).unwrap(),
            None => writeln!(out, "good_set=none").unwrap(),
        }
        if let (Some(candidate), Some(verdict)) = (&self.candidate, &self.candidate_verdict) {
            writeln!(out, "candidate={}", join(candidate)).unwrap();
            writeln!(out, "candidate_verdict={verdict}").unwrap();
        }
        if let Some(chi) = &self.chi_b {
            match chi.chi_b {
                Some(k) => writeln!(out, "chi_b={k}").unwrap(),
                None => writeln!(out, "chi_b=unknown").unwrap(),
            }
            writeln!(out, "chi_b_method={}", chi.chi_b_method.tag()).unwrap();
            writeln!(out, "chi_b_upper={}", chi.chi_b_upper).unwrap();
        }
        out
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Result of `verify`, with vertices given by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRecord {
    pub valid: bool,
    pub k: usize,
    pub proper: bool,
    pub colors_used: usize,
    pub violations: Vec<LabeledViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LabeledViolation {
    MonochromaticEdge {
        u: u64,
        v: u64,
    },
    ClassWithoutBVertex {
        color: Color,
    },
    ColorGap {
        color: Color,
    },
    /// A header basis entry that is not a b-vertex of the stated color.
    BasisMismatch {
        vertex: u64,
        color: Color,
    },
}

impl LabeledViolation {
    fn from_report(g: &Graph, v: &Violation) -> LabeledViolation {
        match *v {
            Violation::MonochromaticEdge { u, v } => LabeledViolation::MonochromaticEdge {
                u: g.label(u),
                v: g.label(v),
            },
            Violation::ClassWithoutBVertex { color } => LabeledViolation::ClassWithoutBVertex { color },
            Violation::ColorGap { color } => LabeledViolation::ColorGap { color },
        }
    }

    fn to_text(&self) -> String {
        match self {
            LabeledViolation::MonochromaticEdge { u, v } => format!("monochromatic-edge({u},{v})"),
            LabeledViolation::ClassWithoutBVertex { color } => format!("class-without-b-vertex({color})"),
            LabeledViolation::ColorGap { color } => format!("color-gap({color})"),
            LabeledViolation::BasisMismatch { vertex, color } => format!("basis-mismatch({vertex}:{color})"),
        }
    }
}

impl VerifyRecord {
    pub fn new(g: &Graph, report: &ValidityReport, k: usize, basis: &[(Vertex, Color)], colors: &[Color]) -> Self {
        let mut violations: Vec<LabeledViolation> = report
            .violations
            .iter()
            .map(|v| LabeledViolation::from_report(g, v))
            .collect();
        for &(v, c) in basis {
            if !is_b_vertex(g, colors, v, c, k) {
                violations.push(LabeledViolation::BasisMismatch {
                    vertex: g.label(v),
                    color: c,
                });
            }
        }
        VerifyRecord {
            valid: report.is_valid() && violations.is_empty(),
            k,
            proper: report.proper,
            colors_used: report.colors_used,
            violations,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "valid={}\nk={}\nproper={}\ncolors_used={}\n",
            self.valid, self.k, self.proper, self.colors_used
        );
        for v in &self.violations {
            writeln!(out, "violation={}", v.to_text()).unwrap();
        }
        out
    }
}

fn is_b_vertex(g: &Graph, colors: &[Color], v: Vertex, c: Color, k: usize) -> bool {
    if colors[v] != c {
        return false;
    }
    let mut seen = vec![false; k + 1];
    for &u in g.neighbors(v) {
        if colors[u] <= k {
            seen[colors[u]] = true;
        }
    }
    (1..=k).all(|d| d == c || seen[d])
}
