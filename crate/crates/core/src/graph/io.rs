use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

/// Graph file formats understood by the loaders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// One `u v` pair per line, `#` comments, optional `# n=<count>` header.
    Edgelist,
    /// DIMACS `.col`: `p edge n m`, `e u v` with 1-based labels, `c` comments.
    Dimacs,
}

impl Format {
    /// `.col` and `.dimacs` files are DIMACS, everything else an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col") | Some("dimacs") => Format::Dimacs,
            _ => Format::Edgelist,
        }
    }

    pub fn parse(self, text: &str) -> Result<Graph> {
        match self {
            Format::Edgelist => parse_edge_list(text),
            Format::Dimacs => parse_dimacs(text),
        }
    }
}

fn parse_label(token: &str, line: usize) -> Result<u64> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a nonnegative integer vertex label, found {token:?}"),
    })
}

/// Parses the edge-list format.
///
/// The vertex set is every label that appears on an edge, plus `0..n` when a
/// `# n=<count>` header is present, plus any labels listed on
/// `# isolated <label>...` lines. Internal ids follow increasing label order.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut labels = BTreeSet::new();
    let mut edges = Vec::new();
    let mut seen = HashSet::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(count) = comment.strip_prefix("n=") {
                let count = parse_label(count.trim(), line)?;
                labels.extend(0..count);
            } else if let Some(rest) = comment.strip_prefix("isolated") {
                for token in rest.split_whitespace() {
                    labels.insert(parse_label(token, line)?);
                }
            }
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected two vertex labels, found {} tokens", tokens.len()),
            });
        }
        let u = parse_label(tokens[0], line)?;
        let v = parse_label(tokens[1], line)?;
        if u == v {
            return Err(Error::SelfLoop { line, label: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge { line, u, v });
        }
        labels.insert(u);
        labels.insert(v);
        edges.push((u, v));
    }

    build(labels, edges)
}

/// Parses DIMACS `.col` text. Labels are kept 1-based.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut declared: Option<u64> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => continue,
            Some("p") => {
                if declared.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "second problem line".into(),
                    });
                }
                if tokens.len() != 4 {
                    return Err(Error::Parse {
                        line,
                        message: "expected `p edge <n> <m>`".into(),
                    });
                }
                declared = Some(parse_label(tokens[2], line)?);
                parse_label(tokens[3], line)?;
            }
            Some("e") => {
                let Some(n) = declared else {
                    return Err(Error::Parse {
                        line,
                        message: "edge before problem line".into(),
                    });
                };
                if tokens.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        message: "expected `e <u> <v>`".into(),
                    });
                }
                let u = parse_label(tokens[1], line)?;
                let v = parse_label(tokens[2], line)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(Error::Parse {
                            line,
                            message: format!("vertex {x} outside 1..={n}"),
                        });
                    }
                }
                if u == v {
                    return Err(Error::SelfLoop { line, label: u });
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::DuplicateEdge { line, u, v });
                }
                edges.push((u, v));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown line type {other:?}"),
                })
            }
        }
    }

    let n = declared.ok_or(Error::Parse {
        line: 0,
        message: "missing problem line".into(),
    })?;
    build((1..=n).collect(), edges)
}

fn build(labels: BTreeSet<u64>, edges: Vec<(u64, u64)>) -> Result<Graph> {
    let ids: BTreeMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (ids[&u], ids[&v])).collect();
    Graph::with_labels(labels.into_iter().collect(), edges)
}

/// Serializes `g` in the edge-list format, using its labels.
///
/// Graphs labelled `0..n` get a `# n=<count>` header so isolated vertices
/// survive; otherwise isolated vertices are listed on an `# isolated` line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let contiguous = g.labels().iter().enumerate().all(|(i, &l)| l == i as u64);
    if contiguous {
        writeln!(out, "# n={}", g.n()).unwrap();
    } else {
        let isolated: Vec<String> = g
            .vertices()
            .filter(|&v| g.degree(v) == 0)
            .map(|v| g.label(v).to_string())
            .collect();
        if !isolated.is_empty() {
            writeln!(out, "# isolated {}", isolated.join(" ")).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(v)).unwrap();
    }
    out
}
