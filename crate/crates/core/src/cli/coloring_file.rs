//! The coloring file: a `# k=<k> basis=<label:color,...>` header followed by
//! one `label color` line per vertex.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::bcolor::BResult;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{Color, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringFile {
    pub k: usize,
    /// Declared b-vertices as `(vertex, color)`, in header order.
    pub basis: Vec<(Vertex, Color)>,
    pub colors: Vec<Color>,
}

pub fn write_coloring(g: &Graph, result: &BResult) -> String {
    let basis: Vec<String> = result
        .basis
        .iter()
        .enumerate()
        .map(|(i, &v)| format!("{}:{}", g.label(v), i + 1))
        .collect();
    let mut out = format!("# k={} basis={}\n", result.chi_b, basis.join(","));
    for v in g.vertices() {
        writeln!(out, "{} {}", g.label(v), result.coloring[v]).unwrap();
    }
    out
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("expected {what}, found {token:?}")))
}

fn vertex(g: &Graph, label: u64, line: usize) -> Result<Vertex> {
    g.vertex_of_label(label)
        .ok_or_else(|| parse_error(line, format!("vertex {label} is not in the graph")))
}

/// Parses a coloring of `g`. Every vertex must be colored exactly once and
/// the header must be present.
pub fn parse_coloring(g: &Graph, text: &str) -> Result<ColoringFile> {
    let mut header: Option<(usize, Vec<(Vertex, Color)>)> = None;
    let mut colors: BTreeMap<Vertex, Color> = BTreeMap::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.trim();
        if content.is_empty() {
            continue;
        }
        if let Some(comment) = content.strip_prefix('#') {
            let comment = comment.trim();
            if !comment.starts_with("k=") {
                continue;
            }
            if header.is_some() {
                return Err(parse_error(line, "second k= header"));
            }
            let mut k = None;
            let mut basis = Vec::new();
            for field in comment.split_whitespace() {
                if let Some(value) = field.strip_prefix("k=") {
                    k = Some(number(value, line, "a color count")?);
                } else if let Some(value) = field.strip_prefix("basis=") {
                    for entry in value.split(',').filter(|e| !e.is_empty()) {
                        let (label, color) = entry
                            .split_once(':')
                            .ok_or_else(|| parse_error(line, format!("basis entry {entry:?} is not label:color")))?;
                        let v = vertex(g, number(label, line, "a vertex label")?, line)?;
                        basis.push((v, number(color, line, "a color")?));
                    }
                } else {
                    return Err(parse_error(line, format!("unknown header field {field:?}")));
                }
            }
            header = Some((k.unwrap(), basis));
            continue;
        }

        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_error(line, format!("expected `vertex color`, found {content:?}")));
        }
        let v = vertex(g, number(tokens[0], line, "a vertex label")?, line)?;
        let c: Color = number(tokens[1], line, "a color")?;
        if c == 0 {
            return Err(parse_error(line, "colors are numbered from 1"));
        }
        if colors.insert(v, c).is_some() {
            return Err(parse_error(line, format!("vertex {} colored twice", tokens[0])));
        }
    }

    let (k, basis) = header.ok_or_else(|| parse_error(0, "missing `# k=<count>` header"))?;
    if let Some(v) = g.vertices().find(|v| !colors.contains_key(v)) {
        return Err(parse_error(0, format!("vertex {} has no color", g.label(v))));
    }
    Ok(ColoringFile {
        k,
        basis,
        colors: colors.into_values().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, parse_edge_list};

    #[test]
    fn round_trip() {
        let g = parse_edge_list("10 20\n20 30\n").unwrap();
        let result = BResult {
            chi_b: 2,
            coloring: vec![1, 2, 1],
            basis: vec![0, 1],
        };
        let text = write_coloring(&g, &result);
        assert_eq!(text, "# k=2 basis=10:1,20:2\n10 1\n20 2\n30 1\n");
        let parsed = parse_coloring(&g, &text).unwrap();
        assert_eq!(parsed.k, 2);
        assert_eq!(parsed.basis, vec![(0, 1), (1, 2)]);
        assert_eq!(parsed.colors, vec![1, 2, 1]);
    }

    #[test]
    fn rejects_incomplete_or_malformed_files() {
        let g = named::path(3);
        for bad in [
            "0 1\n1 2\n2 1\n",
            "# k=2\n0 1\n1 2\n",
            "# k=2\n0 1\n1 2\n2 1\n2 1\n",
            "# k=2\n0 1\n1 2\n7 1\n",
            "# k=2\n0 1\n1 0\n2 1\n",
            "# k=2 basis=0-1\n0 1\n1 2\n2 1\n",
            "# k=x\n0 1\n1 2\n2 1\n",
            "# k=2\n0 1 1\n1 2\n2 1\n",
        ] {
            assert!(parse_coloring(&g, bad).is_err(), "{bad:?}");
        }
        assert!(parse_coloring(&g, "# comment\n\n# k=2\n0 1\n1 2\n2 1\n").is_ok());
    }
}
