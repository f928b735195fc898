use std::collections::VecDeque;
use std::fmt;

use super::Graph;

/// Length of a shortest cycle, or `Acyclic` for forests.
///
/// Ordered so that `Acyclic` is larger than every finite girth, which makes
/// "girth at least k" a plain comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GirthValue {
    Finite(usize),
    Acyclic,
}

impl GirthValue {
    pub fn is_at_least(self, k: usize) -> bool {
        self >= GirthValue::Finite(k)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            GirthValue::Finite(k) => Some(k),
            GirthValue::Acyclic => None,
        }
    }
}

/// Serializes as the integer girth or the string `"acyclic"`.
impl serde::Serialize for GirthValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            GirthValue::Finite(k) => serializer.serialize_u64(*k as u64),
            GirthValue::Acyclic => serializer.serialize_str("acyclic"),
        }
    }
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(k) => write!(f, "{k}"),
            GirthValue::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Shortest cycle length by a breadth-first search from every vertex.
///
/// From a root `s`, a non-tree edge `uv` closes a closed walk of length
/// `d(u) + d(v) + 1` through `s` that contains a cycle no longer than it,
/// and for a root lying on a shortest cycle the bound is attained.
pub fn girth(g: &Graph) -> GirthValue {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();

    for root in g.vertices() {
        dist.fill(usize::MAX);
        queue.clear();
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            // nothing found from here on can beat the current best
            if 2 * dist[u] >= best {
                break;
            }
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }

    if best == usize::MAX {
        GirthValue::Acyclic
    } else {
        GirthValue::Finite(best)
    }
}
