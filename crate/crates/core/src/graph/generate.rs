use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{girth, Graph};
use crate::error::{Error, Result};

/// Random graph on `n` vertices whose girth is at least `min_girth` (or which
/// is a forest).
///
/// Edges are proposed uniformly at random and kept only if every cycle they
/// would close has length at least `min_girth`, i.e. if the endpoints are at
/// distance at least `min_girth - 1` or disconnected. Generation stops after
/// `edge_budget` accepted edges or when no admissible pair remains, so the
/// result may have fewer edges than requested. Deterministic for a fixed seed.
pub fn generate_girth_constrained(n: usize, min_girth: usize, edge_budget: usize, seed: u64) -> Result<Graph> {
    let empty = Graph::from_edges(n, [])?;
    extend_girth_constrained(&empty, min_girth, edge_budget, seed)
}

/// Adds up to `extra_edges` random edges to `base` without dropping its girth
/// below `min_girth`. `base` must already satisfy the bound.
pub fn extend_girth_constrained(base: &Graph, min_girth: usize, extra_edges: usize, seed: u64) -> Result<Graph> {
    if min_girth < 3 {
        return Err(Error::InvalidArgument(format!(
            "min_girth must be at least 3, got {min_girth}"
        )));
    }
    if !girth(base).is_at_least(min_girth) {
        return Err(Error::InvalidArgument(format!(
            "base graph has girth {} < {min_girth}",
            girth(base)
        )));
    }

    let n = base.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjacency: Vec<BTreeSet<usize>> = base
        .vertices()
        .map(|v| base.neighbors(v).iter().copied().collect())
        .collect();
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    let mut scratch = Scratch::new(n);
    // After this many consecutive rejections switch to exact enumeration of
    // the admissible pairs, which also detects saturation.
    let stall_limit = 8 * n + 64;

    let mut added = 0;
    let mut stalled = 0;
    while added < extra_edges && n >= 2 {
        let (u, v) = if stalled < stall_limit {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n - 1);
            let v = if v >= u { v + 1 } else { v };
            if adjacency[u].contains(&v) || scratch.closes_short_cycle(&adjacency, u, v, min_girth) {
                stalled += 1;
                continue;
            }
            (u, v)
        } else {
            let candidates = admissible_pairs(&adjacency, min_girth, &mut scratch);
            if candidates.is_empty() {
                break;
            }
            candidates[rng.gen_range(0..candidates.len())]
        };
        adjacency[u].insert(v);
        adjacency[v].insert(u);
        edges.push((u, v));
        added += 1;
        stalled = 0;
    }

    Graph::with_labels(base.labels().to_vec(), edges)
}

struct Scratch {
    dist: Vec<usize>,
    touched: Vec<usize>,
    queue: VecDeque<usize>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            dist: vec![usize::MAX; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn resize(&mut self, n: usize) {
        self.dist.resize(n, usize::MAX);
    }

    /// Whether `v` lies within distance `min_girth - 2` of `u`, i.e. whether
    /// the edge `uv` would close a cycle shorter than `min_girth`.
    fn closes_short_cycle(&mut self, adjacency: &[BTreeSet<usize>], u: usize, v: usize, min_girth: usize) -> bool {
        let limit = min_girth - 2;
        self.bounded_bfs(adjacency, u, limit);
        let found = self.dist[v] != usize::MAX;
        self.reset();
        found
    }

    fn bounded_bfs(&mut self, adjacency: &[BTreeSet<usize>], source: usize, limit: usize) {
        self.dist[source] = 0;
        self.touched.push(source);
        self.queue.push_back(source);
        while let Some(x) = self.queue.pop_front() {
            if self.dist[x] == limit {
                continue;
            }
            for &y in &adjacency[x] {
                if self.dist[y] == usize::MAX {
                    self.dist[y] = self.dist[x] + 1;
                    self.touched.push(y);
                    self.queue.push_back(y);
                }
            }
        }
    }

    fn reset(&mut self) {
        for &x in &self.touched {
            self.dist[x] = usize::MAX;
        }
        self.touched.clear();
        self.queue.clear();
    }
}

fn admissible_pairs(adjacency: &[BTreeSet<usize>], min_girth: usize, scratch: &mut Scratch) -> Vec<(usize, usize)> {
    let n = adjacency.len();
    let mut pairs = Vec::new();
    for u in 0..n {
        scratch.bounded_bfs(adjacency, u, min_girth - 2);
        pairs.extend((u + 1..n).filter(|&v| scratch.dist[v] == usize::MAX).map(|v| (u, v)));
        scratch.reset();
    }
    pairs
}

/// Hubs joined by short paths: a generator for graphs with many dense
/// vertices and link structure, keeping girth at least `min_girth`.
///
/// Each of the `hubs` hubs gets between `hub_degree / 2` and `hub_degree`
/// pendant leaves. Then `connectors` times, two distinct hubs are picked,
/// each endpoint is either the hub or one of its leaves, and a path of 2 to 4
/// edges through fresh vertices is added between the endpoints if it closes
/// no cycle shorter than `min_girth`.
pub fn generate_linked_hubs(
    hubs: usize,
    hub_degree: usize,
    connectors: usize,
    min_girth: usize,
    seed: u64,
) -> Result<Graph> {
    if min_girth < 3 {
        return Err(Error::InvalidArgument(format!(
            "min_girth must be at least 3, got {min_girth}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjacency: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); hubs];
    let mut edges = Vec::new();
    let mut leaves: Vec<Vec<usize>> = vec![Vec::new(); hubs];
    let mut add_edge = |adjacency: &mut Vec<BTreeSet<usize>>, u: usize, v: usize| {
        adjacency[u].insert(v);
        adjacency[v].insert(u);
        edges.push((u, v));
    };
    for (h, hub_leaves) in leaves.iter_mut().enumerate() {
        let count = rng.gen_range(hub_degree / 2..=hub_degree.max(1));
        for _ in 0..count {
            let leaf = adjacency.len();
            adjacency.push(BTreeSet::new());
            add_edge(&mut adjacency, h, leaf);
            hub_leaves.push(leaf);
        }
    }

    let mut scratch = Scratch::new(0);
    for _ in 0..connectors {
        if hubs < 2 {
            break;
        }
        let a = rng.gen_range(0..hubs);
        let b = (a + rng.gen_range(1..hubs)) % hubs;
        let endpoint = |h: usize, rng: &mut ChaCha8Rng| {
            if !leaves[h].is_empty() && rng.gen_bool(0.3) {
                leaves[h][rng.gen_range(0..leaves[h].len())]
            } else {
                h
            }
        };
        let x = endpoint(a, &mut rng);
        let y = endpoint(b, &mut rng);
        let length = rng.gen_range(2..=4);
        // the new path closes a cycle of length dist(x, y) + length
        scratch.resize(adjacency.len());
        let too_short = min_girth > length && scratch.closes_short_cycle(&adjacency, x, y, min_girth - length + 1);
        if too_short {
            continue;
        }
        let mut prev = x;
        for _ in 0..length - 1 {
            let fresh = adjacency.len();
            adjacency.push(BTreeSet::new());
            add_edge(&mut adjacency, prev, fresh);
            prev = fresh;
        }
        add_edge(&mut adjacency, prev, y);
    }

    Graph::from_edges(adjacency.len(), edges)
}

/// Uniformly random labelled tree on `0..n`, decoded from a random Prüfer
/// sequence.
pub fn random_labeled_tree(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        let edges = if n == 2 { vec![(0, 1)] } else { vec![] };
        return Graph::from_edges(n, edges).unwrap();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();

    let mut remaining = vec![1usize; n];
    for &c in &code {
        remaining[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| remaining[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().unwrap();
        edges.push((leaf, c));
        remaining[c] -= 1;
        if remaining[c] == 1 {
            leaves.insert(c);
        }
    }
    let a = leaves.pop_first().unwrap();
    let b = leaves.pop_first().unwrap();
    edges.push((a, b));
    Graph::from_edges(n, edges).unwrap()
}
