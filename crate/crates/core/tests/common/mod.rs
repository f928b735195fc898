//! Corpus builders and reference checkers shared by the integration tests.
//! The checkers work from the definitions only and share no code with the
//! library's own algorithms.

#![allow(dead_code)]

use bchromatic::graph::{
    extend_girth_constrained, generate_girth_constrained, generate_linked_hubs, random_labeled_tree, Graph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Whether `colors` is a b-coloring of `g` using exactly `1..=k`.
pub fn is_b_coloring(g: &Graph, colors: &[usize], k: usize) -> bool {
    if colors.len() != g.n() || colors.iter().any(|&c| c == 0 || c > k) {
        return false;
    }
    for (u, v) in g.edges() {
        if colors[u] == colors[v] {
            return false;
        }
    }
    (1..=k).all(|c| {
        g.vertices()
            .any(|x| colors[x] == c && sees_all_other_colors(g, colors, x, k))
    })
}

pub fn sees_all_other_colors(g: &Graph, colors: &[usize], x: usize, k: usize) -> bool {
    (1..=k)
        .filter(|&d| d != colors[x])
        .all(|d| g.neighbors(x).iter().any(|&y| colors[y] == d))
}

/// Shortest cycle length by listing simple cycles; `None` for forests.
pub fn girth_by_cycle_enumeration(g: &Graph) -> Option<usize> {
    fn extend(g: &Graph, start: usize, at: usize, len: usize, on_path: &mut Vec<bool>, best: &mut Option<usize>) {
        for &next in g.neighbors(at) {
            if next == start && len >= 3 {
                *best = Some(best.map_or(len, |b| b.min(len)));
            } else if next > start && !on_path[next] && best.is_none_or(|b| len + 1 < b) {
                on_path[next] = true;
                extend(g, start, next, len + 1, on_path, best);
                on_path[next] = false;
            }
        }
    }
    let mut best = None;
    let mut on_path = vec![false; g.n()];
    for start in g.vertices() {
        on_path[start] = true;
        extend(g, start, start, 1, &mut on_path, &mut best);
        on_path[start] = false;
    }
    best
}

/// Largest `k` with at least `k` vertices of degree at least `k - 1`, by
/// trying every `k`.
pub fn naive_m(g: &Graph) -> usize {
    (1..=g.n())
        .filter(|&k| g.vertices().filter(|&v| g.degree(v) + 1 >= k).count() >= k)
        .max()
        .unwrap_or(0)
}

/// Good-set test straight from the definition.
pub fn is_good_set_by_definition(g: &Graph, w: &[usize]) -> bool {
    let m = naive_m(g);
    let tight = |v: usize| g.degree(v) + 1 == m;
    if w.len() != m || w.iter().any(|&v| g.degree(v) + 1 < m) {
        return false;
    }
    let in_w = |v: usize| w.contains(&v);
    for u in g.vertices().filter(|&u| !in_w(u)) {
        let encircled = w
            .iter()
            .all(|&v| g.has_edge(u, v) || w.iter().any(|&x| tight(x) && g.has_edge(x, u) && g.has_edge(x, v)));
        if encircled {
            return false;
        }
        if g.degree(u) >= m && !w.iter().any(|&v| g.has_edge(u, v)) {
            return false;
        }
    }
    true
}

/// Calls `f` on every `k`-subset of `items`, in lexicographic order.
pub fn for_each_subset(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(items: &[usize], k: usize, from: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if chosen.len() == k {
            f(chosen);
            return;
        }
        let needed = k - chosen.len();
        if items.len() < from + needed {
            return;
        }
        for i in from..=items.len() - needed {
            chosen.push(items[i]);
            go(items, k, i + 1, chosen, f);
            chosen.pop();
        }
    }
    go(items, k, 0, &mut Vec::new(), f);
}

/// A tree with no good set: vertex 0 is encircled by the `m` dense vertices.
///
/// `near` dense vertices are adjacent to 0 and have degree exactly `m - 1`;
/// the other `m - near` hang off them. Every dense vertex is filled up to
/// degree `m - 1` with leaves, and a few of the leaves grow short tails.
/// Needs `m >= 4` and `1 <= near <= m - 2`, and enough room on the near
/// vertices for the far ones.
pub fn encircled_family(m: usize, near: usize, tails: usize, seed: u64) -> Graph {
    assert!(m >= 4 && near >= 1 && near <= m - 2);
    assert!(near * (m - 2) >= m - near);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut n = 1;
    let fresh = |n: &mut usize| {
        *n += 1;
        *n - 1
    };
    let near_ids: Vec<usize> = (0..near).map(|_| fresh(&mut n)).collect();
    let mut degree = vec![0usize; 1 + near];
    for &a in &near_ids {
        edges.push((0, a));
        degree[a] += 1;
    }
    let mut dense = near_ids.clone();
    for _ in 0..m - near {
        let open: Vec<usize> = near_ids.iter().copied().filter(|&a| degree[a] < m - 1).collect();
        let a = open[rng.gen_range(0..open.len())];
        let b = fresh(&mut n);
        degree.push(0);
        edges.push((a, b));
        degree[a] += 1;
        degree[b] += 1;
        dense.push(b);
    }
    let mut leaves = Vec::new();
    for &v in &dense {
        while degree[v] < m - 1 {
            let leaf = fresh(&mut n);
            degree.push(1);
            edges.push((v, leaf));
            degree[v] += 1;
            leaves.push(leaf);
        }
    }
    for _ in 0..tails {
        let mut at = leaves[rng.gen_range(0..leaves.len())];
        for _ in 0..rng.gen_range(1..=3) {
            let next = fresh(&mut n);
            edges.push((at, next));
            at = next;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// The graphs behind the girth-at-least-9 criteria: `count` graphs with at
/// most `max_n` vertices, cycling through five families.
pub fn girth9_corpus(count: usize, max_n: usize, seed_base: u64) -> Vec<Graph> {
    let mut out = Vec::with_capacity(count);
    let mut seed = seed_base;
    while out.len() < count {
        seed += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = match seed % 5 {
            0 => {
                let n = rng.gen_range(2..=max_n);
                let budget = rng.gen_range(n / 2..=n + n / 3);
                generate_girth_constrained(n, 9, budget, seed).unwrap()
            }
            1 => random_labeled_tree(rng.gen_range(1..=max_n), seed),
            2 => {
                let tree = random_labeled_tree(rng.gen_range(2..=max_n), seed);
                extend_girth_constrained(&tree, 9, rng.gen_range(1..=4), seed).unwrap()
            }
            3 => {
                let hubs = rng.gen_range(2..=10);
                let degree = rng.gen_range(2..=10);
                generate_linked_hubs(hubs, degree, rng.gen_range(1..=30), 9, seed).unwrap()
            }
            _ => {
                let m = rng.gen_range(4..=8);
                let near = rng.gen_range(1..=m - 2);
                if near * (m - 2) < m - near {
                    continue;
                }
                encircled_family(m, near, rng.gen_range(0..6), seed)
            }
        };
        if g.n() <= max_n && g.n() > 0 {
            out.push(g);
        }
    }
    out
}

/// Erdős–Rényi graph, used where small cycles are wanted.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// A cycle of length `len` with `n - len` further vertices attached as random
/// trees, so the girth is exactly `len`.
pub fn cycle_with_trees(n: usize, len: usize, seed: u64) -> Graph {
    assert!(len >= 3 && n >= len);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    for v in len..n {
        edges.push((rng.gen_range(0..v), v));
    }
    Graph::from_edges(n, edges).unwrap()
}
