//! Brute-force references shared by the integration suites.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use ddseed::{Graph, NodeId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Simple graph with `n` nodes and up to `m` distinct non-loop edges.
pub fn random_graph(n: usize, m: usize, directed: bool, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = BTreeSet::new();
    let max = if directed { n * (n - 1) } else { n * (n - 1) / 2 };
    while edges.len() < m.min(max) {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        edges.insert(if directed || u < v { (u, v) } else { (v, u) });
    }
    Graph::from_edges(n, edges, directed).unwrap()
}

/// Stored arcs `(u, w)` for every `w` in `neighbors(u)`.
pub fn arcs(g: &Graph) -> Vec<(NodeId, NodeId)> {
    (0..g.node_count())
        .flat_map(|u| g.neighbors(u).iter().map(move |&w| (u, w)))
        .collect()
}

/// All-pairs hop distances following stored arcs (Floyd-Warshall).
pub fn distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.node_count();
    let mut d = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(0);
    }
    for (u, w) in arcs(g) {
        d[u][w] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

pub fn brute_closeness(g: &Graph) -> Vec<f64> {
    distances(g)
        .iter()
        .map(|row| {
            let far: usize = row.iter().flatten().sum();
            if far == 0 { 0.0 } else { 1.0 / far as f64 }
        })
        .collect()
}

fn simple_paths(g: &Graph, s: NodeId, t: NodeId, path: &mut Vec<NodeId>, out: &mut Vec<Vec<NodeId>>) {
    let u = *path.last().unwrap();
    if u == t {
        out.push(path.clone());
        return;
    }
    for &w in g.neighbors(u) {
        if w == s || path.contains(&w) {
            continue;
        }
        path.push(w);
        simple_paths(g, s, t, path, out);
        path.pop();
    }
}

/// Enumerates every simple path per pair and keeps the shortest ones.
pub fn brute_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut score = vec![0.0; n];
    for s in 0..n {
        for t in 0..n {
            if s == t || (!g.is_directed() && t < s) {
                continue;
            }
            let mut all = Vec::new();
            simple_paths(g, s, t, &mut vec![s], &mut all);
            let Some(best) = all.iter().map(Vec::len).min() else { continue };
            let shortest: Vec<_> = all.iter().filter(|p| p.len() == best).collect();
            for p in &shortest {
                for &v in &p[1..p.len() - 1] {
                    score[v] += 1.0 / shortest.len() as f64;
                }
            }
        }
    }
    score
}

/// Removes nodes of residual degree `<= k` until none remain, for
/// `k = 0, 1, ...`; a node's shell is the `k` at which it goes.
pub fn naive_kshell(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut alive = vec![true; n];
    let mut shell = vec![0.0; n];
    let mut left = n;
    let mut k = 0;
    while left > 0 {
        loop {
            let doomed: Vec<_> = (0..n)
                .filter(|&v| alive[v] && g.undirected_neighbors(v).iter().filter(|&&w| alive[w]).count() <= k)
                .collect();
            if doomed.is_empty() {
                break;
            }
            for v in doomed {
                alive[v] = false;
                shell[v] = k as f64;
                left -= 1;
            }
        }
        k += 1;
    }
    shell
}

/// Exact expected IC spread by enumerating live-edge subgraphs. An undirected
/// edge is one coin; a directed arc is one coin.
pub fn exact_spread(g: &Graph, seeds: &[NodeId], p: f64) -> f64 {
    let edges: Vec<(NodeId, NodeId)> = arcs(g)
        .into_iter()
        .filter(|&(u, w)| g.is_directed() || u < w)
        .collect();
    let m = edges.len();
    assert!(m <= 20, "too many edges to enumerate");
    let n = g.node_count();
    let mut expected = 0.0;
    for mask in 0u32..(1 << m) {
        let live = mask.count_ones() as i32;
        let weight = p.powi(live) * (1.0 - p).powi(m as i32 - live);
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, w)) in edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                adj[u].push(w);
                if !g.is_directed() {
                    adj[w].push(u);
                }
            }
        }
        let mut seen = vec![false; n];
        let mut queue: VecDeque<_> = seeds.iter().copied().collect();
        for &s in seeds {
            seen[s] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        expected += weight * seen.iter().filter(|&&b| b).count() as f64;
    }
    expected
}

pub fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}
