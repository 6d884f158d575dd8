//! Small deterministic graph families used by tests, benchmarks and the
//! `synth` CLI subcommand.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l)), false).expect("valid star")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)), false).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)), false).expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges, false).expect("valid clique")
}

/// Preferential attachment: a seed clique on `m + 1` nodes, then every new
/// node links to `m` distinct existing nodes chosen proportionally to degree.
pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if m == 0 || n <= m {
        return Err(Error::invalid(format!(
            "preferential attachment needs 0 < m < n (got m={m}, n={n})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(NodeId, NodeId)> = Vec::with_capacity(n * m);
    // Every endpoint appears once per incident edge, so uniform picks from
    // this list are degree-proportional.
    let mut endpoints: Vec<NodeId> = Vec::with_capacity(2 * n * m);
    for u in 0..=m {
        for v in u + 1..=m {
            edges.push((u, v));
            endpoints.extend([u, v]);
        }
    }
    let mut targets = Vec::with_capacity(m);
    for new in m + 1..n {
        targets.clear();
        while targets.len() < m {
            let t = *endpoints.choose(&mut rng).expect("non-empty");
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((new, t));
            endpoints.extend([new, t]);
        }
    }
    Graph::from_edges(n, edges, false)
}

/// Uniform random graph with `n` nodes and (up to) `m` distinct edges.
pub fn gnm(n: usize, m: usize, directed: bool, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Graph::from_edges(n, std::iter::empty(), directed);
    }
    let max_edges = if directed { n * (n - 1) } else { n * (n - 1) / 2 };
    let target = m.min(max_edges);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::with_capacity(target);
    let mut edges = Vec::with_capacity(target);
    while edges.len() < target {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        let key = if directed || u < v { (u, v) } else { (v, u) };
        if seen.insert(key) {
            edges.push(key);
        }
    }
    Graph::from_edges(n, edges, directed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(star(4).edge_count(), 4);
        assert_eq!(path(5).edge_count(), 4);
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(complete(5).edge_count(), 10);
    }

    #[test]
    fn preferential_attachment_shape() {
        let g = barabasi_albert(2000, 2, 7).unwrap();
        assert_eq!(g.node_count(), 2000);
        assert_eq!(g.edge_count(), 3 + 2 * (2000 - 3));
        assert!(g.max_degree() > 30);
        let again = barabasi_albert(2000, 2, 7).unwrap();
        assert_eq!(
            (0..2000).map(|v| g.neighbors(v).to_vec()).collect::<Vec<_>>(),
            (0..2000).map(|v| again.neighbors(v).to_vec()).collect::<Vec<_>>()
        );
        assert!(barabasi_albert(3, 3, 0).is_err());
    }

    #[test]
    fn gnm_counts() {
        assert_eq!(gnm(10, 12, false, 1).unwrap().edge_count(), 12);
        assert_eq!(gnm(4, 100, true, 1).unwrap().edge_count(), 12);
    }
}
