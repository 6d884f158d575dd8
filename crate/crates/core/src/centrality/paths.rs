//! Shortest-path measures. Both walk edges as stored, so directed graphs use
//! out-distances and ordered pairs.

use rayon::prelude::*;

use crate::centrality::{Measure, ScoreVector};
use crate::graph::{Graph, NodeId};

/// Sources are split into this many contiguous blocks regardless of thread
/// count; partial sums are reduced in block order so results are bit-identical.
const REDUCTION_BLOCKS: usize = 16;

/// `1 / sum of distances to every node reachable from v`; 0 when nothing is.
pub fn closeness_centrality(g: &Graph) -> ScoreVector {
    let n = g.node_count();
    let scores = (0..n)
        .into_par_iter()
        .map_init(
            || (vec![usize::MAX; n], Vec::with_capacity(n)),
            |(dist, queue), s| {
                let farness = bfs_farness(g, s, dist, queue);
                if farness == 0 {
                    0.0
                } else {
                    1.0 / farness as f64
                }
            },
        )
        .collect();
    ScoreVector::new(Measure::Closeness, scores)
}

fn bfs_farness(g: &Graph, s: NodeId, dist: &mut [usize], queue: &mut Vec<NodeId>) -> u64 {
    for &v in queue.iter() {
        dist[v] = usize::MAX;
    }
    queue.clear();
    dist[s] = 0;
    queue.push(s);
    let mut head = 0;
    let mut total = 0u64;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                total += dist[w] as u64;
                queue.push(w);
            }
        }
    }
    total
}

/// Brandes accumulation over single-source shortest-path DAGs. Undirected
/// graphs count each unordered pair once.
pub fn betweenness_centrality(g: &Graph) -> ScoreVector {
    let n = g.node_count();
    if n == 0 {
        return ScoreVector::new(Measure::Betweenness, Vec::new());
    }
    let block = n.div_ceil(REDUCTION_BLOCKS);
    let partials: Vec<Vec<f64>> = (0..n)
        .step_by(block)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|start| {
            let mut acc = vec![0.0; n];
            let mut ws = BrandesWorkspace::new(n);
            for s in start..(start + block).min(n) {
                ws.accumulate(g, s, &mut acc);
            }
            acc
        })
        .collect();

    let mut scores = vec![0.0; n];
    for part in &partials {
        for (total, x) in scores.iter_mut().zip(part) {
            *total += x;
        }
    }
    if !g.is_directed() {
        scores.iter_mut().for_each(|x| *x /= 2.0);
    }
    ScoreVector::new(Measure::Betweenness, scores)
}

struct BrandesWorkspace {
    sigma: Vec<f64>,
    dist: Vec<usize>,
    delta: Vec<f64>,
    order: Vec<NodeId>,
}

impl BrandesWorkspace {
    fn new(n: usize) -> Self {
        Self {
            sigma: vec![0.0; n],
            dist: vec![usize::MAX; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
        }
    }

    fn accumulate(&mut self, g: &Graph, s: NodeId, acc: &mut [f64]) {
        for &v in &self.order {
            self.sigma[v] = 0.0;
            self.dist[v] = usize::MAX;
            self.delta[v] = 0.0;
        }
        self.order.clear();
        self.sigma[s] = 1.0;
        self.dist[s] = 0;
        self.order.push(s);
        let mut head = 0;
        while head < self.order.len() {
            let u = self.order[head];
            head += 1;
            let du = self.dist[u];
            for &w in g.neighbors(u) {
                if self.dist[w] == usize::MAX {
                    self.dist[w] = du + 1;
                    self.order.push(w);
                }
                if self.dist[w] == du + 1 {
                    self.sigma[w] += self.sigma[u];
                }
            }
        }
        // predecessors of w are in-neighbours one level closer to s
        for &w in self.order.iter().rev() {
            let dw = self.dist[w];
            if dw == 0 {
                continue;
            }
            let coeff = (1.0 + self.delta[w]) / self.sigma[w];
            for &v in g.in_neighbors(w) {
                if self.dist[v] != usize::MAX && self.dist[v] + 1 == dw {
                    self.delta[v] += self.sigma[v] * coeff;
                }
            }
            acc[w] += self.delta[w];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{figure1, v};
    use crate::generators::{complete, path};

    #[test]
    fn path_closeness() {
        let s = closeness_centrality(&path(3));
        assert!((s.score(1) - 0.5).abs() < 1e-15);
        assert!((s.score(0) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn complete_closeness() {
        let s = closeness_centrality(&complete(6));
        assert!(s.scores().iter().all(|&x| (x - 0.2).abs() < 1e-15));
    }

    #[test]
    fn small_component_outranks_hub() {
        let mut edges: Vec<_> = (1..8).map(|l| (0, l)).collect();
        edges.push((8, 9));
        let g = Graph::from_edges(10, edges, false).unwrap();
        let s = closeness_centrality(&g);
        assert_eq!(s.score(8), 1.0);
        assert!(s.score(8) > s.score(0));
        let iso = Graph::from_edges(3, [(0, 1)], false).unwrap();
        assert_eq!(closeness_centrality(&iso).score(2), 0.0);
    }

    #[test]
    fn path_betweenness_counts_unordered_pairs() {
        let s = betweenness_centrality(&path(3));
        assert_eq!(s.scores(), &[0.0, 1.0, 0.0]);
        let d = Graph::from_edges(3, [(0, 1), (1, 2)], true).unwrap();
        assert_eq!(betweenness_centrality(&d).scores(), &[0.0, 1.0, 0.0]);
    }

    #[test]
    fn complete_betweenness_is_zero() {
        let s = betweenness_centrality(&complete(5));
        assert!(s.scores().iter().all(|&x| x == 0.0));
    }

    #[test]
    fn figure1_bridges_carry_most_paths() {
        // v14 and v10 separate the v11..v17 branch from the core
        let s = betweenness_centrality(&figure1());
        assert_eq!(s.top_k(2), &[v(14), v(10)]);
        assert!((s.score(v(14)) - 81.0).abs() < 1e-9);
        assert!((s.score(v(10)) - 77.0).abs() < 1e-9);
        assert!((s.score(v(1)) - 166.0 / 3.0).abs() < 1e-9);
    }
}
