//! Fixpoint measures computed by power iteration.

use crate::centrality::{Measure, ScoreVector};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) const DEFAULT_LEADERRANK_TOLERANCE: f64 = 1e-10;
const LEADERRANK_MAX_ITERATIONS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenvectorParams {
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for EigenvectorParams {
    fn default() -> Self {
        Self {
            tolerance: 1e-9,
            max_iterations: 10_000,
        }
    }
}

pub fn eigenvector_centrality(g: &Graph) -> Result<ScoreVector> {
    eigenvector_centrality_with(g, &EigenvectorParams::default())
}

/// Dominant eigenvector of the undirected adjacency, scaled to unit maximum.
///
/// Iterates on `A + I`: same eigenvectors, but the shift makes the Perron
/// root strictly dominant so bipartite graphs (stars, trees) converge.
pub fn eigenvector_centrality_with(g: &Graph, params: &EigenvectorParams) -> Result<ScoreVector> {
    if g.edge_count() == 0 {
        return Err(Error::invalid("eigenvector centrality needs at least one edge"));
    }
    let n = g.node_count();
    let mut x = vec![1.0; n];
    let mut residual = f64::INFINITY;
    for _ in 0..params.max_iterations {
        let mut y: Vec<f64> = (0..n)
            .map(|u| x[u] + g.undirected_neighbors(u).iter().map(|&w| x[w]).sum::<f64>())
            .collect();
        let max = y.iter().copied().fold(0.0, f64::max);
        y.iter_mut().for_each(|v| *v /= max);
        residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        x = y;
        if residual < params.tolerance {
            return Ok(ScoreVector::new(Measure::Eigenvector, x));
        }
    }
    Err(Error::Convergence {
        measure: "eigenvector",
        iterations: params.max_iterations,
        residual,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageRankParams {
    pub damping: f64,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PageRankParams {
    fn default() -> Self {
        Self {
            damping: 0.85,
            tolerance: 1e-9,
            max_iterations: 200,
        }
    }
}

/// Random-surfer fixpoint. Mass on dangling nodes is spread uniformly; the
/// iteration stops when the L1 change drops below `tolerance`.
pub fn pagerank(g: &Graph, damping: f64, tolerance: f64) -> Result<ScoreVector> {
    pagerank_with(
        g,
        &PageRankParams {
            damping,
            tolerance,
            ..Default::default()
        },
    )
}

pub fn pagerank_with(g: &Graph, params: &PageRankParams) -> Result<ScoreVector> {
    let d = params.damping;
    if !(d > 0.0 && d < 1.0) {
        return Err(Error::invalid(format!("damping must lie in (0, 1), got {d}")));
    }
    let n = g.node_count();
    if n == 0 {
        return Ok(ScoreVector::new(Measure::PageRank, Vec::new()));
    }
    let nf = n as f64;
    let mut x = vec![1.0 / nf; n];
    let mut residual = f64::INFINITY;
    for _ in 0..params.max_iterations {
        let dangling: f64 = (0..n).filter(|&u| g.out_degree(u) == 0).map(|u| x[u]).sum();
        let base = (1.0 - d) / nf + d * dangling / nf;
        let y: Vec<f64> = (0..n)
            .map(|v| {
                let inflow: f64 = g
                    .in_neighbors(v)
                    .iter()
                    .map(|&u| x[u] / g.out_degree(u) as f64)
                    .sum();
                base + d * inflow
            })
            .collect();
        residual = x.iter().zip(&y).map(|(a, b)| (a - b).abs()).sum();
        x = y;
        if residual < params.tolerance {
            return Ok(ScoreVector::new(Measure::PageRank, x));
        }
    }
    Err(Error::Convergence {
        measure: "pagerank",
        iterations: params.max_iterations,
        residual,
    })
}

/// Parameter-free walk on the graph augmented with a ground node linked both
/// ways to every node. Real nodes start with one unit each, the ground with
/// none; at the fixpoint the ground's score is shared evenly among real nodes,
/// so the returned scores sum to `node_count`.
pub fn leaderrank(g: &Graph, tolerance: f64) -> Result<ScoreVector> {
    let n = g.node_count();
    if n == 0 {
        return Ok(ScoreVector::new(Measure::LeaderRank, Vec::new()));
    }
    if g.edge_count() == 0 {
        // the augmented walk is a star, periodic with no fixpoint; symmetry
        // leaves every real node with one unit
        return Ok(ScoreVector::new(Measure::LeaderRank, vec![1.0; n]));
    }
    let mut x = vec![1.0; n];
    let mut ground = 0.0;
    let mut residual = f64::INFINITY;
    for _ in 0..LEADERRANK_MAX_ITERATIONS {
        let ground_share = ground / n as f64;
        let y: Vec<f64> = (0..n)
            .map(|v| {
                let inflow: f64 = g
                    .in_neighbors(v)
                    .iter()
                    .map(|&u| x[u] / (g.out_degree(u) + 1) as f64)
                    .sum();
                inflow + ground_share
            })
            .collect();
        let next_ground: f64 = (0..n).map(|u| x[u] / (g.out_degree(u) + 1) as f64).sum();
        residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (a - b).abs())
            .fold((ground - next_ground).abs(), f64::max);
        x = y;
        ground = next_ground;
        if residual < tolerance {
            let share = ground / n as f64;
            x.iter_mut().for_each(|v| *v += share);
            return Ok(ScoreVector::new(Measure::LeaderRank, x));
        }
    }
    Err(Error::Convergence {
        measure: "leaderrank",
        iterations: LEADERRANK_MAX_ITERATIONS,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    #[test]
    fn star_eigenvector() {
        let s = eigenvector_centrality(&star(4)).unwrap();
        assert!((s.score(0) - 1.0).abs() < 1e-6);
        for leaf in 1..5 {
            assert!((s.score(leaf) - 0.5).abs() < 1e-6);
        }
    }

    #[test]
    fn regular_graph_eigenvector_is_flat() {
        let s = eigenvector_centrality(&cycle(8)).unwrap();
        assert!(s.scores().iter().all(|&x| (x - 1.0).abs() < 1e-12));
    }

    #[test]
    fn disjoint_cliques_concentrate_on_larger() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        edges.extend([(5, 6), (6, 7), (5, 7)]);
        let g = Graph::from_edges(8, edges, false).unwrap();
        let s = eigenvector_centrality(&g).unwrap();
        for v in 0..5 {
            assert!((s.score(v) - 1.0).abs() < 1e-9);
        }
        for v in 5..8 {
            assert!(s.score(v) < 1e-6, "{}", s.score(v));
        }
    }

    #[test]
    fn eigenvector_needs_edges() {
        let g = Graph::from_edges(3, [], false).unwrap();
        assert!(eigenvector_centrality(&g).is_err());
        let tight = EigenvectorParams {
            tolerance: 0.0,
            max_iterations: 5,
        };
        assert!(matches!(
            eigenvector_centrality_with(&path(6), &tight),
            Err(Error::Convergence { .. })
        ));
    }

    #[test]
    fn pagerank_trivial_cases() {
        let one = Graph::from_edges(1, [], false).unwrap();
        assert!((pagerank(&one, 0.85, 1e-9).unwrap().score(0) - 1.0).abs() < 1e-12);
        let two = path(2);
        let s = pagerank(&two, 0.85, 1e-9).unwrap();
        assert!((s.score(0) - 0.5).abs() < 1e-12);
        assert!((s.score(1) - 0.5).abs() < 1e-12);
        assert!(pagerank(&two, 1.0, 1e-9).is_err());
    }

    #[test]
    fn pagerank_directed_chain_matches_linear_system() {
        // a -> b -> c, c dangling. With d = 0.85 and dangling mass spread
        // uniformly, x = (1-d)/3 + d*x_c/3 + d*inflow solves to:
        let g = Graph::from_edges(3, [(0, 1), (1, 2)], true).unwrap();
        let s = pagerank(&g, 0.85, 1e-12).unwrap();
        let d: f64 = 0.85;
        // a = (1-d)/3 + d c/3 ; b = a + d a ; c = a + d b
        // => a(1 + d + d^2)... solved with a + b + c = 1
        let a = 1.0 / (1.0 + (1.0 + d) + (1.0 + d + d * d));
        let b = a * (1.0 + d);
        let c = a * (1.0 + d + d * d);
        assert!((s.score(0) - a).abs() < 1e-9);
        assert!((s.score(1) - b).abs() < 1e-9);
        assert!((s.score(2) - c).abs() < 1e-9);
        assert!(s.score(2) > s.score(1) && s.score(1) > s.score(0));
    }

    #[test]
    fn leaderrank_symmetry_and_conservation() {
        let s = leaderrank(&path(2), 1e-12).unwrap();
        assert!((s.score(0) - s.score(1)).abs() < 1e-12);
        let g = complete(4);
        let s = leaderrank(&g, 1e-12).unwrap();
        let total: f64 = s.scores().iter().sum();
        assert!((total - 4.0).abs() < 1e-9);
        let empty = Graph::from_edges(3, [], true).unwrap();
        assert_eq!(leaderrank(&empty, 1e-9).unwrap().scores(), &[1.0, 1.0, 1.0]);
    }

    #[test]
    fn leaderrank_star_center_wins() {
        let s = leaderrank(&star(4), 1e-12).unwrap();
        for leaf in 1..5 {
            assert!(s.score(0) > s.score(leaf));
        }
        let total: f64 = s.scores().iter().sum();
        assert!((total - 5.0).abs() < 1e-9);
    }
}
