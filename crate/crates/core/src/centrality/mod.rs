//! Baseline structural measures. Each measure yields a [`ScoreVector`]
//! whose ranking orders nodes by descending score, ties by ascending id.
//!
//! DegreeDiscount and greedy hill-climbing are selectors rather than scorers
//! and return a [`SeedSet`](crate::seedselect::SeedSet) directly.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

mod discount;
mod greedy;
mod katz;
mod kshell;
mod paths;
mod spectral;

pub use discount::{degreediscount_select, DegreeDiscountParams};
pub use greedy::{greedy_select, DEFAULT_GREEDY_REPLICATIONS};
pub use katz::{katz_centrality, KatzParams};
pub use kshell::kshell_decomposition;
pub use paths::{betweenness_centrality, closeness_centrality};
pub use spectral::{
    eigenvector_centrality, eigenvector_centrality_with, leaderrank, pagerank, EigenvectorParams,
    PageRankParams,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Degree,
    Katz,
    Closeness,
    Betweenness,
    Eigenvector,
    PageRank,
    LeaderRank,
    KShell,
}

impl Measure {
    pub const ALL: [Measure; 8] = [
        Measure::Degree,
        Measure::Katz,
        Measure::Closeness,
        Measure::Betweenness,
        Measure::Eigenvector,
        Measure::PageRank,
        Measure::LeaderRank,
        Measure::KShell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Degree => "degree",
            Measure::Katz => "katz",
            Measure::Closeness => "closeness",
            Measure::Betweenness => "betweenness",
            Measure::Eigenvector => "eigenvector",
            Measure::PageRank => "pagerank",
            Measure::LeaderRank => "leaderrank",
            Measure::KShell => "kshell",
        }
    }

    /// Runs the measure with its default parameters.
    pub fn compute(self, g: &Graph) -> Result<ScoreVector> {
        match self {
            Measure::Degree => Ok(degree_centrality(g)),
            Measure::Katz => katz_centrality(g, &KatzParams::default()),
            Measure::Closeness => Ok(closeness_centrality(g)),
            Measure::Betweenness => Ok(betweenness_centrality(g)),
            Measure::Eigenvector => eigenvector_centrality(g),
            Measure::PageRank => {
                let p = PageRankParams::default();
                pagerank(g, p.damping, p.tolerance)
            }
            Measure::LeaderRank => leaderrank(g, spectral::DEFAULT_LEADERRANK_TOLERANCE),
            Measure::KShell => Ok(kshell_decomposition(g)),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid(format!("unknown measure {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    measure: Measure,
    scores: Vec<f64>,
    ranking: Vec<NodeId>,
}

impl ScoreVector {
    pub fn new(measure: Measure, scores: Vec<f64>) -> Self {
        let ranking = rank_descending(&scores);
        Self {
            measure,
            scores,
            ranking,
        }
    }

    pub fn measure(&self) -> Measure {
        self.measure
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn score(&self, v: NodeId) -> f64 {
        self.scores[v]
    }

    /// All node ids, best first.
    pub fn ranking(&self) -> &[NodeId] {
        &self.ranking
    }

    pub fn top_k(&self, k: usize) -> &[NodeId] {
        &self.ranking[..k.min(self.ranking.len())]
    }

    /// 1-based rank of every node.
    pub fn ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0; self.ranking.len()];
        for (pos, &v) in self.ranking.iter().enumerate() {
            ranks[v] = pos + 1;
        }
        ranks
    }
}

/// Descending by score, ascending by id on ties. NaN sorts last.
pub(crate) fn rank_descending(scores: &[f64]) -> Vec<NodeId> {
    let mut order: Vec<NodeId> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| compare_desc(scores[a], scores[b]).then(a.cmp(&b)));
    order
}

fn compare_desc(a: f64, b: f64) -> Ordering {
    match (a.is_nan(), b.is_nan()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        (false, false) => b.total_cmp(&a),
    }
}

/// Score = degree (out-degree on directed graphs).
pub fn degree_centrality(g: &Graph) -> ScoreVector {
    let scores = (0..g.node_count()).map(|v| g.out_degree(v) as f64).collect();
    ScoreVector::new(Measure::Degree, scores)
}

/// Nodes by descending degree, ascending id on ties. Counting sort over
/// degree buckets, linear in nodes plus maximum degree.
pub(crate) fn degree_order(g: &Graph) -> Vec<NodeId> {
    let n = g.node_count();
    let max = (0..n).map(|v| g.out_degree(v)).max().unwrap_or(0);
    let mut start = vec![0usize; max + 2];
    for v in 0..n {
        start[max - g.out_degree(v) + 1] += 1;
    }
    for i in 1..start.len() {
        start[i] += start[i - 1];
    }
    let mut order = vec![0; n];
    for v in 0..n {
        let slot = &mut start[max - g.out_degree(v)];
        order[*slot] = v;
        *slot += 1;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{figure1, v};
    use crate::generators::{cycle, gnm, star};

    #[test]
    fn counting_sort_matches_comparison_sort() {
        let g = gnm(300, 900, false, 4).unwrap();
        let mut sorted: Vec<NodeId> = (0..300).collect();
        sorted.sort_by(|&a, &b| g.out_degree(b).cmp(&g.out_degree(a)).then(a.cmp(&b)));
        assert_eq!(degree_order(&g), sorted);
        assert!(degree_order(&Graph::from_edges(0, [], false).unwrap()).is_empty());
    }

    #[test]
    fn degree_top_node_in_figure1() {
        let g = figure1();
        let s = degree_centrality(&g);
        assert_eq!(s.ranking()[0], v(1));
        assert_eq!(s.score(v(1)), 6.0);
    }

    #[test]
    fn regular_graph_ranks_by_id() {
        let s = degree_centrality(&cycle(7));
        assert!(s.scores().iter().all(|&x| x == 2.0));
        assert_eq!(s.ranking(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn star_center_score() {
        let s = degree_centrality(&star(6));
        assert_eq!(s.score(0), 6.0);
        assert_eq!(s.ranking()[0], 0);
    }

    #[test]
    fn ranking_ties_and_nan() {
        let order = rank_descending(&[1.0, f64::NAN, 3.0, 1.0]);
        assert_eq!(order, vec![2, 0, 3, 1]);
        let sv = ScoreVector::new(Measure::Katz, vec![0.5, 2.0, 0.5]);
        assert_eq!(sv.ranks(), vec![2, 1, 3]);
        assert_eq!(sv.top_k(10).len(), 3);
    }

    #[test]
    fn measure_names_round_trip() {
        for m in Measure::ALL {
            assert_eq!(m.name().parse::<Measure>().unwrap(), m);
        }
        assert!("bogus".parse::<Measure>().is_err());
    }
}
