//! Evaluation arithmetic for seed sets: overlap between two selections,
//! neighbourhood redundancy within one, reach, and linear correlation.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Bfs, Graph, NodeId, View};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapReport {
    pub k: usize,
    pub com_percent: f64,
}

/// Percentage of shared nodes between the top-`k` prefixes of two seed lists.
pub fn com_overlap(s1: &[NodeId], s2: &[NodeId], k: usize) -> Result<OverlapReport> {
    if k == 0 {
        return Err(Error::invalid("overlap needs k >= 1"));
    }
    if s1.len() < k || s2.len() < k {
        return Err(Error::invalid(format!(
            "overlap at k={k} needs both seed lists that long, got {} and {}",
            s1.len(),
            s2.len()
        )));
    }
    let mut a = s1[..k].to_vec();
    a.sort_unstable();
    a.dedup();
    let shared = {
        let mut b = s2[..k].to_vec();
        b.sort_unstable();
        b.dedup();
        crate::graph::count_common_sorted(&a, &b)
    };
    Ok(OverlapReport {
        k,
        com_percent: 100.0 * shared as f64 / k as f64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageReport {
    /// Sum over seeds of the one- and two-hop neighbourhood size.
    pub total: usize,
    /// Size of the union of those neighbourhoods.
    pub unique: usize,
    pub cov_percent: f64,
    /// Every seed is isolated, so `total` is zero and the rate is reported as 0.
    pub degenerate: bool,
}

impl CoverageReport {
    pub fn from_counts(total: usize, unique: usize) -> Result<Self> {
        if unique > total {
            return Err(Error::invalid(format!("unique count {unique} exceeds total {total}")));
        }
        if total == 0 {
            return Ok(Self {
                total,
                unique,
                cov_percent: 0.0,
                degenerate: true,
            });
        }
        Ok(Self {
            total,
            unique,
            cov_percent: 100.0 - (unique as f64 / total as f64) * 100.0,
            degenerate: false,
        })
    }
}

/// Calls `f` on every node at distance 1 or 2 from `s` (undirected view).
fn for_each_two_hop(g: &Graph, bfs: &mut Bfs, s: NodeId, mut f: impl FnMut(NodeId)) {
    bfs.run(g, s, View::Undirected, 2, |v, depth| {
        if depth > 0 {
            f(v);
        }
        true
    });
}

/// Redundancy among the top-`k` seeds' two-hop neighbourhoods. A seed is not
/// its own neighbour, but other seeds within two hops are counted.
pub fn cn12_coverage(g: &Graph, seeds: &[NodeId], k: usize) -> Result<CoverageReport> {
    if seeds.len() < k {
        return Err(Error::invalid(format!("coverage at k={k} needs that many seeds, got {}", seeds.len())));
    }
    let mut bfs = Bfs::new(g.node_count());
    let mut union = FixedBitSet::with_capacity(g.node_count());
    let mut total = 0;
    for &s in &seeds[..k] {
        g.check_node(s)?;
        for_each_two_hop(g, &mut bfs, s, |v| {
            total += 1;
            union.insert(v);
        });
    }
    CoverageReport::from_counts(total, union.count_ones(..))
}

/// Percentage of all nodes lying within two hops of some seed, seeds
/// themselves excluded unless another seed reaches them.
pub fn unique_influenced_percent(g: &Graph, seeds: &[NodeId]) -> Result<f64> {
    if seeds.is_empty() {
        return Err(Error::invalid("reach needs at least one seed"));
    }
    let mut bfs = Bfs::new(g.node_count());
    let mut union = FixedBitSet::with_capacity(g.node_count());
    for &s in seeds {
        g.check_node(s)?;
        for_each_two_hop(g, &mut bfs, s, |v| union.insert(v));
    }
    Ok(100.0 * union.count_ones(..) as f64 / g.node_count() as f64)
}

/// Sample Pearson correlation coefficient.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::invalid(format!("length mismatch: {} vs {}", x.len(), y.len())));
    }
    if x.len() < 2 {
        return Err(Error::UndefinedCorrelation("fewer than two observations"));
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::UndefinedCorrelation("zero variance"));
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Per-node score for a selector: `k - rank` for the seed at 0-based `rank`
/// among the first `k`, 0 elsewhere.
pub fn rank_surrogate(node_count: usize, seeds: &[NodeId], k: usize) -> Vec<f64> {
    let mut scores = vec![0.0; node_count];
    for (rank, &s) in seeds.iter().take(k).enumerate() {
        scores[s] = (k - rank) as f64;
    }
    scores
}
