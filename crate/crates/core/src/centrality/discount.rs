use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::seedselect::{Method, SeedSet, SelectionConfig};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeDiscountParams {
    pub p: f64,
}

impl Default for DegreeDiscountParams {
    fn default() -> Self {
        Self { p: 0.01 }
    }
}

#[derive(Debug, PartialEq)]
struct Entry {
    score: f64,
    node: NodeId,
    version: usize,
}

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.score
            .total_cmp(&other.score)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Greedy pick on the discounted degree
/// `dd(u) = d_u - 2 t_u - (d_u - t_u) t_u p`, where `t_u` counts already
/// selected neighbours of `u` (undirected view).
pub fn degreediscount_select(g: &Graph, k: usize, params: &DegreeDiscountParams) -> Result<SeedSet> {
    let n = g.node_count();
    if k > n {
        return Err(Error::invalid(format!("cannot select {k} seeds from {n} nodes")));
    }
    if !(0.0..=1.0).contains(&params.p) {
        return Err(Error::invalid(format!("discount probability must lie in [0, 1], got {}", params.p)));
    }
    let p = params.p;
    let discounted = |d: f64, t: f64| d - 2.0 * t - (d - t) * t * p;

    let mut selected = vec![false; n];
    let mut chosen_neighbors = vec![0usize; n];
    let mut version = vec![0usize; n];
    let mut heap: BinaryHeap<Entry> = (0..n)
        .map(|v| Entry {
            score: g.out_degree(v) as f64,
            node: v,
            version: 0,
        })
        .collect();

    let mut seeds = Vec::with_capacity(k);
    while seeds.len() < k {
        let Some(top) = heap.pop() else { break };
        if selected[top.node] || top.version != version[top.node] {
            continue;
        }
        let u = top.node;
        selected[u] = true;
        seeds.push(u);
        for &w in g.undirected_neighbors(u) {
            if selected[w] {
                continue;
            }
            chosen_neighbors[w] += 1;
            version[w] += 1;
            heap.push(Entry {
                score: discounted(g.out_degree(w) as f64, chosen_neighbors[w] as f64),
                node: w,
                version: version[w],
            });
        }
    }
    Ok(SeedSet::new(
        Method::DegreeDiscount,
        SelectionConfig::with_k(k.max(1)),
        seeds,
    ))
}
