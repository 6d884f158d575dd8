use crate::centrality::{Measure, ScoreVector};
use crate::graph::Graph;

/// Shell index of every node on the undirected view: the round `k` at which
/// repeated removal of nodes with residual degree `<= k` deletes it.
/// Isolated nodes get 0.
///
/// Bucket-queue peeling (Batagelj-Zaversnik), linear in the edge count.
pub fn kshell_decomposition(g: &Graph) -> ScoreVector {
    let n = g.node_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.undirected_neighbors(v).len()).collect();
    let max_deg = degree.iter().copied().max().unwrap_or(0);

    let mut bin = vec![0usize; max_deg + 1];
    for &d in &degree {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut pos = vec![0usize; n];
    let mut vert = vec![0usize; n];
    for v in 0..n {
        pos[v] = bin[degree[v]];
        vert[pos[v]] = v;
        bin[degree[v]] += 1;
    }
    for d in (1..=max_deg).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    for i in 0..n {
        let v = vert[i];
        for &u in g.undirected_neighbors(v) {
            if degree[u] > degree[v] {
                let du = degree[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    vert.swap(pu, pw);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }
    ScoreVector::new(Measure::KShell, degree.into_iter().map(|d| d as f64).collect())
}
