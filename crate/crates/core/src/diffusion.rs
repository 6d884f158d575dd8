//! Independent-cascade simulation and Monte Carlo spread estimation.
//!
//! Replication `r` draws from ChaCha8 stream `r` under the master seed, so
//! each cascade is a pure function of `(master_seed, r)` and the estimate is
//! bit-identical for any thread count. Counts are reduced as integers.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ICParams {
    /// Activation probability of every edge attempt.
    pub p: f64,
    pub replications: usize,
    pub master_seed: u64,
}

impl Default for ICParams {
    fn default() -> Self {
        Self {
            p: 0.01,
            replications: 10_000,
            master_seed: 0,
        }
    }
}

impl ICParams {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::invalid(format!("edge probability must lie in [0, 1], got {}", self.p)));
        }
        if self.replications == 0 {
            return Err(Error::invalid("at least one replication is required"));
        }
        Ok(())
    }
}

/// Seed-inclusive activated-node statistics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpreadEstimate {
    pub mean: f64,
    /// Sample standard deviation across replications.
    pub stddev: f64,
    pub replications: usize,
}

impl SpreadEstimate {
    pub fn standard_error(&self) -> f64 {
        self.stddev / (self.replications as f64).sqrt()
    }

    fn from_sums(sum: u64, sum_sq: u128, replications: usize) -> Self {
        let r = replications as u128;
        let mean = sum as f64 / replications as f64;
        let stddev = if replications > 1 {
            // r * sum_sq - sum^2 is exact in integers and never negative
            let num = r * sum_sq - (sum as u128) * (sum as u128);
            (num as f64 / (r * (r - 1)) as f64).sqrt()
        } else {
            0.0
        };
        Self {
            mean,
            stddev,
            replications,
        }
    }
}

/// The RNG stream used by replication `r`.
pub fn replication_rng(master_seed: u64, r: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(r);
    rng
}

/// Reusable cascade state: an epoch-stamped activation mark and a FIFO.
pub(crate) struct Cascade {
    stamp: Vec<u32>,
    epoch: u32,
    queue: Vec<NodeId>,
}

impl Cascade {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            stamp: vec![0; n],
            epoch: 0,
            queue: Vec::new(),
        }
    }

    fn reset(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.queue.clear();
    }

    #[inline]
    fn activate(&mut self, v: NodeId) -> bool {
        if self.stamp[v] == self.epoch {
            false
        } else {
            self.stamp[v] = self.epoch;
            self.queue.push(v);
            true
        }
    }

    /// Runs one cascade; `attempt(arc, target)` decides each activation try.
    /// Active nodes are expanded in activation order and try their inactive
    /// out-neighbours in ascending id order.
    fn run<F>(&mut self, g: &Graph, seeds: &[NodeId], mut attempt: F) -> &[NodeId]
    where
        F: FnMut(usize) -> bool,
    {
        self.reset();
        for &s in seeds {
            self.activate(s);
        }
        let adj = g.out_adjacency();
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let base = adj.arc_offset(u);
            for (i, &w) in adj.neighbors(u).iter().enumerate() {
                if self.stamp[w] != self.epoch && attempt(base + i) {
                    self.activate(w);
                }
            }
        }
        &self.queue
    }
}

fn check_seeds(g: &Graph, seeds: &[NodeId]) -> Result<()> {
    seeds.iter().try_for_each(|&s| g.check_node(s))
}

/// One cascade. Every active node makes a single Bernoulli(`p`) attempt on
/// each out-neighbour that is still inactive when its turn comes. Returns the
/// active set in activation order, seeds first.
pub fn simulate_once<R: RngCore + ?Sized>(g: &Graph, seeds: &[NodeId], p: f64, rng: &mut R) -> Result<Vec<NodeId>> {
    check_seeds(g, seeds)?;
    let mut cascade = Cascade::new(g.node_count());
    Ok(cascade.run(g, seeds, |_| rng.random::<f64>() < p).to_vec())
}

/// Live-edge form of the cascade: arc `a` (index into the out-adjacency, see
/// [`arc_index`]) transmits iff `uniforms[a] < p`. Reusing one `uniforms`
/// vector couples runs across `p` and seed sets.
pub fn simulate_with_uniforms(g: &Graph, seeds: &[NodeId], p: f64, uniforms: &[f64]) -> Result<Vec<NodeId>> {
    check_seeds(g, seeds)?;
    if uniforms.len() != arc_count(g) {
        return Err(Error::invalid(format!(
            "expected {} arc uniforms, got {}",
            arc_count(g),
            uniforms.len()
        )));
    }
    let mut cascade = Cascade::new(g.node_count());
    Ok(cascade.run(g, seeds, |a| uniforms[a] < p).to_vec())
}

/// Number of stored arcs: `m` on directed graphs, `2m` on undirected ones.
pub fn arc_count(g: &Graph) -> usize {
    g.out_adjacency().arc_count()
}

/// Index of arc `u -> w`, if it exists.
pub fn arc_index(g: &Graph, u: NodeId, w: NodeId) -> Option<usize> {
    let adj = g.out_adjacency();
    adj.neighbors(u)
        .binary_search(&w)
        .ok()
        .map(|i| adj.arc_offset(u) + i)
}

/// Mean and standard deviation of the activated count over
/// `params.replications` independent cascades.
pub fn estimate_spread(g: &Graph, seeds: &[NodeId], params: &ICParams) -> Result<SpreadEstimate> {
    params.validate()?;
    check_seeds(g, seeds)?;
    let n = g.node_count();
    let p = params.p;
    let (sum, sum_sq) = (0..params.replications as u64)
        .into_par_iter()
        .map_init(
            || Cascade::new(n),
            |cascade, r| {
                let mut rng = replication_rng(params.master_seed, r);
                let count = cascade.run(g, seeds, |_| rng.random::<f64>() < p).len() as u64;
                (count, (count as u128) * (count as u128))
            },
        )
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(SpreadEstimate::from_sums(sum, sum_sq, params.replications))
}

/// A fixed sample of live-edge worlds: in world `r` every arc is live
/// independently with probability `p`, drawn from stream `r`. Spread
/// estimated on a fixed sample is an average of reachability counts, hence
/// monotone and submodular in the seed set.
pub(crate) struct LiveEdgeSample {
    worlds: Vec<fixedbitset::FixedBitSet>,
}

impl LiveEdgeSample {
    pub(crate) fn draw(g: &Graph, p: f64, replications: usize, master_seed: u64) -> Self {
        let arcs = arc_count(g);
        let worlds = (0..replications as u64)
            .into_par_iter()
            .map(|r| {
                let mut rng = replication_rng(master_seed, r);
                let mut live = fixedbitset::FixedBitSet::with_capacity(arcs);
                for a in 0..arcs {
                    if rng.random::<f64>() < p {
                        live.insert(a);
                    }
                }
                live
            })
            .collect();
        Self { worlds }
    }

    pub(crate) fn len(&self) -> usize {
        self.worlds.len()
    }

    pub(crate) fn world(&self, r: usize) -> &fixedbitset::FixedBitSet {
        &self.worlds[r]
    }
}

/// Nodes reachable from `source` through live arcs, skipping anything
/// already in `covered`. Returns the newly reached nodes.
pub(crate) fn live_reach_new(
    g: &Graph,
    live: &fixedbitset::FixedBitSet,
    source: NodeId,
    covered: &fixedbitset::FixedBitSet,
    cascade: &mut Cascade,
) -> usize {
    if covered.contains(source) {
        return 0;
    }
    cascade.reset();
    cascade.activate(source);
    let adj = g.out_adjacency();
    let mut head = 0;
    while head < cascade.queue.len() {
        let u = cascade.queue[head];
        head += 1;
        let base = adj.arc_offset(u);
        for (i, &w) in adj.neighbors(u).iter().enumerate() {
            if live.contains(base + i) && !covered.contains(w) {
                cascade.activate(w);
            }
        }
    }
    cascade.queue.len()
}

/// Marks everything `live_reach_new` would report as covered.
pub(crate) fn live_cover(
    g: &Graph,
    live: &fixedbitset::FixedBitSet,
    source: NodeId,
    covered: &mut fixedbitset::FixedBitSet,
    cascade: &mut Cascade,
) {
    live_reach_new(g, live, source, covered, cascade);
    for &v in &cascade.queue {
        covered.insert(v);
    }
    cascade.queue.clear();
}
