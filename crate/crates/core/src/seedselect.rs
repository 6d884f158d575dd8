//! Distance-aware seed selection: DegreeDistance, its threshold-2
//! specialisation, FIDD and SIDD, plus a uniform random baseline and the
//! [`SeedSet`] type every selector returns.
//!
//! All three rules scan nodes by descending degree (ties by ascending id) and
//! consume each candidate exactly once. A candidate `s'` is *near* a seed `v`
//! when `d(s', v) < d_td` on the undirected view. The rules differ in what
//! it takes for a near seed to veto the candidate:
//!
//! | rule           | a near seed `v` rejects `s'` when                |
//! |----------------|---------------------------------------------------|
//! | DegreeDistance | always                                            |
//! | FIDD           | `|CN^(1)(s', v)| >= theta`                        |
//! | SIDD           | `|CN^(1)(s', v)| >= theta` and `inf(v, s') >= beta` |
//!
//! with `inf(v, s') = P(v, s') + sum_{w in CN^(1)(s', v)} P(v, w) P(w, s')`.
//!
//! Nearness is answered from one bounded BFS ball per accepted seed, so a
//! candidate costs a bit test per seed rather than a traversal.

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::centrality::{degree_order, Measure};
use crate::error::{Error, Result};
use crate::graph::{Bfs, Graph, NodeId, View};

/// Every way a seed set can be produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Measure(Measure),
    DegreeDiscount,
    Greedy,
    Random,
    DegreeDistance,
    DegreeDistance2,
    Fidd,
    Sidd,
}

impl Method {
    pub const SELECTORS: [Method; 7] = [
        Method::DegreeDiscount,
        Method::Greedy,
        Method::Random,
        Method::DegreeDistance,
        Method::DegreeDistance2,
        Method::Fidd,
        Method::Sidd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Measure(m) => m.name(),
            Method::DegreeDiscount => "degreediscount",
            Method::Greedy => "greedy",
            Method::Random => "random",
            Method::DegreeDistance => "dd",
            Method::DegreeDistance2 => "dd2",
            Method::Fidd => "fidd",
            Method::Sidd => "sidd",
        }
    }

    pub fn all() -> impl Iterator<Item = Method> {
        Measure::ALL
            .into_iter()
            .map(Method::Measure)
            .chain(Method::SELECTORS)
    }
}

impl From<Measure> for Method {
    fn from(m: Measure) -> Self {
        Method::Measure(m)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("degreedistance") {
            return Ok(Method::DegreeDistance);
        }
        Method::all()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid(format!("unknown method {s:?}")))
    }
}

/// Common-neighbour threshold for FIDD and SIDD.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Theta {
    Fixed(usize),
    /// Network average degree rounded to the nearest integer.
    #[default]
    AverageDegree,
    /// Never reached: the common-neighbour test never vetoes.
    Unbounded,
}

impl Theta {
    /// `None` means unbounded.
    pub fn resolve(self, g: &Graph) -> Option<usize> {
        match self {
            Theta::Fixed(t) => Some(t),
            Theta::AverageDegree => Some(g.average_degree().round() as usize),
            Theta::Unbounded => None,
        }
    }
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theta::Fixed(t) => write!(f, "{t}"),
            Theta::AverageDegree => f.write_str("auto"),
            Theta::Unbounded => f.write_str("inf"),
        }
    }
}

impl FromStr for Theta {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "auto" => Ok(Theta::AverageDegree),
            "inf" => Ok(Theta::Unbounded),
            other => other
                .parse()
                .map(Theta::Fixed)
                .map_err(|_| Error::invalid(format!("theta must be an integer, `auto` or `inf`, got {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelectionConfig {
    pub k: usize,
    pub d_td: usize,
    pub theta: Theta,
    /// SIDD influence threshold.
    pub beta: f64,
    /// Constant pairwise influence `P(v, w)`.
    pub p_pair: f64,
}

impl Default for SelectionConfig {
    fn default() -> Self {
        Self {
            k: 50,
            d_td: 2,
            theta: Theta::AverageDegree,
            beta: 0.01,
            p_pair: 0.01,
        }
    }
}

impl SelectionConfig {
    pub fn with_k(k: usize) -> Self {
        Self {
            k,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::invalid("k must be at least 1"));
        }
        if self.d_td < 2 {
            return Err(Error::invalid(format!("d_td must be at least 2, got {}", self.d_td)));
        }
        if self.beta.is_nan() || self.beta < 0.0 {
            return Err(Error::invalid(format!("beta must be non-negative, got {}", self.beta)));
        }
        if !(0.0..=1.0).contains(&self.p_pair) {
            return Err(Error::invalid(format!(
                "pairwise probability must lie in [0, 1], got {}",
                self.p_pair
            )));
        }
        Ok(())
    }

    /// Distance thresholds above 3 are accepted but have not been studied.
    pub fn is_experimental(&self) -> bool {
        self.d_td > 3
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeedSet {
    pub seeds: Vec<NodeId>,
    pub method: Method,
    pub config: SelectionConfig,
    /// Resolved theta at selection time, `None` if unbounded or unused.
    pub theta_resolved: Option<usize>,
    pub candidates_examined: usize,
}

impl SeedSet {
    pub fn new(method: Method, config: SelectionConfig, seeds: Vec<NodeId>) -> Self {
        let examined = seeds.len();
        Self {
            seeds,
            method,
            config,
            theta_resolved: None,
            candidates_examined: examined,
        }
    }

    pub fn len(&self) -> usize {
        self.seeds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seeds.is_empty()
    }

    pub fn as_slice(&self) -> &[NodeId] {
        &self.seeds
    }

    /// The candidate list ran out before `k` seeds were accepted.
    pub fn is_partial(&self) -> bool {
        self.seeds.len() < self.config.k
    }

    /// Header `# method=.. k=.. d_td=.. theta=.. beta=.. p=..`, then one
    /// original node id per line in selection order.
    pub fn write_text<W: Write>(&self, g: &Graph, mut w: W) -> Result<()> {
        let theta = match self.theta_resolved {
            Some(t) => t.to_string(),
            None => self.config.theta.to_string(),
        };
        writeln!(
            w,
            "# method={} k={} d_td={} theta={} beta={} p={}",
            self.method, self.config.k, self.config.d_td, theta, self.config.beta, self.config.p_pair
        )?;
        for &s in &self.seeds {
            writeln!(w, "{}", g.original_id(s))?;
        }
        Ok(())
    }
}

/// Reads the node list of a seed file written by [`SeedSet::write_text`],
/// mapping original ids back to dense ids.
pub fn read_seed_ids<R: BufRead>(g: &Graph, reader: R) -> Result<Vec<NodeId>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let id: i64 = t.parse().map_err(|_| Error::Parse {
            line: idx + 1,
            message: format!("non-integer seed id {t:?}"),
        })?;
        let node = g.node_for_original(id).ok_or_else(|| Error::Parse {
            line: idx + 1,
            message: format!("seed id {id} is not a node of the graph"),
        })?;
        out.push(node);
    }
    Ok(out)
}

/// Pairwise influence probabilities; constant in this crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfluenceModel {
    pub p: f64,
}

impl Default for InfluenceModel {
    fn default() -> Self {
        Self { p: 0.01 }
    }
}

impl InfluenceModel {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::invalid(format!("influence probability must lie in [0, 1], got {p}")));
        }
        Ok(Self { p })
    }

    pub fn probability(&self, _from: NodeId, _to: NodeId) -> f64 {
        self.p
    }
}

/// Influence of seed `v` over candidate `s_prime`: the direct edge (if any)
/// plus every two-hop route through a common neighbour. With constant `p`
/// this is `p + p^2 |CN|` for adjacent nodes and `p^2 |CN|` otherwise.
pub fn influence_score(g: &Graph, v: NodeId, s_prime: NodeId, model: &InfluenceModel) -> Result<f64> {
    g.check_node(v)?;
    g.check_node(s_prime)?;
    if v == s_prime {
        return Err(Error::invalid("influence of a node over itself is undefined"));
    }
    Ok(influence_unchecked(g, v, s_prime, g.common_neighbor_count(s_prime, v), model))
}

fn influence_unchecked(g: &Graph, v: NodeId, s_prime: NodeId, common: usize, model: &InfluenceModel) -> f64 {
    let two_hop = model.probability(v, s_prime) * model.probability(v, s_prime) * common as f64;
    if g.are_adjacent(v, s_prime, View::Undirected) {
        model.probability(v, s_prime) + two_hop
    } else {
        two_hop
    }
}

/// Ball of radius `d_td - 1` around each accepted seed.
struct NearSeeds {
    radius: usize,
    seeds: Vec<NodeId>,
    balls: Vec<FixedBitSet>,
    bfs: Bfs,
    n: usize,
}

impl NearSeeds {
    fn new(g: &Graph, d_td: usize) -> Self {
        Self {
            radius: d_td - 1,
            seeds: Vec::new(),
            balls: Vec::new(),
            bfs: Bfs::new(g.node_count()),
            n: g.node_count(),
        }
    }

    fn accept(&mut self, g: &Graph, s: NodeId) {
        let mut ball = FixedBitSet::with_capacity(self.n);
        self.bfs.run(g, s, View::Undirected, self.radius, |w, _| {
            ball.insert(w);
            true
        });
        self.seeds.push(s);
        self.balls.push(ball);
    }

    /// Seeds within distance `< d_td` of `candidate`, in selection order.
    fn near(&self, candidate: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.seeds
            .iter()
            .zip(&self.balls)
            .filter(move |(_, ball)| ball.contains(candidate))
            .map(|(&s, _)| s)
    }
}

/// Shared scan: `vetoes(candidate, near_seed)` decides whether one near seed
/// rejects the candidate. The first veto short-circuits.
fn threshold_scan<F>(g: &Graph, config: &SelectionConfig, method: Method, mut vetoes: F) -> Result<SeedSet>
where
    F: FnMut(NodeId, NodeId) -> bool,
{
    config.validate()?;
    let mut near = NearSeeds::new(g, config.d_td);
    let mut examined = 0;
    for candidate in degree_order(g) {
        if near.seeds.len() == config.k {
            break;
        }
        examined += 1;
        let rejected = near.near(candidate).any(|v| vetoes(candidate, v));
        if !rejected {
            near.accept(g, candidate);
        }
    }
    Ok(SeedSet {
        seeds: near.seeds,
        method,
        config: *config,
        theta_resolved: None,
        candidates_examined: examined,
    })
}

/// Highest-degree nodes subject to every pair of seeds being at least
/// `d_td` hops apart.
pub fn degreedistance_select(g: &Graph, config: &SelectionConfig) -> Result<SeedSet> {
    threshold_scan(g, config, Method::DegreeDistance, |_, _| true)
}

/// `d_td = 2` specialisation: take the best remaining candidate, then strike
/// it and its neighbours from the list.
pub fn degreedistance2_select(g: &Graph, k: usize) -> Result<SeedSet> {
    let config = SelectionConfig {
        k,
        d_td: 2,
        ..Default::default()
    };
    config.validate()?;
    let mut struck = FixedBitSet::with_capacity(g.node_count());
    let mut seeds = Vec::with_capacity(k);
    let mut examined = 0;
    for candidate in degree_order(g) {
        if seeds.len() == k {
            break;
        }
        if struck.contains(candidate) {
            continue;
        }
        examined += 1;
        seeds.push(candidate);
        struck.insert(candidate);
        for &w in g.undirected_neighbors(candidate) {
            struck.insert(w);
        }
    }
    Ok(SeedSet {
        seeds,
        method: Method::DegreeDistance2,
        config,
        theta_resolved: None,
        candidates_examined: examined,
    })
}

/// A near seed vetoes only when it shares at least `theta` neighbours with
/// the candidate.
pub fn fidd_select(g: &Graph, config: &SelectionConfig) -> Result<SeedSet> {
    let theta = config.theta.resolve(g);
    let mut set = threshold_scan(g, config, Method::Fidd, |candidate, v| match theta {
        Some(t) => g.has_common_neighbors(candidate, v, t),
        None => false,
    })?;
    set.theta_resolved = theta;
    Ok(set)
}

/// FIDD's veto additionally requires the seed's influence over the
/// candidate to reach `beta`. The score is evaluated per seed, not summed
/// across seeds.
pub fn sidd_select(g: &Graph, config: &SelectionConfig) -> Result<SeedSet> {
    let theta = config.theta.resolve(g);
    let model = InfluenceModel::new(config.p_pair)?;
    let beta = config.beta;
    let mut set = threshold_scan(g, config, Method::Sidd, |candidate, v| {
        let Some(t) = theta else { return false };
        let common = g.common_neighbor_count(candidate, v);
        common >= t && influence_unchecked(g, v, candidate, common, &model) >= beta
    })?;
    set.theta_resolved = theta;
    Ok(set)
}

/// `k` distinct nodes drawn uniformly, reproducible from `seed`.
pub fn random_select(g: &Graph, k: usize, seed: u64) -> Result<SeedSet> {
    let n = g.node_count();
    if k > n {
        return Err(Error::invalid(format!("cannot draw {k} seeds from {n} nodes")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds = rand::seq::index::sample(&mut rng, n, k).into_vec();
    Ok(SeedSet::new(Method::Random, SelectionConfig::with_k(k.max(1)), seeds))
}
