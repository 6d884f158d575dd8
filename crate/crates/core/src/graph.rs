//! Immutable adjacency storage, edge-list ingestion and the hop-distance
//! primitives (`d(u, v)`, `N^(i)`, `CN^(i)`) shared by every other module.
//!
//! Node ids are dense `0..node_count`, assigned to input labels in order of
//! first appearance. Ascending-id tie-breaks elsewhere therefore follow file
//! order; `original_id` recovers the label for reporting.
//!
//! Directed graphs keep three adjacency tables: out-neighbours, in-neighbours
//! and the symmetrised union. Undirected graphs keep a single symmetric table.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::error::{Error, Result};

pub type NodeId = usize;

/// Which adjacency a distance or neighbourhood query walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum View {
    /// Follow edges as stored: out-edges on directed graphs.
    AsStored,
    /// Ignore direction.
    #[default]
    Undirected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborhoodQueryConfig {
    pub max_radius: usize,
    pub view: View,
}

impl NeighborhoodQueryConfig {
    pub fn new(max_radius: usize, view: View) -> Result<Self> {
        if max_radius == 0 {
            return Err(Error::invalid("neighbourhood radius must be at least 1"));
        }
        Ok(Self { max_radius, view })
    }
}

/// Compressed sparse row adjacency with sorted neighbour lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
}

impl Adjacency {
    fn from_pairs(node_count: usize, pairs: &[(NodeId, NodeId)]) -> Self {
        let mut offsets = vec![0usize; node_count + 1];
        for &(u, _) in pairs {
            offsets[u + 1] += 1;
        }
        for i in 0..node_count {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![0; pairs.len()];
        for &(u, v) in pairs {
            targets[cursor[u]] = v;
            cursor[u] += 1;
        }
        for u in 0..node_count {
            targets[offsets[u]..offsets[u + 1]].sort_unstable();
        }
        Self { offsets, targets }
    }

    #[inline]
    pub(crate) fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Index of the first arc leaving `v` in the flat target array.
    #[inline]
    pub(crate) fn arc_offset(&self, v: NodeId) -> usize {
        self.offsets[v]
    }

    pub(crate) fn arc_count(&self) -> usize {
        self.targets.len()
    }
}

/// Counts reported after ingestion.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadSummary {
    pub lines: usize,
    pub comment_lines: usize,
    pub edges_read: usize,
    pub duplicates_dropped: usize,
    pub self_loops_dropped: usize,
}

#[derive(Debug, Clone)]
pub struct Graph {
    directed: bool,
    edge_count: usize,
    out: Adjacency,
    incoming: Option<Adjacency>,
    symmetric: Option<Adjacency>,
    original_ids: Vec<i64>,
    by_original: HashMap<i64, NodeId>,
}

impl Graph {
    /// Builds a graph over `node_count` nodes. Self-loops and duplicate edges
    /// are dropped; on undirected graphs `(u, v)` and `(v, u)` are the same edge.
    pub fn from_edges<I>(node_count: usize, edges: I, directed: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        Self::from_edges_with_summary(node_count, edges, directed).map(|(g, _)| g)
    }

    pub fn from_edges_with_summary<I>(
        node_count: usize,
        edges: I,
        directed: bool,
    ) -> Result<(Self, LoadSummary)>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut summary = LoadSummary::default();
        let mut pairs = Vec::new();
        for (u, v) in edges {
            summary.edges_read += 1;
            for node in [u, v] {
                if node >= node_count {
                    return Err(Error::NodeOutOfRange { node, node_count });
                }
            }
            if u == v {
                summary.self_loops_dropped += 1;
                continue;
            }
            pairs.push(if directed || u < v { (u, v) } else { (v, u) });
        }
        let before = pairs.len();
        pairs.sort_unstable();
        pairs.dedup();
        summary.duplicates_dropped = before - pairs.len();

        let graph = Self::from_simple_pairs(node_count, pairs, directed, (0..node_count as i64).collect());
        Ok((graph, summary))
    }

    /// `pairs` must be sorted, deduplicated and loop-free.
    fn from_simple_pairs(
        node_count: usize,
        pairs: Vec<(NodeId, NodeId)>,
        directed: bool,
        original_ids: Vec<i64>,
    ) -> Self {
        let edge_count = pairs.len();
        let by_original = original_ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        if directed {
            let out = Adjacency::from_pairs(node_count, &pairs);
            let reversed: Vec<_> = pairs.iter().map(|&(u, v)| (v, u)).collect();
            let incoming = Adjacency::from_pairs(node_count, &reversed);
            let mut both: Vec<_> = pairs
                .iter()
                .flat_map(|&(u, v)| [(u, v), (v, u)])
                .collect();
            both.sort_unstable();
            both.dedup();
            let symmetric = Adjacency::from_pairs(node_count, &both);
            Self {
                directed,
                edge_count,
                out,
                incoming: Some(incoming),
                symmetric: Some(symmetric),
                original_ids,
                by_original,
            }
        } else {
            let both: Vec<_> = pairs
                .iter()
                .flat_map(|&(u, v)| [(u, v), (v, u)])
                .collect();
            Self {
                directed,
                edge_count,
                out: Adjacency::from_pairs(node_count, &both),
                incoming: None,
                symmetric: None,
                original_ids,
                by_original,
            }
        }
    }

    pub fn node_count(&self) -> usize {
        self.original_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Label of `v` in the source data.
    pub fn original_id(&self, v: NodeId) -> i64 {
        self.original_ids[v]
    }

    pub fn node_for_original(&self, id: i64) -> Option<NodeId> {
        self.by_original.get(&id).copied()
    }

    pub fn check_node(&self, v: NodeId) -> Result<()> {
        if v < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: v,
                node_count: self.node_count(),
            })
        }
    }

    /// Neighbour count on undirected graphs, out-degree on directed ones.
    pub fn degree(&self, v: NodeId) -> Result<usize> {
        self.check_node(v)?;
        Ok(self.out_degree(v))
    }

    #[inline]
    pub fn out_degree(&self, v: NodeId) -> usize {
        self.out.neighbors(v).len()
    }

    /// Out-neighbours (all neighbours when undirected), ascending.
    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        self.out.neighbors(v)
    }

    /// In-neighbours, ascending. Equal to `neighbors` on undirected graphs.
    #[inline]
    pub fn in_neighbors(&self, v: NodeId) -> &[NodeId] {
        match &self.incoming {
            Some(adj) => adj.neighbors(v),
            None => self.out.neighbors(v),
        }
    }

    #[inline]
    pub fn neighbors_in(&self, view: View, v: NodeId) -> &[NodeId] {
        match view {
            View::AsStored => self.out.neighbors(v),
            View::Undirected => self.undirected_neighbors(v),
        }
    }

    #[inline]
    pub fn undirected_neighbors(&self, v: NodeId) -> &[NodeId] {
        match &self.symmetric {
            Some(adj) => adj.neighbors(v),
            None => self.out.neighbors(v),
        }
    }

    pub(crate) fn out_adjacency(&self) -> &Adjacency {
        &self.out
    }

    pub fn are_adjacent(&self, u: NodeId, v: NodeId, view: View) -> bool {
        self.neighbors_in(view, u).binary_search(&v).is_ok()
    }

    /// `2m/n` for undirected graphs, `m/n` (mean out-degree) for directed ones.
    pub fn average_degree(&self) -> f64 {
        if self.node_count() == 0 {
            return 0.0;
        }
        let m = self.edge_count as f64;
        let n = self.node_count() as f64;
        if self.directed {
            m / n
        } else {
            2.0 * m / n
        }
    }

    pub fn max_degree(&self) -> usize {
        (0..self.node_count())
            .map(|v| self.out_degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Hop count of a shortest path, `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: NodeId, v: NodeId, view: View) -> Result<Option<usize>> {
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v {
            return Ok(Some(0));
        }
        let mut bfs = Bfs::new(self.node_count());
        let mut found = None;
        bfs.run(self, u, view, usize::MAX, |w, depth| {
            if w == v {
                found = Some(depth);
                false
            } else {
                true
            }
        });
        Ok(found)
    }

    /// `N^(i)(v)`: nodes at distance exactly `i`, ascending.
    pub fn neighbors_at(&self, v: NodeId, radius: usize, view: View) -> Result<Vec<NodeId>> {
        self.check_node(v)?;
        if radius == 0 {
            return Err(Error::invalid("neighbourhood radius must be at least 1"));
        }
        let mut out = Vec::new();
        let mut bfs = Bfs::new(self.node_count());
        bfs.run(self, v, view, radius, |w, depth| {
            if depth == radius {
                out.push(w);
            }
            true
        });
        out.sort_unstable();
        Ok(out)
    }

    /// Shells `N^(1)(v) .. N^(max_radius)(v)`.
    pub fn neighborhood(&self, v: NodeId, config: &NeighborhoodQueryConfig) -> Result<Vec<Vec<NodeId>>> {
        self.check_node(v)?;
        let mut shells = vec![Vec::new(); config.max_radius];
        let mut bfs = Bfs::new(self.node_count());
        bfs.run(self, v, config.view, config.max_radius, |w, depth| {
            if depth > 0 {
                shells[depth - 1].push(w);
            }
            true
        });
        for shell in &mut shells {
            shell.sort_unstable();
        }
        Ok(shells)
    }

    /// `CN^(i)(nodes)`: the intersection of `N^(i)` over every input node.
    pub fn common_neighbors_at(&self, nodes: &[NodeId], radius: usize, view: View) -> Result<Vec<NodeId>> {
        let (&first, rest) = nodes
            .split_first()
            .ok_or_else(|| Error::invalid("common neighbourhood of an empty node set"))?;
        let mut acc = self.neighbors_at(first, radius, view)?;
        for &v in rest {
            if acc.is_empty() {
                self.check_node(v)?;
                continue;
            }
            let shell = self.neighbors_at(v, radius, view)?;
            acc = intersect_sorted(&acc, &shell);
        }
        Ok(acc)
    }

    /// `|CN^(1)(u, v)|` on the undirected view.
    pub fn common_neighbor_count(&self, u: NodeId, v: NodeId) -> usize {
        count_common_sorted(self.undirected_neighbors(u), self.undirected_neighbors(v))
    }

    /// `|CN^(1)(u, v)| >= t`, stopping as soon as the answer is known.
    pub fn has_common_neighbors(&self, u: NodeId, v: NodeId, t: usize) -> bool {
        let (a, b) = (self.undirected_neighbors(u), self.undirected_neighbors(v));
        if t == 0 {
            return true;
        }
        if a.len().min(b.len()) < t {
            return false;
        }
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    if n == t {
                        return true;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        false
    }
}

pub(crate) fn intersect_sorted(a: &[NodeId], b: &[NodeId]) -> Vec<NodeId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn count_common_sorted(a: &[NodeId], b: &[NodeId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Reusable breadth-first search. Only touched entries are reset between runs.
pub(crate) struct Bfs {
    depth: Vec<usize>,
    queue: Vec<NodeId>,
}

impl Bfs {
    pub(crate) fn new(node_count: usize) -> Self {
        Self {
            depth: vec![usize::MAX; node_count],
            queue: Vec::new(),
        }
    }

    /// Visits nodes in BFS order up to `max_depth` hops, the source included
    /// at depth 0. Returning `false` from `visit` stops the search.
    pub(crate) fn run<F>(&mut self, g: &Graph, source: NodeId, view: View, max_depth: usize, mut visit: F)
    where
        F: FnMut(NodeId, usize) -> bool,
    {
        for &v in &self.queue {
            self.depth[v] = usize::MAX;
        }
        self.queue.clear();
        self.depth[source] = 0;
        self.queue.push(source);
        let mut head = 0;
        let mut keep_going = visit(source, 0);
        while keep_going && head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let d = self.depth[u];
            if d >= max_depth {
                continue;
            }
            for &w in g.neighbors_in(view, u) {
                if self.depth[w] == usize::MAX {
                    self.depth[w] = d + 1;
                    self.queue.push(w);
                    if !visit(w, d + 1) {
                        keep_going = false;
                        break;
                    }
                }
            }
        }
    }
}

/// Parses a whitespace-separated edge list. Lines starting with `%` or `#`
/// are comments; tokens after the first two are ignored.
pub fn load_edge_list<R: BufRead>(reader: R, directed: bool) -> Result<(Graph, LoadSummary)> {
    let mut summary = LoadSummary::default();
    let mut raw: Vec<(i64, i64)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        summary.lines += 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('%') || trimmed.starts_with('#') {
            summary.comment_lines += 1;
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let mut endpoint = |which: &str| -> Result<i64> {
            let tok = tokens.next().ok_or_else(|| Error::Parse {
                line: lineno,
                message: format!("missing {which} endpoint"),
            })?;
            tok.parse::<i64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("non-integer token {tok:?}"),
            })
        };
        let u = endpoint("source")?;
        let v = endpoint("target")?;
        raw.push((u, v));
    }
    if raw.is_empty() {
        return Err(Error::EmptyGraph);
    }
    summary.edges_read = raw.len();

    let mut ids: Vec<i64> = Vec::new();
    let mut index: HashMap<i64, NodeId> = HashMap::new();
    let mut intern = |id: i64| {
        *index.entry(id).or_insert_with(|| {
            ids.push(id);
            ids.len() - 1
        })
    };

    let mut pairs = Vec::with_capacity(raw.len());
    for &(a, b) in &raw {
        let (u, v) = (intern(a), intern(b));
        if u == v {
            summary.self_loops_dropped += 1;
            continue;
        }
        pairs.push(if directed || u < v { (u, v) } else { (v, u) });
    }
    drop(raw);
    let before = pairs.len();
    pairs.sort_unstable();
    pairs.dedup();
    summary.duplicates_dropped = before - pairs.len();

    let n = ids.len();
    Ok((Graph::from_simple_pairs(n, pairs, directed, ids), summary))
}

pub fn load_edge_list_file(path: impl AsRef<Path>, directed: bool) -> Result<(Graph, LoadSummary)> {
    let file = File::open(path)?;
    load_edge_list(BufReader::new(file), directed)
}
