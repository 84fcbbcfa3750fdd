//! Exact connectivity machinery: components, pairwise separating cuts on
//! the incidence flow network, and k-connectivity under whole-edge vertex
//! deletion.
//!
//! A hypergraph with more than `k` vertices is k-connected when deleting
//! any `k-1` vertices together with all incident edges leaves a connected
//! hypergraph. Deleting a vertex kills every incident edge, so a vertex
//! can disconnect a pair it never sits between on any path; pairwise
//! max-flow over connection vertices is therefore only a one-sided bound.
//! The decision procedure here is exact:
//!
//! 1. cheap necessary filters (components, per-vertex transversals),
//! 2. an offline scan of all single-vertex deletions (segment tree over
//!    the vertex timeline with a rollback union-find),
//! 3. for separator sizes >= 2, complete branching over chain supports
//!    with a disjoint-chain packing bound.
//!
//! Step 3 enumerates, for a fixed pair, vertices of a live connecting
//! chain; every separator must hit each such chain, so the branching is
//! exhaustive while the packing bound prunes almost everything at random
//! scale.

use rayon::prelude::*;
use thiserror::Error;

use crate::combinatorics::{binomial, subsets};
use crate::hypergraph::Hypergraph;
use crate::structure::transversal_at_most;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("scale guard exceeded: needs {required} subset checks, cap {cap}")]
    ScaleGuard { required: u64, cap: u64 },
}

// ---------------------------------------------------------------------------
// union-find
// ---------------------------------------------------------------------------

pub(crate) struct Dsu {
    parent: Vec<u32>,
    size: Vec<u32>,
    pub comps: usize,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            comps: n,
        }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = self.parent[x as usize];
        }
        x
    }

    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.comps -= 1;
        true
    }
}

/// Union-find with an undo trail; no path compression so unions revert in
/// O(1). Used by the offline single-deletion scan.
struct RollbackDsu {
    parent: Vec<u32>,
    size: Vec<u32>,
    comps: usize,
    trail: Vec<u32>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            comps: n,
            trail: Vec::new(),
        }
    }

    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.comps -= 1;
        self.trail.push(rb);
    }

    fn snapshot(&self) -> usize {
        self.trail.len()
    }

    fn rollback(&mut self, to: usize) {
        while self.trail.len() > to {
            let rb = self.trail.pop().unwrap();
            let ra = self.parent[rb as usize];
            self.parent[rb as usize] = rb;
            self.size[ra as usize] -= self.size[rb as usize];
            self.comps += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// components
// ---------------------------------------------------------------------------

/// Disjoint vertex blocks covering the universe; every edge lies within one
/// block and blocks are connectivity-maximal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub blocks: Vec<Vec<u32>>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    pub fn largest_block_size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).max().unwrap_or(0)
    }

    pub fn smallest_block(&self) -> Option<&Vec<u32>> {
        self.blocks.iter().min_by_key(|b| (b.len(), b[0]))
    }
}

pub fn connected_components(h: &Hypergraph) -> ComponentPartition {
    let n = h.vertex_count();
    let mut dsu = Dsu::new(n);
    for eid in 0..h.edge_count() {
        let slots = h.edge_as_slots(eid);
        for w in &slots[1..] {
            dsu.union(slots[0], *w);
        }
    }
    let mut by_root: Vec<Vec<u32>> = vec![Vec::new(); n];
    for s in 0..n {
        let r = dsu.find(s as u32) as usize;
        by_root[r].push(h.label_of(s));
    }
    let mut blocks: Vec<Vec<u32>> = by_root.into_iter().filter(|b| !b.is_empty()).collect();
    blocks.sort_by_key(|b| b[0]);
    ComponentPartition { blocks }
}

pub fn is_connected(h: &Hypergraph) -> bool {
    connected_components(h).count() <= 1
}

// ---------------------------------------------------------------------------
// pairwise separating cut (connection-vertex cut via max flow)
// ---------------------------------------------------------------------------

/// Result of [`min_separating_cut`]: the minimum number of intermediate
/// vertices meeting every `u`-`w` connection path, or `Inseparable` when
/// the pair shares an edge (no set of other connection vertices can break
/// a direct edge).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutValue {
    Finite(u32),
    Inseparable,
}

impl CutValue {
    /// Collapses `Inseparable` to the convention `n - 1` so minima over
    /// pairs are well defined.
    pub fn value_or_max(&self, n: usize) -> u32 {
        match self {
            CutValue::Finite(c) => *c,
            CutValue::Inseparable => n.saturating_sub(1) as u32,
        }
    }
}

struct FlowEdge {
    to: u32,
    cap: u32,
    rev: u32,
}

struct Dinic {
    graph: Vec<Vec<FlowEdge>>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic {
            graph: (0..n).map(|_| Vec::new()).collect(),
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: u32) {
        let rev_from = self.graph[to].len() as u32;
        let rev_to = self.graph[from].len() as u32;
        self.graph[from].push(FlowEdge {
            to: to as u32,
            cap,
            rev: rev_from,
        });
        self.graph[to].push(FlowEdge {
            to: from as u32,
            cap: 0,
            rev: rev_to,
        });
    }

    fn bfs(&self, s: usize, t: usize, level: &mut [i32]) -> bool {
        level.fill(-1);
        level[s] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for e in &self.graph[u] {
                if e.cap > 0 && level[e.to as usize] == -1 {
                    level[e.to as usize] = level[u] + 1;
                    queue.push_back(e.to as usize);
                }
            }
        }
        level[t] != -1
    }

    fn dfs(&mut self, u: usize, t: usize, f: u32, level: &[i32], it: &mut [usize]) -> u32 {
        if u == t {
            return f;
        }
        while it[u] < self.graph[u].len() {
            let i = it[u];
            let (to, cap, rev) = {
                let e = &self.graph[u][i];
                (e.to as usize, e.cap, e.rev as usize)
            };
            if cap > 0 && level[to] == level[u] + 1 {
                let pushed = self.dfs(to, t, f.min(cap), level, it);
                if pushed > 0 {
                    self.graph[u][i].cap -= pushed;
                    self.graph[to][rev].cap += pushed;
                    return pushed;
                }
            }
            it[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let n = self.graph.len();
        let mut flow = 0;
        let mut level = vec![-1; n];
        while flow < limit && self.bfs(s, t, &mut level) {
            let mut it = vec![0usize; n];
            loop {
                let pushed = self.dfs(s, t, limit - flow, &level, &mut it);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }
}

/// Minimum number of vertices (other than `u`, `w`) meeting every
/// connection path between `u` and `w`, by unit-capacity max flow on the
/// split incidence network: internal vertices become capacity-1 arcs,
/// hyperedges become free relay nodes.
pub fn min_separating_cut(h: &Hypergraph, u: u32, w: u32) -> CutValue {
    assert_ne!(u, w);
    let us = h.slot_of(u);
    let ws = h.slot_of(w);
    for &e in h.incident_edges(us) {
        if h.edge_as_slots(e as usize).contains(&(ws as u32)) {
            return CutValue::Inseparable;
        }
    }
    let n = h.vertex_count();
    let m = h.edge_count();
    // node ids: 0 source (u out), 1 sink (w in), then per internal vertex an
    // (in, out) pair, then one node per edge
    let mut internal_id = vec![usize::MAX; n];
    let mut next = 2usize;
    for (s, id) in internal_id.iter_mut().enumerate() {
        if s != us && s != ws {
            *id = next;
            next += 2;
        }
    }
    let edge_base = next;
    let total = edge_base + m;
    let inf = u32::MAX / 2;
    let mut net = Dinic::new(total);
    for (s, &id) in internal_id.iter().enumerate() {
        if s != us && s != ws {
            net.add_edge(id, id + 1, 1);
        }
    }
    for e in 0..m {
        let enode = edge_base + e;
        for &s in h.edge_as_slots(e) {
            let s = s as usize;
            if s == us {
                net.add_edge(0, enode, inf);
            } else if s == ws {
                net.add_edge(enode, 1, inf);
            } else {
                net.add_edge(internal_id[s] + 1, enode, inf);
                net.add_edge(enode, internal_id[s], inf);
            }
        }
    }
    let limit = n.saturating_sub(1) as u32;
    let flow = net.max_flow(0, 1, limit.max(1));
    CutValue::Finite(flow)
}

// ---------------------------------------------------------------------------
// k-connectivity
// ---------------------------------------------------------------------------

/// Certificate that a hypergraph is not k-connected: a separator of size
/// `< k` whose deletion leaves `side` with no edge to the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub separator: Vec<u32>,
    pub side: Vec<u32>,
}

impl CutWitness {
    /// Checks the certificate against the hypergraph by direct edge scan.
    pub fn verify(&self, h: &Hypergraph, k: u32) -> bool {
        if self.separator.len() >= k as usize {
            return false;
        }
        let in_sep = |v: u32| self.separator.binary_search(&v).is_ok();
        let in_side = |v: u32| self.side.binary_search(&v).is_ok();
        if self.side.is_empty() || self.side.iter().any(|&v| in_sep(v)) {
            return false;
        }
        let rest = h.vertex_count() - self.separator.len() - self.side.len();
        if rest == 0 {
            return false;
        }
        for e in h.edges() {
            if e.iter().any(|&v| in_sep(v)) {
                continue; // deleted with the separator
            }
            let touches_side = e.iter().any(|&v| in_side(v));
            let touches_rest = e.iter().any(|&v| !in_side(v) && !in_sep(v));
            if touches_side && touches_rest {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KConnectivity {
    KConnected,
    /// The definition requires more than `k` vertices.
    TooFewVertices,
    Separated(CutWitness),
}

impl KConnectivity {
    pub fn holds(&self) -> bool {
        matches!(self, KConnectivity::KConnected)
    }

    pub fn witness(&self) -> Option<&CutWitness> {
        match self {
            KConnectivity::Separated(w) => Some(w),
            _ => None,
        }
    }
}

fn witness_from_separator(h: &Hypergraph, separator: Vec<u32>) -> CutWitness {
    let g = h.delete_vertices(&separator);
    let parts = connected_components(&g);
    let side = parts
        .smallest_block()
        .expect("separated hypergraph has blocks")
        .clone();
    let mut separator = separator;
    separator.sort_unstable();
    CutWitness { separator, side }
}

/// All slots `v` such that deleting `v` (with incident edges) disconnects
/// the remaining vertices. Offline scan: each edge is alive on the vertex
/// intervals that avoid it; a segment tree over the vertex timeline plus a
/// rollback union-find answers every deletion in one pass.
fn singleton_separators(h: &Hypergraph) -> Vec<usize> {
    let n = h.vertex_count();
    let m = h.edge_count();
    if n < 3 {
        return Vec::new();
    }
    let mut tree: Vec<Vec<u32>> = vec![Vec::new(); 4 * n];
    fn insert(tree: &mut [Vec<u32>], node: usize, lo: usize, hi: usize, a: usize, b: usize, e: u32) {
        if b <= lo || hi <= a {
            return;
        }
        if a <= lo && hi <= b {
            tree[node].push(e);
            return;
        }
        let mid = (lo + hi) / 2;
        insert(tree, 2 * node, lo, mid, a, b, e);
        insert(tree, 2 * node + 1, mid, hi, a, b, e);
    }
    for e in 0..m {
        let slots = h.edge_as_slots(e);
        let mut prev = 0usize;
        for &s in slots {
            insert(&mut tree, 1, 0, n, prev, s as usize, e as u32);
            prev = s as usize + 1;
        }
        insert(&mut tree, 1, 0, n, prev, n, e as u32);
    }
    let mut dsu = RollbackDsu::new(n);
    let mut found = Vec::new();
    fn dfs(
        tree: &[Vec<u32>],
        h: &Hypergraph,
        node: usize,
        lo: usize,
        hi: usize,
        dsu: &mut RollbackDsu,
        found: &mut Vec<usize>,
    ) {
        let snap = dsu.snapshot();
        for &e in &tree[node] {
            let slots = h.edge_as_slots(e as usize);
            for w in &slots[1..] {
                dsu.union(slots[0], *w);
            }
        }
        if hi - lo == 1 {
            // the deleted vertex is its own isolated block
            if dsu.comps - 1 > 1 {
                found.push(lo);
            }
        } else {
            let mid = (lo + hi) / 2;
            dfs(tree, h, 2 * node, lo, mid, dsu, found);
            dfs(tree, h, 2 * node + 1, mid, hi, dsu, found);
        }
        dsu.rollback(snap);
    }
    dfs(&tree, h, 1, 0, n, &mut dsu, &mut found);
    found
}

/// Bounded search for a separator of at most `max_size` vertices that
/// disconnects slots `a` and `b`. Complete: every separator must hit the
/// support of every live connecting chain, so branching over the support
/// of one chain per level enumerates all candidates; a greedy packing of
/// support-disjoint chains prunes branches that can no longer be cut.
struct PairCutSearch<'h> {
    h: &'h Hypergraph,
    a: usize,
    b: usize,
    deleted: Vec<bool>,
    blocked: Vec<bool>,
    v_seen: Vec<u32>,
    e_seen: Vec<u32>,
    parent: Vec<(u32, u32)>,
    epoch: u32,
    queue: Vec<u32>,
}

impl<'h> PairCutSearch<'h> {
    fn new(h: &'h Hypergraph, a: usize, b: usize) -> Self {
        let n = h.vertex_count();
        let m = h.edge_count();
        PairCutSearch {
            h,
            a,
            b,
            deleted: vec![false; n],
            blocked: vec![false; n],
            v_seen: vec![0; n],
            e_seen: vec![0; m],
            parent: vec![(0, 0); n],
            epoch: 0,
            queue: Vec::new(),
        }
    }

    /// BFS over live edges; `use_blocked` additionally avoids the packing
    /// supports. Returns the edge ids of a shortest chain.
    fn find_chain(&mut self, use_blocked: bool) -> Option<Vec<u32>> {
        self.epoch += 1;
        let epoch = self.epoch;
        self.queue.clear();
        self.queue.push(self.a as u32);
        self.v_seen[self.a] = epoch;
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head] as usize;
            head += 1;
            for &e in self.h.incident_edges(v) {
                if self.e_seen[e as usize] == epoch {
                    continue;
                }
                self.e_seen[e as usize] = epoch;
                let slots = self.h.edge_as_slots(e as usize);
                if slots.iter().any(|&s| {
                    self.deleted[s as usize] || (use_blocked && self.blocked[s as usize])
                }) {
                    continue;
                }
                for &w in slots {
                    let w = w as usize;
                    if w == self.b {
                        // reconstruct chain ending with this edge
                        let mut chain = vec![e];
                        let mut cur = v;
                        while cur != self.a {
                            let (pe, pv) = self.parent[cur];
                            chain.push(pe);
                            cur = pv as usize;
                        }
                        return Some(chain);
                    }
                    if self.v_seen[w] != epoch {
                        self.v_seen[w] = epoch;
                        self.parent[w] = (e, v as u32);
                        self.queue.push(w as u32);
                    }
                }
            }
        }
        None
    }

    fn support(&self, chain: &[u32]) -> Vec<usize> {
        let mut supp: Vec<usize> = chain
            .iter()
            .flat_map(|&e| self.h.edge_as_slots(e as usize).iter().copied())
            .map(|s| s as usize)
            .filter(|&s| s != self.a && s != self.b)
            .collect();
        supp.sort_unstable();
        supp.dedup();
        supp
    }

    /// Greedy count of chains with pairwise disjoint supports, capped at
    /// `needed`; an empty-support chain (a direct edge on the pair) counts
    /// as unbounded.
    fn packing_at_least(&mut self, first_supp: &[usize], needed: usize) -> bool {
        if first_supp.is_empty() {
            return true;
        }
        let mut touched: Vec<usize> = first_supp.to_vec();
        for &s in first_supp {
            self.blocked[s] = true;
        }
        let mut count = 1;
        while count < needed {
            match self.find_chain(true) {
                None => break,
                Some(chain) => {
                    let supp = self.support(&chain);
                    if supp.is_empty() {
                        count = needed;
                        break;
                    }
                    for &s in &supp {
                        self.blocked[s] = true;
                    }
                    touched.extend_from_slice(&supp);
                    count += 1;
                }
            }
        }
        for s in touched {
            self.blocked[s] = false;
        }
        count >= needed
    }

    fn search(&mut self, max_size: usize) -> Option<Vec<usize>> {
        let mut deleted_list = Vec::new();
        self.rec(max_size, &mut deleted_list)
    }

    fn rec(&mut self, max_size: usize, deleted_list: &mut Vec<usize>) -> Option<Vec<usize>> {
        let chain = match self.find_chain(false) {
            None => return Some(deleted_list.clone()),
            Some(c) => c,
        };
        if deleted_list.len() == max_size {
            return None;
        }
        let supp = self.support(&chain);
        if supp.is_empty() {
            return None;
        }
        let needed = max_size - deleted_list.len() + 1;
        if self.packing_at_least(&supp, needed) {
            return None;
        }
        for &v in &supp {
            self.deleted[v] = true;
            deleted_list.push(v);
            let found = self.rec(max_size, deleted_list);
            deleted_list.pop();
            self.deleted[v] = false;
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Exact k-connectivity test with a verifying witness on failure.
pub fn is_k_connected(h: &Hypergraph, k: u32) -> KConnectivity {
    assert!(k >= 1, "k-connectivity is defined for k >= 1");
    let n = h.vertex_count();
    if n <= k as usize {
        return KConnectivity::TooFewVertices;
    }
    let parts = connected_components(h);
    if parts.count() > 1 {
        let side = parts.smallest_block().unwrap().clone();
        return KConnectivity::Separated(CutWitness {
            separator: Vec::new(),
            side,
        });
    }
    if k == 1 {
        return KConnectivity::KConnected;
    }
    let s = (k - 1) as usize;

    // a transversal of size < k at any vertex is an isolating separator
    for &v in h.vertices() {
        if let Some(t) = transversal_at_most(h, v, s) {
            debug_assert!(t.len() <= s);
            let mut separator = t;
            separator.sort_unstable();
            return KConnectivity::Separated(CutWitness {
                separator,
                side: vec![v],
            });
        }
    }

    let singles = singleton_separators(h);
    if let Some(&slot) = singles.first() {
        let v = h.label_of(slot);
        return KConnectivity::Separated(witness_from_separator(h, vec![v]));
    }
    if s == 1 {
        return KConnectivity::KConnected;
    }

    // roots: k vertices of smallest degree; any separator misses one
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&slot| (h.degree_slot(slot), slot));
    let roots: Vec<usize> = order.iter().copied().take(k as usize).collect();

    let candidate = (0..n)
        .into_par_iter()
        .filter_map(|u| {
            let mut best: Option<(usize, Vec<usize>)> = None;
            for &r in &roots {
                if r == u {
                    continue;
                }
                let mut engine = PairCutSearch::new(h, r, u);
                if let Some(sep) = engine.search(s) {
                    let mut sep_sorted = sep;
                    sep_sorted.sort_unstable();
                    if best.as_ref().is_none_or(|(_, b)| sep_sorted < *b) {
                        best = Some((u, sep_sorted));
                    }
                }
            }
            best
        })
        .min_by_key(|(u, sep)| (*u, sep.clone()));

    match candidate {
        Some((_, sep_slots)) => {
            let labels: Vec<u32> = sep_slots.iter().map(|&s| h.label_of(s)).collect();
            KConnectivity::Separated(witness_from_separator(h, labels))
        }
        None => KConnectivity::KConnected,
    }
}

/// Literal quantification over all `(k-1)`-subsets; the independent oracle.
pub fn brute_force_is_k_connected(h: &Hypergraph, k: u32) -> Result<bool, ConnectivityError> {
    assert!(k >= 1);
    let n = h.vertex_count();
    if n <= k as usize {
        return Ok(false);
    }
    let cap = 2_000_000u64;
    let required = binomial(n as u64, (k - 1) as u64).unwrap_or(u64::MAX);
    if required > cap {
        return Err(ConnectivityError::ScaleGuard { required, cap });
    }
    let vertices = h.vertices().to_vec();
    for subset in subsets(n, (k - 1) as usize) {
        let s: Vec<u32> = subset.iter().map(|&i| vertices[i]).collect();
        if !is_connected(&h.delete_vertices(&s)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every deletion of `k-1` vertices leaves a component containing
/// all but at most `budget` of the remaining vertices. Exhaustive by
/// design; guarded to small scale. `budget` defaults to `ceil(ln n)`.
pub fn robust_giant_component(
    h: &Hypergraph,
    k: u32,
    budget: Option<u32>,
) -> Result<bool, ConnectivityError> {
    assert!(k >= 1);
    let n = h.vertex_count();
    let budget = budget.unwrap_or_else(|| (n as f64).ln().ceil().max(0.0) as u32) as usize;
    let cap = 200_000u64;
    let required = binomial(n as u64, (k - 1) as u64).unwrap_or(u64::MAX);
    if required > cap {
        return Err(ConnectivityError::ScaleGuard { required, cap });
    }
    if n < (k as usize - 1) + 1 {
        return Ok(false);
    }
    let need = (n - (k as usize - 1)).saturating_sub(budget);
    let all: Vec<Vec<usize>> = subsets(n, (k - 1) as usize).collect();
    let ok = all.par_iter().all(|subset| {
        let mut dsu = Dsu::new(n);
        let in_subset = |slot: u32| subset.binary_search(&(slot as usize)).is_ok();
        for e in 0..h.edge_count() {
            let slots = h.edge_as_slots(e);
            if slots.iter().any(|&s| in_subset(s)) {
                continue;
            }
            for w in &slots[1..] {
                dsu.union(slots[0], *w);
            }
        }
        let mut largest = 0usize;
        let mut sizes = vec![0u32; n];
        for slot in 0..n {
            if in_subset(slot as u32) {
                continue;
            }
            let r = dsu.find(slot as u32) as usize;
            sizes[r] += 1;
            largest = largest.max(sizes[r] as usize);
        }
        largest >= need
    });
    Ok(ok)
}
