//! Samplers for the uniform fixed-count model, the independent-inclusion
//! model, and the sequential edge process, plus stopping-time extraction.
//!
//! Randomness: ChaCha8 keyed from the master seed (via the standard
//! SplitMix64 expansion of `seed_from_u64`) with the trial index as the
//! stream nonce, so every trial owns an independent, reproducible stream
//! regardless of scheduling order.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::combinatorics::{binomial, EdgeKey};
use crate::connectivity::{is_k_connected, Dsu, KConnectivity};
use crate::hypergraph::{BuildError, Hypergraph};

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("edge count {m} out of range [0, {max}]")]
    EdgeCountOutOfRange { m: u64, max: u64 },
    #[error("probability {p} out of [0, 1]")]
    ProbabilityOutOfRange { p: f64 },
    #[error("potential edge count C({n},{d}) does not fit in u64")]
    TooManyPotentialEdges { n: u32, d: u32 },
    #[error("need n > k >= 1 and d >= 2, got n={n}, d={d}, k={k}")]
    BadProcessParams { n: u32, d: u32, k: u32 },
    #[error("event {event:?} unreachable: process exhausted after {steps} steps")]
    UnreachableEvent { event: String, steps: u64 },
    #[error("sequence repeats edge {edge:?}")]
    DuplicateSequenceEdge { edge: Vec<u32> },
    #[error(transparent)]
    Build(#[from] BuildError),
}

/// Derivation of one trial's generator from the experiment master seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed {
    pub master: u64,
    pub trial_index: u64,
}

impl Seed {
    pub fn new(master: u64, trial_index: u64) -> Self {
        Seed {
            master,
            trial_index,
        }
    }

    /// Fresh generator for this trial; distinct trial indices select
    /// distinct ChaCha streams under the same key.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(self.trial_index);
        rng
    }
}

fn potential_edges(n: u32, d: u32) -> Result<u64, ModelError> {
    binomial(n as u64, d as u64).ok_or(ModelError::TooManyPotentialEdges { n, d })
}

/// Uniform sample of exactly `m` distinct edges (Floyd's algorithm over
/// colex ranks).
pub fn sample_gnm(n: u32, d: u32, m: u64, seed: Seed) -> Result<Hypergraph, ModelError> {
    let total = potential_edges(n, d)?;
    if m > total {
        return Err(ModelError::EdgeCountOutOfRange { m, max: total });
    }
    let mut rng = seed.rng();
    let mut chosen: HashSet<u64> = HashSet::with_capacity(m as usize);
    for j in total - m..total {
        let t = rng.gen_range(0..=j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    let mut ranks: Vec<u64> = chosen.into_iter().collect();
    ranks.sort_unstable();
    Ok(Hypergraph::from_ranks(n, d, &ranks)?)
}

/// Each potential edge independently present with probability `p`,
/// sampled by geometric skipping over colex ranks so the cost is
/// proportional to the number of edges drawn, not to `C(n,d)`.
pub fn sample_gnp(n: u32, d: u32, p: f64, seed: Seed) -> Result<Hypergraph, ModelError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(ModelError::ProbabilityOutOfRange { p });
    }
    let total = potential_edges(n, d)?;
    if p == 0.0 {
        return Ok(Hypergraph::from_ranks(n, d, &[])?);
    }
    if p == 1.0 {
        let ranks: Vec<u64> = (0..total).collect();
        return Ok(Hypergraph::from_ranks(n, d, &ranks)?);
    }
    let mut rng = seed.rng();
    let ln_q = (-p).ln_1p(); // ln(1 - p) < 0
    let mut ranks = Vec::new();
    let mut cur: u64 = 0;
    loop {
        let u: f64 = rng.gen();
        let skip = ((1.0 - u).ln() / ln_q).floor();
        if !skip.is_finite() || skip >= (total - cur) as f64 {
            break;
        }
        cur += skip as u64;
        ranks.push(cur);
        cur += 1;
        if cur >= total {
            break;
        }
    }
    Ok(Hypergraph::from_ranks(n, d, &ranks)?)
}

/// Lazy sequence of distinct uniform edges: the first `t` emitted edges
/// are distributed as the first `t` steps of the sequential process.
/// Rejection sampling against the seen set is exact because conditioning
/// a uniform edge on being new is precisely the process step.
pub struct EdgeStream {
    rng: ChaCha8Rng,
    n: u32,
    d: u32,
    total: u64,
    seen: HashSet<u64>,
    emitted: u64,
}

impl EdgeStream {
    pub fn remaining(&self) -> u64 {
        self.total - self.emitted
    }
}

impl Iterator for EdgeStream {
    type Item = EdgeKey;

    fn next(&mut self) -> Option<EdgeKey> {
        if self.emitted == self.total {
            return None;
        }
        loop {
            let r = self.rng.gen_range(0..self.total);
            if self.seen.insert(r) {
                self.emitted += 1;
                return Some(EdgeKey::from_rank(self.n, self.d, r).expect("rank in range"));
            }
        }
    }
}

pub fn process_stream(n: u32, d: u32, seed: Seed) -> Result<EdgeStream, ModelError> {
    let total = potential_edges(n, d)?;
    Ok(EdgeStream {
        rng: seed.rng(),
        n,
        d,
        total,
        seen: HashSet::new(),
        emitted: 0,
    })
}

/// A materialized prefix of the edge process with its recorded stopping
/// steps: for each `j <= k`, the first step with minimum degree `j` and
/// the first step at which the hypergraph is j-connected.
#[derive(Debug, Clone)]
pub struct ProcessTrace {
    pub n: u32,
    pub d: u32,
    pub k: u32,
    /// Edges in arrival order, each sorted ascending.
    pub prefix: Vec<Vec<u32>>,
    min_degree_steps: Vec<u64>,
    connectivity_steps: Vec<u64>,
}

impl ProcessTrace {
    /// First step at which every vertex has degree at least `j` (1-based).
    pub fn min_degree_time(&self, j: u32) -> u64 {
        self.min_degree_steps[(j - 1) as usize]
    }

    /// First step at which the hypergraph is j-connected.
    pub fn connectivity_time(&self, j: u32) -> u64 {
        self.connectivity_steps[(j - 1) as usize]
    }

    pub fn gap(&self, j: u32) -> u64 {
        self.connectivity_time(j) - self.min_degree_time(j)
    }

    /// The hypergraph after the first `step` edges.
    pub fn hypergraph_at(&self, step: u64) -> Hypergraph {
        Hypergraph::build(self.n, self.d, &self.prefix[..step as usize])
            .expect("prefix edges are valid")
    }

    /// Named stopping events, for reports.
    pub fn events(&self) -> BTreeMap<String, u64> {
        let mut map = BTreeMap::new();
        for j in 1..=self.k {
            map.insert(format!("min-degree >= {j}"), self.min_degree_time(j));
            map.insert(format!("{j}-connected"), self.connectivity_time(j));
        }
        map
    }
}

/// Bridge filter for a cached cut witness: a new edge can only flip the
/// verdict if it avoids the separator and meets both sides.
struct CachedWitness {
    /// 0 = separator, 1 = witness side, 2 = rest; indexed by label - 1.
    side_of: Vec<u8>,
}

impl CachedWitness {
    fn from_witness(n: u32, w: &crate::connectivity::CutWitness) -> Self {
        let mut side_of = vec![2u8; n as usize];
        for &v in &w.separator {
            side_of[(v - 1) as usize] = 0;
        }
        for &v in &w.side {
            side_of[(v - 1) as usize] = 1;
        }
        CachedWitness { side_of }
    }

    fn bridged_by(&self, edge: &[u32]) -> bool {
        let mut meets_side = false;
        let mut meets_rest = false;
        for &v in edge {
            match self.side_of[(v - 1) as usize] {
                0 => return false,
                1 => meets_side = true,
                _ => meets_rest = true,
            }
        }
        meets_side && meets_rest
    }
}

/// Runs the process from `seed` until all stopping events for `j <= k`
/// are recorded.
pub fn stopping_times(n: u32, d: u32, k: u32, seed: Seed) -> Result<ProcessTrace, ModelError> {
    if k < 1 || n <= k || d < 2 {
        return Err(ModelError::BadProcessParams { n, d, k });
    }
    let stream = process_stream(n, d, seed)?;
    drive_process(n, d, k, stream.map(|e| e.vertices().to_vec()), false)
}

/// Same extraction over an explicit edge sequence; used by exhaustive
/// small-case enumeration.
pub fn stopping_times_for_sequence<I>(n: u32, d: u32, k: u32, edges: I) -> Result<ProcessTrace, ModelError>
where
    I: IntoIterator<Item = Vec<u32>>,
{
    if k < 1 || n <= k || d < 2 {
        return Err(ModelError::BadProcessParams { n, d, k });
    }
    drive_process(n, d, k, edges.into_iter(), true)
}

fn drive_process<I>(
    n: u32,
    d: u32,
    k: u32,
    edges: I,
    validate: bool,
) -> Result<ProcessTrace, ModelError>
where
    I: Iterator<Item = Vec<u32>>,
{
    let nn = n as usize;
    let kk = k as usize;
    let mut degree = vec![0u32; nn];
    // count of vertices with degree < j, per j in 1..=k
    let mut below: Vec<u64> = vec![n as u64; kk];
    let mut tau: Vec<Option<u64>> = vec![None; kk];
    let mut t_conn: Vec<Option<u64>> = vec![None; kk];
    let mut dsu = Dsu::new(nn);
    let mut prefix: Vec<Vec<u32>> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut cached: Option<CachedWitness> = None;
    let mut step: u64 = 0;

    for raw in edges {
        step += 1;
        let mut edge = raw;
        edge.sort_unstable();
        if validate {
            if edge.len() != d as usize {
                return Err(ModelError::Build(BuildError::WrongArity {
                    edge: edge.clone(),
                    expected: d,
                    got: edge.len() as u32,
                }));
            }
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(ModelError::Build(BuildError::RepeatedVertex {
                    edge: edge.clone(),
                    vertex: w[0],
                }));
            }
            if let Some(&v) = edge.iter().find(|&&v| v == 0 || v > n) {
                return Err(ModelError::Build(BuildError::VertexOutOfRange {
                    edge: edge.clone(),
                    vertex: v,
                    n,
                }));
            }
            if !seen.insert(edge.clone()) {
                return Err(ModelError::DuplicateSequenceEdge { edge });
            }
        }
        for &v in &edge {
            let idx = (v - 1) as usize;
            let crossed = degree[idx] + 1;
            degree[idx] = crossed;
            if crossed <= k {
                below[(crossed - 1) as usize] -= 1;
            }
        }
        for j in 0..kk {
            if tau[j].is_none() && below[j] == 0 {
                tau[j] = Some(step);
            }
        }
        for w in &edge[1..] {
            dsu.union(edge[0] - 1, *w - 1);
        }
        prefix.push(edge);
        if t_conn[0].is_none() && dsu.comps == 1 {
            t_conn[0] = Some(step);
        }

        // test the smallest unfinished connectivity level, re-testing only
        // when the cached witness has been bridged
        loop {
            let j = match t_conn.iter().position(|t| t.is_none()) {
                None => break,
                Some(idx) => idx + 1,
            };
            if j == 1 {
                break; // level 1 is tracked incrementally by the union-find
            }
            let Some(tau_j) = tau[j - 1] else { break };
            if step < tau_j || t_conn[j - 2].is_none() {
                break;
            }
            let run_test = match &cached {
                None => true,
                Some(w) => w.bridged_by(prefix.last().unwrap()),
            };
            if !run_test {
                break;
            }
            let h = Hypergraph::build(n, d, &prefix)?;
            match is_k_connected(&h, j as u32) {
                KConnectivity::KConnected => {
                    t_conn[j - 1] = Some(step);
                    cached = None;
                    // fall through: the next level may hold at this step too
                }
                KConnectivity::Separated(w) => {
                    cached = Some(CachedWitness::from_witness(n, &w));
                    break;
                }
                KConnectivity::TooFewVertices => {
                    unreachable!("n > k >= j")
                }
            }
        }

        if t_conn[kk - 1].is_some() {
            break;
        }
    }

    if let Some(j) = tau.iter().position(|t| t.is_none()) {
        return Err(ModelError::UnreachableEvent {
            event: format!("min-degree >= {}", j + 1),
            steps: step,
        });
    }
    if let Some(j) = t_conn.iter().position(|t| t.is_none()) {
        return Err(ModelError::UnreachableEvent {
            event: format!("{}-connected", j + 1),
            steps: step,
        });
    }
    Ok(ProcessTrace {
        n,
        d,
        k,
        prefix,
        min_degree_steps: tau.into_iter().map(Option::unwrap).collect(),
        connectivity_steps: t_conn.into_iter().map(Option::unwrap).collect(),
    })
}
