//! Immutable d-uniform hypergraphs with degree tracking and whole-edge
//! vertex-deletion semantics.
//!
//! Deleting a vertex set removes every edge that touches it; the surviving
//! vertex universe is exactly the complement. This is the single most
//! important semantic choice in the crate and is pinned by tests.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use thiserror::Error;

use crate::combinatorics::{binomial, unrank_tuple, RankError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("need n >= d >= 2, got n={n}, d={d}")]
    BadParams { n: u32, d: u32 },
    #[error("edge {edge:?} has {got} vertices, expected {expected}")]
    WrongArity {
        edge: Vec<u32>,
        expected: u32,
        got: u32,
    },
    #[error("edge {edge:?} repeats vertex {vertex}")]
    RepeatedVertex { edge: Vec<u32>, vertex: u32 },
    #[error("vertex {vertex} in edge {edge:?} out of range [1, {n}]")]
    VertexOutOfRange { edge: Vec<u32>, vertex: u32, n: u32 },
    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<u32> },
    #[error("invalid edge rank: {0}")]
    Rank(#[from] RankError),
}

/// Colex comparison of two sorted tuples of equal arity.
fn colex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// A d-uniform hypergraph over an explicit vertex universe.
///
/// Values are immutable after construction and safe to share across
/// threads. Edges are stored sorted in colex order, so equality is
/// edge-set equality regardless of insertion order.
#[derive(Clone)]
pub struct Hypergraph {
    d: u32,
    /// Sorted distinct vertex labels.
    universe: Vec<u32>,
    /// Flattened edges, `d` sorted labels each, edges in colex order.
    edge_verts: Vec<u32>,
    /// Flattened edges as universe slot indices; layout mirrors `edge_verts`.
    edge_slots: Vec<u32>,
    /// Per-slot degree.
    degree: Vec<u32>,
    /// CSR incidence: edge ids per slot.
    inc: Vec<u32>,
    inc_start: Vec<u32>,
}

impl Hypergraph {
    /// Builds a hypergraph on vertex set `[1, n]` from unordered d-tuples.
    pub fn build(n: u32, d: u32, edges: &[Vec<u32>]) -> Result<Self, BuildError> {
        if d < 2 || n < d {
            return Err(BuildError::BadParams { n, d });
        }
        let mut sorted_edges = Vec::with_capacity(edges.len());
        for raw in edges {
            if raw.len() != d as usize {
                return Err(BuildError::WrongArity {
                    edge: raw.clone(),
                    expected: d,
                    got: raw.len() as u32,
                });
            }
            let mut e = raw.clone();
            e.sort_unstable();
            for w in e.windows(2) {
                if w[0] == w[1] {
                    return Err(BuildError::RepeatedVertex {
                        edge: raw.clone(),
                        vertex: w[0],
                    });
                }
            }
            for &v in &e {
                if v == 0 || v > n {
                    return Err(BuildError::VertexOutOfRange {
                        edge: raw.clone(),
                        vertex: v,
                        n,
                    });
                }
            }
            sorted_edges.push(e);
        }
        let universe: Vec<u32> = (1..=n).collect();
        Self::assemble(d, universe, sorted_edges)
    }

    /// Builds a hypergraph on `[1, n]` from colex edge ranks.
    pub fn from_ranks(n: u32, d: u32, ranks: &[u64]) -> Result<Self, BuildError> {
        if d < 2 || n < d {
            return Err(BuildError::BadParams { n, d });
        }
        let mut edges = Vec::with_capacity(ranks.len());
        for &r in ranks {
            edges.push(unrank_tuple(n, d, r)?);
        }
        let universe: Vec<u32> = (1..=n).collect();
        Self::assemble(d, universe, edges)
    }

    /// `edges` must already be sorted tuples with vertices inside `universe`.
    fn assemble(d: u32, universe: Vec<u32>, mut edges: Vec<Vec<u32>>) -> Result<Self, BuildError> {
        edges.sort_unstable_by(|a, b| colex_cmp(a, b));
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(BuildError::DuplicateEdge {
                    edge: w[0].clone(),
                });
            }
        }
        let n = universe.len();
        let m = edges.len();
        let contiguous = n > 0 && (universe[n - 1] - universe[0]) as usize == n - 1;
        let slot_of = |v: u32| -> u32 {
            if contiguous {
                v - universe[0]
            } else {
                universe.binary_search(&v).expect("vertex in universe") as u32
            }
        };
        let mut edge_verts = Vec::with_capacity(m * d as usize);
        let mut edge_slots = Vec::with_capacity(m * d as usize);
        let mut degree = vec![0u32; n];
        for e in &edges {
            for &v in e {
                let s = slot_of(v);
                degree[s as usize] += 1;
                edge_verts.push(v);
                edge_slots.push(s);
            }
        }
        let mut inc_start = vec![0u32; n + 1];
        for &s in &edge_slots {
            inc_start[s as usize + 1] += 1;
        }
        for i in 0..n {
            inc_start[i + 1] += inc_start[i];
        }
        let mut cursor = inc_start.clone();
        let mut inc = vec![0u32; edge_slots.len()];
        for (eid, chunk) in edge_slots.chunks(d as usize).enumerate() {
            for &s in chunk {
                inc[cursor[s as usize] as usize] = eid as u32;
                cursor[s as usize] += 1;
            }
        }
        debug_assert_eq!(
            degree.iter().map(|&x| x as u64).sum::<u64>(),
            d as u64 * m as u64
        );
        Ok(Hypergraph {
            d,
            universe,
            edge_verts,
            edge_slots,
            degree,
            inc,
            inc_start,
        })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Number of vertices in the universe.
    pub fn vertex_count(&self) -> usize {
        self.universe.len()
    }

    /// Number of edges, `e(H)`.
    pub fn edge_count(&self) -> usize {
        self.edge_verts.len() / self.d as usize
    }

    /// Sorted vertex labels.
    pub fn vertices(&self) -> &[u32] {
        &self.universe
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.universe.binary_search(&v).is_ok()
    }

    /// Edge `i` as sorted vertex labels.
    pub fn edge(&self, i: usize) -> &[u32] {
        let d = self.d as usize;
        &self.edge_verts[i * d..(i + 1) * d]
    }

    pub fn edges(&self) -> impl Iterator<Item = &[u32]> {
        self.edge_verts.chunks(self.d as usize)
    }

    pub fn has_edge(&self, edge: &[u32]) -> bool {
        let mut e = edge.to_vec();
        e.sort_unstable();
        let d = self.d as usize;
        let m = self.edge_count();
        if e.len() != d {
            return false;
        }
        (0..m)
            .collect::<Vec<_>>()
            .binary_search_by(|&i| colex_cmp(self.edge(i), &e))
            .is_ok()
    }

    pub fn degree_of(&self, v: u32) -> u32 {
        match self.universe.binary_search(&v) {
            Ok(s) => self.degree[s],
            Err(_) => panic!("vertex {v} not in universe"),
        }
    }

    pub fn min_degree(&self) -> u32 {
        self.degree.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> u32 {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    /// Histogram degree value -> number of vertices; entries sum to the
    /// universe size.
    pub fn degree_profile(&self) -> BTreeMap<u32, u64> {
        let mut hist = BTreeMap::new();
        for &dv in &self.degree {
            *hist.entry(dv).or_insert(0u64) += 1;
        }
        hist
    }

    /// Number of vertices with degree exactly `j`.
    pub fn count_with_degree(&self, j: u32) -> u64 {
        self.degree.iter().filter(|&&dv| dv == j).count() as u64
    }

    /// The hypergraph on `universe \ s` whose edges are exactly the edges
    /// disjoint from `s`. Deleted vertices are not retained as placeholders.
    pub fn delete_vertices(&self, s: &[u32]) -> Hypergraph {
        let mut kill = s.to_vec();
        kill.sort_unstable();
        kill.dedup();
        let keep: Vec<u32> = self
            .universe
            .iter()
            .copied()
            .filter(|v| kill.binary_search(v).is_err())
            .collect();
        let mut edges = Vec::new();
        for e in self.edges() {
            if e.iter().all(|v| kill.binary_search(v).is_err()) {
                edges.push(e.to_vec());
            }
        }
        Hypergraph::assemble(self.d, keep, edges).expect("surviving edges are valid")
    }

    // -- internal accessors for the algorithm modules ------------------------

    pub(crate) fn slot_of(&self, v: u32) -> usize {
        self.universe
            .binary_search(&v)
            .unwrap_or_else(|_| panic!("vertex {v} not in universe"))
    }

    pub(crate) fn label_of(&self, slot: usize) -> u32 {
        self.universe[slot]
    }

    /// Edge `i` as slot indices into the universe.
    pub(crate) fn edge_as_slots(&self, i: usize) -> &[u32] {
        let d = self.d as usize;
        &self.edge_slots[i * d..(i + 1) * d]
    }

    /// Edge ids incident to a slot.
    pub(crate) fn incident_edges(&self, slot: usize) -> &[u32] {
        &self.inc[self.inc_start[slot] as usize..self.inc_start[slot + 1] as usize]
    }

    pub(crate) fn degree_slot(&self, slot: usize) -> u32 {
        self.degree[slot]
    }

    /// Total number of potential edges `C(n, d)` when representible.
    pub fn potential_edges(&self) -> Option<u64> {
        binomial(self.universe.len() as u64, self.d as u64)
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.universe == other.universe && self.edge_verts == other.edge_verts
    }
}

impl Eq for Hypergraph {}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hypergraph")
            .field("d", &self.d)
            .field("vertices", &self.universe.len())
            .field("edges", &self.edge_count())
            .finish()
    }
}
