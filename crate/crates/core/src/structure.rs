//! Exact per-vertex link combinatorics: maximum quasi-disjoint edge sets
//! (set packing over the link) and minimum transversals (hitting sets of
//! the link).
//!
//! A set of edges incident to `v` is quasi-disjoint when all pairwise
//! intersections equal `{v}`. A transversal of `v` is a vertex set avoiding
//! `v` that meets every incident edge; deleting it isolates `v`.
//!
//! Both solvers are exact branch-and-bound searches. Link degrees at the
//! scales of interest are logarithmic, so exponential-in-degree search is
//! cheap; a hard degree cap guards against misuse.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::hypergraph::Hypergraph;

/// Hard cap on the link degree accepted by the exact solvers.
pub const MAX_LINK_DEGREE: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("vertex {vertex} has degree {degree}, above the solver cap {MAX_LINK_DEGREE}")]
    DegreeCapExceeded { vertex: u32, degree: u32 },
    #[error("link of vertex {vertex} spans {span} vertices, above the mask width 128")]
    LinkTooWide { vertex: u32, span: usize },
}

/// The link of a vertex: its incident edges with the center removed.
#[derive(Debug, Clone)]
pub struct LinkSystem {
    pub center: u32,
    /// One `(d-1)`-set per incident edge, sorted labels, in edge-id order.
    pub petals: Vec<Vec<u32>>,
    /// Global edge ids matching `petals`.
    pub edge_ids: Vec<u32>,
}

pub fn link_of(h: &Hypergraph, v: u32) -> LinkSystem {
    let slot = h.slot_of(v);
    let mut petals = Vec::new();
    let mut edge_ids: Vec<u32> = h.incident_edges(slot).to_vec();
    edge_ids.sort_unstable();
    for &e in &edge_ids {
        let petal: Vec<u32> = h
            .edge(e as usize)
            .iter()
            .copied()
            .filter(|&w| w != v)
            .collect();
        petals.push(petal);
    }
    LinkSystem {
        center: v,
        petals,
        edge_ids,
    }
}

/// Maximum quasi-disjoint set at `v`: the size together with the
/// lexicographically smallest optimal witness (as ascending edge ids).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiDisjoint {
    pub size: u32,
    pub witness: Vec<u32>,
}

/// Minimum transversal at `v`: the size together with the lexicographically
/// smallest optimal witness (ascending vertex labels, never containing `v`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    pub size: u32,
    pub witness: Vec<u32>,
}

/// Petals as bitmasks over a compacted alphabet of link vertices.
struct MaskedLink {
    masks: Vec<u128>,
    alphabet: Vec<u32>,
}

fn compact(link: &LinkSystem) -> Result<MaskedLink, StructureError> {
    if link.petals.len() > MAX_LINK_DEGREE {
        return Err(StructureError::DegreeCapExceeded {
            vertex: link.center,
            degree: link.petals.len() as u32,
        });
    }
    let mut alphabet: Vec<u32> = link.petals.iter().flatten().copied().collect();
    alphabet.sort_unstable();
    alphabet.dedup();
    if alphabet.len() > 128 {
        return Err(StructureError::LinkTooWide {
            vertex: link.center,
            span: alphabet.len(),
        });
    }
    let masks = link
        .petals
        .iter()
        .map(|p| {
            p.iter()
                .map(|v| 1u128 << alphabet.binary_search(v).unwrap())
                .fold(0u128, |a, b| a | b)
        })
        .collect();
    Ok(MaskedLink { masks, alphabet })
}

pub fn max_quasi_disjoint(h: &Hypergraph, v: u32) -> Result<QuasiDisjoint, StructureError> {
    let link = link_of(h, v);
    let masked = compact(&link)?;
    let (size, picked) = max_packing(&masked.masks);
    let witness = picked.iter().map(|&i| link.edge_ids[i]).collect();
    Ok(QuasiDisjoint {
        size: size as u32,
        witness,
    })
}

/// Include-first depth-first search with strict improvement; visiting order
/// makes the first optimum the lexicographically smallest one.
fn max_packing(masks: &[u128]) -> (usize, Vec<usize>) {
    let mut best: (usize, Vec<usize>) = (0, Vec::new());
    let mut chosen = Vec::new();
    fn rec(
        masks: &[u128],
        i: usize,
        used: u128,
        chosen: &mut Vec<usize>,
        best: &mut (usize, Vec<usize>),
    ) {
        if chosen.len() > best.0 {
            *best = (chosen.len(), chosen.clone());
        }
        if i == masks.len() || chosen.len() + (masks.len() - i) <= best.0 {
            return;
        }
        if masks[i] & used == 0 {
            chosen.push(i);
            rec(masks, i + 1, used | masks[i], chosen, best);
            chosen.pop();
        }
        rec(masks, i + 1, used, chosen, best);
    }
    rec(masks, 0, 0, &mut chosen, &mut best);
    best
}

pub fn min_transversal(h: &Hypergraph, v: u32) -> Result<Transversal, StructureError> {
    let link = link_of(h, v);
    if link.petals.is_empty() {
        return Ok(Transversal {
            size: 0,
            witness: Vec::new(),
        });
    }
    let masked = compact(&link)?;
    let optimum = min_hitting_size(&masked.masks);
    let witness_bits = lex_min_hitting(&masked.masks, optimum).expect("optimum is feasible");
    let witness = witness_bits
        .into_iter()
        .map(|b| masked.alphabet[b])
        .collect();
    Ok(Transversal {
        size: optimum as u32,
        witness,
    })
}

/// Decision variant used as a fast connectivity filter: any transversal of
/// size at most `cap`, or `None`.
pub(crate) fn transversal_at_most(h: &Hypergraph, v: u32, cap: usize) -> Option<Vec<u32>> {
    let link = link_of(h, v);
    if link.petals.is_empty() {
        return Some(Vec::new());
    }
    let masked = compact(&link).ok()?;
    let bits = hitting_within(&masked.masks, cap)?;
    Some(bits.into_iter().map(|b| masked.alphabet[b]).collect())
}

fn greedy_disjoint_count(masks: &[u128], hit: u128) -> usize {
    let mut used = 0u128;
    let mut count = 0;
    for &m in masks {
        if m & hit == 0 && m & used == 0 {
            used |= m;
            count += 1;
        }
    }
    count
}

fn min_hitting_size(masks: &[u128]) -> usize {
    let mut best = masks.len(); // one vertex per petal always suffices
    fn rec(masks: &[u128], hit: u128, depth: usize, best: &mut usize) {
        if depth + greedy_disjoint_count(masks, hit) >= *best {
            return;
        }
        let first = masks.iter().find(|&&m| m & hit == 0);
        let Some(&petal) = first else {
            *best = depth;
            return;
        };
        let mut rest = petal;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            rec(masks, hit | (1u128 << bit), depth + 1, best);
        }
    }
    rec(masks, 0, 0, &mut best);
    best
}

/// Any hitting set with at most `cap` vertices, as alphabet bit indices.
fn hitting_within(masks: &[u128], cap: usize) -> Option<Vec<usize>> {
    fn rec(masks: &[u128], hit: u128, chosen: &mut Vec<usize>, cap: usize) -> bool {
        let first = masks.iter().find(|&&m| m & hit == 0);
        let Some(&petal) = first else {
            return true;
        };
        if chosen.len() == cap {
            return false;
        }
        let mut rest = petal;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            chosen.push(bit);
            if rec(masks, hit | (1u128 << bit), chosen, cap) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    if rec(masks, 0, &mut chosen, cap) {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

/// Exact hitting set of the given size whose sorted bit list is
/// lexicographically smallest: fix the smallest feasible bit at each
/// position, restricting later choices to larger bits.
fn lex_min_hitting(masks: &[u128], size: usize) -> Option<Vec<usize>> {
    fn above(from_bit: usize) -> u128 {
        if from_bit >= 128 {
            0
        } else {
            !((1u128 << from_bit) - 1)
        }
    }
    // does a hitting set of `slots` more vertices exist, all drawn from
    // bits >= min_bit? (branch on the first un-hit petal)
    fn feasible(masks: &[u128], hit: u128, min_bit: usize, slots: usize) -> bool {
        let first = masks.iter().find(|&&m| m & hit == 0);
        let Some(&petal) = first else {
            return true;
        };
        if slots == 0 {
            return false;
        }
        let mut rest = petal & above(min_bit) & !hit;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if feasible(masks, hit | (1u128 << bit), min_bit, slots - 1) {
                return true;
            }
        }
        false
    }
    let width = masks
        .iter()
        .fold(0u128, |a, b| a | b)
        .checked_ilog2()
        .map_or(0, |w| w as usize + 1);
    let mut prefix = Vec::new();
    let mut hit = 0u128;
    let mut from = 0usize;
    for slot in 0..size {
        let start = from;
        let mut placed = false;
        for bit in start..width {
            let candidate = hit | (1u128 << bit);
            if feasible(masks, candidate, bit + 1, size - slot - 1) {
                prefix.push(bit);
                hit = candidate;
                from = bit + 1;
                placed = true;
                break;
            }
        }
        if !placed {
            return None;
        }
    }
    Some(prefix)
}

/// Per-vertex tally of `(max quasi-disjoint size j, excess degree l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiProfile {
    /// `(j, l)` -> number of vertices with maximum quasi-disjoint set of
    /// size `j` and degree `j + l`.
    pub counts: BTreeMap<(u32, u32), u64>,
}

impl QuasiProfile {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Mass at `j <= j_max` with positive excess, the obstruction counted
    /// by the quasi-disjointness experiments.
    pub fn bad_mass(&self, j_max: u32) -> u64 {
        self.counts
            .iter()
            .filter(|&(&(j, l), _)| j <= j_max && l >= 1)
            .map(|(_, &c)| c)
            .sum()
    }

    /// Smallest maximum-quasi-disjoint size among vertices of degree >= `d_min`.
    pub fn min_packing_at_degree(&self, d_min: u32) -> Option<u32> {
        self.counts
            .iter()
            .filter(|&(&(j, l), &c)| c > 0 && j + l >= d_min)
            .map(|(&(j, _), _)| j)
            .min()
    }
}

pub fn quasi_profile(h: &Hypergraph) -> Result<QuasiProfile, StructureError> {
    let results: Result<Vec<(u32, u32)>, StructureError> = h
        .vertices()
        .par_iter()
        .map(|&v| {
            let qd = max_quasi_disjoint(h, v)?;
            let degree = h.degree_of(v);
            Ok((qd.size, degree - qd.size))
        })
        .collect();
    let mut counts = BTreeMap::new();
    for pair in results? {
        *counts.entry(pair).or_insert(0u64) += 1;
    }
    Ok(QuasiProfile { counts })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Link on explicit petals via a throwaway hypergraph centered at 1.
    fn link_fixture(petals: &[&[u32]]) -> Hypergraph {
        let mut edges = Vec::new();
        let mut max_v = 1;
        for p in petals {
            let mut e = vec![1u32];
            e.extend_from_slice(p);
            max_v = max_v.max(*p.iter().max().unwrap());
            edges.push(e);
        }
        Hypergraph::build(max_v, (petals[0].len() + 1) as u32, &edges).unwrap()
    }

    #[test]
    fn packing_examples() {
        // petals {a,b},{c,d} with a,b,c,d = 2,3,4,5
        let h = link_fixture(&[&[2, 3], &[4, 5]]);
        assert_eq!(max_quasi_disjoint(&h, 1).unwrap().size, 2);

        let h = link_fixture(&[&[2, 3], &[3, 4]]);
        assert_eq!(max_quasi_disjoint(&h, 1).unwrap().size, 1);

        // triangle of petals: all pairs intersect
        let h = link_fixture(&[&[2, 3], &[3, 4], &[4, 2]]);
        let qd = max_quasi_disjoint(&h, 1).unwrap();
        assert_eq!(qd.size, 1);
        assert_eq!(qd.witness.len(), 1);
    }

    #[test]
    fn transversal_examples() {
        let h = link_fixture(&[&[2, 3], &[3, 4]]);
        let t = min_transversal(&h, 1).unwrap();
        assert_eq!((t.size, t.witness.clone()), (1, vec![3]));

        let h = link_fixture(&[&[2, 3], &[4, 5]]);
        assert_eq!(min_transversal(&h, 1).unwrap().size, 2);

        // triangle: no singleton hits all three, {2,3} does
        let h = link_fixture(&[&[2, 3], &[3, 4], &[4, 2]]);
        let t = min_transversal(&h, 1).unwrap();
        assert_eq!(t.size, 2);
        assert_eq!(t.witness, vec![2, 3]);
    }

    #[test]
    fn degree_zero_transversal_is_empty() {
        let h = Hypergraph::build(5, 3, &[vec![1, 2, 3]]).unwrap();
        let t = min_transversal(&h, 5).unwrap();
        assert_eq!((t.size, t.witness.len()), (0, 0));
    }

    #[test]
    fn witnesses_are_lex_min() {
        // two optimal packings {0,2} and {1,2}; smaller edge ids win
        let h = link_fixture(&[&[2, 3], &[2, 4], &[5, 6]]);
        let qd = max_quasi_disjoint(&h, 1).unwrap();
        assert_eq!(qd.size, 2);
        assert_eq!(qd.witness, vec![0, 2]);

        // transversal ties broken by smallest labels
        let h = link_fixture(&[&[2, 5], &[3, 5], &[2, 3]]);
        let t = min_transversal(&h, 1).unwrap();
        assert_eq!(t.size, 2);
        assert_eq!(t.witness, vec![2, 3]);
    }

    #[test]
    fn profile_examples() {
        let edgeless = Hypergraph::build(6, 3, &[]).unwrap();
        let p = quasi_profile(&edgeless).unwrap();
        assert_eq!(p.counts, BTreeMap::from([((0, 0), 6)]));
        assert_eq!(p.total(), 6);

        let single = Hypergraph::build(7, 3, &[vec![1, 2, 3]]).unwrap();
        let p = quasi_profile(&single).unwrap();
        assert_eq!(p.counts, BTreeMap::from([((0, 0), 4), ((1, 0), 3)]));

        // vertices 1 and 3 sit in both edges with petals meeting off-center,
        // so both tally at (1, 1)
        let h = Hypergraph::build(5, 3, &[vec![1, 2, 3], vec![1, 3, 4]]).unwrap();
        let qd = max_quasi_disjoint(&h, 1).unwrap();
        assert_eq!((qd.size, h.degree_of(1)), (1, 2));
        let p = quasi_profile(&h).unwrap();
        assert_eq!(
            p.counts,
            BTreeMap::from([((0, 0), 1), ((1, 0), 2), ((1, 1), 2)])
        );
        assert_eq!(p.total(), 5);
    }

    #[test]
    fn degree_cap_enforced() {
        let mut edges = Vec::new();
        for i in 0..33u32 {
            edges.push(vec![1, 2 + 2 * i, 3 + 2 * i]);
        }
        let h = Hypergraph::build(70, 3, &edges).unwrap();
        assert!(matches!(
            max_quasi_disjoint(&h, 1),
            Err(StructureError::DegreeCapExceeded { vertex: 1, .. })
        ));
    }
}
