//! Binomial coefficients and colexicographic ranking of d-subsets.
//!
//! Every potential edge of a d-uniform hypergraph on `[n]` is identified by
//! its colex rank in `[0, C(n,d))`. Colex ranks do not depend on `n`, so the
//! identity of an edge is stable when the vertex set grows.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RankError {
    #[error("binomial coefficient C({n},{k}) overflows u64")]
    Overflow { n: u64, k: u64 },
    #[error("tuple {tuple:?} is not strictly increasing")]
    NotIncreasing { tuple: Vec<u32> },
    #[error("vertex {vertex} out of range [1, {n}]")]
    VertexOutOfRange { vertex: u32, n: u32 },
    #[error("rank {rank} out of range [0, {count})")]
    RankOutOfRange { rank: u64, count: u64 },
}

/// C(n, k) with exact integer arithmetic, `None` on u64 overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k {
        // exact at every step: result * (n-k+i) is divisible by i
        result = result.checked_mul((n - k + i) as u128)? / i as u128;
        if result > u64::MAX as u128 {
            return None;
        }
    }
    Some(result as u64)
}

/// C(n, k), panicking on overflow. For the small fixed arguments used in
/// hot paths where the caller has already validated scale.
pub(crate) fn binomial_exact(n: u64, k: u64) -> u64 {
    binomial(n, k).unwrap_or_else(|| panic!("C({n},{k}) overflows u64"))
}

/// A potential edge: a strictly increasing d-tuple over `[1, n]` together
/// with its colex rank in `[0, C(n,d))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeKey {
    vertices: Vec<u32>,
    rank: u64,
}

impl EdgeKey {
    pub fn from_vertices(n: u32, vertices: &[u32]) -> Result<Self, RankError> {
        let rank = rank_tuple(n, vertices)?;
        Ok(EdgeKey {
            vertices: vertices.to_vec(),
            rank,
        })
    }

    pub fn from_rank(n: u32, d: u32, rank: u64) -> Result<Self, RankError> {
        let vertices = unrank_tuple(n, d, rank)?;
        Ok(EdgeKey { vertices, rank })
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }
}

/// Colex rank of a strictly increasing tuple of 1-based vertex ids:
/// `sum_i C(v_i - 1, i)` over positions `i = 1..=d`.
pub fn rank_tuple(n: u32, tuple: &[u32]) -> Result<u64, RankError> {
    if tuple.windows(2).any(|w| w[0] >= w[1]) {
        return Err(RankError::NotIncreasing {
            tuple: tuple.to_vec(),
        });
    }
    for &v in tuple {
        if v == 0 || v > n {
            return Err(RankError::VertexOutOfRange { vertex: v, n });
        }
    }
    let mut rank: u64 = 0;
    for (i, &v) in tuple.iter().enumerate() {
        let term = binomial(v as u64 - 1, i as u64 + 1).ok_or(RankError::Overflow {
            n: v as u64 - 1,
            k: i as u64 + 1,
        })?;
        rank = rank.checked_add(term).ok_or(RankError::Overflow {
            n: n as u64,
            k: tuple.len() as u64,
        })?;
    }
    Ok(rank)
}

/// Inverse of [`rank_tuple`]: the unique strictly increasing d-tuple over
/// `[1, n]` with the given colex rank.
pub fn unrank_tuple(n: u32, d: u32, rank: u64) -> Result<Vec<u32>, RankError> {
    let count = binomial(n as u64, d as u64).ok_or(RankError::Overflow {
        n: n as u64,
        k: d as u64,
    })?;
    if rank >= count {
        return Err(RankError::RankOutOfRange { rank, count });
    }
    let mut remaining = rank;
    let mut tuple = vec![0u32; d as usize];
    let mut hi = n as u64;
    for i in (1..=d as u64).rev() {
        // largest c with C(c, i) <= remaining; vertex is c + 1
        let mut lo = i - 1;
        let mut high = hi;
        while lo < high {
            let mid = (lo + high).div_ceil(2);
            if binomial_exact(mid, i) <= remaining {
                lo = mid;
            } else {
                high = mid - 1;
            }
        }
        remaining -= binomial_exact(lo, i);
        tuple[i as usize - 1] = lo as u32 + 1;
        hi = lo;
    }
    Ok(tuple)
}

/// Iterator over all k-subsets of `0..n` in lexicographic order, used by
/// exhaustive oracles.
pub fn subsets(n: usize, k: usize) -> SubsetIter {
    SubsetIter {
        n,
        k,
        current: None,
        done: k > n,
    }
}

pub struct SubsetIter {
    n: usize,
    k: usize,
    current: Option<Vec<usize>>,
    done: bool,
}

impl Iterator for SubsetIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        match &mut self.current {
            None => {
                let first: Vec<usize> = (0..self.k).collect();
                self.current = Some(first.clone());
                Some(first)
            }
            Some(cur) => {
                let k = self.k;
                let mut i = k;
                while i > 0 {
                    i -= 1;
                    if cur[i] < self.n - k + i {
                        cur[i] += 1;
                        for j in i + 1..k {
                            cur[j] = cur[j - 1] + 1;
                        }
                        return Some(cur.clone());
                    }
                }
                self.done = true;
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(5, 3), Some(10));
        assert_eq!(binomial(5, 6), Some(0));
        assert_eq!(binomial(10_000, 3), Some(166_616_670_000));
        assert_eq!(binomial(200, 100), None);
    }

    #[test]
    fn colex_order_small() {
        // n=4, d=3: ranks follow colex order of the 4 triples
        assert_eq!(rank_tuple(4, &[1, 2, 3]).unwrap(), 0);
        assert_eq!(rank_tuple(4, &[1, 2, 4]).unwrap(), 1);
        assert_eq!(rank_tuple(4, &[1, 3, 4]).unwrap(), 2);
        assert_eq!(rank_tuple(4, &[2, 3, 4]).unwrap(), 3);
    }

    #[test]
    fn roundtrip_all_small() {
        for n in 1..=12u32 {
            for d in 1..=4u32.min(n) {
                let count = binomial(n as u64, d as u64).unwrap();
                for rank in 0..count {
                    let tuple = unrank_tuple(n, d, rank).unwrap();
                    assert_eq!(tuple.len(), d as usize);
                    assert!(tuple.windows(2).all(|w| w[0] < w[1]));
                    assert!(*tuple.last().unwrap() <= n);
                    assert_eq!(rank_tuple(n, &tuple).unwrap(), rank);
                }
            }
        }
    }

    #[test]
    fn rank_is_independent_of_n() {
        // colex extends monotonically: growing the vertex set keeps ranks
        let tuple = [2u32, 5, 9];
        let r = rank_tuple(9, &tuple).unwrap();
        for n in 10..30 {
            assert_eq!(rank_tuple(n, &tuple).unwrap(), r);
        }
    }

    #[test]
    fn rejects_bad_tuples() {
        assert!(matches!(
            rank_tuple(5, &[1, 1, 2]),
            Err(RankError::NotIncreasing { .. })
        ));
        assert!(matches!(
            rank_tuple(5, &[1, 2, 6]),
            Err(RankError::VertexOutOfRange { vertex: 6, .. })
        ));
        assert!(matches!(
            unrank_tuple(4, 3, 4),
            Err(RankError::RankOutOfRange { rank: 4, count: 4 })
        ));
    }

    #[test]
    fn subset_iterator_counts() {
        assert_eq!(subsets(5, 2).count(), 10);
        assert_eq!(subsets(5, 0).count(), 1);
        assert_eq!(subsets(3, 4).count(), 0);
        let all: Vec<_> = subsets(4, 3).collect();
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[3], vec![1, 2, 3]);
    }
}
