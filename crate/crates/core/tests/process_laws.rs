//! Distributional checks for the samplers and exhaustive small-case
//! stopping times. Chi-square thresholds at significance 0.001.

use statrs::distribution::{ChiSquared, ContinuousCDF};

use hyperproc::{
    binomial, process_stream, sample_gnm, sample_gnp, stopping_times_for_sequence, Seed,
};

fn chi_square_crit(df: f64) -> f64 {
    ChiSquared::new(df).unwrap().inverse_cdf(0.999)
}

fn chi_square_stat(observed: &[u64], expected: f64) -> f64 {
    observed
        .iter()
        .map(|&o| {
            let diff = o as f64 - expected;
            diff * diff / expected
        })
        .sum()
}

#[test]
fn gnm_single_edge_uniform() {
    // n=4, d=3, m=1: each of the 4 triples should appear with frequency 1/4
    const TRIALS: u64 = 40_000;
    let mut counts = [0u64; 4];
    for trial in 0..TRIALS {
        let h = sample_gnm(4, 3, 1, Seed::new(0x00D1_57A7, trial)).unwrap();
        let rank = hyperproc::rank_tuple(4, h.edge(0)).unwrap();
        counts[rank as usize] += 1;
    }
    let stat = chi_square_stat(&counts, TRIALS as f64 / 4.0);
    assert!(stat < chi_square_crit(3.0), "chi-square {stat} too large");
}

#[test]
fn process_prefix_ordered_pairs_uniform() {
    // n=4, d=3: 12 ordered pairs of distinct triples, each frequency 1/12
    const TRIALS: u64 = 40_000;
    let mut counts = [0u64; 12];
    for trial in 0..TRIALS {
        let mut stream = process_stream(4, 3, Seed::new(0x0B5EED, trial)).unwrap();
        let first = stream.next().unwrap().rank() as usize;
        let second = stream.next().unwrap().rank() as usize;
        let idx = first * 3 + if second < first { second } else { second - 1 };
        counts[idx] += 1;
    }
    let stat = chi_square_stat(&counts, TRIALS as f64 / 12.0);
    assert!(stat < chi_square_crit(11.0), "chi-square {stat} too large");
}

#[test]
fn process_prefix_set_law_matches_gnm() {
    // unordered 2-edge prefixes and 2-edge uniform samples live on the same
    // 6-point space; both must pass uniformity
    const TRIALS: u64 = 30_000;
    let pair_index = |a: u64, b: u64| -> usize {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        // pairs over 4 ranks, colex order
        (hi * (hi - 1) / 2 + lo) as usize
    };
    let mut from_process = [0u64; 6];
    let mut from_gnm = [0u64; 6];
    for trial in 0..TRIALS {
        let mut stream = process_stream(4, 3, Seed::new(0x5E7_FACE, trial)).unwrap();
        let a = stream.next().unwrap().rank();
        let b = stream.next().unwrap().rank();
        from_process[pair_index(a, b)] += 1;

        let h = sample_gnm(4, 3, 2, Seed::new(0x6E6D_6E6D, trial)).unwrap();
        let ra = hyperproc::rank_tuple(4, h.edge(0)).unwrap();
        let rb = hyperproc::rank_tuple(4, h.edge(1)).unwrap();
        from_gnm[pair_index(ra, rb)] += 1;
    }
    let crit = chi_square_crit(5.0);
    let expected = TRIALS as f64 / 6.0;
    let s1 = chi_square_stat(&from_process, expected);
    let s2 = chi_square_stat(&from_gnm, expected);
    assert!(s1 < crit, "process prefix law: chi-square {s1}");
    assert!(s2 < crit, "fixed-count law: chi-square {s2}");
}

#[test]
fn gnp_edge_counts_in_binomial_interval() {
    // n=200, d=3, p tuned so the expected count is 2000
    const SAMPLES: u64 = 1000;
    let total = binomial(200, 3).unwrap(); // 1_313_400
    let p = 2000.0 / total as f64;
    let mut counts = Vec::with_capacity(SAMPLES as usize);
    for trial in 0..SAMPLES {
        let h = sample_gnp(200, 3, p, Seed::new(0x6E70_6E70, trial)).unwrap();
        counts.push(h.edge_count() as u64);
    }
    // aggregate count is Binomial(SAMPLES * total, p); central 99.9% interval
    let mean_total = SAMPLES as f64 * total as f64 * p;
    let sd_total = (SAMPLES as f64 * total as f64 * p * (1.0 - p)).sqrt();
    let sum: u64 = counts.iter().sum();
    assert!(
        (sum as f64 - mean_total).abs() <= 3.2905 * sd_total,
        "aggregate count {sum} outside 99.9% interval around {mean_total}"
    );
    // per-sample interval holds for a comfortable majority
    let mean = total as f64 * p;
    let sd = (total as f64 * p * (1.0 - p)).sqrt();
    let inside = counts
        .iter()
        .filter(|&&c| (c as f64 - mean).abs() <= 3.2905 * sd)
        .count();
    assert!(inside >= 990, "only {inside}/1000 inside the 99.9% interval");
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

#[test]
fn forced_stopping_times_on_four_vertices() {
    // all 24 orderings of the 4 triples: (tau_1, T_1) = (2, 2) and
    // (tau_2, T_2) = (3, 4)
    let triples = vec![
        vec![1u32, 2, 3],
        vec![1, 2, 4],
        vec![1, 3, 4],
        vec![2, 3, 4],
    ];
    let all = permutations(&triples);
    assert_eq!(all.len(), 24);
    for ordering in all {
        let trace = stopping_times_for_sequence(4, 3, 2, ordering.clone()).unwrap();
        assert_eq!(trace.min_degree_time(1), 2, "ordering {ordering:?}");
        assert_eq!(trace.connectivity_time(1), 2, "ordering {ordering:?}");
        assert_eq!(trace.min_degree_time(2), 3, "ordering {ordering:?}");
        assert_eq!(trace.connectivity_time(2), 4, "ordering {ordering:?}");
    }
}

#[test]
fn stopping_time_monotonicity_random() {
    for trial in 0..15 {
        let trace = hyperproc::stopping_times(30, 3, 3, Seed::new(0x7A07A0, trial)).unwrap();
        for j in 1..=3u32 {
            assert!(trace.min_degree_time(j) <= trace.connectivity_time(j));
        }
        for j in 1..3u32 {
            assert!(trace.min_degree_time(j) <= trace.min_degree_time(j + 1));
            assert!(trace.connectivity_time(j) <= trace.connectivity_time(j + 1));
        }
        // monotone events hold at every later materialized step (spot check)
        let t2 = trace.connectivity_time(2);
        for extra in [0u64, 1, 2] {
            let step = (t2 + extra).min(trace.prefix.len() as u64);
            let h = trace.hypergraph_at(step);
            assert!(hyperproc::is_k_connected(&h, 2).holds());
        }
    }
}
