//! Proportion estimates, Wilson intervals, and total-variation distance.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Two-sided 95% normal quantile.
pub const Z_95: f64 = 1.959963984540054;

/// A proportion with its Wilson 95% interval. Wilson rather than Wald:
/// the interesting estimates sit near 0 and 1 where Wald collapses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub successes: u64,
    pub trials: u64,
    pub estimate: f64,
    pub wilson_low: f64,
    pub wilson_high: f64,
}

impl Estimate {
    pub fn from_counts(successes: u64, trials: u64) -> Self {
        assert!(trials > 0 && successes <= trials);
        let (wilson_low, wilson_high) = wilson_interval(successes, trials, Z_95);
        Estimate {
            successes,
            trials,
            estimate: successes as f64 / trials as f64,
            wilson_low,
            wilson_high,
        }
    }

    pub fn width(&self) -> f64 {
        self.wilson_high - self.wilson_low
    }
}

pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // rounding must not push the point estimate outside its own interval
    let low = (center - half).max(0.0).min(p);
    let high = (center + half).min(1.0).max(p);
    (low, high)
}

/// Total-variation distance between an empirical histogram over the
/// nonnegative integers and a reference mass function: half the L1
/// difference, with the reference tail beyond the scanned range added in
/// full (the empirical mass there is zero).
pub fn total_variation(
    histogram: &BTreeMap<u64, u64>,
    trials: u64,
    reference: impl Fn(u64) -> f64,
) -> f64 {
    let emp_max = histogram.keys().next_back().copied().unwrap_or(0);
    let mut l1 = 0.0;
    let mut ref_mass = 0.0;
    let mut x = 0u64;
    // scan until both the empirical support is exhausted and the reference
    // mass is numerically complete
    while x <= emp_max || ref_mass < 1.0 - 1e-12 {
        let q = reference(x);
        ref_mass += q;
        let p = histogram.get(&x).copied().unwrap_or(0) as f64 / trials as f64;
        l1 += (p - q).abs();
        x += 1;
        if x > emp_max + 10_000 {
            break; // reference tail numerically negligible from here
        }
    }
    (l1 + (1.0 - ref_mass).max(0.0)) / 2.0
}

pub fn mean_and_se(values: impl Iterator<Item = u64> + Clone) -> (f64, f64) {
    let n = values.clone().count() as f64;
    assert!(n > 1.0);
    let mean = values.clone().map(|v| v as f64).sum::<f64>() / n;
    let var = values.map(|v| (v as f64 - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilson_known_values() {
        // 8/10 at 95%: interval (0.490, 0.943) up to rounding
        let (lo, hi) = wilson_interval(8, 10, Z_95);
        assert!((lo - 0.4901).abs() < 5e-4, "lo={lo}");
        assert!((hi - 0.9433).abs() < 5e-4, "hi={hi}");
        // extreme counts stay inside [0, 1] and contain the estimate
        for (s, t) in [(0u64, 7u64), (7, 7), (1, 1000)] {
            let e = Estimate::from_counts(s, t);
            assert!(0.0 <= e.wilson_low && e.wilson_high <= 1.0);
            assert!(e.wilson_low <= e.estimate && e.estimate <= e.wilson_high);
        }
    }

    #[test]
    fn tv_identical_and_disjoint() {
        let mut hist = BTreeMap::new();
        hist.insert(3u64, 10u64);
        // all mass at 3 vs point mass at 3
        let d = total_variation(&hist, 10, |x| if x == 3 { 1.0 } else { 0.0 });
        assert!(d.abs() < 1e-12);
        // vs point mass at 5: disjoint supports
        let d = total_variation(&hist, 10, |x| if x == 5 { 1.0 } else { 0.0 });
        assert!((d - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tv_against_poisson_self() {
        // histogram drawn exactly proportional to Poisson(2) rounded:
        // distance should be small but nonzero
        let lambda = 2.0;
        let trials = 100_000u64;
        let mut hist = BTreeMap::new();
        for x in 0..30u64 {
            let c = (hyperproc::poisson_pmf(lambda, x) * trials as f64).round() as u64;
            if c > 0 {
                hist.insert(x, c);
            }
        }
        let total: u64 = hist.values().sum();
        let d = total_variation(&hist, total, |x| hyperproc::poisson_pmf(lambda, x));
        assert!(d < 5e-3, "d={d}");
    }

    #[test]
    fn mean_se_simple() {
        let vals = [2u64, 4, 6];
        let (m, se) = mean_and_se(vals.iter().copied());
        assert!((m - 4.0).abs() < 1e-12);
        assert!((se - (4.0f64 / 3.0).sqrt()).abs() < 1e-12);
    }
}
