//! Exact finite-n formulas and asymptotic threshold/limit expressions,
//! computed in the log domain.
//!
//! Binomial coefficients of binomial coefficients (`C(C(n,d), m)` and
//! friends) overflow integers immediately; they are evaluated as
//! compensated sums of log ratios, which keeps absolute log error near
//! machine epsilon even for arguments around 1e14.

use thiserror::Error;

use crate::combinatorics::binomial;

#[derive(Debug, Error, PartialEq)]
pub enum AnalyticsError {
    #[error("need n >= {min}, got {n}")]
    NTooSmall { n: u32, min: u32 },
    #[error("omega must be positive, got {omega}")]
    NonPositiveOmega { omega: f64 },
    #[error("derived probability {p} exceeds 1: n too small for this (d, k, c)")]
    ProbabilityAboveOne { p: f64 },
    #[error("window collapsed: low {low} not below high {high}")]
    WindowCollapsed { low: u64, high: u64 },
    #[error("potential edge count C({n},{d}) does not fit in u64")]
    TooManyPotentialEdges { n: u32, d: u32 },
    #[error("{what} out of range: {detail}")]
    OutOfRange {
        what: &'static str,
        detail: String,
    },
}

/// `ln C(n, k)` by compensated summation of `ln((n-k+i)/i)`.
pub fn ln_choose(n: f64, k: u64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for i in 1..=k {
        let term = (n - k as f64 + i as f64).ln() - (i as f64).ln();
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

fn factorial(j: u64) -> f64 {
    (1..=j).fold(1.0f64, |acc, i| acc * i as f64)
}

/// Critical edge counts and probabilities around the connectivity window.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdParams {
    pub n: u32,
    pub d: u32,
    pub k: u32,
    pub c: f64,
    pub omega: f64,
    /// `ceil((n/d) (ln n + (k-1) ln ln n + c))`, clamped to `[0, C(n,d)]`.
    pub m_at_c: u64,
    /// `(d-1)! (ln n + (k-1) ln ln n + c) / n^(d-1)`, clamped below at 0.
    pub p_at_c: f64,
    /// Window edge counts at `-omega` and `+omega`.
    pub window_low: u64,
    pub window_high: u64,
    /// The same window with the iterated-log offset `ln ln ln n`; absent
    /// when `n <= e^e` makes that offset nonpositive.
    pub iterated_window: Option<(u64, u64)>,
}

impl ThresholdParams {
    /// Edge count at an arbitrary offset `c`, with the same rounding rule.
    pub fn m_at(&self, c: f64) -> u64 {
        m_at_offset(self.n, self.d, self.k, c)
    }
}

fn m_at_offset(n: u32, d: u32, k: u32, c: f64) -> u64 {
    let ln_n = (n as f64).ln();
    let level = ln_n + (k as f64 - 1.0) * ln_n.ln() + c;
    let raw = (n as f64 / d as f64) * level;
    let total = binomial(n as u64, d as u64).unwrap_or(u64::MAX);
    if raw <= 0.0 {
        0
    } else {
        (raw.ceil() as u64).min(total)
    }
}

/// Rounding rule: ceiling, so "at least the threshold density" holds;
/// flooring instead would shift every value by at most one edge.
pub fn thresholds(
    n: u32,
    d: u32,
    k: u32,
    c: f64,
    omega: f64,
) -> Result<ThresholdParams, AnalyticsError> {
    if n < 3 {
        return Err(AnalyticsError::NTooSmall { n, min: 3 });
    }
    if omega.is_nan() || omega <= 0.0 {
        return Err(AnalyticsError::NonPositiveOmega { omega });
    }
    binomial(n as u64, d as u64).ok_or(AnalyticsError::TooManyPotentialEdges { n, d })?;
    let ln_n = (n as f64).ln();
    let ln_ln_n = ln_n.ln();
    let level = ln_n + (k as f64 - 1.0) * ln_ln_n + c;
    let p_raw = factorial(d as u64 - 1) * level / (n as f64).powi(d as i32 - 1);
    if p_raw > 1.0 {
        return Err(AnalyticsError::ProbabilityAboveOne { p: p_raw });
    }
    let window_low = m_at_offset(n, d, k, c - omega);
    let window_high = m_at_offset(n, d, k, c + omega);
    if window_low >= window_high {
        return Err(AnalyticsError::WindowCollapsed {
            low: window_low,
            high: window_high,
        });
    }
    let iterated_window = if ln_ln_n > 1.0 {
        let w = ln_ln_n.ln();
        Some((m_at_offset(n, d, k, -w), m_at_offset(n, d, k, w)))
    } else {
        None
    };
    Ok(ThresholdParams {
        n,
        d,
        k,
        c,
        omega,
        m_at_c: m_at_offset(n, d, k, c),
        p_at_c: p_raw.max(0.0),
        window_low,
        window_high,
        iterated_window,
    })
}

/// `exp(-exp(-c) / (k-1)!)`, the limiting k-connectivity probability at
/// offset `c`.
pub fn limit_prob_k_connected(c: f64, k: u32) -> f64 {
    assert!(k >= 1);
    (-(-c).exp() / factorial(k as u64 - 1)).exp()
}

/// Hypergeometric probability that a fixed vertex has degree exactly `j`
/// after `m` uniform distinct edges:
/// `C(D, j) C(N-D, m-j) / C(N, m)` with `D = C(n-1, d-1)`, `N = C(n, d)`.
pub fn exact_degree_pmf(n: u32, d: u32, m: u64, j: u64) -> Result<f64, AnalyticsError> {
    if n < d || d < 2 {
        return Err(AnalyticsError::OutOfRange {
            what: "n, d",
            detail: format!("need n >= d >= 2, got n={n}, d={d}"),
        });
    }
    let total = binomial(n as u64, d as u64)
        .ok_or(AnalyticsError::TooManyPotentialEdges { n, d })?;
    let incident = binomial(n as u64 - 1, d as u64 - 1).expect("smaller than C(n,d)");
    if m > total {
        return Err(AnalyticsError::OutOfRange {
            what: "m",
            detail: format!("m={m} exceeds C(n,d)={total}"),
        });
    }
    if j > m.min(incident) {
        return Err(AnalyticsError::OutOfRange {
            what: "j",
            detail: format!("j={j} exceeds min(m, C(n-1,d-1))={}", m.min(incident)),
        });
    }
    if m - j > total - incident {
        return Ok(0.0); // infeasible split: not enough non-incident edges
    }
    let ln_p = ln_choose(incident as f64, j) + ln_choose((total - incident) as f64, m - j)
        - ln_choose(total as f64, m);
    Ok(ln_p.exp())
}

/// Exact expected number of vertices of degree `k-1`:
/// `n * P(deg(v) = k-1)`. This finite-n value is the Poisson parameter
/// used by the statistical comparisons.
pub fn exact_expected_deg_count(n: u32, d: u32, m: u64, k: u32) -> Result<f64, AnalyticsError> {
    if k < 1 {
        return Err(AnalyticsError::OutOfRange {
            what: "k",
            detail: "k must be >= 1".into(),
        });
    }
    Ok(n as f64 * exact_degree_pmf(n, d, m, k as u64 - 1)?)
}

/// Binomial edge-count mass: `P(e(H) = m)` when each of the `C(n,d)`
/// potential edges is present independently with probability `p`.
pub fn edge_count_pmf(n: u32, d: u32, p: f64, m: u64) -> Result<f64, AnalyticsError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(AnalyticsError::OutOfRange {
            what: "p",
            detail: format!("p={p} not in [0,1]"),
        });
    }
    let total = binomial(n as u64, d as u64)
        .ok_or(AnalyticsError::TooManyPotentialEdges { n, d })?;
    if m > total {
        return Err(AnalyticsError::OutOfRange {
            what: "m",
            detail: format!("m={m} exceeds C(n,d)={total}"),
        });
    }
    if p == 0.0 {
        return Ok(if m == 0 { 1.0 } else { 0.0 });
    }
    if p == 1.0 {
        return Ok(if m == total { 1.0 } else { 0.0 });
    }
    let ln_p = ln_choose(total as f64, m)
        + m as f64 * p.ln()
        + (total - m) as f64 * (-p).ln_1p();
    Ok(ln_p.exp())
}

/// Poisson mass `P(X = x)` for mean `lambda`.
pub fn poisson_pmf(lambda: f64, x: u64) -> f64 {
    if lambda == 0.0 {
        return if x == 0 { 1.0 } else { 0.0 };
    }
    (-lambda + x as f64 * lambda.ln() - statrs::function::gamma::ln_gamma(x as f64 + 1.0)).exp()
}
