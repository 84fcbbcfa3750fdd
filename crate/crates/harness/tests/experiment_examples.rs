//! Experiment-level behavior on forced small cases and at desk scale.

use hyperproc_cli::config::{ExperimentConfig, ExperimentKind, OutputFormat};
use hyperproc_cli::experiments::{
    run_hitting_times, run_poisson_count, run_property_q, run_quasi_disjoint,
    run_threshold_sweep,
};
use hyperproc_cli::tolerances::MONOTONE_SLACK_WIDTHS;

fn config(kind: ExperimentKind, n: u32, d: u32, k: u32, trials: u32) -> ExperimentConfig {
    ExperimentConfig {
        kind,
        n,
        d,
        k,
        trials,
        master_seed: 777,
        c: 0.0,
        c_grid: None,
        omega: None,
        include_gnp: false,
        budget: None,
        max_n: None,
        format: OutputFormat::Json,
    }
}

#[test]
fn hitting_equality_is_forced_small() {
    // n=4, d=3, k=2: the stopping pair is always (3, 4), never equal
    let summary =
        run_hitting_times(&config(ExperimentKind::HittingTimes, 4, 3, 2, 30)).unwrap();
    assert_eq!(summary.equal_fraction.successes, 0);
    for t in &summary.trials {
        assert_eq!(t.min_degree_steps[1], 3);
        assert_eq!(t.connect_steps[1], 4);
    }

    // n=3, d=3, k=1: the single edge does everything at step 1
    let summary =
        run_hitting_times(&config(ExperimentKind::HittingTimes, 3, 3, 1, 10)).unwrap();
    assert_eq!(summary.equal_fraction.estimate, 1.0);
}

#[test]
fn sweep_flanks_at_scale() {
    // deep supercritical and deep subcritical offsets at n=2000
    let n = 2000u32;
    let big_c = 6.0 * (n as f64).ln().ln();
    let mut cfg = config(ExperimentKind::ThresholdSweep, n, 3, 2, 200);
    cfg.c_grid = Some(vec![-4.0, big_c]);
    let summary = run_threshold_sweep(&cfg).unwrap();
    let low = &summary.points[0];
    let high = &summary.points[1];
    assert!(
        low.k_connected.estimate <= 0.01,
        "subcritical estimate {}",
        low.k_connected.estimate
    );
    assert!(
        high.k_connected.estimate >= 0.99,
        "supercritical estimate {}",
        high.k_connected.estimate
    );
}

#[test]
fn sweep_estimates_monotone_up_to_noise() {
    let mut cfg = config(ExperimentKind::ThresholdSweep, 500, 3, 2, 150);
    cfg.c_grid = Some(vec![-2.0, -1.0, 0.0, 1.0, 2.0, 3.0]);
    let summary = run_threshold_sweep(&cfg).unwrap();
    for pair in summary.points.windows(2) {
        let slack = MONOTONE_SLACK_WIDTHS
            * pair[0].k_connected.width().max(pair[1].k_connected.width());
        assert!(
            pair[1].k_connected.estimate >= pair[0].k_connected.estimate - slack,
            "estimate dropped from {} (c={}) to {} (c={}) beyond slack {slack}",
            pair[0].k_connected.estimate,
            pair[0].c,
            pair[1].k_connected.estimate,
            pair[1].c
        );
    }
    // analytic limit column is present and increasing
    for pair in summary.points.windows(2) {
        assert!(pair[1].analytic_limit > pair[0].analytic_limit);
    }
}

#[test]
fn quasi_event_trivial_for_k1_and_likely_at_scale() {
    // k = 1: a vertex with any edge has a quasi-disjoint set of size 1,
    // so the obstruction count is identically zero
    let mut cfg = config(ExperimentKind::QuasiDisjoint, 50, 3, 1, 40);
    cfg.omega = Some(2.0);
    let summary = run_quasi_disjoint(&cfg).unwrap();
    assert_eq!(summary.zero_bad_fraction.estimate, 1.0);

    // stated scale: n=2000, k=2, default omega = ln ln ln n
    let cfg = config(ExperimentKind::QuasiDisjoint, 2000, 3, 2, 200);
    let summary = run_quasi_disjoint(&cfg).unwrap();
    assert!(
        summary.zero_bad_fraction.estimate >= 0.9,
        "event frequency {}",
        summary.zero_bad_fraction.estimate
    );
    assert!(
        summary.packing_fraction.estimate >= 0.9,
        "degree->packing frequency {}",
        summary.packing_fraction.estimate
    );
}

#[test]
fn poisson_smoke_and_degenerate_counts() {
    let mut cfg = config(ExperimentKind::PoissonCount, 60, 3, 2, 50);
    cfg.omega = Some(2.0);
    let summary = run_poisson_count(&cfg).unwrap();
    assert_eq!(summary.trials.len(), 50);
    let hist_total: u64 = summary.histogram.values().sum();
    assert_eq!(hist_total, 50);
    assert!(summary.tv_exact.is_finite() && summary.tv_exact <= 1.0);
    assert!(summary.exact_mean > 0.0);

    // complete hypergraph: every degree is forced, low-degree count is zero
    let total = hyperproc::binomial(6, 3).unwrap();
    let h = hyperproc::sample_gnm(6, 3, total, hyperproc::Seed::new(1, 0)).unwrap();
    assert_eq!(h.count_with_degree(1), 0);
    assert_eq!(h.count_with_degree(hyperproc::binomial(5, 2).unwrap() as u32), 6);
}

#[test]
fn quasi_smoke_small() {
    let mut cfg = config(ExperimentKind::QuasiDisjoint, 10, 3, 2, 20);
    cfg.omega = Some(1.0);
    let summary = run_quasi_disjoint(&cfg).unwrap();
    assert_eq!(summary.trials.len(), 20);
}

#[test]
fn property_q_holds_at_moderate_scale() {
    let mut cfg = config(ExperimentKind::PropertyQ, 200, 3, 2, 30);
    cfg.omega = Some(1.5);
    let summary = run_property_q(&cfg).unwrap();
    assert!(
        summary.fraction.estimate >= 0.9,
        "giant-component fraction {}",
        summary.fraction.estimate
    );
    assert_eq!(summary.budget, (200f64).ln().ceil() as u32);
}
