//! Random d-uniform hypergraphs: models, exact connectivity, and the
//! analytics around the k-connectivity threshold.
//!
//! The crate is organized around a small immutable [`Hypergraph`] value:
//!
//! * [`combinatorics`] — binomial coefficients and colex ranking of
//!   d-subsets (edge identities).
//! * [`hypergraph`] — construction, degree profiles, and whole-edge
//!   vertex deletion.
//! * [`io`] — the `n d m` edge-list text format.
//! * [`connectivity`] — components, pairwise separating cuts, exact
//!   k-connectivity with witnesses, and the exhaustive oracles.
//! * [`structure`] — per-vertex link solvers: maximum quasi-disjoint edge
//!   sets and minimum transversals.
//! * [`models`] — samplers for the fixed-count and independent models,
//!   the sequential edge process, and stopping-time extraction.
//! * [`analytics`] — log-domain exact formulas and threshold parameters.

pub mod analytics;
pub mod combinatorics;
pub mod connectivity;
pub mod hypergraph;
pub mod io;
pub mod models;
pub mod structure;

pub use analytics::{
    edge_count_pmf, exact_degree_pmf, exact_expected_deg_count, limit_prob_k_connected,
    poisson_pmf, thresholds, AnalyticsError, ThresholdParams,
};
pub use combinatorics::{binomial, rank_tuple, unrank_tuple, EdgeKey};
pub use connectivity::{
    brute_force_is_k_connected, connected_components, is_connected, is_k_connected,
    min_separating_cut, robust_giant_component, ComponentPartition, ConnectivityError, CutValue,
    CutWitness, KConnectivity,
};
pub use hypergraph::{BuildError, Hypergraph};
pub use models::{
    process_stream, sample_gnm, sample_gnp, stopping_times, stopping_times_for_sequence,
    EdgeStream, ModelError, ProcessTrace, Seed,
};
pub use structure::{
    link_of, max_quasi_disjoint, min_transversal, quasi_profile, LinkSystem, QuasiDisjoint,
    QuasiProfile, StructureError, Transversal,
};
