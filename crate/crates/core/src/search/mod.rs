//! Exhaustive search for `ex_p(n, C_5)` at small orders, and structural
//! validators around a maximum-degree vertex.

mod enumerate;
mod expower;
mod structure;

pub use enumerate::{
    enumerate_c5_free, enumerate_cycle_free, par_fold_cycle_free, DEFAULT_ORDER_LIMIT, PREFIX_DEPTH, THREADS_ENV,
};
pub use expower::{
    classify_maximizers, ex_p, ex_p_with, max_degree_ratio, ClassificationSummary, MaximizerStats, SearchOptions,
    SearchResult,
};
pub use structure::{
    neighborhood_decomposition, validate_observations, AmbiguityFlag, Attachment, Counterexample,
    DecompositionReport, ObservationReport,
};
