//! Brute-force ground truth, independent of the closed forms.

pub mod audit;
mod micro;
mod search;

pub use micro::{literal_pair_optimum, micro_search_t2, MicroMethod, MicroResult, MICRO_ENUMERATION_SIDE, MICRO_MATCHING_SIZE};
pub use search::{linitial_search, pairwise_threshold_feasible, OracleResult, DEFAULT_BUDGET};
