//! Exact arithmetic for non-empty pairwise cross-intersecting uniform
//! families.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod binom;
pub mod bound;
pub mod error;
pub mod extremal;
pub mod instance;
pub mod kset;
pub mod lemmas;
pub mod linitial;
pub mod objective;
pub mod oracle;

pub use binom::{binomial, Natural};
pub use error::{Error, Result};
pub use kset::{enumerate_lex, lex_compare, lex_rank, lex_unrank, KSet, LexRelation};
pub use linitial::{
    are_cross_intersecting, max_cross_id, normalize_id, partner, size_from_id,
    size_from_id_direct, FamilyId, LInitialFamily,
};
pub use bound::{theorem_bound, Branch, BoundResult};
pub use instance::ProblemInstance;
