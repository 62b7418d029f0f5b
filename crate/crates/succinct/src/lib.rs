//! Succinct building blocks used by the range-searching structures:
//! generalized rank over an alphabet, a keyless range-minimum index, and a
//! sampled predecessor index that reads keys through an external oracle.

pub mod alphabet_rank;
pub mod predecessor;
pub mod rmq;

pub use alphabet_rank::AlphabetRankIndex;
pub use predecessor::{KeyOracle, PredecessorIndex, ORACLE_BUDGET};
pub use rmq::RmqIndex;
