//! Geometry primitives shared by every range-searching structure in this
//! workspace: integer points with stable ids, dominance tests, rank-space
//! reduction, per-axis presorting and sentinel-encoded query boxes.
//!
//! All coordinates are unsigned machine integers below a universe bound `U`;
//! queries use closed intervals with `0` standing in for "unbounded below"
//! and `U` for "unbounded above", so no signed arithmetic is needed anywhere.

pub mod point;
pub mod query;
pub mod rank;
pub mod words;

pub use point::{dominates, PointD};
pub use query::QueryBox;
pub use rank::{presort, rank_space_reduce, RankSpaceMap};
