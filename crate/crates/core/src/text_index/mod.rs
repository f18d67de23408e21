//! Suffix-structure machinery used by the parsers.

pub mod naive;
mod offline;
mod online;
mod period;
mod search;
pub(crate) mod suffix_tree;

pub use offline::OfflineIndex;
pub use online::OnlineIndex;
pub use period::{min_period, MinPeriodTracker};
pub use search::{window_leftmost_occurrence, window_leftmost_occurrence0};
