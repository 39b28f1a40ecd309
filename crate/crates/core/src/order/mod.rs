//! The Schur-positivity order on ribbons and the posets `R((a+1)^n a^m)`.

pub mod certify;
pub mod compare;
pub mod filters;
pub mod poset;

pub use certify::{certified_exchange_inequality, certified_move_inequality, raise_to_short_ends};
pub use compare::{compare, ComparisonResult, Verdict};
pub use filters::{filter_quasi_profile, filter_short_ends, FilterVerdict};
pub use poset::{build_poset, equitable_elements, PosetGraph, PosetMode, PosetOptions};
