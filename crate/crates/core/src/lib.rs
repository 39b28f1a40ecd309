//! Exact ribbon Schur function expansions and the Schur-positivity order on
//! equitable ribbons.

pub mod binomial;
pub mod boxdiag;
pub mod composition;
pub mod equitable;
mod error;
pub mod order;
pub mod partition;
pub mod schur;
pub mod skew;
pub mod verify;

pub use composition::Composition;
pub use error::{Error, Result};
pub use partition::Partition;
pub use skew::{ribbon_to_skew, SkewShape};
