//! Schur and complete homogeneous expansions of skew and ribbon shapes.

pub mod engine;
pub mod hbasis;
pub mod lr;
pub mod vector;

pub use engine::{descent_class_size, EngineConfig, ExpansionEngine};
pub use hbasis::{h_expand_ribbon, h_to_s, jt_h_expansion};
pub use lr::{lex_largest_content, lr_expand, LrTableau};
pub use vector::{HVector, SchurVector};
