//! Exact decision procedures for strong isotropy of semisimple groups.
//!
//! Groups are described combinatorially (Dynkin type plus isogeny data, or
//! a central subgroup of a split torus for products of type A). Every
//! verdict carries a witness that can be re-checked by hand or the
//! exhaustive evidence behind a negative answer.

pub mod arith;
pub mod brauer;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod qform;

pub use error::{Error, Result};

/// Version string reported in every response document.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
