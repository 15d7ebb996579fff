//! Exact cover and generation arithmetic for bases `{1, a2, a3}`.
//!
//! Everything here is a pure function of its arguments. Values are `i64`;
//! any intermediate that would overflow is reported as [`Error::Overflow`]
//! instead of wrapping.

mod basis;
mod cover;
mod error;

pub use basis::{min_stamps2, Basis};
pub use cover::{
    can_generate, canonical_generation, cover2, cover2_formula, cover3, m2, CoverResult,
    Generation,
};
pub use error::{Error, Result};
