//! Closed forms for optimal stride generators, `M(3,s)` and the bounds
//! used to fence exhaustive searches.
//!
//! Table rows are exact integer polynomials; every division is checked
//! for exactness so a mistyped coefficient fails loudly instead of
//! rounding silently.

mod bounds;
mod pp;
mod tables;

pub use bounds::{a2_bounds, a3_upper, approx, key1p_limit, theoretical_a2, Q};
pub use pp::{pp_bound, pp_limit, pp_of, PP_LIMIT};
pub use tables::{maximal_set, mopt, optimal_sg, osg0, osg1, sg1_1, MaximalSet, MoptRow, OsgRow};

/// `num / den`, panicking if the division leaves a remainder.
pub(crate) fn exact(num: i64, den: i64) -> i64 {
    assert!(num % den == 0, "closed form not integral: {num}/{den}");
    num / den
}
