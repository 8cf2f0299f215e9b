//! Exact integer polynomials, fraction-free determinants and real root
//! isolation on the unit interval.

mod matrix;
mod poly;
mod roots;

pub use matrix::{bareiss_determinant, PolyMatrix};
pub use poly::IntPolynomial;
pub use roots::{
    count_roots_in, count_roots_in_unit_interval, isolate_roots_in_unit_interval, smallest_root_bracket, smallest_root_in_unit_interval,
    sturm_sequence, RootBracket,
};

/// Raised when a polynomial division leaves a nonzero remainder.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{dividend} is not divisible by {divisor}")]
pub struct InexactDivision {
    pub dividend: String,
    pub divisor: String,
}
