//! Exact arithmetic: rationals, polynomials in `x`, `y`, Laurent polynomials
//! in `z`, factored fractions and truncated series in `u`.

mod fraction;
mod laurent;
mod poly;
mod truncated;

pub use fraction::{expand_factors, fraction_add, fraction_is_constant, FactoredFraction};
pub use laurent::{laurent_arith, poly_at_x_pow, LaurentZ};
pub use poly::{poly_arith, Monomial, PolyXY, RingOp};
pub use truncated::{series_arith, series_exp, SeriesOp, SeriesU};

/// Reduced fraction of arbitrary-precision integers.
pub type Rational = num::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
