//! Exact arithmetic foundation: rationals, sparse two-variable Laurent
//! polynomials, truncated power series, big-float complex numbers, and
//! exact Vandermonde solving.

mod cx;
mod laurent;
mod quad;
mod rat;
mod series;
mod vandermonde;

pub use cx::{
    abs_below_pow10, bf_from_bigint, bf_from_i64, bf_from_rat, bf_le, bf_lt, bf_to_f64,
    bf_to_string, bf_zero, check_precision, rel_deviation, CxFloat, DEFAULT_PRECISION_BITS,
    MIN_PRECISION_BITS,
};
pub use laurent::{LaurentPoly2, VarPair};
pub use quad::TanhSinh;
pub use rat::{factorial, format_rat, int_pow, is_canonical, parse_rat, rat, rat_int, Rat};
pub use series::Series;
pub use vandermonde::{solve_vandermonde, solve_vandermonde_dual};
