//! Exact rational scalars and small integer helpers.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator; `num_rational` maintains both invariants on every
//! operation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` reduced to lowest terms. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `base^exp` as a rational, with `0^0 = 1`.
pub fn int_pow(base: i64, exp: u32) -> Rat {
    Rat::from_integer(BigInt::from(base).pow(exp))
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    acc
}

/// Parses `"num/den"` or a bare `"num"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let err = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("{msg}: {s:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err("invalid numerator"))?;
    let d: BigInt = den.parse().map_err(|_| err("invalid denominator"))?;
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rat::new(n, d))
}

/// Canonical `"num/den"` form, denominator always written.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// True if the stored form is canonical: reduced, positive denominator.
pub fn is_canonical(r: &Rat) -> bool {
    r.denom().is_positive() && num_integer::gcd(r.numer().abs(), r.denom().clone()).is_one()
}
