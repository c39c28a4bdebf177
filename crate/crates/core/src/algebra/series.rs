//! Truncated one-variable power series over the rationals.
//!
//! A `Series` stores coefficients of x^0 .. x^Q for an explicit order cap Q.
//! Arithmetic truncates eagerly; no coefficient beyond the cap is ever
//! reported. Binary operations truncate to the smaller cap.

use num_traits::Zero;

use crate::error::{Error, Result};

use super::rat::{factorial, int_pow, Rat};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<Rat>, // index q holds the coefficient of x^q; len = cap + 1
}

impl Series {
    pub fn zeros(order_cap: usize) -> Self {
        Series {
            coeffs: vec![Rat::zero(); order_cap + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series stores at least the constant term"
        );
        Series { coeffs }
    }

    pub fn order_cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, q: usize) -> &Rat {
        &self.coeffs[q]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, q: usize, c: Rat) {
        self.coeffs[q] = c;
    }

    pub fn add(&self, other: &Self) -> Self {
        let cap = self.order_cap().min(other.order_cap());
        let mut out = Series::zeros(cap);
        for q in 0..=cap {
            out.coeffs[q] = &self.coeffs[q] + &other.coeffs[q];
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.order_cap().min(other.order_cap());
        let mut out = Series::zeros(cap);
        for (i, a) in self.coeffs.iter().enumerate().take(cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cap + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Multiply by x^k; the top k coefficients fall off the cap.
    pub fn shift_up(&self, k: usize) -> Self {
        let cap = self.order_cap();
        let mut out = Series::zeros(cap);
        for q in 0..=cap.saturating_sub(k) {
            out.coeffs[q + k] = self.coeffs[q].clone();
        }
        out
    }

    /// Divide by x^k, requiring the k lowest coefficients to vanish.
    ///
    /// The error reports the offending exponent relative to the floor -k,
    /// matching the z-floor diagnostics upstream.
    pub fn shift_down_checked(&self, k: usize) -> Result<Series> {
        for q in 0..k.min(self.coeffs.len()) {
            if !self.coeffs[q].is_zero() {
                return Err(Error::ZFloor {
                    found: q as i64 - k as i64,
                    floor: 0,
                });
            }
        }
        Ok(Series {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Truncated series of e^{c x}: coefficient of x^q is c^q / q!.
    pub fn exp_series(c: i64, order_cap: usize) -> Series {
        let mut coeffs = Vec::with_capacity(order_cap + 1);
        for q in 0..=order_cap {
            coeffs.push(int_pow(c, q as u32) / Rat::from_integer(factorial(q as u32)));
        }
        Series { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, rat_int};

    #[test]
    fn exp_series_small_cases() {
        assert_eq!(
            Series::exp_series(0, 4).coeffs(),
            &[rat_int(1), rat_int(0), rat_int(0), rat_int(0), rat_int(0)]
        );
        assert_eq!(
            Series::exp_series(1, 3).coeffs(),
            &[rat_int(1), rat_int(1), rat(1, 2), rat(1, 6)]
        );
        assert_eq!(
            Series::exp_series(-2, 2).coeffs(),
            &[rat_int(1), rat_int(-2), rat_int(2)]
        );
    }

    #[test]
    fn exp_series_satisfies_derivative_relation() {
        // (q+1) c_{q+1} = c * c_q
        for c in -3i64..=3 {
            let s = Series::exp_series(c, 8);
            for q in 0..8 {
                assert_eq!(
                    rat_int(q as i64 + 1) * s.coeff(q + 1),
                    rat_int(c) * s.coeff(q),
                );
            }
        }
    }

    #[test]
    fn mul_truncates_to_min_cap() {
        let a = Series::exp_series(1, 6);
        let b = Series::exp_series(2, 4);
        let p = a.mul(&b);
        assert_eq!(p.order_cap(), 4);
        assert_eq!(p, Series::exp_series(3, 4));
    }

    #[test]
    fn shift_round_trip() {
        let s = Series::exp_series(1, 5).shift_up(2);
        assert!(s.coeff(0).is_zero() && s.coeff(1).is_zero());
        let back = s.shift_down_checked(2).unwrap();
        assert_eq!(back.coeffs()[..4], Series::exp_series(1, 5).coeffs()[..4]);
        assert!(Series::exp_series(1, 3).shift_down_checked(1).is_err());
    }
}
