//! Arbitrary-precision complex numbers on top of `astro_float::BigFloat`.
//!
//! Every value carries its precision in bits (>= 64, default 256). Binary
//! operations compute at the larger of the two operand precisions.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::rat::Rat;

pub const MIN_PRECISION_BITS: usize = 64;
pub const DEFAULT_PRECISION_BITS: usize = 256;

const RM: RoundingMode = RoundingMode::ToEven;

/// Clamp a requested precision to the supported floor.
pub fn check_precision(bits: usize) -> Result<usize> {
    if bits < MIN_PRECISION_BITS {
        Err(Error::PrecisionTooLow(bits))
    } else {
        Ok(bits)
    }
}

pub fn bf_zero(p: usize) -> BigFloat {
    BigFloat::new(p)
}

pub fn bf_from_i64(v: i64, p: usize) -> BigFloat {
    BigFloat::from_i64(v, p)
}

pub fn bf_from_bigint(v: &BigInt, p: usize) -> BigFloat {
    let bits = v.bits() as usize + 32;
    let mut cc = Consts::new().expect("constants cache");
    BigFloat::parse(&v.to_string(), Radix::Dec, p.max(bits), RM, &mut cc)
}

/// Correctly-rounded-to-about-1-ulp value of an exact rational.
pub fn bf_from_rat(r: &Rat, p: usize) -> BigFloat {
    let guard = p + 64;
    let n = bf_from_bigint(r.numer(), guard);
    let d = bf_from_bigint(r.denom(), guard);
    n.div(&d, p, RM)
}

/// Total order for finite values; NaN never compares.
pub fn bf_le(a: &BigFloat, b: &BigFloat) -> bool {
    matches!(a.cmp(b), Some(o) if o <= 0)
}

pub fn bf_lt(a: &BigFloat, b: &BigFloat) -> bool {
    matches!(a.cmp(b), Some(o) if o < 0)
}

/// Lossy conversion for reporting.
pub fn bf_to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    if x.is_zero() {
        return 0.0;
    }
    let (words, _n, sign, e, _) = x.as_raw_parts().expect("finite value has raw parts");
    // mantissa words are little-endian; value = 0.m * 2^e
    let mut frac = 0.0f64;
    for (i, w) in words.iter().rev().take(2).enumerate() {
        frac += (*w as f64) * 2f64.powi(-64 * (i as i32 + 1));
    }
    let mag = if e > 1000 {
        f64::INFINITY
    } else if e < -1000 {
        0.0
    } else {
        frac * 2f64.powi(e)
    };
    if sign == Sign::Neg {
        -mag
    } else {
        mag
    }
}

/// Deterministic decimal rendering at the value's own precision.
pub fn bf_to_string(x: &BigFloat) -> String {
    let mut cc = Consts::new().expect("constants cache");
    x.format(Radix::Dec, RM, &mut cc)
        .unwrap_or_else(|_| "NaN".to_string())
}

/// Complex number with explicit binary precision.
#[derive(Clone, Debug)]
pub struct CxFloat {
    re: BigFloat,
    im: BigFloat,
    prec: usize,
}

impl CxFloat {
    pub fn zero(prec: usize) -> Self {
        CxFloat {
            re: bf_zero(prec),
            im: bf_zero(prec),
            prec,
        }
    }

    pub fn new(re: BigFloat, im: BigFloat, prec: usize) -> Self {
        CxFloat { re, im, prec }
    }

    pub fn real(re: BigFloat, prec: usize) -> Self {
        CxFloat {
            re,
            im: bf_zero(prec),
            prec,
        }
    }

    pub fn from_i64(v: i64, prec: usize) -> Self {
        Self::real(bf_from_i64(v, prec), prec)
    }

    pub fn from_rat(r: &Rat, prec: usize) -> Self {
        Self::real(bf_from_rat(r, prec), prec)
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    pub fn precision_bits(&self) -> usize {
        self.prec
    }

    fn join(&self, other: &Self) -> usize {
        self.prec.max(other.prec)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.join(other);
        CxFloat {
            re: self.re.add(&other.re, p, RM),
            im: self.im.add(&other.im, p, RM),
            prec: p,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.join(other);
        CxFloat {
            re: self.re.sub(&other.re, p, RM),
            im: self.im.sub(&other.im, p, RM),
            prec: p,
        }
    }

    pub fn neg(&self) -> Self {
        CxFloat {
            re: self.re.neg(),
            im: self.im.neg(),
            prec: self.prec,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.join(other);
        let re = self
            .re
            .mul(&other.re, p, RM)
            .sub(&self.im.mul(&other.im, p, RM), p, RM);
        let im = self
            .re
            .mul(&other.im, p, RM)
            .add(&self.im.mul(&other.re, p, RM), p, RM);
        CxFloat { re, im, prec: p }
    }

    pub fn scale(&self, s: &BigFloat) -> Self {
        let p = self.prec;
        CxFloat {
            re: self.re.mul(s, p, RM),
            im: self.im.mul(s, p, RM),
            prec: p,
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        let p = self.join(other);
        let d = other.norm_sq(p);
        let num = self.mul(&other.conj());
        CxFloat {
            re: num.re.div(&d, p, RM),
            im: num.im.div(&d, p, RM),
            prec: p,
        }
    }

    pub fn conj(&self) -> Self {
        CxFloat {
            re: self.re.clone(),
            im: self.im.neg(),
            prec: self.prec,
        }
    }

    fn norm_sq(&self, p: usize) -> BigFloat {
        self.re
            .mul(&self.re, p, RM)
            .add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sq(self.prec).sqrt(self.prec, RM)
    }

    /// Multiply by i^m.
    pub fn mul_i_pow(&self, m: u32) -> Self {
        match m % 4 {
            0 => self.clone(),
            1 => CxFloat {
                re: self.im.neg(),
                im: self.re.clone(),
                prec: self.prec,
            },
            2 => self.neg(),
            _ => CxFloat {
                re: self.im.clone(),
                im: self.re.neg(),
                prec: self.prec,
            },
        }
    }

    pub fn recip(&self) -> Self {
        let one = CxFloat::from_i64(1, self.prec);
        one.div(self)
    }

    /// Integer power by repeated squaring; negative exponents go through
    /// the reciprocal.
    pub fn powi(&self, n: i64) -> Self {
        if n < 0 {
            return self.recip().powi(-n);
        }
        let mut base = self.clone();
        let mut n = n as u64;
        let mut acc = CxFloat::from_i64(1, self.prec);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Round both parts to `prec` bits, dropping internal guard precision.
    pub fn rounded_to(&self, prec: usize) -> Self {
        let mut re = self.re.clone();
        let mut im = self.im.clone();
        // set_precision fails only on invalid precision
        re.set_precision(prec, RM).expect("valid precision");
        im.set_precision(prec, RM).expect("valid precision");
        CxFloat { re, im, prec }
    }

    pub fn to_f64s(&self) -> (f64, f64) {
        (bf_to_f64(&self.re), bf_to_f64(&self.im))
    }

    pub fn abs_f64(&self) -> f64 {
        bf_to_f64(&self.abs())
    }

    pub fn to_string_dec(&self) -> String {
        format!("({}, {})", bf_to_string(&self.re), bf_to_string(&self.im))
    }
}

/// |a - b| / max(|a|, |b|, 1), as a f64. The floor of 1 makes the measure
/// behave as an absolute deviation near zero.
pub fn rel_deviation(a: &CxFloat, b: &CxFloat) -> f64 {
    let p = a.precision_bits().max(b.precision_bits());
    let diff = a.sub(b).abs();
    let sa = a.abs();
    let sb = b.abs();
    let mut scale = sa.max(&sb);
    let one = bf_from_i64(1, p);
    scale = scale.max(&one);
    bf_to_f64(&diff.abs().div(&scale, p, RM))
}

/// Exact conversion helper: true if |x| <= 10^exp10.
pub fn abs_below_pow10(x: &BigFloat, exp10: i32) -> bool {
    let p = x.precision().unwrap_or(DEFAULT_PRECISION_BITS).max(64);
    let mut cc = Consts::new().expect("constants cache");
    let ten = bf_from_i64(10, p);
    let bound = ten.pow(&bf_from_i64(exp10 as i64, p), p, RM, &mut cc);
    bf_le(&x.abs(), &bound)
}
