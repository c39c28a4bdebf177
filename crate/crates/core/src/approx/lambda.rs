//! The weight sequence lambda_{m,n} = (1/2pi) int_0^{2pi} (it)^m e^{-int} dt
//! and the partial sums v^N_{nj} = sum_{m<=N} lambda_{m,n} B_{mj}.
//!
//! Three independent routes are implemented: the integration-by-parts
//! recurrence (the working definition), the closed form for n != 0, and
//! adaptive quadrature of the defining integral. The recurrence cancels
//! heavily once m exceeds 2 pi |n|, roughly log2(m / 2pi|n|) bits per step,
//! so it runs at an internally raised working precision before rounding
//! back to the requested bits.

use astro_float::{BigFloat, Consts, RoundingMode};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{
    bf_from_i64, bf_le, bf_to_f64, factorial, CxFloat, Rat, TanhSinh, MIN_PRECISION_BITS,
};

use super::{b_coeff, CoeffTable};

const RM: RoundingMode = RoundingMode::ToEven;

fn work_precision_for(m: u32, n: i64, prec: usize) -> usize {
    let base = (2.0 * std::f64::consts::PI * n.unsigned_abs().max(1) as f64).max(1.0);
    let mut extra = 0.0f64;
    for k in 1..=m {
        let r = k as f64 / base;
        if r > 1.0 {
            extra += r.log2();
        }
    }
    prec + extra.ceil() as usize + 64
}

fn two_pi(prec: usize, cc: &mut Consts) -> BigFloat {
    cc.pi(prec, RM).mul(&bf_from_i64(2, prec), prec, RM)
}

/// lambda_{m,n} by the exact recurrence
/// J_0(n) = 0, J_m(n) = (-(2pi)^m + m J_{m-1}(n)) / (i n) for n != 0,
/// J_m(0) = (2pi)^{m+1}/(m+1), and lambda_{m,n} = i^m J_m(n) / (2pi).
pub fn lambda_weight(m: u32, n: i64, precision_bits: usize) -> CxFloat {
    lambda_sequence(m, n, precision_bits)
        .pop()
        .expect("sequence is nonempty")
}

/// All of lambda_{0,n} .. lambda_{m_max,n} in one recurrence sweep.
pub fn lambda_sequence(m_max: u32, n: i64, precision_bits: usize) -> Vec<CxFloat> {
    let prec = precision_bits.max(MIN_PRECISION_BITS);
    let wp = work_precision_for(m_max, n, prec);
    let mut cc = Consts::new().expect("constants cache");
    let tp = two_pi(wp, &mut cc);
    let mut out = Vec::with_capacity(m_max as usize + 1);
    if n == 0 {
        // lambda_{m,0} = i^m (2pi)^m / (m+1)
        let mut pw = bf_from_i64(1, wp);
        for m in 0..=m_max {
            let mag = pw.div(&bf_from_i64(m as i64 + 1, wp), wp, RM);
            out.push(CxFloat::real(mag, wp).mul_i_pow(m).rounded_to(prec));
            pw = pw.mul(&tp, wp, RM);
        }
        return out;
    }
    let i_n = CxFloat::new(BigFloat::new(wp), bf_from_i64(n, wp), wp);
    let mut j = CxFloat::zero(wp); // J_0 = 0
    let mut tp_pow = bf_from_i64(1, wp); // (2pi)^m
    out.push(CxFloat::zero(wp).rounded_to(prec)); // lambda_{0,n} = 0 exactly
    for m in 1..=m_max {
        tp_pow = tp_pow.mul(&tp, wp, RM);
        let num = CxFloat::real(tp_pow.neg(), wp).add(&j.scale(&bf_from_i64(m as i64, wp)));
        j = num.div(&i_n);
        let lam = j.scale(&bf_from_i64(1, wp).div(&tp, wp, RM)).mul_i_pow(m);
        out.push(lam.rounded_to(prec));
    }
    out
}

/// The closed form
/// lambda_{m,n} = sum_{p=0}^{m-1} -(2 pi i)^{m-p-1} / n * m! / (n^p (m-p)!),
/// defined for n != 0 only.
pub fn lambda_closed_form(m: u32, n: i64, precision_bits: usize) -> Option<CxFloat> {
    if n == 0 {
        return None;
    }
    let prec = precision_bits.max(MIN_PRECISION_BITS);
    let wp = work_precision_for(m, n, prec);
    let mut cc = Consts::new().expect("constants cache");
    let tp = two_pi(wp, &mut cc);
    let mut acc = CxFloat::zero(wp);
    let m_fact = factorial(m);
    for p in 0..m {
        let e = m - p - 1;
        // exact rational part: -m! / (n^{p+1} (m-p)!)
        let denom = BigInt::from(n).pow(p + 1) * factorial(m - p);
        let coef = Rat::new(-m_fact.clone(), denom);
        let term = CxFloat::from_rat(&coef, wp)
            .scale(&tp.powi(e as usize, wp, RM))
            .mul_i_pow(e);
        acc = acc.add(&term);
    }
    Some(acc.rounded_to(prec))
}

/// Tolerance, in bits, matching the documented 10^-(prec/8) relative target.
fn quad_tol_bits(prec: usize) -> usize {
    ((prec as f64 / 8.0) * std::f64::consts::LOG2_10).ceil() as usize
}

/// Adaptive tanh-sinh quadrature of the defining integral.
pub fn lambda_quadrature(m: u32, n: i64, precision_bits: usize) -> CxFloat {
    let prec = precision_bits.max(MIN_PRECISION_BITS);
    let tol = quad_tol_bits(prec);
    let wp = tol + 128;
    let ts = TanhSinh::new(wp, 11);
    integrate_lambda_grid(&ts, m, n, tol).pop().unwrap()
}

fn integrate_lambda_grid(ts: &TanhSinh, m_max: u32, n: i64, tol: usize) -> Vec<CxFloat> {
    let wp = ts.work_prec();
    let mut cc = Consts::new().expect("constants cache");
    let tp = two_pi(wp, &mut cc);
    let zero = BigFloat::new(wp);
    let inv_tp = bf_from_i64(1, wp).div(&tp, wp, RM);
    let mut trig = Consts::new().expect("constants cache");
    let raw = ts.integrate_multi(&zero, &tp, m_max as usize + 1, tol, |t| {
        // e^{-int} = (cos t - i sin t)^n, powers of t built incrementally
        let c = t.cos(wp, RM, &mut trig);
        let s = t.sin(wp, RM, &mut trig);
        let phase = CxFloat::new(c, s.neg(), wp).powi(n);
        let mut vals = Vec::with_capacity(m_max as usize + 1);
        let mut tm = CxFloat::from_i64(1, wp);
        for m in 0..=m_max {
            vals.push(tm.mul(&phase).mul_i_pow(m));
            tm = tm.scale(t);
        }
        vals
    });
    raw.into_iter().map(|v| v.scale(&inv_tp)).collect()
}

/// One row of the three-way consistency table.
#[derive(Clone, Debug)]
pub struct LambdaRow {
    pub m: u32,
    pub n: i64,
    pub recurrence: CxFloat,
    pub closed_form: Option<CxFloat>,
    pub quadrature: CxFloat,
    /// |rec - quad| / max(|rec|, |quad|, 1)
    pub dev_rec_quad: f64,
    pub dev_closed_quad: Option<f64>,
    pub dev_closed_rec: Option<f64>,
}

/// Recurrence, closed form and quadrature for every m <= m_max, |n| <= n_max.
pub fn lambda_table(m_max: u32, n_max: i64, precision_bits: usize) -> Vec<LambdaRow> {
    let prec = precision_bits.max(MIN_PRECISION_BITS);
    let tol = quad_tol_bits(prec);
    let ts = TanhSinh::new(tol + 128, 11);
    let mut rows = Vec::new();
    for n in -n_max..=n_max {
        let rec = lambda_sequence(m_max, n, prec);
        let quad = integrate_lambda_grid(&ts, m_max, n, tol);
        for m in 0..=m_max {
            let recurrence = rec[m as usize].clone();
            let quadrature = quad[m as usize].clone();
            let closed_form = lambda_closed_form(m, n, prec);
            let dev_rec_quad = crate::algebra::rel_deviation(&recurrence, &quadrature);
            let dev_closed_quad = closed_form
                .as_ref()
                .map(|c| crate::algebra::rel_deviation(c, &quadrature));
            let dev_closed_rec = closed_form
                .as_ref()
                .map(|c| crate::algebra::rel_deviation(c, &recurrence));
            rows.push(LambdaRow {
                m,
                n,
                recurrence,
                closed_form,
                quadrature,
                dev_rec_quad,
                dev_closed_quad,
                dev_closed_rec,
            });
        }
    }
    rows
}

/// Partial sums of a_{kj} = sum_m B_{mj} lambda_{m,k} against the exact
/// table value.
#[derive(Clone, Debug)]
pub struct ApproxReport {
    pub target: (i64, i64),
    pub exact_value: Rat,
    /// (N, v^N_{kj}) for N = 0..=N_max
    pub sequence: Vec<(u32, CxFloat)>,
    /// First index from which every later partial sum equals the target
    /// bit-exactly; floating-point convergence normally leaves this unset.
    pub stabilized_at: Option<u32>,
    /// max |v^N - a_kj| over the last 20 partial sums, as a float
    pub max_abs_error_tail: f64,
}

pub const TAIL_WINDOW: usize = 20;

impl ApproxReport {
    pub fn abs_errors(&self) -> Vec<BigFloat> {
        let prec = self
            .sequence
            .first()
            .map(|(_, v)| v.precision_bits())
            .unwrap_or(MIN_PRECISION_BITS);
        let exact = CxFloat::from_rat(&self.exact_value, prec);
        self.sequence
            .iter()
            .map(|(_, v)| v.sub(&exact).abs())
            .collect()
    }

    pub fn final_abs_error(&self) -> f64 {
        self.abs_errors().last().map(bf_to_f64).unwrap_or(f64::NAN)
    }

    /// True if the errors over the last `window` partial sums never increase.
    /// Errors at the working-precision floor (half the precision bits, far
    /// below any acceptance tolerance) count as zero: once the sum has
    /// converged to machine level the remaining ulp jitter is not a trend.
    pub fn tail_nonincreasing(&self, window: usize) -> bool {
        let prec = self
            .sequence
            .first()
            .map(|(_, v)| v.precision_bits())
            .unwrap_or(MIN_PRECISION_BITS);
        let floor = {
            let mut f = bf_from_i64(1, prec);
            f.set_exponent(f.exponent().unwrap_or(1) - (prec / 2) as i32);
            let scale = CxFloat::from_rat(&self.exact_value, prec)
                .abs()
                .max(&bf_from_i64(1, prec));
            f.mul(&scale, prec, RM)
        };
        let zero = BigFloat::new(prec);
        let errs: Vec<BigFloat> = self
            .abs_errors()
            .into_iter()
            .map(|e| if bf_le(&e, &floor) { zero.clone() } else { e })
            .collect();
        let start = errs.len().saturating_sub(window);
        errs[start..].windows(2).all(|w| bf_le(&w[1], &w[0]))
    }
}

/// Runs the lambda-weighted partial sums for one coefficient cell.
pub fn approx_sequence(
    t: &CoeffTable,
    k: i64,
    j: i64,
    n_max: u32,
    precision_bits: usize,
) -> ApproxReport {
    let prec = precision_bits.max(MIN_PRECISION_BITS);
    let exact = t.get(k, j);
    let lambdas = lambda_sequence(n_max, k, prec);
    let exact_cx = CxFloat::from_rat(&exact, prec);

    let mut sequence = Vec::with_capacity(n_max as usize + 1);
    let mut acc = CxFloat::zero(prec);
    for m in 0..=n_max {
        let b = b_coeff(t, m, j);
        if !b.is_zero() {
            acc = acc.add(&lambdas[m as usize].mul(&CxFloat::from_rat(&b, prec)));
        }
        sequence.push((m, acc.clone().rounded_to(prec)));
    }

    // exact-equality stabilization scan from the end
    let mut stabilized_at = None;
    for (m, v) in sequence.iter().rev() {
        let equal = v.sub(&exact_cx).abs().is_zero();
        if equal {
            stabilized_at = Some(*m);
        } else {
            break;
        }
    }

    let mut report = ApproxReport {
        target: (k, j),
        exact_value: exact,
        sequence,
        stabilized_at,
        max_abs_error_tail: 0.0,
    };
    let errs = report.abs_errors();
    let start = errs.len().saturating_sub(TAIL_WINDOW);
    report.max_abs_error_tail = errs[start..].iter().map(bf_to_f64).fold(0.0f64, f64::max);
    report
}
