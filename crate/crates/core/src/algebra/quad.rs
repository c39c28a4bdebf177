//! Adaptive tanh-sinh quadrature for smooth complex integrands.
//!
//! Levels double the node density; refinement stops once every component of
//! the integrand vector is stable to the requested tolerance. Nodes and
//! weights are cached per level so a table of related integrals (sharing the
//! same interval and precision) pays for node generation once.

use astro_float::{BigFloat, Consts, RoundingMode};

use super::cx::{bf_from_i64, bf_le, CxFloat};

const RM: RoundingMode = RoundingMode::ToEven;

// abscissa cutoff: weights decay like exp(-pi/2 * e^u), so u = 7 covers
// working precisions beyond 1500 bits
const U_MAX: f64 = 7.0;

pub struct TanhSinh {
    work_prec: usize,
    // level l holds the nodes at odd multiples of h_l = 2^-l (level 0: all k)
    levels: Vec<Vec<(BigFloat, BigFloat)>>, // (x in [0,1), weight), symmetric pair implied
}

impl TanhSinh {
    pub fn new(work_prec: usize, max_level: usize) -> Self {
        let mut cc = Consts::new().expect("constants cache");
        let wp = work_prec;
        let half_pi = {
            let pi = cc.pi(wp, RM);
            pi.div(&bf_from_i64(2, wp), wp, RM)
        };
        let mut levels = Vec::with_capacity(max_level + 1);
        for level in 0..=max_level {
            let h = 0.5f64.powi(level as i32);
            let mut nodes = Vec::new();
            let mut k: u64 = if level == 0 { 0 } else { 1 };
            let step = if level == 0 { 1 } else { 2 };
            loop {
                let u = h * k as f64;
                if u > U_MAX {
                    break;
                }
                let ubf = BigFloat::from_f64(u, wp); // dyadic, exact
                let sh = ubf.sinh(wp, RM, &mut cc);
                let ch = ubf.cosh(wp, RM, &mut cc);
                let arg = half_pi.mul(&sh, wp, RM);
                let x = arg.tanh(wp, RM, &mut cc);
                let sech = bf_from_i64(1, wp).div(&arg.cosh(wp, RM, &mut cc), wp, RM);
                let w = half_pi
                    .mul(&ch, wp, RM)
                    .mul(&sech, wp, RM)
                    .mul(&sech, wp, RM);
                nodes.push((x, w));
                k += step;
            }
            levels.push(nodes);
        }
        TanhSinh {
            work_prec: wp,
            levels,
        }
    }

    pub fn work_prec(&self) -> usize {
        self.work_prec
    }

    /// Integrates a vector of integrands over [a, b].
    ///
    /// `tol_log2` is the stability requirement in bits: refinement stops when
    /// every component changes by less than 2^-tol_log2 * max(|component|, 1).
    pub fn integrate_multi<F>(
        &self,
        a: &BigFloat,
        b: &BigFloat,
        n_components: usize,
        tol_log2: usize,
        mut f: F,
    ) -> Vec<CxFloat>
    where
        F: FnMut(&BigFloat) -> Vec<CxFloat>,
    {
        let wp = self.work_prec;
        let two = bf_from_i64(2, wp);
        let mid = a.add(b, wp, RM).div(&two, wp, RM);
        let rad = b.sub(a, wp, RM).div(&two, wp, RM);

        let tol = {
            let mut t = bf_from_i64(1, wp);
            t.set_exponent(t.exponent().unwrap_or(1) - tol_log2 as i32);
            t
        };
        let one = bf_from_i64(1, wp);

        let mut sums: Vec<CxFloat> = vec![CxFloat::zero(wp); n_components];
        let mut prev: Option<Vec<CxFloat>> = None;
        let mut result = vec![CxFloat::zero(wp); n_components];
        for (level, nodes) in self.levels.iter().enumerate() {
            for (i, (x, w)) in nodes.iter().enumerate() {
                let center = level == 0 && i == 0;
                let offsets = if center {
                    vec![mid.clone()]
                } else {
                    let d = rad.mul(x, wp, RM);
                    vec![mid.add(&d, wp, RM), mid.sub(&d, wp, RM)]
                };
                for t in &offsets {
                    let vals = f(t);
                    debug_assert_eq!(vals.len(), n_components);
                    for (slot, v) in sums.iter_mut().zip(vals) {
                        *slot = slot.add(&v.scale(w));
                    }
                }
            }
            // S_level = h_level * rad * sums
            let mut h = bf_from_i64(1, wp);
            h.set_exponent(h.exponent().unwrap_or(1) - level as i32);
            let scale = h.mul(&rad, wp, RM);
            result = sums.iter().map(|s| s.scale(&scale)).collect();
            if let Some(p) = &prev {
                let mut done = true;
                for (r, q) in result.iter().zip(p) {
                    let diff = r.sub(q).abs();
                    let mag = r.abs().max(&one);
                    if !bf_le(&diff, &mag.mul(&tol, wp, RM)) {
                        done = false;
                        break;
                    }
                }
                if done {
                    break;
                }
            }
            prev = Some(result.clone());
        }
        result
    }

    pub fn integrate<F>(&self, a: &BigFloat, b: &BigFloat, tol_log2: usize, mut f: F) -> CxFloat
    where
        F: FnMut(&BigFloat) -> CxFloat,
    {
        self.integrate_multi(a, b, 1, tol_log2, |x| vec![f(x)])
            .pop()
            .unwrap_or_else(|| CxFloat::zero(self.work_prec))
    }
}
