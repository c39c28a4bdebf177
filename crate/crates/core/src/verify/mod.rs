//! Desk-scale certification: the Vassiliev extension and order checks, the
//! z-exponent floor and delta-basis decomposition, the Dubrovnik/Kauffman
//! identity, and the two-path substitution crosscheck.

mod suite;

pub use suite::{run_check, run_suite, CheckResult, SuiteConfig, CHECK_NAMES};

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_traits::Zero;

use crate::algebra::{LaurentPoly2, Rat, VarPair};
use crate::approx::{substitute_v_exp, w_direct, CoeffTable};
use crate::diagram::LinkDiagram;
use crate::error::Result;
use crate::skein::{dubrovnik, dubrovnik_from_kauffman, kauffman_from_dubrovnik};

pub type InvariantFn<'a> = dyn Fn(&LinkDiagram) -> Result<Rat> + 'a;

/// Extension of an invariant to singular links by the alternating sum over
/// all resolutions.
pub fn extend_to_singular(invariant: &InvariantFn, d: &LinkDiagram) -> Result<Rat> {
    let mut acc = Rat::zero();
    for (sign, res) in d.resolve_singulars() {
        let v = invariant(&res)?;
        if sign > 0 {
            acc += v;
        } else {
            acc -= v;
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct SampleOutcome {
    pub id: String,
    pub singular_count: usize,
    /// `Err` carries per-sample failures (resource errors included) without
    /// aborting the rest of the check.
    pub value: std::result::Result<Rat, String>,
}

#[derive(Clone, Debug)]
pub struct OrderCheckReport {
    pub invariant_name: String,
    pub claimed_order: u32,
    pub samples: Vec<SampleOutcome>,
    pub all_zero_at_q_plus_1: bool,
}

/// Evaluates the extended invariant on samples carrying `claimed_order + 1`
/// double points; the report passes iff every value is exactly zero.
pub fn order_check(
    invariant_name: &str,
    invariant: &InvariantFn,
    claimed_order: u32,
    samples: &[(String, LinkDiagram)],
) -> OrderCheckReport {
    let mut outcomes = Vec::with_capacity(samples.len());
    let mut all_zero = true;
    for (id, d) in samples {
        let s = d.singular_count();
        let value = if s != claimed_order as usize + 1 {
            all_zero = false;
            Err(format!(
                "sample has {s} double points, expected {}",
                claimed_order + 1
            ))
        } else {
            match extend_to_singular(invariant, d) {
                Ok(v) => {
                    if !v.is_zero() {
                        all_zero = false;
                    }
                    Ok(v)
                }
                Err(e) => {
                    all_zero = false;
                    Err(e.to_string())
                }
            }
        };
        outcomes.push(SampleOutcome {
            id: id.clone(),
            singular_count: s,
            value,
        });
    }
    OrderCheckReport {
        invariant_name: invariant_name.to_string(),
        claimed_order,
        samples: outcomes,
        all_zero_at_q_plus_1: all_zero,
    }
}

/// True iff the minimum z-exponent respects the floor -mu+1.
pub fn z_lowbound_check(p: &LaurentPoly2, mu: u32) -> bool {
    match p.min_e2() {
        None => true,
        Some(min) => min > -(mu as i64),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DeltaBasis {
    /// delta = (v^-1 - v)/z, the sign the skein axioms force on split unions.
    Homflypt,
    /// (a - a^-1 + z)/z.
    Dubrovnik,
}

impl DeltaBasis {
    fn vars(self) -> VarPair {
        match self {
            DeltaBasis::Homflypt => VarPair::VZ,
            DeltaBasis::Dubrovnik => VarPair::AZ,
        }
    }

    /// The numerator polynomial of the basis element.
    pub fn numerator(self) -> LaurentPoly2 {
        use crate::algebra::rat_int;
        match self {
            DeltaBasis::Homflypt => LaurentPoly2::from_terms(
                VarPair::VZ,
                [((-1, 0), rat_int(1)), ((1, 0), rat_int(-1))],
            ),
            DeltaBasis::Dubrovnik => LaurentPoly2::from_terms(
                VarPair::AZ,
                [
                    ((1, 0), rat_int(1)),
                    ((-1, 0), rat_int(-1)),
                    ((0, 1), rat_int(1)),
                ],
            ),
        }
    }

    /// pure first-variable factor whose r-th power divides the z^-r layer
    fn layer_divisor(self) -> Vec<(i64, Rat)> {
        use crate::algebra::rat_int;
        match self {
            // (v^-1 - v)
            DeltaBasis::Homflypt => vec![(-1, rat_int(1)), (1, rat_int(-1))],
            // z^0 part of (a - a^-1 + z) is (a - a^-1)
            DeltaBasis::Dubrovnik => vec![(-1, rat_int(-1)), (1, rat_int(1))],
        }
    }

    /// The basis element delta^1 as a Laurent polynomial.
    pub fn element(self) -> LaurentPoly2 {
        self.numerator()
            .mul_mono(0, -1, &crate::algebra::rat_int(1))
    }
}

#[derive(Clone, Debug)]
pub struct DeltaDecomposition {
    pub basis: DeltaBasis,
    /// power r >= 1 -> coefficient in the first variable only; key 0 holds
    /// the leftover polynomial part (no negative z-exponents).
    pub parts: BTreeMap<u32, LaurentPoly2>,
}

impl DeltaDecomposition {
    /// Reassembles sum_r parts[r] * delta^r; equals the decomposed input.
    pub fn reconstruct(&self) -> LaurentPoly2 {
        let elem = self.basis.element();
        let mut acc = LaurentPoly2::zero(self.basis.vars());
        for (&r, coef) in &self.parts {
            let term = coef.mul(&elem.pow(r)).expect("same vars");
            acc = acc.add(&term).expect("same vars");
        }
        acc
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionObstruction {
    pub power: i64,
    pub reason: String,
}

/// Greedy peeling of delta powers off the lowest z-layers. Fails when the
/// z-floor exceeds mu-1 or a layer is not divisible by the required power of
/// the numerator; for genuine link polynomials the lemma rules both out, so
/// a failure flags an upstream bug, not bad input.
pub fn delta_basis_decompose(
    p: &LaurentPoly2,
    mu: u32,
    basis: DeltaBasis,
) -> std::result::Result<DeltaDecomposition, DecompositionObstruction> {
    let mut rem = p.clone();
    let mut parts: BTreeMap<u32, LaurentPoly2> = BTreeMap::new();
    loop {
        let min = rem.min_e2().unwrap_or(0);
        if min >= 0 {
            if !rem.is_zero() {
                parts.insert(0, rem);
            }
            return Ok(DeltaDecomposition { basis, parts });
        }
        let r = (-min) as u32;
        if r as i64 > mu as i64 - 1 {
            return Err(DecompositionObstruction {
                power: r as i64,
                reason: format!("z^-{r} layer present but mu-1 = {}", mu - 1),
            });
        }
        let layer = rem.e2_layer(min);
        let divisor = power_univar(&basis.layer_divisor(), r);
        let quotient = match divide_univar(&layer, &divisor) {
            Some(q) => q,
            None => {
                return Err(DecompositionObstruction {
                    power: r as i64,
                    reason: format!("z^-{r} layer is not divisible by the numerator power"),
                })
            }
        };
        let coef = LaurentPoly2::from_terms(
            basis.vars(),
            quotient.iter().map(|(&e, c)| ((e, 0), c.clone())),
        );
        let term = coef.mul(&basis.element().pow(r)).expect("same vars");
        rem = rem.sub(&term).expect("same vars");
        debug_assert!(
            rem.min_e2().unwrap_or(0) > min,
            "peeling must raise the floor"
        );
        parts.insert(r, coef);
    }
}

/// Exact division of univariate Laurent polynomials; `None` when it fails.
fn divide_univar(
    numer: &BTreeMap<i64, Rat>,
    denom: &BTreeMap<i64, Rat>,
) -> Option<BTreeMap<i64, Rat>> {
    if numer.is_empty() {
        return Some(BTreeMap::new());
    }
    let (n_lo, n_hi) = (*numer.keys().next()?, *numer.keys().last()?);
    let (d_lo, d_hi) = (*denom.keys().next()?, *denom.keys().last()?);
    let deg_n = (n_hi - n_lo) as usize;
    let deg_d = (d_hi - d_lo) as usize;
    if deg_d > deg_n {
        return None;
    }
    // dense descending division of the shifted ordinary polynomials
    let mut num: Vec<Rat> = (0..=deg_n as i64).map(|e| get(numer, e + n_lo)).collect();
    let den: Vec<Rat> = (0..=deg_d as i64).map(|e| get(denom, e + d_lo)).collect();
    let lead = den.last().expect("nonzero divisor").clone();
    let mut q = vec![Rat::zero(); deg_n - deg_d + 1];
    for i in (0..q.len()).rev() {
        let c = &num[i + deg_d] / &lead;
        if !c.is_zero() {
            for (jj, dc) in den.iter().enumerate() {
                let v = dc * &c;
                num[i + jj] -= v;
            }
        }
        q[i] = c;
    }
    if num.iter().any(|c| !c.is_zero()) {
        return None;
    }
    let shift = n_lo - d_lo;
    Some(
        q.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 + shift, c))
            .collect(),
    )
}

fn get(m: &BTreeMap<i64, Rat>, k: i64) -> Rat {
    m.get(&k).cloned().unwrap_or_else(Rat::zero)
}

fn power_univar(base: &[(i64, Rat)], r: u32) -> BTreeMap<i64, Rat> {
    let mut acc: BTreeMap<i64, Rat> = BTreeMap::new();
    acc.insert(0, Rat::from_integer(1.into()));
    for _ in 0..r {
        let mut next: BTreeMap<i64, Rat> = BTreeMap::new();
        for (&e1, c1) in &acc {
            for (e2, c2) in base {
                let e = e1 + e2;
                let v = c1 * c2;
                let slot = next.entry(e).or_insert_with(Rat::zero);
                *slot += v;
                if slot.is_zero() {
                    next.remove(&e);
                }
            }
        }
        acc = next;
    }
    acc
}

/// True iff the Kauffman conversion of F^D(L) is rational-coefficient and
/// substituting back reproduces F^D(L) exactly.
pub fn dubrovnik_kauffman_identity_check(d: &LinkDiagram) -> Result<bool> {
    let mu = d.components();
    let f = dubrovnik(d)?;
    let Ok(k) = kauffman_from_dubrovnik(&f, mu) else {
        return Ok(false);
    };
    let Ok(back) = dubrovnik_from_kauffman(&k, mu) else {
        return Ok(false);
    };
    Ok(back == f)
}

/// Certifies the change-of-variable identity: the direct formula for w_{Nq}
/// must match the series-substitution coefficients over the whole range.
/// q below the floor -mu+1 is skipped.
pub fn substitution_crosscheck(
    t: &CoeffTable,
    n_range: RangeInclusive<i64>,
    q_range: RangeInclusive<i64>,
) -> bool {
    crosscheck_tables(t, t, n_range, q_range)
}

/// Two-table variant used for fault injection: w_direct runs on `t_w`, the
/// series substitution on `t_series`.
pub fn crosscheck_tables(
    t_w: &CoeffTable,
    t_series: &CoeffTable,
    n_range: RangeInclusive<i64>,
    q_range: RangeInclusive<i64>,
) -> bool {
    let q_lo = *q_range.start().max(&t_w.z_floor());
    let q_hi = *q_range.end();
    if q_hi < 0 {
        return true;
    }
    for big_n in n_range {
        let Ok(series) = substitute_v_exp(t_series, big_n, q_hi as usize) else {
            return false;
        };
        for q in q_lo..=q_hi {
            let Ok(w) = w_direct(t_w, big_n, q) else {
                return false;
            };
            let ok = if q < 0 {
                w.is_zero()
            } else {
                &w == series.coeff(q as usize)
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests;
