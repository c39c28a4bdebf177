//! From polynomial to finite-type data: the coefficient grid a_{kj}, the
//! substitution invariants w_{Nq}, the intermediates B_{mj}, and the two
//! exact Vandermonde recoveries that invert them.

mod lambda;

pub use lambda::{
    approx_sequence, lambda_closed_form, lambda_quadrature, lambda_sequence, lambda_table,
    lambda_weight, ApproxReport, LambdaRow, TAIL_WINDOW,
};

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    factorial, format_rat, int_pow, parse_rat, solve_vandermonde, solve_vandermonde_dual, CxFloat,
    LaurentPoly2, Rat, Series,
};
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};

/// The grid a_{kj}(L) of a mu-component link, with its degree d. Lookups
/// outside the stored support return 0.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "CoeffTableRepr", into = "CoeffTableRepr")]
pub struct CoeffTable {
    mu: u32,
    degree_d: i64,
    entries: BTreeMap<(i64, i64), Rat>,
}

#[derive(Serialize, Deserialize, Clone)]
struct CoeffTableRepr {
    mu: u32,
    d: i64,
    entries: Vec<(i64, i64, String)>,
}

impl TryFrom<CoeffTableRepr> for CoeffTable {
    type Error = Error;

    fn try_from(r: CoeffTableRepr) -> Result<CoeffTable> {
        let mut entries = BTreeMap::new();
        for (k, j, s) in &r.entries {
            let c = parse_rat(s)?;
            if c.is_zero() {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("zero entry at ({k},{j})"),
                });
            }
            if entries.insert((*k, *j), c).is_some() {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("duplicate entry ({k},{j})"),
                });
            }
        }
        let t = CoeffTable {
            mu: r.mu,
            degree_d: r.d,
            entries,
        };
        t.check_bounds()?;
        Ok(t)
    }
}

impl From<CoeffTable> for CoeffTableRepr {
    fn from(t: CoeffTable) -> CoeffTableRepr {
        CoeffTableRepr {
            mu: t.mu,
            d: t.degree_d,
            entries: t
                .entries
                .iter()
                .map(|(&(k, j), c)| (k, j, format_rat(c)))
                .collect(),
        }
    }
}

impl CoeffTable {
    fn check_bounds(&self) -> Result<()> {
        if self.mu == 0 {
            return Err(Error::Parse {
                pos: 0,
                msg: "mu must be positive".into(),
            });
        }
        let floor = self.z_floor();
        for &(k, j) in self.entries.keys() {
            if j < floor {
                return Err(Error::ZFloor { found: j, floor });
            }
            if k.abs() > self.degree_d || j > self.degree_d {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("entry ({k},{j}) outside degree bound {}", self.degree_d),
                });
            }
        }
        Ok(())
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn degree(&self) -> i64 {
        self.degree_d
    }

    /// -mu + 1, the lowest admissible z-exponent.
    pub fn z_floor(&self) -> i64 {
        -(self.mu as i64) + 1
    }

    pub fn get(&self, k: i64, j: i64) -> Rat {
        self.entries.get(&(k, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(i64, i64), &Rat)> {
        self.entries.iter()
    }

    pub fn support(&self) -> Vec<(i64, i64)> {
        self.entries.keys().copied().collect()
    }

    /// Nonzero entries of column j as (k, a_{kj}).
    pub fn column(&self, j: i64) -> Vec<(i64, Rat)> {
        self.entries
            .iter()
            .filter(|((_, jj), _)| *jj == j)
            .map(|(&(k, _), c)| (k, c.clone()))
            .collect()
    }

    /// Distinct j values on the support.
    pub fn j_support(&self) -> Vec<i64> {
        let mut js: Vec<i64> = self.entries.keys().map(|&(_, j)| j).collect();
        js.sort_unstable();
        js.dedup();
        js
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    pub fn from_json(s: &str) -> Result<CoeffTable> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            pos: 0,
            msg: e.to_string(),
        })
    }

    /// Copy with one entry shifted by `delta` (used for fault injection).
    pub fn perturbed(&self, index: usize, delta: &Rat) -> CoeffTable {
        let mut entries = self.entries.clone();
        if let Some((&key, _)) = self.entries.iter().nth(index % self.entries.len().max(1)) {
            let v = entries.get_mut(&key).unwrap();
            *v += delta;
            if v.is_zero() {
                entries.remove(&key);
            }
        }
        CoeffTable {
            mu: self.mu,
            degree_d: self.degree_d,
            entries,
        }
    }
}

/// Extracts the coefficient grid of a polynomial in (v, z), enforcing the
/// z-exponent floor -mu+1.
pub fn coeff_table(p: &LaurentPoly2, mu: u32) -> Result<CoeffTable> {
    assert!(mu >= 1, "links have at least one component");
    let floor = -(mu as i64) + 1;
    if let Some(min) = p.min_e2() {
        if min < floor {
            return Err(Error::ZFloor { found: min, floor });
        }
    }
    let entries: BTreeMap<(i64, i64), Rat> =
        p.terms().map(|(&(k, j), c)| ((k, j), c.clone())).collect();
    Ok(CoeffTable {
        mu,
        degree_d: p.degree(),
        entries,
    })
}

/// Convenience: table of the HOMFLYPT polynomial of a diagram.
pub fn coeff_table_of(d: &LinkDiagram) -> Result<CoeffTable> {
    coeff_table(&crate::skein::homflypt(d)?, d.components())
}

/// w_{Nq}(L) = sum_{0<=p<=q+mu-1} N^p sum_k a_{k,q-p} k^p / p!,
/// with 0^0 = 1. Defined for q >= -mu+1.
pub fn w_direct(t: &CoeffTable, big_n: i64, q: i64) -> Result<Rat> {
    let floor = t.z_floor();
    if q < floor {
        return Err(Error::QBelowFloor { q, floor });
    }
    let p_max = (q + t.mu as i64 - 1) as u32;
    let mut acc = Rat::zero();
    for p in 0..=p_max {
        let j = q - p as i64;
        let mut inner = Rat::zero();
        for (k, c) in t.column(j) {
            inner += c * int_pow(k, p);
        }
        if inner.is_zero() {
            continue;
        }
        acc += int_pow(big_n, p) * inner / Rat::from_integer(factorial(p));
    }
    Ok(acc)
}

/// Truncated expansion of P_L(e^{Nx}, x): computes
/// sum a_{kj} e^{Nkx} x^{j+mu-1} to order Q+mu-1 and shifts down by mu-1.
/// The shifted-away prefix must vanish (that is the q < 0 part of the
/// lemma); a nonzero coefficient there is reported as a floor violation.
pub fn substitute_v_exp(t: &CoeffTable, big_n: i64, order_cap: usize) -> Result<Series> {
    let shift = (t.mu - 1) as usize;
    let full_cap = order_cap + shift;
    let mut total = Series::zeros(full_cap);
    // group by k so e^{Nkx} is expanded once per exponent
    let mut by_k: BTreeMap<i64, Vec<(i64, Rat)>> = BTreeMap::new();
    for (&(k, j), c) in t.entries() {
        by_k.entry(k).or_default().push((j, c.clone()));
    }
    for (k, terms) in by_k {
        let e = Series::exp_series(big_n * k, full_cap);
        for (j, c) in terms {
            let up = (j - t.z_floor()) as usize;
            total = total.add(&e.shift_up(up).scale(&c));
        }
    }
    total.shift_down_checked(shift).map_err(|e| match e {
        Error::ZFloor { found, .. } => Error::ZFloor {
            found,
            floor: t.z_floor(),
        },
        other => other,
    })
}

/// B_{mj}(L) = sum_k a_{kj}(L) k^m / m!, with 0^0 = 1.
pub fn b_coeff(t: &CoeffTable, m: u32, j: i64) -> Rat {
    let mut acc = Rat::zero();
    for (k, c) in t.column(j) {
        acc += c * int_pow(k, m);
    }
    acc / Rat::from_integer(factorial(m))
}

/// Solves the A_n system with parameters N = 1..n against the w-values of
/// one q; entry p of the result is B_{p, q-p}. Requires n >= q + mu.
pub fn recover_b_from_w(t: &CoeffTable, q: i64, n: usize) -> Result<Vec<Rat>> {
    let floor = t.z_floor();
    if q < floor {
        return Err(Error::QBelowFloor { q, floor });
    }
    let need = (q + t.mu as i64) as usize;
    if n < need {
        return Err(Error::UnderDetermined { n, need });
    }
    let params: Vec<i64> = (1..=n as i64).collect();
    let rhs = params
        .iter()
        .map(|&big_n| w_direct(t, big_n, q))
        .collect::<Result<Vec<Rat>>>()?;
    solve_vandermonde(&params, &rhs)
}

/// Solves the M_n system with parameters -n..n against m! B_{mj},
/// m = 0..2n. For n >= degree the result is the exact column a_{.,j}
/// (stationarity); entries are indexed k = -n..n.
pub fn recover_a_from_b(t: &CoeffTable, j: i64, n: usize) -> Vec<Rat> {
    let params: Vec<i64> = (-(n as i64)..=n as i64).collect();
    let rhs: Vec<Rat> = (0..=2 * n as u32)
        .map(|m| Rat::from_integer(factorial(m)) * b_coeff(t, m, j))
        .collect();
    solve_vandermonde_dual(&params, &rhs).expect("parameters are distinct")
}

/// Smallest n whose recovered column matches the table exactly; stationarity
/// makes this at most the degree.
pub fn stationarity_index(t: &CoeffTable, j: i64) -> usize {
    let d = t.degree().max(0) as usize;
    for n in 0..=d {
        if recovered_matches_column(t, j, n) {
            return n;
        }
    }
    d
}

pub fn recovered_matches_column(t: &CoeffTable, j: i64, n: usize) -> bool {
    let s = recover_a_from_b(t, j, n);
    // zero-extended comparison
    for (idx, k) in (-(n as i64)..=n as i64).enumerate() {
        if s[idx] != t.get(k, j) {
            return false;
        }
    }
    for (k, _) in t.column(j) {
        if k.abs() > n as i64 {
            return false;
        }
    }
    true
}

/// f_{L,j}(x) = sum_k a_{kj} x^k; negative exponents forbid x = 0.
pub fn f_eval(t: &CoeffTable, j: i64, x: &CxFloat) -> Result<CxFloat> {
    let col = t.column(j);
    let prec = x.precision_bits();
    let is_zero = x.re().is_zero() && x.im().is_zero();
    if is_zero && col.iter().any(|(k, _)| *k < 0) {
        return Err(Error::ZeroWithNegativeExponents);
    }
    let mut acc = CxFloat::zero(prec);
    for (k, c) in col {
        let term = if is_zero {
            // only k = 0 contributes, x^0 = 1
            if k == 0 {
                CxFloat::from_rat(&c, prec)
            } else {
                CxFloat::zero(prec)
            }
        } else {
            x.powi(k).mul(&CxFloat::from_rat(&c, prec))
        };
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Shared evaluator of a link invariant.
pub type InvariantEval = Arc<dyn Fn(&LinkDiagram) -> Result<Rat> + Send + Sync>;

/// One per-component-count invariant of a family.
#[derive(Clone)]
pub struct FamilyMember {
    pub claimed_order: u32,
    pub eval: InvariantEval,
}

impl FamilyMember {
    pub fn new<F>(claimed_order: u32, eval: F) -> Self
    where
        F: Fn(&LinkDiagram) -> Result<Rat> + Send + Sync + 'static,
    {
        FamilyMember {
            claimed_order,
            eval: Arc::new(eval),
        }
    }
}

/// The invariant w_n assembled from a per-mu family: dispatches on the
/// component count, returning the family value when n >= mu and 0 otherwise.
pub struct WeakInvariant {
    index_n: u32,
    reported_order: u32,
    family: BTreeMap<u32, FamilyMember>,
}

pub fn assemble_weak(family: BTreeMap<u32, FamilyMember>, n: u32) -> WeakInvariant {
    let reported_order = family
        .iter()
        .filter(|(&mu, _)| mu <= n)
        .map(|(_, f)| f.claimed_order)
        .max()
        .unwrap_or(0);
    WeakInvariant {
        index_n: n,
        reported_order,
        family,
    }
}

impl WeakInvariant {
    pub fn index(&self) -> u32 {
        self.index_n
    }

    /// max over mu <= n of the family orders.
    pub fn reported_order(&self) -> u32 {
        self.reported_order
    }

    pub fn eval(&self, d: &LinkDiagram) -> Result<Rat> {
        let mu = d.components();
        if self.index_n < mu {
            return Ok(Rat::zero());
        }
        match self.family.get(&mu) {
            Some(f) => (f.eval)(d),
            None => Err(Error::MissingFamily(mu)),
        }
    }
}
