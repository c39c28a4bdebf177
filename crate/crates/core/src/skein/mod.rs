//! Skein-recursion engines for the HOMFLYPT polynomial P_L(v,z), the
//! regular-isotopy Dubrovnik polynomial Delta(D) and its writhe-normalized
//! form F_L(a,z), plus the Dubrovnik <-> Kauffman change of variables.
//!
//! Both engines run the descending-diagram recursion: walk the components
//! from fixed basepoints, pivot on the first crossing met on its under
//! strand, and branch on switch + smoothing(s). Switching strictly reduces
//! the number of such violations and smoothing reduces the crossing count,
//! so the recursion terminates; descending diagrams are unlinks (with their
//! curls, in the regular-isotopy case) and are evaluated in closed form.
//! Diagrams are simplified before memoization, with R1 curls traded for
//! framing exponents on the Dubrovnik side.

use std::collections::HashMap;

use crate::algebra::{rat_int, LaurentPoly2, VarPair};
use crate::diagram::{reduce_regular, simplify, Crossing, LinkDiagram, SmoothMode};
use crate::error::{Error, Result};

/// Engine limits.
#[derive(Clone, Copy, Debug)]
pub struct SkeinOpts {
    pub crossing_cap: usize,
}

impl Default for SkeinOpts {
    fn default() -> Self {
        SkeinOpts { crossing_cap: 16 }
    }
}

/// Memoized polynomial values keyed by the exact diagram encoding. A cache
/// is scoped to one engine; entries always equal a fresh computation.
type Cache = HashMap<(Vec<Crossing>, u32), LaurentPoly2>;

fn cache_key(d: &LinkDiagram) -> (Vec<Crossing>, u32) {
    (d.crossings().to_vec(), d.free_loops())
}

fn check_input(d: &LinkDiagram, opts: &SkeinOpts) -> Result<()> {
    if !d.is_transverse() {
        return Err(Error::SingularDiagram);
    }
    if d.crossing_count() > opts.crossing_cap {
        return Err(Error::CrossingCap {
            count: d.crossing_count(),
            cap: opts.crossing_cap,
        });
    }
    Ok(())
}

/// (v^-1 - v) / z, the factor contributed by a split unknotted component.
pub fn homflypt_delta() -> LaurentPoly2 {
    LaurentPoly2::from_terms(
        VarPair::VZ,
        [((-1, -1), rat_int(1)), ((1, -1), rat_int(-1))],
    )
}

/// (a - a^-1)/z + 1, the Dubrovnik factor for a split unknotted component.
pub fn dubrovnik_delta_factor() -> LaurentPoly2 {
    LaurentPoly2::from_terms(
        VarPair::AZ,
        [
            ((1, -1), rat_int(1)),
            ((-1, -1), rat_int(-1)),
            ((0, 0), rat_int(1)),
        ],
    )
}

pub fn homflypt(d: &LinkDiagram) -> Result<LaurentPoly2> {
    homflypt_with(d, &SkeinOpts::default())
}

pub fn homflypt_with(d: &LinkDiagram, opts: &SkeinOpts) -> Result<LaurentPoly2> {
    check_input(d, opts)?;
    let mut cache = Cache::new();
    Ok(homflypt_rec(simplify(d), &mut cache))
}

fn homflypt_rec(d: LinkDiagram, cache: &mut Cache) -> LaurentPoly2 {
    let key = cache_key(&d);
    if let Some(p) = cache.get(&key) {
        return p.clone();
    }
    let result = match d.descending_pivot() {
        None => homflypt_delta().pow(d.components() - 1),
        Some(idx) => {
            let switched = simplify(&d.switch_crossing(idx).expect("transverse pivot"));
            let smoothed = simplify(&d.smooth_oriented(idx).expect("transverse pivot"));
            let p_switch = homflypt_rec(switched, cache);
            let p_smooth = homflypt_rec(smoothed, cache);
            let sign = d.crossings()[idx].kind.sign().expect("transverse pivot");
            if sign > 0 {
                // P_+ = v^2 P_- + v z P_0
                p_switch
                    .mul_mono(2, 0, &rat_int(1))
                    .add(&p_smooth.mul_mono(1, 1, &rat_int(1)))
                    .expect("same vars")
            } else {
                // P_- = v^-2 P_+ - v^-1 z P_0
                p_switch
                    .mul_mono(-2, 0, &rat_int(1))
                    .sub(&p_smooth.mul_mono(-1, 1, &rat_int(1)))
                    .expect("same vars")
            }
        }
    };
    cache.insert(key, result.clone());
    result
}

/// The regular-isotopy polynomial Delta(D) of the diagram's shadow.
pub fn dubrovnik_delta(d: &LinkDiagram) -> Result<LaurentPoly2> {
    dubrovnik_delta_with(d, &SkeinOpts::default())
}

pub fn dubrovnik_delta_with(d: &LinkDiagram, opts: &SkeinOpts) -> Result<LaurentPoly2> {
    check_input(d, opts)?;
    let mut cache = Cache::new();
    Ok(delta_rec(d.clone(), &mut cache))
}

fn a_power(e: i64) -> LaurentPoly2 {
    LaurentPoly2::mono(VarPair::AZ, e, 0, rat_int(1))
}

fn delta_rec(d: LinkDiagram, cache: &mut Cache) -> LaurentPoly2 {
    // R2 freely; every removed curl contributes a^(sign)
    let (d, curl_exp) = reduce_regular(&d);
    let key = cache_key(&d);
    let inner = if let Some(p) = cache.get(&key) {
        p.clone()
    } else {
        let result = match d.descending_pivot() {
            None => {
                // descending diagrams are regular-isotopic to split unions of
                // curled unknots; inter-component crossings cancel, so the
                // total writhe is the curl count
                let w = d.writhe().expect("transverse diagram");
                dubrovnik_delta_factor()
                    .pow(d.components() - 1)
                    .mul(&a_power(w))
                    .expect("same vars")
            }
            Some(idx) => {
                let sign = d.crossings()[idx].kind.sign().expect("transverse pivot");
                let p_switch = delta_rec(d.switch_crossing(idx).expect("pivot"), cache);
                let p_zero = delta_rec(
                    d.smooth_unoriented(idx, SmoothMode::Zero).expect("pivot"),
                    cache,
                );
                let p_inf = delta_rec(
                    d.smooth_unoriented(idx, SmoothMode::Infinity)
                        .expect("pivot"),
                    cache,
                );
                // Delta(D+) - Delta(D-) = z (Delta(D0) - Delta(Dinf))
                let z_term = p_zero
                    .sub(&p_inf)
                    .expect("same vars")
                    .mul_mono(0, 1, &rat_int(1));
                if sign > 0 {
                    p_switch.add(&z_term).expect("same vars")
                } else {
                    p_switch.sub(&z_term).expect("same vars")
                }
            }
        };
        cache.insert(key, result.clone());
        result
    };
    inner.mul(&a_power(curl_exp)).expect("same vars")
}

/// Writhe-normalized Dubrovnik polynomial F_L(a,z) = a^-w(D) Delta(D).
pub fn dubrovnik(d: &LinkDiagram) -> Result<LaurentPoly2> {
    dubrovnik_with(d, &SkeinOpts::default())
}

pub fn dubrovnik_with(d: &LinkDiagram, opts: &SkeinOpts) -> Result<LaurentPoly2> {
    let w = d.writhe()?;
    Ok(dubrovnik_delta_with(d, opts)?
        .mul(&a_power(-w))
        .expect("same vars"))
}

/// Kauffman polynomial from the Dubrovnik one:
/// F^K(a', z') = (-1)^(mu-1) F^D(a = -i a', z = i z'). Each monomial a^k z^j
/// picks up i^(j-k); a parity mismatch would leave an imaginary residue and
/// flags a non-Dubrovnik input.
pub fn kauffman_from_dubrovnik(f: &LaurentPoly2, mu: u32) -> Result<LaurentPoly2> {
    substitute_i_powers(f, mu, false)
}

/// Inverse substitution: F^D(a,z) = (-1)^(mu-1) F^K(a' = i a, z' = -i z).
pub fn dubrovnik_from_kauffman(f: &LaurentPoly2, mu: u32) -> Result<LaurentPoly2> {
    substitute_i_powers(f, mu, true)
}

fn substitute_i_powers(f: &LaurentPoly2, mu: u32, inverse: bool) -> Result<LaurentPoly2> {
    let comp_sign = if (mu - 1).is_multiple_of(2) { 1 } else { -1 };
    let mut out = LaurentPoly2::zero(f.vars());
    for (&(k, j), c) in f.terms() {
        let e = if inverse { k - j } else { j - k };
        let i_pow = match e.rem_euclid(4) {
            0 => 1,
            2 => -1,
            _ => return Err(Error::ImaginaryResidue { k, j }),
        };
        out.add_term(k, j, c * rat_int(i_pow * comp_sign));
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
