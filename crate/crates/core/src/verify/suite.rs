//! The named certification checks run by the CLI and the acceptance suite.
//! Every tolerance is pinned here.

use num_traits::Zero;

use crate::algebra::{rat_int, LaurentPoly2, Rat};
use crate::approx::{
    approx_sequence, b_coeff, coeff_table, lambda_table, recover_a_from_b, recover_b_from_w,
    recovered_matches_column, w_direct, CoeffTable, TAIL_WINDOW,
};
use crate::corpus;
use crate::diagram::{CrossingKind, LinkDiagram, SmoothMode};
use crate::error::Result;
use crate::skein::{
    dubrovnik, dubrovnik_delta, homflypt, homflypt_with, kauffman_from_dubrovnik, SkeinOpts,
};
use crate::verify::{
    crosscheck_tables, delta_basis_decompose, dubrovnik_kauffman_identity_check, order_check,
    z_lowbound_check, DeltaBasis,
};

/// Pinned thresholds.
pub const LAMBDA_REL_TOL: f64 = 1e-25;
pub const CONVERGENCE_ABS_TOL: f64 = 1e-6;
pub const CONVERGENCE_N_MAX: u32 = 200;
pub const TWO_PATH_Q_MAX: i64 = 6;
pub const ROUNDTRIP_Q_MAX: i64 = 4;
pub const LAMBDA_M_MAX: u32 = 12;
pub const LAMBDA_N_MAX: i64 = 6;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub precision_bits: usize,
    pub crossing_cap: usize,
    pub n_max: u32,
    pub mutate: usize,
    pub seed: u64,
    pub only: Option<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            precision_bits: 256,
            crossing_cap: 16,
            n_max: CONVERGENCE_N_MAX,
            mutate: 0,
            seed: 0,
            only: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl CheckResult {
    fn pass(name: &'static str, details: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed: true,
            details: details.into(),
        }
    }

    fn fail(name: &'static str, details: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed: false,
            details: details.into(),
        }
    }
}

pub const CHECK_NAMES: &[&str] = &[
    "skein_axiom_homflypt",
    "skein_axiom_dubrovnik",
    "unknot_normalization",
    "z_floor_and_delta_basis",
    "two_path_w",
    "vandermonde_roundtrip_b",
    "stationarity_a",
    "lambda",
    "convergence",
    "vassiliev_order",
    "dubrovnik_kauffman",
    "mutation_sensitivity",
];

/// Runs the suite (or the `only`-selected check). Fault injection via
/// `mutate > 0` perturbs the w-side tables and is expected to break the
/// two-path and round-trip checks.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &name in CHECK_NAMES {
        if let Some(only) = &cfg.only {
            if only != name {
                continue;
            }
        }
        out.push(run_check(name, cfg));
    }
    out
}

pub fn run_check(name: &str, cfg: &SuiteConfig) -> CheckResult {
    match name {
        "skein_axiom_homflypt" => skein_axiom_homflypt(cfg),
        "skein_axiom_dubrovnik" => skein_axiom_dubrovnik(cfg),
        "unknot_normalization" => unknot_normalization(),
        "z_floor_and_delta_basis" => z_floor_and_delta_basis(),
        "two_path_w" => two_path_w(cfg),
        "vandermonde_roundtrip_b" => vandermonde_roundtrip_b(cfg),
        "stationarity_a" => stationarity_a(cfg),
        "lambda" => lambda_consistency(cfg),
        "convergence" => convergence(cfg),
        "vassiliev_order" => vassiliev_order(cfg),
        "dubrovnik_kauffman" => dubrovnik_kauffman(),
        "mutation_sensitivity" => mutation_sensitivity(cfg),
        other => CheckResult::fail("mutation_sensitivity", format!("unknown check {other:?}")),
    }
}

fn corpus_tables(cfg: &SuiteConfig) -> Result<Vec<(&'static str, CoeffTable)>> {
    let opts = SkeinOpts {
        crossing_cap: cfg.crossing_cap,
    };
    corpus::all_diagrams()
        .into_iter()
        .map(|(name, d)| {
            Ok((
                name,
                coeff_table(&homflypt_with(&d, &opts)?, d.components())?,
            ))
        })
        .collect()
}

fn maybe_mutated(t: &CoeffTable, cfg: &SuiteConfig, link_index: usize) -> CoeffTable {
    if cfg.mutate == 0 {
        return t.clone();
    }
    let mut m = t.clone();
    for f in 0..cfg.mutate {
        m = m.perturbed(cfg.seed as usize + link_index + f, &rat_int(1));
    }
    m
}

fn skein_axiom_homflypt(cfg: &SuiteConfig) -> CheckResult {
    const NAME: &str = "skein_axiom_homflypt";
    let opts = SkeinOpts {
        crossing_cap: cfg.crossing_cap,
    };
    let mut checked = 0;
    for (name, d) in corpus::all_diagrams() {
        for idx in 0..d.crossing_count() {
            let plus = match d.crossings()[idx].kind {
                CrossingKind::Positive => d.clone(),
                _ => d.switch_crossing(idx).expect("transverse corpus"),
            };
            let minus = plus.switch_crossing(idx).expect("transverse corpus");
            let zero = plus.smooth_oriented(idx).expect("transverse corpus");
            let (pp, pm, p0) = match (
                homflypt_with(&plus, &opts),
                homflypt_with(&minus, &opts),
                homflypt_with(&zero, &opts),
            ) {
                (Ok(a), Ok(b), Ok(c)) => (a, b, c),
                _ => return CheckResult::fail(NAME, format!("{name}: engine error")),
            };
            let lhs = pp
                .mul_mono(-1, 0, &rat_int(1))
                .sub(&pm.mul_mono(1, 0, &rat_int(1)))
                .expect("same vars");
            let rhs = p0.mul_mono(0, 1, &rat_int(1));
            if lhs != rhs {
                return CheckResult::fail(NAME, format!("{name} crossing {idx}: identity broken"));
            }
            checked += 1;
        }
    }
    CheckResult::pass(NAME, format!("{checked} crossings, exact equality"))
}

fn skein_axiom_dubrovnik(cfg: &SuiteConfig) -> CheckResult {
    const NAME: &str = "skein_axiom_dubrovnik";
    let _ = cfg;
    let mut checked = 0;
    for (name, d) in corpus::all_diagrams() {
        for idx in 0..d.crossing_count() {
            let plus = match d.crossings()[idx].kind {
                CrossingKind::Positive => d.clone(),
                _ => d.switch_crossing(idx).expect("transverse corpus"),
            };
            let minus = plus.switch_crossing(idx).expect("transverse corpus");
            let zero = plus
                .smooth_unoriented(idx, SmoothMode::Zero)
                .expect("transverse corpus");
            let inf = plus
                .smooth_unoriented(idx, SmoothMode::Infinity)
                .expect("transverse corpus");
            let (dp, dm, d0, di) = match (
                dubrovnik_delta(&plus),
                dubrovnik_delta(&minus),
                dubrovnik_delta(&zero),
                dubrovnik_delta(&inf),
            ) {
                (Ok(a), Ok(b), Ok(c), Ok(e)) => (a, b, c, e),
                _ => return CheckResult::fail(NAME, format!("{name}: engine error")),
            };
            let lhs = dp.sub(&dm).expect("same vars");
            let rhs = d0.sub(&di).expect("same vars").mul_mono(0, 1, &rat_int(1));
            if lhs != rhs {
                return CheckResult::fail(NAME, format!("{name} crossing {idx}: identity broken"));
            }
            checked += 1;
        }
    }
    CheckResult::pass(NAME, format!("{checked} crossings, exact equality"))
}

fn unknot_normalization() -> CheckResult {
    const NAME: &str = "unknot_normalization";
    let u = LinkDiagram::unknot();
    let one_vz = LaurentPoly2::one(crate::algebra::VarPair::VZ);
    let one_az = LaurentPoly2::one(crate::algebra::VarPair::AZ);
    let p = homflypt(&u).expect("unknot");
    let delta = dubrovnik_delta(&u).expect("unknot");
    let f = dubrovnik(&u).expect("unknot");
    let k = kauffman_from_dubrovnik(&f, 1).expect("unknot");
    if p == one_vz && delta == one_az && f == one_az && k == one_az {
        CheckResult::pass(NAME, "P = Delta = F^D = F^K = 1")
    } else {
        CheckResult::fail(NAME, format!("got P={p}, Delta={delta}, F={f}, K={k}"))
    }
}

fn z_floor_and_delta_basis() -> CheckResult {
    const NAME: &str = "z_floor_and_delta_basis";
    for (name, d) in corpus::all_diagrams() {
        let mu = d.components();
        let p = homflypt(&d).expect("corpus in cap");
        let f = dubrovnik(&d).expect("corpus in cap");
        if !z_lowbound_check(&p, mu) || !z_lowbound_check(&f, mu) {
            return CheckResult::fail(NAME, format!("{name}: z-exponent below -mu+1"));
        }
        for (poly, basis) in [(&p, DeltaBasis::Homflypt), (&f, DeltaBasis::Dubrovnik)] {
            match delta_basis_decompose(poly, mu, basis) {
                Err(e) => {
                    return CheckResult::fail(
                        NAME,
                        format!(
                            "{name}: decomposition failed at power {}: {}",
                            e.power, e.reason
                        ),
                    )
                }
                Ok(dec) => {
                    let max_pow = dec.parts.keys().max().copied().unwrap_or(0);
                    if max_pow as i64 > mu as i64 - 1 {
                        return CheckResult::fail(
                            NAME,
                            format!("{name}: delta power {max_pow} exceeds mu-1"),
                        );
                    }
                    if dec.reconstruct() != *poly {
                        return CheckResult::fail(NAME, format!("{name}: reconstruction differs"));
                    }
                }
            }
        }
    }
    CheckResult::pass(NAME, "floor and decomposition hold on the corpus")
}

fn two_path_w(cfg: &SuiteConfig) -> CheckResult {
    const NAME: &str = "two_path_w";
    let tables = match corpus_tables(cfg) {
        Ok(t) => t,
        Err(e) => return CheckResult::fail(NAME, e.to_string()),
    };
    for (i, (name, t)) in tables.iter().enumerate() {
        let t_w = maybe_mutated(t, cfg, i);
        if !crosscheck_tables(&t_w, t, -3..=3, t.z_floor()..=TWO_PATH_Q_MAX) {
            return CheckResult::fail(NAME, format!("{name}: w_direct vs series mismatch"));
        }
    }
    CheckResult::pass(
        NAME,
        format!(
            "N in -3..=3, q up to {TWO_PATH_Q_MAX}, exact on {} links",
            tables.len()
        ),
    )
}

fn vandermonde_roundtrip_b(cfg: &SuiteConfig) -> CheckResult {
    const NAME: &str = "vandermonde_roundtrip_b";
    let tables = match corpus_tables(cfg) {
        Ok(t) => t,
        Err(e) => return CheckResult::fail(NAME, e.to_string()),
    };
    for (i, (name, t)) in tables.iter().enumerate() {
        let t_w = maybe_mutated(t, cfg, i);
        let mu = t.mu() as i64;
        for q in t.z_floor()..=ROUNDTRIP_Q_MAX {
            for extra in [0usize, 3] {
                let n = (q + mu) as usize + extra;
                let rec = match recover_b_from_w(&t_w, q, n) {
                    Ok(r) => r,
                    Err(e) => return CheckResult::fail(NAME, format!("{name} q={q}: {e}")),
                };
                for (p, val) in rec.iter().enumerate() {
                    let j = q - p as i64;
                    if val != &b_coeff(t, p as u32, j) {
                        return CheckResult::fail(
                            NAME,
                            format!("{name} q={q} n={n} p={p}: B mismatch"),
                        );
                    }
                    if j <= -mu && !val.is_zero() {
                        return CheckResult::fail(
                            NAME,
                            format!("{name} q={q}: entry below the floor is nonzero"),
                        );
                    }
                }
            }
        }
    }
    CheckResult::pass(
        NAME,
        format!("q <= {ROUNDTRIP_Q_MAX}, n = q+mu and q+mu+3, exact"),
    )
}

fn stationarity_a(cfg: &SuiteConfig) -> CheckResult {
    const NAME: &str = "stationarity_a";
    let tables = match corpus_tables(cfg) {
        Ok(t) => t,
        Err(e) => return CheckResult::fail(NAME, e.to_string()),
    };
    for (i, (name, t)) in tables.iter().enumerate() {
        let t_b = maybe_mutated(t, cfg, i);
        let d = t.degree().max(0) as usize;
        for j in t.j_support() {
            // the three recoveries must agree with the column and each other
            let mut prev: Option<Vec<Rat>> = None;
            for n in [d, d + 1, d + 2] {
                let s = recover_a_from_b(&t_b, j, n);
                for (idx, k) in (-(n as i64)..=n as i64).enumerate() {
                    if s[idx] != t.get(k, j) {
                        return CheckResult::fail(
                            NAME,
                            format!("{name} j={j} n={n}: column mismatch at k={k}"),
                        );
                    }
                }
                if let Some(p) = &prev {
                    // identical after zero-extension
                    let off = (s.len() - p.len()) / 2;
                    let inner = &s[off..off + p.len()];
                    if inner != &p[..]
                        || s[..off].iter().any(|v| !v.is_zero())
                        || s[off + p.len()..].iter().any(|v| !v.is_zero())
                    {
                        return CheckResult::fail(
                            NAME,
                            format!("{name} j={j}: recovery not stationary at n={n}"),
                        );
                    }
                }
                prev = Some(s);
            }
            if !recovered_matches_column(&t_b, j, d + 2) {
                return CheckResult::fail(NAME, format!("{name} j={j}: support escapes window"));
            }
        }
    }
    CheckResult::pass(NAME, "columns recovered exactly at n = d, d+1, d+2")
}

fn lambda_consistency(cfg: &SuiteConfig) -> CheckResult {
    const NAME: &str = "lambda";
    let rows = lambda_table(LAMBDA_M_MAX, LAMBDA_N_MAX, cfg.precision_bits);
    let mut worst: f64 = 0.0;
    let mut remark_worst: f64 = 0.0;
    for row in &rows {
        if row.n == 0 {
            if row.m == 0 {
                let one = crate::algebra::CxFloat::from_i64(1, cfg.precision_bits);
                if crate::algebra::rel_deviation(&row.recurrence, &one) != 0.0 {
                    return CheckResult::fail(NAME, "lambda_{0,0} is not exactly 1".to_string());
                }
            }
            continue;
        }
        if row.m == 0 && !(row.recurrence.re().is_zero() && row.recurrence.im().is_zero()) {
            return CheckResult::fail(NAME, format!("lambda_{{0,{}}} is not exactly 0", row.n));
        }
        worst = worst.max(row.dev_rec_quad);
        if let Some(dev) = row.dev_closed_rec {
            remark_worst = remark_worst.max(dev);
        }
        if row.dev_rec_quad >= LAMBDA_REL_TOL {
            return CheckResult::fail(
                NAME,
                format!(
                    "m={} n={}: recurrence vs quadrature {:e}",
                    row.m, row.n, row.dev_rec_quad
                ),
            );
        }
        if let Some(dev) = row.dev_closed_rec {
            if dev >= LAMBDA_REL_TOL {
                // reported, never patched
                return CheckResult::fail(
                    NAME,
                    format!(
                        "m={} n={}: closed form deviates from consensus by {dev:e}",
                        row.m, row.n
                    ),
                );
            }
        }
    }
    CheckResult::pass(
        NAME,
        format!(
            "m <= {LAMBDA_M_MAX}, |n| <= {LAMBDA_N_MAX}: worst rec/quad {worst:.2e}, worst closed-form {remark_worst:.2e}"
        ),
    )
}

fn convergence(cfg: &SuiteConfig) -> CheckResult {
    const NAME: &str = "convergence";
    let tables = match corpus_tables(cfg) {
        Ok(t) => t,
        Err(e) => return CheckResult::fail(NAME, e.to_string()),
    };
    let mut cells = 0;
    let mut worst: f64 = 0.0;
    for (name, t) in &tables {
        for (k, j) in t.support() {
            let r = approx_sequence(t, k, j, cfg.n_max, cfg.precision_bits);
            let err = r.final_abs_error();
            worst = worst.max(err);
            if err.is_nan() || err >= CONVERGENCE_ABS_TOL {
                return CheckResult::fail(
                    NAME,
                    format!("{name} ({k},{j}): |v^N - a| = {err:e} at N = {}", cfg.n_max),
                );
            }
            if !r.tail_nonincreasing(TAIL_WINDOW) {
                return CheckResult::fail(
                    NAME,
                    format!("{name} ({k},{j}): error tail not non-increasing"),
                );
            }
            cells += 1;
        }
    }
    CheckResult::pass(
        NAME,
        format!(
            "{cells} cells, worst final error {worst:.2e} at N = {}",
            cfg.n_max
        ),
    )
}

fn vassiliev_order(cfg: &SuiteConfig) -> CheckResult {
    const NAME: &str = "vassiliev_order";
    let opts = SkeinOpts {
        crossing_cap: cfg.crossing_cap,
    };
    let mut total = 0;
    for q in 0..=2u32 {
        let samples = corpus::singular_samples(q as usize + 1);
        if samples.len() < 10 {
            return CheckResult::fail(NAME, format!("only {} samples for q={q}", samples.len()));
        }
        for big_n in 1..=3i64 {
            let invariant = move |d: &LinkDiagram| -> Result<Rat> {
                let t = coeff_table(&homflypt_with(d, &opts)?, d.components())?;
                w_direct(&t, big_n, q as i64)
            };
            let report = order_check(&format!("w_{{N={big_n},q={q}}}"), &invariant, q, &samples);
            if !report.all_zero_at_q_plus_1 {
                let bad = report
                    .samples
                    .iter()
                    .find(|s| !matches!(&s.value, Ok(v) if v.is_zero()))
                    .map(|s| s.id.clone())
                    .unwrap_or_default();
                return CheckResult::fail(NAME, format!("w_{{N={big_n},q={q}}} nonzero on {bad}"));
            }
            total += report.samples.len();
        }
    }
    // negative control: the writhe of the positive resolution is not an
    // order-0 invariant; its extension must be nonzero somewhere
    let writhe_inv = |d: &LinkDiagram| -> Result<Rat> { Ok(Rat::from_integer(d.writhe()?.into())) };
    let control = order_check("writhe", &writhe_inv, 0, &corpus::singular_samples(1));
    if control.all_zero_at_q_plus_1 {
        return CheckResult::fail(NAME, "negative control unexpectedly vanished everywhere");
    }
    CheckResult::pass(
        NAME,
        format!("{total} vanishing evaluations; negative control fails"),
    )
}

fn dubrovnik_kauffman() -> CheckResult {
    const NAME: &str = "dubrovnik_kauffman";
    for (name, d) in corpus::all_diagrams() {
        match dubrovnik_kauffman_identity_check(&d) {
            Ok(true) => {}
            Ok(false) => return CheckResult::fail(NAME, format!("{name}: identity broken")),
            Err(e) => return CheckResult::fail(NAME, format!("{name}: {e}")),
        }
    }
    CheckResult::pass(
        NAME,
        "conversion round-trips on the corpus, multi-component signs active",
    )
}

fn mutation_sensitivity(cfg: &SuiteConfig) -> CheckResult {
    const NAME: &str = "mutation_sensitivity";
    // a single injected coefficient fault must break at least one of the
    // two-path or round-trip checks
    let mutated = SuiteConfig {
        mutate: 1,
        only: None,
        ..cfg.clone()
    };
    let broken = ["two_path_w", "vandermonde_roundtrip_b", "stationarity_a"]
        .iter()
        .filter(|name| !run_check(name, &mutated).passed)
        .count();
    if broken > 0 {
        CheckResult::pass(NAME, format!("fault detected by {broken} of 3 checks"))
    } else {
        CheckResult::fail(NAME, "injected fault went unnoticed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_are_unique() {
        let mut names = CHECK_NAMES.to_vec();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), CHECK_NAMES.len());
    }

    #[test]
    fn only_filter_selects_a_single_check() {
        let cfg = SuiteConfig {
            only: Some("unknot_normalization".into()),
            ..Default::default()
        };
        let res = run_suite(&cfg);
        assert_eq!(res.len(), 1);
        assert!(res[0].passed, "{}", res[0].details);
    }
}
