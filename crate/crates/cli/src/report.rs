//! Report construction and rendering for the four subcommands. All three
//! output formats are deterministic for a fixed configuration: maps are
//! ordered, floats print through the standard formatter, and big-float
//! values are rendered at their fixed precision.

use std::process::ExitCode;

use serde::Serialize;

use linkpoly::algebra::{bf_to_string, format_rat, LaurentPoly2};
use linkpoly::approx::{
    approx_sequence, coeff_table, lambda_table, stationarity_index, w_direct, CoeffTable,
    TAIL_WINDOW,
};
use linkpoly::error::{Error, Result};
use linkpoly::skein::{
    dubrovnik_delta_with, dubrovnik_with, homflypt_with, kauffman_from_dubrovnik, SkeinOpts,
};
use linkpoly::verify::{run_suite, CheckResult, SuiteConfig};

use crate::{ApproxArgs, Format, InputArgs, Which};

fn poly_entries(p: &LaurentPoly2) -> MonomialList {
    p.terms()
        .map(|(&(e1, e2), c)| (e1, e2, format_rat(c)))
        .collect()
}

type MonomialList = Vec<(i64, i64, String)>;

#[derive(Serialize)]
struct PolyReport {
    input: String,
    mu: u32,
    writhe: i64,
    /// polynomial name -> sorted monomials (e1, e2, coefficient)
    polynomials: Vec<(String, MonomialList)>,
    rendered: Vec<(String, String)>,
}

pub fn cmd_poly(input: &InputArgs, which: Option<Which>, cap: usize, format: Format) -> Result<()> {
    let (name, d) = input.resolve()?;
    let opts = SkeinOpts { crossing_cap: cap };
    let mu = d.components();
    let writhe = d.writhe()?;

    let mut polys: Vec<(String, LaurentPoly2)> = Vec::new();
    let want = |w: Which| which.is_none() || which == Some(w);
    if want(Which::Homflypt) {
        polys.push(("homflypt".into(), homflypt_with(&d, &opts)?));
    }
    if want(Which::Dubrovnik) {
        polys.push(("dubrovnik_delta".into(), dubrovnik_delta_with(&d, &opts)?));
        polys.push(("dubrovnik".into(), dubrovnik_with(&d, &opts)?));
    }
    if want(Which::Kauffman) {
        let f = dubrovnik_with(&d, &opts)?;
        polys.push(("kauffman".into(), kauffman_from_dubrovnik(&f, mu)?));
    }

    let report = PolyReport {
        input: name,
        mu,
        writhe,
        polynomials: polys
            .iter()
            .map(|(n, p)| (n.clone(), poly_entries(p)))
            .collect(),
        rendered: polys
            .iter()
            .map(|(n, p)| (n.clone(), p.to_string()))
            .collect(),
    };
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializes")
        ),
        Format::Tsv => {
            println!("polynomial\tvalue");
            for (n, p) in &report.rendered {
                println!("{n}\t{p}");
            }
        }
        Format::Text => {
            println!("input   : {}", report.input);
            println!("mu      : {}", report.mu);
            println!("writhe  : {}", report.writhe);
            for (n, p) in &report.rendered {
                println!("{n:<16}= {p}");
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct WValue {
    big_n: i64,
    q: i64,
    value: String,
}

#[derive(Serialize)]
struct CellReport {
    k: i64,
    j: i64,
    exact: String,
    stationarity_n: usize,
    stabilized_at: Option<u32>,
    final_abs_error: f64,
    max_abs_error_tail: f64,
    tail_nonincreasing: bool,
    /// |v^N - a_kj| for N = 0..=N_max
    errors: Vec<f64>,
}

#[derive(Serialize)]
struct ApproxReportOut {
    input: String,
    mu: u32,
    d: i64,
    table: CoeffTable,
    w_values: Vec<WValue>,
    cells: Vec<CellReport>,
}

pub fn cmd_approx(args: &ApproxArgs) -> Result<()> {
    let (input, table) = match &args.table {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                pos: 0,
                msg: format!("cannot read {}: {e}", path.display()),
            })?;
            (path.display().to_string(), CoeffTable::from_json(&text)?)
        }
        None => {
            let (name, d) = args.input.resolve()?;
            let opts = SkeinOpts {
                crossing_cap: args.cap,
            };
            let p = homflypt_with(&d, &opts)?;
            (name, coeff_table(&p, d.components())?)
        }
    };
    let floor = table.z_floor();
    if args.qmax < floor {
        return Err(Error::QBelowFloor {
            q: args.qmax,
            floor,
        });
    }

    let mut w_values = Vec::new();
    for big_n in 1..=3i64 {
        for q in floor..=args.qmax {
            w_values.push(WValue {
                big_n,
                q,
                value: format_rat(&w_direct(&table, big_n, q)?),
            });
        }
    }

    let mut cells = Vec::new();
    for (k, j) in table.support() {
        let r = approx_sequence(&table, k, j, args.big_n_max, args.precision);
        let errors: Vec<f64> = {
            let prec = args.precision;
            let exact = linkpoly::algebra::CxFloat::from_rat(&r.exact_value, prec);
            r.sequence
                .iter()
                .map(|(_, v)| linkpoly::algebra::bf_to_f64(&v.sub(&exact).abs()))
                .collect()
        };
        cells.push(CellReport {
            k,
            j,
            exact: format_rat(&r.exact_value),
            stationarity_n: stationarity_index(&table, j),
            stabilized_at: r.stabilized_at,
            final_abs_error: r.final_abs_error(),
            max_abs_error_tail: r.max_abs_error_tail,
            tail_nonincreasing: r.tail_nonincreasing(TAIL_WINDOW),
            errors,
        });
    }

    let out = ApproxReportOut {
        input,
        mu: table.mu(),
        d: table.degree(),
        table,
        w_values,
        cells,
    };
    match args.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializes")
        ),
        Format::Tsv => {
            println!(
                "k\tj\texact\tstationarity_n\tstabilized_at\tfinal_abs_error\tmax_abs_error_tail\ttail_nonincreasing"
            );
            for c in &out.cells {
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{:e}\t{:e}\t{}",
                    c.k,
                    c.j,
                    c.exact,
                    c.stationarity_n,
                    c.stabilized_at.map_or("-".to_string(), |v| v.to_string()),
                    c.final_abs_error,
                    c.max_abs_error_tail,
                    c.tail_nonincreasing
                );
            }
        }
        Format::Text => {
            println!("input: {}  (mu = {}, d = {})", out.input, out.mu, out.d);
            println!(
                "{:>4} {:>4} {:>12} {:>6} {:>14} {:>8}",
                "k", "j", "exact", "n*", "final_error", "tail_ok"
            );
            for c in &out.cells {
                println!(
                    "{:>4} {:>4} {:>12} {:>6} {:>14.3e} {:>8}",
                    c.k, c.j, c.exact, c.stationarity_n, c.final_abs_error, c.tail_nonincreasing
                );
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyRow {
    name: &'static str,
    passed: bool,
    details: String,
}

pub fn cmd_verify(cfg: &SuiteConfig, format: Format) -> ExitCode {
    let results = run_suite(cfg);
    let rows: Vec<VerifyRow> = results
        .iter()
        .map(|c: &CheckResult| VerifyRow {
            name: c.name,
            passed: c.passed,
            details: c.details.clone(),
        })
        .collect();
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&rows).expect("serializes")
        ),
        Format::Tsv => {
            println!("check\tpassed\tdetails");
            for r in &rows {
                println!("{}\t{}\t{}", r.name, r.passed, r.details);
            }
        }
        Format::Text => {
            for r in &rows {
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!("{status}  {:<26} {}", r.name, r.details);
            }
        }
    }
    if rows.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[derive(Serialize)]
struct LambdaRowOut {
    m: u32,
    n: i64,
    recurrence: (String, String),
    closed_form: Option<(String, String)>,
    quadrature: (String, String),
    dev_rec_quad: f64,
    dev_closed_rec: Option<f64>,
    dev_closed_quad: Option<f64>,
}

pub fn cmd_lambda(m_max: u32, n_max: i64, precision: usize, format: Format) -> Result<()> {
    let rows = lambda_table(m_max, n_max, precision);
    let out: Vec<LambdaRowOut> = rows
        .iter()
        .map(|r| LambdaRowOut {
            m: r.m,
            n: r.n,
            recurrence: (
                bf_to_string(r.recurrence.re()),
                bf_to_string(r.recurrence.im()),
            ),
            closed_form: r
                .closed_form
                .as_ref()
                .map(|c| (bf_to_string(c.re()), bf_to_string(c.im()))),
            quadrature: (
                bf_to_string(r.quadrature.re()),
                bf_to_string(r.quadrature.im()),
            ),
            dev_rec_quad: r.dev_rec_quad,
            dev_closed_rec: r.dev_closed_rec,
            dev_closed_quad: r.dev_closed_quad,
        })
        .collect();
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializes")
        ),
        Format::Tsv => {
            println!("m\tn\trec_re\trec_im\tquad_re\tquad_im\tdev_rec_quad\tdev_closed_rec");
            for r in &rows {
                let (rre, rim) = r.recurrence.to_f64s();
                let (qre, qim) = r.quadrature.to_f64s();
                println!(
                    "{}\t{}\t{:e}\t{:e}\t{:e}\t{:e}\t{:e}\t{}",
                    r.m,
                    r.n,
                    rre,
                    rim,
                    qre,
                    qim,
                    r.dev_rec_quad,
                    r.dev_closed_rec
                        .map_or("-".to_string(), |d| format!("{d:e}"))
                );
            }
        }
        Format::Text => {
            println!(
                "{:>3} {:>3} {:>24} {:>24} {:>13} {:>13}",
                "m", "n", "recurrence_re", "recurrence_im", "dev_quad", "dev_closed"
            );
            for r in &rows {
                let (rre, rim) = r.recurrence.to_f64s();
                println!(
                    "{:>3} {:>3} {:>24.16e} {:>24.16e} {:>13.2e} {:>13}",
                    r.m,
                    r.n,
                    rre,
                    rim,
                    r.dev_rec_quad,
                    r.dev_closed_rec
                        .map_or("-".to_string(), |d| format!("{d:.2e}"))
                );
            }
        }
    }
    Ok(())
}
