//! The bundled test corpus: small links covering one, two and three
//! components and both chiralities, plus singularized braid closures for the
//! finite-type order checks. Everything ships as data files under `corpus/`
//! so runs are reproducible from the repository alone.

use crate::diagram::{from_braid, parse_braid, parse_pd, LinkDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub text: &'static str,
    pub mu: u32,
}

macro_rules! corpus_file {
    ($name:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/", $name))
    };
}

pub const ENTRIES: &[CorpusEntry] = &[
    CorpusEntry {
        name: "unknot",
        text: corpus_file!("unknot.pd"),
        mu: 1,
    },
    CorpusEntry {
        name: "unlink2",
        text: corpus_file!("unlink2.pd"),
        mu: 2,
    },
    CorpusEntry {
        name: "unlink3",
        text: corpus_file!("unlink3.pd"),
        mu: 3,
    },
    CorpusEntry {
        name: "hopf_plus",
        text: corpus_file!("hopf_plus.braid"),
        mu: 2,
    },
    CorpusEntry {
        name: "hopf_minus",
        text: corpus_file!("hopf_minus.braid"),
        mu: 2,
    },
    CorpusEntry {
        name: "trefoil_right",
        text: corpus_file!("trefoil_right.braid"),
        mu: 1,
    },
    CorpusEntry {
        name: "trefoil_left",
        text: corpus_file!("trefoil_left.braid"),
        mu: 1,
    },
    CorpusEntry {
        name: "figure_eight",
        text: corpus_file!("figure_eight.braid"),
        mu: 1,
    },
    CorpusEntry {
        name: "torus_2_4",
        text: corpus_file!("torus_2_4.braid"),
        mu: 2,
    },
];

const SINGULAR_SAMPLES: &str = corpus_file!("singular_samples.txt");

/// Parses either input format: PD text or a braid word.
pub fn load(text: &str) -> Result<LinkDiagram> {
    let t = text.trim();
    if t.starts_with("PD") {
        parse_pd(t)
    } else {
        Ok(from_braid(&parse_braid(t)?))
    }
}

pub fn diagram(name: &str) -> Option<LinkDiagram> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .map(|e| load(e.text).expect("bundled corpus parses"))
}

pub fn all_diagrams() -> Vec<(&'static str, LinkDiagram)> {
    ENTRIES
        .iter()
        .map(|e| (e.name, load(e.text).expect("bundled corpus parses")))
        .collect()
}

/// Bundled singular links with exactly `double_points` double points.
pub fn singular_samples(double_points: usize) -> Vec<(String, LinkDiagram)> {
    let mut out = Vec::new();
    for line in SINGULAR_SAMPLES.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (spec, positions) = line.split_once('@').unwrap_or((line, ""));
        let positions: Vec<usize> = positions
            .split_whitespace()
            .map(|p| p.parse().expect("bundled sample positions parse"))
            .collect();
        if positions.len() != double_points {
            continue;
        }
        let mut d = from_braid(&parse_braid(spec).expect("bundled sample parses"));
        for &p in &positions {
            d = d
                .make_singular(p)
                .expect("bundled sample positions are valid");
        }
        out.push((format!("{} @ {:?}", spec.trim(), positions), d));
    }
    out
}

/// Convenience for tests and the CLI: corpus entry by name or parseable text.
pub fn resolve_input(arg: &str) -> Result<LinkDiagram> {
    if let Some(d) = diagram(arg) {
        return Ok(d);
    }
    load(arg).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse {
            pos,
            msg: format!("{msg} (and {arg:?} is not a bundled corpus name)"),
        },
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_entries_have_documented_component_counts() {
        for e in ENTRIES {
            let d = load(e.text).unwrap();
            assert_eq!(d.components(), e.mu, "{}", e.name);
            assert!(d.crossing_count() <= 10);
        }
    }

    #[test]
    fn singular_samples_are_plentiful_and_well_formed() {
        for s in 1..=3usize {
            let samples = singular_samples(s);
            assert!(
                samples.len() >= 10,
                "need at least 10 samples with {s} double points"
            );
            for (name, d) in samples {
                assert_eq!(d.singular_count(), s, "{name}");
                assert!(d.crossing_count() <= 8, "{name}");
            }
        }
    }

    #[test]
    fn resolve_input_accepts_names_and_text() {
        assert!(resolve_input("trefoil_right").is_ok());
        assert!(resolve_input("braid 2: 1 1").is_ok());
        assert!(resolve_input("PD[]; loops=1").is_ok());
        assert!(resolve_input("no_such_link").is_err());
    }

    #[test]
    fn corpus_serializes_and_parses_back() {
        for (name, d) in all_diagrams() {
            let back = crate::diagram::parse_pd(&d.serialize_pd()).unwrap();
            assert!(back.same_diagram(&d), "{name}");
        }
    }
}
