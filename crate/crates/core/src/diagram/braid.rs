//! Braid words and their closures.

use crate::error::{Error, Result};

use super::{ArcId, Crossing, CrossingKind, LinkDiagram};

/// Artin generators: letter `i` is sigma_i (strand i passes over strand
/// i+1, a positive crossing), `-i` its inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse {
                pos: 0,
                msg: "braid needs at least one strand".into(),
            });
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() >= strands {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("letter {l} invalid for {strands} strands"),
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }
}

/// Parses `braid n: w1 w2 ...`; the leading word `braid` is optional.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let trimmed = text.trim();
    let body = trimmed
        .strip_prefix("braid")
        .map(str::trim_start)
        .unwrap_or(trimmed);
    let (head, tail) = body.split_once(':').ok_or(Error::Parse {
        pos: 0,
        msg: "expected `braid n: w1 w2 ...`".into(),
    })?;
    let strands: u32 = head.trim().parse().map_err(|_| Error::Parse {
        pos: 0,
        msg: format!("invalid strand count {:?}", head.trim()),
    })?;
    let mut letters = Vec::new();
    for tok in tail.split_whitespace() {
        let l: i32 = tok.parse().map_err(|_| Error::Parse {
            pos: text.find(tok).unwrap_or(0),
            msg: format!("invalid braid letter {tok:?}"),
        })?;
        letters.push(l);
    }
    BraidWord::new(strands, letters)
}

/// Diagram of the braid closure; crossing count equals the word length.
pub fn from_braid(b: &BraidWord) -> LinkDiagram {
    let mut next: ArcId = 1;
    let mut fresh = || {
        let a = next;
        next += 1;
        a
    };
    let bottom: Vec<ArcId> = (0..b.strands).map(|_| fresh()).collect();
    let mut cur = bottom.clone();
    let mut crossings = Vec::with_capacity(b.letters.len());
    for &letter in &b.letters {
        let i = (letter.unsigned_abs() - 1) as usize;
        let (bl, br) = (cur[i], cur[i + 1]);
        let (tl, tr) = (fresh(), fresh());
        crossings.push(if letter > 0 {
            // left strand over, heading right
            Crossing {
                kind: CrossingKind::Positive,
                under_in: br,
                under_out: tl,
                over_in: bl,
                over_out: tr,
            }
        } else {
            Crossing {
                kind: CrossingKind::Negative,
                under_in: bl,
                under_out: tr,
                over_in: br,
                over_out: tl,
            }
        });
        cur[i] = tl;
        cur[i + 1] = tr;
    }
    // close up: top arc j continues into bottom arc j
    let mut renames = std::collections::BTreeMap::new();
    let mut loops = 0u32;
    for j in 0..b.strands as usize {
        if cur[j] == bottom[j] {
            loops += 1;
        } else {
            renames.insert(cur[j], bottom[j]);
        }
    }
    let crossings = crossings.iter().map(|c| c.renamed(&renames)).collect();
    LinkDiagram::new(crossings, loops).expect("braid closures are always consistent")
}
