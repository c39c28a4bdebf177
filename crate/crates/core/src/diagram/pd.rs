//! PD-code parsing and serialization.
//!
//! Format: `PD[X(a,b,c,d), S(e,f,g,h), ...]; loops=k` with the four arc
//! labels listed counterclockwise starting from the incoming under-strand,
//! `S` marking a singular crossing, and an optional `loops` suffix for
//! crossingless components. The direction of the over strand is not written;
//! it is inferred from global orientation consistency (each arc must have
//! exactly one head and one tail). When a component never passes under any
//! crossing both of its orientations are consistent; the first undetermined
//! crossing in input order is then read as positive.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::{ArcId, Crossing, CrossingKind, LinkDiagram};

struct RawCrossing {
    singular: bool,
    slots: [ArcId; 4], // CCW from the incoming under strand
    pos: usize,        // byte offset, for diagnostics
}

struct Scanner<'a> {
    text: &'a str,
    bytes: &'a [u8],
    i: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            text,
            bytes: text.as_bytes(),
            i: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.i,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.i < self.bytes.len() && self.bytes[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.i).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.bytes.get(self.i) == Some(&c) {
            self.i += 1;
            Ok(())
        } else {
            self.err(format!("expected {:?}", c as char))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.text[self.i..].starts_with(kw) {
            self.i += kw.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.bytes.len() && self.bytes[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return self.err("expected a number");
        }
        self.text[start..self.i]
            .parse()
            .or_else(|_| self.err("number out of range"))
    }
}

fn scan(text: &str) -> Result<(Vec<RawCrossing>, u32)> {
    let mut sc = Scanner::new(text);
    if !sc.eat_keyword("PD") {
        return sc.err("expected PD[...]");
    }
    sc.expect(b'[')?;
    let mut raw = Vec::new();
    loop {
        match sc.peek() {
            Some(b']') => {
                sc.i += 1;
                break;
            }
            Some(b'X') | Some(b'S') => {
                let pos = sc.i;
                let singular = sc.bytes[sc.i] == b'S';
                sc.i += 1;
                sc.expect(b'(')?;
                let mut slots = [0u32; 4];
                for (k, slot) in slots.iter_mut().enumerate() {
                    if k > 0 && sc.expect(b',').is_err() {
                        return sc.err("crossings take exactly four arc labels");
                    }
                    *slot = sc.number()?;
                }
                if sc.peek() == Some(b',') {
                    return sc.err("crossings take exactly four arc labels");
                }
                sc.expect(b')')?;
                raw.push(RawCrossing {
                    singular,
                    slots,
                    pos,
                });
                if sc.peek() == Some(b',') {
                    sc.i += 1;
                }
            }
            _ => return sc.err("expected X(...), S(...) or ]"),
        }
    }
    let mut loops = 0;
    if sc.peek() == Some(b';') {
        sc.i += 1;
        if !sc.eat_keyword("loops") {
            return sc.err("expected loops=k after ;");
        }
        sc.expect(b'=')?;
        loops = sc.number()?;
    }
    sc.skip_ws();
    if sc.i != sc.bytes.len() {
        return sc.err("trailing input");
    }
    Ok((raw, loops))
}

// An occurrence of an arc label in some crossing slot.
#[derive(Clone, Copy)]
enum Occ {
    FixedHead,    // under_in
    FixedTail,    // under_out
    OverB(usize), // slot b of crossing i: head iff crossing is negative
    OverD(usize), // slot d of crossing i: head iff crossing is positive
}

pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let (raw, loops) = scan(text)?;

    let mut occs: BTreeMap<ArcId, Vec<(Occ, usize)>> = BTreeMap::new();
    for (i, rc) in raw.iter().enumerate() {
        let [a, b, c, d] = rc.slots;
        occs.entry(a).or_default().push((Occ::FixedHead, rc.pos));
        occs.entry(c).or_default().push((Occ::FixedTail, rc.pos));
        occs.entry(b).or_default().push((Occ::OverB(i), rc.pos));
        occs.entry(d).or_default().push((Occ::OverD(i), rc.pos));
    }
    for (arc, v) in &occs {
        if v.len() != 2 {
            return Err(Error::Parse {
                pos: v[0].1,
                msg: format!("arc {arc} appears {} time(s), expected 2", v.len()),
            });
        }
    }

    // positive[i] = over strand runs d -> b at crossing i
    let mut positive: Vec<Option<bool>> = vec![None; raw.len()];
    // constraints from each arc: exactly one of its two occurrences is a head
    let constraints: Vec<(ArcId, [Occ; 2])> =
        occs.iter().map(|(&a, v)| (a, [v[0].0, v[1].0])).collect();

    // returns Some(is_head) when decided
    let head_state = |occ: Occ, positive: &[Option<bool>]| -> Option<bool> {
        match occ {
            Occ::FixedHead => Some(true),
            Occ::FixedTail => Some(false),
            Occ::OverB(i) => positive[i].map(|p| !p),
            Occ::OverD(i) => positive[i],
        }
    };
    let set_from_head = |occ: Occ, head: bool, positive: &mut [Option<bool>]| -> Result<()> {
        let (i, val) = match occ {
            Occ::FixedHead => return if head { Ok(()) } else { conflict_err(occ) },
            Occ::FixedTail => return if head { conflict_err(occ) } else { Ok(()) },
            Occ::OverB(i) => (i, !head),
            Occ::OverD(i) => (i, head),
        };
        match positive[i] {
            None => {
                positive[i] = Some(val);
                Ok(())
            }
            Some(v) if v == val => Ok(()),
            Some(_) => conflict_err(occ),
        }
    };

    loop {
        let mut progressed = false;
        for (arc, [o1, o2]) in &constraints {
            let s1 = head_state(*o1, &positive);
            let s2 = head_state(*o2, &positive);
            match (s1, s2) {
                (Some(h1), Some(h2)) => {
                    if h1 == h2 {
                        return Err(Error::Parse {
                            pos: 0,
                            msg: format!("orientation inconsistency at arc {arc}"),
                        });
                    }
                }
                (Some(h1), None) => {
                    set_from_head(*o2, !h1, &mut positive).map_err(|_| Error::Parse {
                        pos: 0,
                        msg: format!("orientation inconsistency at arc {arc}"),
                    })?;
                    progressed = true;
                }
                (None, Some(h2)) => {
                    set_from_head(*o1, !h2, &mut positive).map_err(|_| Error::Parse {
                        pos: 0,
                        msg: format!("orientation inconsistency at arc {arc}"),
                    })?;
                    progressed = true;
                }
                (None, None) => {}
            }
        }
        if !progressed {
            // anchor the first undecided crossing, if any (always-over component)
            if let Some(i) = positive.iter().position(Option::is_none) {
                positive[i] = Some(true);
            } else {
                break;
            }
        }
    }

    let crossings: Vec<Crossing> = raw
        .iter()
        .enumerate()
        .map(|(i, rc)| {
            let [a, b, c, d] = rc.slots;
            let pos = positive[i].unwrap();
            match (rc.singular, pos) {
                (false, true) => Crossing {
                    kind: CrossingKind::Positive,
                    under_in: a,
                    under_out: c,
                    over_in: d,
                    over_out: b,
                },
                (false, false) => Crossing {
                    kind: CrossingKind::Negative,
                    under_in: a,
                    under_out: c,
                    over_in: b,
                    over_out: d,
                },
                // singular crossings are stored in the positive frame
                (true, true) => Crossing {
                    kind: CrossingKind::Singular,
                    under_in: a,
                    under_out: c,
                    over_in: d,
                    over_out: b,
                },
                (true, false) => Crossing {
                    kind: CrossingKind::Singular,
                    under_in: b,
                    under_out: d,
                    over_in: a,
                    over_out: c,
                },
            }
        })
        .collect();

    LinkDiagram::new(crossings, loops)
}

fn conflict_err(_occ: Occ) -> Result<()> {
    Err(Error::Parse {
        pos: 0,
        msg: "orientation inconsistency".into(),
    })
}

pub(super) fn serialize(d: &LinkDiagram) -> String {
    let canon = d.canonical_relabel();
    let mut parts = Vec::new();
    for c in canon.crossings() {
        let (tag, slots) = match c.kind {
            CrossingKind::Positive => ('X', [c.under_in, c.over_out, c.under_out, c.over_in]),
            CrossingKind::Negative => ('X', [c.under_in, c.over_in, c.under_out, c.over_out]),
            CrossingKind::Singular => ('S', [c.under_in, c.over_out, c.under_out, c.over_in]),
        };
        parts.push(format!(
            "{tag}({},{},{},{})",
            slots[0], slots[1], slots[2], slots[3]
        ));
    }
    let mut out = format!("PD[{}]", parts.join(", "));
    if canon.free_loops() > 0 {
        out.push_str(&format!("; loops={}", canon.free_loops()));
    }
    out
}
