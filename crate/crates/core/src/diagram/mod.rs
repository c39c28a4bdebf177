//! Oriented link diagrams and the crossing surgeries the skein recursion and
//! the Vassiliev relation need.
//!
//! A diagram is a list of crossings plus a count of crossingless loops. Each
//! crossing stores the four incident arc ids by role: the under strand runs
//! `under_in -> under_out`, the other strand `over_in -> over_out`. The arc
//! table is implicit: every arc id appears exactly once as an in-slot (its
//! head) and once as an out-slot (its tail), so connectivity is recovered by
//! scanning the crossing list. Singular crossings are stored in the positive
//! frame: resolving one positively keeps its slots, resolving negatively
//! swaps the two channels.

mod braid;
mod pd;
mod simplify;

pub use braid::{from_braid, parse_braid, BraidWord};
pub use pd::parse_pd;
pub use simplify::{reduce_regular, simplify};

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub type ArcId = u32;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CrossingKind {
    Positive,
    Negative,
    Singular,
}

impl CrossingKind {
    /// +1 or -1 for transverse crossings.
    pub fn sign(self) -> Option<i64> {
        match self {
            CrossingKind::Positive => Some(1),
            CrossingKind::Negative => Some(-1),
            CrossingKind::Singular => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Channel {
    Under,
    Over,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub under_in: ArcId,
    pub under_out: ArcId,
    pub over_in: ArcId,
    pub over_out: ArcId,
}

impl Crossing {
    pub fn in_arc(&self, ch: Channel) -> ArcId {
        match ch {
            Channel::Under => self.under_in,
            Channel::Over => self.over_in,
        }
    }

    pub fn out_arc(&self, ch: Channel) -> ArcId {
        match ch {
            Channel::Under => self.under_out,
            Channel::Over => self.over_out,
        }
    }

    /// Over/under exchange; flips the sign.
    fn switched(&self) -> Crossing {
        let kind = match self.kind {
            CrossingKind::Positive => CrossingKind::Negative,
            CrossingKind::Negative => CrossingKind::Positive,
            CrossingKind::Singular => CrossingKind::Singular,
        };
        Crossing {
            kind,
            under_in: self.over_in,
            under_out: self.over_out,
            over_in: self.under_in,
            over_out: self.under_out,
        }
    }

    /// Reverse the strand running through one channel. The crossing sign
    /// flips; a singular crossing stays singular.
    fn with_channel_reversed(&self, ch: Channel) -> Crossing {
        let mut c = *self;
        match ch {
            Channel::Under => std::mem::swap(&mut c.under_in, &mut c.under_out),
            Channel::Over => std::mem::swap(&mut c.over_in, &mut c.over_out),
        }
        c.kind = match c.kind {
            CrossingKind::Positive => CrossingKind::Negative,
            CrossingKind::Negative => CrossingKind::Positive,
            CrossingKind::Singular => CrossingKind::Singular,
        };
        c
    }

    fn renamed(&self, renames: &BTreeMap<ArcId, ArcId>) -> Crossing {
        let r = |a: ArcId| resolve_rename(renames, a);
        Crossing {
            kind: self.kind,
            under_in: r(self.under_in),
            under_out: r(self.under_out),
            over_in: r(self.over_in),
            over_out: r(self.over_out),
        }
    }
}

fn resolve_rename(renames: &BTreeMap<ArcId, ArcId>, mut a: ArcId) -> ArcId {
    while let Some(&b) = renames.get(&a) {
        a = b;
    }
    a
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: u32,
}

impl LinkDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: u32) -> Result<Self> {
        let d = LinkDiagram {
            crossings,
            free_loops,
        };
        d.validate()?;
        Ok(d)
    }

    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        LinkDiagram {
            crossings: Vec::new(),
            free_loops: 1,
        }
    }

    pub fn unlink(components: u32) -> Self {
        assert!(components >= 1);
        LinkDiagram {
            crossings: Vec::new(),
            free_loops: components,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn singular_indices(&self) -> Vec<usize> {
        self.crossings
            .iter()
            .enumerate()
            .filter(|(_, c)| c.kind == CrossingKind::Singular)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn singular_count(&self) -> usize {
        self.singular_indices().len()
    }

    pub fn is_transverse(&self) -> bool {
        self.singular_count() == 0
    }

    /// Checks that every arc has exactly one head and one tail and that the
    /// diagram is nonempty.
    pub fn validate(&self) -> Result<()> {
        if self.crossings.is_empty() && self.free_loops == 0 {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty link diagram".into(),
            });
        }
        let mut heads: BTreeMap<ArcId, u32> = BTreeMap::new();
        let mut tails: BTreeMap<ArcId, u32> = BTreeMap::new();
        for c in &self.crossings {
            *heads.entry(c.under_in).or_default() += 1;
            *heads.entry(c.over_in).or_default() += 1;
            *tails.entry(c.under_out).or_default() += 1;
            *tails.entry(c.over_out).or_default() += 1;
        }
        let ids: BTreeSet<ArcId> = heads.keys().chain(tails.keys()).copied().collect();
        for a in ids {
            let h = heads.get(&a).copied().unwrap_or(0);
            let t = tails.get(&a).copied().unwrap_or(0);
            if h != 1 || t != 1 {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("arc {a} has {h} head(s) and {t} tail(s)"),
                });
            }
        }
        Ok(())
    }

    /// arc -> (crossing index, channel entered) at the arc's head.
    pub fn heads(&self) -> BTreeMap<ArcId, (usize, Channel)> {
        let mut m = BTreeMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            m.insert(c.under_in, (i, Channel::Under));
            m.insert(c.over_in, (i, Channel::Over));
        }
        m
    }

    /// arc -> (crossing index, channel left) at the arc's tail.
    pub fn tails(&self) -> BTreeMap<ArcId, (usize, Channel)> {
        let mut m = BTreeMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            m.insert(c.under_out, (i, Channel::Under));
            m.insert(c.over_out, (i, Channel::Over));
        }
        m
    }

    /// Arc cycles of the components that pass through crossings, each walk
    /// starting from its smallest arc id, listed by that id.
    pub fn component_walks(&self) -> Vec<Vec<ArcId>> {
        let heads = self.heads();
        let mut seen: BTreeSet<ArcId> = BTreeSet::new();
        let mut walks = Vec::new();
        for &start in heads.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut a = start;
            loop {
                walk.push(a);
                seen.insert(a);
                let (ci, ch) = heads[&a];
                a = self.crossings[ci].out_arc(ch);
                if a == start {
                    break;
                }
            }
            walks.push(walk);
        }
        walks
    }

    /// Number of components; singular crossings are traced like transverse
    /// ones.
    pub fn components(&self) -> u32 {
        self.component_walks().len() as u32 + self.free_loops
    }

    /// Signed crossing count. Singular crossings are rejected.
    pub fn writhe(&self) -> Result<i64> {
        let mut w = 0;
        for c in &self.crossings {
            w += c.kind.sign().ok_or(Error::SingularDiagram)?;
        }
        Ok(w)
    }

    fn check_idx(&self, idx: usize) -> Result<&Crossing> {
        self.crossings.get(idx).ok_or(Error::InvalidCrossing(idx))
    }

    /// Over/under exchange at one transverse crossing.
    pub fn switch_crossing(&self, idx: usize) -> Result<LinkDiagram> {
        let c = self.check_idx(idx)?;
        if c.kind == CrossingKind::Singular {
            return Err(Error::SingularCrossing(idx));
        }
        let mut out = self.clone();
        out.crossings[idx] = c.switched();
        Ok(out)
    }

    /// Mark a transverse crossing as a double point. The slots are stored in
    /// the positive frame, so the positive resolution reproduces the original
    /// when the crossing was positive, and its switch when it was negative.
    pub fn make_singular(&self, idx: usize) -> Result<LinkDiagram> {
        let c = self.check_idx(idx)?;
        let mut out = self.clone();
        out.crossings[idx] = match c.kind {
            CrossingKind::Positive => Crossing {
                kind: CrossingKind::Singular,
                ..*c
            },
            CrossingKind::Negative => Crossing {
                kind: CrossingKind::Singular,
                ..c.switched()
            },
            CrossingKind::Singular => return Err(Error::AlreadySingular(idx)),
        };
        Ok(out)
    }

    fn resolved_at(&self, idx: usize, positive: bool) -> LinkDiagram {
        let c = self.crossings[idx];
        debug_assert_eq!(c.kind, CrossingKind::Singular);
        let mut out = self.clone();
        out.crossings[idx] = if positive {
            Crossing {
                kind: CrossingKind::Positive,
                ..c
            }
        } else {
            Crossing {
                kind: CrossingKind::Negative,
                under_in: c.over_in,
                under_out: c.over_out,
                over_in: c.under_in,
                over_out: c.under_out,
            }
        };
        out
    }

    /// All 2^s transverse resolutions with the Vassiliev signs
    /// (-1)^(number of negative replacements), closest-to-all-positive first.
    pub fn resolve_singulars(&self) -> Vec<(i64, LinkDiagram)> {
        let singulars = self.singular_indices();
        let s = singulars.len();
        let mut out = Vec::with_capacity(1 << s);
        for mask in 0..(1u32 << s) {
            let mut d = self.clone();
            for (bit, &idx) in singulars.iter().enumerate() {
                d = d.resolved_at(idx, mask & (1 << bit) == 0);
            }
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            out.push((sign, d));
        }
        out
    }

    /// Removes crossings and merges arc pairs. Each join (p, q) glues the
    /// strand arriving on p to the strand departing on q; a join whose two
    /// arcs already coincide closes a free loop.
    fn remove_crossings(&self, remove: &[usize], joins: &[(ArcId, ArcId)]) -> LinkDiagram {
        let mut renames: BTreeMap<ArcId, ArcId> = BTreeMap::new();
        let mut loops = self.free_loops;
        for &(p, q) in joins {
            let p = resolve_rename(&renames, p);
            let q = resolve_rename(&renames, q);
            if p == q {
                loops += 1;
            } else {
                renames.insert(q, p);
            }
        }
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, c)| c.renamed(&renames))
            .collect();
        let out = LinkDiagram {
            crossings,
            free_loops: loops,
        };
        debug_assert!(out.validate().is_ok(), "surgery broke the arc table");
        out
    }

    /// Orientation-compatible smoothing: the incoming under strand continues
    /// into the outgoing over strand and vice versa.
    pub fn smooth_oriented(&self, idx: usize) -> Result<LinkDiagram> {
        let c = *self.check_idx(idx)?;
        if c.kind == CrossingKind::Singular {
            return Err(Error::SingularCrossing(idx));
        }
        Ok(self.remove_crossings(
            &[idx],
            &[(c.under_in, c.over_out), (c.over_in, c.under_out)],
        ))
    }

    /// Smoothing of the unoriented shadow. `Zero` is the same reconnection as
    /// the oriented smoothing; `Infinity` joins the two in-ends and the two
    /// out-ends, which reverses part of the diagram. The reversed stretch is
    /// re-oriented: every channel it passes through swaps its in/out slots
    /// and flips its sign.
    pub fn smooth_unoriented(&self, idx: usize, mode: SmoothMode) -> Result<LinkDiagram> {
        let c = *self.check_idx(idx)?;
        if c.kind == CrossingKind::Singular {
            return Err(Error::SingularCrossing(idx));
        }
        match mode {
            SmoothMode::Zero => self.smooth_oriented(idx),
            SmoothMode::Infinity => {
                // walk forward from under_out until returning to this
                // crossing; that stretch is the part to reverse
                let heads = self.heads();
                let mut flips: Vec<(usize, Channel)> = Vec::new();
                let mut a = c.under_out;
                let mut guard = 0usize;
                loop {
                    let (ci, ch) = heads[&a];
                    if ci == idx {
                        break;
                    }
                    flips.push((ci, ch));
                    a = self.crossings[ci].out_arc(ch);
                    guard += 1;
                    assert!(guard <= 2 * self.crossings.len(), "walk failed to close");
                }
                let mut work = self.clone();
                for (ci, ch) in flips {
                    work.crossings[ci] = work.crossings[ci].with_channel_reversed(ch);
                }
                Ok(work.remove_crossings(
                    &[idx],
                    &[(c.under_in, c.over_in), (c.under_out, c.over_out)],
                ))
            }
        }
    }

    /// First crossing reached through its under channel before its over
    /// channel, walking components in order of their smallest arc id.
    /// `None` means the diagram is descending.
    pub fn descending_pivot(&self) -> Option<usize> {
        let heads = self.heads();
        let mut seen = vec![false; self.crossings.len()];
        for walk in self.component_walks() {
            for a in walk {
                let (ci, ch) = heads[&a];
                if !seen[ci] {
                    seen[ci] = true;
                    if ch == Channel::Under {
                        return Some(ci);
                    }
                }
            }
        }
        None
    }

    /// Relabels arcs 1..2c along a canonical traversal and sorts crossings.
    /// The result depends only on the diagram up to arc relabeling, so equal
    /// keys mean equal diagrams.
    pub fn canonical_key(&self) -> String {
        self.canonical_relabel().raw_key()
    }

    fn raw_key(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        for c in &self.crossings {
            let k = match c.kind {
                CrossingKind::Positive => 'P',
                CrossingKind::Negative => 'N',
                CrossingKind::Singular => 'S',
            };
            write!(
                s,
                "{k}{},{},{},{};",
                c.under_in, c.under_out, c.over_in, c.over_out
            )
            .unwrap();
        }
        write!(s, "L{}", self.free_loops).unwrap();
        s
    }

    /// Canonically relabeled copy: the lexicographically smallest encoding
    /// over all component orders and rotations.
    pub fn canonical_relabel(&self) -> LinkDiagram {
        let walks = self.component_walks();
        if walks.is_empty() {
            return self.clone();
        }
        let orders = permutations(walks.len());
        let mut best: Option<(String, LinkDiagram)> = None;
        for order in &orders {
            // enumerate rotation choices per component
            let mut rot_counts: Vec<usize> = order.iter().map(|&i| walks[i].len()).collect();
            let mut rots = vec![0usize; order.len()];
            loop {
                let mut labels: BTreeMap<ArcId, ArcId> = BTreeMap::new();
                let mut next: ArcId = 1;
                for (slot, &wi) in order.iter().enumerate() {
                    let w = &walks[wi];
                    for k in 0..w.len() {
                        let arc = w[(rots[slot] + k) % w.len()];
                        labels.insert(arc, next);
                        next += 1;
                    }
                }
                let mut crossings: Vec<Crossing> = self
                    .crossings
                    .iter()
                    .map(|c| Crossing {
                        kind: c.kind,
                        under_in: labels[&c.under_in],
                        under_out: labels[&c.under_out],
                        over_in: labels[&c.over_in],
                        over_out: labels[&c.over_out],
                    })
                    .collect();
                crossings.sort_by_key(|c| {
                    (
                        kind_rank(c.kind),
                        c.under_in,
                        c.under_out,
                        c.over_in,
                        c.over_out,
                    )
                });
                let cand = LinkDiagram {
                    crossings,
                    free_loops: self.free_loops,
                };
                let key = cand.raw_key();
                if best.as_ref().is_none_or(|(bk, _)| key < *bk) {
                    best = Some((key, cand));
                }
                // advance rotation counters
                let mut i = 0;
                loop {
                    if i == rots.len() {
                        break;
                    }
                    rots[i] += 1;
                    if rots[i] < rot_counts[i] {
                        break;
                    }
                    rots[i] = 0;
                    i += 1;
                }
                if i == rots.len() {
                    break;
                }
                let _ = &mut rot_counts;
            }
        }
        best.unwrap().1
    }

    /// Canonical PD text; see the module for the slot conventions.
    pub fn serialize_pd(&self) -> String {
        pd::serialize(self)
    }

    /// Equality up to arc relabeling.
    pub fn same_diagram(&self, other: &LinkDiagram) -> bool {
        self.canonical_key() == other.canonical_key()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SmoothMode {
    Zero,
    Infinity,
}

fn kind_rank(k: CrossingKind) -> u8 {
    match k {
        CrossingKind::Positive => 0,
        CrossingKind::Negative => 1,
        CrossingKind::Singular => 2,
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

#[cfg(test)]
mod tests;
