//! Reidemeister I and II reductions.
//!
//! `simplify` shrinks a diagram for the ambient-isotopy invariants; the
//! component count is preserved, the writhe is not (R1 changes it).
//! `reduce_regular` is the regular-isotopy variant used by the Dubrovnik
//! engine: R2 is applied freely, every removed R1 curl is accounted for by
//! an exponent of the framing variable. Reductions never touch singular
//! crossings.

use super::{ArcId, Channel, CrossingKind, LinkDiagram};

/// R1 + R2 to a fixed point.
pub fn simplify(d: &LinkDiagram) -> LinkDiagram {
    reduce(d).0
}

/// R2 plus curl-counted R1: returns (reduced diagram, net curl exponent),
/// with `delta(original) = a^exponent * delta(reduced)` in the Dubrovnik
/// sense.
pub fn reduce_regular(d: &LinkDiagram) -> (LinkDiagram, i64) {
    reduce(d)
}

fn reduce(d: &LinkDiagram) -> (LinkDiagram, i64) {
    let mut cur = d.clone();
    let mut curl_exp = 0i64;
    loop {
        if let Some((idx, joins, sign)) = find_r1(&cur) {
            curl_exp += sign;
            cur = cur.remove_crossings(&[idx], &joins);
            continue;
        }
        if let Some((x, y, joins)) = find_r2(&cur) {
            cur = cur.remove_crossings(&[x, y], &joins);
            continue;
        }
        break;
    }
    (cur, curl_exp)
}

type Joins = Vec<(ArcId, ArcId)>;

fn find_r1(d: &LinkDiagram) -> Option<(usize, Joins, i64)> {
    for (i, c) in d.crossings().iter().enumerate() {
        let Some(sign) = c.kind.sign() else { continue };
        if c.under_in == c.over_out {
            return Some((i, vec![(c.over_in, c.under_out)], sign));
        }
        if c.under_out == c.over_in {
            return Some((i, vec![(c.under_in, c.over_out)], sign));
        }
    }
    None
}

fn find_r2(d: &LinkDiagram) -> Option<(usize, usize, Joins)> {
    let heads = d.heads();
    let tails = d.tails();
    for (&arc, &(x, tch)) in &tails {
        if tch != Channel::Over {
            continue;
        }
        let &(y, hch) = heads.get(&arc).expect("valid diagram");
        if hch != Channel::Over || x == y {
            continue;
        }
        let cx = d.crossings()[x];
        let cy = d.crossings()[y];
        if cx.kind == CrossingKind::Singular || cy.kind == CrossingKind::Singular {
            continue;
        }
        // a genuine bigon has opposite signs; skip anything else
        if cx.kind == cy.kind {
            continue;
        }
        if cx.under_out == cy.under_in {
            // parallel strands
            return Some((
                x,
                y,
                vec![(cx.over_in, cy.over_out), (cx.under_in, cy.under_out)],
            ));
        }
        if cy.under_out == cx.under_in {
            // antiparallel strands
            return Some((
                x,
                y,
                vec![(cx.over_in, cy.over_out), (cy.under_in, cx.under_out)],
            ));
        }
    }
    None
}
