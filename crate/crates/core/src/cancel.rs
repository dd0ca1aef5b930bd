//! Bounded search for cancellation failures.
//!
//! A left failure is a letter `g` and words `x != y` with `g·x = g·y`. Any
//! failure `a·x·b = a·y·b` with `x != y` yields a single-letter failure by
//! peeling letters off `a` (or `b`) until the first step where the two sides
//! stop being equal, so single-letter contexts are enough for detection.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::divisibility::Side;
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};
use crate::rewrite::Monoid;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CancellationFailure {
    pub side: Side,
    /// The letter that cannot be cancelled.
    pub context: Word,
    pub x: Word,
    pub y: Word,
}

impl CancellationFailure {
    /// `context·x` and `context·y` (or `x·context`, `y·context`).
    pub fn products(&self) -> (Word, Word) {
        match self.side {
            Side::Left => (self.context.concat(&self.x), self.context.concat(&self.y)),
            Side::Right => (self.x.concat(&self.context), self.y.concat(&self.context)),
        }
    }

    /// Re-checks the failure from scratch.
    pub fn verify(&self, monoid: &Monoid) -> Result<bool> {
        let (a, b) = self.products();
        Ok(monoid.equal(&a, &b)? && !monoid.equal(&self.x, &self.y)?)
    }

    fn sort_key(&self) -> (u8, usize, &Word, &Word, &Word) {
        let side = match self.side {
            Side::Left => 0,
            Side::Right => 1,
        };
        (side, self.x.len(), &self.x, &self.y, &self.context)
    }
}

impl PartialOrd for CancellationFailure {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CancellationFailure {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

/// All single-letter cancellation failures with `|g·x| <= max_len`, one per
/// (side, context class, class of x, class of y), with `x < y` canonical.
pub fn search_failures(monoid: &Monoid, max_len: usize) -> Result<Vec<CancellationFailure>> {
    let mut found = BTreeSet::new();
    for n in 2..=max_len {
        let layer = monoid.layer(n)?;
        let tail = monoid.layer(n - 1)?;
        for id in layer.ids() {
            for side in [Side::Left, Side::Right] {
                let mut by_context: BTreeMap<Word, BTreeSet<usize>> = BTreeMap::new();
                for m in layer.members(id) {
                    let (ctx, rest) = match side {
                        Side::Left => (m.prefix(1), m.suffix_from(1)),
                        Side::Right => (m.suffix_from(n - 1), m.prefix(n - 1)),
                    };
                    by_context
                        .entry(monoid.canonical(&ctx)?)
                        .or_default()
                        .insert(tail.class_id(&rest));
                }
                for (ctx, ids) in by_context {
                    let ids: Vec<usize> = ids.into_iter().collect();
                    for (i, &a) in ids.iter().enumerate() {
                        for &b in &ids[i + 1..] {
                            let (x, y) = ordered(tail.canonical(a), tail.canonical(b));
                            found.insert(CancellationFailure {
                                side,
                                context: ctx.clone(),
                                x: x.clone(),
                                y: y.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

fn ordered<'a>(a: &'a Word, b: &'a Word) -> (&'a Word, &'a Word) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub holds: bool,
    pub cancelled_holds: bool,
}

impl ClaimCheck {
    /// The shape of a non-cancellation claim: the long equality holds and
    /// the cancelled one does not.
    pub fn witnesses_failure(&self) -> bool {
        self.holds && !self.cancelled_holds
    }
}

/// Evaluates `lhs = rhs` and `cancelled_lhs = cancelled_rhs` directly.
pub fn verify_claim(
    monoid: &Monoid,
    lhs: &Word,
    rhs: &Word,
    cancelled_lhs: &Word,
    cancelled_rhs: &Word,
) -> Result<ClaimCheck> {
    Ok(ClaimCheck {
        holds: monoid.equal(lhs, rhs)?,
        cancelled_holds: monoid.equal(cancelled_lhs, cancelled_rhs)?,
    })
}

/// One completion step: a copy of `p` with the relation `u = v` added.
pub fn add_relation(p: &Presentation, u: &Word, v: &Word) -> Result<Presentation> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    p.with_relation(u.clone(), v.clone())
}
