//! Named, reproducible checks of the non-cancellation families and of the
//! common-multiple and center statements for `G⁺(2, 2)`.

use std::str::FromStr;

use crate::cancel::verify_claim;
use crate::error::{Error, Result};
use crate::fixtures::Fixture;
use crate::gmn::{build_gmn, Family};
use crate::group::center_scan;
use crate::presentation::Word;
use crate::rewrite::Monoid;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimId {
    /// Three `k`-indexed non-cancellation families in `M6`.
    M6K,
    /// `dbcefa = dbefac` but `cefa != efac` in `M6p`.
    M6p,
    /// Three `k`-indexed families in `M6p` completed by `cefa = efac`.
    M6pCompletedK,
    /// Minimal common multiples of `{t1, t2}` in `G⁺(2, 2)`.
    Prop53,
    /// The center of `G⁺(2, 2)` up to length 5.
    Prop54,
}

impl ClaimId {
    pub const ALL: [ClaimId; 5] = [
        ClaimId::M6K,
        ClaimId::M6p,
        ClaimId::M6pCompletedK,
        ClaimId::Prop53,
        ClaimId::Prop54,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::M6K => "M6-k",
            ClaimId::M6p => "M6p",
            ClaimId::M6pCompletedK => "M6p-completed-k",
            ClaimId::Prop53 => "prop53",
            ClaimId::Prop54 => "prop54",
        }
    }

    /// The claim a fixture name refers to when no id is given.
    pub fn for_target(target: &str) -> Result<ClaimId> {
        match target.parse::<Fixture>() {
            Ok(Fixture::M6) => Ok(ClaimId::M6K),
            Ok(Fixture::M6p) => Ok(ClaimId::M6p),
            Ok(Fixture::M6pCompleted) => Ok(ClaimId::M6pCompletedK),
            Err(_) => target.parse(),
        }
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown claim `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimLine {
    pub statement: String,
    pub expected: bool,
    pub observed: bool,
}

impl ClaimLine {
    pub fn passed(&self) -> bool {
        self.expected == self.observed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub id: ClaimId,
    pub k: usize,
    pub lines: Vec<ClaimLine>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(ClaimLine::passed)
    }
}

/// A family `lhs = rhs` holds but `cancelled_lhs = cancelled_rhs` fails.
type Family4 = (String, String, String, String);

fn m6_families(k: usize) -> Vec<Family4> {
    let a = "a".repeat(k);
    let e = "e".repeat(k);
    let f = "f".repeat(k);
    vec![
        (
            format!("cde{a}f"),
            format!("ce{a}fd"),
            format!("de{a}f"),
            format!("e{a}fd"),
        ),
        (
            format!("bf{e}ac"),
            format!("f{e}abc"),
            format!("bf{e}a"),
            format!("f{e}ab"),
        ),
        (
            format!("ce{f}ab"),
            format!("e{f}acb"),
            format!("ce{f}a"),
            format!("e{f}ac"),
        ),
    ]
}

fn m6p_completed_families(k: usize) -> Vec<Family4> {
    let e = "e".repeat(k);
    let a = "a".repeat(k);
    let c = "c".repeat(k);
    vec![
        (
            format!("acde{e}abf"),
            format!("d{e}aabcef"),
            format!("acde{e}ab"),
            format!("d{e}aabce"),
        ),
        (
            format!("cefa{a}cdb"),
            format!("f{a}ccdeab"),
            format!("cefa{a}cd"),
            format!("f{a}ccdea"),
        ),
        (
            format!("eabc{c}efd"),
            format!("b{c}eefacd"),
            format!("eabc{c}ef"),
            format!("b{c}eefac"),
        ),
    ]
}

fn check_families(monoid: &Monoid, families: &[Family4]) -> Result<Vec<ClaimLine>> {
    let mut lines = Vec::new();
    for (l, r, cl, cr) in families {
        let w = |s: &str| monoid.parse_word(s);
        let check = verify_claim(monoid, &w(l)?, &w(r)?, &w(cl)?, &w(cr)?)?;
        lines.push(ClaimLine {
            statement: format!("{l} = {r}"),
            expected: true,
            observed: check.holds,
        });
        lines.push(ClaimLine {
            statement: format!("{cl} = {cr}"),
            expected: false,
            observed: check.cancelled_holds,
        });
    }
    Ok(lines)
}

/// Runs a claim at parameter `k` (ignored by claims without a family
/// index). `cap` bounds every class enumeration.
pub fn run_claim(id: ClaimId, k: usize, cap: usize) -> Result<ClaimReport> {
    if k == 0 && matches!(id, ClaimId::M6K | ClaimId::M6pCompletedK) {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let lines = match id {
        ClaimId::M6K => {
            let m = Monoid::with_cap(Fixture::M6.presentation(), cap)?;
            check_families(&m, &m6_families(k))?
        }
        ClaimId::M6p => {
            let m = Monoid::with_cap(Fixture::M6p.presentation(), cap)?;
            let fam = (
                "dbcefa".into(),
                "dbefac".into(),
                "cefa".into(),
                "efac".into(),
            );
            check_families(&m, &[fam])?
        }
        ClaimId::M6pCompletedK => {
            let m = Monoid::with_cap(Fixture::M6pCompleted.presentation(), cap)?;
            check_families(&m, &m6p_completed_families(k))?
        }
        ClaimId::Prop53 => prop53_lines(cap)?,
        ClaimId::Prop54 => prop54_lines(cap)?,
    };
    Ok(ClaimReport { id, k, lines })
}

fn prop53_lines(cap: usize) -> Result<Vec<ClaimLine>> {
    let g = build_gmn(2, 2)?;
    let m = g.monoid_with_cap(cap)?;
    let p = &g.presentation;
    let t = [Word::new(vec![g.t(1)]), Word::new(vec![g.t(2)])];
    let report = m.minimal_common_multiples(&t, 4)?;

    // predicted: w(u)·Δ₁ with w(u) a u-word of length <= 1 not ending in u1⋯un
    let mut predicted = std::collections::BTreeSet::new();
    let mut prefixes = vec![Word::empty()];
    prefixes.extend(
        g.family_letters(Family::U)
            .into_iter()
            .map(|l| Word::new(vec![l])),
    );
    for w in prefixes {
        if g.is_reduced_mod_run(Family::U, &w) {
            predicted.insert(m.canonical(&w.concat(&g.delta1))?);
        }
    }
    let listed: Vec<String> = report.minimal.iter().map(|w| p.format_word(w)).collect();
    Ok(vec![
        ClaimLine {
            statement: format!(
                "minimal common multiples of {{t1, t2}} up to length 4 are w(u)·Δ₁, |w(u)| <= 1 (found {})",
                listed.join(", ")
            ),
            expected: true,
            observed: report.minimal == predicted && predicted.len() == 3,
        },
        ClaimLine {
            statement: "{t1, t2} has a least common multiple up to length 4".into(),
            expected: false,
            observed: report.lcm_up_to_bound.is_some(),
        },
    ])
}

fn prop54_lines(cap: usize) -> Result<Vec<ClaimLine>> {
    let g = build_gmn(2, 2)?;
    let m = g.monoid_with_cap(cap)?;
    let center = center_scan(&m, 5)?;
    let delta = m.canonical(&g.delta)?;
    let non_trivial: Vec<&Word> = center.iter().filter(|w| !w.is_empty()).collect();
    let mut divisible = true;
    for w in &non_trivial {
        divisible &= m.left_divides(&g.delta, w)?.divides;
    }
    Ok(vec![
        ClaimLine {
            statement: "non-trivial central elements up to length 5 are exactly {Δ}".into(),
            expected: true,
            observed: non_trivial == vec![&delta],
        },
        ClaimLine {
            statement: "every non-trivial central element is left-divisible by Δ".into(),
            expected: true,
            observed: divisible,
        },
    ])
}
