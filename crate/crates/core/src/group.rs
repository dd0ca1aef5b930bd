//! The word problem in the group of fractions.
//!
//! With a fundamental element `Δ` and `Λ = Δ^N` central (`N` the order of
//! `σ_Δ`), inverses can be cleared: if `p·q = Λ^j` then `p⁻¹ = q·Λ^{-j}`.
//! Each maximal run of inverse letters is the inverse of a positive word
//! `p`; replacing it by `q` and pushing the `Λ^{-j}` to the front turns a
//! group word `w` into a positive word equal to `Λ^k·w`. Runs are split
//! into pieces dividing `Λ`, so `j` never exceeds the run length. When the monoid embeds in
//! its group, two group words are equal exactly when their lifts (with a
//! common `k`) are equal in the monoid.

use std::fmt;

use crate::cancel::search_failures;
use crate::error::{Error, Result};
use crate::garside::FundamentalCertificate;
use crate::presentation::{Letter, Presentation, Word};
use crate::rewrite::Monoid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

/// A word in the free group: letters with inversion flags.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignedWord {
    pub entries: Vec<(Letter, Sign)>,
}

impl SignedWord {
    pub fn new(entries: Vec<(Letter, Sign)>) -> Self {
        SignedWord { entries }
    }

    pub fn positive(w: &Word) -> Self {
        SignedWord {
            entries: w.letters().iter().map(|&l| (l, Sign::Pos)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        SignedWord {
            entries: self
                .entries
                .iter()
                .rev()
                .map(|&(l, s)| {
                    (
                        l,
                        match s {
                            Sign::Pos => Sign::Neg,
                            Sign::Neg => Sign::Pos,
                        },
                    )
                })
                .collect(),
        }
    }

    pub fn concat(&self, other: &SignedWord) -> Self {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        SignedWord { entries }
    }

    pub fn negative_count(&self) -> usize {
        self.entries.iter().filter(|(_, s)| *s == Sign::Neg).count()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Parses `t1.u1.t1~.u1~`, or `abA~` style bare concatenation when all
    /// generator names are single characters. `~` marks an inverse.
    pub fn parse(p: &Presentation, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(SignedWord::default());
        }
        let tokens: Vec<&str> = if text.contains('.') {
            text.split('.').collect()
        } else if p.letter(text.trim_end_matches('~')).is_some() {
            vec![text]
        } else if p.single_char_names() {
            let mut toks = Vec::new();
            let mut chars = text.char_indices().peekable();
            while let Some((i, c)) = chars.next() {
                let mut end = i + c.len_utf8();
                if let Some(&(j, '~')) = chars.peek() {
                    end = j + 1;
                    chars.next();
                }
                toks.push(&text[i..end]);
            }
            toks
        } else {
            vec![text]
        };
        let mut entries = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let (name, sign) = match tok.strip_suffix('~') {
                Some(n) => (n, Sign::Neg),
                None => (tok, Sign::Pos),
            };
            let l = p.letter(name).ok_or_else(|| Error::UnknownLetter {
                name: name.to_string(),
                line: 0,
            })?;
            entries.push((l, sign));
        }
        Ok(SignedWord { entries })
    }

    pub fn format(&self, p: &Presentation) -> String {
        if self.entries.is_empty() {
            return "ε".into();
        }
        self.entries
            .iter()
            .map(|&(l, s)| match s {
                Sign::Pos => p.name(l).to_string(),
                Sign::Neg => format!("{}~", p.name(l)),
            })
            .collect::<Vec<_>>()
            .join(".")
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

/// Cancels adjacent `g·g⁻¹` and `g⁻¹·g` pairs until none remain.
pub fn free_reduce(w: &SignedWord) -> SignedWord {
    let mut stack: Vec<(Letter, Sign)> = Vec::with_capacity(w.entries.len());
    for &(l, s) in &w.entries {
        match stack.last() {
            Some(&(top, ts)) if top == l && ts != s => {
                stack.pop();
            }
            _ => stack.push((l, s)),
        }
    }
    SignedWord { entries: stack }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftResult {
    /// Power of `Λ` multiplied on the left.
    pub k: usize,
    /// A positive word equal to `Λ^k · w` in the group.
    pub positive: Word,
}

/// Positive `q` and exponent `j` with `p·q = Λ^j`, so that
/// `p⁻¹ = q·Λ^{-j}`. `p` is cut greedily into maximal prefixes `b` that
/// left-divide `Λ`; each contributes its quotient and one factor of `Λ`.
/// Every atom divides `Λ`, so `j <= |p|`, and only the class of `Λ` itself
/// is ever enumerated.
fn run_complement(
    monoid: &Monoid,
    cert: &FundamentalCertificate,
    p: &Word,
) -> Result<(usize, Word)> {
    let lambda = cert.lambda();
    let mut blocks: Vec<Word> = Vec::new();
    let mut rest = p.clone();
    while !rest.is_empty() {
        let mut found = None;
        for len in (1..=rest.len().min(lambda.len())).rev() {
            let r = monoid.left_divides(&rest.prefix(len), &lambda)?;
            if let Some(q) = r.quotients.into_iter().next() {
                found = Some((len, q));
                break;
            }
        }
        let (len, q) = found.ok_or_else(|| Error::NotFundamental {
            atom: Some(monoid.format_word(&rest.prefix(1))),
            reason: "a letter does not divide Λ".into(),
        })?;
        blocks.push(q);
        rest = rest.suffix_from(len);
    }
    // (b1⋯br)⁻¹ = br⁻¹⋯b1⁻¹ = qr⋯q1·Λ^{-r}, Λ being central
    let q = blocks
        .iter()
        .rev()
        .fold(Word::empty(), |acc, b| acc.concat(b));
    Ok((blocks.len(), q))
}

/// Exponent and positive word for the free reduction of `w`, clearing each
/// maximal run of inverse letters as one block.
fn lift_blocks(
    monoid: &Monoid,
    cert: &FundamentalCertificate,
    w: &SignedWord,
) -> Result<(usize, Word)> {
    let p = monoid.presentation();
    let reduced = free_reduce(w);
    let mut k = 0;
    let mut positive = Word::empty();
    let mut run: Vec<Letter> = Vec::new();
    let entries = reduced
        .entries
        .iter()
        .map(Some)
        .chain(std::iter::once(None));
    for entry in entries {
        if let Some(&(l, _)) = entry {
            if l.index() >= p.alphabet_len() {
                return Err(Error::LetterOutOfRange(l.0));
            }
        }
        match entry {
            Some(&(l, Sign::Neg)) => run.push(l),
            _ => {
                if !run.is_empty() {
                    // the run g1⁻¹⋯gr⁻¹ is the inverse of gr⋯g1
                    let block: Word = run.drain(..).rev().collect();
                    let (j, q) = run_complement(monoid, cert, &block)?;
                    k += j;
                    positive = positive.concat(&q);
                }
                if let Some(&(l, Sign::Pos)) = entry {
                    positive.push(l);
                }
            }
        }
    }
    Ok((k, positive))
}

/// Lifts `w` to a positive word with the exponent chosen per inverse run.
pub fn positive_lift(
    monoid: &Monoid,
    cert: &FundamentalCertificate,
    w: &SignedWord,
) -> Result<LiftResult> {
    let (k, positive) = lift_blocks(monoid, cert, w)?;
    Ok(LiftResult { k, positive })
}

/// Positive word equal to `Λ^k · w`. `k` must be at least the exponent
/// `positive_lift` picks for `w`.
pub fn lift_with_exponent(
    monoid: &Monoid,
    cert: &FundamentalCertificate,
    w: &SignedWord,
    k: usize,
) -> Result<LiftResult> {
    let (needed, lifted) = lift_blocks(monoid, cert, w)?;
    if k < needed {
        return Err(Error::InvalidParameter(format!(
            "exponent {k} is below the {needed} needed to clear the inverses"
        )));
    }
    let positive = cert.lambda().pow(k - needed).concat(&lifted);
    Ok(LiftResult { k, positive })
}

/// Why the monoid is taken to embed in its group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Injectivity {
    /// Cancellativity is a theorem for this family of presentations.
    Proven,
    /// No cancellation failure up to this word length.
    Empirical {
        bound: usize,
    },
    /// Taken on trust; a `false` verdict is only as good as the assumption.
    Assumed,
    Unknown,
}

impl Injectivity {
    pub fn is_established(self) -> bool {
        !matches!(self, Injectivity::Unknown)
    }
}

/// Searches for cancellation failures up to `bound` and reports
/// `Empirical` when none is found.
pub fn empirical_injectivity(monoid: &Monoid, bound: usize) -> Result<Injectivity> {
    Ok(if search_failures(monoid, bound)?.is_empty() {
        Injectivity::Empirical { bound }
    } else {
        Injectivity::Unknown
    })
}

/// Decides `w1 = w2` in the group.
pub fn group_equal(
    monoid: &Monoid,
    cert: &FundamentalCertificate,
    injectivity: Injectivity,
    w1: &SignedWord,
    w2: &SignedWord,
) -> Result<bool> {
    group_equal_padded(monoid, cert, injectivity, w1, w2, 0)
}

/// As `group_equal`, with both lifts multiplied by `extra` more factors of
/// `Λ`. The verdict does not depend on `extra`.
pub fn group_equal_padded(
    monoid: &Monoid,
    cert: &FundamentalCertificate,
    injectivity: Injectivity,
    w1: &SignedWord,
    w2: &SignedWord,
    extra: usize,
) -> Result<bool> {
    if !injectivity.is_established() {
        return Err(Error::InjectivityNotEstablished);
    }
    let (k1, l1) = lift_blocks(monoid, cert, w1)?;
    let (k2, l2) = lift_blocks(monoid, cert, w2)?;
    let k = k1.max(k2) + extra;
    let lambda = cert.lambda();
    let a = lambda.pow(k - k1).concat(&l1);
    let b = lambda.pow(k - k2).concat(&l2);
    // A common literal prefix or suffix can be cancelled: equality of the
    // remainders implies equality, and the converse is the cancellativity
    // that injectivity already provides.
    let (a, b) = strip_common(&a, &b);
    monoid.equal(&a, &b)
}

fn strip_common(a: &Word, b: &Word) -> (Word, Word) {
    let (x, y) = (a.letters(), b.letters());
    let head = x.iter().zip(y).take_while(|(p, q)| p == q).count();
    let (x, y) = (&x[head..], &y[head..]);
    let tail = x
        .iter()
        .rev()
        .zip(y.iter().rev())
        .take_while(|(p, q)| p == q)
        .count();
    (
        Word::new(x[..x.len() - tail].to_vec()),
        Word::new(y[..y.len() - tail].to_vec()),
    )
}

/// Canonical forms of every element of length at most `max_len` that
/// commutes with each generator, shortest first. Includes `ε`.
pub fn center_scan(monoid: &Monoid, max_len: usize) -> Result<Vec<Word>> {
    let letters: Vec<Letter> = monoid.presentation().letters().collect();
    let mut out = Vec::new();
    for n in 0..=max_len {
        let layer = monoid.layer(n)?;
        let next = monoid.layer(n + 1)?;
        for id in layer.ids() {
            let c = layer.canonical(id);
            let central = letters.iter().all(|&g| {
                let g = Word::new(vec![g]);
                next.class_id(&c.concat(&g)) == next.class_id(&g.concat(c))
            });
            if central {
                out.push(c.clone());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::verify_fundamental;
    use crate::gmn::build_gmn;

    fn setup() -> (crate::gmn::GmnContext, Monoid, FundamentalCertificate) {
        let g = build_gmn(2, 2).unwrap();
        let m = g.monoid().unwrap();
        let cert = verify_fundamental(&m, &g.delta).unwrap();
        (g, m, cert)
    }

    fn sw(m: &Monoid, s: &str) -> SignedWord {
        SignedWord::parse(m.presentation(), s).unwrap()
    }

    #[test]
    fn free_reduction() {
        let (_, m, _) = setup();
        assert!(free_reduce(&sw(&m, "t1.t1~")).is_empty());
        assert_eq!(free_reduce(&sw(&m, "t1.u1.u1~.t2")), sw(&m, "t1.t2"));
        let w = sw(&m, "t1.u1~.s");
        assert_eq!(free_reduce(&w), w);
        assert!(free_reduce(&w.concat(&w.inverse())).is_empty());
    }

    #[test]
    fn signed_word_syntax() {
        let p = Presentation::free(["a", "b"]).unwrap();
        let w = SignedWord::parse(&p, "ab~a").unwrap();
        assert_eq!(
            w.entries,
            vec![
                (Letter(0), Sign::Pos),
                (Letter(1), Sign::Neg),
                (Letter(0), Sign::Pos)
            ]
        );
        assert_eq!(w.format(&p), "a.b~.a");
        assert_eq!(SignedWord::parse(&p, "a.b~.a").unwrap(), w);
        assert!(SignedWord::parse(&p, "c").is_err());
    }

    #[test]
    fn lifting() {
        let (_, m, cert) = setup();
        let w = m.parse_word("t1.s.u2").unwrap();
        let r = positive_lift(&m, &cert, &SignedWord::positive(&w)).unwrap();
        assert_eq!(r, LiftResult { k: 0, positive: w });

        let r = positive_lift(&m, &cert, &sw(&m, "s~")).unwrap();
        assert_eq!(r.k, 1);
        assert!(m
            .equal(&r.positive, &m.parse_word("t1.t2.u1.u2").unwrap())
            .unwrap());

        // t1⁻¹·u1⁻¹ is cleared as one block: u1·t1 divides Δ
        let r = positive_lift(&m, &cert, &sw(&m, "t1.u1.t1~.u1~")).unwrap();
        assert_eq!(r.k, 1);
        assert!(m.equal(&r.positive, &cert.delta).unwrap());

        // a run longer than Δ needs two blocks
        let r = positive_lift(&m, &cert, &sw(&m, "u2~.u1~.t2~.t1~.s~.t1~")).unwrap();
        assert_eq!(r.k, 2);
        let w = m.parse_word("t1.s.t1.t2.u1.u2").unwrap();
        assert!(m.equal(&w.concat(&r.positive), &cert.delta.pow(2)).unwrap());

        let r = lift_with_exponent(&m, &cert, &sw(&m, "s~"), 2).unwrap();
        assert!(m
            .equal(
                &r.positive,
                &m.parse_word("s.t1.t2.u1.u2.t1.t2.u1.u2").unwrap()
            )
            .unwrap());
        assert!(lift_with_exponent(&m, &cert, &sw(&m, "s~"), 0).is_err());
    }

    #[test]
    fn group_equalities() {
        let (_, m, cert) = setup();
        let e = SignedWord::default();
        let inj = Injectivity::Proven;
        assert!(group_equal(&m, &cert, inj, &sw(&m, "t1.u1.t1~.u1~"), &e).unwrap());
        assert!(!group_equal(&m, &cert, inj, &sw(&m, "t1.t2.t1~.t2~"), &e).unwrap());
        let w = sw(&m, "s.u2~.t1");
        assert!(group_equal(&m, &cert, inj, &w, &w).unwrap());
        assert!(matches!(
            group_equal(&m, &cert, Injectivity::Unknown, &w, &w),
            Err(Error::InjectivityNotEstablished)
        ));
    }

    #[test]
    fn conjugation_by_delta_is_trivial() {
        let (g, m, cert) = setup();
        let d = SignedWord::positive(&g.delta);
        for l in g.presentation.letters() {
            let x = SignedWord::new(vec![(l, Sign::Pos)]);
            let w = d.concat(&x).concat(&d.inverse()).concat(&x.inverse());
            assert!(
                group_equal(&m, &cert, Injectivity::Proven, &w, &SignedWord::default()).unwrap()
            );
        }
    }

    #[test]
    fn common_ends_are_stripped() {
        let a = Word::from_indices(&[0, 1, 2, 3]);
        let b = Word::from_indices(&[0, 2, 1, 3]);
        assert_eq!(
            strip_common(&a, &b),
            (Word::from_indices(&[1, 2]), Word::from_indices(&[2, 1]))
        );
        assert_eq!(strip_common(&a, &a), (Word::empty(), Word::empty()));
    }

    #[test]
    fn center_of_g22() {
        let (g, m, _) = setup();
        let center = center_scan(&m, 5).unwrap();
        assert_eq!(center, vec![Word::empty(), m.canonical(&g.delta).unwrap()]);
    }

    #[test]
    fn center_of_free_monoid() {
        let m = Monoid::new(Presentation::free(["a", "b"]).unwrap()).unwrap();
        assert_eq!(center_scan(&m, 3).unwrap(), vec![Word::empty()]);
    }
}
