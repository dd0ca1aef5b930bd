//! Left and right divisibility, quotients, and bounded common multiples.
//!
//! `u` left-divides `v` exactly when some member of the class of `v` has
//! `u` as a literal prefix: if `v = u·w` in the monoid then the literal word
//! `u·w` is itself a member of `v`'s class.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::presentation::Word;
use crate::rewrite::Monoid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub divides: bool,
    /// Canonical forms of every quotient.
    pub quotients: BTreeSet<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McmReport {
    pub bound: usize,
    pub common_multiples: BTreeSet<Word>,
    pub minimal: BTreeSet<Word>,
    /// The unique minimal element, when it left-divides every common
    /// multiple found within the bound.
    pub lcm_up_to_bound: Option<Word>,
}

impl Monoid {
    /// All `w` with `v = u·w`.
    pub fn left_divides(&self, u: &Word, v: &Word) -> Result<DivisionResult> {
        self.divides(Side::Left, u, v)
    }

    /// All `w` with `v = w·u`.
    pub fn right_divides(&self, u: &Word, v: &Word) -> Result<DivisionResult> {
        self.divides(Side::Right, u, v)
    }

    pub fn divides(&self, side: Side, u: &Word, v: &Word) -> Result<DivisionResult> {
        let mut quotients = BTreeSet::new();
        if u.len() <= v.len() {
            let class = self.class(v)?;
            for m in class.iter() {
                let (head, rest) = match side {
                    Side::Left => (m.prefix(u.len()), m.suffix_from(u.len())),
                    Side::Right => (
                        m.suffix_from(m.len() - u.len()),
                        m.prefix(m.len() - u.len()),
                    ),
                };
                if &head == u {
                    quotients.insert(self.canonical(&rest)?);
                }
            }
        }
        Ok(DivisionResult {
            divides: !quotients.is_empty(),
            quotients,
        })
    }

    fn is_left_multiple(members: &[Word], j: &Word) -> bool {
        members.iter().any(|m| m.starts_with(j))
    }

    /// Common right multiples of `set`: elements of length at most
    /// `max_len` that every member of `set` left-divides.
    pub fn common_multiples(&self, set: &[Word], max_len: usize) -> Result<BTreeSet<Word>> {
        if set.is_empty() {
            return Err(Error::InvalidParameter("empty set of words".into()));
        }
        let min_len = set.iter().map(Word::len).max().unwrap_or(0);
        let mut out = BTreeSet::new();
        for n in min_len..=max_len {
            let layer = self.layer(n)?;
            for id in layer.ids() {
                let members = layer.members(id);
                if set.iter().all(|j| Self::is_left_multiple(members, j)) {
                    out.insert(layer.canonical(id).clone());
                }
            }
        }
        Ok(out)
    }

    /// Minimal common multiples of `set` within `max_len`.
    ///
    /// Proper divisors are strictly shorter, so every common multiple within
    /// the bound has all of its divisors within the bound too and the
    /// minimal set is exact for the elements it lists.
    pub fn minimal_common_multiples(&self, set: &[Word], max_len: usize) -> Result<McmReport> {
        let common = self.common_multiples(set, max_len)?;
        let mut minimal = BTreeSet::new();
        for c in &common {
            let members = self.class(c)?;
            let mut has_proper = false;
            'members: for m in members.iter() {
                for k in 0..m.len() {
                    if common.contains(&self.canonical(&m.prefix(k))?) {
                        has_proper = true;
                        break 'members;
                    }
                }
            }
            if !has_proper {
                minimal.insert(c.clone());
            }
        }
        let lcm_up_to_bound = if minimal.len() == 1 {
            let cand = minimal.iter().next().unwrap().clone();
            let mut divides_all = true;
            for c in &common {
                if !self.left_divides(&cand, c)?.divides {
                    divides_all = false;
                    break;
                }
            }
            divides_all.then_some(cand)
        } else {
            None
        };
        Ok(McmReport {
            bound: max_len,
            common_multiples: common,
            minimal,
            lcm_up_to_bound,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmn::build_gmn;
    use crate::presentation::Presentation;

    fn g22() -> Monoid {
        Monoid::new(build_gmn(2, 2).unwrap().presentation).unwrap()
    }

    fn ws(m: &Monoid, s: &[&str]) -> Vec<Word> {
        s.iter().map(|x| m.parse_word(x).unwrap()).collect()
    }

    #[test]
    fn left_division_through_rotation() {
        let m = g22();
        let w = |s| m.parse_word(s).unwrap();
        let r = m.left_divides(&w("t1"), &w("s.t1.t2")).unwrap();
        assert!(r.divides);
        assert_eq!(r.quotients, [m.canonical(&w("t2.s")).unwrap()].into());

        let r = m.left_divides(&w("s.t1.t2"), &w("s.t1.t2")).unwrap();
        assert_eq!(r.quotients, [Word::empty()].into());

        assert!(
            !m.left_divides(&w("s.t1.t2"), &w("u1.s.t1.t2"))
                .unwrap()
                .divides
        );
    }

    #[test]
    fn right_division() {
        let m = g22();
        let w = |s| m.parse_word(s).unwrap();
        let r = m.right_divides(&w("s"), &w("s.t1.t2")).unwrap();
        assert!(r.divides);
        assert_eq!(r.quotients, [m.canonical(&w("t1.t2")).unwrap()].into());
        assert!(!m.right_divides(&w("u1.u2"), &w("u2.u1")).unwrap().divides);
        assert!(!m.right_divides(&w("s.t1"), &w("s")).unwrap().divides);
    }

    #[test]
    fn empty_word_divides_everything() {
        let m = g22();
        let v = m.parse_word("u1.s.t2").unwrap();
        for side in [Side::Left, Side::Right] {
            let r = m.divides(side, &Word::empty(), &v).unwrap();
            assert_eq!(r.quotients, [m.canonical(&v).unwrap()].into());
        }
    }

    #[test]
    fn common_multiples_small() {
        let m = g22();
        let cm = m.common_multiples(&ws(&m, &["t1", "t2"]), 3).unwrap();
        assert_eq!(
            cm,
            [m.canonical(&m.parse_word("s.t1.t2").unwrap()).unwrap()].into()
        );

        let w = m.parse_word("u2.s.t1").unwrap();
        let cm = m.common_multiples(std::slice::from_ref(&w), 3).unwrap();
        assert_eq!(cm, [m.canonical(&w).unwrap()].into());

        let cm = m.common_multiples(&ws(&m, &["t1", "u1"]), 2).unwrap();
        assert!(cm.contains(&m.canonical(&m.parse_word("u1.t1").unwrap()).unwrap()));
        assert!(m.common_multiples(&[], 2).is_err());
    }

    #[test]
    fn singleton_lcm() {
        let m = g22();
        let w = m.parse_word("t2.u1.s").unwrap();
        let r = m
            .minimal_common_multiples(std::slice::from_ref(&w), 3)
            .unwrap();
        assert_eq!(r.lcm_up_to_bound, Some(m.canonical(&w).unwrap()));
    }

    #[test]
    fn free_monoid_prefix_order() {
        let m = Monoid::new(Presentation::free(["a", "b"]).unwrap()).unwrap();
        let w = |s| m.parse_word(s).unwrap();
        assert!(m.left_divides(&w("a"), &w("ab")).unwrap().divides);
        assert!(!m.left_divides(&w("b"), &w("ab")).unwrap().divides);
        let r = m.minimal_common_multiples(&ws(&m, &["a", "b"]), 3).unwrap();
        assert!(r.common_multiples.is_empty());
        assert!(r.lcm_up_to_bound.is_none());
    }
}
