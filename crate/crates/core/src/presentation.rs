//! Positive presentations: alphabets, words, relations and the text format.
//!
//! A presentation file is line oriented:
//!
//! ```text
//! # comment
//! generators: s t1 t2
//! cyclic: s t1 t2
//! relation: t1.t2 = t2.t1
//! ```
//!
//! Words are dot-separated generator names. When every generator name is a
//! single character, bare concatenation (`abf`) is accepted as well.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Index of a generator in its alphabet. The derived order is the
/// declaration order, which is the letter order used for canonical forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A positive word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn from_indices(indices: &[u16]) -> Self {
        Word(indices.iter().map(|&i| Letter(i)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        Word(self.0[start..].to_vec())
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.0.contains(&letter)
    }

    /// Occurrence count of every letter, indexed by letter.
    pub fn multiset(&self, alphabet_len: usize) -> Vec<u32> {
        let mut counts = vec![0u32; alphabet_len];
        for l in &self.0 {
            counts[l.index()] += 1;
        }
        counts
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// An unordered pair of positive words. Stored with `lhs <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(a: Word, b: Word) -> Self {
        if a <= b {
            Relation { lhs: a, rhs: b }
        } else {
            Relation { lhs: b, rhs: a }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn is_length_preserving(&self) -> bool {
        self.lhs.len() == self.rhs.len()
    }
}

/// Homogeneity, letter balance and dummy generators of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub homogeneous: bool,
    pub letter_balanced: bool,
    pub dummy_letters: BTreeSet<Letter>,
}

pub fn classify(alphabet_len: usize, relations: &[Relation]) -> Classification {
    let homogeneous = relations.iter().all(Relation::is_length_preserving);
    let letter_balanced = relations
        .iter()
        .all(|r| r.lhs.multiset(alphabet_len) == r.rhs.multiset(alphabet_len));
    let mut dummy_letters = BTreeSet::new();
    for r in relations {
        for (single, other) in [(&r.lhs, &r.rhs), (&r.rhs, &r.lhs)] {
            if single.len() == 1 {
                let g = single.letters()[0];
                if !other.contains(g) {
                    dummy_letters.insert(g);
                }
            }
        }
    }
    Classification {
        homogeneous,
        letter_balanced,
        dummy_letters,
    }
}

/// The `k - 1` relations equating every cyclic rotation of `letters` with
/// the unrotated product.
pub fn expand_cyclic(letters: &[Letter]) -> Result<Vec<Relation>> {
    let k = letters.len();
    if k < 2 {
        return Err(Error::CyclicTooShort(k));
    }
    let base = Word::new(letters.to_vec());
    Ok((1..k)
        .map(|j| {
            let mut rot = letters[j..].to_vec();
            rot.extend_from_slice(&letters[..j]);
            Relation::new(base.clone(), Word::new(rot))
        })
        .collect())
}

/// A finite positive presentation. Immutable once built.
#[derive(Clone, Debug)]
pub struct Presentation {
    alphabet: Vec<String>,
    index: HashMap<String, Letter>,
    relations: Vec<Relation>,
    classification: Classification,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.relation_set() == other.relation_set()
    }
}

impl Eq for Presentation {}

impl Presentation {
    /// Builds a presentation. Trivial relations are dropped and duplicates
    /// merged; insertion order is otherwise kept.
    pub fn new<S: Into<String>>(
        alphabet: impl IntoIterator<Item = S>,
        relations: impl IntoIterator<Item = Relation>,
    ) -> Result<Self> {
        let alphabet: Vec<String> = alphabet.into_iter().map(Into::into).collect();
        if alphabet.len() > u16::MAX as usize {
            return Err(Error::InvalidParameter("alphabet too large".into()));
        }
        let mut index = HashMap::new();
        for (i, name) in alphabet.iter().enumerate() {
            if !is_valid_token(name) {
                return Err(Error::InvalidParameter(format!(
                    "invalid generator name `{name}`"
                )));
            }
            if index.insert(name.clone(), Letter(i as u16)).is_some() {
                return Err(Error::InvalidParameter(format!(
                    "duplicate generator `{name}`"
                )));
            }
        }
        let mut seen = BTreeSet::new();
        let mut rels = Vec::new();
        for r in relations {
            for w in [&r.lhs, &r.rhs] {
                if let Some(&l) = w.letters().iter().find(|l| l.index() >= alphabet.len()) {
                    return Err(Error::LetterOutOfRange(l.0));
                }
                if w.is_empty() {
                    return Err(Error::EmptyRelationSide { line: 0 });
                }
            }
            if r.is_trivial() || !seen.insert(r.clone()) {
                continue;
            }
            rels.push(r);
        }
        let classification = classify(alphabet.len(), &rels);
        Ok(Presentation {
            alphabet,
            index,
            relations: rels,
            classification,
        })
    }

    /// A free monoid: generators only, no relations.
    pub fn free<S: Into<String>>(alphabet: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(alphabet, std::iter::empty())
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn alphabet_len(&self) -> usize {
        self.alphabet.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.alphabet.len()).map(|i| Letter(i as u16))
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation_set(&self) -> BTreeSet<&Relation> {
        self.relations.iter().collect()
    }

    pub fn classification(&self) -> &Classification {
        &self.classification
    }

    pub fn is_homogeneous(&self) -> bool {
        self.classification.homogeneous
    }

    pub fn is_letter_balanced(&self) -> bool {
        self.classification.letter_balanced
    }

    pub fn dummy_letters(&self) -> &BTreeSet<Letter> {
        &self.classification.dummy_letters
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.alphabet[letter.index()]
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        w.letters().iter().all(|l| l.index() < self.alphabet.len())
    }

    /// True when every generator name is one character, which enables the
    /// bare concatenation word syntax.
    pub fn single_char_names(&self) -> bool {
        self.alphabet.iter().all(|n| n.chars().count() == 1)
    }

    /// Returns a copy with `u = v` appended.
    pub fn with_relation(&self, u: Word, v: Word) -> Result<Self> {
        let mut rels = self.relations.clone();
        rels.push(Relation::new(u, v));
        Self::new(self.alphabet.clone(), rels)
    }

    /// Parses a word. Accepts `ε` or the empty string for the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.parse_word_at(text.trim(), 0)
    }

    fn parse_word_at(&self, text: &str, line: usize) -> Result<Word> {
        if text.is_empty() || text == "ε" {
            return Ok(Word::empty());
        }
        let tokens: Vec<&str> = if text.contains('.') {
            text.split('.').collect()
        } else if self.letter(text).is_some() {
            vec![text]
        } else if self.single_char_names() {
            text.char_indices()
                .map(|(i, c)| &text[i..i + c.len_utf8()])
                .collect()
        } else {
            vec![text]
        };
        tokens
            .into_iter()
            .map(|t| {
                self.letter(t).ok_or_else(|| Error::UnknownLetter {
                    name: t.to_string(),
                    line,
                })
            })
            .collect()
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        let sep = if self.single_char_names() { "" } else { "." };
        w.letters()
            .iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn word_tokens(&self, w: &Word) -> Vec<String> {
        w.letters()
            .iter()
            .map(|&l| self.name(l).to_string())
            .collect()
    }

    /// Parses the line-oriented presentation format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet: Option<Vec<String>> = None;
        let mut pending: Vec<(usize, Line<'_>)> = Vec::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let col = raw.len() - raw.trim_start().len() + 1;
            let (key, rest) = trimmed.split_once(':').ok_or_else(|| Error::Syntax {
                line,
                column: col,
                message: "expected `key: value`".into(),
            })?;
            let rest_col = col + key.len() + 1;
            match key.trim() {
                "generators" => {
                    if alphabet.is_some() {
                        return Err(Error::Syntax {
                            line,
                            column: col,
                            message: "`generators:` given more than once".into(),
                        });
                    }
                    if !pending.is_empty() {
                        return Err(Error::Syntax {
                            line,
                            column: col,
                            message: "`generators:` must come first".into(),
                        });
                    }
                    let mut names = Vec::new();
                    for tok in rest.split_whitespace() {
                        if !is_valid_token(tok) {
                            return Err(Error::Syntax {
                                line,
                                column: rest_col + rest.find(tok).unwrap_or(0),
                                message: format!("invalid generator name `{tok}`"),
                            });
                        }
                        if names.iter().any(|n| n == tok) {
                            return Err(Error::Syntax {
                                line,
                                column: rest_col + rest.find(tok).unwrap_or(0),
                                message: format!("duplicate generator `{tok}`"),
                            });
                        }
                        names.push(tok.to_string());
                    }
                    if names.is_empty() {
                        return Err(Error::Syntax {
                            line,
                            column: rest_col,
                            message: "no generators listed".into(),
                        });
                    }
                    alphabet = Some(names);
                }
                "cyclic" => {
                    if alphabet.is_none() {
                        return Err(missing_generators(line, col));
                    }
                    pending.push((line, Line::Cyclic(rest)));
                }
                "relation" => {
                    if alphabet.is_none() {
                        return Err(missing_generators(line, col));
                    }
                    pending.push((line, Line::Chain(rest, rest_col)));
                }
                other => {
                    return Err(Error::Syntax {
                        line,
                        column: col,
                        message: format!("unknown directive `{other}`"),
                    })
                }
            }
        }

        let alphabet = alphabet.ok_or_else(|| Error::Syntax {
            line: 1,
            column: 1,
            message: "missing `generators:` line".into(),
        })?;
        // Relations are resolved against a relation-free presentation so that
        // word parsing shares the same rules as the public API.
        let bare = Presentation::free(alphabet.clone())?;
        let mut relations = Vec::new();
        for (line, item) in pending {
            match item {
                Line::Cyclic(rest) => {
                    let letters = rest
                        .split_whitespace()
                        .map(|t| {
                            bare.letter(t).ok_or_else(|| Error::UnknownLetter {
                                name: t.to_string(),
                                line,
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    relations.extend(expand_cyclic(&letters)?);
                }
                Line::Chain(rest, rest_col) => {
                    let sides: Vec<&str> = rest.split('=').collect();
                    if sides.len() < 2 {
                        return Err(Error::Syntax {
                            line,
                            column: rest_col,
                            message: "relation needs at least two sides".into(),
                        });
                    }
                    let mut words = Vec::with_capacity(sides.len());
                    for side in sides {
                        let side = side.trim();
                        if side.is_empty() {
                            return Err(Error::EmptyRelationSide { line });
                        }
                        if side.split_whitespace().count() > 1 {
                            return Err(Error::Syntax {
                                line,
                                column: rest_col + rest.find(side).unwrap_or(0),
                                message: format!("whitespace inside word `{side}`"),
                            });
                        }
                        let w = bare.parse_word_at(side, line)?;
                        if w.is_empty() {
                            return Err(Error::EmptyRelationSide { line });
                        }
                        words.push(w);
                    }
                    let first = words[0].clone();
                    relations.extend(
                        words
                            .into_iter()
                            .skip(1)
                            .map(|w| Relation::new(first.clone(), w)),
                    );
                }
            }
        }
        Presentation::new(alphabet, relations)
    }

    /// Serializes to the canonical file format: one `relation:` line per pair.
    pub fn to_text(&self) -> String {
        let mut out = format!("generators: {}\n", self.alphabet.join(" "));
        for r in &self.relations {
            out.push_str(&format!(
                "relation: {} = {}\n",
                self.format_word_plain(&r.lhs),
                self.format_word_plain(&r.rhs)
            ));
        }
        out
    }

    fn format_word_plain(&self, w: &Word) -> String {
        let sep = if self.single_char_names() { "" } else { "." };
        w.letters()
            .iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Relation sides grouped by the side they can be rewritten from.
    pub(crate) fn substitution_table(&self) -> BTreeMap<Word, Vec<Word>> {
        let mut table: BTreeMap<Word, Vec<Word>> = BTreeMap::new();
        for r in &self.relations {
            table.entry(r.lhs.clone()).or_default().push(r.rhs.clone());
            table.entry(r.rhs.clone()).or_default().push(r.lhs.clone());
        }
        table
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

enum Line<'a> {
    Cyclic(&'a str),
    Chain(&'a str, usize),
}

fn missing_generators(line: usize, column: usize) -> Error {
    Error::Syntax {
        line,
        column,
        message: "`generators:` must be the first directive".into(),
    }
}

pub fn is_valid_token(tok: &str) -> bool {
    !tok.is_empty() && tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}
