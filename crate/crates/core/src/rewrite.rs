//! Equivalence classes of positive words and the monoid word problem.
//!
//! Two words are equal in the monoid when one can be turned into the other
//! by a chain of single relation substitutions. For homogeneous
//! presentations every class is finite, so the word problem is decided by
//! enumerating the class of one side.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::presentation::{Letter, Presentation, Word};

pub const DEFAULT_CAP: usize = 1_000_000;

/// The set of words equivalent to `seed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivClass {
    /// Sorted in alphabet order; `members[0]` is the canonical word.
    pub members: Arc<[Word]>,
    pub canonical: Word,
    pub seed: Word,
    /// Set when the enumeration stopped at the cap.
    pub truncated: bool,
}

impl EquivClass {
    fn complete(members: Arc<[Word]>, seed: Word) -> Self {
        EquivClass {
            canonical: members[0].clone(),
            members,
            seed,
            truncated: false,
        }
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.binary_search(w).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.members.iter()
    }
}

/// All words reachable from `w` by one substitution, in either direction.
pub fn neighbors(w: &Word, p: &Presentation) -> BTreeSet<Word> {
    let table = p.substitution_table();
    let mut out = BTreeSet::new();
    let letters = w.letters();
    for (side, replacements) in &table {
        let side = side.letters();
        if side.len() > letters.len() {
            continue;
        }
        for i in 0..=letters.len() - side.len() {
            if &letters[i..i + side.len()] == side {
                for r in replacements {
                    out.insert(splice(letters, i, side.len(), r.letters()));
                }
            }
        }
    }
    out
}

fn splice(letters: &[Letter], at: usize, len: usize, with: &[Letter]) -> Word {
    let mut v = Vec::with_capacity(letters.len() - len + with.len());
    v.extend_from_slice(&letters[..at]);
    v.extend_from_slice(with);
    v.extend_from_slice(&letters[at + len..]);
    Word::new(v)
}

/// Every word of one length, partitioned into classes.
#[derive(Debug)]
pub struct Layer {
    length: usize,
    classes: Vec<Arc<[Word]>>,
    class_of: HashMap<Word, usize>,
}

impl Layer {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class members, sorted; the first one is canonical.
    pub fn members(&self, id: usize) -> &[Word] {
        &self.classes[id]
    }

    pub fn canonical(&self, id: usize) -> &Word {
        &self.classes[id][0]
    }

    /// Class id of a word of this layer's length.
    pub fn class_id(&self, w: &Word) -> usize {
        self.class_of[w]
    }

    pub fn ids(&self) -> std::ops::Range<usize> {
        0..self.classes.len()
    }
}

/// A homogeneous presentation together with its rewriting index, the
/// enumeration cap and a memo of computed classes.
///
/// All queries take `&self` and may be issued from several threads.
#[derive(Debug)]
pub struct Monoid {
    presentation: Presentation,
    cap: usize,
    rules: HashMap<Vec<Letter>, Vec<Word>>,
    side_lengths: Vec<usize>,
    memo: RwLock<HashMap<Word, Arc<[Word]>>>,
    layers: RwLock<HashMap<usize, Arc<Layer>>>,
}

impl Monoid {
    pub fn new(presentation: Presentation) -> Result<Self> {
        Self::with_cap(presentation, DEFAULT_CAP)
    }

    pub fn with_cap(presentation: Presentation, cap: usize) -> Result<Self> {
        if !presentation.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
        if cap == 0 {
            return Err(Error::InvalidParameter("cap must be positive".into()));
        }
        let rules: HashMap<Vec<Letter>, Vec<Word>> = presentation
            .substitution_table()
            .into_iter()
            .map(|(k, v)| (k.letters().to_vec(), v))
            .collect();
        let side_lengths: BTreeSet<usize> = rules.keys().map(Vec::len).collect();
        Ok(Monoid {
            presentation,
            cap,
            rules,
            side_lengths: side_lengths.into_iter().collect(),
            memo: RwLock::new(HashMap::new()),
            layers: RwLock::new(HashMap::new()),
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.presentation.parse_word(text)
    }

    pub fn format_word(&self, w: &Word) -> String {
        self.presentation.format_word(w)
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        match w
            .letters()
            .iter()
            .find(|l| l.index() >= self.presentation.alphabet_len())
        {
            Some(l) => Err(Error::LetterOutOfRange(l.0)),
            None => Ok(()),
        }
    }

    fn for_each_neighbor(&self, w: &Word, mut f: impl FnMut(Word)) {
        let letters = w.letters();
        for &len in &self.side_lengths {
            if len > letters.len() {
                break;
            }
            for i in 0..=letters.len() - len {
                if let Some(reps) = self.rules.get(&letters[i..i + len]) {
                    for r in reps {
                        f(splice(letters, i, len, r.letters()));
                    }
                }
            }
        }
    }

    /// One-step neighbours using the prebuilt index.
    pub fn neighbors(&self, w: &Word) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        self.for_each_neighbor(w, |n| {
            out.insert(n);
        });
        out
    }

    fn closure(&self, seed: &Word) -> Result<Arc<[Word]>> {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(seed.clone());
        queue.push_back(seed.clone());
        let mut overflow = false;
        while let Some(cur) = queue.pop_front() {
            self.for_each_neighbor(&cur, |n| {
                if overflow || seen.contains(&n) {
                    return;
                }
                if seen.len() >= self.cap {
                    overflow = true;
                    return;
                }
                seen.insert(n.clone());
                queue.push_back(n);
            });
            if overflow {
                let mut members: Vec<Word> = seen.into_iter().collect();
                members.sort_unstable();
                let partial = EquivClass {
                    canonical: members[0].clone(),
                    members: members.into(),
                    seed: seed.clone(),
                    truncated: true,
                };
                return Err(Error::CapExceeded {
                    cap: self.cap,
                    context: format!(
                        "enumerating the class of {}",
                        self.presentation.format_word(seed)
                    ),
                    partial: Some(Box::new(partial)),
                });
            }
        }
        let mut members: Vec<Word> = seen.into_iter().collect();
        members.sort_unstable();
        Ok(members.into())
    }

    fn members_of(&self, w: &Word) -> Result<Arc<[Word]>> {
        if let Some(layer) = self.layers.read().get(&w.len()) {
            let id = layer.class_id(w);
            return Ok(layer.classes[id].clone());
        }
        if let Some(m) = self.memo.read().get(w) {
            return Ok(m.clone());
        }
        let members = self.closure(w)?;
        let mut memo = self.memo.write();
        for m in members.iter() {
            memo.entry(m.clone()).or_insert_with(|| members.clone());
        }
        Ok(members)
    }

    /// The full equivalence class of `w`. Fails with `CapExceeded`, carrying
    /// the partial class, when the class has more than `cap` members.
    pub fn class(&self, w: &Word) -> Result<EquivClass> {
        self.check_word(w)?;
        Ok(EquivClass::complete(self.members_of(w)?, w.clone()))
    }

    /// Decides `u = v` in the monoid.
    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        self.check_word(u)?;
        self.check_word(v)?;
        if u == v {
            return Ok(true);
        }
        if u.len() != v.len() {
            return Ok(false);
        }
        if self.presentation.is_letter_balanced() {
            let n = self.presentation.alphabet_len();
            if u.multiset(n) != v.multiset(n) {
                return Ok(false);
            }
        }
        Ok(self.members_of(u)?.binary_search(v).is_ok())
    }

    /// Least member of the class of `w` in alphabet order.
    pub fn canonical(&self, w: &Word) -> Result<Word> {
        self.check_word(w)?;
        Ok(self.members_of(w)?[0].clone())
    }

    /// Partition of all words of length `n` into classes. Cached.
    pub fn layer(&self, n: usize) -> Result<Arc<Layer>> {
        if let Some(layer) = self.layers.read().get(&n) {
            return Ok(layer.clone());
        }
        let sigma = self.presentation.alphabet_len();
        let total = (sigma as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if total > self.cap as u128 {
            return Err(Error::cap(
                self.cap,
                format!("enumerating all {total} words of length {n}"),
            ));
        }
        let mut classes: Vec<Arc<[Word]>> = Vec::new();
        let mut class_of: HashMap<Word, usize> = HashMap::with_capacity(total as usize);
        for w in all_words(sigma, n) {
            if class_of.contains_key(&w) {
                continue;
            }
            let members = match self.memo.read().get(&w) {
                Some(m) => m.clone(),
                None => self.closure(&w)?,
            };
            let id = classes.len();
            for m in members.iter() {
                class_of.insert(m.clone(), id);
            }
            classes.push(members);
        }
        let layer = Arc::new(Layer {
            length: n,
            classes,
            class_of,
        });
        self.layers
            .write()
            .entry(n)
            .or_insert_with(|| layer.clone());
        Ok(layer)
    }

    /// Canonical forms of every element of length at most `max_len`,
    /// shortest first.
    pub fn elements_up_to(&self, max_len: usize) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        for n in 0..=max_len {
            let layer = self.layer(n)?;
            out.extend(layer.ids().map(|id| layer.canonical(id).clone()));
        }
        Ok(out)
    }
}

/// All words of length `n` over `sigma` letters, in lexicographic order.
pub fn all_words(sigma: usize, n: usize) -> impl Iterator<Item = Word> {
    let mut current: Option<Vec<Letter>> = if sigma == 0 && n > 0 {
        None
    } else {
        Some(vec![Letter(0); n])
    };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let next = current.as_mut().unwrap();
        let mut i = n;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i].index() + 1 < sigma {
                next[i] = Letter(next[i].0 + 1);
                for l in &mut next[i + 1..] {
                    *l = Letter(0);
                }
                break;
            }
        }
        Some(Word::new(out))
    })
}
