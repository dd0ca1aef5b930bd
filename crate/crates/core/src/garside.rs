//! Atoms, fundamental elements and Garside elements.
//!
//! A fundamental element `Δ` admits, for every atom `s`, a quotient `Δ_s`
//! with `Δ = s·Δ_s = Δ_s·σ(s)` where `σ` permutes the atoms. A Garside
//! element is one whose left and right divisor sets coincide and generate
//! the monoid. For cancellative monoids the two notions agree.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::presentation::{Letter, Word};
use crate::rewrite::Monoid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalCertificate {
    pub delta: Word,
    /// Permutation of the atoms, keyed by atom representative.
    pub sigma: BTreeMap<Letter, Letter>,
    /// `Δ_s` for every atom `s`, in canonical form.
    pub quotients: BTreeMap<Letter, Word>,
    /// Order of `sigma`.
    pub order: usize,
    /// Number of distinct valid permutations. Greater than one only when
    /// the monoid is not cancellative.
    pub sigma_count: usize,
}

impl FundamentalCertificate {
    /// `Δ^order`, which is central.
    pub fn lambda(&self) -> Word {
        self.delta.pow(self.order)
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().all(|(a, b)| a == b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GarsideReport {
    pub left_divisors: BTreeSet<Word>,
    pub right_divisors: BTreeSet<Word>,
    pub coincide: bool,
    pub generate: bool,
    pub is_garside: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub fundamental: bool,
    pub garside: bool,
    pub consistent: bool,
}

/// One representative letter per atom. In a homogeneous presentation every
/// letter is an atom; letters equated by single-letter relations share a
/// class and are represented by the first of them.
pub fn atoms(monoid: &Monoid) -> Result<Vec<Letter>> {
    let mut reps = BTreeSet::new();
    for l in monoid.presentation().letters() {
        let c = monoid.canonical(&Word::new(vec![l]))?;
        reps.insert(c.letters()[0]);
    }
    Ok(reps.into_iter().collect())
}

/// Representative atom of a single letter.
pub fn atom_of(monoid: &Monoid, l: Letter) -> Result<Letter> {
    Ok(monoid.canonical(&Word::new(vec![l]))?.letters()[0])
}

fn order_of(sigma: &BTreeMap<Letter, Letter>) -> usize {
    let mut seen = BTreeSet::new();
    let mut order = 1usize;
    for &start in sigma.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        loop {
            seen.insert(cur);
            cur = sigma[&cur];
            len += 1;
            if cur == start {
                break;
            }
        }
        order = lcm(order, len);
    }
    order
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Checks whether `delta` is a fundamental element and returns a
/// certificate. Fails with `NotFundamental` naming the first failing atom.
pub fn verify_fundamental(monoid: &Monoid, delta: &Word) -> Result<FundamentalCertificate> {
    if delta.is_empty() {
        return Err(Error::NotFundamental {
            atom: None,
            reason: "the empty word is never fundamental".into(),
        });
    }
    let p = monoid.presentation();
    let atoms = atoms(monoid)?;
    let class = monoid.class(delta)?;

    // candidates[i] = (target atom, quotient) pairs for atoms[i]
    let mut candidates: Vec<Vec<(Letter, Word)>> = Vec::with_capacity(atoms.len());
    for &s in &atoms {
        let head = Word::new(vec![s]);
        let division = monoid.left_divides(&head, delta)?;
        if !division.divides {
            return Err(Error::NotFundamental {
                atom: Some(p.name(s).to_string()),
                reason: format!("{} does not left-divide Δ", p.name(s)),
            });
        }
        let mut options = Vec::new();
        for q in &division.quotients {
            for &x in &atoms {
                let candidate = q.concat(&Word::new(vec![x]));
                if class.contains(&candidate) {
                    options.push((x, q.clone()));
                }
            }
        }
        if options.is_empty() {
            return Err(Error::NotFundamental {
                atom: Some(p.name(s).to_string()),
                reason: format!(
                    "no quotient Δ_{} is followed by an atom to give Δ",
                    p.name(s)
                ),
            });
        }
        candidates.push(options);
    }

    let index: BTreeMap<Letter, usize> = atoms.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let targets: Vec<Vec<usize>> = candidates
        .iter()
        .map(|opts| {
            opts.iter()
                .map(|(x, _)| index[x])
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect()
        })
        .collect();

    let mut assignment = vec![usize::MAX; atoms.len()];
    let mut first: Option<Vec<usize>> = None;
    let mut used = vec![false; atoms.len()];
    let count = count_matchings(&targets, 0, &mut used, &mut assignment, &mut first);
    let Some(chosen) = first else {
        return Err(Error::NotFundamental {
            atom: None,
            reason: "candidate targets admit no permutation of the atoms".into(),
        });
    };

    let mut sigma = BTreeMap::new();
    let mut quotients = BTreeMap::new();
    for (i, &s) in atoms.iter().enumerate() {
        let x = atoms[chosen[i]];
        let q = candidates[i]
            .iter()
            .find(|(y, _)| *y == x)
            .map(|(_, q)| q.clone())
            .expect("chosen from candidates");
        sigma.insert(s, x);
        quotients.insert(s, q);
    }
    let order = order_of(&sigma);
    Ok(FundamentalCertificate {
        delta: delta.clone(),
        sigma,
        quotients,
        order,
        sigma_count: count,
    })
}

/// Counts perfect matchings of rows to distinct columns, remembering the
/// first one found.
fn count_matchings(
    targets: &[Vec<usize>],
    row: usize,
    used: &mut [bool],
    assignment: &mut [usize],
    first: &mut Option<Vec<usize>>,
) -> usize {
    if row == targets.len() {
        if first.is_none() {
            *first = Some(assignment.to_vec());
        }
        return 1;
    }
    let mut total = 0;
    for &col in &targets[row] {
        if used[col] {
            continue;
        }
        used[col] = true;
        assignment[row] = col;
        total += count_matchings(targets, row + 1, used, assignment, first);
        used[col] = false;
    }
    total
}

pub fn is_fundamental(monoid: &Monoid, delta: &Word) -> Result<bool> {
    match verify_fundamental(monoid, delta) {
        Ok(_) => Ok(true),
        Err(Error::NotFundamental { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Divisor sets of `delta` and the Garside conditions.
pub fn verify_garside(monoid: &Monoid, delta: &Word) -> Result<GarsideReport> {
    let class = monoid.class(delta)?;
    let mut left_divisors = BTreeSet::new();
    let mut right_divisors = BTreeSet::new();
    for m in class.iter() {
        for k in 0..=m.len() {
            left_divisors.insert(monoid.canonical(&m.prefix(k))?);
            right_divisors.insert(monoid.canonical(&m.suffix_from(k))?);
        }
    }
    let coincide = left_divisors == right_divisors;
    let mut generate = true;
    for a in atoms(monoid)? {
        let w = Word::new(vec![a]);
        if !left_divisors.contains(&w) && !right_divisors.contains(&w) {
            generate = false;
            break;
        }
    }
    Ok(GarsideReport {
        left_divisors,
        right_divisors,
        coincide,
        generate,
        is_garside: coincide && generate,
    })
}

/// Evaluates both notions on `delta`. They must agree when the monoid is
/// cancellative.
pub fn cross_check(monoid: &Monoid, delta: &Word) -> Result<CrossCheck> {
    let fundamental = is_fundamental(monoid, delta)?;
    let garside = verify_garside(monoid, delta)?.is_garside;
    Ok(CrossCheck {
        fundamental,
        garside,
        consistent: fundamental == garside,
    })
}
