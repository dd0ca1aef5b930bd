//! Algebraic invariants checked on random words.

use std::ops::RangeInclusive;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use posmon_core::cancel::{add_relation, search_failures, verify_claim};
use posmon_core::fixtures::Fixture;
use posmon_core::garside::{cross_check, verify_fundamental};
use posmon_core::gmn::{build_gmn, ConsecutiveWord, Family, GmnContext};
use posmon_core::group::{group_equal, group_equal_padded, Injectivity, Sign, SignedWord};
use posmon_core::presentation::expand_cyclic;
use posmon_core::{Letter, Monoid, Presentation, Side, Word};

fn random_word(rng: &mut impl Rng, sigma: usize, len: RangeInclusive<usize>) -> Word {
    let len = rng.gen_range(len);
    (0..len)
        .map(|_| Letter(rng.gen_range(0..sigma) as u16))
        .collect()
}

/// A member of `w`'s class reached by a short random walk.
fn random_walk(m: &Monoid, rng: &mut impl Rng, w: &Word, steps: usize) -> Word {
    let mut cur = w.clone();
    for _ in 0..steps {
        let nbrs: Vec<Word> = m.neighbors(&cur).into_iter().collect();
        if nbrs.is_empty() {
            break;
        }
        cur = nbrs[rng.gen_range(0..nbrs.len())].clone();
    }
    cur
}

fn word_strategy(sigma: u16, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..sigma, 0..=max_len).prop_map(|v| Word::from_indices(&v))
}

fn g22() -> GmnContext {
    build_gmn(2, 2).unwrap()
}

#[test]
fn multiset_is_conserved_on_letter_balanced_fixtures() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut monoids: Vec<Monoid> = Fixture::ALL
        .iter()
        .map(|f| Monoid::new(f.presentation()).unwrap())
        .collect();
    monoids.push(g22().monoid().unwrap());
    for m in &monoids {
        assert!(m.presentation().is_letter_balanced());
    }
    for i in 0..1000 {
        let m = &monoids[i % monoids.len()];
        let sigma = m.presentation().alphabet_len();
        let w = random_word(&mut rng, sigma, 0..=6);
        let counts = w.multiset(sigma);
        for v in m.class(&w).unwrap().iter() {
            assert_eq!(v.multiset(sigma), counts);
        }
    }
}

#[test]
fn equivalence_relation_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for f in Fixture::ALL {
        let m = Monoid::new(f.presentation()).unwrap();
        for _ in 0..60 {
            let w = random_word(&mut rng, 6, 0..=6);
            let v = random_walk(&m, &mut rng, &w, 4);
            let z = random_walk(&m, &mut rng, &v, 4);
            let other = random_word(&mut rng, 6, w.len()..=w.len());
            assert!(m.equal(&w, &w).unwrap());
            assert!(m.equal(&w, &v).unwrap() && m.equal(&v, &w).unwrap());
            assert!(m.equal(&w, &z).unwrap());
            assert_eq!(m.equal(&w, &other).unwrap(), m.equal(&other, &w).unwrap());
            assert_eq!(
                m.equal(&w, &other).unwrap(),
                m.canonical(&w).unwrap() == m.canonical(&other).unwrap()
            );
        }
    }
}

#[test]
fn congruence() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut monoids: Vec<Monoid> = vec![Monoid::new(Fixture::M6.presentation()).unwrap()];
    monoids.push(g22().monoid().unwrap());
    for m in &monoids {
        let sigma = m.presentation().alphabet_len();
        for _ in 0..60 {
            let u = random_word(&mut rng, sigma, 0..=4);
            let v = random_walk(m, &mut rng, &u, 5);
            let a = random_word(&mut rng, sigma, 0..=2);
            let b = random_word(&mut rng, sigma, 0..=2);
            assert!(m
                .equal(&a.concat(&u).concat(&b), &a.concat(&v).concat(&b))
                .unwrap());
        }
    }
}

#[test]
fn phi_anti_isomorphism_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for (mm, nn) in [(2, 2), (3, 2)] {
        let g = build_gmn(mm, nn).unwrap();
        let m = g.monoid().unwrap();
        let sigma = 1 + mm + nn;
        for _ in 0..80 {
            let u = random_word(&mut rng, sigma, 0..=4);
            let v = random_word(&mut rng, sigma, 0..=4);
            assert_eq!(g.phi(&g.phi(&u)), u);
            assert_eq!(g.phi(&u.concat(&v)), g.phi(&v).concat(&g.phi(&u)));
            let w = random_walk(&m, &mut rng, &u, 5);
            assert!(m.equal(&g.phi(&u), &g.phi(&w)).unwrap());
            // and reflects inequality
            if u.len() == v.len() {
                assert_eq!(
                    m.equal(&u, &v).unwrap(),
                    m.equal(&g.phi(&u), &g.phi(&v)).unwrap()
                );
            }
        }
    }
}

#[test]
fn phi_permutes_each_cycle() {
    // every relation maps to two rotations of the same cyclic product
    for (mm, nn) in [(1, 1), (2, 2), (3, 2)] {
        let g = build_gmn(mm, nn).unwrap();
        let m = g.monoid().unwrap();
        for r in g.presentation.relations() {
            let (a, b) = (g.phi(&r.lhs), g.phi(&r.rhs));
            let is_rotation = (0..a.len()).any(|i| a.suffix_from(i).concat(&a.prefix(i)) == b);
            assert!(is_rotation);
            assert!(m.equal(&a, &b).unwrap());
        }
    }
}

#[test]
fn divisibility_is_transitive() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let g = g22();
    let m = g.monoid().unwrap();
    for _ in 0..60 {
        for side in [Side::Left, Side::Right] {
            let u = random_word(&mut rng, 5, 0..=2);
            let x = random_word(&mut rng, 5, 0..=2);
            let y = random_word(&mut rng, 5, 0..=2);
            let (v, w) = match side {
                Side::Left => {
                    let v = random_walk(&m, &mut rng, &u.concat(&x), 4);
                    (v.clone(), random_walk(&m, &mut rng, &v.concat(&y), 4))
                }
                Side::Right => {
                    let v = random_walk(&m, &mut rng, &x.concat(&u), 4);
                    (v.clone(), random_walk(&m, &mut rng, &y.concat(&v), 4))
                }
            };
            assert!(m.divides(side, &u, &v).unwrap().divides);
            assert!(m.divides(side, &v, &w).unwrap().divides);
            assert!(m.divides(side, &u, &w).unwrap().divides);
            assert!(m.divides(side, &Word::empty(), &w).unwrap().divides);
            assert!(m.divides(side, &w, &w).unwrap().divides);
        }
    }
    // and on unrelated triples, whenever the premises hold
    for _ in 0..300 {
        let u = random_word(&mut rng, 5, 1..=1);
        let v = random_word(&mut rng, 5, 2..=2);
        let w = random_word(&mut rng, 5, 4..=4);
        if m.left_divides(&u, &v).unwrap().divides && m.left_divides(&v, &w).unwrap().divides {
            assert!(m.left_divides(&u, &w).unwrap().divides);
        }
    }
}

#[test]
fn cyclic_rotations_are_equivalent() {
    for k in 2..=6u16 {
        let letters: Vec<Letter> = (0..k).map(Letter).collect();
        let rels = expand_cyclic(&letters).unwrap();
        assert_eq!(rels.len(), (k - 1) as usize);
        let names: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
        let m = Monoid::new(Presentation::new(names, rels).unwrap()).unwrap();
        let w = Word::new(letters.clone());
        for i in 0..k as usize {
            let rot = w.suffix_from(i).concat(&w.prefix(i));
            assert!(m.equal(&w, &rot).unwrap());
        }
    }
}

#[test]
fn presentation_text_round_trips() {
    let mut ps: Vec<Presentation> = Fixture::ALL.iter().map(|f| f.presentation()).collect();
    ps.push(g22().presentation);
    ps.push(build_gmn(3, 2).unwrap().presentation);
    for p in ps {
        assert_eq!(Presentation::parse(&p.to_text()).unwrap(), p);
    }
}

#[test]
fn delta_is_central_and_its_rotations_agree() {
    for (mm, nn) in [(1, 1), (2, 2), (3, 2)] {
        let g = build_gmn(mm, nn).unwrap();
        let m = g.monoid().unwrap();
        for l in g.presentation.letters() {
            let x = Word::new(vec![l]);
            assert!(m.equal(&g.delta.concat(&x), &x.concat(&g.delta)).unwrap());
        }
        let d = &g.delta;
        for i in 0..d.len() {
            assert!(m.equal(d, &d.suffix_from(i).concat(&d.prefix(i))).unwrap());
        }
    }
}

#[test]
fn delta_quotients_complete_each_run() {
    for (mm, nn) in [(2, 2), (3, 2)] {
        let g = build_gmn(mm, nn).unwrap();
        let m = g.monoid().unwrap();
        for family in [Family::T, Family::U] {
            let size = g.size(family);
            for start in 1..=size {
                for end in start..=size {
                    let c = ConsecutiveWord { family, start, end };
                    let w = g.consecutive_word(c);
                    assert_eq!(g.as_consecutive(&w).unwrap(), c);
                    let q = g.delta_quotient(c).unwrap();
                    assert!(m.equal(&q.concat(&w), g.family_delta(family)).unwrap());
                }
            }
            let run = g.delta_quotient_of_s(family);
            let s = Word::new(vec![g.s()]);
            assert!(m.equal(&s.concat(&run), g.family_delta(family)).unwrap());
        }
    }
}

#[test]
fn failures_are_sound_and_monotone() {
    let m = Monoid::new(Fixture::M6.presentation()).unwrap();
    let f4 = search_failures(&m, 4).unwrap();
    let f5 = search_failures(&m, 5).unwrap();
    assert!(f4.iter().all(|f| f5.contains(f)));
    for f in &f5 {
        assert!(f.verify(&m).unwrap());
        assert_eq!(f.context.len(), 1);
        assert_eq!(f.x, m.canonical(&f.x).unwrap());
        assert!(f.x < f.y);
    }
}

#[test]
fn completion_leaves_the_next_failure() {
    // adding the cancelled k-th equation does not repair the (k+1)-th family
    let mut p = Fixture::M6pCompleted.presentation();
    for k in 1..=2 {
        let w = |p: &Presentation, s: String| p.parse_word(&s).unwrap();
        let e = "e".repeat(k);
        p = add_relation(
            &p,
            &w(&p, format!("acde{e}ab")),
            &w(&p, format!("d{e}aabce")),
        )
        .unwrap();
        let m = Monoid::new(p.clone()).unwrap();
        let e1 = "e".repeat(k + 1);
        let check = verify_claim(
            &m,
            &w(&p, format!("acde{e1}abf")),
            &w(&p, format!("d{e1}aabcef")),
            &w(&p, format!("acde{e1}ab")),
            &w(&p, format!("d{e1}aabce")),
        )
        .unwrap();
        assert!(check.witnesses_failure(), "k = {k}");
    }
}

#[test]
fn cross_check_is_consistent_on_random_g22_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let g = g22();
    let m = g.monoid().unwrap();
    for w in [g.delta.clone(), Word::empty()] {
        assert!(cross_check(&m, &w).unwrap().consistent);
    }
    for _ in 0..20 {
        let w = random_word(&mut rng, 5, 1..=5);
        assert!(cross_check(&m, &w).unwrap().consistent);
    }
}

#[test]
fn center_elements_commute_with_short_words() {
    let g = g22();
    let m = g.monoid().unwrap();
    let center = posmon_core::group::center_scan(&m, 5).unwrap();
    let shorts: Vec<Word> = (0..=2)
        .flat_map(|n| posmon_core::rewrite::all_words(5, n))
        .collect();
    for c in &center {
        for w in &shorts {
            assert!(m.equal(&c.concat(w), &w.concat(c)).unwrap());
        }
    }
}

fn g22_group() -> (Monoid, posmon_core::garside::FundamentalCertificate) {
    let g = g22();
    let m = g.monoid().unwrap();
    let cert = verify_fundamental(&m, &g.delta).unwrap();
    (m, cert)
}

fn signed_strategy(max_len: usize) -> impl Strategy<Value = SignedWord> {
    prop::collection::vec((0..5u16, any::<bool>()), 0..=max_len).prop_map(|v| {
        SignedWord::new(
            v.into_iter()
                .map(|(l, neg)| {
                    let s = if neg {
                        posmon_core::group::Sign::Neg
                    } else {
                        posmon_core::group::Sign::Pos
                    };
                    (Letter(l), s)
                })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn word_text_round_trips(w in word_strategy(5, 8)) {
        let p = g22().presentation;
        prop_assert_eq!(p.parse_word(&p.format_word(&w)).unwrap(), w.clone());
        let tokens = p.word_tokens(&w);
        prop_assert_eq!(p.parse_word(&tokens.join(".")).unwrap(), w);
    }

    #[test]
    fn group_equal_extends_monoid_equal(u in word_strategy(5, 4), v in word_strategy(5, 4)) {
        let (m, cert) = g22_group();
        let expected = u.len() == v.len() && m.equal(&u, &v).unwrap();
        let got = group_equal(&m, &cert, Injectivity::Proven,
            &SignedWord::positive(&u), &SignedWord::positive(&v)).unwrap();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn group_equal_is_padding_invariant(a in signed_strategy(4), b in signed_strategy(4)) {
        let (m, cert) = g22_group();
        let base = group_equal(&m, &cert, Injectivity::Proven, &a, &b).unwrap();
        for extra in 1..=2 {
            let padded = group_equal_padded(&m, &cert, Injectivity::Proven, &a, &b, extra).unwrap();
            prop_assert_eq!(padded, base);
        }
        // w·w⁻¹ is trivial
        let trivial = group_equal(&m, &cert, Injectivity::Proven, &a.concat(&a.inverse()), &SignedWord::default()).unwrap();
        prop_assert!(trivial);
    }

    #[test]
    fn canonical_agrees_with_equal(u in word_strategy(6, 5), v in word_strategy(6, 5)) {
        let m = Monoid::new(Fixture::M6.presentation()).unwrap();
        prop_assert_eq!(
            m.equal(&u, &v).unwrap(),
            m.canonical(&u).unwrap() == m.canonical(&v).unwrap()
        );
    }
}

fn signed_over(sigma: u16, max_len: usize) -> impl Strategy<Value = SignedWord> {
    prop::collection::vec((0..sigma, any::<bool>()), 0..=max_len).prop_map(|v| {
        SignedWord::new(
            v.into_iter()
                .map(|(l, neg)| (Letter(l), if neg { Sign::Neg } else { Sign::Pos }))
                .collect(),
        )
    })
}

fn exponent_sums(w: &SignedWord) -> [i32; 3] {
    let mut sums = [0; 3];
    for &(l, s) in &w.entries {
        sums[l.index()] += if s == Sign::Pos { 1 } else { -1 };
    }
    sums
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // G(1, 1) is free abelian on s, t1, u1: words agree iff exponent sums do
    #[test]
    fn group_equal_in_free_abelian_case(a in signed_over(3, 6), b in signed_over(3, 6)) {
        let g = build_gmn(1, 1).unwrap();
        let m = g.monoid().unwrap();
        let cert = verify_fundamental(&m, &g.delta).unwrap();
        let got = group_equal(&m, &cert, Injectivity::Proven, &a, &b).unwrap();
        prop_assert_eq!(got, exponent_sums(&a) == exponent_sums(&b));
    }
}
