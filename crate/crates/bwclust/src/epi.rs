//! Episturmian languages on three letters, the Sturmian two-letter
//! specialization, and rule systems over larger alphabets with their
//! non-clustering bounds.
//!
//! An episturmian directive only needs every rule to be used at least once.
//! Whether the language keeps producing clustering words is decided by the
//! shape of the directive: a head over {a, b} followed by a tail avoiding a
//! or avoiding b supplies infinitely many, anything else only finitely
//! many.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::ar::{evolve, landmarks_relaxed, normalize, Directive, Generator};
use crate::bwt::{clusters_any, Certificate};
use crate::morphism::desubstitute;
use crate::words::{Alphabet, Word};
use crate::{Error, Result};

/// Verdict on the supply of clustering words in an episturmian language.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "supply", rename_all = "snake_case")]
pub enum Supply {
    FinitelyMany,
    InfinitelyMany {
        /// Stage at which the two-letter tail starts (the first (c) rule of
        /// the normalized directive).
        split: usize,
        /// Letters of the tail, in the caller's alphabet.
        tail: Vec<char>,
    },
}

/// Decides whether a three-letter episturmian language contains infinitely
/// many clustering words: true exactly when the directive splits into a
/// finite head over {a, b} and an infinite tail over {a, c} or {b, c}.
/// Every split can be pulled to the first (c), so only that one is tried.
pub fn clustering_supply(directive: &Directive) -> Result<Supply> {
    directive.ensure_epi()?;
    if directive.alphabet.len() != 3 {
        return Err(Error::InvalidDirective(
            "the split criterion is stated over three rule letters".into(),
        ));
    }
    let (norm, relabel) = normalize(directive)?;
    let horizon = norm.prefix.len() + 2 * norm.period.len();
    let split = (0..=horizon)
        .find(|&k| norm.rule(k) == 'c')
        .ok_or_else(|| Error::InvalidDirective("rule (c) never occurs".into()))?;
    let tail = norm.letters_from(split);
    if tail.contains(&'a') && tail.contains(&'b') {
        Ok(Supply::FinitelyMany)
    } else {
        let back = relabel.inverse();
        Ok(Supply::InfinitelyMany {
            split,
            tail: tail
                .into_iter()
                .map(|c| back.apply(c))
                .collect::<Result<_>>()?,
        })
    }
}

/// True iff the stage-`p` bispecial extended by the stage-`p` standard word
/// of `letter` stays in the language, which happens exactly when some rule
/// of that letter occurs at or after stage `p`.
pub fn standard_extension_in_language(directive: &Directive, p: usize, letter: char) -> Result<bool> {
    directive.ensure_epi()?;
    directive.alphabet.rank(letter)?;
    Ok(directive.letters_from(p).contains(&letter))
}

/// Non-clustering length bound for a three-letter episturmian language with
/// finitely many clustering words: the length of the bispecial at the first
/// (c), plus the longest standard word one stage past the late stage that
/// still extends inside the language, plus one.
pub fn non_clustering_bound(directive: &Directive) -> Result<usize> {
    match clustering_supply(directive)? {
        Supply::InfinitelyMany { .. } => Err(Error::NoFiniteBound),
        Supply::FinitelyMany => {
            let lm = landmarks_relaxed(directive)?;
            let (norm, _) = normalize(directive)?;
            let stage = lm.late_stage() + 1;
            let state = evolve(&norm, stage)?;
            let live = norm.letters_from(stage);
            let longest = state
                .words
                .iter()
                .filter(|(c, _)| live.contains(c))
                .map(|(_, w)| w.len())
                .max()
                .expect("some rule recurs");
            let w_c = evolve(&norm, lm.first_c)?.bispecial;
            Ok(w_c.len() + longest + 1)
        }
    }
}

/// Perfectly clustering members of strictly increasing length, for
/// languages with an infinite supply. Each witness is a standard word whose
/// square lies in the language, verified directly by transform.
pub fn clustering_witnesses(directive: &Directive, count: usize) -> Result<Vec<Word>> {
    match clustering_supply(directive)? {
        Supply::FinitelyMany => Err(Error::NoFiniteBound),
        Supply::InfinitelyMany { .. } => {
            let mut gen = Generator::new(directive)?;
            let mut out: Vec<Word> = Vec::new();
            let alphabet = directive.alphabet.clone();
            let cap = 64;
            for p in 1..=cap {
                if out.len() >= count {
                    break;
                }
                let state = evolve(directive, p)?;
                for &letter in alphabet.letters() {
                    if out.len() >= count {
                        break;
                    }
                    if !directive.letters_from(p).contains(&letter) {
                        continue;
                    }
                    let z = state.word_of(letter)?;
                    if out.last().is_some_and(|last| z.len() <= last.len()) {
                        continue;
                    }
                    if !gen.is_factor(&z.concat(z)) {
                        continue;
                    }
                    let perfect = clusters_any(z, &alphabet)?
                        .iter()
                        .any(Certificate::is_perfect);
                    if perfect {
                        out.push(z.clone());
                    }
                }
            }
            if out.len() < count {
                return Err(Error::CapExceeded(count, out.len()));
            }
            Ok(out)
        }
    }
}

/// Two-letter rule evolution: the standard Sturmian words and the central
/// bispecial at stage `k`.
pub fn sturmian_words(directive: &Directive, k: usize) -> Result<(Word, Word, Word)> {
    if directive.alphabet.len() != 2 {
        return Err(Error::InvalidDirective(
            "Sturmian directives use exactly two rule letters".into(),
        ));
    }
    directive.ensure_ar()?;
    let state = evolve(directive, k)?;
    Ok((
        state.word_of('a')?.clone(),
        state.word_of('b')?.clone(),
        state.bispecial,
    ))
}

/// Clustering decision for binary words: a primitive word over {a, b}
/// clusters exactly when it is conjugate to a standard word, decided by
/// two-letter de-substitution. Non-primitive words are routed through their
/// primitive root.
pub fn binary_clusters(v: &Word) -> Result<bool> {
    for &c in v.letters() {
        if c != 'a' && c != 'b' {
            return Err(Error::LetterNotInAlphabet(c, "ab".into()));
        }
    }
    let (root, _) = v.primitive_root()?;
    Ok(desubstitute(&root, &['a', 'b'])?.is_some())
}

/// General-alphabet analogue of the non-clustering bound, with the first
/// three rules by order of appearance playing a, b, c. The general bound
/// keeps the bispecial at the first (c); the refined variant replaces it by
/// the bispecial at the last late rule before the first (c), which is
/// proven for the four-letter cyclic language.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiBound {
    pub general: usize,
    pub refined: usize,
}

pub fn multi_non_clustering_bound(directive: &Directive) -> Result<MultiBound> {
    directive.ensure_ar()?;
    if directive.alphabet.len() < 3 {
        return Err(Error::InvalidDirective(
            "the bound needs at least three rule letters".into(),
        ));
    }
    let (norm, _) = normalize(directive)?;
    let lm = three_letter_landmarks(&norm)?;
    let state = evolve(&norm, lm.late_stage + 1)?;
    let longest = state.longest_len();
    let w_c = evolve(&norm, lm.first_c)?.bispecial;
    let w_late = evolve(&norm, lm.last_late_before_c)?.bispecial;
    Ok(MultiBound {
        general: w_c.len() + longest + 1,
        refined: w_late.len() + longest + 1,
    })
}

struct ThreeLandmarks {
    first_c: usize,
    last_late_before_c: usize,
    late_stage: usize,
}

/// Landmarks of the first three rules by order of appearance inside an
/// r-letter normalized directive.
fn three_letter_landmarks(norm: &Directive) -> Result<ThreeLandmarks> {
    let horizon = norm.prefix.len() + 2 * norm.period.len();
    let find_from = |start: usize, letter: char| -> Result<usize> {
        (start..=horizon + start)
            .find(|&k| norm.rule(k) == letter)
            .ok_or_else(|| Error::InvalidDirective(format!("rule ({letter}) never occurs")))
    };
    let first_c = find_from(0, 'c')?;
    let first_a_after = find_from(first_c + 1, 'a')?;
    let first_b_after = find_from(first_c + 1, 'b')?;
    let late = if first_a_after < first_b_after { 'b' } else { 'a' };
    let late_stage = first_a_after.max(first_b_after);
    let last_late_before_c = (0..first_c)
        .rev()
        .find(|&k| norm.rule(k) == late)
        .ok_or_else(|| Error::InvalidDirective(format!("rule ({late}) missing before the first (c)")))?;
    Ok(ThreeLandmarks { first_c, last_late_before_c, late_stage })
}

/// Chain decomposition deciding the supply of clustering words over r
/// letters: the directive must factor into two-letter blocks, each
/// introducing one new letter alongside a letter carried from before, with
/// the last block infinite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "supply", rename_all = "snake_case")]
pub enum MultiSupply {
    FinitelyMany,
    InfinitelyMany {
        /// The letters in chain order a_1, a_2, ..., a_r.
        assignment: Vec<char>,
        /// Start position of each block after the first.
        splits: Vec<usize>,
    },
}

pub fn multi_clustering_supply(directive: &Directive) -> Result<MultiSupply> {
    directive.ensure_epi()?;
    let letters = directive.alphabet.letters().to_vec();
    let r = letters.len();
    if r < 2 {
        return Err(Error::InvalidDirective("need at least two rule letters".into()));
    }
    if r > crate::words::MAX_SWEEP_ALPHABET {
        return Err(Error::AlphabetTooLarge(r));
    }
    if r == 2 {
        // a single infinite block over the whole alphabet
        return Ok(MultiSupply::InfinitelyMany {
            assignment: letters,
            splits: Vec::new(),
        });
    }
    let limit = directive.prefix.len() + directive.period.len();
    for assignment in permutations(&letters) {
        // carried-letter choices: x_{i+1} is the new letter of some earlier
        // block or one of the first two
        for carried in carried_choices(&assignment) {
            if let Some(splits) = chain_splits(directive, &assignment, &carried, limit) {
                return Ok(MultiSupply::InfinitelyMany { assignment, splits });
            }
        }
    }
    Ok(MultiSupply::FinitelyMany)
}

fn permutations(items: &[char]) -> Vec<Vec<char>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &c) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, c);
            out.push(tail);
        }
    }
    out
}

/// All valid carried-letter vectors (x_3, ..., x_r): x_3 is one of the
/// first two letters, and each later x is the previous block's new letter
/// or the previous carried letter.
fn carried_choices(assignment: &[char]) -> Vec<Vec<char>> {
    let r = assignment.len();
    let mut out: Vec<Vec<char>> = vec![Vec::new()];
    for i in 2..r {
        let mut next = Vec::new();
        for prior in &out {
            let candidates = if i == 2 {
                [assignment[0], assignment[1]]
            } else {
                [assignment[i - 1], *prior.last().unwrap()]
            };
            for &c in &candidates {
                let mut v = prior.clone();
                v.push(c);
                next.push(v);
            }
        }
        next.sort();
        next.dedup();
        out = next;
    }
    out
}

fn chain_splits(
    directive: &Directive,
    assignment: &[char],
    carried: &[char],
    limit: usize,
) -> Option<Vec<usize>> {
    let r = assignment.len();
    // block alphabets: {a_1, a_2}, then {a_{i+1}, x_{i+1}}
    let mut alphabets: Vec<[char; 2]> = vec![[assignment[0], assignment[1]]];
    for i in 0..r - 2 {
        alphabets.push([assignment[i + 2], carried[i]]);
    }
    fn feasible(
        directive: &Directive,
        alphabets: &[[char; 2]],
        block: usize,
        pos: usize,
        limit: usize,
        splits: &mut Vec<usize>,
        failed: &mut BTreeSet<(usize, usize)>,
    ) -> bool {
        if failed.contains(&(block, pos)) {
            return false;
        }
        let sigma = &alphabets[block];
        if block + 1 == alphabets.len() {
            let ok = directive
                .letters_from(pos)
                .iter()
                .all(|c| sigma.contains(c));
            if !ok {
                failed.insert((block, pos));
            }
            return ok;
        }
        let mut end = pos;
        loop {
            splits.push(end);
            if feasible(directive, alphabets, block + 1, end, limit, splits, failed) {
                return true;
            }
            splits.pop();
            if end > limit || !sigma.contains(&directive.rule(end)) {
                failed.insert((block, pos));
                return false;
            }
            end += 1;
        }
    }
    let mut splits = Vec::new();
    let mut failed = BTreeSet::new();
    if feasible(directive, &alphabets, 0, 0, limit, &mut splits, &mut failed) {
        Some(splits)
    } else {
        None
    }
}

/// Distinct factors of length `n` of the language of a directive, exposed
/// for census-style sweeps over generated samples.
pub fn language_factors(directive: &Directive, n: usize) -> Result<BTreeSet<Word>> {
    Ok(Generator::new(directive)?.factors(n))
}

/// Complexity of the language of a directive.
pub fn complexity(directive: &Directive, n: usize) -> Result<usize> {
    Ok(Generator::new(directive)?.complexity(n))
}

/// The orders on the directive's rule alphabet, convenience for sweeps.
pub fn rule_orders(directive: &Directive) -> Result<Vec<Alphabet>> {
    directive.alphabet.all_orders()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    #[test]
    fn supply_examples() {
        let e6 = Directive::three("abc", "ab").unwrap();
        assert_eq!(clustering_supply(&e6).unwrap(), Supply::FinitelyMany);

        let inf = Directive::three("ab", "ac").unwrap();
        match clustering_supply(&inf).unwrap() {
            Supply::InfinitelyMany { split, tail } => {
                assert_eq!(split, 3);
                assert_eq!(tail, vec!['a', 'c']);
            }
            other => panic!("unexpected {other:?}"),
        }

        // any directive using all three letters forever has no valid tail
        assert_eq!(
            clustering_supply(&Directive::three("", "abc").unwrap()).unwrap(),
            Supply::FinitelyMany
        );
    }

    #[test]
    fn extension_membership() {
        let e6 = Directive::three("abc", "ab").unwrap();
        assert!(!standard_extension_in_language(&e6, 4, 'c').unwrap());
        assert!(standard_extension_in_language(&e6, 4, 'a').unwrap());
        assert!(standard_extension_in_language(&Directive::three("", "abc").unwrap(), 9, 'b').unwrap());
    }

    #[test]
    fn bound_examples() {
        let e6 = Directive::three("abc", "ab").unwrap();
        assert_eq!(non_clustering_bound(&e6).unwrap(), 24);
        // the episturmian bound keeps the full first-(c) bispecial, so it is
        // weaker than the three-letter bound on the same directive
        assert_eq!(
            non_clustering_bound(&Directive::three("", "abc").unwrap()).unwrap(),
            28
        );
        assert!(matches!(
            non_clustering_bound(&Directive::three("ab", "ac").unwrap()),
            Err(Error::NoFiniteBound)
        ));
    }

    #[test]
    fn witness_examples() {
        let inf = Directive::three("ab", "ac").unwrap();
        let ws = clustering_witnesses(&inf, 5).unwrap();
        assert_eq!(ws.len(), 5);
        assert!(ws.windows(2).all(|p| p[0].len() < p[1].len()));
        assert_eq!(
            ws.iter().map(Word::len).collect::<Vec<_>>(),
            vec![1, 3, 7, 10, 17]
        );
    }

    #[test]
    fn sturmian_examples() {
        let fib = Directive::multi("", "ab", 2).unwrap();
        let (a2, b2, w2) = sturmian_words(&fib, 2).unwrap();
        assert_eq!(a2, w("aba"));
        assert_eq!(b2, w("ba"));
        assert_eq!(w2, w("aba"));

        let (a0, b0, w0) = sturmian_words(&fib, 0).unwrap();
        assert_eq!((a0, b0, w0), (w("a"), w("b"), Word::empty()));

        assert!(sturmian_words(&Directive::multi("", "a", 2).unwrap(), 3).is_err());
    }

    #[test]
    fn binary_cluster_examples() {
        assert!(binary_clusters(&w("abaa")).unwrap());
        assert!(!binary_clusters(&w("baab")).unwrap());
        assert!(binary_clusters(&w("a")).unwrap());
        assert!(binary_clusters(&w("abab")).unwrap()); // via the root ab
        assert!(binary_clusters(&w("aaaa")).unwrap());
    }

    #[test]
    fn multi_evolution_examples() {
        let bon4 = Directive::multi("", "abcd", 4).unwrap();
        let st = evolve(&bon4, 3).unwrap();
        assert_eq!(st.bispecial, w("abacaba"));
        let st6 = evolve(&bon4, 6).unwrap();
        assert_eq!(st6.word_of('c').unwrap().len(), 56);
    }

    #[test]
    fn multi_bound_examples() {
        let bon4 = Directive::multi("", "abcd", 4).unwrap();
        let b = multi_non_clustering_bound(&bon4).unwrap();
        assert_eq!(b.general, 60);
        assert_eq!(b.refined, 58);

        // on three letters the general formula keeps the first-(c)
        // bispecial, so it dominates the sharp three-letter bound
        let trib = Directive::three("", "abc").unwrap();
        let b = multi_non_clustering_bound(&trib).unwrap();
        assert_eq!(b.general, 28);
        assert!(b.general >= 26);
    }

    #[test]
    fn multi_supply_examples() {
        let bon4 = Directive::multi("", "abcd", 4).unwrap();
        assert_eq!(
            multi_clustering_supply(&bon4).unwrap(),
            MultiSupply::FinitelyMany
        );

        let fib = Directive::multi("", "ab", 2).unwrap();
        assert!(matches!(
            multi_clustering_supply(&fib).unwrap(),
            MultiSupply::InfinitelyMany { .. }
        ));

        // r = 3 agrees with the three-letter split criterion
        for (p, q) in [("abc", "ab"), ("ab", "ac"), ("", "abc"), ("abcb", "cb"), ("ba", "bc")] {
            let d = Directive::three(p, q).unwrap();
            let three = matches!(clustering_supply(&d).unwrap(), Supply::InfinitelyMany { .. });
            let multi = matches!(
                multi_clustering_supply(&d).unwrap(),
                MultiSupply::InfinitelyMany { .. }
            );
            assert_eq!(three, multi, "{d}");
        }

        // a late-introduced letter carried into the final block
        let d = Directive::multi("abdd", "dc", 4).unwrap();
        assert!(matches!(
            multi_clustering_supply(&d).unwrap(),
            MultiSupply::InfinitelyMany { .. }
        ));
    }

    #[test]
    fn complexity_and_factors() {
        let e6 = Directive::three("abc", "ab").unwrap();
        for (n, want) in [(1, 3), (2, 5), (3, 7), (4, 9), (5, 10), (6, 11)] {
            assert_eq!(complexity(&e6, n).unwrap(), want, "n={n}");
        }
        let f2 = language_factors(&Directive::three("", "abc").unwrap(), 2).unwrap();
        assert!(f2.contains(&w("aa")));
        assert!(!f2.contains(&w("bb")));
    }
}
