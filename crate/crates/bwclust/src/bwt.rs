//! The Burrows-Wheeler transform and direct clustering detection.
//!
//! A word `w` clusters for a permutation `pi` (not the identity) under an
//! order `a_1 < ... < a_r` when its transform is the run concatenation
//! `(pi a_1)^{n_{pi a_1}} ... (pi a_r)^{n_{pi a_r}}`, where `n_a` counts the
//! occurrences of `a` in `w` and may be zero. Clustering for the
//! order-reversing permutation is called perfect.

use serde::{Deserialize, Serialize};

use crate::words::{Alphabet, Perm, Word};
use crate::{Error, Result};

/// Witness that a word clusters for a given order and permutation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Certificate {
    pub order: Alphabet,
    pub permutation: Perm,
    pub transform: Word,
    /// `(letter, count)` runs in the order's sequence; counts may be zero
    /// for letters absent from the source word.
    pub runs: Vec<(char, usize)>,
}

impl Certificate {
    pub fn is_perfect(&self) -> bool {
        self.permutation == self.order.symmetric_permutation()
    }
}

/// Burrows-Wheeler transform: sort the rotations (as a multiset, so equal
/// rotations of a non-primitive word stay adjacent) lexicographically under
/// `order` and read off the last letters.
///
/// Rotations are materialized and sorted directly; inputs here are desk
/// scale, so no suffix-array machinery.
pub fn bwt(w: &Word, order: &Alphabet) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let ranks = order.ranks(w)?;
    let n = ranks.len();
    let mut rotations: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            let mut r = Vec::with_capacity(n);
            r.extend_from_slice(&ranks[i..]);
            r.extend_from_slice(&ranks[..i]);
            r
        })
        .collect();
    rotations.sort_unstable();
    let letters = order.letters();
    Ok(Word::new(
        rotations.iter().map(|r| letters[r[n - 1] as usize]),
    ))
}

fn run_decomposition(w: &Word) -> Vec<(char, usize)> {
    let mut runs: Vec<(char, usize)> = Vec::new();
    for &c in w.letters() {
        match runs.last_mut() {
            Some((l, n)) if *l == c => *n += 1,
            _ => runs.push((c, 1)),
        }
    }
    runs
}

/// All permutations (excluding the identity) for which `w` clusters under
/// `order`. Letters absent from `w` have empty runs, so several completions
/// of the same run pattern may qualify.
pub fn clustering_certificates(w: &Word, order: &Alphabet) -> Result<Vec<Certificate>> {
    clustering_certificates_with(w, order, false)
}

/// As [`clustering_certificates`], with an exploration flag admitting the
/// identity permutation.
pub fn clustering_certificates_with(
    w: &Word,
    order: &Alphabet,
    allow_identity: bool,
) -> Result<Vec<Certificate>> {
    let transform = bwt(w, order)?;
    let runs = run_decomposition(&transform);
    let present: Vec<char> = order
        .letters()
        .iter()
        .copied()
        .filter(|&c| w.count(c) > 0)
        .collect();
    // each present letter must form exactly one run, of its full count
    if runs.len() != present.len()
        || runs.iter().any(|&(c, n)| w.count(c) != n)
        || !runs.iter().all(|&(c, _)| present.contains(&c))
    {
        return Ok(Vec::new());
    }
    let run_letters: Vec<char> = runs.iter().map(|&(c, _)| c).collect();
    let absent: Vec<char> = order
        .letters()
        .iter()
        .copied()
        .filter(|&c| w.count(c) == 0)
        .collect();
    let r = order.len();
    let m = run_letters.len();
    let mut out = Vec::new();
    // choose the order positions carrying the nonempty runs, then assign the
    // absent letters to the remaining positions in every arrangement
    for positions in combinations(r, m) {
        let rest: Vec<usize> = (0..r).filter(|i| !positions.contains(i)).collect();
        for arrangement in permutations(&absent) {
            let mut pairs = Vec::with_capacity(r);
            for (&p, &c) in positions.iter().zip(&run_letters) {
                pairs.push((order.letters()[p], c));
            }
            for (&p, &c) in rest.iter().zip(&arrangement) {
                pairs.push((order.letters()[p], c));
            }
            let pi = Perm::new(pairs).expect("constructed bijection");
            if !allow_identity && pi.is_identity() {
                continue;
            }
            let full_runs: Vec<(char, usize)> = order
                .letters()
                .iter()
                .map(|&a| {
                    let image = pi.apply(a).expect("alphabet letter");
                    (image, w.count(image))
                })
                .collect();
            out.push(Certificate {
                order: order.clone(),
                permutation: pi,
                transform: transform.clone(),
                runs: full_runs,
            });
        }
    }
    out.sort();
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn permutations(items: &[char]) -> Vec<Vec<char>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &c) in items.iter().enumerate() {
        let mut rest: Vec<char> = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, c);
            out.push(tail);
        }
    }
    out
}

/// True iff `w` clusters for the order-reversing permutation of the full
/// alphabet `order`.
pub fn is_perfectly_clustering(w: &Word, order: &Alphabet) -> Result<bool> {
    let sym = order.symmetric_permutation();
    if sym.is_identity() {
        return Ok(false);
    }
    Ok(clustering_certificates(w, order)?
        .iter()
        .any(|c| c.permutation == sym))
}

/// Perfect clustering decided on the sub-alphabet of letters actually
/// present in `w`, a convenience restriction of [`is_perfectly_clustering`].
pub fn is_perfectly_clustering_present(w: &Word, order: &Alphabet) -> Result<bool> {
    order.check_word(w)?;
    let sub = Alphabet::new(
        order
            .letters()
            .iter()
            .copied()
            .filter(|&c| w.count(c) > 0),
    )?;
    is_perfectly_clustering(w, &sub)
}

/// Certificates across every order on `alphabet`, enumerated in
/// lexicographic order of the orders' letter sequences.
pub fn clusters_any(w: &Word, alphabet: &Alphabet) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    for order in alphabet.all_orders()? {
        out.extend(clustering_certificates(w, &order)?);
    }
    Ok(out)
}

/// The alphabet reordered by the permuted order: x before y whenever
/// `pi^{-1} x` comes before `pi^{-1} y`. Equivalently, the image of the
/// order sequence under `pi`.
pub fn pi_order(order: &Alphabet, pi: &Perm) -> Result<Alphabet> {
    Alphabet::new(
        order
            .letters()
            .iter()
            .map(|&c| pi.apply(c))
            .collect::<Result<Vec<_>>>()?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    fn alpha(s: &str) -> Alphabet {
        s.parse().unwrap()
    }

    #[test]
    fn transform_examples() {
        assert_eq!(bwt(&w("aab"), &alpha("ab")).unwrap(), w("baa"));
        assert_eq!(bwt(&w("a"), &alpha("ab")).unwrap(), w("a"));
        assert_eq!(bwt(&w("abab"), &alpha("ab")).unwrap(), w("bbaa"));
        assert_eq!(bwt(&w("bacab"), &alpha("abc")).unwrap(), w("cbbaa"));
        assert_eq!(bwt(&w("abaca"), &alpha("acb")).unwrap(), w("cbaaa"));
        assert!(bwt(&Word::empty(), &alpha("ab")).is_err());
    }

    #[test]
    fn certificates_examples() {
        // bacab carries the symmetric permutation for a<b<c
        let certs = clustering_certificates(&w("bacab"), &alpha("abc")).unwrap();
        assert!(certs.iter().any(Certificate::is_perfect));
        assert_eq!(certs[0].transform, w("cbbaa"));
        for cert in &certs {
            let rebuilt = Word::new(
                cert.runs
                    .iter()
                    .flat_map(|&(c, n)| std::iter::repeat_n(c, n)),
            );
            assert_eq!(rebuilt, cert.transform);
        }

        assert!(clustering_certificates(&w("baab"), &alpha("ab"))
            .unwrap()
            .is_empty());

        // Tribonacci factor abaca clusters for a<c<b with a -> c, b -> a, c -> b
        let acb = alpha("acb");
        let certs = clustering_certificates(&w("abaca"), &acb).unwrap();
        let pi = Perm::parse("cab", &alpha("abc")).unwrap();
        assert_eq!(certs.len(), 1);
        assert_eq!(certs[0].permutation, pi);
        assert!(!certs[0].is_perfect());
    }

    #[test]
    fn perfect_examples() {
        assert!(is_perfectly_clustering(&w("bacab"), &alpha("abc")).unwrap());
        assert!(!is_perfectly_clustering(&w("abaca"), &alpha("acb")).unwrap());
        assert!(is_perfectly_clustering(&w("ba"), &alpha("ab")).unwrap());
        // on the full alphabet "aa" is perfectly clustering via the swap
        assert!(is_perfectly_clustering(&w("aa"), &alpha("ab")).unwrap());
        // ... but not over its own single-letter alphabet
        assert!(!is_perfectly_clustering(&w("aa"), &alpha("a")).unwrap());
        assert!(!is_perfectly_clustering_present(&w("aa"), &alpha("ab")).unwrap());
    }

    #[test]
    fn sweep_examples() {
        assert!(clusters_any(&w("baab"), &alpha("ab")).unwrap().is_empty());
        let certs = clusters_any(&w("abaa"), &alpha("ab")).unwrap();
        assert!(certs
            .iter()
            .any(|c| c.order == alpha("ab") && c.is_perfect()));
        let certs = clusters_any(&w("bacacab"), &alpha("abc")).unwrap();
        assert!(certs.iter().any(Certificate::is_perfect));
    }

    #[test]
    fn abaca_exactly_two_certificates() {
        // the a<c<b certificate and its reverse-order dual b<c<a, same pi
        let certs = clusters_any(&w("abaca"), &alpha("abc")).unwrap();
        let pi = Perm::parse("cab", &alpha("abc")).unwrap();
        assert_eq!(certs.len(), 2);
        assert_eq!(certs[0].order, alpha("acb"));
        assert_eq!(certs[1].order, alpha("bca"));
        assert!(certs.iter().all(|c| c.permutation == pi));
    }

    #[test]
    fn pi_order_examples() {
        let abc = alpha("abc");
        assert_eq!(pi_order(&abc, &Perm::identity(&abc)).unwrap(), abc);
        assert_eq!(
            pi_order(&abc, &abc.symmetric_permutation()).unwrap(),
            alpha("cba")
        );
        // the defining equivalence applied letterwise
        let pi = Perm::parse("cab", &abc).unwrap();
        assert_eq!(pi_order(&alpha("acb"), &pi).unwrap(), alpha("cba"));
    }

    #[test]
    fn single_letter_words_cluster_everywhere() {
        for order in alpha("abc").all_orders().unwrap() {
            let certs = clustering_certificates(&w("aaaa"), &order).unwrap();
            assert!(!certs.is_empty());
            assert!(certs.iter().all(|c| !c.permutation.is_identity()));
        }
    }

    #[test]
    fn identity_flag() {
        let certs = clustering_certificates_with(&w("aaa"), &alpha("ab"), true).unwrap();
        assert!(certs.iter().any(|c| c.permutation.is_identity()));
    }

    proptest! {
        #[test]
        fn transform_permutes_letters(s in "[abc]{1,14}") {
            let word = w(&s);
            let b = bwt(&word, &alpha("abc")).unwrap();
            let mut x = b.letters().to_vec();
            let mut y = word.letters().to_vec();
            x.sort_unstable();
            y.sort_unstable();
            prop_assert_eq!(x, y);
        }

        #[test]
        fn power_law(s in "[abc]{1,7}", m in 1usize..4) {
            let v = w(&s);
            prop_assume!(v.is_primitive().unwrap());
            let order = alpha("abc");
            let bv = bwt(&v, &order).unwrap();
            let doubled = Word::new(
                bv.letters().iter().flat_map(|&c| std::iter::repeat_n(c, m)),
            );
            prop_assert_eq!(bwt(&v.repeat(m), &order).unwrap(), doubled);
            prop_assert_eq!(
                clustering_certificates(&v.repeat(m), &order).unwrap()
                    .iter().map(|c| c.permutation.clone()).collect::<Vec<_>>(),
                clustering_certificates(&v, &order).unwrap()
                    .iter().map(|c| c.permutation.clone()).collect::<Vec<_>>()
            );
        }

        #[test]
        fn reversal_duality(s in "[abc]{1,9}") {
            let word = w(&s);
            for order in alpha("abc").all_orders().unwrap() {
                for cert in clustering_certificates(&word, &order).unwrap() {
                    let dual_order = pi_order(&order, &cert.permutation).unwrap();
                    let dual = clustering_certificates(&word.reversed(), &dual_order).unwrap();
                    prop_assert!(dual.iter().any(|c| c.permutation == cert.permutation.inverse()));
                }
            }
        }
    }
}
