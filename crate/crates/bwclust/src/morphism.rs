//! The elementary morphisms generating Arnoux-Rauzy and episturmian
//! languages, their inverses, and the de-substitution decision for
//! conjugacy to a standard word.
//!
//! For a letter x, the suffixing morphism fixes x and maps every other
//! letter y to y·x; the prefixing morphism maps y to x·y. A word is
//! conjugate to a standard word exactly when repeated inverse applications
//! reduce it to a single letter.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::words::Word;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Placement {
    /// y -> y·x for y != x (x is appended after other letters).
    After,
    /// y -> x·y for y != x (x is prepended before other letters).
    Before,
}

/// One elementary morphism, determined by its letter and the side on which
/// that letter is inserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Morphism {
    pub placement: Placement,
    pub letter: char,
}

impl Morphism {
    pub fn after(letter: char) -> Morphism {
        Morphism { placement: Placement::After, letter }
    }

    pub fn before(letter: char) -> Morphism {
        Morphism { placement: Placement::Before, letter }
    }

    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Vec::with_capacity(2 * w.len());
        for &c in w.letters() {
            match self.placement {
                Placement::After => {
                    out.push(c);
                    if c != self.letter {
                        out.push(self.letter);
                    }
                }
                Placement::Before => {
                    if c != self.letter {
                        out.push(self.letter);
                    }
                    out.push(c);
                }
            }
        }
        Word::new(out)
    }

    /// True iff `w` lies in the image of this morphism: with placement
    /// `After`, every letter other than x must be immediately followed by x;
    /// with `Before`, immediately preceded.
    pub fn in_range(&self, w: &Word) -> bool {
        let x = self.letter;
        let ls = w.letters();
        match self.placement {
            Placement::After => ls
                .iter()
                .enumerate()
                .all(|(i, &c)| c == x || (i + 1 < ls.len() && ls[i + 1] == x)),
            Placement::Before => ls
                .iter()
                .enumerate()
                .all(|(i, &c)| c == x || (i > 0 && ls[i - 1] == x)),
        }
    }

    /// The unique preimage when `w` is in range: the inserted copy of the
    /// letter next to each other letter is removed.
    pub fn preimage(&self, w: &Word) -> Option<Word> {
        if !self.in_range(w) {
            return None;
        }
        let x = self.letter;
        let ls = w.letters();
        let mut out = Vec::with_capacity(ls.len());
        match self.placement {
            Placement::After => {
                let mut i = 0;
                while i < ls.len() {
                    out.push(ls[i]);
                    i += if ls[i] == x { 1 } else { 2 };
                }
            }
            Placement::Before => {
                // a copy of x directly before a non-x letter is the inserted
                // one and belongs to that letter
                let mut i = 0;
                while i < ls.len() {
                    if ls[i] == x && i + 1 < ls.len() && ls[i + 1] != x {
                        out.push(ls[i + 1]);
                        i += 2;
                    } else {
                        out.push(ls[i]);
                        i += 1;
                    }
                }
            }
        }
        Some(Word::new(out))
    }

    /// The six elementary morphisms over the given letters.
    pub fn all(letters: &[char]) -> Vec<Morphism> {
        letters
            .iter()
            .flat_map(|&c| [Morphism::after(c), Morphism::before(c)])
            .collect()
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.placement {
            Placement::After => write!(f, "after({})", self.letter),
            Placement::Before => write!(f, "before({})", self.letter),
        }
    }
}

/// Applies a composition left to right: `apply_chain(&[f, g], w) = f(g(w))`.
pub fn apply_chain(chain: &[Morphism], w: &Word) -> Word {
    chain.iter().rev().fold(w.clone(), |acc, m| m.apply(&acc))
}

/// A successful reduction of a word to a single letter: the word equals
/// `apply_chain(&chain, letter)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub chain: Vec<Morphism>,
    pub letter: char,
}

/// Breadth-first search for a shortest inverse-morphism chain reducing `w`
/// to a single letter; `None` when no chain exists. Candidate morphisms use
/// the letters of `letters`.
pub fn desubstitute(w: &Word, letters: &[char]) -> Result<Option<Derivation>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: VecDeque<(Word, Vec<Morphism>)> = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back((w.clone(), Vec::new()));
    while let Some((u, chain)) = queue.pop_front() {
        if u.len() == 1 {
            return Ok(Some(Derivation { chain, letter: u.letters()[0] }));
        }
        for m in Morphism::all(letters) {
            if let Some(pre) = m.preimage(&u) {
                // one-letter powers only shrink to themselves; skip repeats
                if !pre.is_empty() && seen.insert(pre.clone()) {
                    let mut next = chain.clone();
                    next.push(m);
                    queue.push_back((pre, next));
                }
            }
        }
    }
    Ok(None)
}

/// True iff the primitive word `v` is conjugate to a standard word of some
/// language generated over `letters`, decided by de-substitution.
pub fn is_conjugate_to_standard(v: &Word, letters: &[char]) -> Result<bool> {
    if !v.is_primitive()? {
        return Err(Error::NotPrimitive);
    }
    Ok(desubstitute(v, letters)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    const ABC: [char; 3] = ['a', 'b', 'c'];

    #[test]
    fn elementary_images() {
        assert_eq!(Morphism::after('a').apply(&w("abc")), w("abaca"));
        assert_eq!(Morphism::before('a').apply(&w("bc")), w("abac"));
        assert_eq!(Morphism::after('x').apply(&Word::empty()), Word::empty());
    }

    #[test]
    fn ranges_and_preimages() {
        let ra = Morphism::after('a');
        assert!(ra.in_range(&w("abaa")));
        assert_eq!(ra.preimage(&w("abaa")).unwrap(), w("aba"));
        assert!(!ra.in_range(&w("abac")));

        let la = Morphism::before('a');
        assert_eq!(la.preimage(&w("abac")).unwrap(), w("bc"));
        assert!(la.preimage(&w("bac")).is_none());

        // one-letter powers are fixed points of their own after-morphism
        assert_eq!(ra.preimage(&w("aaa")).unwrap(), w("aaa"));
    }

    #[test]
    fn desubstitute_examples() {
        let d = desubstitute(&w("abac"), &ABC).unwrap().unwrap();
        assert_eq!(d.letter, 'c');
        assert_eq!(apply_chain(&d.chain, &Word::new([d.letter])), w("abac"));

        assert!(desubstitute(&w("abc"), &ABC).unwrap().is_none());
        assert!(desubstitute(&w("bacab"), &ABC).unwrap().is_none());
        assert!(desubstitute(&w("abaca"), &ABC).unwrap().is_none());
        assert!(desubstitute(&w("aa"), &ABC).unwrap().is_none());

        let d = desubstitute(&w("a"), &ABC).unwrap().unwrap();
        assert!(d.chain.is_empty());
    }

    #[test]
    fn conjugate_to_standard_examples() {
        assert!(is_conjugate_to_standard(&w("aba"), &ABC).unwrap());
        assert!(!is_conjugate_to_standard(&w("bacab"), &ABC).unwrap());
        assert!(!is_conjugate_to_standard(&w("abaca"), &ABC).unwrap());
        assert!(matches!(
            is_conjugate_to_standard(&w("abab"), &ABC),
            Err(Error::NotPrimitive)
        ));
    }

    proptest! {
        #[test]
        fn preimage_round_trips(s in "[abc]{1,12}", x in prop::sample::select(vec!['a','b','c']), before in any::<bool>()) {
            let m = if before { Morphism::before(x) } else { Morphism::after(x) };
            let word = w(&s);
            let image = m.apply(&word);
            prop_assert_eq!(m.preimage(&image).unwrap(), word);
        }

        #[test]
        fn derivation_recomposes(s in "[abc]{1,10}") {
            let word = w(&s);
            if let Some(d) = desubstitute(&word, &ABC).unwrap() {
                prop_assert_eq!(apply_chain(&d.chain, &Word::new([d.letter])), word);
            }
        }
    }
}
