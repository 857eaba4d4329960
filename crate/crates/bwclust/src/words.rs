//! Ordered alphabets, letter permutations and finite words.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest alphabet for which exhaustive order/permutation sweeps are allowed.
pub const MAX_SWEEP_ALPHABET: usize = 8;

/// A finite set of distinct letters whose list position defines the total
/// order, so an `Alphabet` doubles as an order specification.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, &c) in letters.iter().enumerate() {
            if letters[..i].contains(&c) {
                return Err(Error::DuplicateLetter(c));
            }
        }
        Ok(Alphabet { letters })
    }

    /// The first `n` lowercase letters `a..`, in natural order.
    pub fn lowercase(n: usize) -> Result<Self> {
        if n > 26 {
            return Err(Error::CapExceeded(n, 26));
        }
        Alphabet::new((0..n).map(|i| (b'a' + i as u8) as char))
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, c: char) -> bool {
        self.letters.contains(&c)
    }

    /// Position of `c` in the order, i.e. its rank.
    pub fn rank(&self, c: char) -> Result<usize> {
        self.letters
            .iter()
            .position(|&x| x == c)
            .ok_or_else(|| Error::LetterNotInAlphabet(c, self.to_string()))
    }

    /// Same letters sorted into their natural (`Ord`) order.
    pub fn sorted(&self) -> Alphabet {
        let mut letters = self.letters.clone();
        letters.sort_unstable();
        Alphabet { letters }
    }

    /// All orders on these letters, i.e. all permutations of the letter list,
    /// enumerated in lexicographic order of their letter sequences.
    pub fn all_orders(&self) -> Result<Vec<Alphabet>> {
        if self.len() > MAX_SWEEP_ALPHABET {
            return Err(Error::AlphabetTooLarge(self.len()));
        }
        let mut sorted = self.letters.clone();
        sorted.sort_unstable();
        let mut out = Vec::new();
        permute(&mut sorted, 0, &mut out);
        out.sort_by(|a, b| a.letters.cmp(&b.letters));
        Ok(out)
    }

    /// The order-reversing permutation for this order.
    pub fn symmetric_permutation(&self) -> Perm {
        let r = self.len();
        Perm {
            map: (0..r)
                .map(|i| (self.letters[i], self.letters[r - 1 - i]))
                .collect(),
        }
    }

    /// Lexicographic comparison under this order, with the proper-prefix
    /// convention that a proper prefix compares less.
    pub fn compare(&self, u: &Word, v: &Word) -> Result<Ordering> {
        self.check_word(u)?;
        self.check_word(v)?;
        for (&a, &b) in u.letters().iter().zip(v.letters()) {
            match self.rank(a)?.cmp(&self.rank(b)?) {
                Ordering::Equal => {}
                ord => return Ok(ord),
            }
        }
        Ok(u.len().cmp(&v.len()))
    }

    /// Checks that every letter of `w` belongs to this alphabet.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        for &c in w.letters() {
            self.rank(c)?;
        }
        Ok(())
    }

    /// Rank sequence of `w` under this order.
    pub fn ranks(&self, w: &Word) -> Result<Vec<u8>> {
        w.letters().iter().map(|&c| Ok(self.rank(c)? as u8)).collect()
    }
}

fn permute(letters: &mut Vec<char>, k: usize, out: &mut Vec<Alphabet>) {
    if k == letters.len() {
        out.push(Alphabet { letters: letters.clone() });
        return;
    }
    for i in k..letters.len() {
        letters.swap(k, i);
        permute(letters, k + 1, out);
        letters.swap(k, i);
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    /// Order syntax: a permutation string like `acb`, meaning a < c < b.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if let Some(c) = s.chars().find(|c| !c.is_ascii_lowercase()) {
            return Err(Error::Parse(format!("invalid letter {c:?} in order {s:?}")));
        }
        Alphabet::new(s.chars())
    }
}

/// A bijection on the letters of an alphabet.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Perm {
    map: BTreeMap<char, char>,
}

impl Perm {
    pub fn new<I: IntoIterator<Item = (char, char)>>(pairs: I) -> Result<Self> {
        let map: BTreeMap<char, char> = pairs.into_iter().collect();
        let mut images: Vec<char> = map.values().copied().collect();
        images.sort_unstable();
        let mut domain: Vec<char> = map.keys().copied().collect();
        domain.sort_unstable();
        if images != domain {
            return Err(Error::BadPermutation);
        }
        Ok(Perm { map })
    }

    pub fn identity(alphabet: &Alphabet) -> Perm {
        Perm {
            map: alphabet.letters().iter().map(|&c| (c, c)).collect(),
        }
    }

    /// Parses an image string against the alphabet's letters in natural
    /// order: over {a,b,c}, `cab` means a -> c, b -> a, c -> b.
    pub fn parse(s: &str, alphabet: &Alphabet) -> Result<Perm> {
        let domain = alphabet.sorted();
        let images: Vec<char> = s.chars().collect();
        if images.len() != domain.len() {
            return Err(Error::Parse(format!(
                "permutation {s:?} does not match alphabet {alphabet}"
            )));
        }
        Perm::new(domain.letters().iter().copied().zip(images))
    }

    pub fn apply(&self, c: char) -> Result<char> {
        self.map
            .get(&c)
            .copied()
            .ok_or(Error::LetterNotInPermutation(c))
    }

    pub fn apply_word(&self, w: &Word) -> Result<Word> {
        Ok(Word::new(
            w.letters()
                .iter()
                .map(|&c| self.apply(c))
                .collect::<Result<Vec<_>>>()?,
        ))
    }

    pub fn inverse(&self) -> Perm {
        Perm {
            map: self.map.iter().map(|(&k, &v)| (v, k)).collect(),
        }
    }

    /// `self` after `other`: (self ∘ other)(c) = self(other(c)).
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        let map = other
            .map
            .iter()
            .map(|(&k, &v)| Ok((k, self.apply(v)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Perm::new(map)
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(&k, &v)| k == v)
    }

    pub fn domain(&self) -> impl Iterator<Item = char> + '_ {
        self.map.keys().copied()
    }

    /// Image string against the domain letters in natural order; inverse of
    /// [`Perm::parse`].
    pub fn image_string(&self) -> String {
        self.map.values().collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let domain: String = self.map.keys().collect();
        write!(f, "{domain}\u{2192}{}", self.image_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

/// A finite word: a sequence of letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word {
    letters: Vec<char>,
}

impl Word {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Word {
        Word { letters: letters.into_iter().collect() }
    }

    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Distinct letters occurring in the word, in natural order.
    pub fn support(&self) -> Vec<char> {
        let mut s: Vec<char> = self.letters.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn count(&self, c: char) -> usize {
        self.letters.iter().filter(|&&x| x == c).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn repeat(&self, n: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    pub fn reversed(&self) -> Word {
        Word { letters: self.letters.iter().rev().copied().collect() }
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.len();
        (0..n / 2).all(|i| self.letters[i] == self.letters[n - 1 - i])
    }

    /// The rotation starting at index `i`.
    pub fn rotate(&self, i: usize) -> Word {
        let n = self.len();
        if n == 0 {
            return self.clone();
        }
        let i = i % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[i..]);
        letters.extend_from_slice(&self.letters[..i]);
        Word { letters }
    }

    /// The n cyclic conjugates in rotation-index order, starting with the
    /// word itself. Duplicates are retained for non-primitive words.
    pub fn conjugates(&self) -> Result<Vec<Word>> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok((0..self.len()).map(|i| self.rotate(i)).collect())
    }

    /// True iff the word is not a proper power.
    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.primitive_root()?.1 == 1)
    }

    /// The unique primitive `root` and exponent `m` with `self = root^m`.
    pub fn primitive_root(&self) -> Result<(Word, usize)> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = self.len();
        for d in 1..=n {
            if n.is_multiple_of(d) && self.has_period(d) {
                return Ok((Word::new(self.letters[..d].iter().copied()), n / d));
            }
        }
        unreachable!("d = n always divides")
    }

    fn has_period(&self, d: usize) -> bool {
        (d..self.len()).all(|i| self.letters[i] == self.letters[i - d])
    }

    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word::new(self.letters[start..start + len].iter().copied())
    }

    pub fn contains_factor(&self, v: &Word) -> bool {
        if v.is_empty() {
            return true;
        }
        if v.len() > self.len() {
            return false;
        }
        (0..=self.len() - v.len()).any(|i| &self.letters[i..i + v.len()] == v.letters())
    }

    /// Start indices of all (possibly overlapping) occurrences of `v`.
    pub fn occurrences(&self, v: &Word) -> Vec<usize> {
        if v.is_empty() || v.len() > self.len() {
            return Vec::new();
        }
        (0..=self.len() - v.len())
            .filter(|&i| &self.letters[i..i + v.len()] == v.letters())
            .collect()
    }

    /// The unique letter x such that every other letter is preceded (unless
    /// first) and followed (unless last) by x. Candidates are the letters
    /// occurring in the word; `None` when no letter, or more than one,
    /// qualifies.
    pub fn separating_letter(&self) -> Option<char> {
        let mut found = None;
        for x in self.support() {
            let ok = self.letters.iter().enumerate().all(|(i, &c)| {
                c == x
                    || ((i == 0 || self.letters[i - 1] == x)
                        && (i + 1 == self.len() || self.letters[i + 1] == x))
            });
            if ok {
                if found.is_some() {
                    return None;
                }
                found = Some(x);
            }
        }
        found
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            // CLI-friendly spelling of the empty word
            return write!(f, "\u{03b5}");
        }
        for &c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Word syntax: letters a-z; the empty string is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(c) = s.chars().find(|c| !c.is_ascii_lowercase()) {
            return Err(Error::Parse(format!("invalid letter {c:?} in word {s:?}")));
        }
        Ok(Word::new(s.chars()))
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.letters.into_iter().collect()
    }
}

impl TryFrom<String> for Word {
    type Error = Error;

    fn try_from(s: String) -> Result<Word> {
        s.parse()
    }
}

impl From<&str> for Word {
    /// Convenience for literals; panics on non-lowercase input.
    fn from(s: &str) -> Word {
        s.parse().expect("word literal")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    #[test]
    fn conjugates_basic() {
        assert_eq!(
            w("aab").conjugates().unwrap(),
            vec![w("aab"), w("aba"), w("baa")]
        );
        assert_eq!(w("a").conjugates().unwrap(), vec![w("a")]);
        assert_eq!(
            w("abab").conjugates().unwrap(),
            vec![w("abab"), w("baba"), w("abab"), w("baba")]
        );
        assert!(matches!(Word::empty().conjugates(), Err(Error::EmptyWord)));
    }

    #[test]
    fn primitivity() {
        assert!(!w("abab").is_primitive().unwrap());
        assert!(w("abaab").is_primitive().unwrap());
        assert!(w("a").is_primitive().unwrap());
        assert_eq!(w("abab").primitive_root().unwrap(), (w("ab"), 2));
        assert_eq!(w("aaa").primitive_root().unwrap(), (w("a"), 3));
        assert_eq!(w("abaab").primitive_root().unwrap(), (w("abaab"), 1));
    }

    #[test]
    fn reversal() {
        assert_eq!(w("abc").reversed(), w("cba"));
        assert_eq!(w("aba").reversed(), w("aba"));
        assert_eq!(w("bacab").reversed(), w("bacab"));
    }

    #[test]
    fn lex_compare() {
        let ab: Alphabet = "ab".parse().unwrap();
        let ba: Alphabet = "ba".parse().unwrap();
        assert_eq!(ab.compare(&w("ab"), &w("ba")).unwrap(), Ordering::Less);
        assert_eq!(ba.compare(&w("ab"), &w("ba")).unwrap(), Ordering::Greater);
        assert_eq!(ab.compare(&w("ab"), &w("aba")).unwrap(), Ordering::Less);
        assert!(ab.compare(&w("ac"), &w("ab")).is_err());
    }

    #[test]
    fn separating() {
        assert_eq!(w("abaca").separating_letter(), Some('a'));
        assert_eq!(w("aaa").separating_letter(), Some('a'));
        assert_eq!(w("a").separating_letter(), Some('a'));
        assert_eq!(w("bacab").separating_letter(), Some('a'));
        // both letters qualify in "ab", so no unique answer
        assert_eq!(w("ab").separating_letter(), None);
        // the definition admits b here: a is first, c is last
        assert_eq!(w("abc").separating_letter(), Some('b'));
        assert_eq!(w("abcb").separating_letter(), Some('b'));
        assert_eq!(w("abca").separating_letter(), None);
    }

    #[test]
    fn perm_parse_apply() {
        let abc: Alphabet = "abc".parse().unwrap();
        let pi = Perm::parse("cab", &abc).unwrap();
        assert_eq!(pi.apply('a').unwrap(), 'c');
        assert_eq!(pi.apply('b').unwrap(), 'a');
        assert_eq!(pi.apply('c').unwrap(), 'b');
        assert_eq!(pi.inverse().apply('c').unwrap(), 'a');
        assert_eq!(pi.compose(&pi.inverse()).unwrap(), Perm::identity(&abc));
        assert_eq!(pi.image_string(), "cab");
        assert!(Perm::parse("caa", &abc).is_err());
    }

    #[test]
    fn symmetric_perm() {
        let acb: Alphabet = "acb".parse().unwrap();
        let sym = acb.symmetric_permutation();
        assert_eq!(sym.apply('a').unwrap(), 'b');
        assert_eq!(sym.apply('c').unwrap(), 'c');
        assert_eq!(sym.apply('b').unwrap(), 'a');
    }

    #[test]
    fn all_orders_enumeration() {
        let abc: Alphabet = "abc".parse().unwrap();
        let orders: Vec<String> = abc
            .all_orders()
            .unwrap()
            .iter()
            .map(|o| o.to_string())
            .collect();
        assert_eq!(orders, ["abc", "acb", "bac", "bca", "cab", "cba"]);
    }

    proptest! {
        #[test]
        fn conjugate_count_and_multiset(s in "[abc]{1,12}") {
            let word = w(&s);
            let cs = word.conjugates().unwrap();
            prop_assert_eq!(cs.len(), word.len());
            for c in &cs {
                let mut u = c.letters().to_vec();
                let mut v = word.letters().to_vec();
                u.sort_unstable();
                v.sort_unstable();
                prop_assert_eq!(u, v);
            }
        }

        #[test]
        fn primitive_iff_distinct_conjugates(s in "[ab]{1,12}") {
            let word = w(&s);
            let cs = word.conjugates().unwrap();
            let mut uniq = cs.clone();
            uniq.sort();
            uniq.dedup();
            prop_assert_eq!(word.is_primitive().unwrap(), uniq.len() == cs.len());
        }

        #[test]
        fn reverse_involution(s in "[abc]{0,16}") {
            let word = w(&s);
            prop_assert_eq!(word.reversed().reversed(), word);
        }

        #[test]
        fn compare_total_order(s in "[abc]{0,8}", t in "[abc]{0,8}", u in "[abc]{0,8}") {
            let order: Alphabet = "bca".parse().unwrap();
            let (a, b, c) = (w(&s), w(&t), w(&u));
            let ab = order.compare(&a, &b).unwrap();
            let ba = order.compare(&b, &a).unwrap();
            prop_assert_eq!(ab, ba.reverse());
            if ab == Ordering::Less && order.compare(&b, &c).unwrap() == Ordering::Less {
                prop_assert_eq!(order.compare(&a, &c).unwrap(), Ordering::Less);
            }
        }
    }
}
