//! Three-letter Arnoux-Rauzy machinery: directive words, rule evolution,
//! short/middle/long renaming, landmark stages, the non-clustering length
//! bound, standard-word clustering tests, the extremal clustering word,
//! obstruction detection, membership and census.
//!
//! Rule (x) at stage k keeps the standard word of x fixed and right-
//! multiplies the others by it, while the central bispecial grows by the
//! same word. Everything downstream is computed after relabelling the
//! directive so that the rule at stage 0 is (a) and the first different
//! rule is (b); results are reported back in the caller's letters.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bwt::{clusters_any, Certificate};
use crate::morphism::Morphism;
use crate::words::{Alphabet, Perm, Word};
use crate::{Error, Result};

/// Hard cap for census sweeps; factor enumeration beyond this is no longer
/// desk scale.
pub const CENSUS_CAP: usize = 64;

/// An eventually periodic directive word `prefix · period^ω` over a rule
/// alphabet. Validity is per use: Arnoux-Rauzy operations need every rule
/// letter to recur (occur in the period), episturmian ones only need every
/// rule letter to occur at all.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Directive {
    pub prefix: Word,
    pub period: Word,
    pub alphabet: Alphabet,
}

impl Directive {
    pub fn new(prefix: Word, period: Word, alphabet: Alphabet) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidDirective("period must be nonempty".into()));
        }
        alphabet.check_word(&prefix)?;
        alphabet.check_word(&period)?;
        Ok(Directive { prefix, period, alphabet })
    }

    /// Directive over the three rule letters a, b, c.
    pub fn three(prefix: &str, period: &str) -> Result<Self> {
        Directive::new(prefix.parse()?, period.parse()?, Alphabet::lowercase(3)?)
    }

    /// Directive over the first `r` lowercase rule letters.
    pub fn multi(prefix: &str, period: &str, r: usize) -> Result<Self> {
        Directive::new(prefix.parse()?, period.parse()?, Alphabet::lowercase(r)?)
    }

    pub fn rule(&self, k: usize) -> char {
        if k < self.prefix.len() {
            self.prefix.letters()[k]
        } else {
            self.period.letters()[(k - self.prefix.len()) % self.period.len()]
        }
    }

    /// The length-`k` rule prefix.
    pub fn rules(&self, k: usize) -> Word {
        Word::new((0..k).map(|i| self.rule(i)))
    }

    /// Letters with a rule at or after stage `k`.
    pub fn letters_from(&self, k: usize) -> BTreeSet<char> {
        let mut out: BTreeSet<char> = self.period.support().into_iter().collect();
        for i in k..self.prefix.len() {
            out.insert(self.prefix.letters()[i]);
        }
        out
    }

    /// Every rule letter recurs forever.
    pub fn is_ar_valid(&self) -> bool {
        let period = self.period.support();
        self.alphabet.letters().iter().all(|c| period.contains(c))
    }

    /// Every rule letter is used at least once.
    pub fn is_epi_valid(&self) -> bool {
        let used: BTreeSet<char> = self
            .prefix
            .support()
            .into_iter()
            .chain(self.period.support())
            .collect();
        self.alphabet.letters().iter().all(|c| used.contains(c))
    }

    pub fn ensure_ar(&self) -> Result<()> {
        if self.is_ar_valid() {
            Ok(())
        } else {
            Err(Error::InvalidDirective(format!(
                "{self}: every rule letter must occur in the period"
            )))
        }
    }

    pub fn ensure_epi(&self) -> Result<()> {
        if self.is_epi_valid() {
            Ok(())
        } else {
            Err(Error::InvalidDirective(format!(
                "{self}: every rule letter must be used at least once"
            )))
        }
    }

    /// Relabels letters through `perm`, keeping the alphabet.
    pub fn relabelled(&self, perm: &Perm) -> Result<Directive> {
        Directive::new(
            perm.apply_word(&self.prefix)?,
            perm.apply_word(&self.period)?,
            self.alphabet.clone(),
        )
    }
}

impl fmt::Display for Directive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix: String = self.prefix.letters().iter().collect();
        write!(f, "{prefix}:{}", self.period)
    }
}

impl fmt::Debug for Directive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Directive({self})")
    }
}

impl FromStr for Directive {
    type Err = Error;

    /// Directive syntax `PREFIX:PERIOD` over a-z; the prefix may be empty.
    /// The rule alphabet is inferred as a..=the largest letter used, with at
    /// least three letters.
    fn from_str(s: &str) -> Result<Self> {
        let (prefix, period) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("directive {s:?} must be PREFIX:PERIOD")))?;
        let prefix: Word = prefix.parse()?;
        let period: Word = period.parse()?;
        let max = prefix
            .letters()
            .iter()
            .chain(period.letters())
            .copied()
            .max()
            .unwrap_or('c');
        let r = (max as u8 - b'a' + 1).max(3) as usize;
        Directive::new(prefix, period, Alphabet::lowercase(r)?)
    }
}

/// The standard words and central bispecial at one stage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArState {
    pub stage: usize,
    /// One `(letter, word)` entry per rule letter, in alphabet order.
    pub words: Vec<(char, Word)>,
    pub bispecial: Word,
}

impl ArState {
    pub fn word_of(&self, letter: char) -> Result<&Word> {
        self.words
            .iter()
            .find(|(c, _)| *c == letter)
            .map(|(_, w)| w)
            .ok_or(Error::LetterNotInPermutation(letter))
    }

    pub fn longest_len(&self) -> usize {
        self.words.iter().map(|(_, w)| w.len()).max().unwrap_or(0)
    }
}

/// Incremental rule evolution over any alphabet size.
#[derive(Clone, Debug)]
pub struct Evolution {
    directive: Directive,
    stage: usize,
    words: Vec<Word>,
    bispecial: Word,
}

impl Evolution {
    pub fn new(directive: &Directive) -> Evolution {
        Evolution {
            directive: directive.clone(),
            stage: 0,
            words: directive
                .alphabet
                .letters()
                .iter()
                .map(|&c| Word::new([c]))
                .collect(),
            bispecial: Word::empty(),
        }
    }

    pub fn stage(&self) -> usize {
        self.stage
    }

    pub fn bispecial(&self) -> &Word {
        &self.bispecial
    }

    pub fn word_of(&self, letter: char) -> Result<&Word> {
        Ok(&self.words[self.directive.alphabet.rank(letter)?])
    }

    pub fn longest_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn step(&mut self) {
        let rule = self.directive.rule(self.stage);
        let fixed = self.directive.alphabet.rank(rule).expect("rule letter");
        let applied = self.words[fixed].clone();
        for (i, w) in self.words.iter_mut().enumerate() {
            if i != fixed {
                *w = w.concat(&applied);
            }
        }
        self.bispecial = self.bispecial.concat(&applied);
        self.stage += 1;
    }

    pub fn advance_to(&mut self, stage: usize) {
        while self.stage < stage {
            self.step();
        }
    }

    pub fn state(&self) -> ArState {
        ArState {
            stage: self.stage,
            words: self
                .directive
                .alphabet
                .letters()
                .iter()
                .copied()
                .zip(self.words.iter().cloned())
                .collect(),
            bispecial: self.bispecial.clone(),
        }
    }
}

/// The stage-`k` state of the rule recursion. Works over any rule alphabet;
/// for three letters this is the classical evolution.
pub fn evolve(directive: &Directive, k: usize) -> Result<ArState> {
    directive.ensure_epi()?;
    let mut evo = Evolution::new(directive);
    evo.advance_to(k);
    Ok(evo.state())
}

/// The standard word of `letter` at stage `k`, computed by composing the
/// elementary suffixing morphisms along the rule prefix. Agrees with the
/// rule recursion; the reversed word is the composition of the prefixing
/// morphisms.
pub fn standard_by_morphism(directive: &Directive, k: usize, letter: char) -> Result<Word> {
    directive.alphabet.rank(letter)?;
    let mut w = Word::new([letter]);
    for i in (0..k).rev() {
        w = Morphism::after(directive.rule(i)).apply(&w);
    }
    Ok(w)
}

/// Relabelling that brings a directive into the normal form where the rule
/// at stage 0 is (a) and the first rule different from (a) is (b). Letters
/// beyond the first three by order of appearance keep their relative order.
pub fn normalize(directive: &Directive) -> Result<(Directive, Perm)> {
    directive.ensure_epi()?;
    let letters = directive.alphabet.letters();
    let mut appearance: Vec<char> = Vec::new();
    let mut k = 0;
    while appearance.len() < letters.len().min(3) {
        let c = directive.rule(k);
        if !appearance.contains(&c) {
            appearance.push(c);
        }
        k += 1;
    }
    let rest: Vec<char> = letters
        .iter()
        .copied()
        .filter(|c| !appearance.contains(c))
        .collect();
    let mut pairs = Vec::new();
    for (i, &c) in appearance.iter().chain(&rest).enumerate() {
        pairs.push((c, letters[i]));
    }
    let perm = Perm::new(pairs)?;
    Ok((directive.relabelled(&perm)?, perm))
}

/// The stages around the first rule (c) that control clustering, computed
/// on the normalized directive. `early` and `late` are the letters of
/// {a, b} ordered by their first rule after the first (c).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Landmarks {
    /// Stage of the first rule (b).
    pub first_b: usize,
    /// Stage of the first rule (c).
    pub first_c: usize,
    pub last_a_before_c: usize,
    pub last_b_before_c: usize,
    pub first_a_after_c: usize,
    pub first_b_after_c: usize,
    /// The letter of {a, b} whose first rule after the first (c) comes
    /// sooner.
    pub early: char,
    pub late: char,
    /// Start of the uniform run of rules directly before the late stage.
    pub run_start: usize,
    /// Relabelling from the caller's letters into the normal form.
    pub relabel: Perm,
}

impl Landmarks {
    /// Stage of the first `early` rule after the first (c).
    pub fn early_stage(&self) -> usize {
        if self.early == 'a' {
            self.first_a_after_c
        } else {
            self.first_b_after_c
        }
    }

    /// Stage of the first `late` rule after the first (c).
    pub fn late_stage(&self) -> usize {
        if self.late == 'a' {
            self.first_a_after_c
        } else {
            self.first_b_after_c
        }
    }

    /// Stage of the last `late` rule before the first (c).
    pub fn last_late_before_c(&self) -> usize {
        if self.late == 'a' {
            self.last_a_before_c
        } else {
            self.last_b_before_c
        }
    }
}

/// Landmark stages of an Arnoux-Rauzy directive (three letters).
pub fn landmarks(directive: &Directive) -> Result<Landmarks> {
    directive.ensure_ar()?;
    landmarks_relaxed(directive)
}

/// Landmark computation shared with episturmian directives, where validity
/// of the needed stages has been established by the caller.
pub(crate) fn landmarks_relaxed(directive: &Directive) -> Result<Landmarks> {
    if directive.alphabet.len() != 3 {
        return Err(Error::InvalidDirective(
            "landmarks are defined over three rule letters".into(),
        ));
    }
    let (norm, relabel) = normalize(directive)?;
    let find_from = |start: usize, letter: char| -> Result<usize> {
        let horizon = norm.prefix.len() + 2 * norm.period.len() + start;
        (start..=horizon)
            .find(|&k| norm.rule(k) == letter)
            .ok_or_else(|| Error::InvalidDirective(format!("rule ({letter}) never occurs")))
    };
    let first_b = find_from(0, 'b')?;
    let first_c = find_from(0, 'c')?;
    debug_assert!(norm.rule(0) == 'a' && first_b < first_c);
    let last_before = |letter: char| (0..first_c).rev().find(|&k| norm.rule(k) == letter);
    let last_a_before_c = last_before('a').expect("rule at stage 0 is (a)");
    let last_b_before_c = last_before('b').expect("first (b) precedes first (c)");
    let first_a_after_c = find_from(first_c + 1, 'a')?;
    let first_b_after_c = find_from(first_c + 1, 'b')?;
    let (early, late) = if first_a_after_c < first_b_after_c {
        ('a', 'b')
    } else {
        ('b', 'a')
    };
    let late_stage = first_a_after_c.max(first_b_after_c);
    // uniform run of identical rules directly before the late stage
    let run_letter = norm.rule(late_stage - 1);
    let mut run_start = late_stage - 1;
    while run_start > 0 && norm.rule(run_start - 1) == run_letter {
        run_start -= 1;
    }
    Ok(Landmarks {
        first_b,
        first_c,
        last_a_before_c,
        last_b_before_c,
        first_a_after_c,
        first_b_after_c,
        early,
        late,
        run_start,
        relabel,
    })
}

/// Which of the three words a stage appends, by length rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Short,
    Middle,
    Long,
}

/// The stage-`k` standard words renamed by length, together with the letter
/// identity of each and the kind of step taken at stage `k`. Up to the
/// first rule (b) the lengths tie, and the conventional assignment is used.
/// Letters and words are reported in the caller's alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LmsTriple {
    pub stage: usize,
    pub short: (char, Word),
    pub middle: (char, Word),
    pub long: (char, Word),
    pub step: StepKind,
}

fn lms_letters(norm: &Directive, k: usize, first_b: usize, state: &ArState) -> [char; 3] {
    if k == 0 {
        return ['c', 'b', 'a'];
    }
    if k <= first_b {
        return ['a', 'c', 'b'];
    }
    let mut by_len: Vec<char> = norm.alphabet.letters().to_vec();
    by_len.sort_by_key(|&c| state.word_of(c).expect("alphabet letter").len());
    debug_assert!({
        let lens: BTreeSet<usize> = state.words.iter().map(|(_, w)| w.len()).collect();
        lens.len() == 3
    });
    [by_len[0], by_len[1], by_len[2]]
}

fn classify_step(norm: &Directive, k: usize, first_b: usize, first_c: usize) -> StepKind {
    let rule = norm.rule(k);
    if k >= 1 && norm.rule(k - 1) == rule {
        return StepKind::Short;
    }
    if k == 0 || k == first_b || k == first_c {
        return StepKind::Long;
    }
    // a run of a second letter, preceded by a third distinct letter, makes
    // the long word the one appended
    let second = norm.rule(k - 1);
    let mut j = k - 1;
    while j > 0 && norm.rule(j - 1) == second {
        j -= 1;
    }
    debug_assert!(j > 0, "all-second prefixes are the first_b case");
    let third = norm.rule(j - 1);
    if third != rule && third != second {
        StepKind::Long
    } else {
        StepKind::Middle
    }
}

/// Length-ranked renaming at stage `k` with the classification of the step
/// taken there.
pub fn lms(directive: &Directive, k: usize) -> Result<LmsTriple> {
    directive.ensure_ar()?;
    if directive.alphabet.len() != 3 {
        return Err(Error::InvalidDirective(
            "length renaming is defined over three rule letters".into(),
        ));
    }
    let lm = landmarks(directive)?;
    let (norm, _) = normalize(directive)?;
    let state = evolve(&norm, k)?;
    let [s, m, l] = lms_letters(&norm, k, lm.first_b, &state);
    let step = classify_step(&norm, k, lm.first_b, lm.first_c);
    let back = lm.relabel.inverse();
    let entry = |c: char| -> Result<(char, Word)> {
        Ok((back.apply(c)?, back.apply_word(state.word_of(c)?)?))
    };
    Ok(LmsTriple {
        stage: k,
        short: entry(s)?,
        middle: entry(m)?,
        long: entry(l)?,
        step,
    })
}

/// The smallest length from which no factor of the language can cluster for
/// any order and permutation: the length of the bispecial at the last late
/// rule before the first (c), plus the longer of the (c)-word and the
/// early-letter word one stage past the late stage, plus one.
pub fn non_clustering_bound(directive: &Directive) -> Result<usize> {
    let lm = landmarks(directive)?;
    let (norm, _) = normalize(directive)?;
    let at_late = evolve(&norm, lm.late_stage() + 1)?;
    let w_late = evolve(&norm, lm.last_late_before_c())?.bispecial;
    let c_len = at_late.word_of('c')?.len();
    let x_len = at_late.word_of(lm.early)?.len();
    Ok(w_late.len() + c_len.max(x_len) + 1)
}

/// Threshold test for clustering of the stage-`p` standard word of
/// `letter`: the late letter's words cluster up to the early stage, the
/// early letter's and the (c)-words up to the late stage.
pub fn standard_clusters(directive: &Directive, letter: char, p: usize) -> Result<bool> {
    let lm = landmarks(directive)?;
    let normalized = lm.relabel.apply(letter)?;
    Ok(if normalized == lm.late {
        p <= lm.early_stage()
    } else {
        p <= lm.late_stage()
    })
}

/// Subsequence criterion for clustering of standard words, evaluated on the
/// rule prefix `D_p` followed by the word's letter, with no normal-form
/// assumption.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiddleReport {
    pub clusters: bool,
    /// Letters usable as the middle of a perfect clustering order.
    pub middles: Vec<char>,
    /// The orders for which the word clusters perfectly; it clusters for no
    /// other order.
    pub perfect_orders: Vec<Alphabet>,
}

/// A standard word clusters exactly when some letter z' never precedes (at
/// increasing indices in `D_p · letter`) both of the other two letters;
/// such a z' can serve as the middle letter of a perfect clustering order.
pub fn middle_letter_criterion(directive: &Directive, letter: char, p: usize) -> Result<MiddleReport> {
    directive.ensure_ar()?;
    if directive.alphabet.len() != 3 {
        return Err(Error::InvalidDirective(
            "the middle-letter criterion is defined over three rule letters".into(),
        ));
    }
    directive.alphabet.rank(letter)?;
    let word = directive.rules(p).concat(&Word::new([letter]));
    let letters = directive.alphabet.letters();
    let mut middles = Vec::new();
    for &candidate in letters {
        let others: Vec<char> = letters.iter().copied().filter(|&c| c != candidate).collect();
        let ls = word.letters();
        let admissible = (0..ls.len()).all(|i| {
            if ls[i] != candidate {
                return true;
            }
            let later: BTreeSet<char> = ls[i + 1..]
                .iter()
                .copied()
                .filter(|c| others.contains(c))
                .collect();
            later.len() < 2
        });
        if admissible {
            middles.push(candidate);
        }
    }
    let mut perfect_orders = Vec::new();
    for &m in &middles {
        let others: Vec<char> = letters.iter().copied().filter(|&c| c != m).collect();
        perfect_orders.push(Alphabet::new([others[0], m, others[1]])?);
        perfect_orders.push(Alphabet::new([others[1], m, others[0]])?);
    }
    perfect_orders.sort();
    perfect_orders.dedup();
    Ok(MiddleReport {
        clusters: !middles.is_empty(),
        middles,
        perfect_orders,
    })
}

/// The long perfectly clustering word of the language: the short word at
/// the late stage, repeated once more than the length of the uniform rule
/// run before that stage, followed by the middle word. It is primitive,
/// conjugate to a standard word, a member of the language, perfectly
/// clustering for the order that puts (c) in the middle, and shorter than
/// the non-clustering bound.
pub fn long_clustering_word(directive: &Directive) -> Result<Word> {
    let lm = landmarks(directive)?;
    let (norm, _) = normalize(directive)?;
    let late = lm.late_stage();
    let triple = lms(&norm, late)?;
    let reps = late - lm.run_start + 1;
    let word = triple.short.1.repeat(reps).concat(&triple.middle.1);
    lm.relabel.inverse().apply_word(&word)
}

/// The four flanked copies of the bispecial at the first rule (c) whose
/// presence obstructs clustering.
pub fn obstruction_words(directive: &Directive) -> Result<Vec<Word>> {
    let lm = landmarks(directive)?;
    let (norm, _) = normalize(directive)?;
    let center = evolve(&norm, lm.first_c)?.bispecial;
    let back = lm.relabel.inverse();
    ['a', 'b']
        .iter()
        .flat_map(|&z| {
            let mut left = Word::new([z]).concat(&center);
            left = left.concat(&Word::new(['c']));
            let mut right = Word::new(['c']).concat(&center);
            right = right.concat(&Word::new([z]));
            [left, right]
        })
        .map(|w| back.apply_word(&w))
        .collect()
}

/// True iff at least three of the obstruction words occur in `w · w`, in
/// which case `w` cannot cluster for any order and permutation.
pub fn is_cluster_obstructed(w: &Word, directive: &Directive) -> Result<bool> {
    let mut gen = Generator::new(directive)?;
    if !gen.is_factor(w) {
        return Err(Error::NotAFactor(w.to_string()));
    }
    let doubled = w.concat(w);
    let hits = obstruction_words(directive)?
        .iter()
        .filter(|v| doubled.contains_factor(v))
        .count();
    Ok(hits >= 3)
}

/// Factor queries against the language of a directive, backed by standard
/// prefixes long enough to certify membership: a length-n factor occurs in
/// every factor of length n - 1 + t, where the return time t is bounded by
/// the longest standard word still labelling a circuit; a safety factor of
/// two is applied on top.
#[derive(Clone, Debug)]
pub struct Generator {
    directive: Directive,
    evolution: Evolution,
}

impl Generator {
    pub fn new(directive: &Directive) -> Result<Generator> {
        directive.ensure_epi()?;
        Ok(Generator {
            directive: directive.clone(),
            evolution: Evolution::new(directive),
        })
    }

    pub fn directive(&self) -> &Directive {
        &self.directive
    }

    /// A standard prefix of the limit word guaranteed to contain every
    /// factor of length `n`.
    ///
    /// Return times of length-n factors reduce to those of their singular
    /// words, and the return time of a singular word is only settled at the
    /// stage where its letter's rule next recurs. The horizon therefore
    /// runs from the first stage whose bispecial covers n until every
    /// still-recurring letter has had a rule once more; the longest
    /// standard word one step past that horizon bounds all the return
    /// times involved.
    pub fn sample_for(&mut self, n: usize) -> Word {
        let n = n.max(1);
        let mut probe = Evolution::new(&self.directive);
        while probe.bispecial().len() < n {
            probe.step();
        }
        let mut missing = self.directive.letters_from(probe.stage());
        while !missing.is_empty() {
            missing.remove(&self.directive.rule(probe.stage()));
            probe.step();
        }
        let return_bound = probe.longest_len();
        let target = 2 * (n - 1 + return_bound);
        while self.evolution.bispecial().len() < target {
            self.evolution.step();
        }
        self.evolution.bispecial().clone()
    }

    pub fn is_factor(&mut self, w: &Word) -> bool {
        if w.is_empty() {
            return true;
        }
        self.sample_for(w.len()).contains_factor(w)
    }

    /// All distinct factors of length `n`, in lexicographic order.
    pub fn factors(&mut self, n: usize) -> BTreeSet<Word> {
        if n == 0 {
            return [Word::empty()].into();
        }
        let sample = self.sample_for(n);
        (0..=sample.len().saturating_sub(n))
            .map(|i| sample.factor(i, n))
            .collect()
    }

    pub fn complexity(&mut self, n: usize) -> usize {
        self.factors(n).len()
    }
}

/// Membership of `w` in the language of the directive.
pub fn is_factor(directive: &Directive, w: &Word) -> Result<bool> {
    Ok(Generator::new(directive)?.is_factor(w))
}

/// Inserts a single b in the middle of each occurrence of aa and of ab.
pub fn insert_middle_b(w: &Word) -> Word {
    let ls = w.letters();
    let mut out = Vec::with_capacity(ls.len() * 2);
    for (i, &c) in ls.iter().enumerate() {
        out.push(c);
        if c == 'a' && i + 1 < ls.len() && (ls[i + 1] == 'a' || ls[i + 1] == 'b') {
            out.push('b');
        }
    }
    Word::new(out)
}

/// Builds the palindromic perfectly clustering word seeded by a word over
/// {a, c} containing both letters: apply the prefixing morphisms of the
/// seed to the letter b, insert middle b's, and rotate the final b to the
/// front. Seeds beginning with c are handled by exchanging a and c
/// throughout. The result is a primitive palindrome, begins and ends with
/// b, clusters perfectly for a < b < c, and is not in the range of any of
/// the six elementary morphisms.
pub fn build_palindromic(seed: &Word) -> Result<Word> {
    let support = seed.support();
    if support != ['a', 'c'] {
        return Err(Error::InvalidDirective(format!(
            "seed {seed} must contain both a and c, and nothing else"
        )));
    }
    let swap = seed.letters()[0] == 'c';
    let exchange = Perm::new([('a', 'c'), ('c', 'a'), ('b', 'b')])?;
    let seed = if swap { exchange.apply_word(seed)? } else { seed.clone() };
    let mut image = Word::new(['b']);
    for &c in seed.letters().iter().rev() {
        image = Morphism::before(c).apply(&image);
    }
    let inserted = insert_middle_b(&image);
    debug_assert_eq!(inserted.letters().last(), Some(&'b'));
    let rotated = Word::new(['b']).concat(&inserted.factor(0, inserted.len() - 1));
    if swap {
        exchange.apply_word(&rotated)
    } else {
        Ok(rotated)
    }
}

/// Image of a palindromic clustering word under the prefixing morphisms of
/// a word over {a, c} (possibly empty). The result clusters perfectly for
/// a < b < c and no proper conjugate of it is a factor of any language
/// generated by the rules.
pub fn extend_palindromic(wrapper: &Word, base: &Word) -> Result<Word> {
    if wrapper.letters().iter().any(|&c| c != 'a' && c != 'c') {
        return Err(Error::InvalidDirective(format!(
            "wrapper {wrapper} must use only a and c"
        )));
    }
    let mut out = base.clone();
    for &c in wrapper.letters().iter().rev() {
        out = Morphism::before(c).apply(&out);
    }
    Ok(out)
}

/// Every factor of length at most `max_len` with at least one clustering
/// certificate, in (length, lexicographic) order.
pub fn census(directive: &Directive, max_len: usize) -> Result<Vec<(Word, Vec<Certificate>)>> {
    directive.ensure_ar()?;
    if max_len > CENSUS_CAP {
        return Err(Error::CapExceeded(max_len, CENSUS_CAP));
    }
    let mut gen = Generator::new(directive)?;
    let mut out = Vec::new();
    for n in 1..=max_len {
        for f in gen.factors(n) {
            let certs = clusters_any(&f, &directive.alphabet)?;
            if !certs.is_empty() {
                out.push((f, certs));
            }
        }
    }
    Ok(out)
}
