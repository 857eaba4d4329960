//! Burrows-Wheeler clustering of finite words and the combinatorics behind
//! it: the direct transform, the bispecial order-condition criterion, and
//! generation and analysis of Arnoux-Rauzy, Sturmian, episturmian and
//! r-Bonacci languages (landmark stages, non-clustering length bounds,
//! extremal clustering words, conjugacy-to-standard decision).
//!
//! The main entry points:
//!
//! - [`bwt::bwt`] and [`bwt::clustering_certificates`] for transform-based
//!   clustering detection,
//! - [`criterion::clustering_by_criterion`] for the equivalent bispecial
//!   order-condition test,
//! - [`ar`] for three-letter Arnoux-Rauzy machinery (rule evolution,
//!   landmark stages, the non-clustering bound, census),
//! - [`epi`] for Sturmian, episturmian and larger-alphabet variants,
//! - [`suites`] for the exhaustive cross-checks exposed by the CLI.

pub mod ar;
pub mod bwt;
pub mod criterion;
pub mod epi;
pub mod language;
pub mod morphism;
pub mod suites;
pub mod words;

/// Errors across the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty input")]
    EmptyWord,
    #[error("empty alphabet")]
    EmptyAlphabet,
    #[error("duplicate letter {0:?} in alphabet")]
    DuplicateLetter(char),
    #[error("letter {0:?} not in alphabet {1}")]
    LetterNotInAlphabet(char, String),
    #[error("letter {0:?} not in permutation domain")]
    LetterNotInPermutation(char),
    #[error("not a bijection on the alphabet")]
    BadPermutation,
    #[error("alphabet of {0} letters is too large for an exhaustive sweep")]
    AlphabetTooLarge(usize),
    #[error("{0} is not a factor of the language")]
    NotAFactor(String),
    #[error("{0} is not bispecial in the language")]
    NotBispecial(String),
    #[error("insufficient sample: {0} occurs fewer than three times")]
    InsufficientSample(String),
    #[error("word is not primitive; apply the operation to its primitive root")]
    NotPrimitive,
    #[error("language is not closed under reversal")]
    NotReversalClosed,
    #[error("invalid directive word: {0}")]
    InvalidDirective(String),
    #[error("no finite bound applies: the language has infinitely many clustering words")]
    NoFiniteBound,
    #[error("requested bound {0} exceeds the supported cap {1}")]
    CapExceeded(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
