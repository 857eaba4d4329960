//! The circular language of a word (all factors of its infinite repetition)
//! and generic finite-language queries: factors, extensions, bispecial and
//! singular words, Rauzy graphs, complexity, return times.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::words::{Alphabet, Word};
use crate::{Error, Result};

/// The language of all factors of `base` repeated forever. Everything is
/// driven by the primitive root, which generates the same language.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularLanguage {
    base: Word,
    root: Word,
}

impl CircularLanguage {
    pub fn new(base: Word) -> Result<Self> {
        let (root, _) = base.primitive_root()?;
        Ok(CircularLanguage { base, root })
    }

    pub fn base(&self) -> &Word {
        &self.base
    }

    pub fn root(&self) -> &Word {
        &self.root
    }

    /// A repetition of the root covering every length-`n` window.
    fn stream(&self, n: usize) -> Word {
        let reps = n / self.root.len() + 2;
        self.root.repeat(reps)
    }

    /// All distinct factors of length `n`.
    pub fn factors(&self, n: usize) -> BTreeSet<Word> {
        if n == 0 {
            return [Word::empty()].into();
        }
        let s = self.stream(n);
        (0..self.root.len()).map(|i| s.factor(i, n)).collect()
    }

    pub fn complexity(&self, n: usize) -> usize {
        self.factors(n).len()
    }

    pub fn contains(&self, v: &Word) -> bool {
        v.is_empty() || self.factors(v.len()).contains(v)
    }

    /// All pairs (x, y) with x·v·y in the language.
    pub fn extension_pairs(&self, v: &Word) -> Result<BTreeSet<(char, char)>> {
        if !self.contains(v) {
            return Err(Error::NotAFactor(v.to_string()));
        }
        let n = v.len() + 2;
        let s = self.stream(n);
        let mut pairs = BTreeSet::new();
        for i in 0..self.root.len() {
            let window = s.factor(i, n);
            if window.factor(1, v.len()) == *v {
                pairs.insert((window.letters()[0], window.letters()[n - 1]));
            }
        }
        Ok(pairs)
    }

    pub fn extension_graph(&self, v: &Word) -> Result<ExtensionGraph> {
        Ok(ExtensionGraph {
            center: v.clone(),
            pairs: self.extension_pairs(v)?,
        })
    }

    /// All bispecial factors with their resolutions, in (length, lex) order.
    ///
    /// Bispecial words live among the factors of root·root of length at most
    /// |root| - 2, so the search is capped there.
    pub fn bispecial_resolutions(&self) -> Vec<ExtensionGraph> {
        let root_len = self.root.len();
        if root_len < 2 {
            return Vec::new();
        }
        let cap = root_len - 2;
        let mut out = Vec::new();
        for len in 0..=cap {
            let s = self.stream(len + 2);
            let mut by_center: BTreeMap<Word, BTreeSet<(char, char)>> = BTreeMap::new();
            for i in 0..root_len {
                let window = s.factor(i, len + 2);
                by_center
                    .entry(window.factor(1, len))
                    .or_default()
                    .insert((window.letters()[0], window.letters()[len + 1]));
            }
            for (center, pairs) in by_center {
                let lefts: BTreeSet<char> = pairs.iter().map(|&(x, _)| x).collect();
                let rights: BTreeSet<char> = pairs.iter().map(|&(_, y)| y).collect();
                if lefts.len() >= 2 && rights.len() >= 2 {
                    out.push(ExtensionGraph { center, pairs });
                }
            }
        }
        out
    }

    pub fn bispecials(&self) -> Vec<Word> {
        self.bispecial_resolutions()
            .into_iter()
            .map(|g| g.center)
            .collect()
    }

    /// Closure under reversal, decided at depth |root|: the length-|root|
    /// factors are the conjugates, whose reversal-closure forces the reverse
    /// of the root to be one of its conjugates; all longer factors of the
    /// repetition are determined by the conjugates, so closure propagates.
    pub fn is_closed_under_reversal(&self) -> bool {
        self.is_closed_under_reversal_at(self.root.len())
    }

    /// Reversal-closure check at an explicit depth.
    pub fn is_closed_under_reversal_at(&self, depth: usize) -> bool {
        let fs = self.factors(depth);
        fs.iter().all(|f| fs.contains(&f.reversed()))
    }

    pub fn rauzy_graph(&self, n: usize) -> RauzyGraph {
        RauzyGraph::from_factors(n, self.factors(n), &self.factors(n + 1))
    }

    /// All singular words of length at most `max_len`: factors x·v·y such
    /// that some x'·v·y and some x·v·y' with x' ≠ x, y' ≠ y also occur.
    pub fn singular_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for len in 2..=max_len {
            let fs: Vec<Word> = self.factors(len).into_iter().collect();
            for f in &fs {
                let (x, y) = (f.letters()[0], f.letters()[len - 1]);
                let mid = f.factor(1, len - 2);
                let left_varies = fs.iter().any(|g| {
                    g.letters()[0] != x && g.letters()[len - 1] == y && g.factor(1, len - 2) == mid
                });
                let right_varies = fs.iter().any(|g| {
                    g.letters()[0] == x && g.letters()[len - 1] != y && g.factor(1, len - 2) == mid
                });
                if left_varies && right_varies {
                    out.push(f.clone());
                }
            }
        }
        out
    }

    /// The alphabet of letters occurring in the language, in natural order.
    pub fn support(&self) -> Result<Alphabet> {
        Alphabet::new(self.root.support())
    }
}

/// The bipartite extension graph of a factor: left letters against right
/// letters, one edge per two-sided extension in the language.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionGraph {
    pub center: Word,
    pub pairs: BTreeSet<(char, char)>,
}

impl ExtensionGraph {
    pub fn left_letters(&self) -> BTreeSet<char> {
        self.pairs.iter().map(|&(x, _)| x).collect()
    }

    pub fn right_letters(&self) -> BTreeSet<char> {
        self.pairs.iter().map(|&(_, y)| y).collect()
    }

    pub fn is_bispecial(&self) -> bool {
        self.left_letters().len() >= 2 && self.right_letters().len() >= 2
    }
}

/// Rauzy graph of a given length: vertices are the factors of that length
/// (in lexicographic order), with an edge a·v -> v·b labelled b whenever
/// a·v·b is in the language.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RauzyGraph {
    pub length: usize,
    pub vertices: Vec<Word>,
    /// (from, to, label) with vertex indices.
    pub edges: Vec<(usize, usize, char)>,
}

impl RauzyGraph {
    /// Graph of the length-`n` factors with edges induced by the
    /// length-`n + 1` factors, usable for any factorial language.
    pub fn from_factors(n: usize, vertices: BTreeSet<Word>, longer: &BTreeSet<Word>) -> RauzyGraph {
        let vertices: Vec<Word> = vertices.into_iter().collect();
        let index: BTreeMap<&Word, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut edges = BTreeSet::new();
        for f in longer {
            let from = f.factor(0, n);
            let to = f.factor(1, n);
            let label = f.letters()[n];
            edges.insert((index[&from], index[&to], label));
        }
        RauzyGraph {
            length: n,
            vertices,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(f, _, _)| f == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(_, t, _)| t == v).count()
    }

    /// All elementary circuits (simple cycles, no repeated vertex), each
    /// reported once starting from its smallest vertex index.
    pub fn elementary_circuits(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut adj = vec![BTreeSet::new(); n];
        for &(f, t, _) in &self.edges {
            adj[f].insert(t);
        }
        let mut cycles = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; n];
        fn dfs(
            v: usize,
            start: usize,
            adj: &[BTreeSet<usize>],
            path: &mut Vec<usize>,
            on_path: &mut [bool],
            cycles: &mut Vec<Vec<usize>>,
        ) {
            path.push(v);
            on_path[v] = true;
            for &next in &adj[v] {
                if next == start {
                    cycles.push(path.clone());
                } else if next > start && !on_path[next] {
                    dfs(next, start, adj, path, on_path, cycles);
                }
            }
            on_path[v] = false;
            path.pop();
        }
        for start in 0..n {
            dfs(start, start, &adj, &mut path, &mut on_path, &mut cycles);
        }
        cycles
    }
}

/// Maximal gap between consecutive occurrence indices of `v` in `sample`.
/// The sample must carry at least three occurrences so that the interior
/// gaps are meaningful.
pub fn max_return_time(v: &Word, sample: &Word) -> Result<usize> {
    let occ = sample.occurrences(v);
    if occ.len() < 3 {
        return Err(Error::InsufficientSample(v.to_string()));
    }
    Ok(occ.windows(2).map(|w| w[1] - w[0]).max().unwrap())
}
