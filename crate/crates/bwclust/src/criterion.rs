//! The order-condition characterization of clustering: a primitive word
//! clusters for a permutation exactly when every bispecial factor of its
//! circular language resolves compatibly with the permuted order, which is
//! the same as its extension graph having a crossing-free drawing.

use serde::{Deserialize, Serialize};

use crate::language::{CircularLanguage, ExtensionGraph};
use crate::words::{Alphabet, Perm, Word};
use crate::{Error, Result};

/// One failed instance of the order condition: extensions x·v·y and x'·v·y'
/// whose left letters compare one way under the permuted order and whose
/// right letters compare the other way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub bispecial: Word,
    pub lefts: (char, char),
    pub rights: (char, char),
}

/// Outcome of the criterion over every bispecial factor, with the first
/// witness per bispecial retained so reports stay bounded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderConditionReport {
    pub word: Word,
    pub order: Alphabet,
    pub permutation: Perm,
    pub verdict: bool,
    pub violations: Vec<Violation>,
    pub violation_count: usize,
}

fn violations_of(
    graph: &ExtensionGraph,
    order: &Alphabet,
    pi: &Perm,
    first_only: bool,
) -> Result<(Option<Violation>, usize)> {
    let inv = pi.inverse();
    let pairs: Vec<(char, char)> = graph.pairs.iter().copied().collect();
    let mut ranked = Vec::with_capacity(pairs.len());
    for &(x, y) in &pairs {
        ranked.push((order.rank(inv.apply(x)?)?, order.rank(y)?));
    }
    let mut first = None;
    let mut count = 0;
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let ((x, y), (x2, y2)) = (pairs[i], pairs[j]);
            if x == x2 || y == y2 {
                continue;
            }
            let (rx, ry) = ranked[i];
            let (rx2, ry2) = ranked[j];
            if (rx < rx2) != (ry < ry2) {
                count += 1;
                if first.is_none() {
                    first = Some(Violation {
                        bispecial: graph.center.clone(),
                        lefts: (x, x2),
                        rights: (y, y2),
                    });
                }
                if first_only {
                    return Ok((first, count));
                }
            }
        }
    }
    Ok((first, count))
}

/// Order condition for one bispecial factor `v` of the language: whenever
/// x·v·y and x'·v·y' occur with x ≠ x' and y ≠ y', the comparison of x, x'
/// under the permuted order must agree with the comparison of y, y'.
pub fn satisfies_order_condition(
    lang: &CircularLanguage,
    v: &Word,
    order: &Alphabet,
    pi: &Perm,
) -> Result<(bool, Option<Violation>)> {
    let graph = lang.extension_graph(v)?;
    if !graph.is_bispecial() {
        return Err(Error::NotBispecial(v.to_string()));
    }
    let (first, _) = violations_of(&graph, order, pi, true)?;
    Ok((first.is_none(), first))
}

/// Order condition over a precomputed resolution list, the fast path shared
/// by [`clustering_by_criterion`] and the verification suites.
pub fn order_condition_all(
    resolutions: &[ExtensionGraph],
    order: &Alphabet,
    pi: &Perm,
) -> Result<bool> {
    for graph in resolutions {
        if violations_of(graph, order, pi, true)?.0.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Full criterion verdict for `w`: the conjunction of the order condition
/// over all bispecial factors of its circular language. Non-primitive words
/// are routed through their primitive root, which bounds the bispecial
/// search at |root| - 2.
pub fn clustering_by_criterion(w: &Word, order: &Alphabet, pi: &Perm) -> Result<OrderConditionReport> {
    order.check_word(w)?;
    let lang = CircularLanguage::new(w.clone())?;
    let mut violations = Vec::new();
    let mut total = 0;
    for graph in lang.bispecial_resolutions() {
        let (first, count) = violations_of(&graph, order, pi, false)?;
        violations.extend(first);
        total += count;
    }
    Ok(OrderConditionReport {
        word: w.clone(),
        order: order.clone(),
        permutation: pi.clone(),
        verdict: violations.is_empty(),
        violations,
        violation_count: total,
    })
}

/// Crossing test for an extension graph drawn with right-extension letters
/// on a top line in `top` order and left-extension letters on a bottom line
/// in `bottom` order: true iff no two edges properly cross (shared endpoints
/// are allowed).
pub fn crossing_free(graph: &ExtensionGraph, top: &Alphabet, bottom: &Alphabet) -> Result<bool> {
    let pairs: Vec<(char, char)> = graph.pairs.iter().copied().collect();
    let mut placed = Vec::with_capacity(pairs.len());
    for &(x, y) in &pairs {
        placed.push((bottom.rank(x)?, top.rank(y)?));
    }
    for i in 0..placed.len() {
        for j in i + 1..placed.len() {
            let (bx, ty) = placed[i];
            let (bx2, ty2) = placed[j];
            if bx != bx2 && ty != ty2 && (bx < bx2) != (ty < ty2) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Split-point reversal test on a reversal-closed circular language: for
/// every conjugate u·v of `w` with u and v both non-palindromic, u compares
/// below its reverse exactly when v does.
pub fn rev_condition3(w: &Word, order: &Alphabet) -> Result<bool> {
    order.check_word(w)?;
    let lang = CircularLanguage::new(w.clone())?;
    if !lang.is_closed_under_reversal() {
        return Err(Error::NotReversalClosed);
    }
    for z in w.conjugates()? {
        for i in 1..z.len() {
            let u = z.factor(0, i);
            let v = z.factor(i, z.len() - i);
            let (ru, rv) = (u.reversed(), v.reversed());
            if u != ru && v != rv {
                let below_u = order.compare(&u, &ru)? == std::cmp::Ordering::Less;
                let below_v = order.compare(&v, &rv)? == std::cmp::Ordering::Less;
                if below_u != below_v {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
