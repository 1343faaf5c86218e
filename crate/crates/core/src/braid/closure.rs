//! Combinatorics of the closed braid: the underlying permutation, components and linking numbers.

use super::word::{BraidWord, LetterKind};
use crate::error::BraidError;

/// `perm[s]` is the bottom position (0-based) reached by the strand starting at top position `s`.
/// Every letter, double points included, transposes the two positions it acts on.
pub fn permutation(w: &BraidWord) -> Vec<usize> {
    let n = w.strands();
    let mut at: Vec<usize> = (0..n).collect();
    for l in w.letters() {
        at.swap(l.index - 1, l.index);
    }
    let mut perm = vec![0; n];
    for (pos, &strand) in at.iter().enumerate() {
        perm[strand] = pos;
    }
    perm
}

pub fn is_pure(w: &BraidWord) -> bool {
    permutation(w).iter().enumerate().all(|(i, &p)| i == p)
}

/// Component id of each top position: the smallest 1-based strand index on its cycle.
pub fn component_labels(w: &BraidWord) -> Vec<usize> {
    let perm = permutation(w);
    let n = perm.len();
    let mut label = vec![0; n];
    for start in 0..n {
        if label[start] != 0 {
            continue;
        }
        let mut p = start;
        loop {
            label[p] = start + 1;
            p = perm[p];
            if p == start {
                break;
            }
        }
    }
    label
}

/// Component ids in increasing order.
pub fn components(w: &BraidWord) -> Vec<usize> {
    let mut ids = component_labels(w);
    ids.sort_unstable();
    ids.dedup();
    ids
}

pub fn closure_components(w: &BraidWord) -> usize {
    components(w).len()
}

/// Linking number of components `a` and `b` (ids as in [`component_labels`]): half the signed
/// count of crossings between them.
pub fn linking_number(w: &BraidWord, a: usize, b: usize) -> Result<i64, BraidError> {
    if a == b {
        return Err(BraidError::SameComponent);
    }
    let labels = component_labels(w);
    for c in [a, b] {
        if !labels.contains(&c) {
            return Err(BraidError::NoSuchComponent(c));
        }
    }
    let mut at: Vec<usize> = (0..w.strands()).collect();
    let mut total = 0i64;
    for l in w.letters() {
        let (x, y) = (labels[at[l.index - 1]], labels[at[l.index]]);
        if (x == a && y == b) || (x == b && y == a) {
            match l.kind {
                LetterKind::Positive => total += 1,
                LetterKind::Negative => total -= 1,
                LetterKind::Singular => {
                    return Err(BraidError::InvalidParameters(
                        "double point between the two components",
                    ))
                }
            }
        }
        at.swap(l.index - 1, l.index);
    }
    debug_assert!(total % 2 == 0, "crossings between two closed components come in pairs");
    Ok(total / 2)
}
