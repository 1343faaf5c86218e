use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::word::{BraidLetter, BraidWord, LetterKind};
use crate::error::BraidError;

/// The moves generating Markov equivalence of closed braids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MarkovMove {
    /// `w ↦ g^{-1} w g` for `g = σ_index^{±1}` (`inverse` selects `σ_index^{-1}`), freely reduced.
    Conjugate { index: usize, inverse: bool },
    /// `w ∈ B_n ↦ w σ_n^{±1} ∈ B_{n+1}`.
    Stabilize { positive: bool },
    /// Inverse of stabilization: drops a final `σ_{n-1}^{±1}` that is the only letter on strand `n`.
    Destabilize,
}

pub fn apply_markov(w: &BraidWord, m: MarkovMove) -> Result<BraidWord, BraidError> {
    match m {
        MarkovMove::Conjugate { index, inverse } => {
            let g = if inverse { BraidLetter::neg(index) } else { BraidLetter::pos(index) };
            let g_inv = g.inverse().expect("crossing letters are invertible");
            let mut letters = Vec::with_capacity(w.len() + 2);
            letters.push(g_inv);
            letters.extend_from_slice(w.letters());
            letters.push(g);
            Ok(BraidWord::new(w.strands(), letters)?.free_reduce())
        }
        MarkovMove::Stabilize { positive } => {
            let n = w.strands();
            let mut letters = w.letters().to_vec();
            letters.push(if positive { BraidLetter::pos(n) } else { BraidLetter::neg(n) });
            BraidWord::new(n + 1, letters)
        }
        MarkovMove::Destabilize => {
            let n = w.strands();
            if n < 2 {
                return Err(BraidError::InvalidDestabilization("single strand"));
            }
            let (last, rest) = w
                .letters()
                .split_last()
                .ok_or(BraidError::InvalidDestabilization("empty word"))?;
            if last.index != n - 1 || last.kind == LetterKind::Singular {
                return Err(BraidError::InvalidDestabilization("word must end in σ_(n-1)^±1"));
            }
            if rest.iter().any(|l| l.index == n - 1) {
                return Err(BraidError::InvalidDestabilization("σ_(n-1) occurs elsewhere"));
            }
            BraidWord::new(n - 1, rest.to_vec())
        }
    }
}

/// Bounds for [`random_markov_walk`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkLimits {
    pub max_strands: usize,
    pub max_len: usize,
}

impl Default for WalkLimits {
    fn default() -> Self {
        Self { max_strands: 8, max_len: 64 }
    }
}

/// The generator behind every seeded routine: ChaCha8 keyed by `seed_from_u64(seed)`.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn candidate_moves(w: &BraidWord, limits: &WalkLimits) -> Vec<MarkovMove> {
    let n = w.strands();
    let mut moves = Vec::new();
    if n >= 2 && w.len() + 2 <= limits.max_len {
        for index in 1..n {
            moves.push(MarkovMove::Conjugate { index, inverse: false });
            moves.push(MarkovMove::Conjugate { index, inverse: true });
        }
    }
    // Conjugating by the first letter rotates it to the end.
    if let Some(first) = w.letters().first().filter(|l| !l.is_singular()) {
        moves.push(MarkovMove::Conjugate {
            index: first.index,
            inverse: first.kind == LetterKind::Negative,
        });
    }
    if n < limits.max_strands && w.len() < limits.max_len {
        moves.push(MarkovMove::Stabilize { positive: true });
        moves.push(MarkovMove::Stabilize { positive: false });
    }
    if apply_markov(w, MarkovMove::Destabilize).is_ok() {
        // weighted so walks do not drift to the strand cap
        moves.extend([MarkovMove::Destabilize; 3]);
    }
    moves
}

pub fn random_markov_walk(w: &BraidWord, steps: usize, seed: u64) -> BraidWord {
    random_markov_walk_with(w, steps, seed, &WalkLimits::default())
}

/// A seeded random sequence of Markov moves. Moves that would exceed `limits` are never drawn;
/// the input is returned unchanged when `steps == 0`.
pub fn random_markov_walk_with(w: &BraidWord, steps: usize, seed: u64, limits: &WalkLimits) -> BraidWord {
    let mut rng = seeded_rng(seed);
    let mut cur = w.clone();
    for _ in 0..steps {
        let moves = candidate_moves(&cur, limits);
        let Some(&m) = moves.choose(&mut rng) else { break };
        cur = apply_markov(&cur, m).expect("candidate moves are valid");
    }
    cur
}

/// `A_{ij} = X σ_i^2 X^{-1}` with `X = σ_{j-1} ⋯ σ_{i+1}`, the standard generators of the pure braid group.
pub fn band_generator(n: usize, i: usize, j: usize) -> Result<BraidWord, BraidError> {
    if !(1 <= i && i < j && j <= n) {
        return Err(BraidError::InvalidParameters("band generator needs 1 <= i < j <= n"));
    }
    let x: Vec<BraidLetter> = (i + 1..j).rev().map(BraidLetter::pos).collect();
    let mut letters = x.clone();
    letters.push(BraidLetter::pos(i));
    letters.push(BraidLetter::pos(i));
    letters.extend(x.iter().rev().map(|l| l.inverse().expect("crossing")));
    BraidWord::new(n, letters)
}

fn commutator(a: &BraidWord, b: &BraidWord) -> BraidWord {
    let a_inv = a.inverse().expect("pure braid words have no double points");
    let b_inv = b.inverse().expect("pure braid words have no double points");
    a.concat(b)
        .and_then(|x| x.concat(&a_inv))
        .and_then(|x| x.concat(&b_inv))
        .expect("same strand count")
        .free_reduce()
}

/// An element of the `k`-th lower central series term of the pure braid group `P_n`
/// (`P^1 = P_n`, `P^k = [P_n, P^{k-1}]`): the left-normed commutator
/// `[[A_1, A_2], …, A_k]` of seeded random band generators, consecutive ones distinct.
pub fn pure_lcs_element(n: usize, k: usize, seed: u64) -> Result<BraidWord, BraidError> {
    if n < 3 || k < 1 {
        return Err(BraidError::InvalidParameters("pure_lcs_element needs n >= 3 and k >= 1"));
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut rng = seeded_rng(seed);
    let mut prev = pairs[rng.random_range(0..pairs.len())];
    let mut acc = band_generator(n, prev.0, prev.1)?;
    for _ in 1..k {
        let next = loop {
            let cand = pairs[rng.random_range(0..pairs.len())];
            if cand != prev {
                break cand;
            }
        };
        acc = commutator(&acc, &band_generator(n, next.0, next.1)?);
        prev = next;
    }
    Ok(acc)
}
