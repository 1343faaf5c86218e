//! Braid and singular-braid words, the combinatorics of their closures, and Markov moves.

mod closure;
mod markov;
mod word;

pub use closure::{closure_components, component_labels, components, is_pure, linking_number, permutation};
pub use markov::{
    apply_markov, band_generator, pure_lcs_element, random_markov_walk, random_markov_walk_with,
    seeded_rng, MarkovMove, WalkLimits,
};
pub use word::{BraidLetter, BraidWord, LetterKind};
