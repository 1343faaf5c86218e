//! Power-series expansion of trace invariants at `q = e^x`, finite-type invariants of singular
//! braids, the order-2 invariant `v2`, and chord-diagram weight systems.

mod chord;

use std::collections::HashMap;

pub use chord::{
    enumerate_configurations, four_term_relations, weight_space_dimension, weight_space_dimension_dense,
    ChordDiagram, WeightSystemSpace, CHORD_ORDER_CAP,
};

use crate::algebra::TruncSeries;
use crate::braid::{closure_components, components, linking_number, BraidWord, LetterKind};
use crate::error::InvariantError;
use crate::rmatrix::{normalized_trace_invariant, EnhancedRMatrix};
use crate::skein::first_bad_crossing;

pub const DEFAULT_ORDER: usize = 8;

/// Normalized trace invariant with `q = e^x`, through `x^order`.
pub fn expand_invariant(w: &BraidWord, e: &EnhancedRMatrix, order: usize) -> Result<TruncSeries, InvariantError> {
    Ok(normalized_trace_invariant(w, e)?.expand(order))
}

/// Smallest `t` with a nonzero `x^t` coefficient, or `order + 1` if the series vanishes through `x^order`.
pub fn vanishing_order(w: &BraidWord, e: &EnhancedRMatrix, order: usize) -> Result<usize, InvariantError> {
    let singular = w.singular_count();
    if order < singular {
        return Err(InvariantError::OrderTooLow { order, singular });
    }
    Ok(expand_invariant(w, e, order)?.valuation().unwrap_or(order + 1))
}

/// Extends `f` from ordinary words to singular ones by `τ ↦ σ - σ^{-1}`: the signed sum over all
/// `2^j` resolutions.
pub fn singular_extension<F>(w: &BraidWord, order: usize, mut f: F) -> Result<TruncSeries, InvariantError>
where
    F: FnMut(&BraidWord) -> Result<TruncSeries, InvariantError>,
{
    let positions = w.singular_positions();
    let mut total = TruncSeries::zero(order);
    for mask in 0u64..(1u64 << positions.len()) {
        let mut r = w.clone();
        for (bit, &pos) in positions.iter().enumerate() {
            r = r.resolve(pos, mask & (1 << bit) == 0)?;
        }
        let v = f(&r)?.truncate(order);
        total = if mask.count_ones() % 2 == 0 { &total + &v } else { &total - &v };
    }
    Ok(total)
}

/// `u(resolve(w, p, +)) - u(resolve(w, p, -))` against the expansion of `w` itself, for a double point at `p`.
pub fn crossing_change_consistent(
    w: &BraidWord,
    pos: usize,
    e: &EnhancedRMatrix,
    order: usize,
) -> Result<bool, InvariantError> {
    let plus = expand_invariant(&w.resolve(pos, true)?, e, order)?;
    let minus = expand_invariant(&w.resolve(pos, false)?, e, order)?;
    Ok(&plus - &minus == expand_invariant(w, e, order)?)
}

/// Memoized `v2` via the skein traversal: `v2(K_+) - v2(K_-) = Lk(K_0)`, zero on descending diagrams.
#[derive(Debug, Default, Clone)]
pub struct V2Evaluator {
    memo: HashMap<BraidWord, i64>,
}

impl V2Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn evaluate(&mut self, w: &BraidWord) -> Result<i64, InvariantError> {
        if w.singular_count() > 0 {
            return Err(InvariantError::SingularLetter);
        }
        let mu = closure_components(w);
        if mu != 1 {
            return Err(InvariantError::NotAKnot(mu));
        }
        self.eval_reduced(&w.free_reduce())
    }

    fn eval_reduced(&mut self, w: &BraidWord) -> Result<i64, InvariantError> {
        if let Some(&v) = self.memo.get(w) {
            return Ok(v);
        }
        let value = match first_bad_crossing(w)? {
            None => 0,
            Some(pos) => {
                let switched = w.switch(pos)?.free_reduce();
                let smoothed = w.smooth(pos)?;
                let ids = components(&smoothed);
                let lk = linking_number(&smoothed, ids[0], ids[1])?;
                let below = self.eval_reduced(&switched)?;
                match w.letters()[pos].kind {
                    LetterKind::Positive => below + lk,
                    _ => below - lk,
                }
            }
        };
        self.memo.insert(w.clone(), value);
        Ok(value)
    }
}

pub fn v2(w: &BraidWord) -> Result<i64, InvariantError> {
    V2Evaluator::new().evaluate(w)
}
