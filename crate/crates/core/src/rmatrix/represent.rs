//! Slot-wise action of an R-matrix on `V^{⊗n}`.
//!
//! `ρ(σ_i)` is `I ⊗ ⋯ ⊗ R ⊗ ⋯ ⊗ I` with `R` on slots `i, i+1`; it is never materialized.
//! A row vector indexed by `(i_1, …, i_n)` (slot 1 most significant) is multiplied by it by
//! touching only the two slot digits, `m²` work per untouched multi-index.

use std::collections::BTreeMap;

use super::EnhancedRMatrix;
use crate::algebra::{HalfLaurent, RingMatrix};
use crate::braid::{BraidWord, LetterKind};
use crate::error::InvariantError;

/// Default bound on `m^n`.
pub const DEFAULT_DIMENSION_CAP: usize = 4096;

/// Nonzero entries of a two-slot operator, row by row.
struct SlotOperator {
    m: usize,
    rows: Vec<Vec<(usize, usize, HalfLaurent)>>,
}

impl SlotOperator {
    fn new(op: &RingMatrix, m: usize) -> Self {
        let rows = (0..m * m)
            .map(|row| {
                (0..m * m)
                    .filter(|&col| !op.get(row, col).is_zero())
                    .map(|col| (col / m, col % m, op.get(row, col).clone()))
                    .collect()
            })
            .collect();
        Self { m, rows }
    }
}

struct Operators {
    pos: SlotOperator,
    neg: SlotOperator,
    sing: SlotOperator,
}

impl Operators {
    fn new(e: &EnhancedRMatrix) -> Self {
        let m = e.rank();
        Self {
            pos: SlotOperator::new(e.r(), m),
            neg: SlotOperator::new(e.r_inv(), m),
            sing: SlotOperator::new(&e.singular_operator(), m),
        }
    }

    fn get(&self, kind: LetterKind) -> &SlotOperator {
        match kind {
            LetterKind::Positive => &self.pos,
            LetterKind::Negative => &self.neg,
            LetterKind::Singular => &self.sing,
        }
    }
}

fn dimension(m: usize, n: usize, cap: usize) -> Result<usize, InvariantError> {
    let mut dim: usize = 1;
    for _ in 0..n {
        dim = dim.saturating_mul(m);
    }
    if dim > cap {
        return Err(InvariantError::DimensionCap { dim, cap });
    }
    Ok(dim)
}

/// Strides of slots `i` and `i+1` (1-based `i`) in an `n`-slot index.
fn strides(m: usize, n: usize, i: usize) -> (usize, usize) {
    let lo = m.pow((n - i - 1) as u32);
    (lo * m, lo)
}

/// `out = v · ρ(letter)` for a dense row vector.
fn apply_dense(v: &[HalfLaurent], op: &SlotOperator, n: usize, i: usize) -> Vec<HalfLaurent> {
    let m = op.m;
    let (sa, sb) = strides(m, n, i);
    let mut out = vec![HalfLaurent::zero(); v.len()];
    for (idx, val) in v.iter().enumerate() {
        if val.is_zero() {
            continue;
        }
        let a = (idx / sa) % m;
        let b = (idx / sb) % m;
        let base = idx - a * sa - b * sb;
        for (c, d, coef) in &op.rows[a * m + b] {
            out[base + c * sa + d * sb] += &(val * coef);
        }
    }
    out
}

fn apply_sparse(
    v: &BTreeMap<usize, HalfLaurent>,
    op: &SlotOperator,
    n: usize,
    i: usize,
) -> BTreeMap<usize, HalfLaurent> {
    let m = op.m;
    let (sa, sb) = strides(m, n, i);
    let mut out: BTreeMap<usize, HalfLaurent> = BTreeMap::new();
    for (&idx, val) in v {
        let a = (idx / sa) % m;
        let b = (idx / sb) % m;
        let base = idx - a * sa - b * sb;
        for (c, d, coef) in &op.rows[a * m + b] {
            *out.entry(base + c * sa + d * sb).or_default() += &(val * coef);
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

pub fn represent(w: &BraidWord, e: &EnhancedRMatrix) -> Result<RingMatrix, InvariantError> {
    represent_with_cap(w, e, DEFAULT_DIMENSION_CAP)
}

/// `ρ(w) = ρ(w_1) ρ(w_2) ⋯`, computed row by row with slot actions. Double points map to `R - R^{-1}`.
pub fn represent_with_cap(w: &BraidWord, e: &EnhancedRMatrix, cap: usize) -> Result<RingMatrix, InvariantError> {
    let n = w.strands();
    let dim = dimension(e.rank(), n, cap)?;
    let ops = Operators::new(e);
    let mut data = Vec::with_capacity(dim * dim);
    for k in 0..dim {
        let mut row = vec![HalfLaurent::zero(); dim];
        row[k] = HalfLaurent::one();
        for l in w.letters() {
            row = apply_dense(&row, ops.get(l.kind), n, l.index);
        }
        data.extend(row);
    }
    Ok(RingMatrix::from_vec(dim, dim, data)?)
}

pub fn trace_invariant(w: &BraidWord, e: &EnhancedRMatrix) -> Result<HalfLaurent, InvariantError> {
    trace_invariant_with_cap(w, e, DEFAULT_DIMENSION_CAP)
}

/// `TR(ρ(w) · μ^{⊗n})`: the diagonal of `ρ(w)` is read off one sparse row at a time.
pub fn trace_invariant_with_cap(w: &BraidWord, e: &EnhancedRMatrix, cap: usize) -> Result<HalfLaurent, InvariantError> {
    let n = w.strands();
    let m = e.rank();
    let dim = dimension(m, n, cap)?;
    let ops = Operators::new(e);
    let mut total = HalfLaurent::zero();
    for k in 0..dim {
        let mut row = BTreeMap::new();
        row.insert(k, HalfLaurent::one());
        for l in w.letters() {
            row = apply_sparse(&row, ops.get(l.kind), n, l.index);
            if row.is_empty() {
                break;
            }
        }
        if let Some(diag) = row.get(&k) {
            let mut weight = HalfLaurent::one();
            let mut rest = k;
            for _ in 0..n {
                weight = weight * &e.mu()[rest % m];
                rest /= m;
            }
            total += &(diag * &weight);
        }
    }
    Ok(total)
}

/// The trace invariant divided by `μ_1 + ⋯ + μ_m`, so that the unknot has value 1.
pub fn normalized_trace_invariant(w: &BraidWord, e: &EnhancedRMatrix) -> Result<HalfLaurent, InvariantError> {
    let t = trace_invariant(w, e)?;
    t.div_exact(&e.mu_sum())
        .ok_or(InvariantError::Algebra(crate::error::AlgebraError::InexactDivision))
}

/// `γ^{-ε(w)} · TR'(w)` for data rescaled by `γ`; equals the trace invariant of the original data.
pub fn trace_invariant_rescaled(
    w: &BraidWord,
    rescaled: &EnhancedRMatrix,
    gamma: &HalfLaurent,
) -> Result<HalfLaurent, InvariantError> {
    if w.singular_count() > 0 {
        return Err(InvariantError::SingularLetter);
    }
    let correction = gamma
        .pow(-w.exponent_sum())
        .ok_or(InvariantError::NonInvertibleScale)?;
    Ok(&correction * &trace_invariant(w, rescaled)?)
}
