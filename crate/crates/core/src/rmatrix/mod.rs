//! Enhanced R-matrices and the braid-group representations and trace invariants they induce.
//!
//! An R-matrix is an invertible operator on `V ⊗ V` (`dim V = m`) stored as an `m² × m²`
//! matrix with row index `i1·m + i2` and column index `j1·m + j2`. It acts on `V^{⊗n}` through
//! adjacent tensor slots, a double point `τ_i` acting as `R - R^{-1}`. An enhancement is a
//! diagonal `μ` with `μ ⊗ μ` commuting with `R` and `Σ_j (R^{±1})_{(i,j),(k,j)} μ_j = δ_{ik}`;
//! then `TR(ρ(β) · μ^{⊗n})` is invariant under both Markov moves.

mod file;
mod represent;

pub use file::{emit_rmatrix_file, parse_rmatrix_file};
pub use represent::{
    normalized_trace_invariant, represent, represent_with_cap, trace_invariant, trace_invariant_rescaled,
    trace_invariant_with_cap, DEFAULT_DIMENSION_CAP,
};

use std::fmt;

use crate::algebra::{HalfLaurent, RingMatrix};
use crate::error::InvariantError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnhancedRMatrix {
    m: usize,
    r: RingMatrix,
    r_inv: RingMatrix,
    mu: Vec<HalfLaurent>,
}

/// Outcome of [`check_qybe`]: `witness` is the first differing `(row, col)` of the two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QybeVerdict {
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

/// The first enhancement condition found violated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnhancementFailure {
    /// `R · R_inv ≠ I`.
    Inverse,
    /// `μ ⊗ μ` does not commute with `R` (or `R_inv`); carries the offending `(row, col)`.
    Commutation { inverse: bool, row: usize, col: usize },
    /// The weighted partial trace of `R` (or `R_inv`) is not the identity at `(i, k)`.
    PartialTrace { inverse: bool, i: usize, k: usize },
}

impl fmt::Display for EnhancementFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let which = |inv: &bool| if *inv { "R^-1" } else { "R" };
        match self {
            Self::Inverse => f.write_str("R * R_inv is not the identity"),
            Self::Commutation { inverse, row, col } => {
                write!(f, "mu(x)mu does not commute with {} at ({row}, {col})", which(inverse))
            }
            Self::PartialTrace { inverse, i, k } => {
                write!(f, "weighted partial trace of {} fails at (i={i}, k={k})", which(inverse))
            }
        }
    }
}

fn perfect_square_root(d: usize) -> Option<usize> {
    let m = (d as f64).sqrt().round() as usize;
    (m >= 1 && m * m == d).then_some(m)
}

impl EnhancedRMatrix {
    /// Computes `R^{-1}` exactly; fails unless `R` is invertible over the Laurent ring.
    pub fn new(r: RingMatrix, mu: Vec<HalfLaurent>) -> Result<Self, InvariantError> {
        let r_inv = r.inverse()?;
        Self::with_inverse(r, r_inv, mu)
    }

    /// Shape checks only; see [`check_enhancement`] for the algebraic conditions.
    pub fn with_inverse(r: RingMatrix, r_inv: RingMatrix, mu: Vec<HalfLaurent>) -> Result<Self, InvariantError> {
        if !r.is_square() {
            return Err(InvariantError::InvalidRMatrix(format!("R is {}x{}", r.rows(), r.cols())));
        }
        let m = perfect_square_root(r.rows())
            .ok_or_else(|| InvariantError::InvalidRMatrix(format!("size {} is not m^2", r.rows())))?;
        if (r_inv.rows(), r_inv.cols()) != (r.rows(), r.cols()) {
            return Err(InvariantError::InvalidRMatrix("R_inv shape differs from R".into()));
        }
        if mu.len() != m {
            return Err(InvariantError::InvalidRMatrix(format!("expected {m} weights, got {}", mu.len())));
        }
        Ok(Self { m, r, r_inv, mu })
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> &RingMatrix {
        &self.r
    }

    pub fn r_inv(&self) -> &RingMatrix {
        &self.r_inv
    }

    pub fn mu(&self) -> &[HalfLaurent] {
        &self.mu
    }

    /// `μ_1 + ⋯ + μ_m`, the unnormalized value on the unknot.
    pub fn mu_sum(&self) -> HalfLaurent {
        self.mu.iter().cloned().sum()
    }

    /// `R - R^{-1}`, the image of a double point.
    pub fn singular_operator(&self) -> RingMatrix {
        self.r.sub(&self.r_inv).expect("same shape")
    }

    /// Copy with one weight replaced; handy for negative tests.
    pub fn with_mu(&self, mu: Vec<HalfLaurent>) -> Result<Self, InvariantError> {
        Self::with_inverse(self.r.clone(), self.r_inv.clone(), mu)
    }
}

/// Checks `(R ⊗ I)(I ⊗ R)(R ⊗ I) = (I ⊗ R)(R ⊗ I)(I ⊗ R)` on `V^{⊗3}` with explicit Kronecker products.
pub fn check_qybe(r: &RingMatrix) -> Result<QybeVerdict, InvariantError> {
    if !r.is_square() {
        return Err(InvariantError::InvalidRMatrix(format!("R is {}x{}", r.rows(), r.cols())));
    }
    let m = perfect_square_root(r.rows())
        .ok_or_else(|| InvariantError::InvalidRMatrix(format!("size {} is not m^2", r.rows())))?;
    let id = RingMatrix::identity(m);
    let r12 = r.kron(&id);
    let r23 = id.kron(r);
    let lhs = r12.mul(&r23)?.mul(&r12)?;
    let rhs = r23.mul(&r12)?.mul(&r23)?;
    let witness = lhs.first_difference(&rhs);
    Ok(QybeVerdict { holds: witness.is_none(), witness })
}

fn commutation_failure(r: &RingMatrix, mu: &[HalfLaurent], m: usize) -> Option<(usize, usize)> {
    let weight = |idx: usize| &mu[idx / m] * &mu[idx % m];
    for row in 0..m * m {
        for col in 0..m * m {
            let e = r.get(row, col);
            if !e.is_zero() && (e * &weight(row)) != (e * &weight(col)) {
                return Some((row, col));
            }
        }
    }
    None
}

fn partial_trace_failure(r: &RingMatrix, mu: &[HalfLaurent], m: usize) -> Option<(usize, usize)> {
    for i in 0..m {
        for k in 0..m {
            let s: HalfLaurent = (0..m).map(|j| r.get(i * m + j, k * m + j) * &mu[j]).sum();
            let ok = if i == k { s.is_one() } else { s.is_zero() };
            if !ok {
                return Some((i, k));
            }
        }
    }
    None
}

/// Verifies `R · R_inv = I` and both enhancement conditions for `R` and for `R_inv`.
pub fn check_enhancement(e: &EnhancedRMatrix) -> Result<(), EnhancementFailure> {
    if !e.r.mul(&e.r_inv).map(|p| p.is_identity()).unwrap_or(false) {
        return Err(EnhancementFailure::Inverse);
    }
    for (inverse, mat) in [(false, &e.r), (true, &e.r_inv)] {
        if let Some((row, col)) = commutation_failure(mat, &e.mu, e.m) {
            return Err(EnhancementFailure::Commutation { inverse, row, col });
        }
    }
    for (inverse, mat) in [(false, &e.r), (true, &e.r_inv)] {
        if let Some((i, k)) = partial_trace_failure(mat, &e.mu, e.m) {
            return Err(EnhancementFailure::PartialTrace { inverse, i, k });
        }
    }
    Ok(())
}

/// `R ↦ γR` (and `R^{-1} ↦ γ^{-1}R^{-1}`), weights unchanged. The rescaled data is no longer an
/// enhancement unless `γ = 1`; use [`trace_invariant_rescaled`] to undo the scale.
pub fn rescale(e: &EnhancedRMatrix, gamma: &HalfLaurent) -> Result<EnhancedRMatrix, InvariantError> {
    let gamma_inv = gamma.inverse_monomial().ok_or(InvariantError::NonInvertibleScale)?;
    Ok(EnhancedRMatrix {
        m: e.m,
        r: e.r.scale(gamma),
        r_inv: e.r_inv.scale(&gamma_inv),
        mu: e.mu.clone(),
    })
}

/// Validates data against QYBE and the enhancement conditions; the only way builtin data is handed out.
pub fn validated(e: EnhancedRMatrix) -> Result<EnhancedRMatrix, InvariantError> {
    let qybe = check_qybe(&e.r)?;
    if !qybe.holds {
        return Err(InvariantError::Validation(format!("QYBE fails at {:?}", qybe.witness)));
    }
    check_enhancement(&e).map_err(|f| InvariantError::Validation(f.to_string()))?;
    Ok(e)
}

/// Rank-2 enhanced R-matrix whose normalized trace invariant is the Jones polynomial
/// (`σ_i` positive, `q^{-1}R - qR^{-1} = (q^{1/2} - q^{-1/2}) I`).
///
/// On the basis `00, 01, 10, 11`:
///
/// ```text
/// R = [ -q^(1/2)  0                  0   0        ]
///     [ 0         q^(3/2) - q^(1/2)  q   0        ]
///     [ 0         q                  0   0        ]
///     [ 0         0                  0   -q^(1/2) ]
/// μ = (-q^(1/2), -q^(-1/2))
/// ```
pub fn builtin_jones() -> Result<EnhancedRMatrix, InvariantError> {
    validated(jones_data())
}

fn jones_data() -> EnhancedRMatrix {
    let p = |s: &str| s.parse::<HalfLaurent>().expect("builtin polynomial");
    let z = HalfLaurent::zero;
    let r = RingMatrix::from_rows(vec![
        vec![p("-q^(1/2)"), z(), z(), z()],
        vec![z(), p("-q^(1/2) + q^(3/2)"), p("q"), z()],
        vec![z(), p("q"), z(), z()],
        vec![z(), z(), z(), p("-q^(1/2)")],
    ])
    .expect("4x4");
    let mu = vec![p("-q^(1/2)"), p("-q^(-1/2)")];
    EnhancedRMatrix::new(r, mu).expect("builtin R is invertible")
}

/// The tensor flip on `V ⊗ V` with all weights `1/m`; satisfies QYBE, and the enhancement only for `m = 1`.
pub fn flip(m: usize) -> EnhancedRMatrix {
    let mut r = RingMatrix::zeros(m * m, m * m);
    for a in 0..m {
        for b in 0..m {
            r.set(a * m + b, b * m + a, HalfLaurent::one());
        }
    }
    let w = HalfLaurent::constant(num::BigRational::new(1.into(), (m as i64).into()));
    EnhancedRMatrix::with_inverse(r.clone(), r, vec![w; m]).expect("flip shape")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_data_validates() {
        let e = builtin_jones().unwrap();
        assert!(check_qybe(e.r()).unwrap().holds);
        assert_eq!(check_enhancement(&e), Ok(()));
        assert_eq!(e.mu_sum(), "-q^(-1/2) - q^(1/2)".parse().unwrap());
    }

    #[test]
    fn qybe_trivial_solutions() {
        for m in 1..=3 {
            assert!(check_qybe(&RingMatrix::identity(m * m)).unwrap().holds);
            assert!(check_qybe(flip(m).r()).unwrap().holds);
        }
        assert!(check_qybe(&RingMatrix::identity(3)).is_err());
        assert!(check_qybe(&RingMatrix::zeros(4, 2)).is_err());
    }

    #[test]
    fn perturbed_flip_fails_with_witness() {
        // flip with an extra q at (00, 01)
        let mut r = flip(2).r().clone();
        r.set(0, 1, HalfLaurent::q());
        let v = check_qybe(&r).unwrap();
        assert!(!v.holds);
        let (row, col) = v.witness.unwrap();
        let id = RingMatrix::identity(2);
        let lhs = r.kron(&id).mul(&id.kron(&r)).unwrap().mul(&r.kron(&id)).unwrap();
        let rhs = id.kron(&r).mul(&r.kron(&id)).unwrap().mul(&id.kron(&r)).unwrap();
        assert_ne!(lhs.get(row, col), rhs.get(row, col));
    }

    #[test]
    fn enhancement_checks() {
        assert_eq!(check_enhancement(&flip(1)), Ok(()));
        let e = builtin_jones().unwrap();
        let broken = e.with_mu(vec![HalfLaurent::zero(), e.mu()[1].clone()]).unwrap();
        assert!(matches!(
            check_enhancement(&broken),
            Err(EnhancementFailure::PartialTrace { .. })
        ));
        assert!(check_enhancement(&flip(2)).is_err());
    }

    #[test]
    fn rescale_preserves_qybe() {
        let e = builtin_jones().unwrap();
        let g = "-3*q^(5/2)".parse::<HalfLaurent>().unwrap();
        let scaled = rescale(&e, &g).unwrap();
        assert!(check_qybe(scaled.r()).unwrap().holds);
        assert!(rescale(&e, &"q + 1".parse().unwrap()).is_err());
        assert!(scaled.r().mul(scaled.r_inv()).unwrap().is_identity());
    }

    #[test]
    fn q_equals_one_limit_is_an_involution() {
        let e = builtin_jones().unwrap();
        let r1 = e.r().at_one();
        assert_eq!(r1.mul(&r1).unwrap(), crate::algebra::RationalMatrix::identity(4));
        assert_eq!(e.r_inv().at_one(), r1);
        assert!(e.singular_operator().at_one().is_zero());
    }
}
