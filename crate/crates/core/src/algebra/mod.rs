//! Exact arithmetic: Laurent polynomials in `q^{1/2}`, truncated power series,
//! matrices over the Laurent ring and rational linear algebra.

mod laurent;
mod linear;
mod matrix;
mod series;

pub use laurent::HalfLaurent;
pub use linear::{RationalMatrix, SparseEchelon};
pub use matrix::RingMatrix;
pub use series::TruncSeries;

pub use num::{BigInt, BigRational};
