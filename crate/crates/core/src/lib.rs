//! Knot and link invariants of closed braids.
//!
//! * [`algebra`]: exact Laurent polynomials, truncated series and linear algebra.
//! * [`braid`]: braid and singular-braid words, closures and Markov moves.
//! * [`skein`]: recursive skein evaluation of the Alexander, Jones and HOMFLY-family polynomials.
//! * [`rmatrix`]: enhanced R-matrices and their trace invariants.
//! * [`vassiliev`]: power-series expansion, finite-type invariants and chord-diagram weight systems.
//! * [`cli`]: the batch command-line surface.

pub mod algebra;
pub mod braid;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod rmatrix;
pub mod skein;
pub mod vassiliev;

pub use algebra::{HalfLaurent, RationalMatrix, RingMatrix, TruncSeries};
pub use braid::{BraidLetter, BraidWord, LetterKind, MarkovMove};
pub use error::{AlgebraError, BraidError, InvariantError, ParseError};
pub use rmatrix::EnhancedRMatrix;
pub use skein::SkeinSystem;
