//! Plain-text R-matrix files:
//!
//! ```text
//! m=2
//! <m^4 lines, one polynomial each, R in row-major order>
//! mu=<μ_1>; <μ_2>; …
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use super::EnhancedRMatrix;
use crate::algebra::{HalfLaurent, RingMatrix};
use crate::error::{InvariantError, ParseError};

fn bad(msg: impl Into<String>) -> InvariantError {
    InvariantError::Parse(ParseError::RMatrix(msg.into()))
}

pub fn parse_rmatrix_file(text: &str) -> Result<EnhancedRMatrix, InvariantError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| bad("empty file"))?;
    let m: usize = header
        .strip_prefix("m=")
        .and_then(|s| s.trim().parse().ok())
        .filter(|&m| m >= 1)
        .ok_or_else(|| bad(format!("expected `m=<rank>`, got `{header}`")))?;
    let d = m * m;
    let mut entries = Vec::with_capacity(d * d);
    for k in 0..d * d {
        let line = lines
            .next()
            .ok_or_else(|| bad(format!("expected {} entries, got {k}", d * d)))?;
        if line.starts_with("mu=") {
            return Err(bad(format!("expected {} entries, got {k}", d * d)));
        }
        entries.push(line.parse::<HalfLaurent>().map_err(|e| bad(format!("entry {k}: {e}")))?);
    }
    let mu_line = lines.next().ok_or_else(|| bad("missing `mu=` line"))?;
    let mu_text = mu_line
        .strip_prefix("mu=")
        .ok_or_else(|| bad(format!("expected `mu=...`, got `{mu_line}`")))?;
    let mu = mu_text
        .split(';')
        .map(|s| s.trim().parse::<HalfLaurent>().map_err(|e| bad(format!("mu: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(extra) = lines.next() {
        return Err(bad(format!("trailing line `{extra}`")));
    }
    let r = RingMatrix::from_vec(d, d, entries)?;
    EnhancedRMatrix::new(r, mu)
}

/// Inverse of [`parse_rmatrix_file`]; `R^{-1}` is not written.
pub fn emit_rmatrix_file(e: &EnhancedRMatrix) -> String {
    let mut out = format!("m={}\n", e.rank());
    for x in e.r().entries() {
        out.push_str(&x.to_string());
        out.push('\n');
    }
    let mu: Vec<String> = e.mu().iter().map(ToString::to_string).collect();
    out.push_str("mu=");
    out.push_str(&mu.join("; "));
    out.push('\n');
    out
}
