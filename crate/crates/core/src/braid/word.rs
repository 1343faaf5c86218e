use std::fmt;
use std::str::FromStr;

use crate::error::{BraidError, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    /// `σ_i`, the positive crossing.
    Positive,
    /// `σ_i^{-1}`.
    Negative,
    /// `τ_i`, a transverse double point.
    Singular,
}

/// One generator of the singular braid monoid. `index` is 1-based: it acts on strands `index` and `index + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub index: usize,
    pub kind: LetterKind,
}

impl BraidLetter {
    pub fn pos(index: usize) -> Self {
        Self { index, kind: LetterKind::Positive }
    }

    pub fn neg(index: usize) -> Self {
        Self { index, kind: LetterKind::Negative }
    }

    pub fn sing(index: usize) -> Self {
        Self { index, kind: LetterKind::Singular }
    }

    /// `±i` for `σ_i^{±1}`.
    pub fn from_signed(v: i64) -> Option<Self> {
        match v {
            0 => None,
            v if v > 0 => Some(Self::pos(v as usize)),
            v => Some(Self::neg(v.unsigned_abs() as usize)),
        }
    }

    pub fn is_singular(&self) -> bool {
        self.kind == LetterKind::Singular
    }

    /// `+1`, `-1`, or `0` for a double point.
    pub fn sign(&self) -> i64 {
        match self.kind {
            LetterKind::Positive => 1,
            LetterKind::Negative => -1,
            LetterKind::Singular => 0,
        }
    }

    /// Group inverse; `None` for `τ_i`.
    pub fn inverse(&self) -> Option<Self> {
        match self.kind {
            LetterKind::Positive => Some(Self::neg(self.index)),
            LetterKind::Negative => Some(Self::pos(self.index)),
            LetterKind::Singular => None,
        }
    }

    pub fn mirrored(&self) -> Self {
        self.inverse().unwrap_or(*self)
    }

    fn cancels(&self, other: &Self) -> bool {
        self.index == other.index
            && matches!(
                (self.kind, other.kind),
                (LetterKind::Positive, LetterKind::Negative) | (LetterKind::Negative, LetterKind::Positive)
            )
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LetterKind::Positive => write!(f, "{}", self.index),
            LetterKind::Negative => write!(f, "-{}", self.index),
            LetterKind::Singular => write!(f, "t{}", self.index),
        }
    }
}

/// A word in `σ_i^{±1}` and `τ_i` on a fixed number of strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(BraidError::IndexOutOfRange { index: l.index, strands });
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Signed generator indices, `i` for `σ_i` and `-i` for `σ_i^{-1}`.
    pub fn from_signed(strands: usize, letters: &[i64]) -> Result<Self, BraidError> {
        let letters = letters
            .iter()
            .map(|&v| BraidLetter::from_signed(v).ok_or(BraidError::IndexOutOfRange { index: 0, strands }))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn singular_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_singular()).count()
    }

    pub fn singular_positions(&self) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_singular())
            .map(|(p, _)| p)
            .collect()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(BraidLetter::sign).sum()
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<BraidLetter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if out.last().is_some_and(|top| top.cancels(l)) {
                out.pop();
            } else {
                out.push(*l);
            }
        }
        Self { strands: self.strands, letters: out }
    }

    /// Flips every crossing sign; double points are their own mirror image.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(BraidLetter::mirrored).collect(),
        }
    }

    /// Group inverse; `None` if the word has double points.
    pub fn inverse(&self) -> Option<Self> {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(BraidLetter::inverse)
            .collect::<Option<Vec<_>>>()?;
        Some(Self { strands: self.strands, letters })
    }

    /// Concatenation `self · other`; both words must have the same strand count.
    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::InvalidParameters("strand counts differ"));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    /// Same letters viewed on `strands` strands (must not drop a used index).
    pub fn with_strands(&self, strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, self.letters.clone())
    }

    fn letter_at(&self, pos: usize) -> Result<BraidLetter, BraidError> {
        self.letters
            .get(pos)
            .copied()
            .ok_or(BraidError::PositionOutOfRange { pos, len: self.letters.len() })
    }

    fn replaced(&self, pos: usize, with: Option<BraidLetter>) -> Self {
        let mut letters = self.letters.clone();
        match with {
            Some(l) => letters[pos] = l,
            None => {
                letters.remove(pos);
            }
        }
        Self { strands: self.strands, letters }
    }

    /// Replaces the double point at `pos` by `σ_i` (`positive`) or `σ_i^{-1}`.
    pub fn resolve(&self, pos: usize, positive: bool) -> Result<Self, BraidError> {
        let l = self.letter_at(pos)?;
        if !l.is_singular() {
            return Err(BraidError::KindMismatch { pos, expected: "singular" });
        }
        let new = if positive { BraidLetter::pos(l.index) } else { BraidLetter::neg(l.index) };
        Ok(self.replaced(pos, Some(new)))
    }

    /// Deletes the crossing at `pos` (the oriented smoothing of a braid crossing).
    pub fn smooth(&self, pos: usize) -> Result<Self, BraidError> {
        let l = self.letter_at(pos)?;
        if l.is_singular() {
            return Err(BraidError::KindMismatch { pos, expected: "crossing" });
        }
        Ok(self.replaced(pos, None))
    }

    /// Flips the sign of the crossing at `pos`.
    pub fn switch(&self, pos: usize) -> Result<Self, BraidError> {
        let l = self.letter_at(pos)?;
        let flipped = l.inverse().ok_or(BraidError::KindMismatch { pos, expected: "crossing" })?;
        Ok(self.replaced(pos, Some(flipped)))
    }

    /// Sets the crossing at `pos` to the given sign, whatever it was (a double point becomes a crossing).
    pub fn set_sign(&self, pos: usize, positive: bool) -> Result<Self, BraidError> {
        let l = self.letter_at(pos)?;
        let new = if positive { BraidLetter::pos(l.index) } else { BraidLetter::neg(l.index) };
        Ok(self.replaced(pos, Some(new)))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Token format: `n=<strands>` followed by whitespace-separated `i`, `-i` or `ti`.
impl FromStr for BraidWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut tokens = s.split_whitespace();
        let header = tokens
            .next()
            .ok_or_else(|| ParseError::Braid("empty input".into()))?;
        let strands: usize = header
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| ParseError::Braid(format!("expected `n=<strands>`, got `{header}`")))?;
        let mut letters = Vec::new();
        for tok in tokens {
            let bad = || ParseError::Braid(format!("bad token `{tok}`"));
            let letter = if let Some(rest) = tok.strip_prefix('t') {
                let idx: usize = rest.parse().map_err(|_| bad())?;
                BraidLetter::sing(idx)
            } else {
                let v: i64 = tok.parse().map_err(|_| bad())?;
                BraidLetter::from_signed(v).ok_or_else(bad)?
            };
            letters.push(letter);
        }
        BraidWord::new(strands, letters).map_err(|e| ParseError::Braid(e.to_string()))
    }
}
