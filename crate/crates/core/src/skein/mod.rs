//! Crossing-change (skein) evaluation of the Alexander, Jones and HOMFLY-family polynomials.
//!
//! A system is given by weights `(a_+, a_-, s)` and the relation
//! `a_+ F(K_+) + a_- F(K_-) = s F(K_0)`, normalized by `F(unknot) = 1`. Any closed braid is
//! evaluated by switching the first crossing met from below along a fixed traversal, until
//! the diagram is descending (a layered diagram, hence an unlink), and smoothing along the way.
//!
//! Chirality: `σ_i` is the positive crossing `K_+`. Under this convention the closure of
//! `σ_1^3` has Jones polynomial `-q^4 + q^3 + q`.

mod traversal;

use std::collections::HashMap;
use std::fmt;

pub use traversal::{first_bad_crossing, layered_check, traversal, LayeredCheck, TraversalOrder, Visit};

use crate::algebra::HalfLaurent;
use crate::braid::{closure_components, BraidWord, LetterKind};
use crate::error::InvariantError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SkeinKind {
    Alexander,
    Jones,
    Homfly(i64),
}

/// Weights of one crossing-change formula plus the unlink ratio it forces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinSystem {
    pub kind: SkeinKind,
    /// Coefficients of `F(K_+)` and `F(K_-)`.
    pub switch_weights: (HalfLaurent, HalfLaurent),
    /// Coefficient of `F(K_0)`.
    pub smooth_weight: HalfLaurent,
    /// `δ`: adding a split unknotted component multiplies the invariant by `δ`.
    pub unlink_ratio: HalfLaurent,
}

impl SkeinSystem {
    pub fn alexander() -> Self {
        Self {
            kind: SkeinKind::Alexander,
            switch_weights: (HalfLaurent::one(), HalfLaurent::from_int(-1)),
            smooth_weight: HalfLaurent::z(),
            unlink_ratio: HalfLaurent::zero(),
        }
    }

    pub fn jones() -> Self {
        Self {
            kind: SkeinKind::Jones,
            switch_weights: (HalfLaurent::int_monomial(1, -2), HalfLaurent::int_monomial(-1, 2)),
            smooth_weight: HalfLaurent::z(),
            unlink_ratio: -(HalfLaurent::int_monomial(1, 1) + HalfLaurent::int_monomial(1, -1)),
        }
    }

    /// `q^{-n} H(K_+) - q^{n} H(K_-) = (q^{1/2} - q^{-1/2}) H(K_0)`.
    pub fn homfly(n: i64) -> Self {
        Self {
            kind: SkeinKind::Homfly(n),
            switch_weights: (HalfLaurent::int_monomial(1, -2 * n), HalfLaurent::int_monomial(-1, 2 * n)),
            smooth_weight: HalfLaurent::z(),
            unlink_ratio: HalfLaurent::homfly_unlink_ratio(n),
        }
    }

    /// Parses `alexander`, `jones` or `homfly:<n>`.
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "alexander" => Some(Self::alexander()),
            "jones" => Some(Self::jones()),
            _ => name
                .strip_prefix("homfly:")
                .and_then(|n| n.parse().ok())
                .map(Self::homfly),
        }
    }

    pub fn name(&self) -> String {
        match self.kind {
            SkeinKind::Alexander => "alexander".into(),
            SkeinKind::Jones => "jones".into(),
            SkeinKind::Homfly(n) => format!("homfly:{n}"),
        }
    }

    /// Value on the `mu`-component unlink, `δ^{mu-1}`.
    pub fn unlink_value(&self, mu: usize) -> HalfLaurent {
        assert!(mu >= 1, "unlink needs at least one component");
        self.unlink_ratio
            .pow(mu as i64 - 1)
            .expect("non-negative power")
    }

    /// Checks `a_+ F(K_+) + a_- F(K_-) = s F(K_0)` for given values.
    pub fn relation_holds(&self, plus: &HalfLaurent, minus: &HalfLaurent, smoothed: &HalfLaurent) -> bool {
        &self.switch_weights.0 * plus + &self.switch_weights.1 * minus == &self.smooth_weight * smoothed
    }
}

impl fmt::Display for SkeinSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Memoized evaluator for one skein system. The memo is keyed on freely reduced words.
#[derive(Debug, Clone)]
pub struct SkeinEvaluator {
    system: SkeinSystem,
    plus_inv: HalfLaurent,
    minus_inv: HalfLaurent,
    memo: HashMap<BraidWord, HalfLaurent>,
}

impl SkeinEvaluator {
    pub fn new(system: SkeinSystem) -> Self {
        let plus_inv = system.switch_weights.0.inverse_monomial().expect("switch weights are monomials");
        let minus_inv = system.switch_weights.1.inverse_monomial().expect("switch weights are monomials");
        Self {
            system,
            plus_inv,
            minus_inv,
            memo: HashMap::new(),
        }
    }

    pub fn system(&self) -> &SkeinSystem {
        &self.system
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn evaluate(&mut self, w: &BraidWord) -> Result<HalfLaurent, InvariantError> {
        if w.singular_count() > 0 {
            return Err(InvariantError::SingularLetter);
        }
        Ok(self.eval_reduced(&w.free_reduce()))
    }

    fn eval_reduced(&mut self, w: &BraidWord) -> HalfLaurent {
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let value = match first_bad_crossing(w).expect("no double points") {
            None => self.system.unlink_value(closure_components(w)),
            Some(pos) => {
                let switched = w.switch(pos).expect("crossing").free_reduce();
                let smoothed = w.smooth(pos).expect("crossing").free_reduce();
                let f_switched = self.eval_reduced(&switched);
                let f_smoothed = self.eval_reduced(&smoothed);
                let rhs = &self.system.smooth_weight * &f_smoothed;
                match w.letters()[pos].kind {
                    // w is K_+, the switched word is K_-
                    LetterKind::Positive => (rhs - &self.system.switch_weights.1 * &f_switched) * &self.plus_inv,
                    LetterKind::Negative => (rhs - &self.system.switch_weights.0 * &f_switched) * &self.minus_inv,
                    LetterKind::Singular => unreachable!("rejected above"),
                }
            }
        };
        self.memo.insert(w.clone(), value.clone());
        value
    }
}

/// One-shot evaluation with a fresh memo table.
pub fn evaluate(w: &BraidWord, system: &SkeinSystem) -> Result<HalfLaurent, InvariantError> {
    SkeinEvaluator::new(system.clone()).evaluate(w)
}

pub fn unlink_value(system: &SkeinSystem, mu: usize) -> HalfLaurent {
    system.unlink_value(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn unknot_is_one() {
        for sys in [SkeinSystem::alexander(), SkeinSystem::jones(), SkeinSystem::homfly(3)] {
            assert_eq!(evaluate(&w("n=1"), &sys).unwrap(), HalfLaurent::one());
            assert_eq!(evaluate(&w("n=3 1 2"), &sys).unwrap(), HalfLaurent::one());
        }
    }

    #[test]
    fn unlink_values() {
        assert!(SkeinSystem::alexander().unlink_value(2).is_zero());
        assert_eq!(SkeinSystem::jones().unlink_value(2), p("-q^(-1/2) - q^(1/2)"));
        for sys in [SkeinSystem::alexander(), SkeinSystem::jones(), SkeinSystem::homfly(-2)] {
            assert!(sys.unlink_value(1).is_one());
        }
        assert_eq!(evaluate(&w("n=3"), &SkeinSystem::jones()).unwrap(), p("q^-1 + 2 + q"));
    }

    #[test]
    fn hand_computed_trefoil_and_hopf() {
        // q^-1 J(σ1^2) - q J(n=2) = z J(σ1) gives J(Hopf) = -q^(5/2) - q^(1/2);
        // then q^-1 J(σ1^3) - q J(σ1) = z J(σ1^2).
        let jones = SkeinSystem::jones();
        assert_eq!(evaluate(&w("n=2 1 1"), &jones).unwrap(), p("-q^(1/2) - q^(5/2)"));
        assert_eq!(evaluate(&w("n=2 1 1 1"), &jones).unwrap(), p("q + q^3 - q^4"));
        assert_eq!(evaluate(&w("n=2 -1 -1 -1"), &jones).unwrap(), p("-q^-4 + q^-3 + q^-1"));
        let alex = SkeinSystem::alexander();
        assert_eq!(evaluate(&w("n=2 1 1 1"), &alex).unwrap(), p("q^-1 - 1 + q"));
        assert_eq!(evaluate(&w("n=2 1 1"), &alex).unwrap(), HalfLaurent::z());
    }

    #[test]
    fn singular_words_rejected() {
        assert_eq!(
            evaluate(&w("n=2 t1"), &SkeinSystem::jones()),
            Err(InvariantError::SingularLetter)
        );
    }

    #[test]
    fn system_names() {
        for name in ["alexander", "jones", "homfly:-2", "homfly:3"] {
            assert_eq!(SkeinSystem::from_name(name).unwrap().name(), name);
        }
        assert!(SkeinSystem::from_name("kauffman").is_none());
        assert_eq!(SkeinSystem::homfly(1).unlink_ratio, SkeinSystem::jones().unlink_ratio);
    }
}
