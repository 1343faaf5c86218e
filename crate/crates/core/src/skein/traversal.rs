use crate::braid::{components, BraidWord, LetterKind};
use crate::error::InvariantError;

/// One passage of a component through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Visit {
    /// Letter position in the word.
    pub pos: usize,
    pub component: usize,
    pub over: bool,
}

/// Crossing passages of the closure, component by component in increasing id, each component
/// entered at the top of its smallest strand. In `σ_i` the strand coming from position `i`
/// passes over; in `σ_i^{-1}` the one coming from `i + 1` does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraversalOrder {
    visits: Vec<Visit>,
}

impl TraversalOrder {
    pub fn visits(&self) -> &[Visit] {
        &self.visits
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayeredCheck {
    Layered,
    /// Position of the first crossing whose first passage is an under-pass.
    FirstBad(usize),
}

pub fn traversal(w: &BraidWord) -> Result<TraversalOrder, InvariantError> {
    if w.singular_count() > 0 {
        return Err(InvariantError::SingularLetter);
    }
    let mut visits = Vec::with_capacity(2 * w.len());
    for comp in components(w) {
        let start = comp - 1;
        let mut p = start;
        loop {
            for (pos, l) in w.letters().iter().enumerate() {
                let left = l.index - 1;
                if p == left {
                    visits.push(Visit { pos, component: comp, over: l.kind == LetterKind::Positive });
                    p = left + 1;
                } else if p == left + 1 {
                    visits.push(Visit { pos, component: comp, over: l.kind == LetterKind::Negative });
                    p = left;
                }
            }
            if p == start {
                break;
            }
        }
    }
    Ok(TraversalOrder { visits })
}

pub fn layered_check(w: &BraidWord, order: &TraversalOrder) -> LayeredCheck {
    let mut seen = vec![false; w.len()];
    for v in order.visits() {
        if !seen[v.pos] {
            seen[v.pos] = true;
            if !v.over {
                return LayeredCheck::FirstBad(v.pos);
            }
        }
    }
    LayeredCheck::Layered
}

/// `None` for a layered word, otherwise the crossing the unknotting recursion switches.
pub fn first_bad_crossing(w: &BraidWord) -> Result<Option<usize>, InvariantError> {
    let order = traversal(w)?;
    Ok(match layered_check(w, &order) {
        LayeredCheck::Layered => None,
        LayeredCheck::FirstBad(p) => Some(p),
    })
}
