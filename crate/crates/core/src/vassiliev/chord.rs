//! Chord diagrams on an oriented circle and the 1T/4T linear system for weight systems.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::algebra::{BigRational, RationalMatrix, SparseEchelon};
use crate::error::{InvariantError, ParseError};

/// Largest order handled by the enumeration.
pub const CHORD_ORDER_CAP: usize = 7;

/// `i` chords on `2i` points numbered `0..2i` along the circle, kept in minimal-rotation form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    partner: Vec<usize>,
}

fn rotate(partner: &[usize], r: usize) -> Vec<usize> {
    let len = partner.len();
    (0..len).map(|p| (partner[(p + r) % len] + len - r) % len).collect()
}

impl ChordDiagram {
    /// `partner[p]` is the other end of the chord at `p`; canonicalized on construction.
    pub fn from_partner(partner: Vec<usize>) -> Result<Self, ParseError> {
        let len = partner.len();
        if len == 0 || len % 2 == 1 {
            return Err(ParseError::Chord(format!("{len} endpoints")));
        }
        for (p, &q) in partner.iter().enumerate() {
            if q >= len || q == p || partner[q] != p {
                return Err(ParseError::Chord(format!("point {p} is not properly paired")));
            }
        }
        Ok(Self::canonical(partner))
    }

    pub fn from_pairs(order: usize, pairs: &[(usize, usize)]) -> Result<Self, ParseError> {
        if pairs.len() != order {
            return Err(ParseError::Chord(format!("expected {order} chords, got {}", pairs.len())));
        }
        let mut partner = vec![usize::MAX; 2 * order];
        for &(a, b) in pairs {
            if a >= 2 * order || b >= 2 * order || partner[a] != usize::MAX || partner[b] != usize::MAX || a == b {
                return Err(ParseError::Chord(format!("bad chord ({a} {b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        Self::from_partner(partner)
    }

    fn canonical(partner: Vec<usize>) -> Self {
        let best = (0..partner.len())
            .map(|r| rotate(&partner, r))
            .min()
            .expect("nonempty");
        Self { partner: best }
    }

    pub fn order(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self) -> &[usize] {
        &self.partner
    }

    /// Chords as `(a, b)` with `a < b`, sorted.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(p, &q)| p < q)
            .map(|(p, &q)| (p, q))
            .collect()
    }

    pub fn crosses(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        let inside = |x: usize| a.0 < x && x < a.1;
        inside(b.0) != inside(b.1)
    }

    /// Whether some chord meets no other chord.
    pub fn has_isolated_chord(&self) -> bool {
        let chords = self.chords();
        chords
            .iter()
            .any(|&c| chords.iter().all(|&d| d == c || !self.crosses(c, d)))
    }

    /// Chord label of every point, labels numbered by first appearance.
    fn labels(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.partner.len()];
        let mut next = 0;
        for p in 0..self.partner.len() {
            if label[p] == usize::MAX {
                label[p] = next;
                label[self.partner[p]] = next;
                next += 1;
            }
        }
        label
    }

    /// Builds a diagram from a cyclic word in which every label occurs twice.
    fn from_labels(word: &[usize]) -> Self {
        let mut first: HashMap<usize, usize> = HashMap::new();
        let mut partner = vec![0; word.len()];
        for (p, l) in word.iter().enumerate() {
            if let Some(q) = first.remove(l) {
                partner[p] = q;
                partner[q] = p;
            } else {
                first.insert(*l, p);
            }
        }
        Self::canonical(partner)
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i={} ", self.order())?;
        for (a, b) in self.chords() {
            write!(f, "({a} {b})")?;
        }
        Ok(())
    }
}

impl FromStr for ChordDiagram {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::Chord(format!("cannot parse `{s}`"));
        let s = s.trim();
        let rest = s.strip_prefix("i=").ok_or_else(bad)?;
        let (order, body) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
        let order: usize = order.parse().map_err(|_| bad())?;
        let mut pairs = Vec::new();
        let mut body = body.trim();
        while !body.is_empty() {
            let inner = body.strip_prefix('(').ok_or_else(bad)?;
            let (pair, tail) = inner.split_once(')').ok_or_else(bad)?;
            let mut nums = pair.split_whitespace().map(|t| t.parse::<usize>());
            match (nums.next(), nums.next(), nums.next()) {
                (Some(Ok(a)), Some(Ok(b)), None) => pairs.push((a, b)),
                _ => return Err(bad()),
            }
            body = tail.trim_start();
        }
        Self::from_pairs(order, &pairs)
    }
}

fn check_order(order: usize) -> Result<(), InvariantError> {
    if order == 0 || order > CHORD_ORDER_CAP {
        return Err(InvariantError::OrderCap { order, cap: CHORD_ORDER_CAP });
    }
    Ok(())
}

fn matchings(partner: &mut Vec<usize>, out: &mut BTreeSet<ChordDiagram>) {
    let Some(p) = partner.iter().position(|&x| x == usize::MAX) else {
        out.insert(ChordDiagram::canonical(partner.clone()));
        return;
    };
    for q in p + 1..partner.len() {
        if partner[q] == usize::MAX {
            partner[p] = q;
            partner[q] = p;
            matchings(partner, out);
            partner[p] = usize::MAX;
            partner[q] = usize::MAX;
        }
    }
}

/// All order-`i` diagrams up to rotation, sorted by canonical form.
pub fn enumerate_configurations(order: usize) -> Result<Vec<ChordDiagram>, InvariantError> {
    check_order(order)?;
    let mut out = BTreeSet::new();
    matchings(&mut vec![usize::MAX; 2 * order], &mut out);
    Ok(out.into_iter().collect())
}

/// One sparse relation per 4T instance, over indices into `diagrams`, with trivial and
/// duplicate relations dropped.
///
/// An instance fixes a diagram with one chord end `e` removed and another chord `c` with
/// ends `x1, x2`; with `D(e ± x)` the diagram where `e` sits just after (`+`) or just before
/// (`-`) the end `x` of `c`, the relation reads
/// `D(e + x1) - D(e - x1) + D(e + x2) - D(e - x2) = 0`.
pub fn four_term_relations(diagrams: &[ChordDiagram]) -> Vec<BTreeMap<usize, i64>> {
    let index: HashMap<&ChordDiagram, usize> = diagrams.iter().enumerate().map(|(k, d)| (d, k)).collect();
    let mut seen: HashSet<Vec<(usize, i64)>> = HashSet::new();
    let mut out = Vec::new();
    for d in diagrams {
        let labels = d.labels();
        let len = labels.len();
        for e in 0..len {
            let moving = labels[e];
            // the remaining 2i-1 points, read from just after e
            let base: Vec<usize> = (1..len).map(|k| labels[(e + k) % len]).collect();
            for c in (0..d.order()).filter(|&c| c != moving) {
                let ends: Vec<usize> = (0..base.len()).filter(|&k| base[k] == c).collect();
                let mut rel: BTreeMap<usize, i64> = BTreeMap::new();
                for &x in &ends {
                    for (slot, sign) in [(x + 1, 1), (x, -1)] {
                        let mut word = base.clone();
                        word.insert(slot, moving);
                        let k = index[&ChordDiagram::from_labels(&word)];
                        *rel.entry(k).or_insert(0) += sign;
                    }
                }
                rel.retain(|_, v| *v != 0);
                if rel.is_empty() {
                    continue;
                }
                let mut key: Vec<(usize, i64)> = rel.iter().map(|(&k, &v)| (k, v)).collect();
                if key[0].1 < 0 {
                    key.iter_mut().for_each(|t| t.1 = -t.1);
                }
                if seen.insert(key) {
                    out.push(rel);
                }
            }
        }
    }
    out
}

/// The linear system on diagram-indexed unknowns: `D = 0` for each diagram with an isolated
/// chord, plus every 4T relation. Its solution space is the space of weight systems.
#[derive(Clone, Debug)]
pub struct WeightSystemSpace {
    pub order: usize,
    pub diagrams: Vec<ChordDiagram>,
    pub relations: Vec<BTreeMap<usize, i64>>,
    pub dimension: usize,
}

fn one_term_relations(diagrams: &[ChordDiagram]) -> Vec<BTreeMap<usize, i64>> {
    diagrams
        .iter()
        .enumerate()
        .filter(|(_, d)| d.has_isolated_chord())
        .map(|(k, _)| BTreeMap::from([(k, 1)]))
        .collect()
}

impl WeightSystemSpace {
    pub fn new(order: usize) -> Result<Self, InvariantError> {
        let diagrams = enumerate_configurations(order)?;
        let mut relations = one_term_relations(&diagrams);
        relations.extend(four_term_relations(&diagrams));
        let mut echelon = SparseEchelon::new(diagrams.len());
        for rel in &relations {
            echelon.insert(rel.iter().map(|(&k, &v)| (k, BigRational::from_integer(v.into()))));
            if echelon.nullity() == 0 {
                break;
            }
        }
        Ok(Self {
            order,
            dimension: echelon.nullity(),
            diagrams,
            relations,
        })
    }

    /// Dense relation matrix, one row per relation.
    pub fn relation_matrix(&self) -> RationalMatrix {
        let rows: Vec<Vec<(usize, BigRational)>> = self
            .relations
            .iter()
            .map(|rel| rel.iter().map(|(&k, &v)| (k, BigRational::from_integer(v.into()))).collect())
            .collect();
        RationalMatrix::from_sparse_rows(self.diagrams.len(), &rows)
    }
}

/// `m_i`: dimension of the order-`i` weight systems, by sparse elimination.
pub fn weight_space_dimension(order: usize) -> Result<usize, InvariantError> {
    Ok(WeightSystemSpace::new(order)?.dimension)
}

/// Same number from dense elimination of the full relation matrix; for cross-checks at small order.
pub fn weight_space_dimension_dense(order: usize) -> Result<usize, InvariantError> {
    Ok(WeightSystemSpace::new(order)?.relation_matrix().nullity())
}
