//! Named braid words for standard knots and links, and golden invariant values.
//!
//! Golden records are stored one per line as `<name> | <braid tokens> | <jones> | <alexander>`.

use crate::algebra::HalfLaurent;
use crate::braid::{closure_components, BraidWord};
use crate::error::ParseError;

/// `(name, braid tokens)`.
pub const FIXTURES: &[(&str, &str)] = &[
    ("0_1", "n=1"),
    ("3_1", "n=2 1 1 1"),
    ("3_1*", "n=2 -1 -1 -1"),
    ("4_1", "n=3 1 -2 1 -2"),
    ("5_1", "n=2 1 1 1 1 1"),
    ("5_2", "n=3 1 1 1 2 -1 2"),
    ("6_1", "n=4 -1 -1 -2 1 3 -2 3"),
    ("6_2", "n=3 1 1 1 -2 1 -2"),
    ("6_3", "n=3 1 1 -2 1 -2 -2"),
    ("7_1", "n=2 1 1 1 1 1 1 1"),
    ("7_2", "n=4 1 1 1 2 -1 2 3 -2 3"),
    ("7_3", "n=3 1 1 1 1 1 2 -1 2"),
    ("7_4", "n=4 1 1 2 -1 2 2 3 -2 3"),
    ("7_5", "n=3 1 1 1 1 2 -1 2 2"),
    ("7_6", "n=4 1 1 -2 1 3 -2 3"),
    ("7_7", "n=4 1 -2 1 -2 3 -2 3"),
    ("8_19", "n=3 1 2 1 2 1 2 1 2"),
    ("L2_unlink", "n=2"),
    ("L2a1", "n=2 1 1"),
    ("L4a1", "n=2 1 1 1 1"),
    ("T3_3", "n=3 1 2 1 2 1 2"),
];

pub const GOLDEN: &str = include_str!("../fixtures/golden.txt");

pub fn fixture(name: &str) -> Option<BraidWord> {
    FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, w)| w.parse().expect("fixture words parse"))
}

/// All fixtures, parsed.
pub fn all_fixtures() -> Vec<(&'static str, BraidWord)> {
    FIXTURES
        .iter()
        .map(|(n, w)| (*n, w.parse().expect("fixture words parse")))
        .collect()
}

/// Fixtures whose closure is a knot.
pub fn knot_fixtures() -> Vec<(&'static str, BraidWord)> {
    all_fixtures()
        .into_iter()
        .filter(|(_, w)| closure_components(w) == 1)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRecord {
    pub name: String,
    pub word: BraidWord,
    pub jones: HalfLaurent,
    pub alexander: HalfLaurent,
}

pub fn parse_golden(text: &str) -> Result<Vec<GoldenRecord>, ParseError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            let [name, word, jones, alexander] = fields[..] else {
                return Err(ParseError::Braid(format!("golden line needs 4 fields: `{line}`")));
            };
            Ok(GoldenRecord {
                name: name.to_string(),
                word: word.parse()?,
                jones: jones.parse()?,
                alexander: alexander.parse()?,
            })
        })
        .collect()
}

pub fn emit_golden(records: &[GoldenRecord]) -> String {
    records
        .iter()
        .map(|r| format!("{} | {} | {} | {}\n", r.name, r.word, r.jones, r.alexander))
        .collect()
}
