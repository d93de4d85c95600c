#![allow(dead_code)]

use proptest::prelude::*;
use wonderkit::{RootSystem, Weyl, WeylElement};

/// Irreducible and reducible types of rank at most 5.
pub const RANK5: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C3", "C4", "C5", "D4", "D5", "F4", "G2", "A1xA1",
    "A2xB2", "G2xA3", "A1xA1xA1",
];

pub const RANK3: &[&str] = &["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A2xA1", "B2xA1", "G2xA1", "A1xA1xA1"];

pub const RANK4: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "A1xA1", "A2xA1", "A3xA1", "B2xA1",
    "A2xA2", "B2xB2", "G2xA1", "G2xG2", "A1xA1xA1", "A1xA1xA1xA1",
];

pub fn rs(t: &str) -> RootSystem {
    RootSystem::new(t).unwrap()
}

pub fn word_of(rs: &RootSystem, raw: &[usize]) -> Vec<usize> {
    raw.iter().map(|x| x % rs.rank).collect()
}

pub fn element(rs: &RootSystem, raw: &[usize]) -> WeylElement {
    Weyl::new(rs).from_word(&word_of(rs, raw)).unwrap()
}

/// A type name with a random word long enough to reach most elements of small groups.
pub fn typed_word(types: &'static [&'static str]) -> impl Strategy<Value = (&'static str, Vec<usize>)> {
    (prop::sample::select(types), prop::collection::vec(0usize..64, 0..30))
}
