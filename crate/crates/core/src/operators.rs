//! Kashiwara operators via the bracketing rule, and the quasi-Kashiwara
//! operators that are undefined on words with an `i`-inversion.
//!
//! Partial operators return `Option<Word>`; `None` means undefined.

use serde::{Deserialize, Serialize};

use crate::words::{has_inversion, Symbol, Word};

/// Result of a partial operator; `None` is undefined.
pub type OperatorResult = Option<Word>;

/// The unmatched `+` (symbol `i`) and `−` (symbol `i+1`) positions left after
/// cancelling every `−+` factor. Positions are 1-indexed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketReduction {
    plus_positions: Vec<usize>,
    minus_positions: Vec<usize>,
}

impl BracketReduction {
    pub fn plus_positions(&self) -> &[usize] {
        &self.plus_positions
    }

    pub fn minus_positions(&self) -> &[usize] {
        &self.minus_positions
    }

    pub fn phi(&self) -> usize {
        self.plus_positions.len()
    }

    pub fn epsilon(&self) -> usize {
        self.minus_positions.len()
    }
}

pub fn bracket_reduce(w: &Word, i: Symbol) -> BracketReduction {
    let mut plus = Vec::new();
    // pending minuses; a later plus cancels the nearest one
    let mut minus: Vec<usize> = Vec::new();
    for (p, s) in w.iter().enumerate() {
        if s == i {
            if minus.pop().is_none() {
                plus.push(p + 1);
            }
        } else if s == i + 1 {
            minus.push(p + 1);
        }
    }
    BracketReduction {
        plus_positions: plus,
        minus_positions: minus,
    }
}

/// `ẽ_i`: the `i+1` under the leftmost unmatched `−` becomes `i`.
pub fn kashiwara_e(w: &Word, i: Symbol) -> OperatorResult {
    let r = bracket_reduce(w, i);
    r.minus_positions.first().map(|&p| w.with_symbol(p - 1, i))
}

/// `f̃_i`: the `i` under the rightmost unmatched `+` becomes `i+1`.
pub fn kashiwara_f(w: &Word, i: Symbol) -> OperatorResult {
    let r = bracket_reduce(w, i);
    r.plus_positions
        .last()
        .map(|&p| w.with_symbol(p - 1, i + 1))
}

/// `(ε̃_i(w), φ̃_i(w))`.
pub fn kashiwara_counts(w: &Word, i: Symbol) -> (usize, usize) {
    let r = bracket_reduce(w, i);
    (r.epsilon(), r.phi())
}

/// `ë_i`: leftmost `i+1` becomes `i`, unless `u` has an `i`-inversion.
pub fn quasi_e(u: &Word, i: Symbol) -> OperatorResult {
    if has_inversion(u, i) {
        return None;
    }
    u.symbols()
        .iter()
        .position(|&s| s == i + 1)
        .map(|p| u.with_symbol(p, i))
}

/// `f̈_i`: rightmost `i` becomes `i+1`, unless `u` has an `i`-inversion.
pub fn quasi_f(u: &Word, i: Symbol) -> OperatorResult {
    if has_inversion(u, i) {
        return None;
    }
    u.symbols()
        .iter()
        .rposition(|&s| s == i)
        .map(|p| u.with_symbol(p, i + 1))
}

/// `(ε̈_i(u), φ̈_i(u))`: `(|u|_{i+1}, |u|_i)`, or `(0, 0)` with an `i`-inversion.
pub fn quasi_counts(u: &Word, i: Symbol) -> (usize, usize) {
    if has_inversion(u, i) {
        (0, 0)
    } else {
        (u.count(i + 1), u.count(i))
    }
}
