//! Residuals `u⁻¹L` of a finite language, as sorted lists of borrowed words.
//!
//! A residual is kept sorted and duplicate-free, so two residuals are equal
//! as sets exactly when they are equal as vectors.

use std::collections::BTreeSet;

use crate::words::Word;

pub(crate) type Residual<'a> = Vec<&'a [char]>;

pub(crate) fn language_residual(language: &BTreeSet<Word>) -> Residual<'_> {
    language.iter().map(Word::letters).collect()
}

/// `a⁻¹R`. Stripping a common first letter preserves the order.
pub(crate) fn derivative<'a>(residual: &[&'a [char]], a: char) -> Residual<'a> {
    residual
        .iter()
        .filter(|s| s.first() == Some(&a))
        .map(|s| &s[1..])
        .collect()
}

/// `u⁻¹R` for a whole word.
pub(crate) fn quotient<'a>(residual: &[&'a [char]], u: &[char]) -> Residual<'a> {
    residual.iter().filter_map(|s| s.strip_prefix(u)).collect()
}

pub(crate) fn contains_empty(residual: &[&[char]]) -> bool {
    residual.first().is_some_and(|s| s.is_empty())
}

/// First letters of the words of `residual`, in increasing order.
pub(crate) fn first_letters(residual: &[&[char]]) -> Vec<char> {
    let mut letters: Vec<char> = residual.iter().filter_map(|s| s.first().copied()).collect();
    letters.dedup();
    letters
}
