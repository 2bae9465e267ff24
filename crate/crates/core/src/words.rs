//! Alphabets, finite words and the palindromic closure.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// An ordered set of distinct letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new<I>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = char>,
    {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut seen = HashSet::new();
        for &c in &letters {
            if !seen.insert(c) {
                return Err(Error::DuplicateLetter(c));
            }
        }
        Ok(Self { letters })
    }

    /// The first `size` lowercase latin letters, `a`, `b`, ...
    pub fn latin(size: usize) -> Result<Self> {
        if size == 0 || size > 26 {
            return Err(Error::OutOfBounds {
                name: "alphabet size",
                value: size,
                min: 1,
                max: 26,
            });
        }
        Self::new((b'a'..b'a' + size as u8).map(char::from))
    }

    /// Distinct lowercase letters of `input`, sorted. Uppercase letters count
    /// as their lowercase generator so that group elements infer correctly.
    pub fn infer(input: &str) -> Result<Self> {
        let letters: BTreeSet<char> = input
            .chars()
            .filter(char::is_ascii_alphabetic)
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Self::new(letters)
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, letter: char) -> bool {
        self.letters.contains(&letter)
    }

    pub fn index_of(&self, letter: char) -> Option<usize> {
        self.letters.iter().position(|&c| c == letter)
    }

    pub fn check_letter(&self, letter: char) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::UnknownLetter(letter))
        }
    }

    pub fn check(&self, word: &Word) -> Result<()> {
        word.iter().try_for_each(|&c| self.check_letter(c))
    }

    pub fn parse_word(&self, input: &str) -> Result<Word> {
        let word = Word::from(input);
        self.check(&word)?;
        Ok(word)
    }

    /// All words of length at most `max_len`, shortest first, ties in
    /// alphabet order.
    pub fn words_up_to(&self, max_len: usize) -> impl Iterator<Item = Word> + '_ {
        (0..=max_len).flat_map(move |n| self.words_of_len(n))
    }

    pub fn words_of_len(&self, len: usize) -> impl Iterator<Item = Word> + '_ {
        let k = self.letters.len();
        let total = k.checked_pow(len as u32).unwrap_or(usize::MAX);
        (0..total).map(move |mut index| {
            let mut letters = vec![self.letters[0]; len];
            for slot in letters.iter_mut().rev() {
                *slot = self.letters[index % k];
                index /= k;
            }
            Word(letters)
        })
    }

    /// Number of words of length at most `max_len`, saturating.
    pub fn count_words_up_to(&self, max_len: usize) -> usize {
        let k = self.letters.len();
        let mut total = 0usize;
        let mut layer = 1usize;
        for _ in 0..=max_len {
            total = total.saturating_add(layer);
            layer = layer.saturating_mul(k);
        }
        total
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A finite word. The empty word is written `1` in the literature and `""`
/// here.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<char>);

impl Word {
    pub fn new(letters: Vec<char>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, char> {
        self.0.iter()
    }

    pub fn first(&self) -> Option<char> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<char> {
        self.0.last().copied()
    }

    pub fn push(&mut self, letter: char) {
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &[char]) {
        self.0.extend_from_slice(other);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        Word(self.0[start..].to_vec())
    }

    /// The word with its last letter removed; `None` for the empty word.
    pub fn without_last(&self) -> Option<Word> {
        self.0.split_last().map(|(_, rest)| Word(rest.to_vec()))
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    /// The left quotient `prefix⁻¹·self`, when `prefix` is a prefix of `self`.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0
            .strip_prefix(prefix.letters())
            .map(|rest| Word(rest.to_vec()))
    }

    pub fn contains_letter(&self, letter: char) -> bool {
        self.0.contains(&letter)
    }

    pub fn reverse(&self) -> Word {
        reverse(self)
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(self)
    }

    pub fn into_letters(self) -> Vec<char> {
        self.0
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}

impl From<&[char]> for Word {
    fn from(s: &[char]) -> Self {
        Word(s.to_vec())
    }
}

impl FromIterator<char> for Word {
    fn from_iter<I: IntoIterator<Item = char>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

pub fn reverse(w: &Word) -> Word {
    w.iter().rev().copied().collect()
}

fn is_palindrome_slice(s: &[char]) -> bool {
    s.iter().eq(s.iter().rev())
}

pub fn is_palindrome(w: &Word) -> bool {
    is_palindrome_slice(w.letters())
}

fn longest_palindromic_suffix_start(s: &[char]) -> usize {
    (0..s.len())
        .find(|&start| is_palindrome_slice(&s[start..]))
        .unwrap_or(s.len())
}

pub fn longest_palindromic_suffix(w: &Word) -> Word {
    w.suffix_from(longest_palindromic_suffix_start(w.letters()))
}

/// Shortest palindrome having `w` as a prefix: `y·z·ỹ` where `z` is the
/// longest palindromic suffix of `w = y·z`.
pub fn palindromic_closure(w: &Word) -> Word {
    let split = longest_palindromic_suffix_start(w.letters());
    let mut closed = w.clone();
    closed.0.extend(w.0[..split].iter().rev());
    closed
}

/// All suffixes of `w`, including `w` and the empty word.
pub fn suffixes(w: &Word) -> BTreeSet<Word> {
    (0..=w.len()).map(|i| w.suffix_from(i)).collect()
}

/// Factors `f` of `w` with at least two distinct letters `x` such that `x·f`
/// is a factor of `w`.
pub fn left_special_factors(w: &Word) -> BTreeSet<Word> {
    let s = w.letters();
    let mut extensions: HashMap<&[char], HashSet<char>> = HashMap::new();
    for start in 1..=s.len() {
        for end in start..=s.len() {
            extensions
                .entry(&s[start..end])
                .or_default()
                .insert(s[start - 1]);
        }
    }
    extensions
        .into_iter()
        .filter(|(_, letters)| letters.len() >= 2)
        .map(|(factor, _)| Word::from(factor))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    fn set(words: &[&str]) -> BTreeSet<Word> {
        words.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn reversal() {
        assert_eq!(reverse(&w("abc")), w("cba"));
        assert_eq!(reverse(&w("")), w(""));
        assert_eq!(reverse(&w("aba")), w("aba"));
    }

    #[test]
    fn palindromes() {
        assert!(is_palindrome(&w("abaaba")));
        assert!(is_palindrome(&w("")));
        assert!(!is_palindrome(&w("ab")));
    }

    #[test]
    fn palindromic_suffix() {
        assert_eq!(longest_palindromic_suffix(&w("abaa")), w("aa"));
        assert_eq!(longest_palindromic_suffix(&w("")), w(""));
        assert_eq!(longest_palindromic_suffix(&w("abaabab")), w("bab"));
    }

    #[test]
    fn closure() {
        assert_eq!(palindromic_closure(&w("abaa")), w("abaaba"));
        assert_eq!(palindromic_closure(&w("aba")), w("aba"));
        assert_eq!(palindromic_closure(&w("ab")), w("aba"));
        assert_eq!(palindromic_closure(&w("")), w(""));
    }

    #[test]
    fn left_special() {
        // Brute-force enumeration: "aba" occurs only at the start and after
        // 'c', so it has a single left extension.
        assert_eq!(left_special_factors(&w("abacaba")), set(&["", "a"]));
        assert_eq!(left_special_factors(&w("aa")), set(&[]));
        assert_eq!(left_special_factors(&w("ab")), set(&[""]));
        assert_eq!(left_special_factors(&w("")), set(&[]));
        let fib = w("abaababaaba");
        assert!(left_special_factors(&fib)
            .iter()
            .all(|f| f.is_prefix_of(&fib)));
    }

    #[test]
    fn alphabet_rules() {
        assert_eq!(Alphabet::new([]), Err(Error::EmptyAlphabet));
        assert_eq!(Alphabet::new(['a', 'a']), Err(Error::DuplicateLetter('a')));
        let ab = Alphabet::new(['b', 'a']).unwrap();
        assert_eq!(ab.letters(), &['b', 'a']);
        assert_eq!(ab.parse_word("abc"), Err(Error::UnknownLetter('c')));
        assert_eq!(Alphabet::infer("cAbc").unwrap().letters(), &['a', 'b', 'c']);
    }

    #[test]
    fn word_enumeration_is_length_lexicographic() {
        let ab = Alphabet::latin(2).unwrap();
        let words: Vec<String> = ab.words_up_to(2).map(|w| w.to_string()).collect();
        assert_eq!(words, ["", "a", "b", "aa", "ab", "ba", "bb"]);
        assert_eq!(ab.count_words_up_to(2), 7);
        assert_eq!(Alphabet::latin(3).unwrap().count_words_up_to(5), 364);
    }
}
