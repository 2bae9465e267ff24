//! Reduced words in the free group FG(A).
//!
//! Text encoding: a lowercase letter is a generator and the uppercase form of
//! the same letter is its inverse, so `aB` is a·b⁻¹. The identity prints as
//! `1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

/// A generator or the inverse of a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedLetter {
    pub letter: char,
    pub inverted: bool,
}

impl SignedLetter {
    pub fn positive(letter: char) -> Self {
        Self {
            letter,
            inverted: false,
        }
    }

    pub fn negative(letter: char) -> Self {
        Self {
            letter,
            inverted: true,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            letter: self.letter,
            inverted: !self.inverted,
        }
    }

    pub fn sign(self) -> i64 {
        if self.inverted {
            -1
        } else {
            1
        }
    }

    fn cancels(self, other: Self) -> bool {
        self.letter == other.letter && self.inverted != other.inverted
    }
}

impl fmt::Display for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverted {
            write!(f, "{}", self.letter.to_ascii_uppercase())
        } else {
            write!(f, "{}", self.letter)
        }
    }
}

/// An element of the free group, always stored in reduced form.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    letters: Vec<SignedLetter>,
}

impl GroupElement {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new<I>(letters: I) -> Self
    where
        I: IntoIterator<Item = SignedLetter>,
    {
        let mut element = Self::identity();
        for s in letters {
            element.push(s);
        }
        element
    }

    pub fn generator(letter: char) -> Self {
        Self {
            letters: vec![SignedLetter::positive(letter)],
        }
    }

    pub fn letter(s: SignedLetter) -> Self {
        Self { letters: vec![s] }
    }

    /// Right-multiplies by one signed letter, cancelling if needed.
    pub fn push(&mut self, s: SignedLetter) {
        if self.letters.last().is_some_and(|&t| t.cancels(s)) {
            self.letters.pop();
        } else {
            self.letters.push(s);
        }
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    /// Length of the reduced word.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|s| !s.inverted)
    }

    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        let mut product = self.clone();
        product.multiply_assign(other);
        product
    }

    pub fn multiply_assign(&mut self, other: &GroupElement) {
        for &s in &other.letters {
            self.push(s);
        }
    }

    pub fn invert(&self) -> GroupElement {
        GroupElement {
            letters: self.letters.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// Reverses the letter sequence keeping signs. Reduced input gives
    /// reduced output.
    pub fn reverse(&self) -> GroupElement {
        GroupElement {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        self.letters.iter().eq(self.letters.iter().rev())
    }

    /// The a-degree: occurrences of `a` minus occurrences of `a⁻¹`.
    pub fn letter_degree(&self, letter: char) -> i64 {
        self.letters
            .iter()
            .filter(|s| s.letter == letter)
            .map(|s| s.sign())
            .sum()
    }

    /// As [`letter_degree`](Self::letter_degree), rejecting letters outside
    /// `alphabet`.
    pub fn checked_letter_degree(&self, alphabet: &Alphabet, letter: char) -> Result<i64> {
        alphabet.check_letter(letter)?;
        Ok(self.letter_degree(letter))
    }

    /// Sum of all letter degrees.
    pub fn algebraic_length(&self) -> i64 {
        self.letters.iter().map(|s| s.sign()).sum()
    }

    pub fn embed(word: &Word) -> GroupElement {
        GroupElement {
            letters: word.iter().map(|&c| SignedLetter::positive(c)).collect(),
        }
    }

    /// The word spelled by a positive element.
    pub fn to_word(&self) -> Option<Word> {
        self.is_positive()
            .then(|| self.letters.iter().map(|s| s.letter).collect())
    }

    /// Checks that every generator belongs to `alphabet`.
    pub fn check(&self, alphabet: &Alphabet) -> Result<()> {
        self.letters
            .iter()
            .try_for_each(|s| alphabet.check_letter(s.letter))
    }

    /// All reduced elements over `alphabet` of length at most `max_len`,
    /// shortest first. Within a length, order is lexicographic with
    /// generators in alphabet order, each generator before its inverse.
    pub fn enumerate(alphabet: &Alphabet, max_len: usize) -> Vec<GroupElement> {
        let signed: Vec<SignedLetter> = alphabet
            .letters()
            .iter()
            .flat_map(|&c| [SignedLetter::positive(c), SignedLetter::negative(c)])
            .collect();
        let mut all = vec![GroupElement::identity()];
        let mut layer = vec![GroupElement::identity()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for element in &layer {
                for &s in &signed {
                    if element.letters.last().is_some_and(|&t| t.cancels(s)) {
                        continue;
                    }
                    let mut longer = element.clone();
                    longer.letters.push(s);
                    next.push(longer);
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }
}

pub fn multiply(u: &GroupElement, v: &GroupElement) -> GroupElement {
    u.multiply(v)
}

pub fn invert(u: &GroupElement) -> GroupElement {
    u.invert()
}

pub fn reverse_group(u: &GroupElement) -> GroupElement {
    u.reverse()
}

pub fn letter_degree(u: &GroupElement, letter: char) -> i64 {
    u.letter_degree(letter)
}

pub fn algebraic_length(u: &GroupElement) -> i64 {
    u.algebraic_length()
}

pub fn embed_word(w: &Word) -> GroupElement {
    GroupElement::embed(w)
}

impl From<&Word> for GroupElement {
    fn from(w: &Word) -> Self {
        GroupElement::embed(w)
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "1" {
            return Ok(GroupElement::identity());
        }
        s.chars()
            .map(|c| match c {
                'a'..='z' => Ok(SignedLetter::positive(c)),
                'A'..='Z' => Ok(SignedLetter::negative(c.to_ascii_lowercase())),
                _ => Err(Error::InvalidSymbol(c)),
            })
            .collect::<Result<Vec<_>>>()
            .map(GroupElement::new)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        self.letters.iter().try_for_each(|s| write!(f, "{s}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupElement {
        s.parse().unwrap()
    }

    #[test]
    fn products_cancel() {
        assert_eq!(multiply(&g("ab"), &g("Bc")), g("ac"));
        assert_eq!(
            multiply(&g("abC"), &invert(&g("abC"))),
            GroupElement::identity()
        );
        assert_eq!(multiply(&g("a"), &g("a")), g("aa"));
        assert_eq!(g("aAbBa"), g("a"));
        assert_eq!(g("1"), GroupElement::identity());
        assert_eq!(g(""), GroupElement::identity());
    }

    #[test]
    fn inverses() {
        assert_eq!(invert(&g("ab")), g("BA"));
        assert_eq!(invert(&GroupElement::identity()), GroupElement::identity());
        assert_eq!(invert(&g("aB")), g("bA"));
    }

    #[test]
    fn reversal() {
        assert_eq!(reverse_group(&g("aB")), g("Ba"));
        assert_eq!(reverse_group(&g("aba")), g("aba"));
        assert_eq!(reverse_group(&g("abA")), g("Aba"));
    }

    #[test]
    fn degrees() {
        assert_eq!(letter_degree(&g("abA"), 'a'), 0);
        assert_eq!(letter_degree(&g("A"), 'a'), -1);
        assert_eq!(letter_degree(&g("aba"), 'a'), 2);
        assert_eq!(letter_degree(&g("aba"), 'b'), 1);
        assert_eq!(algebraic_length(&g("aba")), 3);
        assert_eq!(algebraic_length(&g("aB")), 0);
        assert_eq!(algebraic_length(&GroupElement::identity()), 0);
        let ab = Alphabet::latin(2).unwrap();
        assert_eq!(
            g("ab").checked_letter_degree(&ab, 'c'),
            Err(Error::UnknownLetter('c'))
        );
    }

    #[test]
    fn embedding() {
        assert_eq!(embed_word(&Word::from("ab")), g("ab"));
        assert!(embed_word(&Word::from("ab")).is_positive());
        assert_eq!(embed_word(&Word::empty()), GroupElement::identity());
        assert_eq!(
            embed_word(&Word::from("ab")),
            multiply(&embed_word(&Word::from("a")), &embed_word(&Word::from("b")))
        );
        assert_eq!(g("aB").to_word(), None);
    }

    #[test]
    fn text_format() {
        assert_eq!(g("aBc").to_string(), "aBc");
        assert_eq!(GroupElement::identity().to_string(), "1");
        assert_eq!(
            "a-b".parse::<GroupElement>(),
            Err(Error::InvalidSymbol('-'))
        );
    }

    #[test]
    fn enumeration_counts_reduced_words() {
        let abc = Alphabet::latin(3).unwrap();
        let all = GroupElement::enumerate(&abc, 3);
        assert_eq!(all.len(), 1 + 6 + 30 + 150);
        assert!(all
            .iter()
            .all(|e| GroupElement::new(e.letters().iter().copied()) == *e));
        let ab = Alphabet::latin(2).unwrap();
        let order: Vec<String> = GroupElement::enumerate(&ab, 1)
            .iter()
            .map(|e| e.to_string())
            .collect();
        assert_eq!(order, ["1", "a", "A", "b", "B"]);
    }
}
