//! The automorphisms `L_u`, `R_u` of the free group and the palindromization
//! map `Pal`, on words and on the free group.
//!
//! `L_a` sends `a ↦ a` and every other generator `b ↦ ab`; `R_a` is its
//! mirror image, `b ↦ ba`. Both extend to morphisms `u ↦ L_u`, `u ↦ R_u`
//! from FG(A) into its automorphism group, so `L_{uv} = L_u ∘ L_v`.

use std::collections::HashMap;

use crate::error::Result;
use crate::free_group::{GroupElement, SignedLetter};
use crate::words::{palindromic_closure, Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// The automorphism `L_u` or `R_u`, kept as its basis `u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    pub basis: GroupElement,
    pub side: Side,
}

impl Automorphism {
    pub fn left(basis: GroupElement) -> Self {
        Self {
            basis,
            side: Side::Left,
        }
    }

    pub fn right(basis: GroupElement) -> Self {
        Self {
            basis,
            side: Side::Right,
        }
    }

    pub fn apply(&self, v: &GroupElement) -> GroupElement {
        apply(self.side, &self.basis, v)
    }

    /// `α_u ∘ α_v = α_{uv}`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        assert_eq!(
            self.side, other.side,
            "cannot compose L and R automorphisms"
        );
        Automorphism {
            basis: self.basis.multiply(&other.basis),
            side: self.side,
        }
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            basis: self.basis.invert(),
            side: self.side,
        }
    }
}

/// Image of `v` under the automorphism of a single signed letter.
fn apply_letter(side: Side, a: SignedLetter, v: &GroupElement) -> GroupElement {
    let mut image = GroupElement::identity();
    for &b in v.letters() {
        if b.letter == a.letter {
            image.push(b);
            continue;
        }
        let generator = SignedLetter::positive(b.letter);
        let [first, second] = match side {
            Side::Left => [a, generator],
            Side::Right => [generator, a],
        };
        if b.inverted {
            image.push(second.inverse());
            image.push(first.inverse());
        } else {
            image.push(first);
            image.push(second);
        }
    }
    image
}

fn apply(side: Side, basis: &GroupElement, v: &GroupElement) -> GroupElement {
    basis
        .letters()
        .iter()
        .rev()
        .fold(v.clone(), |acc, &a| apply_letter(side, a, &acc))
}

/// `L_u(v)`.
pub fn apply_l(u: &GroupElement, v: &GroupElement) -> GroupElement {
    apply(Side::Left, u, v)
}

/// `R_u(v)`.
pub fn apply_r(u: &GroupElement, v: &GroupElement) -> GroupElement {
    apply(Side::Right, u, v)
}

/// Iterated palindromic closure: `Pal(1) = 1`, `Pal(wa) = (Pal(w)a)⁺`.
pub fn pal_word(u: &Word) -> Word {
    u.iter().fold(Word::empty(), |mut pal, &a| {
        pal.push(a);
        palindromic_closure(&pal)
    })
}

/// `Pal(u)` together with the lengths of `Pal(p)` for every prefix `p` of `u`.
///
/// The palindromic prefixes of `Pal(u)` are exactly the `Pal(p)`, so
/// `lengths[i]` is also the length of the i-th palindromic prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalPrefixes {
    pal: Word,
    lengths: Vec<usize>,
}

impl PalPrefixes {
    /// Builds `Pal(u)` one letter at a time with the rule: `Pal(ux) =
    /// Pal(u)·x·Pal(u)` when `u` is x-free, otherwise `Pal(ux) =
    /// Pal(u)·Pal(u₁)⁻¹·Pal(u)` where `u = u₁xu₂` with `u₂` x-free.
    pub fn new(u: &Word) -> Self {
        let mut prefixes = PalPrefixes {
            pal: Word::empty(),
            lengths: vec![0],
        };
        let mut last_seen: HashMap<char, usize> = HashMap::new();
        for (i, &x) in u.iter().enumerate() {
            prefixes.append(x, last_seen.get(&x).copied());
            last_seen.insert(x, i);
        }
        prefixes
    }

    /// Extends by the letter `x`, whose previous occurrence in the directive
    /// is at index `previous`.
    fn append(&mut self, x: char, previous: Option<usize>) {
        let current = self.pal.len();
        let mut letters = std::mem::take(&mut self.pal).into_letters();
        match previous {
            None => {
                letters.push(x);
                letters.extend_from_within(..current);
            }
            Some(j) => letters.extend_from_within(self.lengths[j]..current),
        }
        self.pal = Word::new(letters);
        self.lengths.push(self.pal.len());
    }

    /// The same structure for `ux`, given that `self` was built from `u`.
    pub fn extended(&self, u: &Word, x: char) -> Self {
        debug_assert_eq!(u.len() + 1, self.lengths.len());
        let mut next = self.clone();
        next.append(x, u.iter().rposition(|&c| c == x));
        next
    }

    pub fn pal(&self) -> &Word {
        &self.pal
    }

    pub fn into_pal(self) -> Word {
        self.pal
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// `Pal(p)` for the prefix `p` of length `len`.
    pub fn pal_of_prefix(&self, len: usize) -> &[char] {
        &self.pal.letters()[..self.lengths[len]]
    }

    /// `Pal(p⁻)⁻¹·Pal(p)` for the prefix `p` of length `len ≥ 1`.
    pub fn step_label(&self, len: usize) -> &[char] {
        &self.pal.letters()[self.lengths[len - 1]..self.lengths[len]]
    }

    /// Restriction to the prefix of the directive of length `len`.
    pub fn truncated(&self, len: usize) -> Self {
        PalPrefixes {
            pal: Word::from(self.pal_of_prefix(len)),
            lengths: self.lengths[..=len].to_vec(),
        }
    }
}

/// `Pal(u)` via the prefix-length recurrence; agrees with [`pal_word`].
pub fn pal_word_fast(u: &Word) -> Word {
    PalPrefixes::new(u).into_pal()
}

/// `|Pal(u)|` without materializing the word; `None` on overflow.
pub fn pal_length(u: &Word) -> Option<usize> {
    let mut lengths = vec![0usize];
    let mut last_seen: HashMap<char, usize> = HashMap::new();
    for (i, &x) in u.iter().enumerate() {
        let current = *lengths.last().unwrap();
        let next = match last_seen.get(&x) {
            None => current.checked_mul(2)?.checked_add(1)?,
            Some(&j) => current.checked_mul(2)? - lengths[j],
        };
        lengths.push(next);
        last_seen.insert(x, i);
    }
    lengths.last().copied()
}

/// Palindromization on the free group: `Pal(1) = 1` and
/// `Pal(au) = a·R_a(Pal(u))` for reduced `au`.
pub fn pal_group(u: &GroupElement) -> GroupElement {
    u.letters()
        .iter()
        .rev()
        .fold(GroupElement::identity(), |pal, &a| {
            let mut next = GroupElement::letter(a);
            next.multiply_assign(&apply_letter(Side::Right, a, &pal));
            next
        })
}

/// `Pal(uv) = Pal(u)·R_u(Pal(v))`.
pub fn check_justin_r(u: &GroupElement, v: &GroupElement) -> bool {
    let lhs = pal_group(&u.multiply(v));
    let rhs = pal_group(u).multiply(&apply_r(u, &pal_group(v)));
    lhs == rhs
}

/// `Pal(uv) = L_u(Pal(v))·Pal(u)`.
pub fn check_justin_l(u: &GroupElement, v: &GroupElement) -> bool {
    let lhs = pal_group(&u.multiply(v));
    let rhs = apply_l(u, &pal_group(v)).multiply(&pal_group(u));
    lhs == rhs
}

/// An element of the semidirect product of FG(A) with itself along `R`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemidirectPair {
    pub first: GroupElement,
    pub second: GroupElement,
}

impl SemidirectPair {
    pub fn new(first: GroupElement, second: GroupElement) -> Self {
        Self { first, second }
    }

    pub fn identity() -> Self {
        Self::new(GroupElement::identity(), GroupElement::identity())
    }

    /// `δ(w) = (Pal(w), w)`.
    pub fn delta(w: &GroupElement) -> Self {
        Self::new(pal_group(w), w.clone())
    }

    /// `(u, v)(r, s) = (u·R_v(r), v·s)`.
    pub fn multiply(&self, other: &SemidirectPair) -> SemidirectPair {
        SemidirectPair {
            first: self.first.multiply(&apply_r(&self.second, &other.first)),
            second: self.second.multiply(&other.second),
        }
    }
}

pub fn semidirect_multiply(p: &SemidirectPair, q: &SemidirectPair) -> SemidirectPair {
    p.multiply(q)
}

/// State `R_u` of the sequential transducer computing `Pal`, identified by
/// the directive `u` read so far.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TransducerState {
    directive: GroupElement,
}

impl TransducerState {
    /// The initial state `R_1`.
    pub fn initial() -> Self {
        Self::default()
    }

    pub fn directive(&self) -> &GroupElement {
        &self.directive
    }

    /// Moves from `R_u` to `R_{ua}`, emitting `R_u(a)`.
    pub fn step(&self, a: char) -> (TransducerState, Word) {
        let emitted = apply_r(&self.directive, &GroupElement::generator(a))
            .to_word()
            .expect("R_u maps generators to positive words when u is positive");
        let mut directive = self.directive.clone();
        directive.push(SignedLetter::positive(a));
        (TransducerState { directive }, emitted)
    }
}

pub fn transducer_step(state: &TransducerState, a: char) -> (TransducerState, Word) {
    state.step(a)
}

/// Runs the transducer from `R_1` over `w`, returning every emission.
pub fn transduce(w: &Word) -> Vec<Word> {
    let mut state = TransducerState::initial();
    w.iter()
        .map(|&a| {
            let (next, emitted) = state.step(a);
            state = next;
            emitted
        })
        .collect()
}

/// Whether `Pal(u) = x⁻¹·R_u(x)`.
pub fn cocycle_identity_holds(x: &GroupElement, u: &GroupElement) -> bool {
    pal_group(u) == x.invert().multiply(&apply_r(u, x))
}

/// Searches reduced `x` with `|x| ≤ max_len` such that `Pal(a) = x⁻¹·R_a(x)`
/// for every generator `a`. Candidates are tried shortest first, in the order
/// of [`GroupElement::enumerate`]; the first hit is returned.
pub fn cocycle_witness_search(alphabet: &Alphabet, max_len: usize) -> Option<GroupElement> {
    let generators: Vec<GroupElement> = alphabet
        .letters()
        .iter()
        .map(|&a| GroupElement::generator(a))
        .collect();
    GroupElement::enumerate(alphabet, max_len)
        .into_iter()
        .find(|x| generators.iter().all(|a| cocycle_identity_holds(x, a)))
}

/// Checks that `u` is a word over `alphabet` and returns `Pal(u)`.
pub fn checked_pal_word(alphabet: &Alphabet, u: &Word) -> Result<Word> {
    alphabet.check(u)?;
    Ok(pal_word_fast(u))
}
