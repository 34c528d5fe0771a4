//! Letters, words and syllables over the alphabet `{a, A, b, B}`.
//!
//! Capital letters denote inverses: `A = a⁻¹`, `B = b⁻¹`. Words are immutable
//! values; every operation returns a fresh [`Word`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the two generators of B₃.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Base {
    A,
    B,
}

impl Base {
    pub fn other(self) -> Base {
        match self {
            Base::A => Base::B,
            Base::B => Base::A,
        }
    }
}

/// A generator or its inverse.
///
/// The derived ordering is the short-lex letter order `a < A < b < B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    /// `a`
    A,
    /// `A = a⁻¹`
    AInv,
    /// `b`
    B,
    /// `B = b⁻¹`
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub fn new(base: Base, positive: bool) -> Letter {
        match (base, positive) {
            (Base::A, true) => Letter::A,
            (Base::A, false) => Letter::AInv,
            (Base::B, true) => Letter::B,
            (Base::B, false) => Letter::BInv,
        }
    }

    pub fn base(self) -> Base {
        match self {
            Letter::A | Letter::AInv => Base::A,
            Letter::B | Letter::BInv => Base::B,
        }
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Letter::A | Letter::B)
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.base(), !self.is_positive())
    }

    /// The map λ on a single letter: swap the base, keep the sign.
    pub fn swapped(self) -> Letter {
        Letter::new(self.base().other(), self.is_positive())
    }

    /// Index into `Letter::ALL`, used as the automaton alphabet index.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::AInv => 'A',
            Letter::B => 'b',
            Letter::BInv => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'A' => Some(Letter::AInv),
            'b' => Some(Letter::B),
            'B' => Some(Letter::BInv),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A maximal run `s^e` of one generator; the sign of `exponent` is the direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub base: Base,
    pub exponent: i64,
}

impl Syllable {
    pub fn new(base: Base, exponent: i64) -> Syllable {
        Syllable { base, exponent }
    }

    pub fn letter(&self) -> Letter {
        Letter::new(self.base, self.exponent > 0)
    }

    pub fn len(&self) -> usize {
        self.exponent.unsigned_abs() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.exponent == 0
    }

    pub fn is_positive(&self) -> bool {
        self.exponent > 0
    }

    pub fn is_even(&self) -> bool {
        self.exponent % 2 == 0
    }
}

/// A finite sequence of letters. The empty word represents the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses the textual word grammar
    ///
    /// ```text
    /// word := term*
    /// term := atom ['^' ['-'] digits]
    /// atom := 'a' | 'b' | 'A' | 'B' | 'ε' | '(' word ')'
    /// ```
    ///
    /// A negative exponent takes the group inverse. The result is not reduced.
    pub fn parse(text: &str) -> Result<Word> {
        let chars: Vec<char> = text.chars().collect();
        let mut parser = Parser {
            chars: &chars,
            pos: 0,
        };
        let word = parser.word()?;
        if parser.pos < chars.len() {
            return Err(parser.error(format!("unexpected character `{}`", chars[parser.pos])));
        }
        Ok(word)
    }

    /// Builds a word from syllables, dropping zero exponents.
    pub fn from_syllables(syllables: &[Syllable]) -> Word {
        let mut letters = Vec::new();
        for s in syllables {
            letters.extend(std::iter::repeat_n(s.letter(), s.len()));
        }
        Word(letters)
    }

    pub fn power(&self, n: i64) -> Word {
        let unit = if n < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(unit.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&unit.0);
        }
        Word(letters)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[0] != p[1].inverse())
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Syllable decomposition of a freely reduced word.
    pub fn syllables(&self) -> Result<Vec<Syllable>> {
        if !self.is_freely_reduced() {
            return Err(Error::NotFreelyReduced(self.to_string()));
        }
        Ok(self.runs())
    }

    /// Maximal runs of equal letters; agrees with `syllables` on reduced words.
    pub(crate) fn runs(&self) -> Vec<Syllable> {
        let mut out: Vec<Syllable> = Vec::new();
        for &l in &self.0 {
            let step = if l.is_positive() { 1 } else { -1 };
            match out.last_mut() {
                Some(s) if s.letter() == l => s.exponent += step,
                _ => out.push(Syllable::new(l.base(), step)),
            }
        }
        out
    }

    /// Every syllable is even except possibly the last one.
    pub fn is_almost_even(&self) -> Result<bool> {
        let syl = self.syllables()?;
        Ok(syl.iter().rev().skip(1).all(Syllable::is_even))
    }

    /// The map λ: `a ↔ b`, `A ↔ B`.
    pub fn swap(&self) -> Word {
        Word(self.0.iter().map(|l| l.swapped()).collect())
    }

    /// Applies λ when `times` is odd.
    pub fn swap_pow(&self, times: i64) -> Word {
        if times % 2 == 0 {
            self.clone()
        } else {
            self.swap()
        }
    }

    /// Letterwise inversion without reversal. This is the automorphism
    /// `a ↦ A, b ↦ B`, which sends `aba` to `ABA`.
    pub fn flip_signs(&self) -> Word {
        Word(self.0.iter().map(|l| l.inverse()).collect())
    }

    /// Group inverse: reverse and invert each letter.
    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0
            .iter()
            .map(|l| if l.is_positive() { 1 } else { -1 })
            .sum()
    }

    /// Freely reduces, then strips cancelling first/last letter pairs.
    pub fn cyclic_reduce(&self) -> Word {
        let w = self.free_reduce().0;
        let (mut lo, mut hi) = (0, w.len());
        while hi - lo >= 2 && w[lo] == w[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word(w[lo..hi].to_vec())
    }

    /// The `|w|` rotations, starting with `w` itself.
    pub fn cyclic_permutations(&self) -> Vec<Word> {
        (0..self.len()).map(|i| self.rotate(i)).collect()
    }

    pub fn rotate(&self, i: usize) -> Word {
        let mut letters = self.0.clone();
        if !letters.is_empty() {
            letters.rotate_left(i % self.0.len());
        }
        Word(letters)
    }

    pub fn contains(&self, pattern: &[Letter]) -> bool {
        self.find(pattern).is_some()
    }

    pub fn find(&self, pattern: &[Letter]) -> Option<usize> {
        if pattern.is_empty() {
            return Some(0);
        }
        self.0.windows(pattern.len()).position(|w| w == pattern)
    }

    /// Syllable notation such as `a^2B^3`.
    pub fn compressed(&self) -> String {
        if self.is_empty() {
            return "ε".to_string();
        }
        let mut out = String::new();
        for s in self.runs() {
            out.push(s.letter().to_char());
            if s.len() > 1 {
                out.push_str(&format!("^{}", s.len()));
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Word {
        Word(letters)
    }
}

/// Shorthand for building words from literal letter strings; panics on bad input.
pub fn w(text: &str) -> Word {
    Word::parse(text).unwrap_or_else(|e| panic!("bad word literal {text:?}: {e}"))
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word> {
        let mut letters = Vec::new();
        while let Some(c) = self.peek() {
            if c == ')' {
                break;
            }
            let term = self.term()?;
            letters.extend(term.0);
        }
        Ok(Word(letters))
    }

    fn term(&mut self) -> Result<Word> {
        let atom = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(atom);
        }
        self.pos += 1;
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits after `^`"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let n: i64 = digits.parse().map_err(|_| Error::Parse {
            pos: start,
            message: format!("exponent `{digits}` is too large"),
        })?;
        Ok(atom.power(if negative { -n } else { n }))
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.word()?;
                if self.peek() != Some(')') {
                    return Err(self.error("missing `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('ε') => {
                self.pos += 1;
                Ok(Word::empty())
            }
            Some('^') => Err(self.error("exponent without a preceding letter or group")),
            Some(c) => match Letter::from_char(c) {
                Some(l) => {
                    self.pos += 1;
                    Ok(Word(vec![l]))
                }
                None => Err(self.error(format!("unexpected character `{c}`"))),
            },
            None => Err(self.error("unexpected end of input")),
        }
    }
}
