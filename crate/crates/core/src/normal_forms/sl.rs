use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Base, Letter, Syllable, Word};

use super::{insert_twist, psi1, TfWord};

/// Which of the four short-lex patterns a word follows:
///
/// 1. `(a^i)(b A b … A b)(a^{k₁}b^{k₂}…a^{kₙ}b^k)`
/// 2. `(a^i)(b A b … A b)(a^{k₁}b^{k₂}…b^{kₙ}a^k)`
/// 3. `(a^i)(B a B … a B)(A^{k₁}B^{k₂}…A^{kₙ}B^k)`
/// 4. `(a^i)(B a B … a B)(A^{k₁}B^{k₂}…B^{kₙ}A^k)`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlFamily {
    One = 1,
    Two = 2,
    Three = 3,
    Four = 4,
}

/// A short-lex normal form with its pattern parameters.
///
/// `lead` is the signed exponent of the leading `a`-run, `middle` the lengths of
/// the alternating-sign section, `tail` the lengths (all > 1) of the same-sign
/// section and `last ∈ {0, 1}` the optional final letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlWord {
    word: Word,
    pub lead: i64,
    pub middle: Vec<usize>,
    pub tail: Vec<usize>,
    pub last: usize,
    pub family: SlFamily,
}

impl SlWord {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

impl fmt::Display for SlWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word.compressed())
    }
}

/// Recognizes the short-lex patterns. The leading `a`-run is read greedily, so
/// the decomposition is unique.
pub fn is_sl(w: &Word) -> Option<SlWord> {
    let syl = w.syllables().ok()?;
    let mut idx = 0;
    let mut lead = 0;
    if let Some(s) = syl.first().filter(|s| s.base == Base::A) {
        lead = s.exponent;
        idx = 1;
    }
    // The middle section alternates b/A (positive track) or B/a (negative track).
    let positive = match syl.get(idx) {
        None => true,
        Some(s) => s.is_positive(),
    };
    let in_middle = |s: &Syllable| (s.base == Base::B) == (s.is_positive() == positive);
    let mut middle = Vec::new();
    while let Some(s) = syl.get(idx).filter(|s| in_middle(s)) {
        middle.push(s.len());
        idx += 1;
    }
    let rest = &syl[idx..];
    if rest.iter().any(|s| s.is_positive() != positive) {
        return None;
    }
    if let Some(first) = rest.first() {
        debug_assert_eq!(first.base, Base::A);
    }
    let (tail, last) = match rest.split_last() {
        Some((end, body)) if end.len() == 1 => (body, 1),
        _ => (rest, 0),
    };
    if tail.iter().any(|s| s.len() < 2) {
        return None;
    }
    let ends_on_a = match (last, rest.last()) {
        (1, Some(end)) => end.base == Base::B,
        (_, Some(end)) => end.base == Base::A,
        (_, None) => true,
    };
    let family = match (positive, ends_on_a) {
        (true, true) => SlFamily::One,
        (true, false) => SlFamily::Two,
        (false, true) => SlFamily::Three,
        (false, false) => SlFamily::Four,
    };
    Some(SlWord {
        word: w.clone(),
        lead,
        middle,
        tail: tail.iter().map(Syllable::len).collect(),
        last,
        family,
    })
}

/// Absorbs `(aba)^j`, `j > 0`, into a temporary-form body.
fn absorb_positive(body: &Word, j: i64) -> Word {
    let negative_at = |w: &Word| w.letters().iter().position(|l| !l.is_positive());
    let mut w = body.clone();
    let mut remaining = j;
    // Negative letters of an alternating body all share one base. When it is
    // `b`, one twist goes before the first negative syllable; this turns every
    // later `B` into `A`.
    if w.letters().contains(&Letter::BInv) {
        let pos = negative_at(&w).expect("body has a negative letter");
        w = insert_twist(&w, pos, 1);
        remaining -= 1;
    }
    while remaining > 0 {
        let Some(last) = w.letters().iter().rposition(|l| !l.is_positive()) else {
            break;
        };
        w = insert_twist(&w, last + 1, 1);
        remaining -= 1;
    }
    // Positive word: each remaining twist goes after the leading a-run.
    while remaining > 0 {
        let pos = w.letters().iter().take_while(|&&l| l == Letter::A).count();
        w = insert_twist(&w, pos, 1);
        remaining -= 1;
    }
    w
}

/// Temporary form → short-lex form.
///
/// For `j > 0` each half twist is absorbed by a negative letter where possible
/// (two letters shorter per twist), first before the first negative syllable
/// when the negatives are `B`s, then after the last negative syllable; any
/// surplus is inserted after the leading `a`-run. `j < 0` is the image of the
/// `j > 0` case under the automorphism `a ↦ A, b ↦ B`.
pub fn psi2(t: &TfWord) -> Result<SlWord> {
    let j = t.j();
    let out = match j.signum() {
        0 => t.body().clone(),
        1 => absorb_positive(t.body(), j),
        _ => absorb_positive(&t.body().flip_signs(), -j).flip_signs(),
    };
    is_sl(&out).ok_or_else(|| Error::invalid("SL", format!("psi2({t}) produced `{out}`")))
}

pub fn try_shortlex(w: &Word) -> Result<SlWord> {
    psi2(&psi1(w)?.tf)
}

/// The short-lex normal form of the element of `w`: `psi2 ∘ psi1`.
pub fn shortlex(w: &Word) -> SlWord {
    try_shortlex(w).unwrap_or_else(|e| panic!("short-lex rewriting failed on `{w}`: {e}"))
}

pub fn equal(u: &Word, w: &Word) -> bool {
    shortlex(u).word == shortlex(w).word
}

/// Word-metric length of the element of `w`.
pub fn element_length(w: &Word) -> usize {
    shortlex(w).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingerprint::equal_elements;
    use crate::word::w;

    #[test]
    fn recognizer() {
        let aba = is_sl(&w("aba")).unwrap();
        assert_eq!(
            (aba.lead, aba.middle.clone(), aba.last, aba.family),
            (1, vec![1], 1, SlFamily::Two)
        );
        assert!(is_sl(&w("bab")).is_none());
        assert!(is_sl(&w("a^3ba")).is_some());
        assert!(is_sl(&w("aAb")).is_none());
        let neg = is_sl(&w("A^2BaBA^2B^3A")).unwrap();
        assert_eq!(neg.lead, -2);
        assert_eq!(neg.middle, vec![1, 1, 1]);
        assert_eq!(neg.tail, vec![2, 3]);
        assert_eq!((neg.last, neg.family), (1, SlFamily::Four));
        assert_eq!(is_sl(&Word::empty()).unwrap().family, SlFamily::One);
        // interior exponent 1 in the tail
        assert!(is_sl(&w("ba^2ba^2")).is_none());
    }

    #[test]
    fn psi2_examples() {
        let t = TfWord::new(w("a^2B^2aB^2"), 2).unwrap();
        assert_eq!(psi2(&t).unwrap().word, w("(a^3)(bAbAb)(a)"));
        let t = TfWord::new(w("a^2B^2aB^2"), 0).unwrap();
        assert_eq!(psi2(&t).unwrap().word, w("a^2B^2aB^2"));
        let t = TfWord::new(w("a^2"), 1).unwrap();
        assert_eq!(psi2(&t).unwrap().word, w("a^3ba"));
    }

    #[test]
    fn psi2_sign_and_base_cases() {
        // one body per leading letter, each with positive and negative twist powers
        for body in ["a^2B^2aB", "BaB^3a", "bA^2b", "AbA^2b^2", "", "a^3"] {
            for j in -3..=3 {
                let t = TfWord::new(w(body), j).unwrap();
                let out = psi2(&t).unwrap();
                assert!(equal_elements(out.word(), &t.to_word()), "{t}");
            }
        }
    }

    #[test]
    fn shortlex_examples() {
        assert_eq!(shortlex(&w("abaB")).word, w("ba"));
        assert_eq!(shortlex(&Word::empty()).word, Word::empty());
        let s = shortlex(&w("a^2b^2A^2B^2"));
        assert_eq!(s.len(), 6);
        assert!(equal_elements(s.word(), &w("a^2b^2A^2B^2")));
        assert!(equal(&w("aba"), &w("bab")));
        assert_eq!(element_length(&w("a^2b^2A^2B^2")), 6);
        assert_eq!(element_length(&w("(aba)^4")), 12);
    }
}
