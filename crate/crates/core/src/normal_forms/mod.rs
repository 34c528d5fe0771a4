//! Normal forms for B₃ and the rewriting maps between them.
//!
//! * [`CfWord`]: `w'(aba)^k` with `w'` almost even (coordinates on the Cayley graph).
//! * [`RgForm`]: right-greedy `a^{k₁}b^{k₂}…(aba)^j`, positive prefix, interior exponents > 1.
//! * [`TfWord`]: alternating-sign body times `(aba)^j`, the intermediate of [`psi1`].
//! * [`SlWord`]: short-lex least representative under `a < A < b < B`.
//!
//! `phi1`/`phi2` convert between CF and RG; `psi1` then `psi2` take any word to
//! its short-lex form.

mod cf;
mod rg;
mod sl;
mod tf;

pub use cf::{is_cf, to_cf, CfWord};
pub use rg::{is_rg, phi1, phi2, to_rg, RgForm};
pub use sl::{element_length, equal, is_sl, psi2, shortlex, try_shortlex, SlFamily, SlWord};
pub use tf::{is_tf, mixed_pair_count, psi1, Psi1Output, TfWord};

use crate::word::{Letter, Word};

/// `aba` for `sign > 0`, `ABA` otherwise.
pub(crate) fn half_twist(sign: i64) -> [Letter; 3] {
    if sign > 0 {
        [Letter::A, Letter::B, Letter::A]
    } else {
        [Letter::AInv, Letter::BInv, Letter::AInv]
    }
}

/// The word `u·(aba)^k`.
pub(crate) fn with_twist(u: &Word, k: i64) -> Word {
    let mut letters = u.letters().to_vec();
    for _ in 0..k.unsigned_abs() {
        letters.extend_from_slice(&half_twist(k));
    }
    Word::from_letters(letters)
}

/// `u(aba)^k` in syllable notation, e.g. `B(aba)^1`.
pub(crate) fn twist_notation(u: &Word, k: i64) -> String {
    let prefix = if u.is_empty() {
        String::new()
    } else {
        u.compressed()
    };
    format!("{prefix}(aba)^{k}")
}

/// A word interleaved with half-twist factors `(aba)^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Token {
    Letter(Letter),
    Twist(i64),
}

/// Moves every half-twist to the right end using `(aba)x = λ(x)(aba)`.
/// Returns the remaining letters (not reduced) and the total twist power.
pub(crate) fn pull_twists_right(tokens: &[Token]) -> (Word, i64) {
    let mut letters = Vec::with_capacity(tokens.len());
    let mut power = 0;
    for t in tokens {
        match *t {
            Token::Letter(l) if power % 2 == 0 => letters.push(l),
            Token::Letter(l) => letters.push(l.swapped()),
            Token::Twist(p) => power += p,
        }
    }
    (Word::from_letters(letters), power)
}

/// `w·(aba)^{sign}` rewritten with the half-twist placed at letter offset `pos`,
/// then freely reduced.
pub(crate) fn insert_twist(w: &Word, pos: usize, sign: i64) -> Word {
    let (head, tail) = w.letters().split_at(pos);
    let mut letters = head.to_vec();
    letters.extend_from_slice(&half_twist(sign));
    letters.extend(tail.iter().map(|l| l.swapped()));
    Word::from_letters(letters).free_reduce()
}

/// Splits trailing `(aba)^{±1}` blocks off a literal word, largest power first.
pub(crate) fn twist_splits(w: &Word) -> Vec<(Word, i64)> {
    let letters = w.letters();
    let mut out = Vec::new();
    for sign in [1i64, -1] {
        let block = half_twist(sign);
        let mut k = 0usize;
        while letters.len() >= 3 * (k + 1) && letters[letters.len() - 3 * (k + 1)..][..3] == block {
            k += 1;
        }
        for n in (1..=k).rev() {
            let prefix = Word::from_letters(letters[..letters.len() - 3 * n].to_vec());
            out.push((prefix, sign * n as i64));
        }
    }
    out.push((w.clone(), 0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingerprint::equal_elements;
    use crate::word::w;

    #[test]
    fn pulling_twists_preserves_the_element() {
        let tokens = [
            Token::Letter(Letter::AInv),
            Token::Letter(Letter::B),
            Token::Twist(-1),
            Token::Letter(Letter::BInv),
            Token::Letter(Letter::A),
            Token::Twist(-1),
            Token::Letter(Letter::AInv),
        ];
        let (rest, k) = pull_twists_right(&tokens);
        assert_eq!((rest.clone(), k), (w("AbAbA"), -2));
        let literal = w("AbABABaABAA");
        assert!(equal_elements(&with_twist(&rest, k), &literal));
    }

    #[test]
    fn insert_twist_is_right_multiplication() {
        let body = w("a^2B^2aB^2");
        for pos in 0..=body.len() {
            for sign in [1, -1] {
                let moved = insert_twist(&body, pos, sign);
                assert!(equal_elements(&moved, &with_twist(&body, sign)));
            }
        }
    }

    #[test]
    fn splits() {
        assert_eq!(twist_splits(&w("Baba")), vec![(w("B"), 1), (w("Baba"), 0)]);
        assert_eq!(
            twist_splits(&w("ABAABA")),
            vec![(Word::empty(), -2), (w("ABA"), -1), (w("ABAABA"), 0)]
        );
    }
}
