use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Letter, Syllable, Word};

use super::{pull_twists_right, to_cf, twist_notation, twist_splits, with_twist, CfWord, Token};

/// Right-greedy form `a^{k₁}b^{k₂}…(aba)^j`: positive syllables with alternating
/// bases, every interior exponent at least 2. Stored structurally, so a value of
/// this type is always valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RgForm {
    prefix: Vec<Syllable>,
    j: i64,
}

impl RgForm {
    pub fn new(prefix: Vec<Syllable>, j: i64) -> Result<RgForm> {
        for (i, s) in prefix.iter().enumerate() {
            if s.exponent < 1 {
                return Err(Error::invalid(
                    "RG",
                    format!("syllable {i} has exponent {}", s.exponent),
                ));
            }
            if i > 0 && prefix[i - 1].base == s.base {
                return Err(Error::invalid(
                    "RG",
                    format!("syllables {} and {i} share a base", i - 1),
                ));
            }
            if i > 0 && i + 1 < prefix.len() && s.exponent < 2 {
                return Err(Error::invalid(
                    "RG",
                    format!("interior syllable {i} has exponent 1"),
                ));
            }
        }
        Ok(RgForm { prefix, j })
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.prefix
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    pub fn prefix_word(&self) -> Word {
        Word::from_syllables(&self.prefix)
    }

    pub fn to_word(&self) -> Word {
        with_twist(&self.prefix_word(), self.j)
    }

    pub fn len(&self) -> usize {
        self.prefix.iter().map(Syllable::len).sum::<usize>() + 3 * self.j.unsigned_abs() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for RgForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&twist_notation(&self.prefix_word(), self.j))
    }
}

/// Reads a literal word as a right-greedy form.
pub fn is_rg(w: &Word) -> Option<RgForm> {
    twist_splits(w).into_iter().find_map(|(prefix, j)| {
        if !prefix.letters().iter().all(|l| l.is_positive()) {
            return None;
        }
        RgForm::new(prefix.syllables().ok()?, j).ok()
    })
}

fn expand_negative(l: Letter) -> [Token; 3] {
    // A ≡ b(ABA)b and B ≡ a(ABA)a.
    let around = Token::Letter(l.swapped().inverse());
    [around, Token::Twist(-1), around]
}

/// CF → RG.
///
/// Stage one replaces each negative pair `XY` (distinct bases) by `y(ABA)`,
/// which is `(yY)XY` read through `YXY = ABA`. Stage two replaces every
/// remaining negative letter `X` by `y(ABA)y`. Twists are pulled to the right
/// end after each stage.
pub fn phi1(c: &CfWord) -> Result<RgForm> {
    let letters = c.prefix().letters();
    let mut tokens = Vec::with_capacity(letters.len() + 4);
    let mut i = 0;
    while i < letters.len() {
        let x = letters[i];
        match letters.get(i + 1) {
            Some(&y) if !x.is_positive() && !y.is_positive() && x.base() != y.base() => {
                tokens.push(Token::Letter(y.inverse()));
                tokens.push(Token::Twist(-1));
                i += 2;
            }
            _ => {
                tokens.push(Token::Letter(x));
                i += 1;
            }
        }
    }
    let (middle, c1) = pull_twists_right(&tokens);

    let tokens: Vec<Token> = middle
        .letters()
        .iter()
        .flat_map(|&l| {
            if l.is_positive() {
                vec![Token::Letter(l)]
            } else {
                expand_negative(l).to_vec()
            }
        })
        .collect();
    let (positive, c2) = pull_twists_right(&tokens);
    let syllables = positive.free_reduce().syllables()?;
    RgForm::new(syllables, c.k() + c1 + c2)
}

/// RG → CF.
///
/// Repeatedly takes the first odd syllable `x^e` that is not last, followed by
/// `y^m`, and rewrites `x^e y^m ≡ x^{e-1}·Y²X²Y²…·z·(xyx)^m` with `m - 1`
/// squared negative syllables and a single letter `z` (`Y` for odd `m`, `X`
/// for even `m`). The twist power is pulled right, which swaps the remainder
/// when `m` is odd.
pub fn phi2(r: &RgForm) -> Result<CfWord> {
    let mut w = r.prefix_word();
    let mut k = r.j();
    let bound = 4 * (w.len() + 1);
    for _ in 0..bound {
        let syl = w.runs();
        let Some(idx) = (0..syl.len().saturating_sub(1)).find(|&i| !syl[i].is_even()) else {
            return Ok(CfWord::new_unchecked(w, k));
        };
        let (x, y) = (syl[idx], syl[idx + 1]);
        if !x.is_positive() || !y.is_positive() {
            return Err(Error::invalid(
                "RG",
                format!("phi2 reached a negative odd syllable in `{w}`"),
            ));
        }
        let m = y.exponent;
        let (big_x, big_y) = (x.letter().inverse(), y.letter().inverse());

        let mut letters = Word::from_syllables(&syl[..idx]).into_letters();
        letters.extend(std::iter::repeat_n(x.letter(), (x.exponent - 1) as usize));
        for t in 0..m - 1 {
            let l = if t % 2 == 0 { big_y } else { big_x };
            letters.extend([l, l]);
        }
        letters.push(if m % 2 == 1 { big_y } else { big_x });
        let rest = Word::from_syllables(&syl[idx + 2..]).swap_pow(m);
        letters.extend_from_slice(rest.letters());

        w = Word::from_letters(letters).free_reduce();
        k += m;
    }
    Err(Error::IterationGuard {
        word: r.to_string(),
        bound,
    })
}

/// The right-greedy form of the element of `w`.
pub fn to_rg(w: &Word) -> Result<RgForm> {
    phi1(&to_cf(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingerprint::equal_elements;
    use crate::normal_forms::pull_twists_right;
    use crate::word::{w, Base};

    fn rg(text: &str, j: i64) -> RgForm {
        RgForm::new(w(text).syllables().unwrap(), j).unwrap()
    }

    fn cf(text: &str, k: i64) -> CfWord {
        CfWord::new(w(text), k).unwrap()
    }

    #[test]
    fn validation() {
        assert!(RgForm::new(
            vec![Syllable::new(Base::A, 1), Syllable::new(Base::B, 1)],
            0
        )
        .is_ok());
        let aba = vec![
            Syllable::new(Base::A, 1),
            Syllable::new(Base::B, 1),
            Syllable::new(Base::A, 1),
        ];
        assert!(RgForm::new(aba, 0).is_err());
        assert!(RgForm::new(vec![Syllable::new(Base::A, -2)], 0).is_err());
        assert_eq!(is_rg(&w("aba")), Some(rg("", 1)));
        assert_eq!(is_rg(&w("ab")), Some(rg("ab", 0)));
        assert_eq!(is_rg(&w("aB")), None);
    }

    #[test]
    fn phi1_stage_one_trace() {
        // AABBBBAA ↦ A(bB)ABBB(aA)BAA ↦ AbA²bA(ABA)²
        let tokens = [
            Token::Letter(Letter::AInv),
            Token::Letter(Letter::B),
            Token::Twist(-1),
            Token::Letter(Letter::BInv),
            Token::Letter(Letter::BInv),
            Token::Letter(Letter::A),
            Token::Twist(-1),
            Token::Letter(Letter::AInv),
        ];
        assert_eq!(pull_twists_right(&tokens), (w("AbA^2bA"), -2));
        let out = phi1(&cf("AABBBBAA", 0)).unwrap();
        assert!(equal_elements(&out.to_word(), &w("AABBBBAA")));
    }

    #[test]
    fn phi1_examples() {
        assert_eq!(phi1(&cf("A^2", 0)).unwrap(), rg("ba^2b", -2));
        assert_eq!(phi1(&cf("a^3", 0)).unwrap(), rg("a^3", 0));
        assert_eq!(phi1(&cf("", 5)).unwrap(), rg("", 5));
    }

    #[test]
    fn phi2_examples() {
        assert_eq!(phi2(&rg("ba^2b", -2)).unwrap(), cf("A^2", 0));
        assert_eq!(phi2(&rg("a^2b^2", 0)).unwrap(), cf("a^2b^2", 0));
        assert_eq!(phi2(&rg("ab", 0)).unwrap(), cf("B", 1));
        for (text, j) in [
            ("b^2a^3b^2", 0),
            ("a^3b^3a", 1),
            ("ba^2b", -2),
            ("a^3b^2a^5", 3),
        ] {
            let r = rg(text, j);
            assert_eq!(phi2(&r).unwrap(), to_cf(&r.to_word()), "{r}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(rg("ba^2b", -2).to_string(), "ba^2b(aba)^-2");
    }
}
