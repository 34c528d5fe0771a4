use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

use super::{twist_notation, twist_splits, with_twist};

/// Temporary form `(x^{k₁}Y^{k₂}…x^{kₙ})(aba)^j`: a freely reduced body whose
/// syllables alternate in sign, followed by a power of the half twist.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TfWord {
    body: Word,
    j: i64,
}

impl TfWord {
    pub fn new(body: Word, j: i64) -> Result<TfWord> {
        let syl = body
            .syllables()
            .map_err(|_| Error::invalid("TF", format!("body `{body}` is not freely reduced")))?;
        if let Some(i) = syl
            .windows(2)
            .position(|p| p[0].is_positive() == p[1].is_positive())
        {
            return Err(Error::invalid(
                "TF",
                format!("syllables {i} and {} have the same sign", i + 1),
            ));
        }
        Ok(TfWord { body, j })
    }

    pub fn body(&self) -> &Word {
        &self.body
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    pub fn to_word(&self) -> Word {
        with_twist(&self.body, self.j)
    }

    /// Letter count including `3|j|` for the twist factor.
    pub fn len(&self) -> usize {
        self.body.len() + 3 * self.j.unsigned_abs() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of negative letters in the body.
    pub fn negative_letters(&self) -> usize {
        self.body
            .letters()
            .iter()
            .filter(|l| !l.is_positive())
            .count()
    }
}

impl fmt::Display for TfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&twist_notation(&self.body, self.j))
    }
}

pub fn is_tf(w: &Word) -> Option<TfWord> {
    twist_splits(w)
        .into_iter()
        .find_map(|(body, j)| TfWord::new(body, j).ok())
}

/// Occurrences of `ab`, `ba`, `AB` and `BA` as subwords.
pub fn mixed_pair_count(w: &Word) -> usize {
    w.letters()
        .windows(2)
        .filter(|p| p[0].is_positive() == p[1].is_positive() && p[0].base() != p[1].base())
        .count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Psi1Output {
    pub tf: TfWord,
    /// Same-sign mixed pairs left after the half twists were pulled out; each
    /// one costs two letters in the temporary form.
    pub mixed_pair_count: usize,
    /// Negative letters in the resulting body.
    pub negative_letters: usize,
}

fn find_triple(letters: &[Letter]) -> Option<(usize, i64)> {
    letters.windows(3).enumerate().find_map(|(i, t)| {
        let mixed = t[0].is_positive() == t[1].is_positive() && t[0].base() != t[1].base();
        (mixed && t[2] == t[0]).then(|| (i, if t[0].is_positive() { 1 } else { -1 }))
    })
}

/// Any word → temporary form.
///
/// Frees the word, pulls every `aba`/`bab`/`ABA`/`BAB` to the right end, then
/// rewrites each same-sign syllable pair `x^k y^l` as `x^{k-1}Y x^{l-1}(yxy)`,
/// scanning from the left and re-reducing until the syllable signs alternate.
pub fn psi1(w: &Word) -> Result<Psi1Output> {
    let start = w.free_reduce();
    let bound = 4 * start.len() * start.len() + 4;
    let mut steps = 0usize;
    let guard = |steps: &mut usize| {
        *steps += 1;
        if *steps > bound {
            Err(Error::IterationGuard {
                word: w.to_string(),
                bound,
            })
        } else {
            Ok(())
        }
    };

    let mut letters = start.into_letters();
    let mut j = 0i64;
    while let Some((pos, sign)) = find_triple(&letters) {
        guard(&mut steps)?;
        let tail: Vec<Letter> = letters[pos + 3..].iter().map(|l| l.swapped()).collect();
        letters.truncate(pos);
        letters.extend(tail);
        letters = Word::from_letters(letters).free_reduce().into_letters();
        j += sign;
    }
    let mut body = Word::from_letters(letters);
    let pairs = mixed_pair_count(&body);

    loop {
        let syl = body.runs();
        let Some(idx) = syl
            .windows(2)
            .position(|p| p[0].is_positive() == p[1].is_positive())
        else {
            break;
        };
        guard(&mut steps)?;
        let (x, y) = (syl[idx], syl[idx + 1]);
        let sign = if x.is_positive() { 1 } else { -1 };
        let mut out = Word::from_syllables(&syl[..idx]).into_letters();
        out.extend(std::iter::repeat_n(x.letter(), x.len() - 1));
        out.push(y.letter().inverse());
        out.extend(std::iter::repeat_n(x.letter(), y.len() - 1));
        out.extend(Word::from_syllables(&syl[idx + 2..]).swap().into_letters());
        body = Word::from_letters(out).free_reduce();
        j += sign;
    }

    let tf = TfWord::new(body, j)?;
    Ok(Psi1Output {
        negative_letters: tf.negative_letters(),
        mixed_pair_count: pairs,
        tf,
    })
}
