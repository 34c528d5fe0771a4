//! The subword characterization of geodesics in B₃ and translation lengths.
//!
//! A freely reduced word is geodesic iff it avoids two kinds of conflict:
//!
//! * the star conflict: a subword from `{ab, ba}` together with one from `{AB, BA}`;
//! * the double-star conflict: a subword `aba` or `bab` together with any of
//!   `A`, `B`, or a subword `ABA` or `BAB` together with any of `a`, `b`.
//!
//! Subwords are contiguous letter substrings of the literal word.

use serde::Serialize;

use crate::normal_forms::shortlex;
use crate::word::{Letter, Word};

/// First positions (0-based) of the conflicting positive and negative mixed pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StarViolation {
    pub positive_pair: usize,
    pub negative_pair: usize,
}

/// Position of a half-twist triple and of a letter of the opposite sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DoubleStarViolation {
    pub triple: usize,
    pub letter: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    pub reduced: bool,
    pub star: Option<StarViolation>,
    pub doublestar: Option<DoubleStarViolation>,
}

impl ViolationReport {
    pub fn is_geodesic(&self) -> bool {
        self.reduced && self.star.is_none() && self.doublestar.is_none()
    }
}

fn is_mixed_pair(x: Letter, y: Letter, positive: bool) -> bool {
    x.is_positive() == positive && y.is_positive() == positive && x.base() != y.base()
}

fn is_triple(t: &[Letter], positive: bool) -> bool {
    is_mixed_pair(t[0], t[1], positive) && t[2] == t[0]
}

pub fn violates_star(w: &Word) -> Option<StarViolation> {
    let letters = w.letters();
    let first = |positive: bool| {
        letters
            .windows(2)
            .position(|p| is_mixed_pair(p[0], p[1], positive))
    };
    Some(StarViolation {
        positive_pair: first(true)?,
        negative_pair: first(false)?,
    })
}

pub fn violates_doublestar(w: &Word) -> Option<DoubleStarViolation> {
    let letters = w.letters();
    [true, false].into_iter().find_map(|positive| {
        let triple = letters.windows(3).position(|t| is_triple(t, positive))?;
        let letter = letters.iter().position(|l| l.is_positive() != positive)?;
        Some(DoubleStarViolation { triple, letter })
    })
}

pub fn check(w: &Word) -> ViolationReport {
    ViolationReport {
        reduced: w.is_freely_reduced(),
        star: violates_star(w),
        doublestar: violates_doublestar(w),
    }
}

pub fn is_geodesic(w: &Word) -> bool {
    check(w).is_geodesic()
}

/// Translation length together with the word it was read from: a cyclically
/// reduced geodesic all of whose rotations are geodesic.
pub fn translation_length_witness(w: &Word) -> (usize, Word) {
    let mut x = shortlex(w).into_word();
    'outer: loop {
        x = x.cyclic_reduce();
        for i in 1..x.len() {
            let p = x.rotate(i);
            if !is_geodesic(&p) {
                x = shortlex(&p).into_word();
                continue 'outer;
            }
        }
        return (x.len(), x);
    }
}

/// `lim |gⁿ|/n`, which in B₃ is the shortest length in the conjugacy class.
pub fn translation_length(w: &Word) -> usize {
    translation_length_witness(w).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn star_examples() {
        let v = violates_star(&w("a^2b^2A^2B^2")).unwrap();
        assert_eq!((v.positive_pair, v.negative_pair), (1, 5));
        assert_eq!(violates_star(&w("aBaBaB")), None);
        assert!(violates_star(&w("abAB")).is_some());
        assert_eq!(violates_star(&w("abab")), None);
    }

    #[test]
    fn doublestar_examples() {
        assert_eq!(
            violates_doublestar(&w("abaB")),
            Some(DoubleStarViolation {
                triple: 0,
                letter: 3
            })
        );
        assert_eq!(
            violates_doublestar(&w("babA")),
            Some(DoubleStarViolation {
                triple: 0,
                letter: 3
            })
        );
        assert_eq!(violates_doublestar(&w("(aba)^2")), None);
        assert_eq!(
            violates_doublestar(&w("aBAB")),
            Some(DoubleStarViolation {
                triple: 1,
                letter: 0
            })
        );
    }

    #[test]
    fn geodesic_examples() {
        assert!(!is_geodesic(&w("a^2b^2A^2B^2")));
        assert!(is_geodesic(&w("aBaBaB")));
        assert!(!is_geodesic(&w("aAb")));
        assert!(is_geodesic(&Word::empty()));
        let report = check(&w("abAB"));
        assert!(report.reduced && report.star.is_some() && report.doublestar.is_none());
    }

    #[test]
    fn translation_length_examples() {
        assert_eq!(translation_length(&Word::empty()), 0);
        assert_eq!(translation_length(&w("a")), 1);
        assert_eq!(translation_length(&w("abA")), 1);
        assert_eq!(translation_length(&w("ab")), 2);
        assert_eq!(translation_length(&w("(aba)^2")), 6);
        assert_eq!(translation_length(&w("aA")), 0);
    }
}
