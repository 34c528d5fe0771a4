//! Faithful invariant of B₃ used as an independent equality and distance oracle.
//!
//! A word maps to the pair (matrix, exponent sum) where
//! `a ↦ [[1,1],[0,1]]` and `b ↦ [[1,0],[-1,1]]`. The matrix map
//! `B₃ → SL(2,ℤ)` has kernel generated by `(aba)⁴`, whose exponent sum is 12,
//! so the pair separates all elements of B₃.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    /// Row-major 2×2 matrix with determinant 1.
    pub m: [BigInt; 4],
    pub exponent_sum: i64,
}

impl Fingerprint {
    pub fn identity() -> Fingerprint {
        Fingerprint {
            m: [BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()],
            exponent_sum: 0,
        }
    }

    pub fn of_letter(l: Letter) -> Fingerprint {
        let mut f = Fingerprint::identity();
        f.push(l);
        f
    }

    /// Right-multiplies by one generator in place.
    pub fn push(&mut self, l: Letter) {
        let [p, q, r, s] = &mut self.m;
        // Right multiplication by an elementary matrix is a column operation.
        match l {
            Letter::A => {
                *q += &*p;
                *s += &*r;
            }
            Letter::AInv => {
                *q -= &*p;
                *s -= &*r;
            }
            Letter::B => {
                *p -= &*q;
                *r -= &*s;
            }
            Letter::BInv => {
                *p += &*q;
                *r += &*s;
            }
        }
        self.exponent_sum += if l.is_positive() { 1 } else { -1 };
    }

    pub fn then(&self, l: Letter) -> Fingerprint {
        let mut f = self.clone();
        f.push(l);
        f
    }

    pub fn mul(&self, other: &Fingerprint) -> Fingerprint {
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &other.m;
        Fingerprint {
            m: [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h],
            exponent_sum: self.exponent_sum + other.exponent_sum,
        }
    }

    pub fn det(&self) -> BigInt {
        let [a, b, c, d] = &self.m;
        a * d - b * c
    }

    pub fn is_identity(&self) -> bool {
        *self == Fingerprint::identity()
    }
}

fn check_relator() {
    static CHECKED: OnceLock<()> = OnceLock::new();
    CHECKED.get_or_init(|| {
        let (a, b) = (
            Fingerprint::of_letter(Letter::A),
            Fingerprint::of_letter(Letter::B),
        );
        assert_eq!(
            a.mul(&b).mul(&a),
            b.mul(&a).mul(&b),
            "generator matrices violate aba = bab"
        );
    });
}

pub fn fingerprint(w: &Word) -> Fingerprint {
    check_relator();
    let mut f = Fingerprint::identity();
    for &l in w.letters() {
        f.push(l);
    }
    f
}

pub fn equal_elements(u: &Word, w: &Word) -> bool {
    fingerprint(u) == fingerprint(w)
}

/// Exact word-metric distances for every element of a ball around the identity.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    radius: usize,
    distances: HashMap<Fingerprint, u32>,
    counts: Vec<u64>,
}

impl DistanceTable {
    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Sphere sizes `b_0, …, b_radius`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    pub fn get(&self, f: &Fingerprint) -> Option<usize> {
        self.distances.get(f).map(|&d| d as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Fingerprint, usize)> {
        self.distances.iter().map(|(f, &d)| (f, d as usize))
    }

    pub fn distance(&self, w: &Word) -> Result<usize> {
        self.get(&fingerprint(w))
            .ok_or_else(|| Error::OutOfRadius(w.to_string()))
    }

    /// `(n, b_n)` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,b_n\n");
        for (n, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{n},{c}\n"));
        }
        out
    }
}

pub const DEFAULT_BALL_LIMIT: usize = 5_000_000;

/// Breadth-first search from the identity over all four generators.
pub fn bfs_ball(radius: usize) -> Result<DistanceTable> {
    bfs_ball_with(radius, DEFAULT_BALL_LIMIT, &Letter::ALL)
}

/// As [`bfs_ball`], with an explicit entry limit and generator expansion order.
pub fn bfs_ball_with(radius: usize, limit: usize, order: &[Letter]) -> Result<DistanceTable> {
    check_relator();
    let mut distances = HashMap::new();
    let origin = Fingerprint::identity();
    distances.insert(origin.clone(), 0u32);
    let mut frontier = vec![origin];
    let mut counts = vec![1u64];
    for d in 1..=radius {
        let mut next = Vec::new();
        for f in &frontier {
            for &l in order {
                let g = f.then(l);
                if !distances.contains_key(&g) {
                    distances.insert(g.clone(), d as u32);
                    next.push(g);
                    if distances.len() > limit {
                        return Err(Error::ResourceLimit { limit });
                    }
                }
            }
        }
        counts.push(next.len() as u64);
        frontier = next;
    }
    Ok(DistanceTable {
        radius,
        distances,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn relator_and_identity() {
        assert_eq!(fingerprint(&w("aba")), fingerprint(&w("bab")));
        assert!(fingerprint(&Word::empty()).is_identity());
        let f = fingerprint(&w("(aba)^4"));
        assert_eq!(f.m, Fingerprint::identity().m);
        assert_eq!(f.exponent_sum, 12);
    }

    #[test]
    fn matrix_of_half_twist_squared_is_minus_identity() {
        // Δ² maps to -I; Δ⁴ to I. Frozen from direct multiplication.
        let f = fingerprint(&w("(aba)^2"));
        let minus_one = BigInt::from(-1);
        assert_eq!(
            f.m,
            [minus_one.clone(), BigInt::zero(), BigInt::zero(), minus_one]
        );
    }

    #[test]
    fn push_agrees_with_matrix_product() {
        let word = w("aBBabAAbaB");
        let mut prod = Fingerprint::identity();
        for &l in word.letters() {
            prod = prod.mul(&Fingerprint::of_letter(l));
        }
        assert_eq!(prod, fingerprint(&word));
        assert_eq!(prod.det(), BigInt::one());
    }

    #[test]
    fn equality_examples() {
        assert!(equal_elements(&w("ab"), &w("Baba")));
        assert!(!equal_elements(&w("ab"), &w("ba")));
        assert!(equal_elements(&w("abBAab"), &w("abBAab").free_reduce()));
    }

    #[test]
    fn small_balls() {
        assert_eq!(bfs_ball(0).unwrap().counts(), &[1]);
        assert_eq!(bfs_ball(1).unwrap().counts(), &[1, 4]);
        assert_eq!(bfs_ball(3).unwrap().counts(), &[1, 4, 12, 30]);
    }

    #[test]
    fn ball_guard() {
        assert_eq!(
            bfs_ball_with(4, 20, &Letter::ALL).unwrap_err(),
            Error::ResourceLimit { limit: 20 }
        );
    }

    #[test]
    fn distances() {
        let t = bfs_ball(6).unwrap();
        assert_eq!(t.distance(&w("a^2b^2A^2B^2")).unwrap(), 6);
        assert_eq!(t.distance(&Word::empty()).unwrap(), 0);
        assert_eq!(t.distance(&w("abaB")).unwrap(), 2);
        assert!(matches!(t.distance(&w("a^7")), Err(Error::OutOfRadius(_))));
    }

    #[test]
    fn layer_counts_independent_of_expansion_order() {
        let reversed: Vec<Letter> = Letter::ALL.iter().rev().copied().collect();
        let shuffled = [Letter::B, Letter::AInv, Letter::BInv, Letter::A];
        let base = bfs_ball(7).unwrap();
        for order in [&reversed[..], &shuffled[..]] {
            let t = bfs_ball_with(7, DEFAULT_BALL_LIMIT, order).unwrap();
            assert_eq!(t.counts(), base.counts());
        }
    }

    #[test]
    fn csv_dump() {
        assert_eq!(bfs_ball(2).unwrap().to_csv(), "n,b_n\n0,1\n1,4\n2,12\n");
    }
}
