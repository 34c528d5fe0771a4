//! Exact growth series: integer polynomials, rational generating functions,
//! generating functions of automata and the closed forms for B₃.

mod poly;
mod rational;

pub use poly::Poly;
pub use rational::RationalFn;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::automaton::Dfa;
use crate::error::{Error, Result};
use crate::fingerprint::{bfs_ball, Fingerprint};
use crate::word::Letter;

/// `Σ a_n xⁿ` over all geodesic words:
/// `(x⁴+3x³+x+1) / ((x²+x−1)(x²+2x−1))`.
pub fn geodesic_gf_closed_form() -> RationalFn {
    let den = &Poly::from_i64s(&[-1, 1, 1]) * &Poly::from_i64s(&[-1, 2, 1]);
    RationalFn::new(Poly::from_i64s(&[1, 1, 0, 3, 1]), den).expect("nonzero denominator")
}

/// `Σ b_n xⁿ` over group elements by length:
/// `(2x⁴+x³−1) / ((2x³+x²−3x+1)(x−1))`.
pub fn spherical_gf_closed_form() -> RationalFn {
    let den = &Poly::from_i64s(&[1, -3, 1, 2]) * &Poly::from_i64s(&[-1, 1]);
    RationalFn::new(Poly::from_i64s(&[-1, 0, 0, 1, 2]), den).expect("nonzero denominator")
}

/// Determinant by fraction-free (Bareiss) elimination over ℤ[x].
fn determinant(mut m: Vec<Vec<Poly>>) -> Result<Poly> {
    let n = m.len();
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut negate = false;
    let mut previous = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(Poly::zero());
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.div_exact(&previous)?;
            }
        }
        previous = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Generating function of the words accepted by a prefix-closed automaton,
/// `e_start · (I − xM)⁻¹ · 1` with `M` the transfer matrix, solved by
/// Cramer's rule for the start coordinate.
pub fn gf_from_dfa(dfa: &Dfa) -> Result<RationalFn> {
    let (live, counts) = dfa.transfer_matrix()?;
    let Some(start) = live.iter().position(|&s| s == dfa.start()) else {
        return Ok(RationalFn::from_poly(Poly::zero()));
    };
    let n = live.len();
    let system: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diagonal = if i == j { 1 } else { 0 };
                    Poly::from_i64s(&[diagonal, -(counts[i][j] as i64)])
                })
                .collect()
        })
        .collect();
    let den = determinant(system.clone())?;
    if den.coeff(0).is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut replaced = system;
    for row in &mut replaced {
        row[start] = Poly::one();
    }
    RationalFn::new(determinant(replaced)?, den)
}

/// Counts of freely reduced words `w` of each length with `|w|` equal to the
/// distance of `w` from the identity in an explicit breadth-first ball.
pub fn bruteforce_geodesic_counts(max_len: usize) -> Result<Vec<u64>> {
    let ball = bfs_ball(max_len)?;
    let mut counts = vec![0u64; max_len + 1];
    let mut stack = vec![(Fingerprint::identity(), None::<Letter>, 0usize)];
    while let Some((f, last, len)) = stack.pop() {
        if ball.get(&f) == Some(len) {
            counts[len] += 1;
        }
        if len == max_len {
            continue;
        }
        for l in Letter::ALL {
            if last != Some(l.inverse()) {
                stack.push((f.then(l), Some(l), len + 1));
            }
        }
    }
    Ok(counts)
}

/// Sphere sizes `b_0..=b_n` from breadth-first search.
pub fn bruteforce_sphere_counts(max_len: usize) -> Result<Vec<u64>> {
    Ok(bfs_ball(max_len)?.counts().to_vec())
}

/// Checks `a_n = Σ c_i a_{n−i}` from index `from` onward.
pub fn satisfies_recurrence(terms: &[BigInt], coeffs: &[BigInt], from: usize) -> bool {
    (from.max(coeffs.len())..terms.len()).all(|n| {
        let rhs: BigInt = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * &terms[n - 1 - i])
            .fold(BigInt::zero(), |a, b| a + b);
        rhs == terms[n]
    })
}

/// Saturating conversion of exact counts for display and comparison.
pub fn to_u64s<T>(v: &[T]) -> Vec<u64>
where
    for<'a> u64: TryFrom<&'a T>,
{
    v.iter()
        .map(|c| u64::try_from(c).unwrap_or(u64::MAX))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{build_geodesic_dfa, build_sl_dfa};
    use num_traits::One;

    #[test]
    fn closed_form_denominators() {
        let g = geodesic_gf_closed_form();
        assert_eq!(g.den(), &Poly::from_i64s(&[1, -3, 0, 3, 1]));
        assert_eq!(
            to_u64s(&g.series_coefficients(4).unwrap()),
            vec![1, 4, 12, 36, 96]
        );
        let s = spherical_gf_closed_form();
        assert_eq!(
            to_u64s(&s.series_coefficients(3).unwrap()),
            vec![1, 4, 12, 30]
        );
        let cubic = Poly::from_i64s(&[1, -3, 1, 2]);
        assert!(cubic
            .eval_scaled(&BigInt::one(), &BigInt::from(2))
            .is_zero());
    }

    #[test]
    fn dfa_generating_functions() {
        assert!(gf_from_dfa(&build_geodesic_dfa())
            .unwrap()
            .equals(&geodesic_gf_closed_form()));
        assert!(gf_from_dfa(&build_sl_dfa())
            .unwrap()
            .equals(&spherical_gf_closed_form()));
        let single = Dfa::new(vec![[1; 4], [1; 4]], vec![true, false], 0);
        assert_eq!(
            gf_from_dfa(&single).unwrap(),
            RationalFn::from_poly(Poly::one())
        );
        let all_words = Dfa::new(vec![[0; 4]], vec![true], 0);
        let expected = RationalFn::new(Poly::one(), Poly::from_i64s(&[1, -4])).unwrap();
        assert_eq!(gf_from_dfa(&all_words).unwrap(), expected);
    }

    #[test]
    fn bareiss_with_pivoting() {
        let m = vec![
            vec![Poly::zero(), Poly::one()],
            vec![Poly::one(), Poly::zero()],
        ];
        assert_eq!(determinant(m).unwrap(), Poly::from_i64s(&[-1]));
    }

    #[test]
    fn recurrence_from_denominator() {
        let g = geodesic_gf_closed_form();
        let (coeffs, from) = g.recurrence().unwrap();
        let terms = g.series_coefficients(20).unwrap();
        assert!(satisfies_recurrence(&terms, &coeffs, from));
        assert!(!satisfies_recurrence(&terms, &coeffs[..2], from));
    }

    #[test]
    fn brute_force_small() {
        assert_eq!(
            bruteforce_geodesic_counts(4).unwrap(),
            vec![1, 4, 12, 36, 96]
        );
        assert_eq!(bruteforce_sphere_counts(3).unwrap(), vec![1, 4, 12, 30]);
    }
}
