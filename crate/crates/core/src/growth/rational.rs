use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Poly;
use crate::error::{Error, Result};

/// A quotient of integer polynomials in lowest terms: numerator and
/// denominator coprime, no common integer factor, denominator with positive
/// leading coefficient.
#[derive(Debug, Clone, Eq)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Result<RationalFn> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_exact(&g)?, den.div_exact(&g)?);
        let c = num.content().gcd(&den.content());
        if !c.is_zero() {
            num = Poly::new(num.coeffs().iter().map(|a| a / &c).collect());
            den = Poly::new(den.coeffs().iter().map(|a| a / &c).collect());
        }
        if den.leading().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: Poly) -> RationalFn {
        RationalFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        RationalFn::new(num, &self.den * &other.den).expect("product of nonzero denominators")
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &other.num, &self.den * &other.den)
            .expect("product of nonzero denominators")
    }

    /// Cross-multiplied equality, independent of how either side is written.
    pub fn equals(&self, other: &RationalFn) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Power series coefficients `a₀..=a_n`, from
    /// `a_n·D₀ = N_n − Σ_{i≥1} D_i·a_{n−i}`.
    pub fn series_coefficients(&self, n: usize) -> Result<Vec<BigInt>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.num.coeff(k);
            for (i, d) in den.iter().enumerate().skip(1).take(k) {
                acc -= d * &out[k - i];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            out.push(q);
        }
        Ok(out)
    }

    /// Coefficients `c₁..c_d` with `a_n = Σ c_i·a_{n−i}` for every `n` past the
    /// numerator degree, read off the denominator. Requires `D₀ = ±1`.
    pub fn recurrence(&self) -> Result<(Vec<BigInt>, usize)> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if d0.abs() != BigInt::from(1) {
            return Err(Error::InexactDivision);
        }
        let coeffs = self.den.coeffs()[1..].iter().map(|d| -(d * &d0)).collect();
        let from = self.num.degree().map_or(0, |d| d + 1);
        Ok((coeffs, from))
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &RationalFn) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn reduction() {
        let r = RationalFn::new(p(&[-2, 0, 2]), p(&[2, -2])).unwrap();
        assert_eq!(r.num(), &p(&[-1, -1]));
        assert_eq!(r.den(), &Poly::one());
        assert!(matches!(
            RationalFn::new(p(&[1]), Poly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn equality_ignores_scaling() {
        let a = RationalFn::new(p(&[1, 2]), p(&[1, -3, 0, 3, 1])).unwrap();
        let c = p(&[-7]);
        let b = RationalFn::new(&p(&[1, 2]) * &c, &p(&[1, -3, 0, 3, 1]) * &c).unwrap();
        assert!(a.equals(&b));
        assert_eq!(a, b);
    }

    #[test]
    fn series() {
        let geometric = RationalFn::new(Poly::one(), p(&[1, -1])).unwrap();
        let ones = geometric.series_coefficients(5).unwrap();
        assert!(ones.iter().all(|c| c == &BigInt::from(1)));
        let sum = geometric.add(&geometric);
        assert_eq!(
            sum.series_coefficients(2).unwrap(),
            vec![BigInt::from(2); 3]
        );
        let sq = geometric.mul(&geometric);
        assert_eq!(sq.series_coefficients(3).unwrap()[3], BigInt::from(4));
        let no_series = RationalFn::new(Poly::one(), p(&[0, 1])).unwrap();
        assert!(no_series.series_coefficients(2).is_err());
    }
}
