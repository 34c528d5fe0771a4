use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial in `x` with integer coefficients, stored lowest degree first
/// without trailing zeros. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Poly {
        Poly::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Poly {
        Poly::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    fn shifted(&self, by: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); by];
        coeffs.extend_from_slice(&self.0);
        Poly(coeffs)
    }

    /// Division with remainder. Every leading coefficient met along the way
    /// must be divisible by the divisor's, which holds e.g. for monic divisors.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading();
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); self.0.len().saturating_sub(d)];
        while let Some(r) = rem.degree().filter(|&r| r >= d) {
            let (q, m) = rem.leading().div_rem(&lead);
            if !m.is_zero() {
                return Err(Error::InexactDivision);
            }
            rem = &rem - &divisor.scale(&q).shifted(r - d);
            quot[r - d] = q;
        }
        Ok((Poly::new(quot), rem))
    }

    /// Quotient of a division known to leave no remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// `lc(b)^(deg a − deg b + 1) · a mod b`, which stays in ℤ[x].
    pub fn pseudo_rem(&self, divisor: &Poly) -> Result<Poly> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading();
        let mut rem = self.clone();
        while let Some(r) = rem.degree().filter(|&r| r >= d) {
            rem = &rem.scale(&lead) - &divisor.scale(&rem.leading()).shifted(r - d);
        }
        Ok(rem)
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive_part(&self) -> Poly {
        let c = self.content();
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|a| a / &c).collect())
    }

    /// Greatest common divisor in ℤ[x] with positive leading coefficient,
    /// via the primitive polynomial remainder sequence.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("b is nonzero");
            a = b;
            b = r.primitive_part();
        }
        a.scale(&c).normalized_sign()
    }

    fn normalized_sign(&self) -> Poly {
        if self.leading().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `q^deg · f(p/q)`, an integer that vanishes exactly when `p/q` is a root.
    pub fn eval_scaled(&self, p: &BigInt, q: &BigInt) -> BigInt {
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        (0..=d)
            .map(|i| &self.0[i] * p.pow(i as u32) * q.pow((d - i) as u32))
            .sum()
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;

            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

/// Highest degree first, e.g. `x^4 + 3x^3 - 3x + 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, _) => write!(f, " {sign} ")?,
            }
            first = false;
            let abs = c.abs();
            if !abs.is_one() || i == 0 {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&p(&[-1, 1, 1]) * &p(&[-1, 2, 1]), p(&[1, -3, 0, 3, 1]));
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), Poly::zero());
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[1, -3, 0, 3, 1]).to_string(), "x^4 + 3x^3 - 3x + 1");
        assert_eq!(p(&[-1, 0, 2]).to_string(), "2x^2 - 1");
    }

    #[test]
    fn division() {
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!((q, r), (p(&[1, 1]), Poly::zero()));
        let (q, r) = p(&[2, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!((q, r), (p(&[-1, 1]), p(&[3])));
        assert!(matches!(
            p(&[1, 1]).div_rem(&Poly::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            p(&[0, 1]).div_exact(&p(&[0, 2])),
            Err(Error::InexactDivision)
        ));
        assert_eq!(p(&[0, 0, 3]).pseudo_rem(&p(&[1, 2])).unwrap(), p(&[3]));
    }

    #[test]
    fn gcds() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[4, 6]).gcd(&p(&[2])), p(&[2]));
        let f = &p(&[-1, 1, 1]) * &p(&[1, -3, 1, 2]);
        let g = &p(&[-1, 1, 1]) * &p(&[5, 0, 7]);
        assert_eq!(f.gcd(&g), p(&[-1, 1, 1]));
        assert_eq!(p(&[6, 4]).content(), BigInt::from(2));
    }

    #[test]
    fn evaluation() {
        let f = p(&[1, -3, 1, 2]);
        assert!(f.eval_scaled(&BigInt::from(1), &BigInt::from(2)).is_zero());
        assert_eq!(f.eval(&BigInt::from(2)), BigInt::from(15));
    }
}
