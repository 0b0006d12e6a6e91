//! Dense univariate polynomials over the rationals, used for Hilbert
//! series numerators, Hilbert polynomials, and twisted Euler
//! characteristics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::poly::{rat_int, Rational};

/// Coefficients in ascending order of degree; no trailing zeros stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn int(n: i64) -> Self {
        UniPoly::constant(rat_int(n))
    }

    /// The variable itself.
    pub fn x() -> Self {
        UniPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `x^n` with coefficient 1.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&n| rat_int(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        }
    }

    /// Evaluate at a rational point by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rat_int(x))
    }

    /// Substitute `x -> x + k`.
    pub fn shift(&self, k: i64) -> UniPoly {
        let arg = &UniPoly::x() + &UniPoly::int(k);
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &UniPoly::constant(c.clone());
        }
        acc
    }
}

/// Binomial coefficient `C(n, k)` with integer `n` (possibly negative) and
/// the usual convention `C(n, k) = n(n-1)...(n-k+1)/k!`.
pub fn binomial(n: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// The polynomial `C(x + a, k)` in `x`: degree `k`, leading coefficient
/// `1/k!`. Takes the value `C(t + a, k)` at integers `t`.
pub fn binomial_poly(a: i64, k: u32) -> UniPoly {
    let mut acc = UniPoly::one();
    let x = UniPoly::x();
    for i in 0..k as i64 {
        let factor = &x + &UniPoly::int(a - i);
        acc = &acc * &factor;
    }
    let k_fact: BigInt = (1..=k as i64).map(BigInt::from).product();
    acc.scale(&BigRational::new(BigInt::one(), k_fact))
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coefficient(i) + rhs.coefficient(i))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coefficient(i) - rhs.coefficient(i))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                if abs.denom().is_one() {
                    write!(f, "{}", abs.numer())?;
                } else {
                    write!(f, "{}/{}", abs.numer(), abs.denom())?;
                }
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "t")?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn arithmetic_and_degree() {
        let p = UniPoly::from_ints(&[1, 0, 1]); // 1 + t^2
        let q = UniPoly::from_ints(&[-1, 1]); // t - 1
        assert_eq!(&p * &q, UniPoly::from_ints(&[-1, 1, -1, 1]));
        assert_eq!((&p - &p).degree(), None);
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn evaluation() {
        let p = UniPoly::from_ints(&[2, -3, 1]); // (t-1)(t-2)
        assert!(p.eval_int(1).is_zero());
        assert!(p.eval_int(2).is_zero());
        assert_eq!(p.eval_int(5), rat_int(12));
    }

    #[test]
    fn shift_translates_argument() {
        let p = UniPoly::from_ints(&[0, 0, 1]); // t^2
        let q = p.shift(3); // (t+3)^2
        assert_eq!(q, UniPoly::from_ints(&[9, 6, 1]));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 0), BigInt::from(1));
        assert_eq!(binomial(2, 3), BigInt::from(0));
        assert_eq!(binomial(-1, 2), BigInt::from(1));
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
    }

    #[test]
    fn binomial_poly_interpolates() {
        // C(t+3, 3) = (t+3)(t+2)(t+1)/6: the coordinate-ring Hilbert
        // polynomial of projective 3-space.
        let p = binomial_poly(3, 3);
        for t in -5..6 {
            assert_eq!(p.eval_int(t), BigRational::from(binomial(t + 3, 3)));
        }
        assert_eq!(p.coefficient(3), rat(1, 6));
    }
}
