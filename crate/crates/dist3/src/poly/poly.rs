use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder, NVARS};

/// Exact coefficient field: arbitrary-precision rationals, always stored
/// in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

/// A sparse multivariate polynomial in `z0..z3` with rational coefficients.
///
/// Terms are kept in a map ordered by degrevlex, with no zero coefficients
/// stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Debug, thiserror::Error)]
#[error("not divisible; remainder {remainder}")]
pub struct NotDivisible {
    pub remainder: Poly,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(rat_int(n))
    }

    /// The variable `z_i`, `i < 4`.
    pub fn var(i: usize) -> Self {
        Poly::term(Rational::one(), Monomial::var(i))
    }

    pub(crate) fn aux_var() -> Self {
        Poly::term(Rational::one(), Monomial::aux_var())
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// `Some(d)` iff nonzero and every monomial has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub(crate) fn uses_aux(&self) -> bool {
        self.terms.keys().any(|m| m.aux_degree() > 0)
    }

    /// Leading term in the given order.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        match order {
            // The map is already sorted by degrevlex.
            MonomialOrder::DegRevLex => self.terms.iter().next_back(),
            MonomialOrder::ElimAux => self
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| order.cmp(a, b)),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    /// Divide through by the leading degrevlex coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading_term(MonomialOrder::DegRevLex) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `z_i`.
    pub fn diff(&self, i: usize) -> Poly {
        assert!(i < NVARS);
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if let Some((e, m2)) = m.diff(i) {
                out.add_term(m2, c * rat_int(e as i64));
            }
        }
        out
    }

    /// Exact quotient `self / divisor` by iterated leading-term cancellation
    /// in degrevlex; fails with the nonzero remainder if the division does
    /// not come out even.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, NotDivisible> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let (lm, lc) = divisor.leading_term(MonomialOrder::DegRevLex).unwrap();
        let (lm, lc) = (*lm, lc.clone());
        let mut quotient = Poly::zero();
        let mut remainder = Poly::zero();
        let mut work = self.clone();
        while let Some((m, c)) = work.leading_term(MonomialOrder::DegRevLex) {
            let (m, c) = (*m, c.clone());
            match m.checked_div(&lm) {
                Some(q) => {
                    let qc = &c / &lc;
                    quotient.add_term(q, qc.clone());
                    work = &work - &divisor.mul_term(&q, &qc);
                }
                None => {
                    remainder.add_term(m, c.clone());
                    work.terms.remove(&m);
                }
            }
        }
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(NotDivisible { remainder })
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Canonical form: terms in descending degrevlex, re-parseable by the
    /// expression grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write_coeff(f, &abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write_coeff(f, &abs)?;
                write!(f, "*{}", m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
