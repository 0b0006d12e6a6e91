//! Hilbert series numerators of monomial ideals, Hilbert polynomials of
//! homogeneous ideals, and an independent linear-algebra Hilbert-function
//! oracle that bypasses all Gröbner code.

use std::collections::HashMap;

use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

use super::{groebner, Ideal};
use crate::poly::{Monomial, MonomialOrder, Rational};
use crate::univar::{binomial_poly, UniPoly};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HilbertError {
    #[error("series recursion budget exceeded ({limit} subproblems)")]
    RecursionGuard { limit: usize },
    #[error("oracle degree {t} exceeds the guard ({limit})")]
    OracleGuard { t: u32, limit: u32 },
}

/// Summary of the Hilbert data of `S/I` for a homogeneous ideal `I` in
/// four variables: series numerator `N(s)` over `(1−s)⁴`, Hilbert
/// polynomial, and the derived projective invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Integer-coefficient numerator of the Hilbert series.
    pub numerator: UniPoly,
    pub hilbert_polynomial: UniPoly,
    /// Degree of the Hilbert polynomial; −1 for the empty scheme.
    pub projective_dimension: i32,
    /// Normalized leading coefficient; `None` when empty.
    pub scheme_degree: Option<BigInt>,
    /// Constant term HP(0).
    pub kappa: Rational,
}

impl HilbertData {
    /// First argument from which HP(t) is guaranteed to equal the
    /// Hilbert function.
    pub fn stabilization_bound(&self) -> u32 {
        let deg_n = self.numerator.degree().map_or(0, |d| d as i64);
        (deg_n - 3).max(0) as u32
    }
}

/// Drop monomial generators divisible by another generator.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

const RECURSION_LIMIT: usize = 200_000;

struct NumeratorCtx {
    memo: HashMap<Vec<Monomial>, UniPoly>,
    calls: usize,
}

impl NumeratorCtx {
    /// Numerator of the Hilbert series of `S/(gens)` over `(1−s)⁴`,
    /// by the pivot-variable splitting
    /// `N_I = N_{I+(x)} + s·N_{I:x}` for a variable `x`.
    fn numerator(&mut self, gens: &[Monomial]) -> Result<UniPoly, HilbertError> {
        self.calls += 1;
        if self.calls > RECURSION_LIMIT {
            return Err(HilbertError::RecursionGuard {
                limit: RECURSION_LIMIT,
            });
        }
        if gens.iter().any(|m| m.is_one()) {
            return Ok(UniPoly::zero());
        }
        // Base case: generators are powers of pairwise distinct
        // variables, so the quotient is a complete intersection with
        // numerator ∏(1 − s^{a_i}).
        let mut support_count = [0u32; 5];
        let mut pure_powers = true;
        for m in gens {
            let mut vars = 0;
            for i in 0..5 {
                if m.exponent(i) > 0 {
                    vars += 1;
                    support_count[i] += 1;
                }
            }
            if vars > 1 {
                pure_powers = false;
            }
        }
        if pure_powers && support_count.iter().all(|&c| c <= 1) {
            let mut n = UniPoly::one();
            for m in gens {
                let one_minus = &UniPoly::one() - &UniPoly::monomial(m.degree() as usize);
                n = &n * &one_minus;
            }
            return Ok(n);
        }

        if let Some(cached) = self.memo.get(gens) {
            return Ok(cached.clone());
        }

        // Pivot on the variable hitting the most non-pure generators.
        let mut best = 0;
        let mut best_count = 0;
        for i in 0..5 {
            let count = gens
                .iter()
                .filter(|m| {
                    m.exponent(i) > 0 && (0..5).filter(|&j| m.exponent(j) > 0).count() > 1
                })
                .count();
            if count > best_count {
                best = i;
                best_count = count;
            }
        }
        let x = if best < 4 {
            Monomial::var(best)
        } else {
            Monomial::aux_var()
        };

        // I + (x): kill the pivot in every generator.
        let with_x: Vec<Monomial> = minimalize(
            gens.iter()
                .filter(|m| m.exponent(best) == 0)
                .copied()
                .chain(std::iter::once(x))
                .collect(),
        );
        // I : x: divide out one power of the pivot where possible.
        let colon: Vec<Monomial> = minimalize(
            gens.iter()
                .map(|m| m.checked_div(&x).unwrap_or(*m))
                .collect(),
        );

        let n_with = self.numerator(&with_x)?;
        let n_colon = self.numerator(&colon)?;
        let result = &n_with + &(&UniPoly::monomial(1) * &n_colon);
        self.memo.insert(gens.to_vec(), result.clone());
        Ok(result)
    }
}

/// Hilbert series numerator `N(s)` of the quotient by a monomial ideal,
/// with Hilbert series `N(s)/(1−s)⁴`.
pub fn hilbert_series_numerator(gens: &[Monomial]) -> Result<UniPoly, HilbertError> {
    let gens = minimalize(gens.to_vec());
    let mut ctx = NumeratorCtx {
        memo: HashMap::new(),
        calls: 0,
    };
    ctx.numerator(&gens)
}

/// Expand `N(s)/(1−s)⁴` into the polynomial part of the Hilbert
/// function: `HP(t) = Σ_j a_j · C(t + 3 − j, 3)`.
fn polynomial_part(numerator: &UniPoly) -> UniPoly {
    let mut hp = UniPoly::zero();
    for (j, a) in numerator.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        hp = &hp + &binomial_poly(3 - j as i64, 3).scale(a);
    }
    hp
}

/// The full Hilbert bookkeeping of a homogeneous ideal: Gröbner basis in
/// degrevlex, leading ideal, series numerator, Hilbert polynomial, and
/// derived dimension/degree data.
pub fn hilbert_polynomial(ideal: &Ideal) -> Result<HilbertData, HilbertError> {
    hilbert_polynomial_with_order(ideal, MonomialOrder::DegRevLex)
}

/// Same as [`hilbert_polynomial`] with an explicit order (the invariants
/// must not depend on it).
pub fn hilbert_polynomial_with_order(
    ideal: &Ideal,
    order: MonomialOrder,
) -> Result<HilbertData, HilbertError> {
    let gb = groebner(ideal, order);
    let numerator = hilbert_series_numerator(&gb.leading_monomials())?;
    let hp = polynomial_part(&numerator);
    let projective_dimension = hp.degree().map_or(-1, |d| d as i32);
    let scheme_degree = hp.degree().map(|d| {
        let fact: BigInt = (1..=d as i64).map(BigInt::from).product();
        let lead = hp.leading_coefficient().unwrap() * BigRational::from(fact);
        debug_assert!(lead.is_integer() && lead.is_positive());
        lead.to_integer()
    });
    let kappa = hp.eval_int(0);
    Ok(HilbertData {
        numerator,
        hilbert_polynomial: hp,
        projective_dimension,
        scheme_degree,
        kappa,
    })
}

const ORACLE_LIMIT: u32 = 12;

fn monomials_of_degree(deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for e0 in 0..=deg {
        for e1 in 0..=deg - e0 {
            for e2 in 0..=deg - e0 - e1 {
                let e3 = deg - e0 - e1 - e2;
                out.push(Monomial::from_exponents([e0, e1, e2, e3]));
            }
        }
    }
    out
}

/// Brute-force Hilbert function of `S/I` in degree `t`: the codimension
/// of the span of `{m·g}` inside the degree-`t` coefficient space, by
/// exact Gaussian elimination. Shares no code with the Gröbner engine.
pub fn hilbert_function_oracle(ideal: &Ideal, t: u32) -> Result<u64, HilbertError> {
    if t > ORACLE_LIMIT {
        return Err(HilbertError::OracleGuard {
            t,
            limit: ORACLE_LIMIT,
        });
    }
    let cols: Vec<Monomial> = monomials_of_degree(t);
    let col_index: HashMap<Monomial, usize> =
        cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in ideal.generators() {
        let dg = g.homogeneous_degree().expect("homogeneous generator");
        if dg > t {
            continue;
        }
        for m in monomials_of_degree(t - dg) {
            let mut row = vec![Rational::zero(); cols.len()];
            for (gm, gc) in g.terms() {
                row[col_index[&gm.mul(&m)]] = gc.clone();
            }
            rows.push(row);
        }
    }

    // Row-reduce over ℚ.
    let mut rank = 0usize;
    for col in 0..cols.len() {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for c in col..cols.len() {
            let v = &rows[rank][c] * &inv;
            rows[rank][c] = v;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols.len() {
                    let v = &rows[r][c] - &(&rows[rank][c] * &factor);
                    rows[r][c] = v;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok((cols.len() - rank) as u64)
}

/// Convenience: the oracle value as a rational, for comparing against
/// HP(t).
pub fn oracle_value(ideal: &Ideal, t: u32) -> Result<Rational, HilbertError> {
    Ok(BigRational::from(BigInt::from(hilbert_function_oracle(
        ideal, t,
    )?)))
}

/// Evaluate a Hilbert polynomial at a small integer, as i64.
pub fn hp_at(hp: &UniPoly, t: i64) -> i64 {
    let v = hp.eval_int(t);
    debug_assert!(v.is_integer());
    v.to_integer().to_i64().expect("value fits in i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn m(e: [u32; 4]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(
            gens.iter()
                .map(|s| parse_poly(s).unwrap())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn numerator_of_coordinate_ideals() {
        let n = hilbert_series_numerator(&[m([1, 0, 0, 0])]).unwrap();
        assert_eq!(n, UniPoly::from_ints(&[1, -1]));
        let n = hilbert_series_numerator(&[m([1, 0, 0, 0]), m([0, 1, 0, 0])]).unwrap();
        assert_eq!(n, UniPoly::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn line_has_linear_hilbert_polynomial() {
        let data = hilbert_polynomial(&ideal(&["z0", "z1"])).unwrap();
        assert_eq!(data.hilbert_polynomial, UniPoly::from_ints(&[1, 1]));
        assert_eq!(data.projective_dimension, 1);
        assert_eq!(data.scheme_degree, Some(BigInt::from(1)));
        assert_eq!(data.kappa, BigRational::from(BigInt::from(1)));
    }

    #[test]
    fn irrelevant_ideal_is_empty_scheme() {
        let data = hilbert_polynomial(&ideal(&["z0", "z1", "z2", "z3"])).unwrap();
        assert!(data.hilbert_polynomial.is_zero());
        assert_eq!(data.projective_dimension, -1);
        assert_eq!(data.scheme_degree, None);
    }

    #[test]
    fn twisted_cubic_hilbert_data() {
        let tc = ideal(&["z0*z2 - z1^2", "z1*z3 - z2^2", "z0*z3 - z1*z2"]);
        let data = hilbert_polynomial(&tc).unwrap();
        assert_eq!(data.hilbert_polynomial, UniPoly::from_ints(&[1, 3]));
        assert_eq!(data.projective_dimension, 1);
        assert_eq!(data.scheme_degree, Some(BigInt::from(3)));
        // Cross-check against the rank oracle on a window.
        for t in 1..6 {
            assert_eq!(
                oracle_value(&tc, t).unwrap(),
                data.hilbert_polynomial.eval_int(t as i64)
            );
        }
        assert_eq!(hilbert_function_oracle(&tc, 2).unwrap(), 7);
    }

    #[test]
    fn oracle_basics() {
        assert_eq!(
            hilbert_function_oracle(&ideal(&["z0", "z1"]), 2).unwrap(),
            3
        );
        assert_eq!(hilbert_function_oracle(&ideal(&["1"]), 3).unwrap(), 0);
        assert!(matches!(
            hilbert_function_oracle(&ideal(&["z0"]), 13),
            Err(HilbertError::OracleGuard { .. })
        ));
    }

    #[test]
    fn order_independence_on_fixtures() {
        for gens in [
            vec!["z0*z2 - z1^2", "z1*z3 - z2^2", "z0*z3 - z1*z2"],
            vec!["z0^2 + z1^2 + z2^2 + z3^2", "z0*z1"],
            vec!["z0^3 - z1^2*z2"],
        ] {
            let i = ideal(&gens);
            let a = hilbert_polynomial_with_order(&i, MonomialOrder::DegRevLex).unwrap();
            let b = hilbert_polynomial_with_order(&i, MonomialOrder::ElimAux).unwrap();
            assert_eq!(a.hilbert_polynomial, b.hilbert_polynomial);
            assert_eq!(a.scheme_degree, b.scheme_degree);
            assert_eq!(a.kappa, b.kappa);
        }
    }

    #[test]
    fn stabilization_window_matches_oracle() {
        let fixtures = [
            vec!["z0^2", "z0*z1", "z1^3"],
            vec!["z0*z2 - z1^2", "z1*z3 - z2^2", "z0*z3 - z1*z2"],
            vec!["z0^2 + z1*z2", "z3^3"],
        ];
        for gens in fixtures {
            let i = ideal(&gens);
            let data = hilbert_polynomial(&i).unwrap();
            let t0 = data.stabilization_bound();
            for t in t0..t0 + 4 {
                assert_eq!(
                    oracle_value(&i, t).unwrap(),
                    data.hilbert_polynomial.eval_int(t as i64),
                    "HF mismatch at t = {t} for {gens:?}"
                );
            }
        }
    }
}
