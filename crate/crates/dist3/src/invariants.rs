//! The formula engine: recover the singular-scheme invariants
//! (deg C, p_a(C), length of the isolated part) from the Hilbert
//! polynomial of the singular scheme, derive Chern classes, and run
//! bounds, parity, stability, and low-degree classification verdicts.

use num::ToPrimitive;
use serde::Serialize;

use crate::groebner::HilbertData;
use crate::poly::{rat, rat_int, Rational};
use crate::univar::{binomial_poly, UniPoly};

/// Invariants of the singular scheme Z = C ∪ 𝒰 of a degree-`d`
/// distribution: the maximal curve part C and the residual isolated
/// part 𝒰. Convention: p_a(∅) = 1, so the empty and zero-dimensional
/// cases share one code path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SchemeInvariants {
    pub degree_d: i64,
    /// Dimension of Z: −1 (empty), 0, or 1.
    pub dim_z: i32,
    pub deg_c: i64,
    pub p_a_c: i64,
    pub len_u: i64,
    /// Constant term of the Hilbert polynomial of Z.
    pub kappa: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChernData {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    pub locally_free: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    MuSemistable,
    Split,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub stability: Stability,
    /// Stable identifier of the single criterion that decided the verdict.
    pub rule_fired: &'static str,
    pub classification: Option<String>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("singular locus has a divisorial component; the coefficients share a common factor")]
    DivisorialSingularLocus,
    #[error("inconsistent invariants: {detail}")]
    InconsistentInvariants { detail: String },
    #[error("parity violation: d*c2 = {dc2} and c3 = {c3} differ mod 2")]
    ParityViolation { dc2: i64, c3: i64 },
    #[error("non-integral arithmetic genus for (d, c2, c3) = ({d}, {c2}, {c3})")]
    NonIntegralGenus { d: i64, c2: i64, c3: i64 },
    #[error("invariants (d, deg_C, c3) = ({d}, {deg_c}, {c3}) match no classification row")]
    UnclassifiedInvariants { d: i64, deg_c: i64, c3: i64 },
}

/// The combinatorial constant T(d, deg_C) = d³ + 2d² + 2d − deg_C·(3d−2);
/// equal to 2χ(𝒪_C) and, for isolated singularities, to the total length.
fn t_const(d: i64, deg_c: i64) -> i64 {
    d * d * d + 2 * d * d + 2 * d - deg_c * (3 * d - 2)
}

fn rational_to_i64(v: &Rational, what: &str) -> Result<i64, InvariantError> {
    if !v.is_integer() {
        return Err(InvariantError::InconsistentInvariants {
            detail: format!("{what} is not an integer: {v}"),
        });
    }
    v.to_integer()
        .to_i64()
        .ok_or_else(|| InvariantError::InconsistentInvariants {
            detail: format!("{what} out of range"),
        })
}

/// Invert the length/genus identities: from the Hilbert polynomial of
/// the singular scheme of a degree-`d` distribution, solve for
/// (deg C, p_a(C), len 𝒰). The two linear relations used are
/// κ = (1 − p_a) + len 𝒰 and len 𝒰 = T + 2p_a − 2.
pub fn invariants_from_hilbert(
    d: i64,
    hp: &HilbertData,
) -> Result<SchemeInvariants, InvariantError> {
    match hp.projective_dimension {
        2 => Err(InvariantError::DivisorialSingularLocus),
        3 => Err(InvariantError::InconsistentInvariants {
            detail: "singular scheme fills all of space".into(),
        }),
        1 => {
            let deg_c = rational_to_i64(
                &Rational::from(hp.scheme_degree.clone().unwrap()),
                "curve degree",
            )?;
            let kappa = rational_to_i64(&hp.kappa, "kappa")?;
            let t = t_const(d, deg_c);
            let p_a_c = kappa + 1 - t;
            let len_u = 2 * kappa - t;
            if len_u < 0 {
                return Err(InvariantError::InconsistentInvariants {
                    detail: format!("negative residual length {len_u}"),
                });
            }
            Ok(SchemeInvariants {
                degree_d: d,
                dim_z: 1,
                deg_c,
                p_a_c,
                len_u,
                kappa,
            })
        }
        0 => {
            let kappa = rational_to_i64(&hp.kappa, "kappa")?;
            let t = t_const(d, 0);
            if kappa != t {
                return Err(InvariantError::InconsistentInvariants {
                    detail: format!(
                        "isolated singular scheme has length {kappa}, expected {t}"
                    ),
                });
            }
            Ok(SchemeInvariants {
                degree_d: d,
                dim_z: 0,
                deg_c: 0,
                p_a_c: 1,
                len_u: kappa,
                kappa,
            })
        }
        -1 => {
            if d != 0 {
                return Err(InvariantError::InconsistentInvariants {
                    detail: format!(
                        "empty singular scheme is impossible in degree {d}"
                    ),
                });
            }
            Ok(SchemeInvariants {
                degree_d: d,
                dim_z: -1,
                deg_c: 0,
                p_a_c: 1,
                len_u: 0,
                kappa: 0,
            })
        }
        other => Err(InvariantError::InconsistentInvariants {
            detail: format!("unexpected scheme dimension {other}"),
        }),
    }
}

pub fn chern_from_invariants(inv: &SchemeInvariants) -> Result<ChernData, InvariantError> {
    let d = inv.degree_d;
    let c1 = 2 - d;
    let c2 = d * d + 2 - inv.deg_c;
    let c3 = inv.len_u;
    if (d * c2 - c3) % 2 != 0 {
        return Err(InvariantError::ParityViolation { dc2: d * c2, c3 });
    }
    Ok(ChernData {
        c1,
        c2,
        c3,
        locally_free: c3 == 0,
    })
}

/// Invert the Chern identities: (deg C, p_a(C)) from (d, c2, c3).
pub fn curve_data_from_chern(
    d: i64,
    c2: i64,
    c3: i64,
) -> Result<(i64, i64), InvariantError> {
    let deg_c = d * d + 2 - c2;
    let numer = c3 - t_const(d, deg_c) + 2;
    if numer % 2 != 0 {
        return Err(InvariantError::NonIntegralGenus { d, c2, c3 });
    }
    Ok((deg_c, numer / 2))
}

/// Twisted Euler characteristic of the tangent sheaf, two ways: by
/// Riemann–Roch (ground truth) and by the closed cubic-in-t formula we
/// compare against, which is known to disagree outside d ∈ {2, 3}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiTangent {
    pub riemann_roch: UniPoly,
    pub printed_formula: UniPoly,
    pub formulas_disagree: bool,
}

pub fn chi_tangent(d: i64, c2: i64, c3: i64) -> ChiTangent {
    let c1 = rat_int(2 - d);
    let ch2 = (&(&c1 * &c1) - &rat_int(2 * c2)) / rat_int(2);
    let ch3 = (&(&(&c1 * &c1) * &c1) - &(&rat_int(3 * c2) * &c1) + &rat_int(3 * c3))
        / rat_int(6);

    // χ(E(t)) = ch3(E(t)) + 2·ch2(E(t)) + (11/6)·ch1(E(t)) + 2.
    let t = UniPoly::x();
    let t2 = &t * &t;
    let t3 = &t2 * &t;
    let ch1_t = &UniPoly::constant(c1.clone()) + &t.scale(&rat_int(2));
    let ch2_t = &(&UniPoly::constant(ch2.clone()) + &t.scale(&c1)) + &t2;
    let ch3_t = &(&(&UniPoly::constant(ch3) + &t.scale(&ch2))
        + &t2.scale(&(&c1 / rat_int(2))))
        + &t3.scale(&rat(1, 3));
    let riemann_roch = &(&(&ch3_t + &ch2_t.scale(&rat_int(2))) + &ch1_t.scale(&rat(11, 6)))
        + &UniPoly::int(2);

    // (1/3)(t+3)(t+2)(t+1) + (1/2)(t+2)(t+1)(2−d) − (t+2)c2
    //   + (1/2)(c3 + (d−2)c2)
    let t1 = &t + &UniPoly::int(1);
    let t2p = &t + &UniPoly::int(2);
    let t3p = &t + &UniPoly::int(3);
    let printed_formula = &(&(&(&(&t3p * &t2p) * &t1).scale(&rat(1, 3))
        + &(&t2p * &t1).scale(&rat(2 - d, 2)))
        - &t2p.scale(&rat_int(c2)))
        + &UniPoly::constant(rat(c3 + (d - 2) * c2, 2));

    let formulas_disagree = riemann_roch != printed_formula;
    ChiTangent {
        riemann_roch,
        printed_formula,
        formulas_disagree,
    }
}

/// The additivity reference for χ(T_𝓕(t)): from the defining exact
/// sequence, χ(T_𝓕(t)) = χ(Tℙ³(t)) − C(t+d+5, 3) + P_Z(t+d+2), with
/// χ(Tℙ³(t)) = 4·C(t+4, 3) − C(t+3, 3).
pub fn chi_tangent_additivity(d: i64, p_z: &UniPoly) -> UniPoly {
    let chi_tp3 = &binomial_poly(4, 3).scale(&rat_int(4)) - &binomial_poly(3, 3);
    let line_bundle = binomial_poly(d + 5, 3);
    let shifted_pz = p_z.shift(d + 2);
    &(&chi_tp3 - &line_bundle) + &shifted_pz
}

/// One evaluated inequality in the consistency report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub satisfied: bool,
    /// Hard bounds are consistency constraints; informational bounds are
    /// reported but never fail an analysis.
    pub hard: bool,
    pub detail: String,
}

pub fn bounds_report(inv: &SchemeInvariants, chern: &ChernData) -> Vec<BoundCheck> {
    let d = inv.degree_d;
    let mut out = Vec::new();

    let deg_bound = d * d + d + 1;
    out.push(BoundCheck {
        name: "singular-curve-degree-bound",
        satisfied: inv.deg_c <= deg_bound,
        hard: true,
        detail: format!("deg C = {} <= {}", inv.deg_c, deg_bound),
    });
    out.push(BoundCheck {
        name: "second-chern-lower-bound",
        satisfied: chern.c2 >= 1 - d,
        hard: true,
        detail: format!("c2 = {} >= {}", chern.c2, 1 - d),
    });
    out.push(BoundCheck {
        name: "second-chern-upper-bound",
        satisfied: chern.c2 <= d * d + 2,
        hard: true,
        detail: format!("c2 = {} <= {}", chern.c2, d * d + 2),
    });
    if d >= 1 {
        // (2d−1)(2d−2)(d/3+2)/(3d); derived from the closed χ formula
        // above, hence informational only.
        let rhs = rat((2 * d - 1) * (2 * d - 2), 1) * rat(d + 6, 3) / rat_int(3 * d);
        out.push(BoundCheck {
            name: "second-chern-section-bound",
            satisfied: rat_int(chern.c2) <= rhs,
            hard: false,
            detail: format!("c2 = {} <= {}", chern.c2, rhs),
        });
    }
    out
}

pub fn has_hard_violation(bounds: &[BoundCheck]) -> bool {
    bounds.iter().any(|b| b.hard && !b.satisfied)
}

/// Sufficient-condition cascade for the (semi)stability of the tangent
/// sheaf. "Undetermined" means no implemented criterion applies.
pub fn stability_verdict(d: i64, dim_z: i32, deg_c: i64, c2: i64) -> Verdict {
    let verdict = |stability, rule_fired| Verdict {
        stability,
        rule_fired,
        classification: None,
    };
    if c2 == 1 - d {
        return verdict(Stability::Split, "minimal-second-chern-split");
    }
    if dim_z == 0 {
        return verdict(Stability::Stable, "isolated-singularities-stability");
    }
    if d % 2 == 0 {
        if 2 * deg_c < d * d + d {
            return verdict(Stability::Stable, "even-degree-curve-bound-stability");
        }
        if 2 * deg_c < d * d + 3 * d + 2 {
            return verdict(
                Stability::MuSemistable,
                "even-degree-curve-bound-semistability",
            );
        }
    } else if 2 * deg_c < (d + 1) * (d + 1) {
        return verdict(Stability::Stable, "odd-degree-curve-bound-stability");
    }
    verdict(Stability::Undetermined, "no-criterion-applies")
}

/// One row of the exhaustive classification for degree 1 or 2.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub deg_c: i64,
    pub c2: i64,
    /// All arithmetically possible c3 values for this row.
    pub c3_values: &'static [i64],
    /// The subset of `c3_values` known to be realized by distributions.
    pub c3_realized: &'static [i64],
    pub stability: Stability,
    pub description: &'static str,
}

/// The degree-1 classification: every row is realized.
pub fn table_degree_one() -> Vec<TableRow> {
    vec![
        TableRow {
            deg_c: 0,
            c2: 3,
            c3_values: &[5],
            c3_realized: &[5],
            stability: Stability::Stable,
            description: "five points",
        },
        TableRow {
            deg_c: 1,
            c2: 2,
            c3_values: &[2],
            c3_realized: &[2],
            stability: Stability::Stable,
            description: "a line and two points",
        },
        TableRow {
            deg_c: 2,
            c2: 1,
            c3_values: &[1],
            c3_realized: &[1],
            stability: Stability::Stable,
            description: "a conic and a point",
        },
        TableRow {
            deg_c: 3,
            c2: 0,
            c3_values: &[0],
            c3_realized: &[0],
            stability: Stability::Split,
            description: "a twisted cubic",
        },
    ]
}

/// The degree-2 classification; realized c3 values are a strict subset
/// of the arithmetically possible ones in most rows.
pub fn table_degree_two() -> Vec<TableRow> {
    vec![
        TableRow {
            deg_c: 0,
            c2: 6,
            c3_values: &[20],
            c3_realized: &[20],
            stability: Stability::Stable,
            description: "twenty points",
        },
        TableRow {
            deg_c: 1,
            c2: 5,
            c3_values: &[14],
            c3_realized: &[],
            stability: Stability::Stable,
            description: "a line plus points",
        },
        TableRow {
            deg_c: 2,
            c2: 4,
            c3_values: &[0, 2, 4, 6, 8, 10],
            c3_realized: &[],
            stability: Stability::Stable,
            description: "a degree-2 curve",
        },
        TableRow {
            deg_c: 3,
            c2: 3,
            c3_values: &[0, 2, 4, 6, 8],
            c3_realized: &[8],
            stability: Stability::MuSemistable,
            description: "a degree-3 curve",
        },
        TableRow {
            deg_c: 4,
            c2: 2,
            c3_values: &[0, 2, 4],
            c3_realized: &[0, 4],
            stability: Stability::MuSemistable,
            description: "a degree-4 curve",
        },
        TableRow {
            deg_c: 5,
            c2: 1,
            c3_values: &[0, 2],
            c3_realized: &[0, 2],
            stability: Stability::MuSemistable,
            description: "a degree-5 curve",
        },
        TableRow {
            deg_c: 6,
            c2: 0,
            c3_values: &[0],
            c3_realized: &[0],
            stability: Stability::Split,
            description: "a degree-6 curve",
        },
        TableRow {
            deg_c: 7,
            c2: -1,
            c3_values: &[0],
            c3_realized: &[0],
            stability: Stability::Split,
            description: "a degree-7 curve",
        },
    ]
}

/// Exhaustive classification for distributions of degree ≤ 2; `None`
/// for higher degrees.
pub fn classify_low_degree(
    d: i64,
    chern: &ChernData,
    dim_z: i32,
) -> Result<Option<String>, InvariantError> {
    let deg_c = d * d + 2 - chern.c2;
    let unclassified = || InvariantError::UnclassifiedInvariants {
        d,
        deg_c,
        c3: chern.c3,
    };
    match d {
        0 => {
            if dim_z == -1 && chern.c3 == 0 && chern.c2 == 2 {
                Ok(Some(
                    "twisted null-correlation bundle N(1); empty singular scheme".into(),
                ))
            } else if deg_c == 1 && chern.c3 == 0 {
                Ok(Some("split O(1) + O(1); singular scheme a line".into()))
            } else {
                Err(unclassified())
            }
        }
        1 => {
            let row = table_degree_one()
                .into_iter()
                .find(|r| r.deg_c == deg_c && r.c3_values.contains(&chern.c3))
                .ok_or_else(unclassified)?;
            let sheaf = match row.stability {
                Stability::Split => "split O + O(1)".to_string(),
                _ => "stable tangent sheaf".to_string(),
            };
            Ok(Some(format!(
                "{}; singular scheme {}",
                sheaf, row.description
            )))
        }
        2 => {
            let row = table_degree_two()
                .into_iter()
                .find(|r| r.deg_c == deg_c && r.c3_values.contains(&chern.c3))
                .ok_or_else(unclassified)?;
            if chern.locally_free {
                let special = match chern.c2 {
                    -1 => Some("split O(1) + O(-1)"),
                    0 => Some("split O + O"),
                    1 => Some(
                        "twisted null-correlation bundle; singular curve of degree 5 and genus 1",
                    ),
                    2 => Some("instanton bundle of charge 2"),
                    _ => None,
                };
                if let Some(s) = special {
                    return Ok(Some(s.into()));
                }
            }
            let label = match row.stability {
                Stability::Stable => "stable",
                Stability::MuSemistable => "mu-semistable",
                Stability::Split => "split",
                Stability::Undetermined => "undetermined",
            };
            Ok(Some(format!(
                "{} tangent sheaf; singular scheme contains {}",
                label, row.description
            )))
        }
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{hilbert_polynomial, Ideal};
    use crate::poly::parse_poly;

    fn hp_of(gens: &[&str]) -> HilbertData {
        let i = Ideal::new(
            gens.iter()
                .map(|s| parse_poly(s).unwrap())
                .collect::<Vec<_>>(),
        );
        hilbert_polynomial(&i).unwrap()
    }

    fn synthetic_hp(hp: UniPoly) -> HilbertData {
        // Pack a Hilbert polynomial into HilbertData directly for the
        // pure formula tests.
        use num::BigInt;
        let projective_dimension = hp.degree().map_or(-1, |d| d as i32);
        let scheme_degree = hp.degree().map(|deg| {
            let fact: BigInt = (1..=deg as i64).map(BigInt::from).product();
            (hp.leading_coefficient().unwrap() * Rational::from(fact)).to_integer()
        });
        HilbertData {
            numerator: UniPoly::zero(),
            hilbert_polynomial: hp.clone(),
            projective_dimension,
            scheme_degree,
            kappa: hp.eval_int(0),
        }
    }

    #[test]
    fn isolated_points_of_degree_one() {
        // Five isolated singular points: HP ≡ 5 = 1 + 2 + 2.
        let inv = invariants_from_hilbert(1, &synthetic_hp(UniPoly::int(5))).unwrap();
        assert_eq!(inv.dim_z, 0);
        assert_eq!(inv.deg_c, 0);
        assert_eq!(inv.len_u, 5);
        assert_eq!(inv.p_a_c, 1);

        // A wrong length is inconsistent.
        assert!(matches!(
            invariants_from_hilbert(1, &synthetic_hp(UniPoly::int(4))),
            Err(InvariantError::InconsistentInvariants { .. })
        ));
    }

    #[test]
    fn conic_and_point() {
        // HP = 2t + 2: a conic plus one embedded/isolated point.
        let inv =
            invariants_from_hilbert(1, &synthetic_hp(UniPoly::from_ints(&[2, 2]))).unwrap();
        assert_eq!((inv.deg_c, inv.p_a_c, inv.len_u), (2, 0, 1));
        let chern = chern_from_invariants(&inv).unwrap();
        assert_eq!((chern.c1, chern.c2, chern.c3), (1, 1, 1));
    }

    #[test]
    fn quadruple_line_of_degree_two() {
        // HP = 4t + 4: a line of multiplicity 4 with genus 1.
        let inv =
            invariants_from_hilbert(2, &synthetic_hp(UniPoly::from_ints(&[4, 4]))).unwrap();
        assert_eq!((inv.deg_c, inv.p_a_c, inv.len_u), (4, 1, 4));
        let chern = chern_from_invariants(&inv).unwrap();
        assert_eq!((chern.c2, chern.c3), (2, 4));
    }

    #[test]
    fn empty_scheme_only_in_degree_zero() {
        let inv = invariants_from_hilbert(0, &synthetic_hp(UniPoly::zero())).unwrap();
        assert_eq!(inv.dim_z, -1);
        let chern = chern_from_invariants(&inv).unwrap();
        assert_eq!((chern.c1, chern.c2, chern.c3), (2, 2, 0));
        assert!(matches!(
            invariants_from_hilbert(1, &synthetic_hp(UniPoly::zero())),
            Err(InvariantError::InconsistentInvariants { .. })
        ));
    }

    #[test]
    fn divisorial_locus_rejected() {
        let hp = hp_of(&["z0^2"]);
        assert_eq!(hp.projective_dimension, 2);
        assert!(matches!(
            invariants_from_hilbert(1, &hp),
            Err(InvariantError::DivisorialSingularLocus)
        ));
    }

    #[test]
    fn twisted_cubic_row() {
        let hp = hp_of(&["z0*z2 - z1^2", "z1*z3 - z2^2", "z0*z3 - z1*z2"]);
        let inv = invariants_from_hilbert(1, &hp).unwrap();
        assert_eq!((inv.deg_c, inv.p_a_c, inv.len_u), (3, 0, 0));
        let chern = chern_from_invariants(&inv).unwrap();
        assert_eq!((chern.c1, chern.c2, chern.c3), (1, 0, 0));
        assert!(chern.locally_free);
        let class = classify_low_degree(1, &chern, inv.dim_z).unwrap().unwrap();
        assert!(class.contains("twisted cubic"));
    }

    #[test]
    fn curve_data_examples() {
        assert_eq!(curve_data_from_chern(14, 37, 0).unwrap(), (161, 1639));
        assert_eq!(curve_data_from_chern(1, 1, 1).unwrap(), (2, 0));
        assert_eq!(curve_data_from_chern(2, -1, 0).unwrap(), (7, 5));
        assert!(matches!(
            curve_data_from_chern(1, 1, 0),
            Err(InvariantError::NonIntegralGenus { .. })
        ));
    }

    #[test]
    fn chern_round_trip() {
        for (d, deg_c, p_a, len_u) in
            [(1, 3, 0, 0), (1, 0, 1, 5), (2, 4, 1, 4), (14, 161, 1639, 0)]
        {
            let kappa = (1 - p_a) + len_u;
            let inv = SchemeInvariants {
                degree_d: d,
                dim_z: if deg_c == 0 { 0 } else { 1 },
                deg_c,
                p_a_c: p_a,
                len_u,
                kappa,
            };
            let chern = chern_from_invariants(&inv).unwrap();
            assert_eq!(
                curve_data_from_chern(d, chern.c2, chern.c3).unwrap(),
                (deg_c, p_a)
            );
        }
    }

    #[test]
    fn chi_tangent_values() {
        // O(1) + O(1): χ = 2·C(4,3) = 8.
        let chi = chi_tangent(0, 1, 0);
        assert_eq!(chi.riemann_roch.eval_int(0), rat_int(8));
        assert!(chi.formulas_disagree);

        // Degree 1 conic row: χ(T(0)) = 15 − 20 + (2·3 + 2) = 3.
        let chi = chi_tangent(1, 1, 1);
        assert_eq!(chi.riemann_roch.eval_int(0), rat_int(3));

        // The closed formula agrees with Riemann–Roch for d = 2 and 3.
        assert!(!chi_tangent(2, 3, 4).formulas_disagree);
        assert!(!chi_tangent(3, 5, 10).formulas_disagree);
        assert!(chi_tangent(4, 5, 10).formulas_disagree);
    }

    #[test]
    fn chi_matches_additivity() {
        // d = 1, P_Z = 2t + 2 (conic and point).
        let chi = chi_tangent(1, 1, 1);
        let reference = chi_tangent_additivity(1, &UniPoly::from_ints(&[2, 2]));
        assert_eq!(chi.riemann_roch, reference);

        // d = 1, P_Z ≡ 5 (five points).
        let chi = chi_tangent(1, 3, 5);
        let reference = chi_tangent_additivity(1, &UniPoly::int(5));
        assert_eq!(chi.riemann_roch, reference);

        // d = 2, P_Z = 4t + 4.
        let chi = chi_tangent(2, 2, 4);
        let reference = chi_tangent_additivity(2, &UniPoly::from_ints(&[4, 4]));
        assert_eq!(chi.riemann_roch, reference);
    }

    #[test]
    fn bounds_examples() {
        let inv = SchemeInvariants {
            degree_d: 14,
            dim_z: 1,
            deg_c: 161,
            p_a_c: 1639,
            len_u: 0,
            kappa: 0,
        };
        let chern = ChernData {
            c1: -12,
            c2: 37,
            c3: 0,
            locally_free: true,
        };
        let bounds = bounds_report(&inv, &chern);
        assert!(bounds
            .iter()
            .find(|b| b.name == "singular-curve-degree-bound")
            .unwrap()
            .satisfied);
        assert!(!has_hard_violation(&bounds));

        // c2 = 7 in degree 2 violates the upper bound.
        let inv2 = SchemeInvariants {
            degree_d: 2,
            dim_z: 1,
            deg_c: -1,
            p_a_c: 0,
            len_u: 0,
            kappa: 1,
        };
        let chern2 = ChernData {
            c1: 0,
            c2: 7,
            c3: 0,
            locally_free: true,
        };
        assert!(has_hard_violation(&bounds_report(&inv2, &chern2)));

        // Boundary case: c2 = 1 − d exactly satisfies the lower bound.
        let chern3 = ChernData {
            c1: -1,
            c2: -2,
            c3: 0,
            locally_free: true,
        };
        let inv3 = SchemeInvariants {
            degree_d: 3,
            dim_z: 1,
            deg_c: 13,
            p_a_c: 0,
            len_u: 0,
            kappa: 0,
        };
        assert!(bounds_report(&inv3, &chern3)
            .iter()
            .find(|b| b.name == "second-chern-lower-bound")
            .unwrap()
            .satisfied);
    }

    #[test]
    fn stability_cascade() {
        assert_eq!(
            stability_verdict(1, 0, 0, 3).stability,
            Stability::Stable
        );
        assert_eq!(
            stability_verdict(1, 0, 0, 3).rule_fired,
            "isolated-singularities-stability"
        );
        assert_eq!(
            stability_verdict(2, 1, 1, 5).stability,
            Stability::Stable
        );
        assert_eq!(
            stability_verdict(2, 1, 5, 1).stability,
            Stability::MuSemistable
        );
        assert_eq!(
            stability_verdict(1, 1, 3, 0).stability,
            Stability::Split
        );
        assert_eq!(
            stability_verdict(3, 1, 8, -1).stability,
            Stability::Undetermined
        );
        // Odd-degree criterion.
        assert_eq!(
            stability_verdict(3, 1, 7, 4).stability,
            Stability::Stable
        );
    }

    #[test]
    fn classification_rows() {
        let nc = ChernData {
            c1: 0,
            c2: 1,
            c3: 0,
            locally_free: true,
        };
        let s = classify_low_degree(2, &nc, 1).unwrap().unwrap();
        assert!(s.contains("null-correlation"));

        let inst = ChernData {
            c1: 0,
            c2: 2,
            c3: 0,
            locally_free: true,
        };
        let s = classify_low_degree(2, &inst, 1).unwrap().unwrap();
        assert!(s.contains("instanton"));

        // deg 2, deg_C = 1 forbids c3 = 13 (not in the row's value set).
        let bad = ChernData {
            c1: 0,
            c2: 5,
            c3: 13,
            locally_free: false,
        };
        assert!(matches!(
            classify_low_degree(2, &bad, 1),
            Err(InvariantError::UnclassifiedInvariants { .. })
        ));

        assert_eq!(
            classify_low_degree(
                3,
                &ChernData {
                    c1: -1,
                    c2: 0,
                    c3: 0,
                    locally_free: true
                },
                1
            )
            .unwrap(),
            None
        );
    }

    #[test]
    fn verdict_monotonicity() {
        // Any configuration judged stable must stay at least
        // μ-semistable when the stable criterion is weakened.
        for d in 0..8i64 {
            for deg_c in 0..=(d * d + d + 1) {
                let c2 = d * d + 2 - deg_c;
                let v = stability_verdict(d, 1, deg_c, c2);
                if v.stability == Stability::Stable && d % 2 == 0 {
                    assert!(2 * deg_c < d * d + 3 * d + 2);
                }
            }
        }
    }
}
