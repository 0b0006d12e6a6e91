//! The end-to-end analysis pipeline and its serializable report.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::forms::{
    integrability_defect, make_distribution_form, martinet_polynomial, DistributionForm,
    FormError,
};
use crate::generators::Provenance;
use crate::groebner::{hilbert_polynomial, HilbertError, Ideal};
use crate::invariants::{
    bounds_report, chern_from_invariants, chi_tangent, classify_low_degree,
    has_hard_violation, invariants_from_hilbert, stability_verdict, BoundCheck, ChernData,
    InvariantError, SchemeInvariants, Verdict,
};
use crate::poly::{ParseError, Poly, Rational};
use crate::univar::UniPoly;

pub const FORMAT: &str = "dist3/1";

/// Rational rendered as an exact "num/den" (or plain integer) string.
fn rational_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn coeff_strings(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(rational_string).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiReport {
    /// Ascending coefficients of χ(T(t)) by Riemann–Roch.
    pub riemann_roch: Vec<String>,
    /// Ascending coefficients of the closed cubic formula.
    pub closed_formula: Vec<String>,
    /// Set when the two polynomials differ (expected outside degrees 2
    /// and 3).
    pub formulas_disagree: bool,
}

/// Everything the analyzer derives from one distribution form. Every
/// numeric field is re-derivable from the echoed coefficients.
#[derive(Clone, Debug, Serialize)]
pub struct DistributionReport {
    pub format: &'static str,
    /// Canonical echo of the input coefficients A0..A3.
    pub coefficients: Vec<String>,
    pub degree: i64,
    pub euler_ok: bool,
    pub integrable: bool,
    /// Martinet polynomial in canonical form; "0" iff integrable.
    pub martinet: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert_polynomial: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<SchemeInvariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chern: Option<ChernData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<BoundCheck>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_tangent: Option<ChiReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    /// Stage timings; excluded from determinism comparisons.
    pub timings_ms: BTreeMap<&'static str, u128>,
}

/// Stable machine-readable error object; `witness` carries the offending
/// polynomial in canonical form when there is one.
#[derive(Clone, Debug, Serialize)]
pub struct ErrorObject {
    pub code: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, thiserror::Error)]
#[error("{}", object.message)]
pub struct AnalyzeError {
    pub object: ErrorObject,
    /// Process exit code: 1 validation, 2 inconsistency, 3 internal.
    pub exit_code: i32,
}

impl AnalyzeError {
    fn validation(code: &'static str, message: String, witness: Option<String>) -> Self {
        AnalyzeError {
            object: ErrorObject {
                code,
                message,
                witness,
            },
            exit_code: 1,
        }
    }

    fn inconsistency(code: &'static str, message: String) -> Self {
        AnalyzeError {
            object: ErrorObject {
                code,
                message,
                witness: None,
            },
            exit_code: 2,
        }
    }

    fn internal(code: &'static str, message: String) -> Self {
        AnalyzeError {
            object: ErrorObject {
                code,
                message,
                witness: None,
            },
            exit_code: 3,
        }
    }
}

impl From<ParseError> for AnalyzeError {
    fn from(e: ParseError) -> Self {
        AnalyzeError::validation("parse-error", e.to_string(), None)
    }
}

impl From<FormError> for AnalyzeError {
    fn from(e: FormError) -> Self {
        match &e {
            FormError::EulerConditionViolated { contraction } => AnalyzeError::validation(
                "euler-condition-violated",
                e.to_string(),
                Some(contraction.to_string()),
            ),
            FormError::MartinetDivisionFailed { .. } => {
                AnalyzeError::internal("martinet-division-failed", e.to_string())
            }
            _ => AnalyzeError::validation("invalid-form", e.to_string(), None),
        }
    }
}

impl From<HilbertError> for AnalyzeError {
    fn from(e: HilbertError) -> Self {
        AnalyzeError::internal("hilbert-guard", e.to_string())
    }
}

impl From<InvariantError> for AnalyzeError {
    fn from(e: InvariantError) -> Self {
        match &e {
            InvariantError::DivisorialSingularLocus => AnalyzeError::validation(
                "divisorial-singular-locus",
                e.to_string(),
                None,
            ),
            InvariantError::InconsistentInvariants { .. }
            | InvariantError::ParityViolation { .. }
            | InvariantError::NonIntegralGenus { .. }
            | InvariantError::UnclassifiedInvariants { .. } => {
                AnalyzeError::inconsistency("inconsistent-invariants", e.to_string())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalysisOptions {
    /// Stop after the exterior-calculus stage (no ideal theory).
    pub skip_groebner: bool,
}

/// Run the full pipeline on a validated form.
pub fn analyze_form(
    form: &DistributionForm,
    options: AnalysisOptions,
    provenance: Option<Provenance>,
) -> Result<DistributionReport, AnalyzeError> {
    let mut timings = BTreeMap::new();

    let start = Instant::now();
    let defect = integrability_defect(form);
    let integrable = defect.is_zero();
    let martinet = martinet_polynomial(form)?;
    timings.insert("exterior_calculus", start.elapsed().as_millis());

    let d = form.degree() as i64;
    let mut report = DistributionReport {
        format: FORMAT,
        coefficients: form.coefficients().iter().map(|p| p.to_string()).collect(),
        degree: d,
        euler_ok: true,
        integrable,
        martinet: martinet.to_string(),
        hilbert_polynomial: None,
        invariants: None,
        chern: None,
        parity_ok: None,
        bounds: None,
        verdict: None,
        chi_tangent: None,
        provenance,
        timings_ms: timings,
    };
    if options.skip_groebner {
        return Ok(report);
    }

    let start = Instant::now();
    let ideal = Ideal::new(form.coefficients().to_vec());
    let hp = hilbert_polynomial(&ideal)?;
    report
        .timings_ms
        .insert("groebner_hilbert", start.elapsed().as_millis());
    report.hilbert_polynomial = Some(coeff_strings(&hp.hilbert_polynomial));

    let start = Instant::now();
    let inv = invariants_from_hilbert(d, &hp)?;
    let chern = chern_from_invariants(&inv)?;
    report.invariants = Some(inv);
    report.chern = Some(chern);
    report.parity_ok = Some(true);

    let bounds = bounds_report(&inv, &chern);
    let hard_violation = has_hard_violation(&bounds);
    report.bounds = Some(bounds);
    if hard_violation {
        return Err(AnalyzeError::inconsistency(
            "bound-violation",
            "a hard consistency bound is violated".into(),
        ));
    }

    let mut verdict = stability_verdict(d, inv.dim_z, inv.deg_c, chern.c2);
    verdict.classification = classify_low_degree(d, &chern, inv.dim_z)?;
    report.verdict = Some(verdict);

    let chi = chi_tangent(d, chern.c2, chern.c3);
    report.chi_tangent = Some(ChiReport {
        riemann_roch: coeff_strings(&chi.riemann_roch),
        closed_formula: coeff_strings(&chi.printed_formula),
        formulas_disagree: chi.formulas_disagree,
    });
    report
        .timings_ms
        .insert("invariants", start.elapsed().as_millis());
    Ok(report)
}

/// Validate four coefficient polynomials and analyze them.
pub fn analyze_coefficients(
    coeffs: [Poly; 4],
    options: AnalysisOptions,
    provenance: Option<Provenance>,
) -> Result<DistributionReport, AnalyzeError> {
    let form = make_distribution_form(coeffs)?;
    analyze_form(&form, options, provenance)
}

/// The input document format: four coefficient expressions.
#[derive(Debug, serde::Deserialize, Serialize)]
pub struct FormDocument {
    pub format: String,
    pub coefficients: [String; 4],
}

impl FormDocument {
    pub fn parse_coefficients(&self) -> Result<[Poly; 4], AnalyzeError> {
        if self.format != FORMAT {
            return Err(AnalyzeError::validation(
                "unknown-format",
                format!("unsupported document format {:?}", self.format),
                None,
            ));
        }
        let mut out: Vec<Poly> = Vec::with_capacity(4);
        for text in &self.coefficients {
            out.push(crate::poly::parse_poly(text)?);
        }
        Ok(out.try_into().unwrap())
    }

    pub fn from_form(form: &DistributionForm) -> Self {
        FormDocument {
            format: FORMAT.to_string(),
            coefficients: form
                .coefficients()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .try_into()
                .unwrap(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::Stability;
    use crate::poly::parse_poly;

    fn analyze(coeffs: [&str; 4]) -> Result<DistributionReport, AnalyzeError> {
        analyze_coefficients(
            coeffs.map(|s| parse_poly(s).unwrap()),
            AnalysisOptions::default(),
            None,
        )
    }

    #[test]
    fn isolated_singularities_example() {
        // A0..A2 vanish on z3-scaled radial directions; five isolated
        // singular points.
        let report = analyze([
            "-(z3*z0 + z2*z1)",
            "z2*z0 - z3*z1",
            "-(z3*z2)",
            "z0^2 + z1^2 + z2^2",
        ])
        .unwrap();
        assert_eq!(report.degree, 1);
        let inv = report.invariants.unwrap();
        assert_eq!(inv.dim_z, 0);
        assert_eq!(inv.len_u, 5);
        let chern = report.chern.unwrap();
        assert_eq!((chern.c2, chern.c3), (3, 5));
        assert_eq!(report.verdict.unwrap().stability, Stability::Stable);
    }

    #[test]
    fn skip_groebner_stops_early() {
        let report = analyze_coefficients(
            ["z1", "-z0", "z3", "-z2"].map(|s| parse_poly(s).unwrap()),
            AnalysisOptions {
                skip_groebner: true,
            },
            None,
        )
        .unwrap();
        assert!(report.invariants.is_none());
        assert!(!report.integrable);
        assert!(report.martinet != "0");
    }

    #[test]
    fn divisorial_input_is_a_validation_error() {
        // Common factor z0 in all coefficients.
        let err = analyze(["z0*z1", "-z0*z0", "z0*z3", "-z0*z2"]).unwrap_err();
        assert_eq!(err.exit_code, 1);
        assert_eq!(err.object.code, "divisorial-singular-locus");
    }

    #[test]
    fn euler_violation_carries_witness() {
        let err = analyze(["z0^2", "0", "0", "0"]).unwrap_err();
        assert_eq!(err.exit_code, 1);
        assert_eq!(err.object.code, "euler-condition-violated");
        assert!(err.object.witness.is_some());
    }

    #[test]
    fn report_serializes_with_exact_rationals() {
        let report = analyze(["z1", "-z0", "z3", "-z2"]).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"format\":\"dist3/1\""));
        // Determinism modulo timings.
        let report2 = analyze(["z1", "-z0", "z3", "-z2"]).unwrap();
        let mut a = serde_json::to_value(&report).unwrap();
        let mut b = serde_json::to_value(&report2).unwrap();
        a.as_object_mut().unwrap().remove("timings_ms");
        b.as_object_mut().unwrap().remove("timings_ms");
        assert_eq!(a, b);
    }
}
