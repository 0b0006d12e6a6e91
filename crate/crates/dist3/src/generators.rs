//! Constructors for the standard families of distribution 1-forms —
//! rational, logarithmic, split-tangent, and seeded random antisymmetric
//! — together with their closed-form Chern data and the dimensions of
//! the corresponding families and moduli fixtures.

use num::Integer;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::forms::{
    exterior_derivative, form_from_antisym, make_distribution_form, DistributionForm,
    FormError, PForm,
};
use crate::groebner::{hilbert_polynomial, Ideal};
use crate::invariants::{Stability, Verdict};
use crate::poly::{Monomial, Poly, Rational, NVARS};
use crate::univar::binomial;

#[derive(Debug, thiserror::Error)]
pub enum GeneratorError {
    #[error(transparent)]
    Form(#[from] FormError),
    #[error("spec violates {constraint}")]
    InvalidSpec { constraint: &'static str },
    #[error("no valid form found after {attempts} attempts for degree {d}, seed {seed}")]
    GenerationExhausted { d: u32, seed: u64, attempts: u32 },
    #[error("unknown component {name}")]
    UnknownComponent { name: String },
}

/// A rational pencil ψ^q / φ^p: ψ, φ homogeneous of degrees a ≤ b with
/// p = a/gcd(a,b), q = b/gcd(a,b).
#[derive(Clone, Debug)]
pub struct RationalSpec {
    pub psi: Poly,
    pub phi: Poly,
    pub a: i64,
    pub b: i64,
    pub p: i64,
    pub q: i64,
}

impl RationalSpec {
    pub fn new(psi: Poly, phi: Poly) -> Result<Self, GeneratorError> {
        let a = psi.homogeneous_degree().ok_or(GeneratorError::InvalidSpec {
            constraint: "psi homogeneous and nonzero",
        })? as i64;
        let b = phi.homogeneous_degree().ok_or(GeneratorError::InvalidSpec {
            constraint: "phi homogeneous and nonzero",
        })? as i64;
        if a < 1 || b < a {
            return Err(GeneratorError::InvalidSpec {
                constraint: "degrees 1 <= a <= b",
            });
        }
        let g = a.gcd(&b);
        Ok(RationalSpec {
            psi,
            phi,
            a,
            b,
            p: a / g,
            q: b / g,
        })
    }
}

/// ω = pψ·dφ − qφ·dψ, of degree a + b − 2. Always integrable.
pub fn rational_form(spec: &RationalSpec) -> Result<DistributionForm, GeneratorError> {
    let d_phi = exterior_derivative(&PForm::scalar(spec.phi.clone()));
    let d_psi = exterior_derivative(&PForm::scalar(spec.psi.clone()));
    let omega = d_phi
        .scale_poly(&spec.psi.scale(&Rational::from(num::BigInt::from(spec.p))))
        .sub(&d_psi.scale_poly(&spec.phi.scale(&Rational::from(num::BigInt::from(spec.q)))));
    let coeffs: [Poly; NVARS] = std::array::from_fn(|i| omega.coefficient(1 << i));
    Ok(make_distribution_form(coeffs)?)
}

/// Chern classes of the tangent sheaf of a generic rational pencil of
/// type (a, b).
pub fn chern_rational(a: i64, b: i64) -> (i64, i64, i64) {
    let d = a + b - 2;
    let c1 = 2 - d;
    let c2 = a * a + b * b + a * b - 4 * (a + b) + 6;
    let c3 = d * d * d + 2 * d * d + 2 * (1 - a * b) * d;
    (c1, c2, c3)
}

/// A logarithmic arrangement: r ≥ 3 homogeneous factors with nonzero
/// rational residues λ satisfying Σ dᵢλᵢ = 0.
#[derive(Clone, Debug)]
pub struct LogSpec {
    pub factors: Vec<Poly>,
    pub lambdas: Vec<Rational>,
    pub degrees: Vec<i64>,
}

impl LogSpec {
    pub fn new(factors: Vec<Poly>, lambdas: Vec<Rational>) -> Result<Self, GeneratorError> {
        if factors.len() < 3 || factors.len() != lambdas.len() {
            return Err(GeneratorError::InvalidSpec {
                constraint: "r >= 3 factors with matching residues",
            });
        }
        let mut degrees = Vec::with_capacity(factors.len());
        for f in &factors {
            degrees.push(f.homogeneous_degree().ok_or(GeneratorError::InvalidSpec {
                constraint: "factors homogeneous and nonzero",
            })? as i64);
        }
        if lambdas.iter().any(num::Zero::is_zero) {
            return Err(GeneratorError::InvalidSpec {
                constraint: "residues nonzero",
            });
        }
        let weighted: Rational = degrees
            .iter()
            .zip(&lambdas)
            .map(|(d, l)| l * Rational::from(num::BigInt::from(*d)))
            .sum();
        if !num::Zero::is_zero(&weighted) {
            return Err(GeneratorError::InvalidSpec {
                constraint: "sum of d_i * lambda_i = 0",
            });
        }
        Ok(LogSpec {
            factors,
            lambdas,
            degrees,
        })
    }
}

/// ω = Σᵢ λᵢ (∏_{j≠i} fⱼ)·dfᵢ, of degree Σdᵢ − 2. Always integrable.
pub fn logarithmic_form(spec: &LogSpec) -> Result<DistributionForm, GeneratorError> {
    let mut omega = PForm::zero(1);
    for i in 0..spec.factors.len() {
        let mut cofactor = Poly::one();
        for (j, f) in spec.factors.iter().enumerate() {
            if j != i {
                cofactor = &cofactor * f;
            }
        }
        let df = exterior_derivative(&PForm::scalar(spec.factors[i].clone()));
        omega = omega.add(&df.scale_poly(&cofactor.scale(&spec.lambdas[i])));
    }
    let coeffs: [Poly; NVARS] = std::array::from_fn(|i| omega.coefficient(1 << i));
    Ok(make_distribution_form(coeffs)?)
}

/// Chern classes of the tangent sheaf of a generic logarithmic
/// arrangement with factor degrees `degrees`; c3 is the h³ coefficient
/// of (1−h)⁴ / ∏(1−dᵢh).
pub fn chern_logarithmic(degrees: &[i64]) -> (i64, i64, i64) {
    let d: i64 = degrees.iter().sum::<i64>() - 2;
    let c1 = 2 - d;
    let mut pairwise = 0;
    for i in 0..degrees.len() {
        for j in i + 1..degrees.len() {
            pairwise += degrees[i] * degrees[j];
        }
    }
    let c2 = d * d + 2 - pairwise;

    // Truncated series product to order h³.
    let mut series = [1i64, 0, 0, 0];
    for &di in degrees {
        let mut next = [0i64; 4];
        for k in 0..4usize {
            // 1/(1−dᵢh) contributes dᵢ^m at order m.
            let mut pow = 1i64;
            for m in 0..=k {
                next[k] += series[k - m] * pow;
                pow *= di;
            }
        }
        series = next;
    }
    let numer = [1i64, -4, 6, -4];
    let c3: i64 = (0..4).map(|k| numer[k] * series[3 - k]).sum();
    (c1, c2, c3)
}

/// The pairwise-product bound Σ_{i<j} dᵢdⱼ ≤ r(r−1)(d+2)²/(2r²),
/// evaluated exactly.
pub fn log_bound_check(degrees: &[i64]) -> bool {
    let r = degrees.len() as i64;
    let d: i64 = degrees.iter().sum::<i64>() - 2;
    let mut pairwise = 0;
    for i in 0..degrees.len() {
        for j in i + 1..degrees.len() {
            pairwise += degrees[i] * degrees[j];
        }
    }
    // pairwise ≤ r(r−1)(d+2)²/(2r²)  ⟺  2r²·pairwise ≤ r(r−1)(d+2)².
    2 * r * r * pairwise <= r * (r - 1) * (d + 2) * (d + 2)
}

/// Sufficient stability criteria for logarithmic foliations of degree
/// d ≥ 3 with r factors.
pub fn logstable_verdict(d: i64, r: i64) -> Verdict {
    assert!(d >= 3, "criterion applies from degree 3");
    let verdict = |stability, rule_fired| Verdict {
        stability,
        rule_fired,
        classification: None,
    };
    if d % 2 == 0 {
        if d > 3 * r - 2 {
            return verdict(Stability::Stable, "log-even-degree-stability");
        }
        if d > r - 2 {
            return verdict(Stability::MuSemistable, "log-even-degree-semistability");
        }
    } else if d > 2 * r - 2 {
        return verdict(Stability::Stable, "log-odd-degree-stability");
    }
    verdict(Stability::Undetermined, "no-criterion-applies")
}

/// A form with vanishing last coefficient; requires the three-term Euler
/// condition z0·A0 + z1·A1 + z2·A2 = 0. The tangent sheaf splits.
pub fn split_tangent_form(
    a0: Poly,
    a1: Poly,
    a2: Poly,
) -> Result<DistributionForm, GeneratorError> {
    Ok(make_distribution_form([a0, a1, a2, Poly::zero()])?)
}

/// Provenance of a generated form, embedded in reports for
/// reproducibility.
#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub family: String,
    pub seed: Option<u64>,
    pub rng: Option<&'static str>,
}

const RNG_ALGORITHM: &str = "chacha8";
const MAX_ATTEMPTS: u32 = 64;

fn monomials_of_degree(deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for e0 in 0..=deg {
        for e1 in 0..=deg - e0 {
            for e2 in 0..=deg - e0 - e1 {
                out.push(Monomial::from_exponents([e0, e1, e2, deg - e0 - e1 - e2]));
            }
        }
    }
    out
}

fn random_homogeneous(rng: &mut ChaCha8Rng, deg: u32) -> Poly {
    let mut p = Poly::zero();
    for m in monomials_of_degree(deg) {
        let c: i64 = rng.gen_range(-3..=3);
        if c != 0 {
            p.add_term(m, crate::poly::rat_int(c));
        }
    }
    p
}

/// Sample a degree-`d` distribution form from a seeded antisymmetric
/// matrix with small integer entries; deterministic in `(d, seed)`.
/// Retries when the sampled matrix gives a zero form or a divisorial
/// singular locus.
pub fn random_form(d: u32, seed: u64) -> Result<(DistributionForm, Provenance), GeneratorError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(d).wrapping_mul(0x9e3779b97f4a7c15));
    for _ in 0..MAX_ATTEMPTS {
        let mut b: [[Poly; NVARS]; NVARS] = Default::default();
        for i in 0..NVARS {
            for j in i + 1..NVARS {
                let entry = random_homogeneous(&mut rng, d);
                b[j][i] = -&entry;
                b[i][j] = entry;
            }
        }
        let form = match form_from_antisym(&b) {
            Ok(f) => f,
            Err(FormError::ZeroForm) => continue,
            Err(e) => return Err(e.into()),
        };
        // Reject coefficient tuples with a common factor: the singular
        // scheme would contain a surface.
        let ideal = Ideal::new(form.coefficients().to_vec());
        let hp = hilbert_polynomial(&ideal).map_err(|_| GeneratorError::GenerationExhausted {
            d,
            seed,
            attempts: MAX_ATTEMPTS,
        })?;
        if hp.projective_dimension >= 2 {
            continue;
        }
        return Ok((
            form,
            Provenance {
                family: format!("random-antisym-{d}"),
                seed: Some(seed),
                rng: Some(RNG_ALGORITHM),
            },
        ));
    }
    Err(GeneratorError::GenerationExhausted {
        d,
        seed,
        attempts: MAX_ATTEMPTS,
    })
}

fn generic_invariants_match(
    form: &DistributionForm,
    expect_c2: i64,
    expect_c3: i64,
    expect_deg_c: Option<i64>,
) -> bool {
    let ideal = Ideal::new(form.coefficients().to_vec());
    let Ok(hp) = hilbert_polynomial(&ideal) else {
        return false;
    };
    let Ok(inv) = crate::invariants::invariants_from_hilbert(form.degree() as i64, &hp)
    else {
        return false;
    };
    let Ok(chern) = crate::invariants::chern_from_invariants(&inv) else {
        return false;
    };
    chern.c2 == expect_c2
        && chern.c3 == expect_c3
        && expect_deg_c.is_none_or(|dc| inv.deg_c == dc)
}

/// Seeded search for a generic rational pencil of type (a, b): sample
/// ψ, φ until the analyzed invariants match the closed-form Chern data
/// and deg C = a·b.
pub fn random_rational_spec(
    a: u32,
    b: u32,
    seed: u64,
) -> Result<(RationalSpec, DistributionForm, Provenance), GeneratorError> {
    assert!(a >= 1 && b >= a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7261_7469_6f6e_616c);
    let (_, c2, c3) = chern_rational(a as i64, b as i64);
    for _ in 0..MAX_ATTEMPTS {
        let psi = random_homogeneous(&mut rng, a);
        let phi = random_homogeneous(&mut rng, b);
        let Ok(spec) = RationalSpec::new(psi, phi) else {
            continue;
        };
        let Ok(form) = rational_form(&spec) else {
            continue;
        };
        if generic_invariants_match(&form, c2, c3, Some((a * b) as i64)) {
            return Ok((
                spec,
                form,
                Provenance {
                    family: format!("rational({a},{b})"),
                    seed: Some(seed),
                    rng: Some(RNG_ALGORITHM),
                },
            ));
        }
    }
    Err(GeneratorError::GenerationExhausted {
        d: a + b - 2,
        seed,
        attempts: MAX_ATTEMPTS,
    })
}

/// Seeded search for a generic logarithmic arrangement with the given
/// factor degrees; residues are 1,…,1,−(Σᵢ<ᵣ dᵢ)/d_r.
pub fn random_log_spec(
    degrees: &[u32],
    seed: u64,
) -> Result<(LogSpec, DistributionForm, Provenance), GeneratorError> {
    if degrees.len() < 3 {
        return Err(GeneratorError::InvalidSpec {
            constraint: "r >= 3 factors",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6c6f_6761_7269_7468);
    let degrees_i: Vec<i64> = degrees.iter().map(|&d| d as i64).collect();
    let (_, c2, c3) = chern_logarithmic(&degrees_i);
    let r = degrees.len();
    let head_sum: i64 = degrees_i[..r - 1].iter().sum();
    let mut lambdas: Vec<Rational> =
        vec![Rational::from(num::BigInt::from(1)); r - 1];
    lambdas.push(crate::poly::rat(-head_sum, degrees_i[r - 1]));
    for _ in 0..MAX_ATTEMPTS {
        let factors: Vec<Poly> = degrees.iter().map(|&d| random_homogeneous(&mut rng, d)).collect();
        let Ok(spec) = LogSpec::new(factors, lambdas.clone()) else {
            continue;
        };
        let Ok(form) = logarithmic_form(&spec) else {
            continue;
        };
        if generic_invariants_match(&form, c2, c3, None) {
            return Ok((
                spec,
                form,
                Provenance {
                    family: format!("logarithmic({degrees_i:?})"),
                    seed: Some(seed),
                    rng: Some(RNG_ALGORITHM),
                },
            ));
        }
    }
    Err(GeneratorError::GenerationExhausted {
        d: degrees.iter().sum::<u32>() - 2,
        seed,
        attempts: MAX_ATTEMPTS,
    })
}

/// Dimension of the family of twisted null-correlation distributions
/// with parameter `a`.
pub fn dim_null_correlation(a: i64) -> i64 {
    let b3 = |n: i64| -> i64 {
        use num::ToPrimitive;
        binomial(n, 3).to_i64().unwrap()
    };
    8 * b3(a + 4) - 2 * b3(a + 3) - 3 * a - 6
}

/// Dimension of the rational family R(a, b).
pub fn dim_rational(a: i64, b: i64) -> i64 {
    use num::ToPrimitive;
    let b3 = |n: i64| binomial(n, 3).to_i64().unwrap();
    b3(a + 3) + b3(b + 3) - 2
}

/// Dimension of the logarithmic family L(d₁,…,d_r).
pub fn dim_logarithmic(degrees: &[i64]) -> i64 {
    use num::ToPrimitive;
    degrees
        .iter()
        .map(|&d| binomial(d + 3, 3).to_i64().unwrap())
        .sum::<i64>()
        - 2
}

/// Dimensions of the distribution moduli spaces pinned in the low-degree
/// study, keyed by (degree, c2, c3).
pub fn moduli_dimension(d: i64, c2: i64, c3: i64) -> Option<i64> {
    match (d, c2, c3) {
        (1, 1, 1) => Some(14),
        (2, 2, 0) => Some(22),
        (2, 2, 4) => Some(28),
        (2, 3, 8) => Some(32),
        (1, 3, 5) => Some(19),
        _ => None,
    }
}

/// Named dispatch used by the CLI.
pub fn component_dimensions(name: &str, params: &[i64]) -> Result<i64, GeneratorError> {
    match (name, params) {
        ("null-correlation", [a]) => Ok(dim_null_correlation(*a)),
        ("rational", [a, b]) => Ok(dim_rational(*a, *b)),
        ("logarithmic", degrees) if degrees.len() >= 3 => Ok(dim_logarithmic(degrees)),
        ("moduli", [d, c2, c3]) => {
            moduli_dimension(*d, *c2, *c3).ok_or(GeneratorError::UnknownComponent {
                name: format!("moduli({d},{c2},{c3})"),
            })
        }
        _ => Err(GeneratorError::UnknownComponent {
            name: format!("{name}({params:?})"),
        }),
    }
}

/// Chern bookkeeping for distributions arising from globally generated
/// sheaves: inputs (c1, c2, c3) of the sheaf, outputs
/// (degree, c2, c3) of the tangent sheaf.
pub fn glob_gen_chern(c1: i64, c2: i64, c3: i64) -> (i64, i64, i64) {
    (c1, c2 - c1 + 1, c3)
}
