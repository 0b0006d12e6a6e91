//! Exterior calculus on ℂ⁴ with polynomial coefficients: wedge products,
//! exterior derivative, contraction with the radial field, and the
//! Martinet polynomial of a non-integrable distribution.

use std::collections::BTreeMap;
use std::fmt;

use crate::poly::{rat_int, Poly, NVARS};

/// A polynomial differential form on ℂ⁴. The coefficient of
/// `dz_{i1} ∧ … ∧ dz_{ip}` (indices strictly increasing) is stored under
/// the bitmask with bits `i1..ip` set, so form degree = popcount of every
/// key. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PForm {
    form_degree: u8,
    coefficients: BTreeMap<u8, Poly>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormError {
    #[error("coefficient A{index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("coefficients have mixed degrees: A{first_index} has degree {first_degree}, A{second_index} has degree {second_degree}")]
    MixedDegrees {
        first_index: usize,
        first_degree: u32,
        second_index: usize,
        second_degree: u32,
    },
    #[error("all coefficients are zero")]
    ZeroForm,
    #[error("radial contraction is nonzero: {contraction}")]
    EulerConditionViolated { contraction: Poly },
    #[error("matrix is not antisymmetric at entry ({row}, {col})")]
    NotAntisymmetric { row: usize, col: usize },
    #[error("Martinet division failed on coefficient {index}")]
    MartinetDivisionFailed { index: usize },
}

/// Sign of moving `dz_i` past the factors of the increasing product
/// indexed by `mask`, together with the merged mask; `None` when `i`
/// already occurs.
fn insert_sign(mask: u8, i: usize) -> Option<(i64, u8)> {
    let bit = 1u8 << i;
    if mask & bit != 0 {
        return None;
    }
    let below = (mask & (bit - 1)).count_ones();
    let sign = if below % 2 == 0 { 1 } else { -1 };
    Some((sign, mask | bit))
}

/// Parity sign for concatenating two increasing index tuples given as
/// bitmasks; `None` when they overlap.
fn merge_sign(a: u8, b: u8) -> Option<(i64, u8)> {
    if a & b != 0 {
        return None;
    }
    let mut sign = 1i64;
    for i in 0..NVARS {
        if b & (1 << i) != 0 {
            // dz_i from `b` must move past every higher-index factor of `a`.
            let above = (a >> (i + 1)).count_ones();
            if above % 2 == 1 {
                sign = -sign;
            }
        }
    }
    Some((sign, a | b))
}

impl PForm {
    pub fn zero(form_degree: u8) -> Self {
        assert!(form_degree <= 4);
        PForm {
            form_degree,
            coefficients: BTreeMap::new(),
        }
    }

    /// A 0-form from a polynomial.
    pub fn scalar(p: Poly) -> Self {
        let mut f = PForm::zero(0);
        f.add_coeff(0, p);
        f
    }

    /// The basis 1-form `dz_i`.
    pub fn dz(i: usize) -> Self {
        assert!(i < NVARS);
        let mut f = PForm::zero(1);
        f.add_coeff(1 << i, Poly::one());
        f
    }

    /// A 1-form `Σ A_i dz_i` from its four coefficients.
    pub fn one_form(coeffs: [Poly; NVARS]) -> Self {
        let mut f = PForm::zero(1);
        for (i, c) in coeffs.into_iter().enumerate() {
            f.add_coeff(1 << i, c);
        }
        f
    }

    /// The standard volume form `dz0 ∧ dz1 ∧ dz2 ∧ dz3`.
    pub fn volume() -> Self {
        let mut f = PForm::zero(4);
        f.add_coeff(0b1111, Poly::one());
        f
    }

    pub fn form_degree(&self) -> u8 {
        self.form_degree
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Coefficient on the increasing tuple encoded by `mask`.
    pub fn coefficient(&self, mask: u8) -> Poly {
        self.coefficients.get(&mask).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (u8, &Poly)> {
        self.coefficients.iter().map(|(m, p)| (*m, p))
    }

    fn add_coeff(&mut self, mask: u8, p: Poly) {
        debug_assert_eq!(mask.count_ones() as u8, self.form_degree);
        if p.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coefficients.entry(mask) {
            Entry::Vacant(e) => {
                e.insert(p);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &p;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &PForm) -> PForm {
        assert_eq!(self.form_degree, other.form_degree);
        let mut out = self.clone();
        for (m, p) in &other.coefficients {
            out.add_coeff(*m, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &PForm) -> PForm {
        assert_eq!(self.form_degree, other.form_degree);
        let mut out = self.clone();
        for (m, p) in &other.coefficients {
            out.add_coeff(*m, -p);
        }
        out
    }

    pub fn scale_poly(&self, p: &Poly) -> PForm {
        let mut out = PForm::zero(self.form_degree);
        for (m, c) in &self.coefficients {
            out.add_coeff(*m, c * p);
        }
        out
    }

    pub fn neg(&self) -> PForm {
        self.scale_poly(&Poly::int(-1))
    }

    /// `Some(w)` iff nonzero and every coefficient on a p-tuple is
    /// homogeneous of degree `w - p` (projective weight).
    pub fn projective_weight(&self) -> Option<u32> {
        let mut weight = None;
        for p in self.coefficients.values() {
            let w = p.homogeneous_degree()? + self.form_degree as u32;
            match weight {
                None => weight = Some(w),
                Some(prev) if prev != w => return None,
                Some(_) => {}
            }
        }
        weight
    }
}

/// Graded-antisymmetric exterior product. Degrees summing past 4 give the
/// zero 4-form.
pub fn wedge(a: &PForm, b: &PForm) -> PForm {
    let deg = a.form_degree + b.form_degree;
    if deg > 4 {
        return PForm::zero(4);
    }
    let mut out = PForm::zero(deg);
    for (ma, pa) in &a.coefficients {
        for (mb, pb) in &b.coefficients {
            if let Some((sign, m)) = merge_sign(*ma, *mb) {
                out.add_coeff(m, (pa * pb).scale(&rat_int(sign)));
            }
        }
    }
    out
}

/// Exterior derivative; raises the form degree by one and satisfies
/// d∘d = 0.
pub fn exterior_derivative(a: &PForm) -> PForm {
    if a.form_degree == 4 {
        // Nothing above top degree; callers never need this, but keep the
        // uniform convention d(top) = 0 represented as a zero 4-form.
        return PForm::zero(4);
    }
    let mut out = PForm::zero(a.form_degree + 1);
    for (m, p) in &a.coefficients {
        for i in 0..NVARS {
            let dp = p.diff(i);
            if dp.is_zero() {
                continue;
            }
            if let Some((sign, m2)) = insert_sign(*m, i) {
                out.add_coeff(m2, dp.scale(&rat_int(sign)));
            }
        }
    }
    out
}

/// Interior product with the radial field `R = Σ z_i ∂/∂z_i`; lowers the
/// form degree by one and satisfies i_R∘i_R = 0.
pub fn contract_radial(a: &PForm) -> PForm {
    if a.form_degree == 0 {
        return PForm::zero(0);
    }
    let mut out = PForm::zero(a.form_degree - 1);
    for (m, p) in &a.coefficients {
        let mut sign = 1i64;
        for i in 0..NVARS {
            let bit = 1u8 << i;
            if m & bit == 0 {
                continue;
            }
            out.add_coeff(m & !bit, (p * &Poly::var(i)).scale(&rat_int(sign)));
            sign = -sign;
        }
    }
    out
}

/// A validated twisted 1-form `ω = Σ A_i dz_i` defining a codimension-one
/// distribution of degree `d`: coefficients homogeneous of degree `d + 1`
/// and annihilated by the radial field.
#[derive(Clone, Debug)]
pub struct DistributionForm {
    omega: PForm,
    degree: u32,
}

impl DistributionForm {
    pub fn omega(&self) -> &PForm {
        &self.omega
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficient(&self, i: usize) -> Poly {
        self.omega.coefficient(1 << i)
    }

    pub fn coefficients(&self) -> [Poly; NVARS] {
        std::array::from_fn(|i| self.coefficient(i))
    }
}

/// Validate four coefficient polynomials as a distribution form.
pub fn make_distribution_form(coeffs: [Poly; NVARS]) -> Result<DistributionForm, FormError> {
    let mut common: Option<(usize, u32)> = None;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let deg = c
            .homogeneous_degree()
            .ok_or(FormError::NotHomogeneous { index: i })?;
        match common {
            None => common = Some((i, deg)),
            Some((j, prev)) if prev != deg => {
                return Err(FormError::MixedDegrees {
                    first_index: j,
                    first_degree: prev,
                    second_index: i,
                    second_degree: deg,
                })
            }
            Some(_) => {}
        }
    }
    let (_, coeff_degree) = common.ok_or(FormError::ZeroForm)?;
    if coeff_degree == 0 {
        // Degree -1 twists do not occur; a constant 1-form cannot satisfy
        // the Euler condition anyway, but report it structurally.
        let contraction = contract_radial(&PForm::one_form(coeffs)).coefficient(0);
        return Err(FormError::EulerConditionViolated { contraction });
    }
    let omega = PForm::one_form(coeffs);
    let contraction = contract_radial(&omega).coefficient(0);
    if !contraction.is_zero() {
        return Err(FormError::EulerConditionViolated { contraction });
    }
    Ok(DistributionForm {
        omega,
        degree: coeff_degree - 1,
    })
}

/// Build a distribution form from an antisymmetric matrix of homogeneous
/// degree-`d` polynomials via `A = B·z`; the radial contraction vanishes
/// identically because `zᵀBz = 0`.
pub fn form_from_antisym(b: &[[Poly; NVARS]; NVARS]) -> Result<DistributionForm, FormError> {
    for i in 0..NVARS {
        for j in i..NVARS {
            if !(&b[i][j] + &b[j][i]).is_zero() {
                return Err(FormError::NotAntisymmetric { row: i, col: j });
            }
        }
    }
    let coeffs: [Poly; NVARS] = std::array::from_fn(|i| {
        let mut acc = Poly::zero();
        for j in 0..NVARS {
            acc = &acc + &(&b[i][j] * &Poly::var(j));
        }
        acc
    });
    match make_distribution_form(coeffs) {
        Ok(f) => Ok(f),
        Err(FormError::EulerConditionViolated { .. }) => unreachable!(
            "antisymmetric contraction must vanish"
        ),
        Err(e) => Err(e),
    }
}

/// The 3-form `ω ∧ dω`; zero exactly when the distribution is integrable.
pub fn integrability_defect(f: &DistributionForm) -> PForm {
    wedge(&f.omega, &exterior_derivative(&f.omega))
}

/// The Martinet polynomial: the exact quotient of `ω ∧ dω` by the
/// contracted volume form `i_R(dz0∧dz1∧dz2∧dz3)`, homogeneous of degree
/// `2d` when nonzero (and zero iff integrable). No rescaling is applied.
pub fn martinet_polynomial(f: &DistributionForm) -> Result<Poly, FormError> {
    let defect = integrability_defect(f);
    if defect.is_zero() {
        return Ok(Poly::zero());
    }
    let reference = contract_radial(&PForm::volume());
    let mut quotient: Option<Poly> = None;
    for k in 0..NVARS {
        let mask = 0b1111u8 & !(1 << k);
        let denom = reference.coefficient(mask);
        let numer = defect.coefficient(mask);
        if numer.is_zero() {
            continue;
        }
        let q = numer
            .exact_div(&denom)
            .map_err(|_| FormError::MartinetDivisionFailed { index: k })?;
        match &quotient {
            None => quotient = Some(q),
            Some(prev) if *prev != q => {
                return Err(FormError::MartinetDivisionFailed { index: k })
            }
            Some(_) => {}
        }
    }
    // The defect being nonzero but with no consistent quotient cannot
    // happen when i_R(ω∧dω) = 0; guard anyway.
    quotient.ok_or(FormError::MartinetDivisionFailed { index: 0 })
}

impl fmt::Display for PForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, p) in &self.coefficients {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", p)?;
            for i in 0..NVARS {
                if m & (1 << i) != 0 {
                    write!(f, " dz{}", i)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn z(i: usize) -> Poly {
        Poly::var(i)
    }

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn wedge_basics() {
        let d01 = wedge(&PForm::dz(0), &PForm::dz(1));
        assert_eq!(d01.coefficient(0b0011), Poly::one());
        // Antisymmetry on a 1-form.
        let omega = PForm::one_form([z(1), -&z(0), z(3), -&z(2)]);
        assert!(wedge(&omega, &omega).is_zero());
        // (z0 dz1) ∧ (z1 dz0) = -z0*z1 dz0∧dz1.
        let a = PForm::one_form([Poly::zero(), z(0), Poly::zero(), Poly::zero()]);
        let b = PForm::one_form([z(1), Poly::zero(), Poly::zero(), Poly::zero()]);
        assert_eq!(wedge(&a, &b).coefficient(0b0011), -&(&z(0) * &z(1)));
    }

    #[test]
    fn exterior_derivative_basics() {
        let a = PForm::one_form([Poly::zero(), z(0), Poly::zero(), Poly::zero()]);
        let da = exterior_derivative(&a);
        assert_eq!(da.coefficient(0b0011), Poly::one());
        assert!(exterior_derivative(&PForm::dz(2)).is_zero());
        let df = exterior_derivative(&PForm::scalar(&z(0) * &z(1)));
        assert_eq!(df.coefficient(0b0001), z(1));
        assert_eq!(df.coefficient(0b0010), z(0));
        // d∘d = 0 on a scalar.
        assert!(exterior_derivative(&df).is_zero());
    }

    #[test]
    fn radial_contraction_of_volume() {
        let c = contract_radial(&PForm::volume());
        assert_eq!(c.coefficient(0b1110), z(0));
        assert_eq!(c.coefficient(0b1101), -&z(1));
        assert_eq!(c.coefficient(0b1011), z(2));
        assert_eq!(c.coefficient(0b0111), -&z(3));
        assert!(contract_radial(&contract_radial(&c)).is_zero());
    }

    #[test]
    fn validation_accepts_and_rejects() {
        // Constant antisymmetric pairing: degree 0.
        let f = make_distribution_form([z(1), -&z(0), z(3), -&z(2)]).unwrap();
        assert_eq!(f.degree(), 0);

        // Degree-1 example with quadratic coefficients.
        let f = make_distribution_form([
            p("-(z3*z0 + z2*z1)"),
            p("z2*z0 - z3*z1"),
            p("-(z3*z2)"),
            p("z0^2 + z1^2 + z2^2"),
        ])
        .unwrap();
        assert_eq!(f.degree(), 1);

        assert!(matches!(
            make_distribution_form([z(0), Poly::zero(), Poly::zero(), Poly::zero()]),
            Err(FormError::EulerConditionViolated { contraction }) if contraction == z(0).pow(2)
        ));
        assert!(matches!(
            make_distribution_form(std::array::from_fn(|_| Poly::zero())),
            Err(FormError::ZeroForm)
        ));
        assert!(matches!(
            make_distribution_form([z(1), -&z(0), &z(3) * &z(3), Poly::zero()]),
            Err(FormError::MixedDegrees { .. })
        ));
        assert!(matches!(
            make_distribution_form([&z(1) + &Poly::one(), -&z(0), Poly::zero(), Poly::zero()]),
            Err(FormError::NotHomogeneous { index: 0 })
        ));
    }

    #[test]
    fn antisym_matrix_gives_valid_form() {
        let mut b: [[Poly; 4]; 4] = Default::default();
        b[0][1] = Poly::one();
        b[1][0] = Poly::int(-1);
        b[2][3] = Poly::one();
        b[3][2] = Poly::int(-1);
        let f = form_from_antisym(&b).unwrap();
        assert_eq!(f.coefficients(), [z(1), -&z(0), z(3), -&z(2)]);
        assert_eq!(f.degree(), 0);

        let mut bad = b.clone();
        bad[1][0] = Poly::one();
        assert!(matches!(
            form_from_antisym(&bad),
            Err(FormError::NotAntisymmetric { row: 0, col: 1 })
        ));
        assert!(matches!(
            form_from_antisym(&Default::default()),
            Err(FormError::ZeroForm)
        ));
    }

    #[test]
    fn integrable_examples_have_zero_defect() {
        // Generic degree-1 integrable form.
        let f = make_distribution_form([
            -&(&z(3) * &z(0)),
            -&(&z(3) * &z(1)),
            -&(&z(3) * &z(2)),
            p("z0^2 + z1^2 + z2^2"),
        ])
        .unwrap();
        assert!(integrability_defect(&f).is_zero());
        assert_eq!(martinet_polynomial(&f).unwrap(), Poly::zero());
    }

    #[test]
    fn perturbed_form_has_martinet_surface() {
        // Integrable form plus z3(z0 dz1 - z1 dz0): Martinet polynomial
        // 2*z2*z3.
        let f = make_distribution_form([
            &-&(&z(3) * &z(0)) - &(&z(3) * &z(1)),
            &-&(&z(3) * &z(1)) + &(&z(3) * &z(0)),
            -&(&z(3) * &z(2)),
            p("z0^2 + z1^2 + z2^2"),
        ])
        .unwrap();
        let defect = integrability_defect(&f);
        assert!(!defect.is_zero());
        // i_R of the defect vanishes, so division works.
        assert!(contract_radial(&defect).is_zero());
        let fm = martinet_polynomial(&f).unwrap();
        assert_eq!(fm, (&z(2) * &z(3)).scale(&rat_int(2)));
        assert_eq!(fm.homogeneous_degree(), Some(2));
    }

    #[test]
    fn degree_zero_martinet_is_constant() {
        let f = make_distribution_form([z(1), -&z(0), z(3), -&z(2)]).unwrap();
        let fm = martinet_polynomial(&f).unwrap();
        assert!(fm.is_constant() && !fm.is_zero());
    }
}
