use std::cmp::Ordering;
use std::fmt;

/// Number of projective coordinate variables (`z0..z3`).
pub const NVARS: usize = 4;

/// Internal slot for the auxiliary elimination variable used by ideal
/// quotients and intersections. Ordinary polynomials never touch it.
pub(crate) const AUX: usize = 4;

const NSLOTS: usize = 5;

/// A power product in `z0..z3` (plus the hidden elimination variable).
///
/// Exponents are stored as a fixed array; the total degree is always the
/// sum of the entries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub(crate) [u32; NSLOTS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NSLOTS])
    }

    /// The monomial `z_i`, `i < 4`.
    pub fn var(i: usize) -> Self {
        assert!(i < NVARS, "variable index out of range");
        let mut e = [0; NSLOTS];
        e[i] = 1;
        Monomial(e)
    }

    pub(crate) fn aux_var() -> Self {
        let mut e = [0; NSLOTS];
        e[AUX] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: [u32; NVARS]) -> Self {
        Monomial([exps[0], exps[1], exps[2], exps[3], 0])
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Total degree, auxiliary variable included.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub(crate) fn aux_degree(&self) -> u32 {
        self.0[AUX]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial(e)
    }

    /// `self / other`, when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(e))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        Monomial(e)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn diff(&self, i: usize) -> Option<(u32, Monomial)> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0;
        e[i] -= 1;
        Some((self.0[i], Monomial(e)))
    }
}

/// Monomial orders used by the ideal-theory engine.
///
/// `DegRevLex` is graded reverse lexicographic with `z0 > z1 > z2 > z3`;
/// it is also the canonical order for printing. `ElimAux` is the block
/// order that puts the auxiliary variable in front, used to intersect
/// with the coordinate subring.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    DegRevLex,
    ElimAux,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::ElimAux => a
                .aux_degree()
                .cmp(&b.aux_degree())
                .then_with(|| degrevlex(a, b)),
        }
    }
}

fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Reverse lexicographic tie-break: scanning from the least significant
    // variable, the monomial with the smaller exponent at the first
    // difference is the larger one.
    for i in (0..NSLOTS).rev() {
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

// Canonical ordering (degrevlex) so that BTreeMap iteration is ascending
// and the leading monomial is the last entry.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..NSLOTS {
            if self.0[i] == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if i < NVARS {
                write!(f, "z{}", i)?;
            } else {
                write!(f, "t")?;
            }
            if self.0[i] > 1 {
                write!(f, "^{}", self.0[i])?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: [u32; 4]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_grades_first() {
        assert!(m([2, 0, 0, 0]) > m([0, 0, 0, 1]));
        assert!(m([0, 0, 0, 2]) > m([1, 0, 0, 0]));
    }

    #[test]
    fn degrevlex_tie_break() {
        // Same degree: z0^2 > z0*z1 > z1^2 > z0*z2 > ...
        assert!(m([2, 0, 0, 0]) > m([1, 1, 0, 0]));
        assert!(m([1, 1, 0, 0]) > m([0, 2, 0, 0]));
        assert!(m([0, 2, 0, 0]) > m([1, 0, 1, 0]));
        // z0*z3 > z1*z3 but both are below anything free of z3.
        assert!(m([1, 0, 0, 1]) > m([0, 1, 0, 1]));
        assert!(m([0, 0, 2, 0]) > m([1, 0, 0, 1]));
    }

    #[test]
    fn elimination_order_puts_aux_first() {
        let t = Monomial::aux_var();
        let z0_cubed = m([3, 0, 0, 0]);
        assert_eq!(MonomialOrder::ElimAux.cmp(&t, &z0_cubed), Ordering::Greater);
        assert_eq!(
            MonomialOrder::DegRevLex.cmp(&t, &z0_cubed),
            Ordering::Less
        );
    }

    #[test]
    fn lcm_and_divisibility() {
        let a = m([2, 1, 0, 0]);
        let b = m([1, 0, 3, 0]);
        assert_eq!(a.lcm(&b), m([2, 1, 3, 0]));
        assert!(m([1, 0, 0, 0]).divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(a.checked_div(&m([1, 1, 0, 0])), Some(m([1, 0, 0, 0])));
        assert!(a.coprime(&m([0, 0, 1, 1])));
        assert!(!a.coprime(&b));
    }
}
