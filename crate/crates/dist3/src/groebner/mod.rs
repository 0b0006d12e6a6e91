//! Exact ideal theory for homogeneous ideals in `z0..z3`: Buchberger's
//! algorithm with the classical pair criteria, reduced bases, normal
//! forms, ideal quotient, saturation, and intersections via a single
//! auxiliary elimination variable.

mod hilbert;

pub use hilbert::{
    hilbert_function_oracle, hilbert_polynomial, hilbert_series_numerator, hp_at, oracle_value,
    HilbertData, HilbertError,
};

use std::collections::HashSet;

use num::{One, Zero};

use crate::poly::{Monomial, MonomialOrder, Poly, Rational};

/// A homogeneous ideal, held by its generators. Zero generators are
/// dropped on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    generators: Vec<Poly>,
}

impl Ideal {
    /// Build an ideal from homogeneous generators; panics on a
    /// non-homogeneous generator (callers validate their inputs first).
    pub fn new(generators: impl IntoIterator<Item = Poly>) -> Self {
        let generators: Vec<Poly> = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .collect();
        for g in &generators {
            assert!(
                g.homogeneous_degree().is_some(),
                "ideal generator is not homogeneous: {g}"
            );
        }
        Ideal { generators }
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }
}

/// A reduced Gröbner basis: every element monic, no term of any element
/// divisible by the leading term of another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    basis: Vec<Poly>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|p| p.is_constant() && !p.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|p| *p.leading_term(self.order).unwrap().0)
            .collect()
    }

    pub fn contains(&self, p: &Poly) -> bool {
        normal_form(p, self).is_zero()
    }
}

/// Internal working representation: terms sorted descending in a fixed
/// order, so the leading term is first. Kept monic during Buchberger.
#[derive(Clone, Debug)]
struct OrdPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl OrdPoly {
    fn from_poly(p: &Poly, order: MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().map(|(m, c)| (*m, c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        OrdPoly { terms }
    }

    fn to_poly(&self) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, c.clone())))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> &(Monomial, Rational) {
        &self.terms[0]
    }

    fn monic(mut self) -> Self {
        if let Some((_, lc)) = self.terms.first() {
            let inv = lc.recip();
            if !inv.is_one() {
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
        self
    }

    /// `self - coeff * x^shift * other`, merging sorted term lists.
    fn sub_scaled(
        &self,
        other: &OrdPoly,
        shift: &Monomial,
        coeff: &Rational,
        order: MonomialOrder,
    ) -> OrdPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let mb = other.terms[j].0.mul(shift);
            match order.cmp(ma, &mb) {
                std::cmp::Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mb, -(&other.terms[j].1 * coeff)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca - &(&other.terms[j].1 * coeff);
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for (m, c) in &self.terms[i..] {
            out.push((*m, c.clone()));
        }
        for (m, c) in &other.terms[j..] {
            out.push((m.mul(shift), -(c * coeff)));
        }
        OrdPoly { terms: out }
    }
}

/// Full multivariate reduction of `p` by `basis`: every term of the
/// result is free of all basis leading terms.
fn reduce(p: &OrdPoly, basis: &[OrdPoly], order: MonomialOrder) -> OrdPoly {
    let mut work = p.clone();
    let mut idx = 0;
    'outer: while idx < work.terms.len() {
        let (m, c) = work.terms[idx].clone();
        for g in basis {
            let (gm, gc) = g.leading();
            if let Some(shift) = m.checked_div(gm) {
                let coeff = &c / gc;
                // Cancels the term at `idx`; only strictly smaller terms
                // can change, so the prefix stays reduced.
                work = work.sub_scaled(g, &shift, &coeff, order);
                continue 'outer;
            }
        }
        idx += 1;
    }
    work
}

fn s_poly(f: &OrdPoly, g: &OrdPoly, order: MonomialOrder) -> OrdPoly {
    let (fm, fc) = f.leading();
    let (gm, gc) = g.leading();
    let lcm = fm.lcm(gm);
    let fshift = lcm.checked_div(fm).unwrap();
    let gshift = lcm.checked_div(gm).unwrap();
    // (lcm/LT f)·f/lc(f) − (lcm/LT g)·g/lc(g)
    let lhs = OrdPoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&fshift), c / fc))
            .collect(),
    };
    lhs.sub_scaled(g, &gshift, &gc.recip(), order)
}

/// Buchberger's algorithm with the product and chain criteria and the
/// normal selection strategy (lowest lcm degree, then first created).
/// The result is the canonical reduced basis, sorted ascending by
/// leading monomial.
pub fn groebner_of(polys: &[Poly], order: MonomialOrder) -> GroebnerBasis {
    let mut basis: Vec<OrdPoly> = Vec::new();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let op = OrdPoly::from_poly(p, order).monic();
        basis.push(op);
    }

    // Pending S-pairs keyed by (lcm degree, creation sequence).
    let mut pairs: Vec<(u32, usize, usize, usize)> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut seq = 0usize;
    let mut add_pairs = |basis: &[OrdPoly],
                         new_idx: usize,
                         pairs: &mut Vec<(u32, usize, usize, usize)>,
                         pending: &mut HashSet<(usize, usize)>| {
        for i in 0..new_idx {
            let lcm = basis[i].leading().0.lcm(&basis[new_idx].leading().0);
            pairs.push((lcm.degree(), seq, i, new_idx));
            pending.insert((i, new_idx));
            seq += 1;
        }
    };
    for k in 0..basis.len() {
        add_pairs(&basis, k, &mut pairs, &mut pending);
    }

    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(deg, sq, _, _))| (deg, sq))
            .map(|(idx, _)| idx)
            .unwrap();
        let (_, _, i, j) = pairs.swap_remove(best);
        pending.remove(&(i, j));

        let (mi, _) = basis[i].leading();
        let (mj, _) = basis[j].leading();
        // Product criterion: coprime leading terms reduce to zero.
        if mi.coprime(mj) {
            continue;
        }
        // Chain criterion: a third element dividing the lcm whose own
        // pairs with i and j are already settled makes this pair
        // redundant.
        let lcm = mi.lcm(mj);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading().0.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        let s = s_poly(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic());
        let new_idx = basis.len() - 1;
        add_pairs(&basis, new_idx, &mut pairs, &mut pending);
    }

    // Minimalize: drop elements whose leading term is divisible by the
    // leading term of another kept element.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mi, _) = basis[i].leading();
            let (mj, _) = basis[j].leading();
            if mj.divides(mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<OrdPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();

    // Inter-reduce the tails for the canonical reduced basis.
    let mut reduced: Vec<OrdPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<OrdPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, p)| (j != i).then(|| p.clone()))
            .collect();
        reduced.push(reduce(&minimal[i], &others, order).monic());
    }

    reduced.sort_by(|a, b| order.cmp(&a.leading().0, &b.leading().0));
    GroebnerBasis {
        basis: reduced.iter().map(OrdPoly::to_poly).collect(),
        order,
    }
}

pub fn groebner(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    groebner_of(ideal.generators(), order)
}

/// Full normal form of `p` modulo the basis; zero iff `p` lies in the
/// ideal, and idempotent.
pub fn normal_form(p: &Poly, gb: &GroebnerBasis) -> Poly {
    let order = gb.order;
    let basis: Vec<OrdPoly> = gb
        .basis
        .iter()
        .map(|g| OrdPoly::from_poly(g, order))
        .collect();
    reduce(&OrdPoly::from_poly(p, order), &basis, order).to_poly()
}

/// Intersection of two ideals via the auxiliary variable: eliminate `t`
/// from `t·I + (1−t)·J`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Ideal {
    let t = Poly::aux_var();
    let one_minus_t = &Poly::one() - &t;
    let mut gens: Vec<Poly> = Vec::new();
    for g in a.generators() {
        gens.push(&t * g);
    }
    for g in b.generators() {
        gens.push(&one_minus_t * g);
    }
    let gb = groebner_of(&gens, MonomialOrder::ElimAux);
    Ideal::new(
        gb.basis
            .iter()
            .filter(|p| !p.uses_aux())
            .cloned()
            .collect::<Vec<_>>(),
    )
}

/// The ideal quotient `(I : f)`, computed as `(I ∩ (f)) / f`.
pub fn ideal_quotient(ideal: &Ideal, f: &Poly) -> Ideal {
    assert!(!f.is_zero(), "quotient by the zero polynomial");
    if f.is_constant() {
        return reduced_generators(ideal);
    }
    if ideal.is_zero() {
        return Ideal::new(Vec::new());
    }
    let inter = intersect(ideal, &Ideal::new([f.clone()]));
    Ideal::new(
        inter
            .generators()
            .iter()
            .map(|g| {
                g.exact_div(f)
                    .expect("members of I ∩ (f) are divisible by f")
            })
            .collect::<Vec<_>>(),
    )
}

/// Replace the generators by the canonical reduced degrevlex basis.
pub fn reduced_generators(ideal: &Ideal) -> Ideal {
    Ideal::new(groebner(ideal, MonomialOrder::DegRevLex).basis.to_vec())
}

/// The saturation `(I : f^∞)`: iterate the quotient until the reduced
/// basis stabilizes.
pub fn saturate(ideal: &Ideal, f: &Poly) -> Ideal {
    assert!(!f.is_zero(), "saturation by the zero polynomial");
    let mut current = reduced_generators(ideal);
    if f.is_constant() {
        return current;
    }
    loop {
        let next = reduced_generators(&ideal_quotient(&current, f));
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Saturation with respect to the irrelevant ideal `(z0,…,z3)`, as the
/// intersection of the four coordinate saturations.
pub fn saturate_irrelevant(ideal: &Ideal) -> Ideal {
    let mut acc: Option<Ideal> = None;
    for i in 0..4 {
        let s = saturate(ideal, &Poly::var(i));
        acc = Some(match acc {
            None => s,
            Some(prev) => intersect(&prev, &s),
        });
    }
    reduced_generators(&acc.unwrap())
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

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(gens.iter().map(|s| p(s)).collect::<Vec<_>>())
    }

    fn twisted_cubic() -> Ideal {
        ideal(&["z0*z2 - z1^2", "z1*z3 - z2^2", "z0*z3 - z1*z2"])
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let gb = groebner(&ideal(&["z0", "z1"]), MonomialOrder::DegRevLex);
        assert_eq!(gb.basis(), &[z(1), z(0)]);
    }

    #[test]
    fn single_generator_becomes_monic() {
        let gb = groebner(&ideal(&["3*z0^2 - 3*z1*z2"]), MonomialOrder::DegRevLex);
        assert_eq!(gb.basis(), &[p("z0^2 - z1*z2")]);
    }

    #[test]
    fn twisted_cubic_membership() {
        let gb = groebner(&twisted_cubic(), MonomialOrder::DegRevLex);
        assert!(gb.contains(&p("z0*z3^2 - z1*z2*z3")));
        assert!(gb.contains(&p("z1^2 - z0*z2")));
        assert!(!gb.contains(&p("z1^2")));
        // Buchberger postconditions: inputs reduce to zero.
        for g in twisted_cubic().generators() {
            assert!(normal_form(g, &gb).is_zero());
        }
    }

    #[test]
    fn normal_form_is_idempotent() {
        let gb = groebner(&twisted_cubic(), MonomialOrder::DegRevLex);
        for s in ["z0*z3^2 + z1^3", "z2^4", "z0 + z1 + z2 + z3"] {
            let r = normal_form(&p(s), &gb);
            assert_eq!(normal_form(&r, &gb), r);
        }
        let gb01 = groebner(&ideal(&["z0", "z1"]), MonomialOrder::DegRevLex);
        assert!(normal_form(&z(0), &gb01).is_zero());
        assert_eq!(normal_form(&z(2), &gb01), z(2));
    }

    #[test]
    fn quotient_examples() {
        let q = ideal_quotient(&ideal(&["z0^2"]), &z(0));
        assert_eq!(reduced_generators(&q).generators(), &[z(0)]);

        let q = ideal_quotient(&ideal(&["z0*z1", "z0*z2"]), &z(0));
        assert_eq!(reduced_generators(&q).generators(), &[z(2), z(1)]);

        let q = ideal_quotient(&ideal(&["z0"]), &z(1));
        assert_eq!(reduced_generators(&q).generators(), &[z(0)]);
    }

    #[test]
    fn saturation_examples() {
        let s = saturate(&ideal(&["z0^2", "z0*z1"]), &z(1));
        assert_eq!(s.generators(), &[z(0)]);

        let s = saturate(&ideal(&["z0", "z1"]), &z(2));
        assert_eq!(s.generators(), &[z(1), z(0)]);

        let i = ideal(&["z0*z2 - z1^2"]);
        assert_eq!(saturate(&i, &Poly::one()), reduced_generators(&i));
    }

    #[test]
    fn irrelevant_saturation() {
        // The square of the irrelevant ideal saturates to the unit ideal.
        let sq = ideal(&[
            "z0^2", "z0*z1", "z0*z2", "z0*z3", "z1^2", "z1*z2", "z1*z3", "z2^2", "z2*z3",
            "z3^2",
        ]);
        let s = saturate_irrelevant(&sq);
        assert_eq!(s.generators(), &[Poly::one()]);

        let s = saturate_irrelevant(&ideal(&["z0^2", "z0*z1", "z0*z2", "z0*z3"]));
        assert_eq!(s.generators(), &[z(0)]);

        // The twisted cubic ideal is already saturated.
        let tc = twisted_cubic();
        let s = saturate_irrelevant(&tc);
        assert_eq!(s, reduced_generators(&tc));
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let a = ideal(&["z0"]);
        let b = ideal(&["z1"]);
        let i = intersect(&a, &b);
        assert_eq!(reduced_generators(&i).generators(), &[&z(0) * &z(1)]);
    }
}
