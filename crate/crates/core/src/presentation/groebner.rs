//! Buchberger's criterion for sets of monic binomials and monomials.
//!
//! Every generator has leading coefficient `±1`, so reduction never divides
//! and integer coefficients stay exact.

use super::{TermOrder, ZMonomial};

/// Sparse polynomial, terms sorted descending in the ambient order,
/// no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Poly {
    pub terms: Vec<(ZMonomial, i64)>,
}

impl Poly {
    pub fn new(mut terms: Vec<(ZMonomial, i64)>, order: TermOrder) -> Poly {
        terms.sort_by(|x, y| order.cmp(&y.0, &x.0));
        let mut merged: Vec<(ZMonomial, i64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| *c != 0);
        Poly { terms: merged }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &ZMonomial {
        &self.terms[0].0
    }

    fn lead_coeff(&self) -> i64 {
        self.terms[0].1
    }

    fn shifted(&self, by: &ZMonomial, coeff: i64) -> Vec<(ZMonomial, i64)> {
        self.terms.iter().map(|(m, c)| (m.mul(by), c * coeff)).collect()
    }
}

pub(crate) fn s_polynomial(f: &Poly, g: &Poly, order: TermOrder) -> Poly {
    let lcm = f.lead().lcm(g.lead());
    let mf = lcm.div(f.lead()).expect("lcm is divisible by the lead");
    let mg = lcm.div(g.lead()).expect("lcm is divisible by the lead");
    let mut terms = f.shifted(&mf, g.lead_coeff());
    terms.extend(g.shifted(&mg, -f.lead_coeff()));
    Poly::new(terms, order)
}

/// Top-reduce `p` by `basis` until it vanishes or its leading term is
/// divisible by no leading term of the basis.
pub(crate) fn top_reduce(mut p: Poly, basis: &[Poly], order: TermOrder) -> Poly {
    while !p.is_zero() {
        let (lt, c) = p.terms[0].clone();
        let Some(g) = basis.iter().find(|g| g.lead().divides(&lt)) else {
            return p;
        };
        let q = lt.div(g.lead()).expect("checked divisibility");
        let mut terms = p.terms;
        // lead_coeff is ±1, its own inverse
        terms.extend(g.shifted(&q, -c * g.lead_coeff()));
        p = Poly::new(terms, order);
    }
    p
}

/// Whether every S-polynomial of the basis reduces to zero.
pub(crate) fn is_groebner_basis(basis: &[Poly], order: TermOrder) -> bool {
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            // coprime leading terms: S-polynomial reduces to zero
            if f.lead().is_coprime(g.lead()) {
                continue;
            }
            let s = s_polynomial(f, g, order);
            if !top_reduce(s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}
