//! Defining ideal of the fiber cone `F(I) = K[z_1, ..., z_m] / L` for
//! concave and convex ideals.
//!
//! `L` is generated by the 2-minors of one `2 x w` matrix per line segment
//! together with the quadratic monomials `z_i z_j` whose images lie in
//! `𝔪 I^2`. Concave ideals use reverse lexicographic order, convex ones
//! lexicographic order, both with `z_1 > ... > z_m`. The construction is
//! self-checked: every binomial is an exact relation, every monomial passes
//! the membership test, the generators form a Gröbner basis, and the
//! initial ideal has the expected shape.

mod groebner;
mod hilbert;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modp;
use crate::monomial::{ExpVec, MonomialIdeal};
use crate::shape::classify_shape;

pub use hilbert::{fit_numerator, hilbert_data, series_from_numerator, HilbertData};

use groebner::{is_groebner_basis, Poly};

/// Monomial in `z_1, ..., z_m`; position `i - 1` holds the exponent of `z_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ZMonomial {
    pub exponents: Vec<u32>,
}

impl ZMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        ZMonomial { exponents }
    }

    /// `z_i z_j` in `m` variables, 1-based indices.
    pub fn quadratic(i: usize, j: usize, m: usize) -> Self {
        let mut e = vec![0; m];
        e[i - 1] += 1;
        e[j - 1] += 1;
        ZMonomial::new(e)
    }

    /// Monomial from `(index, exponent)` pairs, 1-based indices.
    pub fn from_powers(m: usize, powers: &[(usize, u32)]) -> Self {
        let mut e = vec![0; m];
        for &(i, k) in powers {
            e[i - 1] += k;
        }
        ZMonomial::new(e)
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn mul(&self, other: &ZMonomial) -> ZMonomial {
        ZMonomial::new(self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &ZMonomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &ZMonomial) -> Option<ZMonomial> {
        other.divides(self).then(|| {
            ZMonomial::new(self.exponents.iter().zip(&other.exponents).map(|(a, b)| a - b).collect())
        })
    }

    pub fn lcm(&self, other: &ZMonomial) -> ZMonomial {
        ZMonomial::new(self.exponents.iter().zip(&other.exponents).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &ZMonomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Image `∏ u_i^{e_i}` in `K[x, y]`.
    pub fn evaluate(&self, ideal: &MonomialIdeal) -> Result<ExpVec> {
        self.exponents
            .iter()
            .zip(ideal.gens())
            .try_fold(ExpVec::ONE, |acc, (&e, &u)| acc.mul(u.pow(e as u64)?))
    }
}

impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "z{}", i + 1)?,
                _ => write!(f, "z{}^{}", i + 1, e)?,
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    /// Degree reverse lexicographic, `z_1 > ... > z_m`.
    RevLex,
    /// Lexicographic, `z_1 > ... > z_m`.
    Lex,
}

impl TermOrder {
    pub fn cmp(self, x: &ZMonomial, y: &ZMonomial) -> Ordering {
        match self {
            TermOrder::Lex => x.exponents.cmp(&y.exponents),
            TermOrder::RevLex => x.degree().cmp(&y.degree()).then_with(|| {
                x.exponents
                    .iter()
                    .zip(&y.exponents)
                    .rev()
                    .find(|(a, b)| a != b)
                    .map_or(Ordering::Equal, |(a, b)| b.cmp(a))
            }),
        }
    }
}

/// `lead - trail` with `lead > trail` in the presentation's order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZBinomial {
    pub lead: ZMonomial,
    pub trail: ZMonomial,
}

impl fmt::Display for ZBinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.trail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationIdeal {
    pub m: usize,
    pub order: TermOrder,
    /// Segment-major, then `(r, s)` lexicographic.
    pub binomials: Vec<ZBinomial>,
    /// `z_i z_j` in increasing `(i, j)`.
    pub monomials: Vec<ZMonomial>,
}

impl PresentationIdeal {
    pub fn len(&self) -> usize {
        self.binomials.len() + self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// One relation per line: binomials first, then monomials.
    pub fn to_text(&self) -> String {
        self.binomials
            .iter()
            .map(ToString::to_string)
            .chain(self.monomials.iter().map(ToString::to_string))
            .collect::<Vec<_>>()
            .join("\n")
    }

    fn polys(&self) -> Vec<Poly> {
        self.binomials
            .iter()
            .map(|b| Poly::new(vec![(b.lead.clone(), 1), (b.trail.clone(), -1)], self.order))
            .chain(self.monomials.iter().map(|m| Poly::new(vec![(m.clone(), 1)], self.order)))
            .collect()
    }

    fn leading_terms(&self) -> Vec<ZMonomial> {
        let mut leads: Vec<ZMonomial> = self
            .binomials
            .iter()
            .map(|b| b.lead.clone())
            .chain(self.monomials.iter().cloned())
            .collect();
        sort_quadratics(&mut leads);
        leads.dedup();
        leads
    }
}

/// Increasing `(i, j)` for quadratic monomials.
fn sort_quadratics(v: &mut [ZMonomial]) {
    v.sort_by(|a, b| b.cmp(a));
}

/// `u_i u_j ∈ 𝔪 I^2`, i.e. `c_i + c_j > c_r + c_s` for some `r, s`.
pub fn relation_membership_test(ideal: &MonomialIdeal, i: usize, j: usize) -> Result<bool> {
    let m = ideal.mu();
    if !(1 <= i && i <= j && j <= m) {
        return Err(Error::IndexError(format!("need 1 <= i <= j <= {m}, got ({i}, {j})")));
    }
    let u = ideal.gens()[i - 1].mul(ideal.gens()[j - 1])?;
    ideal.member_of_m_times_power(2, u)
}

/// Generators of the defining ideal of `F(I)` for a normalized concave or
/// convex ideal.
pub fn build_presentation(ideal: &MonomialIdeal) -> Result<PresentationIdeal> {
    let report = classify_shape(ideal)?;
    let order = if report.is_concave {
        TermOrder::RevLex
    } else if report.is_convex {
        TermOrder::Lex
    } else {
        return Err(Error::NotApplicable("ideal is neither concave nor convex".into()));
    };
    let m = ideal.mu();
    let c = ideal.gens();

    let mut binomials = Vec::new();
    for &(start, end) in &report.segments {
        let width = end - start;
        for r in 1..width {
            for s in r + 1..=width {
                let t1 = ZMonomial::quadratic(start + r - 1, start + s, m);
                let t2 = ZMonomial::quadratic(start + s - 1, start + r, m);
                if t1.evaluate(ideal)? != t2.evaluate(ideal)? {
                    return Err(Error::InternalInconsistency(format!(
                        "minor {t1} - {t2} is not a relation: segment points are not equidistant"
                    )));
                }
                let (lead, trail) = match order.cmp(&t1, &t2) {
                    Ordering::Greater => (t1, t2),
                    _ => (t2, t1),
                };
                binomials.push(ZBinomial { lead, trail });
            }
        }
    }

    let binomial_leads: BTreeSet<&ZMonomial> = binomials.iter().map(|b| &b.lead).collect();
    let square = ideal.power(2)?;
    let mut monomials = Vec::new();
    for i in 1..=m {
        for j in i..=m {
            let candidate = match order {
                TermOrder::RevLex => 1 < i && j < m,
                TermOrder::Lex => i + 1 < j,
            };
            if !candidate {
                continue;
            }
            let z = ZMonomial::quadratic(i, j, m);
            if binomial_leads.contains(&z) {
                continue;
            }
            if !square.contains_in_maximal_times(c[i - 1].mul(c[j - 1])?) {
                return Err(Error::InternalInconsistency(format!(
                    "{z} should be a relation but u_{i} u_{j} is a minimal generator of I^2"
                )));
            }
            monomials.push(z);
        }
    }

    Ok(PresentationIdeal { m, order, binomials, monomials })
}

/// Every S-polynomial of the generators reduces to zero.
pub fn groebner_selfcheck(presentation: &PresentationIdeal) -> bool {
    is_groebner_basis(&presentation.polys(), presentation.order)
}

/// Initial ideal predicted for the presentation's order: `(z_2, ..., z_{m-1})^2`
/// in reverse lexicographic order, `(z_i z_j : i + 1 < j)` in lexicographic order.
pub fn predicted_initial_ideal(m: usize, order: TermOrder) -> Vec<ZMonomial> {
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i..=m {
            let keep = match order {
                TermOrder::RevLex => 1 < i && j < m,
                TermOrder::Lex => i + 1 < j,
            };
            if keep {
                out.push(ZMonomial::quadratic(i, j, m));
            }
        }
    }
    out
}

/// Leading terms of the verified Gröbner basis, checked against the
/// predicted initial ideal.
pub fn initial_ideal(presentation: &PresentationIdeal) -> Result<Vec<ZMonomial>> {
    if !groebner_selfcheck(presentation) {
        return Err(Error::InternalInconsistency(
            "presentation generators are not a Gröbner basis".into(),
        ));
    }
    let leads = presentation.leading_terms();
    if leads.len() != presentation.len() {
        return Err(Error::InternalInconsistency("two generators share a leading term".into()));
    }
    if leads != predicted_initial_ideal(presentation.m, presentation.order) {
        return Err(Error::InternalInconsistency(
            "initial ideal differs from the predicted quadratic monomial ideal".into(),
        ));
    }
    Ok(leads)
}

fn for_each_monomial(m: usize, k: u32, f: &mut impl FnMut(&[u32])) {
    fn go(pos: usize, left: u32, e: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if pos + 1 == e.len() {
            e[pos] = left;
            f(e);
            return;
        }
        for x in (0..=left).rev() {
            e[pos] = x;
            go(pos + 1, left - x, e, f);
        }
    }
    if m == 0 {
        return;
    }
    let mut e = vec![0; m];
    go(0, k, &mut e, f);
}

/// Number of degree-`k` monomials in `m` variables divisible by none of `gens`.
pub fn standard_monomial_count(gens: &[ZMonomial], m: usize, k: u32) -> u64 {
    let mut count = 0;
    for_each_monomial(m, k, &mut |e| {
        if !gens.iter().any(|g| g.exponents.iter().zip(e).all(|(a, b)| a <= b)) {
            count += 1;
        }
    });
    count
}

/// Degree-2 completeness: the span of the generators equals the kernel of
/// `z_i z_j ↦ class of u_i u_j` in `I^2 / 𝔪 I^2`.
pub fn degree_two_kernel_matches(
    ideal: &MonomialIdeal,
    presentation: &PresentationIdeal,
) -> Result<bool> {
    let m = ideal.mu();
    let square = ideal.power(2)?;
    let mut quadrics = Vec::new();
    for_each_monomial(m, 2, &mut |e| quadrics.push(ZMonomial::new(e.to_vec())));
    let image = |z: &ZMonomial| -> Result<Option<ExpVec>> {
        let u = z.evaluate(ideal)?;
        Ok(square.is_minimal_generator(u).then_some(u))
    };
    let mut distinct = BTreeSet::new();
    for z in &quadrics {
        if let Some(u) = image(z)? {
            distinct.insert(u);
        }
    }
    let kernel_dim = quadrics.len() - distinct.len();

    for b in &presentation.binomials {
        if image(&b.lead)? != image(&b.trail)? {
            return Ok(false);
        }
    }
    for z in &presentation.monomials {
        if image(z)?.is_some() {
            return Ok(false);
        }
    }
    let p = modp::DEFAULT_PRIME;
    let col = |z: &ZMonomial| quadrics.iter().position(|q| q == z).expect("quadratic monomial");
    let mut rows = Vec::with_capacity(presentation.len());
    for b in &presentation.binomials {
        let mut row = vec![0; quadrics.len()];
        row[col(&b.lead)] = 1;
        row[col(&b.trail)] = p - 1;
        rows.push(row);
    }
    for z in &presentation.monomials {
        let mut row = vec![0; quadrics.len()];
        row[col(z)] = 1;
        rows.push(row);
    }
    Ok(modp::rank(rows, p) == kernel_dim)
}
