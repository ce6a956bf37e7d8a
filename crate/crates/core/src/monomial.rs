//! Monomials `x^a y^b` and monomial ideals of `K[x, y]`.
//!
//! An ideal is stored through its minimal generating set, sorted
//! lexicographically descending: the `x`-exponents strictly decrease and
//! the `y`-exponents strictly increase along the list. Every operation
//! returns a new value; nothing is mutated after construction.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector `(a, b)` of the monomial `x^a y^b`.
///
/// The derived ordering is lexicographic: `(a, b) > (c, d)` iff `a > c`,
/// or `a == c` and `b > d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExpVec {
    pub a: u64,
    pub b: u64,
}

impl ExpVec {
    pub const ONE: ExpVec = ExpVec { a: 0, b: 0 };

    pub const fn new(a: u64, b: u64) -> Self {
        ExpVec { a, b }
    }

    /// Exponent vector of the product of two monomials.
    // checked, so not `Mul`
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: ExpVec) -> Result<ExpVec> {
        Ok(ExpVec {
            a: self.a.checked_add(other.a).ok_or(Error::Overflow)?,
            b: self.b.checked_add(other.b).ok_or(Error::Overflow)?,
        })
    }

    /// Exponent vector of `self^k`.
    pub fn pow(self, k: u64) -> Result<ExpVec> {
        Ok(ExpVec {
            a: self.a.checked_mul(k).ok_or(Error::Overflow)?,
            b: self.b.checked_mul(k).ok_or(Error::Overflow)?,
        })
    }

    /// Componentwise `self <= other`, i.e. `self` divides `other`.
    pub fn divides(self, other: ExpVec) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    /// `self` divides `other` and the two differ.
    pub fn strictly_divides(self, other: ExpVec) -> bool {
        self.divides(other) && self != other
    }

    pub fn degree(self) -> u64 {
        self.a + self.b
    }

    /// Quotient `self / other`; `None` unless `other` divides `self`.
    #[allow(clippy::should_implement_trait)]
    pub fn div(self, other: ExpVec) -> Option<ExpVec> {
        if other.divides(self) {
            Some(ExpVec::new(self.a - other.a, self.b - other.b))
        } else {
            None
        }
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn var(f: &mut fmt::Formatter<'_>, name: char, e: u64) -> fmt::Result {
            match e {
                0 => Ok(()),
                1 => write!(f, "{name}"),
                _ => write!(f, "{name}^{e}"),
            }
        }
        match (self.a, self.b) {
            (0, 0) => write!(f, "1"),
            (_, 0) => var(f, 'x', self.a),
            (0, _) => var(f, 'y', self.b),
            _ => {
                var(f, 'x', self.a)?;
                write!(f, "*")?;
                var(f, 'y', self.b)
            }
        }
    }
}

/// A nonzero monomial ideal of `K[x, y]`, held as its minimal generating
/// set `G(I)` in lex-descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<ExpVec>", into = "Vec<ExpVec>")]
pub struct MonomialIdeal {
    gens: Vec<ExpVec>,
}

impl TryFrom<Vec<ExpVec>> for MonomialIdeal {
    type Error = Error;

    fn try_from(raw: Vec<ExpVec>) -> Result<Self> {
        MonomialIdeal::new(raw)
    }
}

impl From<MonomialIdeal> for Vec<ExpVec> {
    fn from(ideal: MonomialIdeal) -> Self {
        ideal.gens
    }
}

impl MonomialIdeal {
    /// Minimal generating set of the ideal generated by `raw`.
    pub fn new(raw: impl IntoIterator<Item = ExpVec>) -> Result<Self> {
        let mut v: Vec<ExpVec> = raw.into_iter().collect();
        if v.is_empty() {
            return Err(Error::InvalidIdeal("no generators".into()));
        }
        // ascending in a, then b: v is redundant iff an earlier entry has b' <= b
        v.sort_unstable();
        v.dedup();
        let mut gens = Vec::with_capacity(v.len());
        let mut min_b = u64::MAX;
        for g in v {
            if g.b < min_b {
                min_b = g.b;
                gens.push(g);
            }
        }
        gens.reverse();
        Ok(MonomialIdeal { gens })
    }

    /// Convenience constructor from `(a, b)` pairs.
    pub fn from_pairs(pairs: &[(u64, u64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(a, b)| ExpVec::new(a, b)))
    }

    /// The unit ideal `(1)`.
    pub fn unit() -> Self {
        MonomialIdeal { gens: vec![ExpVec::ONE] }
    }

    pub fn gens(&self) -> &[ExpVec] {
        &self.gens
    }

    /// Number of minimal generators, `μ(I)`.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    /// 1-based access to `u_i`, matching the usual labelling.
    pub fn u(&self, i: usize) -> Option<ExpVec> {
        i.checked_sub(1).and_then(|j| self.gens.get(j).copied())
    }

    pub fn is_normalized(&self) -> bool {
        self.gens.last().is_some_and(|g| g.a == 0) && self.gens[0].b == 0
    }

    /// Divide out the greatest common divisor of the generators.
    ///
    /// Returns the normalized ideal together with the common factor.
    pub fn normalize(&self) -> (MonomialIdeal, ExpVec) {
        let g = ExpVec::new(
            self.gens.iter().map(|u| u.a).min().unwrap_or(0),
            self.gens.iter().map(|u| u.b).min().unwrap_or(0),
        );
        let gens = self
            .gens
            .iter()
            .map(|u| ExpVec::new(u.a - g.a, u.b - g.b))
            .collect();
        (MonomialIdeal { gens }, g)
    }

    /// `u ∈ I`.
    pub fn contains(&self, u: ExpVec) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `u ∈ 𝔪I`, i.e. some generator strictly divides `u`.
    pub fn contains_in_maximal_times(&self, u: ExpVec) -> bool {
        self.gens.iter().any(|g| g.strictly_divides(u))
    }

    /// `u ∈ G(I)`.
    pub fn is_minimal_generator(&self, u: ExpVec) -> bool {
        self.gens.binary_search_by(|g| u.cmp(g)).is_ok()
    }

    /// `J ⊆ I`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|&g| self.contains(g))
    }

    /// Minimal generating set of the product `IJ`.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &u in &self.gens {
            for &v in &other.gens {
                prods.push(u.mul(v)?);
            }
        }
        MonomialIdeal::new(prods)
    }

    /// `I^k` by repeated multiplication; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit();
        for _ in 0..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// `I^0, I^1, ..., I^kmax`.
    pub fn powers_up_to(&self, kmax: u32) -> Result<Vec<MonomialIdeal>> {
        let mut out = Vec::with_capacity(kmax as usize + 1);
        out.push(MonomialIdeal::unit());
        for k in 1..=kmax as usize {
            let next = out[k - 1].multiply(self)?;
            out.push(next);
        }
        Ok(out)
    }

    /// `u ∈ 𝔪 I^k`.
    pub fn member_of_m_times_power(&self, k: u32, u: ExpVec) -> Result<bool> {
        Ok(self.power(k)?.contains_in_maximal_times(u))
    }

    /// Exponent-swap image `x <-> y`.
    pub fn transpose(&self) -> MonomialIdeal {
        let mut gens: Vec<ExpVec> = self.gens.iter().map(|g| ExpVec::new(g.b, g.a)).collect();
        gens.reverse();
        MonomialIdeal { gens }
    }

    /// All generators share one total degree.
    pub fn is_equigenerated(&self) -> bool {
        let d = self.gens[0].degree();
        self.gens.iter().all(|g| g.degree() == d)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic comparison used for witness selection (largest first).
pub(crate) fn lex_desc(a: &ExpVec, b: &ExpVec) -> Ordering {
    b.cmp(a)
}
