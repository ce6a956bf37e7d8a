//! Closed-form generator sets of powers, reduction numbers and the
//! behaviour of concave/convex shape under taking powers.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{lex_desc, ExpVec, MonomialIdeal};
use crate::shape::{classify_shape, ShapeReport};

fn product(factors: &[(ExpVec, u64)]) -> Result<ExpVec> {
    factors
        .iter()
        .try_fold(ExpVec::ONE, |acc, &(u, e)| acc.mul(u.pow(e)?))
}

fn sorted_desc(set: BTreeSet<ExpVec>) -> Vec<ExpVec> {
    set.into_iter().rev().collect()
}

fn require_positive(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidArgument("power must be positive".into()))
    } else {
        Ok(())
    }
}

/// Generators of `I^k` for a concave ideal, read off from `I^k = J^{k-1} I`
/// with `J = (u_1, u_m)`:
/// `u_1^{k-1} u_j` for all `j`, and `u_1^{k-i} u_m^{i-1} u_j` for
/// `2 <= i <= k`, `2 <= j <= m`.
pub fn concave_power_gens(ideal: &MonomialIdeal, k: u32) -> Result<Vec<ExpVec>> {
    require_positive(k)?;
    if !classify_shape(ideal)?.is_concave {
        return Err(Error::NotApplicable("ideal is not concave".into()));
    }
    let u = ideal.gens();
    let (first, last) = (u[0], u[u.len() - 1]);
    let k = k as u64;
    let mut set = BTreeSet::new();
    for &uj in u {
        set.insert(product(&[(first, k - 1), (uj, 1)])?);
    }
    for i in 2..=k {
        for &uj in &u[1..] {
            set.insert(product(&[(first, k - i), (last, i - 1), (uj, 1)])?);
        }
    }
    Ok(sorted_desc(set))
}

/// Generators of `I^k` for a convex ideal: the union over adjacent pairs
/// of `u_i^l u_{i+1}^{k-l}`, `l = 0..k`.
pub fn convex_power_gens(ideal: &MonomialIdeal, k: u32) -> Result<Vec<ExpVec>> {
    require_positive(k)?;
    if !classify_shape(ideal)?.is_convex {
        return Err(Error::NotApplicable("ideal is not convex".into()));
    }
    let mut set = BTreeSet::new();
    for pair in ideal.gens().windows(2) {
        set.extend(adjacent_block(pair[0], pair[1], k)?);
    }
    Ok(sorted_desc(set))
}

/// `{ u^l v^{k-l} : l = 0..k }`.
pub fn adjacent_block(u: ExpVec, v: ExpVec, k: u32) -> Result<Vec<ExpVec>> {
    let k = k as u64;
    (0..=k).map(|l| product(&[(u, l), (v, k - l)])).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionResult {
    pub j: MonomialIdeal,
    /// Least `r <= search_bound` with `I^{r+1} = J I^r`.
    pub reduction_number: Option<u32>,
    pub search_bound: u32,
    /// Lex-largest `u ∈ G(I^k) \ J I^{k-1}` for `k = search_bound + 1`,
    /// present exactly when no reduction number was found.
    pub witness: Option<(u32, ExpVec)>,
    /// Lex-largest witness for every `k = 1..=r` (or `..=search_bound + 1`).
    pub failures: Vec<(u32, ExpVec)>,
}

/// All `u ∈ G(I^k)` outside `J I^{k-1}`, lex-descending.
pub fn reduction_gap(ideal: &MonomialIdeal, j: &MonomialIdeal, k: u32) -> Result<Vec<ExpVec>> {
    require_positive(k)?;
    let ik = ideal.power(k)?;
    let jik = j.multiply(&ideal.power(k - 1)?)?;
    let mut gap: Vec<ExpVec> = ik.gens().iter().copied().filter(|&u| !jik.contains(u)).collect();
    gap.sort_by(lex_desc);
    Ok(gap)
}

/// The candidate `J = (u_1, u_m)` generated by the two pure powers.
pub fn pure_power_reduction(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let u = ideal.gens();
    MonomialIdeal::new([u[0], u[u.len() - 1]])
}

/// Default search bound `max(8, a_1)`.
pub fn default_reduction_bound(ideal: &MonomialIdeal) -> u32 {
    let a1 = ideal.gens()[0].a;
    u32::try_from(a1).unwrap_or(u32::MAX).max(8)
}

pub fn reduction_number(
    ideal: &MonomialIdeal,
    j: &MonomialIdeal,
    bound: u32,
) -> Result<ReductionResult> {
    require_positive(bound)?;
    if !ideal.contains_ideal(j) {
        return Err(Error::NotASubideal);
    }
    let mut failures = Vec::new();
    let mut prev = MonomialIdeal::unit();
    for r in 0..=bound {
        // prev = I^r
        let next = prev.multiply(ideal)?;
        let jir = j.multiply(&prev)?;
        let gap: Option<ExpVec> = next.gens().iter().copied().find(|&u| !jir.contains(u));
        match gap {
            None => {
                return Ok(ReductionResult {
                    j: j.clone(),
                    reduction_number: Some(r),
                    search_bound: bound,
                    witness: None,
                    failures,
                })
            }
            // gens are lex-descending, so the first hit is the lex-largest
            Some(u) => failures.push((r + 1, u)),
        }
        prev = next;
    }
    Ok(ReductionResult {
        j: j.clone(),
        reduction_number: None,
        search_bound: bound,
        witness: failures.last().copied(),
        failures,
    })
}

/// `(a, b, k)` with `I = (x^a, y^b)^k` when the ideal has no inner corner.
pub fn detect_pure_power(ideal: &MonomialIdeal) -> Result<Option<(u64, u64, u64)>> {
    let report = classify_shape(ideal)?;
    if !report.is_classified() {
        return Err(Error::NotApplicable("ideal is neither concave nor convex".into()));
    }
    if report.has_inner_corner {
        return Ok(None);
    }
    let u = ideal.gens();
    let k = (u.len() - 1) as u64;
    let (a1, bm) = (u[0].a, u[u.len() - 1].b);
    if a1 % k != 0 || bm % k != 0 {
        return Err(Error::InternalInconsistency(format!(
            "no inner corner but {a1} or {bm} is not divisible by {k}"
        )));
    }
    let (a, b) = (a1 / k, bm / k);
    let base = MonomialIdeal::from_pairs(&[(a, 0), (0, b)])?;
    if base.power(k as u32)? != *ideal {
        return Err(Error::InternalInconsistency(format!(
            "no inner corner but I != (x^{a}, y^{b})^{k}"
        )));
    }
    Ok(Some((a, b, k)))
}

/// Shape of `I^k` for `k = 1..=kmax`, checked against the known behaviour:
/// convex ideals have convex powers; a concave ideal with an inner corner
/// has no concave power beyond the first; without inner corners every
/// power stays concave.
pub fn power_shape_report(ideal: &MonomialIdeal, kmax: u32) -> Result<Vec<(u32, ShapeReport)>> {
    require_positive(kmax)?;
    let base = classify_shape(ideal)?;
    let powers = ideal.powers_up_to(kmax)?;
    let reports: Vec<(u32, ShapeReport)> = classify_all(&powers[1..])?
        .into_iter()
        .enumerate()
        .map(|(i, r)| (i as u32 + 1, r))
        .collect();
    for (k, r) in &reports {
        let k = *k;
        if base.is_convex && !r.is_convex {
            return Err(Error::InternalInconsistency(format!(
                "convex ideal has non-convex power I^{k}"
            )));
        }
        if base.is_concave && base.has_inner_corner && k >= 2 && r.is_concave {
            return Err(Error::InternalInconsistency(format!(
                "concave ideal with inner corner has concave power I^{k}"
            )));
        }
        if base.is_concave && !base.has_inner_corner && !r.is_concave {
            return Err(Error::InternalInconsistency(format!(
                "pure-power ideal has non-concave power I^{k}"
            )));
        }
    }
    Ok(reports)
}

#[cfg(feature = "parallel")]
fn classify_all(ideals: &[MonomialIdeal]) -> Result<Vec<ShapeReport>> {
    use rayon::prelude::*;
    ideals.par_iter().map(classify_shape).collect()
}

#[cfg(not(feature = "parallel"))]
fn classify_all(ideals: &[MonomialIdeal]) -> Result<Vec<ShapeReport>> {
    ideals.iter().map(classify_shape).collect()
}
