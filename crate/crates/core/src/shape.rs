//! Concave/convex classification of the exponent sequence `c_1, ..., c_m`
//! of a normalized ideal, with corner points and line segments.
//!
//! Vector comparisons are componentwise; "strict" means componentwise
//! `>=` together with `!=`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{ExpVec, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeReport {
    pub is_concave: bool,
    pub is_convex: bool,
    /// 1-based, sorted, always contains `1` and `m`.
    pub corner_indices: Vec<usize>,
    /// Consecutive corner pairs `(j_k, j_{k+1})`.
    pub segments: Vec<(usize, usize)>,
    pub has_inner_corner: bool,
}

impl ShapeReport {
    pub fn is_classified(&self) -> bool {
        self.is_concave || self.is_convex
    }
}

/// Twice the middle vector against the sum of its neighbours.
fn second_difference(prev: ExpVec, mid: ExpVec, next: ExpVec) -> ([i128; 2], [i128; 2]) {
    (
        [2 * mid.a as i128, 2 * mid.b as i128],
        [prev.a as i128 + next.a as i128, prev.b as i128 + next.b as i128],
    )
}

fn ge(x: [i128; 2], y: [i128; 2]) -> bool {
    x[0] >= y[0] && x[1] >= y[1]
}

pub fn classify_shape(ideal: &MonomialIdeal) -> Result<ShapeReport> {
    let m = ideal.mu();
    if m < 2 {
        return Err(Error::NotApplicable("shape needs at least two generators".into()));
    }
    if !ideal.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let c = ideal.gens();
    let mut is_concave = true;
    let mut is_convex = true;
    let mut strict_concave = Vec::new();
    let mut strict_convex = Vec::new();
    for i in 1..m - 1 {
        let (twice, sum) = second_difference(c[i - 1], c[i], c[i + 1]);
        if ge(twice, sum) {
            if twice != sum {
                strict_concave.push(i + 1);
            }
        } else {
            is_concave = false;
        }
        if ge(sum, twice) {
            if twice != sum {
                strict_convex.push(i + 1);
            }
        } else {
            is_convex = false;
        }
    }
    let inner = match (is_concave, is_convex) {
        (true, false) => strict_concave,
        (false, true) => strict_convex,
        _ => Vec::new(),
    };
    let mut corner_indices = Vec::with_capacity(inner.len() + 2);
    corner_indices.push(1);
    corner_indices.extend(inner);
    corner_indices.push(m);
    let segments = corner_indices.windows(2).map(|w| (w[0], w[1])).collect();
    let has_inner_corner = corner_indices.len() > 2;
    Ok(ShapeReport {
        is_concave,
        is_convex,
        corner_indices,
        segments,
        has_inner_corner,
    })
}

fn require_classified(report: &ShapeReport) -> Result<()> {
    if report.is_classified() {
        Ok(())
    } else {
        Err(Error::NotApplicable("ideal is neither concave nor convex".into()))
    }
}

/// Assign every generator index to the line segment containing it.
///
/// Returns `(generator index, segment index)` pairs, both 1-based. A
/// corner shared by two segments is assigned to the lower one.
pub fn segment_membership(
    ideal: &MonomialIdeal,
    report: &ShapeReport,
) -> Result<Vec<(usize, usize)>> {
    require_classified(report)?;
    let c = ideal.gens();
    let mut out = Vec::with_capacity(c.len());
    for j in 1..=c.len() {
        let seg = report
            .segments
            .iter()
            .position(|&(lo, hi)| lo <= j && j <= hi)
            .ok_or_else(|| Error::InternalInconsistency(format!("index {j} lies on no segment")))?;
        let (lo, hi) = report.segments[seg];
        if !on_segment(c[lo - 1], c[hi - 1], c[j - 1]) {
            return Err(Error::InternalInconsistency(format!(
                "c_{j} is not on the segment [c_{lo}, c_{hi}]"
            )));
        }
        out.push((j, seg + 1));
    }
    Ok(out)
}

fn on_segment(p: ExpVec, q: ExpVec, x: ExpVec) -> bool {
    let (px, py) = (p.a as i128, p.b as i128);
    let (dx, dy) = (q.a as i128 - px, q.b as i128 - py);
    let (ex, ey) = (x.a as i128 - px, x.b as i128 - py);
    let cross = dx * ey - dy * ex;
    let dot = dx * ex + dy * ey;
    cross == 0 && dot >= 0 && dot <= dx * dx + dy * dy
}

/// Consecutive differences are constant along every segment.
pub fn check_equidistance(ideal: &MonomialIdeal, report: &ShapeReport) -> Result<bool> {
    require_classified(report)?;
    let c = ideal.gens();
    let diff = |j: usize| {
        (
            c[j].a as i128 - c[j - 1].a as i128,
            c[j].b as i128 - c[j - 1].b as i128,
        )
    };
    Ok(report.segments.iter().all(|&(lo, hi)| {
        // 0-based differences c_{j+1} - c_j for lo <= j < hi
        let first = diff(lo);
        (lo..hi).all(|j| diff(j) == first)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(p: &[(u64, u64)]) -> MonomialIdeal {
        MonomialIdeal::from_pairs(p).unwrap()
    }

    fn four_corner_ideal() -> MonomialIdeal {
        ideal(&[(10, 0), (9, 2), (8, 4), (7, 5), (6, 6), (5, 7), (4, 8), (2, 9), (0, 10)])
    }

    #[test]
    fn four_corner_ideal_shape() {
        let r = classify_shape(&four_corner_ideal()).unwrap();
        assert!(r.is_concave && !r.is_convex);
        assert_eq!(r.corner_indices, vec![1, 3, 7, 9]);
        assert_eq!(r.segments, vec![(1, 3), (3, 7), (7, 9)]);
        assert!(r.has_inner_corner);
    }

    #[test]
    fn doubly_classified_square_of_maximal_ideal() {
        let r = classify_shape(&ideal(&[(2, 0), (1, 1), (0, 2)])).unwrap();
        assert!(r.is_concave && r.is_convex);
        assert_eq!(r.corner_indices, vec![1, 3]);
        assert!(!r.has_inner_corner);
    }

    #[test]
    fn neither_concave_nor_convex() {
        let r = classify_shape(&ideal(&[(9, 0), (5, 3), (3, 5), (0, 9)])).unwrap();
        assert!(!r.is_concave && !r.is_convex);
    }

    #[test]
    fn preconditions() {
        assert_eq!(classify_shape(&ideal(&[(3, 1), (1, 3)])), Err(Error::NotNormalized));
        assert!(matches!(
            classify_shape(&ideal(&[(3, 3)])),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn segment_membership_examples() {
        let i = four_corner_ideal();
        let r = classify_shape(&i).unwrap();
        let seg: Vec<usize> = segment_membership(&i, &r).unwrap().into_iter().map(|p| p.1).collect();
        assert_eq!(seg, vec![1, 1, 1, 2, 2, 2, 2, 3, 3]);

        let i = ideal(&[(2, 0), (1, 1), (0, 2)]);
        let r = classify_shape(&i).unwrap();
        assert!(segment_membership(&i, &r).unwrap().iter().all(|p| p.1 == 1));

        let i = ideal(&[(3, 0), (2, 1), (0, 2)]);
        let r = classify_shape(&i).unwrap();
        assert_eq!(r.corner_indices, vec![1, 2, 3]);
        assert_eq!(segment_membership(&i, &r).unwrap(), vec![(1, 1), (2, 1), (3, 2)]);
    }

    #[test]
    fn equidistance() {
        let i = four_corner_ideal();
        assert!(check_equidistance(&i, &classify_shape(&i).unwrap()).unwrap());
        let i = ideal(&[(4, 0), (2, 1), (0, 2)]);
        let r = classify_shape(&i).unwrap();
        assert_eq!(r.segments, vec![(1, 3)]);
        assert!(check_equidistance(&i, &r).unwrap());
        let i = ideal(&[(9, 0), (5, 3), (3, 5), (0, 9)]);
        let r = classify_shape(&i).unwrap();
        assert!(check_equidistance(&i, &r).is_err());
    }
}
