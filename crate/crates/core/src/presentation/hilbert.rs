//! Hilbert series of the fiber cone from the counts `μ(I^k)`.
//!
//! `H(t) = Σ μ(I^k) t^k = h(t) / (1 - t)^2` and the numerator coefficients
//! are second differences `h_i = μ_i - 2 μ_{i-1} + μ_{i-2}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::shape::classify_shape;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `μ(I^k)` for `k = 0..=K`.
    pub mu_sequence: Vec<u64>,
    /// Numerator `h_0, ..., h_s` with `h_s != 0`; `None` if the second
    /// differences have not settled at zero with two degrees of margin.
    pub numerator: Option<Vec<i64>>,
}

/// Second differences of `mu`, trimmed once they vanish for every index
/// `>= k0` with `k0 <= len - 3`.
pub fn fit_numerator(mu: &[u64]) -> Option<Vec<i64>> {
    let at = |i: isize| if i < 0 { 0 } else { mu[i as usize] as i64 };
    let h: Vec<i64> = (0..mu.len() as isize)
        .map(|i| at(i) - 2 * at(i - 1) + at(i - 2))
        .collect();
    let k0 = h.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
    (k0 + 3 <= mu.len()).then(|| h[..k0].to_vec())
}

/// First `len` coefficients of `h(t) / (1 - t)^2`.
pub fn series_from_numerator(numerator: &[i64], len: usize) -> Vec<i64> {
    (0..len)
        .map(|k| {
            numerator
                .iter()
                .enumerate()
                .take(k + 1)
                .map(|(i, &h)| h * (k - i + 1) as i64)
                .sum()
        })
        .collect()
}

/// `μ(I^k)` for `k <= kmax` and the fitted numerator. For concave and convex
/// ideals the numerator is checked against `1 + (m - 2) t`.
pub fn hilbert_data(ideal: &MonomialIdeal, kmax: u32) -> Result<HilbertData> {
    if kmax < 3 {
        return Err(Error::BoundTooSmall(format!("need K >= 3, got {kmax}")));
    }
    let mu_sequence: Vec<u64> = ideal
        .powers_up_to(kmax)?
        .iter()
        .map(|p| p.mu() as u64)
        .collect();
    let numerator = fit_numerator(&mu_sequence);

    let m = ideal.mu();
    if m >= 2 {
        let (normalized, _) = ideal.normalize();
        if classify_shape(&normalized)?.is_classified() {
            let mut expected = vec![1, m as i64 - 2];
            while expected.last() == Some(&0) {
                expected.pop();
            }
            let consistent = match &numerator {
                Some(h) => *h == expected,
                // with K = 3 the linear term leaves no margin
                None => kmax == 3 && m > 2,
            };
            if !consistent {
                return Err(Error::InternalInconsistency(format!(
                    "Hilbert numerator {numerator:?} differs from {expected:?}"
                )));
            }
        }
    }
    Ok(HilbertData { mu_sequence, numerator })
}
