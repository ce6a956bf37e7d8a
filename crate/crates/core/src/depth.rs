//! Depth of the fiber cone: exact depth-0 certificates (socle elements,
//! non-increasing `μ(I^k)`), exact Cohen–Macaulay certificates from the
//! shape and symmetric classifications, and a Monte Carlo probe over
//! `Z/pZ` that gives evidence for depth `>= 1` and `>= 2` up to degree `K`.
//!
//! `F(I)_k` has basis `G(I^k)`; `z_j` sends `u` to `u u_j` if that product
//! is a minimal generator of `I^{k+1}` and to zero otherwise.

use std::fmt;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modp;
use crate::monomial::{ExpVec, MonomialIdeal};
use crate::presentation::{build_presentation, initial_ideal};
use crate::semigroup::{cn_is_cm, gcd_all};
use crate::shape::classify_shape;
use crate::symmetric::classify_symmetric4;

/// Smallest `k <= kmax` and lex-largest `u ∈ G(I^k)` with `u u_j ∈ 𝔪 I^{k+1}`
/// for every generator `u_j`. Such `u` spans a socle element of `F(I)`.
pub fn socle_witness(ideal: &MonomialIdeal, kmax: u32) -> Result<Option<(u32, ExpVec)>> {
    if ideal.mu() < 2 {
        return Ok(None);
    }
    let powers = ideal.powers_up_to(kmax + 1)?;
    for k in 1..=kmax as usize {
        let next = &powers[k + 1];
        for &u in powers[k].gens() {
            if is_socle(ideal, next, u)? {
                return Ok(Some((k as u32, u)));
            }
        }
    }
    Ok(None)
}

fn is_socle(ideal: &MonomialIdeal, next: &MonomialIdeal, u: ExpVec) -> Result<bool> {
    for &g in ideal.gens() {
        if next.is_minimal_generator(u.mul(g)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact recheck of a socle witness: `u ∈ G(I^k)` and every `u u_j` lies in
/// `𝔪 I^{k+1}`.
pub fn verify_socle_witness(ideal: &MonomialIdeal, k: u32, u: ExpVec) -> Result<bool> {
    if !ideal.power(k)?.is_minimal_generator(u) {
        return Ok(false);
    }
    for &g in ideal.gens() {
        if !ideal.member_of_m_times_power(k + 1, u.mul(g)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest `k <= kmax` with `μ(I^k) >= μ(I^{k+1})`; positive depth forces
/// the Hilbert function of `F(I)` to increase strictly.
pub fn monotonicity_certificate(ideal: &MonomialIdeal, kmax: u32) -> Result<Option<(u32, u64, u64)>> {
    if ideal.mu() < 2 {
        return Ok(None);
    }
    let mu: Vec<u64> = ideal.powers_up_to(kmax + 1)?.iter().map(|p| p.mu() as u64).collect();
    Ok((1..=kmax as usize)
        .find(|&k| mu[k] >= mu[k + 1])
        .map(|k| (k as u32, mu[k], mu[k + 1])))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeConfig {
    /// Degree bound `K`.
    pub kmax: u32,
    pub trials: u32,
    pub prime: u64,
    pub seed: u64,
    /// Run the socle and monotonicity checks before the probe.
    pub exact_checks: bool,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { kmax: 6, trials: 3, prime: modp::DEFAULT_PRIME, seed: 0, exact_checks: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialTranscript {
    pub l1: Vec<u64>,
    pub l2: Vec<u64>,
    /// `rank(ℓ_1 : F_k -> F_{k+1})`, `k = 0..K-1`.
    pub rank_l1: Vec<usize>,
    /// `dim F_k - rank_l1[k]`.
    pub kernel_l1: Vec<usize>,
    /// `dim(ℓ_1 F_k + ℓ_2 F_k)`, `k = 0..K-1`.
    pub rank_l1_l2: Vec<usize>,
    /// `dim F_k / ℓ_1 F_{k-1}`, `k = 0..K`.
    pub w_dims: Vec<usize>,
    /// `ℓ_2 : W_k -> W_{k+1}` injective, `k = 0..K-2`.
    pub l2_injective: Vec<bool>,
    /// `dim F_k / (ℓ_1, ℓ_2) F_{k-1}`, `k = 0..K`.
    pub quotient_dims: Vec<usize>,
    /// 0, 1 or 2.
    pub evidence: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeTranscript {
    pub kmax: u32,
    pub prime: u64,
    pub seed: u64,
    /// `dim F_k = μ(I^k)`, `k = 0..K`.
    pub dims: Vec<usize>,
    pub trials: Vec<TrialTranscript>,
    /// Maximum over trials.
    pub evidence: u8,
}

/// `table[k][i][j]`: index in `G(I^{k+1})` of `g_i u_j`, or `None` if the
/// product lies in `𝔪 I^{k+1}`.
type MultTable = Vec<Vec<Vec<Option<usize>>>>;

fn multiplication_table(ideal: &MonomialIdeal, kmax: u32) -> Result<(Vec<usize>, MultTable)> {
    let powers = ideal.powers_up_to(kmax)?;
    let dims = powers.iter().map(MonomialIdeal::mu).collect();
    let mut table = Vec::with_capacity(kmax as usize);
    for k in 0..kmax as usize {
        let next = powers[k + 1].gens();
        let mut rows = Vec::with_capacity(powers[k].mu());
        for &u in powers[k].gens() {
            let mut row = Vec::with_capacity(ideal.mu());
            for &g in ideal.gens() {
                let v = u.mul(g)?;
                // gens are lex-descending
                row.push(next.binary_search_by(|w| v.cmp(w)).ok());
            }
            rows.push(row);
        }
        table.push(rows);
    }
    Ok((dims, table))
}

/// Images of the basis of `F_k` under `ℓ`, as rows over `F_{k+1}`.
fn images(table: &MultTable, dims: &[usize], k: usize, l: &[u64], p: u64) -> Vec<Vec<u64>> {
    table[k]
        .iter()
        .map(|row| {
            let mut v = vec![0; dims[k + 1]];
            for (j, idx) in row.iter().enumerate() {
                if let Some(i) = idx {
                    v[*i] = (v[*i] + l[j]) % p;
                }
            }
            v
        })
        .collect()
}

fn run_trial(table: &MultTable, dims: &[usize], l1: Vec<u64>, l2: Vec<u64>, p: u64) -> TrialTranscript {
    let kmax = table.len();
    let mut rank_l1 = Vec::with_capacity(kmax);
    let mut rank_l1_l2 = Vec::with_capacity(kmax);
    for k in 0..kmax {
        let a = images(table, dims, k, &l1, p);
        let mut both = a.clone();
        both.extend(images(table, dims, k, &l2, p));
        rank_l1.push(modp::rank(a, p));
        rank_l1_l2.push(modp::rank(both, p));
    }
    let kernel_l1: Vec<usize> = (0..kmax).map(|k| dims[k] - rank_l1[k]).collect();
    let w_dims: Vec<usize> =
        (0..=kmax).map(|k| dims[k] - if k == 0 { 0 } else { rank_l1[k - 1] }).collect();
    // kernel of F_k -> F_{k+1}/ℓ_1 F_k has dimension dims[k] - (rank_l1_l2 - rank_l1)
    // and always contains ℓ_1 F_{k-1}
    let l2_injective: Vec<bool> = (0..kmax.saturating_sub(1))
        .map(|k| rank_l1_l2[k] - rank_l1[k] == w_dims[k])
        .collect();
    let quotient_dims: Vec<usize> =
        (0..=kmax).map(|k| dims[k] - if k == 0 { 0 } else { rank_l1_l2[k - 1] }).collect();

    let mut evidence = 0;
    if kernel_l1.iter().all(|&d| d == 0) {
        evidence = 1;
        if l2_injective.iter().all(|&b| b) && quotient_dims.contains(&0) {
            evidence = 2;
        }
    }
    TrialTranscript {
        l1,
        l2,
        rank_l1,
        kernel_l1,
        rank_l1_l2,
        w_dims,
        l2_injective,
        quotient_dims,
        evidence,
    }
}

/// Probe transcript without the exact short-circuits.
pub fn probe_transcript(ideal: &MonomialIdeal, config: &ProbeConfig) -> Result<ProbeTranscript> {
    modp::check_prime(config.prime)?;
    if ideal.mu() < 2 {
        return Err(Error::NotApplicable("probe needs at least two generators".into()));
    }
    if config.kmax == 0 || config.trials == 0 {
        return Err(Error::InvalidArgument("K and trials must be positive".into()));
    }
    let (dims, table) = multiplication_table(ideal, config.kmax)?;
    let m = ideal.mu();
    let p = config.prime;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let forms: Vec<(Vec<u64>, Vec<u64>)> = (0..config.trials)
        .map(|_| {
            let l1 = (0..m).map(|_| rng.random_range(1..p)).collect();
            let l2 = (0..m).map(|_| rng.random_range(1..p)).collect();
            (l1, l2)
        })
        .collect();

    #[cfg(feature = "parallel")]
    let trials: Vec<TrialTranscript> = {
        use rayon::prelude::*;
        forms.into_par_iter().map(|(l1, l2)| run_trial(&table, &dims, l1, l2, p)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let trials: Vec<TrialTranscript> =
        forms.into_iter().map(|(l1, l2)| run_trial(&table, &dims, l1, l2, p)).collect();

    let evidence = trials.iter().map(|t| t.evidence).max().unwrap_or(0);
    Ok(ProbeTranscript { kmax: config.kmax, prime: p, seed: config.seed, dims, trials, evidence })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DepthKind {
    Depth0,
    CohenMacaulay,
    /// Exact: the fiber cone is not Cohen–Macaulay (depth is not pinned down).
    NotCohenMacaulay,
    EvidenceDepthAtLeast(u8),
    Unknown,
}

impl fmt::Display for DepthKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DepthKind::EvidenceDepthAtLeast(d) => write!(f, "EvidenceDepthAtLeast({d})"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    Socle { k: u32, witness: ExpVec },
    NonMonotone { k: u32, mu_k: u64, mu_next: u64 },
    Structural { name: String },
    Probe { transcript: ProbeTranscript },
    None,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Socle { k, witness } => {
                write!(f, "socle element {witness} in degree {k}")
            }
            Certificate::NonMonotone { k, mu_k, mu_next } => {
                write!(f, "mu(I^{k}) = {mu_k} >= mu(I^{}) = {mu_next}", k + 1)
            }
            Certificate::Structural { name } => f.write_str(name),
            Certificate::Probe { transcript } => write!(
                f,
                "random linear forms mod {}, seed {}, {} trials up to degree {}",
                transcript.prime,
                transcript.seed,
                transcript.trials.len(),
                transcript.kmax
            ),
            Certificate::None => f.write_str("none"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthVerdict {
    pub kind: DepthKind,
    pub certificate: Certificate,
    /// Degree bound `K` used by the degreewise checks.
    pub bound: u32,
}

fn exact_depth_zero(ideal: &MonomialIdeal, kmax: u32) -> Result<Option<DepthVerdict>> {
    if let Some((k, witness)) = socle_witness(ideal, kmax)? {
        return Ok(Some(DepthVerdict {
            kind: DepthKind::Depth0,
            certificate: Certificate::Socle { k, witness },
            bound: kmax,
        }));
    }
    if let Some((k, mu_k, mu_next)) = monotonicity_certificate(ideal, kmax)? {
        return Ok(Some(DepthVerdict {
            kind: DepthKind::Depth0,
            certificate: Certificate::NonMonotone { k, mu_k, mu_next },
            bound: kmax,
        }));
    }
    Ok(None)
}

fn from_probe(transcript: ProbeTranscript) -> DepthVerdict {
    let bound = transcript.kmax;
    let kind = match transcript.evidence {
        0 => DepthKind::Unknown,
        d => DepthKind::EvidenceDepthAtLeast(d),
    };
    DepthVerdict { kind, certificate: Certificate::Probe { transcript }, bound }
}

/// Exact depth-0 checks (unless disabled), then the random probe.
pub fn generic_linear_probe(ideal: &MonomialIdeal, config: &ProbeConfig) -> Result<DepthVerdict> {
    modp::check_prime(config.prime)?;
    if config.exact_checks {
        if let Some(v) = exact_depth_zero(ideal, config.kmax)? {
            return Ok(v);
        }
    }
    Ok(from_probe(probe_transcript(ideal, config)?))
}

fn structural(kind: DepthKind, name: String, bound: u32) -> DepthVerdict {
    DepthVerdict { kind, certificate: Certificate::Structural { name }, bound }
}

/// Exact Cohen–Macaulay status from the shape, symmetric and equigenerated
/// classifications, if one applies. `ideal` must be normalized.
fn structural_certificate(ideal: &MonomialIdeal, bound: u32) -> Result<Option<DepthVerdict>> {
    let g = ideal.gens();
    let m = g.len();
    let shape = classify_shape(ideal)?;
    if shape.is_classified() {
        // rebuild and self-check the Gröbner basis so the certificate is re-checkable
        let presentation = build_presentation(ideal)?;
        initial_ideal(&presentation)?;
        let name = if shape.is_concave {
            "concave ideal: quadratic Gröbner basis, initial ideal (z_2, ..., z_{m-1})^2"
        } else {
            "convex ideal: squarefree quadratic initial ideal"
        };
        return Ok(Some(structural(DepthKind::CohenMacaulay, name.into(), bound)));
    }
    if m == 4 && g[1].a == g[2].b && g[1].b == g[2].a && g[0].a == g[3].b {
        let (c, b, a) = (g[0].a, g[1].a, g[2].a);
        if gcd_all(&[a, b, c]) == 1 {
            let report = classify_symmetric4(a, b, c)?;
            if let Some(cm) = report.verdict.is_cm() {
                let kind = if cm { DepthKind::CohenMacaulay } else { DepthKind::NotCohenMacaulay };
                let name = format!("symmetric ideal ({a}, {b}, {c}): {}", report.verdict);
                return Ok(Some(structural(kind, name, bound)));
            }
        }
    }
    if ideal.is_equigenerated() {
        let d = gcd_all(&g.iter().map(|u| u.b).collect::<Vec<_>>());
        let ns: Vec<u64> = g.iter().map(|u| u.b / d).filter(|&b| b > 0).collect();
        let (cm, _) = cn_is_cm(&ns)?;
        let kind = if cm { DepthKind::CohenMacaulay } else { DepthKind::NotCohenMacaulay };
        let name = format!("equigenerated ideal: Apéry criterion on the curve {ns:?}");
        return Ok(Some(structural(kind, name, bound)));
    }
    Ok(None)
}

/// Combined verdict: socle witness, non-monotone `μ`, structural
/// certificates, probe evidence, in that order.
pub fn depth_verdict(ideal: &MonomialIdeal, config: &ProbeConfig) -> Result<DepthVerdict> {
    modp::check_prime(config.prime)?;
    let (ideal, _) = ideal.normalize();
    if ideal.mu() < 2 {
        return Ok(structural(
            DepthKind::CohenMacaulay,
            "principal ideal: polynomial ring in one variable".into(),
            config.kmax,
        ));
    }
    if let Some(v) = exact_depth_zero(&ideal, config.kmax)? {
        return Ok(v);
    }
    if let Some(v) = structural_certificate(&ideal, config.kmax)? {
        return Ok(v);
    }
    Ok(from_probe(probe_transcript(&ideal, config)?))
}
