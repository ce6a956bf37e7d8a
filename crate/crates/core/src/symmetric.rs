//! Symmetric ideals `(x^{a_1} y^{a_m}, x^{a_2} y^{a_{m-1}}, ..., y^{a_1})` and
//! the classification of the 4-generated family
//! `I = (x^c, x^b y^a, x^a y^b, y^c)`, `0 < a < b < c`, `gcd(a, b, c) = 1`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{ExpVec, MonomialIdeal};
use crate::presentation::{standard_monomial_count, ZMonomial};
use crate::semigroup::{cn_is_cm, gcd_all};
use crate::shape::classify_shape;

/// Exponents of `x` read left to right; `y` uses the reversed sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricSpec {
    pub a_sequence: Vec<u64>,
}

pub fn make_symmetric(spec: &SymmetricSpec) -> Result<MonomialIdeal> {
    let a = &spec.a_sequence;
    if a.len() < 2 {
        return Err(Error::InvalidSpec("a-sequence needs at least two entries".into()));
    }
    if a.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::InvalidSpec(format!("a-sequence {a:?} is not strictly decreasing")));
    }
    if a[a.len() - 1] != 0 {
        return Err(Error::InvalidSpec(format!("a-sequence {a:?} does not end in 0")));
    }
    let m = a.len();
    MonomialIdeal::new((0..m).map(|i| ExpVec::new(a[i], a[m - 1 - i])))
}

/// `5m, 4m, 4m - 1, ..., 3m + 4, m, 0`: exactly `m` entries.
pub fn tiny_squares_sequence(m: u64) -> Result<Vec<u64>> {
    if m < 5 {
        return Err(Error::InvalidSpec(format!("tiny-squares family needs m >= 5, got {m}")));
    }
    let mut a = vec![5 * m];
    a.extend((3 * m + 4..=4 * m).rev());
    a.extend([m, 0]);
    debug_assert_eq!(a.len() as u64, m);
    Ok(a)
}

/// Generators in degree `5m` (the two outer pairs) and `7m + 3` (the rest).
pub fn tiny_squares_ideal(m: u64) -> Result<MonomialIdeal> {
    make_symmetric(&SymmetricSpec { a_sequence: tiny_squares_sequence(m)? })
}

/// `(x^c, x^b y^a, x^a y^b, y^c)`.
pub fn symmetric4_ideal(a: u64, b: u64, c: u64) -> Result<MonomialIdeal> {
    make_symmetric(&SymmetricSpec { a_sequence: vec![c, b, a, 0] })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symmetric4Verdict {
    #[serde(rename = "CM_Concave")]
    CmConcave,
    #[serde(rename = "CM_Convex")]
    CmConvex,
    #[serde(rename = "CM_SmallC")]
    CmSmallC,
    #[serde(rename = "CM_LargeC")]
    CmLargeC,
    #[serde(rename = "CM_Equigen")]
    CmEquigen,
    #[serde(rename = "NotCM_Equigen")]
    NotCmEquigen,
    UnknownInterval,
}

impl Symmetric4Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Symmetric4Verdict::CmConcave => "CM_Concave",
            Symmetric4Verdict::CmConvex => "CM_Convex",
            Symmetric4Verdict::CmSmallC => "CM_SmallC",
            Symmetric4Verdict::CmLargeC => "CM_LargeC",
            Symmetric4Verdict::CmEquigen => "CM_Equigen",
            Symmetric4Verdict::NotCmEquigen => "NotCM_Equigen",
            Symmetric4Verdict::UnknownInterval => "UnknownInterval",
        }
    }

    pub fn is_cm(self) -> Option<bool> {
        match self {
            Symmetric4Verdict::UnknownInterval => None,
            Symmetric4Verdict::NotCmEquigen => Some(false),
            _ => Some(true),
        }
    }
}

impl fmt::Display for Symmetric4Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Symmetric4Report {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    /// `⌈b / (b - a)⌉`.
    pub r: u64,
    pub verdict: Symmetric4Verdict,
    /// `[2a + 1, r(b - a) + a]`; outside it the small-c and large-c rules apply.
    pub interval: (u64, u64),
    /// Monomial initial ideal of the fiber-cone relations in `z_1..z_4`,
    /// verified by standard-monomial counts.
    pub presentation: Option<Vec<ZMonomial>>,
    /// Outcome of the Apéry criterion when `c = a + b`.
    pub cn_check: Option<bool>,
}

/// Degrees checked when verifying an attached presentation.
pub const PRESENTATION_CHECK_DEGREE: u32 = 6;

fn check_triple(a: u64, b: u64, c: u64) -> Result<()> {
    if !(0 < a && a < b && b < c) {
        return Err(Error::InvalidSpec(format!("need 0 < a < b < c, got ({a}, {b}, {c})")));
    }
    let g = gcd_all(&[a, b, c]);
    if g != 1 {
        return Err(Error::InvalidSpec(format!("gcd({a}, {b}, {c}) = {g}, need 1")));
    }
    Ok(())
}

pub fn r_value(a: u64, b: u64) -> u64 {
    b.div_ceil(b - a)
}

fn verify_presentation(ideal: &MonomialIdeal, gens: &[ZMonomial]) -> Result<()> {
    let powers = ideal.powers_up_to(PRESENTATION_CHECK_DEGREE)?;
    for (k, p) in powers.iter().enumerate() {
        let count = standard_monomial_count(gens, 4, k as u32);
        if count != p.mu() as u64 {
            let shown: Vec<String> = gens.iter().map(ToString::to_string).collect();
            return Err(Error::InternalInconsistency(format!(
                "({}) has {count} standard monomials in degree {k} but mu(I^{k}) = {}",
                shown.join(", "),
                p.mu()
            )));
        }
    }
    Ok(())
}

/// Classification by the first matching rule: equigenerated, small `c`,
/// large `c`, concave or convex, otherwise the open interval.
pub fn classify_symmetric4(a: u64, b: u64, c: u64) -> Result<Symmetric4Report> {
    check_triple(a, b, c)?;
    let r = r_value(a, b);
    let upper = r * (b - a) + a;
    let mut report = Symmetric4Report {
        a,
        b,
        c,
        r,
        verdict: Symmetric4Verdict::UnknownInterval,
        interval: (2 * a + 1, upper),
        presentation: None,
        cn_check: None,
    };
    let ideal = symmetric4_ideal(a, b, c)?;

    if c == a + b {
        let (cm, _) = cn_is_cm(&[a, b, c])?;
        if cm != (b == a + 1) {
            return Err(Error::InternalInconsistency(format!(
                "Apéry criterion gives {cm} for ({a}, {b}, {c})"
            )));
        }
        report.cn_check = Some(cm);
        report.verdict =
            if cm { Symmetric4Verdict::CmEquigen } else { Symmetric4Verdict::NotCmEquigen };
        return Ok(report);
    }

    if 2 * a >= c {
        let gens = vec![
            ZMonomial::from_powers(4, &[(2, 1), (3, 1)]),
            ZMonomial::from_powers(4, &[(2, 2)]),
            ZMonomial::from_powers(4, &[(3, 2)]),
        ];
        verify_presentation(&ideal, &gens)?;
        report.presentation = Some(gens);
        report.verdict = Symmetric4Verdict::CmSmallC;
        return Ok(report);
    }

    if c > upper {
        let e = (r - 1) as u32;
        let gens = vec![
            ZMonomial::from_powers(4, &[(1, 1), (3, e)]),
            ZMonomial::from_powers(4, &[(2, e), (4, 1)]),
            ZMonomial::from_powers(4, &[(1, 1), (4, 1)]),
        ];
        verify_presentation(&ideal, &gens)?;
        report.presentation = Some(gens);
        report.verdict = Symmetric4Verdict::CmLargeC;
        return Ok(report);
    }

    let concave = 2 * a >= b && 2 * b >= a + c;
    let convex = 2 * a <= b && 2 * b <= a + c;
    let shape = classify_shape(&ideal)?;
    if (shape.is_concave, shape.is_convex) != (concave, convex) {
        return Err(Error::InternalInconsistency(format!(
            "shape of ({a}, {b}, {c}) disagrees with its defining inequalities"
        )));
    }
    if concave {
        report.verdict = Symmetric4Verdict::CmConcave;
    } else if convex {
        report.verdict = Symmetric4Verdict::CmConvex;
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShiftOutcome {
    Classified(Symmetric4Report),
    /// The shifted triple has a common factor and is not classified.
    NonCoprime { shifted: (u64, u64, u64), gcd: u64 },
}

/// Classify `(a + m, b + m, c + m)`; for `m >= c - 2a` the result must be
/// the small-c case.
pub fn shifted_family_check(a: u64, b: u64, c: u64, m: u64) -> Result<ShiftOutcome> {
    check_triple(a, b, c)?;
    let shifted = (a + m, b + m, c + m);
    let g = gcd_all(&[shifted.0, shifted.1, shifted.2]);
    if g != 1 {
        return Ok(ShiftOutcome::NonCoprime { shifted, gcd: g });
    }
    let report = classify_symmetric4(shifted.0, shifted.1, shifted.2)?;
    if m + 2 * a >= c && report.verdict != Symmetric4Verdict::CmSmallC {
        return Err(Error::InternalInconsistency(format!(
            "shift by {m} >= c - 2a gives {} instead of CM_SmallC",
            report.verdict
        )));
    }
    Ok(ShiftOutcome::Classified(report))
}

fn products(u: [ExpVec; 3], k: u64, keep: impl Fn(u64, u64, u64) -> bool) -> Result<BTreeSet<ExpVec>> {
    let mut out = BTreeSet::new();
    for k1 in 0..=k {
        for k2 in 0..=k - k1 {
            let k3 = k - k1 - k2;
            if keep(k1, k2, k3) {
                out.insert(u[0].pow(k1)?.mul(u[1].pow(k2)?)?.mul(u[2].pow(k3)?)?);
            }
        }
    }
    Ok(out)
}

/// For the large-c case: `G(I^k)` is the union of
/// `{u_1^{k_1} u_2^{k_2} u_3^{k_3} : k_1 = 0 or k_3 < r - 1}` and its mirror
/// image in `u_4, u_3, u_2`, and the two sets meet in `G((u_2, u_3)^k)`.
///
/// The bound `r - 1` is the one forced by `F((u_1, u_2, u_3)) =
/// K[z_1, z_2, z_3] / (z_1 z_3^{r-1})`; with `k_3 < r` the set contains the
/// non-minimal product `u_1 u_3^{r-1}`.
pub fn verify_large_c_generators(a: u64, b: u64, c: u64, k: u32) -> Result<bool> {
    let report = classify_symmetric4(a, b, c)?;
    if report.verdict != Symmetric4Verdict::CmLargeC {
        return Err(Error::NotApplicable(format!(
            "({a}, {b}, {c}) is {}, not CM_LargeC",
            report.verdict
        )));
    }
    if !(1..=PRESENTATION_CHECK_DEGREE).contains(&k) {
        return Err(Error::NotApplicable(format!("need 1 <= k <= 6, got {k}")));
    }
    let ideal = symmetric4_ideal(a, b, c)?;
    let u = ideal.gens();
    let (r, k) = (report.r, k as u64);
    let first = products([u[0], u[1], u[2]], k, |k1, _, k3| k1 == 0 || k3 + 1 < r)?;
    let second = products([u[3], u[2], u[1]], k, |k4, _, k2| k4 == 0 || k2 + 1 < r)?;
    let middle: BTreeSet<ExpVec> = MonomialIdeal::new([u[1], u[2]])?
        .power(k as u32)?
        .gens()
        .iter()
        .copied()
        .collect();
    let all: BTreeSet<ExpVec> = ideal.power(k as u32)?.gens().iter().copied().collect();
    let union: BTreeSet<ExpVec> = first.union(&second).copied().collect();
    let meet: BTreeSet<ExpVec> = first.intersection(&second).copied().collect();
    Ok(union == all && meet == middle)
}

/// Verdicts for every coprime `0 < a < b < c` within the bounds.
pub fn scan_symmetric4(amax: u64, bmax: u64, cmax: u64) -> Result<Vec<Symmetric4Report>> {
    let triples: Vec<(u64, u64, u64)> = (1..=amax)
        .flat_map(|a| (a + 1..=bmax).flat_map(move |b| (b + 1..=cmax).map(move |c| (a, b, c))))
        .filter(|&(a, b, c)| gcd_all(&[a, b, c]) == 1)
        .collect();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        triples.par_iter().map(|&(a, b, c)| classify_symmetric4(a, b, c)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        triples.iter().map(|&(a, b, c)| classify_symmetric4(a, b, c)).collect()
    }
}
