//! Versioned, serializable reports shared by the CLI and the browser demo,
//! with plain-text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::depth::{depth_verdict, Certificate, DepthKind, ProbeConfig, ProbeTranscript};
use crate::error::{Error, Result};
use crate::monomial::{ExpVec, MonomialIdeal};
use crate::powers::{
    default_reduction_bound, power_shape_report, pure_power_reduction, reduction_number,
    ReductionResult,
};
use crate::presentation::{
    build_presentation, degree_two_kernel_matches, hilbert_data, initial_ideal, HilbertData,
    PresentationIdeal, TermOrder,
};
use crate::semigroup::{apery_set, cn_is_cm, AperyResult, CmDiagnostics, NumericalSemigroup};
use crate::shape::{classify_shape, ShapeReport};
use crate::symmetric::{
    classify_symmetric4, scan_symmetric4, symmetric4_ideal, Symmetric4Report, Symmetric4Verdict,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedInfo {
    pub ideal: MonomialIdeal,
    /// Common factor divided out; `1` when the input was already normalized.
    pub factor: ExpVec,
    pub applied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationSummary {
    pub order: TermOrder,
    pub relations: Vec<String>,
    pub binomial_count: usize,
    pub monomial_count: usize,
    pub groebner_verified: bool,
    pub degree_two_kernel_verified: bool,
    pub initial_ideal: Vec<String>,
    pub ideal: PresentationIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub input: MonomialIdeal,
    pub normalized: NormalizedInfo,
    pub shape: Option<ShapeReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertData>,
    pub verdict: DepthKind,
    pub certificates: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transcript: Option<ProbeTranscript>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Divide out the common factor instead of rejecting unnormalized input.
    pub normalize: bool,
    /// Include the fiber-cone presentation and Hilbert data.
    pub fiber: bool,
    pub probe: ProbeConfig,
}


fn normalized_info(input: &MonomialIdeal, normalize: bool) -> Result<NormalizedInfo> {
    if input.is_normalized() {
        return Ok(NormalizedInfo { ideal: input.clone(), factor: ExpVec::ONE, applied: false });
    }
    if !normalize {
        return Err(Error::NotNormalized);
    }
    let (ideal, factor) = input.normalize();
    Ok(NormalizedInfo { ideal, factor, applied: true })
}

fn presentation_summary(ideal: &MonomialIdeal) -> Result<PresentationSummary> {
    let p = build_presentation(ideal)?;
    let init = initial_ideal(&p)?;
    if !degree_two_kernel_matches(ideal, &p)? {
        return Err(Error::InternalInconsistency(
            "quadratic relations do not span the degree-2 kernel".into(),
        ));
    }
    Ok(PresentationSummary {
        order: p.order,
        relations: p.to_text().lines().map(str::to_owned).collect(),
        binomial_count: p.binomials.len(),
        monomial_count: p.monomials.len(),
        groebner_verified: true,
        degree_two_kernel_verified: true,
        initial_ideal: init.iter().map(ToString::to_string).collect(),
        ideal: p,
    })
}

pub fn analyze(input: &MonomialIdeal, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let normalized = normalized_info(input, opts.normalize)?;
    let ideal = &normalized.ideal;
    let shape = if ideal.mu() >= 2 { Some(classify_shape(ideal)?) } else { None };
    let classified = shape.as_ref().is_some_and(ShapeReport::is_classified);

    let mut certificates = Vec::new();
    let (presentation, hilbert) = if opts.fiber {
        let presentation = if classified {
            certificates.push("Gröbner basis verified by Buchberger's criterion".to_owned());
            certificates.push("quadratic relations span the degree-2 kernel".to_owned());
            Some(presentation_summary(ideal)?)
        } else {
            None
        };
        (presentation, Some(hilbert_data(ideal, opts.probe.kmax)?))
    } else {
        (None, None)
    };

    let verdict = depth_verdict(ideal, &opts.probe)?;
    certificates.push(verdict.certificate.to_string());
    let transcript = match verdict.certificate {
        Certificate::Probe { transcript } => Some(transcript),
        _ => None,
    };
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        input: input.clone(),
        normalized,
        shape,
        presentation,
        hilbert,
        verdict: verdict.kind,
        certificates,
        transcript,
    })
}

/// Lattice picture of the staircase: `o` generator, `#` inside the ideal,
/// `.` outside. `None` when the picture would exceed `max_side` cells a side.
pub fn staircase(ideal: &MonomialIdeal, max_side: u64) -> Option<String> {
    let g = ideal.gens();
    let width = g[0].a + 1;
    let height = g[g.len() - 1].b + 1;
    if width > max_side || height > max_side {
        return None;
    }
    let mut out = String::new();
    for y in (0..height).rev() {
        for x in 0..width {
            let p = ExpVec::new(x, y);
            let c = if ideal.is_minimal_generator(p) {
                'o'
            } else if ideal.contains(p) {
                '#'
            } else {
                '.'
            };
            out.push(c);
        }
        out.push('\n');
    }
    Some(out)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

impl AnalysisReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "ideal:       {}", self.input);
        if self.normalized.applied {
            let _ = writeln!(
                s,
                "normalized:  {} (divided by {})",
                self.normalized.ideal, self.normalized.factor
            );
        }
        let _ = writeln!(s, "generators:  {}", self.normalized.ideal.mu());
        match &self.shape {
            Some(sh) => {
                let class = match (sh.is_concave, sh.is_convex) {
                    (true, true) => "concave and convex",
                    (true, false) => "concave",
                    (false, true) => "convex",
                    (false, false) => "neither concave nor convex",
                };
                let _ = writeln!(s, "shape:       {class}");
                if sh.is_classified() {
                    let _ = writeln!(s, "corners:     {}", join(&sh.corner_indices));
                }
            }
            None => {
                let _ = writeln!(s, "shape:       principal");
            }
        }
        if let Some(p) = &self.presentation {
            let order = match p.order {
                TermOrder::RevLex => "reverse lexicographic",
                TermOrder::Lex => "lexicographic",
            };
            let _ = writeln!(
                s,
                "relations:   {} ({} binomials, {} monomials), {order} order",
                p.relations.len(),
                p.binomial_count,
                p.monomial_count
            );
            for r in &p.relations {
                let _ = writeln!(s, "  {r}");
            }
            let _ = writeln!(s, "initial:     ({})", join(&p.initial_ideal));
        } else if self.hilbert.is_some() {
            let _ = writeln!(s, "relations:   not available (neither concave nor convex)");
        }
        if let Some(h) = &self.hilbert {
            let _ = writeln!(s, "mu(I^k):     {}", join(&h.mu_sequence));
            match &h.numerator {
                Some(n) => {
                    let _ = writeln!(s, "hilbert:     numerator [{}] over (1-t)^2", join(n));
                }
                None => {
                    let _ = writeln!(s, "hilbert:     numerator not settled within K");
                }
            }
        }
        let _ = writeln!(s, "depth:       {}", self.verdict);
        for c in &self.certificates {
            let _ = writeln!(s, "  certificate: {c}");
        }
        if let Some(t) = &self.transcript {
            for (i, tr) in t.trials.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "  trial {i}: kernel(l1) [{}], F/(l1,l2) dims [{}], evidence {}",
                    join(&tr.kernel_l1),
                    join(&tr.quotient_dims),
                    tr.evidence
                );
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerShape {
    pub k: u32,
    pub is_concave: bool,
    pub is_convex: bool,
    pub corner_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowersReport {
    pub schema_version: u32,
    pub input: MonomialIdeal,
    pub kmax: u32,
    /// `μ(I^k)` for `k = 0..=kmax`.
    pub mu: Vec<u64>,
    /// Present for normalized ideals with at least two generators.
    pub shapes: Option<Vec<PowerShape>>,
    /// `J = (u_1, u_m)`; absent for principal ideals.
    pub reduction: Option<ReductionResult>,
}

pub fn powers_report(ideal: &MonomialIdeal, kmax: u32, bound: Option<u32>) -> Result<PowersReport> {
    if kmax == 0 {
        return Err(Error::InvalidArgument("K must be positive".into()));
    }
    let powers = ideal.powers_up_to(kmax)?;
    let mu = powers.iter().map(|p| p.mu() as u64).collect();
    let shapes = if ideal.mu() >= 2 && ideal.is_normalized() {
        let base = classify_shape(ideal)?;
        let reports: Vec<(u32, ShapeReport)> = if base.is_classified() {
            power_shape_report(ideal, kmax)?
        } else {
            (1..=kmax as usize)
                .map(|k| Ok((k as u32, classify_shape(&powers[k])?)))
                .collect::<Result<_>>()?
        };
        Some(
            reports
                .into_iter()
                .map(|(k, r)| PowerShape {
                    k,
                    is_concave: r.is_concave,
                    is_convex: r.is_convex,
                    corner_indices: r.corner_indices,
                })
                .collect(),
        )
    } else {
        None
    };
    let reduction = if ideal.mu() >= 2 {
        let j = pure_power_reduction(ideal)?;
        let bound = bound.unwrap_or_else(|| default_reduction_bound(ideal));
        Some(reduction_number(ideal, &j, bound)?)
    } else {
        None
    };
    Ok(PowersReport { schema_version: SCHEMA_VERSION, input: ideal.clone(), kmax, mu, shapes, reduction })
}

impl PowersReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "ideal: {}", self.input);
        let _ = writeln!(s, "{:>4}  {:>8}  shape", "k", "mu(I^k)");
        for (k, mu) in self.mu.iter().enumerate() {
            let shape = self
                .shapes
                .as_ref()
                .and_then(|v| v.iter().find(|p| p.k as usize == k))
                .map(|p| match (p.is_concave, p.is_convex) {
                    (true, true) => "concave, convex",
                    (true, false) => "concave",
                    (false, true) => "convex",
                    (false, false) => "-",
                })
                .unwrap_or("");
            let _ = writeln!(s, "{k:>4}  {mu:>8}  {shape}");
        }
        if let Some(r) = &self.reduction {
            let _ = writeln!(s, "J = {}", r.j);
            match r.reduction_number {
                Some(n) => {
                    let _ = writeln!(s, "reduction number r_J(I) = {n}");
                }
                None => {
                    let _ = writeln!(s, "no reduction number up to {}", r.search_bound);
                }
            }
            if let Some((k, u)) = r.witness {
                let _ = writeln!(s, "witness: {u} in G(I^{k}) \\ J I^{}", k - 1);
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricReport {
    pub schema_version: u32,
    pub ideal: MonomialIdeal,
    pub classification: Symmetric4Report,
}

pub fn symmetric_report(a: u64, b: u64, c: u64) -> Result<SymmetricReport> {
    let classification = classify_symmetric4(a, b, c)?;
    Ok(SymmetricReport { schema_version: SCHEMA_VERSION, ideal: symmetric4_ideal(a, b, c)?, classification })
}

impl SymmetricReport {
    pub fn render_text(&self) -> String {
        let r = &self.classification;
        let mut s = String::new();
        let _ = writeln!(s, "ideal:    {}", self.ideal);
        let _ = writeln!(s, "(a,b,c):  ({}, {}, {}), r = {}", r.a, r.b, r.c, r.r);
        let _ = writeln!(s, "interval: [{}, {}]", r.interval.0, r.interval.1);
        let _ = writeln!(s, "verdict:  {}", r.verdict);
        if let Some(p) = &r.presentation {
            let _ = writeln!(s, "initial:  ({}), counts checked for k <= 6", join(p));
        }
        if let Some(cm) = r.cn_check {
            let _ = writeln!(s, "apery:    curve ({}, {}, {}) Cohen-Macaulay = {cm}", r.a, r.b, r.c);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupReport {
    pub schema_version: u32,
    pub generators: Vec<u64>,
    pub apery: AperyResult,
    pub is_cm: bool,
    pub diagnostics: CmDiagnostics,
}

/// Apéry set with respect to `a` (default: the largest generator) and the
/// Cohen–Macaulay test for the monomial curve with these exponents.
pub fn semigroup_report(gens: &[u64], a: Option<u64>) -> Result<SemigroupReport> {
    let s = NumericalSemigroup::new(gens.iter().copied())?;
    let a = a.unwrap_or(*s.generators().last().expect("nonempty"));
    let apery = apery_set(&s, a)?;
    let (is_cm, diagnostics) = cn_is_cm(s.generators())?;
    Ok(SemigroupReport {
        schema_version: SCHEMA_VERSION,
        generators: s.generators().to_vec(),
        apery,
        is_cm,
        diagnostics,
    })
}

impl SemigroupReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "semigroup: <{}>", join(&self.generators));
        let _ = writeln!(s, "Ap({}) = {{{}}}", self.apery.a, join(&self.apery.elements));
        let d = &self.diagnostics;
        let _ = writeln!(s, "B1 = {{{}}}", join(&d.b1));
        let _ = writeln!(s, "B2 = {{{}}}", join(&d.b2));
        for e in &d.entries {
            let mark = if e.in_b2 { "" } else { "  (not in B2)" };
            let _ = writeln!(s, "  nu = {:>4}  mu = {:>4}{mark}", e.nu, e.mu);
        }
        let _ = writeln!(s, "Cohen-Macaulay: {}", self.is_cm);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCell {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub verdict: Symmetric4Verdict,
    pub interval: (u64, u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub schema_version: u32,
    pub amax: u64,
    pub bmax: u64,
    pub cmax: u64,
    pub cells: Vec<ScanCell>,
    pub counts: BTreeMap<String, usize>,
}

pub fn scan_report(amax: u64, bmax: u64, cmax: u64) -> Result<ScanReport> {
    let mut cells: Vec<ScanCell> = scan_symmetric4(amax, bmax, cmax)?
        .into_iter()
        .map(|r| ScanCell { a: r.a, b: r.b, c: r.c, verdict: r.verdict, interval: r.interval })
        .collect();
    cells.sort_by_key(|c| (c.a, c.b, c.c));
    let mut counts = BTreeMap::new();
    for c in &cells {
        *counts.entry(c.verdict.as_str().to_owned()).or_insert(0) += 1;
    }
    Ok(ScanReport { schema_version: SCHEMA_VERSION, amax, bmax, cmax, cells, counts })
}

/// Two-letter cell codes for the scan grid.
pub fn verdict_code(v: Symmetric4Verdict) -> &'static str {
    match v {
        Symmetric4Verdict::CmConcave => "cv",
        Symmetric4Verdict::CmConvex => "cx",
        Symmetric4Verdict::CmSmallC => "sc",
        Symmetric4Verdict::CmLargeC => "lc",
        Symmetric4Verdict::CmEquigen => "eq",
        Symmetric4Verdict::NotCmEquigen => "NE",
        Symmetric4Verdict::UnknownInterval => "??",
    }
}

impl ScanReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "legend: sc small c, lc large c, cv concave, cx convex, eq equigenerated CM, \
             NE equigenerated not CM, ?? open interval, blank: not coprime"
        );
        for a in 1..=self.amax {
            let rows: Vec<u64> = (a + 1..=self.bmax).collect();
            if rows.is_empty() {
                continue;
            }
            let _ = writeln!(s, "\na = {a}");
            let _ = write!(s, "{:>6}", "b \\ c");
            for c in 1..=self.cmax {
                let _ = write!(s, "{c:>3}");
            }
            s.push('\n');
            for b in rows {
                let _ = write!(s, "{b:>6}");
                for c in 1..=self.cmax {
                    let code = self
                        .cells
                        .iter()
                        .find(|x| (x.a, x.b, x.c) == (a, b, c))
                        .map_or("", |x| verdict_code(x.verdict));
                    let _ = write!(s, "{code:>3}");
                }
                s.push('\n');
            }
        }
        let _ = writeln!(s);
        for (k, v) in &self.counts {
            let _ = writeln!(s, "{k}: {v}");
        }
        s
    }
}
