//! Browser bindings: three JSON-returning entry points used by `www/index.html`.
//!
//! Each binding wraps a plain Rust function so the logic is testable natively.

use fibercone::depth::ProbeConfig;
use fibercone::parse::parse_ideal;
use fibercone::powers::{default_reduction_bound, pure_power_reduction, reduction_number};
use fibercone::report::{analyze, scan_report, AnalyzeOptions};
use fibercone::shape::classify_shape;
use fibercone::MonomialIdeal;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Caps keep the page responsive.
pub const MAX_POWER: u32 = 8;
pub const MAX_SCAN_C: u64 = 40;

#[derive(Debug, Serialize)]
pub struct PowerView {
    pub k: u32,
    pub gens: Vec<(u64, u64)>,
    pub is_concave: bool,
    pub is_convex: bool,
    pub corners: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct StaircaseView {
    pub normalized: Vec<(u64, u64)>,
    pub powers: Vec<PowerView>,
    pub reduction_number: Option<u32>,
}

fn pairs(i: &MonomialIdeal) -> Vec<(u64, u64)> {
    i.gens().iter().map(|g| (g.a, g.b)).collect()
}

pub fn staircase_view(ideal: &str, kmax: u32) -> Result<StaircaseView, String> {
    let kmax = kmax.clamp(1, MAX_POWER);
    let (ideal, _) = parse_ideal(ideal).map_err(|e| e.to_string())?.normalize();
    let powers = ideal.powers_up_to(kmax).map_err(|e| e.to_string())?;
    let mut views = Vec::with_capacity(kmax as usize);
    for (k, p) in powers.iter().enumerate().skip(1) {
        let (is_concave, is_convex, corners) = if p.mu() >= 2 {
            let r = classify_shape(p).map_err(|e| e.to_string())?;
            (r.is_concave, r.is_convex, r.corner_indices)
        } else {
            (true, true, vec![1])
        };
        views.push(PowerView { k: k as u32, gens: pairs(p), is_concave, is_convex, corners });
    }
    let reduction_number = if ideal.mu() >= 2 {
        let j = pure_power_reduction(&ideal).map_err(|e| e.to_string())?;
        reduction_number(&ideal, &j, default_reduction_bound(&ideal).min(12))
            .map_err(|e| e.to_string())?
            .reduction_number
    } else {
        Some(0)
    };
    Ok(StaircaseView { normalized: pairs(&ideal), powers: views, reduction_number })
}

pub fn fiber_report_json(ideal: &str) -> Result<String, String> {
    let ideal = parse_ideal(ideal).map_err(|e| e.to_string())?;
    let opts = AnalyzeOptions {
        normalize: true,
        fiber: true,
        probe: ProbeConfig { kmax: 5, trials: 2, ..ProbeConfig::default() },
    };
    let report = analyze(&ideal, &opts).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

pub fn scan_json(amax: u64, bmax: u64, cmax: u64) -> Result<String, String> {
    if cmax > MAX_SCAN_C {
        return Err(format!("cmax is limited to {MAX_SCAN_C} in the browser"));
    }
    let report = scan_report(amax, bmax, cmax).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn staircase(ideal: &str, kmax: u32) -> Result<String, JsError> {
    let view = staircase_view(ideal, kmax).map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&view).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn fiber(ideal: &str) -> Result<String, JsError> {
    fiber_report_json(ideal).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn scan(amax: u32, bmax: u32, cmax: u32) -> Result<String, JsError> {
    scan_json(amax.into(), bmax.into(), cmax.into()).map_err(|e| JsError::new(&e))
}
