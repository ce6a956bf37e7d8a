//! Numerical semigroups, Apéry sets, and the Apéry-set test for
//! arithmetical Cohen–Macaulayness of affine semigroups in `ℕ^2`.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_all(xs: &[u64]) -> u64 {
    xs.iter().fold(0, |g, &x| gcd(g, x))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalSemigroup {
    /// Sorted, distinct, positive.
    generators: Vec<u64>,
}

impl NumericalSemigroup {
    /// Zeros and duplicates are dropped; at least one positive generator is required.
    pub fn new(gens: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set: BTreeSet<u64> = gens.into_iter().filter(|&g| g > 0).collect();
        if set.is_empty() {
            return Err(Error::InvalidArgument("semigroup needs a positive generator".into()));
        }
        Ok(NumericalSemigroup { generators: set.into_iter().collect() })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn gcd(&self) -> u64 {
        gcd_all(&self.generators)
    }
}

/// Membership by dynamic programming over `0..=n`.
pub fn ns_contains(s: &NumericalSemigroup, n: u64) -> bool {
    let n = n as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for v in 1..=n {
        reach[v] = s.generators.iter().any(|&g| g as usize <= v && reach[v - g as usize]);
    }
    reach[n]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyResult {
    pub a: u64,
    /// Sorted ascending; exactly one element per residue class mod `a`.
    pub elements: Vec<u64>,
}

impl AperyResult {
    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// `Ap(a, S) = {s ∈ S : s - a ∉ S}`, computed as the least element of `S`
/// in each residue class mod `a` (shortest paths on the residue graph).
pub fn apery_set(s: &NumericalSemigroup, a: u64) -> Result<AperyResult> {
    if s.gcd() != 1 {
        return Err(Error::InfiniteApery(s.gcd()));
    }
    if a == 0 || !ns_contains(s, a) {
        return Err(Error::NotInSemigroup(a));
    }
    let n = a as usize;
    let mut dist = vec![u64::MAX; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in &s.generators {
            let next = (r + (g % a) as usize) % n;
            let nd = d.checked_add(g).ok_or(Error::Overflow)?;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    let mut elements = dist;
    elements.sort_unstable();
    Ok(AperyResult { a, elements })
}

/// `{0, a, 2a, ..., (b-1)a, b, 2b, ..., ab}`, the Apéry set of `a + b` in
/// `⟨a, b, a+b⟩` for coprime `a < b`.
pub fn apery_closed_form(a: u64, b: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (0..b).map(|i| i * a).chain((1..=a).map(|j| j * b)).collect();
    out.sort_unstable();
    out
}

/// One `ν ∈ B_1 \ {0}` with its least second coordinate and a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuEntry {
    pub nu: u64,
    pub mu: u64,
    /// Multiplicity of each generator in a representation of `(ν, μ)`.
    pub decomposition: Vec<u64>,
    pub in_b2: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmDiagnostics {
    pub generators: Vec<(u64, u64)>,
    pub n: u64,
    pub b1: Vec<u64>,
    pub b2: Vec<u64>,
    pub entries: Vec<MuEntry>,
}

impl CmDiagnostics {
    /// Entries whose `μ(ν)` falls outside `B_2`.
    pub fn failures(&self) -> impl Iterator<Item = &MuEntry> {
        self.entries.iter().filter(|e| !e.in_b2)
    }
}

/// Least second coordinate over `S` for every first coordinate `<= max`,
/// with the last generator used. Unbounded knapsack over generators whose
/// first coordinate is positive.
fn min_second_coordinate(gens: &[(u64, u64)], max: u64) -> Result<Vec<Option<(u64, usize)>>> {
    let mut best: Vec<Option<(u64, usize)>> = vec![None; max as usize + 1];
    best[0] = Some((0, usize::MAX));
    for v in 1..=max as usize {
        for (idx, &(g1, g2)) in gens.iter().enumerate() {
            if g1 == 0 || g1 as usize > v {
                continue;
            }
            if let Some((prev, _)) = best[v - g1 as usize] {
                let cand = prev.checked_add(g2).ok_or(Error::Overflow)?;
                if best[v].is_none_or(|(cur, _)| cand < cur) {
                    best[v] = Some((cand, idx));
                }
            }
        }
    }
    Ok(best)
}

/// Affine semigroup `S ⊂ ℕ^2` generated by `gens` is arithmetically
/// Cohen–Macaulay iff `{0} ∪ {μ(ν) : 0 ≠ ν ∈ B_1} = B_2`, where
/// `B_i = Ap(n, S_i)`, `S_i` is the projection to coordinate `i`, and
/// `μ(ν) = min{μ : (ν, μ) ∈ S}`.
pub fn apery_cm_test(gens: &[(u64, u64)], n: u64) -> Result<(bool, CmDiagnostics)> {
    let s1 = NumericalSemigroup::new(gens.iter().map(|g| g.0))?;
    let s2 = NumericalSemigroup::new(gens.iter().map(|g| g.1))?;
    let b1 = apery_set(&s1, n)?;
    let b2 = apery_set(&s2, n)?;
    let max = *b1.elements.last().expect("Apéry sets are nonempty");
    let best = min_second_coordinate(gens, max)?;

    let mut entries = Vec::with_capacity(b1.elements.len() - 1);
    for &nu in &b1.elements[1..] {
        let (mu, _) = best[nu as usize].ok_or_else(|| {
            Error::InternalInconsistency(format!("{nu} lies in S_1 but no point of S has it"))
        })?;
        let mut decomposition = vec![0; gens.len()];
        let mut v = nu as usize;
        while v > 0 {
            let (_, idx) = best[v].expect("predecessor of a reachable value is reachable");
            decomposition[idx] += 1;
            v -= gens[idx].0 as usize;
        }
        entries.push(MuEntry { nu, mu, decomposition, in_b2: b2.contains(mu) });
    }

    let mut mus: Vec<u64> = std::iter::once(0).chain(entries.iter().map(|e| e.mu)).collect();
    mus.sort_unstable();
    let is_cm = mus == b2.elements;
    Ok((
        is_cm,
        CmDiagnostics { generators: gens.to_vec(), n, b1: b1.elements, b2: b2.elements, entries },
    ))
}

/// Cohen–Macaulay test for the projective monomial curve with exponents
/// `0 < n_1 < ... < n_d`: the semigroup generated by `(0, n_d)`,
/// `(n_i, n_d - n_i)` and `(n_d, 0)`.
pub fn cn_is_cm(ns: &[u64]) -> Result<(bool, CmDiagnostics)> {
    let set: BTreeSet<u64> = ns.iter().copied().filter(|&n| n > 0).collect();
    let sorted: Vec<u64> = set.into_iter().collect();
    let Some(&nd) = sorted.last() else {
        return Err(Error::InvalidArgument("need at least one positive exponent".into()));
    };
    let g = gcd_all(&sorted);
    if g != 1 {
        return Err(Error::InfiniteApery(g));
    }
    let gens: Vec<(u64, u64)> = std::iter::once((0, nd))
        .chain(sorted.iter().map(|&n| (n, nd - n)))
        .collect();
    apery_cm_test(&gens, nd)
}
