//! Equivalence of Type-2 soft sets: label bijections on primary and
//! underlying parameters that carry every element's trace sets onto the
//! other soft set's trace sets.
//!
//! `ψ(𝓕*_x) = 𝓖*_x` for all `x` holds exactly when `ψ` maps each primary
//! label to one with the same incidence column (the set of elements whose
//! trace contains it), and likewise for `Γ`. The two bijections are
//! therefore searched independently.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::t2::TypeTwoSoftSet;
use crate::universe::ElementSet;

/// Largest `|A|` or `|E_A|` the bijection search accepts.
pub const SEARCH_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub psi: BTreeMap<String, String>,
    pub gamma: BTreeMap<String, String>,
}

/// Incidence data of a soft set, precomputed once for repeated comparisons.
#[derive(Clone, Debug)]
pub struct TraceProfile {
    primary: Vec<String>,
    underlying: Vec<String>,
    primary_columns: Vec<ElementSet>,
    underlying_columns: Vec<ElementSet>,
    sizes: Vec<(usize, usize)>,
}

impl TraceProfile {
    pub fn of(f: &TypeTwoSoftSet) -> Self {
        let primary: Vec<String> = f.primary().map(str::to_string).collect();
        let underlying: Vec<String> = f.underlying().iter().cloned().collect();
        let primary_columns = f.inners().values().map(|set| set.element_cover()).collect();
        let mut by_label: BTreeMap<&str, ElementSet> = BTreeMap::new();
        for set in f.inners().values() {
            for (q, img) in set.images() {
                let col = by_label.entry(q.as_str()).or_default();
                *col = col.union(img);
            }
        }
        let underlying_columns = underlying
            .iter()
            .map(|q| by_label.remove(q.as_str()).unwrap_or_default())
            .collect();
        Self {
            primary,
            underlying,
            primary_columns,
            underlying_columns,
            sizes: f.trace_sizes(),
        }
    }

    /// The necessary conditions: parameter-set sizes and per-element trace sizes.
    pub fn signature(&self) -> (usize, usize, &[(usize, usize)]) {
        (self.primary.len(), self.underlying.len(), &self.sizes)
    }
}

/// Backtracking over bijections `from → to` that preserve columns.
fn match_columns(from: &[ElementSet], to: &[ElementSet]) -> Option<Vec<usize>> {
    fn go(i: usize, from: &[ElementSet], to: &[ElementSet], used: &mut [bool], out: &mut Vec<usize>) -> bool {
        if i == from.len() {
            return true;
        }
        for j in 0..to.len() {
            if used[j] || to[j] != from[i] {
                continue;
            }
            used[j] = true;
            out.push(j);
            if go(i + 1, from, to, used, out) {
                return true;
            }
            out.pop();
            used[j] = false;
        }
        false
    }
    if from.len() != to.len() {
        return None;
    }
    let mut a: Vec<&ElementSet> = from.iter().collect();
    let mut b: Vec<&ElementSet> = to.iter().collect();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let mut used = vec![false; to.len()];
    let mut out = Vec::with_capacity(from.len());
    go(0, from, to, &mut used, &mut out).then_some(out)
}

/// Equivalence search on precomputed profiles, without the size guard.
pub fn equivalence_between(p: &TraceProfile, q: &TraceProfile) -> Option<EquivalenceWitness> {
    if p.signature() != q.signature() {
        return None;
    }
    let psi = match_columns(&p.primary_columns, &q.primary_columns)?;
    let gamma = match_columns(&p.underlying_columns, &q.underlying_columns)?;
    Some(EquivalenceWitness {
        psi: psi
            .into_iter()
            .enumerate()
            .map(|(i, j)| (p.primary[i].clone(), q.primary[j].clone()))
            .collect(),
        gamma: gamma
            .into_iter()
            .enumerate()
            .map(|(i, j)| (p.underlying[i].clone(), q.underlying[j].clone()))
            .collect(),
    })
}

pub fn are_equivalent(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Result<Option<EquivalenceWitness>> {
    if f.universe() != g.universe() {
        return Err(Error::UniverseMismatch);
    }
    if f.primary_count() != g.primary_count() || f.underlying().len() != g.underlying().len() {
        return Ok(None);
    }
    if f.primary_count() > SEARCH_LIMIT || f.underlying().len() > SEARCH_LIMIT {
        return Err(Error::SearchBudgetExceeded {
            primary: f.primary_count(),
            underlying: f.underlying().len(),
            limit: SEARCH_LIMIT,
        });
    }
    Ok(equivalence_between(&TraceProfile::of(f), &TraceProfile::of(g)))
}

impl EquivalenceWitness {
    /// Checks the defining condition directly against both soft sets.
    pub fn verify(&self, f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> bool {
        let bijective = |map: &BTreeMap<String, String>, dom: Vec<&str>, cod: Vec<&str>| {
            let mut image: Vec<&str> = map.values().map(String::as_str).collect();
            image.sort();
            let keys: Vec<&str> = map.keys().map(String::as_str).collect();
            keys == dom && image == cod
        };
        let mut cod: Vec<&str> = g.primary().collect();
        cod.sort();
        if !bijective(&self.psi, f.primary().collect(), cod) {
            return false;
        }
        if !bijective(
            &self.gamma,
            f.underlying().iter().map(String::as_str).collect(),
            g.underlying().iter().map(String::as_str).collect(),
        ) {
            return false;
        }
        f.universe().labels().iter().all(|x| {
            let (a, b) = (f.trace_sets(x).unwrap(), g.trace_sets(x).unwrap());
            let star: std::collections::BTreeSet<String> = a.star.iter().map(|p| self.psi[p].clone()).collect();
            let dstar: std::collections::BTreeSet<String> =
                a.double_star.iter().map(|q| self.gamma[q].clone()).collect();
            star == b.star && dstar == b.double_star
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            psi: self.psi.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
            gamma: self.gamma.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }
}
