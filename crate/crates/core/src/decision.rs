//! Picking, for every primary parameter of an ideal soft set, the candidate
//! that scores best against it and the items both agree on.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::measures::similarity_profile;
use crate::t1::TypeOneSoftSet;
use crate::t2::TypeTwoSoftSet;

#[derive(Clone, Debug, PartialEq)]
pub struct ParameterDecision {
    pub param: String,
    /// Score of each candidate at this parameter, in input order.
    pub scores: Vec<BigRational>,
    pub winner: usize,
    /// Set when the maximum is shared or every score is zero.
    pub tie: bool,
    /// Ideal ∩ winner at this parameter.
    pub selection: TypeOneSoftSet,
}

impl ParameterDecision {
    /// Selected items grouped by underlying parameter, skipping parameters
    /// whose selection is empty.
    pub fn selected_items(&self) -> Vec<(&str, Vec<&str>)> {
        let universe = self.selection.universe();
        self.selection
            .images()
            .iter()
            .filter(|(_, set)| !set.is_empty())
            .map(|(p, set)| (p.as_str(), universe.labels_of(set).collect()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecisionReport {
    pub rows: Vec<ParameterDecision>,
}

impl DecisionReport {
    pub fn row(&self, param: &str) -> Option<&ParameterDecision> {
        self.rows.iter().find(|r| r.param == param)
    }

    pub fn winners(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.winner).collect()
    }
}

pub fn decide(ideal: &TypeTwoSoftSet, candidates: &[TypeTwoSoftSet]) -> Result<DecisionReport> {
    if candidates.is_empty() {
        return Err(Error::NoCandidates);
    }
    if candidates.iter().any(|c| c.universe() != ideal.universe()) {
        return Err(Error::UniverseMismatch);
    }
    let profiles = candidates
        .iter()
        .map(|c| similarity_profile(ideal, c))
        .collect::<Result<Vec<_>>>()?;

    let mut rows = Vec::with_capacity(ideal.primary_count());
    for (param, inner) in ideal.inners() {
        let scores: Vec<BigRational> = profiles
            .iter()
            .map(|p| p.get(param).cloned().unwrap_or_else(BigRational::zero))
            .collect();
        let mut winner = 0;
        for (i, s) in scores.iter().enumerate().skip(1) {
            if *s > scores[winner] {
                winner = i;
            }
        }
        let best = &scores[winner];
        let tie = best.is_zero() || scores.iter().filter(|s| *s == best).count() > 1;
        let selection = match candidates[winner].inner(param) {
            Some(other) => inner.intersection(other)?,
            None => TypeOneSoftSet::empty(ideal.universe()),
        };
        rows.push(ParameterDecision {
            param: param.clone(),
            scores,
            winner,
            tie,
            selection,
        });
    }
    Ok(DecisionReport { rows })
}
