//! Exhaustive and randomized axiom checking over small soft-set spaces.
//!
//! Pair and triple axioms are checked on every group of instances that
//! share a universe. Seed instances form the first groups, followed by the
//! enumerated space for universe sizes `1..=max_universe`. The reported
//! witness is the first violation in that order, so results do not depend
//! on how the work is split across threads.

mod bounds;
mod enumerate;
mod predicate;
mod random;
mod search;
mod shrink;

use std::fmt;
use std::str::FromStr;

use crate::measures::DistanceMeasureId;
use crate::t1::{Containment, TypeOneSoftSet};
use crate::t2::TypeTwoSoftSet;

pub use bounds::{SearchBounds, SearchMode, DEFAULT_PAIR_CAP, DEFAULT_TRIPLE_CAP, DEFAULT_TRIPLE_SAMPLES};
pub use enumerate::{count_t1, count_t2, enumerate_t1, enumerate_t2};
pub use predicate::violates;
pub use random::{
    random_chain_t1, random_chain_t2, random_deterministic_t2, random_disjoint_pair, random_equivalent_twin,
    random_pair_t1, random_pair_t2, random_relabeled_twin, random_t1, random_t2, random_triple_t1, random_triple_t2,
};
pub use search::{check_entropy_axioms, check_similarity_axioms, classify_distance, run};
pub use shrink::minimize_witness;

/// One soft set of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    T1(TypeOneSoftSet),
    T2(TypeTwoSoftSet),
}

impl Instance {
    pub fn as_t1(&self) -> Option<&TypeOneSoftSet> {
        match self {
            Instance::T1(s) => Some(s),
            Instance::T2(_) => None,
        }
    }

    pub fn as_t2(&self) -> Option<&TypeTwoSoftSet> {
        match self {
            Instance::T2(s) => Some(s),
            Instance::T1(_) => None,
        }
    }

    pub fn universe_len(&self) -> usize {
        match self {
            Instance::T1(s) => s.universe().len(),
            Instance::T2(s) => s.universe().len(),
        }
    }

    /// Universe size plus parameter and image-element counts; shrinking
    /// strictly decreases this.
    pub fn size(&self) -> usize {
        match self {
            Instance::T1(s) => s.param_count() + s.images().values().map(|i| i.len()).sum::<usize>(),
            Instance::T2(s) => s
                .inners()
                .values()
                .map(|inner| 1 + inner.param_count() + inner.images().values().map(|i| i.len()).sum::<usize>())
                .sum(),
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::T1(s) => s.fmt(f),
            Instance::T2(s) => s.fmt(f),
        }
    }
}

impl From<TypeOneSoftSet> for Instance {
    fn from(s: TypeOneSoftSet) -> Self {
        Instance::T1(s)
    }
}

impl From<TypeTwoSoftSet> for Instance {
    fn from(s: TypeTwoSoftSet) -> Self {
        Instance::T2(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimilarityTarget {
    Profile,
    Sm,
    Sd(DistanceMeasureId),
    Se,
}

/// What the lab is asked to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LabTarget {
    Distance(DistanceMeasureId),
    Entropy,
    Similarity(SimilarityTarget),
}

impl LabTarget {
    /// Whether the target's inputs are Type-1 soft sets.
    pub fn is_t1(self) -> bool {
        matches!(self, LabTarget::Distance(id) if id.is_t1())
    }
}

impl fmt::Display for LabTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabTarget::Distance(id) => write!(f, "{id}"),
            LabTarget::Entropy => f.write_str("Em"),
            LabTarget::Similarity(SimilarityTarget::Profile) => f.write_str("profile"),
            LabTarget::Similarity(SimilarityTarget::Sm) => f.write_str("sm"),
            LabTarget::Similarity(SimilarityTarget::Sd(id)) => write!(f, "sd:{id}"),
            LabTarget::Similarity(SimilarityTarget::Se) => f.write_str("se"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown check target `{0}`")]
pub struct UnknownTarget(pub String);

impl FromStr for LabTarget {
    type Err = UnknownTarget;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || UnknownTarget(s.to_string());
        Ok(match s {
            "Em" => LabTarget::Entropy,
            "profile" => LabTarget::Similarity(SimilarityTarget::Profile),
            "sm" => LabTarget::Similarity(SimilarityTarget::Sm),
            "se" => LabTarget::Similarity(SimilarityTarget::Se),
            _ => match s.strip_prefix("sd:") {
                Some(code) => {
                    let id: DistanceMeasureId = code.parse().map_err(|_| bad())?;
                    if id.is_t1() {
                        return Err(bad());
                    }
                    LabTarget::Similarity(SimilarityTarget::Sd(id))
                }
                None => LabTarget::Distance(s.parse().map_err(|_| bad())?),
            },
        })
    }
}

/// Axiom identifiers. Two-way axioms are split: the plain id is the
/// direction from the structural relation to the value condition, and the
/// `*Converse` id is the way back.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    M1,
    M2,
    M3,
    M4,
    M5,
    D1,
    D2,
    D3,
    D3Converse,
    D4,
    D5,
    /// Exact additivity of a Type-2 distance along containment chains.
    ChainAdditivity,
    E1,
    E2,
    E3,
    E4,
    E4Converse,
    S1,
    S2,
    S3,
    S3Converse,
    S4,
    P1,
    P2,
    P3,
    P3Converse,
    P4,
    P5,
}

impl AxiomId {
    pub fn code(self) -> &'static str {
        use AxiomId::*;
        match self {
            M1 => "M1",
            M2 => "M2",
            M3 => "M3",
            M4 => "M4",
            M5 => "M5",
            D1 => "d1",
            D2 => "d2",
            D3 => "d3",
            D3Converse => "d3-converse",
            D4 => "d4",
            D5 => "d5",
            ChainAdditivity => "chain-additivity",
            E1 => "e1",
            E2 => "e2",
            E3 => "e3",
            E4 => "e4",
            E4Converse => "e4-converse",
            S1 => "s1",
            S2 => "s2",
            S3 => "s3",
            S3Converse => "s3-converse",
            S4 => "s4",
            P1 => "s′1",
            P2 => "s′2",
            P3 => "s′3",
            P3Converse => "s′3-converse",
            P4 => "s′4",
            P5 => "s′5",
        }
    }

    /// How many soft sets a witness for this axiom holds.
    pub fn arity(self) -> usize {
        use AxiomId::*;
        match self {
            E1 | E3 => 1,
            M3 | D4 | ChainAdditivity | S4 | P4 => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    /// No violation anywhere in the exhaustively searched space.
    HoldsOnSpace,
    /// No violation among sampled cases.
    HoldsOnSample,
    Fails,
}

impl VerdictStatus {
    pub fn holds(self) -> bool {
        self != VerdictStatus::Fails
    }

    pub fn code(self) -> &'static str {
        match self {
            VerdictStatus::HoldsOnSpace => "holds-on-space",
            VerdictStatus::HoldsOnSample => "holds-on-sample",
            VerdictStatus::Fails => "fails",
        }
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// A concrete violation: the soft sets in axiom order, e.g. `(f, g, h)` for
/// the triangle inequality `d(f, h) ≤ d(f, g) + d(g, h)` or a chain
/// `f ⊑ g ⊑ h`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub target: LabTarget,
    pub axiom: AxiomId,
    pub containment: Containment,
    pub instances: Vec<Instance>,
}

impl Witness {
    pub fn replay(&self) -> bool {
        violates(self)
    }

    pub fn size(&self) -> usize {
        self.instances.first().map_or(0, Instance::universe_len)
            + self.instances.iter().map(Instance::size).sum::<usize>()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomVerdict {
    pub axiom: AxiomId,
    pub status: VerdictStatus,
    /// Number of cases (instances, pairs, triples or chains) examined.
    pub cases: u64,
    pub witness: Option<Witness>,
    /// The witness after greedy shrinking.
    pub minimal: Option<Witness>,
}

impl AxiomVerdict {
    pub fn holds(&self) -> bool {
        self.status.holds()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MetricLevel {
    None,
    QuasiMetric,
    SemiMetric,
    PseudoMetric,
    Metric,
}

impl MetricLevel {
    pub fn code(self) -> &'static str {
        match self {
            MetricLevel::None => "none",
            MetricLevel::QuasiMetric => "quasi-metric",
            MetricLevel::SemiMetric => "semi-metric",
            MetricLevel::PseudoMetric => "pseudo-metric",
            MetricLevel::Metric => "metric",
        }
    }
}

impl fmt::Display for MetricLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MetricClassification {
    pub measure: DistanceMeasureId,
    pub level: MetricLevel,
    pub verdicts: Vec<AxiomVerdict>,
}

impl MetricClassification {
    pub fn verdict(&self, axiom: AxiomId) -> Option<&AxiomVerdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }
}

/// Level from the M1..M5 verdicts: M1 and M2 give a quasi-metric and each
/// further axiom in order raises the level by one.
pub fn metric_level(verdicts: &[AxiomVerdict]) -> MetricLevel {
    let holds = |a| verdicts.iter().any(|v| v.axiom == a && v.holds());
    if !(holds(AxiomId::M1) && holds(AxiomId::M2)) {
        return MetricLevel::None;
    }
    let mut level = MetricLevel::QuasiMetric;
    for (axiom, next) in [
        (AxiomId::M3, MetricLevel::SemiMetric),
        (AxiomId::M4, MetricLevel::PseudoMetric),
        (AxiomId::M5, MetricLevel::Metric),
    ] {
        if !holds(axiom) {
            break;
        }
        level = next;
    }
    level
}

/// Result of [`run`]: all verdicts for one target.
#[derive(Clone, Debug, PartialEq)]
pub struct LabReport {
    pub target: LabTarget,
    pub bounds: SearchBounds,
    pub level: Option<MetricLevel>,
    pub verdicts: Vec<AxiomVerdict>,
    /// Instances per universe group, seeds first.
    pub groups: Vec<(String, usize)>,
}

impl LabReport {
    pub fn violation_found(&self) -> bool {
        self.verdicts.iter().any(|v| !v.holds())
    }

    pub fn verdict(&self, axiom: AxiomId) -> Option<&AxiomVerdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }
}
