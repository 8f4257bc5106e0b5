//! Direct re-evaluation of a witness through the public measure functions.

use num_rational::{BigRational, Rational64};
use num_traits::{One, ToPrimitive, Zero};

use crate::equivalence::are_equivalent;
use crate::lab::{AxiomId, Instance, LabTarget, SimilarityTarget, Witness};
use crate::measures::{
    entropy_t2, evaluate_t1, evaluate_t2, similarity_profile, similarity_sd, similarity_se, similarity_sm,
    DistanceMeasureId, MeasureValue, ParameterScoreProfile,
};
use crate::t1::Containment;
use crate::t2::TypeTwoSoftSet;

/// Slack for comparisons between the float-valued Kharal distances.
pub(crate) const EPS: f64 = 1e-9;

/// A distance value: exact, or a float for the Kharal measures.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Num {
    Q(Rational64),
    F(f64),
}

impl Num {
    fn f(self) -> f64 {
        match self {
            Num::Q(q) => *q.numer() as f64 / *q.denom() as f64,
            Num::F(x) => x,
        }
    }

    pub fn is_negative(self) -> bool {
        match self {
            Num::Q(q) => *q.numer() < 0,
            Num::F(x) => x < -EPS,
        }
    }

    pub fn is_zero(self) -> bool {
        match self {
            Num::Q(q) => q.is_zero(),
            Num::F(x) => x.abs() <= EPS,
        }
    }

    pub fn same(self, other: Num) -> bool {
        match (self, other) {
            (Num::Q(a), Num::Q(b)) => a == b,
            _ => (self.f() - other.f()).abs() <= EPS,
        }
    }

    pub fn exceeds_one(self) -> bool {
        match self {
            Num::Q(q) => q > Rational64::one(),
            Num::F(x) => x > 1.0 + EPS,
        }
    }

    /// `self` compared with `a + b`, by cross-multiplication for exact values.
    fn cmp_sum(self, a: Num, b: Num) -> std::cmp::Ordering {
        match (self, a, b) {
            (Num::Q(x), Num::Q(a), Num::Q(b)) => {
                let (xn, xd) = (*x.numer() as i128, *x.denom() as i128);
                let (an, ad) = (*a.numer() as i128, *a.denom() as i128);
                let (bn, bd) = (*b.numer() as i128, *b.denom() as i128);
                (xn * ad * bd).cmp(&((an * bd + bn * ad) * xd))
            }
            _ => {
                let diff = self.f() - (a.f() + b.f());
                if diff > EPS {
                    std::cmp::Ordering::Greater
                } else if diff < -EPS {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Equal
                }
            }
        }
    }

    pub fn exceeds_sum(self, a: Num, b: Num) -> bool {
        self.cmp_sum(a, b).is_gt()
    }

    pub fn equals_sum(self, a: Num, b: Num) -> bool {
        self.cmp_sum(a, b).is_eq()
    }
}

pub(crate) fn big_to_r64(r: &BigRational) -> Rational64 {
    Rational64::new(
        r.numer().to_i64().expect("similarity numerator fits i64"),
        r.denom().to_i64().expect("similarity denominator fits i64"),
    )
}

impl From<MeasureValue> for Num {
    fn from(v: MeasureValue) -> Self {
        match v {
            MeasureValue::Exact(r) => Num::Q(big_to_r64(&r)),
            MeasureValue::Real(x) => Num::F(x),
        }
    }
}

fn distance(id: DistanceMeasureId, a: &Instance, b: &Instance) -> Option<Num> {
    let v = match (a, b) {
        (Instance::T1(a), Instance::T1(b)) => evaluate_t1(id, a, b),
        (Instance::T2(a), Instance::T2(b)) => evaluate_t2(id, a, b),
        _ => return None,
    };
    v.ok().map(Num::from)
}

fn contained(a: &Instance, b: &Instance, mode: Containment) -> bool {
    match (a, b) {
        (Instance::T1(a), Instance::T1(b)) => a.contains_in(b, mode).unwrap_or(false),
        (Instance::T2(a), Instance::T2(b)) => a.contains_in(b, mode).unwrap_or(false),
        _ => false,
    }
}

fn chain(xs: &[Instance], mode: Containment) -> bool {
    contained(&xs[0], &xs[1], mode) && contained(&xs[1], &xs[2], mode)
}

fn distance_violation(id: DistanceMeasureId, axiom: AxiomId, xs: &[Instance], mode: Containment) -> Option<bool> {
    use AxiomId::*;
    let d = |i: usize, j: usize| distance(id, &xs[i], &xs[j]);
    Some(match axiom {
        M1 | D2 => d(0, 1)?.is_negative(),
        M2 | D1 => !d(0, 1)?.same(d(1, 0)?),
        M3 | D4 => d(0, 2)?.exceeds_sum(d(0, 1)?, d(1, 2)?),
        M4 | D3 => xs[0] == xs[1] && !d(0, 1)?.is_zero(),
        M5 | D3Converse => xs[0] != xs[1] && d(0, 1)?.is_zero(),
        D5 => d(0, 1)?.exceeds_one(),
        ChainAdditivity => chain(xs, mode) && !d(0, 2)?.equals_sum(d(0, 1)?, d(1, 2)?),
        _ => return None,
    })
}

pub(crate) fn equivalent(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Option<bool> {
    are_equivalent(f, g).ok().map(|w| w.is_some())
}

fn entropy_violation(axiom: AxiomId, xs: &[&TypeTwoSoftSet], mode: Containment) -> Option<bool> {
    use AxiomId::*;
    let e = |i: usize| entropy_t2(xs[i]);
    Some(match axiom {
        E1 => (xs[0].is_null() || xs[0].is_absolute()) && e(0) != Rational64::one(),
        E2 => xs[0].contains_in(xs[1], mode).ok()? && !xs[0].is_null() && e(0) > e(1),
        E3 => xs[0].is_deterministic() && !e(0).is_zero(),
        E4 => e(0) != e(1) && equivalent(xs[0], xs[1])?,
        E4Converse => e(0) == e(1) && !equivalent(xs[0], xs[1])?,
        _ => return None,
    })
}

fn scalar_similarity(target: SimilarityTarget, f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Option<Rational64> {
    match target {
        SimilarityTarget::Sm => similarity_sm(f, g).ok().map(|r| big_to_r64(&r)),
        SimilarityTarget::Sd(id) => similarity_sd(f, g, id).ok(),
        SimilarityTarget::Se => similarity_se(f, g).ok(),
        SimilarityTarget::Profile => None,
    }
}

fn scalar_violation(
    target: SimilarityTarget,
    axiom: AxiomId,
    xs: &[&TypeTwoSoftSet],
    mode: Containment,
) -> Option<bool> {
    use AxiomId::*;
    let s = |i: usize, j: usize| scalar_similarity(target, xs[i], xs[j]);
    let one = Rational64::one();
    Some(match axiom {
        S1 => s(0, 1)? != s(1, 0)?,
        S2 => {
            let v = s(0, 1)?;
            v < Rational64::zero() || v > one
        }
        S3 => xs[0] == xs[1] && s(0, 1)? != one,
        S3Converse => xs[0] != xs[1] && s(0, 1)? == one,
        S4 => {
            xs[0].contains_in(xs[1], mode).ok()?
                && xs[1].contains_in(xs[2], mode).ok()?
                && s(0, 2)? > s(0, 1)?.min(s(1, 2)?)
        }
        _ => return None,
    })
}

/// Per-parameter checks of the score profile, shared with the search.
pub(crate) mod profile {
    use super::*;

    pub fn inner_equal(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet, p: &str) -> bool {
        matches!((f.inner(p), g.inner(p)), (Some(a), Some(b)) if a == b)
    }

    pub fn asymmetric(fg: &ParameterScoreProfile, gf: &ParameterScoreProfile) -> bool {
        fg != gf
    }

    pub fn out_of_range(p: &ParameterScoreProfile) -> bool {
        p.entries
            .values()
            .any(|v| v < &BigRational::zero() || v > &BigRational::one())
    }

    pub fn equal_not_one(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet, p: &ParameterScoreProfile) -> bool {
        p.iter().any(|(a, v)| inner_equal(f, g, a) && !v.is_one())
    }

    pub fn one_not_equal(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet, p: &ParameterScoreProfile) -> bool {
        p.iter().any(|(a, v)| v.is_one() && !inner_equal(f, g, a))
    }

    /// Some parameter scores higher between the chain's ends than on one of
    /// its links; absent parameters score 0.
    pub fn not_monotone(fh: &ParameterScoreProfile, fg: &ParameterScoreProfile, gh: &ParameterScoreProfile) -> bool {
        let zero = BigRational::zero();
        fh.iter().any(|(a, v)| {
            let link = fg.get(a).unwrap_or(&zero).min(gh.get(a).unwrap_or(&zero));
            v > link
        })
    }

    pub fn disjoint(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> bool {
        !f.primary().any(|p| g.has_primary(p))
    }

    pub fn nonzero(p: &ParameterScoreProfile) -> bool {
        p.entries.values().any(|v| !v.is_zero())
    }
}

fn profile_violation(axiom: AxiomId, xs: &[&TypeTwoSoftSet], mode: Containment) -> Option<bool> {
    use AxiomId::*;
    let p = |i: usize, j: usize| similarity_profile(xs[i], xs[j]).ok();
    Some(match axiom {
        P1 => profile::asymmetric(&p(0, 1)?, &p(1, 0)?),
        P2 => profile::out_of_range(&p(0, 1)?),
        P3 => profile::equal_not_one(xs[0], xs[1], &p(0, 1)?),
        P3Converse => profile::one_not_equal(xs[0], xs[1], &p(0, 1)?),
        P4 => {
            xs[0].contains_in(xs[1], mode).ok()?
                && xs[1].contains_in(xs[2], mode).ok()?
                && profile::not_monotone(&p(0, 2)?, &p(0, 1)?, &p(1, 2)?)
        }
        P5 => profile::disjoint(xs[0], xs[1]) && profile::nonzero(&p(0, 1)?),
        _ => return None,
    })
}

/// Whether the witness's soft sets violate its axiom for its target. Any
/// shape mismatch (wrong arity, mixed kinds, different universes) is not a
/// violation.
pub fn violates(w: &Witness) -> bool {
    if w.instances.len() != w.axiom.arity() {
        return false;
    }
    let t2: Option<Vec<&TypeTwoSoftSet>> = w.instances.iter().map(Instance::as_t2).collect();
    let result = match w.target {
        LabTarget::Distance(id) => distance_violation(id, w.axiom, &w.instances, w.containment),
        LabTarget::Entropy => t2.and_then(|xs| entropy_violation(w.axiom, &xs, w.containment)),
        LabTarget::Similarity(SimilarityTarget::Profile) => {
            t2.and_then(|xs| profile_violation(w.axiom, &xs, w.containment))
        }
        LabTarget::Similarity(s) => t2.and_then(|xs| scalar_violation(s, w.axiom, &xs, w.containment)),
    };
    result.unwrap_or(false)
}
