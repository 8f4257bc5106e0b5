//! Similarity of Type-2 soft sets: the per-parameter score profile and the
//! three scalar similarities built on it, on distances, and on entropy.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::measures::distance::{merge_keys, t2_rational_unchecked, DistanceMeasureId};
use crate::measures::entropy::entropy_t2;
use crate::t1::TypeOneSoftSet;
use crate::t2::TypeTwoSoftSet;

/// Scores per primary parameter, over `A ∪ B` of the compared soft sets.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ParameterScoreProfile {
    pub entries: BTreeMap<String, BigRational>,
}

impl ParameterScoreProfile {
    pub fn get(&self, param: &str) -> Option<&BigRational> {
        self.entries.get(param)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &BigRational)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn ratio(n: usize, d: usize) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Score of one shared primary parameter. Two empty images count as fully
/// similar, as do two inner sets without underlying parameters.
pub(crate) fn inner_score(a: &TypeOneSoftSet, b: &TypeOneSoftSet) -> BigRational {
    let mut union = 0usize;
    let mut sum = BigRational::zero();
    merge_keys(a.images(), b.images(), |x, y| {
        union += 1;
        if let (Some(x), Some(y)) = (x, y) {
            let u = x.union_len(y);
            sum += if u == 0 {
                BigRational::one()
            } else {
                ratio(x.intersection_len(y), u)
            };
        }
    });
    if union == 0 {
        BigRational::one()
    } else {
        sum / BigInt::from(union)
    }
}

pub(crate) fn profile_unchecked(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> ParameterScoreProfile {
    let mut entries = BTreeMap::new();
    let mut keys = f.primary().chain(g.primary()).collect::<Vec<_>>();
    keys.sort();
    keys.dedup();
    for p in keys {
        let score = match (f.inner(p), g.inner(p)) {
            (Some(a), Some(b)) => inner_score(a, b),
            _ => BigRational::zero(),
        };
        entries.insert(p.to_string(), score);
    }
    ParameterScoreProfile { entries }
}

pub(crate) fn sm_unchecked(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> BigRational {
    let profile = profile_unchecked(f, g);
    if profile.is_empty() {
        return BigRational::one();
    }
    let sum: BigRational = profile.entries.values().sum();
    sum / BigInt::from(profile.len())
}

pub(crate) fn sd_unchecked(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet, id: DistanceMeasureId) -> Rational64 {
    let d = t2_rational_unchecked(id, f, g);
    Rational64::from_integer(1) / (Rational64::from_integer(1) + d)
}

pub(crate) fn se_unchecked(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Rational64 {
    let join = f.union(g).expect("same universe");
    let meet = f.intersection(g).expect("same universe");
    Rational64::from_integer(1) - (entropy_t2(&join) - entropy_t2(&meet)).abs()
}

fn check(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Result<()> {
    if f.universe() != g.universe() {
        return Err(Error::UniverseMismatch);
    }
    Ok(())
}

pub fn similarity_profile(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Result<ParameterScoreProfile> {
    check(f, g)?;
    Ok(profile_unchecked(f, g))
}

/// Mean profile score over `A ∪ B`; 1 when both sets have no primary
/// parameters.
pub fn similarity_sm(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Result<BigRational> {
    check(f, g)?;
    Ok(sm_unchecked(f, g))
}

/// `1 / (1 + D(f, g))` for a Type-2 distance `D`.
pub fn similarity_sd(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet, id: DistanceMeasureId) -> Result<Rational64> {
    if id.is_t1() {
        return Err(Error::WrongMeasureArity(id));
    }
    check(f, g)?;
    Ok(sd_unchecked(f, g, id))
}

/// `1 − |E(f ⊔ g) − E(f ⊓ g)|`.
pub fn similarity_se(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Result<Rational64> {
    check(f, g)?;
    Ok(se_unchecked(f, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::universe::Universe;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn houses() {
        let (f, g) = examples::houses();
        assert_eq!(similarity_sm(&f, &g).unwrap(), r(1, 6));
        let p = similarity_profile(&f, &g).unwrap();
        assert_eq!(p.get("beautiful"), Some(&r(1, 2)));
        assert_eq!(p.get("luxurious"), Some(&r(0, 1)));
        assert_eq!(p.get("spacious"), Some(&r(0, 1)));
        assert_eq!(
            similarity_sd(&f, &g, DistanceMeasureId::MatrixBasedT2).unwrap(),
            Rational64::new(1, 8)
        );
        assert_eq!(
            similarity_sd(&f, &g, DistanceMeasureId::NormMatrixT2).unwrap(),
            Rational64::new(75, 82)
        );
        assert_eq!(similarity_se(&f, &g).unwrap(), Rational64::new(2, 77));
    }

    #[test]
    fn pantry_profiles() {
        let (ideal, [p1, p2]) = examples::pantries();
        let one = similarity_profile(&ideal, &p1).unwrap();
        let two = similarity_profile(&ideal, &p2).unwrap();
        let expect = |p: &ParameterScoreProfile, vals: [(i64, i64); 4]| {
            for (k, (n, d)) in ["breakfast", "lunch", "dinner", "supper"].into_iter().zip(vals) {
                assert_eq!(p.get(k), Some(&r(n, d)), "{k}");
            }
        };
        expect(&one, [(2, 9), (1, 3), (11, 18), (0, 1)]);
        expect(&two, [(3, 8), (1, 12), (7, 24), (1, 6)]);
    }

    #[test]
    fn identical_inputs() {
        let (f, _) = examples::houses();
        assert!(similarity_profile(&f, &f).unwrap().entries.values().all(|v| v.is_one()));
        assert!(similarity_sm(&f, &f).unwrap().is_one());
        assert_eq!(similarity_se(&f, &f).unwrap(), Rational64::from_integer(1));
        let u = Universe::numbered("x", 2).unwrap();
        let e = TypeTwoSoftSet::empty(&u);
        assert!(similarity_sm(&e, &e).unwrap().is_one());
    }

    #[test]
    fn wrong_arity() {
        let (f, g) = examples::houses();
        assert!(matches!(
            similarity_sd(&f, &g, DistanceMeasureId::KharalEuclidean),
            Err(Error::WrongMeasureArity(_))
        ));
    }
}
