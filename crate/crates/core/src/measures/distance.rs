//! Distances between Type-1 and Type-2 soft sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::measures::MeasureValue;
use crate::t1::TypeOneSoftSet;
use crate::t2::TypeTwoSoftSet;
use crate::universe::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DistanceMeasureId {
    KharalEuclidean,
    KharalNormalizedEuclidean,
    ParamBasedT1,
    MatrixBasedT1,
    ParamBasedT2,
    MatrixBasedT2,
    NormParamT2,
    NormMatrixT2,
}

impl DistanceMeasureId {
    pub const ALL: [DistanceMeasureId; 8] = [
        Self::KharalEuclidean,
        Self::KharalNormalizedEuclidean,
        Self::ParamBasedT1,
        Self::MatrixBasedT1,
        Self::ParamBasedT2,
        Self::MatrixBasedT2,
        Self::NormParamT2,
        Self::NormMatrixT2,
    ];

    pub const T1: [DistanceMeasureId; 4] = [
        Self::KharalEuclidean,
        Self::KharalNormalizedEuclidean,
        Self::ParamBasedT1,
        Self::MatrixBasedT1,
    ];

    pub const T2: [DistanceMeasureId; 4] = [
        Self::ParamBasedT2,
        Self::MatrixBasedT2,
        Self::NormParamT2,
        Self::NormMatrixT2,
    ];

    pub fn is_t1(self) -> bool {
        Self::T1.contains(&self)
    }

    pub fn is_normalized(self) -> bool {
        matches!(self, Self::NormParamT2 | Self::NormMatrixT2)
    }

    /// Short name used on the command line.
    pub fn code(self) -> &'static str {
        match self {
            Self::KharalEuclidean => "e",
            Self::KharalNormalizedEuclidean => "q",
            Self::ParamBasedT1 => "dp",
            Self::MatrixBasedT1 => "dm",
            Self::ParamBasedT2 => "Dp",
            Self::MatrixBasedT2 => "Dm",
            Self::NormParamT2 => "NDp",
            Self::NormMatrixT2 => "NDm",
        }
    }
}

impl fmt::Display for DistanceMeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown distance measure `{0}`")]
pub struct UnknownMeasure(pub String);

impl FromStr for DistanceMeasureId {
    type Err = UnknownMeasure;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|m| m.code() == s)
            .ok_or_else(|| UnknownMeasure(s.to_string()))
    }
}

/// Walks the union of two sorted key sets, reporting each key with the
/// values on either side.
pub(crate) fn merge_keys<'a, V>(
    a: &'a BTreeMap<String, V>,
    b: &'a BTreeMap<String, V>,
    mut visit: impl FnMut(Option<&'a V>, Option<&'a V>),
) {
    let mut ia = a.iter().peekable();
    let mut ib = b.iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => break,
            (Some(_), None) => visit(ia.next().map(|e| e.1), None),
            (None, Some(_)) => visit(None, ib.next().map(|e| e.1)),
            (Some((ka, _)), Some((kb, _))) => match ka.cmp(kb) {
                std::cmp::Ordering::Less => visit(ia.next().map(|e| e.1), None),
                std::cmp::Ordering::Greater => visit(None, ib.next().map(|e| e.1)),
                std::cmp::Ordering::Equal => visit(ia.next().map(|e| e.1), ib.next().map(|e| e.1)),
            },
        }
    }
}

/// `(|A ∪ B|, |A ∩ B|)` of two key sets.
fn key_counts<V>(a: &BTreeMap<String, V>, b: &BTreeMap<String, V>) -> (u64, u64) {
    let (mut union, mut shared) = (0, 0);
    merge_keys(a, b, |x, y| {
        union += 1;
        if x.is_some() && y.is_some() {
            shared += 1;
        }
    });
    (union, shared)
}

fn set_counts(a: &BTreeSet<String>, b: &BTreeSet<String>) -> (u64, u64) {
    let shared = a.intersection(b).count();
    ((a.len() + b.len() - shared) as u64, shared as u64)
}

fn shared_square_sum(a: &TypeOneSoftSet, b: &TypeOneSoftSet) -> f64 {
    let mut sum = 0u64;
    merge_keys(a.images(), b.images(), |x, y| {
        if let (Some(x), Some(y)) = (x, y) {
            let d = x.symmetric_difference_len(y) as u64;
            sum += d * d;
        }
    });
    sum as f64
}

pub(crate) fn kharal_e_unchecked(a: &TypeOneSoftSet, b: &TypeOneSoftSet) -> f64 {
    let (union, shared) = key_counts(a.images(), b.images());
    (union - shared) as f64 + shared_square_sum(a, b).sqrt()
}

pub(crate) fn kharal_q_unchecked(a: &TypeOneSoftSet, b: &TypeOneSoftSet) -> f64 {
    let (union, shared) = key_counts(a.images(), b.images());
    if union == 0 {
        return 0.0;
    }
    let mut chi = 0.0;
    merge_keys(a.images(), b.images(), |x, y| {
        if let (Some(x), Some(y)) = (x, y) {
            let u = x.union_len(y);
            if u > 0 {
                let d = x.symmetric_difference_len(y) as f64;
                chi += d * d / u as f64;
            }
        }
    });
    (union - shared) as f64 / (union as f64).sqrt() + chi.sqrt()
}

pub(crate) fn dp_t1_unchecked(a: &TypeOneSoftSet, b: &TypeOneSoftSet) -> u64 {
    let (union, shared) = key_counts(a.images(), b.images());
    union - shared + a.element_cover().symmetric_difference_len(&b.element_cover()) as u64
}

pub(crate) fn dm_t1_unchecked(a: &TypeOneSoftSet, b: &TypeOneSoftSet) -> u64 {
    let (union, shared) = key_counts(a.images(), b.images());
    let empty = ElementSet::new();
    let mut cells = 0u64;
    merge_keys(a.images(), b.images(), |x, y| {
        cells += x.unwrap_or(&empty).symmetric_difference_len(y.unwrap_or(&empty)) as u64;
    });
    union - shared + cells
}

/// `|A △ B| + |E_A △ E_B|`, shared by both Type-2 distances.
fn t2_label_terms(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> u64 {
    let (pu, ps) = key_counts(f.inners(), g.inners());
    let (uu, us) = set_counts(f.underlying(), g.underlying());
    (pu - ps) + (uu - us)
}

pub(crate) fn dp_t2_unchecked(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> u64 {
    t2_label_terms(f, g) + f.element_cover().symmetric_difference_len(&g.element_cover()) as u64
}

pub(crate) fn dm_t2_unchecked(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> u64 {
    let mut cells = 0u64;
    merge_keys(f.inners(), g.inners(), |x, y| {
        if let (Some(x), Some(y)) = (x, y) {
            merge_keys(x.images(), y.images(), |p, q| {
                if let (Some(p), Some(q)) = (p, q) {
                    cells += p.symmetric_difference_len(q) as u64;
                }
            });
        }
    });
    t2_label_terms(f, g) + cells
}

/// `|X| · |A ∪ B| · |E_A ∪ E_B|`.
pub(crate) fn normalizer(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> u64 {
    let (pu, _) = key_counts(f.inners(), g.inners());
    let (uu, _) = set_counts(f.underlying(), g.underlying());
    f.universe().len() as u64 * pu * uu
}

fn normalize(d: u64, by: u64) -> Rational64 {
    if by == 0 {
        Rational64::from_integer(0)
    } else {
        Rational64::new(d as i64, by as i64)
    }
}

fn check_t1(a: &TypeOneSoftSet, b: &TypeOneSoftSet) -> Result<()> {
    if a.universe() != b.universe() {
        return Err(Error::UniverseMismatch);
    }
    Ok(())
}

fn check_t2(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Result<()> {
    if f.universe() != g.universe() {
        return Err(Error::UniverseMismatch);
    }
    Ok(())
}

pub fn kharal_euclidean(a: &TypeOneSoftSet, b: &TypeOneSoftSet) -> Result<f64> {
    check_t1(a, b)?;
    Ok(kharal_e_unchecked(a, b))
}

pub fn kharal_normalized_euclidean(a: &TypeOneSoftSet, b: &TypeOneSoftSet) -> Result<f64> {
    check_t1(a, b)?;
    Ok(kharal_q_unchecked(a, b))
}

/// Parameter-based distance: parameter symmetric difference plus the
/// symmetric difference of the element covers.
pub fn dp_t1(a: &TypeOneSoftSet, b: &TypeOneSoftSet) -> Result<u64> {
    check_t1(a, b)?;
    Ok(dp_t1_unchecked(a, b))
}

/// Matrix-based distance: missing parameters count as empty images.
pub fn dm_t1(a: &TypeOneSoftSet, b: &TypeOneSoftSet) -> Result<u64> {
    check_t1(a, b)?;
    Ok(dm_t1_unchecked(a, b))
}

pub fn dp_t2(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Result<u64> {
    check_t2(f, g)?;
    Ok(dp_t2_unchecked(f, g))
}

/// The matrix term only runs over primary and underlying parameters
/// present on both sides.
pub fn dm_t2(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Result<u64> {
    check_t2(f, g)?;
    Ok(dm_t2_unchecked(f, g))
}

pub fn ndp_t2(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Result<Rational64> {
    check_t2(f, g)?;
    Ok(normalize(dp_t2_unchecked(f, g), normalizer(f, g)))
}

pub fn ndm_t2(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Result<Rational64> {
    check_t2(f, g)?;
    Ok(normalize(dm_t2_unchecked(f, g), normalizer(f, g)))
}

pub(crate) fn t2_rational_unchecked(id: DistanceMeasureId, f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Rational64 {
    match id {
        DistanceMeasureId::ParamBasedT2 => Rational64::from_integer(dp_t2_unchecked(f, g) as i64),
        DistanceMeasureId::MatrixBasedT2 => Rational64::from_integer(dm_t2_unchecked(f, g) as i64),
        DistanceMeasureId::NormParamT2 => normalize(dp_t2_unchecked(f, g), normalizer(f, g)),
        DistanceMeasureId::NormMatrixT2 => normalize(dm_t2_unchecked(f, g), normalizer(f, g)),
        other => unreachable!("{other} is a Type-1 measure"),
    }
}

/// Type-2 distance as an exact rational.
pub fn t2_rational(id: DistanceMeasureId, f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Result<Rational64> {
    if id.is_t1() {
        return Err(Error::WrongMeasureArity(id));
    }
    check_t2(f, g)?;
    Ok(t2_rational_unchecked(id, f, g))
}

pub fn evaluate_t1(id: DistanceMeasureId, a: &TypeOneSoftSet, b: &TypeOneSoftSet) -> Result<MeasureValue> {
    check_t1(a, b)?;
    Ok(match id {
        DistanceMeasureId::KharalEuclidean => kharal_e_unchecked(a, b).into(),
        DistanceMeasureId::KharalNormalizedEuclidean => kharal_q_unchecked(a, b).into(),
        DistanceMeasureId::ParamBasedT1 => dp_t1_unchecked(a, b).into(),
        DistanceMeasureId::MatrixBasedT1 => dm_t1_unchecked(a, b).into(),
        other => return Err(Error::WrongMeasureArity(other)),
    })
}

pub fn evaluate_t2(id: DistanceMeasureId, f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Result<MeasureValue> {
    t2_rational(id, f, g).map(Into::into)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::universe::Universe;

    #[test]
    fn kharal_triple_values() {
        let [f, g, h] = examples::kharal_triple();
        assert_eq!(kharal_euclidean(&f, &g).unwrap(), 3.0);
        assert_eq!(kharal_euclidean(&g, &h).unwrap(), 2.0);
        assert_eq!(kharal_euclidean(&f, &h).unwrap(), 7.0);
        let q = |a, b| kharal_normalized_euclidean(a, b).unwrap();
        assert!((q(&f, &g) - 3f64.sqrt()).abs() < 1e-12);
        assert!((q(&g, &h) - 2.0 / 3f64.sqrt()).abs() < 1e-12);
        assert!((q(&f, &h) - 3.391).abs() < 1e-3);
        assert!(q(&f, &h) > q(&f, &g) + q(&g, &h));
    }

    #[test]
    fn t1_exact_distances() {
        let [f, g, _] = examples::kharal_triple();
        assert_eq!(dp_t1(&f, &g).unwrap(), 5);
        assert_eq!(dm_t1(&f, &g).unwrap(), 9);
        assert_eq!(dp_t1(&f, &f).unwrap(), 0);
        assert_eq!(dm_t1(&f, &f).unwrap(), 0);
    }

    #[test]
    fn dp_swap_is_zero() {
        let u = Universe::numbered("x", 2).unwrap();
        let a = TypeOneSoftSet::new(&u, [("α1", vec!["x1"]), ("α2", vec!["x2"])]).unwrap();
        let b = TypeOneSoftSet::new(&u, [("α1", vec!["x2"]), ("α2", vec!["x1"])]).unwrap();
        assert_eq!(dp_t1(&a, &b).unwrap(), 0);
        assert_eq!(dm_t1(&a, &b).unwrap(), 4);
    }

    #[test]
    fn houses_distances() {
        let (f, g) = examples::houses();
        assert_eq!(dp_t2(&f, &g).unwrap(), 6);
        assert_eq!(dm_t2(&f, &g).unwrap(), 7);
        assert_eq!(ndp_t2(&f, &g).unwrap(), Rational64::new(6, 75));
        assert_eq!(ndm_t2(&f, &g).unwrap(), Rational64::new(7, 75));
        for id in DistanceMeasureId::T2 {
            assert_eq!(t2_rational(id, &f, &f).unwrap(), Rational64::from_integer(0));
        }
    }

    #[test]
    fn arity_and_universe_errors() {
        let (f, g) = examples::houses();
        assert_eq!(
            evaluate_t2(DistanceMeasureId::ParamBasedT1, &f, &g),
            Err(Error::WrongMeasureArity(DistanceMeasureId::ParamBasedT1))
        );
        let [a, ..] = examples::kharal_triple();
        let other = TypeOneSoftSet::empty(&Universe::numbered("y", 1).unwrap());
        assert_eq!(dm_t1(&a, &other), Err(Error::UniverseMismatch));
    }

    #[test]
    fn codes_round_trip() {
        for id in DistanceMeasureId::ALL {
            assert_eq!(id.code().parse::<DistanceMeasureId>().unwrap(), id);
        }
        assert!("ND".parse::<DistanceMeasureId>().is_err());
    }

    #[test]
    fn empty_normalizer_is_zero() {
        let u = Universe::numbered("x", 1).unwrap();
        let e = TypeTwoSoftSet::empty(&u);
        assert_eq!(ndp_t2(&e, &e).unwrap(), Rational64::from_integer(0));
        assert_eq!(
            kharal_normalized_euclidean(&TypeOneSoftSet::empty(&u), &TypeOneSoftSet::empty(&u)).unwrap(),
            0.0
        );
    }
}
