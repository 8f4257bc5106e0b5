//! Canonical enumeration of every soft set over a fixed universe
//! `{x1, ..., xn}` and parameter pools `α1..αk` (primary) and `β1..βm`
//! (underlying).
//!
//! Order for Type-1 sets: parameter subsets by ascending bit mask over the
//! sorted pool; within a subset, images form a mixed-radix counter where
//! the first parameter is the least significant digit and each digit is an
//! element bit mask. Type-2 sets use the same scheme one level up: each
//! primary parameter's digit ranges over "absent" followed by every Type-1
//! set over the underlying pool in Type-1 order.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lab::bounds::{SearchBounds, SearchMode};
use crate::lab::random;
use crate::t1::TypeOneSoftSet;
use crate::t2::TypeTwoSoftSet;
use crate::universe::{ElementSet, Universe};

pub(crate) fn pool(prefix: &str, n: usize) -> Vec<String> {
    let mut labels: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
    labels.sort();
    labels
}

/// Number of Type-1 sets over `u` elements and a pool of `k` parameters:
/// `Σ_{A ⊆ pool} (2^u)^{|A|} = (1 + 2^u)^k`.
pub fn count_t1(u: usize, k: usize) -> Option<u128> {
    let images = 1u128.checked_shl(u as u32)?;
    (1 + images).checked_pow(k as u32)
}

/// Number of Type-2 sets: `(1 + count_t1(u, m))^p`.
pub fn count_t2(u: usize, p: usize, m: usize) -> Option<u128> {
    count_t1(u, m)?.checked_add(1)?.checked_pow(p as u32)
}

fn check_cap(count: Option<u128>, cap: u128) -> Result<usize> {
    match count {
        Some(n) if n.checked_mul(n).is_some_and(|pairs| pairs <= cap) => Ok(n as usize),
        Some(n) => Err(Error::BoundsTooLarge { instances: n, cap }),
        None => Err(Error::BoundsTooLarge {
            instances: u128::MAX,
            cap,
        }),
    }
}

pub(crate) fn all_t1(universe: &Universe, params: &[String]) -> Vec<TypeOneSoftSet> {
    let u = universe.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << params.len()) {
        let chosen: Vec<&String> = params
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        let total = 1u128 << (u * chosen.len());
        for code in 0..total {
            let images: BTreeMap<String, ElementSet> = chosen
                .iter()
                .enumerate()
                .map(|(j, p)| {
                    let digit = (code >> (u * j)) as u64 & ((1u128 << u) - 1) as u64;
                    ((*p).clone(), ElementSet::from_mask(digit))
                })
                .collect();
            out.push(TypeOneSoftSet::from_images(universe, images).expect("enumerated images fit"));
        }
    }
    out
}

pub(crate) fn all_t2(universe: &Universe, primary: &[String], underlying: &[String]) -> Vec<TypeTwoSoftSet> {
    let inner = all_t1(universe, underlying);
    let radix = inner.len() + 1;
    let total = radix.pow(primary.len() as u32);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut sets = BTreeMap::new();
        for p in primary {
            let digit = code % radix;
            code /= radix;
            if digit > 0 {
                sets.insert(p.clone(), inner[digit - 1].clone());
            }
        }
        out.push(TypeTwoSoftSet::from_map(universe.clone(), sets));
    }
    out
}

pub(crate) fn t1_group(bounds: &SearchBounds, u: usize) -> Result<Vec<TypeOneSoftSet>> {
    check_cap(count_t1(u, bounds.max_primary), bounds.pair_cap)?;
    let universe = Universe::numbered("x", u)?;
    Ok(all_t1(&universe, &pool("α", bounds.max_primary)))
}

pub(crate) fn t2_group(bounds: &SearchBounds, u: usize) -> Result<Vec<TypeTwoSoftSet>> {
    check_cap(count_t2(u, bounds.max_primary, bounds.max_underlying), bounds.pair_cap)?;
    let universe = Universe::numbered("x", u)?;
    Ok(all_t2(
        &universe,
        &pool("α", bounds.max_primary),
        &pool("β", bounds.max_underlying),
    ))
}

/// Checks that every exhaustive group fits the pair cap.
pub(crate) fn check_space(bounds: &SearchBounds, t1: bool) -> Result<()> {
    bounds.validate()?;
    if bounds.is_exhaustive() {
        let count = if t1 {
            count_t1(bounds.max_universe, bounds.max_primary)
        } else {
            count_t2(bounds.max_universe, bounds.max_primary, bounds.max_underlying)
        };
        check_cap(count, bounds.pair_cap)?;
    }
    Ok(())
}

/// Every Type-1 set over `{x1, ..., x_maxUniverse}` and the pool
/// `α1..α_maxPrimary` in canonical order, or `trials` random sets in random
/// mode.
pub fn enumerate_t1(bounds: &SearchBounds) -> Result<Box<dyn Iterator<Item = TypeOneSoftSet> + Send>> {
    check_space(bounds, true)?;
    match bounds.mode {
        SearchMode::Exhaustive => Ok(Box::new(t1_group(bounds, bounds.max_universe)?.into_iter())),
        SearchMode::Random { trials, seed } => {
            let b = bounds.clone();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(Box::new((0..trials).map(move |_| random::random_t1(&mut rng, &b))))
        }
    }
}

/// Type-2 counterpart of [`enumerate_t1`].
pub fn enumerate_t2(bounds: &SearchBounds) -> Result<Box<dyn Iterator<Item = TypeTwoSoftSet> + Send>> {
    check_space(bounds, false)?;
    match bounds.mode {
        SearchMode::Exhaustive => Ok(Box::new(t2_group(bounds, bounds.max_universe)?.into_iter())),
        SearchMode::Random { trials, seed } => {
            let b = bounds.clone();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(Box::new((0..trials).map(move |_| random::random_t2(&mut rng, &b))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn t1_counts() {
        let b = SearchBounds::exhaustive(1, 1, 0);
        let all: Vec<_> = enumerate_t1(&b).unwrap().collect();
        assert_eq!(all.len(), 3);
        assert_eq!(all[0].param_count(), 0);
        assert!(all[1].is_null() && all[1].param_count() == 1);
        assert!(all[2].is_absolute());
        let b = SearchBounds::exhaustive(2, 2, 0);
        assert_eq!(enumerate_t1(&b).unwrap().count(), 25);
        assert_eq!(count_t1(2, 2), Some(25));
    }

    #[test]
    fn t2_counts_and_distinctness() {
        let b = SearchBounds::exhaustive(1, 1, 1);
        let all: Vec<_> = enumerate_t2(&b).unwrap().collect();
        assert_eq!(all.len() as u128, count_t2(1, 1, 1).unwrap());
        assert_eq!(all.len(), 4);
        assert!(all.iter().any(|s| s.primary_count() == 1 && s.is_null()));
        assert!(all.iter().any(|s| s.is_absolute()));
        let b = SearchBounds::exhaustive(2, 2, 2);
        let all: Vec<_> = enumerate_t2(&b).unwrap().collect();
        assert_eq!(all.len(), 676);
        let distinct: HashSet<String> = all.iter().map(|s| s.to_string()).collect();
        assert_eq!(distinct.len(), 676);
        assert_eq!(count_t2(1, 2, 2), Some(100));
    }

    #[test]
    fn streams_repeat() {
        let b = SearchBounds::exhaustive(2, 2, 1);
        let a: Vec<_> = enumerate_t2(&b).unwrap().collect();
        let c: Vec<_> = enumerate_t2(&b).unwrap().collect();
        assert_eq!(a, c);
        let r = SearchBounds::random(3, 2, 2, 50, 9);
        let a: Vec<_> = enumerate_t2(&r).unwrap().collect();
        let c: Vec<_> = enumerate_t2(&r).unwrap().collect();
        assert_eq!(a, c);
    }

    #[test]
    fn too_large() {
        let b = SearchBounds::exhaustive(5, 3, 0);
        assert!(matches!(
            enumerate_t1(&b),
            Err(Error::BoundsTooLarge { instances: 35937, .. })
        ));
    }
}
