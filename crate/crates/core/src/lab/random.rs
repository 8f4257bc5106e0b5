//! Seeded generators for random-mode cases: plain instances, near-identical
//! pairs, containment chains grown constructively, deterministic Type-2
//! sets built from random partitions, and equivalent twins.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore};

use crate::lab::bounds::SearchBounds;
use crate::lab::enumerate::pool;
use crate::t1::{Containment, TypeOneSoftSet};
use crate::t2::TypeTwoSoftSet;
use crate::universe::{ElementSet, Universe};

fn random_universe(rng: &mut dyn RngCore, bounds: &SearchBounds) -> Universe {
    let n = rng.random_range(1..=bounds.max_universe);
    Universe::numbered("x", n).expect("non-empty")
}

fn random_image(rng: &mut dyn RngCore, n: usize) -> ElementSet {
    (0..n).filter(|_| rng.random_bool(0.5)).collect()
}

fn t1_over(rng: &mut dyn RngCore, universe: &Universe, params: &[String]) -> TypeOneSoftSet {
    let mut images = BTreeMap::new();
    for p in params {
        if rng.random_bool(0.5) {
            images.insert(p.clone(), random_image(rng, universe.len()));
        }
    }
    TypeOneSoftSet::from_images(universe, images).expect("images fit")
}

fn t2_over(rng: &mut dyn RngCore, universe: &Universe, primary: &[String], underlying: &[String]) -> TypeTwoSoftSet {
    let mut inner = BTreeMap::new();
    for p in primary {
        if rng.random_bool(0.5) {
            inner.insert(p.clone(), t1_over(rng, universe, underlying));
        }
    }
    TypeTwoSoftSet::from_map(universe.clone(), inner)
}

pub fn random_t1(rng: &mut dyn RngCore, bounds: &SearchBounds) -> TypeOneSoftSet {
    let u = random_universe(rng, bounds);
    t1_over(rng, &u, &pool("α", bounds.max_primary))
}

pub fn random_t2(rng: &mut dyn RngCore, bounds: &SearchBounds) -> TypeTwoSoftSet {
    let u = random_universe(rng, bounds);
    t2_over(
        rng,
        &u,
        &pool("α", bounds.max_primary),
        &pool("β", bounds.max_underlying),
    )
}

/// One small edit: toggle an image element, add a parameter, or drop one.
fn mutate_t1(rng: &mut dyn RngCore, s: &TypeOneSoftSet, params: &[String]) -> TypeOneSoftSet {
    let n = s.universe().len();
    match rng.random_range(0..3) {
        0 if s.param_count() > 0 => {
            let p = s
                .params()
                .nth(rng.random_range(0..s.param_count()))
                .unwrap()
                .to_string();
            let mut img = s.image(&p).unwrap().clone();
            let x = rng.random_range(0..n);
            if img.contains(x) {
                img.remove(x);
            } else {
                img.insert(x);
            }
            s.with_image(&p, img)
        }
        1 => {
            let absent: Vec<&String> = params.iter().filter(|p| !s.has_param(p)).collect();
            match absent.is_empty() {
                true => s.clone(),
                false => {
                    let p = absent[rng.random_range(0..absent.len())];
                    s.with_image(p, random_image(rng, n))
                }
            }
        }
        _ if s.param_count() > 0 => {
            let p = s
                .params()
                .nth(rng.random_range(0..s.param_count()))
                .unwrap()
                .to_string();
            s.without_param(&p)
        }
        _ => s.clone(),
    }
}

fn mutate_t2(rng: &mut dyn RngCore, s: &TypeTwoSoftSet, primary: &[String], underlying: &[String]) -> TypeTwoSoftSet {
    if s.primary_count() > 0 && rng.random_bool(0.7) {
        let p = s
            .primary()
            .nth(rng.random_range(0..s.primary_count()))
            .unwrap()
            .to_string();
        let inner = mutate_t1(rng, s.inner(&p).unwrap(), underlying);
        return s.with_inner(&p, inner);
    }
    let absent: Vec<&String> = primary.iter().filter(|p| !s.has_primary(p)).collect();
    if !absent.is_empty() && rng.random_bool(0.5) {
        let p = absent[rng.random_range(0..absent.len())];
        let inner = t1_over(rng, s.universe(), underlying);
        return s.with_inner(p, inner);
    }
    match s.primary_count() {
        0 => s.clone(),
        k => {
            let p = s.primary().nth(rng.random_range(0..k)).unwrap().to_string();
            s.without_primary(&p)
        }
    }
}

/// A pair over one universe: independent half the time, otherwise a set and
/// a one-edit variant of it.
pub fn random_pair_t1(rng: &mut dyn RngCore, bounds: &SearchBounds) -> [TypeOneSoftSet; 2] {
    let u = random_universe(rng, bounds);
    let params = pool("α", bounds.max_primary);
    let f = t1_over(rng, &u, &params);
    let g = if rng.random_bool(0.5) {
        t1_over(rng, &u, &params)
    } else {
        mutate_t1(rng, &f, &params)
    };
    [f, g]
}

pub fn random_pair_t2(rng: &mut dyn RngCore, bounds: &SearchBounds) -> [TypeTwoSoftSet; 2] {
    let u = random_universe(rng, bounds);
    let (primary, underlying) = (pool("α", bounds.max_primary), pool("β", bounds.max_underlying));
    let f = t2_over(rng, &u, &primary, &underlying);
    let g = if rng.random_bool(0.5) {
        t2_over(rng, &u, &primary, &underlying)
    } else {
        mutate_t2(rng, &f, &primary, &underlying)
    };
    [f, g]
}

pub fn random_triple_t1(rng: &mut dyn RngCore, bounds: &SearchBounds) -> [TypeOneSoftSet; 3] {
    let u = random_universe(rng, bounds);
    let params = pool("α", bounds.max_primary);
    [(); 3].map(|_| t1_over(rng, &u, &params))
}

pub fn random_triple_t2(rng: &mut dyn RngCore, bounds: &SearchBounds) -> [TypeTwoSoftSet; 3] {
    let u = random_universe(rng, bounds);
    let (primary, underlying) = (pool("α", bounds.max_primary), pool("β", bounds.max_underlying));
    [(); 3].map(|_| t2_over(rng, &u, &primary, &underlying))
}

/// A superset of `s`: under subset containment existing images may gain
/// elements; in both modes absent parameters may be added.
fn grow_t1(rng: &mut dyn RngCore, s: &TypeOneSoftSet, params: &[String], mode: Containment) -> TypeOneSoftSet {
    let n = s.universe().len();
    let mut images: BTreeMap<String, ElementSet> = s.images().clone();
    if mode == Containment::Subset {
        for img in images.values_mut() {
            let extra: ElementSet = (0..n).filter(|_| rng.random_bool(1.0 / 3.0)).collect();
            *img = img.union(&extra);
        }
    }
    for p in params {
        if !images.contains_key(p) && rng.random_bool(1.0 / 3.0) {
            images.insert(p.clone(), random_image(rng, n));
        }
    }
    TypeOneSoftSet::from_images(s.universe(), images).expect("images fit")
}

fn grow_t2(
    rng: &mut dyn RngCore,
    s: &TypeTwoSoftSet,
    primary: &[String],
    underlying: &[String],
    mode: Containment,
) -> TypeTwoSoftSet {
    let mut inner: BTreeMap<String, TypeOneSoftSet> = s
        .inners()
        .iter()
        .map(|(p, set)| (p.clone(), grow_t1(rng, set, underlying, mode)))
        .collect();
    for p in primary {
        if !inner.contains_key(p) && rng.random_bool(1.0 / 3.0) {
            inner.insert(p.clone(), t1_over(rng, s.universe(), underlying));
        }
    }
    TypeTwoSoftSet::from_map(s.universe().clone(), inner)
}

/// `f ⊑ g ⊑ h` under the bounds' containment mode.
pub fn random_chain_t1(rng: &mut dyn RngCore, bounds: &SearchBounds) -> [TypeOneSoftSet; 3] {
    let u = random_universe(rng, bounds);
    let params = pool("α", bounds.max_primary);
    let f = t1_over(rng, &u, &params);
    let g = grow_t1(rng, &f, &params, bounds.containment);
    let h = grow_t1(rng, &g, &params, bounds.containment);
    [f, g, h]
}

pub fn random_chain_t2(rng: &mut dyn RngCore, bounds: &SearchBounds) -> [TypeTwoSoftSet; 3] {
    let u = random_universe(rng, bounds);
    let (primary, underlying) = (pool("α", bounds.max_primary), pool("β", bounds.max_underlying));
    let f = t2_over(rng, &u, &primary, &underlying);
    let g = grow_t2(rng, &f, &primary, &underlying, bounds.containment);
    let h = grow_t2(rng, &g, &primary, &underlying, bounds.containment);
    [f, g, h]
}

/// A deterministic Type-2 set: a random partition of the universe whose
/// blocks each sit under their own fresh `(α, β)` pair, spread over fresh
/// primary labels. An empty extra block is added when the partition alone
/// would be the absolute set, and sometimes at random.
pub fn random_deterministic_t2(rng: &mut dyn RngCore, bounds: &SearchBounds) -> TypeTwoSoftSet {
    let u = random_universe(rng, bounds);
    let n = u.len();
    let k = rng.random_range(1..=n);
    let mut blocks = vec![ElementSet::new(); k];
    for x in 0..n {
        blocks[rng.random_range(0..k)].insert(x);
    }
    blocks.retain(|b| !b.is_empty());
    if blocks.len() == 1 || rng.random_bool(0.25) {
        blocks.push(ElementSet::new());
    }
    blocks.shuffle(rng);
    let groups = rng.random_range(1..=blocks.len());
    let mut inner: BTreeMap<String, BTreeMap<String, ElementSet>> = BTreeMap::new();
    for (j, block) in blocks.into_iter().enumerate() {
        let a = if j < groups { j } else { rng.random_range(0..groups) };
        inner
            .entry(format!("a{}", a + 1))
            .or_default()
            .insert(format!("b{}", j + 1), block);
    }
    let inner = inner
        .into_iter()
        .map(|(p, images)| (p, TypeOneSoftSet::from_images(&u, images).expect("images fit")))
        .collect();
    let f = TypeTwoSoftSet::from_map(u, inner);
    debug_assert!(f.is_deterministic(), "{f}");
    f
}

fn shuffled_map(rng: &mut dyn RngCore, labels: Vec<String>) -> BTreeMap<String, String> {
    let mut targets = labels.clone();
    targets.shuffle(rng);
    labels.into_iter().zip(targets).collect()
}

/// `f` with its primary and underlying labels permuted.
pub fn random_relabeled_twin(rng: &mut dyn RngCore, f: &TypeTwoSoftSet) -> TypeTwoSoftSet {
    let psi = shuffled_map(rng, f.primary().map(str::to_string).collect());
    let gamma = shuffled_map(rng, f.underlying().iter().cloned().collect());
    f.relabeled(&psi, &gamma)
}

/// A set equivalent to `f`: labels permuted, and sometimes padded with an
/// empty image under an underlying label already in use, which leaves every
/// trace set unchanged.
pub fn random_equivalent_twin(rng: &mut dyn RngCore, f: &TypeTwoSoftSet) -> TypeTwoSoftSet {
    let mut g = random_relabeled_twin(rng, f);
    if rng.random_bool(0.5) {
        let slots: Vec<(String, String)> = g
            .inners()
            .iter()
            .flat_map(|(p, set)| {
                g.underlying()
                    .iter()
                    .filter(|q| !set.has_param(q))
                    .map(move |q| (p.clone(), q.clone()))
            })
            .collect();
        if !slots.is_empty() {
            let (p, q) = &slots[rng.random_range(0..slots.len())];
            let inner = g.inner(p).unwrap().with_image(q, ElementSet::new());
            g = g.with_inner(p, inner);
        }
    }
    g
}

/// Two sets with disjoint primary parameter sets.
pub fn random_disjoint_pair(rng: &mut dyn RngCore, bounds: &SearchBounds) -> [TypeTwoSoftSet; 2] {
    let u = random_universe(rng, bounds);
    let mut primary = pool("α", bounds.max_primary);
    primary.shuffle(rng);
    let cut = rng.random_range(0..=primary.len());
    let underlying = pool("β", bounds.max_underlying);
    let (left, right) = primary.split_at(cut);
    [
        t2_over(rng, &u, left, &underlying),
        t2_over(rng, &u, right, &underlying),
    ]
}

/// A null or absolute set with a random shape.
pub(crate) fn random_boundary_shape(rng: &mut dyn RngCore, bounds: &SearchBounds) -> TypeTwoSoftSet {
    let u = random_universe(rng, bounds);
    let shape = t2_over(
        rng,
        &u,
        &pool("α", bounds.max_primary),
        &pool("β", bounds.max_underlying),
    );
    let full = rng.random_bool(0.5);
    let inner = shape
        .inners()
        .iter()
        .map(|(p, set)| {
            let images = set
                .params()
                .map(|q| (q.to_string(), if full { u.full() } else { ElementSet::new() }))
                .collect();
            (p.clone(), TypeOneSoftSet::from_images(&u, images).expect("images fit"))
        })
        .collect();
    TypeTwoSoftSet::from_map(u, inner)
}
