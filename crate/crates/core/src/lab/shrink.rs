//! Greedy witness shrinking. Each step removes one universe element, one
//! parameter (from every instance or from one), or one image element, and
//! is kept only if the result still violates the axiom. Steps strictly
//! reduce the witness size, so the loop reaches a fixpoint.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lab::{Instance, Witness};
use crate::universe::Universe;

fn universe(i: &Instance) -> &Universe {
    match i {
        Instance::T1(s) => s.universe(),
        Instance::T2(s) => s.universe(),
    }
}

fn drop_element(w: &Witness, idx: usize) -> Option<Witness> {
    let u = universe(w.instances.first()?).without(idx)?;
    let instances = w
        .instances
        .iter()
        .map(|i| match i {
            Instance::T1(s) => Instance::T1(s.without_element(&u, idx)),
            Instance::T2(s) => Instance::T2(s.without_element(&u, idx)),
        })
        .collect();
    Some(Witness { instances, ..w.clone() })
}

fn with_instances(w: &Witness, instances: Vec<Instance>) -> Witness {
    Witness { instances, ..w.clone() }
}

/// Candidate reductions in a fixed order.
fn candidates(w: &Witness) -> Vec<Witness> {
    let mut out = Vec::new();
    let n = w.instances.first().map_or(0, |i| universe(i).len());
    out.extend((0..n).filter_map(|idx| drop_element(w, idx)));
    let t1 = w.instances.iter().all(|i| matches!(i, Instance::T1(_)));
    if t1 {
        let sets: Vec<_> = w.instances.iter().filter_map(Instance::as_t1).collect();
        let labels: BTreeSet<&str> = sets.iter().flat_map(|s| s.params()).collect();
        for p in &labels {
            out.push(with_instances(
                w,
                sets.iter().map(|s| s.without_param(p).into()).collect(),
            ));
        }
        for (k, s) in sets.iter().enumerate() {
            for p in s.params() {
                let mut next = w.instances.clone();
                next[k] = s.without_param(p).into();
                out.push(with_instances(w, next));
            }
        }
        for (k, s) in sets.iter().enumerate() {
            for (p, img) in s.images() {
                for x in img.iter() {
                    let mut smaller = img.clone();
                    smaller.remove(x);
                    let mut next = w.instances.clone();
                    next[k] = s.with_image(p, smaller).into();
                    out.push(with_instances(w, next));
                }
            }
        }
        return out;
    }
    let sets: Vec<_> = w.instances.iter().filter_map(Instance::as_t2).collect();
    if sets.len() != w.instances.len() {
        return out;
    }
    let primary: BTreeSet<&str> = sets.iter().flat_map(|s| s.primary()).collect();
    for p in &primary {
        out.push(with_instances(
            w,
            sets.iter().map(|s| s.without_primary(p).into()).collect(),
        ));
    }
    for (k, s) in sets.iter().enumerate() {
        for p in s.primary() {
            let mut next = w.instances.clone();
            next[k] = s.without_primary(p).into();
            out.push(with_instances(w, next));
        }
    }
    let underlying: BTreeSet<&String> = sets.iter().flat_map(|s| s.underlying()).collect();
    for q in &underlying {
        let next = sets
            .iter()
            .map(|s| {
                s.inners()
                    .iter()
                    .fold((*s).clone(), |acc, (p, inner)| {
                        acc.with_inner(p, inner.without_param(q))
                    })
                    .into()
            })
            .collect();
        out.push(with_instances(w, next));
    }
    for (k, s) in sets.iter().enumerate() {
        for (p, inner) in s.inners() {
            for q in inner.params() {
                let mut next = w.instances.clone();
                next[k] = s.with_inner(p, inner.without_param(q)).into();
                out.push(with_instances(w, next));
            }
        }
    }
    for (k, s) in sets.iter().enumerate() {
        for (p, inner) in s.inners() {
            for (q, img) in inner.images() {
                for x in img.iter() {
                    let mut smaller = img.clone();
                    smaller.remove(x);
                    let mut next = w.instances.clone();
                    next[k] = s.with_inner(p, inner.with_image(q, smaller)).into();
                    out.push(with_instances(w, next));
                }
            }
        }
    }
    out
}

/// Shrinks a violating witness to a locally minimal one.
pub fn minimize_witness(witness: &Witness) -> Result<Witness> {
    if !witness.replay() {
        return Err(Error::NotAViolation);
    }
    let mut current = witness.clone();
    'outer: loop {
        for candidate in candidates(&current) {
            if candidate.size() < current.size() && candidate.replay() {
                current = candidate;
                continue 'outer;
            }
        }
        return Ok(current);
    }
}
