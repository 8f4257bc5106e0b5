//! The search driver: builds the instance groups, scans pairs, triples and
//! chains for every axiom of a target, and assembles verdicts.

use num_rational::Rational64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::equivalence::{equivalence_between, TraceProfile, SEARCH_LIMIT};
use crate::error::{Error, Result};
use crate::examples;
use crate::lab::bounds::{SearchBounds, SearchMode};
use crate::lab::enumerate::{check_space, t1_group, t2_group};
use crate::lab::predicate::{big_to_r64, profile, Num};
use crate::lab::random;
use crate::lab::shrink::minimize_witness;
use crate::lab::{
    metric_level, AxiomId, AxiomVerdict, Instance, LabReport, LabTarget, MetricClassification, SimilarityTarget,
    VerdictStatus, Witness,
};
use crate::measures::distance::{
    dm_t1_unchecked, dp_t1_unchecked, kharal_e_unchecked, kharal_q_unchecked, t2_rational_unchecked,
};
use crate::measures::entropy_t2;
use crate::measures::similarity::{profile_unchecked, sd_unchecked, se_unchecked, sm_unchecked};
use crate::measures::DistanceMeasureId;
use crate::t1::{Containment, TypeOneSoftSet};
use crate::t2::TypeTwoSoftSet;

pub(crate) trait Member: Clone + PartialEq + Send + Sync + Into<Instance> {
    fn contained(&self, other: &Self, mode: Containment) -> bool;
    fn from_instance(i: &Instance) -> Option<&Self>;
    fn universe_labels(&self) -> &[String];
}

impl Member for TypeOneSoftSet {
    fn contained(&self, other: &Self, mode: Containment) -> bool {
        self.contained_unchecked(other, mode)
    }
    fn from_instance(i: &Instance) -> Option<&Self> {
        i.as_t1()
    }
    fn universe_labels(&self) -> &[String] {
        self.universe().labels()
    }
}

impl Member for TypeTwoSoftSet {
    fn contained(&self, other: &Self, mode: Containment) -> bool {
        self.contained_unchecked(other, mode)
    }
    fn from_instance(i: &Instance) -> Option<&Self> {
        i.as_t2()
    }
    fn universe_labels(&self) -> &[String] {
        self.universe().labels()
    }
}

struct Group<S> {
    label: String,
    items: Vec<S>,
}

fn seed_groups<S: Member>(bounds: &SearchBounds, builtin: Vec<S>) -> Vec<Group<S>> {
    let mut seeds: Vec<S> = bounds.seeds.iter().filter_map(S::from_instance).cloned().collect();
    if bounds.builtin_seeds {
        seeds.extend(builtin.into_iter().filter(|s| bounds.admits(&s.clone().into())));
    }
    let mut groups: Vec<Group<S>> = Vec::new();
    for s in seeds {
        match groups
            .iter_mut()
            .find(|g| g.items[0].universe_labels() == s.universe_labels())
        {
            Some(g) if !g.items.contains(&s) => g.items.push(s),
            Some(_) => {}
            None => {
                let label = format!("seeds |X|={}", s.universe_labels().len());
                groups.push(Group { label, items: vec![s] });
            }
        }
    }
    groups
}

fn t1_space(bounds: &SearchBounds) -> Result<Vec<Group<TypeOneSoftSet>>> {
    check_space(bounds, true)?;
    let mut groups = seed_groups(bounds, examples::kharal_triple().to_vec());
    if bounds.is_exhaustive() {
        for u in 1..=bounds.max_universe {
            groups.push(Group {
                label: format!("|X|={u}"),
                items: t1_group(bounds, u)?,
            });
        }
    }
    Ok(groups)
}

fn t2_space(bounds: &SearchBounds) -> Result<Vec<Group<TypeTwoSoftSet>>> {
    check_space(bounds, false)?;
    let (f, g) = examples::houses();
    let (ideal, [p1, p2]) = examples::pantries();
    let mut groups = seed_groups(bounds, vec![f, g, examples::deterministic(), ideal, p1, p2]);
    if bounds.is_exhaustive() {
        for u in 1..=bounds.max_universe {
            groups.push(Group {
                label: format!("|X|={u}"),
                items: t2_group(bounds, u)?,
            });
        }
    }
    Ok(groups)
}

// ---- scanning -------------------------------------------------------------

/// Per axiom: cases whose premise held, and the first violating case.
#[derive(Clone, Debug, Default)]
struct Scan {
    cases: u64,
    first: Option<Vec<usize>>,
}

type Outcome = (bool, bool);

fn rows<T: Send>(n: usize, parallel: bool, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    if parallel {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}

fn fold<const K: usize>(parts: Vec<[(u64, Option<Vec<usize>>); K]>) -> [Scan; K] {
    let mut out: [Scan; K] = std::array::from_fn(|_| Scan::default());
    for part in parts {
        for (scan, (cases, first)) in out.iter_mut().zip(part) {
            scan.cases += cases;
            if scan.first.is_none() {
                scan.first = first;
            }
        }
    }
    out
}

fn tally<const K: usize>(acc: &mut [(u64, Option<Vec<usize>>); K], res: [Outcome; K], at: impl Fn() -> Vec<usize>) {
    for ((cases, first), (premise, violation)) in acc.iter_mut().zip(res) {
        *cases += premise as u64;
        if violation && first.is_none() {
            *first = Some(at());
        }
    }
}

fn empty_acc<const K: usize>() -> [(u64, Option<Vec<usize>>); K] {
    std::array::from_fn(|_| (0, None))
}

fn scan_units<const K: usize>(n: usize, parallel: bool, f: impl Fn(usize) -> [Outcome; K] + Sync + Send) -> [Scan; K] {
    fold(rows(n, parallel, |i| {
        let mut acc = empty_acc();
        tally(&mut acc, f(i), || vec![i]);
        acc
    }))
}

fn scan_pairs<const K: usize>(
    n: usize,
    parallel: bool,
    f: impl Fn(usize, usize) -> [Outcome; K] + Sync + Send,
) -> [Scan; K] {
    fold(rows(n, parallel, |i| {
        let mut acc = empty_acc();
        for j in 0..n {
            tally(&mut acc, f(i, j), || vec![i, j]);
        }
        acc
    }))
}

fn scan_triples<const K: usize>(
    n: usize,
    parallel: bool,
    f: impl Fn(usize, usize, usize) -> [Outcome; K] + Sync + Send,
) -> [Scan; K] {
    fold(rows(n, parallel, |i| {
        let mut acc = empty_acc();
        for j in 0..n {
            for k in 0..n {
                tally(&mut acc, f(i, j, k), || vec![i, j, k]);
            }
        }
        acc
    }))
}

fn scan_list<const K: usize>(
    list: &[[usize; 3]],
    parallel: bool,
    f: impl Fn(usize, usize, usize) -> [Outcome; K] + Sync + Send,
) -> [Scan; K] {
    fold(rows(list.len(), parallel, |t| {
        let [i, j, k] = list[t];
        let mut acc = empty_acc();
        tally(&mut acc, f(i, j, k), || vec![i, j, k]);
        acc
    }))
}

/// All chains `i ⊑ j ⊑ k`, ordered by `i`, then `j`, then `k`.
fn scan_chains<const K: usize>(
    up: &[Vec<usize>],
    parallel: bool,
    f: impl Fn(usize, usize, usize) -> [Outcome; K] + Sync + Send,
) -> [Scan; K] {
    fold(rows(up.len(), parallel, |i| {
        let mut acc = empty_acc();
        for &j in &up[i] {
            for &k in &up[j] {
                tally(&mut acc, f(i, j, k), || vec![i, j, k]);
            }
        }
        acc
    }))
}

fn up_sets<S: Member>(items: &[S], mode: Containment, parallel: bool) -> Vec<Vec<usize>> {
    rows(items.len(), parallel, |i| {
        (0..items.len())
            .filter(|&j| items[i].contained(&items[j], mode))
            .collect()
    })
}

fn chain_count(up: &[Vec<usize>]) -> u128 {
    up.iter()
        .map(|js| js.iter().map(|&j| up[j].len() as u128).sum::<u128>())
        .sum()
}

fn sample_triples(n: usize, count: u64, seed: u64, stream: u64) -> Vec<[usize; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    (0..count).map(|_| [(); 3].map(|_| rng.random_range(0..n))).collect()
}

fn sample_chains(up: &[Vec<usize>], count: u64, seed: u64, stream: u64) -> Vec<[usize; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let n = up.len();
    (0..count)
        .map(|_| {
            let i = rng.random_range(0..n);
            let j = up[i][rng.random_range(0..up[i].len())];
            let k = up[j][rng.random_range(0..up[j].len())];
            [i, j, k]
        })
        .collect()
}

/// Whether every ordered triple of an `n`-item group is checked.
fn triples_exhaustive(n: usize, bounds: &SearchBounds) -> bool {
    (n as u128).pow(3) <= bounds.triple_cap
}

/// Dense `n × n` table of a pairwise value.
struct Table<V> {
    n: usize,
    vals: Vec<V>,
}

impl<V: Copy + Send + Sync> Table<V> {
    fn build<S: Sync>(items: &[S], parallel: bool, f: impl Fn(&S, &S) -> V + Sync + Send) -> Self {
        let n = items.len();
        let vals = rows(n, parallel, |i| {
            items.iter().map(|b| f(&items[i], b)).collect::<Vec<V>>()
        })
        .into_iter()
        .flatten()
        .collect();
        Self { n, vals }
    }

    fn get(&self, i: usize, j: usize) -> V {
        self.vals[i * self.n + j]
    }
}

// ---- verdict accumulation ---------------------------------------------------

struct Acc<S> {
    axiom: AxiomId,
    cases: u64,
    sampled: bool,
    witness: Option<Vec<S>>,
}

impl<S: Member> Acc<S> {
    fn new(axiom: AxiomId) -> Self {
        Self {
            axiom,
            cases: 0,
            sampled: false,
            witness: None,
        }
    }

    fn absorb(&mut self, scan: Scan, items: &[S], sampled: bool) {
        self.cases += scan.cases;
        self.sampled |= sampled;
        if self.witness.is_none() {
            self.witness = scan.first.map(|idx| idx.iter().map(|&i| items[i].clone()).collect());
        }
    }

    fn finish(self, target: LabTarget, containment: Containment) -> AxiomVerdict {
        let witness = self.witness.map(|xs| Witness {
            target,
            axiom: self.axiom,
            containment,
            instances: xs.into_iter().map(Into::into).collect(),
        });
        let status = match (&witness, self.sampled) {
            (Some(_), _) => VerdictStatus::Fails,
            (None, true) => VerdictStatus::HoldsOnSample,
            (None, false) => VerdictStatus::HoldsOnSpace,
        };
        let minimal = witness.as_ref().and_then(|w| minimize_witness(w).ok());
        AxiomVerdict {
            axiom: self.axiom,
            status,
            cases: self.cases,
            witness,
            minimal,
        }
    }
}

fn accs<S: Member, const K: usize>(axioms: [AxiomId; K]) -> [Acc<S>; K] {
    axioms.map(Acc::new)
}

fn absorb_all<S: Member, const K: usize>(accs: &mut [Acc<S>; K], scans: [Scan; K], items: &[S], sampled: bool) {
    for (acc, scan) in accs.iter_mut().zip(scans) {
        acc.absorb(scan, items, sampled);
    }
}

/// Random-mode cases: `trials` tuples from one generator, flattened so the
/// group scanners apply unchanged.
fn random_cases<S: Member, const A: usize>(
    bounds: &SearchBounds,
    stream: u64,
    gen: impl Fn(&mut ChaCha8Rng, &SearchBounds) -> [S; A],
) -> Option<(Vec<S>, Vec<[usize; 3]>)> {
    let SearchMode::Random { trials, seed } = bounds.mode else {
        return None;
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut items = Vec::with_capacity(trials as usize * A);
    let mut tuples = Vec::with_capacity(trials as usize);
    for t in 0..trials as usize {
        items.extend(gen(&mut rng, bounds));
        let base = t * A;
        tuples.push(std::array::from_fn(|k| base + k.min(A - 1)));
    }
    Some((items, tuples))
}

fn tiny_table<S: Member, V: Copy + Send + Sync>(items: &[S], f: impl Fn(&S, &S) -> V + Sync + Send) -> Table<V> {
    Table::build(items, false, f)
}

// ---- distances --------------------------------------------------------------

fn t1_distance(id: DistanceMeasureId) -> fn(&TypeOneSoftSet, &TypeOneSoftSet) -> Num {
    match id {
        DistanceMeasureId::KharalEuclidean => |a, b| Num::F(kharal_e_unchecked(a, b)),
        DistanceMeasureId::KharalNormalizedEuclidean => |a, b| Num::F(kharal_q_unchecked(a, b)),
        DistanceMeasureId::ParamBasedT1 => |a, b| Num::Q(Rational64::from_integer(dp_t1_unchecked(a, b) as i64)),
        DistanceMeasureId::MatrixBasedT1 => |a, b| Num::Q(Rational64::from_integer(dm_t1_unchecked(a, b) as i64)),
        _ => unreachable!("Type-2 measure"),
    }
}

const PAIR_AXIOMS: [AxiomId; 5] = [AxiomId::M1, AxiomId::M2, AxiomId::M4, AxiomId::M5, AxiomId::D5];

fn pair_outcomes<S: PartialEq>(items: &[S], t: &Table<Num>, i: usize, j: usize) -> [Outcome; 5] {
    let d = t.get(i, j);
    let equal = || i == j || items[i] == items[j];
    let zero = d.is_zero();
    let m4 = if zero {
        (equal(), false)
    } else {
        let e = equal();
        (e, e)
    };
    let m5 = if zero {
        let e = equal();
        (true, !e)
    } else {
        (false, false)
    };
    [
        (true, d.is_negative()),
        (true, !d.same(t.get(j, i))),
        m4,
        m5,
        (true, d.exceeds_one()),
    ]
}

fn triangle(t: &Table<Num>, i: usize, j: usize, k: usize) -> [Outcome; 1] {
    [(true, t.get(i, k).exceeds_sum(t.get(i, j), t.get(j, k)))]
}

fn additivity(t: &Table<Num>, i: usize, j: usize, k: usize) -> [Outcome; 1] {
    [(true, !t.get(i, k).equals_sum(t.get(i, j), t.get(j, k)))]
}

struct Gens<S> {
    pair: fn(&mut ChaCha8Rng, &SearchBounds) -> [S; 2],
    triple: fn(&mut ChaCha8Rng, &SearchBounds) -> [S; 3],
    chain: fn(&mut ChaCha8Rng, &SearchBounds) -> [S; 3],
}

fn t1_gens() -> Gens<TypeOneSoftSet> {
    Gens {
        pair: |r, b| random::random_pair_t1(r, b),
        triple: |r, b| random::random_triple_t1(r, b),
        chain: |r, b| random::random_chain_t1(r, b),
    }
}

fn t2_gens() -> Gens<TypeTwoSoftSet> {
    Gens {
        pair: |r, b| random::random_pair_t2(r, b),
        triple: |r, b| random::random_triple_t2(r, b),
        chain: |r, b| random::random_chain_t2(r, b),
    }
}

fn distance_verdicts<S: Member>(
    id: DistanceMeasureId,
    groups: &[Group<S>],
    bounds: &SearchBounds,
    gens: Gens<S>,
    dist: impl Fn(&S, &S) -> Num + Sync + Send + Copy,
    with_chains: bool,
) -> Vec<AxiomVerdict> {
    let par = bounds.parallel;
    let mut pair = accs::<S, 5>(PAIR_AXIOMS);
    let mut tri = accs::<S, 1>([AxiomId::M3]);
    let mut add = accs::<S, 1>([AxiomId::ChainAdditivity]);
    for (g, group) in groups.iter().enumerate() {
        let items = &group.items;
        let n = items.len();
        let t = Table::build(items, par, dist);
        absorb_all(
            &mut pair,
            scan_pairs(n, par, |i, j| pair_outcomes(items, &t, i, j)),
            items,
            false,
        );
        if triples_exhaustive(n, bounds) {
            absorb_all(
                &mut tri,
                scan_triples(n, par, |i, j, k| triangle(&t, i, j, k)),
                items,
                false,
            );
        } else {
            let list = sample_triples(n, bounds.triple_samples, bounds.rng_seed(), g as u64);
            absorb_all(
                &mut tri,
                scan_list(&list, par, |i, j, k| triangle(&t, i, j, k)),
                items,
                true,
            );
        }
        if with_chains {
            let up = up_sets(items, bounds.containment, par);
            if chain_count(&up) <= bounds.triple_cap {
                absorb_all(
                    &mut add,
                    scan_chains(&up, par, |i, j, k| additivity(&t, i, j, k)),
                    items,
                    false,
                );
            } else {
                let list = sample_chains(&up, bounds.triple_samples, bounds.rng_seed(), g as u64);
                absorb_all(
                    &mut add,
                    scan_list(&list, par, |i, j, k| additivity(&t, i, j, k)),
                    items,
                    true,
                );
            }
        }
    }
    if let Some((items, list)) = random_cases(bounds, 1, gens.pair) {
        let scans = scan_case_list(&items, &list, par, |case| {
            let t = tiny_table(case, dist);
            pair_outcomes(case, &t, 0, 1)
        });
        absorb_all(&mut pair, scans, &items, true);
    }
    if let Some((items, list)) = random_cases(bounds, 2, |r, b| {
        let [f, _] = (gens.pair)(r, b);
        [f.clone(), f]
    }) {
        let scans = scan_case_list(&items, &list, par, |case| {
            let t = tiny_table(case, dist);
            [pair_outcomes(case, &t, 0, 1)[2]]
        });
        let [scan] = scans;
        pair[2].absorb(scan, &items, true);
    }
    if let Some((items, list)) = random_cases(bounds, 3, gens.triple) {
        let scans = scan_case_list(&items, &list, par, |case| triangle(&tiny_table(case, dist), 0, 1, 2));
        absorb_all(&mut tri, scans, &items, true);
    }
    if with_chains {
        if let Some((items, list)) = random_cases(bounds, 4, gens.chain) {
            let scans = scan_case_list(&items, &list, par, |case| additivity(&tiny_table(case, dist), 0, 1, 2));
            absorb_all(&mut add, scans, &items, true);
        }
    }
    let target = LabTarget::Distance(id);
    let mode = bounds.containment;
    let [m1, m2, m4, m5, d5] = pair;
    let [m3] = tri;
    let [chain] = add;
    let mut out: Vec<AxiomVerdict> = [m1, m2, m3, m4, m5]
        .into_iter()
        .map(|a| a.finish(target, mode))
        .collect();
    if !id.is_t1() {
        let relabel = |v: &AxiomVerdict, axiom: AxiomId| {
            let re = |w: &Witness| Witness { axiom, ..w.clone() };
            AxiomVerdict {
                axiom,
                witness: v.witness.as_ref().map(re),
                minimal: v.minimal.as_ref().map(re),
                ..v.clone()
            }
        };
        out.extend([
            relabel(&out[1], AxiomId::D1),
            relabel(&out[0], AxiomId::D2),
            relabel(&out[3], AxiomId::D3),
            relabel(&out[4], AxiomId::D3Converse),
            relabel(&out[2], AxiomId::D4),
        ]);
        if id.is_normalized() {
            out.push(d5.finish(target, mode));
        }
        out.push(chain.finish(target, mode));
    }
    out
}

/// Scans random cases; each case is a contiguous run of the flattened item
/// list starting at its tuple's first index.
fn scan_case_list<S: Member, const K: usize>(
    items: &[S],
    list: &[[usize; 3]],
    parallel: bool,
    f: impl Fn(&[S]) -> [Outcome; K] + Sync + Send,
) -> [Scan; K] {
    fold(rows(list.len(), parallel, |c| {
        let [a, _, z] = list[c];
        let mut acc = empty_acc();
        let idx: Vec<usize> = (a..=z).collect();
        tally(&mut acc, f(&items[a..=z]), || idx.clone());
        acc
    }))
}

pub fn classify_distance(id: DistanceMeasureId, bounds: &SearchBounds) -> Result<MetricClassification> {
    let (verdicts, _) = distance_run(id, bounds)?;
    Ok(MetricClassification {
        measure: id,
        level: metric_level(&verdicts),
        verdicts,
    })
}

fn summary<S>(groups: &[Group<S>]) -> Vec<(String, usize)> {
    groups.iter().map(|g| (g.label.clone(), g.items.len())).collect()
}

type GroupCounts = Vec<(String, usize)>;

fn distance_run(id: DistanceMeasureId, bounds: &SearchBounds) -> Result<(Vec<AxiomVerdict>, GroupCounts)> {
    if id.is_t1() {
        let groups = t1_space(bounds)?;
        let v = distance_verdicts(id, &groups, bounds, t1_gens(), t1_distance(id), false);
        Ok((v, summary(&groups)))
    } else {
        let groups = t2_space(bounds)?;
        let dist = move |a: &TypeTwoSoftSet, b: &TypeTwoSoftSet| Num::Q(t2_rational_unchecked(id, a, b));
        let v = distance_verdicts(id, &groups, bounds, t2_gens(), dist, true);
        Ok((v, summary(&groups)))
    }
}

// ---- entropy ----------------------------------------------------------------

struct EntropyData {
    e: Vec<Rational64>,
    null: Vec<bool>,
    boundary: Vec<bool>,
    deterministic: Vec<bool>,
    profiles: Vec<Option<TraceProfile>>,
}

impl EntropyData {
    fn of(items: &[TypeTwoSoftSet], parallel: bool) -> Self {
        let per = rows(items.len(), parallel, |i| {
            let f = &items[i];
            let within = f.primary_count() <= SEARCH_LIMIT && f.underlying().len() <= SEARCH_LIMIT;
            (
                entropy_t2(f),
                f.is_null(),
                f.is_null() || f.is_absolute(),
                f.is_deterministic(),
                within.then(|| TraceProfile::of(f)),
            )
        });
        let mut d = EntropyData {
            e: Vec::new(),
            null: Vec::new(),
            boundary: Vec::new(),
            deterministic: Vec::new(),
            profiles: Vec::new(),
        };
        for (e, null, boundary, det, prof) in per {
            d.e.push(e);
            d.null.push(null);
            d.boundary.push(boundary);
            d.deterministic.push(det);
            d.profiles.push(prof);
        }
        d
    }

    fn equivalent(&self, i: usize, j: usize) -> Option<bool> {
        match (&self.profiles[i], &self.profiles[j]) {
            (Some(p), Some(q)) => Some(equivalence_between(p, q).is_some()),
            _ => None,
        }
    }

    /// e1 and e3.
    fn unit(&self, i: usize) -> [Outcome; 2] {
        let (b, d) = (self.boundary[i], self.deterministic[i]);
        [(b, b && !self.e[i].is_one()), (d, d && !self.e[i].is_zero())]
    }

    /// e2, e4 and the converse of e4.
    fn pair(&self, items: &[TypeTwoSoftSet], mode: Containment, i: usize, j: usize) -> [Outcome; 3] {
        let chain = !self.null[i] && items[i].contained(&items[j], mode);
        let same = self.e[i] == self.e[j];
        let eqv = self.equivalent(i, j);
        [
            (chain, chain && self.e[i] > self.e[j]),
            (eqv == Some(true), eqv == Some(true) && !same),
            (same && eqv.is_some(), same && eqv == Some(false)),
        ]
    }
}

fn entropy_verdicts(groups: &[Group<TypeTwoSoftSet>], bounds: &SearchBounds) -> Vec<AxiomVerdict> {
    let par = bounds.parallel;
    let mode = bounds.containment;
    let mut unit = accs::<TypeTwoSoftSet, 2>([AxiomId::E1, AxiomId::E3]);
    let mut pair = accs::<TypeTwoSoftSet, 3>([AxiomId::E2, AxiomId::E4, AxiomId::E4Converse]);
    for group in groups {
        let items = &group.items;
        let d = EntropyData::of(items, par);
        absorb_all(&mut unit, scan_units(items.len(), par, |i| d.unit(i)), items, false);
        absorb_all(
            &mut pair,
            scan_pairs(items.len(), par, |i, j| d.pair(items, mode, i, j)),
            items,
            false,
        );
    }
    let unit_case = |k: usize| move |case: &[TypeTwoSoftSet]| [EntropyData::of(case, false).unit(0)[k]];
    let pair_case = |k: usize| move |case: &[TypeTwoSoftSet]| [EntropyData::of(case, false).pair(case, mode, 0, 1)[k]];
    if let Some((items, list)) = random_cases(bounds, 11, |r, b| [random::random_boundary_shape(r, b)]) {
        let [s] = scan_case_list(&items, &list, par, unit_case(0));
        unit[0].absorb(s, &items, true);
    }
    if let Some((items, list)) = random_cases(bounds, 12, |r, b| [random::random_deterministic_t2(r, b)]) {
        let [s] = scan_case_list(&items, &list, par, unit_case(1));
        unit[1].absorb(s, &items, true);
    }
    if let Some((items, list)) = random_cases(bounds, 13, |r, b| {
        let [f, g, _] = random::random_chain_t2(r, b);
        [f, g]
    }) {
        let [s] = scan_case_list(&items, &list, par, pair_case(0));
        pair[0].absorb(s, &items, true);
    }
    if let Some((items, list)) = random_cases(bounds, 14, |r, b| {
        let f = random::random_t2(r, b);
        let g = random::random_equivalent_twin(r, &f);
        [f, g]
    }) {
        let [s] = scan_case_list(&items, &list, par, pair_case(1));
        pair[1].absorb(s, &items, true);
    }
    if let Some((items, list)) = random_cases(bounds, 15, |r, b| random::random_pair_t2(r, b)) {
        let [s] = scan_case_list(&items, &list, par, pair_case(2));
        pair[2].absorb(s, &items, true);
    }
    let [e1, e3] = unit;
    let [e2, e4, e4c] = pair;
    [e1, e2, e3, e4, e4c]
        .into_iter()
        .map(|a| a.finish(LabTarget::Entropy, mode))
        .collect()
}

pub fn check_entropy_axioms(bounds: &SearchBounds) -> Result<Vec<AxiomVerdict>> {
    Ok(entropy_verdicts(&t2_space(bounds)?, bounds))
}

// ---- similarity ---------------------------------------------------------------

fn scalar_value(
    target: SimilarityTarget,
) -> impl Fn(&TypeTwoSoftSet, &TypeTwoSoftSet) -> Rational64 + Sync + Send + Copy {
    move |f, g| match target {
        SimilarityTarget::Sm => big_to_r64(&sm_unchecked(f, g)),
        SimilarityTarget::Sd(id) => sd_unchecked(f, g, id),
        SimilarityTarget::Se => se_unchecked(f, g),
        SimilarityTarget::Profile => unreachable!("profile is not scalar"),
    }
}

/// s1, s2, s3 and the converse of s3.
fn scalar_pair(items: &[TypeTwoSoftSet], t: &Table<Rational64>, i: usize, j: usize) -> [Outcome; 4] {
    let v = t.get(i, j);
    let one = Rational64::one();
    let equal = || i == j || items[i] == items[j];
    let s3 = if v == one {
        (equal(), false)
    } else {
        let e = equal();
        (e, e)
    };
    let s3c = if v == one { (true, !equal()) } else { (false, false) };
    [
        (true, v != t.get(j, i)),
        (true, v < Rational64::zero() || v > one),
        s3,
        s3c,
    ]
}

fn scalar_chain(t: &Table<Rational64>, i: usize, j: usize, k: usize) -> [Outcome; 1] {
    [(true, t.get(i, k) > t.get(i, j).min(t.get(j, k)))]
}

fn scalar_verdicts(
    target: SimilarityTarget,
    groups: &[Group<TypeTwoSoftSet>],
    bounds: &SearchBounds,
) -> Vec<AxiomVerdict> {
    let par = bounds.parallel;
    let mode = bounds.containment;
    let value = scalar_value(target);
    let mut pair = accs::<TypeTwoSoftSet, 4>([AxiomId::S1, AxiomId::S2, AxiomId::S3, AxiomId::S3Converse]);
    let mut chain = accs::<TypeTwoSoftSet, 1>([AxiomId::S4]);
    for (g, group) in groups.iter().enumerate() {
        let items = &group.items;
        let t = Table::build(items, par, value);
        absorb_all(
            &mut pair,
            scan_pairs(items.len(), par, |i, j| scalar_pair(items, &t, i, j)),
            items,
            false,
        );
        let up = up_sets(items, mode, par);
        if chain_count(&up) <= bounds.triple_cap {
            absorb_all(
                &mut chain,
                scan_chains(&up, par, |i, j, k| scalar_chain(&t, i, j, k)),
                items,
                false,
            );
        } else {
            let list = sample_chains(&up, bounds.triple_samples, bounds.rng_seed(), g as u64);
            absorb_all(
                &mut chain,
                scan_list(&list, par, |i, j, k| scalar_chain(&t, i, j, k)),
                items,
                true,
            );
        }
    }
    if let Some((items, list)) = random_cases(bounds, 21, |r, b| random::random_pair_t2(r, b)) {
        let scans = scan_case_list(&items, &list, par, |case| {
            scalar_pair(case, &tiny_table(case, value), 0, 1)
        });
        absorb_all(&mut pair, scans, &items, true);
    }
    if let Some((items, list)) = random_cases(bounds, 22, |r, b| {
        let f = random::random_t2(r, b);
        [f.clone(), f]
    }) {
        let [_, _, s, _] = scan_case_list(&items, &list, par, |case| {
            scalar_pair(case, &tiny_table(case, value), 0, 1)
        });
        pair[2].absorb(s, &items, true);
    }
    if let Some((items, list)) = random_cases(bounds, 23, |r, b| random::random_chain_t2(r, b)) {
        let scans = scan_case_list(&items, &list, par, |case| {
            scalar_chain(&tiny_table(case, value), 0, 1, 2)
        });
        absorb_all(&mut chain, scans, &items, true);
    }
    let t = LabTarget::Similarity(target);
    let [s1, s2, s3, s3c] = pair;
    let [s4] = chain;
    [s1, s2, s3, s3c, s4].into_iter().map(|a| a.finish(t, mode)).collect()
}

/// Profiles of a group stored densely over the group's sorted primary labels;
/// `None` marks a label outside `A ∪ B`.
struct ProfileTable {
    labels: Vec<String>,
    n: usize,
    vals: Vec<Option<Rational64>>,
}

impl ProfileTable {
    fn build(items: &[TypeTwoSoftSet], parallel: bool) -> Self {
        let mut labels: Vec<String> = items.iter().flat_map(|f| f.primary().map(str::to_string)).collect();
        labels.sort();
        labels.dedup();
        let n = items.len();
        let vals = rows(n, parallel, |i| {
            let mut row = Vec::with_capacity(n * labels.len());
            for b in items {
                let p = profile_unchecked(&items[i], b);
                row.extend(labels.iter().map(|l| p.get(l).map(big_to_r64)));
            }
            row
        })
        .into_iter()
        .flatten()
        .collect();
        Self { labels, n, vals }
    }

    fn get(&self, i: usize, j: usize) -> &[Option<Rational64>] {
        let l = self.labels.len();
        let at = (i * self.n + j) * l;
        &self.vals[at..at + l]
    }

    /// s′1, s′2, s′3, the converse of s′3, and s′5.
    fn pair(&self, items: &[TypeTwoSoftSet], i: usize, j: usize) -> [Outcome; 5] {
        let (fg, gf) = (self.get(i, j), self.get(j, i));
        let one = Rational64::one();
        let scores = || self.labels.iter().zip(fg).filter_map(|(l, v)| v.map(|v| (l, v)));
        let p3 = scores().any(|(l, v)| v != one && profile::inner_equal(&items[i], &items[j], l));
        let p3c = scores().any(|(l, v)| v == one && !profile::inner_equal(&items[i], &items[j], l));
        let disjoint = profile::disjoint(&items[i], &items[j]);
        [
            (true, fg != gf),
            (true, scores().any(|(_, v)| v < Rational64::zero() || v > one)),
            (true, p3),
            (true, p3c),
            (disjoint, disjoint && scores().any(|(_, v)| !v.is_zero())),
        ]
    }

    /// s′4 on the chain `i ⊑ j ⊑ k`.
    fn chain(&self, i: usize, j: usize, k: usize) -> [Outcome; 1] {
        let (fh, fg, gh) = (self.get(i, k), self.get(i, j), self.get(j, k));
        let zero = Rational64::zero();
        let bad = (0..self.labels.len()).any(|a| match fh[a] {
            Some(v) => v > fg[a].unwrap_or(zero).min(gh[a].unwrap_or(zero)),
            None => false,
        });
        [(true, bad)]
    }
}

fn profile_verdicts(groups: &[Group<TypeTwoSoftSet>], bounds: &SearchBounds) -> Vec<AxiomVerdict> {
    let par = bounds.parallel;
    let mode = bounds.containment;
    let mut pair = accs::<TypeTwoSoftSet, 5>([AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P3Converse, AxiomId::P5]);
    let mut chain = accs::<TypeTwoSoftSet, 1>([AxiomId::P4]);
    for (g, group) in groups.iter().enumerate() {
        let items = &group.items;
        let t = ProfileTable::build(items, par);
        absorb_all(
            &mut pair,
            scan_pairs(items.len(), par, |i, j| t.pair(items, i, j)),
            items,
            false,
        );
        let up = up_sets(items, mode, par);
        if chain_count(&up) <= bounds.triple_cap {
            absorb_all(
                &mut chain,
                scan_chains(&up, par, |i, j, k| t.chain(i, j, k)),
                items,
                false,
            );
        } else {
            let list = sample_chains(&up, bounds.triple_samples, bounds.rng_seed(), g as u64);
            absorb_all(
                &mut chain,
                scan_list(&list, par, |i, j, k| t.chain(i, j, k)),
                items,
                true,
            );
        }
    }
    if let Some((items, list)) = random_cases(bounds, 31, |r, b| random::random_pair_t2(r, b)) {
        let [p1, p2, p3, p3c, _] = scan_case_list(&items, &list, par, |case| {
            ProfileTable::build(case, false).pair(case, 0, 1)
        });
        for (acc, s) in pair.iter_mut().zip([p1, p2, p3, p3c]) {
            acc.absorb(s, &items, true);
        }
    }
    if let Some((items, list)) = random_cases(bounds, 32, |r, b| random::random_disjoint_pair(r, b)) {
        let [.., p5] = scan_case_list(&items, &list, par, |case| {
            ProfileTable::build(case, false).pair(case, 0, 1)
        });
        pair[4].absorb(p5, &items, true);
    }
    if let Some((items, list)) = random_cases(bounds, 33, |r, b| random::random_chain_t2(r, b)) {
        let scans = scan_case_list(&items, &list, par, |case| {
            ProfileTable::build(case, false).chain(0, 1, 2)
        });
        absorb_all(&mut chain, scans, &items, true);
    }
    let t = LabTarget::Similarity(SimilarityTarget::Profile);
    let [p1, p2, p3, p3c, p5] = pair;
    let [p4] = chain;
    [p1, p2, p3, p3c, p4, p5]
        .into_iter()
        .map(|a| a.finish(t, mode))
        .collect()
}

pub fn check_similarity_axioms(target: SimilarityTarget, bounds: &SearchBounds) -> Result<Vec<AxiomVerdict>> {
    if let SimilarityTarget::Sd(id) = target {
        if id.is_t1() {
            return Err(Error::WrongMeasureArity(id));
        }
    }
    let groups = t2_space(bounds)?;
    Ok(match target {
        SimilarityTarget::Profile => profile_verdicts(&groups, bounds),
        other => scalar_verdicts(other, &groups, bounds),
    })
}

/// Runs every check that applies to `target`.
pub fn run(target: LabTarget, bounds: &SearchBounds) -> Result<LabReport> {
    let (level, verdicts, groups) = match target {
        LabTarget::Distance(id) => {
            let (v, groups) = distance_run(id, bounds)?;
            (Some(metric_level(&v)), v, groups)
        }
        LabTarget::Entropy => {
            let groups = t2_space(bounds)?;
            (None, entropy_verdicts(&groups, bounds), summary(&groups))
        }
        LabTarget::Similarity(s) => {
            let groups = t2_space(bounds)?;
            let v = match s {
                SimilarityTarget::Profile => profile_verdicts(&groups, bounds),
                SimilarityTarget::Sd(id) if id.is_t1() => return Err(Error::WrongMeasureArity(id)),
                other => scalar_verdicts(other, &groups, bounds),
            };
            (None, v, summary(&groups))
        }
    };
    Ok(LabReport {
        target,
        bounds: bounds.clone(),
        level,
        verdicts,
        groups,
    })
}
