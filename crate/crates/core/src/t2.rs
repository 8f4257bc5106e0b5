//! Type-2 soft sets: each primary parameter maps to a Type-1 soft set over
//! its own underlying parameters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, LabelScope, Result};
use crate::t1::{validate_over, Containment, RawSoftSet, TypeOneSoftSet};
use crate::universe::{ElementSet, Universe};

/// Unvalidated input for [`validate_t2ss`]. Each inner raw soft set carries
/// its own universe, which must match the outer one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawTypeTwo {
    pub universe: Vec<String>,
    pub primary: Vec<String>,
    pub inner: Vec<(String, RawSoftSet)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeTwoSoftSet {
    universe: Universe,
    inner: BTreeMap<String, TypeOneSoftSet>,
    underlying: BTreeSet<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DisjointnessClass {
    Disjoint,
    WeaklyDisjoint,
    ElementwiseDisjoint,
    Overlapping,
}

/// The primary (`star`) and underlying (`double_star`) parameters under
/// which one universe element appears.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceSets {
    pub star: BTreeSet<String>,
    pub double_star: BTreeSet<String>,
}

pub fn validate_t2ss(raw: &RawTypeTwo) -> Result<TypeTwoSoftSet> {
    let universe = Universe::new(raw.universe.iter().cloned())?;
    let mut slots: BTreeMap<String, Option<TypeOneSoftSet>> = BTreeMap::new();
    for p in &raw.primary {
        if p.is_empty() {
            return Err(Error::EmptyLabel {
                scope: LabelScope::PrimaryParameter,
            });
        }
        if slots.insert(p.clone(), None).is_some() {
            return Err(Error::DuplicateLabel {
                scope: LabelScope::PrimaryParameter,
                label: p.clone(),
            });
        }
    }
    for (p, inner_raw) in &raw.inner {
        let slot = slots
            .get_mut(p)
            .ok_or_else(|| Error::UnknownParameter { param: p.clone() })?;
        if slot.is_some() {
            return Err(Error::DuplicateLabel {
                scope: LabelScope::PrimaryParameter,
                label: p.clone(),
            });
        }
        let mut inner_universe = inner_raw.universe.clone();
        inner_universe.sort();
        if inner_universe != universe.labels() {
            return Err(Error::InconsistentUniverse { param: p.clone() });
        }
        *slot = Some(validate_over(
            &universe,
            &inner_raw.params,
            &inner_raw.images,
            LabelScope::UnderlyingParameter,
        )?);
    }
    let inner = slots
        .into_iter()
        .map(|(p, s)| match s {
            Some(s) => Ok((p, s)),
            None => Err(Error::MissingImage { param: p }),
        })
        .collect::<Result<Vec<_>>>()?;
    TypeTwoSoftSet::new(&universe, inner)
}

impl TypeTwoSoftSet {
    pub fn new<P: Into<String>>(
        universe: &Universe,
        inner: impl IntoIterator<Item = (P, TypeOneSoftSet)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, set) in inner {
            let p = p.into();
            if p.is_empty() {
                return Err(Error::EmptyLabel {
                    scope: LabelScope::PrimaryParameter,
                });
            }
            if set.universe() != universe {
                return Err(Error::InconsistentUniverse { param: p });
            }
            if map.contains_key(&p) {
                return Err(Error::DuplicateLabel {
                    scope: LabelScope::PrimaryParameter,
                    label: p,
                });
            }
            map.insert(p, set);
        }
        Ok(Self::from_map(universe.clone(), map))
    }

    pub(crate) fn from_map(universe: Universe, inner: BTreeMap<String, TypeOneSoftSet>) -> Self {
        let underlying = inner.values().flat_map(|s| s.params().map(str::to_string)).collect();
        Self {
            universe,
            inner,
            underlying,
        }
    }

    /// Convenience constructor from nested `(α, [(β, items)])` literals.
    pub fn from_literal<'a>(
        universe: &Universe,
        inner: impl IntoIterator<Item = (&'a str, Vec<(&'a str, Vec<&'a str>)>)>,
    ) -> Result<Self> {
        let sets = inner
            .into_iter()
            .map(|(p, assignments)| Ok((p, TypeOneSoftSet::new(universe, assignments)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, sets)
    }

    /// The soft set with no primary parameters.
    pub fn empty(universe: &Universe) -> Self {
        Self::from_map(universe.clone(), BTreeMap::new())
    }

    /// Every inner image empty, with the given `α → E^α` shape.
    pub fn null<P, Q, I>(universe: &Universe, shape: impl IntoIterator<Item = (P, I)>) -> Result<Self>
    where
        P: Into<String>,
        Q: Into<String>,
        I: IntoIterator<Item = Q>,
    {
        Self::shaped(universe, shape, TypeOneSoftSet::null)
    }

    /// Every inner image equal to the universe, with the given shape.
    pub fn absolute<P, Q, I>(universe: &Universe, shape: impl IntoIterator<Item = (P, I)>) -> Result<Self>
    where
        P: Into<String>,
        Q: Into<String>,
        I: IntoIterator<Item = Q>,
    {
        Self::shaped(universe, shape, TypeOneSoftSet::absolute)
    }

    fn shaped<P, Q, I>(
        universe: &Universe,
        shape: impl IntoIterator<Item = (P, I)>,
        make: fn(&Universe, Vec<String>) -> Result<TypeOneSoftSet>,
    ) -> Result<Self>
    where
        P: Into<String>,
        Q: Into<String>,
        I: IntoIterator<Item = Q>,
    {
        let inner = shape
            .into_iter()
            .map(|(p, qs)| {
                let qs: Vec<String> = qs.into_iter().map(Into::into).collect();
                make(universe, qs)
                    .map_err(|e| match e {
                        Error::DuplicateLabel { label, .. } => Error::DuplicateLabel {
                            scope: LabelScope::UnderlyingParameter,
                            label,
                        },
                        Error::EmptyLabel { .. } => Error::EmptyLabel {
                            scope: LabelScope::UnderlyingParameter,
                        },
                        other => other,
                    })
                    .map(|s| (p.into(), s))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, inner)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn primary(&self) -> impl Iterator<Item = &str> + '_ {
        self.inner.keys().map(String::as_str)
    }

    pub fn primary_count(&self) -> usize {
        self.inner.len()
    }

    pub fn has_primary(&self, p: &str) -> bool {
        self.inner.contains_key(p)
    }

    /// `E_A`, the union of all inner parameter sets.
    pub fn underlying(&self) -> &BTreeSet<String> {
        &self.underlying
    }

    pub fn inner(&self, p: &str) -> Option<&TypeOneSoftSet> {
        self.inner.get(p)
    }

    pub fn inners(&self) -> &BTreeMap<String, TypeOneSoftSet> {
        &self.inner
    }

    /// Union of every inner image.
    pub fn element_cover(&self) -> ElementSet {
        self.inner
            .values()
            .fold(ElementSet::new(), |acc, s| acc.union(&s.element_cover()))
    }

    pub fn is_null(&self) -> bool {
        self.inner.values().all(TypeOneSoftSet::is_null)
    }

    pub fn is_absolute(&self) -> bool {
        self.inner.values().all(TypeOneSoftSet::is_absolute)
    }

    fn same_universe(&self, other: &Self) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut inner = self.inner.clone();
        for (p, set) in &other.inner {
            match inner.get_mut(p) {
                Some(mine) => *mine = mine.union(set)?,
                None => {
                    inner.insert(p.clone(), set.clone());
                }
            }
        }
        Ok(Self::from_map(self.universe.clone(), inner))
    }

    /// Per shared primary parameter, the restricted intersection of the inner
    /// sets. Inner results without parameters are kept.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let inner = self
            .inner
            .iter()
            .filter_map(|(p, set)| other.inner.get(p).map(|o| (p, set, o)))
            .map(|(p, set, o)| Ok((p.clone(), set.intersection(o)?)))
            .collect::<Result<_>>()?;
        Ok(Self::from_map(self.universe.clone(), inner))
    }

    pub fn contains_in(&self, other: &Self, mode: Containment) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.contained_unchecked(other, mode))
    }

    pub(crate) fn contained_unchecked(&self, other: &Self, mode: Containment) -> bool {
        self.inner.len() <= other.inner.len()
            && self
                .inner
                .iter()
                .all(|(p, set)| other.inner.get(p).is_some_and(|o| set.contained_unchecked(o, mode)))
    }

    pub fn classify_disjointness(&self, other: &Self) -> Result<DisjointnessClass> {
        self.same_universe(other)?;
        let shared: Vec<(&TypeOneSoftSet, &TypeOneSoftSet)> = self
            .inner
            .iter()
            .filter_map(|(p, set)| other.inner.get(p).map(|o| (set, o)))
            .collect();
        if shared.is_empty() {
            return Ok(DisjointnessClass::Disjoint);
        }
        let no_shared_underlying = shared.iter().all(|(a, b)| a.params().all(|q| !b.has_param(q)));
        if no_shared_underlying {
            return Ok(DisjointnessClass::WeaklyDisjoint);
        }
        let all_null = shared.iter().all(|(a, b)| {
            a.images()
                .iter()
                .all(|(q, img)| b.image(q).is_none_or(|o| img.is_disjoint(o)))
        });
        Ok(if all_null {
            DisjointnessClass::ElementwiseDisjoint
        } else {
            DisjointnessClass::Overlapping
        })
    }

    /// Every element sits under exactly one `(α, β)`, primary and
    /// underlying labels do not collide, and inner parameter sets are
    /// pairwise disjoint. Absolute soft sets never qualify.
    pub fn is_deterministic(&self) -> bool {
        if self.underlying.iter().any(|q| self.inner.contains_key(q)) {
            return false;
        }
        let total: usize = self.inner.values().map(TypeOneSoftSet::param_count).sum();
        if total != self.underlying.len() {
            // some underlying label is shared by two primary parameters
            return false;
        }
        let mut seen = ElementSet::new();
        for set in self.inner.values() {
            for img in set.images().values() {
                if !seen.is_disjoint(img) {
                    return false;
                }
                seen = seen.union(img);
            }
        }
        seen == self.universe.full() && !self.is_absolute()
    }

    pub fn trace_sets(&self, x: &str) -> Result<TraceSets> {
        let idx = self
            .universe
            .index_of(x)
            .ok_or_else(|| Error::ElementNotInUniverse(x.to_string()))?;
        let mut out = TraceSets::default();
        for (p, set) in &self.inner {
            for (q, img) in set.images() {
                if img.contains(idx) {
                    out.star.insert(p.clone());
                    out.double_star.insert(q.clone());
                }
            }
        }
        Ok(out)
    }

    /// `(|𝓕*_x|, |𝓕**_x|)` for every element position.
    pub(crate) fn trace_sizes(&self) -> Vec<(usize, usize)> {
        let n = self.universe.len();
        let mut star = vec![0usize; n];
        let mut dstar: Vec<BTreeSet<&str>> = vec![BTreeSet::new(); n];
        for set in self.inner.values() {
            let mut hit = ElementSet::new();
            for (q, img) in set.images() {
                hit = hit.union(img);
                for i in img.iter() {
                    dstar[i].insert(q);
                }
            }
            for i in hit.iter() {
                star[i] += 1;
            }
        }
        star.into_iter().zip(dstar.iter().map(BTreeSet::len)).collect()
    }

    /// Renames primary labels through `psi` and underlying labels through
    /// `gamma`; unmapped labels are kept.
    pub fn relabeled(&self, psi: &BTreeMap<String, String>, gamma: &BTreeMap<String, String>) -> Self {
        let inner = self
            .inner
            .iter()
            .map(|(p, set)| (psi.get(p).cloned().unwrap_or_else(|| p.clone()), set.relabeled(gamma)))
            .collect();
        Self::from_map(self.universe.clone(), inner)
    }

    pub(crate) fn without_element(&self, universe: &Universe, idx: usize) -> Self {
        let inner = self
            .inner
            .iter()
            .map(|(p, s)| (p.clone(), s.without_element(universe, idx)))
            .collect();
        Self::from_map(universe.clone(), inner)
    }

    pub(crate) fn without_primary(&self, p: &str) -> Self {
        let mut inner = self.inner.clone();
        inner.remove(p);
        Self::from_map(self.universe.clone(), inner)
    }

    pub(crate) fn with_inner(&self, p: &str, set: TypeOneSoftSet) -> Self {
        let mut inner = self.inner.clone();
        inner.insert(p.to_string(), set);
        Self::from_map(self.universe.clone(), inner)
    }
}

fn write_t1(f: &mut fmt::Formatter<'_>, set: &TypeOneSoftSet) -> fmt::Result {
    f.write_str("{")?;
    for (i, (p, img)) in set.images().iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{p}: {{")?;
        for (j, x) in set.universe().labels_of(img).enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            f.write_str(x)?;
        }
        f.write_str("}")?;
    }
    f.write_str("}")
}

impl fmt::Display for TypeOneSoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_t1(f, self)
    }
}

impl fmt::Display for TypeTwoSoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (p, set)) in self.inner.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{p} ↦ ")?;
            write_t1(f, set)?;
        }
        f.write_str("]")
    }
}
