//! Type-1 soft sets: a parameter set together with a total map from each
//! parameter to a subset of the universe.

use std::collections::BTreeMap;

use crate::error::{Error, LabelScope, Result};
use crate::universe::{ElementSet, Universe};

/// How images are compared when one soft set is tested for containment in another.
///
/// `Subset` requires `F(α) ⊆ G(α)`; `Equality` requires `F(α) = G(α)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Containment {
    #[default]
    Subset,
    Equality,
}

impl Containment {
    pub(crate) fn images_ok(self, small: &ElementSet, large: &ElementSet) -> bool {
        match self {
            Containment::Subset => small.is_subset(large),
            Containment::Equality => small == large,
        }
    }
}

/// Unvalidated input for [`validate_t1ss`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawSoftSet {
    pub universe: Vec<String>,
    pub params: Vec<String>,
    pub images: Vec<(String, Vec<String>)>,
}

/// A validated Type-1 soft set. Parameters are stored in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeOneSoftSet {
    universe: Universe,
    images: BTreeMap<String, ElementSet>,
}

pub fn validate_t1ss(raw: &RawSoftSet) -> Result<TypeOneSoftSet> {
    let universe = Universe::new(raw.universe.iter().cloned())?;
    validate_over(&universe, &raw.params, &raw.images, LabelScope::Parameter)
}

pub(crate) fn validate_over(
    universe: &Universe,
    params: &[String],
    images: &[(String, Vec<String>)],
    scope: LabelScope,
) -> Result<TypeOneSoftSet> {
    let mut out: BTreeMap<String, Option<ElementSet>> = BTreeMap::new();
    for p in params {
        if p.is_empty() {
            return Err(Error::EmptyLabel { scope });
        }
        if out.insert(p.clone(), None).is_some() {
            return Err(Error::DuplicateLabel {
                scope,
                label: p.clone(),
            });
        }
    }
    for (p, items) in images {
        let slot = out
            .get_mut(p)
            .ok_or_else(|| Error::UnknownParameter { param: p.clone() })?;
        if slot.is_some() {
            return Err(Error::DuplicateLabel {
                scope,
                label: p.clone(),
            });
        }
        let set = universe
            .subset(items.iter().map(String::as_str))
            .map_err(|e| Error::ImageOutsideUniverse {
                param: p.clone(),
                element: e.to_string(),
            })?;
        *slot = Some(set);
    }
    let images = out
        .into_iter()
        .map(|(p, img)| match img {
            Some(img) => Ok((p, img)),
            None => Err(Error::MissingImage { param: p }),
        })
        .collect::<Result<_>>()?;
    Ok(TypeOneSoftSet {
        universe: universe.clone(),
        images,
    })
}

impl TypeOneSoftSet {
    /// Builds a soft set from `(parameter, image items)` pairs; the parameter
    /// set is exactly the set of keys.
    pub fn new<P, I, S>(universe: &Universe, assignments: impl IntoIterator<Item = (P, I)>) -> Result<Self>
    where
        P: Into<String>,
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let images: Vec<(String, Vec<String>)> = assignments
            .into_iter()
            .map(|(p, items)| (p.into(), items.into_iter().map(Into::into).collect()))
            .collect();
        let params: Vec<String> = images.iter().map(|(p, _)| p.clone()).collect();
        validate_over(universe, &params, &images, LabelScope::Parameter)
    }

    /// Builds directly from already-resolved images.
    pub fn from_images(universe: &Universe, images: BTreeMap<String, ElementSet>) -> Result<Self> {
        if images.keys().any(String::is_empty) {
            return Err(Error::EmptyLabel {
                scope: LabelScope::Parameter,
            });
        }
        let n = universe.len();
        for (p, img) in &images {
            if let Some(bad) = img.iter().find(|&i| i >= n) {
                return Err(Error::ImageOutsideUniverse {
                    param: p.clone(),
                    element: format!("#{bad}"),
                });
            }
        }
        Ok(Self {
            universe: universe.clone(),
            images,
        })
    }

    /// The soft set with no parameters.
    pub fn empty(universe: &Universe) -> Self {
        Self {
            universe: universe.clone(),
            images: BTreeMap::new(),
        }
    }

    /// Every parameter maps to the empty set.
    pub fn null<S: Into<String>>(universe: &Universe, params: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::uniform(universe, params, ElementSet::new())
    }

    /// Every parameter maps to the whole universe.
    pub fn absolute<S: Into<String>>(universe: &Universe, params: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::uniform(universe, params, universe.full())
    }

    fn uniform<S: Into<String>>(
        universe: &Universe,
        params: impl IntoIterator<Item = S>,
        image: ElementSet,
    ) -> Result<Self> {
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        let images: Vec<(String, Vec<String>)> = params
            .iter()
            .map(|p| (p.clone(), universe.labels_of(&image).map(str::to_string).collect()))
            .collect();
        validate_over(universe, &params, &images, LabelScope::Parameter)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn params(&self) -> impl Iterator<Item = &str> + '_ {
        self.images.keys().map(String::as_str)
    }

    pub fn param_count(&self) -> usize {
        self.images.len()
    }

    pub fn has_param(&self, p: &str) -> bool {
        self.images.contains_key(p)
    }

    pub fn image(&self, p: &str) -> Option<&ElementSet> {
        self.images.get(p)
    }

    pub fn images(&self) -> &BTreeMap<String, ElementSet> {
        &self.images
    }

    /// Image labels of `p`, in universe order.
    pub fn image_labels(&self, p: &str) -> Option<Vec<&str>> {
        self.images.get(p).map(|img| self.universe.labels_of(img).collect())
    }

    /// Union of all images.
    pub fn element_cover(&self) -> ElementSet {
        self.images.values().fold(ElementSet::new(), |acc, img| acc.union(img))
    }

    pub fn is_null(&self) -> bool {
        self.images.values().all(ElementSet::is_empty)
    }

    pub fn is_absolute(&self) -> bool {
        let full = self.universe.full();
        self.images.values().all(|img| *img == full)
    }

    pub(crate) fn same_universe(&self, other: &Self) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Parameters `A ∪ B`, images unioned pointwise; a parameter present on
    /// one side only keeps its image.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut images = self.images.clone();
        for (p, img) in &other.images {
            images
                .entry(p.clone())
                .and_modify(|mine| *mine = mine.union(img))
                .or_insert_with(|| img.clone());
        }
        Ok(Self {
            universe: self.universe.clone(),
            images,
        })
    }

    /// Restricted intersection: parameters `A ∩ B` with pointwise
    /// intersected images, or the parameter-free soft set when `A ∩ B = ∅`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let images = self
            .images
            .iter()
            .filter_map(|(p, img)| other.images.get(p).map(|o| (p.clone(), img.intersection(o))))
            .collect();
        Ok(Self {
            universe: self.universe.clone(),
            images,
        })
    }

    /// `A ⊆ B` and, for every `α ∈ A`, the image relation selected by `mode`.
    pub fn contains_in(&self, other: &Self, mode: Containment) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.contained_unchecked(other, mode))
    }

    pub(crate) fn contained_unchecked(&self, other: &Self, mode: Containment) -> bool {
        self.images.len() <= other.images.len()
            && self
                .images
                .iter()
                .all(|(p, img)| other.images.get(p).is_some_and(|o| mode.images_ok(img, o)))
    }

    /// Images cover the universe and are pairwise disjoint.
    pub fn is_deterministic(&self) -> bool {
        let mut seen = ElementSet::new();
        for img in self.images.values() {
            if !seen.is_disjoint(img) {
                return false;
            }
            seen = seen.union(img);
        }
        seen == self.universe.full()
    }

    /// A copy with element position `idx` dropped from the universe and all images.
    pub(crate) fn without_element(&self, universe: &Universe, idx: usize) -> Self {
        Self {
            universe: universe.clone(),
            images: self
                .images
                .iter()
                .map(|(p, img)| (p.clone(), img.delete_position(idx)))
                .collect(),
        }
    }

    pub(crate) fn without_param(&self, p: &str) -> Self {
        let mut images = self.images.clone();
        images.remove(p);
        Self {
            universe: self.universe.clone(),
            images,
        }
    }

    pub(crate) fn with_image(&self, p: &str, img: ElementSet) -> Self {
        let mut images = self.images.clone();
        images.insert(p.to_string(), img);
        Self {
            universe: self.universe.clone(),
            images,
        }
    }

    /// Same structure with parameter labels renamed through `map`; labels
    /// missing from `map` are kept.
    pub fn relabeled(&self, map: &BTreeMap<String, String>) -> Self {
        Self {
            universe: self.universe.clone(),
            images: self
                .images
                .iter()
                .map(|(p, img)| (map.get(p).cloned().unwrap_or_else(|| p.clone()), img.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x5() -> Universe {
        Universe::numbered("x", 5).unwrap()
    }

    fn triple() -> (TypeOneSoftSet, TypeOneSoftSet, TypeOneSoftSet) {
        let u = x5();
        let f = TypeOneSoftSet::new(&u, [("α1", vec!["x1", "x2"])]).unwrap();
        let g = TypeOneSoftSet::new(&u, [("α2", vec!["x2", "x3"]), ("α3", vec!["x1", "x4"])]).unwrap();
        let h = TypeOneSoftSet::new(
            &u,
            [
                ("α1", vec!["x3", "x4", "x5"]),
                ("α2", vec!["x2", "x3"]),
                ("α3", vec!["x1", "x3", "x4"]),
            ],
        )
        .unwrap();
        (f, g, h)
    }

    fn raw(universe: &[&str], params: &[&str], images: &[(&str, &[&str])]) -> RawSoftSet {
        RawSoftSet {
            universe: universe.iter().map(|s| s.to_string()).collect(),
            params: params.iter().map(|s| s.to_string()).collect(),
            images: images
                .iter()
                .map(|(p, items)| (p.to_string(), items.iter().map(|s| s.to_string()).collect()))
                .collect(),
        }
    }

    #[test]
    fn validation_accepts_and_rejects() {
        let xs = ["x1", "x2", "x3", "x4", "x5"];
        let ok = validate_t1ss(&raw(&xs, &["α1"], &[("α1", &["x2", "x1"])])).unwrap();
        assert_eq!(ok.image_labels("α1").unwrap(), vec!["x1", "x2"]);

        assert_eq!(
            validate_t1ss(&raw(&xs, &["α1"], &[("α1", &["x9"])])),
            Err(Error::ImageOutsideUniverse {
                param: "α1".into(),
                element: "x9".into()
            })
        );
        assert_eq!(
            validate_t1ss(&raw(&xs, &["α1", "α2"], &[("α1", &[])])),
            Err(Error::MissingImage { param: "α2".into() })
        );
        assert!(matches!(
            validate_t1ss(&raw(&xs, &["α1", "α1"], &[("α1", &[])])),
            Err(Error::DuplicateLabel { .. })
        ));
        assert_eq!(validate_t1ss(&raw(&[], &[], &[])), Err(Error::EmptyUniverse));
        let empty = validate_t1ss(&raw(&["x1"], &[], &[])).unwrap();
        assert_eq!(empty.param_count(), 0);
    }

    #[test]
    fn intersection_of_example_sets() {
        let (f, g, h) = triple();
        let gh = g.intersection(&h).unwrap();
        assert_eq!(gh.image_labels("α2").unwrap(), vec!["x2", "x3"]);
        assert_eq!(gh.image_labels("α3").unwrap(), vec!["x1", "x4"]);
        assert_eq!(gh.param_count(), 2);
        assert_eq!(f.intersection(&g).unwrap(), TypeOneSoftSet::empty(f.universe()));
        assert_eq!(h.intersection(&h).unwrap(), h);
    }

    #[test]
    fn union_identities() {
        let (f, g, h) = triple();
        assert_eq!(h.union(&h).unwrap(), h);
        assert_eq!(f.union(&TypeOneSoftSet::empty(f.universe())).unwrap(), f);
        assert_eq!(f.union(&g).unwrap(), g.union(&f).unwrap());
    }

    #[test]
    fn containment_modes() {
        let u = Universe::numbered("x", 2).unwrap();
        let f = TypeOneSoftSet::new(&u, [("α1", vec!["x1"])]).unwrap();
        let g = TypeOneSoftSet::new(&u, [("α1", vec!["x1", "x2"]), ("α2", vec![])]).unwrap();
        assert!(f.contains_in(&g, Containment::Subset).unwrap());
        assert!(!f.contains_in(&g, Containment::Equality).unwrap());
        for mode in [Containment::Subset, Containment::Equality] {
            assert!(f.contains_in(&f, mode).unwrap());
            assert!(!g.contains_in(&f, mode).unwrap());
        }
    }

    #[test]
    fn determinism() {
        let u = Universe::numbered("x", 2).unwrap();
        let part = TypeOneSoftSet::new(&u, [("α1", vec!["x1"]), ("α2", vec!["x2"])]).unwrap();
        assert!(part.is_deterministic());
        let partial = TypeOneSoftSet::new(&u, [("α1", vec!["x1"])]).unwrap();
        assert!(!partial.is_deterministic());
        let (_, _, h) = triple();
        assert!(!h.is_deterministic());
    }

    #[test]
    fn universe_mismatch_is_reported() {
        let a = TypeOneSoftSet::empty(&Universe::numbered("x", 1).unwrap());
        let b = TypeOneSoftSet::empty(&Universe::numbered("y", 1).unwrap());
        assert_eq!(a.union(&b), Err(Error::UniverseMismatch));
        assert_eq!(a.contains_in(&b, Containment::Subset), Err(Error::UniverseMismatch));
    }
}
