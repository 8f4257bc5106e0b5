use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, LabelScope, Result};

/// A subset of a universe, stored as a bitset over element positions.
///
/// Trailing zero words are never stored, so equal sets compare equal.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    words: SmallVec<[u64; 2]>,
}

impl ElementSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 2]> = SmallVec::new();
        let mut left = n;
        while left >= 64 {
            words.push(u64::MAX);
            left -= 64;
        }
        if left > 0 {
            words.push((1u64 << left) - 1);
        }
        Self { words }
    }

    /// Builds a set from the low `n` bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = Self::new();
        if mask != 0 {
            s.words.push(mask);
        }
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, idx: usize) {
        let (w, b) = (idx / 64, idx % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, idx: usize) {
        let (w, b) = (idx / 64, idx % 64);
        if w < self.words.len() {
            self.words[w] &= !(1 << b);
            self.trim();
        }
    }

    pub fn contains(&self, idx: usize) -> bool {
        let (w, b) = (idx / 64, idx % 64);
        self.words.get(w).is_some_and(|word| word & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(short.words.iter()) {
            *w |= o;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = Self {
            words: self.words.iter().zip(other.words.iter()).map(|(a, b)| a & b).collect(),
        };
        s.trim();
        s
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn union_len(&self, other: &Self) -> usize {
        self.len() + other.len() - self.intersection_len(other)
    }

    /// Size of the symmetric difference.
    pub fn symmetric_difference_len(&self, other: &Self) -> usize {
        self.len() + other.len() - 2 * self.intersection_len(other)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len() && self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection_len(other) == 0
    }

    /// Ascending element positions.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Removes position `idx` and shifts every higher position down by one.
    pub fn delete_position(&self, idx: usize) -> Self {
        let mut out = Self::new();
        for i in self.iter() {
            match i.cmp(&idx) {
                std::cmp::Ordering::Less => out.insert(i),
                std::cmp::Ordering::Greater => out.insert(i - 1),
                std::cmp::Ordering::Equal => {}
            }
        }
        out
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// The ground set shared by every soft set built over it.
///
/// Labels are kept sorted so that positions, equality and serialization are
/// canonical. Clones share storage.
#[derive(Clone)]
pub struct Universe {
    labels: Arc<[String]>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if labels.iter().any(String::is_empty) {
            return Err(Error::EmptyLabel {
                scope: LabelScope::Element,
            });
        }
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel {
                scope: LabelScope::Element,
                label: w[0].clone(),
            });
        }
        Ok(Self { labels: labels.into() })
    }

    /// The universe `{x1, ..., xn}`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|probe| probe.as_str().cmp(label)).ok()
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.labels[idx]
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// Resolves labels to a subset, or returns the first unknown label.
    pub fn subset<'a, I>(&self, items: I) -> std::result::Result<ElementSet, &'a str>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut set = ElementSet::new();
        for item in items {
            set.insert(self.index_of(item).ok_or(item)?);
        }
        Ok(set)
    }

    pub fn labels_of<'s>(&'s self, set: &'s ElementSet) -> impl Iterator<Item = &'s str> + 's {
        set.iter().map(move |i| self.label(i))
    }

    /// The universe with position `idx` removed, or `None` if it would become empty.
    pub fn without(&self, idx: usize) -> Option<Self> {
        if self.len() <= 1 {
            return None;
        }
        let labels: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, l)| l.clone())
            .collect();
        Some(Self { labels: labels.into() })
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels.iter()).finish()
    }
}
