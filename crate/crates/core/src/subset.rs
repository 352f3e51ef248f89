//! Ground sets and bitmask subsets.

use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard ceiling imposed by the bitmask width.
pub const MAX_ELEMENTS: usize = 32;

/// A set of element indices `0..n` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_ELEMENTS);
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1u32 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        Subset(it.into_iter().fold(0u32, |m, i| m | (1u32 << i)))
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1u32 << i) != 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | (1u32 << i))
    }

    #[inline]
    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1u32 << i))
    }

    /// Lowest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// All subsets of `self`, in increasing bitmask order (the empty set first).
    pub fn submasks(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut cur: Option<u32> = Some(0);
        std::iter::from_fn(move || {
            let out = cur?;
            cur = if out == full {
                None
            } else {
                Some((out.wrapping_sub(full)) & full)
            };
            Some(Subset(out))
        })
    }

    /// Complement relative to `ground`.
    #[inline]
    pub fn complement_in(self, ground: Subset) -> Subset {
        Subset(ground.0 & !self.0)
    }

    /// Re-index: the members of `self` that lie in `frame`, numbered by their
    /// rank inside `frame` (0 for the lowest member of `frame`, ...).
    pub fn compress(self, frame: Subset) -> Subset {
        let mut out = 0u32;
        for (k, i) in frame.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << k;
            }
        }
        Subset(out)
    }

    /// Inverse of [`Subset::compress`].
    pub fn expand(self, frame: Subset) -> Subset {
        let mut out = 0u32;
        for (k, i) in frame.iter().enumerate() {
            if self.contains(k) {
                out |= 1 << i;
            }
        }
        Subset(out)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct SubsetIter(u32);

impl Iterator for SubsetIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = SubsetIter;
    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitXor for Subset {
    type Output = Subset;
    fn bitxor(self, rhs: Subset) -> Subset {
        Subset(self.0 ^ rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ordered, distinct element labels. Index `i` is the canonical name of the
/// `i`-th label.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(labels: I) -> Result<GroundSet> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::Capacity {
                what: "ground set",
                size: labels.len(),
                limit: MAX_ELEMENTS,
            });
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if let Some(j) = seen.insert(l.as_str(), i) {
                return Err(Error::domain(format!(
                    "duplicate element label {l:?} at positions {j} and {i}"
                )));
            }
        }
        Ok(GroundSet { labels })
    }

    /// Labels `0, 1, .., n-1`.
    pub fn numbered(n: usize) -> GroundSet {
        GroundSet {
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolve labels to a subset; unknown labels are a domain error.
    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for l in labels {
            let l = l.as_ref();
            let i = self
                .index_of(l)
                .ok_or_else(|| Error::domain(format!("element {l:?} is not in the ground set")))?;
            s = s.with(i);
        }
        Ok(s)
    }

    /// Labels of the members of `s`, in index order.
    pub fn names(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// The labels of the members of `frame`, in order.
    pub fn restrict(&self, frame: Subset) -> GroundSet {
        GroundSet {
            labels: frame.iter().map(|i| self.labels[i].clone()).collect(),
        }
    }

    /// Checks that `s` only names elements of this ground set.
    pub fn check(&self, s: Subset) -> Result<()> {
        if s.is_subset_of(self.full()) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "subset {s:?} has elements outside a ground set of size {}",
                self.len()
            )))
        }
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_enumerates_all() {
        let s = Subset::from_indices([1, 3, 4]);
        let v: Vec<_> = s.submasks().collect();
        assert_eq!(v.len(), 8);
        assert_eq!(v[0], Subset::EMPTY);
        assert!(v.iter().all(|x| x.is_subset_of(s)));
    }

    #[test]
    fn compress_expand_roundtrip() {
        let frame = Subset::from_indices([0, 2, 5, 7]);
        let x = Subset::from_indices([2, 7]);
        assert_eq!(x.compress(frame), Subset::from_indices([1, 3]));
        assert_eq!(x.compress(frame).expand(frame), x);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(GroundSet::new(["a", "b", "a"]), Err(Error::Domain(_))));
    }

    #[test]
    fn unknown_label_is_domain_error() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        assert!(matches!(g.subset(&["c"]), Err(Error::Domain(_))));
        assert_eq!(g.subset(&["b"]).unwrap(), Subset::singleton(1));
    }
}
