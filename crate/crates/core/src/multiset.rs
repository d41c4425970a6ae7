//! Finite multisets of integers.
//!
//! Bar lengths and hook lengths repeat, so every collection of lengths in the
//! crate is an [`IntMultiset`]. Values are signed because modified hook
//! lengths can be negative before their absolute value is taken.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntMultiset {
    counts: BTreeMap<i64, usize>,
}

impl IntMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, value: i64) {
        self.insert_n(value, 1);
    }

    pub fn insert_n(&mut self, value: i64, times: usize) {
        if times > 0 {
            *self.counts.entry(value).or_insert(0) += times;
        }
    }

    /// Removes one copy of `value`, returning whether it was present.
    pub fn remove(&mut self, value: i64) -> bool {
        match self.counts.get_mut(&value) {
            Some(c) if *c > 1 => {
                *c -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(&value);
                true
            }
            None => false,
        }
    }

    pub fn count(&self, value: i64) -> usize {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    pub fn contains(&self, value: i64) -> bool {
        self.counts.contains_key(&value)
    }

    /// Total number of elements, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Number of distinct values.
    pub fn distinct_len(&self) -> usize {
        self.counts.len()
    }

    /// True when every value occurs exactly once.
    pub fn is_set(&self) -> bool {
        self.counts.values().all(|&c| c == 1)
    }

    /// Multiplicity-additive union.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&v, &c) in &other.counts {
            out.insert_n(v, c);
        }
        out
    }

    /// Multiplicity-wise difference with a floor at zero.
    pub fn difference(&self, other: &Self) -> Self {
        let counts = self
            .counts
            .iter()
            .filter_map(|(&v, &c)| {
                let left = c.saturating_sub(other.count(v));
                (left > 0).then_some((v, left))
            })
            .collect();
        Self { counts }
    }

    /// Difference that fails unless `other` is a sub-multiset of `self`.
    pub fn checked_difference(&self, other: &Self) -> Result<Self> {
        for (&v, &c) in &other.counts {
            if self.count(v) < c {
                return Err(Error::MissingElement(v));
            }
        }
        Ok(self.difference(other))
    }

    /// Multiplicity-wise minimum.
    pub fn intersection(&self, other: &Self) -> Self {
        let counts = self
            .counts
            .iter()
            .filter_map(|(&v, &c)| {
                let k = c.min(other.count(v));
                (k > 0).then_some((v, k))
            })
            .collect();
        Self { counts }
    }

    /// Symmetric difference: each value kept `|a - b|` times, so that
    /// `A ∪ B = (A ∘ B) ∪ 2(A ∩ B)`. On sets this is the usual one.
    pub fn symmetric_difference(&self, other: &Self) -> Self {
        let both = self.intersection(other);
        self.difference(&both).union(&other.difference(&both))
    }

    /// `{2a | a ∈ A}` with multiplicities preserved.
    pub fn doubled(&self) -> Self {
        let counts = self.counts.iter().map(|(&v, &c)| (2 * v, c)).collect();
        Self { counts }
    }

    /// Absolute values of all elements.
    pub fn abs(&self) -> Self {
        self.iter().map(i64::abs).collect()
    }

    pub fn is_submultiset_of(&self, other: &Self) -> bool {
        self.counts.iter().all(|(&v, &c)| other.count(v) >= c)
    }

    /// Keeps only the elements satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(i64) -> bool) -> Self {
        let counts = self
            .counts
            .iter()
            .filter(|(&v, _)| keep(v))
            .map(|(&v, &c)| (v, c))
            .collect();
        Self { counts }
    }

    /// Elements in ascending order, repeats explicit.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + '_ {
        self.counts
            .iter()
            .flat_map(|(&v, &c)| std::iter::repeat_n(v, c))
    }

    /// Elements in descending order, repeats explicit.
    pub fn to_descending_vec(&self) -> Vec<i64> {
        self.iter().rev().collect()
    }

    /// `(value, multiplicity)` pairs in ascending order of value.
    pub fn counts(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }
}

impl FromIterator<i64> for IntMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut out = Self::new();
        for v in iter {
            out.insert(v);
        }
        out
    }
}

impl Extend<i64> for IntMultiset {
    fn extend<I: IntoIterator<Item = i64>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl fmt::Display for IntMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IntMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as an array sorted in descending order with repeats explicit.
impl Serialize for IntMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().rev())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ms(v: &[i64]) -> IntMultiset {
        v.iter().copied().collect()
    }

    #[test]
    fn basic_operations() {
        let a = ms(&[1, 1, 2, 3]);
        let b = ms(&[1, 3, 3, 4]);
        assert_eq!(a.union(&b), ms(&[1, 1, 1, 2, 3, 3, 3, 4]));
        assert_eq!(a.difference(&b), ms(&[1, 2]));
        assert_eq!(a.intersection(&b), ms(&[1, 3]));
        assert_eq!(a.symmetric_difference(&b), ms(&[1, 2, 3, 4]));
        assert_eq!(ms(&[7, 4, 1]).symmetric_difference(&ms(&[13, 10, 7, 1])), ms(&[13, 10, 4]));
        assert_eq!(a.doubled(), ms(&[2, 2, 4, 6]));
        assert_eq!(a.len(), 4);
        assert_eq!(a.distinct_len(), 3);
        assert!(!a.is_set());
    }

    #[test]
    fn checked_difference_rejects_missing() {
        let a = ms(&[1, 2]);
        assert_eq!(a.checked_difference(&ms(&[2, 2])), Err(Error::MissingElement(2)));
        assert_eq!(a.checked_difference(&ms(&[2])).unwrap(), ms(&[1]));
    }

    #[test]
    fn display_is_descending() {
        assert_eq!(ms(&[3, 1, 12, 3]).to_string(), "{12,3,3,1}");
        assert_eq!(IntMultiset::new().to_string(), "{}");
    }

    #[test]
    fn abs_and_remove() {
        let mut a = ms(&[-1, 1, -7]);
        assert_eq!(a.abs(), ms(&[1, 1, 7]));
        assert!(a.remove(1));
        assert!(!a.remove(1));
        assert_eq!(a, ms(&[-1, -7]));
    }

    fn arb_multiset() -> impl Strategy<Value = IntMultiset> {
        proptest::collection::vec(-6i64..12, 0..20).prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #[test]
        fn union_then_difference_restores(a in arb_multiset(), b in arb_multiset()) {
            prop_assert_eq!(a.union(&b).difference(&b), a.clone());
            prop_assert_eq!(a.union(&b).checked_difference(&b).unwrap(), a);
        }

        #[test]
        fn symmetric_difference_and_intersection_rebuild_union(a in arb_multiset(), b in arb_multiset()) {
            let sym = a.symmetric_difference(&b);
            let both = a.intersection(&b);
            prop_assert_eq!(sym.union(&both).union(&both), a.union(&b));
            // A is recovered from its part outside B and its part inside B
            prop_assert_eq!(a.difference(&b).union(&both), a);
        }

        #[test]
        fn doubling_preserves_cardinality(a in arb_multiset()) {
            prop_assert_eq!(a.doubled().len(), a.len());
            prop_assert_eq!(a.doubled().distinct_len(), a.distinct_len());
        }

        #[test]
        fn intersection_is_submultiset(a in arb_multiset(), b in arb_multiset()) {
            let both = a.intersection(&b);
            prop_assert!(both.is_submultiset_of(&a));
            prop_assert!(both.is_submultiset_of(&b));
        }
    }
}
