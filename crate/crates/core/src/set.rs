//! Ground sets and subsets of them, stored as bit patterns.
//!
//! Elements are 0-based internally (`0..n`) and printed 1-based, so the
//! element with index `0` is shown as `1`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set supported by the dense storage.
pub const MAX_ELEMENTS: usize = 16;

/// A subset of a ground set of at most [`MAX_ELEMENTS`] elements.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn singleton(e: usize) -> Self {
        ElementSet(1 << e)
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            ElementSet(u32::MAX)
        } else {
            ElementSet((1u32 << n) - 1)
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(ElementSet::EMPTY, |s, e| s.with(e))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    #[inline]
    pub const fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1 << e)
    }

    #[inline]
    pub const fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << e))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement relative to `{0, .., n-1}`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        ElementSet(!self.0 & ElementSet::full(n).0)
    }

    pub fn min(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (!self.is_empty()).then(|| 31 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Relabels `self` (a subset of `mask`) onto `0..|mask|`, keeping element
    /// order. Elements outside `mask` are dropped.
    pub fn compress(self, mask: ElementSet) -> ElementSet {
        let mut out = 0u32;
        for (pos, e) in mask.iter().enumerate() {
            if self.contains(e) {
                out |= 1 << pos;
            }
        }
        ElementSet(out)
    }

    /// Inverse of [`compress`](Self::compress): places bit `p` of `self` on the
    /// `p`-th element of `mask`.
    pub fn expand(self, mask: ElementSet) -> ElementSet {
        let mut out = 0u32;
        for (pos, e) in mask.iter().enumerate() {
            if self.contains(pos) {
                out |= 1 << e;
            }
        }
        ElementSet(out)
    }

    /// Shifts every element up by `offset`.
    pub const fn shift(self, offset: usize) -> ElementSet {
        ElementSet(self.0 << offset)
    }

    /// All subsets of `self`, in increasing bit-pattern order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints `{1,3}`; the empty set prints as `{}`.
impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e + 1)?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_elements(iter)
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Iterator over the elements of an [`ElementSet`] in increasing order.
#[derive(Clone)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Iterator over all subsets of a mask.
#[derive(Clone)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(ElementSet(cur))
    }
}

/// The ground set `[n] = {1, .., n}`.
///
/// `n = 0` is allowed so that deleting or contracting every element still
/// yields a value; parsers require `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundSet(u8);

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::Capacity {
                what: "ground set",
                n,
                max: MAX_ELEMENTS,
            });
        }
        Ok(GroundSet(n as u8))
    }

    #[inline]
    pub const fn size(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub const fn all(self) -> ElementSet {
        ElementSet::full(self.0 as usize)
    }

    /// Number of subsets, `2^n`.
    #[inline]
    pub const fn subset_count(self) -> usize {
        1 << self.0
    }

    /// All subsets of the ground set, in increasing bit-pattern order.
    pub fn subsets(self) -> impl Iterator<Item = ElementSet> + Clone {
        (0..self.subset_count() as u32).map(ElementSet::from_bits)
    }

    pub fn contains(self, set: ElementSet) -> bool {
        set.is_subset(self.all())
    }

    /// Rejects sets that reach outside `[n]`.
    pub fn check(self, set: ElementSet) -> Result<()> {
        if self.contains(set) {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                set,
                n: self.size(),
            })
        }
    }
}

/// `n choose k` for small arguments.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, t| acc * (n - t) / (t + 1))
}

/// All `k`-element subsets of `set`, in increasing bit-pattern order.
pub fn subsets_of_size(set: ElementSet, k: usize) -> impl Iterator<Item = ElementSet> {
    set.subsets().filter(move |s| s.len() == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compress_expand_roundtrip() {
        let mask = ElementSet::from_elements([0, 2, 3, 6]);
        let s = ElementSet::from_elements([2, 6]);
        let c = s.compress(mask);
        assert_eq!(c, ElementSet::from_elements([1, 3]));
        assert_eq!(c.expand(mask), s);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let mask = ElementSet::from_elements([1, 4, 5]);
        let subs: Vec<_> = mask.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(mask)));
        assert_eq!(ElementSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(ElementSet::from_elements([0, 2]).to_string(), "{1,3}");
        assert_eq!(ElementSet::EMPTY.to_string(), "{}");
    }

    #[test]
    fn ground_set_capacity() {
        assert!(GroundSet::new(16).is_ok());
        assert!(matches!(GroundSet::new(17), Err(Error::Capacity { .. })));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }
}
