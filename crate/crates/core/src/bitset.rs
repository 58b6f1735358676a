//! Fixed-width element sets.
//!
//! Every monoid handled by this crate has at most [`MAX_ELEMENTS`] elements,
//! so a subset of its carrier fits in one `u64` with bit `i` standing for
//! element index `i`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

/// Largest carrier size representable by an [`ElemSet`].
pub const MAX_ELEMENTS: usize = 64;

/// A set of element indices drawn from `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_ELEMENTS);
        ElemSet(1u64 << i)
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < MAX_ELEMENTS);
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < MAX_ELEMENTS);
        self.0 &= !(1u64 << i);
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
    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: ElemSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical order: by cardinality, then lexicographically by the sorted
    /// member list.
    pub fn canonical_cmp(self, other: ElemSet) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // The set holding the lowest differing element has the smaller
        // member list at the first position where the lists differ.
        if self.0 & (diff & diff.wrapping_neg()) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = ElemSet::EMPTY;
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of an [`ElemSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
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

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl BitOr for ElemSet {
    type Output = ElemSet;
    #[inline]
    fn bitor(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElemSet {
    type Output = ElemSet;
    #[inline]
    fn bitand(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & rhs.0)
    }
}

impl Sub for ElemSet {
    type Output = ElemSet;
    #[inline]
    fn sub(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & !rhs.0)
    }
}

/// Complement within all 64 positions; mask with [`ElemSet::full`] for a carrier.
impl Not for ElemSet {
    type Output = ElemSet;
    #[inline]
    fn not(self) -> ElemSet {
        ElemSet(!self.0)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_singletons() {
        assert_eq!(ElemSet::full(0), ElemSet::EMPTY);
        assert_eq!(ElemSet::full(3).to_vec(), vec![0, 1, 2]);
        assert_eq!(ElemSet::full(64).len(), 64);
        assert!(ElemSet::singleton(63).contains(63));
        assert!(!ElemSet::singleton(5).contains(64));
    }

    #[test]
    fn canonical_order_examples() {
        let a: ElemSet = [0, 3].into_iter().collect();
        let b: ElemSet = [0, 2, 4].into_iter().collect();
        assert_eq!(a.canonical_cmp(b), Ordering::Less);
        let c: ElemSet = [0, 1].into_iter().collect();
        let d: ElemSet = [0, 2].into_iter().collect();
        assert_eq!(c.canonical_cmp(d), Ordering::Less);
        assert_eq!(d.canonical_cmp(c), Ordering::Greater);
        assert_eq!(d.canonical_cmp(d), Ordering::Equal);
    }

    proptest! {
        #[test]
        fn canonical_order_matches_member_lists(a in any::<u64>(), b in any::<u64>()) {
            let (a, b) = (ElemSet::from_bits(a), ElemSet::from_bits(b));
            let expected = (a.len(), a.to_vec()).cmp(&(b.len(), b.to_vec()));
            prop_assert_eq!(a.canonical_cmp(b), expected);
        }

        #[test]
        fn iteration_round_trips(bits in any::<u64>()) {
            let set = ElemSet::from_bits(bits);
            let back: ElemSet = set.iter().collect();
            prop_assert_eq!(back, set);
            prop_assert_eq!(set.iter().len(), set.len());
        }
    }
}
