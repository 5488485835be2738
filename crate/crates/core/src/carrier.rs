//! Set algebra over a finite carrier `{0, .., n-1}`.
//!
//! Subsets are single-word bitmasks ([`PointSet`]); collections of subsets are
//! kept canonical (sorted by bitmask, no duplicates) in a [`Family`], so two
//! families are equal exactly when their member sequences are equal.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::{Error, Result};

/// Largest supported carrier.
pub const MAX_CARRIER: usize = 24;

pub(crate) fn check_carrier(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CarrierTooLarge { n, cap })
    } else {
        Ok(())
    }
}

#[inline]
pub(crate) fn full_bits(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        u32::MAX >> (32 - n)
    }
}

/// A subset of the carrier `{0, .., n-1}`; bit `i` is set iff point `i` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    bits: u32,
    n: u8,
}

impl PointSet {
    /// Builds a set from raw bits without checking them against `n`.
    #[inline]
    pub(crate) fn raw(n: usize, bits: u32) -> Self {
        debug_assert!(n <= MAX_CARRIER && bits & !full_bits(n) == 0);
        PointSet { bits, n: n as u8 }
    }

    pub fn empty(n: usize) -> Self {
        Self::raw(n, 0)
    }

    pub fn full(n: usize) -> Self {
        Self::raw(n, full_bits(n))
    }

    pub fn from_bits(n: usize, bits: u32) -> Result<Self> {
        check_carrier(n, MAX_CARRIER)?;
        if bits & !full_bits(n) != 0 {
            return Err(Error::OutOfCarrier { bits, n });
        }
        Ok(Self::raw(n, bits))
    }

    pub fn singleton(n: usize, p: usize) -> Result<Self> {
        check_carrier(n, MAX_CARRIER)?;
        if p >= n {
            return Err(Error::PointOutOfRange { point: p, n });
        }
        Ok(Self::raw(n, 1 << p))
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(n: usize, points: I) -> Result<Self> {
        check_carrier(n, MAX_CARRIER)?;
        let mut bits = 0u32;
        for p in points {
            if p >= n {
                return Err(Error::PointOutOfRange { point: p, n });
            }
            bits |= 1 << p;
        }
        Ok(Self::raw(n, bits))
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Size of the carrier this set lives in.
    #[inline]
    pub fn n(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == full_bits(self.n())
    }

    #[inline]
    pub fn contains(self, p: usize) -> bool {
        p < 32 && self.bits & (1 << p) != 0
    }

    #[inline]
    pub fn union(self, other: PointSet) -> PointSet {
        debug_assert_eq!(self.n, other.n);
        PointSet { bits: self.bits | other.bits, n: self.n }
    }

    #[inline]
    pub fn intersection(self, other: PointSet) -> PointSet {
        debug_assert_eq!(self.n, other.n);
        PointSet { bits: self.bits & other.bits, n: self.n }
    }

    #[inline]
    pub fn difference(self, other: PointSet) -> PointSet {
        debug_assert_eq!(self.n, other.n);
        PointSet { bits: self.bits & !other.bits, n: self.n }
    }

    /// `X \ self`.
    #[inline]
    pub fn complement(self) -> PointSet {
        PointSet { bits: !self.bits & full_bits(self.n()), n: self.n }
    }

    #[inline]
    pub fn is_subset(self, other: PointSet) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_superset(self, other: PointSet) -> bool {
        other.is_subset(self)
    }

    #[inline]
    pub fn meets(self, other: PointSet) -> bool {
        self.bits & other.bits != 0
    }

    #[inline]
    pub fn with(self, p: usize) -> PointSet {
        debug_assert!(p < self.n());
        PointSet { bits: self.bits | (1 << p), n: self.n }
    }

    #[inline]
    pub fn without(self, p: usize) -> PointSet {
        PointSet { bits: self.bits & !(1u32.checked_shl(p as u32).unwrap_or(0)), n: self.n }
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn points(self) -> Points {
        Points { bits: self.bits }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.points().collect()
    }

    /// Re-indexes `self ∩ within` onto the carrier `{0, .., |within|-1}`, keeping
    /// the ascending order of the points of `within`.
    pub fn compress(self, within: PointSet) -> PointSet {
        let mut out = 0u32;
        for (i, p) in within.points().enumerate() {
            if self.contains(p) {
                out |= 1 << i;
            }
        }
        PointSet::raw(within.len(), out)
    }

    /// Inverse of [`compress`](Self::compress): maps a set over `|within|` points
    /// back into the carrier of `within`.
    pub fn expand(self, within: PointSet) -> PointSet {
        debug_assert_eq!(self.n(), within.len());
        let mut out = 0u32;
        for (i, p) in within.points().enumerate() {
            if self.contains(i) {
                out |= 1 << p;
            }
        }
        PointSet::raw(within.n(), out)
    }

    /// All subsets of `self`, ascending by bitmask.
    pub fn subsets(self) -> SubsetsOf {
        SubsetsOf { mask: self.bits, next: Some(0), n: self.n }
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.bits, self.n).cmp(&(other.bits, other.n))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        self.union(rhs)
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        self.intersection(rhs)
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        self.difference(rhs)
    }
}

/// Members of a [`PointSet`] in ascending order.
#[derive(Clone)]
pub struct Points {
    bits: u32,
}

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let p = self.bits.trailing_zeros();
        self.bits &= self.bits - 1;
        Some(p as usize)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.bits.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Points {}

/// Subsets of a fixed mask, ascending (carry-rippler enumeration).
#[derive(Clone)]
pub struct SubsetsOf {
    mask: u32,
    next: Option<u32>,
    n: u8,
}

impl Iterator for SubsetsOf {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let cur = self.next?;
        self.next = if cur == self.mask { None } else { Some(cur.wrapping_sub(self.mask) & self.mask) };
        Some(PointSet { bits: cur, n: self.n })
    }
}

/// All `2^n` subsets of `{0, .., n-1}`, ascending by bitmask.
pub fn subsets_iter(n: usize) -> Result<SubsetsOf> {
    check_carrier(n, MAX_CARRIER)?;
    Ok(PointSet::full(n).subsets())
}

/// A canonical collection of subsets of one carrier: strictly increasing by bitmask.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    n: u8,
    members: Vec<PointSet>,
}

impl Family {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_CARRIER);
        Family { n: n as u8, members: Vec::new() }
    }

    pub fn new<I: IntoIterator<Item = PointSet>>(n: usize, members: I) -> Result<Self> {
        check_carrier(n, MAX_CARRIER)?;
        let mut v = Vec::new();
        for m in members {
            if m.n() != n {
                return Err(Error::CarrierMismatch { left: n, right: m.n() });
            }
            v.push(m);
        }
        Ok(Self::from_unsorted(n, v))
    }

    pub fn from_bits<I: IntoIterator<Item = u32>>(n: usize, members: I) -> Result<Self> {
        check_carrier(n, MAX_CARRIER)?;
        let mut v = Vec::new();
        for bits in members {
            v.push(PointSet::from_bits(n, bits)?);
        }
        Ok(Self::from_unsorted(n, v))
    }

    /// Builds a family from point lists, e.g. `&[&[], &[1], &[0, 1]]`.
    pub fn from_lists<L: AsRef<[usize]>>(n: usize, lists: &[L]) -> Result<Self> {
        let sets = lists
            .iter()
            .map(|l| PointSet::from_points(n, l.as_ref().iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Family::new(n, sets)
    }

    pub(crate) fn from_unsorted(n: usize, mut members: Vec<PointSet>) -> Self {
        members.sort_unstable();
        members.dedup();
        Family { n: n as u8, members }
    }

    /// `members` must already be strictly increasing.
    pub(crate) fn from_sorted(n: usize, members: Vec<PointSet>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Family { n: n as u8, members }
    }

    pub(crate) fn from_sorted_bits(n: usize, bits: &[u32]) -> Self {
        Self::from_sorted(n, bits.iter().map(|&b| PointSet::raw(n, b)).collect())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, PointSet>> {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: PointSet) -> bool {
        self.members.binary_search(&set).is_ok()
    }

    pub fn contains_bits(&self, bits: u32) -> bool {
        self.members.binary_search_by(|m| m.bits().cmp(&bits)).is_ok()
    }

    /// Every member of `self` is a member of `other`.
    pub fn is_subfamily(&self, other: &Family) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn union(&self) -> PointSet {
        family_union(self)
    }

    pub fn intersection(&self) -> Result<PointSet> {
        family_intersection(self)
    }

    /// Members satisfying `keep`, still canonical.
    pub fn filter<F: FnMut(PointSet) -> bool>(&self, mut keep: F) -> Family {
        Family::from_sorted(self.n(), self.iter().filter(|&m| keep(m)).collect())
    }

    /// Members as point lists, in canonical order.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.iter().map(PointSet::to_vec).collect()
    }

    pub fn with(&self, set: PointSet) -> Family {
        let mut v = self.members.clone();
        v.push(set);
        Family::from_unsorted(self.n(), v)
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = PointSet;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, PointSet>>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

/// Union of every member; the empty family yields `∅`.
pub fn family_union(fam: &Family) -> PointSet {
    let bits = fam.members.iter().fold(0, |acc, m| acc | m.bits());
    PointSet::raw(fam.n(), bits)
}

/// Intersection of every member. Undefined (an error) for the empty family.
pub fn family_intersection(fam: &Family) -> Result<PointSet> {
    let mut it = fam.members.iter();
    let first = it.next().ok_or(Error::EmptyFamilyIntersection)?;
    Ok(it.fold(*first, |acc, &m| acc & m))
}

/// Pairwise-disjoint, covering family of nonempty blocks, ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    n: u8,
    blocks: Vec<PointSet>,
}

impl Partition {
    pub fn new<I: IntoIterator<Item = PointSet>>(n: usize, blocks: I) -> Result<Self> {
        check_carrier(n, MAX_CARRIER)?;
        let mut seen = 0u32;
        let mut v: Vec<PointSet> = Vec::new();
        for b in blocks {
            if b.n() != n {
                return Err(Error::CarrierMismatch { left: n, right: b.n() });
            }
            if b.is_empty() {
                return Err(Error::NotAPartition("empty block".into()));
            }
            if b.bits() & seen != 0 {
                return Err(Error::NotAPartition(format!("block {b} overlaps an earlier block")));
            }
            seen |= b.bits();
            v.push(b);
        }
        if seen != full_bits(n) {
            let missing = PointSet::raw(n, full_bits(n) & !seen);
            return Err(Error::NotAPartition(format!("points {missing} are not covered")));
        }
        v.sort_by_key(|b| b.first());
        Ok(Partition { n: n as u8, blocks: v })
    }

    pub fn from_lists<L: AsRef<[usize]>>(n: usize, lists: &[L]) -> Result<Self> {
        let sets = lists
            .iter()
            .map(|l| PointSet::from_points(n, l.as_ref().iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(n, sets)
    }

    /// Partition by block label: points with equal labels share a block.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        check_carrier(n, MAX_CARRIER)?;
        let mut by_label: std::collections::BTreeMap<usize, u32> = Default::default();
        for (p, &l) in labels.iter().enumerate() {
            *by_label.entry(l).or_default() |= 1 << p;
        }
        Partition::new(n, by_label.into_values().map(|b| PointSet::raw(n, b)))
    }

    pub fn singletons(n: usize) -> Self {
        Partition { n: n as u8, blocks: (0..n).map(|p| PointSet::raw(n, 1 << p)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block holding `p`.
    pub fn block_of(&self, p: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(p)).expect("partition covers the carrier")
    }

    pub fn as_family(&self) -> Family {
        Family::from_unsorted(self.n(), self.blocks.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_points(n, pts.iter().copied()).unwrap()
    }

    #[test]
    fn union_examples() {
        assert_eq!(family_union(&Family::empty(3)), PointSet::empty(3));
        let f = Family::from_lists(3, &[&[0][..], &[1, 2]]).unwrap();
        assert_eq!(family_union(&f), set(3, &[0, 1, 2]));
        let f = Family::from_lists(3, &[&[0, 1][..], &[1, 2]]).unwrap();
        assert_eq!(family_union(&f), PointSet::from_bits(3, 0b011 | 0b110).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let f = Family::from_lists(3, &[&[0, 1, 2][..]]).unwrap();
        assert_eq!(family_intersection(&f).unwrap(), set(3, &[0, 1, 2]));
        let f = Family::from_lists(3, &[&[0, 1][..], &[1, 2]]).unwrap();
        assert_eq!(family_intersection(&f).unwrap(), PointSet::from_bits(3, 0b011 & 0b110).unwrap());
        assert_eq!(family_intersection(&Family::empty(3)), Err(Error::EmptyFamilyIntersection));
    }

    #[test]
    fn subsets_small_carriers() {
        let all: Vec<_> = subsets_iter(0).unwrap().collect();
        assert_eq!(all, vec![PointSet::empty(0)]);
        let all: Vec<_> = subsets_iter(1).unwrap().collect();
        assert_eq!(all, vec![PointSet::empty(1), set(1, &[0])]);
        let expected: Vec<_> = (0u32..4).map(|b| PointSet::from_bits(2, b).unwrap()).collect();
        assert_eq!(subsets_iter(2).unwrap().collect::<Vec<_>>(), expected);
        assert!(matches!(subsets_iter(25), Err(Error::CarrierTooLarge { .. })));
    }

    #[test]
    fn subsets_count_and_distinct() {
        for n in 0..=10 {
            let v: Vec<_> = subsets_iter(n).unwrap().map(PointSet::bits).collect();
            assert_eq!(v.len(), 1 << n);
            assert!(v.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn complement_is_involution() {
        for n in 0..=8 {
            for a in subsets_iter(n).unwrap() {
                assert_eq!(a.complement().complement(), a);
            }
        }
    }

    #[test]
    fn families_are_canonical() {
        let f = Family::from_bits(3, [3, 1, 3, 0]).unwrap();
        assert_eq!(f.members().iter().map(|m| m.bits()).collect::<Vec<_>>(), vec![0, 1, 3]);
        assert!(Family::from_bits(2, [4]).is_err());
    }

    #[test]
    fn compress_expand() {
        let y = set(5, &[1, 3, 4]);
        let a = set(5, &[0, 3, 4]);
        let c = a.compress(y);
        assert_eq!(c, set(3, &[1, 2]));
        assert_eq!(c.expand(y), a & y);
    }

    #[test]
    fn partitions() {
        let p = Partition::from_lists(3, &[&[2][..], &[0, 1]]).unwrap();
        assert_eq!(p.blocks(), &[set(3, &[0, 1]), set(3, &[2])]);
        assert_eq!(p.block_of(2), 1);
        assert!(Partition::from_lists(3, &[&[0][..], &[0, 1], &[2]]).is_err());
        assert!(Partition::from_lists(3, &[&[0][..], &[2]]).is_err());
        assert!(Partition::from_lists(3, &[&[][..], &[0, 1, 2]]).is_err());
        assert_eq!(Partition::from_labels(&[7, 3, 7]).unwrap().blocks(), &[set(3, &[0, 2]), set(3, &[1])]);
        assert_eq!(Partition::from_labels(&[]).unwrap().len(), 0);
    }

    proptest! {
        #[test]
        fn union_and_intersection_bound_members(n in 1usize..=8, raw in proptest::collection::vec(any::<u32>(), 0..6)) {
            let fam = Family::from_bits(n, raw.iter().map(|b| b & full_bits(n))).unwrap();
            let u = family_union(&fam);
            for m in fam.iter() {
                prop_assert!(m.is_subset(u));
                if let Ok(i) = family_intersection(&fam) {
                    prop_assert!(i.is_subset(m));
                }
            }
            prop_assert_eq!(fam.is_empty(), family_intersection(&fam).is_err());
        }

        #[test]
        fn compress_roundtrip(n in 1usize..=12, y in any::<u32>(), a in any::<u32>()) {
            let y = PointSet::from_bits(n, y & full_bits(n)).unwrap();
            let a = PointSet::from_bits(n, a & full_bits(n)).unwrap();
            prop_assert_eq!(a.compress(y).expand(y), a & y);
        }
    }
}
